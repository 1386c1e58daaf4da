use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use serde::Serialize;

use cellres::corpus::run_corpus;
use cellres::cwposet::{
    check_supports_cw, face_poset as build_face_poset, find_minimal_support_basis, homogenize, validate_cw,
    CWChainData, CwError, SupportFailure,
};
use cellres::pipeline::{minimal_resolution, run_pipeline, AbortKind};

use crate::io::{read, read_basis_input, read_cw, read_ideal, to_json, BasisInput};
use crate::{Format, RunConfig};

/// What a subcommand prints, writes and returns.
#[derive(Debug, Default)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
    pub file: Option<(PathBuf, String)>,
}

impl Outcome {
    pub fn error(code: u8, message: impl Into<String>) -> Self {
        Outcome { code, stderr: format!("error: {}\n", message.into()), ..Default::default() }
    }

    /// Sends `body` to `--out` when given, otherwise to stdout.
    fn emit(cfg: &RunConfig, code: u8, body: String) -> Self {
        match &cfg.out {
            Some(path) => Outcome { code, file: Some((path.clone(), body)), ..Default::default() },
            None => Outcome { code, stdout: body, ..Default::default() },
        }
    }

    pub fn finish(self) -> ExitCode {
        let mut code = self.code;
        if let Some((path, body)) = &self.file {
            if let Err(e) = fs::write(path, body) {
                eprintln!("error: {}: {e}", path.display());
                code = 3;
            }
        }
        print!("{}", self.stdout);
        eprint!("{}", self.stderr);
        ExitCode::from(code)
    }
}

pub fn exit_code(kind: AbortKind) -> u8 {
    match kind {
        AbortKind::InvalidInput => 2,
        AbortKind::NotSl | AbortKind::Internal => 3,
        AbortKind::NotSupported => 4,
        AbortKind::NotRegular => 5,
        AbortKind::SearchExhausted => 6,
        AbortKind::PosetMismatch => 7,
    }
}

fn render<T: Serialize>(cfg: &RunConfig, value: &T, text: impl FnOnce() -> String) -> String {
    match cfg.format {
        Format::Json => to_json(value),
        Format::Text => text(),
    }
}

fn require_valid(data: &CWChainData, path: &Path) -> Result<(), Outcome> {
    let report = validate_cw(data);
    if report.is_valid() {
        return Ok(());
    }
    Err(Outcome::error(2, format!("{}: invalid CW data\n{}", path.display(), to_json(&report).trim_end())))
}

pub fn resolve(cfg: &RunConfig, ideal_path: &Path) -> Outcome {
    let ideal = match read_ideal(ideal_path, cfg.vars.as_deref()) {
        Ok(i) => i,
        Err(o) => return o,
    };
    let res = match minimal_resolution(&ideal, cfg.p) {
        Ok(r) => r,
        Err(e) => return Outcome::error(3, e.to_string()),
    };
    if !(res.is_complex() && res.is_minimal()) {
        return Outcome::error(3, "minimized Taylor complex failed its own checks");
    }
    let betti = res.betti_table();
    let table = betti.render_text(Some(&ideal));
    match (&cfg.out, cfg.format) {
        (Some(path), _) => Outcome { file: Some((path.clone(), to_json(&res))), stdout: table, ..Default::default() },
        (None, Format::Text) => Outcome { stdout: table, ..Default::default() },
        (None, Format::Json) => {
            #[derive(Serialize)]
            struct Resolved<'a> {
                resolution: &'a cellres::rescomplex::GradedFreeComplex,
                betti: &'a cellres::rescomplex::BettiTable,
            }
            Outcome { stdout: to_json(&Resolved { resolution: &res, betti: &betti }), ..Default::default() }
        }
    }
}

pub fn check_support(cfg: &RunConfig, cw_path: &Path, ideal_path: &Path) -> Outcome {
    let (cw, ideal) = match (read_cw(cw_path), read_ideal(ideal_path, cfg.vars.as_deref())) {
        (Ok(c), Ok(i)) => (c, i),
        (Err(o), _) | (_, Err(o)) => return o,
    };
    if let Err(o) = require_valid(&cw, cw_path) {
        return o;
    }
    let res = match minimal_resolution(&ideal, cfg.p) {
        Ok(r) => r,
        Err(e) => return Outcome::error(3, e.to_string()),
    };
    let report = check_supports_cw(&cw, &res);
    let code = match report.failure {
        None => 0,
        Some(SupportFailure::NotGraded) => 2,
        Some(_) => 4,
    };
    let body = render(cfg, &report, || match (&report.eta, &report.failure) {
        (Some(eta), _) => {
            let mut s = String::from("supported\n");
            for (i, row) in eta.iter().enumerate() {
                for (k, &c) in row.iter().enumerate() {
                    s.push_str(&format!("  {} -> {}\n", res.frame(i)[k].id, cw.cells_in_dim(i)[c].id));
                }
            }
            s
        }
        (None, Some(f)) => format!("not supported: {f:?}\n"),
        (None, None) => "not supported\n".into(),
    });
    Outcome::emit(cfg, code, body)
}

pub fn face_poset(cfg: &RunConfig, cw_path: &Path) -> Outcome {
    let cw = match read_cw(cw_path) {
        Ok(c) => c,
        Err(o) => return o,
    };
    if let Err(o) = require_valid(&cw, cw_path) {
        return o;
    }
    let poset = build_face_poset(&cw, cfg.p);
    let body = render(cfg, &poset, || poset.render_text());
    Outcome::emit(cfg, 0, body)
}

pub fn find_basis(cfg: &RunConfig, input: &Path) -> Outcome {
    let res = match read_basis_input(input) {
        Err(o) => return o,
        Ok(BasisInput::Resolution(r)) => r,
        Ok(BasisInput::Cw(cw)) => {
            if let Err(o) = require_valid(&cw, input) {
                return o;
            }
            let n = cw.cells().iter().flatten().find_map(|c| c.mdeg.as_ref().map(|m| m.len())).unwrap_or(0);
            let vars = cfg.vars.clone().unwrap_or_else(|| (1..=n).map(|k| format!("x{k}")).collect());
            match homogenize(&cw, cfg.p, &vars) {
                Ok(r) => r,
                Err(e) => return Outcome::error(2, format!("{}: {e}", input.display())),
            }
        }
    };
    if res.prime() != cfg.p {
        return Outcome::error(2, format!("resolution is over GF({}), not GF({})", res.prime().get(), cfg.p.get()));
    }
    match find_minimal_support_basis(&res, &cfg.search) {
        Ok(found) => {
            let body = render(cfg, &found, || {
                let mut s = String::new();
                for (i, level) in found.basis.degrees().iter().enumerate() {
                    for e in level {
                        let mdeg = e.mdeg.as_ref().map_or("-".to_string(), ToString::to_string);
                        s.push_str(&format!("[{i}] {} {mdeg} {:?}\n", e.id, e.coords));
                    }
                }
                s
            });
            Outcome::emit(cfg, 0, body)
        }
        Err(e @ CwError::SearchExhausted { .. }) => Outcome::error(6, e.to_string()),
        Err(e) => Outcome::error(3, e.to_string()),
    }
}

pub fn transform(cfg: &RunConfig, cw_path: &Path, ideal_path: &Path) -> Outcome {
    let (cw, ideal) = match (read_cw(cw_path), read_ideal(ideal_path, cfg.vars.as_deref())) {
        (Ok(c), Ok(i)) => (c, i),
        (Err(o), _) | (_, Err(o)) => return o,
    };
    let cert = run_pipeline(&ideal, &cw, cfg.p, &cfg.search);
    let code = cert.abort.as_ref().map_or(0, |a| exit_code(a.kind));
    let body = render(cfg, &cert, || {
        let mut s = String::new();
        for c in &cert.checks {
            s.push_str(&format!("{} {}\n", if c.passed { "ok  " } else { "FAIL" }, c.name));
        }
        match &cert.abort {
            Some(a) => s.push_str(&format!("aborted at {:?}: {:?}: {}\n", a.stage, a.kind, a.message)),
            None => s.push_str("success\n"),
        }
        s
    });
    Outcome::emit(cfg, code, body)
}

pub fn corpus(cfg: &RunConfig, golden: Option<&Path>) -> Outcome {
    let report = run_corpus(&cfg.search);
    let body = render(cfg, &report, || {
        let mut s = String::new();
        for o in &report.ideals {
            let ok = o.oracle_agrees && o.is_complex && o.is_exact && o.is_minimal;
            s.push_str(&format!("{} ideal {} p={} totals={:?}\n", pass(ok), o.name, o.p, o.totals));
        }
        for o in &report.pipeline {
            let got = o.abort.map_or("success".to_string(), |k| format!("{k:?}"));
            s.push_str(&format!("{} pipeline {} p={} {}\n", pass(o.as_expected), o.name, o.p, got));
        }
        s
    });
    let mut code = if report.all_pass() { 0 } else { 3 };
    let mut stderr = String::new();
    if let Some(path) = golden {
        match read(path) {
            Err(o) => return o,
            Ok(expected) if expected != body => {
                code = 1;
                stderr = format!("output differs from {}\n", path.display());
            }
            Ok(_) => {}
        }
    }
    let mut out = Outcome::emit(cfg, code, body);
    out.stderr = stderr;
    out
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}
