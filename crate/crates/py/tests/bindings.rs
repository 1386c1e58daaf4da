use pyo3::prelude::*;
use pyo3::types::PyDict;
use pyo3::wrap_pymodule;

fn run(code: &str) {
    Python::attach(|py| {
        let locals = PyDict::new(py);
        locals.set_item("cr", wrap_pymodule!(cellres_py::cellres_py)(py)).unwrap();
        let code = std::ffi::CString::new(code).unwrap();
        py.run(&code, None, Some(&locals)).unwrap();
    });
}

#[test]
fn resolve_and_betti_agree() {
    run(r#"
i = cr.Ideal("x, y")
r = cr.resolve(i, 2)
assert r.ranks == [2, 1]
assert r.betti() == cr.betti_oracle(i, 2) == [(0, [0, 1], 1), (0, [1, 0], 1), (1, [1, 1], 1)]
"#);
}

#[test]
fn parse_errors_raise() {
    run(r#"
try:
    cr.Ideal("x**y")
    raise SystemExit("no error")
except cr.CellresError as e:
    assert "byte 2" in str(e)
"#);
}

#[test]
fn pipeline_certificate_round_trip() {
    run(r#"
import json
i = cr.Ideal("x, y, z")
cw = cr.CWComplex.simplex(2, i.generators)
cert = json.loads(cr.run_pipeline(i, cw, 2))
assert cert["success"]
assert cr.CWComplex.from_json(json.dumps(cert["y"])) == cw
"#);
}

#[test]
fn lift_has_determinant_one() {
    run(r#"
t = cr.lift_sl([[0, 1], [4, 0]], 5)
assert t[0][0] * t[1][1] - t[0][1] * t[1][0] == 1
assert [[v % 5 for v in r] for r in t] == [[0, 1], [4, 0]]
"#);
}
