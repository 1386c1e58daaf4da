//! Monomials as exponent vectors, monomial ideals and their lcm lattice.
//!
//! Ideals are written as comma-separated products of `var` or `var^exp`
//! factors, with `*` optional and whitespace ignored, e.g. `x*y^2, y z`.
//! A single pair of enclosing parentheses is accepted: `(x, y)`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonoidError {
    #[error("parse error at byte {offset}: expected {expected}")]
    Parse { offset: usize, expected: String },
    #[error("unknown variable `{name}` at byte {offset}")]
    UnknownVariable { name: String, offset: usize },
    #[error("multidegree lengths differ: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("ideal has no generators")]
    EmptyIdeal,
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
}

/// Exponent vector of a monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Multidegree(Vec<u32>);

impl Multidegree {
    pub fn new(exponents: Vec<u32>) -> Self {
        Multidegree(exponents)
    }

    pub fn zero(n: usize) -> Self {
        Multidegree(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// Componentwise `self <= other`, i.e. the monomial divides the other.
    pub fn divides(&self, other: &Multidegree) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn strictly_divides(&self, other: &Multidegree) -> bool {
        self.divides(other) && self != other
    }

    /// Componentwise maximum.
    pub fn lcm(&self, other: &Multidegree) -> Result<Multidegree, MonoidError> {
        if self.0.len() != other.0.len() {
            return Err(MonoidError::DimensionMismatch(self.0.len(), other.0.len()));
        }
        Ok(Multidegree(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect()))
    }

    /// Graded order: total degree first, then lex with larger leading exponents first.
    pub fn cmp_graded(&self, other: &Multidegree) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl From<Vec<u32>> for Multidegree {
    fn from(v: Vec<u32>) -> Self {
        Multidegree(v)
    }
}

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Free function form of [`Multidegree::lcm`].
pub fn lcm(a: &Multidegree, b: &Multidegree) -> Result<Multidegree, MonoidError> {
    a.lcm(b)
}

/// Monomial ideal with a minimal, graded-lex sorted generating set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "IdealWire", into = "IdealWire")]
pub struct MonomialIdeal {
    variables: Vec<String>,
    generators: Vec<Multidegree>,
}

#[derive(Serialize, Deserialize)]
struct IdealWire {
    variables: Vec<String>,
    generators: Vec<Vec<u32>>,
}

impl TryFrom<IdealWire> for MonomialIdeal {
    type Error = MonoidError;

    fn try_from(w: IdealWire) -> Result<Self, Self::Error> {
        MonomialIdeal::new(w.variables, w.generators.into_iter().map(Multidegree).collect())
    }
}

impl From<MonomialIdeal> for IdealWire {
    fn from(i: MonomialIdeal) -> Self {
        IdealWire {
            variables: i.variables,
            generators: i.generators.into_iter().map(|g| g.0).collect(),
        }
    }
}

impl MonomialIdeal {
    /// Normalizes the generators: duplicates merged, non-minimal ones dropped,
    /// the rest sorted by [`Multidegree::cmp_graded`].
    pub fn new(variables: Vec<String>, generators: Vec<Multidegree>) -> Result<Self, MonoidError> {
        let n = variables.len();
        let mut seen = BTreeSet::new();
        for v in &variables {
            if !seen.insert(v) {
                return Err(MonoidError::DuplicateVariable(v.clone()));
            }
        }
        if generators.is_empty() {
            return Err(MonoidError::EmptyIdeal);
        }
        for g in &generators {
            if g.len() != n {
                return Err(MonoidError::DimensionMismatch(g.len(), n));
            }
        }
        let distinct: BTreeSet<Multidegree> = generators.into_iter().collect();
        let mut minimal: Vec<Multidegree> = distinct
            .iter()
            .filter(|g| !distinct.iter().any(|h| h.strictly_divides(g)))
            .cloned()
            .collect();
        minimal.sort_by(Multidegree::cmp_graded);
        Ok(MonomialIdeal { variables, generators: minimal })
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn generators(&self) -> &[Multidegree] {
        &self.generators
    }

    /// Whether `x^alpha` lies in the ideal.
    pub fn contains(&self, alpha: &Multidegree) -> bool {
        self.generators.iter().any(|g| g.divides(alpha))
    }

    pub fn render_monomial(&self, m: &Multidegree) -> String {
        let factors: Vec<String> = self
            .variables
            .iter()
            .zip(m.exponents())
            .filter(|(_, &e)| e > 0)
            .map(|(v, &e)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
            .collect();
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("*")
        }
    }

    pub fn render(&self) -> String {
        self.generators.iter().map(|g| self.render_monomial(g)).collect::<Vec<_>>().join(", ")
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.render())
    }
}

/// Parses an ideal over the given ordered variable list.
pub fn parse_ideal(text: &str, variables: &[String]) -> Result<MonomialIdeal, MonoidError> {
    let terms = Parser::new(text).parse()?;
    let mut gens = Vec::with_capacity(terms.len());
    for term in terms {
        let mut exps = vec![0u32; variables.len()];
        for (name, e, offset) in term {
            let k = variables
                .iter()
                .position(|v| *v == name)
                .ok_or(MonoidError::UnknownVariable { name, offset })?;
            exps[k] += e;
        }
        gens.push(Multidegree(exps));
    }
    MonomialIdeal::new(variables.to_vec(), gens)
}

/// Parses an ideal, taking variables in order of first appearance.
pub fn parse_ideal_infer(text: &str) -> Result<MonomialIdeal, MonoidError> {
    let terms = Parser::new(text).parse()?;
    let mut vars: Vec<String> = Vec::new();
    for (name, _, _) in terms.iter().flatten() {
        if !vars.contains(name) {
            vars.push(name.clone());
        }
    }
    parse_ideal(text, &vars)
}

/// Lcms of all nonempty subsets of generators.
pub fn lcm_lattice(ideal: &MonomialIdeal) -> BTreeSet<Multidegree> {
    lcm_closure(ideal.generators())
}

/// Lcms of all nonempty subsets of the given degrees.
pub fn lcm_closure(degrees: &[Multidegree]) -> BTreeSet<Multidegree> {
    let mut out: BTreeSet<Multidegree> = BTreeSet::new();
    for g in degrees {
        let joined: Vec<Multidegree> =
            out.iter().map(|s| s.lcm(g).expect("equal lengths")).collect();
        out.extend(joined);
        out.insert(g.clone());
    }
    out
}

// (name, exponent, byte offset of the name)
type Factor = (String, u32, usize);

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser { src: text.as_bytes(), pos: 0 }
    }

    fn err<T>(&self, expected: &str) -> Result<T, MonoidError> {
        Err(MonoidError::Parse { offset: self.pos, expected: expected.to_string() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn parse(mut self) -> Result<Vec<Vec<Factor>>, MonoidError> {
        let wrapped = self.peek() == Some(b'(');
        if wrapped {
            self.pos += 1;
        }
        let mut terms = vec![self.term()?];
        while self.peek() == Some(b',') {
            self.pos += 1;
            terms.push(self.term()?);
        }
        if wrapped {
            if self.peek() != Some(b')') {
                return self.err("`,` or `)`");
            }
            self.pos += 1;
        }
        if self.peek().is_some() {
            return self.err(if wrapped { "end of input" } else { "`,`, `*` or end of input" });
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<Vec<Factor>, MonoidError> {
        let mut factors = vec![self.factor()?];
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    factors.push(self.factor()?);
                }
                Some(c) if c.is_ascii_alphabetic() || c == b'_' => factors.push(self.factor()?),
                _ => return Ok(factors),
            }
        }
    }

    fn factor(&mut self) -> Result<Factor, MonoidError> {
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {}
            _ => return self.err("variable name"),
        }
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        let name = String::from_utf8(self.src[start..self.pos].to_vec()).expect("ascii");
        let mut exp = 1u32;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let ds = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if ds == self.pos {
                return self.err("exponent");
            }
            let digits = std::str::from_utf8(&self.src[ds..self.pos]).expect("ascii");
            exp = match digits.parse() {
                Ok(e) => e,
                Err(_) => {
                    self.pos = ds;
                    return self.err("exponent below 2^32");
                }
            };
        }
        Ok((name, exp, start))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn md(v: &[u32]) -> Multidegree {
        Multidegree::new(v.to_vec())
    }

    #[test]
    fn parse_examples() {
        let xyz = vars(&["x", "y", "z"]);
        let i = parse_ideal("x*y, y*z", &xyz).unwrap();
        assert_eq!(i.generators(), &[md(&[1, 1, 0]), md(&[0, 1, 1])]);
        let i = parse_ideal("x^2, x^2", &vars(&["x"])).unwrap();
        assert_eq!(i.generators(), &[md(&[2])]);
        let i = parse_ideal("x*y, x*y*z", &xyz).unwrap();
        assert_eq!(i.generators(), &[md(&[1, 1, 0])]);
        let i = parse_ideal("( x y^2 ,z )", &xyz).unwrap();
        assert_eq!(i.generators(), &[md(&[0, 0, 1]), md(&[1, 2, 0])]);
        let i = parse_ideal("x*x", &xyz).unwrap();
        assert_eq!(i.generators(), &[md(&[2, 0, 0])]);
    }

    #[test]
    fn parse_errors() {
        let xy = vars(&["x", "y"]);
        assert_eq!(
            parse_ideal("x**y", &xy),
            Err(MonoidError::Parse { offset: 2, expected: "variable name".into() })
        );
        assert_eq!(
            parse_ideal("x, w", &xy),
            Err(MonoidError::UnknownVariable { name: "w".into(), offset: 3 })
        );
        assert!(matches!(parse_ideal("x^", &xy), Err(MonoidError::Parse { offset: 2, .. })));
        assert!(matches!(parse_ideal("", &xy), Err(MonoidError::Parse { offset: 0, .. })));
        assert!(matches!(parse_ideal("(x, y", &xy), Err(MonoidError::Parse { .. })));
        assert!(matches!(parse_ideal("x,", &xy), Err(MonoidError::Parse { .. })));
    }

    #[test]
    fn infer_variables_in_order() {
        let i = parse_ideal_infer("b*a, c").unwrap();
        assert_eq!(i.variables(), &vars(&["b", "a", "c"]));
    }

    #[test]
    fn lcm_examples() {
        assert_eq!(lcm(&md(&[1, 0]), &md(&[0, 1])).unwrap(), md(&[1, 1]));
        assert_eq!(lcm(&md(&[2, 3]), &md(&[2, 3])).unwrap(), md(&[2, 3]));
        assert_eq!(lcm(&md(&[1, 1, 0]), &md(&[0, 1, 1])).unwrap(), md(&[1, 1, 1]));
        assert_eq!(lcm(&md(&[1]), &md(&[0, 1])), Err(MonoidError::DimensionMismatch(1, 2)));
    }

    /// Lcms of every nonempty subset, by direct enumeration.
    fn subset_lcms(gens: &[Multidegree]) -> BTreeSet<Multidegree> {
        let mut out = BTreeSet::new();
        for mask in 1u32..(1 << gens.len()) {
            let mut acc: Option<Multidegree> = None;
            for (k, g) in gens.iter().enumerate() {
                if mask & (1 << k) != 0 {
                    acc = Some(match acc {
                        None => g.clone(),
                        Some(a) => a.lcm(g).unwrap(),
                    });
                }
            }
            out.insert(acc.unwrap());
        }
        out
    }

    #[test]
    fn lattice_examples() {
        let xy = parse_ideal("x, y", &vars(&["x", "y"])).unwrap();
        let l: Vec<_> = lcm_lattice(&xy).into_iter().collect();
        assert_eq!(l.len(), 3);
        assert!(l.contains(&md(&[1, 1])));
        let single = parse_ideal("x^2*y", &vars(&["x", "y"])).unwrap();
        assert_eq!(lcm_lattice(&single).into_iter().collect::<Vec<_>>(), vec![md(&[2, 1])]);
        let tri = parse_ideal("x*y, y*z, x*z", &vars(&["x", "y", "z"])).unwrap();
        let expected: BTreeSet<_> =
            [md(&[1, 1, 0]), md(&[0, 1, 1]), md(&[1, 0, 1]), md(&[1, 1, 1])].into();
        assert_eq!(lcm_lattice(&tri), expected);
        assert_eq!(subset_lcms(tri.generators()), expected);
    }

    #[test]
    fn json_shape() {
        let i = parse_ideal("x*y, z", &vars(&["x", "y", "z"])).unwrap();
        let s = serde_json::to_string(&i).unwrap();
        assert_eq!(s, r#"{"variables":["x","y","z"],"generators":[[0,0,1],[1,1,0]]}"#);
        let back: MonomialIdeal = serde_json::from_str(&s).unwrap();
        assert_eq!(back, i);
        let raw = r#"{"variables":["x"],"generators":[[2],[1]]}"#;
        let norm: MonomialIdeal = serde_json::from_str(raw).unwrap();
        assert_eq!(norm.generators(), &[md(&[1])]);
    }

    fn arb_ideal() -> impl Strategy<Value = MonomialIdeal> {
        (1usize..5).prop_flat_map(|n| {
            prop::collection::vec(prop::collection::vec(0u32..4, n), 1..6).prop_map(move |gs| {
                let names: Vec<String> = (0..n).map(|k| format!("x{k}")).collect();
                let gs: Vec<Multidegree> = gs
                    .into_iter()
                    .map(|mut g| {
                        if g.iter().all(|&e| e == 0) {
                            g[0] = 1;
                        }
                        Multidegree::new(g)
                    })
                    .collect();
                MonomialIdeal::new(names, gs).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn lcm_is_a_semilattice(a in prop::collection::vec(0u32..6, 3),
                                b in prop::collection::vec(0u32..6, 3),
                                c in prop::collection::vec(0u32..6, 3)) {
            let (a, b, c) = (md(&a), md(&b), md(&c));
            prop_assert_eq!(a.lcm(&b).unwrap(), b.lcm(&a).unwrap());
            prop_assert_eq!(a.lcm(&a).unwrap(), a.clone());
            prop_assert_eq!(a.lcm(&b).unwrap().lcm(&c).unwrap(), a.lcm(&b.lcm(&c).unwrap()).unwrap());
        }

        #[test]
        fn render_parse_round_trip(i in arb_ideal()) {
            let back = parse_ideal(&i.render(), i.variables()).unwrap();
            prop_assert_eq!(back, i);
        }

        #[test]
        fn lattice_properties(i in arb_ideal()) {
            let l = lcm_lattice(&i);
            let q = i.generators().len();
            prop_assert!(l.len() <= (1usize << q) - 1);
            prop_assert_eq!(&l, &subset_lcms(i.generators()));
            for a in &l {
                prop_assert!(i.generators().iter().any(|g| g.divides(a)));
                for b in &l {
                    prop_assert!(l.contains(&a.lcm(b).unwrap()));
                }
            }
            for g in i.generators() {
                prop_assert!(l.contains(g));
            }
        }
    }
}
