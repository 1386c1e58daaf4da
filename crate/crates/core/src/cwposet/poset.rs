use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::cw::{CWChainData, FpChainComplex};
use super::CwError;
use crate::exactlin::Prime;
use crate::monoid::Multidegree;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PosetElement {
    pub id: String,
    pub rank: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mdeg: Option<Multidegree>,
}

/// Ranked poset given by its cover relations. Covers are pairs of element
/// indices `(lower, upper)` with `rank(upper) = rank(lower) + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PosetWire", into = "PosetWire")]
pub struct LabeledPoset {
    elements: Vec<PosetElement>,
    covers: BTreeSet<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct PosetWire {
    elements: Vec<PosetElement>,
    covers: Vec<(usize, usize)>,
}

impl TryFrom<PosetWire> for LabeledPoset {
    type Error = CwError;

    fn try_from(w: PosetWire) -> Result<Self, Self::Error> {
        LabeledPoset::new(w.elements, w.covers)
    }
}

impl From<LabeledPoset> for PosetWire {
    fn from(p: LabeledPoset) -> Self {
        PosetWire { elements: p.elements, covers: p.covers.into_iter().collect() }
    }
}

impl LabeledPoset {
    pub fn new(
        elements: Vec<PosetElement>,
        covers: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, CwError> {
        let mut set = BTreeSet::new();
        for (a, b) in covers {
            if a >= elements.len() || b >= elements.len() {
                return Err(CwError::Poset(format!("cover ({a},{b}) names a missing element")));
            }
            if elements[b].rank != elements[a].rank + 1 {
                return Err(CwError::Poset(format!("cover ({a},{b}) does not raise rank by one")));
            }
            set.insert((a, b));
        }
        Ok(LabeledPoset { elements, covers: set })
    }

    pub fn elements(&self) -> &[PosetElement] {
        &self.elements
    }

    pub fn covers(&self) -> &BTreeSet<(usize, usize)> {
        &self.covers
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `below[b]` is the set of all `a < b`.
    pub fn strict_down_sets(&self) -> Vec<BTreeSet<usize>> {
        // covers raise rank, so processing by rank visits lower elements first
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&i| self.elements[i].rank);
        let mut below = vec![BTreeSet::new(); self.len()];
        for &b in &order {
            let lower: Vec<usize> = self.covers.iter().filter(|&&(_, u)| u == b).map(|&(l, _)| l).collect();
            let mut acc = BTreeSet::new();
            for l in lower {
                acc.insert(l);
                acc.extend(below[l].iter().copied());
            }
            below[b] = acc;
        }
        below
    }

    pub fn less_than(&self, a: usize, b: usize) -> bool {
        self.strict_down_sets()[b].contains(&a)
    }

    /// True when multidegrees are present and weakly increase along covers.
    pub fn degrees_order_preserving(&self) -> bool {
        self.covers.iter().all(|&(a, b)| match (&self.elements[a].mdeg, &self.elements[b].mdeg) {
            (Some(x), Some(y)) => x.divides(y),
            _ => false,
        })
    }

    /// Covers listed by element ids, for display.
    pub fn cover_ids(&self) -> Vec<(String, String)> {
        self.covers
            .iter()
            .map(|&(a, b)| (self.elements[a].id.clone(), self.elements[b].id.clone()))
            .collect()
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for (i, e) in self.elements.iter().enumerate() {
            let m = e.mdeg.as_ref().map(|m| format!(" {m}")).unwrap_or_default();
            out.push_str(&format!("{i}: {} rank {}{m}\n", e.id, e.rank));
        }
        for (a, b) in self.cover_ids() {
            out.push_str(&format!("{a} < {b}\n"));
        }
        out
    }
}

fn elements_of(complex: &FpChainComplex) -> (Vec<PosetElement>, Vec<usize>) {
    let mut elements = Vec::new();
    let mut offsets = Vec::new();
    for (rank, cells) in complex.cells.iter().enumerate() {
        offsets.push(elements.len());
        elements.extend(cells.iter().map(|c| PosetElement { id: c.id.clone(), rank, mdeg: c.mdeg.clone() }));
    }
    (elements, offsets)
}

/// Poset of the based complex: `a < b` covers exactly when the boundary of
/// `b` has a nonzero coefficient on `a`.
pub fn chain_incidence_poset(complex: &FpChainComplex) -> LabeledPoset {
    let (elements, offsets) = elements_of(complex);
    let mut covers = BTreeSet::new();
    for (k, d) in complex.differentials.iter().enumerate() {
        for (r, c, _) in d.entries() {
            covers.insert((offsets[k] + r, offsets[k + 1] + c));
        }
    }
    LabeledPoset { elements, covers }
}

/// Face poset of the cells, with covers from nonzero mod-p incidences.
pub fn face_poset(data: &CWChainData, p: Prime) -> LabeledPoset {
    chain_incidence_poset(&super::cw::cellular_chain_complex(data, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cwposet::shapes::*;

    #[test]
    fn hollow_triangle_face_poset() {
        let f = face_poset(&hollow_triangle(None), Prime::new(2).unwrap());
        assert_eq!(f.len(), 6);
        assert_eq!(f.covers().len(), 6);
        let below = f.strict_down_sets();
        for e in 3..6 {
            assert_eq!(below[e].len(), 2);
        }
    }

    #[test]
    fn solid_square_face_poset() {
        let f = face_poset(&solid_square(), Prime::new(3).unwrap());
        assert_eq!(f.len(), 9);
        assert_eq!(f.covers().len(), 12);
        // the face lies above every other cell
        assert_eq!(f.strict_down_sets()[8].len(), 8);
        assert!(f.less_than(0, 8));
    }

    #[test]
    fn double_disk_loses_cover_mod_two() {
        let d = double_disk();
        assert_eq!(face_poset(&d, Prime::new(2).unwrap()).covers().len(), 6);
        assert_eq!(face_poset(&d, Prime::new(3).unwrap()).covers().len(), 8);
    }

    #[test]
    fn json_round_trip_and_rejects_bad_cover() {
        let f = face_poset(&labeled_segment(), Prime::new(2).unwrap());
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(
            s,
            r#"{"elements":[{"id":"x","rank":0,"mdeg":[1,0]},{"id":"y","rank":0,"mdeg":[0,1]},{"id":"xy","rank":1,"mdeg":[1,1]}],"covers":[[0,2],[1,2]]}"#
        );
        assert_eq!(serde_json::from_str::<LabeledPoset>(&s).unwrap(), f);
        assert!(f.degrees_order_preserving());
        let bad = r#"{"elements":[{"id":"a","rank":0},{"id":"b","rank":0}],"covers":[[0,1]]}"#;
        assert!(serde_json::from_str::<LabeledPoset>(bad).is_err());
    }
}
