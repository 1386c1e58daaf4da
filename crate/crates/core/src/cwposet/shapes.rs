//! Small CW complexes used by the corpus, the tests and the CLI samples.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;

use super::cw::{int, CWChainData, Cell};
use crate::exactlin::IntMatrix;
use crate::monoid::Multidegree;

/// Simplicial complex generated by `facets`, with the simplicial orientation
/// (`d{s_0 < ... < s_k} = sum_j (-1)^j {.. omit s_j ..}`). Cells of each
/// dimension are listed in lexicographic order and named like `{0,2}`. With
/// vertex labels, every face gets the lcm of its vertex labels.
pub fn simplicial_cw(facets: &[Vec<usize>], labels: Option<&[Multidegree]>) -> CWChainData {
    let mut faces: BTreeSet<Vec<usize>> = BTreeSet::new();
    for f in facets {
        let mut f = f.clone();
        f.sort_unstable();
        f.dedup();
        for mask in 1u64..(1u64 << f.len()) {
            faces.insert((0..f.len()).filter(|&k| mask & (1 << k) != 0).map(|k| f[k]).collect());
        }
    }
    let top = faces.iter().map(Vec::len).max().unwrap_or(0);
    let mut by_dim: Vec<Vec<Vec<usize>>> = vec![Vec::new(); top];
    for f in faces {
        by_dim[f.len() - 1].push(f);
    }
    let cells: Vec<Vec<Cell>> = by_dim
        .iter()
        .map(|level| {
            level
                .iter()
                .map(|s| {
                    let mdeg = labels.map(|l| {
                        s[1..].iter().fold(l[s[0]].clone(), |acc, &v| acc.lcm(&l[v]).expect("labels share a length"))
                    });
                    Cell::new(subset_id(s), mdeg)
                })
                .collect()
        })
        .collect();
    let mut boundaries = Vec::new();
    for d in 1..top {
        let index: BTreeMap<&Vec<usize>, usize> = by_dim[d - 1].iter().enumerate().map(|(k, s)| (s, k)).collect();
        let mut b = IntMatrix::zeros(by_dim[d - 1].len(), by_dim[d].len());
        for (c, s) in by_dim[d].iter().enumerate() {
            for k in 0..s.len() {
                let mut face = s.clone();
                face.remove(k);
                b.set(index[&face], c, int(if k % 2 == 0 { 1 } else { -1 }));
            }
        }
        boundaries.push(b);
    }
    CWChainData::new(cells, boundaries).expect("simplicial shapes fit")
}

fn subset_id(s: &[usize]) -> String {
    let parts: Vec<String> = s.iter().map(usize::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

/// The full `dim`-simplex.
pub fn simplex(dim: usize, labels: Option<&[Multidegree]>) -> CWChainData {
    simplicial_cw(&[(0..=dim).collect()], labels)
}

/// Boundary of the 2-simplex.
pub fn hollow_triangle(labels: Option<&[Multidegree]>) -> CWChainData {
    simplicial_cw(&[vec![0, 1], vec![1, 2], vec![0, 2]], labels)
}

fn build(cells: Vec<Vec<Cell>>, boundaries: &[Vec<Vec<i64>>]) -> CWChainData {
    let b = boundaries.iter().map(|rows| IntMatrix::from_rows(rows)).collect();
    CWChainData::new(cells, b).expect("hand-built shapes fit")
}

fn unlabeled(prefix: &str, n: usize) -> Vec<Cell> {
    (0..n).map(|k| Cell::new(format!("{prefix}{k}"), None)).collect()
}

/// Square with one 2-cell: edges `v0->v1`, `v1->v2`, `v3->v2`, `v0->v3`.
/// Labels, when given, are the four vertex degrees; edges and the face get
/// lcms.
pub fn square(labels: Option<&[Multidegree]>) -> CWChainData {
    let ends = [(0, 1), (1, 2), (3, 2), (0, 3)];
    let lcm = |a: &Multidegree, b: &Multidegree| a.lcm(b).expect("labels share a length");
    let vertices: Vec<Cell> =
        (0..4).map(|k| Cell::new(format!("v{k}"), labels.map(|l| l[k].clone()))).collect();
    let edges: Vec<Cell> = ends
        .iter()
        .enumerate()
        .map(|(k, &(a, b))| Cell::new(format!("e{k}"), labels.map(|l| lcm(&l[a], &l[b]))))
        .collect();
    let face = Cell::new("f", labels.map(|l| l[1..].iter().fold(l[0].clone(), |acc, m| lcm(&acc, m))));
    build(
        vec![vertices, edges, vec![face]],
        &[
            vec![vec![-1, 0, 0, -1], vec![1, -1, 0, 0], vec![0, 1, 1, 0], vec![0, 0, -1, 1]],
            vec![vec![1], vec![1], vec![-1], vec![-1]],
        ],
    )
}

pub fn solid_square() -> CWChainData {
    square(None)
}

/// One vertex and one edge attached at both ends to it.
pub fn loop_edge(label: Option<Multidegree>) -> CWChainData {
    build(
        vec![vec![Cell::new("v", label.clone())], vec![Cell::new("e", label)]],
        &[vec![vec![0]]],
    )
}

/// Two edges between two vertices, one disk glued along the circle once and
/// a second disk glued along it twice.
pub fn double_disk() -> CWChainData {
    build(
        vec![unlabeled("v", 2), unlabeled("e", 2), unlabeled("f", 2)],
        &[vec![vec![-1, -1], vec![1, 1]], vec![vec![1, 2], vec![-1, -2]]],
    )
}

/// One 2-cell glued along two triangles that share the vertex `v0`.
pub fn bowtie_disk() -> CWChainData {
    build(
        vec![unlabeled("v", 5), unlabeled("e", 6), unlabeled("f", 1)],
        &[
            vec![
                vec![-1, 0, -1, -1, 0, -1],
                vec![1, -1, 0, 0, 0, 0],
                vec![0, 1, 1, 0, 0, 0],
                vec![0, 0, 0, 1, -1, 0],
                vec![0, 0, 0, 0, 1, 1],
            ],
            vec![vec![1], vec![1], vec![-1], vec![1], vec![1], vec![-1]],
        ],
    )
}

/// The 1-simplex with vertices labeled `x`, `y` in two variables.
pub fn labeled_segment() -> CWChainData {
    let m = |v: Vec<u32>| Some(Multidegree::new(v));
    build(
        vec![
            vec![Cell::new("x", m(vec![1, 0])), Cell::new("y", m(vec![0, 1]))],
            vec![Cell::new("xy", m(vec![1, 1]))],
        ],
        &[vec![vec![-1], vec![1]]],
    )
}

/// Two hollow tetrahedra on vertices `0..4` and `4..8` with two 3-cells of
/// the same degree: `c0` glued along both spheres and `c1` along the first.
/// Vertex `k` has degree `x_k` in eight variables; every other cell has the
/// lcm of its vertices and both 3-cells the product of all variables.
pub fn twin_tetrahedra() -> CWChainData {
    let labels: Vec<Multidegree> = (0..8)
        .map(|k| Multidegree::new((0..8).map(|j| u32::from(j == k)).collect()))
        .collect();
    let facets: Vec<Vec<usize>> = [0usize, 4]
        .iter()
        .flat_map(|&o| (0..4).combinations(3).map(move |t| t.iter().map(|v| v + o).collect()))
        .collect();
    let skeleton = simplicial_cw(&facets, Some(&labels));
    let triangles = skeleton.cells_in_dim(2).len();
    let sphere = |offset: usize| -> Vec<i64> {
        let mut col = vec![0i64; triangles];
        for omit in 0..4 {
            let face: Vec<usize> = (0..4).filter(|&v| v != omit).map(|v| v + offset).collect();
            let row = skeleton.cells_in_dim(2).iter().position(|c| c.id == subset_id(&face)).expect("face exists");
            col[row] = if omit % 2 == 0 { 1 } else { -1 };
        }
        col
    };
    let a = sphere(0);
    let b = sphere(4);
    let mut b3 = IntMatrix::zeros(triangles, 2);
    for r in 0..triangles {
        b3.set(r, 0, int(a[r] + b[r]));
        b3.set(r, 1, int(a[r]));
    }
    let top = Some(Multidegree::new(vec![1; 8]));
    let mut cells = skeleton.cells().to_vec();
    cells.push(vec![Cell::new("c0", top.clone()), Cell::new("c1", top)]);
    let mut boundaries = skeleton.boundaries().to_vec();
    boundaries.push(b3);
    CWChainData::new(cells, boundaries).expect("shapes fit")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cwposet::validate_cw;

    #[test]
    fn builders_satisfy_boundary_squared_zero() {
        for d in [
            simplex(3, None),
            hollow_triangle(None),
            solid_square(),
            loop_edge(None),
            double_disk(),
            bowtie_disk(),
            labeled_segment(),
            twin_tetrahedra(),
            simplicial_cw(&[vec![0, 1, 2], vec![1, 2, 3]], None),
        ] {
            assert!(validate_cw(&d).is_valid(), "{d:?}");
        }
    }

    #[test]
    fn simplex_counts() {
        assert_eq!(simplex(3, None).counts(), vec![4, 6, 4, 1]);
        assert_eq!(hollow_triangle(None).counts(), vec![3, 3]);
    }
}
