//! Writes the sample inputs under `data/`: `cargo run -p cellres --example write_samples -- data`.

use std::fs;
use std::path::PathBuf;

use cellres::cwposet::shapes::{hollow_triangle, labeled_segment, loop_edge, simplex, square};
use cellres::monoid::{parse_ideal, Multidegree};

fn main() -> std::io::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "data".into()));
    fs::create_dir_all(&dir)?;
    let ideals = [
        ("xyz.ideal", "x, y, z\n"),
        ("xy.ideal", "x, y\n"),
        ("x.ideal", "x\n"),
        ("generic.ideal", "a*b^2, b*c^2, c*d^2, a^2*d\n"),
        ("four-cycle.ideal", "a*b, b*c, c*d, a*d\n"),
        ("malformed.ideal", "x**y\n"),
    ];
    for (name, text) in ideals {
        fs::write(dir.join(name), text)?;
    }
    let vars = |s: &str| s.chars().map(String::from).collect::<Vec<_>>();
    let gens = |text: &str, names: &str| parse_ideal(text, &vars(names)).expect("sample parses").generators().to_vec();
    let unit = |n: usize, k: usize| Multidegree::new((0..n).map(|j| u32::from(j == k)).collect());
    let xyz: Vec<Multidegree> = (0..3).map(|k| unit(3, k)).collect();
    let cycle: Vec<Multidegree> =
        ["a*b", "b*c", "c*d", "a*d"].iter().map(|g| gens(g, "abcd")[0].clone()).collect();
    let shapes = [
        ("triangle.cw.json", simplex(2, Some(&xyz))),
        ("hollow-triangle.cw.json", hollow_triangle(Some(&xyz))),
        ("segment.cw.json", labeled_segment()),
        ("scarf-tetrahedron.cw.json", simplex(3, Some(&gens("a*b^2, b*c^2, c*d^2, a^2*d", "abcd")))),
        ("square.cw.json", square(Some(&cycle))),
        ("loop-edge.cw.json", loop_edge(Some(Multidegree::new(vec![1])))),
    ];
    for (name, data) in shapes {
        let mut s = serde_json::to_string_pretty(&data).expect("shapes serialize");
        s.push('\n');
        fs::write(dir.join(name), s)?;
    }
    Ok(())
}
