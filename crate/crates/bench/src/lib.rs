//! Inputs shared by the criterion benches in `benches/`.

use thickcalc::{Partition, ThinElement};

/// A product of `n` random-looking words on `k` strands of color 1, unreduced
/// until parsed.
pub fn crossing_tower(k: usize, n: usize) -> String {
    let mut word = Vec::new();
    for t in 0..n {
        word.push(format!("{}", (t * 7 + 3) % (k - 1) + 1));
    }
    let dots: Vec<String> = (0..k).map(|j| ((j * 5) % 3).to_string()).collect();
    let cols = vec!["1"; k].join(" ");
    format!("psi[{}] x[{}] psi[{}] e({cols})", word.join(","), dots.join(","), word.iter().rev().cloned().collect::<Vec<_>>().join(","))
}

pub fn parse(s: &str) -> ThinElement {
    s.parse().expect("fixture parses")
}

/// Every partition in the `rows x cols` box.
pub fn box_partitions(rows: usize, cols: u32) -> Vec<Partition> {
    thickcalc::symfunc::enumerate_partitions(rows, cols)
}
