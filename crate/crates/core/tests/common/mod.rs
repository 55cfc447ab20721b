#![allow(dead_code)]

use ordlen::canonical::{compute_canonical, CanonicalRepresentation};
use ordlen::io::load_order;
use ordlen::order::IntervalOrder;
use ordlen::set::ElementSet;

pub fn fixture(name: &str) -> IntervalOrder {
    let text = match name {
        "pa" => include_str!("../../fixtures/pa.json"),
        "pb" => include_str!("../../fixtures/pb.json"),
        "pc" => include_str!("../../fixtures/pc.json"),
        "pd" => include_str!("../../fixtures/pd.json"),
        other => panic!("no fixture {other}"),
    };
    load_order(text).expect("fixture loads").order
}

pub fn canonical(name: &str) -> CanonicalRepresentation {
    compute_canonical(&fixture(name))
}

/// `1` below `j` below `n - 1` for every middle `j`; `n` is isolated.
pub fn fan(n: usize) -> IntervalOrder {
    let mut pairs = Vec::new();
    for j in 1..n - 2 {
        pairs.push((0, j));
        pairs.push((j, n - 2));
    }
    IntervalOrder::from_relations(n, &pairs, true).expect("fan is an interval order")
}

pub fn sets(labels: &[&[usize]]) -> Vec<ElementSet> {
    labels.iter().map(|l| ElementSet::from_labels(l)).collect()
}

pub fn zero_based(pairs: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut out: Vec<_> = pairs.iter().map(|&(x, y)| (x - 1, y - 1)).collect();
    out.sort_unstable();
    out
}
