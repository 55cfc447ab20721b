//! Gap sets, fundamental extenders and the Hilbert basis of the length cone.
//!
//! With canonical representation `[ℓ*, r*]` of magnitude `m`, the `i`-th gap
//! set `G_i` collects the intervals covering the unit gap `(i-1, i)`, while
//! `L_i` and `R_i` collect the intervals ending just before it and starting
//! just after it. Lengthening `G_i ∪ Z` by one, with `Z` inside `L_i` or
//! `R_i`, keeps the order intact; these sets generate the cone.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::canonical::{CanonicalRepresentation, Side};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::set::ElementSet;

pub const DEFAULT_EXTENDER_LIMIT: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapStructure {
    pub magnitude: usize,
    /// `gaps[i] = G_i` for `i` in `0..=m`.
    pub gaps: Vec<ElementSet>,
    /// `left_border[i] = L_i = {x : r*_x = i - 1}`.
    pub left_border: Vec<ElementSet>,
    /// `right_border[i] = R_i = {x : ℓ*_x = i}`.
    pub right_border: Vec<ElementSet>,
}

impl GapStructure {
    pub fn new(canon: &CanonicalRepresentation) -> Self {
        let m = canon.magnitude;
        let (l, r) = (canon.left(), canon.right());
        let members = |pred: &dyn Fn(usize) -> bool| -> ElementSet {
            (0..canon.len()).filter(|&x| pred(x)).collect()
        };
        let gaps = (0..=m)
            .map(|i| {
                let i = i as i64;
                if i == 0 || i == m as i64 {
                    ElementSet::new()
                } else {
                    members(&|x| l[x] < i && i <= r[x])
                }
            })
            .collect();
        let left_border = (0..=m).map(|i| members(&|x| r[x] + 1 == i as i64)).collect();
        let right_border = (0..=m).map(|i| members(&|x| l[x] == i as i64)).collect();
        Self {
            magnitude: m,
            gaps,
            left_border,
            right_border,
        }
    }

    pub fn border(&self, i: usize, side: Side) -> &ElementSet {
        match side {
            Side::Left => &self.left_border[i],
            Side::Right => &self.right_border[i],
        }
    }

    /// Upper bound on the number of fundamental extenders:
    /// `Σ_i (2^|L_i| + 2^|R_i|)`.
    pub fn extender_bound(&self) -> u128 {
        (0..=self.magnitude)
            .map(|i| pow2(self.left_border[i].len()) + pow2(self.right_border[i].len()))
            .sum()
    }
}

fn pow2(k: usize) -> u128 {
    1u128.checked_shl(k as u32).unwrap_or(u128::MAX / 4)
}

impl Serialize for GapStructure {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Level<'a> {
            i: usize,
            gap: &'a ElementSet,
            left: &'a ElementSet,
            right: &'a ElementSet,
        }
        let levels: Vec<Level<'_>> = (0..=self.magnitude)
            .map(|i| Level {
                i,
                gap: &self.gaps[i],
                left: &self.left_border[i],
                right: &self.right_border[i],
            })
            .collect();
        let mut s = serializer.serialize_struct("GapStructure", 2)?;
        s.serialize_field("magnitude", &self.magnitude)?;
        s.serialize_field("levels", &levels)?;
        s.end()
    }
}

/// One way of writing an extender as `G_i ∪ Z`. `side` is `None` when `Z`
/// is empty, since then both borders qualify.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Witness {
    pub index: usize,
    pub side: Option<Side>,
    pub z: ElementSet,
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let side = match self.side {
            Some(Side::Left) => "L",
            Some(Side::Right) => "R",
            None => "-",
        };
        let mut s = serializer.serialize_struct("Witness", 3)?;
        s.serialize_field("i", &self.index)?;
        s.serialize_field("side", side)?;
        s.serialize_field("Z", &self.z)?;
        s.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FundamentalExtender {
    pub set: ElementSet,
    pub witnesses: Vec<Witness>,
}

/// Every distinct non-empty `G_i ∪ Z`, ordered by size and then
/// lexicographically, with all witnesses merged.
pub fn fundamental_extenders(
    canon: &CanonicalRepresentation,
    limit: usize,
) -> Result<Vec<FundamentalExtender>> {
    let gs = GapStructure::new(canon);
    let mut found: BTreeMap<ElementSet, Vec<Witness>> = BTreeMap::new();
    for i in 0..=gs.magnitude {
        for side in [Side::Left, Side::Right] {
            let border: Vec<usize> = gs.border(i, side).iter().collect();
            let subsets = pow2(border.len());
            if subsets > limit as u128 + 1 {
                return Err(Error::ExtenderLimitExceeded(limit));
            }
            for mask in 0..subsets {
                if mask == 0 && side == Side::Right {
                    continue;
                }
                let z: ElementSet = border
                    .iter()
                    .enumerate()
                    .filter(|(b, _)| mask >> b & 1 == 1)
                    .map(|(_, &x)| x)
                    .collect();
                let set = gs.gaps[i].union(&z);
                if set.is_empty() {
                    continue;
                }
                let witness = Witness {
                    index: i,
                    side: (!z.is_empty()).then_some(side),
                    z,
                };
                found.entry(set).or_default().push(witness);
                if found.len() > limit {
                    return Err(Error::ExtenderLimitExceeded(limit));
                }
            }
        }
    }
    Ok(found
        .into_iter()
        .map(|(set, mut witnesses)| {
            witnesses.sort();
            FundamentalExtender { set, witnesses }
        })
        .collect())
}

/// Splits `target` exactly into members of `parts` that are proper subsets
/// of it. Returns the chosen parts in the order they were picked.
pub fn exact_partition(target: &ElementSet, parts: &[ElementSet]) -> Option<Vec<ElementSet>> {
    let usable: Vec<&ElementSet> = parts
        .iter()
        .filter(|p| !p.is_empty() && p.is_proper_subset(target))
        .collect();
    fn cover<'a>(
        rest: &ElementSet,
        usable: &[&'a ElementSet],
        chosen: &mut Vec<&'a ElementSet>,
    ) -> bool {
        let Some(x) = rest.first() else {
            return true;
        };
        for &p in usable {
            if p.contains(x) && p.is_subset(rest) {
                chosen.push(p);
                if cover(&rest.difference(p), usable, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let mut chosen = Vec::new();
    cover(target, &usable, &mut chosen).then(|| chosen.into_iter().cloned().collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertBasis {
    /// The Hilbert sets, by size and then lexicographically.
    pub sets: Vec<ElementSet>,
    pub extenders: Vec<FundamentalExtender>,
    /// Extenders that split into smaller Hilbert sets, with one such split.
    pub discarded: Vec<(ElementSet, Vec<ElementSet>)>,
}

impl HilbertBasis {
    pub fn witnesses_of(&self, set: &ElementSet) -> Option<&[Witness]> {
        self.extenders
            .iter()
            .find(|e| &e.set == set)
            .map(|e| e.witnesses.as_slice())
    }

    /// Fixed-width listing: one Hilbert set per line with its witnesses.
    pub fn to_table(&self) -> String {
        let mut out = format!("{:<4} {:<24} {}\n", "#", "set", "witnesses (i, side, Z)");
        for (k, set) in self.sets.iter().enumerate() {
            let witnesses: Vec<String> = self
                .witnesses_of(set)
                .unwrap_or_default()
                .iter()
                .map(|w| {
                    let side = match w.side {
                        Some(Side::Left) => "L",
                        Some(Side::Right) => "R",
                        None => "-",
                    };
                    format!("({}, {}, {})", w.index, side, w.z)
                })
                .collect();
            let _ = writeln!(out, "{:<4} {:<24} {}", k + 1, set.to_string(), witnesses.join(" "));
        }
        out
    }
}

impl Serialize for HilbertBasis {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("HilbertBasis", 1)?;
        s.serialize_field("basis", &self.sets)?;
        s.end()
    }
}

/// Keeps an extender exactly when it cannot be split into smaller kept
/// sets. Sets are processed by increasing size, so every split of a
/// discarded set refines into Hilbert sets found earlier.
pub fn hilbert_basis(canon: &CanonicalRepresentation, limit: usize) -> Result<HilbertBasis> {
    let extenders = fundamental_extenders(canon, limit)?;
    let mut sets: Vec<ElementSet> = Vec::new();
    let mut discarded = Vec::new();
    for e in &extenders {
        match exact_partition(&e.set, &sets) {
            Some(parts) => discarded.push((e.set.clone(), parts)),
            None => sets.push(e.set.clone()),
        }
    }
    Ok(HilbertBasis {
        sets,
        extenders,
        discarded,
    })
}

/// Intersection graph of the Hilbert sets, weighted by set size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtenderGraph {
    pub sets: Vec<ElementSet>,
    pub graph: SimpleGraph,
}

impl ExtenderGraph {
    pub fn new(sets: Vec<ElementSet>) -> Self {
        let mut graph = SimpleGraph::new(sets.len());
        for u in 0..sets.len() {
            for v in u + 1..sets.len() {
                if sets[u].intersects(&sets[v]) {
                    graph.add_edge(u, v);
                }
            }
        }
        Self { sets, graph }
    }

    pub fn weight(&self, v: usize) -> usize {
        self.sets[v].len()
    }

    pub fn vertex_of(&self, set: &ElementSet) -> Option<usize> {
        self.sets.iter().position(|s| s == set)
    }

    pub fn to_dot(&self) -> String {
        let mut dot = String::from("graph extender_graph {\n");
        for (v, set) in self.sets.iter().enumerate() {
            let _ = writeln!(dot, "  {} [label=\"{}\", weight={}];", v + 1, set, set.len());
        }
        for (u, v) in self.graph.edges() {
            let _ = writeln!(dot, "  {} -- {};", u + 1, v + 1);
        }
        dot.push_str("}\n");
        dot
    }

    /// Exact maximum-weight independent set. With `restrict`, only sets that
    /// are proper subsets of it take part.
    pub fn max_weight_independent_set(&self, restrict: Option<&ElementSet>) -> (usize, Vec<usize>) {
        let candidates: ElementSet = (0..self.sets.len())
            .filter(|&v| restrict.is_none_or(|s| self.sets[v].is_proper_subset(s)))
            .collect();
        let mut best = (0, Vec::new());
        let mut chosen = Vec::new();
        self.mwis(candidates, 0, &mut chosen, &mut best);
        best.1.sort_unstable();
        best
    }

    fn mwis(
        &self,
        candidates: ElementSet,
        weight: usize,
        chosen: &mut Vec<usize>,
        best: &mut (usize, Vec<usize>),
    ) {
        if weight > best.0 {
            *best = (weight, chosen.clone());
        }
        // Disjoint sets cannot hold more elements than their union.
        let union = candidates
            .iter()
            .fold(ElementSet::new(), |acc, v| acc.union(&self.sets[v]));
        let bound = union.len().min(candidates.iter().map(|v| self.weight(v)).sum());
        if weight + bound <= best.0 {
            return;
        }
        let Some(v) = candidates.iter().max_by_key(|&v| (self.weight(v), std::cmp::Reverse(v)))
        else {
            return;
        };
        let mut without = candidates.clone();
        without.remove(v);
        chosen.push(v);
        self.mwis(
            without.difference(self.graph.neighbors(v)),
            weight + self.weight(v),
            chosen,
            best,
        );
        chosen.pop();
        self.mwis(without, weight, chosen, best);
    }
}

impl Serialize for ExtenderGraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Vertex<'a> {
            id: usize,
            set: &'a ElementSet,
            weight: usize,
            adjacent: Vec<usize>,
        }
        let vertices: Vec<Vertex<'_>> = self
            .sets
            .iter()
            .enumerate()
            .map(|(v, set)| Vertex {
                id: v + 1,
                set,
                weight: set.len(),
                adjacent: self.graph.neighbors(v).labels(),
            })
            .collect();
        let mut s = serializer.serialize_struct("ExtenderGraph", 3)?;
        s.serialize_field("order", &self.sets.len())?;
        s.serialize_field("size", &self.graph.edge_count())?;
        s.serialize_field("vertices", &vertices)?;
        s.end()
    }
}

pub fn extender_graph(canon: &CanonicalRepresentation, limit: usize) -> Result<ExtenderGraph> {
    Ok(ExtenderGraph::new(hilbert_basis(canon, limit)?.sets))
}
