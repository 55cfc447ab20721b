//! Interval orders: ingestion, validation and order-theoretic profiles.
//!
//! Elements are indexed `0..n` in the Rust API. Input formats and all
//! rendered output use 1-based labels.

use std::collections::BTreeSet;

use crate::canonical::IntervalRepresentation;
use crate::error::{Error, Result, TwoPlusTwo};
use crate::set::ElementSet;

/// A strict partial order with no induced `2+2`.
///
/// Stores both the strict down-set and the strict up-set of every element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalOrder {
    down: Vec<ElementSet>,
    up: Vec<ElementSet>,
}

/// Down-set and up-set chains of an interval order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderProfile {
    /// Distinct down-sets, increasing under inclusion; `downsets[0]` is empty.
    pub downsets: Vec<ElementSet>,
    /// Distinct up-sets, decreasing under inclusion; the last one is empty.
    pub upsets: Vec<ElementSet>,
    pub magnitude: usize,
    pub width: usize,
    pub minimals: ElementSet,
}

impl IntervalOrder {
    /// Builds an order from generating pairs `(x, y)` meaning `x ≺ y`
    /// (0-based). With `closure` the transitive closure is taken first;
    /// without it the pairs must already be transitively closed.
    pub fn from_relations(n: usize, pairs: &[(usize, usize)], closure: bool) -> Result<Self> {
        let mut up = vec![ElementSet::new(); n];
        for &(x, y) in pairs {
            for v in [x, y] {
                if v >= n {
                    return Err(Error::LabelOutOfRange { label: v + 1, n });
                }
            }
            up[x].insert(y);
        }
        if closure {
            // Warshall over bit rows.
            for k in 0..n {
                let row_k = up[k].clone();
                for row in up.iter_mut() {
                    if row.contains(k) {
                        row.union_with(&row_k);
                    }
                }
            }
        }
        for (x, row) in up.iter().enumerate() {
            if row.contains(x) {
                return Err(Error::NotIrreflexive(x));
            }
        }
        if !closure {
            for x in 0..n {
                for y in up[x].iter() {
                    if let Some(z) = up[y].difference(&up[x]).first() {
                        return Err(Error::NotTransitive(x, z));
                    }
                }
            }
        }
        let mut down = vec![ElementSet::new(); n];
        for (x, row) in up.iter().enumerate() {
            for y in row {
                down[y].insert(x);
            }
        }
        let order = Self { down, up };
        if let Some(cert) = order.find_two_plus_two() {
            return Err(Error::NotIntervalOrder(cert));
        }
        Ok(order)
    }

    /// Reads the order off a family of closed integer intervals:
    /// `x ≺ y` iff `r_x < ℓ_y`.
    pub fn from_intervals(intervals: &[(i64, i64)]) -> Result<(Self, IntervalRepresentation)> {
        let rep = IntervalRepresentation::new(intervals)?;
        Ok((rep.order(), rep))
    }

    /// Decodes an ascent sequence into its `(2+2)`-free poset. Element `k`
    /// is the one created by the `k`-th entry.
    pub fn from_ascent_sequence(seq: &[usize]) -> Result<Self> {
        Ok(decode_ascent_sequence(seq)?.order())
    }

    pub(crate) fn from_down_sets(down: Vec<ElementSet>) -> Self {
        let mut up = vec![ElementSet::new(); down.len()];
        for (y, row) in down.iter().enumerate() {
            for x in row {
                up[x].insert(y);
            }
        }
        Self { down, up }
    }

    pub fn antichain(n: usize) -> Self {
        Self::from_down_sets(vec![ElementSet::new(); n])
    }

    pub fn chain(n: usize) -> Self {
        Self::from_down_sets((0..n).map(|k| (0..k).collect()).collect())
    }

    pub fn len(&self) -> usize {
        self.down.len()
    }

    pub fn is_empty(&self) -> bool {
        self.down.is_empty()
    }

    /// `x ≺ y`.
    pub fn precedes(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    /// `x ∥ y` for distinct `x`, `y`.
    pub fn incomparable(&self, x: usize, y: usize) -> bool {
        x != y && !self.precedes(x, y) && !self.precedes(y, x)
    }

    /// Strict down-set `D(x) = {z : z ≺ x}`.
    pub fn down_set(&self, x: usize) -> &ElementSet {
        &self.down[x]
    }

    /// Strict up-set `U(x) = {z : x ≺ z}`.
    pub fn up_set(&self, x: usize) -> &ElementSet {
        &self.up[x]
    }

    /// All related pairs `(x, y)` with `x ≺ y`, lexicographically.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        self.up
            .iter()
            .enumerate()
            .flat_map(|(x, row)| row.iter().map(move |y| (x, y)))
            .collect()
    }

    /// Cover pairs of the order (its Hasse diagram).
    pub fn cover_relations(&self) -> Vec<(usize, usize)> {
        self.relations()
            .into_iter()
            .filter(|&(x, y)| !self.up[x].intersects(&self.down[y]))
            .collect()
    }

    pub fn minimal_elements(&self) -> ElementSet {
        (0..self.len()).filter(|&x| self.down[x].is_empty()).collect()
    }

    pub fn maximal_elements(&self) -> ElementSet {
        (0..self.len()).filter(|&x| self.up[x].is_empty()).collect()
    }

    /// Position of each element's down-set in the down-set chain. This is
    /// the left endpoint of the element in the canonical representation.
    pub fn down_ranks(&self) -> Vec<usize> {
        ranks(&self.down, false)
    }

    /// Position of each element's up-set in the up-set chain read from the
    /// largest set to the empty one: the canonical right endpoint.
    pub fn up_ranks(&self) -> Vec<usize> {
        ranks(&self.up, true)
    }

    pub fn magnitude(&self) -> usize {
        self.down.iter().collect::<BTreeSet<_>>().len()
    }

    pub fn profile(&self) -> OrderProfile {
        let downsets: Vec<ElementSet> = chain_of(&self.down, false);
        let upsets: Vec<ElementSet> = chain_of(&self.up, true);
        let (left, right) = (self.down_ranks(), self.up_ranks());
        // Pairwise intersecting intervals share a point, so the widest
        // antichain is the deepest stack of canonical intervals.
        let width = (0..downsets.len())
            .map(|p| (0..self.len()).filter(|&x| left[x] <= p && p <= right[x]).count())
            .max()
            .unwrap_or(0);
        OrderProfile {
            magnitude: downsets.len(),
            downsets,
            upsets,
            width,
            minimals: self.minimal_elements(),
        }
    }

    /// Finds a `2+2` by scanning the down-sets in size order for a pair
    /// that is not nested.
    pub(crate) fn find_two_plus_two(&self) -> Option<TwoPlusTwo> {
        let mut by_size: Vec<usize> = (0..self.len()).collect();
        by_size.sort_by_key(|&x| (self.down[x].len(), x));
        by_size.windows(2).find_map(|w| {
            let (u, v) = (w[0], w[1]);
            let a = self.down[u].difference(&self.down[v]).first()?;
            let c = self.down[v].difference(&self.down[u]).first()?;
            Some(TwoPlusTwo { a, b: u, c, d: v })
        })
    }

    /// Searches for a relation-preserving bijection onto `other`.
    /// `Some(map)` sends element `x` of `self` to `map[x]` of `other`.
    pub fn isomorphism(&self, other: &Self) -> Result<Option<Vec<usize>>> {
        if self.len() != other.len() {
            return Err(Error::SizeMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        let sig = |p: &Self, x: usize| (p.down[x].len(), p.up[x].len());
        let mut mine: Vec<usize> = (0..self.len()).collect();
        mine.sort_by_key(|&x| sig(self, x));
        let mut theirs: Vec<usize> = (0..other.len()).collect();
        theirs.sort_by_key(|&x| sig(other, x));
        if mine.iter().map(|&x| sig(self, x)).ne(theirs.iter().map(|&x| sig(other, x))) {
            return Ok(None);
        }
        let mut map = vec![usize::MAX; self.len()];
        let mut used = vec![false; other.len()];
        if self.extend_isomorphism(other, &mine, 0, &mut map, &mut used) {
            Ok(Some(map))
        } else {
            Ok(None)
        }
    }

    pub fn is_isomorphic(&self, other: &Self) -> bool {
        matches!(self.isomorphism(other), Ok(Some(_)))
    }

    fn extend_isomorphism(
        &self,
        other: &Self,
        order: &[usize],
        depth: usize,
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let Some(&x) = order.get(depth) else {
            return true;
        };
        let want = (self.down[x].len(), self.up[x].len());
        for y in 0..other.len() {
            if used[y] || (other.down[y].len(), other.up[y].len()) != want {
                continue;
            }
            let consistent = order[..depth].iter().all(|&z| {
                let w = map[z];
                self.precedes(z, x) == other.precedes(w, y)
                    && self.precedes(x, z) == other.precedes(y, w)
            });
            if !consistent {
                continue;
            }
            map[x] = y;
            used[y] = true;
            if self.extend_isomorphism(other, order, depth + 1, map, used) {
                return true;
            }
            used[y] = false;
            map[x] = usize::MAX;
        }
        false
    }
}

fn chain_of(sets: &[ElementSet], descending: bool) -> Vec<ElementSet> {
    let distinct: BTreeSet<&ElementSet> = sets.iter().collect();
    let mut chain: Vec<ElementSet> = distinct.into_iter().cloned().collect();
    if descending {
        chain.reverse();
    }
    chain
}

fn ranks(sets: &[ElementSet], descending: bool) -> Vec<usize> {
    let chain = chain_of(sets, descending);
    sets.iter()
        .map(|s| chain.iter().position(|c| c == s).expect("set is in its own chain"))
        .collect()
}

/// Decodes an ascent sequence straight into the canonical representation
/// of its poset.
///
/// Each entry opens a new maximal interval `[v, top]`. An ascent to `v`
/// first inserts a fresh level at `v`: intervals starting at or after `v`
/// move up one step, maximal intervals that start below `v` are cut back
/// to end at `v` (or stay put when `v` is a new top level), and the other
/// right endpoints at or above `v` move up.
pub fn decode_ascent_sequence(seq: &[usize]) -> Result<IntervalRepresentation> {
    let mut left: Vec<i64> = Vec::with_capacity(seq.len());
    let mut right: Vec<i64> = Vec::with_capacity(seq.len());
    let mut top: i64 = 0;
    for (k, &entry) in seq.iter().enumerate() {
        let v = entry as i64;
        if k == 0 {
            if entry != 0 {
                return Err(Error::NotAscentSequence { index: 0 });
            }
        } else if v > top + 1 {
            return Err(Error::NotAscentSequence { index: k });
        } else if entry > seq[k - 1] {
            for (l, r) in left.iter_mut().zip(right.iter_mut()) {
                if *l >= v {
                    *l += 1;
                    *r += 1;
                } else if *r == top {
                    *r = v.min(top);
                } else if *r >= v {
                    *r += 1;
                }
            }
            top += 1;
        }
        left.push(v);
        right.push(top);
    }
    let intervals: Vec<(i64, i64)> = left.into_iter().zip(right).collect();
    IntervalRepresentation::new(&intervals)
}

/// All ascent sequences of length `len`, lexicographically.
pub fn ascent_sequences(len: usize) -> Vec<Vec<usize>> {
    fn grow(prefix: &mut Vec<usize>, ascents: usize, len: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        let last = *prefix.last().expect("prefix starts with 0");
        for v in 0..=ascents + 1 {
            prefix.push(v);
            grow(prefix, ascents + usize::from(v > last), len, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if len == 0 {
        out.push(Vec::new());
    } else {
        grow(&mut vec![0], 0, len, &mut out);
    }
    out
}
