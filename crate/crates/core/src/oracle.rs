//! Exhaustive ground truth at small sizes: bounded enumeration of natural
//! representations, membership by search, cone decomposition by search,
//! and seeded random instances.

use std::collections::{BTreeMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::canonical::IntervalRepresentation;
use crate::error::{Error, Result};
use crate::order::IntervalOrder;
use crate::set::ElementSet;

/// Lexicographic stream of all representations of an order with every
/// endpoint in `0..=bound`, optionally with prescribed lengths.
pub struct RepresentationEnumeration<'a> {
    order: &'a IntervalOrder,
    /// Candidate intervals per element, in lexicographic order.
    choices: Vec<Vec<(i64, i64)>>,
    /// Index into `choices[x]` of the current pick; `cursor.len()` is the depth.
    cursor: Vec<usize>,
    started: bool,
    bound_too_small: bool,
}

impl<'a> RepresentationEnumeration<'a> {
    fn new(order: &'a IntervalOrder, bound: usize, lengths: Option<&[i64]>) -> Self {
        let b = bound as i64;
        let choices = (0..order.len())
            .map(|x| match lengths {
                Some(rho) => (0..=b - rho[x]).map(|l| (l, l + rho[x])).collect(),
                None => (0..=b)
                    .flat_map(|l| (l..=b).map(move |r| (l, r)))
                    .collect(),
            })
            .collect();
        Self {
            order,
            choices,
            cursor: Vec::new(),
            started: false,
            bound_too_small: bound + 1 < order.magnitude(),
        }
    }

    /// Set when the bound is below `m - 1`, where no representation fits.
    pub fn bound_too_small(&self) -> bool {
        self.bound_too_small
    }

    fn consistent(&self, x: usize, iv: (i64, i64)) -> bool {
        (0..x).all(|y| {
            let other = self.choices[y][self.cursor[y]];
            (other.1 < iv.0) == self.order.precedes(y, x)
                && (iv.1 < other.0) == self.order.precedes(x, y)
        })
    }

    /// Moves to the next consistent pick at the current depth, starting
    /// at `from`. Returns `false` when the depth is exhausted.
    fn settle(&mut self, from: usize) -> bool {
        let x = self.cursor.len() - 1;
        let mut k = from;
        while k < self.choices[x].len() {
            self.cursor[x] = k;
            if self.consistent(x, self.choices[x][k]) {
                return true;
            }
            k += 1;
        }
        false
    }

    fn current(&self) -> IntervalRepresentation {
        let intervals: Vec<(i64, i64)> = self
            .cursor
            .iter()
            .enumerate()
            .map(|(x, &k)| self.choices[x][k])
            .collect();
        IntervalRepresentation::new(&intervals).expect("candidates are well-formed")
    }
}

impl Iterator for RepresentationEnumeration<'_> {
    type Item = IntervalRepresentation;

    fn next(&mut self) -> Option<IntervalRepresentation> {
        let n = self.order.len();
        if self.bound_too_small || self.choices.iter().any(Vec::is_empty) && n > 0 {
            return None;
        }
        // Either descend from scratch or advance the deepest pick.
        let mut advance = if self.started {
            if n == 0 {
                return None;
            }
            true
        } else {
            self.started = true;
            if n == 0 {
                return Some(self.current());
            }
            self.cursor.push(0);
            false
        };
        loop {
            let ok = if advance {
                let k = *self.cursor.last().expect("depth is positive") + 1;
                self.settle(k)
            } else {
                self.settle(0)
            };
            if !ok {
                self.cursor.pop();
                if self.cursor.is_empty() {
                    return None;
                }
                advance = true;
                continue;
            }
            if self.cursor.len() == n {
                return Some(self.current());
            }
            self.cursor.push(0);
            advance = false;
        }
    }
}

pub fn enumerate_representations(order: &IntervalOrder, bound: usize) -> RepresentationEnumeration<'_> {
    RepresentationEnumeration::new(order, bound, None)
}

/// Representations with lengths exactly `rho` and endpoints in `0..=bound`.
pub fn enumerate_with_lengths<'a>(
    order: &'a IntervalOrder,
    rho: &[i64],
    bound: usize,
) -> Result<RepresentationEnumeration<'a>> {
    check_lengths(order.len(), rho)?;
    Ok(RepresentationEnumeration::new(order, bound, Some(rho)))
}

fn check_lengths(n: usize, rho: &[i64]) -> Result<()> {
    if rho.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: rho.len(),
        });
    }
    if let Some(index) = rho.iter().position(|&v| v < 0) {
        return Err(Error::NegativeLength { index });
    }
    Ok(())
}

/// Whether some representation with endpoints in `0..=bound` has lengths
/// exactly `rho`.
pub fn brute_member(order: &IntervalOrder, rho: &[i64], bound: usize) -> Result<bool> {
    Ok(enumerate_with_lengths(order, rho, bound)?.next().is_some())
}

/// A bound large enough for any realizable `rho`: `Σ (ρ_i + 1) + m`.
pub fn generous_bound(order: &IntervalOrder, rho: &[i64]) -> usize {
    let total: i64 = rho.iter().map(|&v| v.max(0) + 1).sum();
    total as usize + order.magnitude()
}

/// Writes `v` as a non-negative integer combination of characteristic
/// vectors of `basis`. Returns multiplicities keyed by basis index.
pub fn brute_cone_decompose(v: &[i64], basis: &[ElementSet]) -> Result<Option<BTreeMap<usize, u64>>> {
    if let Some(index) = v.iter().position(|&c| c < 0) {
        return Err(Error::NegativeLength { index });
    }
    let mut order: Vec<usize> = (0..basis.len()).filter(|&k| !basis[k].is_empty()).collect();
    order.sort_by_key(|&k| (std::cmp::Reverse(basis[k].len()), k));
    let mut dead: HashSet<Vec<i64>> = HashSet::new();
    let mut picks = Vec::new();
    let mut residual = v.to_vec();
    if !decompose(&mut residual, basis, &order, &mut dead, &mut picks) {
        return Ok(None);
    }
    let mut coefficients = BTreeMap::new();
    for k in picks {
        *coefficients.entry(k).or_insert(0) += 1;
    }
    Ok(Some(coefficients))
}

fn decompose(
    residual: &mut Vec<i64>,
    basis: &[ElementSet],
    order: &[usize],
    dead: &mut HashSet<Vec<i64>>,
    picks: &mut Vec<usize>,
) -> bool {
    let Some(x) = residual.iter().position(|&c| c > 0) else {
        return true;
    };
    if dead.contains(residual.as_slice()) {
        return false;
    }
    for &k in order {
        let set = &basis[k];
        if !set.contains(x) || set.iter().any(|y| y >= residual.len() || residual[y] == 0) {
            continue;
        }
        for y in set {
            residual[y] -= 1;
        }
        picks.push(k);
        if decompose(residual, basis, order, dead, picks) {
            return true;
        }
        picks.pop();
        for y in set {
            residual[y] += 1;
        }
    }
    dead.insert(residual.clone());
    false
}

/// `n` intervals with endpoints drawn uniformly from `0..=2n`, seeded.
pub fn random_representation(n: usize, seed: u64) -> IntervalRepresentation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let top = 2 * n as i64;
    let intervals: Vec<(i64, i64)> = (0..n)
        .map(|_| {
            let (a, b) = (rng.gen_range(0..=top), rng.gen_range(0..=top));
            (a.min(b), a.max(b))
        })
        .collect();
    IntervalRepresentation::new(&intervals).expect("sorted endpoints are well-formed")
}

pub fn random_interval_order(n: usize, seed: u64) -> IntervalOrder {
    random_representation(n, seed).order()
}
