//! Interval representations, the canonical representation and the linear
//! systems read off from it.

use std::collections::BTreeSet;
use std::ops::Deref;

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::order::IntervalOrder;
use crate::set::ElementSet;

/// Which side of a gap a collapse is justified from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

/// Closed integer intervals `[ℓ_x, r_x]` with `0 ≤ ℓ_x ≤ r_x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntervalRepresentation {
    left: Vec<i64>,
    right: Vec<i64>,
}

impl IntervalRepresentation {
    pub fn new(intervals: &[(i64, i64)]) -> Result<Self> {
        for (index, &(left, right)) in intervals.iter().enumerate() {
            if left < 0 || left > right {
                return Err(Error::MalformedInterval { index, left, right });
            }
        }
        Ok(Self {
            left: intervals.iter().map(|iv| iv.0).collect(),
            right: intervals.iter().map(|iv| iv.1).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.left.len()
    }

    pub fn is_empty(&self) -> bool {
        self.left.is_empty()
    }

    pub fn left(&self) -> &[i64] {
        &self.left
    }

    pub fn right(&self) -> &[i64] {
        &self.right
    }

    pub fn interval(&self, x: usize) -> (i64, i64) {
        (self.left[x], self.right[x])
    }

    pub fn intervals(&self) -> Vec<(i64, i64)> {
        (0..self.len()).map(|x| self.interval(x)).collect()
    }

    /// The length vector `ρ_x = r_x − ℓ_x`.
    pub fn lengths(&self) -> Vec<i64> {
        self.left.iter().zip(&self.right).map(|(l, r)| r - l).collect()
    }

    /// `x ≺ y` iff `r_x < ℓ_y`.
    pub fn precedes(&self, x: usize, y: usize) -> bool {
        self.right[x] < self.left[y]
    }

    /// The interval order this family of intervals represents.
    pub fn order(&self) -> IntervalOrder {
        let down = (0..self.len())
            .map(|y| (0..self.len()).filter(|&x| self.precedes(x, y)).collect())
            .collect();
        IntervalOrder::from_down_sets(down)
    }

    pub fn represents(&self, order: &IntervalOrder) -> bool {
        self.len() == order.len()
            && (0..self.len()).all(|x| {
                (0..self.len()).all(|y| self.precedes(x, y) == order.precedes(x, y))
            })
    }

    /// Sorted distinct endpoint values.
    pub fn endpoints(&self) -> Vec<i64> {
        let set: BTreeSet<i64> = self.left.iter().chain(&self.right).copied().collect();
        set.into_iter().collect()
    }

    fn is_left_endpoint(&self, p: i64) -> bool {
        self.left.contains(&p)
    }

    fn is_right_endpoint(&self, p: i64) -> bool {
        self.right.contains(&p)
    }

    /// Moves every endpoint `≥ from` down by `by`.
    fn shift_down_from(&self, from: i64, by: i64) -> Self {
        let shift = |p: i64| if p >= from { p - by } else { p };
        Self {
            left: self.left.iter().map(|&p| shift(p)).collect(),
            right: self.right.iter().map(|&p| shift(p)).collect(),
        }
    }

    fn translated_to_zero(&self) -> Self {
        let low = self.left.iter().copied().min().unwrap_or(0);
        self.shift_down_from(i64::MIN, low)
    }

    /// Slack of the pair `(x, y)`: `ℓ_y − r_x − 1` when `x ≺ y`,
    /// `r_y − ℓ_x` when `x ∥ y`, and `r_x − ℓ_x` when `x = y`.
    pub fn slack(&self, x: usize, y: usize) -> Result<i64> {
        if x == y {
            Ok(self.right[x] - self.left[x])
        } else if self.precedes(y, x) {
            Err(Error::UndefinedSlack { x, y })
        } else if self.precedes(x, y) {
            Ok(self.left[y] - self.right[x] - 1)
        } else {
            Ok(self.right[y] - self.left[x])
        }
    }
}

impl Serialize for IntervalRepresentation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<[i64; 2]> = self.intervals().into_iter().map(|(l, r)| [l, r]).collect();
        pairs.serialize(serializer)
    }
}

/// The representation with endpoints `0..m` in which every level is both
/// a left and a right endpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalRepresentation {
    pub rep: IntervalRepresentation,
    pub magnitude: usize,
}

impl Deref for CanonicalRepresentation {
    type Target = IntervalRepresentation;

    fn deref(&self) -> &IntervalRepresentation {
        &self.rep
    }
}

impl Serialize for CanonicalRepresentation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("CanonicalRepresentation", 3)?;
        s.serialize_field("magnitude", &self.magnitude)?;
        s.serialize_field("intervals", &self.rep)?;
        s.serialize_field("lengths", &self.rep.lengths())?;
        s.end()
    }
}

impl CanonicalRepresentation {
    /// `true` when every level `0..m` is both a left and a right endpoint
    /// and nothing lies outside that range.
    pub fn satisfies_level_criterion(rep: &IntervalRepresentation) -> bool {
        let m = rep.endpoints().len() as i64;
        rep.endpoints() == (0..m).collect::<Vec<_>>()
            && (0..m).all(|p| rep.is_left_endpoint(p) && rep.is_right_endpoint(p))
    }
}

/// Left endpoints are down-set ranks, right endpoints are up-set ranks.
pub fn compute_canonical(order: &IntervalOrder) -> CanonicalRepresentation {
    let left = order.down_ranks();
    let right = order.up_ranks();
    let intervals: Vec<(i64, i64)> = left
        .into_iter()
        .zip(right)
        .map(|(l, r)| (l as i64, r as i64))
        .collect();
    CanonicalRepresentation {
        rep: IntervalRepresentation::new(&intervals).expect("ranks give valid intervals"),
        magnitude: order.magnitude(),
    }
}

/// Collapses the gap between consecutive endpoints `i < j`.
///
/// When the side condition holds (`Left`: `i` is not a right endpoint;
/// `Right`: `j` is not a left endpoint) the two levels are merged. When it
/// fails but the gap is wider than one unit, the gap is shrunk to a single
/// unit instead. Endpoints at or beyond `j` move down in both cases.
pub fn collapse_gap(
    rep: &IntervalRepresentation,
    i: i64,
    j: i64,
    side: Side,
) -> Result<IntervalRepresentation> {
    let points = rep.endpoints();
    let consecutive = points.windows(2).any(|w| w[0] == i && w[1] == j);
    if !consecutive {
        return Err(Error::NotAGap { i, j });
    }
    let mergeable = match side {
        Side::Left => !rep.is_right_endpoint(i),
        Side::Right => !rep.is_left_endpoint(j),
    };
    if mergeable {
        Ok(rep.shift_down_from(j, j - i))
    } else if j - i >= 2 {
        Ok(rep.shift_down_from(j, j - i - 1))
    } else {
        Err(Error::SideConditionViolated { i, j, side })
    }
}

/// Collapses the leftmost collapsible gap until none is left.
pub fn collapse_to_canonical(rep: &IntervalRepresentation) -> CanonicalRepresentation {
    let mut current = rep.translated_to_zero();
    'outer: loop {
        let points = current.endpoints();
        for w in points.windows(2) {
            for side in [Side::Left, Side::Right] {
                if let Ok(next) = collapse_gap(&current, w[0], w[1], side) {
                    current = next;
                    continue 'outer;
                }
            }
        }
        let magnitude = current.endpoints().len();
        return CanonicalRepresentation {
            rep: current,
            magnitude,
        };
    }
}

/// Slack-zero pairs of the canonical representation, split by kind.
/// Pairs are 0-based and sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SlackZeroClassification {
    pub contractible: ElementSet,
    pub cover_pairs: Vec<(usize, usize)>,
    pub sharp_pairs: Vec<(usize, usize)>,
}

pub fn classify_slack_zero(canon: &CanonicalRepresentation) -> SlackZeroClassification {
    let (l, r) = (canon.left(), canon.right());
    let n = canon.len();
    let mut out = SlackZeroClassification::default();
    for x in 0..n {
        if l[x] == r[x] {
            out.contractible.insert(x);
        }
        for y in 0..n {
            if l[y] == r[x] + 1 {
                out.cover_pairs.push((x, y));
            }
            if x != y && l[x] == r[y] {
                out.sharp_pairs.push((x, y));
            }
        }
    }
    out
}

/// Which polyhedron a [`LinearSystem`] describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SystemKind {
    /// All `(ℓ, r, ρ)` vectors of interval representations.
    Full,
    /// Facet rows over the `(ℓ, r)` location variables.
    Location,
}

/// One row `Σ coef·var ≤ rhs`; terms are `(variable index, coefficient)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub terms: Vec<(usize, i64)>,
    pub rhs: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSystem {
    pub kind: SystemKind,
    pub vars: Vec<String>,
    pub rows: Vec<Row>,
}

impl LinearSystem {
    /// Dense coefficient matrix, one row per inequality.
    pub fn matrix(&self) -> Vec<Vec<i64>> {
        self.rows
            .iter()
            .map(|row| {
                let mut dense = vec![0; self.vars.len()];
                for &(v, c) in &row.terms {
                    dense[v] = c;
                }
                dense
            })
            .collect()
    }

    pub fn rhs(&self) -> Vec<i64> {
        self.rows.iter().map(|row| row.rhs).collect()
    }

    /// Per-row `(lhs, rhs)` at a point.
    pub fn evaluate(&self, point: &[i64]) -> Vec<(i64, i64)> {
        self.rows
            .iter()
            .map(|row| (row.terms.iter().map(|&(v, c)| c * point[v]).sum(), row.rhs))
            .collect()
    }

    pub fn is_satisfied(&self, point: &[i64]) -> bool {
        self.evaluate(point).into_iter().all(|(lhs, rhs)| lhs <= rhs)
    }

    pub fn is_tight(&self, point: &[i64]) -> bool {
        self.evaluate(point).into_iter().all(|(lhs, rhs)| lhs == rhs)
    }

    /// Human-readable rows such as `-l_2 + r_1 <= -1`.
    pub fn render_rows(&self) -> Vec<String> {
        self.rows
            .iter()
            .map(|row| {
                let mut text = String::new();
                for (k, &(v, c)) in row.terms.iter().enumerate() {
                    let sign = match (k, c < 0) {
                        (0, true) => "-",
                        (0, false) => "",
                        (_, true) => " - ",
                        (_, false) => " + ",
                    };
                    text.push_str(sign);
                    if c.abs() != 1 {
                        text.push_str(&c.abs().to_string());
                    }
                    text.push_str(&self.vars[v]);
                }
                format!("{text} <= {}", row.rhs)
            })
            .collect()
    }
}

impl Serialize for LinearSystem {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct Coef<'a>(&'a LinearSystem, &'a Row);
        impl Serialize for Coef<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut map = s.serialize_map(Some(self.1.terms.len()))?;
                for &(v, c) in &self.1.terms {
                    map.serialize_entry(&self.0.vars[v], &c)?;
                }
                map.end()
            }
        }
        #[derive(Serialize)]
        struct RowOut<'a> {
            coef: Coef<'a>,
            rhs: i64,
        }
        let rows: Vec<RowOut<'_>> = self
            .rows
            .iter()
            .map(|row| RowOut {
                coef: Coef(self, row),
                rhs: row.rhs,
            })
            .collect();
        let mut s = serializer.serialize_struct("LinearSystem", 3)?;
        s.serialize_field("kind", &self.kind)?;
        s.serialize_field("vars", &self.vars)?;
        s.serialize_field("rows", &rows)?;
        s.end()
    }
}

fn row(terms: &[(usize, i64)], rhs: i64) -> Row {
    let mut terms = terms.to_vec();
    terms.sort_unstable();
    Row { terms, rhs }
}

/// Emits the representation system over `(ℓ_1, r_1, …, ℓ_n, r_n, ρ_1, …, ρ_n)`
/// or the facet system of the location polyhedron over `(ℓ_1, r_1, …)`.
///
/// Rows come grouped by family and, inside a family, ordered by `(x, y)`.
pub fn emit_systems(order: &IntervalOrder, kind: SystemKind) -> LinearSystem {
    let n = order.len();
    let (l, r, rho) = (|x: usize| 2 * x, |x: usize| 2 * x + 1, |x: usize| 2 * n + x);
    let mut vars = Vec::new();
    for x in 1..=n {
        vars.push(format!("l_{x}"));
        vars.push(format!("r_{x}"));
    }
    let mut rows = Vec::new();
    match kind {
        SystemKind::Full => {
            vars.extend((1..=n).map(|x| format!("rho_{x}")));
            for (x, y) in order.relations() {
                rows.push(row(&[(l(y), -1), (r(x), 1)], -1));
            }
            for x in 0..n {
                for y in 0..n {
                    if order.incomparable(x, y) {
                        rows.push(row(&[(l(x), 1), (r(y), -1)], 0));
                    }
                }
            }
            for x in 0..n {
                rows.push(row(&[(l(x), 1), (r(x), -1), (rho(x), 1)], 0));
            }
            for x in 0..n {
                rows.push(row(&[(l(x), -1), (r(x), 1), (rho(x), -1)], 0));
            }
            for x in 0..n {
                rows.push(row(&[(l(x), 1), (r(x), -1)], 0));
            }
        }
        SystemKind::Location => {
            let zero = classify_slack_zero(&compute_canonical(order));
            for x in order.minimal_elements().iter() {
                rows.push(row(&[(l(x), -1)], 0));
            }
            for &(x, y) in &zero.cover_pairs {
                rows.push(row(&[(l(y), -1), (r(x), 1)], -1));
            }
            for &(x, y) in &zero.sharp_pairs {
                rows.push(row(&[(l(x), 1), (r(y), -1)], 0));
            }
            for x in zero.contractible.iter() {
                rows.push(row(&[(l(x), 1), (r(x), -1)], 0));
            }
        }
    }
    LinearSystem { kind, vars, rows }
}

/// The location vector `(ℓ_1, r_1, …, ℓ_n, r_n)` of a representation.
pub fn location_vector(rep: &IntervalRepresentation) -> Vec<i64> {
    rep.intervals().into_iter().flat_map(|(l, r)| [l, r]).collect()
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn determinant(matrix: &[Vec<i64>]) -> i128 {
    let k = matrix.len();
    let mut a: Vec<Vec<i128>> = matrix
        .iter()
        .map(|row| row.iter().map(|&v| i128::from(v)).collect())
        .collect();
    let mut sign = 1;
    let mut prev = 1i128;
    for p in 0..k {
        if a[p][p] == 0 {
            match (p + 1..k).find(|&q| a[q][p] != 0) {
                Some(q) => {
                    a.swap(p, q);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in p + 1..k {
            for j in p + 1..k {
                a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) / prev;
            }
        }
        prev = a[p][p];
    }
    if k == 0 {
        1
    } else {
        sign * a[k - 1][k - 1]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rep(intervals: &[(i64, i64)]) -> IntervalRepresentation {
        IntervalRepresentation::new(intervals).unwrap()
    }

    fn c_a() -> IntervalRepresentation {
        rep(&[(0, 0), (2, 2), (0, 1), (1, 2), (4, 4), (1, 3), (3, 4)])
    }

    #[test]
    fn chain_and_antichain_canonical() {
        let c = compute_canonical(&IntervalOrder::chain(3));
        assert_eq!(c.intervals(), vec![(0, 0), (1, 1), (2, 2)]);
        assert_eq!(c.magnitude, 3);
        let a = compute_canonical(&IntervalOrder::antichain(4));
        assert_eq!(a.intervals(), vec![(0, 0); 4]);
        assert_eq!(a.magnitude, 1);
    }

    #[test]
    fn canonical_of_interval_family_is_fixed_point() {
        let c = c_a();
        let canon = compute_canonical(&c.order());
        assert_eq!(canon.rep, c);
        assert_eq!(canon.magnitude, 5);
        assert!(CanonicalRepresentation::satisfies_level_criterion(&c));
    }

    #[test]
    fn collapse_examples() {
        let wide = rep(&[(0, 0), (3, 3)]);
        assert_eq!(
            collapse_gap(&wide, 0, 3, Side::Left).unwrap().intervals(),
            vec![(0, 0), (1, 1)]
        );
        let lone = rep(&[(0, 2)]);
        assert_eq!(collapse_gap(&lone, 0, 2, Side::Right).unwrap().intervals(), vec![(0, 0)]);
        assert_eq!(
            collapse_gap(&wide, 0, 2, Side::Left),
            Err(Error::NotAGap { i: 0, j: 2 })
        );
        let chain = rep(&[(0, 0), (1, 1)]);
        assert_eq!(
            collapse_gap(&chain, 0, 1, Side::Right),
            Err(Error::SideConditionViolated { i: 0, j: 1, side: Side::Right })
        );
    }

    #[test]
    fn collapse_to_canonical_examples() {
        let c = collapse_to_canonical(&rep(&[(0, 1), (4, 6)]));
        assert_eq!(c.intervals(), vec![(0, 0), (1, 1)]);
        assert_eq!(collapse_to_canonical(&c_a()).rep, c_a());
        let shifted = rep(&[(3, 3), (3, 9)]);
        assert_eq!(collapse_to_canonical(&shifted).intervals(), vec![(0, 0), (0, 0)]);
    }

    #[test]
    fn slack_cases() {
        let c = c_a();
        assert_eq!(c.slack(5, 4), Ok(0));
        assert_eq!(c.slack(5, 2), Ok(0));
        assert_eq!(c.slack(6, 5), Ok(0));
        assert_eq!(c.slack(1, 1), Ok(0));
        assert_eq!(c.slack(1, 4), Ok(1));
        assert_eq!(c.slack(4, 1), Err(Error::UndefinedSlack { x: 4, y: 1 }));
    }

    #[test]
    fn antichain_classification() {
        let canon = compute_canonical(&IntervalOrder::antichain(3));
        let zero = classify_slack_zero(&canon);
        assert_eq!(zero.contractible, ElementSet::full(3));
        assert!(zero.cover_pairs.is_empty());
        assert_eq!(zero.sharp_pairs.len(), 6);
    }

    #[test]
    fn two_chain_location_system() {
        let sys = emit_systems(&IntervalOrder::chain(2), SystemKind::Location);
        assert_eq!(
            sys.render_rows(),
            vec!["-l_1 <= 0", "r_1 - l_2 <= -1", "l_1 - r_1 <= 0", "l_2 - r_2 <= 0"]
        );
        assert!(sys.is_tight(&[0, 0, 1, 1]));
    }

    #[test]
    fn single_element_full_system() {
        let sys = emit_systems(&IntervalOrder::antichain(1), SystemKind::Full);
        assert_eq!(sys.rows.len(), 3);
        assert_eq!(sys.vars, vec!["l_1", "r_1", "rho_1"]);
        let json = serde_json::to_string(&sys).unwrap();
        assert!(json.contains(r#"{"coef":{"l_1":1,"r_1":-1,"rho_1":1},"rhs":0}"#), "{json}");
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant(&[]), 1);
        assert_eq!(determinant(&[vec![2, 1], vec![1, 1]]), 1);
        assert_eq!(determinant(&[vec![0, 1], vec![1, 0]]), -1);
        assert_eq!(
            determinant(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]]),
            -3
        );
        assert_eq!(determinant(&[vec![1, 1], vec![1, 1]]), 0);
    }
}
