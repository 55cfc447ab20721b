//! Directed cycles of the key graph and the inequalities they induce.
//!
//! Each elementary cycle gives `γ + Σ_{A} ρ ≤ Σ_{B} ρ` where `γ` counts blue
//! arcs, `A` holds the vertices entered and left by blue arcs and `B` the
//! vertices entered and left by red arcs. Together these cut out the cone
//! of realizable length vectors.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::canonical::{compute_canonical, IntervalRepresentation};
use crate::error::{Error, Result};
use crate::keygraph::{ArcColor, KeyGraph};
use crate::order::IntervalOrder;
use crate::set::ElementSet;

pub const DEFAULT_CYCLE_LIMIT: usize = 1_000_000;

/// An elementary cycle, rotated so its smallest vertex comes first.
/// `colors[i]` is the color of the arc leaving `vertices[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DirectedCycle {
    vertices: Vec<usize>,
    colors: Vec<ArcColor>,
}

impl DirectedCycle {
    /// Builds a cycle from its arcs in traversal order and normalizes the
    /// rotation. Does not check the arcs against any graph.
    pub fn new(vertices: Vec<usize>, colors: Vec<ArcColor>) -> Result<Self> {
        let k = vertices.len();
        if k == 0 || colors.len() != k {
            return Err(Error::NotACycle);
        }
        let mut seen = ElementSet::new();
        if !vertices.iter().all(|&v| seen.insert(v)) {
            return Err(Error::NotACycle);
        }
        let start = (0..k).min_by_key(|&i| vertices[i]).unwrap_or(0);
        Ok(Self {
            vertices: (0..k).map(|i| vertices[(start + i) % k]).collect(),
            colors: (0..k).map(|i| colors[(start + i) % k]).collect(),
        })
    }

    /// Resolves arc colors from `graph`. Fails if some arc is missing or if
    /// the two colors are both present on one arc, which needs [`Self::new`].
    pub fn from_vertices(graph: &KeyGraph, vertices: &[usize]) -> Result<Self> {
        let k = vertices.len();
        let mut colors = Vec::with_capacity(k);
        for i in 0..k {
            let (from, to) = (vertices[i], vertices[(i + 1) % k]);
            if from >= graph.vertex_count() || to >= graph.vertex_count() {
                return Err(Error::NotACycle);
            }
            let found: Vec<ArcColor> = graph
                .out_arcs(from)
                .iter()
                .filter(|a| a.to == to)
                .map(|a| a.color)
                .collect();
            match found.as_slice() {
                [color] => colors.push(*color),
                _ => return Err(Error::NotACycle),
            }
        }
        Self::new(vertices.to_vec(), colors)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn colors(&self) -> &[ArcColor] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_loop(&self) -> bool {
        self.vertices.len() == 1
    }

    pub fn labels(&self) -> Vec<usize> {
        self.vertices.iter().map(|v| v + 1).collect()
    }

    fn arcs_exist_in(&self, graph: &KeyGraph) -> bool {
        let k = self.len();
        (0..k).all(|i| {
            let (from, to) = (self.vertices[i], self.vertices[(i + 1) % k]);
            from < graph.vertex_count() && graph.has_arc(from, to, self.colors[i])
        })
    }
}

impl Ord for DirectedCycle {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.vertices.cmp(&other.vertices))
            .then_with(|| self.colors.cmp(&other.colors))
    }
}

impl PartialOrd for DirectedCycle {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DirectedCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.labels().iter().map(ToString::to_string).collect();
        write!(f, "({})", labels.join(","))
    }
}

impl Serialize for DirectedCycle {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("DirectedCycle", 2)?;
        s.serialize_field("cycle", &self.labels())?;
        s.serialize_field("colors", &self.colors)?;
        s.end()
    }
}

/// Calls `emit` on every elementary cycle of `graph` (loops included),
/// each exactly once, and returns how many there were.
///
/// Loops come first, then the cycles through each start vertex `s` of the
/// subgraph on `s..n`, in Johnson's order. Vertex cycles running over
/// arcs that exist in both colors are emitted once per color choice.
pub fn for_each_cycle(
    graph: &KeyGraph,
    limit: usize,
    mut emit: impl FnMut(DirectedCycle),
) -> Result<usize> {
    let mut count = 0usize;
    let mut push = |cycle: DirectedCycle| -> Result<()> {
        count += 1;
        if count > limit {
            return Err(Error::CycleLimitExceeded(limit));
        }
        emit(cycle);
        Ok(())
    };
    for x in graph.loops() {
        push(DirectedCycle {
            vertices: vec![x],
            colors: vec![ArcColor::Red],
        })?;
    }
    let n = graph.vertex_count();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for arc in graph.arcs() {
        if arc.from != arc.to && adj[arc.from].last() != Some(&arc.to) {
            adj[arc.from].push(arc.to);
        }
    }
    let mut search = Johnson::new(&adj);
    for s in 0..n {
        if !search.restrict_to_component(s) {
            continue;
        }
        let mut failure = None;
        search.circuit(s, s, &mut |path: &[usize]| {
            for cycle in color_choices(graph, path) {
                if let Err(e) = push(cycle) {
                    failure = Some(e);
                    return false;
                }
            }
            true
        });
        if let Some(e) = failure {
            return Err(e);
        }
    }
    Ok(count)
}

/// All elementary cycles in `(length, vertex sequence)` order.
pub fn enumerate_cycles(graph: &KeyGraph, limit: usize) -> Result<Vec<DirectedCycle>> {
    let mut cycles = Vec::new();
    for_each_cycle(graph, limit, |c| cycles.push(c))?;
    cycles.sort();
    Ok(cycles)
}

fn color_choices(graph: &KeyGraph, path: &[usize]) -> Vec<DirectedCycle> {
    let k = path.len();
    let mut partial: Vec<Vec<ArcColor>> = vec![Vec::with_capacity(k)];
    for i in 0..k {
        let (from, to) = (path[i], path[(i + 1) % k]);
        let options: Vec<ArcColor> = graph
            .out_arcs(from)
            .iter()
            .filter(|a| a.to == to)
            .map(|a| a.color)
            .collect();
        partial = partial
            .into_iter()
            .flat_map(|prefix| {
                options.iter().map(move |&c| {
                    let mut next = prefix.clone();
                    next.push(c);
                    next
                })
            })
            .collect();
    }
    // The path starts at its smallest vertex already.
    partial
        .into_iter()
        .map(|colors| DirectedCycle {
            vertices: path.to_vec(),
            colors,
        })
        .collect()
}

/// Johnson's elementary circuit search over a simple digraph.
struct Johnson<'a> {
    adj: &'a [Vec<usize>],
    in_component: Vec<bool>,
    blocked: Vec<bool>,
    blocked_by: Vec<Vec<usize>>,
    stack: Vec<usize>,
}

impl<'a> Johnson<'a> {
    fn new(adj: &'a [Vec<usize>]) -> Self {
        let n = adj.len();
        Self {
            adj,
            in_component: vec![false; n],
            blocked: vec![false; n],
            blocked_by: vec![Vec::new(); n],
            stack: Vec::new(),
        }
    }

    /// Marks the strong component of `s` in the subgraph on `s..n`. Returns
    /// `false` when `s` lies on no cycle there.
    fn restrict_to_component(&mut self, s: usize) -> bool {
        let n = self.adj.len();
        let forward = self.reach(s, |v| self.adj[v].clone());
        let mut radj = vec![Vec::new(); n];
        for v in s..n {
            for &w in &self.adj[v] {
                if w >= s {
                    radj[w].push(v);
                }
            }
        }
        let backward = self.reach(s, |v| radj[v].clone());
        let mut nontrivial = false;
        for v in 0..n {
            self.in_component[v] = v >= s && forward[v] && backward[v];
            nontrivial |= v != s && self.in_component[v];
            self.blocked[v] = false;
            self.blocked_by[v].clear();
        }
        nontrivial
    }

    fn reach(&self, s: usize, next: impl Fn(usize) -> Vec<usize>) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        let mut todo = vec![s];
        seen[s] = true;
        while let Some(v) = todo.pop() {
            for w in next(v) {
                if w >= s && !seen[w] {
                    seen[w] = true;
                    todo.push(w);
                }
            }
        }
        seen
    }

    /// Returns whether a cycle through `v` was closed. `emit` returning
    /// `false` aborts the search.
    fn circuit(&mut self, s: usize, v: usize, emit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let mut closed = false;
        self.stack.push(v);
        self.blocked[v] = true;
        let adj = self.adj;
        for &w in &adj[v] {
            if !self.in_component[w] {
                continue;
            }
            if w == s {
                if !emit(&self.stack) {
                    self.in_component.iter_mut().for_each(|c| *c = false);
                    self.stack.pop();
                    return true;
                }
                closed = true;
            } else if !self.blocked[w] && self.circuit(s, w, emit) {
                closed = true;
            }
        }
        if closed {
            self.unblock(v);
        } else {
            for &w in &adj[v] {
                if self.in_component[w] && !self.blocked_by[w].contains(&v) {
                    self.blocked_by[w].push(v);
                }
            }
        }
        self.stack.pop();
        closed
    }

    fn unblock(&mut self, u: usize) {
        self.blocked[u] = false;
        for w in std::mem::take(&mut self.blocked_by[u]) {
            if self.blocked[w] {
                self.unblock(w);
            }
        }
    }
}

/// `gamma + Σ_{A} ρ ≤ Σ_{B} ρ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleInequality {
    pub gamma: i64,
    pub a: ElementSet,
    pub b: ElementSet,
}

impl CycleInequality {
    /// `Σ_B ρ − Σ_A ρ − γ`; negative means violated.
    pub fn margin(&self, rho: &[i64]) -> i64 {
        let sum = |s: &ElementSet| s.iter().map(|x| rho[x]).sum::<i64>();
        sum(&self.b) - sum(&self.a) - self.gamma
    }

    pub fn holds(&self, rho: &[i64]) -> bool {
        self.margin(rho) >= 0
    }
}

impl Ord for CycleInequality {
    fn cmp(&self, other: &Self) -> Ordering {
        self.gamma
            .cmp(&other.gamma)
            .then_with(|| self.b.cmp(&other.b))
            .then_with(|| self.a.cmp(&other.a))
    }
}

impl PartialOrd for CycleInequality {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CycleInequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = |s: &ElementSet| -> Vec<String> {
            s.labels().iter().map(|x| format!("rho_{x}")).collect()
        };
        let mut lhs = Vec::new();
        if self.gamma != 0 || self.a.is_empty() {
            lhs.push(self.gamma.to_string());
        }
        lhs.extend(terms(&self.a));
        let mut rhs = terms(&self.b);
        if rhs.is_empty() {
            rhs.push("0".into());
        }
        write!(f, "{} <= {}", lhs.join(" + "), rhs.join(" + "))
    }
}

impl Serialize for CycleInequality {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("CycleInequality", 3)?;
        s.serialize_field("gamma", &self.gamma)?;
        s.serialize_field("A", &self.a)?;
        s.serialize_field("B", &self.b)?;
        s.end()
    }
}

/// Reads the inequality of `cycle`, which must run over arcs of `graph`.
pub fn cycle_inequality(graph: &KeyGraph, cycle: &DirectedCycle) -> Result<CycleInequality> {
    if cycle.is_empty() || !cycle.arcs_exist_in(graph) {
        return Err(Error::NotACycle);
    }
    Ok(inequality_of(cycle))
}

fn inequality_of(cycle: &DirectedCycle) -> CycleInequality {
    let k = cycle.len();
    if k == 1 {
        return CycleInequality {
            gamma: 0,
            a: ElementSet::new(),
            b: ElementSet::singleton(cycle.vertices[0]),
        };
    }
    let mut ineq = CycleInequality {
        gamma: cycle.colors.iter().filter(|&&c| c == ArcColor::Blue).count() as i64,
        a: ElementSet::new(),
        b: ElementSet::new(),
    };
    for i in 0..k {
        let entering = cycle.colors[(i + k - 1) % k];
        match (entering, cycle.colors[i]) {
            (ArcColor::Blue, ArcColor::Blue) => ineq.a.insert(cycle.vertices[i]),
            (ArcColor::Red, ArcColor::Red) => ineq.b.insert(cycle.vertices[i]),
            _ => false,
        };
    }
    ineq
}

/// The cone of realizable length vectors, held as its apex and its
/// deduplicated cycle inequalities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthPolyhedron {
    pub apex: Vec<i64>,
    pub inequalities: Vec<CycleInequality>,
    /// For each inequality, the smallest cycle that induces it.
    pub witnesses: Vec<DirectedCycle>,
    pub cycle_count: usize,
}

impl Serialize for LengthPolyhedron {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("LengthPolyhedron", 3)?;
        s.serialize_field("apex", &self.apex)?;
        s.serialize_field("cycles", &self.cycle_count)?;
        s.serialize_field("inequalities", &self.inequalities)?;
        s.end()
    }
}

pub fn length_polyhedron(order: &IntervalOrder, limit: usize) -> Result<LengthPolyhedron> {
    let canon = compute_canonical(order);
    let graph = KeyGraph::build(&canon);
    let mut rows: BTreeMap<CycleInequality, DirectedCycle> = BTreeMap::new();
    let cycle_count = for_each_cycle(&graph, limit, |cycle| {
        let ineq = inequality_of(&cycle);
        match rows.get_mut(&ineq) {
            Some(best) if cycle < *best => *best = cycle,
            Some(_) => {}
            None => {
                rows.insert(ineq, cycle);
            }
        }
    })?;
    let (inequalities, witnesses) = rows.into_iter().unzip();
    Ok(LengthPolyhedron {
        apex: canon.lengths(),
        inequalities,
        witnesses,
        cycle_count,
    })
}

/// Outcome of a membership query: every stored inequality `rho` violates,
/// in stored order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Membership {
    pub member: bool,
    pub violated: Vec<CycleInequality>,
}

impl LengthPolyhedron {
    pub fn dimension(&self) -> usize {
        self.apex.len()
    }

    pub fn is_member(&self, rho: &[i64]) -> Result<Membership> {
        check_dimension(self.dimension(), rho)?;
        let violated: Vec<CycleInequality> = self
            .inequalities
            .iter()
            .filter(|ineq| !ineq.holds(rho))
            .cloned()
            .collect();
        Ok(Membership {
            member: violated.is_empty(),
            violated,
        })
    }

    pub fn is_tight_at_apex(&self) -> bool {
        self.inequalities.iter().all(|i| i.margin(&self.apex) == 0)
    }
}

fn check_dimension(expected: usize, rho: &[i64]) -> Result<()> {
    if rho.len() != expected {
        return Err(Error::DimensionMismatch {
            expected,
            found: rho.len(),
        });
    }
    Ok(())
}

/// A cycle whose inequality the requested lengths violate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InfeasibilityCertificate {
    pub cycle: DirectedCycle,
    pub inequality: CycleInequality,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Extension {
    Feasible(IntervalRepresentation),
    Infeasible(InfeasibilityCertificate),
}

/// Places intervals of lengths `rho` so that they represent `order`, or
/// explains why that is impossible.
///
/// Left endpoints are longest-path potentials from a virtual source under
/// the arc constraints `ℓ_y ≥ ℓ_x + ρ_x + 1` (blue) and `ℓ_y ≥ ℓ_x − ρ_y`
/// (red), which gives the componentwise smallest placement. A positive
/// cycle of this system is exactly a violated cycle inequality.
pub fn extend_to_location(order: &IntervalOrder, rho: &[i64]) -> Result<Extension> {
    let n = order.len();
    check_dimension(n, rho)?;
    let graph = KeyGraph::build(&compute_canonical(order));
    for x in graph.loops() {
        if rho[x] < 0 {
            let cycle = DirectedCycle {
                vertices: vec![x],
                colors: vec![ArcColor::Red],
            };
            let inequality = inequality_of(&cycle);
            return Ok(Extension::Infeasible(InfeasibilityCertificate { cycle, inequality }));
        }
    }
    let arcs: Vec<(usize, usize, i64, ArcColor)> = graph
        .arcs()
        .iter()
        .filter(|a| a.from != a.to)
        .map(|a| {
            let weight = match a.color {
                ArcColor::Blue => rho[a.from] + 1,
                ArcColor::Red => -rho[a.to],
            };
            (a.from, a.to, weight, a.color)
        })
        .collect();
    let mut dist = vec![0i64; n];
    let mut pred: Vec<Option<(usize, ArcColor)>> = vec![None; n];
    let mut last_updated = None;
    for _ in 0..=n {
        last_updated = None;
        for &(x, y, w, color) in &arcs {
            if dist[x] + w > dist[y] {
                dist[y] = dist[x] + w;
                pred[y] = Some((x, color));
                last_updated = Some(y);
            }
        }
        if last_updated.is_none() {
            break;
        }
    }
    let Some(mut v) = last_updated else {
        let intervals: Vec<(i64, i64)> = (0..n).map(|x| (dist[x], dist[x] + rho[x])).collect();
        let rep = IntervalRepresentation::new(&intervals)
            .expect("feasible potentials give well-formed intervals");
        debug_assert!(rep.represents(order));
        return Ok(Extension::Feasible(rep));
    };
    // Walking back n steps lands on the predecessor cycle.
    for _ in 0..n {
        v = pred[v].expect("updated vertices have predecessors").0;
    }
    let mut cycle_vertices = vec![v];
    let mut u = pred[v].expect("cycle vertices have predecessors").0;
    while u != v {
        cycle_vertices.push(u);
        u = pred[u].expect("cycle vertices have predecessors").0;
    }
    cycle_vertices.reverse();
    // The arc into each vertex carries the color recorded with its predecessor.
    let k = cycle_vertices.len();
    let colors: Vec<ArcColor> = (0..k)
        .map(|i| pred[cycle_vertices[(i + 1) % k]].expect("on cycle").1)
        .collect();
    let cycle = DirectedCycle::new(cycle_vertices, colors).expect("predecessor walk is elementary");
    let inequality = inequality_of(&cycle);
    debug_assert!(!inequality.holds(rho));
    Ok(Extension::Infeasible(InfeasibilityCertificate { cycle, inequality }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::compute_canonical;

    fn graph_of(order: &IntervalOrder) -> KeyGraph {
        KeyGraph::build(&compute_canonical(order))
    }

    #[test]
    fn antichain_cycles() {
        let g = graph_of(&IntervalOrder::antichain(3));
        let cycles = enumerate_cycles(&g, DEFAULT_CYCLE_LIMIT).unwrap();
        let lens: Vec<usize> = cycles.iter().map(DirectedCycle::len).collect();
        assert_eq!(lens, vec![1, 1, 1, 2, 2, 2, 3, 3]);
    }

    #[test]
    fn limit_is_enforced() {
        let g = graph_of(&IntervalOrder::antichain(3));
        assert_eq!(enumerate_cycles(&g, 5), Err(Error::CycleLimitExceeded(5)));
    }

    #[test]
    fn loop_inequality() {
        let g = graph_of(&IntervalOrder::antichain(1));
        let c = DirectedCycle::from_vertices(&g, &[0]).unwrap();
        let ineq = cycle_inequality(&g, &c).unwrap();
        assert_eq!(ineq.to_string(), "0 <= rho_1");
    }

    #[test]
    fn missing_arc_is_not_a_cycle() {
        let g = graph_of(&IntervalOrder::chain(2));
        assert_eq!(DirectedCycle::from_vertices(&g, &[0, 1]), Err(Error::NotACycle));
        let fake = DirectedCycle::new(vec![0, 1], vec![ArcColor::Blue, ArcColor::Blue]).unwrap();
        assert_eq!(cycle_inequality(&g, &fake), Err(Error::NotACycle));
    }

    #[test]
    fn rotation_is_normalized() {
        let c = DirectedCycle::new(vec![4, 2, 7], vec![ArcColor::Red, ArcColor::Blue, ArcColor::Red])
            .unwrap();
        assert_eq!(c.vertices(), &[2, 7, 4]);
        assert_eq!(c.colors(), &[ArcColor::Blue, ArcColor::Red, ArcColor::Red]);
        assert_eq!(c.to_string(), "(3,8,5)");
    }

    #[test]
    fn chain_polyhedron() {
        let q = length_polyhedron(&IntervalOrder::chain(2), DEFAULT_CYCLE_LIMIT).unwrap();
        assert_eq!(q.apex, vec![0, 0]);
        let text: Vec<String> = q.inequalities.iter().map(ToString::to_string).collect();
        assert_eq!(text, vec!["0 <= rho_1", "0 <= rho_2"]);
        assert!(q.is_member(&[3, 0]).unwrap().member);
        assert!(!q.is_member(&[-1, 0]).unwrap().member);
        assert!(matches!(
            q.is_member(&[0]),
            Err(Error::DimensionMismatch { expected: 2, found: 1 })
        ));
    }

    #[test]
    fn antichain_extension() {
        let p = IntervalOrder::antichain(3);
        match extend_to_location(&p, &[5, 5, 5]).unwrap() {
            Extension::Feasible(rep) => assert_eq!(rep.left(), &[0, 0, 0]),
            other => panic!("{other:?}"),
        }
        match extend_to_location(&p, &[1, -2, 0]).unwrap() {
            Extension::Infeasible(cert) => assert_eq!(cert.cycle.vertices(), &[1]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn inequality_json() {
        let ineq = CycleInequality {
            gamma: 2,
            a: ElementSet::from_labels(&[4]),
            b: ElementSet::from_labels(&[5, 6]),
        };
        assert_eq!(serde_json::to_string(&ineq).unwrap(), r#"{"gamma":2,"A":[4],"B":[5,6]}"#);
        assert_eq!(ineq.to_string(), "2 + rho_4 <= rho_5 + rho_6");
    }
}
