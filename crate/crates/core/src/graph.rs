//! Small undirected graphs: induced cycles, short chords, cliques and
//! colorings. Sized for exact search on graphs with a few dozen vertices.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::set::ElementSet;

pub const DEFAULT_HOLE_CAP: usize = 12;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<ElementSet>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        Self {
            adj: vec![ElementSet::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// The cycle `0 - 1 - … - (n-1) - 0`.
    pub fn cycle(n: usize) -> Self {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(ElementSet::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &ElementSet {
        &self.adj[v]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.vertex_count())
            .flat_map(|u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    pub fn complement(&self) -> Self {
        let n = self.vertex_count();
        let mut g = Self::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Subgraph induced on `vertices`; vertex `i` of the result is
    /// `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut g = Self::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// `true` when `cycle` (in order) induces exactly a cycle.
    pub fn is_induced_cycle(&self, cycle: &[usize]) -> bool {
        let k = cycle.len();
        k >= 3
            && (0..k).all(|i| {
                (i + 1..k).all(|j| {
                    let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                    self.has_edge(cycle[i], cycle[j]) == consecutive
                })
            })
    }

    pub fn to_dot(&self, name: &str, label: impl Fn(usize) -> String) -> String {
        let mut dot = format!("graph {name} {{\n");
        for v in 0..self.vertex_count() {
            let _ = writeln!(dot, "  {} [label=\"{}\"];", v + 1, label(v));
        }
        for (u, v) in self.edges() {
            let _ = writeln!(dot, "  {} -- {};", u + 1, v + 1);
        }
        dot.push_str("}\n");
        dot
    }

    /// Size of a largest clique.
    pub fn clique_number(&self) -> usize {
        fn grow(g: &SimpleGraph, size: usize, candidates: ElementSet, best: &mut usize) {
            if candidates.is_empty() {
                *best = (*best).max(size);
                return;
            }
            if size + candidates.len() <= *best {
                return;
            }
            let mut rest = candidates;
            while let Some(v) = rest.first() {
                if size + rest.len() <= *best {
                    return;
                }
                rest.remove(v);
                grow(g, size + 1, rest.intersection(&g.adj[v]), best);
            }
        }
        let mut best = 0;
        grow(self, 0, ElementSet::full(self.vertex_count()), &mut best);
        best
    }

    /// Smallest number of colors in a proper coloring.
    pub fn chromatic_number(&self) -> usize {
        let n = self.vertex_count();
        if n == 0 {
            return 0;
        }
        // Color high-degree vertices first so conflicts surface early.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(self.adj[v].len()), v));
        let mut k = self.clique_number().max(1);
        loop {
            let mut color = vec![usize::MAX; n];
            if self.color_with(&order, 0, k, 0, &mut color) {
                return k;
            }
            k += 1;
        }
    }

    fn color_with(
        &self,
        order: &[usize],
        depth: usize,
        k: usize,
        used: usize,
        color: &mut [usize],
    ) -> bool {
        let Some(&v) = order.get(depth) else {
            return true;
        };
        // A fresh color beyond `used` is symmetric to any other fresh one.
        for c in 0..k.min(used + 1) {
            if self.adj[v].iter().all(|w| color[w] != c) {
                color[v] = c;
                if self.color_with(order, depth + 1, k, used.max(c + 1), color) {
                    return true;
                }
                color[v] = usize::MAX;
            }
        }
        false
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
    Any,
}

impl Parity {
    fn admits(self, k: usize) -> bool {
        match self {
            Parity::Odd => k % 2 == 1,
            Parity::Even => k.is_multiple_of(2),
            Parity::Any => true,
        }
    }
}

/// What kind of induced cycle to look for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HoleQuery {
    /// Shortest admissible cycle length (at least 4).
    pub min_len: usize,
    /// Exact length, if any.
    pub exact: Option<usize>,
    pub parity: Parity,
    /// Search in the complement, which turns holes into antiholes.
    pub in_complement: bool,
    /// Longest induced path the search will grow.
    pub cap: usize,
}

impl HoleQuery {
    pub fn odd_holes(cap: usize) -> Self {
        Self {
            min_len: 5,
            exact: None,
            parity: Parity::Odd,
            in_complement: false,
            cap,
        }
    }

    pub fn odd_antiholes(cap: usize) -> Self {
        Self {
            in_complement: true,
            ..Self::odd_holes(cap)
        }
    }

    pub fn of_length(k: usize, in_complement: bool) -> Self {
        Self {
            min_len: k.max(4),
            exact: Some(k),
            parity: Parity::Any,
            in_complement,
            cap: k,
        }
    }

    fn admits(&self, k: usize) -> bool {
        k >= self.min_len.max(4) && self.exact.is_none_or(|e| e == k) && self.parity.admits(k)
    }

    fn longest(&self) -> usize {
        self.exact.unwrap_or(self.cap).min(self.cap)
    }
}

/// Looks for an induced cycle matching `query`.
///
/// `Ok(None)` means the search was exhaustive. If the length cap cut off
/// some induced path that might still have closed into a matching cycle,
/// the result is [`Error::SearchBoundExceeded`] instead.
pub fn find_hole(graph: &SimpleGraph, query: &HoleQuery) -> Result<Option<Vec<usize>>> {
    let complement;
    let g = if query.in_complement {
        complement = graph.complement();
        &complement
    } else {
        graph
    };
    let mut truncated = false;
    for s in 0..g.vertex_count() {
        let mut path = vec![s];
        if let Some(hole) = grow_hole(g, query, &mut path, &mut truncated) {
            return Ok(Some(hole));
        }
    }
    if truncated {
        Err(Error::SearchBoundExceeded(query.cap))
    } else {
        Ok(None)
    }
}

/// Extends an induced path whose first vertex is the smallest one on it.
fn grow_hole(
    g: &SimpleGraph,
    query: &HoleQuery,
    path: &mut Vec<usize>,
    truncated: &mut bool,
) -> Option<Vec<usize>> {
    let s = path[0];
    let last = *path.last().expect("path is never empty");
    let k = path.len();
    for w in g.adj[last].iter().filter(|&w| w > s) {
        if path.contains(&w) {
            continue;
        }
        let inner_chord = path.iter().take(k - 1).skip(1).any(|&p| g.has_edge(p, w));
        if inner_chord {
            continue;
        }
        if k >= 2 && g.has_edge(s, w) {
            // Closing at w; orient so each cycle is reported once.
            if k + 1 >= 4 && path[1] < w && query.admits(k + 1) {
                let mut hole = path.clone();
                hole.push(w);
                return Some(hole);
            }
            continue;
        }
        if k + 1 >= query.longest() {
            // Length k + 1 is the cap; only a closing vertex could still help.
            *truncated |= k + 2 <= g.vertex_count() && query.exact.is_none();
            continue;
        }
        path.push(w);
        let found = grow_hole(g, query, path, truncated);
        path.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Finds an odd cycle of length at least 5 with no chord between two
/// vertices at distance two along it, searching cycles up to `max_len`.
///
/// `Ok(None)` means none exists; [`Error::SearchBoundExceeded`] means the
/// bound cut the search short.
pub fn check_short_chorded(graph: &SimpleGraph, max_len: usize) -> Result<Option<Vec<usize>>> {
    let mut truncated = false;
    for s in 0..graph.vertex_count() {
        let mut path = vec![s];
        if let Some(c) = grow_unchorded(graph, max_len, &mut path, &mut truncated) {
            return Ok(Some(c));
        }
    }
    if truncated {
        Err(Error::SearchBoundExceeded(max_len))
    } else {
        Ok(None)
    }
}

fn grow_unchorded(
    g: &SimpleGraph,
    max_len: usize,
    path: &mut Vec<usize>,
    truncated: &mut bool,
) -> Option<Vec<usize>> {
    let s = path[0];
    let k = path.len();
    let last = path[k - 1];
    for w in g.adj[last].iter().filter(|&w| w > s) {
        if path.contains(&w) {
            continue;
        }
        if k >= 2 && g.has_edge(path[k - 2], w) {
            continue;
        }
        let len = k + 1;
        if len >= 5 && len % 2 == 1 && g.has_edge(w, s) && path[1] < w {
            // Wrap-around distance-two pairs: (path[k-1], s) and (w, path[1]).
            if !g.has_edge(last, s) && !g.has_edge(w, path[1]) {
                let mut cycle = path.clone();
                cycle.push(w);
                return Some(cycle);
            }
        }
        if len >= max_len {
            *truncated |= len + 2 <= g.vertex_count();
            continue;
        }
        path.push(w);
        let found = grow_unchorded(g, max_len, path, truncated);
        path.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

/// No odd hole and no odd antihole, searched up to `cap`.
pub fn is_berge(graph: &SimpleGraph, cap: usize) -> Result<bool> {
    Ok(find_hole(graph, &HoleQuery::odd_holes(cap))?.is_none()
        && find_hole(graph, &HoleQuery::odd_antiholes(cap))?.is_none())
}
