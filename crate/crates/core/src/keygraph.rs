//! The blue/red key graph on the length variables.
//!
//! A blue arc `x → y` stands for `ℓ_x + ρ_x + 1 ≤ ℓ_y` (a slack-zero cover
//! pair), a red arc `x → y` for `ℓ_x ≤ ℓ_y + ρ_y` (a sharp pair) and a red
//! loop at `x` for `0 ≤ ρ_x` (a contractible element).

use std::fmt::Write as _;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::canonical::{classify_slack_zero, CanonicalRepresentation, SlackZeroClassification};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ArcColor {
    Blue,
    Red,
}

impl ArcColor {
    pub fn name(self) -> &'static str {
        match self {
            ArcColor::Blue => "blue",
            ArcColor::Red => "red",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arc {
    pub from: usize,
    pub to: usize,
    pub color: ArcColor,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KeyGraph {
    n: usize,
    // Sorted by (from, to, color).
    arcs: Vec<Arc>,
    out: Vec<Vec<Arc>>,
}

impl KeyGraph {
    pub fn from_arcs(n: usize, arcs: impl IntoIterator<Item = Arc>) -> Self {
        let mut arcs: Vec<Arc> = arcs.into_iter().collect();
        arcs.sort();
        arcs.dedup();
        let mut out = vec![Vec::new(); n];
        for &arc in &arcs {
            out[arc.from].push(arc);
        }
        Self { n, arcs, out }
    }

    pub fn build(canon: &CanonicalRepresentation) -> Self {
        Self::from_classification(canon.len(), &classify_slack_zero(canon))
    }

    pub fn from_classification(n: usize, zero: &SlackZeroClassification) -> Self {
        let loops = zero.contractible.iter().map(|x| Arc {
            from: x,
            to: x,
            color: ArcColor::Red,
        });
        let blue = zero.cover_pairs.iter().map(|&(from, to)| Arc {
            from,
            to,
            color: ArcColor::Blue,
        });
        let red = zero.sharp_pairs.iter().map(|&(from, to)| Arc {
            from,
            to,
            color: ArcColor::Red,
        });
        Self::from_arcs(n, loops.chain(blue).chain(red))
    }

    /// Recovers the slack-zero classification the graph was built from.
    pub fn classification(&self) -> SlackZeroClassification {
        let mut zero = SlackZeroClassification::default();
        for arc in &self.arcs {
            match (arc.color, arc.from == arc.to) {
                (ArcColor::Red, true) => {
                    zero.contractible.insert(arc.from);
                }
                (ArcColor::Red, false) => zero.sharp_pairs.push((arc.from, arc.to)),
                (ArcColor::Blue, _) => zero.cover_pairs.push((arc.from, arc.to)),
            }
        }
        zero
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn out_arcs(&self, x: usize) -> &[Arc] {
        &self.out[x]
    }

    pub fn has_arc(&self, from: usize, to: usize, color: ArcColor) -> bool {
        self.out[from].iter().any(|a| a.to == to && a.color == color)
    }

    pub fn loops(&self) -> impl Iterator<Item = usize> + '_ {
        self.arcs.iter().filter(|a| a.from == a.to).map(|a| a.from)
    }

    pub fn arcs_of_color(&self, color: ArcColor) -> impl Iterator<Item = &Arc> + '_ {
        self.arcs
            .iter()
            .filter(move |a| a.color == color && a.from != a.to)
    }

    pub fn to_dot(&self) -> String {
        let mut dot = String::from("digraph key_graph {\n");
        for x in 0..self.n {
            let _ = writeln!(dot, "  {} [label=\"rho_{}\"];", x + 1, x + 1);
        }
        for arc in &self.arcs {
            let _ = writeln!(
                dot,
                "  {} -> {} [color=\"{}\"];",
                arc.from + 1,
                arc.to + 1,
                arc.color.name()
            );
        }
        dot.push_str("}\n");
        dot
    }

    /// Plain listing, one arc per line, `x -> y color`.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        for arc in &self.arcs {
            let _ = writeln!(out, "{:>3} -> {:<3} {}", arc.from + 1, arc.to + 1, arc.color.name());
        }
        out
    }
}

impl Serialize for KeyGraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let arcs: Vec<(usize, usize, ArcColor)> = self
            .arcs
            .iter()
            .map(|a| (a.from + 1, a.to + 1, a.color))
            .collect();
        let mut s = serializer.serialize_struct("KeyGraph", 2)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("arcs", &arcs)?;
        s.end()
    }
}
