//! The intersection graph of Hilbert sets: hole and antihole searches,
//! clique and chromatic numbers, and weighted independent sets.

use ordlen::canonical::compute_canonical;
use ordlen::graph::{check_short_chorded, find_hole, HoleQuery, DEFAULT_HOLE_CAP};
use ordlen::hilbert::{extender_graph, DEFAULT_EXTENDER_LIMIT};
use ordlen::io::load_order;
use ordlen::set::ElementSet;

fn main() -> Result<(), ordlen::error::Error> {
    let p = load_order(include_str!("../fixtures/pd.json"))?.order;
    let g = extender_graph(&compute_canonical(&p), DEFAULT_EXTENDER_LIMIT)?;
    println!("{} vertices, {} edges", g.sets.len(), g.graph.edge_count());

    let hole = find_hole(&g.graph, &HoleQuery::odd_holes(DEFAULT_HOLE_CAP))?;
    let anti = find_hole(&g.graph, &HoleQuery::odd_antiholes(DEFAULT_HOLE_CAP))?;
    println!("odd hole {hole:?}, odd antihole {anti:?}");
    println!("clique number {}, chromatic number {}", g.graph.clique_number(), g.graph.chromatic_number());

    if let Some(c6) = find_hole(&g.graph, &HoleQuery::of_length(6, true))? {
        let sets: Vec<String> = c6.iter().map(|&v| g.sets[v].to_string()).collect();
        println!("the complement contains the induced 6-cycle {}", sets.join(" "));
    }
    let every = check_short_chorded(&g.graph, g.sets.len())?;
    println!("every odd cycle has a short chord: {}", every.is_none());

    let s = ElementSet::from_labels(&[3, 4, 7]);
    let (weight, picked) = g.max_weight_independent_set(Some(&s));
    let picked: Vec<String> = picked.iter().map(|&v| g.sets[v].to_string()).collect();
    println!("inside {s}: weight {weight} from {}", picked.join(" "));
    Ok(())
}
