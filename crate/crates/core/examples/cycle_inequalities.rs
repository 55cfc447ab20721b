//! Elementary cycles of the key graph and the length inequalities they
//! produce. Together with non-negativity these cut out the length cone.

use ordlen::canonical::compute_canonical;
use ordlen::cycles::{cycle_inequality, enumerate_cycles, length_polyhedron, DEFAULT_CYCLE_LIMIT};
use ordlen::io::load_order;
use ordlen::keygraph::KeyGraph;

fn main() -> Result<(), ordlen::error::Error> {
    let p = load_order(include_str!("../fixtures/pb.json"))?.order;
    let g = KeyGraph::build(&compute_canonical(&p));

    for cycle in enumerate_cycles(&g, DEFAULT_CYCLE_LIMIT)? {
        println!("{:<14} {}", cycle.to_string(), cycle_inequality(&g, &cycle)?);
    }

    let q = length_polyhedron(&p, DEFAULT_CYCLE_LIMIT)?;
    println!("\napex {:?}, {} rows after deduplication", q.apex, q.inequalities.len());
    for row in &q.inequalities {
        println!("  {row}");
    }
    println!("every row tight at the apex: {}", q.is_tight_at_apex());
    Ok(())
}
