//! Deciding whether a length vector is realizable, three ways: by the cycle
//! inequalities, by longest-path placement, and by exhaustive search.

use ordlen::cycles::{extend_to_location, length_polyhedron, Extension, DEFAULT_CYCLE_LIMIT};
use ordlen::io::load_order;
use ordlen::oracle::{brute_member, generous_bound};

fn main() -> Result<(), ordlen::error::Error> {
    let p = load_order(include_str!("../fixtures/pb.json"))?.order;
    let q = length_polyhedron(&p, DEFAULT_CYCLE_LIMIT)?;

    for rho in [vec![0, 0, 0, 1, 2, 1, 1], vec![0, 0, 0, 1, 1, 1, 1], vec![2, 1, 0, 1, 4, 3, 1]] {
        let m = q.is_member(&rho)?;
        let searched = brute_member(&p, &rho, generous_bound(&p, &rho))?;
        print!("{rho:?}: member {} (search agrees: {})", m.member, m.member == searched);
        match extend_to_location(&p, &rho)? {
            Extension::Feasible(rep) => println!(", placed at {:?}", rep.intervals()),
            Extension::Infeasible(cert) => {
                println!(", blocked by cycle {}: {}", cert.cycle, cert.inequality);
                for row in &m.violated {
                    println!("    violates {row}");
                }
            }
        }
    }
    Ok(())
}
