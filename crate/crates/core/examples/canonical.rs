//! Canonical representation of an order given by its Hasse diagram, and
//! the collapsing route from an arbitrary representation to the same place.

use ordlen::canonical::{collapse_to_canonical, compute_canonical, IntervalRepresentation};
use ordlen::order::IntervalOrder;

fn main() -> Result<(), ordlen::error::Error> {
    // 1 < {2, 4, 6}, 3 < 2, 4 < {5, 7}, 2 < {5, 7}, 6 < 5 (1-based labels).
    let hasse = [(1, 2), (1, 4), (1, 6), (3, 2), (4, 5), (4, 7), (2, 5), (2, 7), (6, 5)];
    let pairs: Vec<(usize, usize)> = hasse.iter().map(|&(x, y)| (x - 1, y - 1)).collect();
    let p = IntervalOrder::from_relations(7, &pairs, true)?;

    let profile = p.profile();
    println!("magnitude {}, width {}, minimal {}", profile.magnitude, profile.width, profile.minimals);

    let c = compute_canonical(&p);
    for (x, (l, r)) in c.intervals().into_iter().enumerate() {
        println!("  {}: [{l}, {r}]", x + 1);
    }

    let stretched: Vec<(i64, i64)> = c.intervals().iter().map(|&(l, r)| (3 * l + 2, 3 * r + 3)).collect();
    let wide = IntervalRepresentation::new(&stretched)?;
    assert!(wide.represents(&p));
    let back = collapse_to_canonical(&wide);
    println!("collapsing {:?} gives back the canonical form: {}", wide.intervals(), back == c);

    println!("slack(6, 5) = {}, slack(6, 7) = {}", c.slack(5, 4)?, c.slack(5, 6)?);
    Ok(())
}
