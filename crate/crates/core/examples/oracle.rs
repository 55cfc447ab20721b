//! Random interval orders checked against exhaustive enumeration: the
//! canonical representation sits below every other one.

use ordlen::canonical::compute_canonical;
use ordlen::oracle::{enumerate_representations, random_interval_order};

fn main() {
    for seed in 0..5 {
        let p = random_interval_order(5, seed);
        let c = compute_canonical(&p);
        let bound = c.magnitude + 1;
        let mut count = 0;
        let mut below = true;
        for rep in enumerate_representations(&p, bound) {
            count += 1;
            below &= (0..p.len()).all(|x| c.left()[x] <= rep.left()[x] && c.right()[x] <= rep.right()[x]);
        }
        println!(
            "seed {seed}: {} relations, magnitude {}, {count} representations in [0, {bound}], canonical below all: {below}",
            p.relations().len(),
            c.magnitude
        );
    }
}
