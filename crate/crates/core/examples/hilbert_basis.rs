//! Gap sets, fundamental extenders and the Hilbert basis of the length
//! cone, with a cone point written over the basis.

use ordlen::canonical::compute_canonical;
use ordlen::hilbert::{fundamental_extenders, hilbert_basis, GapStructure, DEFAULT_EXTENDER_LIMIT};
use ordlen::io::load_order;
use ordlen::oracle::brute_cone_decompose;

fn main() -> Result<(), ordlen::error::Error> {
    let p = load_order(include_str!("../fixtures/pc.json"))?.order;
    let c = compute_canonical(&p);

    let gs = GapStructure::new(&c);
    for i in 0..=gs.magnitude {
        println!("G_{i} = {:<10} L = {:<8} R = {}", gs.gaps[i].to_string(), gs.left_border[i].to_string(), gs.right_border[i].to_string());
    }
    let extenders = fundamental_extenders(&c, DEFAULT_EXTENDER_LIMIT)?;
    println!("{} fundamental extenders (bound {})", extenders.len(), gs.extender_bound());

    let basis = hilbert_basis(&c, DEFAULT_EXTENDER_LIMIT)?;
    print!("{}", basis.to_table());
    for (set, parts) in &basis.discarded {
        let parts: Vec<String> = parts.iter().map(ToString::to_string).collect();
        println!("{set} splits as {}", parts.join(" + "));
    }

    let offset = [0, 1, 0, 0, 2, 0, 0, 0];
    if let Some(combo) = brute_cone_decompose(&offset, &basis.sets)? {
        let terms: Vec<String> = combo.iter().map(|(&k, &m)| format!("{m} x {}", basis.sets[k])).collect();
        println!("{offset:?} = {}", terms.join(" + "));
    }
    Ok(())
}
