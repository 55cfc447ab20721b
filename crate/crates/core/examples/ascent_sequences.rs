//! Ascent sequences decode to interval orders; counting isomorphism classes
//! recovers the Fishburn numbers.

use ordlen::order::{ascent_sequences, decode_ascent_sequence, IntervalOrder};

fn main() -> Result<(), ordlen::error::Error> {
    let rep = decode_ascent_sequence(&[0, 1, 2, 1, 0, 2, 3])?;
    println!("[0,1,2,1,0,2,3] -> {:?}", rep.intervals());

    for len in 1..=5 {
        let mut classes: Vec<IntervalOrder> = Vec::new();
        for seq in ascent_sequences(len) {
            let p = IntervalOrder::from_ascent_sequence(&seq)?;
            if !classes.iter().any(|q| q.is_isomorphic(&p)) {
                classes.push(p);
            }
        }
        println!("length {len}: {} classes", classes.len());
    }
    Ok(())
}
