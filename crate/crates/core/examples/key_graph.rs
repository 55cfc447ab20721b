//! Slack-zero pairs of a canonical representation and the key graph they
//! define, printed as a table and as Graphviz.

use ordlen::canonical::{classify_slack_zero, compute_canonical};
use ordlen::io::load_order;
use ordlen::keygraph::KeyGraph;

fn main() -> Result<(), ordlen::error::Error> {
    let p = load_order(include_str!("../fixtures/pb.json"))?.order;
    let c = compute_canonical(&p);
    let zero = classify_slack_zero(&c);
    let show = |pairs: &[(usize, usize)]| -> Vec<String> {
        pairs.iter().map(|&(x, y)| format!("({},{})", x + 1, y + 1)).collect()
    };
    println!("contractible {}", zero.contractible);
    println!("cover        {}", show(&zero.cover_pairs).join(" "));
    println!("sharp        {}", show(&zero.sharp_pairs).join(" "));

    let g = KeyGraph::build(&c);
    print!("{}", g.to_table());
    print!("{}", g.to_dot());
    Ok(())
}
