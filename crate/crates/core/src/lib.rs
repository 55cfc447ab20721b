pub mod canonical;
pub mod cycles;
pub mod error;
pub mod keygraph;
pub mod order;
pub mod set;
pub mod graph;
pub mod hilbert;
pub mod oracle;
pub mod io;
pub mod cli;
