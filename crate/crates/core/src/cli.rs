//! The `ordlen` command line.
//!
//! Every subcommand reads one order (see [`crate::io`]) and writes one
//! document. Exit status: 0 success, 1 invalid input, 2 a negative answer
//! (non-member, infeasible, not Berge, counterexample found), 3 a cap or
//! search bound was hit.

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::canonical::{
    classify_slack_zero, collapse_to_canonical, compute_canonical, emit_systems, SystemKind,
};
use crate::cycles::{
    enumerate_cycles, extend_to_location, length_polyhedron, Extension, DEFAULT_CYCLE_LIMIT,
};
use crate::error::Error;
use crate::graph::{check_short_chorded, find_hole, HoleQuery, DEFAULT_HOLE_CAP};
use crate::hilbert::{fundamental_extenders, hilbert_basis, ExtenderGraph, GapStructure, DEFAULT_EXTENDER_LIMIT};
use crate::io::{load_order, LoadedOrder, OrderInput};
use crate::keygraph::KeyGraph;
use crate::oracle::{brute_cone_decompose, brute_member, generous_bound, random_representation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SystemChoice {
    Location,
    Full,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Check the input is an interval order and print its profile.
    Validate,
    /// Canonical representation and magnitude.
    Canonical,
    /// Slack of every pair (or of `--pair x,y`) on the given or canonical representation.
    Slack,
    /// Key graph of slack-zero pairs.
    Keygraph,
    /// Elementary cycles of the key graph.
    Cycles,
    /// Deduplicated cycle inequalities and the apex.
    Inequalities,
    /// Membership of `--rho` in the length cone.
    Member,
    /// Smallest placement of intervals with lengths `--rho`.
    Extend,
    /// Gap sets and borderline sets.
    Gaps,
    /// Fundamental extenders with witnesses.
    Extenders,
    /// Hilbert basis of the length cone.
    Hilbert,
    /// Intersection graph of the Hilbert sets.
    Extgraph,
    /// Odd hole / odd antihole search and clique versus chromatic number.
    Berge,
    /// Search for an odd cycle without a chord between vertices two apart.
    Shortchord,
    /// Facet rows of the location polyhedron, or the full system.
    Facets,
    /// Membership of `--rho` by exhaustive search over bounded representations.
    OracleMember,
    /// Decompose `--rho` minus the apex over the Hilbert basis by search.
    OracleDecompose,
    /// A seeded random interval order, written as input JSON.
    Random,
}

#[derive(Debug, Parser)]
#[command(name = "ordlen", version, about = "Interval orders, their length cones and Hilbert bases")]
pub struct Args {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub options: Options,
}

#[derive(Clone, Debug, Default, clap::Args)]
pub struct Options {
    /// Input JSON file, or `-` for standard input.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Input JSON given inline.
    #[arg(long, global = true, conflicts_with = "input")]
    pub json: Option<String>,
    /// Output file, or `-` for standard output (the default).
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Endpoint bound for the exhaustive oracle.
    #[arg(long, global = true)]
    pub bound: Option<usize>,
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_cycles: Option<u64>,
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_extenders: Option<u64>,
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(4..))]
    pub hole_cap: Option<u64>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Comma-separated integer vector in element order.
    #[arg(long, global = true, value_delimiter = ',', allow_negative_numbers = true)]
    pub rho: Option<Vec<i64>>,
    /// Element pair `x,y` for `slack`.
    #[arg(long, global = true, value_delimiter = ',')]
    pub pair: Option<Vec<usize>>,
    /// Element count for `random`.
    #[arg(long, global = true)]
    pub n: Option<usize>,
    #[arg(long, global = true, value_enum)]
    pub system: Option<SystemChoice>,
}

/// A fully resolved job.
#[derive(Clone, Debug)]
pub struct JobConfig {
    pub command: Command,
    /// Raw input JSON; `None` only for `random`.
    pub input: Option<String>,
    pub format: Format,
    pub bound: Option<usize>,
    pub max_cycles: usize,
    pub max_extenders: usize,
    pub hole_cap: usize,
    pub seed: u64,
    pub rho: Option<Vec<i64>>,
    pub pair: Option<(usize, usize)>,
    pub n: usize,
    pub system: SystemChoice,
}

pub const EXIT_OK: u8 = 0;
pub const EXIT_INVALID: u8 = 1;
pub const EXIT_NEGATIVE: u8 = 2;
pub const EXIT_CAP: u8 = 3;

/// What a job produced: the exit status, the document for the output
/// stream and a message for standard error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: u8,
    pub output: String,
    pub message: Option<String>,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Self {
            status: EXIT_OK,
            output,
            message: None,
        }
    }

    fn negative(output: String, message: impl Into<String>) -> Self {
        Self {
            status: EXIT_NEGATIVE,
            output,
            message: Some(message.into()),
        }
    }

    fn from_error(err: &Error) -> Self {
        let status = match err {
            Error::CycleLimitExceeded(_)
            | Error::ExtenderLimitExceeded(_)
            | Error::SearchBoundExceeded(_) => EXIT_CAP,
            _ => EXIT_INVALID,
        };
        let mut body = json!({ "error": err.to_string() });
        if let Error::NotIntervalOrder(cert) = err {
            body["certificate"] = json!(cert.labels());
        }
        Self {
            status,
            output: pretty(&body),
            message: Some(err.to_string()),
        }
    }
}

fn pretty<T: Serialize + ?Sized>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("values serialize");
    text.push('\n');
    text
}

fn invalid(message: impl Into<String>) -> Error {
    Error::InvalidInput(message.into())
}

impl JobConfig {
    pub fn from_args(args: &Args) -> Result<Self, Error> {
        let o = &args.options;
        let input = match (&o.json, &o.input) {
            (Some(text), _) => Some(text.clone()),
            (None, Some(path)) if path.as_os_str() == "-" => {
                let mut text = String::new();
                std::io::stdin()
                    .read_to_string(&mut text)
                    .map_err(|e| invalid(format!("reading standard input: {e}")))?;
                Some(text)
            }
            (None, Some(path)) => Some(
                std::fs::read_to_string(path)
                    .map_err(|e| invalid(format!("reading {}: {e}", path.display())))?,
            ),
            (None, None) if args.command == Command::Random => None,
            (None, None) => return Err(invalid("one of --input or --json is required")),
        };
        let pair = match o.pair.as_deref() {
            None => None,
            Some(&[x, y]) if x > 0 && y > 0 => Some((x - 1, y - 1)),
            Some(_) => return Err(invalid("--pair takes two 1-based labels x,y")),
        };
        let to_usize = |v: Option<u64>, default: usize| v.map_or(default, |v| v as usize);
        Ok(Self {
            command: args.command,
            input,
            format: o.format.unwrap_or(Format::Json),
            bound: o.bound,
            max_cycles: to_usize(o.max_cycles, DEFAULT_CYCLE_LIMIT),
            max_extenders: to_usize(o.max_extenders, DEFAULT_EXTENDER_LIMIT),
            hole_cap: to_usize(o.hole_cap, DEFAULT_HOLE_CAP),
            seed: o.seed.unwrap_or(0),
            rho: o.rho.clone(),
            pair,
            n: o.n.unwrap_or(6),
            system: o.system.unwrap_or(SystemChoice::Location),
        })
    }

    fn rho(&self, n: usize) -> Result<&[i64], Error> {
        let rho = self.rho.as_deref().ok_or_else(|| invalid("--rho is required"))?;
        if rho.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: rho.len(),
            });
        }
        Ok(rho)
    }
}

/// Runs one job. Never panics on bad input; every failure maps to an exit
/// status.
pub fn dispatch(config: &JobConfig) -> Outcome {
    match run(config) {
        Ok(outcome) => outcome,
        Err(err) => Outcome::from_error(&err),
    }
}

fn run(cfg: &JobConfig) -> Result<Outcome, Error> {
    if cfg.command == Command::Random {
        if cfg.n == 0 {
            return Err(invalid("--n must be positive"));
        }
        let rep = random_representation(cfg.n, cfg.seed);
        return Ok(Outcome::ok(pretty(&OrderInput::from_intervals(&rep))));
    }
    let loaded = load_order(cfg.input.as_deref().unwrap_or_default())?;
    let allowed: &[Format] = match cfg.command {
        Command::Keygraph | Command::Extgraph => &[Format::Json, Format::Dot, Format::Table],
        _ => &[Format::Json, Format::Table],
    };
    if !allowed.contains(&cfg.format) {
        return Err(invalid(format!("format {:?} is not available for this command", cfg.format)));
    }
    let table = cfg.format == Format::Table;
    match cfg.command {
        Command::Validate => validate(&loaded, table),
        Command::Canonical => canonical(&loaded, table),
        Command::Slack => slack(cfg, &loaded, table),
        Command::Keygraph => {
            let g = KeyGraph::build(&compute_canonical(&loaded.order));
            Ok(Outcome::ok(match cfg.format {
                Format::Dot => g.to_dot(),
                Format::Table => g.to_table(),
                Format::Json => pretty(&g),
            }))
        }
        Command::Cycles => {
            let g = KeyGraph::build(&compute_canonical(&loaded.order));
            let cycles = enumerate_cycles(&g, cfg.max_cycles)?;
            Ok(Outcome::ok(if table {
                lines(cycles.iter().map(ToString::to_string))
            } else {
                pretty(&json!({ "count": cycles.len(), "cycles": cycles }))
            }))
        }
        Command::Inequalities => {
            let q = length_polyhedron(&loaded.order, cfg.max_cycles)?;
            Ok(Outcome::ok(if table {
                let mut out = format!("apex {:?}\n", q.apex);
                for (ineq, cycle) in q.inequalities.iter().zip(&q.witnesses) {
                    let _ = writeln!(out, "{:<36} {}", ineq.to_string(), cycle);
                }
                out
            } else {
                pretty(&q)
            }))
        }
        Command::Member => {
            let q = length_polyhedron(&loaded.order, cfg.max_cycles)?;
            let m = q.is_member(cfg.rho(loaded.order.len())?)?;
            let output = if table {
                let mut out = format!("member {}\n", m.member);
                for v in &m.violated {
                    let _ = writeln!(out, "violates {v}");
                }
                out
            } else {
                pretty(&m)
            };
            Ok(if m.member {
                Outcome::ok(output)
            } else {
                Outcome::negative(output, "not in the length cone")
            })
        }
        Command::Extend => match extend_to_location(&loaded.order, cfg.rho(loaded.order.len())?)? {
            Extension::Feasible(rep) => Ok(Outcome::ok(if table {
                interval_table(&rep.intervals())
            } else {
                pretty(&json!({ "feasible": true, "intervals": rep }))
            })),
            Extension::Infeasible(cert) => {
                let output = if table {
                    format!("infeasible: cycle {} violates {}\n", cert.cycle, cert.inequality)
                } else {
                    pretty(&json!({ "feasible": false, "certificate": cert }))
                };
                Ok(Outcome::negative(output, "no representation has these lengths"))
            }
        },
        Command::Gaps => {
            let gs = GapStructure::new(&compute_canonical(&loaded.order));
            Ok(Outcome::ok(if table {
                let mut out = format!("{:<4} {:<20} {:<20} {}\n", "i", "G_i", "L_i", "R_i");
                for i in 0..=gs.magnitude {
                    let _ = writeln!(
                        out,
                        "{:<4} {:<20} {:<20} {}",
                        i,
                        gs.gaps[i].to_string(),
                        gs.left_border[i].to_string(),
                        gs.right_border[i]
                    );
                }
                out
            } else {
                pretty(&gs)
            }))
        }
        Command::Extenders => {
            let ext = fundamental_extenders(&compute_canonical(&loaded.order), cfg.max_extenders)?;
            Ok(Outcome::ok(if table {
                lines(ext.iter().map(|e| {
                    let w: Vec<String> = e
                        .witnesses
                        .iter()
                        .map(|w| format!("({}, {:?}, {})", w.index, w.side, w.z))
                        .collect();
                    format!("{:<24} {}", e.set.to_string(), w.join(" "))
                }))
            } else {
                pretty(&json!({ "count": ext.len(), "extenders": ext }))
            }))
        }
        Command::Hilbert => {
            let basis = hilbert_basis(&compute_canonical(&loaded.order), cfg.max_extenders)?;
            Ok(Outcome::ok(if table { basis.to_table() } else { pretty(&basis) }))
        }
        Command::Extgraph => {
            let basis = hilbert_basis(&compute_canonical(&loaded.order), cfg.max_extenders)?;
            let g = ExtenderGraph::new(basis.sets);
            Ok(Outcome::ok(match cfg.format {
                Format::Dot => g.to_dot(),
                Format::Table => lines((0..g.sets.len()).map(|v| {
                    format!("{:<4} {:<20} {:?}", v + 1, g.sets[v].to_string(), g.graph.neighbors(v).labels())
                })),
                Format::Json => pretty(&g),
            }))
        }
        Command::Berge => berge(cfg, &loaded, table),
        Command::Shortchord => {
            let basis = hilbert_basis(&compute_canonical(&loaded.order), cfg.max_extenders)?;
            let g = ExtenderGraph::new(basis.sets);
            match check_short_chorded(&g.graph, cfg.hole_cap)? {
                None => Ok(Outcome::ok(if table {
                    format!("short-chorded up to length {}\n", cfg.hole_cap)
                } else {
                    pretty(&json!({ "short_chorded": true, "bound": cfg.hole_cap }))
                })),
                Some(cycle) => {
                    let sets: Vec<_> = cycle.iter().map(|&v| &g.sets[v]).collect();
                    let output = if table {
                        lines(sets.iter().map(ToString::to_string))
                    } else {
                        pretty(&json!({ "short_chorded": false, "cycle": sets }))
                    };
                    Ok(Outcome::negative(output, "odd cycle without a short chord"))
                }
            }
        }
        Command::Facets => {
            let kind = match cfg.system {
                SystemChoice::Location => SystemKind::Location,
                SystemChoice::Full => SystemKind::Full,
            };
            let sys = emit_systems(&loaded.order, kind);
            Ok(Outcome::ok(if table {
                lines(sys.render_rows())
            } else {
                pretty(&sys)
            }))
        }
        Command::OracleMember => {
            let rho = cfg.rho(loaded.order.len())?;
            let bound = cfg.bound.unwrap_or_else(|| generous_bound(&loaded.order, rho));
            let member = brute_member(&loaded.order, rho, bound)?;
            let output = if table {
                format!("member {member} (bound {bound})\n")
            } else {
                pretty(&json!({ "member": member, "bound": bound }))
            };
            Ok(if member {
                Outcome::ok(output)
            } else {
                Outcome::negative(output, "no representation within the bound")
            })
        }
        Command::OracleDecompose => {
            let canon = compute_canonical(&loaded.order);
            let rho = cfg.rho(loaded.order.len())?;
            let v: Vec<i64> = rho.iter().zip(canon.lengths()).map(|(a, b)| a - b).collect();
            let basis = hilbert_basis(&canon, cfg.max_extenders)?;
            let found = match brute_cone_decompose(&v, &basis.sets) {
                Ok(found) => found,
                Err(Error::NegativeLength { .. }) => None,
                Err(e) => return Err(e),
            };
            match found {
                Some(coef) => {
                    let terms: Vec<Value> = coef
                        .iter()
                        .map(|(&k, &c)| json!({ "set": basis.sets[k], "coefficient": c }))
                        .collect();
                    Ok(Outcome::ok(if table {
                        lines(coef.iter().map(|(&k, &c)| format!("{c} x {}", basis.sets[k])))
                    } else {
                        pretty(&json!({ "offset": v, "combination": terms }))
                    }))
                }
                None => {
                    let output = if table {
                        "no decomposition\n".to_string()
                    } else {
                        pretty(&json!({ "offset": v, "combination": null }))
                    };
                    Ok(Outcome::negative(output, "offset is not a combination of basis vectors"))
                }
            }
        }
        Command::Random => unreachable!("handled above"),
    }
}

fn lines(items: impl IntoIterator<Item = String>) -> String {
    let mut out = String::new();
    for item in items {
        out.push_str(&item);
        out.push('\n');
    }
    out
}

fn interval_table(intervals: &[(i64, i64)]) -> String {
    let mut out = format!("{:<4} {:>4} {:>4} {:>4}\n", "x", "l", "r", "rho");
    for (x, &(l, r)) in intervals.iter().enumerate() {
        let _ = writeln!(out, "{:<4} {:>4} {:>4} {:>4}", x + 1, l, r, r - l);
    }
    out
}

fn validate(loaded: &LoadedOrder, table: bool) -> Result<Outcome, Error> {
    let p = &loaded.order;
    let prof = p.profile();
    let covers: Vec<[usize; 2]> = p.cover_relations().iter().map(|&(x, y)| [x + 1, y + 1]).collect();
    Ok(Outcome::ok(if table {
        format!(
            "valid interval order\nn {}\nmagnitude {}\nwidth {}\nminimal {}\n",
            p.len(),
            prof.magnitude,
            prof.width,
            prof.minimals
        )
    } else {
        pretty(&json!({
            "valid": true,
            "n": p.len(),
            "magnitude": prof.magnitude,
            "width": prof.width,
            "minimals": prof.minimals,
            "covers": covers,
            "downsets": prof.downsets,
            "upsets": prof.upsets,
        }))
    }))
}

fn canonical(loaded: &LoadedOrder, table: bool) -> Result<Outcome, Error> {
    let c = compute_canonical(&loaded.order);
    if let Some(rep) = &loaded.representation {
        // The collapsing route must land on the same representation.
        debug_assert_eq!(collapse_to_canonical(rep), c);
    }
    Ok(Outcome::ok(if table {
        format!("magnitude {}\n{}", c.magnitude, interval_table(&c.intervals()))
    } else {
        pretty(&c)
    }))
}

fn slack(cfg: &JobConfig, loaded: &LoadedOrder, table: bool) -> Result<Outcome, Error> {
    let canon = compute_canonical(&loaded.order);
    let rep = loaded.representation.clone().unwrap_or_else(|| canon.rep.clone());
    let n = rep.len();
    if let Some((x, y)) = cfg.pair {
        if x >= n || y >= n {
            return Err(Error::LabelOutOfRange {
                label: x.max(y) + 1,
                n,
            });
        }
        let s = rep.slack(x, y)?;
        return Ok(Outcome::ok(if table {
            format!("s({}, {}) = {s}\n", x + 1, y + 1)
        } else {
            pretty(&json!({ "x": x + 1, "y": y + 1, "slack": s }))
        }));
    }
    let mut rows = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if let Ok(s) = rep.slack(x, y) {
                rows.push((x + 1, y + 1, s));
            }
        }
    }
    let zero = classify_slack_zero(&canon);
    Ok(Outcome::ok(if table {
        lines(rows.iter().map(|(x, y, s)| format!("{x:>3} {y:>3} {s:>4}")))
    } else {
        let one = |v: &[(usize, usize)]| -> Vec<[usize; 2]> { v.iter().map(|&(x, y)| [x + 1, y + 1]).collect() };
        pretty(&json!({
            "intervals": rep,
            "slack": rows,
            "contractible": zero.contractible,
            "cover_pairs": one(&zero.cover_pairs),
            "sharp_pairs": one(&zero.sharp_pairs),
        }))
    }))
}

fn berge(cfg: &JobConfig, loaded: &LoadedOrder, table: bool) -> Result<Outcome, Error> {
    let basis = hilbert_basis(&compute_canonical(&loaded.order), cfg.max_extenders)?;
    let g = ExtenderGraph::new(basis.sets);
    let hole = find_hole(&g.graph, &HoleQuery::odd_holes(cfg.hole_cap))?;
    let antihole = find_hole(&g.graph, &HoleQuery::odd_antiholes(cfg.hole_cap))?;
    let omega = g.graph.clique_number();
    let chi = g.graph.chromatic_number();
    let sets = |c: &Option<Vec<usize>>| c.as_ref().map(|c| c.iter().map(|&v| g.sets[v].clone()).collect::<Vec<_>>());
    let berge = hole.is_none() && antihole.is_none();
    let output = if table {
        format!(
            "vertices {}\nedges {}\nodd hole {}\nodd antihole {}\nclique number {omega}\nchromatic number {chi}\n",
            g.sets.len(),
            g.graph.edge_count(),
            if hole.is_some() { "found" } else { "none" },
            if antihole.is_some() { "found" } else { "none" },
        )
    } else {
        pretty(&json!({
            "vertices": g.sets.len(),
            "edges": g.graph.edge_count(),
            "odd_hole": sets(&hole),
            "odd_antihole": sets(&antihole),
            "clique_number": omega,
            "chromatic_number": chi,
            "berge": berge,
        }))
    };
    Ok(if berge && omega == chi {
        Outcome::ok(output)
    } else {
        Outcome::negative(output, "extender graph is not perfect")
    })
}

/// Parses arguments, runs the job and writes its output. Returns the
/// process exit status.
pub fn main_with_args<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(args) => args,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
        }
    };
    let outcome = match JobConfig::from_args(&args) {
        Ok(cfg) => dispatch(&cfg),
        Err(err) => Outcome::from_error(&err),
    };
    if let Some(msg) = &outcome.message {
        eprintln!("ordlen: {msg}");
    }
    let written = match args.options.output.as_deref() {
        Some(path) if path.as_os_str() != "-" => std::fs::write(path, &outcome.output),
        _ => {
            use std::io::Write;
            std::io::stdout().write_all(outcome.output.as_bytes())
        }
    };
    if let Err(e) = written {
        eprintln!("ordlen: writing output: {e}");
        return EXIT_INVALID;
    }
    outcome.status
}
