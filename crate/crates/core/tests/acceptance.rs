//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{canonical, fan, fixture, sets};
use ordlen::canonical::{compute_canonical, determinant, emit_systems, SystemKind};
use ordlen::cycles::{
    enumerate_cycles, extend_to_location, length_polyhedron, Extension, DEFAULT_CYCLE_LIMIT,
};
use ordlen::graph::{find_hole, HoleQuery, Parity, DEFAULT_HOLE_CAP};
use ordlen::hilbert::{hilbert_basis, ExtenderGraph, Witness, DEFAULT_EXTENDER_LIMIT};
use ordlen::keygraph::KeyGraph;
use ordlen::oracle::{
    brute_cone_decompose, brute_member, enumerate_representations, generous_bound,
    random_interval_order,
};
use ordlen::order::{ascent_sequences, IntervalOrder};
use ordlen::set::ElementSet;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn canonical_fixtures() -> Check {
    let expect: [(&str, &[(i64, i64)], usize); 4] = [
        ("pa", &[(0, 0), (2, 2), (0, 1), (1, 2), (4, 4), (1, 3), (3, 4)], 5),
        ("pb", &[(0, 0), (1, 1), (4, 4), (1, 2), (0, 2), (2, 3), (3, 4)], 5),
        ("pc", &[(0, 0), (1, 1), (4, 4), (4, 4), (0, 2), (2, 3), (2, 3), (3, 4)], 5),
        ("pd", &[(0, 0), (3, 3), (0, 1), (1, 2), (1, 2), (1, 2), (2, 3)], 4),
    ];
    for (name, intervals, m) in expect {
        let c = canonical(name);
        ensure(c.intervals() == intervals, || format!("{name}: got {:?}", c.intervals()))?;
        ensure(c.magnitude == m, || format!("{name}: magnitude {}", c.magnitude))?;
    }
    Ok("C_A, C_B, C_C, C_D reproduced with magnitudes 5, 5, 5, 4".into())
}

fn slack_zero_pairs() -> Check {
    let c = canonical("pa");
    for (x, y) in [(2, 2), (6, 5), (6, 3), (7, 6)] {
        let s = c.slack(x - 1, y - 1).map_err(|e| e.to_string())?;
        ensure(s == 0, || format!("s({x},{y}) = {s}, expected 0"))?;
    }
    for (x, y) in [(7, 7), (2, 5), (6, 4), (6, 7)] {
        let s = c.slack(x - 1, y - 1).map_err(|e| e.to_string())?;
        ensure(s > 0, || format!("s({x},{y}) = 0, expected positive"))?;
    }
    Ok("4 slack-zero pairs and 4 positive pairs on C_A".into())
}

fn cycle_census() -> Check {
    let g = KeyGraph::build(&canonical("pb"));
    let cycles = enumerate_cycles(&g, DEFAULT_CYCLE_LIMIT).map_err(|e| e.to_string())?;
    let got: BTreeSet<Vec<usize>> = cycles.iter().map(|c| c.labels()).collect();
    // Rotated to start at their minimum.
    let want: BTreeSet<Vec<usize>> = [
        vec![1],
        vec![2],
        vec![3],
        vec![2, 6, 4],
        vec![1, 2, 6, 5],
        vec![1, 4, 2, 6, 5],
        vec![3, 7, 6],
        vec![4, 7, 6],
        vec![5, 7, 6],
        vec![1, 4, 7, 6, 5],
    ]
    .into_iter()
    .collect();
    ensure(cycles.len() == 10, || format!("{} cycles", cycles.len()))?;
    ensure(got == want, || format!("cycles {got:?}"))?;
    Ok("exactly the 10 cycles of the key graph of P_B".into())
}

fn length_polyhedron_pb() -> Check {
    let p = fixture("pb");
    let q = length_polyhedron(&p, DEFAULT_CYCLE_LIMIT).map_err(|e| e.to_string())?;
    ensure(q.apex == [0, 0, 0, 1, 2, 1, 1], || format!("apex {:?}", q.apex))?;
    ensure(q.is_tight_at_apex(), || "an inequality is slack at the apex".into())?;
    let probe = [0, 0, 0, 1, 1, 1, 1];
    let m = q.is_member(&probe).map_err(|e| e.to_string())?;
    let row = ordlen::cycles::CycleInequality {
        gamma: 2,
        a: ElementSet::from_labels(&[4]),
        b: ElementSet::from_labels(&[5, 6]),
    };
    ensure(!m.member, || "probe reported as member".into())?;
    ensure(m.violated.contains(&row), || format!("violated rows {:?}", m.violated))?;
    match extend_to_location(&p, &q.apex).map_err(|e| e.to_string())? {
        Extension::Feasible(rep) => {
            ensure(rep.left() == [0, 1, 4, 1, 0, 2, 3], || format!("left {:?}", rep.left()))?
        }
        Extension::Infeasible(c) => return Err(format!("apex infeasible: {c:?}")),
    }
    Ok(format!(
        "apex (0,0,0,1,2,1,1), {} tight rows, probe violates {row}, extension = C_B",
        q.inequalities.len()
    ))
}

fn hilbert_basis_pc() -> Check {
    let basis = hilbert_basis(&canonical("pc"), DEFAULT_EXTENDER_LIMIT).map_err(|e| e.to_string())?;
    let want = sets(&[&[1], &[3], &[4], &[5], &[8], &[2, 5], &[5, 6], &[5, 7], &[6, 7], &[6, 8], &[7, 8]]);
    ensure(basis.sets == want, || format!("basis {:?}", basis.sets))?;
    // Gap-decomposition column of the table: (i, Z) per row.
    let table: [(&[usize], &[(usize, &[usize])]); 11] = [
        (&[1], &[(0, &[1])]),
        (&[3], &[(5, &[3])]),
        (&[4], &[(5, &[4])]),
        (&[5], &[(0, &[5]), (1, &[]), (2, &[])]),
        (&[8], &[(4, &[]), (5, &[8])]),
        (&[2, 5], &[(1, &[2]), (2, &[2])]),
        (&[5, 6], &[(2, &[6])]),
        (&[5, 7], &[(2, &[7])]),
        (&[6, 7], &[(3, &[])]),
        (&[6, 8], &[(4, &[6])]),
        (&[7, 8], &[(4, &[7])]),
    ];
    for (set, rows) in table {
        let set = ElementSet::from_labels(set);
        let have: &[Witness] = basis.witnesses_of(&set).ok_or_else(|| format!("{set} missing"))?;
        for &(i, z) in rows {
            let z = ElementSet::from_labels(z);
            ensure(have.iter().any(|w| w.index == i && w.z == z), || {
                format!("{set}: witness ({i}, {z}) missing from {have:?}")
            })?;
        }
    }
    Ok("11 Hilbert sets with every tabulated witness".into())
}

fn exponential_family() -> Check {
    let mut counts = Vec::new();
    for (n, want) in [(8usize, 34usize), (10, 130)] {
        let basis = hilbert_basis(&compute_canonical(&fan(n)), DEFAULT_EXTENDER_LIMIT)
            .map_err(|e| e.to_string())?;
        ensure(basis.sets.len() == want, || format!("n = {n}: {} sets", basis.sets.len()))?;
        ensure(basis.sets.len() == (1 << (n - 3)) + 2, || "count is not 2^(n-3) + 2".into())?;
        counts.push(format!("n={n}: {}", basis.sets.len()));
    }
    Ok(counts.join(", "))
}

fn extender_graph_pd() -> Check {
    let basis = hilbert_basis(&canonical("pd"), DEFAULT_EXTENDER_LIMIT).map_err(|e| e.to_string())?;
    let g = ExtenderGraph::new(basis.sets);
    let (order, size) = (g.sets.len(), g.graph.edge_count());
    ensure((order, size) == (17, 78), || format!("order {order}, size {size}"))?;
    let six: Vec<usize> = sets(&[&[3, 4], &[3, 5], &[3, 6], &[4, 7], &[5, 7], &[6, 7]])
        .iter()
        .map(|s| g.vertex_of(s).ok_or_else(|| format!("{s} is not a vertex")))
        .collect::<Result<_, _>>()?;
    let sub = g.graph.induced(&six);
    let found = find_hole(&sub, &HoleQuery::of_length(6, true)).map_err(|e| e.to_string())?;
    ensure(found.is_some(), || "no complement of C6 on the six vertices".into())?;
    ensure(sub.complement().is_induced_cycle(found.as_deref().unwrap_or_default()), || {
        "certificate is not an induced 6-cycle of the complement".into()
    })?;
    let hole = find_hole(&g.graph, &HoleQuery::odd_holes(DEFAULT_HOLE_CAP)).map_err(|e| e.to_string())?;
    let anti = find_hole(&g.graph, &HoleQuery::odd_antiholes(DEFAULT_HOLE_CAP)).map_err(|e| e.to_string())?;
    ensure(hole.is_none(), || format!("odd hole {hole:?}"))?;
    ensure(anti.is_none(), || format!("odd antihole {anti:?}"))?;
    Ok("17 vertices, 78 edges, complement of C6 found, no odd hole or antihole".into())
}

/// Random `rho` per the mixing rule: half uniform in 0..=4, half near the apex.
fn random_rho(rng: &mut ChaCha8Rng, apex: &[i64]) -> Vec<i64> {
    if rng.gen_bool(0.5) {
        apex.iter().map(|_| rng.gen_range(0..=4)).collect()
    } else {
        apex.iter().map(|&a| (a + rng.gen_range(-1..=2)).max(0)).collect()
    }
}

#[derive(Default)]
struct SuiteStats {
    orders: usize,
    representations: usize,
    membership_probes: usize,
    members: usize,
    decompositions: usize,
    graphs_colored: usize,
    determinants: usize,
}

fn property_instance(seed: u64, stats: &mut SuiteStats) -> Result<(), String> {
    let n = 1 + (seed % 7) as usize;
    let p = random_interval_order(n, seed);
    let c = compute_canonical(&p);
    let tag = |what: &str| format!("seed {seed} (n = {n}): {what}");
    stats.orders += 1;

    // (a) Canonical slacks and endpoints are smallest over all representations.
    for rep in enumerate_representations(&p, c.magnitude + 2) {
        stats.representations += 1;
        for x in 0..n {
            ensure(c.left()[x] <= rep.left()[x] && c.right()[x] <= rep.right()[x], || {
                tag(&format!("canonical not below {:?}", rep.intervals()))
            })?;
            for y in 0..n {
                if let (Ok(sc), Ok(sr)) = (c.slack(x, y), rep.slack(x, y)) {
                    ensure(sc <= sr, || tag(&format!("slack({x},{y}) {sc} > {sr}")))?;
                }
            }
        }
    }

    // (b) Three membership routes agree.
    let q = length_polyhedron(&p, DEFAULT_CYCLE_LIMIT).map_err(|e| tag(&e.to_string()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    for _ in 0..20 {
        let rho = random_rho(&mut rng, &q.apex);
        let cyc = q.is_member(&rho).map_err(|e| tag(&e.to_string()))?.member;
        let ext = matches!(
            extend_to_location(&p, &rho).map_err(|e| tag(&e.to_string()))?,
            Extension::Feasible(_)
        );
        let brute = brute_member(&p, &rho, generous_bound(&p, &rho)).map_err(|e| tag(&e.to_string()))?;
        ensure(cyc == ext && ext == brute, || {
            tag(&format!("rho {rho:?}: cycles {cyc}, extension {ext}, search {brute}"))
        })?;
        stats.membership_probes += 1;
        stats.members += usize::from(cyc);
    }

    // (c) Cone points decompose over the Hilbert basis.
    let basis = hilbert_basis(&c, DEFAULT_EXTENDER_LIMIT).map_err(|e| tag(&e.to_string()))?;
    let mut found = 0;
    for _ in 0..400 {
        if found == 10 {
            break;
        }
        let d: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=3)).collect();
        let rho: Vec<i64> = q.apex.iter().zip(&d).map(|(a, b)| a + b).collect();
        if !q.is_member(&rho).map_err(|e| tag(&e.to_string()))?.member {
            continue;
        }
        found += 1;
        let combo = brute_cone_decompose(&d, &basis.sets).map_err(|e| tag(&e.to_string()))?;
        ensure(combo.is_some(), || tag(&format!("offset {d:?} has no decomposition")))?;
        stats.decompositions += 1;
    }
    ensure(found > 0, || tag("no cone point sampled"))?;

    // (d) Berge and perfect at desk scale.
    let g = ExtenderGraph::new(basis.sets.clone());
    let holes = HoleQuery {
        min_len: 5,
        exact: None,
        parity: Parity::Any,
        in_complement: false,
        cap: DEFAULT_HOLE_CAP.max(g.sets.len()),
    };
    let hole = find_hole(&g.graph, &holes).map_err(|e| tag(&e.to_string()))?;
    ensure(hole.is_none(), || tag(&format!("hole {hole:?}")))?;
    let anti = find_hole(&g.graph, &HoleQuery::odd_antiholes(DEFAULT_HOLE_CAP.max(g.sets.len())))
        .map_err(|e| tag(&e.to_string()))?;
    ensure(anti.is_none(), || tag(&format!("odd antihole {anti:?}")))?;
    if g.sets.len() <= 14 {
        let (omega, chi) = (g.graph.clique_number(), g.graph.chromatic_number());
        ensure(omega == chi, || tag(&format!("clique number {omega}, chromatic number {chi}")))?;
        stats.graphs_colored += 1;
    }

    // (e) Square submatrices of the full system have determinant 0 or ±1.
    let m = emit_systems(&p, SystemKind::Full).matrix();
    let (rows, cols) = (m.len(), m[0].len());
    for _ in 0..1000 {
        let k = rng.gen_range(1..=8.min(rows).min(cols));
        let r = sample(&mut rng, rows, k).into_vec();
        let cidx = sample(&mut rng, cols, k).into_vec();
        let sub: Vec<Vec<i64>> = r.iter().map(|&i| cidx.iter().map(|&j| m[i][j]).collect()).collect();
        let det = determinant(&sub);
        ensure(det.abs() <= 1, || tag(&format!("determinant {det} on rows {r:?} cols {cidx:?}")))?;
        stats.determinants += 1;
    }
    Ok(())
}

fn property_suite() -> Check {
    let mut stats = SuiteStats::default();
    for seed in 0..100 {
        property_instance(seed, &mut stats)?;
    }
    Ok(format!(
        "{} orders, {} representations, {} probes ({} members), {} decompositions, {} graphs colored, {} determinants",
        stats.orders,
        stats.representations,
        stats.membership_probes,
        stats.members,
        stats.decompositions,
        stats.graphs_colored,
        stats.determinants
    ))
}

fn fishburn_counts() -> Check {
    let mut counts = Vec::new();
    for len in 1..=4 {
        let mut classes: Vec<IntervalOrder> = Vec::new();
        for seq in ascent_sequences(len) {
            let p = IntervalOrder::from_ascent_sequence(&seq).map_err(|e| e.to_string())?;
            if !classes.iter().any(|q| q.is_isomorphic(&p)) {
                classes.push(p);
            }
        }
        counts.push(classes.len());
    }
    ensure(counts == [1, 2, 5, 15], || format!("counts {counts:?}"))?;
    Ok("1, 2, 5, 15 pairwise non-isomorphic orders".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check, Duration); 9] = [
        ("canonical fixtures", canonical_fixtures, Duration::from_secs(1)),
        ("slack-zero pairs of C_A", slack_zero_pairs, Duration::from_secs(1)),
        ("cycle census of P_B", cycle_census, Duration::from_secs(1)),
        ("length polyhedron of P_B", length_polyhedron_pb, Duration::from_secs(1)),
        ("Hilbert basis of P_C", hilbert_basis_pc, Duration::from_secs(1)),
        ("exponential family", exponential_family, Duration::from_secs(10)),
        ("extender graph of P_D", extender_graph_pd, Duration::from_secs(30)),
        ("property suite", property_suite, Duration::from_secs(300)),
        ("Fishburn counts", fishburn_counts, Duration::from_secs(1)),
    ];
    let mut failed = 0;
    for (k, (name, check, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        let verdict = match result {
            Ok(_) if took > *limit => Err(format!("took {took:.2?}, limit {limit:?}")),
            other => other,
        };
        match verdict {
            Ok(detail) => println!("PASS {:>2} {name} [{took:.2?}]: {detail}", k + 1),
            Err(reason) => {
                failed += 1;
                println!("FAIL {:>2} {name} [{took:.2?}]: {reason}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
