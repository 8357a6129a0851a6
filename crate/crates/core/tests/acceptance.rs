//! Acceptance gate: one PASS/FAIL line per criterion, then a single assert.
//!
//! Run with `cargo test --release --test acceptance -- --nocapture` to see
//! the report.

mod common;

use std::collections::{BTreeSet, HashMap};
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use serde_json::Value;

use igraphs::analysis::{
    are_isomorphic, construct_hamilton_path_6k1, h_subgraph, is_hamiltonian_cycle,
    is_hamiltonian_path,
};
use igraphs::domination::{enumerate_isets, oracle_count_isets};
use igraphs::families::{
    count_cycle_isets, count_path_isets, cycle_gf_parameters, cycle_iset_label, cycle_labels,
    gf_cycle_coefficient, label_to_iset, predicted_cycle_igraph, predicted_path_igraph,
};
use igraphs::graph::{cycle, path, Graph};
use igraphs::reconfig::{build_igraph, frozen_tokens, token_slide_adjacent, IGraph};

use common::{definitional_edges, parse_dot, path_pair_labels, sweep_seeds};

const LIMIT_PATH_COUNTS: Duration = Duration::from_secs(10);
const LIMIT_CYCLE_COUNTS: Duration = Duration::from_secs(10);
const LIMIT_PATH_STRUCTURE: Duration = Duration::from_secs(30);
const LIMIT_CYCLE_STRUCTURE: Duration = Duration::from_secs(60);
const LIMIT_HAMILTON: Duration = Duration::from_secs(120);
const LIMIT_CONSTRUCTION: Duration = Duration::from_secs(30);
const HAMILTON_BUDGET: u64 = 100_000_000;

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> std::result::Result<Duration, String> {
    let spent = start.elapsed();
    ensure(spent < limit, || format!("took {spent:?}, limit {limit:?}"))?;
    Ok(spent)
}

fn path_counts() -> Check {
    let start = Instant::now();
    for n in 1..=21 {
        let g = path(n).unwrap();
        let enumerated = enumerate_isets(&g).unwrap().len() as u128;
        let closed = count_path_isets(n).unwrap();
        let oracle = oracle_count_isets(&g).unwrap() as u128;
        ensure(enumerated == closed && closed == oracle, || {
            format!("P_{n}: enumerated {enumerated}, closed form {closed}, oracle {oracle}")
        })?;
    }
    let spent = within(start, LIMIT_PATH_COUNTS)?;
    Ok(format!("n = 1..21 agree, {spent:.2?}"))
}

fn cycle_counts() -> Check {
    let start = Instant::now();
    for n in 3..=21 {
        let enumerated = enumerate_isets(&cycle(n).unwrap()).unwrap().len() as u128;
        let closed = count_cycle_isets(n).unwrap();
        let (t, r) = cycle_gf_parameters(n);
        let gf = gf_cycle_coefficient(t, r).unwrap();
        ensure(enumerated == closed && gf == BigUint::from(closed), || {
            format!("C_{n}: enumerated {enumerated}, closed form {closed}, gf {gf}")
        })?;
    }
    for (n, expected) in [(13, 26u128), (8, 8), (6, 3)] {
        let got = count_cycle_isets(n).unwrap();
        ensure(got == expected, || {
            format!("C_{n}: {got}, expected {expected}")
        })?;
    }
    let spent = within(start, LIMIT_CYCLE_COUNTS)?;
    Ok(format!("n = 3..21 agree, spot values 26/8/3, {spent:.2?}"))
}

fn path_structure() -> Check {
    let start = Instant::now();
    for n in 1..=21 {
        let built = build_igraph(&path(n).unwrap()).unwrap();
        let predicted = predicted_path_igraph(n).unwrap();
        let witness = are_isomorphic(&built.graph, &predicted).unwrap();
        ensure(
            witness.is_some_and(|w| w.verify(&built.graph, &predicted)),
            || format!("H(P_{n}) is not isomorphic to its prediction"),
        )?;
    }
    let spent = within(start, LIMIT_PATH_STRUCTURE)?;
    Ok(format!(
        "n = 1..21 isomorphic with checked witnesses, {spent:.2?}"
    ))
}

/// The i-graph's neighbours of every label are exactly
/// the labels given by the bracelet rules.
fn label_neighbours_match(n: usize, ig: &IGraph) -> std::result::Result<(), String> {
    let labels: Vec<_> = ig
        .isets
        .iter()
        .map(|&s| cycle_iset_label(n, s).unwrap())
        .collect();
    for (v, label) in labels.iter().enumerate() {
        let actual: BTreeSet<_> = ig.graph.neighbors(v).iter().map(|&w| labels[w]).collect();
        let rule: BTreeSet<_> = label.bracelet_neighbors(n).into_iter().collect();
        ensure(actual == rule, || {
            format!("C_{n}: {label} has neighbours {actual:?}, rules give {rule:?}")
        })?;
    }
    Ok(())
}

fn cycle_structure() -> Check {
    let start = Instant::now();
    for n in 3..=22 {
        let built = build_igraph(&cycle(n).unwrap()).unwrap();
        let predicted = predicted_cycle_igraph(n).unwrap();
        let witness = are_isomorphic(&built.graph, &predicted).unwrap();
        ensure(
            witness.is_some_and(|w| w.verify(&built.graph, &predicted)),
            || format!("H(C_{n}) is not isomorphic to its prediction"),
        )?;
        if n % 3 == 1 {
            label_neighbours_match(n, &built)?;
        }
    }
    let spent = within(start, LIMIT_CYCLE_STRUCTURE)?;
    Ok(format!(
        "n = 3..22 isomorphic, label rules hold vertexwise for n = 4..22 (3k+1), {spent:.2?}"
    ))
}

fn degree_law() -> Check {
    for n in [7, 10, 13, 16, 19, 22] {
        let degrees = build_igraph(&cycle(n).unwrap()).unwrap().graph.degrees();
        ensure(degrees.iter().all(|&d| d == 2 || d == 4), || {
            format!("C_{n}: degree outside {{2,4}}")
        })?;
        let twos = degrees.iter().filter(|&&d| d == 2).count();
        let expected = if n == 7 { 7 } else { n };
        ensure(twos == expected, || {
            format!("C_{n}: {twos} vertices of degree 2, expected {expected}")
        })?;
    }
    Ok("degrees in {2,4}, n vertices of degree 2".into())
}

fn run_hamilton(n: usize) -> std::result::Result<(i32, Value), String> {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let budget = HAMILTON_BUDGET.to_string();
    let args = [
        "igraphs",
        "hamilton",
        &format!("cycle:{n}"),
        "--budget",
        &budget,
    ];
    let code = igraphs::cli::run(args, &mut out, &mut err);
    let text = String::from_utf8(out).unwrap();
    let json = serde_json::from_str(&text)
        .map_err(|e| format!("cycle:{n}: unreadable output {text:?}: {e}"))?;
    Ok((code, json))
}

fn witness(json: &Value) -> Option<Vec<usize>> {
    json.get("witness")?
        .as_array()?
        .iter()
        .map(|v| v.as_u64().map(|x| x as usize))
        .collect()
}

fn hamilton_classification() -> Check {
    let start = Instant::now();
    for n in [3, 4, 5, 6, 7, 8, 10, 11, 13, 14, 16, 19] {
        let (code, json) = run_hamilton(n)?;
        let g = build_igraph(&cycle(n).unwrap()).unwrap().graph;
        let status = json["status"].as_str().unwrap_or_default();
        let kind = json["obstruction"]["kind"].as_str();
        ensure(code == 0, || format!("cycle:{n}: exit code {code}"))?;
        match n {
            3 | 5 | 7 | 8 | 11 | 13 | 14 => {
                ensure(status == "hamiltonian", || format!("cycle:{n}: {status}"))?;
                let w = witness(&json).unwrap_or_default();
                ensure(is_hamiltonian_cycle(&g, &w), || {
                    format!("cycle:{n}: bad cycle witness")
                })?;
            }
            4 | 10 | 16 => {
                ensure(status == "neither", || format!("cycle:{n}: {status}"))?;
                if n != 4 {
                    let parts = (
                        json["obstruction"]["part_a"].as_u64(),
                        json["obstruction"]["part_b"].as_u64(),
                    );
                    let expected = if n == 10 { (10, 5) } else { (24, 16) };
                    ensure(
                        kind == Some("bipartite_imbalance")
                            && parts == (Some(expected.0), Some(expected.1)),
                        || format!("cycle:{n}: obstruction {}", json["obstruction"]),
                    )?;
                }
            }
            6 => {
                ensure(status == "neither" && kind == Some("disconnected"), || {
                    format!("cycle:6: {status}, {}", json["obstruction"])
                })?;
            }
            19 => {
                ensure(
                    status == "traceable_only" && kind == Some("forced_subcycle"),
                    || format!("cycle:19: {status}, {}", json["obstruction"]),
                )?;
                let size = json["obstruction"]["vertices"].as_array().map(Vec::len);
                ensure(size == Some(38), || {
                    format!("cycle:19: certificate of size {size:?}")
                })?;
                let w = witness(&json).unwrap_or_default();
                ensure(w.len() == 57 && is_hamiltonian_path(&g, &w), || {
                    "cycle:19: bad path witness".into()
                })?;
            }
            _ => unreachable!(),
        }
    }
    let spent = within(start, LIMIT_HAMILTON)?;
    Ok(format!("12 cycles classified as predicted, {spent:.2?}"))
}

fn h_decomposition() -> Check {
    let mut seen = Vec::new();
    for k in 3..=5 {
        let n = 6 * k + 1;
        for ell in (2..=3 * k - 1).step_by(6) {
            let h = h_subgraph(n, ell).unwrap();
            let length = if ell == 3 * k - 1 && k % 2 == 1 {
                n
            } else {
                2 * n
            };
            let is_cycle = h.is_connected() && h.degrees().iter().all(|&d| d == 2);
            ensure(is_cycle && h.order() == length, || {
                format!(
                    "H_{{{ell},{}}} of C_{n}: order {}, cycle {is_cycle}",
                    ell + 3,
                    h.order()
                )
            })?;
            seen.push(format!("C_{length}"));
        }
    }
    Ok(format!("k = 3..5: {}", seen.join(" ")))
}

fn construction() -> Check {
    let start = Instant::now();
    let mut orders = Vec::new();
    for k in 3..=6 {
        let n = 6 * k + 1;
        let path = construct_hamilton_path_6k1(k).map_err(|e| e.to_string())?;
        let predicted = predicted_cycle_igraph(n).unwrap();
        let index: HashMap<_, _> = cycle_labels(n)
            .unwrap()
            .into_iter()
            .enumerate()
            .map(|(i, l)| (l, i))
            .collect();
        let seq: Vec<usize> = path.iter().map(|l| index[l]).collect();
        ensure(is_hamiltonian_path(&predicted, &seq), || {
            format!("k = {k}: not a Hamiltonian path")
        })?;

        let built = build_igraph(&cycle(n).unwrap()).unwrap();
        let seq: Vec<usize> = path
            .iter()
            .map(|&l| built.position(label_to_iset(n, l).unwrap()).unwrap())
            .collect();
        ensure(is_hamiltonian_path(&built.graph, &seq), || {
            format!("k = {k}: not a Hamiltonian path of the computed i-graph")
        })?;
        orders.push(path.len().to_string());
    }
    let spent = within(start, LIMIT_CONSTRUCTION)?;
    Ok(format!("orders {}, {spent:.2?}", orders.join("/")))
}

fn property_suite() -> Check {
    let mut checked = 0usize;
    for (name, g) in sweep_seeds() {
        let ig = build_igraph(&g).unwrap();

        // token-slide symmetry, and agreement with the definitional edge set
        for a in 0..ig.order() {
            for b in 0..ig.order() {
                let ab = token_slide_adjacent(&g, ig.isets[a], ig.isets[b]).unwrap();
                let ba = token_slide_adjacent(&g, ig.isets[b], ig.isets[a]).unwrap();
                ensure(ab.map(|s| s.reversed()) == ba, || {
                    format!("{name}: asymmetric slide {a}-{b}")
                })?;
                ensure(ab.is_some() == ig.graph.has_edge(a, b), || {
                    format!("{name}: slide {a}-{b} disagrees with the i-graph")
                })?;
                checked += 1;
            }
        }
        let edges: Vec<_> = ig.graph.edges().collect();
        ensure(edges == definitional_edges(&g, &ig.isets), || {
            format!("{name}: edge set mismatch")
        })?;

        // frozen tokens and isolation
        for (v, &s) in ig.isets.iter().enumerate() {
            let all_frozen = frozen_tokens(&g, s).unwrap() == s;
            ensure(all_frozen == (ig.graph.degree(v) == 0), || {
                format!("{name}: frozen/isolated disagree at {s}")
            })?;
        }

        // document round trips
        ensure(IGraph::from_json(&ig.to_json()).as_ref() == Ok(&ig), || {
            format!("{name}: i-graph JSON")
        })?;
        ensure(Graph::from_json(&g.to_json()).as_ref() == Ok(&g), || {
            format!("{name}: seed JSON")
        })?;
        ensure(
            parse_dot(&ig.graph.to_dot()).as_ref() == Ok(&ig.graph),
            || format!("{name}: i-graph DOT"),
        )?;
        ensure(parse_dot(&g.to_dot()).as_ref() == Ok(&g), || {
            format!("{name}: seed DOT")
        })?;
    }

    // label bijections
    for n in (4..=22).step_by(3) {
        let isets = enumerate_isets(&cycle(n).unwrap()).unwrap();
        let labels: BTreeSet<_> = isets
            .iter()
            .map(|&s| {
                let label = cycle_iset_label(n, s).unwrap();
                (label_to_iset(n, label).unwrap() == s).then_some(label)
            })
            .collect::<Option<_>>()
            .ok_or(format!("C_{n}: label round trip failed"))?;
        let all: BTreeSet<_> = cycle_labels(n).unwrap().into_iter().collect();
        ensure(labels == all, || {
            format!("C_{n}: labels are not a bijection")
        })?;
    }
    for n in (4..=19).step_by(3) {
        let k = n / 3;
        let ig = build_igraph(&path(n).unwrap()).unwrap();
        let pairs: BTreeSet<_> = path_pair_labels(&ig).into_iter().collect();
        let all: BTreeSet<_> = (1..=k + 2)
            .flat_map(|i| (i + 1..=k + 2).map(move |j| (i, j)))
            .collect();
        ensure(pairs == all && pairs.len() == ig.order(), || {
            format!("P_{n}: pairs are not a bijection")
        })?;
    }
    Ok(format!(
        "{checked} ordered i-set pairs over P_1..21 and C_3..22, zero violations"
    ))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 9] = [
        ("path i-set counts", path_counts),
        ("cycle i-set counts", cycle_counts),
        ("path i-graph structure", path_structure),
        ("cycle i-graph structure", cycle_structure),
        ("degree law", degree_law),
        ("Hamiltonicity classification", hamilton_classification),
        ("H-subgraph decomposition", h_decomposition),
        ("constructive traceability", construction),
        ("property suite", property_suite),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("[PASS] {}. {name}: {detail}", i + 1),
            Err(reason) => {
                println!("[FAIL] {}. {name}: {reason}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
