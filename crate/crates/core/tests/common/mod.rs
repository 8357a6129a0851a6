#![allow(dead_code)]

use igraphs::domination::{gap_profile, GapMode};
use igraphs::graph::{cycle, path, Graph, VertexSet};
use igraphs::reconfig::IGraph;

/// Seeds of the full sweep: `P_1 ..= P_21` and `C_3 ..= C_22`.
pub fn sweep_seeds() -> Vec<(String, Graph)> {
    (1..=21)
        .map(|n| (format!("P_{n}"), path(n).unwrap()))
        .chain((3..=22).map(|n| (format!("C_{n}"), cycle(n).unwrap())))
        .collect()
}

/// Reads back the DOT subset written by `Graph::to_dot`.
pub fn parse_dot(text: &str) -> Result<Graph, String> {
    let body = text
        .trim()
        .strip_prefix("graph G {")
        .and_then(|t| t.strip_suffix('}'))
        .ok_or("missing graph G { .. } wrapper")?;
    let mut labels = Vec::new();
    let mut edges = Vec::new();
    for line in body.lines().map(str::trim).filter(|l| !l.is_empty()) {
        let stmt = line
            .strip_suffix(';')
            .ok_or(format!("unterminated: {line}"))?;
        if let Some((u, v)) = stmt.split_once(" -- ") {
            let u: usize = u.parse().map_err(|_| format!("bad node id {u}"))?;
            let v: usize = v.parse().map_err(|_| format!("bad node id {v}"))?;
            edges.push((u, v));
        } else if let Some((id, rest)) = stmt.split_once(" [label=\"") {
            let id: usize = id.parse().map_err(|_| format!("bad node id {id}"))?;
            let quoted = rest
                .strip_suffix("\"]")
                .ok_or(format!("bad label: {line}"))?;
            if id != labels.len() {
                return Err(format!("node {id} out of order"));
            }
            labels.push(Some(quoted.replace("\\\"", "\"").replace("\\\\", "\\")));
        } else {
            let id: usize = stmt.parse().map_err(|_| format!("bad statement: {line}"))?;
            if id != labels.len() {
                return Err(format!("node {id} out of order"));
            }
            labels.push(None);
        }
    }
    let g = Graph::from_edge_list(labels.len(), &edges).map_err(|e| e.to_string())?;
    if labels.iter().all(Option::is_some) && !labels.is_empty() {
        g.with_labels(labels.into_iter().map(Option::unwrap).collect())
            .map_err(|e| e.to_string())
    } else if labels.iter().all(Option::is_none) {
        Ok(g)
    } else {
        Err("some nodes labelled, some not".into())
    }
}

/// i-graph adjacency straight from the definition: symmetric difference
/// `{x, y}` with `xy` an edge of the seed.
pub fn definitional_edges(g: &Graph, isets: &[VertexSet]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 0..isets.len() {
        for b in a + 1..isets.len() {
            let only_a = isets[a].difference(isets[b]);
            let only_b = isets[b].difference(isets[a]);
            if only_a.len() == 1 && only_b.len() == 1 {
                let (x, y) = (only_a.members()[0], only_b.members()[0]);
                if g.has_edge(x, y) {
                    out.push((a, b));
                }
            }
        }
    }
    out
}

/// `(i,j)` labels of the i-sets of `P_{3k+1}`: 1-based positions of the two
/// small intervals.
pub fn path_pair_labels(ig: &IGraph) -> Vec<(usize, usize)> {
    ig.isets
        .iter()
        .map(|&s| {
            let small = gap_profile(&ig.seed, s, GapMode::Linear)
                .unwrap()
                .small_indices();
            assert_eq!(small.len(), 2);
            (small[0] + 1, small[1] + 1)
        })
        .collect()
}
