//! Explicit Hamiltonian paths in the i-graphs of `C_{6k+1}`, assembled from
//! the cycles `H_{l,l+3}`.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::families::{bracelet, cycle_labels, CycleISetLabel};
use crate::graph::Graph;

use super::is_hamiltonian_path;

/// Returns `k` for `n = 6k + 1`, `k >= 3`.
fn rank_6k1(n: usize) -> Result<usize> {
    if n % 6 != 1 || n < 19 {
        return Err(Error::InvalidParameter(format!(
            "n = {n} is not of the form 6k+1 with k >= 3"
        )));
    }
    Ok((n - 1) / 6)
}

/// The admissible `l`: `l = 2 (mod 6)`, `2 <= l <= 3k - 1`.
fn offsets(k: usize) -> impl Iterator<Item = usize> {
    (2..=3 * k - 1).step_by(6)
}

fn label(n: usize, a: isize, b: isize) -> CycleISetLabel {
    CycleISetLabel::new(n, a, b).expect("offsets 2 mod 3 name i-sets")
}

/// Labels `<j, j+l>` and `<j, j+l+3>` for `j` in `0..n`, in label order.
pub fn h_subgraph_labels(n: usize, ell: usize) -> Result<Vec<CycleISetLabel>> {
    let k = rank_6k1(n)?;
    if ell % 6 != 2 || ell > 3 * k - 1 {
        return Err(Error::InvalidParameter(format!(
            "l = {ell} must be 2 mod 6 and at most {} for n = {n}",
            3 * k - 1
        )));
    }
    let set: BTreeSet<CycleISetLabel> = (0..n as isize)
        .flat_map(|j| [ell, ell + 3].map(|d| label(n, j, j + d as isize)))
        .collect();
    Ok(set.into_iter().collect())
}

/// Edges of the closed walk `<0,l>, <0,l+3>, <3,l+3>, <3,l+6>, ..`: for each
/// `j`, `<j,j+l> - <j,j+l+3>` and `<j,j+l+3> - <j+3,j+l+3>`.
fn walk_edges(n: usize, ell: usize) -> BTreeSet<(CycleISetLabel, CycleISetLabel)> {
    let ell = ell as isize;
    (0..n as isize)
        .flat_map(|j| {
            [
                (label(n, j, j + ell), label(n, j, j + ell + 3)),
                (label(n, j, j + ell + 3), label(n, j + 3, j + ell + 3)),
            ]
        })
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect()
}

/// The cycle `H_{l,l+3}` traced by that walk, on the vertices of
/// [`h_subgraph_labels`] (labelled `{j,l}`).
///
/// For `l = 3k - 4` with `k` even, the subgraph of the i-graph induced by
/// these labels also holds the chords `<j,j+3k-1> - <j,j+3k+2>` (both ends
/// lie at distance `3k - 1`). The chords are not part of `H_{l,l+3}`.
pub fn h_subgraph(n: usize, ell: usize) -> Result<Graph> {
    let vertices = h_subgraph_labels(n, ell)?;
    let index: HashMap<CycleISetLabel, usize> =
        vertices.iter().enumerate().map(|(i, &l)| (l, i)).collect();
    let edges: Vec<(usize, usize)> = walk_edges(n, ell)
        .into_iter()
        .map(|(a, b)| (index[&a], index[&b]))
        .collect();
    let names = vertices
        .iter()
        .map(|l| {
            let (j, m) = l.pair();
            format!("{{{j},{m}}}")
        })
        .collect();
    Graph::from_edge_list(vertices.len(), &edges)?.with_labels(names)
}

/// A Hamiltonian path of the i-graph of `C_{6k+1}`.
///
/// The cycles `H_{l,l+3}` partition the vertices. The connecting path
/// `<0,2>, <0,5>, .., <0,l+3>` (up to the largest admissible `l`) alternates
/// between an edge of one of these cycles and an edge joining consecutive
/// ones. Removing the former and adding the latter turns the union of cycles
/// into a single spanning path, which is walked from `<0,2>` and checked
/// against the bracelet before it is returned.
pub fn construct_hamilton_path_6k1(k: usize) -> Result<Vec<CycleISetLabel>> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!(
            "k must be at least 3, got {k}"
        )));
    }
    let n = 6 * k + 1;
    let labels = cycle_labels(n)?;
    let index: HashMap<CycleISetLabel, usize> =
        labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
    let graph = bracelet(2 * k)?;

    let mut t = BTreeSet::new();
    for ell in offsets(k) {
        for (a, b) in walk_edges(n, ell) {
            let (u, v) = (index[&a], index[&b]);
            if !graph.has_edge(u, v) || !t.insert((u.min(v), u.max(v))) {
                return Err(Error::Construction(format!(
                    "{a} - {b} is not a new i-graph edge"
                )));
            }
        }
    }
    let cycle_edges = t.clone();

    let last = offsets(k).last().expect("k >= 3 has an offset");
    let connecting: Vec<usize> = (2..=last + 3)
        .step_by(3)
        .map(|d| index[&label(n, 0, d as isize)])
        .collect();
    for w in connecting.windows(2) {
        let e = (w[0].min(w[1]), w[0].max(w[1]));
        if cycle_edges.contains(&e) {
            t.remove(&e);
        } else if graph.has_edge(e.0, e.1) {
            t.insert(e);
        } else {
            return Err(Error::Construction(format!(
                "{} and {} are not adjacent",
                labels[e.0], labels[e.1]
            )));
        }
    }

    let mut adj = vec![Vec::new(); labels.len()];
    for &(u, v) in &t {
        adj[u].push(v);
        adj[v].push(u);
    }
    let start = connecting[0];
    if adj[start].len() != 1 {
        return Err(Error::Construction(format!(
            "{} is not an end of T",
            labels[start]
        )));
    }
    let mut walk = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = adj[cur].iter().find(|&&w| w != prev) {
        if walk.len() > labels.len() {
            return Err(Error::Construction("T contains a cycle".into()));
        }
        walk.push(next);
        prev = cur;
        cur = next;
    }
    if !is_hamiltonian_path(&graph, &walk) {
        return Err(Error::Construction(format!(
            "walk covers {} of {} vertices",
            walk.len(),
            labels.len()
        )));
    }
    Ok(walk.into_iter().map(|v| labels[v]).collect())
}
