//! Structural analysis of i-graphs: isomorphism, bipartiteness, exact
//! Hamiltonicity with checkable witnesses, and non-Hamiltonicity
//! certificates.

mod hamilton;
mod iso;
mod traceable;

use std::collections::VecDeque;

use serde::Serialize;

use crate::graph::Graph;

pub use hamilton::{search_cycle, search_path, SearchOutcome};
pub use iso::{are_isomorphic, IsoWitness, ISO_MAX_ORDER};
pub use traceable::{construct_hamilton_path_6k1, h_subgraph, h_subgraph_labels};

/// Default branching budget for the exact searches.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// A proper 2-colouring (`false`/`true` per vertex), if one exists.
pub fn two_coloring(g: &Graph) -> Option<Vec<bool>> {
    let mut color: Vec<Option<bool>> = vec![None; g.order()];
    for root in 0..g.order() {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap();
            for &w in g.neighbors(u) {
                match color[w] {
                    None => {
                        color[w] = Some(!cu);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cu => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(color.into_iter().map(Option::unwrap).collect())
}

/// Colour-class sizes `(larger, smaller)` of a bipartite graph, summed over
/// components with each component's larger class counted first. `None`
/// when `g` has an odd cycle.
pub fn bipartite_parts(g: &Graph) -> Option<(usize, usize)> {
    let coloring = two_coloring(g)?;
    let mut totals = (0, 0);
    for comp in g.components() {
        let ones = comp.iter().filter(|&&v| coloring[v]).count();
        let zeros = comp.len() - ones;
        totals.0 += ones.max(zeros);
        totals.1 += ones.min(zeros);
    }
    Some(totals)
}

/// The closed neighbourhood of the degree-2 vertices, when it induces a
/// 2-regular subgraph on a proper subset of the vertices and every edge of
/// that subgraph touches a degree-2 vertex. Those edges all lie on any
/// Hamiltonian cycle, yet they already close into shorter cycles.
pub fn forced_subcycle_certificate(g: &Graph) -> Option<Vec<usize>> {
    let mut inside = vec![false; g.order()];
    let mut any = false;
    for v in (0..g.order()).filter(|&v| g.degree(v) == 2) {
        any = true;
        inside[v] = true;
        for &w in g.neighbors(v) {
            inside[w] = true;
        }
    }
    let vertices: Vec<usize> = (0..g.order()).filter(|&v| inside[v]).collect();
    (any && check_forced_subcycle(g, &vertices)).then_some(vertices)
}

/// Verifies a forced-subcycle certificate independently of how it was found.
pub fn check_forced_subcycle(g: &Graph, vertices: &[usize]) -> bool {
    let mut inside = vec![false; g.order()];
    for &v in vertices {
        if v >= g.order() || std::mem::replace(&mut inside[v], true) {
            return false;
        }
    }
    if vertices.is_empty() || vertices.len() == g.order() {
        return false;
    }
    let closed_under_forcing = (0..g.order())
        .filter(|&v| g.degree(v) == 2)
        .all(|v| inside[v] && g.neighbors(v).iter().all(|&w| inside[w]));
    let two_regular = vertices
        .iter()
        .all(|&v| g.neighbors(v).iter().filter(|&&w| inside[w]).count() == 2);
    let all_forced = vertices.iter().all(|&v| {
        g.neighbors(v)
            .iter()
            .filter(|&&w| inside[w])
            .all(|&w| g.degree(v) == 2 || g.degree(w) == 2)
    });
    closed_under_forcing && two_regular && all_forced
}

/// Visits every vertex exactly once with consecutive vertices adjacent.
pub fn is_hamiltonian_path(g: &Graph, seq: &[usize]) -> bool {
    if seq.len() != g.order() || seq.is_empty() {
        return false;
    }
    let mut seen = vec![false; g.order()];
    for &v in seq {
        if v >= g.order() || std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    seq.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

/// A Hamiltonian path whose ends are also adjacent, on at least 3 vertices.
pub fn is_hamiltonian_cycle(g: &Graph, seq: &[usize]) -> bool {
    seq.len() >= 3 && is_hamiltonian_path(g, seq) && g.has_edge(seq[0], seq[seq.len() - 1])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HamiltonStatus {
    /// Has a Hamiltonian cycle.
    Hamiltonian,
    /// Has a Hamiltonian path; the cycle question was not examined.
    Traceable,
    /// Has a Hamiltonian path but no Hamiltonian cycle.
    TraceableOnly,
    /// Has neither.
    Neither,
    /// The step budget ran out before a decision.
    Unknown,
}

/// Why a graph cannot have a Hamiltonian cycle (or path).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Obstruction {
    /// Bipartite with colour classes differing by at least two: no path.
    BipartiteImbalance { part_a: usize, part_b: usize },
    /// Degree-2 vertices force a cycle through exactly these vertices.
    ForcedSubcycle { vertices: Vec<usize> },
    /// More than one connected component.
    Disconnected { components: usize },
}

impl Obstruction {
    /// Re-derives the certificate's claim from `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        match self {
            Obstruction::BipartiteImbalance { part_a, part_b } => {
                g.is_connected()
                    && bipartite_parts(g) == Some((*part_a, *part_b))
                    && part_a.abs_diff(*part_b) >= 2
            }
            Obstruction::ForcedSubcycle { vertices } => check_forced_subcycle(g, vertices),
            Obstruction::Disconnected { components } => {
                *components >= 2 && g.components().len() == *components
            }
        }
    }
}

/// Outcome of a Hamiltonicity analysis with its evidence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HamiltonReport {
    pub status: HamiltonStatus,
    /// A Hamiltonian cycle for `hamiltonian`, a Hamiltonian path for the
    /// traceable statuses.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub obstruction: Option<Obstruction>,
    pub steps: u64,
}

impl HamiltonReport {
    fn new(status: HamiltonStatus) -> Self {
        HamiltonReport {
            status,
            witness: None,
            obstruction: None,
            steps: 0,
        }
    }

    /// Checks the witness and obstruction against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        let witness_ok = match (&self.status, &self.witness) {
            (HamiltonStatus::Hamiltonian, Some(w)) => is_hamiltonian_cycle(g, w),
            (HamiltonStatus::Traceable | HamiltonStatus::TraceableOnly, Some(w)) => {
                is_hamiltonian_path(g, w)
            }
            (HamiltonStatus::Neither | HamiltonStatus::Unknown, None) => true,
            _ => false,
        };
        witness_ok && self.obstruction.as_ref().is_none_or(|o| o.verify(g))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports always serialize")
    }
}

fn disconnected(g: &Graph) -> Option<HamiltonReport> {
    let components = g.components().len();
    (components > 1).then(|| HamiltonReport {
        obstruction: Some(Obstruction::Disconnected { components }),
        ..HamiltonReport::new(HamiltonStatus::Neither)
    })
}

fn imbalance(g: &Graph) -> Option<Obstruction> {
    bipartite_parts(g)
        .filter(|(a, b)| a.abs_diff(*b) >= 2)
        .map(|(part_a, part_b)| Obstruction::BipartiteImbalance { part_a, part_b })
}

/// Full classification: Hamiltonian, traceable only, or neither.
///
/// Certificates are tried before search: disconnection, bipartite
/// imbalance, then a forced subcycle. Unequal bipartite classes also rule
/// out a cycle. Otherwise the exact cycle search runs, followed by the path
/// search when no cycle exists. Both share `budget`.
pub fn hamiltonian_cycle(g: &Graph, budget: u64) -> HamiltonReport {
    let n = g.order();
    if n == 0 {
        return HamiltonReport::new(HamiltonStatus::Neither);
    }
    if let Some(report) = disconnected(g) {
        return report;
    }
    if n <= 2 {
        // K_1 and K_2 have a spanning path but no cycle
        return HamiltonReport {
            witness: Some((0..n).collect()),
            ..HamiltonReport::new(HamiltonStatus::TraceableOnly)
        };
    }
    if let Some(obstruction) = imbalance(g) {
        return HamiltonReport {
            obstruction: Some(obstruction),
            ..HamiltonReport::new(HamiltonStatus::Neither)
        };
    }

    let mut steps = 0;
    let unequal_parts = bipartite_parts(g).is_some_and(|(a, b)| a != b);
    let obstruction =
        forced_subcycle_certificate(g).map(|vertices| Obstruction::ForcedSubcycle { vertices });
    if obstruction.is_none() && !unequal_parts {
        let (outcome, spent) = search_cycle(g, budget);
        steps += spent;
        match outcome {
            SearchOutcome::Found(cycle) => {
                return HamiltonReport {
                    witness: Some(cycle),
                    steps,
                    ..HamiltonReport::new(HamiltonStatus::Hamiltonian)
                }
            }
            SearchOutcome::BudgetExceeded => {
                return HamiltonReport {
                    steps,
                    ..HamiltonReport::new(HamiltonStatus::Unknown)
                }
            }
            SearchOutcome::Exhausted => {}
        }
    }

    let (outcome, spent) = search_path(g, budget.saturating_sub(steps));
    steps += spent;
    let (status, witness) = match outcome {
        SearchOutcome::Found(path) => (HamiltonStatus::TraceableOnly, Some(path)),
        SearchOutcome::Exhausted => (HamiltonStatus::Neither, None),
        SearchOutcome::BudgetExceeded => (HamiltonStatus::Unknown, None),
    };
    HamiltonReport {
        status,
        witness,
        obstruction,
        steps,
    }
}

/// Decides traceability only: `traceable` with a path, or `neither`.
pub fn hamiltonian_path(g: &Graph, budget: u64) -> HamiltonReport {
    if g.order() == 0 {
        return HamiltonReport::new(HamiltonStatus::Neither);
    }
    if let Some(report) = disconnected(g) {
        return report;
    }
    if let Some(obstruction) = imbalance(g) {
        return HamiltonReport {
            obstruction: Some(obstruction),
            ..HamiltonReport::new(HamiltonStatus::Neither)
        };
    }
    let (outcome, steps) = search_path(g, budget);
    let (status, witness) = match outcome {
        SearchOutcome::Found(path) => (HamiltonStatus::Traceable, Some(path)),
        SearchOutcome::Exhausted => (HamiltonStatus::Neither, None),
        SearchOutcome::BudgetExceeded => (HamiltonStatus::Unknown, None),
    };
    HamiltonReport {
        status,
        witness,
        obstruction: None,
        steps,
    }
}
