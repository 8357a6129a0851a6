//! Exact Hamiltonian cycle search over edge decisions.
//!
//! Each edge is free, forced into the cycle, or deleted. After every
//! decision the following rules run to a fixpoint:
//!
//! * a vertex with fewer than two surviving edges is a contradiction;
//! * a vertex with exactly two surviving edges forces both;
//! * a vertex with two forced edges loses all its other edges;
//! * forced edges form vertex-disjoint paths, and the edge joining the two
//!   ends of a path is deleted unless the path already spans the graph.
//!
//! Branching picks an end of a forced path (or any vertex, if none) with
//! the fewest free edges and tries forcing, then deleting, its edge to the
//! most constrained neighbour. A node is also cut when the surviving edges
//! no longer connect the graph.

use std::collections::VecDeque;

use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum EdgeState {
    Free,
    Forced,
    Deleted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    /// A Hamiltonian cycle, as a vertex sequence starting at 0.
    Found(Vec<usize>),
    /// The whole search space was refuted.
    Exhausted,
    /// The step budget ran out first.
    BudgetExceeded,
}

enum Undo {
    Edge(usize, EdgeState),
    End(usize, usize),
    Size(usize, usize),
}

struct Contradiction;

struct Solver {
    n: usize,
    /// (neighbour, edge id), sorted by neighbour
    incident: Vec<Vec<(usize, usize)>>,
    endpoints: Vec<(usize, usize)>,
    state: Vec<EdgeState>,
    alive: Vec<usize>,
    forced: Vec<usize>,
    /// opposite end of the forced path, valid at path ends
    end: Vec<usize>,
    /// vertex count of the forced path, valid at path ends
    size: Vec<usize>,
    trail: Vec<Undo>,
    queue: VecDeque<usize>,
    complete: bool,
    steps: u64,
    budget: u64,
}

impl Solver {
    fn new(g: &Graph, budget: u64) -> Solver {
        let n = g.order();
        let mut incident = vec![Vec::new(); n];
        let mut endpoints = Vec::new();
        for (u, v) in g.edges() {
            let id = endpoints.len();
            endpoints.push((u, v));
            incident[u].push((v, id));
            incident[v].push((u, id));
        }
        for list in &mut incident {
            list.sort_unstable();
        }
        Solver {
            n,
            alive: incident.iter().map(Vec::len).collect(),
            incident,
            state: vec![EdgeState::Free; endpoints.len()],
            endpoints,
            forced: vec![0; n],
            end: (0..n).collect(),
            size: vec![1; n],
            trail: Vec::new(),
            queue: VecDeque::new(),
            complete: false,
            steps: 0,
            budget,
        }
    }

    fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        let list = &self.incident[u];
        list.binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| list[i].1)
    }

    fn set_state(&mut self, e: usize, next: EdgeState) {
        let (u, v) = self.endpoints[e];
        let prev = self.state[e];
        self.trail.push(Undo::Edge(e, prev));
        self.apply(e, prev, next);
        self.queue.push_back(u);
        self.queue.push_back(v);
    }

    fn apply(&mut self, e: usize, from: EdgeState, to: EdgeState) {
        let (u, v) = self.endpoints[e];
        for w in [u, v] {
            match from {
                EdgeState::Deleted => self.alive[w] += 1,
                EdgeState::Forced => self.forced[w] -= 1,
                EdgeState::Free => {}
            }
            match to {
                EdgeState::Deleted => self.alive[w] -= 1,
                EdgeState::Forced => self.forced[w] += 1,
                EdgeState::Free => {}
            }
        }
        self.state[e] = to;
    }

    fn set_end(&mut self, v: usize, to: usize) {
        self.trail.push(Undo::End(v, self.end[v]));
        self.end[v] = to;
    }

    fn set_size(&mut self, v: usize, to: usize) {
        self.trail.push(Undo::Size(v, self.size[v]));
        self.size[v] = to;
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            match self.trail.pop().unwrap() {
                Undo::Edge(e, prev) => {
                    let cur = self.state[e];
                    self.apply(e, cur, prev);
                }
                Undo::End(v, prev) => self.end[v] = prev,
                Undo::Size(v, prev) => self.size[v] = prev,
            }
        }
        self.queue.clear();
        self.complete = false;
    }

    fn delete(&mut self, e: usize) -> Result<(), Contradiction> {
        match self.state[e] {
            EdgeState::Deleted => Ok(()),
            EdgeState::Forced => Err(Contradiction),
            EdgeState::Free => {
                self.set_state(e, EdgeState::Deleted);
                Ok(())
            }
        }
    }

    fn force(&mut self, e: usize) -> Result<(), Contradiction> {
        match self.state[e] {
            EdgeState::Forced => return Ok(()),
            EdgeState::Deleted => return Err(Contradiction),
            EdgeState::Free => {}
        }
        let (u, v) = self.endpoints[e];
        if self.forced[u] == 2 || self.forced[v] == 2 {
            return Err(Contradiction);
        }
        let (a, b) = (self.end[u], self.end[v]);
        if a == v {
            // closes the path u .. v into a cycle
            if self.size[u] != self.n {
                return Err(Contradiction);
            }
            self.set_state(e, EdgeState::Forced);
            self.complete = true;
            return Ok(());
        }
        self.set_state(e, EdgeState::Forced);
        let merged = self.size[u] + self.size[v];
        self.set_end(a, b);
        self.set_end(b, a);
        self.set_size(a, merged);
        self.set_size(b, merged);
        match self.edge_between(a, b) {
            Some(closing) if closing == e => Ok(()),
            Some(closing) if merged == self.n => self.force(closing),
            Some(closing) => self.delete(closing),
            None if merged == self.n => Err(Contradiction),
            None => Ok(()),
        }
    }

    fn free_edges(&self, v: usize) -> Vec<usize> {
        self.incident[v]
            .iter()
            .filter(|&&(_, e)| self.state[e] == EdgeState::Free)
            .map(|&(_, e)| e)
            .collect()
    }

    fn propagate(&mut self) -> Result<(), Contradiction> {
        while let Some(v) = self.queue.pop_front() {
            if self.complete {
                return Ok(());
            }
            if self.alive[v] < 2 {
                return Err(Contradiction);
            }
            if self.forced[v] == 2 && self.alive[v] > 2 {
                for e in self.free_edges(v) {
                    self.delete(e)?;
                }
            } else if self.alive[v] == 2 && self.forced[v] < 2 {
                for e in self.free_edges(v) {
                    self.force(e)?;
                    if self.complete {
                        return Ok(());
                    }
                }
            }
        }
        Ok(())
    }

    fn connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &(w, e) in &self.incident[u] {
                if self.state[e] != EdgeState::Deleted && !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    fn choose_edge(&self) -> Option<usize> {
        let v = (0..self.n)
            .filter(|&v| self.forced[v] < 2 && self.alive[v] > self.forced[v])
            .min_by_key(|&v| (self.forced[v] != 1, self.alive[v] - self.forced[v], v))?;
        self.incident[v]
            .iter()
            .filter(|&&(_, e)| self.state[e] == EdgeState::Free)
            .min_by_key(|&&(w, _)| (self.alive[w], w))
            .map(|&(_, e)| e)
    }

    fn try_branch(
        &mut self,
        apply: impl FnOnce(&mut Self) -> Result<(), Contradiction>,
    ) -> Option<bool> {
        let mark = self.trail.len();
        let result = match apply(self).and_then(|_| self.propagate()) {
            Err(Contradiction) => Some(false),
            Ok(()) if self.complete => Some(true),
            Ok(()) => self.search(),
        };
        if result != Some(true) {
            self.undo_to(mark);
        }
        result
    }

    /// `Some(true)` found, `Some(false)` refuted, `None` out of budget.
    fn search(&mut self) -> Option<bool> {
        self.steps += 1;
        if self.steps > self.budget {
            return None;
        }
        if !self.connected() {
            return Some(false);
        }
        let Some(e) = self.choose_edge() else {
            return Some(false);
        };
        match self.try_branch(|s| s.force(e))? {
            true => Some(true),
            false => self.try_branch(|s| s.delete(e)),
        }
    }

    fn cycle(&self) -> Vec<usize> {
        let mut order = vec![0];
        let mut prev = usize::MAX;
        let mut cur = 0;
        for _ in 1..self.n {
            let next = self.incident[cur]
                .iter()
                .find(|&&(w, e)| self.state[e] == EdgeState::Forced && w != prev)
                .map(|&(w, _)| w)
                .expect("forced edges form a spanning cycle");
            order.push(next);
            prev = cur;
            cur = next;
        }
        order
    }

    fn run(mut self) -> (SearchOutcome, u64) {
        self.queue.extend(0..self.n);
        let outcome = match self.propagate() {
            Err(Contradiction) => Some(false),
            Ok(()) if self.complete => Some(true),
            Ok(()) => self.search(),
        };
        let steps = self.steps;
        match outcome {
            Some(true) => (SearchOutcome::Found(self.cycle()), steps),
            Some(false) => (SearchOutcome::Exhausted, steps),
            None => (SearchOutcome::BudgetExceeded, steps),
        }
    }
}

/// Searches for a Hamiltonian cycle within `budget` branching steps.
/// Returns the outcome and the number of steps spent.
pub fn search_cycle(g: &Graph, budget: u64) -> (SearchOutcome, u64) {
    if g.order() < 3 {
        return (SearchOutcome::Exhausted, 0);
    }
    Solver::new(g, budget).run()
}

/// Searches for a Hamiltonian path by looking for a Hamiltonian cycle
/// through an extra vertex joined to every vertex.
pub fn search_path(g: &Graph, budget: u64) -> (SearchOutcome, u64) {
    let n = g.order();
    match n {
        0 => return (SearchOutcome::Exhausted, 0),
        1 => return (SearchOutcome::Found(vec![0]), 0),
        2 if g.has_edge(0, 1) => return (SearchOutcome::Found(vec![0, 1]), 0),
        2 => return (SearchOutcome::Exhausted, 0),
        _ => {}
    }
    let mut edges: Vec<_> = g.edges().collect();
    edges.extend((0..n).map(|v| (v, n)));
    let augmented = Graph::from_edge_list(n + 1, &edges).expect("augmented edges are valid");
    match Solver::new(&augmented, budget).run() {
        (SearchOutcome::Found(cycle), steps) => {
            let at = cycle.iter().position(|&v| v == n).unwrap();
            let path: Vec<usize> = cycle[at + 1..]
                .iter()
                .chain(&cycle[..at])
                .copied()
                .collect();
            (SearchOutcome::Found(path), steps)
        }
        other => other,
    }
}
