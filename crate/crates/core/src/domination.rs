//! Independent domination: the number i(G), enumeration of all i-sets, and
//! the run-length ("gap") view of i-sets of paths and cycles.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{check_seed_order, is_dominating, is_independent, Graph, VertexSet};

/// Largest graph the exhaustive subset oracle accepts.
pub const ORACLE_MAX_ORDER: usize = 30;

struct Search<'a> {
    closed: &'a [u64],
    full: u64,
    target: u32,
    first_only: bool,
    found: Vec<u64>,
}

impl Search<'_> {
    /// Branches on the closed neighbourhood of the lowest undominated
    /// vertex. Candidates tried earlier are forbidden in later branches, so
    /// every set is produced once.
    fn run(&mut self, chosen: u64, forbidden: u64, dominated: u64) {
        if self.first_only && !self.found.is_empty() {
            return;
        }
        if dominated == self.full {
            if chosen.count_ones() == self.target || self.first_only {
                self.found.push(chosen);
            }
            return;
        }
        let left = self.target - chosen.count_ones();
        if left == 0 {
            return;
        }
        let undominated = self.full & !dominated;
        let mut rest = undominated;
        while rest != 0 {
            let w = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.closed[w] & !forbidden == 0 {
                return;
            }
        }
        let v = undominated.trailing_zeros() as usize;
        let mut candidates = self.closed[v] & !forbidden;
        let mut excluded = 0u64;
        while candidates != 0 {
            let u = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            let bit = 1u64 << u;
            self.run(
                chosen | bit,
                forbidden | self.closed[u] | excluded,
                dominated | self.closed[u],
            );
            excluded |= bit;
        }
    }
}

fn full_mask(order: usize) -> u64 {
    if order == 64 {
        u64::MAX
    } else {
        (1u64 << order) - 1
    }
}

/// i(G): the least size of an independent dominating set, found by trying
/// sizes 1, 2, .. with an independence-pruned backtracking search.
pub fn independent_domination_number(g: &Graph) -> Result<usize> {
    if g.order() == 0 {
        return Err(Error::InvalidParameter("graph has no vertices".into()));
    }
    let closed = g.closed_masks()?;
    for size in 1..=g.order() as u32 {
        let mut search = Search {
            closed: &closed,
            full: full_mask(g.order()),
            target: size,
            first_only: true,
            found: Vec::new(),
        };
        search.run(0, 0, 0);
        if !search.found.is_empty() {
            return Ok(size as usize);
        }
    }
    unreachable!("every maximal independent set dominates")
}

/// Every independent dominating set of size i(G), in lexicographic order of
/// the sorted member lists.
pub fn enumerate_isets(g: &Graph) -> Result<Vec<VertexSet>> {
    check_seed_order(g.order())?;
    let size = independent_domination_number(g)?;
    let closed = g.closed_masks()?;
    let mut search = Search {
        closed: &closed,
        full: full_mask(g.order()),
        target: size as u32,
        first_only: false,
        found: Vec::new(),
    };
    search.run(0, 0, 0);
    let mut sets: Vec<VertexSet> = search.found.into_iter().map(VertexSet::from_mask).collect();
    sets.sort();
    Ok(sets)
}

/// Counts i-sets by scanning every subset of each size in increasing order,
/// using only the two definitional predicates.
pub fn oracle_count_isets(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n > ORACLE_MAX_ORDER {
        return Err(Error::TooLarge {
            order: n,
            limit: ORACLE_MAX_ORDER,
        });
    }
    if n == 0 {
        return Err(Error::InvalidParameter("graph has no vertices".into()));
    }
    for size in 1..=n {
        let mut count = 0;
        for_each_subset(n, size, |mask| {
            let s = VertexSet::from_mask(mask);
            if is_independent(g, s).unwrap() && is_dominating(g, s).unwrap() {
                count += 1;
            }
        });
        if count > 0 {
            return Ok(count);
        }
    }
    unreachable!("a graph with vertices has a maximal independent set")
}

/// Visits all `size`-subsets of `0..n` as masks (Gosper's hack).
fn for_each_subset(n: usize, size: usize, mut visit: impl FnMut(u64)) {
    if size > n {
        return;
    }
    let limit = 1u64 << n;
    let mut mask = (1u64 << size) - 1;
    while mask < limit {
        visit(mask);
        let low = mask & mask.wrapping_neg();
        let ripple = mask + low;
        mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
}

/// `s` is independent and no vertex outside `s` can be added while keeping it
/// independent.
pub fn is_maximal_independent(g: &Graph, s: VertexSet) -> Result<bool> {
    if !is_independent(g, s)? {
        return Ok(false);
    }
    let extendable = (0..g.order())
        .filter(|&v| !s.contains(v))
        .any(|v| g.neighbors(v).iter().all(|&w| !s.contains(w)));
    Ok(!extendable)
}

/// Checks that `s` is an i-set of `g`, given `size = i(g)`.
pub(crate) fn ensure_iset(g: &Graph, s: VertexSet, size: usize) -> Result<()> {
    if !s.fits(g) {
        return Err(Error::InvalidISet(format!(
            "{s} has members outside the graph"
        )));
    }
    if s.len() != size {
        return Err(Error::InvalidISet(format!(
            "{s} has {} members, i(G) = {size}",
            s.len()
        )));
    }
    if !is_independent(g, s)? {
        return Err(Error::InvalidISet(format!("{s} is not independent")));
    }
    if !is_dominating(g, s)? {
        return Err(Error::InvalidISet(format!("{s} is not dominating")));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GapMode {
    /// Paths: `t = |S| + 1` runs, the two end runs may be empty.
    Linear,
    /// Cycles: one run after each member, clockwise from the smallest member.
    Circular,
}

/// Lengths of the maximal runs of non-members between consecutive members
/// of an i-set of a path or cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapProfile {
    pub mode: GapMode,
    pub gaps: Vec<usize>,
    pub total: usize,
}

impl GapProfile {
    fn lower_bound(&self, index: usize) -> usize {
        match self.mode {
            GapMode::Linear if index == 0 || index + 1 == self.gaps.len() => 0,
            _ => 1,
        }
    }

    /// A gap is small when it sits at its lower bound.
    pub fn is_small(&self, index: usize) -> bool {
        self.gaps[index] == self.lower_bound(index)
    }

    pub fn small_count(&self) -> usize {
        (0..self.gaps.len()).filter(|&i| self.is_small(i)).count()
    }

    pub fn small_indices(&self) -> Vec<usize> {
        (0..self.gaps.len()).filter(|&i| self.is_small(i)).collect()
    }
}

fn is_path_graph(g: &Graph) -> bool {
    let n = g.order();
    g.edge_count() + 1 == n && (1..n).all(|i| g.has_edge(i - 1, i))
}

fn is_cycle_graph(g: &Graph) -> bool {
    let n = g.order();
    n >= 3 && g.edge_count() == n && (0..n).all(|i| g.has_edge(i, (i + 1) % n))
}

/// Run-length decomposition of `V(g) - s` for an i-set `s` of a path
/// (linear) or cycle (circular) in its natural vertex order.
pub fn gap_profile(g: &Graph, s: VertexSet, mode: GapMode) -> Result<GapProfile> {
    let shape_ok = match mode {
        GapMode::Linear => is_path_graph(g),
        GapMode::Circular => is_cycle_graph(g),
    };
    if !shape_ok {
        return Err(Error::InvalidGraph(format!(
            "not a {mode:?} path/cycle in natural order"
        )));
    }
    let n = g.order();
    ensure_iset(g, s, n.div_ceil(3))?;
    let members = s.members();
    let gaps = match mode {
        GapMode::Linear => {
            let mut gaps = vec![members[0]];
            gaps.extend(members.windows(2).map(|w| w[1] - w[0] - 1));
            gaps.push(n - 1 - members[members.len() - 1]);
            gaps
        }
        GapMode::Circular => (0..members.len())
            .map(|i| {
                let next = members.get(i + 1).copied().unwrap_or(members[0] + n);
                next - members[i] - 1
            })
            .collect(),
    };
    Ok(GapProfile {
        mode,
        total: gaps.iter().sum(),
        gaps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path};

    fn set(v: &[usize]) -> VertexSet {
        VertexSet::from_indices(v).unwrap()
    }

    #[test]
    fn domination_numbers() {
        assert_eq!(independent_domination_number(&path(7).unwrap()).unwrap(), 3);
        assert_eq!(independent_domination_number(&Graph::empty(1)).unwrap(), 1);
        assert_eq!(
            independent_domination_number(&cycle(13).unwrap()).unwrap(),
            5
        );
        assert!(independent_domination_number(&Graph::empty(0)).is_err());
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(
            enumerate_isets(&path(4).unwrap()).unwrap(),
            vec![set(&[0, 2]), set(&[0, 3]), set(&[1, 3])]
        );
        assert_eq!(enumerate_isets(&path(3).unwrap()).unwrap(), vec![set(&[1])]);
        assert_eq!(
            enumerate_isets(&cycle(6).unwrap()).unwrap(),
            vec![set(&[0, 3]), set(&[1, 4]), set(&[2, 5])]
        );
        assert!(matches!(
            enumerate_isets(&Graph::empty(65)),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn oracle_counts() {
        assert_eq!(oracle_count_isets(&path(10).unwrap()).unwrap(), 10);
        assert_eq!(oracle_count_isets(&cycle(8).unwrap()).unwrap(), 8);
        assert_eq!(oracle_count_isets(&cycle(13).unwrap()).unwrap(), 26);
        assert!(matches!(
            oracle_count_isets(&cycle(31).unwrap()),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn subset_walk_counts_binomials() {
        let mut count = 0;
        for_each_subset(10, 4, |m| {
            assert_eq!(m.count_ones(), 4);
            count += 1;
        });
        assert_eq!(count, 210);
    }

    #[test]
    fn maximal_independence() {
        let p3 = path(3).unwrap();
        assert!(is_maximal_independent(&p3, set(&[1])).unwrap());
        assert!(!is_maximal_independent(&p3, set(&[0])).unwrap());
        assert!(is_maximal_independent(&cycle(5).unwrap(), set(&[1, 3])).unwrap());
    }

    #[test]
    fn gap_profiles() {
        let p10 = path(10).unwrap();
        let prof = gap_profile(&p10, set(&[0, 2, 5, 8]), GapMode::Linear).unwrap();
        assert_eq!(prof.gaps, vec![0, 1, 2, 2, 1]);
        assert_eq!(prof.total, 6);
        assert_eq!(prof.small_indices(), vec![0, 1]);

        let c6 = cycle(6).unwrap();
        assert_eq!(
            gap_profile(&c6, set(&[0, 3]), GapMode::Circular)
                .unwrap()
                .gaps,
            vec![2, 2]
        );

        let c13 = cycle(13).unwrap();
        let prof = gap_profile(&c13, set(&[1, 3, 6, 9, 12]), GapMode::Circular).unwrap();
        assert_eq!(prof.gaps.iter().filter(|&&x| x == 1).count(), 2);
        assert_eq!(prof.total, 8);

        assert!(matches!(
            gap_profile(&p10, set(&[0, 2, 5]), GapMode::Linear),
            Err(Error::InvalidISet(_))
        ));
        assert!(matches!(
            gap_profile(&p10, set(&[0, 2, 5, 8]), GapMode::Circular),
            Err(Error::InvalidGraph(_))
        ));
    }

    #[test]
    fn small_gap_counts_follow_residue() {
        for n in 1..=21 {
            let expected = [0, 2, 1][n % 3];
            let g = path(n).unwrap();
            for s in enumerate_isets(&g).unwrap() {
                let prof = gap_profile(&g, s, GapMode::Linear).unwrap();
                assert_eq!(prof.gaps.len(), s.len() + 1);
                assert_eq!(prof.total, n - s.len());
                assert_eq!(prof.small_count(), expected, "P_{n} {s}");
            }
        }
        for n in 3..=21 {
            let expected = [0, 2, 1][n % 3];
            let g = cycle(n).unwrap();
            for s in enumerate_isets(&g).unwrap() {
                let prof = gap_profile(&g, s, GapMode::Circular).unwrap();
                assert!(prof.gaps.iter().all(|&x| (1..=2).contains(&x)));
                assert_eq!(prof.small_count(), expected, "C_{n} {s}");
            }
        }
    }
}
