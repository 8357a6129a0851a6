//! Exact isomorphism test by individualisation and colour refinement.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`are_isomorphic`].
pub const ISO_MAX_ORDER: usize = 700;

/// A bijection `mapping[v1] = v2` preserving adjacency and non-adjacency.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoWitness {
    pub mapping: Vec<usize>,
}

impl IsoWitness {
    /// Checks the witness edge by edge.
    pub fn verify(&self, g1: &Graph, g2: &Graph) -> bool {
        let n = g1.order();
        if g2.order() != n || self.mapping.len() != n || g1.edge_count() != g2.edge_count() {
            return false;
        }
        let mut hit = vec![false; n];
        for &m in &self.mapping {
            if m >= n || std::mem::replace(&mut hit[m], true) {
                return false;
            }
        }
        g1.edges()
            .all(|(u, v)| g2.has_edge(self.mapping[u], self.mapping[v]))
    }
}

/// Both graphs side by side: vertex `v` of `g2` is `n + v`.
struct Union<'a> {
    n: usize,
    g1: &'a Graph,
    g2: &'a Graph,
}

impl Union<'_> {
    fn neighbors(&self, v: usize) -> Box<dyn Iterator<Item = usize> + '_> {
        if v < self.n {
            Box::new(self.g1.neighbors(v).iter().copied())
        } else {
            Box::new(
                self.g2
                    .neighbors(v - self.n)
                    .iter()
                    .map(move |&w| w + self.n),
            )
        }
    }

    /// Refines `colors` to the coarsest equitable colouring. Returns `false`
    /// when the two sides stop having equal colour-class sizes.
    fn refine(&self, colors: &mut [usize]) -> bool {
        let mut classes = count_classes(colors);
        loop {
            let signatures: Vec<(usize, Vec<usize>)> = (0..2 * self.n)
                .map(|v| {
                    let mut nb: Vec<usize> = self.neighbors(v).map(|w| colors[w]).collect();
                    nb.sort_unstable();
                    (colors[v], nb)
                })
                .collect();
            // names are ranks in sorted-signature order so both sides agree
            let ranked: BTreeMap<&(usize, Vec<usize>), usize> = signatures
                .iter()
                .collect::<BTreeSet<_>>()
                .into_iter()
                .enumerate()
                .map(|(i, sig)| (sig, i))
                .collect();
            for (v, sig) in signatures.iter().enumerate() {
                colors[v] = ranked[sig];
            }
            if !balanced(colors, self.n) {
                return false;
            }
            let now = count_classes(colors);
            if now == classes {
                return true;
            }
            classes = now;
        }
    }

    fn search(&self, colors: Vec<usize>) -> Option<Vec<usize>> {
        // smallest non-singleton class, lowest colour on ties
        let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
        for &c in &colors[..self.n] {
            *sizes.entry(c).or_default() += 1;
        }
        let target = sizes
            .iter()
            .filter(|(_, &s)| s > 1)
            .min_by_key(|(&c, &s)| (s, c))
            .map(|(&c, _)| c);
        let Some(cell) = target else {
            let mut by_color = vec![usize::MAX; colors.len()];
            for v in self.n..2 * self.n {
                by_color[colors[v]] = v - self.n;
            }
            let mapping: Vec<usize> = (0..self.n).map(|v| by_color[colors[v]]).collect();
            let witness = IsoWitness { mapping };
            return witness.verify(self.g1, self.g2).then_some(witness.mapping);
        };
        let fresh = colors.iter().max().map_or(0, |m| m + 1);
        let u = (0..self.n).find(|&v| colors[v] == cell)?;
        for w in (self.n..2 * self.n).filter(|&v| colors[v] == cell) {
            let mut next = colors.clone();
            next[u] = fresh;
            next[w] = fresh;
            if self.refine(&mut next) {
                if let Some(m) = self.search(next) {
                    return Some(m);
                }
            }
        }
        None
    }
}

fn count_classes(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn balanced(colors: &[usize], n: usize) -> bool {
    let mut left = colors[..n].to_vec();
    let mut right = colors[n..].to_vec();
    left.sort_unstable();
    right.sort_unstable();
    left == right
}

/// Decides isomorphism exactly; returns a witness mapping when one exists.
pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> Result<Option<IsoWitness>> {
    for g in [g1, g2] {
        if g.order() > ISO_MAX_ORDER {
            return Err(Error::TooLarge {
                order: g.order(),
                limit: ISO_MAX_ORDER,
            });
        }
    }
    if g1.order() != g2.order() || g1.edge_count() != g2.edge_count() {
        return Ok(None);
    }
    let n = g1.order();
    if n == 0 {
        return Ok(Some(IsoWitness {
            mapping: Vec::new(),
        }));
    }
    let union = Union { n, g1, g2 };
    let mut colors = vec![0; 2 * n];
    if !union.refine(&mut colors) {
        return Ok(None);
    }
    Ok(union.search(colors).map(|mapping| IsoWitness { mapping }))
}
