use std::fmt;

use serde::{Deserialize, Serialize};

use crate::domination::ensure_iset;
use crate::error::{Error, Result};
use crate::graph::{cycle, Graph, VertexSet};

/// Returns `k` for `n = 3k + 1`, `k >= 1`.
pub(crate) fn bracelet_rank(n: usize) -> Result<usize> {
    if n < 4 || n % 3 != 1 {
        return Err(Error::InvalidParameter(format!(
            "n = {n} is not of the form 3k+1 with k >= 1"
        )));
    }
    Ok((n - 1) / 3)
}

/// An i-set of `C_{3k+1}` named by its two doubly dominated vertices
/// `<j, l>`. Unordered; stored with `j < l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CycleISetLabel {
    j: usize,
    l: usize,
}

impl CycleISetLabel {
    /// Builds `<a, b>` on `C_n`, reducing both residues mod `n`.
    pub fn new(n: usize, a: isize, b: isize) -> Result<Self> {
        bracelet_rank(n)?;
        let a = a.rem_euclid(n as isize) as usize;
        let b = b.rem_euclid(n as isize) as usize;
        let label = CycleISetLabel {
            j: a.min(b),
            l: a.max(b),
        };
        if !label.is_valid(n) {
            return Err(Error::InvalidParameter(format!(
                "{label} is not an i-set label of C_{n}"
            )));
        }
        Ok(label)
    }

    /// Like [`CycleISetLabel::new`] but `None` for pairs that name no i-set.
    pub fn try_new(n: usize, a: isize, b: isize) -> Option<Self> {
        Self::new(n, a, b).ok()
    }

    pub fn pair(self) -> (usize, usize) {
        (self.j, self.l)
    }

    /// `l - j = 3s + 2 (mod n)` for some `s`; for `n = 3k + 1` this single
    /// residue test covers both orientations.
    pub fn is_valid(self, n: usize) -> bool {
        n % 3 == 1 && n >= 4 && self.l < n && self.j < self.l && (self.l - self.j) % 3 == 2
    }

    /// Clockwise offset from `j` to `l`.
    pub fn offset(self) -> usize {
        self.l - self.j
    }

    /// Circular distance between the two vertices on `C_n`.
    pub fn distance(self, n: usize) -> usize {
        self.offset().min(n - self.offset())
    }

    pub fn iset_type(self, n: usize) -> Result<ISetType> {
        if !self.is_valid(n) {
            return Err(Error::InvalidParameter(format!(
                "{self} is not an i-set label of C_{n}"
            )));
        }
        Ok(match self.distance(n) {
            2 => ISetType::Type1,
            5 => ISetType::Type2a,
            _ => ISetType::Type2b,
        })
    }

    /// Orientations `(a, b)` with `b = a + 2 (mod n)`; two only on `C_4`.
    fn type1_orientations(self, n: usize) -> Vec<(isize, isize)> {
        let (j, l) = (self.j as isize, self.l as isize);
        let mut out = Vec::new();
        if (self.l + n - self.j) % n == 2 {
            out.push((j, l));
        }
        if (self.j + n - self.l) % n == 2 {
            out.push((l, j));
        }
        out
    }

    /// Neighbours by the bracelet rules: a Type 1 label `<j, j+2>` is joined to
    /// `<j, j+5>` and `<j-3, j+2>`; every other label to `<j±3, l>` and
    /// `<j, l±3>`. Candidates that are not labels are dropped.
    pub fn bracelet_neighbors(self, n: usize) -> Vec<CycleISetLabel> {
        let (j, l) = (self.j as isize, self.l as isize);
        let candidates: Vec<(isize, isize)> = if self.distance(n) == 2 {
            self.type1_orientations(n)
                .into_iter()
                .flat_map(|(a, b)| [(a, b + 3), (a - 3, b)])
                .collect()
        } else {
            vec![(j - 3, l), (j + 3, l), (j, l - 3), (j, l + 3)]
        };
        let mut out: Vec<_> = candidates
            .into_iter()
            .filter_map(|(a, b)| Self::try_new(n, a, b))
            .filter(|&c| c != self)
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

impl fmt::Display for CycleISetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{},{}>", self.j, self.l)
    }
}

/// Every valid label of `C_{3k+1}` in increasing `(j, l)` order.
pub fn cycle_labels(n: usize) -> Result<Vec<CycleISetLabel>> {
    bracelet_rank(n)?;
    Ok((0..n)
        .flat_map(|j| (j + 2..n).step_by(3).map(move |l| CycleISetLabel { j, l }))
        .collect())
}

/// The i-set of `C_n` (`n = 3k + 1`) whose doubly dominated vertices are the
/// two vertices of `label`.
pub fn label_to_iset(n: usize, label: CycleISetLabel) -> Result<VertexSet> {
    if !label.is_valid(n) {
        return Err(Error::InvalidParameter(format!(
            "{label} is not an i-set label of C_{n}"
        )));
    }
    if n > crate::graph::MAX_SEED_ORDER {
        return Err(Error::TooLarge {
            order: n,
            limit: crate::graph::MAX_SEED_ORDER,
        });
    }
    let (j, l) = label.pair();
    let mut s = VertexSet::default();
    // j+1, j+4, .., l-1, then l+1, l+4, .., j-1 (wrapping)
    let mut v = j + 1;
    while v < l {
        s.insert(v);
        v += 3;
    }
    let mut v = l + 1;
    while v < j + n {
        s.insert(v % n);
        v += 3;
    }
    Ok(s)
}

/// Names an i-set of `C_n` (`n = 3k + 1`) by its doubly dominated vertices.
pub fn cycle_iset_label(n: usize, s: VertexSet) -> Result<CycleISetLabel> {
    bracelet_rank(n)?;
    let g: Graph = cycle(n)?;
    ensure_iset(&g, s, n.div_ceil(3))?;
    let doubly: Vec<usize> = (0..n)
        .filter(|&v| !s.contains(v) && s.contains((v + 1) % n) && s.contains((v + n - 1) % n))
        .collect();
    match doubly[..] {
        [a, b] => CycleISetLabel::new(n, a as isize, b as isize),
        _ => Err(Error::InvalidISet(format!(
            "{s} has {} doubly dominated vertices",
            doubly.len()
        ))),
    }
}

/// Classification of labels by circular distance: 2 (Type 1), 5 (Type 2a),
/// anything else (Type 2b).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ISetType {
    Type1,
    Type2a,
    Type2b,
}

/// Type of `label` on `C_n`.
pub fn iset_type(n: usize, label: CycleISetLabel) -> Result<ISetType> {
    label.iset_type(n)
}

/// Position `(i, j)` of the two small intervals of an i-set of `P_{3k+1}`,
/// `1 <= i < j <= k + 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticeLabel {
    pub i: usize,
    pub j: usize,
}

impl LatticeLabel {
    pub fn new(k: usize, i: usize, j: usize) -> Result<Self> {
        if 1 <= i && i < j && j <= k + 2 {
            Ok(LatticeLabel { i, j })
        } else {
            Err(Error::InvalidParameter(format!(
                "({i},{j}) is not a lattice label for k = {k}"
            )))
        }
    }

    /// Grid adjacency: one coordinate differs by exactly one, the other equal.
    pub fn is_adjacent(self, other: LatticeLabel) -> bool {
        let di = self.i.abs_diff(other.i);
        let dj = self.j.abs_diff(other.j);
        (di == 1 && dj == 0) || (di == 0 && dj == 1)
    }
}

impl fmt::Display for LatticeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}
