//! Closed-form i-set counts and the predicted i-graphs of paths and cycles:
//! worn lattices, bracelets, paths, cycles and the small exceptional cases.

mod labels;

use std::collections::HashMap;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graph::{complete, cycle, path, Graph};

pub use labels::{
    cycle_iset_label, cycle_labels, iset_type, label_to_iset, CycleISetLabel, ISetType,
    LatticeLabel,
};

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Number of i-sets of `P_n`.
pub fn count_path_isets(n: usize) -> Result<u128> {
    if n == 0 {
        return Err(Error::InvalidParameter("paths start at n = 1".into()));
    }
    let k = n / 3;
    Ok(match n % 3 {
        0 => 1,
        1 => binomial(k + 2, 2),
        _ => (k + 2) as u128,
    })
}

/// Number of i-sets of `C_n`.
pub fn count_cycle_isets(n: usize) -> Result<u128> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycles start at n = 3, got {n}"
        )));
    }
    let k = (n / 3) as u128;
    Ok(match n % 3 {
        0 => 3,
        1 => k * (3 * k + 1) / 2,
        _ => n as u128,
    })
}

/// Dense polynomial with exact non-negative integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Poly(Vec<BigUint>);

impl Poly {
    fn monomial(coefficient: u32, power: usize) -> Poly {
        let mut c = vec![BigUint::from(0u32); power + 1];
        c[power] = BigUint::from(coefficient);
        Poly(c)
    }

    fn mul(&self, other: &Poly) -> Poly {
        let mut out = vec![BigUint::from(0u32); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly(out)
    }

    fn pow(&self, e: usize) -> Poly {
        (0..e).fold(Poly::monomial(1, 0), |acc, _| acc.mul(self))
    }

    fn add(&self, other: &Poly) -> Poly {
        let len = self.0.len().max(other.0.len());
        let zero = BigUint::from(0u32);
        Poly(
            (0..len)
                .map(|i| self.0.get(i).unwrap_or(&zero) + other.0.get(i).unwrap_or(&zero))
                .collect(),
        )
    }

    fn coefficient(&self, power: usize) -> BigUint {
        self.0.get(power).cloned().unwrap_or_default()
    }
}

/// Coefficient of `x^r` in `2x^(t-1)(1+x)^(t-1) + x^t(1+x)^(t-2)`, by exact
/// polynomial expansion.
pub fn gf_cycle_coefficient(t: usize, r: usize) -> Result<BigUint> {
    if t < 2 {
        return Err(Error::InvalidParameter(format!(
            "t must be at least 2, got {t}"
        )));
    }
    let one_plus_x = Poly(vec![BigUint::from(1u32), BigUint::from(1u32)]);
    let first = Poly::monomial(2, t - 1).mul(&one_plus_x.pow(t - 1));
    let second = Poly::monomial(1, t).mul(&one_plus_x.pow(t - 2));
    Ok(first.add(&second).coefficient(r))
}

/// `(t, r)` for `C_n`: `t = i(P_n) + 1` runs summing to `r = n - i(P_n)`.
pub fn cycle_gf_parameters(n: usize) -> (usize, usize) {
    let i = n.div_ceil(3);
    (i + 1, n - i)
}

/// The worn lattice `L_k`: pairs `(i, j)`, `1 <= i < j <= k + 2`, joined when
/// one coordinate differs by one and the other agrees. Vertices are in
/// lexicographic order and labelled `(i,j)`.
pub fn worn_lattice(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidParameter("worn lattice needs k >= 1".into()));
    }
    let labels: Vec<LatticeLabel> = (1..=k + 2)
        .flat_map(|i| (i + 1..=k + 2).map(move |j| LatticeLabel { i, j }))
        .collect();
    let mut edges = Vec::new();
    for (a, &x) in labels.iter().enumerate() {
        for (b, &y) in labels.iter().enumerate().skip(a + 1) {
            if x.is_adjacent(y) {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edge_list(labels.len(), &edges)?
        .with_labels(labels.iter().map(ToString::to_string).collect())
}

/// The bracelet graph `B_k` on the i-set labels of `C_{3k+1}`, in increasing
/// label order, each vertex labelled `{j,l}`.
pub fn bracelet(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidParameter("bracelet needs k >= 1".into()));
    }
    let n = 3 * k + 1;
    let labels = cycle_labels(n)?;
    let index: HashMap<CycleISetLabel, usize> =
        labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
    let mut edges = Vec::new();
    for (a, label) in labels.iter().enumerate() {
        for nb in label.bracelet_neighbors(n) {
            edges.push((a, index[&nb]));
        }
    }
    Graph::from_edge_list(labels.len(), &edges)?.with_labels(
        labels
            .iter()
            .map(|l| {
                let (j, m) = l.pair();
                format!("{{{j},{m}}}")
            })
            .collect(),
    )
}

/// The i-graph of `P_n` as given by its closed form.
pub fn predicted_path_igraph(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("paths start at n = 1".into()));
    }
    let k = n / 3;
    match n % 3 {
        0 => Ok(Graph::empty(1)),
        // L_0 is the single pair (1,2)
        1 if k == 0 => Ok(Graph::empty(1)),
        1 => worn_lattice(k),
        _ => path(k + 2),
    }
}

/// The i-graph of `C_n` as given by its closed form.
pub fn predicted_cycle_igraph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycles start at n = 3, got {n}"
        )));
    }
    match n % 3 {
        0 if n == 3 => Ok(complete(3)),
        0 => Ok(Graph::empty(3)),
        1 => bracelet(n / 3),
        _ => cycle(n),
    }
}
