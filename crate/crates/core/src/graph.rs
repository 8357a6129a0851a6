//! Undirected simple graphs, vertex subsets of small seed graphs, and the
//! JSON / DOT document formats shared by every other module.

use std::collections::VecDeque;
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest seed graph whose vertex subsets fit in a [`VertexSet`].
pub const MAX_SEED_ORDER: usize = 64;

/// An undirected simple graph on vertices `0..order`.
///
/// Adjacency lists are sorted and symmetric. Labels are optional display
/// names, one per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); order],
            labels: None,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) are merged; self-loops and out-of-range endpoints are
    /// rejected.
    pub fn from_edge_list(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); order];
        for &(u, v) in edges {
            if u >= order || v >= order || u == v {
                return Err(Error::InvalidEdge { u, v, order });
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph {
            adjacency,
            labels: None,
        })
    }

    /// Attaches display labels; `labels.len()` must equal the order.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order() {
            return Err(Error::InvalidParameter(format!(
                "{} labels supplied for a graph of order {}",
                labels.len(),
                self.order()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for root in 0..self.order() {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut comp = vec![root];
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adjacency[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.order() <= 1 || self.components().len() == 1
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is
    /// `vertices[i]`. Labels are carried over.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut position = vec![usize::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= self.order() {
                return Err(Error::InvalidParameter(format!(
                    "vertex {v} out of range for order {}",
                    self.order()
                )));
            }
            if position[v] != usize::MAX {
                return Err(Error::InvalidParameter(format!("vertex {v} listed twice")));
            }
            position[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adjacency[v] {
                let j = position[w];
                if j != usize::MAX && i < j {
                    edges.push((i, j));
                }
            }
        }
        let sub = Graph::from_edge_list(vertices.len(), &edges)?;
        match &self.labels {
            Some(labels) => sub.with_labels(vertices.iter().map(|&v| labels[v].clone()).collect()),
            None => Ok(sub),
        }
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.order() {
            return Err(Error::InvalidParameter(
                "permutation length mismatch".into(),
            ));
        }
        let mut seen = vec![false; perm.len()];
        for &p in perm {
            if p >= perm.len() || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidParameter("not a permutation".into()));
            }
        }
        let edges: Vec<_> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        let g = Graph::from_edge_list(self.order(), &edges)?;
        match &self.labels {
            Some(labels) => {
                let mut moved = vec![String::new(); labels.len()];
                for (v, l) in labels.iter().enumerate() {
                    moved[perm[v]] = l.clone();
                }
                g.with_labels(moved)
            }
            None => Ok(g),
        }
    }

    /// One bit mask of closed neighbourhood per vertex. Seed graphs only.
    pub(crate) fn closed_masks(&self) -> Result<Vec<u64>> {
        check_seed_order(self.order())?;
        Ok(self
            .adjacency
            .iter()
            .enumerate()
            .map(|(v, list)| list.iter().fold(1u64 << v, |m, &w| m | (1u64 << w)))
            .collect())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_document()).expect("graph documents always serialize")
    }

    pub fn to_document(&self) -> GraphDocument {
        GraphDocument {
            n: self.order(),
            edges: self.edges().map(|(u, v)| [u, v]).collect(),
            labels: self.labels.clone(),
        }
    }

    pub fn from_json(text: &str) -> Result<Graph> {
        let doc: GraphDocument = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        Graph::from_document(&doc)
    }

    pub fn from_document(doc: &GraphDocument) -> Result<Graph> {
        let edges: Vec<_> = doc.edges.iter().map(|&[u, v]| (u, v)).collect();
        let reject = |message: String| Error::Parse {
            line: 0,
            column: 0,
            message,
        };
        let g = Graph::from_edge_list(doc.n, &edges).map_err(|e| reject(e.to_string()))?;
        match &doc.labels {
            Some(labels) => g
                .with_labels(labels.clone())
                .map_err(|e| reject(e.to_string())),
            None => Ok(g),
        }
    }

    /// Graphviz rendering: `graph G { ... }`, one statement per line.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.order() {
            match self.label(v) {
                Some(l) => writeln!(out, "  {v} [label=\"{}\"];", escape_dot(l)).unwrap(),
                None => writeln!(out, "  {v};").unwrap(),
            }
        }
        for (u, v) in self.edges() {
            writeln!(out, "  {u} -- {v};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

fn escape_dot(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub(crate) fn check_seed_order(order: usize) -> Result<()> {
    if order > MAX_SEED_ORDER {
        Err(Error::TooLarge {
            order,
            limit: MAX_SEED_ORDER,
        })
    } else {
        Ok(())
    }
}

/// Serialized form of a [`Graph`]: `{"n": .., "edges": [[u,v],..], "labels": [..]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub n: usize,
    #[serde(default)]
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

/// The path `P_n`. Vertex `i` carries the label `v_{i+1}`.
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "a path needs at least one vertex".into(),
        ));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edge_list(n, &edges)?.with_labels((1..=n).map(|i| format!("v_{i}")).collect())
}

/// The cycle `C_n`. Vertex `i` carries the label `v_i`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "a cycle needs at least 3 vertices, got {n}"
        )));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edge_list(n, &edges)?.with_labels((0..n).map(|i| format!("v_{i}")).collect())
}

/// `K_n`.
pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::from_edge_list(n, &edges).expect("complete graph edges are valid")
}

/// A subset of the vertices of a seed graph with at most 64 vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub fn from_mask(mask: u64) -> Self {
        VertexSet(mask)
    }

    pub fn from_indices(indices: &[usize]) -> Result<Self> {
        let mut mask = 0u64;
        for &i in indices {
            if i >= MAX_SEED_ORDER {
                return Err(Error::InvalidParameter(format!(
                    "vertex index {i} exceeds 63"
                )));
            }
            mask |= 1 << i;
        }
        Ok(VertexSet(mask))
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_SEED_ORDER && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    /// Members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            (rest != 0).then(|| {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                v
            })
        })
    }

    pub fn members(self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    /// True iff every member indexes a vertex of `g`.
    pub fn fits(self, g: &Graph) -> bool {
        g.order() >= MAX_SEED_ORDER || self.0 >> g.order() == 0
    }

    /// Renders as `{a,b,..}` using the labels of `g` when present.
    pub fn display_with(self, g: &Graph) -> String {
        let names: Vec<String> = self
            .iter()
            .map(|v| g.label(v).map_or_else(|| v.to_string(), str::to_owned))
            .collect();
        format!("{{{}}}", names.join(","))
    }
}

/// Lexicographic order on the sorted member lists.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", names.join(","))
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let indices = Vec::<usize>::deserialize(d)?;
        VertexSet::from_indices(&indices).map_err(serde::de::Error::custom)
    }
}

fn check_set(g: &Graph, s: VertexSet) -> Result<()> {
    if s.fits(g) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "set {s} has members outside a graph of order {}",
            g.order()
        )))
    }
}

/// No edge of `g` joins two members of `s`.
pub fn is_independent(g: &Graph, s: VertexSet) -> Result<bool> {
    check_set(g, s)?;
    Ok(s.iter()
        .all(|v| g.neighbors(v).iter().all(|&w| !s.contains(w))))
}

/// Every vertex of `g` is in `s` or adjacent to a member of `s`.
pub fn is_dominating(g: &Graph, s: VertexSet) -> Result<bool> {
    check_set(g, s)?;
    Ok((0..g.order()).all(|v| s.contains(v) || g.neighbors(v).iter().any(|&w| s.contains(w))))
}
