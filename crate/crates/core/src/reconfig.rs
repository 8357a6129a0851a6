//! Token-slide reconfiguration: the i-graph of a seed graph.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::domination::{ensure_iset, enumerate_isets, independent_domination_number};
use crate::error::{Error, Result};
use crate::graph::{check_seed_order, Graph, GraphDocument, VertexSet};

/// A token moving from seed vertex `from` to its neighbour `to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Slide {
    pub from: usize,
    pub to: usize,
}

impl Slide {
    pub fn reversed(self) -> Slide {
        Slide {
            from: self.to,
            to: self.from,
        }
    }
}

/// An i-graph edge `a -- b`: `isets[b] = isets[a] - slide.from + slide.to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlideEdge {
    pub a: usize,
    pub b: usize,
    pub slide: Slide,
}

/// The i-graph of a seed graph: one vertex per i-set, in canonical
/// enumeration order, with each edge carrying the token slide that realises it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IGraph {
    pub seed: Graph,
    pub isets: Vec<VertexSet>,
    pub graph: Graph,
    pub slides: Vec<SlideEdge>,
}

/// Slide witness between two sets of equal size, without validating that they
/// are i-sets.
pub(crate) fn slide_between(g: &Graph, s1: VertexSet, s2: VertexSet) -> Option<Slide> {
    let out = s1.difference(s2);
    let inn = s2.difference(s1);
    if out.len() != 1 || inn.len() != 1 {
        return None;
    }
    let from = out.iter().next()?;
    let to = inn.iter().next()?;
    g.has_edge(from, to).then_some(Slide { from, to })
}

/// Every slide that turns the i-set `s` into another i-set, ordered by
/// (from, to). Since the result is independent of the same size, only
/// domination has to be rechecked.
pub(crate) fn legal_slides(g: &Graph, closed: &[u64], s: VertexSet) -> Vec<Slide> {
    let full = if g.order() == 64 {
        u64::MAX
    } else {
        (1u64 << g.order()) - 1
    };
    let mut out = Vec::new();
    for x in s.iter() {
        for &y in g.neighbors(x) {
            // y must have no neighbour in s other than x
            let mut rest = s;
            rest.remove(x);
            if closed[y] & rest.mask() != 0 {
                continue;
            }
            let mut next = rest;
            next.insert(y);
            let dominated = next.iter().fold(0u64, |m, v| m | closed[v]);
            if dominated == full {
                out.push(Slide { from: x, to: y });
            }
        }
    }
    out
}

fn validated_size(g: &Graph, sets: &[VertexSet]) -> Result<usize> {
    check_seed_order(g.order())?;
    let size = independent_domination_number(g)?;
    for &s in sets {
        ensure_iset(g, s, size)?;
    }
    Ok(size)
}

/// The slide taking `s1` to `s2` when they differ by one token moved along an
/// edge of `g`; `None` otherwise (including `s1 == s2`).
pub fn token_slide_adjacent(g: &Graph, s1: VertexSet, s2: VertexSet) -> Result<Option<Slide>> {
    validated_size(g, &[s1, s2])?;
    Ok(slide_between(g, s1, s2))
}

/// Members of the i-set `s` that have no legal slide.
pub fn frozen_tokens(g: &Graph, s: VertexSet) -> Result<VertexSet> {
    validated_size(g, &[s])?;
    let closed = g.closed_masks()?;
    let mut frozen = s;
    for slide in legal_slides(g, &closed, s) {
        frozen.remove(slide.from);
    }
    Ok(frozen)
}

/// Degree of `s` in the i-graph of `g`. Distinct slides reach distinct sets.
pub fn degree_in_igraph(g: &Graph, s: VertexSet) -> Result<usize> {
    validated_size(g, &[s])?;
    let closed = g.closed_masks()?;
    Ok(legal_slides(g, &closed, s).len())
}

/// Builds the i-graph of `g`. Vertex labels are the i-sets written with the
/// seed's labels, e.g. `{v_1,v_3}`.
pub fn build_igraph(g: &Graph) -> Result<IGraph> {
    check_seed_order(g.order())?;
    let isets = enumerate_isets(g)?;
    let closed = g.closed_masks()?;
    let index: HashMap<u64, usize> = isets
        .iter()
        .enumerate()
        .map(|(i, s)| (s.mask(), i))
        .collect();

    let mut slides = Vec::new();
    for (a, &s) in isets.iter().enumerate() {
        for slide in legal_slides(g, &closed, s) {
            let mut next = s;
            next.remove(slide.from);
            next.insert(slide.to);
            let b = *index.get(&next.mask()).ok_or_else(|| {
                Error::InvalidISet(format!("slide from {s} left the i-set family"))
            })?;
            if a < b {
                slides.push(SlideEdge { a, b, slide });
            }
        }
    }
    slides.sort_by_key(|e| (e.a, e.b));
    debug_assert!(slides
        .windows(2)
        .all(|w| (w[0].a, w[0].b) != (w[1].a, w[1].b)));

    let edges: Vec<_> = slides.iter().map(|e| (e.a, e.b)).collect();
    let labels = isets.iter().map(|s| s.display_with(g)).collect();
    let graph = Graph::from_edge_list(isets.len(), &edges)?.with_labels(labels)?;
    Ok(IGraph {
        seed: g.clone(),
        isets,
        graph,
        slides,
    })
}

/// Serialized i-graph: the seed document, the i-sets as index arrays, the
/// i-graph edges with their slide witnesses, and vertex labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IGraphDocument {
    pub seed: GraphDocument,
    pub n: usize,
    pub isets: Vec<VertexSet>,
    pub edges: Vec<SlideEdge>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl IGraph {
    pub fn order(&self) -> usize {
        self.isets.len()
    }

    /// Index of `s` among the i-sets.
    pub fn position(&self, s: VertexSet) -> Option<usize> {
        self.isets.binary_search(&s).ok()
    }

    /// Replaces the i-graph's vertex labels (`None` drops them).
    pub fn relabeled(mut self, labels: Option<Vec<String>>) -> Result<IGraph> {
        let bare = self.graph.without_labels();
        self.graph = match labels {
            Some(l) => bare.with_labels(l)?,
            None => bare,
        };
        Ok(self)
    }

    pub fn to_document(&self) -> IGraphDocument {
        IGraphDocument {
            seed: self.seed.to_document(),
            n: self.order(),
            isets: self.isets.clone(),
            edges: self.slides.clone(),
            labels: self.graph.labels().map(<[String]>::to_vec),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_document()).expect("i-graph documents always serialize")
    }

    /// Parses and fully re-validates an i-graph document against its seed.
    pub fn from_json(text: &str) -> Result<IGraph> {
        let doc: IGraphDocument = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        let seed = Graph::from_document(&doc.seed)?;
        let mut rebuilt = build_igraph(&seed)?;
        if rebuilt.isets != doc.isets || rebuilt.slides != doc.edges || doc.n != rebuilt.order() {
            return Err(Error::InvalidGraph(
                "document does not match the i-graph of its seed".into(),
            ));
        }
        if let Some(labels) = doc.labels {
            rebuilt = rebuilt.relabeled(Some(labels))?;
        }
        Ok(rebuilt)
    }
}
