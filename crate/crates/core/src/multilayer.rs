//! Multilayer multigraphs and exclusion queries.
//!
//! An exclusion query names a set of layers whose edges a dense subgraph
//! should avoid. Every edge of an excluded layer becomes a negative edge of
//! weight `W`, every other edge a positive unit edge; the densest subgraph of
//! the resulting signed graph answers the query. A soft query uses a finite
//! user-chosen `W`; a hard query uses [`hard_w`], which is large enough that
//! no set inducing an excluded edge can have nonnegative weight.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{NodeId, SignedEdge, SignedGraph};

pub type LayerId = usize;

#[derive(Debug, Clone, PartialEq)]
pub struct MultilayerGraph {
    n: usize,
    edges: Vec<(NodeId, NodeId, LayerId)>,
    layers: Vec<String>,
    labels: Option<Vec<String>>,
}

impl MultilayerGraph {
    pub fn new(
        n: usize,
        layers: Vec<String>,
        edges: Vec<(NodeId, NodeId, LayerId)>,
    ) -> Result<Self> {
        for &(u, v, l) in &edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::UnknownNode(x));
                }
            }
            if l >= layers.len() {
                return Err(Error::UnknownLayer(l.to_string()));
            }
        }
        Ok(MultilayerGraph {
            n,
            edges,
            layers,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::OutOfRange(format!(
                "{} labels for {} nodes",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(NodeId, NodeId, LayerId)] {
        &self.edges
    }

    pub fn layers(&self) -> &[String] {
        &self.layers
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn layer_id(&self, name: &str) -> Result<LayerId> {
        self.layers
            .iter()
            .position(|l| l == name)
            .ok_or_else(|| Error::UnknownLayer(name.to_owned()))
    }

    /// Edges whose layer is not in `excluded`.
    pub fn count_allowed(&self, excluded: &[LayerId]) -> usize {
        self.edges
            .iter()
            .filter(|e| !excluded.contains(&e.2))
            .count()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Penalty {
    /// Each excluded edge weighs `-W`.
    Soft(f64),
    /// `W` resolved by [`hard_w`].
    Hard,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExclusionQuery {
    excluded: Vec<LayerId>,
    penalty: Penalty,
}

impl ExclusionQuery {
    pub fn new(excluded: Vec<LayerId>, penalty: Penalty) -> Result<Self> {
        if let Penalty::Soft(w) = penalty {
            if !(w.is_finite() && w > 0.0) {
                return Err(Error::InvalidParams(format!("W must be > 0, got {w}")));
            }
        }
        let mut excluded = excluded;
        excluded.sort_unstable();
        excluded.dedup();
        Ok(ExclusionQuery { excluded, penalty })
    }

    /// Resolves layer names against `m`.
    pub fn by_names<S: AsRef<str>>(
        m: &MultilayerGraph,
        names: &[S],
        penalty: Penalty,
    ) -> Result<Self> {
        let ids = names
            .iter()
            .map(|s| m.layer_id(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ids, penalty)
    }

    pub fn excluded(&self) -> &[LayerId] {
        &self.excluded
    }

    pub fn penalty(&self) -> Penalty {
        self.penalty
    }

    pub fn is_excluded(&self, layer: LayerId) -> bool {
        self.excluded.binary_search(&layer).is_ok()
    }

    /// The concrete `W` this query applies to `m`.
    pub fn weight(&self, m: &MultilayerGraph) -> f64 {
        match self.penalty {
            Penalty::Soft(w) => w,
            Penalty::Hard => hard_w(m, &self.excluded),
        }
    }
}

/// `(number of non-excluded edges) + 1`.
///
/// A set inducing at least one excluded edge then has weight at most
/// `m_allowed - W < 0`, below any edge-free singleton.
pub fn hard_w(m: &MultilayerGraph, excluded: &[LayerId]) -> f64 {
    m.count_allowed(excluded) as f64 + 1.0
}

/// Signed graph answering `q`: allowed edges `+1`, excluded edges `-W`,
/// parallel edges summed per pair.
pub fn apply_exclusion(m: &MultilayerGraph, q: &ExclusionQuery) -> Result<SignedGraph> {
    if let Some(&l) = q.excluded.iter().find(|&&l| l >= m.layers.len()) {
        return Err(Error::UnknownLayer(l.to_string()));
    }
    let w = q.weight(m);
    let g = SignedGraph::from_edges(
        m.n,
        m.edges.iter().map(|&(u, v, l)| {
            if q.is_excluded(l) {
                SignedEdge::new(u, v, 0.0, w)
            } else {
                SignedEdge::new(u, v, 1.0, 0.0)
            }
        }),
    )?;
    match &m.labels {
        Some(labels) => g.with_labels(labels.clone()),
        None => Ok(g),
    }
}

fn mask_of(n: usize, nodes: &[NodeId]) -> Result<(Vec<bool>, usize)> {
    if nodes.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut mask = vec![false; n];
    let mut size = 0;
    for &u in nodes {
        if u >= n {
            return Err(Error::UnknownNode(u));
        }
        if !mask[u] {
            mask[u] = true;
            size += 1;
        }
    }
    Ok((mask, size))
}

/// Induced edges per layer.
pub fn induced_layer_counts(m: &MultilayerGraph, nodes: &[NodeId]) -> Result<Vec<usize>> {
    let (mask, _) = mask_of(m.n, nodes)?;
    let mut counts = vec![0usize; m.layers.len()];
    for &(u, v, l) in &m.edges {
        if mask[u] && mask[v] {
            counts[l] += 1;
        }
    }
    Ok(counts)
}

/// Induced edges of `layer` per node of `nodes`.
pub fn layer_density(m: &MultilayerGraph, nodes: &[NodeId], layer: LayerId) -> Result<f64> {
    if layer >= m.layers.len() {
        return Err(Error::UnknownLayer(layer.to_string()));
    }
    let (_, size) = mask_of(m.n, nodes)?;
    let counts = induced_layer_counts(m, nodes)?;
    Ok(counts[layer] as f64 / size as f64)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LayerDensity {
    pub layer: String,
    pub induced_edges: usize,
    /// Count density of the layer.
    pub density: f64,
    /// Density on the transformed graph: `-W * count / |S|` for excluded
    /// layers, equal to `density` otherwise.
    pub signed_density: f64,
}

/// Per-layer densities of `nodes`, both raw and as weighed by `q`.
pub fn layer_report(
    m: &MultilayerGraph,
    nodes: &[NodeId],
    q: &ExclusionQuery,
) -> Result<Vec<LayerDensity>> {
    let (_, size) = mask_of(m.n, nodes)?;
    let counts = induced_layer_counts(m, nodes)?;
    let w = q.weight(m);
    Ok(m.layers
        .iter()
        .enumerate()
        .map(|(l, name)| {
            let density = counts[l] as f64 / size as f64;
            let signed_density = if q.is_excluded(l) {
                -w * density
            } else {
                density
            };
            LayerDensity {
                layer: name.clone(),
                induced_edges: counts[l],
                density,
                signed_density,
            }
        })
        .collect())
}
