//! Signed-weight graph representation.
//!
//! Every unordered node pair carries at most one [`SignedEdge`] holding two
//! nonnegative magnitudes: the positive weight `wpos` and the negative weight
//! `wneg`. The net weight of a pair is `wpos - wneg`. Loops are allowed; a
//! loop contributes its weight twice to the degree of its node and once to
//! the induced weight of any set containing the node, which keeps the
//! handshake identity `sum_u d(u) = 2 * (w+(V) - w-(V))` intact.

use std::borrow::Cow;
use std::collections::HashMap;

use crate::error::{Error, Result};

/// Dense node index in `0..n`.
pub type NodeId = usize;

/// Absolute tolerance used when comparing densities and objective values.
pub const TIE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignedEdge {
    pub u: NodeId,
    pub v: NodeId,
    pub wpos: f64,
    pub wneg: f64,
}

impl SignedEdge {
    pub fn new(u: NodeId, v: NodeId, wpos: f64, wneg: f64) -> Self {
        SignedEdge { u, v, wpos, wneg }
    }

    /// Splits a net weight by sign: `w -> (max(w, 0), max(-w, 0))`.
    pub fn from_net(u: NodeId, v: NodeId, w: f64) -> Self {
        SignedEdge {
            u,
            v,
            wpos: w.max(0.0),
            wneg: (-w).max(0.0),
        }
    }

    pub fn net(&self) -> f64 {
        self.wpos - self.wneg
    }

    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    fn check(&self) -> Result<()> {
        let ok = |x: f64| x.is_finite() && x >= 0.0;
        if ok(self.wpos) && ok(self.wneg) {
            Ok(())
        } else {
            Err(Error::NegativeMagnitude {
                u: self.u,
                v: self.v,
                wpos: self.wpos,
                wneg: self.wneg,
            })
        }
    }
}

/// Bijection between external string labels and dense node ids.
#[derive(Debug, Clone, Default)]
pub struct NodeLabels {
    names: Vec<String>,
    index: HashMap<String, NodeId>,
}

impl NodeLabels {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns the id of `label`, assigning the next free id on first sight.
    pub fn intern(&mut self, label: &str) -> NodeId {
        if let Some(&id) = self.index.get(label) {
            return id;
        }
        let id = self.names.len();
        self.names.push(label.to_owned());
        self.index.insert(label.to_owned(), id);
        id
    }

    pub fn get(&self, label: &str) -> Option<NodeId> {
        self.index.get(label).copied()
    }

    pub fn name(&self, id: NodeId) -> Option<&str> {
        self.names.get(id).map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn into_names(self) -> Vec<String> {
        self.names
    }
}

/// Induced weight totals of a node set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InducedWeights {
    pub wpos: f64,
    pub wneg: f64,
    pub size: usize,
    pub net_density: f64,
}

/// Immutable undirected signed graph with collapsed parallel edges.
#[derive(Debug, Clone, PartialEq)]
pub struct SignedGraph {
    n: usize,
    /// Sorted by `(u, v)` with `u <= v`.
    edges: Vec<SignedEdge>,
    offsets: Vec<usize>,
    /// `(neighbor, edge index)`; loops appear once in their node's list.
    incidence: Vec<(NodeId, usize)>,
    deg_pos: Vec<f64>,
    deg_neg: Vec<f64>,
    labels: Option<Vec<String>>,
}

/// Builds a graph over nodes `0..=max id` from raw edges.
///
/// Parallel edges on the same unordered pair are summed componentwise.
pub fn build_signed_graph(raw: &[SignedEdge]) -> Result<SignedGraph> {
    let n = raw.iter().map(|e| e.u.max(e.v) + 1).max().unwrap_or(0);
    SignedGraph::from_edges(n, raw.iter().copied())
}

impl SignedGraph {
    pub fn from_edges<I>(n: usize, raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = SignedEdge>,
    {
        let mut edges = Vec::new();
        for e in raw {
            e.check()?;
            if e.u >= n {
                return Err(Error::UnknownNode(e.u));
            }
            if e.v >= n {
                return Err(Error::UnknownNode(e.v));
            }
            let (u, v) = if e.u <= e.v { (e.u, e.v) } else { (e.v, e.u) };
            edges.push(SignedEdge::new(u, v, e.wpos, e.wneg));
        }
        // stable: parallel edges are summed in input order
        edges.sort_by_key(|e| (e.u, e.v));
        edges.dedup_by(|next, kept| {
            if next.u == kept.u && next.v == kept.v {
                kept.wpos += next.wpos;
                kept.wneg += next.wneg;
                true
            } else {
                false
            }
        });

        let mut counts = vec![0usize; n + 1];
        for e in &edges {
            counts[e.u + 1] += 1;
            if !e.is_loop() {
                counts[e.v + 1] += 1;
            }
        }
        for i in 0..n {
            counts[i + 1] += counts[i];
        }
        let offsets = counts;
        let mut fill = offsets.clone();
        let mut incidence = vec![(0, 0); offsets[n]];
        let mut deg_pos = vec![0.0; n];
        let mut deg_neg = vec![0.0; n];
        for (idx, e) in edges.iter().enumerate() {
            incidence[fill[e.u]] = (e.v, idx);
            fill[e.u] += 1;
            if e.is_loop() {
                deg_pos[e.u] += 2.0 * e.wpos;
                deg_neg[e.u] += 2.0 * e.wneg;
            } else {
                incidence[fill[e.v]] = (e.u, idx);
                fill[e.v] += 1;
                deg_pos[e.u] += e.wpos;
                deg_neg[e.u] += e.wneg;
                deg_pos[e.v] += e.wpos;
                deg_neg[e.v] += e.wneg;
            }
        }

        Ok(SignedGraph {
            n,
            edges,
            offsets,
            incidence,
            deg_pos,
            deg_neg,
            labels: None,
        })
    }

    /// Builds from net weights, splitting each by sign.
    pub fn from_net_edges<I>(n: usize, raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = (NodeId, NodeId, f64)>,
    {
        let mut split = Vec::new();
        for (u, v, w) in raw {
            if !w.is_finite() {
                return Err(Error::NegativeMagnitude {
                    u,
                    v,
                    wpos: w,
                    wneg: 0.0,
                });
            }
            split.push(SignedEdge::from_net(u, v, w));
        }
        Self::from_edges(n, split)
    }

    /// Attaches external labels; they must be distinct and one per node.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::OutOfRange(format!(
                "{} labels for {} nodes",
                labels.len(),
                self.n
            )));
        }
        let mut seen = std::collections::HashSet::with_capacity(labels.len());
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::OutOfRange(format!("duplicate label `{l}`")));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[SignedEdge] {
        &self.edges
    }

    pub fn edge(&self, idx: usize) -> &SignedEdge {
        &self.edges[idx]
    }

    pub fn incident(&self, u: NodeId) -> &[(NodeId, usize)] {
        &self.incidence[self.offsets[u]..self.offsets[u + 1]]
    }

    pub fn deg_pos(&self, u: NodeId) -> f64 {
        self.deg_pos[u]
    }

    pub fn deg_neg(&self, u: NodeId) -> f64 {
        self.deg_neg[u]
    }

    /// Net degree `d(u) = deg+(u) - deg-(u)`.
    pub fn degree(&self, u: NodeId) -> f64 {
        self.deg_pos[u] - self.deg_neg[u]
    }

    /// The negative-degree bound `max_u deg-(u)`.
    pub fn max_neg_degree(&self) -> f64 {
        self.deg_neg.iter().copied().fold(0.0, f64::max)
    }

    pub fn total_wpos(&self) -> f64 {
        self.edges.iter().map(|e| e.wpos).sum()
    }

    pub fn total_wneg(&self) -> f64 {
        self.edges.iter().map(|e| e.wneg).sum()
    }

    pub fn has_negative(&self) -> bool {
        self.edges.iter().any(|e| e.wneg > 0.0)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, u: NodeId) -> Cow<'_, str> {
        match &self.labels {
            Some(l) => Cow::Borrowed(l[u].as_str()),
            None => Cow::Owned(u.to_string()),
        }
    }

    pub fn node_by_label(&self, label: &str) -> Option<NodeId> {
        match &self.labels {
            Some(l) => l.iter().position(|x| x == label),
            None => label.parse().ok().filter(|&u| u < self.n),
        }
    }

    /// Validates `nodes` and returns a membership mask plus the distinct count.
    pub fn membership(&self, nodes: &[NodeId]) -> Result<(Vec<bool>, usize)> {
        if nodes.is_empty() {
            return Err(Error::EmptySet);
        }
        let mut mask = vec![false; self.n];
        let mut size = 0;
        for &u in nodes {
            if u >= self.n {
                return Err(Error::UnknownNode(u));
            }
            if !mask[u] {
                mask[u] = true;
                size += 1;
            }
        }
        Ok((mask, size))
    }

    /// Induced positive and negative weight of `nodes` and its net density.
    pub fn induced_weights(&self, nodes: &[NodeId]) -> Result<InducedWeights> {
        let (mask, size) = self.membership(nodes)?;
        Ok(self.induced_by_mask(&mask, size))
    }

    pub(crate) fn induced_by_mask(&self, mask: &[bool], size: usize) -> InducedWeights {
        let mut wpos = 0.0;
        let mut wneg = 0.0;
        for (u, _) in mask.iter().enumerate().filter(|(_, &m)| m) {
            for &(v, idx) in self.incident(u) {
                if mask[v] && u <= v {
                    wpos += self.edges[idx].wpos;
                    wneg += self.edges[idx].wneg;
                }
            }
        }
        InducedWeights {
            wpos,
            wneg,
            size,
            net_density: (wpos - wneg) / size as f64,
        }
    }

    /// Net degree of `u` inside the set given by `mask`.
    pub fn degree_within(&self, u: NodeId, mask: &[bool]) -> f64 {
        self.incident(u)
            .iter()
            .filter(|(v, _)| mask[*v])
            .map(|&(v, idx)| {
                let e = &self.edges[idx];
                if v == u {
                    2.0 * e.net()
                } else {
                    e.net()
                }
            })
            .sum()
    }

    /// Single-valued view with net weights `wpos - wneg`.
    pub fn net_view(&self) -> WeightedGraph {
        WeightedGraph {
            n: self.n,
            edges: self.edges.iter().map(|e| (e.u, e.v, e.net())).collect(),
        }
    }
}

/// Graph with one real weight per edge; the input type of the max-flow solvers.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedGraph {
    n: usize,
    edges: Vec<(NodeId, NodeId, f64)>,
}

impl WeightedGraph {
    pub fn new(n: usize, edges: Vec<(NodeId, NodeId, f64)>) -> Result<Self> {
        for &(u, v, w) in &edges {
            if u >= n {
                return Err(Error::UnknownNode(u));
            }
            if v >= n {
                return Err(Error::UnknownNode(v));
            }
            if !w.is_finite() {
                return Err(Error::OutOfRange(format!(
                    "non-finite weight on ({u}, {v})"
                )));
            }
        }
        Ok(WeightedGraph { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(NodeId, NodeId, f64)] {
        &self.edges
    }

    pub fn is_nonnegative(&self) -> bool {
        self.edges.iter().all(|e| e.2 >= 0.0)
    }

    pub fn ensure_nonnegative(&self) -> Result<()> {
        match self.edges.iter().find(|e| e.2 < 0.0) {
            Some(&(u, v, weight)) => Err(Error::NegativeWeight { u, v, weight }),
            None => Ok(()),
        }
    }

    /// Splits weights by sign into a [`SignedGraph`].
    pub fn to_signed(&self) -> SignedGraph {
        SignedGraph::from_net_edges(self.n, self.edges.iter().copied())
            .expect("weighted graph edges are validated at construction")
    }

    pub fn density(&self, nodes: &[NodeId]) -> Result<f64> {
        Ok(self.to_signed().induced_weights(nodes)?.net_density)
    }
}
