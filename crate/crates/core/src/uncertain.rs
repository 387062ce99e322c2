//! Uncertain graphs summarized by per-edge reward moments.
//!
//! Each edge reward is an independent random variable; only its mean `mu`
//! (expected reward) and variance `sigma2` (risk) are kept, since those are
//! all the ratio objective consumes. Conversion to a signed graph puts `mu`
//! on the positive side and `sigma2` on the negative side of the same pair.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{NodeId, SignedEdge, SignedGraph};

/// Most co-starred titles that contribute to a TMDB edge weight.
pub const TMDB_TOP_K: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UncertainEdge {
    pub u: NodeId,
    pub v: NodeId,
    pub mu: f64,
    pub sigma2: f64,
}

impl UncertainEdge {
    pub fn new(u: NodeId, v: NodeId, mu: f64, sigma2: f64) -> Result<Self> {
        if !(mu.is_finite() && mu >= 0.0) {
            return Err(Error::OutOfRange(format!("mu must be >= 0, got {mu}")));
        }
        if !(sigma2.is_finite() && sigma2 >= 0.0) {
            return Err(Error::OutOfRange(format!(
                "sigma2 must be >= 0, got {sigma2}"
            )));
        }
        Ok(UncertainEdge { u, v, mu, sigma2 })
    }
}

/// An edge that pays `w` with probability `p` and nothing otherwise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BernoulliEdge {
    pub u: NodeId,
    pub v: NodeId,
    pub p: f64,
    pub w: f64,
}

impl BernoulliEdge {
    pub fn new(u: NodeId, v: NodeId, p: f64, w: f64) -> Result<Self> {
        bernoulli_moments(p, w)?;
        Ok(BernoulliEdge { u, v, p, w })
    }

    pub fn to_moments(&self) -> UncertainEdge {
        let (mu, sigma2) = bernoulli_moments(self.p, self.w).expect("validated at construction");
        UncertainEdge {
            u: self.u,
            v: self.v,
            mu,
            sigma2,
        }
    }
}

/// Mean and variance of a `{0, w}` reward with success probability `p`.
pub fn bernoulli_moments(p: f64, w: f64) -> Result<(f64, f64)> {
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::OutOfRange(format!("p must lie in (0, 1], got {p}")));
    }
    if !(w.is_finite() && w >= 0.0) {
        return Err(Error::OutOfRange(format!("w must be >= 0, got {w}")));
    }
    Ok((w * p, w * w * p * (1.0 - p)))
}

#[derive(Debug, Clone, PartialEq)]
pub struct UncertainGraph {
    n: usize,
    edges: Vec<UncertainEdge>,
    labels: Option<Vec<String>>,
}

impl UncertainGraph {
    pub fn new(n: usize, edges: Vec<UncertainEdge>) -> Result<Self> {
        for e in &edges {
            for x in [e.u, e.v] {
                if x >= n {
                    return Err(Error::UnknownNode(x));
                }
            }
        }
        Ok(UncertainGraph {
            n,
            edges,
            labels: None,
        })
    }

    pub fn from_bernoulli(n: usize, edges: &[BernoulliEdge]) -> Result<Self> {
        Self::new(n, edges.iter().map(BernoulliEdge::to_moments).collect())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::OutOfRange(format!(
                "{} labels for {} nodes",
                labels.len(),
                self.n
            )));
        }
        let distinct: std::collections::HashSet<&String> = labels.iter().collect();
        if distinct.len() != labels.len() {
            return Err(Error::OutOfRange("duplicate node labels".into()));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[UncertainEdge] {
        &self.edges
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }
}

/// `mu -> wpos`, `sigma2 -> wneg`. The risk multiplier `B` is applied later,
/// in the objective, so one conversion serves every `B`.
pub fn uncertain_to_signed(ug: &UncertainGraph) -> SignedGraph {
    let g = SignedGraph::from_edges(
        ug.n,
        ug.edges
            .iter()
            .map(|e| SignedEdge::new(e.u, e.v, e.mu, e.sigma2)),
    )
    .expect("uncertain edges are validated at construction");
    match &ug.labels {
        Some(l) => g
            .with_labels(l.clone())
            .expect("labels validated at construction"),
        None => g,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RiskReport {
    pub avg_expected_reward: f64,
    pub avg_risk: f64,
    pub size: usize,
}

/// Average induced expected reward and risk per node of `nodes`.
pub fn risk_profile(ug: &UncertainGraph, nodes: &[NodeId]) -> Result<RiskReport> {
    if nodes.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut mask = vec![false; ug.n];
    let mut size = 0;
    for &u in nodes {
        if u >= ug.n {
            return Err(Error::UnknownNode(u));
        }
        if !mask[u] {
            mask[u] = true;
            size += 1;
        }
    }
    let (mut mu, mut sigma2) = (0.0, 0.0);
    for e in ug.edges.iter().filter(|e| mask[e.u] && mask[e.v]) {
        mu += e.mu;
        sigma2 += e.sigma2;
    }
    Ok(RiskReport {
        avg_expected_reward: mu / size as f64,
        avg_risk: sigma2 / size as f64,
        size,
    })
}

/// TMDB co-star edge: `p` is the Jaccard coefficient of the two filmographies
/// and `w` the discounted sum `sum_j s_j / 2^j` of the top (at most five)
/// popularity scores among shared titles. `None` when no title is shared.
///
/// Titles missing from `popularity` score the TMDB minimum of 1.
pub fn tmdb_edge<M>(
    movies_u: &[M],
    movies_v: &[M],
    popularity: &HashMap<M, f64>,
) -> Result<Option<(f64, f64)>>
where
    M: Eq + std::hash::Hash + Clone,
{
    use std::collections::HashSet;
    let mu: HashSet<&M> = movies_u.iter().collect();
    let mv: HashSet<&M> = movies_v.iter().collect();
    let union = mu.union(&mv).count();
    if union == 0 {
        return Err(Error::EmptyFilmography);
    }
    let mut shared: Vec<f64> = mu
        .intersection(&mv)
        .map(|m| popularity.get(*m).copied().unwrap_or(1.0))
        .collect();
    if shared.is_empty() {
        return Ok(None);
    }
    let p = shared.len() as f64 / union as f64;
    shared.sort_by(|a, b| b.total_cmp(a));
    let w = shared
        .iter()
        .take(TMDB_TOP_K)
        .enumerate()
        .map(|(j, s)| s / 2f64.powi(j as i32))
        .sum();
    Ok(Some((p, w)))
}
