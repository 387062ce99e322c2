//! The reward-to-risk ratio objective
//!
//! ```text
//! f(S) = (w+(S) + lambda1 |S|) / (B w-(S) + lambda2 |S|)
//! ```
//!
//! and its reduction to a density threshold query: `f(S) >= q` holds exactly
//! when the graph reweighted by `w+(e) - q B w-(e)` has a set of density at
//! least `q lambda2 - lambda1`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{NodeId, SignedGraph, WeightedGraph};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ObjectiveParams {
    lambda1: f64,
    lambda2: f64,
    b: f64,
}

impl Default for ObjectiveParams {
    fn default() -> Self {
        ObjectiveParams {
            lambda1: 1.0,
            lambda2: 1.0,
            b: 1.0,
        }
    }
}

impl ObjectiveParams {
    /// `lambda1 >= 0`, `lambda2 > 0` and `b > 0`, all finite.
    pub fn new(lambda1: f64, lambda2: f64, b: f64) -> Result<Self> {
        if !(lambda1.is_finite() && lambda1 >= 0.0) {
            return Err(Error::InvalidParams(format!(
                "lambda1 must be >= 0, got {lambda1}"
            )));
        }
        if !(lambda2.is_finite() && lambda2 > 0.0) {
            return Err(Error::InvalidParams(format!(
                "lambda2 must be > 0, got {lambda2}"
            )));
        }
        if !(b.is_finite() && b > 0.0) {
            return Err(Error::InvalidParams(format!("B must be > 0, got {b}")));
        }
        Ok(ObjectiveParams {
            lambda1,
            lambda2,
            b,
        })
    }

    /// Size-preference form: `lambda1 = rho * lambda`, `lambda2 = lambda`.
    pub fn from_ratio(rho: f64, lambda: f64, b: f64) -> Result<Self> {
        Self::new(rho * lambda, lambda, b)
    }

    pub fn lambda1(&self) -> f64 {
        self.lambda1
    }

    pub fn lambda2(&self) -> f64 {
        self.lambda2
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// `rho = lambda1 / lambda2`; values >= 1 favor larger sets.
    pub fn rho(&self) -> f64 {
        self.lambda1 / self.lambda2
    }

    /// Objective value from induced totals.
    pub fn value(&self, wpos: f64, wneg: f64, size: usize) -> f64 {
        let s = size as f64;
        (wpos + self.lambda1 * s) / (self.b * wneg + self.lambda2 * s)
    }

    /// Density threshold `q' = q lambda2 - lambda1` matching the query `f >= q`.
    pub fn density_threshold(&self, q: f64) -> f64 {
        q * self.lambda2 - self.lambda1
    }

    /// `(sum_e w+(e) + lambda1 n) / lambda2`, an upper bound on `f` over all
    /// nonempty sets.
    pub fn q_max_bound(&self, g: &SignedGraph) -> f64 {
        (g.total_wpos() + self.lambda1 * g.n() as f64) / self.lambda2
    }
}

pub fn objective_f(g: &SignedGraph, nodes: &[NodeId], p: &ObjectiveParams) -> Result<f64> {
    let iw = g.induced_weights(nodes)?;
    let den = p.b * iw.wneg + p.lambda2 * iw.size as f64;
    if den <= 0.0 {
        return Err(Error::ZeroDenominator);
    }
    Ok(p.value(iw.wpos, iw.wneg, iw.size))
}

/// `w+ - q B w-` for one edge.
pub fn tilde_weight(wpos: f64, wneg: f64, q: f64, b: f64) -> f64 {
    wpos - q * b * wneg
}

/// Reweighted graph for the query `f(S) >= q`.
#[derive(Debug, Clone, PartialEq)]
pub struct TildeGraph {
    pub graph: WeightedGraph,
    /// All reweighted edges are nonnegative, so the threshold query is an
    /// ordinary densest-subgraph decision.
    pub all_nonnegative: bool,
}

pub fn tilde_weights(g: &SignedGraph, q: f64, b: f64) -> Result<TildeGraph> {
    if !(q.is_finite() && q >= 0.0) {
        return Err(Error::OutOfRange(format!(
            "query value must be >= 0, got {q}"
        )));
    }
    if !(b.is_finite() && b > 0.0) {
        return Err(Error::InvalidParams(format!("B must be > 0, got {b}")));
    }
    let edges: Vec<_> = g
        .edges()
        .iter()
        .map(|e| (e.u, e.v, tilde_weight(e.wpos, e.wneg, q, b)))
        .collect();
    let all_nonnegative = edges.iter().all(|e| e.2 >= 0.0);
    Ok(TildeGraph {
        graph: WeightedGraph::new(g.n(), edges)?,
        all_nonnegative,
    })
}
