use serde::Serialize;

use crate::error::Result;
use crate::graph::{NodeId, SignedGraph};
use crate::objective::ObjectiveParams;

/// Which quantity a solver maximizes.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum Scoring {
    /// `(w+(S) - w-(S)) / |S|`
    #[default]
    NetDensity,
    /// The ratio objective `f(S)` under the given parameters.
    Objective(ObjectiveParams),
}

impl Scoring {
    pub fn score(&self, wpos: f64, wneg: f64, size: usize) -> f64 {
        match self {
            Scoring::NetDensity => (wpos - wneg) / size as f64,
            Scoring::Objective(p) => p.value(wpos, wneg, size),
        }
    }

    pub fn params(&self) -> Option<&ObjectiveParams> {
        match self {
            Scoring::NetDensity => None,
            Scoring::Objective(p) => Some(p),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Algorithm {
    Peeling,
    CSweep,
    Exact,
    BinarySearch,
    BruteForce,
    ShiftBaseline,
}

impl std::fmt::Display for Algorithm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Algorithm::Peeling => "peeling",
            Algorithm::CSweep => "c_sweep",
            Algorithm::Exact => "exact",
            Algorithm::BinarySearch => "binary_search",
            Algorithm::BruteForce => "brute_force",
            Algorithm::ShiftBaseline => "shift_baseline",
        };
        f.write_str(s)
    }
}

/// A node set returned by any solver, re-scored directly on the input graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DsdResult {
    /// Sorted ascending.
    pub nodes: Vec<NodeId>,
    pub net_density: f64,
    pub f_value: Option<f64>,
    pub wpos_total: f64,
    pub wneg_total: f64,
    pub exact: bool,
    pub algorithm: Algorithm,
    pub c_used: Option<f64>,
}

impl DsdResult {
    pub fn evaluate(
        g: &SignedGraph,
        nodes: &[NodeId],
        params: Option<&ObjectiveParams>,
        exact: bool,
        algorithm: Algorithm,
    ) -> Result<Self> {
        let iw = g.induced_weights(nodes)?;
        let mut nodes = nodes.to_vec();
        nodes.sort_unstable();
        nodes.dedup();
        Ok(DsdResult {
            nodes,
            net_density: iw.net_density,
            f_value: params.map(|p| p.value(iw.wpos, iw.wneg, iw.size)),
            wpos_total: iw.wpos,
            wneg_total: iw.wneg,
            exact,
            algorithm,
            c_used: None,
        })
    }

    pub fn size(&self) -> usize {
        self.nodes.len()
    }

    /// The value this result is ranked by under `scoring`.
    pub fn score(&self, scoring: &Scoring) -> f64 {
        scoring.score(self.wpos_total, self.wneg_total, self.nodes.len())
    }

    pub fn with_c(mut self, c: f64) -> Self {
        self.c_used = Some(c);
        self
    }

    pub fn contains(&self, u: NodeId) -> bool {
        self.nodes.binary_search(&u).is_ok()
    }
}
