//! Binary search on the ratio objective `f`.
//!
//! Each probe `q` asks whether some set has `f(S) >= q`, which is the same
//! as asking whether the graph reweighted by `w+ - q B w-` has a set of
//! density at least `q lambda2 - lambda1`. When every reweighted edge is
//! nonnegative the probe is a single exact minimum-cut decision. Otherwise
//! the probe falls back to a C-sweep of the peeler on the reweighted graph,
//! which can only under-report feasibility, and the result is flagged as
//! inexact.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::dsd_decision;
use crate::graph::{NodeId, SignedGraph};
use crate::objective::{tilde_weights, ObjectiveParams};
use crate::peeling::{c_sweep, DEFAULT_C_LIST};
use crate::result::{Algorithm, DsdResult, Scoring};

pub const DEFAULT_EPS: f64 = 1e-9;
pub const MAX_ITERATIONS: usize = 64;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchTrace {
    pub iterations: usize,
    /// `(lo, hi)` after each probe, starting with the initial bracket.
    pub brackets: Vec<(f64, f64)>,
    /// Probes answered by the peeling fallback.
    pub heuristic_probes: usize,
    pub exact: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Probe {
    Feasible,
    Infeasible,
}

pub fn binary_search_objective(
    g: &SignedGraph,
    p: &ObjectiveParams,
    eps: f64,
) -> Result<(DsdResult, SearchTrace)> {
    if !(eps.is_finite() && eps > 0.0) {
        return Err(Error::InvalidParams(format!("eps must be > 0, got {eps}")));
    }
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let f_of = |nodes: &[NodeId]| -> Result<f64> {
        let iw = g.induced_weights(nodes)?;
        Ok(p.value(iw.wpos, iw.wneg, iw.size))
    };

    let all: Vec<NodeId> = (0..n).collect();
    let mut best = all.clone();
    let mut best_f = f_of(&all)?;
    let mut lo = 0.0f64;
    let mut hi = p.q_max_bound(g);
    let mut trace = SearchTrace {
        iterations: 0,
        brackets: vec![(lo, hi)],
        heuristic_probes: 0,
        exact: true,
    };
    lo = lo.max(best_f.min(hi));

    while hi - lo > eps * hi.max(1.0) && trace.iterations < MAX_ITERATIONS {
        let q = lo + (hi - lo) / 2.0;
        let tilde = tilde_weights(g, q, p.b())?;
        let threshold = p.density_threshold(q);

        let (probe, witness) = if tilde.all_nonnegative {
            let out = dsd_decision(&tilde.graph, threshold)?;
            trace.exact &= out.exact;
            if out.feasible {
                (Probe::Feasible, out.witness)
            } else {
                (Probe::Infeasible, None)
            }
        } else {
            trace.heuristic_probes += 1;
            let r = c_sweep(
                &tilde.graph.to_signed(),
                &DEFAULT_C_LIST,
                &Scoring::NetDensity,
            )?;
            // certify directly on the objective
            if f_of(&r.nodes)? >= q {
                (Probe::Feasible, Some(r.nodes))
            } else {
                trace.exact = false;
                (Probe::Infeasible, None)
            }
        };

        match probe {
            Probe::Feasible => {
                lo = q;
                if let Some(w) = witness {
                    let fw = f_of(&w)?;
                    if fw > best_f {
                        best_f = fw;
                        best = w;
                    }
                    lo = lo.max(fw.min(hi));
                }
            }
            Probe::Infeasible => hi = q,
        }
        trace.iterations += 1;
        trace.brackets.push((lo, hi));
    }

    let result = DsdResult::evaluate(g, &best, Some(p), trace.exact, Algorithm::BinarySearch)?;
    Ok((result, trace))
}
