//! Greedy peeling for signed graphs.
//!
//! The peeler repeatedly removes the node minimizing `C deg+(v) - deg-(v)`
//! in the remaining subgraph and keeps the best of the `n` nested prefixes.
//! With `C = 1` this is the classic min-degree peeling; `C > 1` protects
//! nodes with heavy positive degree, `C < 1` removes noisy mixed-sign nodes
//! earlier.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{NodeId, SignedGraph, TIE_TOLERANCE};
use crate::result::{Algorithm, DsdResult, Scoring};

/// C values tried by [`c_sweep`] when the caller supplies none.
pub const DEFAULT_C_LIST: [f64; 7] = [0.1, 0.25, 0.5, 1.0, 2.0, 4.0, 10.0];

#[derive(Debug, Clone, PartialEq)]
pub struct PeelOrder {
    c: f64,
    removal_sequence: Vec<NodeId>,
    score_at_removal: Vec<f64>,
}

impl PeelOrder {
    pub fn c(&self) -> f64 {
        self.c
    }

    /// First removed first.
    pub fn removal_sequence(&self) -> &[NodeId] {
        &self.removal_sequence
    }

    pub fn score_at_removal(&self) -> &[f64] {
        &self.score_at_removal
    }

    /// The `i` nodes surviving longest, i.e. the prefix set `H_i`.
    pub fn prefix(&self, i: usize) -> &[NodeId] {
        &self.removal_sequence[self.removal_sequence.len() - i..]
    }

    pub fn len(&self) -> usize {
        self.removal_sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.removal_sequence.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PeelScoring {
    pub scoring: Scoring,
    pub c: f64,
}

impl PeelScoring {
    pub fn new(scoring: Scoring, c: f64) -> Result<Self> {
        check_c(c)?;
        Ok(PeelScoring { scoring, c })
    }

    /// Plain min-degree peeling on net density.
    pub fn classic() -> Self {
        PeelScoring {
            scoring: Scoring::NetDensity,
            c: 1.0,
        }
    }
}

fn check_c(c: f64) -> Result<()> {
    if c.is_finite() && c > 0.0 {
        Ok(())
    } else {
        Err(Error::NonPositiveC(c))
    }
}

#[derive(Debug, Clone, Copy)]
struct Entry {
    score: f64,
    node: NodeId,
    stamp: u32,
}

impl PartialEq for Entry {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Entry {}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Entry {
    fn cmp(&self, other: &Self) -> Ordering {
        self.score
            .total_cmp(&other.score)
            .then(self.node.cmp(&other.node))
    }
}

/// Removal order under score `c deg+(v) - deg-(v)`, ties to the smallest id.
///
/// Uses a binary heap with lazy invalidation: every degree update pushes a
/// fresh entry and stale ones are skipped by their stamp.
pub fn peel_order(g: &SignedGraph, c: f64) -> Result<PeelOrder> {
    check_c(c)?;
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut dpos: Vec<f64> = (0..n).map(|u| g.deg_pos(u)).collect();
    let mut dneg: Vec<f64> = (0..n).map(|u| g.deg_neg(u)).collect();
    let mut stamp = vec![0u32; n];
    let mut alive = vec![true; n];

    let mut heap: BinaryHeap<Reverse<Entry>> = (0..n)
        .map(|u| {
            Reverse(Entry {
                score: c * dpos[u] - dneg[u],
                node: u,
                stamp: 0,
            })
        })
        .collect();

    let mut removal_sequence = Vec::with_capacity(n);
    let mut score_at_removal = Vec::with_capacity(n);
    while let Some(Reverse(top)) = heap.pop() {
        let u = top.node;
        if !alive[u] || top.stamp != stamp[u] {
            continue;
        }
        alive[u] = false;
        removal_sequence.push(u);
        score_at_removal.push(top.score);
        for &(v, idx) in g.incident(u) {
            if v == u || !alive[v] {
                continue;
            }
            let e = g.edge(idx);
            dpos[v] -= e.wpos;
            dneg[v] -= e.wneg;
            stamp[v] = stamp[v].wrapping_add(1);
            heap.push(Reverse(Entry {
                score: c * dpos[v] - dneg[v],
                node: v,
                stamp: stamp[v],
            }));
        }
    }

    Ok(PeelOrder {
        c,
        removal_sequence,
        score_at_removal,
    })
}

/// Best prefix `H_i` of `order` under `scoring`; ties go to the smaller set.
pub fn best_prefix(g: &SignedGraph, order: &PeelOrder, scoring: &Scoring) -> Result<DsdResult> {
    let n = g.n();
    if order.len() != n {
        return Err(Error::OutOfRange(format!(
            "peel order has {} nodes, graph has {n}",
            order.len()
        )));
    }
    let mut alive = vec![false; n];
    for &u in order.removal_sequence() {
        if u >= n || alive[u] {
            return Err(Error::OutOfRange("peel order is not a permutation".into()));
        }
        alive[u] = true;
    }
    if n == 0 {
        return Err(Error::EmptyGraph);
    }

    let mut wpos = g.total_wpos();
    let mut wneg = g.total_wneg();
    let mut best_val = f64::NEG_INFINITY;
    let mut best_size = n;
    for (k, &u) in order.removal_sequence().iter().enumerate() {
        let size = n - k;
        let s = scoring.score(wpos, wneg, size);
        if s > best_val + TIE_TOLERANCE {
            best_val = s;
            best_size = size;
        } else if s >= best_val - TIE_TOLERANCE {
            best_val = best_val.max(s);
            best_size = size;
        }
        for &(v, idx) in g.incident(u) {
            if alive[v] {
                let e = g.edge(idx);
                wpos -= e.wpos;
                wneg -= e.wneg;
            }
        }
        alive[u] = false;
    }

    let result = DsdResult::evaluate(
        g,
        order.prefix(best_size),
        scoring.params(),
        false,
        Algorithm::Peeling,
    )?;
    Ok(result.with_c(order.c()))
}

/// One peeling run: [`peel_order`] followed by [`best_prefix`].
pub fn peel(g: &SignedGraph, scoring: &PeelScoring) -> Result<DsdResult> {
    let order = peel_order(g, scoring.c)?;
    best_prefix(g, &order, &scoring.scoring)
}

/// Runs one peel per `c` and keeps the best result; ties go to the smaller `c`.
///
/// Runs execute in parallel over the shared graph; the reduction is done in a
/// fixed order so the outcome does not depend on scheduling.
pub fn c_sweep(g: &SignedGraph, c_list: &[f64], scoring: &Scoring) -> Result<DsdResult> {
    if c_list.is_empty() {
        return Err(Error::EmptyCList);
    }
    for &c in c_list {
        check_c(c)?;
    }
    let runs: Vec<DsdResult> = c_list
        .par_iter()
        .map(|&c| {
            peel(
                g,
                &PeelScoring {
                    scoring: *scoring,
                    c,
                },
            )
        })
        .collect::<Result<_>>()?;

    let mut best: Option<DsdResult> = None;
    for r in runs {
        let replace = match &best {
            None => true,
            Some(b) => {
                let (rs, bs) = (r.score(scoring), b.score(scoring));
                rs > bs + TIE_TOLERANCE || (rs >= bs - TIE_TOLERANCE && r.c_used < b.c_used)
            }
        };
        if replace {
            best = Some(r);
        }
    }
    let mut best = best.expect("c list is nonempty");
    best.algorithm = Algorithm::CSweep;
    Ok(best)
}
