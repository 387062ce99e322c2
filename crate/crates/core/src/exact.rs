//! Exact densest subgraph on nonnegative weights via minimum cuts.
//!
//! Real weights are mapped to integers before any flow is computed. Every
//! finite `f64` is a dyadic rational, so a graph whose weights share a common
//! binary exponent range is scaled by a power of two with no rounding at all;
//! only when the exponent spread is too wide for 128-bit capacities does the
//! solver fall back to fixed point at `1e-9` and report `exact = false`.
//!
//! For a guess `g = num / den` the network has a source arc of capacity `A`
//! into every node, an arc of capacity `A + 2 num - den d(v)` from every node
//! to the sink, and an undirected arc of capacity `den w(e)` per edge. A cut
//! with source side `S` costs `n A + 2 (num |S| - den w(S))`, so the largest
//! min-cut source side is the largest maximizer of `den w(S) - num |S|`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{NodeId, SignedGraph, WeightedGraph};
use crate::maxflow::FlowNetwork;
use crate::result::{Algorithm, DsdResult};

/// Fixed-point resolution used when exact scaling would overflow.
pub const FIXED_POINT_SCALE: f64 = 1e9;

/// Largest bit width of a scaled integer weight.
const MAX_WEIGHT_BITS: i32 = 96;
/// Largest denominator exponent used to represent a density guess.
const MAX_GUESS_SHIFT: i32 = 60;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DecisionOutcome {
    pub feasible: bool,
    /// Present iff `feasible`; the largest set meeting the guess.
    pub witness: Option<Vec<NodeId>>,
    /// False when weights or the guess had to be rounded.
    pub exact: bool,
}

/// `x = mant * 2^exp` exactly, with `mant` odd unless `x == 0`.
fn decompose(x: f64) -> (i128, i32) {
    if x == 0.0 {
        return (0, 0);
    }
    let bits = x.to_bits();
    let sign = if bits >> 63 == 1 { -1 } else { 1 };
    let exp_bits = ((bits >> 52) & 0x7ff) as i32;
    let frac = (bits & ((1u64 << 52) - 1)) as i128;
    let (mut mant, mut exp) = if exp_bits == 0 {
        (frac, -1074)
    } else {
        (frac | (1i128 << 52), exp_bits - 1075)
    };
    let tz = mant.trailing_zeros() as i32;
    mant >>= tz;
    exp += tz;
    (sign * mant, exp)
}

fn ceil_div(a: i128, b: i128) -> i128 {
    debug_assert!(b > 0);
    let q = a.div_euclid(b);
    if a.rem_euclid(b) == 0 {
        q
    } else {
        q + 1
    }
}

/// Integer image of a nonnegative weighted graph.
#[derive(Debug, Clone)]
struct ScaledGraph {
    n: usize,
    edges: Vec<(usize, usize, i128)>,
    degree: Vec<i128>,
    /// Weights equal `W * 2^exp` when `dyadic`, else `W / FIXED_POINT_SCALE`.
    exp: i32,
    dyadic: bool,
}

impl ScaledGraph {
    fn new(g: &WeightedGraph) -> Self {
        Self::dyadic(g).unwrap_or_else(|| Self::fixed_point(g))
    }

    fn dyadic(g: &WeightedGraph) -> Option<Self> {
        let parts: Vec<_> = g.edges().iter().map(|e| decompose(e.2)).collect();
        let nonzero = || parts.iter().filter(|p| p.0 != 0);
        let exp = nonzero().map(|p| p.1).min().unwrap_or(0);
        let width = nonzero()
            .map(|&(m, x)| x - exp + (128 - m.leading_zeros() as i32))
            .max()
            .unwrap_or(0);
        if width > MAX_WEIGHT_BITS {
            return None;
        }
        let edges = g
            .edges()
            .iter()
            .zip(&parts)
            .map(|(e, &(m, x))| (e.0, e.1, if m == 0 { 0 } else { m << (x - exp) }))
            .collect();
        Some(Self::with_edges(g.n(), edges, exp, true))
    }

    fn fixed_point(g: &WeightedGraph) -> Self {
        let edges = g
            .edges()
            .iter()
            .map(|e| (e.0, e.1, (e.2 * FIXED_POINT_SCALE).round() as i128))
            .collect();
        Self::with_edges(g.n(), edges, 0, false)
    }

    fn with_edges(n: usize, edges: Vec<(usize, usize, i128)>, exp: i32, dyadic: bool) -> Self {
        let mut degree = vec![0i128; n];
        for &(u, v, w) in &edges {
            if u == v {
                degree[u] += 2 * w;
            } else {
                degree[u] += w;
                degree[v] += w;
            }
        }
        ScaledGraph {
            n,
            edges,
            degree,
            exp,
            dyadic,
        }
    }

    /// The guess `g` as `(num, den, exact)` in scaled units, rounded up when
    /// it cannot be represented, so that feasible answers stay sound.
    fn guess(&self, g: f64) -> (i128, i128, bool) {
        if !self.dyadic {
            let scaled = g * FIXED_POINT_SCALE;
            return (scaled.ceil() as i128, 1, false);
        }
        let (m, e) = decompose(g);
        if m == 0 {
            return (0, 1, true);
        }
        let shift = e - self.exp;
        if shift >= 0 {
            match (shift < 100)
                .then(|| m.checked_mul(1i128 << shift))
                .flatten()
            {
                Some(num) => (num, 1, true),
                // guess far above any achievable density
                None => (i128::MAX / 4, 1, false),
            }
        } else if -shift <= MAX_GUESS_SHIFT {
            (m, 1i128 << -shift, true)
        } else {
            let drop = -shift - MAX_GUESS_SHIFT;
            let num = if drop >= 120 {
                if m > 0 {
                    1
                } else {
                    0
                }
            } else {
                ceil_div(m, 1i128 << drop)
            };
            (num, 1i128 << MAX_GUESS_SHIFT, false)
        }
    }

    fn induced(&self, mask: &[bool]) -> i128 {
        self.edges
            .iter()
            .filter(|e| mask[e.0] && mask[e.1])
            .map(|e| e.2)
            .sum()
    }

    /// Largest maximizer of `den W(S) - num |S|` (possibly empty), or `None`
    /// if the network capacities would overflow.
    fn max_excess_set(&self, num: i128, den: i128) -> Option<Vec<bool>> {
        let n = self.n;
        let two_num = num.checked_mul(2)?;
        let mut a: i128 = 0;
        for &d in &self.degree {
            a = a.max(den.checked_mul(d)?.checked_sub(two_num)?);
        }
        // total source capacity bounds every flow value
        a.checked_mul(n as i128 + 1)?;
        let mut net = FlowNetwork::new(n + 2);
        let (s, t) = (n, n + 1);
        for &(u, v, w) in &self.edges {
            if u != v && w > 0 {
                net.add_edge(u, v, den.checked_mul(w)?);
            }
        }
        for v in 0..n {
            if a > 0 {
                net.add_arc(s, v, a);
            }
            let sink = a.checked_add(two_num)?.checked_sub(den * self.degree[v])?;
            if sink > 0 {
                net.add_arc(v, t, sink);
            }
        }
        net.max_flow(s, t);
        let mut side = net.maximal_source_side(t);
        side.truncate(n);
        Some(side)
    }
}

fn mask_to_nodes(mask: &[bool]) -> Vec<NodeId> {
    mask.iter()
        .enumerate()
        .filter(|(_, &m)| m)
        .map(|(u, _)| u)
        .collect()
}

/// Is there a nonempty `S` with `w(S) / |S| >= g`?
///
/// One minimum cut decides it; the witness is the largest qualifying set.
pub fn dsd_decision(gw: &WeightedGraph, g: f64) -> Result<DecisionOutcome> {
    gw.ensure_nonnegative()?;
    if g.is_nan() {
        return Err(Error::OutOfRange("density guess is NaN".into()));
    }
    if gw.n() == 0 {
        return Ok(DecisionOutcome {
            feasible: false,
            witness: None,
            exact: true,
        });
    }
    let mut scaled = ScaledGraph::new(gw);
    let (mut num, mut den, mut exact) = scaled.guess(g);
    exact &= scaled.dyadic;
    let side = match scaled.max_excess_set(num, den) {
        Some(side) => side,
        None => {
            scaled = ScaledGraph::fixed_point(gw);
            (num, den, _) = scaled.guess(g);
            exact = false;
            scaled
                .max_excess_set(num, den)
                .ok_or_else(|| Error::OutOfRange("weights too large for the flow solver".into()))?
        }
    };
    let witness = mask_to_nodes(&side);
    Ok(DecisionOutcome {
        feasible: !witness.is_empty(),
        witness: (!witness.is_empty()).then_some(witness),
        exact,
    })
}

/// Maximum density set of a nonnegative graph.
///
/// Iterates `g <- w(S)/|S|` where `S` maximizes `w(S) - g |S|` (Dinkelbach's
/// method on the cut network). Every guess is the exact density of a real
/// set, so each step is an exact integer cut and the density strictly
/// increases until the maximizer value hits zero. Returns the largest
/// densest set.
pub fn exact_dsd_weighted(gw: &WeightedGraph) -> Result<(Vec<NodeId>, bool)> {
    gw.ensure_nonnegative()?;
    let n = gw.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut scaled = ScaledGraph::new(gw);
    loop {
        let mut num = scaled.induced(&vec![true; n]);
        let mut den = n as i128;
        let result = loop {
            let Some(side) = scaled.max_excess_set(num, den) else {
                break None;
            };
            let size = side.iter().filter(|&&m| m).count() as i128;
            let w = scaled.induced(&side);
            // the current set attains zero, so the maximizer is nonempty
            debug_assert!(size > 0);
            if den * w - num * size == 0 {
                break Some(side);
            }
            num = w;
            den = size;
        };
        match result {
            Some(side) => return Ok((mask_to_nodes(&side), scaled.dyadic)),
            None if scaled.dyadic => scaled = ScaledGraph::fixed_point(gw),
            None => {
                return Err(Error::OutOfRange(
                    "weights too large for the flow solver".into(),
                ))
            }
        }
    }
}

/// Exact densest subgraph of a signed graph without negative weights.
pub fn exact_dsd(g: &SignedGraph) -> Result<DsdResult> {
    if let Some(e) = g.edges().iter().find(|e| e.wneg > 0.0) {
        return Err(Error::NegativeWeight {
            u: e.u,
            v: e.v,
            weight: -e.wneg,
        });
    }
    let (nodes, exact) = exact_dsd_weighted(&g.net_view())?;
    DsdResult::evaluate(g, &nodes, None, exact, Algorithm::Exact)
}
