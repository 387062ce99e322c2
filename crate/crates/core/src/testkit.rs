//! Deterministic instance generators and the weight-shifting baseline.
//!
//! * [`gen_bad_peeling`]: a triangle of tiny weight hanging off a heavy hub
//!   whose many negative filler edges make plain peeling drop the hub first.
//! * [`gen_two_component`]: a positive clique next to a random component
//!   with independent `+1` and `-1` edges.
//! * [`gen_shift_failure`]: an instance on which shifting all weights to be
//!   nonnegative picks a set of negative true density.
//! * [`random_signed`]: seeded random signed graphs for tests and benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact::exact_dsd_weighted;
use crate::graph::{SignedEdge, SignedGraph, WeightedGraph};
use crate::result::{Algorithm, DsdResult};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum InstanceSpec {
    BadPeeling { n: usize, eps: f64 },
    TwoComponent { r: usize, n: usize, seed: u64 },
    ShiftFailure { n: usize, delta: f64, eps: f64 },
}

impl InstanceSpec {
    pub fn generate(&self) -> Result<SignedGraph> {
        match *self {
            InstanceSpec::BadPeeling { n, eps } => gen_bad_peeling(n, eps),
            InstanceSpec::TwoComponent { r, n, seed } => gen_two_component(r, n, seed),
            InstanceSpec::ShiftFailure { n, delta, eps } => gen_shift_failure(n, delta, eps),
        }
    }
}

/// Node ids of the bad-peeling instance: the triangle, then the hub.
pub mod bad_peeling {
    pub const A: usize = 0;
    pub const B: usize = 1;
    pub const C: usize = 2;
    pub const HUB: usize = 3;
    /// First filler node; fillers occupy `FILLER..FILLER + n`.
    pub const FILLER: usize = 4;
}

/// `n + 4` nodes: triangle `{a, b, c}` with pairwise weight `eps`, hub `z`
/// joined to each triangle node with weight `W = (n - 4) / 3`, a path of `n`
/// filler nodes with `-1` edges, and a `-1` edge from `z` to every filler.
///
/// Net degrees: `z` has `3W - n`, inner fillers `-3`, the two path ends
/// `-2`, triangle nodes `2 eps + W`.
pub fn gen_bad_peeling(n: usize, eps: f64) -> Result<SignedGraph> {
    use bad_peeling::*;
    if n < 7 || n % 3 != 1 {
        return Err(Error::BadParameters(format!(
            "bad-peeling needs n >= 7 with n = 1 (mod 3), got {n}"
        )));
    }
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::BadParameters(format!(
            "eps must lie in (0, 1), got {eps}"
        )));
    }
    let w = ((n - 4) / 3) as f64;
    let mut edges = vec![
        SignedEdge::new(A, B, eps, 0.0),
        SignedEdge::new(B, C, eps, 0.0),
        SignedEdge::new(A, C, eps, 0.0),
    ];
    for t in [A, B, C] {
        edges.push(SignedEdge::new(t, HUB, w, 0.0));
    }
    for i in 0..n {
        edges.push(SignedEdge::new(HUB, FILLER + i, 0.0, 1.0));
        if i + 1 < n {
            edges.push(SignedEdge::new(FILLER + i, FILLER + i + 1, 0.0, 1.0));
        }
    }
    let mut labels: Vec<String> = ["a", "b", "c", "z"].iter().map(|s| s.to_string()).collect();
    labels.extend((1..=n).map(|i| format!("f{i}")));
    SignedGraph::from_edges(n + 4, edges)?.with_labels(labels)
}

/// An `r`-clique of `+1` edges plus `n` nodes where every pair independently
/// gets a `+1` edge with probability 1/2 and a `-1` edge with probability 1/2.
pub fn gen_two_component(r: usize, n: usize, seed: u64) -> Result<SignedGraph> {
    if r < 2 {
        return Err(Error::BadParameters(format!(
            "clique size must be >= 2, got {r}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..r {
        for v in u + 1..r {
            edges.push(SignedEdge::new(u, v, 1.0, 0.0));
        }
    }
    for u in r..r + n {
        for v in u + 1..r + n {
            let pos = rng.gen_bool(0.5);
            let neg = rng.gen_bool(0.5);
            if pos || neg {
                let wpos = if pos { 1.0 } else { 0.0 };
                let wneg = if neg { 1.0 } else { 0.0 };
                edges.push(SignedEdge::new(u, v, wpos, wneg));
            }
        }
    }
    SignedGraph::from_edges(r + n, edges)
}

/// `n + 5` nodes: unit triangle, one isolated edge of weight `-delta`, and a
/// `K_n` whose edges weigh `-eps` each.
///
/// Requires `(n - 1)(delta - eps) / 2 > 1 + delta`, so that after shifting
/// every weight up by `delta` the clique is denser than the triangle.
pub fn gen_shift_failure(n: usize, delta: f64, eps: f64) -> Result<SignedGraph> {
    if n < 3 {
        return Err(Error::BadParameters(format!(
            "clique size must be >= 3, got {n}"
        )));
    }
    if !(delta.is_finite() && delta > 0.0 && eps > 0.0 && eps < delta) {
        return Err(Error::BadParameters(format!(
            "need 0 < eps < delta, got eps = {eps}, delta = {delta}"
        )));
    }
    if (n as f64 - 1.0) * (delta - eps) / 2.0 <= 1.0 + delta {
        return Err(Error::BadParameters(format!(
            "shifted clique density {} does not exceed shifted triangle density {}",
            (n as f64 - 1.0) * (delta - eps) / 2.0,
            1.0 + delta
        )));
    }
    let mut edges = vec![
        SignedEdge::new(0, 1, 1.0, 0.0),
        SignedEdge::new(1, 2, 1.0, 0.0),
        SignedEdge::new(0, 2, 1.0, 0.0),
        SignedEdge::new(3, 4, 0.0, delta),
    ];
    for u in 5..5 + n {
        for v in u + 1..5 + n {
            edges.push(SignedEdge::new(u, v, 0.0, eps));
        }
    }
    SignedGraph::from_edges(n + 5, edges)
}

/// Shifts every net edge weight up by the magnitude of the most negative one,
/// solves the shifted graph exactly and re-scores the winner on `g`.
pub fn shift_baseline(g: &SignedGraph) -> Result<DsdResult> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let shift = g
        .edges()
        .iter()
        .map(|e| e.net())
        .fold(0.0f64, f64::min)
        .abs();
    let shifted = WeightedGraph::new(
        g.n(),
        g.edges()
            .iter()
            .map(|e| (e.u, e.v, e.net() + shift))
            .collect(),
    )?;
    let (nodes, exact) = exact_dsd_weighted(&shifted)?;
    DsdResult::evaluate(g, &nodes, None, exact, Algorithm::ShiftBaseline)
}

/// Seeded random simple graph with `m` distinct loopless pairs (fewer if the
/// graph is too small) and integer net weights drawn uniformly from
/// `lo..=hi`, split by sign.
pub fn random_signed(n: usize, m: usize, lo: i64, hi: i64, seed: u64) -> SignedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_pairs = n * n.saturating_sub(1) / 2;
    let m = m.min(max_pairs);
    let mut edges = Vec::with_capacity(m);
    if m * 3 >= max_pairs {
        // dense: sample each pair
        let p = m as f64 / max_pairs.max(1) as f64;
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push(SignedEdge::from_net(u, v, rng.gen_range(lo..=hi) as f64));
                }
            }
        }
    } else {
        let mut seen = std::collections::HashSet::with_capacity(m);
        while edges.len() < m {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u == v || !seen.insert((u.min(v), u.max(v))) {
                continue;
            }
            edges.push(SignedEdge::from_net(u, v, rng.gen_range(lo..=hi) as f64));
        }
    }
    SignedGraph::from_edges(n, edges).expect("generated edges are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::exact_dsd;

    fn sorted_degrees(g: &SignedGraph) -> Vec<f64> {
        let mut d: Vec<f64> = (0..g.n()).map(|u| g.degree(u)).collect();
        d.sort_by(f64::total_cmp);
        d
    }

    #[test]
    fn bad_peeling_degree_multiset() {
        let g = gen_bad_peeling(16, 0.01).unwrap();
        assert_eq!(g.n(), 20);
        let d = sorted_degrees(&g);
        assert_eq!(d[0], -4.0);
        assert!(d[1..15].iter().all(|&x| x == -3.0));
        assert_eq!(&d[15..17], &[-2.0, -2.0]);
        assert!(d[17..].iter().all(|&x| (x - 4.02).abs() < 1e-12));
        assert_eq!(g.label(bad_peeling::HUB), "z");
    }

    #[test]
    fn bad_peeling_parameters() {
        assert!(gen_bad_peeling(8, 0.01).is_err());
        assert!(gen_bad_peeling(4, 0.01).is_err());
        assert!(gen_bad_peeling(7, 1.0).is_err());
        assert!(gen_bad_peeling(7, 0.5).is_ok());
    }

    #[test]
    fn two_component_clique_degrees() {
        for seed in 0..5 {
            let g = gen_two_component(6, 8, seed).unwrap();
            assert!((0..6).all(|u| g.degree(u) == 5.0));
            assert_eq!(g, gen_two_component(6, 8, seed).unwrap());
        }
        let k10 = gen_two_component(10, 0, 1).unwrap();
        assert_eq!(exact_dsd(&k10).unwrap().net_density, 4.5);
        assert!(gen_two_component(1, 5, 0).is_err());
    }

    #[test]
    fn two_component_mean_degree_is_zero() {
        // average over seeds and nodes of the random component
        let (mut sum, mut count) = (0.0, 0usize);
        for seed in 0..200 {
            let g = gen_two_component(3, 30, seed).unwrap();
            for u in 3..33 {
                sum += g.degree(u);
                count += 1;
            }
        }
        let mean = sum / count as f64;
        // per-node degree has variance 29/2; standard error ~ 0.05
        assert!(mean.abs() < 0.3, "mean degree {mean}");
    }

    #[test]
    fn shift_failure_instance() {
        let g = gen_shift_failure(20, 10.0, 0.01).unwrap();
        assert_eq!((g.n(), g.m()), (25, 4 + 190));
        let r = shift_baseline(&g).unwrap();
        assert_eq!(r.nodes, (5..25).collect::<Vec<_>>());
        assert!((r.net_density + 0.095).abs() < 1e-9);
        assert!(gen_shift_failure(3, 10.0, 0.01).is_err());
        assert!(gen_shift_failure(20, 1.0, 2.0).is_err());
    }

    #[test]
    fn shift_is_noop_without_negatives() {
        let g = random_signed(9, 20, 0, 3, 4);
        let a = shift_baseline(&g).unwrap();
        let b = exact_dsd(&g).unwrap();
        assert_eq!(a.nodes, b.nodes);
        assert_eq!(a.net_density, b.net_density);
    }

    #[test]
    fn shift_on_triangle_plus_negative_edge() {
        let g =
            SignedGraph::from_net_edges(5, [(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0), (3, 4, -1.0)])
                .unwrap();
        let r = shift_baseline(&g).unwrap();
        assert_eq!(r.nodes, vec![0, 1, 2]);
        assert_eq!(r.net_density, 1.0);
    }

    #[test]
    fn random_signed_is_seeded() {
        let a = random_signed(50, 200, -3, 3, 9);
        assert_eq!(a, random_signed(50, 200, -3, 3, 9));
        assert_eq!(a.m(), 200);
        assert!(a.edges().iter().all(|e| e.u != e.v));
    }
}
