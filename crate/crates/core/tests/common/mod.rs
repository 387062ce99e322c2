#![allow(dead_code)]

use rand::Rng;

use negdsd::multilayer::MultilayerGraph;
use negdsd::{SignedEdge, SignedGraph};

/// Each pair present with probability `p`, integer net weight in `lo..=hi`.
pub fn random_net_graph<R: Rng>(rng: &mut R, n: usize, p: f64, lo: i32, hi: i32) -> SignedGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push(SignedEdge::from_net(u, v, rng.gen_range(lo..=hi) as f64));
            }
        }
    }
    SignedGraph::from_edges(n, edges).unwrap()
}

/// Random multigraph over `layers` layers; each pair gets each layer with
/// probability `p`.
pub fn random_multilayer<R: Rng>(rng: &mut R, n: usize, layers: usize, p: f64) -> MultilayerGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            for l in 0..layers {
                if rng.gen_bool(p) {
                    edges.push((u, v, l));
                }
            }
        }
    }
    let names = (0..layers).map(|l| format!("layer{l}")).collect();
    MultilayerGraph::new(n, names, edges).unwrap()
}

/// Number of edges of `layer_set` induced by `nodes`.
pub fn induced_in_layers(m: &MultilayerGraph, nodes: &[usize], layer_set: &[usize]) -> usize {
    m.edges()
        .iter()
        .filter(|&&(u, v, l)| layer_set.contains(&l) && nodes.contains(&u) && nodes.contains(&v))
        .count()
}
