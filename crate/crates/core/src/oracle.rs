//! Exhaustive search over all nonempty node subsets; the reference every
//! solver is tested against.

use crate::error::{Error, Result};
use crate::graph::{NodeId, SignedGraph, TIE_TOLERANCE};
use crate::result::{Algorithm, DsdResult, Scoring};

pub const BRUTE_FORCE_MAX_NODES: usize = 22;

/// `a` precedes `b` when both are read as ascending node lists.
fn lex_less(a: u32, b: u32) -> bool {
    let diff = a ^ b;
    if diff == 0 {
        return false;
    }
    let k = diff.trailing_zeros();
    let above = !((2u32 << k) - 1);
    if a >> k & 1 == 1 {
        // a has k where b has something larger, or b stops
        b & above != 0
    } else {
        a & above == 0
    }
}

fn mask_nodes(mask: u32, n: usize) -> Vec<NodeId> {
    (0..n).filter(|&u| mask >> u & 1 == 1).collect()
}

/// Exact maximizer of `scoring` over all `2^n - 1` nonempty sets; ties go to
/// the lexicographically smallest set.
pub fn brute_force(g: &SignedGraph, scoring: &Scoring) -> Result<DsdResult> {
    let n = g.n();
    if n > BRUTE_FORCE_MAX_NODES {
        return Err(Error::TooLarge {
            n,
            max: BRUTE_FORCE_MAX_NODES,
        });
    }
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let total = 1usize << n;
    let mut wpos = vec![0.0f64; total];
    let mut wneg = vec![0.0f64; total];
    let mut best_mask = 0u32;
    let mut best_val = f64::NEG_INFINITY;
    for mask in 1..total {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        let (mut p, mut q) = (wpos[rest], wneg[rest]);
        for &(v, idx) in g.incident(low) {
            if v == low || rest >> v & 1 == 1 {
                let e = g.edge(idx);
                p += e.wpos;
                q += e.wneg;
            }
        }
        wpos[mask] = p;
        wneg[mask] = q;

        let size = mask.count_ones() as usize;
        let val = scoring.score(p, q, size);
        let m = mask as u32;
        if val > best_val + TIE_TOLERANCE
            || (val >= best_val - TIE_TOLERANCE && lex_less(m, best_mask))
        {
            best_val = best_val.max(val);
            best_mask = m;
        }
    }
    DsdResult::evaluate(
        g,
        &mask_nodes(best_mask, n),
        scoring.params(),
        true,
        Algorithm::BruteForce,
    )
}
