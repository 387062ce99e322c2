//! Maximize `(w+(S) + l1 |S|) / (B w-(S) + l2 |S|)` by binary search and
//! print the bracket after each probe.

use negdsd::testkit::random_signed;
use negdsd::{binary_search_objective, brute_force, ObjectiveParams, Scoring};

fn main() -> negdsd::Result<()> {
    let g = random_signed(14, 40, -2, 4, 3);
    let p = ObjectiveParams::new(1.0, 1.0, 0.5)?;
    let (r, trace) = binary_search_objective(&g, &p, 1e-9)?;
    for (i, (lo, hi)) in trace.brackets.iter().enumerate().take(12) {
        println!("{i:>3}: [{lo:.6}, {hi:.6}]");
    }
    println!(
        "{} probes ({} by peeling), f = {:.6}, exact = {}",
        trace.iterations,
        trace.heuristic_probes,
        r.f_value.unwrap(),
        r.exact
    );
    let best = brute_force(&g, &Scoring::Objective(p))?;
    println!(
        "brute force f = {:.6} on {:?}",
        best.f_value.unwrap(),
        best.nodes
    );
    Ok(())
}
