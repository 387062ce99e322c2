//! Shifting all weights to be nonnegative can pick a set whose true density
//! is negative.

use negdsd::testkit::{gen_shift_failure, shift_baseline};
use negdsd::{c_sweep, Scoring, DEFAULT_C_LIST};

fn main() -> negdsd::Result<()> {
    let g = gen_shift_failure(20, 10.0, 0.01)?;
    let shifted = shift_baseline(&g)?;
    let peeled = c_sweep(&g, &DEFAULT_C_LIST, &Scoring::NetDensity)?;
    println!(
        "shift baseline: {} nodes, true density {:.4}",
        shifted.size(),
        shifted.net_density
    );
    println!(
        "c-sweep:        {:?}, density {:.4}",
        peeled.nodes, peeled.net_density
    );
    Ok(())
}
