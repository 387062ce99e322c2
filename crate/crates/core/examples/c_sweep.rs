//! Sweep the peeling multiplier C on a random signed graph and compare each
//! run with the sweep's pick.
//!
//! `cargo run --example c_sweep -- 2000 20000 7`

use negdsd::testkit::random_signed;
use negdsd::{best_prefix, c_sweep, peel_order, Scoring, DEFAULT_C_LIST};

fn main() -> negdsd::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|s| s.parse::<u64>().expect("integer argument"));
    let n = args.next().unwrap_or(2000) as usize;
    let m = args.next().unwrap_or(20_000) as usize;
    let seed = args.next().unwrap_or(7);
    let g = random_signed(n, m, -3, 3, seed);

    for &c in &DEFAULT_C_LIST {
        let r = best_prefix(&g, &peel_order(&g, c)?, &Scoring::NetDensity)?;
        println!(
            "C = {c:>5}: density {:>8.4}, size {}",
            r.net_density,
            r.size()
        );
    }
    let best = c_sweep(&g, &DEFAULT_C_LIST, &Scoring::NetDensity)?;
    println!(
        "sweep picks C = {} with density {:.4}",
        best.c_used.unwrap(),
        best.net_density
    );
    Ok(())
}
