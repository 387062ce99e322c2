//! Plain peeling falls into a low-density triangle; raising C keeps the hub.
//!
//! `cargo run --example bad_peeling -- 16 0.01`

use negdsd::testkit::gen_bad_peeling;
use negdsd::{brute_force, peel, PeelScoring, Scoring};

fn main() -> negdsd::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(16, |s| s.parse().expect("n"));
    let eps: f64 = args.next().map_or(0.01, |s| s.parse().expect("eps"));
    let g = gen_bad_peeling(n, eps)?;

    for c in [1.0, 10.0] {
        let r = peel(&g, &PeelScoring::new(Scoring::NetDensity, c)?)?;
        let names: Vec<_> = r.nodes.iter().map(|&u| g.label(u)).collect();
        println!("C = {c:>4}: density {:.4} on {names:?}", r.net_density);
    }
    if g.n() <= 22 {
        let best = brute_force(&g, &Scoring::NetDensity)?;
        println!("optimum:   density {:.4}", best.net_density);
    }
    Ok(())
}
