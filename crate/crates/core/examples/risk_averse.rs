//! Risk-averse dense subgraph of a Bernoulli uncertain graph: a larger risk
//! multiplier B trades expected reward for lower variance.
//!
//! Reads `u v p w` lines from the file given as argument, or uses a small
//! built-in graph.

use negdsd::io::{parse_bernoulli, read_input};
use negdsd::{
    c_sweep, risk_profile, uncertain_to_signed, ObjectiveParams, Scoring, DEFAULT_C_LIST,
};

const SAMPLE: &str = "\
# a high-reward but volatile clique next to a certain cycle
r1 r2 0.8 3
r1 r3 0.8 3
r1 r4 0.8 3
r2 r3 0.8 3
r2 r4 0.8 3
r3 r4 0.8 3
s1 s2 1.0 1
s2 s3 1.0 1
s3 s4 1.0 1
s4 s5 1.0 1
s5 s1 1.0 1
";

fn main() -> negdsd::Result<()> {
    let text = match std::env::args().nth(1) {
        Some(path) => read_input(path.as_ref())?,
        None => SAMPLE.to_owned(),
    };
    let ug = parse_bernoulli(&text)?;
    let g = uncertain_to_signed(&ug);
    for b in [0.25, 1.0, 2.0] {
        let p = ObjectiveParams::new(1.0, 1.0, b)?;
        let r = c_sweep(&g, &DEFAULT_C_LIST, &Scoring::Objective(p))?;
        let risk = risk_profile(&ug, &r.nodes)?;
        let names: Vec<_> = r.nodes.iter().map(|&u| g.label(u)).collect();
        println!(
            "B = {b:<4}: size {:>3}, avg reward {:.3}, avg risk {:.3}  {names:?}",
            risk.size, risk.avg_expected_reward, risk.avg_risk
        );
    }
    Ok(())
}
