//! Exact densest subgraph by min cut, checked against peeling and exhaustive
//! search.

use negdsd::testkit::random_signed;
use negdsd::{brute_force, c_sweep, exact_dsd, Scoring, DEFAULT_C_LIST};

fn main() -> negdsd::Result<()> {
    let g = random_signed(18, 60, 0, 4, 11);
    let exact = exact_dsd(&g)?;
    let greedy = c_sweep(&g, &DEFAULT_C_LIST, &Scoring::NetDensity)?;
    let oracle = brute_force(&g, &Scoring::NetDensity)?;
    println!("exact:       {:.6} on {:?}", exact.net_density, exact.nodes);
    println!(
        "peeling:     {:.6} on {:?}",
        greedy.net_density, greedy.nodes
    );
    println!(
        "brute force: {:.6} on {:?}",
        oracle.net_density, oracle.nodes
    );

    let mut negative = g.edges().to_vec();
    negative[0].wneg += 1.0;
    let h = negdsd::SignedGraph::from_edges(g.n(), negative)?;
    println!("with a negative edge: {}", exact_dsd(&h).unwrap_err());
    Ok(())
}
