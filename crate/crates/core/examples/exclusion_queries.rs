//! Dense subgraphs of a multilayer graph that avoid one layer, with soft and
//! hard penalties.

use negdsd::io::parse_multilayer;
use negdsd::multilayer::layer_report;
use negdsd::{apply_exclusion, brute_force, ExclusionQuery, Penalty, Scoring};

const SAMPLE: &str = "\
# a dense reply clique, partly linked by follows
a b reply
a c reply
a d reply
b c reply
b d reply
c d reply
a b follow
c d follow
d e reply
e f reply
d f reply
";

fn main() -> negdsd::Result<()> {
    let m = parse_multilayer(SAMPLE)?;
    for penalty in [Penalty::Soft(0.5), Penalty::Soft(2.0), Penalty::Hard] {
        let q = ExclusionQuery::by_names(&m, &["follow"], penalty)?;
        let g = apply_exclusion(&m, &q)?;
        let r = brute_force(&g, &Scoring::NetDensity)?;
        let names: Vec<_> = r.nodes.iter().map(|&u| g.label(u)).collect();
        println!("{penalty:?} (W = {}): {names:?}", q.weight(&m));
        for l in layer_report(&m, &r.nodes, &q)? {
            println!(
                "    {:<7} edges {} density {:.3}",
                l.layer, l.induced_edges, l.density
            );
        }
    }
    Ok(())
}
