//! Build uncertain co-star edges from filmographies: probability is the
//! Jaccard overlap, weight a discounted sum of shared-title popularity.

use std::collections::HashMap;

use negdsd::uncertain::{bernoulli_moments, tmdb_edge};

fn main() -> negdsd::Result<()> {
    let popularity: HashMap<&str, f64> = [
        ("heat", 40.0),
        ("ronin", 12.0),
        ("casino", 25.0),
        ("rush", 8.0),
    ]
    .into_iter()
    .collect();
    let films: [(&str, &[&str]); 3] = [
        ("de niro", &["heat", "ronin", "casino"]),
        ("pacino", &["heat", "rush"]),
        ("reno", &["ronin", "rush"]),
    ];
    for (i, (a, fa)) in films.iter().enumerate() {
        for (b, fb) in &films[i + 1..] {
            match tmdb_edge(fa, fb, &popularity)? {
                Some((p, w)) => {
                    let (mu, sigma2) = bernoulli_moments(p, w)?;
                    println!("{a} -- {b}: p {p:.3} w {w:.2} -> mu {mu:.3} sigma2 {sigma2:.3}");
                }
                None => println!("{a} -- {b}: no shared titles"),
            }
        }
    }
    Ok(())
}
