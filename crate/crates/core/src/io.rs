//! Whitespace-delimited text formats.
//!
//! Every format ignores blank lines and `#` comments, and accepts a
//! one-column line naming a node, which declares it (possibly isolated) and
//! fixes its id. Node labels are arbitrary tokens mapped to dense ids in
//! order of first appearance.
//!
//! | format      | edge line           |
//! |-------------|---------------------|
//! | signed      | `u v w` or `u v wpos wneg` |
//! | Bernoulli   | `u v p w` or `u v p` (`w = 1`) |
//! | moments     | `u v mu sigma2`     |
//! | multilayer  | `u v layer`         |

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{NodeLabels, SignedEdge, SignedGraph};
use crate::multilayer::MultilayerGraph;
use crate::uncertain::{BernoulliEdge, UncertainEdge, UncertainGraph};

/// Reads a file, or standard input when `path` is `-`.
pub fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s)?;
        Ok(s)
    } else {
        Ok(std::fs::read_to_string(path)?)
    }
}

/// Non-comment lines as `(1-based line number, tokens)`.
fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let content = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

fn number(line: usize, tok: &str, what: &str) -> Result<f64> {
    let x: f64 = tok.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("{what} `{tok}` is not a number"),
    })?;
    if !x.is_finite() {
        return Err(Error::Parse {
            line,
            msg: format!("{what} `{tok}` is not finite"),
        });
    }
    Ok(x)
}

fn nonneg(line: usize, tok: &str, what: &str) -> Result<f64> {
    let x = number(line, tok, what)?;
    if x < 0.0 {
        return Err(Error::Parse {
            line,
            msg: format!("{what} must be >= 0, got {tok}"),
        });
    }
    Ok(x)
}

fn bad_columns(line: usize, got: usize, expected: &str) -> Error {
    Error::Parse {
        line,
        msg: format!("expected {expected} columns, got {got}"),
    }
}

fn at_line(line: usize, e: Error) -> Error {
    match e {
        Error::Parse { .. } => e,
        other => Error::Parse {
            line,
            msg: other.to_string(),
        },
    }
}

/// Labels that merely spell out `0..n` carry no information.
fn meaningful(labels: NodeLabels) -> Option<Vec<String>> {
    let names = labels.into_names();
    let trivial = names.iter().enumerate().all(|(i, s)| *s == i.to_string());
    (!trivial).then_some(names)
}

/// Signed edge list. The column count of the first edge line selects net
/// (`u v w`, split by sign) or split (`u v wpos wneg`) weights for the file.
pub fn parse_signed(text: &str) -> Result<SignedGraph> {
    let mut labels = NodeLabels::new();
    let mut edges = Vec::new();
    let mut width = None;
    for (line, t) in records(text) {
        if t.len() == 1 {
            labels.intern(t[0]);
            continue;
        }
        if t.len() != 3 && t.len() != 4 {
            return Err(bad_columns(line, t.len(), "1, 3 or 4"));
        }
        match width {
            None => width = Some(t.len()),
            Some(w) if w != t.len() => {
                return Err(Error::Parse {
                    line,
                    msg: format!("mixed formats: {} columns after {w}-column edges", t.len()),
                })
            }
            _ => {}
        }
        let (u, v) = (labels.intern(t[0]), labels.intern(t[1]));
        let e = if t.len() == 3 {
            SignedEdge::from_net(u, v, number(line, t[2], "weight")?)
        } else {
            SignedEdge::new(
                u,
                v,
                nonneg(line, t[2], "wpos")?,
                nonneg(line, t[3], "wneg")?,
            )
        };
        edges.push(e);
    }
    let g = SignedGraph::from_edges(labels.len(), edges)?;
    match meaningful(labels) {
        Some(names) => g.with_labels(names),
        None => Ok(g),
    }
}

fn parse_uncertain<F>(text: &str, mut edge: F) -> Result<UncertainGraph>
where
    F: FnMut(usize, &[&str], usize, usize) -> Result<UncertainEdge>,
{
    let mut labels = NodeLabels::new();
    let mut edges = Vec::new();
    for (line, t) in records(text) {
        if t.len() == 1 {
            labels.intern(t[0]);
            continue;
        }
        let (u, v) = (labels.intern(t[0]), labels.intern(t[1]));
        edges.push(edge(line, &t, u, v)?);
    }
    let ug = UncertainGraph::new(labels.len(), edges)?;
    match meaningful(labels) {
        Some(names) => ug.with_labels(names),
        None => Ok(ug),
    }
}

/// Bernoulli edges `u v p w`; a missing `w` defaults to 1.
pub fn parse_bernoulli(text: &str) -> Result<UncertainGraph> {
    parse_uncertain(text, |line, t, u, v| {
        if t.len() != 3 && t.len() != 4 {
            return Err(bad_columns(line, t.len(), "1, 3 or 4"));
        }
        let p = number(line, t[2], "probability")?;
        let w = match t.get(3) {
            Some(tok) => number(line, tok, "weight")?,
            None => 1.0,
        };
        let e = BernoulliEdge::new(u, v, p, w).map_err(|e| at_line(line, e))?;
        Ok(e.to_moments())
    })
}

/// Moment edges `u v mu sigma2`.
pub fn parse_moments(text: &str) -> Result<UncertainGraph> {
    parse_uncertain(text, |line, t, u, v| {
        if t.len() != 4 {
            return Err(bad_columns(line, t.len(), "1 or 4"));
        }
        let mu = number(line, t[2], "mu")?;
        let sigma2 = number(line, t[3], "sigma2")?;
        UncertainEdge::new(u, v, mu, sigma2).map_err(|e| at_line(line, e))
    })
}

/// Multilayer edges `u v layer`; layers are named by arbitrary tokens.
pub fn parse_multilayer(text: &str) -> Result<MultilayerGraph> {
    let mut labels = NodeLabels::new();
    let mut layers = NodeLabels::new();
    let mut edges = Vec::new();
    for (line, t) in records(text) {
        match t.len() {
            1 => {
                labels.intern(t[0]);
            }
            3 => {
                let (u, v) = (labels.intern(t[0]), labels.intern(t[1]));
                edges.push((u, v, layers.intern(t[2])));
            }
            k => return Err(bad_columns(line, k, "1 or 3")),
        }
    }
    let m = MultilayerGraph::new(labels.len(), layers.into_names(), edges)?;
    match meaningful(labels) {
        Some(names) => m.with_labels(names),
        None => Ok(m),
    }
}

/// Four-column signed edge list preceded by one declaration line per node,
/// in id order. `{}` on `f64` prints the shortest string that parses back to
/// the same value, so [`parse_signed`] restores `g` exactly.
pub fn write_signed(g: &SignedGraph) -> String {
    let mut out = String::new();
    for u in 0..g.n() {
        writeln!(out, "{}", g.label(u)).unwrap();
    }
    for e in g.edges() {
        writeln!(
            out,
            "{} {} {} {}",
            g.label(e.u),
            g.label(e.v),
            e.wpos,
            e.wneg
        )
        .unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn net_format_splits_by_sign() {
        let g = parse_signed("# header\n0 1 2.5\n1 2 -1 # trailing\n\n").unwrap();
        assert_eq!(g.edges()[0], SignedEdge::new(0, 1, 2.5, 0.0));
        assert_eq!(g.edges()[1], SignedEdge::new(1, 2, 0.0, 1.0));
        assert!(g.labels().is_none());
    }

    #[test]
    fn split_format_and_labels() {
        let g = parse_signed("alice bob 1 0.5\nbob carol 0 2\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.label(2), "carol");
        assert_eq!(g.edges()[1], SignedEdge::new(1, 2, 0.0, 2.0));
    }

    #[test]
    fn isolated_declarations() {
        let g = parse_signed("x\n0 1 1\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.node_by_label("x"), Some(0));
        assert_eq!(g.degree(0), 0.0);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert_eq!(
            parse_signed("0 1 1\n0 1 x\n"),
            Err(Error::Parse {
                line: 2,
                msg: "weight `x` is not a number".into()
            })
        );
        assert!(matches!(
            parse_signed("0 1\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_signed("0 1 1\n1 2 1 0\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_signed("0 1 -1 0\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_signed("0 1 inf\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_bernoulli("a b 1.5 1\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_multilayer("a b\n"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn bernoulli_and_moments() {
        let ug = parse_bernoulli("a b 0.5 2\nb c 0.2\n").unwrap();
        assert_eq!((ug.edges()[0].mu, ug.edges()[0].sigma2), (1.0, 1.0));
        assert!((ug.edges()[1].sigma2 - 0.16).abs() < 1e-15);
        assert_eq!(ug.labels().unwrap()[2], "c");

        let ug = parse_moments("0 1 5 0\n").unwrap();
        assert_eq!((ug.edges()[0].mu, ug.edges()[0].sigma2), (5.0, 0.0));
        assert!(parse_moments("0 1 5\n").is_err());
    }

    #[test]
    fn multilayer_layers_in_order() {
        let m = parse_multilayer("u v follow\nv w reply\nu w follow\n").unwrap();
        assert_eq!(m.layers(), &["follow".to_string(), "reply".to_string()]);
        assert_eq!(m.edges()[1], (1, 2, 1));
    }

    #[test]
    fn round_trip_is_exact() {
        let g = SignedGraph::from_edges(
            4,
            [
                SignedEdge::new(0, 1, 0.1, 1.0 / 3.0),
                SignedEdge::new(2, 2, 1e-300, 0.0),
                SignedEdge::new(1, 2, 12345.678, 0.0),
            ],
        )
        .unwrap();
        assert_eq!(parse_signed(&write_signed(&g)).unwrap(), g);
        let labelled = g
            .with_labels(vec!["d".into(), "c".into(), "b".into(), "a".into()])
            .unwrap();
        assert_eq!(parse_signed(&write_signed(&labelled)).unwrap(), labelled);
    }
}
