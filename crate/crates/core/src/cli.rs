//! Command-line front end: reads one of the text formats in [`crate::io`],
//! runs a solver and prints a JSON (or TSV) report.
//!
//! Exit codes: 0 on success, 1 when a solver rejects its input, 2 on
//! unreadable input or bad arguments.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::exact_dsd;
use crate::graph::SignedGraph;
use crate::io;
use crate::multilayer::{apply_exclusion, layer_report, ExclusionQuery, LayerDensity, Penalty};
use crate::objective::{objective_f, ObjectiveParams};
use crate::oracle::brute_force;
use crate::peeling::{c_sweep, DEFAULT_C_LIST};
use crate::result::{Algorithm, DsdResult, Scoring};
use crate::search::{binary_search_objective, SearchTrace, DEFAULT_EPS};
use crate::testkit::InstanceSpec;
use crate::uncertain::{risk_profile, uncertain_to_signed, RiskReport};

#[derive(Debug, Parser)]
#[command(
    name = "negdsd",
    version,
    about = "Dense subgraphs of graphs with positive and negative edges"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Best peeling prefix over a list of C values.
    Peel {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_C_LIST.to_vec())]
        c_list: Vec<f64>,
        /// Rank prefixes by the ratio objective instead of net density.
        #[arg(long)]
        objective: bool,
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        output: Output,
    },
    /// Exact densest subgraph; all weights must be nonnegative.
    Exact {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        output: Output,
    },
    /// Binary search on the ratio objective.
    Search {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = DEFAULT_EPS)]
        eps: f64,
        #[command(flatten)]
        output: Output,
    },
    /// Risk-averse dense subgraph of an uncertain graph.
    Risk {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        format: UncertainFormat,
        #[arg(long, value_enum, default_value_t = RiskSolver::Peel)]
        solver: RiskSolver,
        #[arg(long, value_delimiter = ',', default_values_t = vec![1.0])]
        c_list: Vec<f64>,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = DEFAULT_EPS)]
        eps: f64,
        #[command(flatten)]
        output: Output,
    },
    /// Dense subgraph of a multilayer graph avoiding the given layers.
    Exclude {
        #[command(flatten)]
        input: Input,
        /// Input is `u v layer` (the only format this command reads).
        #[arg(long)]
        layers: bool,
        #[arg(long = "exclude", value_delimiter = ',', required = true)]
        excluded: Vec<String>,
        /// Penalty large enough that no excluded edge survives.
        #[arg(long, conflicts_with = "w")]
        hard: bool,
        /// Finite penalty per excluded edge.
        #[arg(long, required_unless_present = "hard")]
        w: Option<f64>,
        #[arg(long, value_enum, default_value_t = ExcludeSolver::Peel)]
        solver: ExcludeSolver,
        #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_C_LIST.to_vec())]
        c_list: Vec<f64>,
        #[command(flatten)]
        output: Output,
    },
    /// Emit a generated instance as a signed edge list.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Exhaustive search (at most 22 nodes).
    Oracle {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        objective: bool,
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug, Subcommand)]
pub enum GenKind {
    BadPeeling {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        eps: f64,
    },
    TwoComponent {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    ShiftFailure {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: f64,
        #[arg(long)]
        eps: f64,
    },
}

impl GenKind {
    fn spec(&self) -> InstanceSpec {
        match *self {
            GenKind::BadPeeling { n, eps } => InstanceSpec::BadPeeling { n, eps },
            GenKind::TwoComponent { r, n, seed } => InstanceSpec::TwoComponent { r, n, seed },
            GenKind::ShiftFailure { n, delta, eps } => InstanceSpec::ShiftFailure { n, delta, eps },
        }
    }
}

#[derive(Debug, Args)]
pub struct Input {
    /// Input file; `-` reads standard input.
    #[arg(default_value = "-")]
    pub path: PathBuf,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct UncertainFormat {
    /// `u v p w` (or `u v p`) Bernoulli edges.
    #[arg(long)]
    pub bernoulli: bool,
    /// `u v mu sigma2` moment edges.
    #[arg(long)]
    pub moments: bool,
}

#[derive(Debug, Args)]
pub struct ParamArgs {
    #[arg(long, default_value_t = 1.0)]
    pub lambda1: f64,
    #[arg(long, default_value_t = 1.0)]
    pub lambda2: f64,
    /// Risk multiplier on negative weight.
    #[arg(long = "b", default_value_t = 1.0)]
    pub b: f64,
}

impl ParamArgs {
    fn params(&self) -> Result<ObjectiveParams> {
        ObjectiveParams::new(self.lambda1, self.lambda2, self.b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RiskSolver {
    Peel,
    Search,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExcludeSolver {
    Peel,
    BruteForce,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Json,
    Tsv,
}

#[derive(Debug, Args)]
pub struct Output {
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
}

/// Report printed by every solver subcommand. Field names are stable.
#[derive(Debug, Serialize)]
pub struct Report {
    pub algorithm: Algorithm,
    pub nodes: Vec<String>,
    pub size: usize,
    pub net_density: f64,
    pub f_value: Option<f64>,
    pub wpos_total: f64,
    pub wneg_total: f64,
    pub exact: bool,
    pub c_used: Option<f64>,
    pub layer_densities: Option<Vec<LayerDensity>>,
    pub search_trace: Option<SearchTrace>,
    pub risk: Option<RiskReport>,
    pub wall_time_ms: f64,
}

impl Report {
    fn new(g: &SignedGraph, r: &DsdResult, params: &ObjectiveParams) -> Result<Self> {
        let f_value = match r.f_value {
            Some(f) => Some(f),
            None => Some(objective_f(g, &r.nodes, params)?),
        };
        Ok(Report {
            algorithm: r.algorithm,
            nodes: r.nodes.iter().map(|&u| g.label(u).into_owned()).collect(),
            size: r.size(),
            net_density: r.net_density,
            f_value,
            wpos_total: r.wpos_total,
            wneg_total: r.wneg_total,
            exact: r.exact,
            c_used: r.c_used,
            layer_densities: None,
            search_trace: None,
            risk: None,
            wall_time_ms: 0.0,
        })
    }

    fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            OutputFormat::Tsv => self.tsv(),
        }
    }

    fn tsv(&self) -> String {
        fn opt(x: Option<f64>) -> String {
            x.map_or_else(String::new, |v| v.to_string())
        }
        let mut rows = vec![
            ("algorithm", self.algorithm.to_string()),
            ("nodes", self.nodes.join(",")),
            ("size", self.size.to_string()),
            ("net_density", self.net_density.to_string()),
            ("f_value", opt(self.f_value)),
            ("wpos_total", self.wpos_total.to_string()),
            ("wneg_total", self.wneg_total.to_string()),
            ("exact", self.exact.to_string()),
            ("c_used", opt(self.c_used)),
        ];
        if let Some(t) = &self.search_trace {
            rows.push(("search_iterations", t.iterations.to_string()));
            rows.push(("search_heuristic_probes", t.heuristic_probes.to_string()));
        }
        if let Some(r) = &self.risk {
            rows.push(("avg_expected_reward", r.avg_expected_reward.to_string()));
            rows.push(("avg_risk", r.avg_risk.to_string()));
        }
        let mut out = String::from("field\tvalue\n");
        for (k, v) in rows {
            out.push_str(&format!("{k}\t{v}\n"));
        }
        for l in self.layer_densities.iter().flatten() {
            out.push_str(&format!(
                "layer:{}\t{}\t{}\t{}\n",
                l.layer, l.induced_edges, l.density, l.signed_density
            ));
        }
        out.push_str(&format!("wall_time_ms\t{}\n", self.wall_time_ms));
        out
    }
}

/// Runs one invocation and returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&config) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(out.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return 1;
            }
            0
        }
        Err(e) => {
            eprintln!("negdsd: error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::Io(_) => 2,
        _ => 1,
    }
}

fn read_signed(input: &Input) -> Result<SignedGraph> {
    io::parse_signed(&io::read_input(&input.path)?)
}

/// Runs `config` and returns everything destined for standard output.
pub fn execute(config: &RunConfig) -> Result<String> {
    let start = Instant::now();
    let (mut report, format) = match &config.command {
        Command::Gen { kind } => return Ok(io::write_signed(&kind.spec().generate()?)),
        Command::Peel {
            input,
            c_list,
            objective,
            params,
            output,
        } => {
            let g = read_signed(input)?;
            let p = params.params()?;
            let scoring = if *objective {
                Scoring::Objective(p)
            } else {
                Scoring::NetDensity
            };
            let r = c_sweep(&g, c_list, &scoring)?;
            (Report::new(&g, &r, &p)?, output.format)
        }
        Command::Exact {
            input,
            params,
            output,
        } => {
            let g = read_signed(input)?;
            let r = exact_dsd(&g)?;
            (Report::new(&g, &r, &params.params()?)?, output.format)
        }
        Command::Search {
            input,
            params,
            eps,
            output,
        } => {
            let g = read_signed(input)?;
            let p = params.params()?;
            let (r, trace) = binary_search_objective(&g, &p, *eps)?;
            let mut rep = Report::new(&g, &r, &p)?;
            rep.search_trace = Some(trace);
            (rep, output.format)
        }
        Command::Risk {
            input,
            format,
            solver,
            c_list,
            params,
            eps,
            output,
        } => {
            let text = io::read_input(&input.path)?;
            let ug = if format.bernoulli {
                io::parse_bernoulli(&text)?
            } else {
                io::parse_moments(&text)?
            };
            let g = uncertain_to_signed(&ug);
            let p = params.params()?;
            let (r, trace) = match solver {
                RiskSolver::Peel => (c_sweep(&g, c_list, &Scoring::Objective(p))?, None),
                RiskSolver::Search => {
                    let (r, t) = binary_search_objective(&g, &p, *eps)?;
                    (r, Some(t))
                }
            };
            let mut rep = Report::new(&g, &r, &p)?;
            rep.search_trace = trace;
            rep.risk = Some(risk_profile(&ug, &r.nodes)?);
            (rep, output.format)
        }
        Command::Exclude {
            input,
            layers: _,
            excluded,
            hard,
            w,
            solver,
            c_list,
            output,
        } => {
            let m = io::parse_multilayer(&io::read_input(&input.path)?)?;
            let penalty = match (hard, w) {
                (true, _) => Penalty::Hard,
                (false, Some(w)) => Penalty::Soft(*w),
                (false, None) => return Err(Error::InvalidParams("need --hard or --w".into())),
            };
            let q = ExclusionQuery::by_names(&m, excluded, penalty)?;
            let g = apply_exclusion(&m, &q)?;
            let r = match solver {
                ExcludeSolver::Peel => c_sweep(&g, c_list, &Scoring::NetDensity)?,
                ExcludeSolver::BruteForce => brute_force(&g, &Scoring::NetDensity)?,
            };
            let mut rep = Report::new(&g, &r, &ObjectiveParams::default())?;
            rep.layer_densities = Some(layer_report(&m, &r.nodes, &q)?);
            (rep, output.format)
        }
        Command::Oracle {
            input,
            objective,
            params,
            output,
        } => {
            let g = read_signed(input)?;
            let p = params.params()?;
            let scoring = if *objective {
                Scoring::Objective(p)
            } else {
                Scoring::NetDensity
            };
            let r = brute_force(&g, &scoring)?;
            (Report::new(&g, &r, &p)?, output.format)
        }
    };
    report.wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(report.render(format))
}
