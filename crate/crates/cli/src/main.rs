//! `expquad` benchmark driver: trajectories, convergence tables, method
//! comparisons, method-of-lines runs and weight dumps.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use expquad::harness::{
    halving_steps, merged_csv, parse_method, run_convergence, ConvergenceReport, MethodSpec, TestProblem,
};
use expquad::kernels::kernels_csv;
use expquad::quadrature::build_weight_table;
use expquad::{Coefficient, NodeSet, RationalApproximation};

#[derive(Parser, Debug)]
#[command(name = "expquad", version, about = "Exponential quadrature for linear fractional ODEs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Integrate one problem with one step size and print `t,y` rows.
    Solve {
        #[command(flatten)]
        setup: Setup,
        #[arg(long, default_value = "1/64", value_parser = parse_fraction)]
        h: f64,
    },
    /// Errors and EOCs of one method over a halving step sequence.
    Convergence {
        #[command(flatten)]
        setup: Setup,
        #[command(flatten)]
        sweep: Sweep,
    },
    /// Several methods on the same problem and step sequence.
    Compare {
        #[command(flatten)]
        setup: Setup,
        #[command(flatten)]
        sweep: Sweep,
        /// Comma list of methods (`cq`, `pece`, `pi-trapezoidal`).
        #[arg(long, default_value = "cq,pece,pi-trapezoidal", value_delimiter = ',')]
        methods: Vec<String>,
    },
    /// Time-fractional heat equation by the method of lines.
    Pde {
        #[command(flatten)]
        setup: Setup,
        #[command(flatten)]
        sweep: Sweep,
        /// Interior grid points.
        #[arg(long, default_value_t = 16)]
        m: usize,
    },
    /// Quadrature weights `j,r,value` for a scalar coefficient, or the raw
    /// moment kernels `j,k,re,im` with `--kernels`.
    WeightsDump {
        #[command(flatten)]
        setup: Setup,
        #[arg(long, default_value = "1/16", value_parser = parse_fraction)]
        h: f64,
        /// Number of lags.
        #[arg(long, default_value_t = 16)]
        lags: usize,
        #[arg(long)]
        kernels: bool,
    },
}

#[derive(Args, Debug, Clone)]
struct Setup {
    #[arg(long, value_enum, default_value_t = ProblemKind::T1)]
    problem: ProblemKind,
    #[arg(long, default_value_t = 0.5)]
    alpha: f64,
    #[arg(long, default_value_t = expquad::harness::DEFAULT_LAMBDA)]
    lambda: f64,
    #[arg(long, default_value_t = 4.0)]
    p: f64,
    /// Preset `opt1`..`opt4` or a comma list such as `0,1/2,1`.
    #[arg(long, default_value = "opt4")]
    nodes: String,
    #[arg(long = "degree-N", default_value_t = 15)]
    degree: usize,
    /// `cq`, `pece` or `pi-trapezoidal`.
    #[arg(long, default_value = "cq")]
    method: String,
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Args, Debug, Clone)]
struct Sweep {
    /// Comma list of halving step sizes, e.g. `1/8,1/16,1/32`.
    #[arg(long, value_delimiter = ',', value_parser = parse_fraction)]
    h_list: Option<Vec<f64>>,
    /// Timing repeats per row; the median is reported.
    #[arg(long, default_value_t = 5)]
    repeats: usize,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum ProblemKind {
    T1,
    T2,
    Pde,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Csv,
    Json,
}

fn parse_fraction(s: &str) -> Result<f64, String> {
    let bad = || format!("cannot parse step size '{s}'");
    let v = match s.trim().split_once('/') {
        Some((a, b)) => a.trim().parse::<f64>().map_err(|_| bad())? / b.trim().parse::<f64>().map_err(|_| bad())?,
        None => s.trim().parse::<f64>().map_err(|_| bad())?,
    };
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(format!("step size must be positive and finite, got {s}"))
    }
}

/// Failures sorted by exit code.
enum Failure {
    Config(String),
    Solver(expquad::Error),
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Config(_) => 2,
            Failure::Solver(_) => 3,
            Failure::Io(_) => 1,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Config(m) => write!(f, "invalid configuration: {m}"),
            Failure::Solver(e) => write!(f, "solver failure: {e}"),
            Failure::Io(m) => write!(f, "output error: {m}"),
        }
    }
}

fn config<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Config(e.to_string())
}

struct Resolved {
    problem: TestProblem,
    nodes: NodeSet,
    method: MethodSpec,
}

impl Setup {
    fn resolve(&self, m: Option<usize>) -> Result<Resolved, Failure> {
        let nodes: NodeSet = self.nodes.parse().map_err(config)?;
        RationalApproximation::shared(self.degree).map_err(config)?;
        // the `pde` subcommand passes its grid size and overrides `--problem`
        let problem = match (self.problem, m) {
            (_, Some(m)) => TestProblem::pde(self.alpha, self.p, m),
            (ProblemKind::Pde, None) => TestProblem::pde(self.alpha, self.p, 16),
            (ProblemKind::T2, None) => TestProblem::T2 { alpha: self.alpha, lambda: self.lambda },
            (ProblemKind::T1, None) => TestProblem::T1 { alpha: self.alpha, lambda: self.lambda, p: self.p },
        };
        if !(self.alpha > 0.0 && self.alpha < 2.0) {
            return Err(Failure::Config(format!("alpha must lie in (0, 2), got {}", self.alpha)));
        }
        problem.validate().map_err(config)?;
        let method = parse_method(&self.method, &nodes, self.degree).map_err(config)?;
        Ok(Resolved { problem, nodes, method })
    }

    fn emit(&self, text: &str) -> Result<(), Failure> {
        match &self.out {
            Some(path) => std::fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }

    fn emit_reports(&self, reports: &[ConvergenceReport]) -> Result<(), Failure> {
        let text = match (self.format, reports) {
            (Format::Csv, [one]) => one.to_csv(),
            (Format::Csv, many) => merged_csv(many),
            (Format::Json, [one]) => one.to_json().map_err(|e| Failure::Io(e.to_string()))?,
            (Format::Json, many) => {
                let parts = many
                    .iter()
                    .map(ConvergenceReport::to_json)
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| Failure::Io(e.to_string()))?;
                format!("[{}]", parts.join(",\n"))
            }
        };
        self.emit(&text)
    }
}

impl Sweep {
    fn steps(&self) -> Result<Vec<f64>, Failure> {
        let hs = self.h_list.clone().unwrap_or_else(|| halving_steps(3, 7));
        if let Some(w) = hs.windows(2).find(|w| (2.0 * w[1] - w[0]).abs() > 1e-12 * w[0]) {
            return Err(Failure::Config(format!("step sizes must halve successively, got {} then {}", w[0], w[1])));
        }
        Ok(hs)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Solve { setup, h } => {
            let r = setup.resolve(None)?;
            let fde = r.problem.build().map_err(config)?;
            let tr = r.method.solve(&fde, h).map_err(Failure::Solver)?;
            setup.emit(&tr.to_csv())
        }
        Command::Convergence { setup, sweep } => {
            let r = setup.resolve(None)?;
            let rep =
                run_convergence(&r.problem, &r.method, &sweep.steps()?, sweep.repeats).map_err(Failure::Solver)?;
            setup.emit_reports(&[rep])
        }
        Command::Compare { setup, sweep, methods } => {
            let r = setup.resolve(None)?;
            let specs = methods
                .iter()
                .map(|m| parse_method(m, &r.nodes, setup.degree))
                .collect::<Result<Vec<_>, _>>()
                .map_err(config)?;
            let steps = sweep.steps()?;
            let reports = specs
                .iter()
                .map(|m| run_convergence(&r.problem, m, &steps, sweep.repeats))
                .collect::<Result<Vec<_>, _>>()
                .map_err(Failure::Solver)?;
            setup.emit_reports(&reports)
        }
        Command::Pde { setup, sweep, m } => {
            let r = setup.resolve(Some(m))?;
            let rep =
                run_convergence(&r.problem, &r.method, &sweep.steps()?, sweep.repeats).map_err(Failure::Solver)?;
            setup.emit_reports(&[rep])
        }
        Command::WeightsDump { setup, h, lags, kernels } => {
            let r = setup.resolve(None)?;
            let rat = RationalApproximation::shared(setup.degree).map_err(config)?;
            let alpha = r.problem.alpha();
            let text = if kernels {
                let w = h.powf(alpha) * setup.lambda;
                kernels_csv(alpha, w, lags, r.nodes.nu(), rat).map_err(Failure::Solver)?
            } else {
                build_weight_table(alpha, &Coefficient::Scalar(setup.lambda), h, lags, &r.nodes, rat)
                    .map_err(Failure::Solver)?
                    .to_csv()
            };
            setup.emit(&text)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("expquad: {f}");
            ExitCode::from(f.code())
        }
    }
}
