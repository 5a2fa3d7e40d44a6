use std::fmt;
use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::problems::{Reference, TestProblem};
use crate::baselines::{solve_pece, solve_pi_trapezoidal, BaselineMethod};
use crate::error::{Error, Result};
use crate::kernels::RationalApproximation;
use crate::quadrature::NodeSet;
use crate::solvers::{solve_exponential_cq, LinearFdeProblem, Trajectory};

/// Errors above this value are treated as unstable, like non-finite ones.
pub const UNSTABLE_ERROR: f64 = 1.0;

/// A time-stepping method under test.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "method", rename_all = "kebab-case")]
pub enum MethodSpec {
    ExponentialCq { nodes: NodeSet, degree: usize },
    Pece,
    PiTrapezoidal,
}

impl MethodSpec {
    pub fn cq(nodes: NodeSet) -> Self {
        MethodSpec::ExponentialCq { nodes, degree: 15 }
    }

    pub fn solve(&self, problem: &LinearFdeProblem, h: f64) -> Result<Trajectory> {
        match self {
            MethodSpec::ExponentialCq { nodes, degree } => {
                solve_exponential_cq(problem, nodes, h, RationalApproximation::shared(*degree)?)
            }
            MethodSpec::Pece => solve_pece(problem, h),
            MethodSpec::PiTrapezoidal => solve_pi_trapezoidal(problem, h),
        }
    }
}

impl From<BaselineMethod> for MethodSpec {
    fn from(m: BaselineMethod) -> Self {
        match m {
            BaselineMethod::Pece => MethodSpec::Pece,
            BaselineMethod::PiTrapezoidal => MethodSpec::PiTrapezoidal,
        }
    }
}

impl fmt::Display for MethodSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MethodSpec::ExponentialCq { nodes, degree } => {
                write!(f, "exponential-cq nu={} nodes={nodes} N={degree}", nodes.nu())
            }
            MethodSpec::Pece => f.write_str("pece"),
            MethodSpec::PiTrapezoidal => f.write_str("pi-trapezoidal"),
        }
    }
}

/// `cq`, `pece` or `pi-trapezoidal`; the CQ variant gets its nodes and degree
/// from the caller.
pub fn parse_method(name: &str, nodes: &NodeSet, degree: usize) -> Result<MethodSpec> {
    match name.to_ascii_lowercase().as_str() {
        "cq" | "exponential-cq" | "exp-cq" => Ok(MethodSpec::ExponentialCq { nodes: nodes.clone(), degree }),
        other => BaselineMethod::from_str(other).map(MethodSpec::from),
    }
}

/// `log2(E(h) / E(h/2))`.
pub fn eoc(e_coarse: f64, e_fine: f64) -> f64 {
    (e_coarse / e_fine).log2()
}

mod lossless {
    //! JSON has no NaN or infinity; those are written as strings.
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Num(f64),
        Text(String),
    }

    pub fn serialize<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
        if v.is_finite() {
            Repr::Num(*v).serialize(s)
        } else {
            Repr::Text(v.to_string()).serialize(s)
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        match Repr::deserialize(d)? {
            Repr::Num(v) => Ok(v),
            Repr::Text(t) => t.parse().map_err(serde::de::Error::custom),
        }
    }
}

mod lossless_opt {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(x) => super::lossless::serialize(x, s),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<f64>, D::Error> {
        #[derive(Deserialize)]
        struct Wrap(#[serde(with = "super::lossless")] f64);
        Ok(Option::<Wrap>::deserialize(d)?.map(|w| w.0))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceRow {
    pub h: f64,
    #[serde(with = "lossless")]
    pub error: f64,
    /// `None` on the first row.
    #[serde(with = "lossless_opt", default)]
    pub eoc: Option<f64>,
    pub cpu_seconds: f64,
}

impl ConvergenceRow {
    pub fn unstable(&self) -> bool {
        !(self.error <= UNSTABLE_ERROR)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceReport {
    pub problem: TestProblem,
    pub method: MethodSpec,
    pub reference: String,
    pub rows: Vec<ConvergenceRow>,
}

fn fmt_num(v: f64) -> String {
    format!("{v:.15e}")
}

impl ConvergenceReport {
    pub fn row(&self, h: f64) -> Option<&ConvergenceRow> {
        self.rows.iter().find(|r| (r.h - h).abs() <= 1e-12 * h)
    }

    pub fn last_eoc(&self) -> Option<f64> {
        self.rows.last().and_then(|r| r.eoc)
    }

    fn csv_fields(row: &ConvergenceRow, prev: Option<&ConvergenceRow>) -> String {
        let error = if row.unstable() { "*".to_string() } else { fmt_num(row.error) };
        let eoc = match (row.eoc, prev) {
            (_, None) => String::new(),
            (_, Some(p)) if p.unstable() || row.unstable() => "*".to_string(),
            (Some(e), _) => fmt_num(e),
            (None, _) => String::new(),
        };
        format!("{},{error},{eoc},{}", fmt_num(row.h), fmt_num(row.cpu_seconds))
    }

    /// `h,error,eoc,cpu_seconds`; unstable entries are written as `*`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("h,error,eoc,cpu_seconds\n");
        for (i, row) in self.rows.iter().enumerate() {
            let prev = i.checked_sub(1).map(|p| &self.rows[p]);
            let _ = writeln!(out, "{}", Self::csv_fields(row, prev));
        }
        out
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::Report(e.to_string()))
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Report(e.to_string()))
    }

    pub fn write_json(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json()?).map_err(|e| Error::Report(e.to_string()))
    }

    pub fn read_json(path: &Path) -> Result<Self> {
        let s = std::fs::read_to_string(path).map_err(|e| Error::Report(e.to_string()))?;
        Self::from_json(&s)
    }
}

/// Several reports in one CSV with a leading `method` column.
pub fn merged_csv(reports: &[ConvergenceReport]) -> String {
    let mut out = String::from("method,h,error,eoc,cpu_seconds\n");
    for rep in reports {
        for (i, row) in rep.rows.iter().enumerate() {
            let prev = i.checked_sub(1).map(|p| &rep.rows[p]);
            let _ = writeln!(out, "\"{}\",{}", rep.method, ConvergenceReport::csv_fields(row, prev));
        }
    }
    out
}

/// Max-norm distance of the final state from the reference; NaN states give NaN.
pub fn terminal_error(tr: &Trajectory, reference: &Reference) -> f64 {
    let last = tr.last();
    if last.iter().any(|v| !v.is_finite()) {
        return f64::NAN;
    }
    (last - &reference.value).amax()
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    let n = xs.len();
    if n % 2 == 1 {
        xs[n / 2]
    } else {
        0.5 * (xs[n / 2 - 1] + xs[n / 2])
    }
}

fn check_halving(hs: &[f64]) -> Result<()> {
    if hs.is_empty() {
        return Err(Error::InvalidProblem("empty step-size list".into()));
    }
    for w in hs.windows(2) {
        if (w[1] * 2.0 - w[0]).abs() > 1e-12 * w[0] {
            return Err(Error::InvalidProblem(format!(
                "step sizes must halve successively, got {} then {}",
                w[0], w[1]
            )));
        }
    }
    Ok(())
}

/// Terminal errors and EOCs over a halving sequence of step sizes. The wall
/// time of each row is the median over `repeats` runs.
pub fn run_convergence(
    problem: &TestProblem,
    method: &MethodSpec,
    hs: &[f64],
    repeats: usize,
) -> Result<ConvergenceReport> {
    check_halving(hs)?;
    let fde = problem.build()?;
    let reference = problem.reference()?;
    let mut rows: Vec<ConvergenceRow> = Vec::with_capacity(hs.len());
    for &h in hs {
        let mut times = Vec::with_capacity(repeats.max(1));
        let mut error = f64::NAN;
        for _ in 0..repeats.max(1) {
            let start = Instant::now();
            let tr = method.solve(&fde, h)?;
            times.push(start.elapsed().as_secs_f64());
            error = terminal_error(&tr, &reference);
        }
        let eoc = rows.last().map(|prev| eoc(prev.error, error));
        rows.push(ConvergenceRow { h, error, eoc, cpu_seconds: median(times) });
    }
    Ok(ConvergenceReport { problem: *problem, method: method.clone(), reference: reference.descriptor, rows })
}

/// `1/2^a, …, 1/2^b`.
pub fn halving_steps(first_pow: u32, last_pow: u32) -> Vec<f64> {
    (first_pow..=last_pow).map(|k| 1.0 / f64::from(1u32 << k)).collect()
}
