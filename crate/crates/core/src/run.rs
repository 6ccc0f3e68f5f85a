//! Grid configuration, batch runs and the plain-text views used by the CLI.

use std::collections::BTreeSet;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::fp::{Fp, PrimeField};
use crate::catalog::{lambda_base, make_scheme, LambdaMode, SchemeTag};
use crate::error::{Error, Result};
use crate::hopf::text::to_text;
use crate::report::{CheckEntry, Report};
use crate::resolution::gamma::{generator_list, GammaData};
use crate::resolution::mu::{self, mu_structure};
use crate::torsor::{user_checks, TorsorParams};
use crate::suites::{run_suite, Bounds, Suite, SUPPORTED_PRIMES};

/// Largest `p^n` accepted without `allow_large`.
pub const ORDER_LIMIT: u64 = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct GridPoint {
    pub p: u32,
    pub n: u32,
    pub lambda: LambdaMode,
}

/// `(2,1), (3,1), (2,2)` crossed with `λ ∈ {sym, 0, 1}`.
pub fn default_grid() -> Vec<GridPoint> {
    let mut out = Vec::new();
    for (p, n) in [(2, 1), (3, 1), (2, 2)] {
        for lambda in [LambdaMode::Symbolic, LambdaMode::Value(0), LambdaMode::Value(1)] {
            out.push(GridPoint { p, n, lambda });
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SuiteConfig {
    pub points: Vec<GridPoint>,
    pub suites: Vec<Suite>,
    pub bounds: Bounds,
    pub allow_large: bool,
    #[serde(skip)]
    pub timings: bool,
}

impl SuiteConfig {
    pub fn new(points: Vec<GridPoint>, suites: Vec<Suite>) -> Self {
        SuiteConfig { points, suites, bounds: Bounds::default(), allow_large: false, timings: false }
    }

    pub fn validate(&self) -> Result<()> {
        if self.points.is_empty() || self.suites.is_empty() {
            return Err(Error::ConfigInvalid("empty grid or suite list".into()));
        }
        for pt in &self.points {
            if pt.n == 0 {
                return Err(Error::ConfigInvalid("n must be positive".into()));
            }
            let order = (pt.p as u64).checked_pow(pt.n).unwrap_or(u64::MAX);
            if !self.allow_large && (!SUPPORTED_PRIMES.contains(&pt.p) || order > ORDER_LIMIT) {
                return Err(Error::ConfigInvalid(format!(
                    "p = {}, n = {} is outside p ∈ {{2,3,5}}, p^n ≤ {ORDER_LIMIT}; pass --allow-large to override",
                    pt.p, pt.n
                )));
            }
            if !SUPPORTED_PRIMES.contains(&pt.p) {
                return Err(Error::InvalidPrime(pt.p));
            }
            if let LambdaMode::Value(v) = pt.lambda {
                if v >= pt.p {
                    return Err(Error::ConfigInvalid(format!("λ = {v} is not a residue mod {}", pt.p)));
                }
            }
        }
        Ok(())
    }
}

/// One suite evaluation; `n` and `λ` are dropped when the suite ignores them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Job {
    p: u32,
    n: Option<u32>,
    lambda: Option<LambdaMode>,
    suite: Suite,
}

impl Job {
    fn prefix(&self) -> String {
        let n = self.n.map_or("any".to_string(), |n| n.to_string());
        let l = self.lambda.map_or("any".to_string(), |l| l.to_string());
        format!("p{}/n{n}/l{l}", self.p)
    }
}

fn jobs(config: &SuiteConfig) -> Vec<Job> {
    let mut set = BTreeSet::new();
    for pt in &config.points {
        for &suite in &config.suites {
            set.insert(Job {
                p: pt.p,
                n: (suite != Suite::Torsor).then_some(pt.n),
                lambda: suite.uses_lambda().then_some(pt.lambda),
                suite,
            });
        }
    }
    set.into_iter().collect()
}

/// Runs every requested suite at every grid point. Entry ids are prefixed
/// with `p{p}/n{n}/l{λ}` and the report is sorted by id.
pub fn run(config: &SuiteConfig) -> Result<Report> {
    config.validate()?;
    let entries: Vec<Vec<CheckEntry>> = jobs(config)
        .par_iter()
        .map(|job| {
            let start = Instant::now();
            let n = job.n.unwrap_or(1);
            let lambda = job.lambda.unwrap_or(LambdaMode::Value(0));
            let checks = run_suite(job.p, job.suite, n, lambda, config.bounds).map(|c| c.into_entries());
            let ms = start.elapsed().as_millis() as u64;
            let prefix = job.prefix();
            let mut out = match checks {
                Ok(v) => v,
                Err(e) => vec![CheckEntry {
                    check_id: format!("{}/setup", job.suite),
                    paper_ref: "suite configuration".into(),
                    verdict: crate::report::Verdict::Fail,
                    witness: Some(format!("error: {e}")),
                    elapsed_ms: None,
                }],
            };
            for e in &mut out {
                e.check_id = format!("{prefix}/{}", e.check_id);
                if config.timings {
                    e.elapsed_ms = Some(ms);
                }
            }
            out
        })
        .collect();
    let config_json = serde_json::to_value(config).expect("config serializes");
    Ok(Report::new(config_json, entries.into_iter().flatten().collect()))
}

/// Hopf presentations of the catalog schemes (or of one of them).
pub fn describe_catalog(p: u32, n: u32, lambda: LambdaMode, tag: Option<SchemeTag>) -> Result<String> {
    match p {
        2 => catalog_typed::<Fp<2>>(n, lambda, tag),
        3 => catalog_typed::<Fp<3>>(n, lambda, tag),
        5 => catalog_typed::<Fp<5>>(n, lambda, tag),
        other => Err(Error::InvalidPrime(other)),
    }
}

fn catalog_typed<F: PrimeField>(n: u32, lambda: LambdaMode, tag: Option<SchemeTag>) -> Result<String> {
    let (base, l) = lambda_base::<F>(lambda, false)?;
    let mut out = String::new();
    for t in SchemeTag::ALL.into_iter().filter(|t| tag.is_none_or(|x| x == *t)) {
        out.push_str(&to_text(&make_scheme(t, n, &base, &l)?.hopf));
        out.push('\n');
    }
    Ok(out)
}

/// The P table and coinvariant generators for `Γ^{(λ)}`, and the
/// generators for `μ_{p^n}`.
pub fn describe_resolution(p: u32, n: u32, lambda: LambdaMode) -> Result<String> {
    match p {
        2 => resolution_typed::<Fp<2>>(n, lambda),
        3 => resolution_typed::<Fp<3>>(n, lambda),
        5 => resolution_typed::<Fp<5>>(n, lambda),
        other => Err(Error::InvalidPrime(other)),
    }
}

fn resolution_typed<F: PrimeField>(n: u32, lambda: LambdaMode) -> Result<String> {
    let mut out = String::new();
    let data = GammaData::<F>::build(n, lambda)?;
    let c = data.cleft();
    let r = c.ring();
    out.push_str(&format!("gamma p={} n={n} lambda={lambda}\n", F::CHARACTERISTIC));
    for s in data.table.range() {
        out.push_str(&format!("  P_{s} = {}\n", r.display(data.table.p(s))));
    }
    for (name, g) in generator_list(c, &data.table)? {
        out.push_str(&format!("  {name} = {}\n", r.display(&g)));
    }
    let m = mu_structure::<F>(n)?;
    out.push_str(&format!("mu p={} n={n}\n", F::CHARACTERISTIC));
    for (name, g) in mu::generator_list(&m)? {
        out.push_str(&format!("  {name} = {}\n", m.ring().display(&g)));
    }
    Ok(out)
}

/// Parameters of a user torsor; expressions are in `vars`.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TorsorConfig {
    pub p: u32,
    pub vars: Vec<String>,
    pub invert: Vec<String>,
    pub lambda: String,
    pub a: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<String>,
    pub bounds: Bounds,
}

impl TorsorConfig {
    /// The concluding non-cleft example at `p`.
    pub fn example(p: u32, bounds: Bounds) -> Self {
        TorsorConfig {
            p,
            vars: vec!["X".into(), "Y".into()],
            invert: vec![format!("X^{p} + Y^{p} + (X + 1)^{p}*Y")],
            lambda: "X + 1".into(),
            a: "X + Y".into(),
            c: Some("Y".into()),
            bounds,
        }
    }
}

pub fn run_torsor(config: &TorsorConfig) -> Result<Report> {
    let checks = match config.p {
        2 => torsor_typed::<Fp<2>>(config)?,
        3 => torsor_typed::<Fp<3>>(config)?,
        5 => torsor_typed::<Fp<5>>(config)?,
        other => return Err(Error::InvalidPrime(other)),
    };
    let config_json = serde_json::to_value(config).expect("config serializes");
    Ok(Report::new(config_json, checks.into_entries()))
}

fn torsor_typed<F: PrimeField>(config: &TorsorConfig) -> Result<crate::report::Checks> {
    let params = TorsorParams::<F>::parse(&config.vars, &config.invert, &config.lambda, &config.a, config.c.as_deref())?;
    Ok(user_checks(&params, config.bounds))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn guard_rejects_large_orders() {
        let pt = |p, n| GridPoint { p, n, lambda: LambdaMode::Symbolic };
        assert!(matches!(SuiteConfig::new(vec![pt(7, 2)], vec![Suite::Axioms]).validate(), Err(Error::ConfigInvalid(_))));
        assert!(matches!(SuiteConfig::new(vec![pt(2, 4)], vec![Suite::Axioms]).validate(), Err(Error::ConfigInvalid(_))));
        let mut c = SuiteConfig::new(vec![pt(3, 2)], vec![Suite::Axioms]);
        c.allow_large = true;
        assert!(c.validate().is_ok());
        c.points = vec![pt(7, 1)];
        assert_eq!(c.validate(), Err(Error::InvalidPrime(7)));
    }

    #[test]
    fn lambda_independent_suites_run_once() {
        let c = SuiteConfig::new(default_grid(), vec![Suite::Mu, Suite::Torsor]);
        let j = jobs(&c);
        // mu: three (p, n); torsor: two primes times three λ
        assert_eq!(j.len(), 3 + 6);
    }

    #[test]
    fn axioms_point_passes() {
        let c = SuiteConfig::new(vec![GridPoint { p: 2, n: 1, lambda: LambdaMode::Symbolic }], vec![Suite::Axioms]);
        let r = run(&c).unwrap();
        assert!(r.success());
        assert!(r.checks.iter().all(|e| e.check_id.starts_with("p2/n1/lsym/axioms/")));
    }
}
