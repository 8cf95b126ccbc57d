//! Identity checks over exhaustive and sampled instance families, the
//! brute-force colouring oracles, and the four-vertex census.
//!
//! Every check compares two independently computed exact values per
//! instance; a mismatch or an error is recorded as a failure.

use std::collections::BTreeMap;
use std::fmt::Debug;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::{Error, Result};

mod census;
mod checks;
pub mod oracles;

pub use census::{census_weakly_free_four, Census, CensusClass};
pub use oracles::{brute_force_truncated_xg, brute_force_truncated_xi, truncate_sym, truncate_sym2};

/// One mismatching instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub instance: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub check_name: String,
    pub instances_run: u64,
    pub failures: Vec<Failure>,
    pub elapsed: Duration,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// The JSON-line form; elapsed time is included only on request so the
    /// default output is byte-stable.
    pub fn to_json(&self, with_elapsed: bool) -> Value {
        let failures: Vec<Value> = self
            .failures
            .iter()
            .map(|f| json!({"instance": f.instance, "expected": f.expected, "actual": f.actual}))
            .collect();
        let mut v = json!({
            "check": self.check_name,
            "passed": self.passed(),
            "instances": self.instances_run,
            "failures": failures,
        });
        if with_elapsed {
            v["elapsed_ms"] = json!(self.elapsed.as_millis() as u64);
        }
        v
    }
}

/// Sizes and sampling for a suite run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Largest vertex count for exhaustive families; sampled families run
    /// one size above a check's exhaustive cap when this allows it.
    pub max_vertices: usize,
    /// Largest degree for checks indexed by partitions.
    pub max_degree: usize,
    pub seed: u64,
    /// Per-check overrides of the number of random samples.
    pub sample_counts: BTreeMap<String, usize>,
}

impl SuiteConfig {
    pub fn new(max_vertices: usize, seed: u64) -> Self {
        SuiteConfig { max_vertices, max_degree: max_vertices.min(6), seed, sample_counts: BTreeMap::new() }
    }
}

/// Accumulates instances and failures for one check.
pub struct Checker {
    name: &'static str,
    instances: u64,
    failures: Vec<Failure>,
}

/// How a value is shown in a failure payload.
pub trait Render {
    fn render(&self) -> String;
}

macro_rules! render_display {
    ($($t:ty),*) => {$(
        impl Render for $t {
            fn render(&self) -> String {
                self.to_string()
            }
        }
    )*};
}

render_display!(
    crate::symfunc::SymFunc,
    crate::symfunc::SymFunc2,
    crate::symfunc::BivarPoly,
    crate::symfunc::TPoly,
    bool,
    u64,
    usize,
    String,
    num::BigInt,
    num::BigUint
);

impl Render for crate::Rational {
    fn render(&self) -> String {
        crate::symfunc::fmt_rational(self)
    }
}

impl<K: Debug, V: Debug> Render for BTreeMap<K, V> {
    fn render(&self) -> String {
        format!("{self:?}")
    }
}

impl<T: Debug> Render for Vec<T> {
    fn render(&self) -> String {
        format!("{self:?}")
    }
}

impl Checker {
    fn new(name: &'static str) -> Self {
        Checker { name, instances: 0, failures: Vec::new() }
    }

    /// Compares `(expected, actual)` for one instance.
    pub fn eq<T, I, F>(&mut self, instance: I, f: F)
    where
        T: PartialEq + Render,
        I: FnOnce() -> String,
        F: FnOnce() -> Result<(T, T)>,
    {
        self.instances += 1;
        match f() {
            Ok((e, a)) if e == a => {}
            Ok((e, a)) => self.failures.push(Failure { instance: instance(), expected: e.render(), actual: a.render() }),
            Err(err) => self.failures.push(Failure {
                instance: instance(),
                expected: "a value".into(),
                actual: format!("error: {err}"),
            }),
        }
    }

    /// Records one instance of a property that should hold.
    pub fn holds<I, F>(&mut self, instance: I, f: F)
    where
        I: FnOnce() -> String,
        F: FnOnce() -> Result<bool>,
    {
        self.eq(instance, || Ok((true, f()?)));
    }

    fn finish(self, elapsed: Duration) -> CheckReport {
        CheckReport { check_name: self.name.to_string(), instances_run: self.instances, failures: self.failures, elapsed }
    }
}

/// Context handed to each check.
pub struct Ctx<'a> {
    pub config: &'a SuiteConfig,
    pub rng: ChaCha8Rng,
    name: &'static str,
}

impl Ctx<'_> {
    /// `min(max_vertices, cap)`.
    pub fn upto(&self, cap: usize) -> usize {
        self.config.max_vertices.min(cap)
    }

    pub fn degree_upto(&self, cap: usize) -> usize {
        self.config.max_degree.min(cap)
    }

    /// Number of random samples at size `cap + 1`, zero when `max_vertices`
    /// does not reach that size.
    pub fn samples(&self, cap: usize, default: usize) -> usize {
        if self.config.max_vertices <= cap || cap + 1 > 6 {
            return 0;
        }
        *self.config.sample_counts.get(self.name).unwrap_or(&default)
    }
}

type CheckFn = fn(&mut Ctx, &mut Checker);

/// Named checks grouped by the module whose properties they exercise.
pub const GROUPS: &[&str] = &["combinatorics", "symfunc", "structures", "invariants", "oracles"];

pub(crate) struct CheckDef {
    pub name: &'static str,
    pub group: &'static str,
    pub run: CheckFn,
}

pub fn check_names() -> Vec<&'static str> {
    checks::REGISTRY.iter().map(|c| c.name).collect()
}

fn stream_seed(seed: u64, name: &str) -> u64 {
    // FNV-1a over the check name keeps streams independent and stable
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in name.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x100_0000_01b3);
    }
    seed ^ h
}

fn run_def(def: &CheckDef, config: &SuiteConfig) -> CheckReport {
    let start = Instant::now();
    let mut ctx = Ctx { config, rng: ChaCha8Rng::seed_from_u64(stream_seed(config.seed, def.name)), name: def.name };
    let mut checker = Checker::new(def.name);
    (def.run)(&mut ctx, &mut checker);
    checker.finish(start.elapsed())
}

fn validate(config: &SuiteConfig) -> Result<()> {
    for key in config.sample_counts.keys() {
        if !checks::REGISTRY.iter().any(|c| c.name == key) {
            return Err(Error::Precondition(format!("unknown check name {key:?}")));
        }
    }
    if config.max_vertices > 6 {
        return Err(Error::TooLarge("max_vertices is limited to 6".into()));
    }
    if config.max_degree > crate::symfunc::degree_cap() {
        return Err(Error::DegreeTooLarge { degree: config.max_degree, cap: crate::symfunc::degree_cap() });
    }
    Ok(())
}

/// Runs one named check.
pub fn run_check(name: &str, config: &SuiteConfig) -> Result<CheckReport> {
    validate(config)?;
    let def = checks::REGISTRY
        .iter()
        .find(|c| c.name == name)
        .ok_or_else(|| Error::Precondition(format!("unknown check name {name:?}")))?;
    Ok(run_def(def, config))
}

/// Runs `all`, a group name, or a single check name; reports come back in
/// registry order.
pub fn run_suite(selector: &str, config: &SuiteConfig) -> Result<Vec<CheckReport>> {
    validate(config)?;
    let chosen: Vec<&CheckDef> = match selector {
        "all" => checks::REGISTRY.iter().collect(),
        g if GROUPS.contains(&g) => checks::REGISTRY.iter().filter(|c| c.group == g).collect(),
        name => vec![checks::REGISTRY
            .iter()
            .find(|c| c.name == name)
            .ok_or_else(|| Error::Precondition(format!("unknown check or group {name:?}")))?],
    };
    Ok(chosen.into_iter().map(|def| run_def(def, config)).collect())
}

/// Every registered check with the given sizes and seed.
pub fn run_identity_suite(
    max_vertices: usize,
    random_seed: u64,
    sample_counts: &BTreeMap<String, usize>,
) -> Result<Vec<CheckReport>> {
    let mut config = SuiteConfig::new(max_vertices, random_seed);
    config.sample_counts = sample_counts.clone();
    run_suite("all", &config)
}
