//! Suite execution: instance pools, parallel evaluation, minimization and reporting.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;
use std::time::Instant;

use praxkit_core::operators::FinitePoset;
use praxkit_core::{BinRel, ExactProbSpace, RelationJson, Space, Subset};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::claim::{Bound, Claim, Domain, Expected, Found, Probe, Quantifier, RelEval, Status, Witness};
use crate::gen::{self, Constraint};

pub const SCHEMA: u32 = 1;
/// Largest poset size enumerated for poset claims.
pub const POSET_LIMIT: usize = 4;
/// Largest outcome count for probability claims.
pub const PROB_LIMIT: usize = 4;
/// Environment variable capping worker threads.
pub const THREADS_ENV: &str = "PRAXKIT_THREADS";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub n_max: usize,
    pub samples: usize,
    pub sample_n: usize,
    pub seed: u64,
    /// Comma-separated glob patterns over claim ids; empty selects everything.
    pub suite: String,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self { n_max: 4, samples: 500, sample_n: 7, seed: 42, suite: String::new() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relation: Option<RelationJson>,
    /// Strict order pairs of a poset instance.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub poset: Option<Vec<(usize, usize)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<String>>,
    pub sets: BTreeMap<String, Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub id: String,
    pub status: Status,
    pub expected: Expected,
    /// Argument tuples evaluated across all instances.
    pub tested: u64,
    pub instances: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(rename = "paper_ref")]
    pub statement: String,
    pub seed: u64,
    pub runtime_ms: u64,
}

impl ClaimReport {
    /// Whether the outcome matches the expectation; registered claims always conform.
    pub fn conforms(&self) -> bool {
        match self.expected {
            Expected::MustPass => self.status == Status::Pass,
            Expected::ExpectedFail => self.status == Status::Fail,
            Expected::Registered => true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub config: RunConfig,
    pub claims: Vec<ClaimReport>,
    pub ok: bool,
}

impl Report {
    pub fn claim(&self, id: &str) -> Option<&ClaimReport> {
        self.claims.iter().find(|c| c.id == id)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.claims {
            let status = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Undefined => "UNDEF",
            };
            let expected = match c.expected {
                Expected::MustPass => "must_pass",
                Expected::Registered => "registered",
                Expected::ExpectedFail => "expected_fail",
            };
            let mark = if c.conforms() { "" } else { "  <-- unexpected" };
            out.push_str(&format!(
                "{status:<5} {:<24} {expected:<13} instances={:<6} tested={}{mark}\n",
                c.id, c.instances, c.tested
            ));
            if let Some(cx) = &c.counterexample {
                out.push_str(&format!("      witness: {}\n", serde_json::to_string(cx).unwrap_or_default()));
            }
        }
        let bad = self.claims.iter().filter(|c| !c.conforms()).count();
        out.push_str(&format!("{} claims, {} unexpected, ok={}\n", self.claims.len(), bad, self.ok));
        out
    }
}

/// Selects claims whose id matches any comma-separated glob pattern.
pub fn select(claims: &[Claim], suite: &str) -> Result<Vec<Claim>, glob::PatternError> {
    let patterns: Vec<glob::Pattern> = suite
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(glob::Pattern::new)
        .collect::<Result<_, _>>()?;
    Ok(claims
        .iter()
        .filter(|c| patterns.is_empty() || patterns.iter().any(|p| p.matches(c.id)))
        .copied()
        .collect())
}

#[derive(Clone)]
enum Instance {
    Rel(BinRel),
    Poset(FinitePoset),
    Prob(ExactProbSpace),
}

/// Cached instance lists shared between claims of one run.
#[derive(Default)]
struct Pools {
    rel: HashMap<(Constraint, usize), Arc<Vec<BinRel>>>,
    samples: HashMap<Constraint, Arc<Vec<BinRel>>>,
    posets: HashMap<usize, Arc<Vec<FinitePoset>>>,
    prob: HashMap<usize, Arc<Vec<ExactProbSpace>>>,
}

impl Pools {
    fn relations(&mut self, c: Constraint, n: usize) -> Arc<Vec<BinRel>> {
        self.rel
            .entry((c, n))
            .or_insert_with(|| Arc::new(gen::enumerate_relations(n, c).expect("within enumeration limit")))
            .clone()
    }

    fn samples(&mut self, c: Constraint, cfg: &RunConfig) -> Arc<Vec<BinRel>> {
        self.samples
            .entry(c)
            .or_insert_with(|| {
                Arc::new(
                    (0..cfg.samples as u64)
                        .into_par_iter()
                        .map(|i| gen::sample_relation(cfg.sample_n, c, cfg.seed, i).expect("valid size"))
                        .collect(),
                )
            })
            .clone()
    }
}

fn effective_n(bound: Bound, cfg: &RunConfig, limit: usize) -> usize {
    match bound {
        Bound::Base => cfg.n_max.min(limit),
        Bound::Extended => (cfg.n_max + 1).min(limit),
        Bound::Cap(k) => k.min(cfg.n_max).min(limit),
    }
}

fn instances(claim: &Claim, cfg: &RunConfig, pools: &mut Pools) -> Vec<Instance> {
    match claim.domain {
        Domain::Rel(c, _) => {
            let limit = if c == Constraint::Any { gen::ENUM_LIMIT_ANY } else { gen::ENUM_LIMIT };
            let mut out: Vec<Instance> = (1..=effective_n(claim.bound, cfg, limit))
                .flat_map(|n| pools.relations(c, n).iter().cloned().map(Instance::Rel).collect::<Vec<_>>())
                .collect();
            if claim.sampled && cfg.samples > 0 {
                out.extend(pools.samples(c, cfg).iter().cloned().map(Instance::Rel));
            }
            out
        }
        Domain::Fixture(f, _) => vec![Instance::Rel(f())],
        Domain::Poset(_) => {
            let top = effective_n(claim.bound, cfg, POSET_LIMIT);
            (1..=top)
                .flat_map(|n| {
                    pools
                        .posets
                        .entry(n)
                        .or_insert_with(|| Arc::new(FinitePoset::enumerate(n)))
                        .iter()
                        .cloned()
                        .map(Instance::Poset)
                        .collect::<Vec<_>>()
                })
                .collect()
        }
        Domain::Prob(_) => {
            let top = effective_n(claim.bound, cfg, PROB_LIMIT);
            pools
                .prob
                .entry(top)
                .or_insert_with(|| Arc::new(gen::prob_spaces(top)))
                .iter()
                .cloned()
                .map(Instance::Prob)
                .collect()
        }
    }
}

fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

fn probe_for(claim: &Claim, seed: u64, stream: u64) -> Probe {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ fnv1a(claim.id));
    rng.set_stream(stream);
    Probe::new(rng)
}

fn evaluate(claim: &Claim, inst: &Instance, probe: &mut Probe) -> Found {
    match (claim.domain, inst) {
        (Domain::Rel(_, f), Instance::Rel(r)) | (Domain::Fixture(_, f), Instance::Rel(r)) => {
            f(&Space::new(r.clone()), probe)
        }
        (Domain::Poset(f), Instance::Poset(p)) => f(p, probe),
        (Domain::Prob(f), Instance::Prob(p)) => f(p, probe),
        _ => unreachable!("instance matches claim domain"),
    }
}

/// Re-evaluates a relation claim on one relation with a fixed probe stream.
pub fn evaluate_relation(claim: &Claim, r: &BinRel, seed: u64) -> Found {
    let mut probe = probe_for(claim, seed, u64::MAX);
    match claim.domain {
        Domain::Rel(_, f) | Domain::Fixture(_, f) => f(&Space::new(r.clone()), &mut probe),
        _ => Found::Skip,
    }
}

/// Drops points while the relation stays in the domain and still yields a hit.
fn minimize(claim: &Claim, eval: RelEval, constraint: Constraint, mut r: BinRel, mut w: Witness, seed: u64) -> (BinRel, Witness) {
    'shrink: while r.n() > 1 {
        for p in 0..r.n() {
            let smaller = r.restrict(Subset::full(r.n()).without(p));
            if !constraint.accepts(&smaller) {
                continue;
            }
            let mut probe = probe_for(claim, seed, u64::MAX);
            if let Found::Hit(w2) = eval(&Space::new(smaller.clone()), &mut probe) {
                r = smaller;
                w = w2;
                continue 'shrink;
            }
        }
        break;
    }
    (r, w)
}

fn counterexample(claim: &Claim, inst: &Instance, w: Witness, seed: u64) -> Counterexample {
    let mut cx = Counterexample { relation: None, poset: None, weights: None, sets: BTreeMap::new(), note: None };
    let labels: Vec<String>;
    match inst {
        Instance::Rel(r) => {
            let (constraint, eval) = match claim.domain {
                Domain::Rel(c, f) => (c, f),
                Domain::Fixture(_, f) => (Constraint::Any, f),
                _ => unreachable!("relation instance"),
            };
            let (r, w) = minimize(claim, eval, constraint, r.clone(), w, seed);
            labels = r.universe().labels().to_vec();
            cx.relation = Some(r.to_json());
            return fill(cx, &labels, w);
        }
        Instance::Poset(p) => {
            labels = (0..p.n()).map(|i| i.to_string()).collect();
            cx.poset = Some(
                (0..p.n())
                    .flat_map(|x| (0..p.n()).map(move |y| (x, y)))
                    .filter(|&(x, y)| x != y && p.leq(x, y))
                    .collect(),
            );
        }
        Instance::Prob(p) => {
            labels = (0..p.n()).map(|i| i.to_string()).collect();
            cx.weights = Some(p.weights().iter().map(|w| w.to_string()).collect());
        }
    }
    fill(cx, &labels, w)
}

fn fill(mut cx: Counterexample, labels: &[String], w: Witness) -> Counterexample {
    for (k, s) in w.sets {
        cx.sets.insert(k, s.iter().map(|i| labels.get(i).cloned().unwrap_or_else(|| i.to_string())).collect());
    }
    cx.note = w.note;
    cx
}

/// Runs one claim on every instance of its domain.
pub fn run_claim(claim: &Claim, cfg: &RunConfig) -> ClaimReport {
    run_with_pools(claim, cfg, &mut Pools::default())
}

fn run_with_pools(claim: &Claim, cfg: &RunConfig, pools: &mut Pools) -> ClaimReport {
    let start = Instant::now();
    let insts = instances(claim, cfg, pools);
    let results: Vec<(Found, u64)> = insts
        .par_iter()
        .enumerate()
        .map(|(i, inst)| {
            let mut probe = probe_for(claim, cfg.seed, i as u64);
            let found = evaluate(claim, inst, &mut probe);
            (found, probe.tested)
        })
        .collect();
    let tested = results.iter().map(|(_, t)| t).sum();
    let first_hit = results.iter().position(|(f, _)| matches!(f, Found::Hit(_)));
    let all_skipped = results.iter().all(|(f, _)| *f == Found::Skip);
    let status = match (claim.quantifier, first_hit) {
        (Quantifier::Forall, Some(_)) => Status::Fail,
        (Quantifier::Forall, None) if all_skipped => Status::Undefined,
        (Quantifier::Forall, None) => Status::Pass,
        (Quantifier::Exists, Some(_)) => Status::Pass,
        (Quantifier::Exists, None) => Status::Fail,
    };
    let counterexample = first_hit.map(|i| {
        let Found::Hit(w) = results[i].0.clone() else { unreachable!("position of a hit") };
        counterexample(claim, &insts[i], w, cfg.seed)
    });
    ClaimReport {
        id: claim.id.to_string(),
        status,
        expected: claim.expected,
        tested,
        instances: insts.len() as u64,
        counterexample,
        statement: claim.statement.to_string(),
        seed: cfg.seed,
        runtime_ms: start.elapsed().as_millis() as u64,
    }
}

/// Runs the selected claims, honouring the thread cap from the environment.
pub fn run_suite(claims: &[Claim], cfg: &RunConfig) -> Result<Report, String> {
    let selected = select(claims, &cfg.suite).map_err(|e| e.to_string())?;
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = std::env::var(THREADS_ENV).ok().and_then(|v| v.parse::<usize>().ok()) {
        builder = builder.num_threads(t.max(1));
    }
    let pool = builder.build().map_err(|e| e.to_string())?;
    let reports: Vec<ClaimReport> = pool.install(|| {
        let mut pools = Pools::default();
        selected.iter().map(|c| run_with_pools(c, cfg, &mut pools)).collect()
    });
    let ok = reports.iter().all(ClaimReport::conforms);
    Ok(Report { schema: SCHEMA, config: cfg.clone(), claims: reports, ok })
}

/// Clears the timing fields so two reports can be compared.
pub fn strip_runtime(report: &mut Report) {
    for c in &mut report.claims {
        c.runtime_ms = 0;
    }
}
