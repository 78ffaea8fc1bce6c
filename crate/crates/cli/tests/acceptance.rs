//! One PASS/FAIL line per acceptance criterion, computed from full `praxkit verify` runs.

use std::path::Path;
use std::process::Command;

use praxkit_claims::runner::strip_runtime;
use praxkit_claims::{ClaimReport, Expected, Report, Status};

/// Wall-clock budget for the fixture check.
const FIXTURE_BUDGET_MS: u64 = 1_000;
/// Wall-clock budget for the whole approximation suite.
const APPROX_BUDGET_MS: u64 = 300_000;
const SEED: &str = "42";
const N_MAX: usize = 4;
const SAMPLES: usize = 500;
const SAMPLE_N: usize = 7;

fn verify(dir: &Path, name: &str, extra: &[&str]) -> (Report, i32) {
    let out = dir.join(name);
    let status = Command::new(env!("CARGO_BIN_EXE_praxkit"))
        .args(["verify", "--seed", SEED, "--format", "json", "--out"])
        .arg(&out)
        .args(extra)
        .status()
        .expect("praxkit runs");
    let report = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    (report, status.code().unwrap_or(-1))
}

struct Check<'a> {
    report: &'a Report,
    problems: Vec<String>,
}

impl<'a> Check<'a> {
    fn new(report: &'a Report) -> Self {
        Self { report, problems: Vec::new() }
    }

    fn get(&mut self, id: &str) -> Option<&'a ClaimReport> {
        let c = self.report.claim(id);
        if c.is_none() {
            self.problems.push(format!("{id} missing"));
        }
        c
    }

    fn passes(&mut self, ids: &[&str]) -> &mut Self {
        for id in ids {
            if let Some(c) = self.get(id) {
                let msg = format!("{id} {:?}", c.status);
                if c.status != Status::Pass && !self.problems.contains(&msg) {
                    self.problems.push(msg);
                }
            }
        }
        self
    }

    /// Every must-pass claim whose id starts with `prefix`.
    fn must_pass_prefix(&mut self, prefix: &str) -> &mut Self {
        let ids: Vec<&str> = self
            .report
            .claims
            .iter()
            .filter(|c| c.id.starts_with(prefix) && c.expected == Expected::MustPass)
            .map(|c| c.id.as_str())
            .collect();
        if ids.is_empty() {
            self.problems.push(format!("no {prefix}* claims"));
        }
        self.passes(&ids)
    }

    fn witnessed(&mut self, ids: &[&str]) -> &mut Self {
        for id in ids {
            if let Some(c) = self.get(id) {
                if c.counterexample.is_none() {
                    self.problems.push(format!("{id} has no witness"));
                }
            }
        }
        self
    }

    fn require(&mut self, ok: bool, what: &str) -> &mut Self {
        if !ok {
            self.problems.push(what.to_string());
        }
        self
    }

    fn finish(&mut self) -> Result<(), String> {
        if self.problems.is_empty() {
            Ok(())
        } else {
            Err(self.problems.join("; "))
        }
    }
}

fn runtime(report: &Report, prefix: &str) -> u64 {
    report.claims.iter().filter(|c| c.id.starts_with(prefix)).map(|c| c.runtime_ms).sum()
}

#[test]
fn acceptance() {
    let dir = tempfile::tempdir().unwrap();
    let (first, _) = verify(dir.path(), "first.json", &[]);
    let (second, _) = verify(dir.path(), "second.json", &[]);
    let (errata, errata_code) = verify(dir.path(), "errata.json", &["--suite", "GRN-OTO,DEP-VAG-1"]);
    let r = &first;

    let mut results: Vec<(u8, Result<(), String>)> = Vec::new();

    results.push((
        1,
        Check::new(r)
            .passes(&["FIX-APPROX"])
            .require(r.claim("FIX-APPROX").is_some_and(|c| c.runtime_ms < FIXTURE_BUDGET_MS), "fixture over budget")
            .finish(),
    ));

    let app_instances = r.claim("APP-BI").map_or(0, |c| c.instances);
    results.push((
        2,
        Check::new(r)
            .passes(&[
                "APP-BI", "APP-LCUP", "APP-LCAP", "APP-UCUP", "APP-UCAP", "APP-DUAL", "APP-LPLUS-CAP",
                "APP-LPLUS-DUAL", "APP-CHAIN", "APP-SHARP-L", "APP-SHARP-U", "APP-LHAT-IDEM",
            ])
            .must_pass_prefix("APP-")
            .require(
                r.config.n_max == N_MAX && r.config.samples == SAMPLES && r.config.sample_n == SAMPLE_N,
                "run bounds differ",
            )
            .require(app_instances > SAMPLES as u64, "samples missing")
            .require(runtime(r, "APP-") <= APPROX_BUDGET_MS, "approximation suite over budget")
            .finish(),
    ));

    results.push((3, Check::new(r).passes(&["DEF-BOOL"]).finish()));

    results.push((4, Check::new(r).passes(&["REL-H-EMPTY", "REL-DOT-HASH", "REL-ORTHO"]).finish()));

    results.push((5, Check::new(r).passes(&["H-ATOMIC", "H-ATOM-TYPES"]).finish()));

    results.push((
        6,
        Check::new(r)
            .passes(&[
                "PVA-1", "PVA-2", "PVA-3", "PVA-4", "PVA-5", "PVA-6", "PVA-7", "PVA-8", "PVA-9a", "PVA-9b",
            ])
            .witnessed(&["PVA-9b"])
            .finish(),
    ));

    results.push((
        7,
        Check::new(r)
            .must_pass_prefix("NMR-")
            .witnessed(&["NMR-08", "NMR-09", "NMR-10", "NMR-11"])
            .finish(),
    ));

    results.push((
        8,
        Check::new(r)
            .passes(&["PRB-1", "PRB-2", "PRB-3", "PRB-4", "PRB-5", "PRB-6", "PRB-DXX", "PRB-DXC"])
            .finish(),
    ));

    results.push((
        9,
        Check::new(r)
            .passes(&[
                "SEM-UPS-1", "SEM-UPS-2", "SEM-UPS-3", "SEM-UPS-4", "SEM-UPS-5", "SEM-PI-1",
                "SEM-PI-2", "SEM-PI-3", "SEM-PI-5",
            ])
            .finish(),
    ));

    let errata_ok = errata.claims.len() == 2
        && errata.claims.iter().all(|c| c.expected == Expected::ExpectedFail && c.status == Status::Fail);
    results.push((
        10,
        Check::new(&errata)
            .witnessed(&["GRN-OTO", "DEP-VAG-1"])
            .require(errata_ok, "errata claims did not fail as expected")
            .require(errata_code == 0, "errata run exited non-zero")
            .finish(),
    ));

    let (mut a, mut b) = (first.clone(), second);
    strip_runtime(&mut a);
    strip_runtime(&mut b);
    let same = serde_json::to_string(&a).unwrap() == serde_json::to_string(&b).unwrap();
    results.push((11, Check::new(&a).require(same, "reports differ").finish()));

    let mut failed = Vec::new();
    println!();
    for (n, res) in &results {
        match res {
            Ok(()) => println!("criterion {n:>2}: PASS"),
            Err(why) => {
                println!("criterion {n:>2}: FAIL ({why})");
                failed.push(*n);
            }
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
