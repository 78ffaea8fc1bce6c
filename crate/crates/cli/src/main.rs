//! `praxkit`: inspect relations and verify the claim registry.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use praxkit_claims::gen::{self, Constraint};
use praxkit_claims::{registry, run_suite, RunConfig};
use praxkit_core::dependence::{BetaMode, DepContext, NuFamily};
use praxkit_core::rough::{AtomType, PosetH};
use praxkit_core::{ApproxKind, BinRel, RelationJson, Space, Subset, Universe};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "praxkit", version, about = "Rough approximations over finite reflexive relations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report which relation classes a relation belongs to.
    Classify { relation: PathBuf },
    /// Apply approximation operators to a subset.
    Approx {
        relation: PathBuf,
        /// Comma-separated labels; empty for the empty set.
        #[arg(long, default_value = "")]
        set: String,
        /// Comma-separated operator names such as l,u,lo,uo,l_plus,l_sharp,u_hat.
        #[arg(long, default_value = "l,u")]
        ops: String,
    },
    /// List the roughly-equal classes.
    Objects {
        relation: PathBuf,
        /// Also list the atoms and their types.
        #[arg(long)]
        atoms: bool,
    },
    /// Dependence degree and PN-dependence of two subsets.
    Deps {
        relation: PathBuf,
        #[arg(long, default_value = "")]
        x: String,
        #[arg(long, default_value = "")]
        y: String,
        /// delta_l, delta_u, delta_lw or gamma_uw.
        #[arg(long, default_value = "delta_l")]
        nu: NuFamily,
        #[arg(long, value_enum, default_value_t = Mode::Inf)]
        mode: Mode,
        /// Transitive super-relation for the w-families; defaults to the transitive closure.
        #[arg(long)]
        rw: Option<PathBuf>,
    },
    /// Print seeded random relations as JSON.
    Gen {
        #[arg(long, default_value_t = 5)]
        n: usize,
        /// any, all_reflexive, prax, quasi_order or equivalence.
        #[arg(long, default_value = "prax")]
        constraint: Constraint,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: u64,
    },
    /// Run the claim registry and print a report; exits non-zero when a claim misbehaves.
    Verify {
        /// Comma-separated glob patterns over claim ids.
        #[arg(long, default_value = "")]
        suite: String,
        #[arg(long, default_value_t = 4)]
        n_max: usize,
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        sample_n: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Zero the timing fields.
        #[arg(long)]
        no_runtime: bool,
    },
    /// List registered claims.
    Claims,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Inf,
    Sup,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Classify { relation } => {
            let r = load(&relation)?;
            print_json(&json!(r.classify()))?;
        }
        Command::Approx { relation, set, ops } => {
            let s = Space::new(load(&relation)?);
            let a = parse_set(s.rel().universe(), &set)?;
            let mut out = serde_json::Map::new();
            for op in split(&ops) {
                let kind: ApproxKind = op.parse().map_err(anyhow::Error::msg)?;
                let v = s.approx_checked(a, kind)?;
                out.insert(kind.name().to_string(), labels(s.rel().universe(), v));
            }
            print_json(&json!({ "set": labels(s.rel().universe(), a), "approximations": out }))?;
        }
        Command::Objects { relation, atoms } => {
            let s = Space::new(load(&relation)?);
            let h = PosetH::new(&s)?;
            let u = s.rel().universe();
            let classes: Vec<Value> = h
                .classes()
                .iter()
                .map(|c| {
                    json!({
                        "lower": labels(u, c.pair.lower),
                        "upper": labels(u, c.pair.upper),
                        "members": c.members.iter().map(|&m| labels(u, m)).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let mut out = json!({ "classes": classes, "atomic": h.is_atomic() });
            if atoms {
                let list: Vec<Value> = h
                    .atoms()
                    .into_iter()
                    .map(|i| json!({ "class": i, "type": atom_name(h.atom_type(&s, i)) }))
                    .collect();
                out["atoms"] = Value::Array(list);
            }
            print_json(&out)?;
        }
        Command::Deps { relation, x, y, nu, mode, rw } => {
            let r = load(&relation)?;
            let wide_rel = match rw {
                Some(p) => load(&p)?,
                None => r.sharp(),
            };
            r.ensure_subrelation_of(&wide_rel)?;
            let (base, wide) = (Space::new(r), Space::new(wide_rel));
            let u = base.rel().universe().clone();
            let (xs, ys) = (parse_set(&u, &x)?, parse_set(&u, &y)?);
            let mode = match mode {
                Mode::Inf => BetaMode::Inf,
                Mode::Sup => BetaMode::Sup,
            };
            let ctx = DepContext::new(&base, &wide, nu, mode)?;
            let beta = match ctx.beta(xs, ys) {
                Ok(v) => labels(&u, v),
                Err(e) => json!({ "undefined": e.to_string() }),
            };
            print_json(&json!({
                "aggregate": labels(&u, ctx.aggregate(xs, ys)),
                "beta": beta,
                "candidates": ctx.beta_all(xs, ys).into_iter().map(|v| labels(&u, v)).collect::<Vec<_>>(),
                "pn_dependent": base.pn_dependent(xs, ys),
                "pn_independent": base.pn_independent(xs, ys),
            }))?;
        }
        Command::Gen { n, constraint, seed, count } => {
            let rels = (0..count)
                .map(|i| gen::sample_relation(n, constraint, seed, i).map(|r| r.to_json()))
                .collect::<praxkit_core::Result<Vec<RelationJson>>>()?;
            print_json(&json!(rels))?;
        }
        Command::Verify { suite, n_max, samples, sample_n, seed, format, out, no_runtime } => {
            let cfg = RunConfig { n_max, samples, sample_n, seed, suite };
            let mut report = run_suite(&registry(), &cfg).map_err(anyhow::Error::msg)?;
            if report.claims.is_empty() {
                bail!("no claim matches `{}`", cfg.suite);
            }
            if no_runtime {
                praxkit_claims::runner::strip_runtime(&mut report);
            }
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&report)? + "\n",
                Format::Text => report.to_text(),
            };
            match out {
                Some(p) => std::fs::write(&p, text).with_context(|| format!("writing {}", p.display()))?,
                None => print!("{text}"),
            }
            return Ok(if report.ok { ExitCode::SUCCESS } else { ExitCode::FAILURE });
        }
        Command::Claims => {
            for c in registry() {
                println!("{:<24} {:?}  {}", c.id, c.expected, c.statement);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn load(path: &Path) -> Result<BinRel> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let json: RelationJson = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok(json.to_relation()?)
}

fn split(s: &str) -> impl Iterator<Item = &str> {
    s.split(',').map(str::trim).filter(|t| !t.is_empty())
}

fn parse_set(u: &Universe, s: &str) -> Result<Subset> {
    Ok(u.subset(split(s))?)
}

fn labels(u: &Universe, s: Subset) -> Value {
    json!(u.names(s))
}

fn atom_name(t: AtomType) -> &'static str {
    match t {
        AtomType::Type0 => "type0",
        AtomType::Type1 => "type1",
        AtomType::Type2 => "type2",
        AtomType::Unclassified => "unclassified",
    }
}

fn print_json(v: &Value) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}
