//! Command-line front end.
//!
//! Exit codes: 0 for success (or "equal"), 1 for "not equal" / "no
//! morphism", 2 for any error. Data goes to the output stream, diagnostics
//! to the error stream.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use rand::Rng;

use crate::bench::{loglog_slope, measure, BenchOp};
use crate::canonical::{canonical_string, evaluate_roundtrip_check};
use crate::error::{Error, Result};
use crate::formula::{Alphabet, RESERVED};
use crate::generate::{random_formula, random_relabelling, random_tree, rng_from_seed};
use crate::homomorphism::{exists_morphism, exists_morphism_bruteforce, extract_morphism};
use crate::mode::{Mode, Sidedness};
use crate::pruning::{minimal_retract_bruteforce, prune};
use crate::solver::{check_identity_str, Solver};
use crate::tree::SigmaTree;

const DEFAULT_ALPHABET: &str = "ab";

#[derive(Debug, Parser)]
#[command(name = "adequate", version, about = "Word problem and normal forms in free adequate semigroups and monoids")]
pub struct Cli {
    /// Generator symbols, in order. Defaults to "ab" extended by any other
    /// letters occurring in the input formulas.
    #[arg(long, global = true)]
    pub alphabet: Option<String>,
    /// adequate, left or right.
    #[arg(long, global = true, default_value = "adequate")]
    pub mode: Sidedness,
    /// Work in the semigroup (no identity element) instead of the monoid.
    #[arg(long, global = true)]
    pub semigroup: bool,
    /// Also write the resulting tree as Graphviz DOT to this path.
    #[arg(long, global = true)]
    pub dot: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Pair left adequate with `+` and right adequate with `*`.
    #[arg(long, global = true)]
    pub swap_sided_ops: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a formula to its unpruned tree (JSON).
    Eval { formula: String },
    /// Prune a tree given as JSON or as a formula.
    Prune { input: String },
    /// Print the normal form of a formula.
    Nf { formula: String },
    /// Exit 0 if the formulas are equal, 1 otherwise.
    Eq { lhs: String, rhs: String },
    /// Print a morphism between two trees (JSON or formulas), exit 1 if none.
    Morph { source: String, target: String },
    /// Exit 0 if the identity holds in the variety, 1 otherwise.
    CheckIdentity { lhs: String, rhs: String },
    /// Print a random tree with the given number of edges.
    Gen {
        #[arg(long, default_value_t = 10)]
        edges: usize,
    },
    /// Time eq and prune on random instances; prints CSV and fitted slopes.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "200,400,800,1600")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        reps: usize,
    },
    /// Cross-check the algorithms against brute-force oracles.
    Selftest {
        #[arg(long, default_value_t = 1000)]
        cases: usize,
    },
}

/// Resolved settings for one invocation.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub alphabet: Alphabet,
    pub mode: Mode,
    pub seed: u64,
    pub dot: Option<PathBuf>,
}

impl RunConfig {
    fn new(cli: &Cli, inputs: &[&str]) -> Result<Self> {
        let alphabet = match &cli.alphabet {
            Some(letters) => Alphabet::new(letters.chars())?,
            None => {
                let mut letters: Vec<char> = DEFAULT_ALPHABET.chars().collect();
                let mut extra: Vec<char> = inputs
                    .iter()
                    .filter(|s| !s.trim_start().starts_with('{'))
                    .flat_map(|s| s.chars())
                    .filter(|c| !RESERVED.contains(c) && !c.is_whitespace() && !letters.contains(c))
                    .collect();
                extra.sort_unstable();
                extra.dedup();
                letters.extend(extra);
                Alphabet::new(letters)?
            }
        };
        let mode = Mode::new(cli.mode, !cli.semigroup).with_swapped_ops(cli.swap_sided_ops);
        Ok(RunConfig {
            alphabet,
            mode,
            seed: cli.seed,
            dot: cli.dot.clone(),
        })
    }

    fn solver(&self) -> Solver {
        Solver::new(self.alphabet.clone(), self.mode)
    }

    fn emit_tree(&self, tree: &SigmaTree, out: &mut dyn Write) -> Result<()> {
        writeln!(out, "{}", tree.to_json())?;
        if let Some(path) = &self.dot {
            std::fs::write(path, tree.to_dot())?;
        }
        Ok(())
    }
}

/// Reads `@path` arguments from disk; other arguments are taken literally.
fn resolve(arg: &str) -> Result<String> {
    match arg.strip_prefix('@') {
        Some(path) => Ok(std::fs::read_to_string(path)?.trim_end().to_owned()),
        None => Ok(arg.to_owned()),
    }
}

fn load_tree(text: &str, cfg: &RunConfig) -> Result<SigmaTree> {
    if text.trim_start().starts_with('{') {
        Ok(SigmaTree::from_json(text)?)
    } else {
        let solver = cfg.solver();
        solver.evaluate(&solver.parse(text)?)
    }
}

/// Parses arguments and runs; returns the process exit code.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, out, err),
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            if e.use_stderr() {
                2
            } else {
                let _ = write!(out, "{}", e.render());
                0
            }
        }
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn verdict(holds: bool, out: &mut dyn Write) -> Result<i32> {
    writeln!(out, "{holds}")?;
    Ok(if holds { 0 } else { 1 })
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Eval { formula } => {
            let text = resolve(formula)?;
            let cfg = RunConfig::new(cli, &[&text])?;
            let solver = cfg.solver();
            let tree = solver.evaluate(&solver.parse(&text)?)?;
            cfg.emit_tree(&tree, out)?;
            Ok(0)
        }
        Command::Prune { input } => {
            let text = resolve(input)?;
            let cfg = RunConfig::new(cli, &[&text])?;
            let tree = load_tree(&text, &cfg)?;
            cfg.emit_tree(&prune(&tree).tree, out)?;
            Ok(0)
        }
        Command::Nf { formula } => {
            let text = resolve(formula)?;
            let cfg = RunConfig::new(cli, &[&text])?;
            writeln!(out, "{}", cfg.solver().normal_form_str(&text)?)?;
            Ok(0)
        }
        Command::Eq { lhs, rhs } => {
            let (l, r) = (resolve(lhs)?, resolve(rhs)?);
            let cfg = RunConfig::new(cli, &[&l, &r])?;
            verdict(cfg.solver().equal_str(&l, &r)?, out)
        }
        Command::Morph { source, target } => {
            let (s, t) = (resolve(source)?, resolve(target)?);
            let cfg = RunConfig::new(cli, &[&s, &t])?;
            let (x, y) = (load_tree(&s, &cfg)?, load_tree(&t, &cfg)?);
            match extract_morphism(&x, &y)? {
                Some(m) => {
                    writeln!(out, "{}", serde_json::json!({ "map": m.map }))?;
                    Ok(0)
                }
                None => {
                    writeln!(out, "null")?;
                    Ok(1)
                }
            }
        }
        Command::CheckIdentity { lhs, rhs } => {
            let (l, r) = (resolve(lhs)?, resolve(rhs)?);
            let cfg = RunConfig::new(cli, &[])?;
            verdict(check_identity_str(&l, &r, cfg.mode)?, out)
        }
        Command::Gen { edges } => {
            let cfg = RunConfig::new(cli, &[])?;
            let tree = random_tree(&mut rng_from_seed(cfg.seed), &cfg.alphabet, *edges);
            cfg.emit_tree(&tree, out)?;
            Ok(0)
        }
        Command::Bench { sizes, reps } => {
            if *reps == 0 || sizes.is_empty() || sizes.contains(&0) {
                return Err(Error::Usage("bench needs reps >= 1 and positive sizes".into()));
            }
            writeln!(out, "op,size,mean_seconds,median_seconds")?;
            for op in [BenchOp::Eq, BenchOp::Prune] {
                let rows = measure(op, sizes, *reps, cli.seed);
                for row in &rows {
                    writeln!(
                        out,
                        "{},{},{:.9},{:.9}",
                        op.name(),
                        row.size,
                        row.mean_seconds,
                        row.median_seconds
                    )?;
                }
                if rows.len() >= 2 {
                    let points: Vec<(f64, f64)> =
                        rows.iter().map(|r| (r.size as f64, r.mean_seconds)).collect();
                    writeln!(out, "slope,{},{:.3}", op.name(), loglog_slope(&points))?;
                }
            }
            Ok(0)
        }
        Command::Selftest { cases } => {
            let failures = selftest(*cases, cli.seed, out)?;
            if failures > 0 {
                writeln!(err, "{failures} self-test check(s) failed")?;
                Ok(1)
            } else {
                Ok(0)
            }
        }
    }
}

/// Oracle-equivalence suites on random instances. Returns the number of
/// failed suites.
pub fn selftest(cases: usize, seed: u64, out: &mut dyn Write) -> Result<usize> {
    let alphabet = Alphabet::new("ab".chars())?;
    let solver = Solver::new(alphabet.clone(), Mode::ADEQUATE_MONOID);
    let mut rng = rng_from_seed(seed);
    let mut failures = 0;
    let mut report = |name: &str, bad: usize, out: &mut dyn Write| -> Result<()> {
        let status = if bad == 0 { "ok" } else { "FAIL" };
        writeln!(out, "{status} {name} ({cases} cases, {bad} disagreements)")?;
        failures += usize::from(bad > 0);
        Ok(())
    };

    let mut bad = 0;
    for _ in 0..cases {
        let edges = rng.gen_range(0..8);
        let x = random_tree(&mut rng, &alphabet, edges);
        let edges = rng.gen_range(0..8);
        let y = random_tree(&mut rng, &alphabet, edges);
        bad += usize::from(exists_morphism(&x, &y)? != exists_morphism_bruteforce(&x, &y));
    }
    report("morphism-vs-bruteforce", bad, out)?;

    let mut bad = 0;
    for _ in 0..cases {
        let edges = rng.gen_range(0..7);
        let t = random_tree(&mut rng, &alphabet, edges);
        bad += usize::from(
            canonical_string(&prune(&t).tree) != canonical_string(&minimal_retract_bruteforce(&t)),
        );
    }
    report("prune-vs-bruteforce", bad, out)?;

    let mut bad = 0;
    for _ in 0..cases {
        let edges = rng.gen_range(0..30);
        let t = random_tree(&mut rng, &alphabet, edges);
        let relabelled = random_relabelling(&mut rng, &t);
        bad += usize::from(canonical_string(&t) != canonical_string(&relabelled));
        bad += usize::from(!evaluate_roundtrip_check(&t));
    }
    report("canonical-form", bad, out)?;

    let mut bad = 0;
    for _ in 0..cases {
        let f = random_formula(&mut rng, &alphabet, solver.mode(), 20);
        let g = random_formula(&mut rng, &alphabet, solver.mode(), 20);
        let by_morphism = solver.equal(&f, &g)?;
        let by_normal_form = solver.normal_form(&f)? == solver.normal_form(&g)?;
        bad += usize::from(by_morphism != by_normal_form);
    }
    report("word-problem-coherence", bad, out)?;

    Ok(failures)
}
