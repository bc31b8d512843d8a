//! Command-line driver. Output is JSON on stdout (or `--out`), diagnostics
//! go to stderr.
//!
//! Exit status: `0` computed or verified, `1` refuted (or hypotheses unmet
//! / unverified under `--strict`), `2` input, parse or guardrail error.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::composer::Composition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::{load_recipe, parse_recipe, Built, GraphJson, Recipe};
use crate::resolver::{Limits, Resolver, DEFAULT_BASIS_CAP, DEFAULT_MAX_ENUM_ORDER};
use crate::theorems::{self, Verdict, VerificationReport};

#[derive(Debug, Parser)]
#[command(
    name = "cutdim",
    version,
    about = "Metric dimension of point-attaching graphs"
)]
pub struct Cli {
    /// Exit 1 when a verification is not conclusive.
    #[arg(long, global = true)]
    pub strict: bool,
    /// Largest order accepted by basis enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ENUM_ORDER)]
    pub max_n: usize,
    /// Maximum number of bases to enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_BASIS_CAP)]
    pub max_bases: usize,
    /// Write JSON here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Metric dimension and the lexicographically least basis.
    Dim { input: String },
    /// All metric bases.
    Bases { input: String },
    /// Upper dimension (largest minimal resolving set).
    Updim { input: String },
    /// Attaching dimension for the given attachment set.
    Attdim {
        input: String,
        #[arg(long, value_delimiter = ',', required = true)]
        attach: Vec<usize>,
    },
    /// Isolation index and a basis attaining it.
    IsoIndex { input: String },
    /// Build a recipe; emits the graph and attachment profiles.
    Compose { input: String },
    /// Rooted or corona product of two graphs.
    Product(ProductArgs),
    /// Check a closed formula against the exact value.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ProductKind {
    Rooted,
    Corona,
}

#[derive(Debug, Args)]
pub struct ProductArgs {
    pub kind: ProductKind,
    /// Base graph.
    pub g: String,
    /// Graph attached at every vertex of the base.
    pub h: String,
    /// Root of `h` (rooted products only).
    #[arg(long)]
    pub root: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Statement {
    LowerBound,
    Equality,
    Extremal,
    Block,
    Rooted,
    Corona,
    Tree,
    Chain,
    Cota,
    K1Lemma,
    #[value(name = "treeT")]
    TreeT,
    #[value(name = "familyF")]
    FamilyF,
}

impl std::str::FromStr for Statement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        <Statement as ValueEnum>::from_str(s, false)
            .map_err(|_| Error::InvalidParameters(format!("unknown statement {s:?}")))
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub statement: Statement,
    /// Recipe or graph (a file path or inline JSON).
    pub input: String,
    /// Order of the path attached by `cota`.
    #[arg(long, default_value_t = 2)]
    pub p_len: usize,
}

/// Reads a file path, or inline JSON when the argument starts with `{`.
fn recipe_arg(arg: &str) -> Result<Recipe> {
    if arg.trim_start().starts_with('{') {
        parse_recipe(arg)
    } else {
        load_recipe(Path::new(arg))
    }
}

fn graph_arg(arg: &str) -> Result<Graph> {
    Ok(recipe_arg(arg)?.build()?.graph().clone())
}

fn composition_json(c: &Composition) -> Value {
    json!({
        "graph": GraphJson::from(c.graph()),
        "profiles": c.profiles(),
        "images": (0..c.len()).map(|i| c.images(i)).collect::<Vec<_>>(),
    })
}

/// Result of one invocation before it is written out.
pub struct Outcome {
    pub output: Value,
    pub verdict: Option<Verdict>,
}

pub fn execute(cli: &Cli) -> Result<Outcome> {
    let limits = Limits {
        max_enum_order: cli.max_n,
        basis_cap: cli.max_bases,
    };
    let computed = |output: Value| Outcome {
        output,
        verdict: None,
    };
    Ok(match &cli.command {
        Command::Dim { input } => {
            let b = Resolver::with_limits(&graph_arg(input)?, limits)?.metric_dimension()?;
            computed(json!({"dim": b.size, "basis": b.vertices}))
        }
        Command::Bases { input } => {
            let r = Resolver::with_limits(&graph_arg(input)?, limits)?.enumerate_bases()?;
            computed(serde_json::to_value(r).expect("serializable"))
        }
        Command::Updim { input } => {
            let r = Resolver::with_limits(&graph_arg(input)?, limits)?;
            computed(json!({"upper_dim": r.upper_metric_dimension()?}))
        }
        Command::Attdim { input, attach } => {
            let b =
                Resolver::with_limits(&graph_arg(input)?, limits)?.attaching_dimension(attach)?;
            computed(json!({"dim_star": b.size, "generator": b.vertices, "attach": attach}))
        }
        Command::IsoIndex { input } => {
            let (basis, iso) =
                Resolver::with_limits(&graph_arg(input)?, limits)?.max_isolation_basis()?;
            computed(json!({"isolation_index": iso, "basis": basis}))
        }
        Command::Compose { input } => match recipe_arg(input)?.build()? {
            Built::Composition(c) => computed(composition_json(&c)),
            Built::Graph(g) => computed(json!({"graph": GraphJson::from(&g)})),
        },
        Command::Product(p) => {
            let g = graph_arg(&p.g)?;
            let h = graph_arg(&p.h)?;
            let c = match p.kind {
                ProductKind::Rooted => {
                    let root = p.root.ok_or_else(|| {
                        Error::InvalidParameters("rooted products need --root".into())
                    })?;
                    crate::composer::rooted_product_uniform(&g, &h, root)?
                }
                ProductKind::Corona => crate::composer::corona_uniform(&g, &h)?,
            };
            computed(composition_json(&c))
        }
        Command::Verify(v) => {
            let report = verify(v.statement, &recipe_arg(&v.input)?, v.p_len, limits)?;
            Outcome {
                verdict: Some(report.verdict),
                output: serde_json::to_value(&report).expect("serializable"),
            }
        }
    })
}

fn composition_of(recipe: &Recipe) -> Result<Composition> {
    match recipe.build()? {
        Built::Composition(c) => Ok(c),
        Built::Graph(_) => Err(Error::InvalidParameters(
            "this statement needs a composition recipe".into(),
        )),
    }
}

/// Evaluates `statement` on a parsed recipe. `p_len` is used by `cota` only.
pub fn verify(
    statement: Statement,
    recipe: &Recipe,
    p_len: usize,
    limits: Limits,
) -> Result<VerificationReport> {
    use Statement::*;
    let graph = || Ok::<_, Error>(recipe.build()?.graph().clone());
    let wrong = |kind: &str| {
        Err(Error::InvalidParameters(format!(
            "verify {} needs a {kind} recipe",
            statement
                .to_possible_value()
                .expect("no skipped variants")
                .get_name()
        )))
    };
    match statement {
        LowerBound => theorems::lower_bound_report(&composition_of(recipe)?, limits),
        Equality => theorems::main_equality_report(&composition_of(recipe)?, limits),
        Extremal => theorems::extremal_report(&composition_of(recipe)?, limits),
        Block => theorems::block_formula_report(&composition_of(recipe)?, limits),
        Chain => theorems::chain_report(&composition_of(recipe)?, limits),
        Rooted => match recipe {
            Recipe::Rooted { g, rooted } => theorems::rooted_family_report(g, rooted, limits),
            _ => wrong("rooted"),
        },
        Corona => match recipe {
            Recipe::Corona { g, family } => theorems::corona_report(g, family, limits),
            _ => wrong("corona"),
        },
        Tree => theorems::tree_dim_report(&graph()?, limits),
        Cota => theorems::cota_bounds_report(&graph()?, p_len, limits),
        K1Lemma => theorems::k1_lemma_check(&graph()?, limits),
        TreeT => match *recipe {
            Recipe::TreeT { a, b, n } => theorems::tree_t_report(a, b, n, limits),
            _ => wrong("treeT"),
        },
        FamilyF => match *recipe {
            Recipe::FamilyF(t) => theorems::family_f_report(t, limits),
            _ => wrong("familyF"),
        },
    }
}

/// Exit status for a verdict.
pub fn exit_code(verdict: Option<Verdict>, strict: bool) -> i32 {
    match verdict {
        None | Some(Verdict::FormulaMatches | Verdict::BoundHolds) => 0,
        Some(Verdict::Refuted) => 1,
        Some(Verdict::HypothesesUnmet | Verdict::Unverified) => i32::from(strict),
    }
}

/// Runs a parsed invocation and returns the process exit status.
pub fn run(cli: &Cli) -> i32 {
    let outcome = match execute(cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let mut text = serde_json::to_string_pretty(&outcome.output).expect("serializable");
    text.push('\n');
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: {}: {e}", path.display());
                return 2;
            }
        }
        None => print!("{text}"),
    }
    exit_code(outcome.verdict, cli.strict)
}
