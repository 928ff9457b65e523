//! Command-line front end. Reports go to stdout, progress to stderr.
//!
//! Exit status: 0 when the report is verified, 1 on a counterexample or an
//! internal failure, 2 on invalid input.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::dynkin::DynkinType;
use crate::error::{Error, Result};
use crate::quiver::{FoldingCatalogue, ProductKind, QuiverJson, ValuedQuiver};
use crate::seed::{Seed, SeedJson};
use crate::ysystem::{
    mu_boxtimes_sequence, mu_square_sequence, verify_direct_ysystem, verify_folding,
    verify_periodicity_with, PatternKind, PeriodicityReport, VerifyOptions,
};

/// Products larger than this need `--big`.
pub const DESK_SCALE: usize = 12;

#[derive(Parser, Debug)]
#[command(
    name = "ypattern",
    version,
    about = "Exact verifier for the periodicity of Y-systems"
)]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Verify periodicity for a pair of Dynkin types.
    Verify(VerifyArgs),
    /// Mutate a quiver (JSON on stdin, or the product of --pair) along a sequence.
    Mutate(MutateArgs),
    /// Show the folding of a non simply laced pair and cross-check it.
    Fold(FoldArgs),
    /// Print the tensor, triangle and square products of a pair.
    Products(ProductsArgs),
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Two Dynkin types, e.g. `--pair A2 A1`.
    #[arg(long, num_args = 2, value_names = ["TYPE", "TYPE"], value_parser = parse_type)]
    pub pair: Option<Vec<DynkinType>>,
    #[arg(long, value_enum, env = "YPATTERN_OUTPUT", default_value_t = Output::Text)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_enum, default_value_t = System::Boxtimes)]
    pub system: System,
    /// Round bound; defaults to h + h'.
    #[arg(long)]
    pub rounds: Option<usize>,
    /// Random starting points (direct system) or evaluation points (seed patterns).
    #[arg(long, default_value_t = 5)]
    pub trials: usize,
    /// Seed of the random generator.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Print one progress line per round to stderr.
    #[arg(long)]
    pub trace: bool,
    /// Allow products with more than 12 vertices.
    #[arg(long)]
    pub big: bool,
    /// Accept simply laced pairs with `--system fold`.
    #[arg(long)]
    pub force: bool,
}

#[derive(Args, Debug)]
pub struct MutateArgs {
    #[command(flatten)]
    pub common: Common,
    /// Product used with --pair.
    #[arg(long, value_enum, default_value_t = ProductArg::Triangle)]
    pub product: ProductArg,
    /// Vertex labels, 1-based indices, or `boxtimes` / `square` for a
    /// full round of the composite mutation (with --pair).
    #[arg(long, num_args = 0..)]
    pub sequence: Vec<String>,
    /// Print the full seed after each mutation.
    #[arg(long)]
    pub seed_data: bool,
}

#[derive(Args, Debug)]
pub struct FoldArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long)]
    pub rounds: Option<usize>,
    /// Fold simply laced pairs along the trivial action.
    #[arg(long)]
    pub force: bool,
}

#[derive(Args, Debug)]
pub struct ProductsArgs {
    #[command(flatten)]
    pub common: Common,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum System {
    Boxtimes,
    Square,
    Direct,
    Fold,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ProductArg {
    Tensor,
    Triangle,
    Square,
}

impl From<ProductArg> for ProductKind {
    fn from(p: ProductArg) -> Self {
        match p {
            ProductArg::Tensor => ProductKind::Tensor,
            ProductArg::Triangle => ProductKind::Triangle,
            ProductArg::Square => ProductKind::Square,
        }
    }
}

fn parse_type(s: &str) -> std::result::Result<DynkinType, String> {
    s.parse::<DynkinType>().map_err(|e| e.to_string())
}

/// Output streams of one invocation.
pub struct Io<'a> {
    pub stdin: &'a mut dyn Read,
    pub stdout: &'a mut dyn Write,
    pub stderr: &'a mut dyn Write,
}

/// Parses `args` (program name first) and runs; returns the exit status.
pub fn run<I, T>(args: I, io: &mut Io<'_>) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match CliConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                io.stdout.write_all(text.as_bytes())
            } else {
                io.stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cfg, io) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(io.stderr, "error: {e}");
            if e.is_input_error() {
                2
            } else {
                1
            }
        }
    }
}

fn pair(c: &Common) -> Result<(DynkinType, DynkinType)> {
    match c.pair.as_deref() {
        Some([a, b]) => Ok((*a, *b)),
        _ => Err(Error::input("--pair TYPE TYPE is required")),
    }
}

fn write_out(io: &mut Io<'_>, text: &str) -> Result<()> {
    match writeln!(io.stdout, "{text}") {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
            Err(Error::input(format!("cannot write output: {e}")))
        }
        _ => Ok(()),
    }
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("output serializes")
}

pub fn execute(cfg: &CliConfig, io: &mut Io<'_>) -> Result<i32> {
    match &cfg.command {
        Command::Verify(a) => cmd_verify(a, io),
        Command::Mutate(a) => cmd_mutate(a, io),
        Command::Fold(a) => cmd_fold(a, io),
        Command::Products(a) => cmd_products(a, io),
    }
}

fn emit_report(
    mut report: PeriodicityReport,
    flags: BTreeMap<String, String>,
    output: Output,
    io: &mut Io<'_>,
) -> Result<i32> {
    report.flags = flags;
    let text = match output {
        Output::Text => report.to_string(),
        Output::Json => report.to_json(),
    };
    write_out(io, &text)?;
    Ok(if report.is_verified() { 0 } else { 1 })
}

pub fn cmd_verify(a: &VerifyArgs, io: &mut Io<'_>) -> Result<i32> {
    let (left, right) = pair(&a.common)?;
    let size = left.rank() * right.rank();
    if size > DESK_SCALE && !a.big && a.system != System::Direct {
        return Err(Error::input(format!(
            "{left} x {right} has {size} vertices; pass --big to run pairs beyond {DESK_SCALE} vertices"
        )));
    }
    let system = format!("{:?}", a.system).to_lowercase();
    let mut flags = BTreeMap::new();
    flags.insert("pair".to_string(), format!("{left} {right}"));
    flags.insert("system".to_string(), system.clone());
    flags.insert("trials".to_string(), a.trials.to_string());
    flags.insert("seed".to_string(), a.seed.to_string());
    if let Some(r) = a.rounds {
        flags.insert("rounds".to_string(), r.to_string());
    }
    let report = match a.system {
        System::Boxtimes | System::Square => {
            let opts = VerifyOptions {
                pattern: if a.system == System::Square {
                    PatternKind::Square
                } else {
                    PatternKind::Boxtimes
                },
                max_rounds: a.rounds,
                point_trials: a.trials,
                rng_seed: a.seed,
                ..VerifyOptions::default()
            };
            let trace = a.trace || size > DESK_SCALE;
            let stderr = &mut *io.stderr;
            verify_periodicity_with(left, right, &opts, &mut |r, n| {
                if trace {
                    let _ = writeln!(stderr, "{system} {left} x {right}: round {r}/{n}");
                }
            })?
        }
        System::Direct => verify_direct_ysystem(left, right, a.trials, a.seed)?,
        System::Fold => verify_folding(left, right, a.rounds, a.force)?,
    };
    emit_report(report, flags, a.common.output, io)
}

#[derive(Serialize)]
struct Step {
    vertex: String,
    quiver: QuiverJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<SeedJson>,
}

fn resolve(q: &ValuedQuiver, token: &str) -> Result<usize> {
    if let Ok(i) = q.index_of(token) {
        return Ok(i);
    }
    match token.parse::<usize>() {
        Ok(k) if (1..=q.len()).contains(&k) => Ok(k - 1),
        _ => Err(Error::UnknownVertex(token.to_string())),
    }
}

pub fn cmd_mutate(a: &MutateArgs, io: &mut Io<'_>) -> Result<i32> {
    let (q, factors) = match a.common.pair {
        Some(_) => {
            let (left, right) = pair(&a.common)?;
            let (l, r) = (
                ValuedQuiver::alternating(left),
                ValuedQuiver::alternating(right),
            );
            (l.product(&r, a.product.into())?, Some((l, r)))
        }
        None => {
            let mut text = String::new();
            io.stdin
                .read_to_string(&mut text)
                .map_err(|e| Error::input(format!("cannot read stdin: {e}")))?;
            let j: QuiverJson = serde_json::from_str(&text)
                .map_err(|e| Error::Parse(format!("quiver JSON: {e}")))?;
            (ValuedQuiver::from_json(j)?, None)
        }
    };
    let mut seq = Vec::new();
    for token in &a.sequence {
        match (token.as_str(), &factors) {
            ("boxtimes", Some((l, r))) => {
                seq.extend(mu_boxtimes_sequence(l.matrix(), r.matrix())?.flat())
            }
            ("square", Some((l, r))) => {
                seq.extend(mu_square_sequence(l.matrix(), r.matrix())?.flat())
            }
            _ => seq.push(resolve(&q, token)?),
        }
    }
    let mut cur = q.clone();
    let mut seed = a.seed_data.then(|| Seed::initial(&q));
    let mut steps = Vec::new();
    let mut text = vec![format!("initial:\n{}", show(&cur))];
    for &k in &seq {
        cur = cur.mutate(k)?;
        if let Some(s) = &mut seed {
            *s = s.mutate(k)?;
        }
        let label = q.labels()[k].clone();
        let mut block = format!("after mutation at {label}:\n{}", show(&cur));
        if let Some(s) = &seed {
            block.push_str(&format!(
                "\nseed: {}",
                serde_json::to_string(&s.to_json()).expect("seeds serialize")
            ));
        }
        text.push(block);
        steps.push(Step {
            vertex: label,
            quiver: cur.to_json(),
            seed: seed.as_ref().map(Seed::to_json),
        });
    }
    let out = match a.common.output {
        Output::Text => text.join("\n"),
        Output::Json => json(
            &serde_json::json!({ "initial": q.to_json(), "steps": steps, "final": cur.to_json() }),
        ),
    };
    write_out(io, &out)?;
    Ok(0)
}

fn show(q: &ValuedQuiver) -> String {
    let s = q.to_string();
    match s.trim_end() {
        "" => "(no arrows)".to_string(),
        t => t.to_string(),
    }
}

pub fn cmd_fold(a: &FoldArgs, io: &mut Io<'_>) -> Result<i32> {
    let (left, right) = pair(&a.common)?;
    let report = verify_folding(left, right, a.rounds, a.force)?;
    let mut flags = BTreeMap::new();
    flags.insert("pair".to_string(), format!("{left} {right}"));
    if let Some(r) = a.rounds {
        flags.insert("rounds".to_string(), r.to_string());
    }
    if a.common.output == Output::Text {
        let (fl, fr) = (
            FoldingCatalogue::for_type(left),
            FoldingCatalogue::for_type(right),
        );
        let lifted = fl
            .lifted_quiver()
            .product(fr.lifted_quiver(), ProductKind::Triangle)?;
        write_out(
            io,
            &format!(
                "lifted quiver {} x {}:\n{}\n",
                fl.lifted_type(),
                fr.lifted_type(),
                lifted.to_string().trim_end()
            ),
        )?;
    }
    emit_report(report, flags, a.common.output, io)
}

pub fn cmd_products(a: &ProductsArgs, io: &mut Io<'_>) -> Result<i32> {
    let (left, right) = pair(&a.common)?;
    let (l, r) = (
        ValuedQuiver::alternating(left),
        ValuedQuiver::alternating(right),
    );
    let kinds = [
        ("tensor", ProductKind::Tensor),
        ("triangle", ProductKind::Triangle),
        ("square", ProductKind::Square),
    ];
    let mut products = BTreeMap::new();
    let mut text = Vec::new();
    for (name, kind) in kinds {
        let p = l.product(&r, kind)?;
        text.push(format!("{name} product {left} x {right}:\n{}", show(&p)));
        products.insert(name, p.to_json());
    }
    let out = match a.common.output {
        Output::Text => text.join("\n\n"),
        Output::Json => json(&products),
    };
    write_out(io, &out)?;
    Ok(0)
}
