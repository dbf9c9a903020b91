mod input;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use lindim_core::gfq::Field;
use lindim_core::lindim::{
    format_witness, formula_sn_family, formula_wreath_imprimitive, formula_wreath_product,
    lindim_auto, lindim_general, lindim_oracle, lindim_primitive, parse_witness, witness_verify,
    LinDimError, LinDimValue, SnCase,
};
use lindim_core::perm::{catalog, GroupAction};
use lindim_core::permmod::DEFAULT_CAP;
use lindim_core::suite::{run_suite, SuiteConfig, SuiteName, SuiteRow};

use input::{parse_field, ActionSpec, GroupSource, InputError};

const EXIT_INPUT: u8 = 1;
const EXIT_COMPUTE: u8 = 2;
const EXIT_INTERVAL: u8 = 3;
const EXIT_CHECK: u8 = 4;

#[derive(Parser)]
#[command(name = "lindim", version, about = "Linear dimension of finite permutation group actions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the linear dimension of an action and optionally write a witness.
    Compute(ComputeArgs),
    /// Check a witness file against an action.
    Verify(VerifyArgs),
    /// Run a built-in test suite.
    Suite(SuiteArgs),
    /// List the built-in groups.
    Catalog,
}

#[derive(Args)]
struct GroupArgs {
    /// Group file: "degree n" then "gen (1,2)(3,4)" lines.
    #[arg(long, conflicts_with = "catalog")]
    group: Option<PathBuf>,
    /// Built-in group such as S5, PSL32 or T6_3.
    #[arg(long)]
    catalog: Option<String>,
    /// natural, ksets:k, cosets:<file>, wreath-imp:K,L, wreath-prod:K,L, partitions:k or regular.
    #[arg(long, default_value = "natural")]
    action: ActionSpec,
}

impl GroupArgs {
    fn source(&self) -> Option<GroupSource> {
        match (&self.group, &self.catalog) {
            (Some(p), _) => Some(GroupSource::File(p.clone())),
            (None, Some(c)) => Some(GroupSource::Catalog(c.clone())),
            (None, None) => None,
        }
    }

    fn build(&self) -> Result<GroupAction, InputError> {
        let source = self.source();
        if !self.action.needs_group() && source.is_some() {
            return Err(InputError("wreath actions take their factors from the descriptor".into()));
        }
        self.action.build(source.as_ref())
    }

    fn case_name(&self) -> String {
        self.action.case_name(self.source().as_ref())
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Auto,
    General,
    Primitive,
    Oracle,
    Formula,
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    target: GroupArgs,
    /// Field order q, or p^t.
    #[arg(long, value_parser = parse_field)]
    field: Field,
    #[arg(long, value_enum, default_value = "auto")]
    mode: Mode,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest number of submodules the lattice search may hold.
    #[arg(long, env = "LINDIM_CAP", default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Where to write the witness.
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Witness file written by `compute --output`.
    #[arg(long)]
    witness: PathBuf,
    #[command(flatten)]
    target: GroupArgs,
}

#[derive(Args)]
struct SuiteArgs {
    /// oracle, theorems or invariants.
    name: SuiteName,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, env = "LINDIM_CAP", default_value_t = DEFAULT_CAP)]
    cap: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Serialize)]
struct Record<'a> {
    case: &'a str,
    field: &'a str,
    computed: &'a str,
    expected: &'a str,
    theorem: &'a str,
    status: &'a str,
}

impl<'a> From<&'a SuiteRow> for Record<'a> {
    fn from(r: &'a SuiteRow) -> Self {
        Record {
            case: &r.case,
            field: &r.field,
            computed: &r.computed,
            expected: &r.expected,
            theorem: &r.theorem,
            status: r.status(),
        }
    }
}

fn json_line(r: &Record) -> String {
    serde_json::to_string(r).expect("plain strings serialize")
}

enum Failure {
    Input(InputError),
    Compute(LinDimError),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Input(e)
    }
}

impl From<LinDimError> for Failure {
    fn from(e: LinDimError) -> Self {
        Failure::Compute(e)
    }
}

fn report(f: Failure) -> ExitCode {
    match f {
        Failure::Input(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT)
        }
        Failure::Compute(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_COMPUTE)
        }
    }
}

fn formula_value(args: &ComputeArgs) -> Result<LinDimValue, LinDimError> {
    let p = args.field.p() as u64;
    let target = &args.target;
    let out = || {
        LinDimError::OutOfTheoremRange(format!(
            "no closed formula for {}",
            target.case_name()
        ))
    };
    let n = target.source().and_then(|s| s.symmetric_degree());
    let v = match (&target.action, n) {
        (ActionSpec::Natural, Some(n)) => formula_sn_family(SnCase::Natural { n }, p)?,
        (ActionSpec::KSets(k), Some(n)) => formula_sn_family(SnCase::KSets { n, k: *k as u64 }, p)?,
        (ActionSpec::Partitions(k), Some(n)) => {
            formula_sn_family(SnCase::Uniform { n, k: *k as u64 }, p)?
        }
        (ActionSpec::WreathProduct(..), _) => {
            let (k, l) = target.action.symmetric_factors().ok_or_else(out)?;
            formula_wreath_product(k, l, p)?
        }
        (ActionSpec::WreathImprimitive(k, l), _) => {
            let (k, l) = (catalog::get(k)?, catalog::get(l)?);
            let ka = GroupAction::natural(&k);
            let lk = lindim_general(&ka, &args.field, args.cap, args.seed)?
                .value
                .exact()
                .ok_or_else(|| LinDimError::OutOfTheoremRange("lindim of K is not exact".into()))?;
            formula_wreath_imprimitive(
                k.degree() as u64,
                l.degree() as u64,
                ka.is_regular(),
                lk as u64,
                p,
            )?
        }
        _ => return Err(out()),
    };
    Ok(LinDimValue::Exact(v as usize))
}

fn compute(args: &ComputeArgs) -> Result<ExitCode, Failure> {
    let a = args.target.build()?;
    let f = &args.field;
    let (value, method, witness) = match args.mode {
        Mode::Formula => (formula_value(args)?, "formula", None),
        mode => {
            let r = match mode {
                Mode::Auto => lindim_auto(&a, f, args.cap, args.seed)?,
                Mode::General => lindim_general(&a, f, args.cap, args.seed)?,
                Mode::Primitive => lindim_primitive(&a, f, args.seed)?,
                Mode::Oracle => lindim_oracle(&a, f)?,
                Mode::Formula => unreachable!(),
            };
            (r.value, r.method.tag(), r.witness)
        }
    };
    if let Some(path) = &args.output {
        let w = witness.as_ref().ok_or_else(|| {
            InputError(format!("mode {method} produces no witness for --output"))
        })?;
        fs::write(path, format_witness(w, &a))
            .map_err(|e| InputError(format!("cannot write {}: {e}", path.display())))?;
    }
    let computed = value.to_string();
    if args.json {
        let field = format!("GF({})", f.q());
        let status = if value.exact().is_some() { "complete" } else { "interval" };
        let case = args.target.case_name();
        println!(
            "{}",
            json_line(&Record {
                case: &case,
                field: &field,
                computed: &computed,
                expected: "",
                theorem: method,
                status,
            })
        );
    } else {
        println!("lindim={computed}");
        println!("method={method}");
    }
    Ok(match value {
        LinDimValue::Exact(_) => ExitCode::SUCCESS,
        LinDimValue::Interval { .. } => ExitCode::from(EXIT_INTERVAL),
    })
}

fn verify(args: &VerifyArgs) -> Result<ExitCode, Failure> {
    let text = fs::read_to_string(&args.witness)
        .map_err(|e| InputError(format!("cannot read {}: {e}", args.witness.display())))?;
    let w = parse_witness(&text).map_err(|e| InputError(e.to_string()))?;
    let a = args.target.build()?;
    Ok(match witness_verify(&w, &a) {
        Ok(()) => {
            println!("witness ok: dimension {} for {} points", w.dim, a.size());
            ExitCode::SUCCESS
        }
        Err(e) => {
            println!("witness rejected: {e}");
            ExitCode::from(EXIT_CHECK)
        }
    })
}

fn suite(args: &SuiteArgs) -> ExitCode {
    let rows = run_suite(args.name, &SuiteConfig { cap: args.cap, seed: args.seed });
    let mut out = std::io::stdout().lock();
    for r in &rows {
        let line = if args.json { json_line(&Record::from(r)) } else { r.to_string() };
        let _ = writeln!(out, "{line}");
    }
    let failed = rows.iter().filter(|r| !r.pass).count();
    if !args.json {
        let _ = writeln!(out, "{} rows, {} failed", rows.len(), failed);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_CHECK)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.command {
        Command::Compute(args) => compute(args),
        Command::Verify(args) => verify(args),
        Command::Suite(args) => Ok(suite(args)),
        Command::Catalog => {
            for name in catalog::names() {
                println!("{name}");
            }
            println!("S<n> A<n> C<n> D<n>");
            Ok(ExitCode::SUCCESS)
        }
    };
    result.unwrap_or_else(report)
}
