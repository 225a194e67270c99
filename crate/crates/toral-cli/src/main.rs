//! `toral` — classify balanced toral elements of the exceptional Lie
//! algebras by their Kac coordinates.
//!
//! Exit codes: 0 success, 1 verification or I/O failure, 2 usage error.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use toral_core::{
    conjugate_under, enumerate_balanced, enumerate_balanced_auto, is_prime, phi, scale_class,
    table_for, ConjugacyGroup, ExceptionalType, ExtendedDiagram, KacTuple, RootSystem, SearchMode,
};

use toral_cli::document::{ClassRecordDocument, TablesDocument};
use toral_cli::verify;

#[derive(Parser)]
#[command(
    name = "toral",
    about = "Balanced toral classes of exceptional Lie algebras via Kac coordinates",
    version
)]
struct Cli {
    /// Worker threads for the search engines (default: $TORAL_WORKERS or all cores)
    #[arg(long, global = true)]
    workers: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the balanced classes of one (type, prime) pair
    Enumerate(EnumerateArgs),
    /// Write the full classification tables, one JSON document per type
    Tables(TablesArgs),
    /// Multiply a class by a scalar and reduce back to canonical coordinates
    Scale(ScaleArgs),
    /// Count connected subgraphs of the extended diagram with constraints
    Psi(PsiArgs),
    /// Run the property and theorem verification suite
    Verify(VerifyArgs),
}

#[derive(Args)]
struct EnumerateArgs {
    /// Root-system type: G2, F4, E6, E7 or E8
    #[arg(long = "type", value_name = "TYPE")]
    ty: String,
    /// Characteristic to search
    #[arg(long)]
    prime: i64,
    /// Engine; defaults to exhaustive, or pruned for the heavy cases
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
}

#[derive(Args)]
struct TablesArgs {
    /// Output directory (created if missing)
    #[arg(long)]
    out: PathBuf,
    /// Also run the heavy cells (E6 73; E7 43, 127; E8 41, 61, 79, 241)
    #[arg(long)]
    heavy: bool,
}

#[derive(Args)]
struct ScaleArgs {
    /// Root-system type: G2, F4, E6, E7 or E8
    #[arg(long = "type", value_name = "TYPE")]
    ty: String,
    /// Characteristic
    #[arg(long)]
    prime: i64,
    /// Kac coordinates a0,...,al
    #[arg(long)]
    kac: String,
    /// Unit r modulo p to multiply by
    #[arg(long)]
    scalar: i64,
    /// Optional second tuple to compare the result against
    #[arg(long)]
    against: Option<String>,
}

#[derive(Args)]
struct PsiArgs {
    /// Root-system type: G2, F4, E6, E7 or E8
    #[arg(long = "type", value_name = "TYPE")]
    ty: String,
    /// Nodes every subgraph must contain, e.g. "0"
    #[arg(long)]
    require: Option<String>,
    /// Nodes every subgraph must avoid, e.g. "1,6"
    #[arg(long)]
    forbid: Option<String>,
    /// List the subgraphs and their positive-root images
    #[arg(long)]
    list: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Root-system type: G2, F4, E6, E7 or E8
    #[arg(long = "type", value_name = "TYPE")]
    ty: String,
    /// Restrict to one prime (default: all candidate primes of the type)
    #[arg(long)]
    prime: Option<i64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Levi,
    Pruned,
}

impl From<ModeArg> for SearchMode {
    fn from(m: ModeArg) -> SearchMode {
        match m {
            ModeArg::Exhaustive => SearchMode::Exhaustive,
            ModeArg::Levi => SearchMode::Levi,
            ModeArg::Pruned => SearchMode::Pruned,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Md,
}

/// Usage errors exit 2, runtime failures exit 1.
enum CliError {
    Usage(String),
    Failure(String),
}

impl From<toral_core::Error> for CliError {
    fn from(e: toral_core::Error) -> CliError {
        CliError::Usage(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> CliError {
        CliError::Failure(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let workers = cli
        .workers
        .or_else(|| {
            std::env::var("TORAL_WORKERS")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(0);
    if workers > 0 {
        // ignore the error if a pool is already installed
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global();
    }
    match run(cli.command) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cmd: Command) -> Result<ExitCode, CliError> {
    match cmd {
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Tables(args) => cmd_tables(args),
        Command::Scale(args) => cmd_scale(args),
        Command::Psi(args) => cmd_psi(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

fn parse_type(s: &str) -> Result<ExceptionalType, CliError> {
    s.parse::<ExceptionalType>()
        .map_err(|e| CliError::Usage(e.to_string()))
}

fn parse_nodes(s: &str, max: usize) -> Result<BTreeSet<usize>, CliError> {
    let mut out = BTreeSet::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let n: usize = part
            .parse()
            .map_err(|_| CliError::Usage(format!("bad node `{part}`")))?;
        if n > max {
            return Err(CliError::Usage(format!("node {n} out of range 0..={max}")));
        }
        out.insert(n);
    }
    Ok(out)
}

fn parse_kac(rs: &RootSystem, p: i64, s: &str) -> Result<KacTuple, CliError> {
    let coords: Result<Vec<i64>, _> = s.split(',').map(str::trim).map(str::parse::<i64>).collect();
    let coords = coords.map_err(|_| CliError::Usage(format!("bad kac tuple `{s}`")))?;
    KacTuple::new(rs, p, coords).map_err(CliError::from)
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<ExitCode, CliError> {
    let ty = parse_type(&args.ty)?;
    if !is_prime(args.prime) {
        return Err(CliError::Usage(format!(
            "{} is not a prime number",
            args.prime
        )));
    }
    let rs = RootSystem::build(ty);
    let records = match args.mode {
        Some(mode) => enumerate_balanced(&rs, args.prime, mode.into())?,
        None => enumerate_balanced_auto(&rs, args.prime)?,
    };
    let doc = ClassRecordDocument::new(ty, args.prime, &records);
    let rendered = match args.format {
        FormatArg::Json => doc.to_json(),
        FormatArg::Csv => doc.to_csv(),
        FormatArg::Md => doc.to_markdown(),
    };
    print!("{rendered}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_tables(args: TablesArgs) -> Result<ExitCode, CliError> {
    std::fs::create_dir_all(&args.out)?;
    for ty in ExceptionalType::ALL {
        let table = table_for(ty, args.heavy);
        let doc = TablesDocument::new(&table);
        let path = args.out.join(format!("{ty}.json"));
        std::fs::write(&path, doc.to_json())?;
        let computed: usize = table.computed_records().len();
        let skipped = table
            .primes
            .iter()
            .filter(|(_, o)| matches!(o, toral_core::PrimeOutcome::Skipped))
            .count();
        println!(
            "{}: {} classes over {} primes ({} cells skipped) -> {}",
            ty,
            computed,
            table.primes.len(),
            skipped,
            path.display()
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_scale(args: ScaleArgs) -> Result<ExitCode, CliError> {
    let ty = parse_type(&args.ty)?;
    let rs = RootSystem::build(ty);
    let input = parse_kac(&rs, args.prime, &args.kac)?;
    let result = scale_class(&rs, &input, args.scalar)?;
    println!("input:  {input}");
    println!("scalar: {}", args.scalar);
    println!("result: {result}");
    let inner = conjugate_under(&rs, &result, &input, ConjugacyGroup::Inner)?;
    let full = conjugate_under(&rs, &result, &input, ConjugacyGroup::Full)?;
    println!("inner-conjugate to input: {inner}");
    println!("full-conjugate to input:  {full}");
    if let Some(other) = &args.against {
        let other = parse_kac(&rs, args.prime, other)?;
        let inner = conjugate_under(&rs, &result, &other, ConjugacyGroup::Inner)?;
        let full = conjugate_under(&rs, &result, &other, ConjugacyGroup::Full)?;
        println!("inner-conjugate to {other}: {inner}");
        println!("full-conjugate to {other}:  {full}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_psi(args: PsiArgs) -> Result<ExitCode, CliError> {
    let ty = parse_type(&args.ty)?;
    let rs = RootSystem::build(ty);
    let diagram = ExtendedDiagram::new(&rs);
    let max = rs.rank();
    let require = args
        .require
        .as_deref()
        .map(|s| parse_nodes(s, max))
        .transpose()?
        .unwrap_or_default();
    let forbid = args
        .forbid
        .as_deref()
        .map(|s| parse_nodes(s, max))
        .transpose()?
        .unwrap_or_default();
    let subgraphs = diagram.psi_set(&require, &forbid)?;
    println!(
        "{} connected subgraphs of the extended {} diagram (require {:?}, forbid {:?})",
        subgraphs.len(),
        ty,
        require.iter().collect::<Vec<_>>(),
        forbid.iter().collect::<Vec<_>>()
    );
    if args.list {
        for j in &subgraphs {
            let root = phi(&rs, j)?;
            let nodes: Vec<String> = j.iter().map(|n| n.to_string()).collect();
            println!("{{{}}} -> {} = {:?}", nodes.join(","), root, root.coeffs());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, CliError> {
    let ty = parse_type(&args.ty)?;
    if let Some(p) = args.prime {
        if !is_prime(p) {
            return Err(CliError::Usage(format!("{p} is not a prime number")));
        }
    }
    let ok = verify::run(ty, args.prime).map_err(CliError::Failure)?;
    if ok {
        println!("PASS");
        Ok(ExitCode::SUCCESS)
    } else {
        println!("FAIL");
        Ok(ExitCode::from(1))
    }
}
