//! `fibtile` — exact tiling combinatorics from the command line.
//!
//! Subcommands: `poly` prints closed-form polynomials, `enum` streams
//! tilings as JSON lines, `sum` prints total weight polynomials, `verify`
//! runs the identity suite, `render` draws a single tiling. All output is
//! byte-deterministic for fixed inputs.

mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use fibtile::barrier::{barrier_sum, enum_barrier};
use fibtile::graphs::enum_tiling_graphs;
use fibtile::identities;
use fibtile::poly::{IntPoly2, QPoly};
use fibtile::sequences::{
    circ_lucas_poly, gauss_binom, lucas_poly, lucasnomial, q_fib_base, q_fibonomial, q_int_base,
};
use fibtile::staircase::{
    coord_partition_sum, enum_staircase, enum_staircase_full, full_sum, staircase_sum,
};
use fibtile::tilings::{
    Mode, Restriction, enum_partition_tilings, enum_strip, sagan_savage_sum, strip_weight_qfib,
    strip_weight_st,
};

#[derive(Parser)]
#[command(
    name = "fibtile",
    version,
    about = "Exact enumeration and verification of Fibonacci/Lucas tiling identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a closed-form polynomial.
    Poly(PolyArgs),
    /// Stream tilings of a model as JSON lines.
    Enum(EnumArgs),
    /// Print the total weight polynomial of a model.
    Sum(SumArgs),
    /// Verify registered identities; exit 0 iff all pass.
    Verify(VerifyArgs),
    /// Draw one tiling of a model as ASCII art.
    Render(RenderArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Lucas,
    Circ,
    Lucasnomial,
    Qint,
    Gauss,
    Qfib,
    Qfibonomial,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Linear,
    Circular,
}

impl From<ModeArg> for Mode {
    fn from(value: ModeArg) -> Mode {
        match value {
            ModeArg::Linear => Mode::Linear,
            ModeArg::Circular => Mode::Circular,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RestrictionArg {
    None,
    FirstDomino,
    FirstMonomino,
    LastDomino,
}

impl From<RestrictionArg> for Restriction {
    fn from(value: RestrictionArg) -> Restriction {
        match value {
            RestrictionArg::None => Restriction::None,
            RestrictionArg::FirstDomino => Restriction::FirstDomino,
            RestrictionArg::FirstMonomino => Restriction::FirstMonomino,
            RestrictionArg::LastDomino => Restriction::LastDomino,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EnumModel {
    Strip,
    Partition,
    Barrier,
    Staircase,
    StaircaseFull,
    Graph,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SumModel {
    Strip,
    Partition,
    Coord,
    Barrier,
    Staircase,
    StaircaseFull,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WeightArg {
    St,
    Qfib,
}

#[derive(Args)]
struct PolyArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    n: u64,
    #[arg(long)]
    k: Option<u64>,
    /// Exponent base for qint/qfib: [n]_{q^base}.
    #[arg(long, default_value_t = 1)]
    base: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct EnumArgs {
    #[arg(long, value_enum)]
    model: EnumModel,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_enum, default_value_t = ModeArg::Linear)]
    mode: ModeArg,
    /// Strip restriction; linear mode only (default: none).
    #[arg(long, value_enum)]
    restriction: Option<RestrictionArg>,
    /// Restriction on the parts of lambda (default: none).
    #[arg(long, value_enum)]
    row_restriction: Option<RestrictionArg>,
    /// Restriction on the complement parts (default: first-domino in
    /// linear mode, none in circular mode).
    #[arg(long, value_enum)]
    col_restriction: Option<RestrictionArg>,
    /// Stop after this many items.
    #[arg(long, default_value_t = 1_000_000)]
    limit: usize,
}

#[derive(Args)]
struct SumArgs {
    #[arg(long, value_enum)]
    model: SumModel,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_enum, default_value_t = ModeArg::Linear)]
    mode: ModeArg,
    #[arg(long, value_enum, default_value_t = WeightArg::St)]
    weight: WeightArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Verify a single identity by id.
    #[arg(long, conflicts_with = "all")]
    id: Option<String>,
    /// Verify every registered identity.
    #[arg(long)]
    all: bool,
    /// Upper bound for every grid parameter.
    #[arg(long)]
    max: u64,
    /// Also write the report as JSON to this path.
    #[arg(long, value_name = "FILE")]
    seed_report: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct RenderArgs {
    #[arg(long, value_enum)]
    model: EnumModel,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_enum, default_value_t = ModeArg::Linear)]
    mode: ModeArg,
    /// Strip restriction; linear mode only (default: none).
    #[arg(long, value_enum)]
    restriction: Option<RestrictionArg>,
    /// Restriction on the parts of lambda (default: none).
    #[arg(long, value_enum)]
    row_restriction: Option<RestrictionArg>,
    /// Restriction on the complement parts (default: first-domino in
    /// linear mode, none in circular mode).
    #[arg(long, value_enum)]
    col_restriction: Option<RestrictionArg>,
    /// Zero-based position in the deterministic enumeration order.
    #[arg(long, default_value_t = 0)]
    index: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Poly(args) => run_poly(args),
        Command::Enum(args) => run_enum(args),
        Command::Sum(args) => run_sum(args),
        Command::Verify(args) => run_verify(args),
        Command::Render(args) => run_render(args),
    }
}

fn require_k(k: Option<u64>, family: &str) -> Result<u64, String> {
    k.ok_or_else(|| format!("--k is required for {family}"))
}

fn run_poly(args: PolyArgs) -> Result<ExitCode, String> {
    if args.base == 0 {
        return Err("--base must be at least 1".to_string());
    }
    let base = BigUint::from(args.base);
    enum Output {
        St(IntPoly2),
        Q(QPoly),
    }
    let out = match args.family {
        Family::Lucas => Output::St(lucas_poly(args.n)),
        Family::Circ => Output::St(circ_lucas_poly(args.n)),
        Family::Lucasnomial => Output::St(
            lucasnomial(args.n, require_k(args.k, "lucasnomial")?).map_err(|e| e.to_string())?,
        ),
        Family::Qint => Output::Q(q_int_base(args.n, &base)),
        Family::Gauss => {
            Output::Q(gauss_binom(args.n, require_k(args.k, "gauss")?).map_err(|e| e.to_string())?)
        }
        Family::Qfib => Output::Q(q_fib_base(args.n, &base)),
        Family::Qfibonomial => Output::Q(
            q_fibonomial(args.n, require_k(args.k, "qfibonomial")?).map_err(|e| e.to_string())?,
        ),
    };
    let line = match (&out, args.format) {
        (Output::St(p), Format::Text) => p.to_string(),
        (Output::St(p), Format::Json) => p.to_json().to_string(),
        (Output::Q(p), Format::Text) => p.to_string(),
        (Output::Q(p), Format::Json) => p.to_json().to_string(),
    };
    println!("{line}");
    Ok(ExitCode::SUCCESS)
}

fn require_m(m: Option<usize>) -> Result<usize, String> {
    m.ok_or_else(|| "--m is required for this model".to_string())
}

fn require_barrier_point(k: Option<usize>) -> Result<usize, String> {
    k.ok_or_else(|| "--k is required for this model".to_string())
}

fn emit_lines<I: Iterator<Item = serde_json::Value>>(items: I, limit: usize) {
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    for value in items.take(limit) {
        writeln!(lock, "{value}").expect("stdout write");
    }
}

fn run_enum(args: EnumArgs) -> Result<ExitCode, String> {
    let mode: Mode = args.mode.into();
    match args.model {
        EnumModel::Strip => emit_lines(
            enum_strip(args.n, mode, strip_restriction(args.restriction, mode)?)
                .into_iter()
                .map(|t| t.to_json()),
            args.limit,
        ),
        EnumModel::Partition => {
            let m = require_m(args.m)?;
            let (row_r, col_r) =
                partition_restrictions(args.row_restriction, args.col_restriction, mode)?;
            emit_lines(
                enum_partition_tilings(m, args.n, mode, row_r, col_r).map(|t| t.to_json()),
                args.limit,
            )
        }
        EnumModel::Barrier => {
            let k = require_barrier_point(args.k)?;
            check_point(k, args.n)?;
            emit_lines(
                enum_barrier(args.n, k).into_iter().map(|t| t.to_json()),
                args.limit,
            )
        }
        EnumModel::Staircase => {
            let k = require_barrier_point(args.k)?;
            check_point(k, args.n)?;
            emit_lines(
                enum_staircase(args.n, k).into_iter().map(|t| t.to_json()),
                args.limit,
            )
        }
        EnumModel::StaircaseFull => {
            let k = require_barrier_point(args.k)?;
            check_point(k, args.n)?;
            emit_lines(
                enum_staircase_full(args.n, k)
                    .into_iter()
                    .map(|t| t.to_json()),
                args.limit,
            )
        }
        EnumModel::Graph => {
            if args.n == 0 {
                return Err("graphs need at least one vertex".to_string());
            }
            emit_lines(
                enum_tiling_graphs(args.n, mode)
                    .into_iter()
                    .map(|g| g.to_json()),
                args.limit,
            )
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn strip_restriction(arg: Option<RestrictionArg>, mode: Mode) -> Result<Restriction, String> {
    let restriction = arg.map(Restriction::from).unwrap_or(Restriction::None);
    if mode == Mode::Circular && restriction != Restriction::None {
        return Err("circular strips only support unrestricted tilings".to_string());
    }
    Ok(restriction)
}

fn partition_restrictions(
    row: Option<RestrictionArg>,
    col: Option<RestrictionArg>,
    mode: Mode,
) -> Result<(Restriction, Restriction), String> {
    let row = row.map(Restriction::from).unwrap_or(Restriction::None);
    let col = col.map(Restriction::from).unwrap_or(match mode {
        Mode::Linear => Restriction::FirstDomino,
        Mode::Circular => Restriction::None,
    });
    if mode == Mode::Circular && (row != Restriction::None || col != Restriction::None) {
        return Err("circular partition tilings are unrestricted".to_string());
    }
    Ok((row, col))
}

fn check_point(k: usize, n: usize) -> Result<(), String> {
    if k > n {
        return Err(format!("--k {k} exceeds --n {n}"));
    }
    Ok(())
}

fn run_sum(args: SumArgs) -> Result<ExitCode, String> {
    let mode: Mode = args.mode.into();
    enum Output {
        St(IntPoly2),
        Q(QPoly),
    }
    let out = match args.model {
        SumModel::Strip => match args.weight {
            WeightArg::St => Output::St(
                enum_strip(args.n, mode, Restriction::None)
                    .iter()
                    .map(|t| strip_weight_st(t, mode))
                    .sum(),
            ),
            WeightArg::Qfib => {
                if mode == Mode::Circular {
                    return Err("q-weights are defined for linear strips".to_string());
                }
                Output::Q(
                    enum_strip(args.n, mode, Restriction::None)
                        .iter()
                        .map(strip_weight_qfib)
                        .sum(),
                )
            }
        },
        SumModel::Partition => Output::St(sagan_savage_sum(require_m(args.m)?, args.n, mode)),
        SumModel::Coord => Output::Q(coord_partition_sum(require_m(args.m)?, args.n)),
        SumModel::Barrier => {
            let k = require_barrier_point(args.k)?;
            check_point(k, args.n)?;
            Output::Q(barrier_sum(args.n, k))
        }
        SumModel::Staircase => {
            let k = require_barrier_point(args.k)?;
            check_point(k, args.n)?;
            Output::Q(staircase_sum(args.n, k))
        }
        SumModel::StaircaseFull => {
            let k = require_barrier_point(args.k)?;
            check_point(k, args.n)?;
            Output::Q(full_sum(args.n, k))
        }
    };
    let line = match (&out, args.format) {
        (Output::St(p), Format::Text) => p.to_string(),
        (Output::St(p), Format::Json) => p.to_json().to_string(),
        (Output::Q(p), Format::Text) => p.to_string(),
        (Output::Q(p), Format::Json) => p.to_json().to_string(),
    };
    println!("{line}");
    Ok(ExitCode::SUCCESS)
}

fn run_verify(args: VerifyArgs) -> Result<ExitCode, String> {
    let suite = if args.all {
        identities::verify_suite(args.max)
    } else {
        let id = args
            .id
            .as_deref()
            .ok_or_else(|| "pass --id ID or --all".to_string())?;
        let desc = identities::find(id).ok_or_else(|| format!("unknown identity id: {id}"))?;
        let report =
            identities::verify(id, &desc.default_grid(args.max)).map_err(|e| e.to_string())?;
        identities::SuiteReport {
            reports: vec![report],
            max_size: args.max,
        }
    };
    print!("{}", suite.render_text());
    if let Some(path) = &args.seed_report {
        let payload = serde_json::to_string_pretty(&suite.to_json())
            .expect("report serialization is infallible");
        std::fs::write(path, payload).map_err(|e| format!("writing {}: {e}", path.display()))?;
    }
    Ok(if suite.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run_render(args: RenderArgs) -> Result<ExitCode, String> {
    let mode: Mode = args.mode.into();
    let index = args.index;
    let picture = match args.model {
        EnumModel::Strip => {
            let tilings = enum_strip(args.n, mode, strip_restriction(args.restriction, mode)?);
            render::strip(pick(&tilings, index)?)
        }
        EnumModel::Partition => {
            let m = require_m(args.m)?;
            let (row_r, col_r) =
                partition_restrictions(args.row_restriction, args.col_restriction, mode)?;
            let tiling = enum_partition_tilings(m, args.n, mode, row_r, col_r)
                .nth(index)
                .ok_or_else(|| format!("--index {index} is out of range"))?;
            render::partition(&tiling)
        }
        EnumModel::Barrier => {
            let k = require_barrier_point(args.k)?;
            check_point(k, args.n)?;
            let tilings = enum_barrier(args.n, k);
            render::barrier(pick(&tilings, index)?)
        }
        EnumModel::Staircase => {
            let k = require_barrier_point(args.k)?;
            check_point(k, args.n)?;
            let tilings = enum_staircase(args.n, k);
            render::staircase(pick(&tilings, index)?)
        }
        EnumModel::StaircaseFull => {
            let k = require_barrier_point(args.k)?;
            check_point(k, args.n)?;
            let tilings = enum_staircase_full(args.n, k);
            render::staircase_full(pick(&tilings, index)?)
        }
        EnumModel::Graph => {
            if args.n == 0 {
                return Err("graphs need at least one vertex".to_string());
            }
            let graphs = enum_tiling_graphs(args.n, mode);
            render::graph(pick(&graphs, index)?)
        }
    };
    println!("{picture}");
    Ok(ExitCode::SUCCESS)
}

fn pick<T>(items: &[T], index: usize) -> Result<&T, String> {
    items
        .get(index)
        .ok_or_else(|| format!("--index {index} is out of range ({} items)", items.len()))
}
