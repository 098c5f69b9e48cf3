//! The `springer-k` command line.

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;

use crate::error::Error;
use crate::fixed_points::fixed_points;
use crate::groebner::{
    buchberger, generic_point, generic_rank, specialize_generic, MonomialOrder, OrderKind, DEFAULT_RETRIES,
};
use crate::partition::Partition;
use crate::presentation::{build, Flavor};
use crate::report::CheckReport;
use crate::verify::{run_suite, Suite, VerifyConfig};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DEGENERATE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "springer-k", version, about = "Presentations and exact verification for Springer variety K-rings")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Seed for generic specializations
    #[arg(long, global = true, env = "SPRINGER_K_SEED", default_value_t = crate::groebner::DEFAULT_SEED)]
    seed: u64,

    #[arg(long, global = true, value_enum, default_value_t = OrderArg::Grevlex)]
    order: OrderArg,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Attempts before a specialization is declared degenerate
    #[arg(long, global = true, default_value_t = DEFAULT_RETRIES)]
    retries: u32,

    /// Include elapsed_ms in reports
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the generators of a presentation
    Present(Target),
    /// Compare the generic quotient dimension with its expected value
    Rank(Target),
    /// List the torus-fixed points
    FixedPoints(LambdaArg),
    /// Run verification suites
    Verify {
        #[command(flatten)]
        lambda: LambdaArg,
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: Suite,
    },
    /// Print the standard-monomial basis at a generic point
    Basis(Target),
}

#[derive(Args, Debug)]
struct LambdaArg {
    /// Comma-separated parts, e.g. 3,2,1
    #[arg(long)]
    lambda: String,
}

#[derive(Args, Debug)]
struct Target {
    #[command(flatten)]
    lambda: LambdaArg,
    #[arg(long, default_value = "EqK", value_parser = parse_flavor)]
    flavor: Flavor,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OrderArg {
    Grevlex,
    Lex,
}

impl From<OrderArg> for OrderKind {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Grevlex => OrderKind::GrevLex,
            OrderArg::Lex => OrderKind::Lex,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn parse_flavor(s: &str) -> Result<Flavor, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A failed command: message for stderr and exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidPartition(_) | Error::UnknownName { .. } | Error::OutOfRange(_) | Error::InvalidWord(_) => {
                EXIT_USAGE
            }
            Error::Degenerate { .. } => EXIT_DEGENERATE,
            _ => EXIT_CHECK_FAILED,
        };
        Failure { code, message: e.to_string() }
    }
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut io = Io { out, err };
    match execute(&cli, &mut io) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(io.err, "error: {}", f.message);
            f.code
        }
    }
}

fn lambda_of(arg: &LambdaArg, io: &mut Io<'_>) -> Result<Partition, Failure> {
    let parsed = Partition::parse(&arg.lambda)?;
    if parsed.reordered {
        let _ = writeln!(io.err, "warning: parts of {} sorted to ({})", arg.lambda, parsed.partition);
    }
    Ok(parsed.partition)
}

fn emit_json(io: &mut Io<'_>, value: &impl Serialize) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).expect("serializable output");
    writeln!(io.out, "{text}").map_err(io_failure)
}

fn io_failure(e: std::io::Error) -> Failure {
    Failure { code: EXIT_CHECK_FAILED, message: e.to_string() }
}

fn execute(cli: &Cli, io: &mut Io<'_>) -> Result<i32, Failure> {
    match &cli.command {
        Command::Present(target) => present(cli, target, io),
        Command::Rank(target) => rank(cli, target, io),
        Command::FixedPoints(arg) => list_fixed_points(cli, arg, io),
        Command::Verify { lambda, suite } => verify(cli, lambda, *suite, io),
        Command::Basis(target) => basis(cli, target, io),
    }
}

fn present(cli: &Cli, target: &Target, io: &mut Io<'_>) -> Result<i32, Failure> {
    let lambda = lambda_of(&target.lambda, io)?;
    let ideal = build(target.flavor, &lambda);
    match cli.format {
        Format::Json => emit_json(io, &ideal.to_json())?,
        Format::Text => write!(io.out, "{}", ideal.to_text()).map_err(io_failure)?,
    }
    Ok(EXIT_PASS)
}

fn expected_rank(flavor: Flavor, lambda: &Partition) -> BigUint {
    match flavor {
        Flavor::Flag => (1..=lambda.size()).map(BigUint::from).product(),
        _ => lambda.multinomial(),
    }
}

fn rank(cli: &Cli, target: &Target, io: &mut Io<'_>) -> Result<i32, Failure> {
    let lambda = lambda_of(&target.lambda, io)?;
    let ideal = build(target.flavor, &lambda);
    let expected = expected_rank(target.flavor, &lambda);
    let start = Instant::now();
    let result = generic_rank(&ideal, cli.seed, cli.retries, cli.order.into())?;
    let mut report = CheckReport::new(&lambda, "generic_rank", &expected, result.rank)
        .with_seed(cli.seed)
        .with_counterexample((result.seeds.0 != cli.seed || result.attempts > 1).then_some(&result));
    if cli.timings {
        report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    }
    match cli.format {
        Format::Json => emit_json(io, &report)?,
        Format::Text => writeln!(io.out, "{report}").map_err(io_failure)?,
    }
    Ok(if report.pass { EXIT_PASS } else { EXIT_CHECK_FAILED })
}

#[derive(Serialize)]
struct FixedPointsJson<'a> {
    lambda: &'a [usize],
    count: usize,
    points: Vec<&'a [usize]>,
}

fn list_fixed_points(cli: &Cli, arg: &LambdaArg, io: &mut Io<'_>) -> Result<i32, Failure> {
    let lambda = lambda_of(arg, io)?;
    let set = fixed_points(&lambda);
    match cli.format {
        Format::Json => emit_json(
            io,
            &FixedPointsJson {
                lambda: lambda.parts(),
                count: set.len(),
                points: set.points.iter().map(|w| w.as_slice()).collect(),
            },
        )?,
        Format::Text => {
            let mut text = format!("lambda: ({lambda})\ncount: {}\n", set.len());
            for w in &set.points {
                text.push_str(&format!("{w}\n"));
            }
            io.out.write_all(text.as_bytes()).map_err(io_failure)?;
        }
    }
    Ok(EXIT_PASS)
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    lambda: &'a [usize],
    suite: &'a str,
    pass: bool,
    checks: &'a [CheckReport],
}

fn verify(cli: &Cli, arg: &LambdaArg, suite: Suite, io: &mut Io<'_>) -> Result<i32, Failure> {
    let lambda = lambda_of(arg, io)?;
    let config = VerifyConfig { seed: cli.seed, retries: cli.retries, order: cli.order.into(), timings: cli.timings };
    let reports = run_suite(suite, &lambda, &config);
    let pass = reports.iter().all(|r| r.pass);
    let degenerate = reports.iter().any(|r| !r.pass && r.got.starts_with("error: specialization stayed degenerate"));
    match cli.format {
        Format::Json => emit_json(
            io,
            &VerifyJson { lambda: lambda.parts(), suite: suite.name(), pass, checks: &reports },
        )?,
        Format::Text => {
            let mut text = String::new();
            for r in &reports {
                text.push_str(&format!("{r}\n"));
            }
            let failed = reports.iter().filter(|r| !r.pass).count();
            text.push_str(&format!("{} of {} checks passed\n", reports.len() - failed, reports.len()));
            io.out.write_all(text.as_bytes()).map_err(io_failure)?;
        }
    }
    if let Some(first) = reports.iter().find(|r| !r.pass) {
        let _ = writeln!(io.err, "first failure: {first}");
    }
    Ok(match (pass, degenerate) {
        (true, _) => EXIT_PASS,
        (false, true) => EXIT_DEGENERATE,
        (false, false) => EXIT_CHECK_FAILED,
    })
}

#[derive(Serialize)]
struct BasisJson<'a> {
    lambda: &'a [usize],
    flavor: Flavor,
    order: &'static str,
    seed: u64,
    point: String,
    dimension: usize,
    monomials: Vec<String>,
}

fn basis(cli: &Cli, target: &Target, io: &mut Io<'_>) -> Result<i32, Failure> {
    let lambda = lambda_of(&target.lambda, io)?;
    let ideal = build(target.flavor, &lambda);
    let point = generic_point(&ideal, cli.seed)?.describe();
    let special = specialize_generic(&ideal, cli.seed)?;
    let kind: OrderKind = cli.order.into();
    let gb = buchberger(&special.polynomials(), &MonomialOrder::new(kind, special.ambient()))?;
    let monomials = gb.standard_monomials()?.to_strings();
    let monomials: Vec<String> = if target.flavor.is_cohomology() {
        monomials.into_iter().map(|m| m.replace('x', "y")).collect()
    } else {
        monomials
    };
    match cli.format {
        Format::Json => emit_json(
            io,
            &BasisJson {
                lambda: lambda.parts(),
                flavor: target.flavor,
                order: kind.name(),
                seed: cli.seed,
                point,
                dimension: monomials.len(),
                monomials,
            },
        )?,
        Format::Text => {
            let mut text = format!(
                "lambda: ({lambda})\nflavor: {}\norder: {}\nseed: {}\npoint: {point}\ndimension: {}\n",
                target.flavor,
                kind.name(),
                cli.seed,
                monomials.len()
            );
            for m in &monomials {
                text.push_str(&format!("{m}\n"));
            }
            io.out.write_all(text.as_bytes()).map_err(io_failure)?;
        }
    }
    Ok(EXIT_PASS)
}
