//! `capparelli`: verify identities, list objects, audit bijections, and
//! print refined count tables.

use std::fmt;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;
use std::str::FromStr;

use capparelli_core::combinatorics::{enumerate_family, family_table, CombError, CountTable, FamilyId, ProductSideId};
use capparelli_core::identities::{describe, exit_status, verify_many, CaseId, Profile, Verdict, VerifyBounds};
use capparelli_core::qfactory::{lemma_suite, LemmaBounds};
use capparelli_core::series::AbdPoly;
use capparelli_core::staircase::{bijection_audit, AuditVariant};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "capparelli", version, about = "Exact checks of colored partition identities to finite bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check registered identities to the given bounds.
    Verify(VerifyArgs),
    /// List every object of one weight.
    Enumerate(EnumerateArgs),
    /// Audit a staircase bijection at one weight.
    Bijection(BijectionArgs),
    /// Refined counts `n,k,i,j,count` for every weight up to a bound.
    Table(TableArgs),
    /// Run the lemma suite.
    Lemmas(LemmasArgs),
}

#[derive(Args)]
#[command(group(ArgGroup::new("which").required(true).args(["case", "all"])))]
struct VerifyArgs {
    /// Case id; repeat for several.
    #[arg(long)]
    case: Vec<CaseId>,
    #[arg(long)]
    all: bool,
    /// quick, standard or deep.
    #[arg(long, conflicts_with_all = ["max_q", "max_d"])]
    profile: Option<Profile>,
    /// q-bound; also the weight bound for count tables.
    #[arg(long)]
    max_q: Option<u32>,
    /// d-bound.
    #[arg(long)]
    max_d: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Include wall-clock times.
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Family id or product side (d, dbar, dprime, ddprime, a).
    #[arg(long)]
    family: Source,
    #[arg(long)]
    n: u32,
    /// Cap on the k statistic.
    #[arg(long)]
    max_d: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct BijectionArgs {
    #[arg(long)]
    variant: AuditVariant,
    #[arg(long)]
    n: u32,
    /// Cap on k; defaults to n.
    #[arg(long)]
    max_d: Option<u32>,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long)]
    family: Source,
    #[arg(long)]
    max_n: u32,
    #[arg(long)]
    max_d: Option<u32>,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    format: TableFormat,
}

#[derive(Args)]
struct LemmasArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
}

/// Either a family of jagged overpartitions or a product-side set.
#[derive(Clone, Copy)]
enum Source {
    Family(FamilyId),
    Side(ProductSideId),
}

impl FromStr for Source {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        if let Ok(f) = s.parse() {
            return Ok(Source::Family(f));
        }
        if let Ok(p) = s.parse() {
            return Ok(Source::Side(p));
        }
        let families: Vec<&str> = FamilyId::ALL.iter().map(|f| f.as_str()).collect();
        let sides: Vec<&str> = ProductSideId::ALL.iter().map(|p| p.as_str()).collect();
        Err(format!("unknown family {s:?}; expected one of {}, {}", families.join(", "), sides.join(", ")))
    }
}

/// Failures after parsing. Usage errors exit 64, the rest 1.
enum CliError {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<CombError> for CliError {
    fn from(e: CombError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out);
    let flushed = out.flush();
    match result {
        Ok(code) => {
            if flushed.is_err() {
                return ExitCode::FAILURE;
            }
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                CliError::Usage(_) => EXIT_USAGE,
                CliError::Io(_) => 1,
            })
        }
    }
}

fn run(command: Command, out: &mut impl Write) -> Result<u8, CliError> {
    match command {
        Command::Verify(args) => verify(args, out),
        Command::Enumerate(args) => enumerate(args, out),
        Command::Bijection(args) => bijection(args, out),
        Command::Table(args) => table(args, out),
        Command::Lemmas(args) => lemmas(args, out),
    }
}

fn verify(args: VerifyArgs, out: &mut impl Write) -> Result<u8, CliError> {
    let bounds = match (args.profile, args.max_q, args.max_d) {
        (Some(p), _, _) => p.bounds(),
        (None, None, None) => Profile::Standard.bounds(),
        (None, q, d) => {
            // Audits keep the standard caps; they grow much faster than the series.
            let standard = Profile::Standard.bounds();
            let q = q.unwrap_or(standard.q);
            VerifyBounds { q, d: d.unwrap_or(standard.d), n_dilated: q, ..standard }
        }
    };
    let ids: Vec<CaseId> = if args.all { CaseId::ALL.to_vec() } else { args.case };
    let reports = verify_many(&ids, &bounds);
    match args.format {
        Format::Json => {
            let list: Vec<Value> = reports.iter().map(|r| r.to_json(args.timings)).collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&list).expect("json"))?;
        }
        Format::Text => {
            for r in &reports {
                if args.timings {
                    writeln!(out, "{}  [{:.1} ms]", describe(r), r.wall_time.as_secs_f64() * 1e3)?;
                } else {
                    writeln!(out, "{}", describe(r))?;
                }
            }
            let count = |v: Verdict| reports.iter().filter(|r| r.verdict == v).count();
            writeln!(
                out,
                "{} pass, {} fail, {} blocked",
                count(Verdict::Pass),
                count(Verdict::Fail),
                count(Verdict::Blocked)
            )?;
        }
    }
    Ok(exit_status(&reports) as u8)
}

fn enumerate(args: EnumerateArgs, out: &mut impl Write) -> Result<u8, CliError> {
    let mut poly = AbdPoly::new();
    let mut total = 0u64;
    let mut emit = |text: String, json: Value, k: u32, i: u32, j: u32, out: &mut dyn Write| -> io::Result<()> {
        total += 1;
        *poly.entry((i, j, k)).or_default() += 1;
        match args.format {
            Format::Text => writeln!(out, "{text}"),
            Format::Json => writeln!(out, "{json}"),
        }
    };
    match args.family {
        Source::Family(id) => {
            let spec = id.spec();
            let colored = spec.colored();
            for lambda in enumerate_family(&spec, args.n, args.max_d)? {
                let s = spec.stats(&lambda.parts);
                emit(lambda.render(colored), lambda.to_json(colored, s), s.k, s.i, s.j, out)?;
            }
        }
        Source::Side(side) => {
            for lambda in side.enumerate(args.n) {
                let s = side.stats(&lambda);
                if args.max_d.is_some_and(|k| s.k > k) {
                    continue;
                }
                let jagged = lambda.as_jagged();
                emit(jagged.render(false), jagged.to_json(false, s), s.k, s.i, s.j, out)?;
            }
        }
    }
    match args.format {
        Format::Text => writeln!(out, "# total={total} gen_poly={}", render_poly(&poly))?,
        Format::Json => writeln!(out, "{}", json!({"summary": {"total": total, "gen_poly": poly_json(&poly)}}))?,
    }
    Ok(0)
}

fn bijection(args: BijectionArgs, out: &mut impl Write) -> Result<u8, CliError> {
    let k = args.max_d.unwrap_or(args.n);
    let report = bijection_audit(args.variant, args.n, k).map_err(|e| CliError::Usage(e.to_string()))?;
    writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("json"))?;
    if let Some(reason) = report.reason.as_deref().filter(|_| !report.passed()) {
        eprintln!("audit failed: {reason}");
    }
    Ok(if report.passed() { 0 } else { 1 })
}

fn table(args: TableArgs, out: &mut impl Write) -> Result<u8, CliError> {
    let TableFormat::Csv = args.format;
    let table: CountTable = match args.family {
        Source::Family(id) => family_table(&id.spec(), args.max_n, args.max_d)?,
        Source::Side(side) => {
            let mut t = side.table(args.max_n);
            if let Some(k) = args.max_d {
                t.retain(|(_, s), _| s.k <= k);
            }
            t
        }
    };
    writeln!(out, "n,k,i,j,count")?;
    for ((n, s), c) in &table {
        writeln!(out, "{n},{},{},{},{c}", s.k, s.i, s.j)?;
    }
    Ok(0)
}

fn lemmas(args: LemmasArgs, out: &mut impl Write) -> Result<u8, CliError> {
    let report = lemma_suite(&LemmaBounds::default());
    match args.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("json"))?,
        Format::Text => {
            for r in &report.results {
                let verdict = if r.passed { "pass" } else { "fail" };
                write!(out, "{:<28} {:<5} {} instances", r.name, verdict, r.instances)?;
                match &r.failure {
                    Some(f) => writeln!(out, "  first failure: {f}")?,
                    None => writeln!(out)?,
                }
            }
        }
    }
    Ok(if report.all_pass() { 0 } else { 1 })
}

/// `3*a*b^2*d + a + 1`; terms in `(i, j, k)` order.
fn render_poly(poly: &AbdPoly) -> String {
    let terms: Vec<String> = poly
        .iter()
        .filter(|(_, c)| **c != 0.into())
        .map(|(&(i, j, k), c)| {
            let mut factors: Vec<String> = Vec::new();
            for (var, e) in [("a", i), ("b", j), ("d", k)] {
                match e {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    _ => factors.push(format!("{var}^{e}")),
                }
            }
            let one = *c == 1.into();
            match (factors.is_empty(), one) {
                (true, _) => c.to_string(),
                (false, true) => factors.join("*"),
                (false, false) => format!("{c}*{}", factors.join("*")),
            }
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

fn poly_json(poly: &AbdPoly) -> Value {
    poly.iter()
        .map(|(&(i, j, k), c)| json!({"i": i, "j": j, "k": k, "c": c.to_string()}))
        .collect()
}
