//! Command-line surface for the bicellular map engines: compute one
//! polynomial, cross-verify the engines against each other, evaluate a
//! character, or emit the census table.

use std::io::{IsTerminal, Write};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use bicellular::bicellular::{poly_closed, poly_connected, BicellularInstance};
use bicellular::charlib::mn_character;
use bicellular::charsum::poly_charsum;
use bicellular::combinat::Partition;
use bicellular::oracle::{oracle_poly_with_limit, DEFAULT_MAX_CLASS_SIZE};
use bicellular::Error;

use bicellular_cli::report::{self, csv_line, render_text, Method, PolyReport, CSV_HEADER};
use bicellular_cli::verify::{self, Suite};
use bicellular_cli::census;

#[derive(Parser)]
#[command(
    name = "bicellular",
    version,
    about = "Exact genus distributions of two-face bicolored maps"
)]
struct Cli {
    /// Worker threads for instance-level parallelism (0 = all cores)
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,

    /// Largest conjugacy class the brute-force oracle will stream
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_CLASS_SIZE)]
    max_class_size: u64,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute the genus distribution polynomial of one instance
    Poly(PolyArgs),
    /// Cross-verify the engines over all valid instances up to a bound
    Verify(VerifyArgs),
    /// Evaluate one irreducible symmetric-group character
    Char(CharArgs),
    /// Emit the census CSV over all valid instances up to a bound
    Census(CensusArgs),
}

#[derive(Args)]
struct PolyArgs {
    /// Number of edges
    #[arg(long)]
    n: usize,
    /// Length of one face (the other face has length n-p)
    #[arg(long)]
    p: usize,
    /// White vertex degree distribution, e.g. "5,3" or "2^3,1"
    #[arg(long)]
    mu: String,
    /// closed (default; falls back to charsum when min(mu) <= p),
    /// charsum, or oracle
    #[arg(long, value_enum, default_value_t = Method::Closed)]
    method: Method,
    /// Count only connected maps (oracle restricts pairs; in the closed-form
    /// regime connected and unrestricted counts coincide)
    #[arg(long)]
    connected: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 8)]
    max_n: usize,
    #[arg(long, value_enum, default_value_t = Suite::All)]
    suite: Suite,
}

#[derive(Args)]
struct CharArgs {
    /// Partition indexing the irreducible representation
    #[arg(long)]
    lambda: String,
    /// Cycle-type of the conjugacy class
    #[arg(long)]
    mu: String,
}

#[derive(Args)]
struct CensusArgs {
    #[arg(long, default_value_t = 8)]
    max_n: usize,
    /// Output path (standard output when omitted)
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

/// Exit codes: 0 success, 1 internal error or failed verification,
/// 2 bad input, 3 oracle guard exceeded, 4 I/O.
fn exit_code(err: &Error) -> i32 {
    match err {
        Error::GuardExceeded { .. } => 3,
        Error::Internal(_) => 1,
        _ => 2,
    }
}

fn fail(code: i32, msg: impl std::fmt::Display) -> ! {
    eprintln!("error: {msg}");
    std::process::exit(code);
}

fn parse_partition(s: &str, what: &str) -> Partition {
    match s.parse::<Partition>() {
        Ok(p) => p,
        Err(e) => fail(2, format!("bad {what}: {e}")),
    }
}

fn main() {
    let cli = Cli::parse();
    if cli.threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global()
            .unwrap_or_else(|e| fail(1, e));
    }
    match cli.cmd {
        Cmd::Poly(args) => cmd_poly(args, cli.max_class_size),
        Cmd::Verify(args) => cmd_verify(args),
        Cmd::Char(args) => cmd_char(args),
        Cmd::Census(args) => cmd_census(args),
    }
}

fn cmd_poly(args: PolyArgs, max_class_size: u64) -> ! {
    let mu = parse_partition(&args.mu, "--mu");
    let inst = match BicellularInstance::new(args.n, args.p, mu) {
        Ok(i) => i,
        Err(e) => fail(2, e),
    };
    let mut method = args.method;
    if method == Method::Closed && !inst.closed_form_valid() {
        eprintln!(
            "warning: min(mu) = {} <= p = {}, outside the closed-form regime; \
             falling back to the character-sum engine",
            inst.mu().min_part(),
            inst.p()
        );
        method = Method::Charsum;
    }
    if args.connected && method == Method::Charsum && !inst.closed_form_valid() {
        fail(
            2,
            "connected counts outside the closed-form regime need --method oracle",
        );
    }
    let start = Instant::now();
    let poly = match method {
        Method::Closed => {
            if args.connected {
                poly_connected(&inst)
            } else {
                poly_closed(&inst)
            }
        }
        Method::Charsum => poly_charsum(inst.n(), &inst.face_type(), inst.mu()),
        Method::Oracle => oracle_poly_with_limit(
            inst.n(),
            &inst.face_type(),
            inst.mu(),
            args.connected,
            max_class_size,
        ),
    };
    let poly = match poly {
        Ok(p) => p,
        Err(e) => fail(exit_code(&e), e),
    };
    let ms = start.elapsed().as_millis() as u64;
    let report = PolyReport::build(inst.n(), inst.p(), inst.mu(), method, &poly, ms);
    match args.format {
        Format::Text => print!("{}", render_text(&report, &poly)),
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string(&report).expect("serializable report")
            )
        }
        Format::Csv => {
            println!("{CSV_HEADER}");
            let genus = report::genus_table(inst.n(), inst.mu(), &poly);
            println!(
                "{}",
                csv_line(
                    inst.n(),
                    inst.p(),
                    inst.mu(),
                    &poly,
                    &genus,
                    report.checks,
                    method,
                    &ms.to_string(),
                )
            );
        }
    }
    std::process::exit(0);
}

fn cmd_char(args: CharArgs) -> ! {
    let lambda = parse_partition(&args.lambda, "--lambda");
    let mu = parse_partition(&args.mu, "--mu");
    match mn_character(&lambda, &mu) {
        Ok(v) => {
            println!("{v}");
            std::process::exit(0);
        }
        Err(e) => fail(2, e),
    }
}

fn styled(label: &str, color: &str) -> String {
    let want_color = std::io::stdout().is_terminal() && std::env::var_os("NO_COLOR").is_none();
    if want_color {
        format!("\x1b[{color}m{label}\x1b[0m")
    } else {
        label.to_string()
    }
}

fn cmd_verify(args: VerifyArgs) -> ! {
    let outcomes = verify::run(args.max_n, args.suite);
    let mut failures = 0usize;
    for o in &outcomes {
        match &o.failure {
            None => println!("{} {:<12} {}", styled("PASS", "32"), o.suite, o.instance),
            Some(record) => {
                failures += 1;
                println!(
                    "{} {:<12} {}: {record}",
                    styled("FAIL", "31"),
                    o.suite,
                    o.instance
                );
            }
        }
    }
    println!(
        "{} checks, {} failed (max n = {}, suite = {:?})",
        outcomes.len(),
        failures,
        args.max_n,
        args.suite
    );
    std::process::exit(if failures == 0 { 0 } else { 1 });
}

fn cmd_census(args: CensusArgs) -> ! {
    let table = census::render(args.max_n);
    match &args.out {
        None => {
            print!("{table}");
            std::process::exit(0);
        }
        Some(path) => {
            let result =
                std::fs::File::create(path).and_then(|mut f| f.write_all(table.as_bytes()));
            match result {
                Ok(()) => std::process::exit(0),
                Err(e) => fail(4, format!("cannot write {}: {e}", path.display())),
            }
        }
    }
}
