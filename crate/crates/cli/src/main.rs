use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sln_core::askey_wilson::Convention;
use sln_core::report::Report;
use sln_core::suites::{self, Which};

#[derive(Parser, Debug)]
#[command(name = "sln", version, about = "Exact checks for the sl_N Onsager algebra and its Askey-Wilson quotients")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[arg(long, value_enum, default_value_t = Toggle::On, global = true)]
    parallel: Toggle,

    /// Seed for randomized property subsets. Every current suite is
    /// exhaustive, so it has no effect.
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Toggle {
    On,
    Off,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a verification suite.
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
    /// Extract structure constants.
    Extract {
        #[command(subcommand)]
        target: ExtractTarget,
    },
    /// Conserved charges.
    Charges {
        #[command(subcommand)]
        action: ChargesAction,
    },
}

#[derive(Args, Debug)]
struct NArg {
    #[arg(long)]
    n: usize,
}

#[derive(Subcommand, Debug)]
enum Suite {
    Cybe(NArg),
    NsCybe(NArg),
    Skew(NArg),
    Automorphism {
        #[arg(long, value_parser = parse_which)]
        which: Which,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        levels: i32,
        /// Sign ε of θ2; both signs when absent.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_sign)]
        epsilon: Option<i64>,
    },
    Frt {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        cutoff: i32,
    },
    Onsager {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        levels: i32,
    },
    Reflection {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        cutoff: i32,
    },
    Currents {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        cutoff: i32,
    },
    Charges {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_order: i32,
    },
    Aw(NArg),
}

#[derive(Subcommand, Debug)]
enum ExtractTarget {
    Aw {
        #[arg(long)]
        n: usize,
        /// Sign convention of the ansatz; resolved against the displayed
        /// tables when absent.
        #[arg(long, value_parser = parse_convention)]
        convention: Option<Convention>,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum ChargesAction {
    Print {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_order: i32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_which(s: &str) -> Result<Which, String> {
    s.parse().map_err(|e: sln_core::Error| e.to_string())
}

fn parse_convention(s: &str) -> Result<Convention, String> {
    s.parse().map_err(|e: sln_core::Error| e.to_string())
}

fn parse_sign(s: &str) -> Result<i64, String> {
    match s {
        "+1" | "1" => Ok(1),
        "-1" => Ok(-1),
        _ => Err(format!("expected +1 or -1, got `{s}`")),
    }
}

enum Output {
    Report(Report),
    Charges(sln_core::charges::ChargeTable),
}

fn write_file(path: &PathBuf, contents: &str) -> Result<(), String> {
    std::fs::write(path, contents).map_err(|e| format!("cannot write {}: {e}", path.display()))
}

fn run(cmd: &Command) -> Result<Output, String> {
    let e = |e: sln_core::Error| e.to_string();
    let report = match cmd {
        Command::Verify { suite } => match suite {
            Suite::Cybe(a) => suites::verify_cybe(a.n),
            Suite::NsCybe(a) => suites::verify_ns_cybe(a.n),
            Suite::Skew(a) => suites::verify_skew(a.n),
            Suite::Automorphism { which, n, levels, epsilon } => {
                suites::verify_automorphism(*which, *n, *levels, *epsilon)
            }
            Suite::Frt { n, cutoff } => suites::verify_frt(*n, *cutoff),
            Suite::Onsager { n, levels } => suites::verify_onsager(*n, *levels),
            Suite::Reflection { n, cutoff } => suites::verify_reflection(*n, *cutoff),
            Suite::Currents { n, cutoff } => suites::verify_currents(*n, *cutoff),
            Suite::Charges { n, max_order } => suites::verify_charges(*n, *max_order),
            Suite::Aw(a) => suites::verify_aw(a.n),
        }
        .map_err(e)?,
        Command::Extract { target: ExtractTarget::Aw { n, convention, out } } => {
            let (report, table) = suites::extract_aw(*n, *convention).map_err(e)?;
            if let Some(t) = table {
                write_file(out, &t.to_json())?;
            }
            report
        }
        Command::Charges { action: ChargesAction::Print { n, max_order, out } } => {
            let table = suites::print_charges(*n, *max_order).map_err(e)?;
            if let Some(path) = out {
                let json = serde_json::to_string_pretty(&table).expect("charge table serializes");
                write_file(path, &json)?;
            }
            return Ok(Output::Charges(table));
        }
    };
    Ok(Output::Report(report))
}

fn render_charges(table: &sln_core::charges::ChargeTable, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(table).expect("charge table serializes"),
        Format::Text => {
            let mut s = format!("charges N = {}\n", table.n);
            for c in &table.charges {
                let terms: Vec<String> = c.terms.iter().map(|(sym, coeff)| format!("({coeff}) {sym}")).collect();
                s.push_str(&format!("I_{} = {}\n", c.order, terms.join(" + ")));
            }
            s.trim_end().to_string()
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = match cli.parallel {
        Toggle::On => 0,
        Toggle::Off => 1,
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(p) => p,
        Err(err) => {
            eprintln!("error: cannot start thread pool: {err}");
            return ExitCode::from(2);
        }
    };
    let start = Instant::now();
    let out = pool.install(|| run(&cli.command));
    match out {
        Ok(Output::Report(mut r)) => {
            r.elapsed_ms = start.elapsed().as_millis() as u64;
            match cli.format {
                Format::Json => println!("{}", r.to_json()),
                Format::Text => print!("{}", r.to_text()),
            }
            if r.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Ok(Output::Charges(t)) => {
            println!("{}", render_charges(&t, cli.format));
            ExitCode::SUCCESS
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
