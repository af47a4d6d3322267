use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cloop::cfs;
use cloop::extension::extract_factor_set;
use cloop::identities::Identity;
use cloop::report::Report;
use cloop::steiner::{self, SteinerTripleSystem};
use cloop::{fixtures, invariants, iso, Error, LoopTable, Result, SignedTable};

#[derive(Parser)]
#[command(name = "cloop", version, about = "Finite loops, C-loops and their extensions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a .loop table and report identities and invariants.
    Check {
        table: PathBuf,
        /// Check a single identity, e.g. `flexible` or `exponent(4)`.
        #[arg(long)]
        only: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Build the extension loop of a .cfs factor set.
    Extend {
        cfs: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Read a factor set off a C-loop relative to a nuclear normal subgroup.
    Extract {
        table: PathBuf,
        /// Elements of the subgroup, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        k: Vec<usize>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Cayley-Dickson signed basis tables.
    Cd {
        #[arg(long)]
        level: u32,
        #[arg(long, value_enum, default_value_t = Emit::Constants)]
        emit: Emit,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Steiner loop of a .sts file, or a shipped table.
    Steiner {
        #[arg(long, conflicts_with = "builtin", required_unless_present = "builtin")]
        sts: Option<PathBuf>,
        /// One of steiner10, table1_16, sedenion_table2.
        #[arg(long)]
        builtin: Option<String>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// C-loop with an associator of order n.
    Assoc {
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Search for an isomorphism between two .loop tables.
    Iso { a: PathBuf, b: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Constants,
    Loop,
}

fn read_loop(path: &Path) -> Result<LoopTable> {
    LoopTable::parse(&fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?)
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Check { table, only, json } => {
            let l = read_loop(&table)?;
            let report = match only {
                Some(name) => Report::only(&l, name.parse::<Identity>()?),
                None => Report::full(&l),
            };
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{report}");
            }
        }
        Command::Extend { cfs: path, out } => {
            let fs = cfs::read_cfs(&path)?.validate()?;
            emit(&fs.build_extension().table.to_loop_string(), out.as_deref())?;
        }
        Command::Extract { table, k, out } => {
            let l = read_loop(&table)?;
            let ex = extract_factor_set(&l, &k, None)?;
            emit(&cfs::render_cfs(&ex.factor_set), out.as_deref())?;
        }
        Command::Cd { level, emit: what, out } => {
            let t = SignedTable::level(level)?;
            let text = match what {
                Emit::Constants => t.render_constants(),
                Emit::Loop => t.signed_loop().to_loop_string(),
            };
            emit(&text, out.as_deref())?;
        }
        Command::Steiner { sts, builtin, out } => {
            let l = match (sts, builtin) {
                (Some(p), _) => steiner::steiner_loop(&SteinerTripleSystem::parse(&fs::read_to_string(&p)?)?),
                (None, Some(name)) => fixtures::builtin(&name)?,
                (None, None) => unreachable!("clap requires one of --sts/--builtin"),
            };
            emit(&l.to_loop_string(), out.as_deref())?;
        }
        Command::Assoc { n, out } => {
            let l = steiner::assoc_loop(n)?;
            let orders = invariants::associator_order_spectrum(&l)?;
            let achieved = if orders.contains(&n) { n } else { *orders.iter().max().unwrap_or(&1) };
            if let Some(p) = out {
                emit(&l.to_loop_string(), Some(&p))?;
            }
            println!("order: {}", l.order());
            println!("associator order: {achieved}");
        }
        Command::Iso { a, b } => {
            let (a, b) = (read_loop(&a)?, read_loop(&b)?);
            match iso::find_isomorphism(&a, &b)? {
                Some(phi) => {
                    let pairs: Vec<String> = phi.iter().enumerate().map(|(x, y)| format!("{x}->{y}")).collect();
                    println!("{}", pairs.join(" "));
                }
                None => println!("none"),
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
