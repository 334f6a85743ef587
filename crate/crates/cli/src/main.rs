//! `lg`: command-line front end for the LG engine.
//!
//! Exit codes: 0 positive, 1 negative, 2 inconclusive (budget), 3 usage or
//! input error. Artifacts go to stdout, diagnostics to stderr.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lg_core::calculus::{from_json, to_json, to_latex, to_text};
use lg_core::prover::GoalStats;
use lg_core::reduction::{parse_dimacs, reduce, Cnf};
use lg_core::witness::{brute_force_sat, build_witness, roundtrip, Assignment, VerdictKind};
use lg_core::{check, parse_sequent, stats, BudgetKind, Budgets, Derivation, ProveOutcome, Prover, Sequent};

const POSITIVE: u8 = 0;
const NEGATIVE: u8 = 1;
const INCONCLUSIVE: u8 = 2;
const USAGE: u8 = 3;

#[derive(Parser)]
#[command(name = "lg", version, about = "Decide, check and export Lambek-Grishin derivations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Json,
    Latex,
    Text,
}

#[derive(clap::Args)]
struct BudgetArgs {
    /// Maximum number of Grishin interactions (default: from the goal's length)
    #[arg(long)]
    grishin: Option<usize>,
    /// Maximum derivation height (default: from the goal's length)
    #[arg(long)]
    depth: Option<usize>,
    /// Maximum number of search expansions
    #[arg(long)]
    nodes: Option<usize>,
}

impl BudgetArgs {
    fn resolve(&self, goal: &Sequent) -> Budgets {
        let d = Budgets::for_goal(goal);
        Budgets {
            grishin_max: self.grishin.unwrap_or(d.grishin_max),
            depth_max: self.depth.unwrap_or(d.depth_max),
            node_max: self.nodes.unwrap_or(d.node_max),
        }
    }

    fn given(&self) -> bool {
        self.grishin.is_some() || self.depth.is_some() || self.nodes.is_some()
    }
}

#[derive(Subcommand)]
enum Command {
    /// Search for a Cut-free derivation of a sequent
    Prove {
        /// The sequent, or @FILE to read it from a file
        sequent: String,
        #[command(flatten)]
        budgets: BudgetArgs,
        #[arg(long, value_enum, default_value = "text")]
        emit: Emit,
    },
    /// Validate a derivation stored as JSON
    Check {
        derivation: PathBuf,
        #[arg(long)]
        allow_cut: bool,
    },
    /// Print the sequent encoding a DIMACS CNF
    Reduce {
        cnf: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Emit the derivation induced by a satisfying assignment
    Witness {
        cnf: PathBuf,
        /// Comma-separated 0/1 values; default: first satisfying assignment
        #[arg(long)]
        assignment: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        emit: Emit,
    },
    /// Decide a CNF both by enumeration and by proof search, and compare
    Roundtrip {
        cnf: PathBuf,
        #[command(flatten)]
        budgets: BudgetArgs,
    },
    /// Connective counts and default search budgets of a sequent
    Stats {
        /// The sequent, or @FILE to read it from a file
        sequent: String,
    },
}

struct Failure(u8, String);

type Outcome = Result<u8, Failure>;

fn usage(msg: impl std::fmt::Display) -> Failure {
    Failure(USAGE, msg.to_string())
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn sequent_arg(arg: &str) -> Result<Sequent, Failure> {
    let text = match arg.strip_prefix('@') {
        Some(path) => read(Path::new(path))?,
        None => arg.to_string(),
    };
    parse_sequent(text.trim()).map_err(|e| usage(format!("cannot parse sequent: {e}")))
}

fn cnf_arg(path: &Path) -> Result<Cnf, Failure> {
    parse_dimacs(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn render(d: &Derivation, emit: Emit) -> String {
    match emit {
        Emit::Json => {
            let mut s = to_json(d);
            s.push('\n');
            s
        }
        Emit::Latex => to_latex(d),
        Emit::Text => to_text(d),
    }
}

fn budget_code(kind: BudgetKind) -> Outcome {
    eprintln!("inconclusive: {} budget exceeded", kind.name());
    Ok(INCONCLUSIVE)
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Prove { sequent, budgets, emit } => {
            let goal = sequent_arg(&sequent)?;
            match Prover::new(budgets.resolve(&goal)).prove(&goal) {
                ProveOutcome::Proved(d) => {
                    let report = check(&d, false);
                    if !report.ok {
                        return Err(Failure(INCONCLUSIVE, format!("internal error: derivation rejected: {:?}", report.first_error)));
                    }
                    print!("{}", render(&d, emit));
                    eprintln!("proved: {} logical, {} Grishin, {} display steps", report.logical_count, report.grishin_count, report.display_count);
                    Ok(POSITIVE)
                }
                ProveOutcome::Unprovable => {
                    eprintln!("unprovable");
                    Ok(NEGATIVE)
                }
                ProveOutcome::BudgetExceeded(kind) => budget_code(kind),
            }
        }
        Command::Check { derivation, allow_cut } => {
            let d = from_json(&read(&derivation)?).map_err(|e| usage(format!("{}: {e}", derivation.display())))?;
            let r = check(&d, allow_cut);
            match r.first_error {
                None => {
                    println!("valid: {}", d.conclusion);
                    println!(
                        "logical {} grishin {} display {} cut {} height {}",
                        r.logical_count,
                        r.grishin_count,
                        r.display_count,
                        r.cut_count,
                        d.height()
                    );
                    Ok(POSITIVE)
                }
                Some(e) => {
                    println!("invalid at {}: {}", e.path, e.message);
                    Ok(NEGATIVE)
                }
            }
        }
        Command::Reduce { cnf, output } => {
            let seq = reduce(&cnf_arg(&cnf)?).to_string();
            match output {
                Some(path) => fs::write(&path, format!("{seq}\n")).map_err(|e| usage(format!("{}: {e}", path.display())))?,
                None => println!("{seq}"),
            }
            Ok(POSITIVE)
        }
        Command::Witness { cnf, assignment, emit } => {
            let cnf = cnf_arg(&cnf)?;
            let a = match assignment {
                Some(text) => text.parse::<Assignment>().map_err(usage)?,
                None => match brute_force_sat(&cnf).map_err(usage)? {
                    Some(a) => a,
                    None => {
                        eprintln!("unsatisfiable: no witness exists");
                        return Ok(NEGATIVE);
                    }
                },
            };
            match build_witness(&cnf, &a) {
                Ok(d) => {
                    print!("{}", render(&d, emit));
                    eprintln!("witness for assignment {a}");
                    Ok(POSITIVE)
                }
                Err(e @ lg_core::witness::WitnessError::Length { .. }) => Err(usage(e)),
                Err(e) => {
                    eprintln!("{e}");
                    Ok(NEGATIVE)
                }
            }
        }
        Command::Roundtrip { cnf, budgets } => {
            let cnf = cnf_arg(&cnf)?;
            let b = budgets.given().then(|| budgets.resolve(&reduce(&cnf)));
            let v = roundtrip(&cnf, b).map_err(usage)?;
            println!("{}", v.kind().describe());
            match &v.sat {
                Some(a) => eprintln!("satisfiable with {a}"),
                None => eprintln!("unsatisfiable"),
            }
            Ok(match v.kind() {
                VerdictKind::BothPositive | VerdictKind::BothNegative => POSITIVE,
                VerdictKind::Inconsistent => NEGATIVE,
                VerdictKind::Inconclusive => INCONCLUSIVE,
            })
        }
        Command::Stats { sequent } => {
            let goal = sequent_arg(&sequent)?;
            let GoalStats { length, census, budgets } = stats(&goal);
            println!("length {length}");
            println!("formula connectives {}", census.formula_total);
            println!("structural connectives {}", census.structural_total);
            println!("input family {}", census.input_family);
            println!("output family {}", census.output_family);
            println!("grishin budget {}", budgets.grishin_max);
            println!("depth budget {}", budgets.depth_max);
            Ok(POSITIVE)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { POSITIVE };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
