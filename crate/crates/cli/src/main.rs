use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hambypass::conditions::condition_report;
use hambypass::connectivity::{is_k_strong, is_strong, strong_components_ordered};
use hambypass::families::{generate, recognize_all};
use hambypass::io::{encode_digraph6, encode_edge_list, read_digraph};
use hambypass::search::{
    find_dpn, find_hamiltonian_bypass, find_hamiltonian_cycle, find_hamiltonian_path,
};
use hambypass::verify::{explore_open_problem, sweep, ExploreCondition};
use hambypass::{ClaimId, Digraph, Error, FamilySpec, SweepMode, CANON_MAX_ORDER};

#[derive(Parser)]
#[command(
    name = "hambypass",
    version,
    about = "Hamiltonian bypass search and claim verification for small digraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    D6,
    Edges,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exhaustive,
    Sampled,
}

#[derive(Subcommand)]
enum Command {
    /// Print a family member, e.g. `t5`, `dpk:6,2`, `d0:5`, `kbip:3,3`.
    Gen {
        spec: FamilySpec,
        #[arg(long, value_enum, default_value = "d6")]
        format: Format,
    },
    /// Report degree conditions, connectivity and family membership.
    Check { file: Option<PathBuf> },
    /// Search for a witness: hamcycle, hampath, bypass or dpn:<n>.
    Witness {
        file: Option<PathBuf>,
        #[arg(long)]
        kind: String,
    },
    /// Check a claim on every digraph of an enumeration.
    Verify {
        #[arg(long)]
        claim: ClaimId,
        #[arg(long)]
        p: usize,
        #[arg(long, value_enum, default_value = "exhaustive")]
        mode: Mode,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        count: Option<u64>,
        #[arg(long)]
        workers: Option<usize>,
        /// Required for exhaustive sweeps at p = 6.
        #[arg(long)]
        long_running: bool,
    },
    /// List bypass-free digraphs satisfying a condition, up to isomorphism.
    Explore {
        #[arg(long)]
        condition: ExploreCondition,
        #[arg(long)]
        p: usize,
        #[arg(long, default_value_t = 0)]
        budget: u64,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        workers: Option<usize>,
    },
}

enum Failure {
    Usage(String),
    Core(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn read_input(file: Option<&PathBuf>) -> Result<Digraph, Failure> {
    let text = match file {
        Some(path) => std::fs::read_to_string(path)?,
        None => {
            let mut buf = String::new();
            io::stdin().read_to_string(&mut buf)?;
            buf
        }
    };
    Ok(read_digraph(&text)?)
}

fn default_workers(requested: Option<usize>) -> usize {
    requested.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

fn check(g: &Digraph, out: &mut impl Write) -> Result<(), Failure> {
    writeln!(out, "order={}", g.order())?;
    writeln!(out, "arcs={}", g.arc_count())?;
    writeln!(out, "strong={}", is_strong(g))?;
    if g.order() >= 3 {
        writeln!(out, "two_strong={}", is_k_strong(g, 2)?)?;
    }
    let comps = strong_components_ordered(g);
    let listed: Vec<String> = comps
        .components()
        .iter()
        .map(|c| {
            let vs: Vec<String> = c.iter().map(|v| v.to_string()).collect();
            format!("{{{}}}", vs.join(","))
        })
        .collect();
    writeln!(out, "components={}", listed.join(" "))?;
    if g.order() >= 2 {
        let r = condition_report(g)?;
        writeln!(out, "meyniel_deficiency={}", r.meyniel_deficiency)?;
        writeln!(out, "nash_williams={}", r.nash_williams)?;
        writeln!(out, "ghouila_houri={}", r.ghouila_houri)?;
        writeln!(out, "woodall={}", r.woodall)?;
        writeln!(out, "bjgl_51={}", r.bjgl_51)?;
        writeln!(out, "bjgl_52={}", r.bjgl_52)?;
        writeln!(out, "bgy_53={}", r.bgy_53)?;
        writeln!(out, "manoussakis_54={}", r.manoussakis_54)?;
        for note in &r.notes {
            writeln!(out, "note={note}")?;
        }
    }
    if g.order() > CANON_MAX_ORDER {
        writeln!(out, "family=unavailable above order {CANON_MAX_ORDER}")?;
    } else {
        let labels = recognize_all(g)?;
        if labels.is_empty() {
            writeln!(out, "family=none")?;
        }
        for l in labels {
            writeln!(out, "family={}", l.name())?;
        }
    }
    Ok(())
}

fn witness(g: &Digraph, kind: &str, out: &mut impl Write) -> Result<(), Failure> {
    let found = match kind {
        "hamcycle" => find_hamiltonian_cycle(g)?,
        "hampath" => find_hamiltonian_path(g),
        "bypass" => find_hamiltonian_bypass(g)?,
        _ => match kind.strip_prefix("dpn:").map(str::parse::<usize>) {
            Some(Ok(n)) => find_dpn(g, n)?,
            _ => {
                return Err(Failure::Usage(format!(
                    "unknown witness kind {kind:?}; expected hamcycle, hampath, bypass or dpn:<n>"
                )))
            }
        },
    };
    match found {
        Some(w) => writeln!(out, "{w}")?,
        None => writeln!(out, "NONE")?,
    }
    Ok(())
}

fn run(cli: Cli, out: &mut impl Write) -> Result<bool, Failure> {
    match cli.command {
        Command::Gen { spec, format } => {
            let g = generate(&spec)?;
            match format {
                Format::D6 => writeln!(out, "{}", encode_digraph6(&g)?)?,
                Format::Edges => write!(out, "{}", encode_edge_list(&g))?,
            }
            Ok(false)
        }
        Command::Check { file } => {
            check(&read_input(file.as_ref())?, out)?;
            Ok(false)
        }
        Command::Witness { file, kind } => {
            witness(&read_input(file.as_ref())?, &kind, out)?;
            Ok(false)
        }
        Command::Verify {
            claim,
            p,
            mode,
            seed,
            count,
            workers,
            long_running,
        } => {
            let mode = match mode {
                Mode::Exhaustive => {
                    if p >= 6 && !long_running {
                        return Err(Failure::Usage(
                            "exhaustive sweeps at p = 6 need --long-running".into(),
                        ));
                    }
                    SweepMode::Exhaustive
                }
                Mode::Sampled => match (seed, count) {
                    (Some(seed), Some(count)) => SweepMode::Sampled { seed, count },
                    _ => {
                        return Err(Failure::Usage(
                            "sampled mode needs both --seed and --count".into(),
                        ))
                    }
                },
            };
            let report = sweep(p, claim, mode, default_workers(workers))?;
            write!(out, "{}", report.to_record())?;
            eprintln!("wall_time_ms={}", report.wall_time.as_millis());
            Ok(report.counterexample > 0)
        }
        Command::Explore {
            condition,
            p,
            budget,
            seed,
            workers,
        } => {
            let seed = match (p > 5, seed) {
                (true, None) => {
                    return Err(Failure::Usage(
                        "sampled exploration (p > 5) needs --seed".into(),
                    ))
                }
                (_, s) => s.unwrap_or(0),
            };
            let report =
                explore_open_problem(condition, p, budget, seed, default_workers(workers))?;
            write!(out, "{}", report.to_record())?;
            Ok(!report.forms.is_empty())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = run(cli, &mut out);
    let _ = out.flush();
    match result {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(f) => {
            match f {
                Failure::Usage(msg) => eprintln!("error: {msg}"),
                Failure::Core(e) => eprintln!("error: {e}"),
                Failure::Io(e) => eprintln!("error: {e}"),
            }
            ExitCode::from(2)
        }
    }
}
