//! `parampit`: identity testing for low-degree circuits and parameterized
//! permanent/determinant computation from the command line.
//!
//! Exit codes: 0 when a result was computed (a NONZERO verdict included),
//! 1 on I/O, parse or usage errors, 2 when an input violates a
//! precondition, 3 when a resource guard refuses the work.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use parampit::circuit::Circuit;
use parampit::field::PrimeField;
use parampit::permdet::{
    count_k_matchings, matchings_to_pperm, pdet_bruteforce, pdet_interpolation, pperm_bruteforce,
    pperm_to_matchings, BipartiteGraph, IntMatrix,
};
use parampit::pit::{self, Mode, PitConfig, PitReport, DEFAULT_INTEGER_ROUNDS, DEFAULT_TRIALS};
use parampit::{Execution, DEFAULT_ENUMERATION_LIMIT};
use serde_json::json;

#[derive(Parser, Debug)]
#[command(
    name = "parampit",
    version,
    about = "Parameterized identity testing and p-det/p-perm"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Test whether a circuit of syntactic degree <= k computes the zero polynomial
    Pit(PitArgs),
    /// Print the syntactic degree of a circuit
    Syntdeg {
        /// Circuit file
        circuit: PathBuf,
    },
    /// Sum of signed weights of k-permutations of a matrix
    Pdet(PdetArgs),
    /// Sum of weights of k-permutations of a matrix
    Pperm(MatrixArgs),
    /// Weighted number of k-matchings of a bipartite graph
    Matchings(GraphArgs),
    /// Translate between matrix and graph instances
    Reduce(ReduceArgs),
}

#[derive(clap::Args, Debug)]
struct PitArgs {
    /// Circuit file
    circuit: PathBuf,
    /// Degree parameter; the circuit's syntactic degree must not exceed it
    #[arg(long)]
    k: u64,
    /// Tester to run
    #[arg(long, value_enum, default_value_t = ModeArg::Randomized)]
    mode: ModeArg,
    /// Field modulus, a prime below 2^62
    #[arg(long, default_value_t = PrimeField::mersenne61().modulus())]
    prime: u64,
    /// Master seed; drawn at random and logged to stderr when omitted
    #[arg(long)]
    seed: Option<u64>,
    /// Independent trials in randomized mode
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    trials: u32,
    /// |T| for randomized mode, |S| for the exhaustive modes
    #[arg(long)]
    set_size: Option<u64>,
    /// Test over the integers by repeating the randomized test modulo random 62-bit primes
    #[arg(long)]
    integer: bool,
    /// Number of primes used by --integer
    #[arg(long, default_value_t = DEFAULT_INTEGER_ROUNDS, requires = "integer")]
    rounds: u32,
    #[command(flatten)]
    common: Common,
}

#[derive(clap::Args, Debug)]
struct Common {
    /// Print a JSON report
    #[arg(long)]
    json: bool,
    /// Run every loop on the calling thread
    #[arg(long)]
    sequential: bool,
    /// Largest number of points, permutations or search nodes to enumerate
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_LIMIT)]
    limit: u64,
}

impl Common {
    fn execution(&self) -> Execution {
        if self.sequential {
            Execution::Sequential
        } else {
            Execution::Parallel
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Randomized,
    ExhaustiveWeightk,
    ExhaustiveGrid,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Randomized => Mode::Randomized,
            ModeArg::ExhaustiveWeightk => Mode::ExhaustiveWeightK,
            ModeArg::ExhaustiveGrid => Mode::ExhaustiveGrid,
        }
    }
}

#[derive(clap::Args, Debug)]
struct MatrixArgs {
    /// Matrix file: `n`, then n rows of integers
    matrix: PathBuf,
    /// Number of moved points
    #[arg(long)]
    k: usize,
    #[command(flatten)]
    common: Common,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Method {
    /// Enumerate all k-permutations
    Brute,
    /// Read the coefficient off det(I + xA') by interpolation
    Interp,
}

#[derive(clap::Args, Debug)]
struct PdetArgs {
    #[command(flatten)]
    matrix: MatrixArgs,
    /// Algorithm used to compute the value
    #[arg(long, value_enum, default_value_t = Method::Interp)]
    method: Method,
}

#[derive(clap::Args, Debug)]
struct GraphArgs {
    /// Graph file: `n m`, then m lines `u v w`
    graph: PathBuf,
    /// Matching size
    #[arg(long)]
    k: usize,
    /// Print a JSON report
    #[arg(long)]
    json: bool,
    /// Largest number of search nodes to visit
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_LIMIT)]
    limit: u64,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Direction {
    /// Matrix in, bipartite graph of its off-diagonal entries out
    ToMatchings,
    /// Graph with loops in, matrix of order 2n out
    FromMatchings,
}

#[derive(clap::Args, Debug)]
struct ReduceArgs {
    #[arg(value_enum)]
    direction: Direction,
    /// Matrix file for to-matchings, graph file for from-matchings
    input: PathBuf,
    /// Write here instead of stdout
    #[arg(long, short)]
    output: Option<PathBuf>,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_circuit(path: &Path) -> Result<Circuit> {
    let text = read(path)?;
    text.parse::<Circuit>()
        .with_context(|| format!("in circuit file {}", path.display()))
}

fn load_matrix(path: &Path) -> Result<IntMatrix> {
    let text = read(path)?;
    text.parse::<IntMatrix>()
        .with_context(|| format!("in matrix file {}", path.display()))
}

fn load_graph(path: &Path) -> Result<BipartiteGraph> {
    let text = read(path)?;
    text.parse::<BipartiteGraph>()
        .with_context(|| format!("in graph file {}", path.display()))
}

fn print_json(value: &serde_json::Value) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn tuple(values: impl IntoIterator<Item = u64>) -> String {
    let parts: Vec<String> = values.into_iter().map(|v| v.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn print_report(r: &PitReport) {
    println!("verdict: {}", r.verdict);
    if let Some(w) = &r.witness {
        println!(
            "witness: {} -> {}",
            tuple(w.point.iter().map(|x| x.value())),
            w.value
        );
        if let Some(s) = &w.seed {
            println!(
                "seed point: y = {}, z = {}",
                tuple(s.y.iter().map(|x| x.value())),
                tuple(s.z.iter().map(|x| x.value()))
            );
        }
    }
    println!("mode: {}", r.mode);
    println!("n = {}, k = {}, syntdeg = {}", r.n, r.k, r.syntdeg);
    println!("prime: {}", r.prime);
    if let Some(int) = &r.integer {
        println!("primes: {}", tuple(int.primes.iter().copied()));
        println!("prime selection bits: {}", int.prime_selection_bits);
    }
    println!("trials: {}", r.trials_run);
    println!("random bits: {}", r.random_bits_used);
    println!("error bound: {}", r.error_bound);
    if let Some(seed) = r.seed {
        println!("seed: {seed}");
    }
}

fn cmd_pit(args: &PitArgs) -> Result<()> {
    let circuit = load_circuit(&args.circuit)?;
    let mode = Mode::from(args.mode);
    let randomized = mode == Mode::Randomized;
    let seed = match args.seed {
        Some(s) => s,
        None => {
            let s = rand::random::<u64>();
            if randomized {
                eprintln!("seed: {s}");
            }
            s
        }
    };
    if args.integer && !randomized {
        anyhow::bail!(parampit::Error::Config(
            "--integer applies to randomized mode only".into()
        ));
    }
    let cfg = PitConfig {
        trials: args.trials,
        set_size: args.set_size,
        seed,
        mode,
        field: PrimeField::new(args.prime)?,
        execution: args.common.execution(),
        enumeration_limit: args.common.limit,
    };
    let report = if args.integer {
        pit::pit_integer(&circuit, args.k, &cfg, args.rounds)?
    } else {
        pit::run(&circuit, args.k, &cfg)?
    };
    if args.common.json {
        print_json(&report.to_json())
    } else {
        print_report(&report);
        Ok(())
    }
}

fn print_value(
    json: bool,
    quantity: &str,
    k: usize,
    method: Option<&str>,
    value: impl std::fmt::Display,
) -> Result<()> {
    if json {
        let mut out = json!({ "quantity": quantity, "k": k, "value": value.to_string() });
        if let Some(m) = method {
            out["method"] = json!(m);
        }
        print_json(&out)
    } else {
        println!("{value}");
        Ok(())
    }
}

fn cmd_pdet(args: &PdetArgs) -> Result<()> {
    let m = &args.matrix;
    let a = load_matrix(&m.matrix)?;
    let (value, method) = match args.method {
        Method::Brute => (
            pdet_bruteforce(&a, m.k, m.common.execution(), m.common.limit)?,
            "brute",
        ),
        Method::Interp => (pdet_interpolation(&a, m.k, m.common.execution())?, "interp"),
    };
    print_value(m.common.json, "p-det", m.k, Some(method), value)
}

fn cmd_pperm(args: &MatrixArgs) -> Result<()> {
    let a = load_matrix(&args.matrix)?;
    let value = pperm_bruteforce(&a, args.k, args.common.execution(), args.common.limit)?;
    print_value(args.common.json, "p-perm", args.k, None, value)
}

fn cmd_matchings(args: &GraphArgs) -> Result<()> {
    let g = load_graph(&args.graph)?;
    let value = count_k_matchings(&g, args.k, args.limit)?;
    print_value(args.json, "k-matchings", args.k, None, value)
}

fn cmd_reduce(args: &ReduceArgs) -> Result<()> {
    let text = match args.direction {
        Direction::ToMatchings => pperm_to_matchings(&load_matrix(&args.input)?)?.to_string(),
        Direction::FromMatchings => matchings_to_pperm(&load_graph(&args.input)?)?.to_string(),
    };
    match &args.output {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<parampit::Error>() {
        Some(parampit::Error::TooLarge(_)) => 3,
        Some(e) if e.is_precondition() => 2,
        _ => 1,
    }
}

fn hint(err: &anyhow::Error) -> Option<&'static str> {
    match err.downcast_ref::<parampit::Error>()? {
        parampit::Error::TooLarge(_) => Some(
            "hint: lower k, use `--method interp` for p-det, or raise `--limit` if you can wait",
        ),
        parampit::Error::ParameterViolation { .. } => {
            Some("hint: k must be at least the syntactic degree (see `parampit syntdeg`)")
        }
        _ => None,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.command {
        Command::Pit(args) => cmd_pit(args),
        Command::Syntdeg { circuit } => load_circuit(circuit).map(|c| println!("{}", c.syntdeg())),
        Command::Pdet(args) => cmd_pdet(args),
        Command::Pperm(args) => cmd_pperm(args),
        Command::Matchings(args) => cmd_matchings(args),
        Command::Reduce(args) => cmd_reduce(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            if let Some(h) = hint(&err) {
                eprintln!("{h}");
            }
            ExitCode::from(exit_code(&err))
        }
    }
}
