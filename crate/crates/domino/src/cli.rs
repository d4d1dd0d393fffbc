//! Command-line front end: argument parsing, file/stdin input, and JSON or
//! graph6 output for every library operation.
//!
//! Exit codes: 0 on success, 1 on a domain error (bad input data, undefined
//! parameter, cap exceeded), 2 on a usage error, 3 when a verification run
//! completes but the claim failed on some instance.

use std::io::{Read, Write};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{
    domatic_ktuple_exact, full_structure_witness, gamma_ktuple_bnb, gamma_ktuple_bruteforce,
    DominationCertificate, FullWitness,
};
use crate::families::{
    build_domatic_equality_graph, build_full_graph, build_omega, random_omega_params,
    random_theta_params,
};
use crate::gadget::{gadget_gamma_x2_sharded, parse_dimacs_cnf, sat_gadget, GadgetSolveOutcome};
use crate::graph::{
    complete, cycle, emit_edge_list, emit_graph6, parse_edge_list, parse_graph6, path, Graph,
};
use crate::slater::{slater_report, spider_tree, star_plus_path, SCHEMA};
use crate::verify::{verify_theorem, Report, VerifyOptions, DEFAULT_SEED, THEOREM_IDS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN_ERROR: i32 = 1;
pub const EXIT_USAGE_ERROR: i32 = 2;
pub const EXIT_VERIFICATION_FAILED: i32 = 3;

/// Order cap for the `gen` constructors, keeping adjacency storage sane.
const GEN_MAX_N: usize = 10_000;

#[derive(Parser)]
#[command(
    name = "domino",
    version,
    about = "Exact double and k-tuple domination: solvers, bounds, generators, verification",
    after_help = "Graph inputs accept graph6 or an edge list ('n m' header, one 'u v' pair per \
                  line); pass - to read stdin. Structured output is JSON tagged with its schema \
                  version; generated graphs are emitted as graph6."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Degree-sequence lower bounds and boundary checks for one graph (JSON)
    Slater(GraphInput),
    /// Exact k-tuple domination number with an optimality certificate (JSON)
    Gamma {
        #[command(flatten)]
        input: GraphInput,
        /// Domination multiplicity (every vertex needs k closed neighbors in the set)
        #[arg(short, long, default_value_t = 2)]
        k: usize,
        /// Solver to run
        #[arg(long, value_enum, default_value_t = SolverChoice::BranchAndBound)]
        method: SolverChoice,
    },
    /// Exact k-tuple domatic number and a maximum partition (JSON)
    Domatic {
        #[command(flatten)]
        input: GraphInput,
        /// Domination multiplicity required of every part
        #[arg(short, long, default_value_t = 1)]
        k: usize,
    },
    /// Whether the domatic number reaches min degree + 1, with witness (JSON)
    Full(GraphInput),
    /// Emit a generated graph as graph6
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Build the double-domination gadget graph for a 3-CNF formula (graph6)
    Reduce {
        /// DIMACS CNF file, or - for stdin
        input: String,
        /// Destination for the graph6 gadget (default: stdout)
        #[arg(short, long)]
        output: Option<String>,
        /// Also write the vertex-role labels as JSON to this path
        #[arg(long)]
        labels: Option<String>,
    },
    /// Decide whether a formula's gadget has a double dominating set of
    /// size twice the variable count (JSON)
    GadgetSolve {
        /// DIMACS CNF file, or - for stdin
        input: String,
        /// Worker threads (default: DOMINO_JOBS or 1)
        #[arg(long)]
        jobs: Option<usize>,
        /// Destination for the JSON outcome (default: stdout)
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Check one of the library's claims over a graph universe (JSON report)
    Verify {
        /// Claim id: eq1, prop21, prop22, thm-general, thm-t2, thm-t3,
        /// thm-t4, cor-formula, tower, thm-domatic, thm-full, cor-regular-full
        id: String,
        /// Largest order (or factor order) in the scanned universe
        #[arg(long)]
        n_max: usize,
        /// Worker threads for sharded scans (default: DOMINO_JOBS or 1)
        #[arg(long)]
        jobs: Option<usize>,
        /// Seed for the randomized universes
        #[arg(long)]
        seed: Option<u64>,
        /// Destination for the JSON report (default: stdout)
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Re-emit a graph in graph6 or edge-list form
    Convert {
        #[command(flatten)]
        input: GraphInput,
        /// Target format
        #[arg(long, value_enum, default_value_t = ConvertTarget::Graph6)]
        to: ConvertTarget,
    },
    /// List the claim ids accepted by `verify`
    Theorems,
}

#[derive(Args)]
struct GraphInput {
    /// Graph file (graph6 or edge list), or - for stdin
    input: String,
    /// Input format (default: try graph6, then edge list)
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    format: InputFormat,
    /// Destination file (default: stdout)
    #[arg(short, long)]
    output: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    Auto,
    Graph6,
    Edges,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConvertTarget {
    Graph6,
    Edges,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SolverChoice {
    /// Enumerate candidate sets in size order
    BruteForce,
    /// Branch and bound with degree-sequence lower bounds
    BranchAndBound,
}

#[derive(Subcommand)]
enum GenFamily {
    /// Random member of the family attaining the double-domination size bound
    Omega {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Member of the family attaining the k-tuple domatic upper bound:
    /// q-vertex parts, (kr-1)-regular, domatic number r
    Psi {
        #[arg(short, long)]
        k: usize,
        #[arg(short, long)]
        r: usize,
        #[arg(short, long)]
        q: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Random member of the domatically full family
    Theta {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Hub joined to a path on 4b+3 vertices: double Slater number b+2,
    /// beating the max-degree bound by b
    Remark1 {
        #[arg(short, long)]
        b: usize,
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Spider tree on 12b+8 vertices: double Slater number 9b+6, above the
    /// leaf/support bound by b
    Remark2 {
        #[arg(short, long)]
        b: usize,
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Cycle on n >= 3 vertices
    Cycle {
        #[arg(short, long)]
        n: usize,
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Path on n vertices
    Path {
        #[arg(short, long)]
        n: usize,
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Complete graph on n vertices
    Complete {
        #[arg(short, long)]
        n: usize,
        #[arg(short, long)]
        output: Option<String>,
    },
}

/// JSON envelope for the `full` subcommand.
#[derive(Serialize)]
struct FullReport {
    schema: &'static str,
    full: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<FullWitness>,
}

/// JSON envelope for the `gadget-solve` subcommand.
#[derive(Serialize)]
struct GadgetSolveReport {
    schema: &'static str,
    variables: usize,
    clauses: usize,
    #[serde(flatten)]
    outcome: GadgetSolveOutcome,
}

/// Parses `argv` (including the program name) and executes it, reading `-`
/// inputs from `stdin` and writing results to `stdout`/`stderr`. Returns the
/// process exit code; never panics on bad input.
pub fn run(
    argv: &[String],
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
                EXIT_USAGE_ERROR
            } else {
                // --help and --version are successes.
                let _ = write!(stdout, "{rendered}");
                EXIT_OK
            };
        }
    };
    let code = match execute(cli.command, stdin, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_DOMAIN_ERROR
        }
    };
    let _ = stdout.flush();
    code
}

fn execute(
    command: Command,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32> {
    match command {
        Command::Slater(input) => {
            let g = load_graph(&input, stdin)?;
            emit_json(&slater_report(&g)?, &input.output, stdout)?;
        }
        Command::Gamma { input, k, method } => {
            let g = load_graph(&input, stdin)?;
            let certificate: DominationCertificate = match method {
                SolverChoice::BruteForce => gamma_ktuple_bruteforce(&g, k)?,
                SolverChoice::BranchAndBound => gamma_ktuple_bnb(&g, k)?,
            };
            debug_assert!(certificate.validate(&g).is_ok());
            emit_json(&certificate, &input.output, stdout)?;
        }
        Command::Domatic { input, k } => {
            let g = load_graph(&input, stdin)?;
            emit_json(&domatic_ktuple_exact(&g, k)?, &input.output, stdout)?;
        }
        Command::Full(input) => {
            let g = load_graph(&input, stdin)?;
            let witness = full_structure_witness(&g)?;
            let report =
                FullReport { schema: SCHEMA, full: witness.is_some(), witness };
            emit_json(&report, &input.output, stdout)?;
        }
        Command::Gen { family } => {
            let (graph, output) = generate(family)?;
            emit_text(&format!("{}\n", emit_graph6(&graph)), &output, stdout)?;
        }
        Command::Reduce { input, output, labels } => {
            let formula = parse_dimacs_cnf(&read_source(&input, stdin)?)?;
            let (graph, label_data) = sat_gadget(&formula)?;
            emit_text(&format!("{}\n", emit_graph6(&graph)), &output, stdout)?;
            if let Some(path) = labels {
                let mut text = serde_json::to_string_pretty(&label_data)?;
                text.push('\n');
                std::fs::write(path, text)?;
            }
        }
        Command::GadgetSolve { input, jobs, output } => {
            let formula = parse_dimacs_cnf(&read_source(&input, stdin)?)?;
            let outcome = gadget_gamma_x2_sharded(&formula, resolve_jobs(jobs))?;
            let report = GadgetSolveReport {
                schema: SCHEMA,
                variables: formula.variables(),
                clauses: formula.clauses().len(),
                outcome,
            };
            emit_json(&report, &output, stdout)?;
        }
        Command::Verify { id, n_max, jobs, seed, output } => {
            let opts = VerifyOptions {
                jobs: resolve_jobs(jobs),
                seed: seed.unwrap_or(DEFAULT_SEED),
            };
            let started = Instant::now();
            let report = verify_theorem(&id, n_max, &opts)?;
            let _ = writeln!(
                stderr,
                "verify {id}: {} instances, {} failures, {:.2}s",
                report.instances,
                report.failures.len(),
                started.elapsed().as_secs_f64()
            );
            emit_json(&report, &output, stdout)?;
            return Ok(verification_exit_code(&report));
        }
        Command::Convert { input, to } => {
            let g = load_graph(&input, stdin)?;
            let text = match to {
                ConvertTarget::Graph6 => format!("{}\n", emit_graph6(&g)),
                ConvertTarget::Edges => emit_edge_list(&g),
            };
            emit_text(&text, &input.output, stdout)?;
        }
        Command::Theorems => {
            let mut text = String::new();
            for id in THEOREM_IDS {
                text.push_str(id);
                text.push('\n');
            }
            emit_text(&text, &None, stdout)?;
        }
    }
    Ok(EXIT_OK)
}

fn verification_exit_code(report: &Report) -> i32 {
    if report.passed() {
        EXIT_OK
    } else {
        EXIT_VERIFICATION_FAILED
    }
}

fn generate(family: GenFamily) -> Result<(Graph, Option<String>)> {
    let checked = |n: usize, what: &str| -> Result<usize> {
        if n > GEN_MAX_N {
            Err(Error::TooLarge(format!("{what} would have {n} vertices (cap {GEN_MAX_N})")))
        } else {
            Ok(n)
        }
    };
    match family {
        GenFamily::Omega { seed, output } => {
            let params = random_omega_params(seed);
            let (g, _) = build_omega(&params)?;
            Ok((g, output))
        }
        GenFamily::Psi { k, r, q, seed, output } => {
            checked(r.saturating_mul(q), "the part union")?;
            Ok((build_domatic_equality_graph(k, r, q, seed)?, output))
        }
        GenFamily::Theta { seed, output } => {
            let p = random_theta_params(seed);
            let g = build_full_graph(&p.parts, p.anchor_part, p.anchor_vertex, &p.cross_edges)?;
            Ok((g, output))
        }
        GenFamily::Remark1 { b, output } => {
            if b < 1 {
                return Err(Error::InvalidConstruction("b must be at least 1".into()));
            }
            checked(4 * b + 4, "the hub-and-path graph")?;
            Ok((star_plus_path(b), output))
        }
        GenFamily::Remark2 { b, output } => {
            if b < 1 {
                return Err(Error::InvalidConstruction("b must be at least 1".into()));
            }
            checked(12 * b + 8, "the spider tree")?;
            Ok((spider_tree(b), output))
        }
        GenFamily::Cycle { n, output } => {
            if n < 3 {
                return Err(Error::InvalidConstruction("a cycle needs at least 3 vertices".into()));
            }
            checked(n, "the cycle")?;
            Ok((cycle(n), output))
        }
        GenFamily::Path { n, output } => {
            checked(n, "the path")?;
            Ok((path(n), output))
        }
        GenFamily::Complete { n, output } => {
            checked(n, "the complete graph")?;
            Ok((complete(n), output))
        }
    }
}

/// `--jobs` flag, falling back to the DOMINO_JOBS environment variable,
/// then to 1.
fn resolve_jobs(flag: Option<usize>) -> usize {
    flag.or_else(|| std::env::var("DOMINO_JOBS").ok().and_then(|s| s.parse().ok()))
        .unwrap_or(1)
        .max(1)
}

fn read_source(path: &str, stdin: &mut dyn Read) -> Result<String> {
    if path == "-" {
        let mut text = String::new();
        stdin.read_to_string(&mut text)?;
        Ok(text)
    } else {
        Ok(std::fs::read_to_string(path)?)
    }
}

fn load_graph(input: &GraphInput, stdin: &mut dyn Read) -> Result<Graph> {
    let text = read_source(&input.input, stdin)?;
    parse_graph(&text, input.format)
}

fn parse_graph(text: &str, format: InputFormat) -> Result<Graph> {
    match format {
        InputFormat::Graph6 => parse_first_graph6(text),
        InputFormat::Edges => parse_edge_list(text),
        InputFormat::Auto => parse_first_graph6(text).or_else(|g6_err| {
            parse_edge_list(text).map_err(|edge_err| {
                Error::Parse {
                    unit: "input",
                    offset: 0,
                    msg: format!(
                        "not graph6 ({g6_err}) and not an edge list ({edge_err})"
                    ),
                }
            })
        }),
    }
}

/// Takes the first nonempty line, so multi-graph graph6 files select their
/// leading graph.
fn parse_first_graph6(text: &str) -> Result<Graph> {
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .ok_or_else(|| Error::parse("line", 1, "empty input"))?;
    parse_graph6(line)
}

fn emit_json<T: Serialize>(
    value: &T,
    output: &Option<String>,
    stdout: &mut dyn Write,
) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    emit_text(&text, output, stdout)
}

fn emit_text(text: &str, output: &Option<String>, stdout: &mut dyn Write) -> Result<()> {
    match output {
        Some(path) => std::fs::write(path, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}
