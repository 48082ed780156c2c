//! `indtopo` command line: generate graphs, compute independence-complex
//! homology, run the wedge-of-spheres recursions, execute certified edge
//! scripts, drive the staged cycle-power construction, and run the named
//! verification suites.
//!
//! Exit codes: 0 success / all cases pass; 1 a verification failed;
//! 2 usage error or invalid certificate; 3 a resource budget was exceeded.

use clap::{Args, Parser, Subcommand, ValueEnum};
use indtopo::cnr;
use indtopo::complex::{Complex, TopologyError};
use indtopo::config::Budgets;
use indtopo::graph::{self, FamilySpec, Graph, GraphError};
use indtopo::homology::{ind_homology, HomologySignature};
use indtopo::homotopy::PowerFamily;
use indtopo::recursion::{BaseCaseUse, BaseProvenance, Predictor, RecursionError};
use indtopo::script::{parse_script, run_script, ScriptRunError};
use indtopo::suites::{self, SuiteParams};
use serde::Serialize;
use std::collections::HashSet;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "indtopo",
    version,
    about = "Independence complexes of graphs: exact homology, certified reductions, and cycle-power recursions"
)]
struct Cli {
    /// Cap on enumerated faces per complex (overrides INDTOPO_BUDGET_FACES).
    #[arg(long, global = true)]
    budget_faces: Option<usize>,
    /// Cap on boundary-matrix entries (overrides INDTOPO_BUDGET_MATRIX).
    #[arg(long, global = true)]
    budget_matrix: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph from a named family and write it to a file.
    Gen(GenArgs),
    /// Reduced homology of the independence complex of a graph file.
    Homology(HomologyArgs),
    /// Recursive homotopy-type prediction for path/cycle powers.
    Predict(PredictArgs),
    /// Run a named verification suite.
    Verify(VerifyArgs),
    /// Execute a certified add/del edge script against a graph.
    Script(ScriptArgs),
    /// The staged cycle-power construction and its reports.
    #[command(subcommand)]
    Cnr(CnrCommand),
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    Path,
    Cycle,
    Complete,
    PathPower,
    CyclePower,
    Cylinder,
    Subdiv3All,
    Subdiv3Edge,
}

#[derive(Args)]
struct GenArgs {
    family: FamilyName,
    #[arg(long, allow_hyphen_values = true)]
    n: Option<i64>,
    #[arg(long)]
    r: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    k: Option<u32>,
    /// Base family for the subdivision families.
    #[arg(long, value_enum)]
    base: Option<FamilyName>,
    /// Edge `u,v` for subdiv3-edge.
    #[arg(long)]
    edge: Option<String>,
    /// Output path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Emit the JSON form instead of the text format.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct HomologyArgs {
    graph: PathBuf,
    /// Also write the face list (one face per line, dimension-sorted).
    #[arg(long)]
    write_faces: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum PredictFamily {
    Path,
    Cycle,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum ExpandMode {
    Full,
    Partial,
}

#[derive(Args)]
struct PredictArgs {
    family: PredictFamily,
    #[arg(long, allow_hyphen_values = true)]
    n: i64,
    #[arg(long)]
    r: u32,
    /// `full` expands to a sphere wedge; `partial` leaves one recursion
    /// step symbolic.
    #[arg(long, value_enum, default_value = "full")]
    expand: ExpandMode,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of: theorem1, engstrom, kozlov, lemma61, scripts, chordal,
    /// examples55-56, rules-sweep, model, reconcile.
    suite: String,
    #[arg(long)]
    r: Option<u32>,
    #[arg(long)]
    n_max: Option<i64>,
    #[arg(long)]
    r_max: Option<u32>,
    #[arg(long)]
    count: Option<u32>,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct ScriptArgs {
    graph: PathBuf,
    script: PathBuf,
    /// Also report start/end signatures of the independence complex.
    #[arg(long)]
    check_betti: bool,
}

#[derive(Subcommand)]
enum CnrCommand {
    /// Build the augmented cycle power and emit the edge log as JSON.
    Log {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        r: u32,
    },
    /// Enumerate the wedge summands contributed by the construction.
    Summands {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        json: bool,
    },
    /// Reconcile the summand ledger against the closed multiplicity table.
    Reconcile {
        #[arg(long, default_value_t = 8)]
        r_max: u32,
    },
    /// Oracle check of the double-suspension model, with the certificate
    /// chain diagnostics.
    Model {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        r: u32,
    },
    /// Verify the structural lemma items a)-f).
    Lemma {
        #[arg(long)]
        r: u32,
        /// Defaults to the smallest admissible n (= 5r+4).
        #[arg(long)]
        n: Option<i64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut budgets = Budgets::from_env();
    if let Some(f) = cli.budget_faces {
        budgets.max_faces = f;
    }
    if let Some(m) = cli.budget_matrix {
        budgets.max_matrix_entries = m;
    }
    match cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::Homology(args) => cmd_homology(args, &budgets),
        Command::Predict(args) => cmd_predict(args, &budgets),
        Command::Verify(args) => cmd_verify(args, &budgets),
        Command::Script(args) => cmd_script(args, &budgets),
        Command::Cnr(args) => cmd_cnr(args, &budgets),
    }
}

fn fail(code: u8, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(code)
}

fn topology_exit(e: &TopologyError) -> u8 {
    match e {
        TopologyError::FaceBudgetExceeded(_) | TopologyError::MatrixBudgetExceeded(_) => {
            EXIT_BUDGET
        }
        TopologyError::TorsionOverflow => EXIT_FAIL,
    }
}

// ---- gen ---------------------------------------------------------------------

fn family_spec(args: &GenArgs) -> Result<FamilySpec, String> {
    let n = || args.n.ok_or("--n is required for this family".to_string());
    let r = || args.r.ok_or("--r is required for this family".to_string());
    let base = |args: &GenArgs| -> Result<Box<FamilySpec>, String> {
        let name = args.base.ok_or("--base is required for subdivisions")?;
        let inner = GenArgs {
            family: name,
            base: None,
            edge: None,
            out: None,
            json: false,
            n: args.n,
            r: args.r,
            m: args.m,
            k: args.k,
        };
        Ok(Box::new(family_spec(&inner)?))
    };
    Ok(match args.family {
        FamilyName::Path => FamilySpec::Path { n: n()? },
        FamilyName::Cycle => FamilySpec::Cycle { n: n()? },
        FamilyName::Complete => FamilySpec::Complete { n: n()? },
        FamilyName::PathPower => FamilySpec::PathPower { n: n()?, r: r()? },
        FamilyName::CyclePower => FamilySpec::CyclePower { n: n()?, r: r()? },
        FamilyName::Cylinder => {
            let m = args.m.ok_or("--m is required for cylinder")?;
            let k = args.k.ok_or("--k is required for cylinder")?;
            if m < 1 || k < 3 {
                return Err("cylinder requires m >= 1 and k >= 3".into());
            }
            FamilySpec::Cylinder { m, k }
        }
        FamilyName::Subdiv3All => FamilySpec::Subdiv3All { base: base(args)? },
        FamilyName::Subdiv3Edge => {
            let text = args
                .edge
                .as_ref()
                .ok_or("--edge u,v is required for subdiv3-edge")?;
            let parts: Vec<&str> = text.split(',').collect();
            let parse = |s: &str| {
                s.trim()
                    .parse::<u32>()
                    .map_err(|_| "bad --edge".to_string())
            };
            if parts.len() != 2 {
                return Err("--edge expects `u,v`".into());
            }
            FamilySpec::Subdiv3Edge {
                base: base(args)?,
                edge: (parse(parts[0])?, parse(parts[1])?),
            }
        }
    })
}

fn cmd_gen(args: GenArgs) -> ExitCode {
    let spec = match family_spec(&args) {
        Ok(s) => s,
        Err(msg) => return fail(EXIT_USAGE, msg),
    };
    let g = match graph::build_family(&spec) {
        Ok(g) => g,
        Err(e) => return fail(EXIT_USAGE, e),
    };
    let payload = if args.json {
        serde_json::to_string_pretty(&g.to_json()).unwrap() + "\n"
    } else {
        g.to_text()
    };
    match &args.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, payload) {
                return fail(EXIT_USAGE, format!("writing {}: {e}", path.display()));
            }
            eprintln!(
                "wrote {} ({} vertices, {} edges)",
                path.display(),
                g.n(),
                g.edge_count()
            );
        }
        None => print!("{payload}"),
    }
    ExitCode::SUCCESS
}

// ---- homology ------------------------------------------------------------------

fn load_graph(path: &Path) -> Result<Graph, GraphError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| GraphError::ParseError(format!("{}: {e}", path.display())))?;
    if text.trim_start().starts_with('{') {
        let json: graph::GraphJson = serde_json::from_str(&text)
            .map_err(|e| GraphError::ParseError(format!("{}: {e}", path.display())))?;
        Graph::from_json(&json)
    } else {
        Graph::from_text(&text)
    }
}

fn cmd_homology(args: HomologyArgs, budgets: &Budgets) -> ExitCode {
    let g = match load_graph(&args.graph) {
        Ok(g) => g,
        Err(e) => return fail(EXIT_USAGE, e),
    };
    let complex = match Complex::independence(&g, budgets) {
        Ok(k) => k,
        Err(e) => return fail(topology_exit(&e), e),
    };
    if let Some(path) = &args.write_faces {
        if let Err(e) = std::fs::write(path, complex.render_faces()) {
            return fail(EXIT_USAGE, format!("writing {}: {e}", path.display()));
        }
    }
    match indtopo::homology::reduced_homology(&complex, budgets) {
        Ok(sig) => {
            println!("{}", serde_json::to_string(&sig).unwrap());
            ExitCode::SUCCESS
        }
        Err(e) => fail(topology_exit(&e), e),
    }
}

// ---- predict --------------------------------------------------------------------

#[derive(Serialize)]
struct PredictReport {
    family: String,
    n: i64,
    r: u32,
    expr: String,
    betti: std::collections::BTreeMap<i32, u64>,
    base_cases_used: Vec<BaseCaseUse>,
}

fn path_base_cases(n: i64, r: u32) -> Vec<BaseCaseUse> {
    // base indices actually reachable by repeatedly subtracting r+2..=2r+1
    let mut stack = vec![n];
    let mut seen = HashSet::new();
    let mut bases = HashSet::new();
    while let Some(m) = stack.pop() {
        if !seen.insert(m) {
            continue;
        }
        if m <= r as i64 + 1 {
            bases.insert(m.max(0)); // all negatives are the empty graph
        } else {
            for a in r as i64 + 2..=2 * r as i64 + 1 {
                stack.push(m - a);
            }
        }
    }
    let mut bases: Vec<i64> = bases.into_iter().collect();
    bases.sort_unstable();
    bases
        .into_iter()
        .map(|n| BaseCaseUse {
            family: PowerFamily::PathPower,
            n,
            r,
            provenance: BaseProvenance::TrivialComplete,
        })
        .collect()
}

fn cmd_predict(args: PredictArgs, budgets: &Budgets) -> ExitCode {
    let predictor = Predictor::new();
    let (family, full) = match args.family {
        PredictFamily::Path => {
            if args.n < 0 && args.expand == ExpandMode::Partial {
                return fail(EXIT_USAGE, "partial expansion needs n >= 0");
            }
            ("path", Ok(predictor.path_power(args.n, args.r)))
        }
        PredictFamily::Cycle => ("cycle", predictor.cycle_power(args.n, args.r, budgets)),
    };
    let full = match full {
        Ok(e) => e,
        Err(RecursionError::Topology(t)) => return fail(topology_exit(&t), t),
        Err(e @ RecursionError::CycleTooSmall(_)) => return fail(EXIT_USAGE, e),
        Err(e) => return fail(EXIT_FAIL, e),
    };
    let expr = match args.expand {
        ExpandMode::Full => full.clone(),
        ExpandMode::Partial => match args.family {
            PredictFamily::Path => predictor.path_power_partial(args.n, args.r),
            PredictFamily::Cycle => predictor.cycle_power_partial(args.n, args.r).unwrap(),
        },
    };
    let base_cases_used = match args.family {
        PredictFamily::Path => path_base_cases(args.n, args.r),
        PredictFamily::Cycle => predictor.cycle_base_cases_used(args.n, args.r),
    };
    let report = PredictReport {
        family: family.into(),
        n: args.n,
        r: args.r,
        expr: expr.render(),
        betti: full.to_signature().unwrap().betti,
        base_cases_used,
    };
    println!("{}", serde_json::to_string(&report).unwrap());
    ExitCode::SUCCESS
}

// ---- verify ----------------------------------------------------------------------

fn cmd_verify(args: VerifyArgs, budgets: &Budgets) -> ExitCode {
    let params = SuiteParams {
        r: args.r,
        n_max: args.n_max,
        r_max: args.r_max,
        count: args.count,
        seed: args.seed,
    };
    match suites::run_suite(&args.suite, &params, budgets) {
        Ok(report) => {
            println!("{}", serde_json::to_string_pretty(&report).unwrap());
            if report.failed > 0 {
                ExitCode::from(EXIT_FAIL)
            } else if report.skipped > 0 {
                ExitCode::from(EXIT_BUDGET)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => fail(EXIT_USAGE, e),
    }
}

// ---- script ----------------------------------------------------------------------

#[derive(Serialize)]
struct ScriptReport {
    steps: indtopo::script::ScriptLog,
    final_graph: graph::GraphJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    betti_start: Option<HomologySignature>,
    #[serde(skip_serializing_if = "Option::is_none")]
    betti_end: Option<HomologySignature>,
}

fn cmd_script(args: ScriptArgs, budgets: &Budgets) -> ExitCode {
    let g = match load_graph(&args.graph) {
        Ok(g) => g,
        Err(e) => return fail(EXIT_USAGE, e),
    };
    let text = match std::fs::read_to_string(&args.script) {
        Ok(t) => t,
        Err(e) => return fail(EXIT_USAGE, format!("{}: {e}", args.script.display())),
    };
    let script = match parse_script(&text) {
        Ok(s) => s,
        Err(e) => return fail(EXIT_USAGE, e),
    };
    let (final_graph, log) = match run_script(&g, &script) {
        Ok(x) => x,
        Err(e @ ScriptRunError::CertificateInvalid { .. }) => return fail(EXIT_USAGE, e),
        Err(e) => return fail(EXIT_USAGE, e),
    };
    let (betti_start, betti_end) = if args.check_betti {
        let start = match ind_homology(&g, budgets) {
            Ok(s) => s,
            Err(e) => return fail(topology_exit(&e), e),
        };
        let end = match ind_homology(&final_graph, budgets) {
            Ok(s) => s,
            Err(e) => return fail(topology_exit(&e), e),
        };
        (Some(start), Some(end))
    } else {
        (None, None)
    };
    let report = ScriptReport {
        steps: log,
        final_graph: final_graph.to_json(),
        betti_start,
        betti_end,
    };
    println!("{}", serde_json::to_string(&report).unwrap());
    ExitCode::SUCCESS
}

// ---- cnr -------------------------------------------------------------------------

fn cmd_cnr(cmd: CnrCommand, budgets: &Budgets) -> ExitCode {
    match cmd {
        CnrCommand::Log { n, r } => match cnr::build_overline(n, r) {
            Ok(log) => {
                println!("{}", serde_json::to_string(&log).unwrap());
                ExitCode::SUCCESS
            }
            Err(e) => fail(EXIT_USAGE, e),
        },
        CnrCommand::Summands { r, json } => {
            if r < 1 {
                return fail(EXIT_USAGE, "--r must be at least 1");
            }
            let ledger = cnr::enumerate_summands(r);
            if json {
                println!("{}", serde_json::to_string(&ledger).unwrap());
            } else {
                println!(
                    "cycle summand: Susp^2(Ind(C_{{n-{}}}^{r}))",
                    ledger.cycle_offset
                );
                println!("{:<8} {:<13} source", "offset", "multiplicity");
                for e in &ledger.entries {
                    println!("{:<8} {:<13} {:?}", e.offset, e.multiplicity, e.source);
                }
                println!("totals by offset: {:?}", ledger.totals());
            }
            ExitCode::SUCCESS
        }
        CnrCommand::Reconcile { r_max } => {
            let reports: Vec<cnr::ReconcileReport> =
                (1..=r_max).map(cnr::reconcile_with_closed_form).collect();
            let all = reports.iter().all(|r| r.matches);
            println!("{}", serde_json::to_string(&reports).unwrap());
            if all {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAIL)
            }
        }
        CnrCommand::Model { n, r } => match cnr::verify_model_equivalence(n, r, budgets) {
            Ok(report) => {
                let ok = report.signatures_match;
                println!("{}", serde_json::to_string(&report).unwrap());
                if ok {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(EXIT_FAIL)
                }
            }
            Err(e @ cnr::CnrError::NTooSmall { .. }) => fail(EXIT_USAGE, e),
            Err(e) => fail(EXIT_FAIL, e),
        },
        CnrCommand::Lemma { r, n } => {
            let n = n.unwrap_or(5 * r as i64 + 4);
            match cnr::verify_technical_lemma(r, n, budgets) {
                Ok(report) => {
                    let ok = report.all_pass();
                    println!("{}", serde_json::to_string(&report).unwrap());
                    if ok {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(EXIT_FAIL)
                    }
                }
                Err(e @ cnr::CnrError::NTooSmall { .. }) => fail(EXIT_USAGE, e),
                Err(e) => fail(EXIT_FAIL, e),
            }
        }
    }
}
