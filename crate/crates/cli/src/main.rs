//! Command-line front end: parse a graph, compute spans or existence
//! queries, validate walk pairs, and export witnesses.
//!
//! Exit codes: 0 on success, 1 on a violated precondition (disconnected
//! input, oversized oracle query, bad walk data), 2 on parse or usage
//! errors.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use graphspan_core::solver::{Goal, MoveRules, SearchStrategy, Solver};
use graphspan_core::witness::{validate_walk_pair, WalkPair, WitnessComponent};
use graphspan_core::{oracle, Error, Graph};

#[derive(Parser)]
#[command(name = "graphspan", version, about = "Safety-distance spans of connected graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one span variant, optionally exporting its witness
    Span(SpanArgs),
    /// Check whether a covering walk exists at a given distance
    Exists(ExistsArgs),
    /// Compute all six span variants
    All(AllArgs),
    /// Validate a walk-pair file against rules, goal, and distance
    Validate(ValidateArgs),
    /// Answer via the brute-force oracle (small graphs only)
    Oracle(OracleArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum RulesArg {
    Traditional,
    Active,
    Lazy,
}

impl From<RulesArg> for MoveRules {
    fn from(value: RulesArg) -> Self {
        match value {
            RulesArg::Traditional => MoveRules::Traditional,
            RulesArg::Active => MoveRules::Active,
            RulesArg::Lazy => MoveRules::Lazy,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GoalArg {
    Vertex,
    Edge,
}

impl From<GoalArg> for Goal {
    fn from(value: GoalArg) -> Self {
        match value {
            GoalArg::Vertex => Goal::Vertex,
            GoalArg::Edge => Goal::Edge,
        }
    }
}

#[derive(Args)]
struct CommonArgs {
    /// Edge-list file; read from stdin when omitted
    #[arg(long)]
    input: Option<PathBuf>,
    /// Movement rules
    #[arg(long, value_enum, default_value = "traditional")]
    rules: RulesArg,
    /// Coverage goal
    #[arg(long, value_enum, default_value = "vertex")]
    goal: GoalArg,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SpanArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Write the witness component as a DOT file
    #[arg(long)]
    witness: Option<PathBuf>,
    /// Scan distances downward from the radius instead of binary search
    #[arg(long)]
    linear: bool,
}

#[derive(Args)]
struct ExistsArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Required distance
    #[arg(long)]
    distance: u32,
}

#[derive(Args)]
struct AllArgs {
    /// Edge-list file; read from stdin when omitted
    #[arg(long)]
    input: Option<PathBuf>,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
    /// Scan distances downward from the radius instead of binary search
    #[arg(long)]
    linear: bool,
}

#[derive(Args)]
struct ValidateArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Walk-pair JSON file with "alice" and "bob" label arrays
    #[arg(long)]
    walk: PathBuf,
    /// Required distance
    #[arg(long, default_value = "0")]
    distance: u32,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Check existence at this distance instead of computing the span
    #[arg(long)]
    distance: Option<u32>,
}

/// Failure with the exit code it maps to.
struct Failure {
    message: String,
    code: u8,
}

impl Failure {
    fn parse(message: impl Into<String>) -> Self {
        Failure {
            message: message.into(),
            code: 2,
        }
    }

    fn precondition(message: impl Into<String>) -> Self {
        Failure {
            message: message.into(),
            code: 1,
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        match err {
            Error::Parse(_) | Error::WalkJson(_) => Failure::parse(err.to_string()),
            _ => Failure::precondition(err.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Span(args) => run_span(args),
        Command::Exists(args) => run_exists(args),
        Command::All(args) => run_all(args),
        Command::Validate(args) => run_validate(args),
        Command::Oracle(args) => run_oracle(args),
    }
}

fn read_input(path: &Option<PathBuf>) -> Result<String, Failure> {
    match path {
        Some(p) => std::fs::read_to_string(p)
            .map_err(|e| Failure::parse(format!("cannot read {}: {e}", p.display()))),
        None => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Failure::parse(format!("cannot read stdin: {e}")))?;
            Ok(text)
        }
    }
}

fn load_graph(path: &Option<PathBuf>) -> Result<Graph, Failure> {
    let text = read_input(path)?;
    Graph::parse_edge_list(&text).map_err(|e| Failure::parse(e.to_string()))
}

fn graph_json(h: &Graph) -> serde_json::Value {
    json!({ "n": h.vertex_count(), "m": h.edge_count() })
}

fn witness_json(h: &Graph, witness: &Option<WitnessComponent>) -> serde_json::Value {
    match witness {
        Some(w) => {
            let pairs: Vec<[&str; 2]> = w
                .pairs
                .iter()
                .map(|&(u, v)| [h.label(u), h.label(v)])
                .collect();
            json!({ "pairs": pairs, "epsilon": w.epsilon })
        }
        None => serde_json::Value::Null,
    }
}

fn strategy(linear: bool) -> SearchStrategy {
    if linear {
        SearchStrategy::Linear
    } else {
        SearchStrategy::Binary
    }
}

fn product_name(rules: MoveRules) -> &'static str {
    rules.product_kind().name()
}

fn run_span(args: SpanArgs) -> Result<(), Failure> {
    let h = load_graph(&args.common.input)?;
    let solver = Solver::new(&h).map_err(Failure::from)?;
    let rules: MoveRules = args.common.rules.into();
    let goal: Goal = args.common.goal.into();
    let result = solver.span_with(rules, goal, strategy(args.linear));

    if let Some(path) = &args.witness {
        match &result.witness {
            Some(w) => {
                std::fs::write(path, witness_dot(&h, w))
                    .map_err(|e| Failure::precondition(format!("cannot write {}: {e}", path.display())))?;
            }
            None => {
                return Err(Failure::precondition(
                    "span is 0; there is no witness component to export",
                ));
            }
        }
    }

    if args.common.json {
        let value = json!({
            "graph": graph_json(&h),
            "rules": rules.name(),
            "goal": goal.name(),
            "span": result.value,
            "radius": solver.radius(),
            "witness": witness_json(&h, &result.witness),
        });
        println!("{}", serde_json::to_string_pretty(&value).expect("json"));
    } else {
        println!(
            "graph: {} vertices, {} edges, radius {}",
            h.vertex_count(),
            h.edge_count(),
            solver.radius()
        );
        println!("span ({}, {}): {}", rules.name(), goal.name(), result.value);
        match &result.witness {
            Some(w) => println!(
                "witness: {} product component with {} pairs, epsilon {}",
                w.product_kind.name(),
                w.pairs.len(),
                w.epsilon
            ),
            None => println!("witness: none"),
        }
    }
    Ok(())
}

fn run_exists(args: ExistsArgs) -> Result<(), Failure> {
    let h = load_graph(&args.common.input)?;
    let solver = Solver::new(&h).map_err(Failure::from)?;
    let rules: MoveRules = args.common.rules.into();
    let goal: Goal = args.common.goal.into();
    let exists = solver.exists_safe_walk(args.distance, rules, goal);
    if args.common.json {
        let value = json!({
            "graph": graph_json(&h),
            "rules": rules.name(),
            "goal": goal.name(),
            "distance": args.distance,
            "radius": solver.radius(),
            "exists": exists,
        });
        println!("{}", serde_json::to_string_pretty(&value).expect("json"));
    } else {
        println!("{exists}");
    }
    Ok(())
}

fn run_all(args: AllArgs) -> Result<(), Failure> {
    let h = load_graph(&args.input)?;
    let solver = Solver::new(&h).map_err(Failure::from)?;
    let results = solver.all_spans_with(strategy(args.linear));
    if args.json {
        let spans: Vec<serde_json::Value> = results
            .iter()
            .map(|r| {
                json!({
                    "rules": r.rules.name(),
                    "product": product_name(r.rules),
                    "goal": r.goal.name(),
                    "span": r.value,
                })
            })
            .collect();
        let value = json!({
            "graph": graph_json(&h),
            "radius": solver.radius(),
            "spans": spans,
        });
        println!("{}", serde_json::to_string_pretty(&value).expect("json"));
    } else {
        println!(
            "graph: {} vertices, {} edges, radius {}",
            h.vertex_count(),
            h.edge_count(),
            solver.radius()
        );
        println!("{:<20} span", "variant");
        for r in &results {
            let name = format!("{} {}", product_name(r.rules), r.goal.name());
            println!("{name:<20} {}", r.value);
        }
    }
    Ok(())
}

fn run_validate(args: ValidateArgs) -> Result<(), Failure> {
    let h = load_graph(&args.common.input)?;
    let walk_text = std::fs::read_to_string(&args.walk)
        .map_err(|e| Failure::parse(format!("cannot read {}: {e}", args.walk.display())))?;
    let pair = WalkPair::from_json(&h, &walk_text).map_err(Failure::from)?;
    let rules: MoveRules = args.common.rules.into();
    let goal: Goal = args.common.goal.into();
    let report =
        validate_walk_pair(&h, &pair, rules, goal, args.distance).map_err(Failure::from)?;
    if args.common.json {
        let violation = report.first_violation.as_ref().map(|v| {
            json!({ "step": v.step, "reason": v.reason })
        });
        let value = json!({
            "graph": graph_json(&h),
            "rules": rules.name(),
            "goal": goal.name(),
            "distance": args.distance,
            "valid": report.valid(),
            "rules_ok": report.rules_ok,
            "coverage_ok": report.coverage_ok,
            "alice_weak_hom": report.alice_weak_hom,
            "bob_weak_hom": report.bob_weak_hom,
            "min_distance": report.min_distance.finite(),
            "first_violation": violation,
        });
        println!("{}", serde_json::to_string_pretty(&value).expect("json"));
    } else {
        println!("valid: {}", report.valid());
        println!("rules ok: {}", report.rules_ok);
        println!("coverage ok: {}", report.coverage_ok);
        println!("min distance: {}", report.min_distance);
        if let Some(v) = &report.first_violation {
            println!("violation at step {}: {}", v.step, v.reason);
        }
    }
    Ok(())
}

fn run_oracle(args: OracleArgs) -> Result<(), Failure> {
    let h = load_graph(&args.common.input)?;
    let rules: MoveRules = args.common.rules.into();
    let goal: Goal = args.common.goal.into();
    match args.distance {
        Some(d) => {
            let exists = oracle::oracle_exists(&h, d, rules, goal).map_err(Failure::from)?;
            if args.common.json {
                let value = json!({
                    "graph": graph_json(&h),
                    "rules": rules.name(),
                    "goal": goal.name(),
                    "distance": d,
                    "exists": exists,
                });
                println!("{}", serde_json::to_string_pretty(&value).expect("json"));
            } else {
                println!("{exists}");
            }
        }
        None => {
            let value = oracle::oracle_span(&h, rules, goal).map_err(Failure::from)?;
            if args.common.json {
                let radius = h.radius().map_err(Failure::from)?;
                let out = json!({
                    "graph": graph_json(&h),
                    "rules": rules.name(),
                    "goal": goal.name(),
                    "span": value,
                    "radius": radius,
                    "witness": serde_json::Value::Null,
                });
                println!("{}", serde_json::to_string_pretty(&out).expect("json"));
            } else {
                println!("span ({}, {}): {}", rules.name(), goal.name(), value);
            }
        }
    }
    Ok(())
}

/// Escapes a label for use inside a DOT double-quoted string.
fn dot_escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

/// DOT rendering of a witness component: node ids `u|v`, display labels
/// `(u,v)`, edges unstyled.
fn witness_dot(h: &Graph, w: &WitnessComponent) -> String {
    let esc = |v: usize| dot_escape(h.label(v));
    let mut out = String::from("graph witness {\n");
    for &(u, v) in &w.pairs {
        out.push_str(&format!(
            "  \"{}|{}\" [label=\"({},{})\"];\n",
            esc(u),
            esc(v),
            esc(u),
            esc(v)
        ));
    }
    for &((u, v), (u2, v2)) in &w.edges {
        out.push_str(&format!(
            "  \"{}|{}\" -- \"{}|{}\";\n",
            esc(u),
            esc(v),
            esc(u2),
            esc(v2)
        ));
    }
    out.push_str("}\n");
    out
}
