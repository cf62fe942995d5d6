//! Command-line front end. [`run`] does all the work so tests can drive it
//! without spawning a process.

use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use braidknot::braid::{
    random_markov_orbit, search_markov_path, BraidError, BraidWord, SearchError, SearchLimits,
    SearchOutcome,
};
use braidknot::fixtures::fixtures;
use braidknot::invariants::{
    check_wada_conjecture, invariant_chain, leading_invariant, twovar_invariant,
};
use braidknot::representations::{braid_matrix, RepresentationKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;
pub const EXIT_SEARCH_LIMIT: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "braidknot",
    version,
    about = "Knot and link invariants of closed braids"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute the invariant of one braid.
    Invariant(InvariantArgs),
    /// Check that the invariant is constant along a random Markov orbit.
    Verify(VerifyArgs),
    /// Recompute the reference table of knots and links.
    Table(TableArgs),
    /// Breadth-first search for a sequence of Markov moves between two braids.
    Search(SearchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Burau,
    Wada,
    Twovar,
}

impl From<Kind> for RepresentationKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Burau => RepresentationKind::Burau,
            Kind::Wada => RepresentationKind::Wada,
            Kind::Twovar => RepresentationKind::TwoVariable,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct BraidInput {
    /// Braid word, e.g. "1^3" or "1 -2 1 -2".
    #[arg(long, allow_hyphen_values = true)]
    braid: String,
    /// Number of strands; inferred from the word when omitted.
    #[arg(long)]
    strands: Option<usize>,
}

#[derive(Args, Debug)]
struct InvariantArgs {
    #[command(flatten)]
    input: BraidInput,
    #[arg(long, value_enum, default_value = "wada")]
    kind: Kind,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Print J - I.
    #[arg(long)]
    show_matrix: bool,
    /// Print the whole chain of elementary ideals.
    #[arg(long)]
    show_chain: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    input: BraidInput,
    #[arg(long, value_enum, default_value = "wada")]
    kind: Kind,
    #[arg(long, default_value_t = 4)]
    depth: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest strand count the orbit may reach.
    #[arg(long, default_value_t = 5)]
    max_strands: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[arg(long, allow_hyphen_values = true)]
    from: String,
    #[arg(long, allow_hyphen_values = true)]
    to: String,
    #[arg(long)]
    from_strands: Option<usize>,
    #[arg(long)]
    to_strands: Option<usize>,
    #[arg(long, default_value_t = 3)]
    max_strands: usize,
    #[arg(long, default_value_t = 6)]
    max_length: usize,
    #[arg(long, default_value_t = 6)]
    max_depth: usize,
    /// Visited-node cap; exceeding it exits with status 4.
    #[arg(long, default_value_t = 2_000_000)]
    max_nodes: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

enum Failure {
    Parse(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<BraidError> for Failure {
    fn from(e: BraidError) -> Self {
        Failure::Parse(e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Invariant(a) => cmd_invariant(&a, out),
        Command::Verify(a) => cmd_verify(&a, out),
        Command::Table(a) => cmd_table(&a, out),
        Command::Search(a) => cmd_search(&a, out),
    };
    match outcome {
        Ok(code) => code,
        Err(Failure::Parse(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_PARSE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INTERNAL
        }
    }
}

fn parse_braid(text: &str, strands: Option<usize>) -> Result<BraidWord, Failure> {
    Ok(BraidWord::parse(text, strands)?)
}

fn write_json(out: &mut dyn Write, v: &Value) -> io::Result<()> {
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(v).expect("values serialize")
    )
}

/// Normalized invariant of one braid as text, for any kind.
fn invariant_text(kind: RepresentationKind, beta: &BraidWord) -> String {
    match kind {
        RepresentationKind::TwoVariable => twovar_invariant(beta).gcd.to_string(),
        _ => leading_invariant(&invariant_chain(kind, beta).expect("univariate kind")).to_string(),
    }
}

fn cmd_invariant(a: &InvariantArgs, out: &mut dyn Write) -> Outcome {
    let beta = parse_braid(&a.input.braid, a.input.strands)?;
    let kind: RepresentationKind = a.kind.into();
    let matrix = braid_matrix(kind, &beta).sub_identity();
    let (chain, invariant): (Vec<String>, String) = match kind {
        RepresentationKind::TwoVariable => {
            let inv = twovar_invariant(&beta);
            (
                inv.generators.iter().map(|g| g.to_string()).collect(),
                inv.gcd.to_string(),
            )
        }
        _ => {
            let chain = invariant_chain(kind, &beta).expect("univariate kind");
            (
                chain.generators().iter().map(|g| g.to_string()).collect(),
                leading_invariant(&chain).to_string(),
            )
        }
    };
    let conjecture =
        (kind != RepresentationKind::TwoVariable).then(|| check_wada_conjecture(&beta));

    match a.format {
        Format::Json => {
            let mut v = json!({
                "braid": beta.to_string(),
                "strands": beta.strands(),
                "kind": kind.name(),
                "chain": chain,
                "invariant": invariant,
            });
            if a.show_matrix {
                v["matrix"] = json!(matrix.to_string_rows());
            }
            if let Some(c) = &conjecture {
                v["alexander_at_minus1"] = json!(c.alexander_at_minus_1.to_string());
                if let Some(ok) = c.consistent() {
                    v["conjecture_consistent"] = json!(ok);
                }
            }
            write_json(out, &v)?;
        }
        Format::Text => {
            if a.show_matrix {
                writeln!(out, "J - I =\n{matrix}")?;
            }
            if a.show_chain {
                match kind {
                    RepresentationKind::TwoVariable => {
                        writeln!(out, "nonzero minors of the first nonvanishing size:")?;
                        for g in &chain {
                            writeln!(out, "  {g}")?;
                        }
                    }
                    _ => {
                        for (k, g) in chain.iter().enumerate() {
                            writeln!(out, "E_{k}: {g}")?;
                        }
                    }
                }
            }
            writeln!(out, "{invariant}")?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> Outcome {
    let beta = parse_braid(&a.input.braid, a.input.strands)?;
    let kind: RepresentationKind = a.kind.into();
    let orbit = random_markov_orbit(&beta, a.depth, a.max_strands.max(beta.strands()), a.seed);
    let values: Vec<String> = orbit.braids().map(|b| invariant_text(kind, b)).collect();
    let pass = values.windows(2).all(|w| w[0] == w[1]);

    match a.format {
        Format::Json => {
            let nodes: Vec<Value> = orbit
                .braids()
                .zip(&values)
                .map(|(b, v)| json!({"braid": b.to_string(), "strands": b.strands(), "invariant": v}))
                .collect();
            let moves: Vec<String> = orbit.moves().map(|m| m.to_string()).collect();
            write_json(
                out,
                &json!({
                    "braid": beta.to_string(),
                    "strands": beta.strands(),
                    "kind": kind.name(),
                    "seed": a.seed,
                    "depth": a.depth,
                    "moves": moves,
                    "nodes": nodes,
                    "pass": pass,
                }),
            )?;
        }
        Format::Text => {
            writeln!(
                out,
                "orbit of [{beta}] (kind {kind}, seed {}, depth {}):",
                a.seed, a.depth
            )?;
            writeln!(
                out,
                "  {:<14}    [{}] on {} strands: {}",
                "start",
                beta,
                beta.strands(),
                values[0]
            )?;
            for ((mv, b), v) in orbit.steps.iter().zip(&values[1..]) {
                writeln!(
                    out,
                    "  {:<14} -> [{}] on {} strands: {}",
                    mv.to_string(),
                    b,
                    b.strands(),
                    v
                )?;
            }
            if pass {
                writeln!(out, "PASS: invariant {} at every node", values[0])?;
            } else {
                writeln!(out, "FAIL: invariant changed along the orbit")?;
            }
        }
    }
    Ok(if pass { EXIT_OK } else { EXIT_MISMATCH })
}

fn cmd_table(a: &TableArgs, out: &mut dyn Write) -> Outcome {
    let mut rows = Vec::new();
    let mut all_ok = true;
    for f in fixtures() {
        let report = check_wada_conjecture(&f.braid);
        let wada_ok = report.wada.as_integer() == Some(f.wada.into());
        let alexander_ok = report.alexander.unit_equal(&f.alexander);
        let ok = wada_ok && alexander_ok && report.consistent() == Some(true);
        all_ok &= ok;
        rows.push((f, report, ok));
    }

    match a.format {
        Format::Json => {
            let v: Vec<Value> = rows
                .iter()
                .map(|(f, r, ok)| {
                    json!({
                        "name": f.name,
                        "braid": f.braid.to_string(),
                        "strands": f.braid.strands(),
                        "wada": r.wada.to_string(),
                        "alexander": r.alexander.to_string(),
                        "alexander_at_minus1": r.alexander_at_minus_1.to_string(),
                        "conjecture": r.status.to_string(),
                        "matches_expected": ok,
                    })
                })
                .collect();
            write_json(out, &json!(v))?;
        }
        Format::Text => {
            writeln!(
                out,
                "{:<14} {:<11} {:>2}  {:>4}  {:<31} {:>6}  {:<13} check",
                "name", "braid", "n", "wada", "alexander", "Δ(-1)", "conjecture"
            )?;
            for (f, r, ok) in &rows {
                let braid = if f.braid.is_empty() {
                    "(empty)".to_string()
                } else {
                    f.braid.to_string()
                };
                writeln!(
                    out,
                    "{:<14} {:<11} {:>2}  {:>4}  {:<31} {:>6}  {:<13} {}",
                    f.name,
                    braid,
                    f.braid.strands(),
                    r.wada.to_string(),
                    r.alexander.to_string(),
                    r.alexander_at_minus_1.to_string(),
                    r.status.to_string(),
                    if *ok { "ok" } else { "MISMATCH" }
                )?;
            }
        }
    }
    Ok(if all_ok { EXIT_OK } else { EXIT_MISMATCH })
}

fn cmd_search(a: &SearchArgs, out: &mut dyn Write) -> Outcome {
    let start = parse_braid(&a.from, a.from_strands)?;
    let goal = parse_braid(&a.to, a.to_strands)?;
    let limits = SearchLimits {
        max_nodes: a.max_nodes,
        ..SearchLimits::new(a.max_strands, a.max_length, a.max_depth)
    };
    let bounds = json!({
        "max_strands": a.max_strands,
        "max_length": a.max_length,
        "max_depth": a.max_depth,
        "max_nodes": a.max_nodes,
    });
    let result = search_markov_path(&start, &goal, &limits);

    match (&result, a.format) {
        (Err(SearchError::LimitExceeded { visited }), Format::Json) => {
            write_json(
                out,
                &json!({"status": "limit_exceeded", "visited": visited, "bounds": bounds}),
            )?;
        }
        (Err(e), Format::Text) => writeln!(out, "search aborted: {e}")?,
        (Ok(SearchOutcome::NotFoundWithinBounds { visited }), Format::Json) => {
            write_json(
                out,
                &json!({"status": "not_found", "visited": visited, "bounds": bounds}),
            )?;
        }
        (Ok(SearchOutcome::NotFoundWithinBounds { visited }), Format::Text) => {
            writeln!(out, "NOT FOUND within bounds ({visited} nodes visited)")?;
        }
        (Ok(SearchOutcome::Found(path)), format) => {
            let mut steps = Vec::with_capacity(path.len());
            let mut current = start.clone();
            for mv in path {
                current = mv.apply(&current).expect("certificate moves are legal");
                steps.push((mv.to_string(), current.clone()));
            }
            if format == Format::Json {
                let moves: Vec<Value> = steps
                    .iter()
                    .map(
                        |(m, b)| json!({"move": m, "braid": b.to_string(), "strands": b.strands()}),
                    )
                    .collect();
                write_json(
                    out,
                    &json!({"status": "found", "moves": moves, "bounds": bounds}),
                )?;
            } else {
                writeln!(out, "FOUND path of {} moves", steps.len())?;
                writeln!(
                    out,
                    "  {:<14}    [{}] on {} strands",
                    "start",
                    start,
                    start.strands()
                )?;
                for (m, b) in &steps {
                    writeln!(out, "  {:<14} -> [{}] on {} strands", m, b, b.strands())?;
                }
            }
        }
    }
    Ok(match result {
        Err(_) => EXIT_SEARCH_LIMIT,
        Ok(_) => EXIT_OK,
    })
}
