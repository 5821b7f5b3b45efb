mod args;
mod output;

use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use maxgenus::generators::generate;
use maxgenus::oracle::xi_oracle;
use maxgenus::{
    analyze, emit_edge_list, emit_simple_edge_list, parse_edge_list, CounterexampleBundle, GenusError,
    LabeledGraph, OracleBudget, TreeStrategy,
};
use rayon::prelude::*;

use args::{Cli, Command, Format, TreeArgs};
use output::{CheckJson, ComputeJson, Entry, ErrorJson};

const OK: i32 = 0;
const INVARIANT: i32 = 1;
const INPUT: i32 = 2;
const BUDGET: i32 = 3;

fn error_code(e: &GenusError) -> i32 {
    match e {
        GenusError::BudgetExceeded(_) => BUDGET,
        GenusError::InvariantViolation(_) => INVARIANT,
        _ => INPUT,
    }
}

struct Outcome {
    entry: Entry,
    code: i32,
    log: String,
}

impl Outcome {
    fn error(file: &str, error: String, code: i32, log: String) -> Self {
        Outcome { entry: Entry::Error(ErrorJson { file: file.to_string(), error, exit_code: code }), code, log }
    }
}

fn display_name(path: &Path) -> String {
    if path == Path::new("-") {
        "<stdin>".to_string()
    } else {
        path.display().to_string()
    }
}

fn read_input(path: &Path) -> std::io::Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path)
    }
}

type Loaded = Result<LabeledGraph, (String, i32)>;

/// Reads every input up front so stdin is consumed once, then parses.
fn load_all(files: &[PathBuf]) -> Vec<(String, Loaded)> {
    files
        .iter()
        .map(|p| {
            let parsed = read_input(p)
                .map_err(|e| (e.to_string(), INPUT))
                .and_then(|text| parse_edge_list(&text).map_err(|e| (e.to_string(), INPUT)));
            (display_name(p), parsed)
        })
        .collect()
}

fn compute_one(file: &str, lg: &LabeledGraph, strategy: TreeStrategy, tree: &'static str, verbose: bool) -> Outcome {
    let mut log = String::new();
    let start = Instant::now();
    let analysis = match analyze(&lg.graph, strategy) {
        Ok(a) => a,
        Err(e) => return Outcome::error(file, e.to_string(), error_code(&e), log),
    };
    if verbose {
        log += &format!(
            "{file}: {} cycles, {} intersecting pairs, matching {} in {:?}\n",
            analysis.intersection.n_cycles(),
            analysis.intersection.graph().n_edges(),
            analysis.matching.size(),
            start.elapsed()
        );
    }
    if let Err(msg) = analysis.report.check_invariants(&lg.graph) {
        return Outcome::error(file, format!("invariant violation: {msg}"), INVARIANT, log);
    }
    Outcome { entry: Entry::Compute(ComputeJson::new(file.to_string(), lg, &analysis.report, tree)), code: OK, log }
}

fn check_one(
    file: &str,
    lg: &LabeledGraph,
    strategy: TreeStrategy,
    budget: &OracleBudget,
    bundle_dir: &Path,
    verbose: bool,
) -> Outcome {
    let mut log = String::new();
    let g = &lg.graph;
    let analysis = match analyze(g, strategy) {
        Ok(a) => a,
        Err(e) => return Outcome::error(file, e.to_string(), error_code(&e), log),
    };
    let report = analysis.report;
    if let Err(msg) = report.check_invariants(g) {
        return Outcome::error(file, format!("invariant violation: {msg}"), INVARIANT, log);
    }
    let start = Instant::now();
    let oracle = match xi_oracle(g, budget) {
        Ok(o) => o,
        Err(e) => return Outcome::error(file, e.to_string(), error_code(&e), log),
    };
    if verbose {
        log += &format!("{file}: oracle xi {} in {:?}\n", oracle.xi, start.elapsed());
    }
    let oracle_gamma = (report.beta - oracle.xi) / 2;
    let equal = oracle_gamma == report.gamma_max;
    let mut bundle = None;
    if !equal {
        let stem = Path::new(file).file_stem().map_or("stdin".into(), |s| s.to_string_lossy().into_owned());
        let path = bundle_dir.join(format!("{stem}.counterexample.json"));
        let written = CounterexampleBundle::collect(g, &report.tree, budget)
            .map_err(|e| e.to_string())
            .and_then(|b| serde_json::to_string_pretty(&b).map_err(|e| e.to_string()))
            .and_then(|text| std::fs::write(&path, text + "\n").map_err(|e| e.to_string()));
        match written {
            Ok(()) => bundle = Some(path.display().to_string()),
            Err(e) => log += &format!("{file}: could not write bundle: {e}\n"),
        }
    }
    Outcome {
        entry: Entry::Check(CheckJson {
            file: file.to_string(),
            beta: report.beta,
            pipeline_gamma_max: report.gamma_max,
            oracle_gamma_max: oracle_gamma,
            oracle_xi: oracle.xi,
            equal,
            bundle,
        }),
        code: if equal { OK } else { INVARIANT },
        log,
    }
}

fn run_batch<F>(files: &[PathBuf], run: F) -> Vec<Outcome>
where
    F: Fn(&str, &LabeledGraph) -> Outcome + Sync,
{
    load_all(files)
        .into_par_iter()
        .map(|(file, parsed)| match parsed {
            Ok(lg) => run(&file, &lg),
            Err((msg, code)) => Outcome::error(&file, msg, code, String::new()),
        })
        .collect()
}

fn render(outcomes: &[Outcome], format: Format) -> String {
    match format {
        Format::Text => outcomes.iter().map(|o| o.entry.text()).collect(),
        Format::Json => {
            let json = if outcomes.len() == 1 {
                serde_json::to_string_pretty(&outcomes[0].entry)
            } else {
                serde_json::to_string_pretty(&outcomes.iter().map(|o| &o.entry).collect::<Vec<_>>())
            };
            json.expect("report serialization") + "\n"
        }
    }
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), String> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| e.to_string()),
    }
}

fn strategy_or_exit(tree: &TreeArgs) -> Result<TreeStrategy, i32> {
    tree.strategy().map_err(|msg| {
        eprintln!("maxgenus: {msg}");
        INPUT
    })
}

fn run(cli: Cli) -> i32 {
    let format = cli.format();
    let outcomes = match &cli.command {
        Command::Compute { files, tree } => {
            let strategy = match strategy_or_exit(tree) {
                Ok(s) => s,
                Err(code) => return code,
            };
            run_batch(files, |file, lg| compute_one(file, lg, strategy, tree.name(), cli.verbose))
        }
        Command::Check { files, tree, budget, bundle_dir } => {
            let strategy = match strategy_or_exit(tree) {
                Ok(s) => s,
                Err(code) => return code,
            };
            let budget = budget.budget();
            run_batch(files, |file, lg| check_one(file, lg, strategy, &budget, bundle_dir, cli.verbose))
        }
        Command::Gen { family } => {
            return match generate(&family.spec()) {
                Ok(g) => finish(write_output(cli.output.as_deref(), &emit_edge_list(&g)), OK),
                Err(e) => {
                    eprintln!("maxgenus: {e}");
                    error_code(&e)
                }
            };
        }
        Command::GmDump { file, tree } => {
            let strategy = match strategy_or_exit(tree) {
                Ok(s) => s,
                Err(code) => return code,
            };
            return gm_dump(file, strategy, cli.output.as_deref());
        }
    };
    for o in &outcomes {
        eprint!("{}", o.log);
        if let Entry::Error(e) = &o.entry {
            eprintln!("maxgenus: {}: {}", e.file, e.error);
        }
    }
    let code = outcomes.iter().map(|o| o.code).max().unwrap_or(OK);
    finish(write_output(cli.output.as_deref(), &render(&outcomes, format)), code)
}

fn finish(written: Result<(), String>, code: i32) -> i32 {
    match written {
        Ok(()) => code,
        Err(e) => {
            eprintln!("maxgenus: {e}");
            INPUT
        }
    }
}

fn gm_dump(file: &Path, strategy: TreeStrategy, out: Option<&Path>) -> i32 {
    let name = display_name(file);
    let analysis = match read_input(file)
        .map_err(|e| (e.to_string(), INPUT))
        .and_then(|text| parse_edge_list(&text).map_err(|e| (e.to_string(), INPUT)))
        .and_then(|lg| analyze(&lg.graph, strategy).map_err(|e| (e.to_string(), error_code(&e))))
    {
        Ok(a) => a,
        Err((msg, code)) => {
            eprintln!("maxgenus: {name}: {msg}");
            return code;
        }
    };
    let ig = &analysis.intersection;
    let mut text = format!(
        "# intersection graph of {name}: {} cycles, {} edges, maximum matching {}\n",
        ig.n_cycles(),
        ig.graph().n_edges(),
        analysis.matching.size()
    );
    for (i, c) in ig.cycles().iter().enumerate() {
        text += &format!("# cycle {i} closed by edge {}\n", c.cotree_edge);
    }
    text += &emit_simple_edge_list(ig.graph());
    finish(write_output(out, &text), OK)
}

fn main() -> ExitCode {
    let code = run(Cli::parse());
    ExitCode::from(code as u8)
}
