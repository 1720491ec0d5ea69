//! Command line driver: batch operations over `planar_code` streams.
//!
//! Commands read a stream from a file argument or standard input and write
//! either a `planar_code` stream (`gen`, `filter`, `construct`) or
//! line-delimited `key=value` records (`check`, `analyze`, `decompose`) to
//! standard output. Diagnostics go to standard error. Exit codes: 0 for
//! success (and, for `check`, every graph hamiltonian-connected), 1 when
//! `check` found a counterexample, 2 for input/configuration errors or
//! audit discrepancies.

use std::collections::BTreeMap;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::{Condvar, Mutex};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::checker::{check_hc, InductivePremise, Mode, PairStatus, RuleConfig, RuleId};
use crate::constructions::{self, Tree};
use crate::decomposition::{decomposition_tree, DecompositionTree};
use crate::enumerate;
use crate::planar_code;
use crate::structure::{
    find_common_separating_edge, scattering_certificate_not_hc, separating_triangles,
};
use crate::triangulation::Triangulation;

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "hamtri",
    about = "Analyze 3-connected plane triangulations for hamiltonian-connectedness",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate every triangulation on a given vertex count (planar_code).
    Gen(GenArgs),
    /// Keep only input graphs matching structural filters.
    Filter(FilterArgs),
    /// Decide hamiltonian-connectedness for every input graph.
    Check(CheckArgs),
    /// Report structural statistics for every input graph.
    Analyze(AnalyzeArgs),
    /// Print the decomposition tree of every input graph.
    Decompose(DecomposeArgs),
    /// Emit a named fixture or a tree-derived counterexample.
    Construct(ConstructArgs),
}

#[derive(Args, Debug)]
struct GenArgs {
    /// Number of vertices.
    #[arg(long)]
    n: usize,
    /// Refuse generation beyond this vertex count.
    #[arg(long, default_value_t = enumerate::DEFAULT_CAP)]
    cap: usize,
}

#[derive(Args, Debug)]
struct FilterArgs {
    /// Input planar_code file (standard input when omitted).
    input: Option<PathBuf>,
    /// Keep graphs with exactly this many separating triangles.
    #[arg(long = "sep-triangles")]
    sep_triangles: Option<usize>,
    /// Keep graphs whose decomposition tree has this shape.
    #[arg(long, value_enum)]
    tree: Option<TreeFilter>,
}

#[derive(Args, Debug)]
struct CheckArgs {
    /// Input planar_code file (standard input when omitted).
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = ModeArg::Optimized)]
    mode: ModeArg,
    /// Transitive depth of endpoint rotation on found paths.
    #[arg(long = "rotation-depth", default_value_t = 2)]
    rotation_depth: usize,
    /// Enable the inductive rules, asserting their premise: every adjacent
    /// pair is hamiltonian-path-joined in all smaller instances (and
    /// same-size instances with no more separating triangles).
    #[arg(long)]
    inductive: bool,
    /// Emit one line per pair with the witness path where one exists.
    #[arg(long)]
    witness: bool,
    /// Worker threads; outputs are byte-identical for any value.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=1024))]
    jobs: u64,
    /// Append every non-hamiltonian-connected graph to this planar_code file.
    #[arg(long)]
    counterexamples: Option<PathBuf>,
    /// Stop at the first counterexample or audit discrepancy.
    #[arg(long)]
    strict: bool,
}

#[derive(Args, Debug)]
struct AnalyzeArgs {
    /// Input planar_code file (standard input when omitted).
    input: Option<PathBuf>,
    /// Scattering certificate search budget (largest cut size tried).
    #[arg(long = "max-subset", default_value_t = 8)]
    max_subset: usize,
}

#[derive(Args, Debug)]
struct DecomposeArgs {
    /// Input planar_code file (standard input when omitted).
    input: Option<PathBuf>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct ConstructArgs {
    /// Build the non-hamiltonian-connected triangulation realizing a tree,
    /// given as a text file of 0-based "a b" edge lines.
    #[arg(long = "counterexample-tree")]
    counterexample_tree: Option<PathBuf>,
    /// Emit a named fixture (k4, b3, octahedron, icosahedron, ce10,
    /// stacked_K).
    #[arg(long)]
    fixture: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum TreeFilter {
    /// Decomposition tree is a path (including a single node).
    Path,
    /// Decomposition tree has maximum degree at most 3.
    Maxdeg3,
    /// No tree-shape restriction.
    Any,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ModeArg {
    Naive,
    Optimized,
    Audit,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Naive => Mode::Naive,
            ModeArg::Optimized => Mode::Optimized,
            ModeArg::Audit => Mode::Audit,
        }
    }
}

/// Entry point against explicit streams, so tests can drive it directly.
/// `args` includes the program name in position 0.
pub fn run_with(
    args: &[&str],
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{rendered}");
                    EXIT_ERROR
                }
            };
        }
    };
    let code = match cli.command {
        Command::Gen(a) => cmd_gen(&a, stdout, stderr),
        Command::Filter(a) => cmd_filter(&a, stdin, stdout, stderr),
        Command::Check(a) => cmd_check(&a, stdin, stdout, stderr),
        Command::Analyze(a) => cmd_analyze(&a, stdin, stdout, stderr),
        Command::Decompose(a) => cmd_decompose(&a, stdin, stdout, stderr),
        Command::Construct(a) => cmd_construct(&a, stdout, stderr),
    };
    let _ = stdout.flush();
    let _ = stderr.flush();
    code
}

/// Read a whole stream, keeping 0-based stream positions. Malformed
/// individual graphs are reported and skipped; structural stream errors
/// abort.
fn read_entries(
    input: &Option<PathBuf>,
    stdin: &mut dyn Read,
    stderr: &mut dyn Write,
) -> Result<(Vec<(usize, Triangulation)>, bool), i32> {
    let bytes = match input {
        Some(path) => match fs::read(path) {
            Ok(b) => b,
            Err(e) => {
                let _ = writeln!(stderr, "error: cannot read {}: {e}", path.display());
                return Err(EXIT_ERROR);
            }
        },
        None => {
            let mut b = Vec::new();
            if let Err(e) = stdin.read_to_end(&mut b) {
                let _ = writeln!(stderr, "error: cannot read standard input: {e}");
                return Err(EXIT_ERROR);
            }
            b
        }
    };
    let mut entries = Vec::new();
    let mut skipped = false;
    let mut index = 0usize;
    for item in planar_code::PlanarCodeReader::new(bytes.as_slice()) {
        match item {
            Ok(g) => {
                entries.push((index, g));
                index += 1;
            }
            Err(e) if planar_code::is_skippable(&e) => {
                let _ = writeln!(stderr, "warning: skipping graph {index}: {e}");
                skipped = true;
                index += 1;
            }
            Err(e) => {
                let _ = writeln!(stderr, "error: malformed stream: {e}");
                return Err(EXIT_ERROR);
            }
        }
    }
    Ok((entries, skipped))
}

/// Write a stream with its header, even when no graph matched, so that
/// downstream consumers always see a well-formed (possibly empty) stream.
fn write_graphs<'a>(
    graphs: impl IntoIterator<Item = &'a Triangulation>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let mut emit = |bytes: &[u8]| -> bool {
        if let Err(e) = stdout.write_all(bytes) {
            let _ = writeln!(stderr, "error: cannot write output: {e}");
            return false;
        }
        true
    };
    if !emit(planar_code::HEADER) {
        return EXIT_ERROR;
    }
    for g in graphs {
        if !emit(&planar_code::encode_payload(g)) {
            return EXIT_ERROR;
        }
    }
    EXIT_OK
}

fn cmd_gen(args: &GenArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let iter = match enumerate::enumerate_triangulations_capped(args.n, args.cap) {
        Ok(it) => it,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_ERROR;
        }
    };
    let graphs: Vec<Triangulation> = iter.collect();
    write_graphs(&graphs, stdout, stderr)
}

fn tree_filter_matches(filter: TreeFilter, tree: &DecompositionTree) -> bool {
    let shape = tree.shape();
    match filter {
        TreeFilter::Path => shape.is_path,
        TreeFilter::Maxdeg3 => shape.max_degree <= 3,
        TreeFilter::Any => true,
    }
}

fn cmd_filter(
    args: &FilterArgs,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let (entries, skipped) = match read_entries(&args.input, stdin, stderr) {
        Ok(v) => v,
        Err(code) => return code,
    };
    let kept: Vec<&Triangulation> = entries
        .iter()
        .filter(|(_, g)| {
            if let Some(k) = args.sep_triangles {
                if separating_triangles(g).len() != k {
                    return false;
                }
            }
            match args.tree {
                Some(f) => tree_filter_matches(f, &decomposition_tree(g)),
                None => true,
            }
        })
        .map(|(_, g)| g)
        .collect();
    let code = write_graphs(kept, stdout, stderr);
    if code != EXIT_OK {
        code
    } else if skipped {
        EXIT_ERROR
    } else {
        EXIT_OK
    }
}

fn rule_key(rule: RuleId) -> &'static str {
    match rule {
        RuleId::CycleSeed => "cycle_seed",
        RuleId::Rotation => "rotation",
        RuleId::PathTreeAdj => "path_tree_adj",
        RuleId::Dist2Deg4 => "dist2_deg4",
        RuleId::Dist2Deg5 => "dist2_deg5",
        RuleId::FlipSkip => "flip_skip",
        RuleId::ContractSkip => "contract_skip",
        RuleId::Search => "search",
    }
}

fn join<T: std::fmt::Display>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    let parts: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    if parts.is_empty() {
        "-".into()
    } else {
        parts.join(sep)
    }
}

/// Everything `check` produces for one graph, precomputed so that worker
/// threads stay free of output concerns.
struct CheckOutcome {
    stdout_lines: Vec<String>,
    stderr_lines: Vec<String>,
    not_hc: bool,
    audit_failed: bool,
    payload: Vec<u8>,
}

fn check_one(id: usize, g: &Triangulation, mode: Mode, config: &RuleConfig, witness: bool) -> CheckOutcome {
    let report = check_hc(g, mode, config);
    let mut line = format!(
        "graph={id} n={} hamiltonian_connected={}",
        report.n, report.hamiltonian_connected
    );
    for rule in RuleId::ALL {
        let count = report.rule_counts.get(&rule).copied().unwrap_or(0);
        line.push_str(&format!(" {}={count}", rule_key(rule)));
    }
    line.push_str(&format!(
        " refuted={} refuted_pairs={} audit_failures={}",
        report.refuted.len(),
        join(report.refuted.iter().map(|(x, y)| format!("{x}-{y}")), ","),
        report.audit.len()
    ));
    let mut stdout_lines = vec![line];
    if witness {
        for p in &report.pairs {
            let (x, y) = p.pair;
            let line = match &p.status {
                PairStatus::Covered { rule, witness } => {
                    let path = match witness {
                        Some(w) => join(w.iter(), ","),
                        None => "-".into(),
                    };
                    format!(
                        "graph={id} pair={x}-{y} status=covered rule={} path={path}",
                        rule.name()
                    )
                }
                PairStatus::Refuted => {
                    format!("graph={id} pair={x}-{y} status=refuted rule=- path=-")
                }
            };
            stdout_lines.push(line);
        }
    }
    let stderr_lines = report
        .audit
        .iter()
        .map(|f| {
            format!(
                "audit: graph={id} pair={}-{} rule={} {}",
                f.pair.0,
                f.pair.1,
                f.rule.name(),
                f.detail
            )
        })
        .collect();
    let not_hc = !report.hamiltonian_connected;
    CheckOutcome {
        stdout_lines,
        stderr_lines,
        audit_failed: !report.audit.is_empty(),
        not_hc,
        payload: if not_hc {
            planar_code::encode_payload(g)
        } else {
            Vec::new()
        },
    }
}

/// Run `f` over the entries on `jobs` workers and hand results to `emit`
/// in input order (a reordering buffer over a shared queue). When `emit`
/// returns false, processing stops: no further result is emitted and
/// workers stop claiming new entries.
fn map_ordered<O: Send>(
    entries: &[(usize, Triangulation)],
    jobs: usize,
    f: impl Fn(usize, &Triangulation) -> O + Sync,
    mut emit: impl FnMut(O) -> bool,
) {
    let stop = AtomicBool::new(false);
    let next = AtomicUsize::new(0);
    let state: Mutex<(BTreeMap<usize, O>, usize)> = Mutex::new((BTreeMap::new(), 0));
    let ready = Condvar::new();
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| {
                loop {
                    if stop.load(Ordering::Acquire) {
                        break;
                    }
                    let slot = next.fetch_add(1, Ordering::AcqRel);
                    if slot >= entries.len() {
                        break;
                    }
                    let (id, g) = &entries[slot];
                    let out = f(*id, g);
                    let mut s = state.lock().unwrap();
                    s.0.insert(slot, out);
                    drop(s);
                    ready.notify_all();
                }
                let mut s = state.lock().unwrap();
                s.1 += 1;
                drop(s);
                ready.notify_all();
            });
        }
        // Writer: drain results in order on the scope's original thread.
        let mut expected = 0usize;
        'writer: while expected < entries.len() {
            let out = {
                let mut s = state.lock().unwrap();
                loop {
                    if let Some(o) = s.0.remove(&expected) {
                        break o;
                    }
                    if s.1 == jobs {
                        // All workers finished; nothing more will arrive.
                        break 'writer;
                    }
                    s = ready.wait(s).unwrap();
                }
            };
            expected += 1;
            if !emit(out) {
                stop.store(true, Ordering::Release);
                break;
            }
        }
        stop.store(true, Ordering::Release);
    });
}

fn cmd_check(
    args: &CheckArgs,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let (entries, skipped) = match read_entries(&args.input, stdin, stderr) {
        Ok(v) => v,
        Err(code) => return code,
    };
    let config = RuleConfig {
        rotation_depth: args.rotation_depth,
        inductive: if args.inductive {
            InductivePremise::Asserted
        } else {
            InductivePremise::Off
        },
    };
    let mode: Mode = args.mode.into();
    let mut any_not_hc = false;
    let mut any_audit_failure = false;
    let mut io_failed = false;
    let mut counterexample_bytes: Vec<u8> = planar_code::HEADER.to_vec();
    let mut any_counterexample = false;

    map_ordered(
        &entries,
        args.jobs as usize,
        |id, g| check_one(id, g, mode, &config, args.witness),
        |out| {
            for line in &out.stdout_lines {
                if writeln!(stdout, "{line}").is_err() {
                    io_failed = true;
                    return false;
                }
            }
            for line in &out.stderr_lines {
                let _ = writeln!(stderr, "{line}");
            }
            if out.not_hc {
                any_not_hc = true;
                any_counterexample = true;
                counterexample_bytes.extend_from_slice(&out.payload);
            }
            if out.audit_failed {
                any_audit_failure = true;
            }
            !(args.strict && (out.not_hc || out.audit_failed))
        },
    );

    if let Some(path) = &args.counterexamples {
        let bytes: &[u8] = if any_counterexample {
            &counterexample_bytes
        } else {
            planar_code::HEADER
        };
        if let Err(e) = fs::write(path, bytes) {
            let _ = writeln!(stderr, "error: cannot write {}: {e}", path.display());
            io_failed = true;
        }
    }
    if io_failed || skipped || any_audit_failure {
        EXIT_ERROR
    } else if any_not_hc {
        EXIT_COUNTEREXAMPLE
    } else {
        EXIT_OK
    }
}

fn cmd_analyze(
    args: &AnalyzeArgs,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let (entries, skipped) = match read_entries(&args.input, stdin, stderr) {
        Ok(v) => v,
        Err(code) => return code,
    };
    for (id, g) in &entries {
        let septri = separating_triangles(g).len();
        let shape = decomposition_tree(g).shape();
        let common = match find_common_separating_edge(g) {
            Some(e) => format!("{}-{}", e.0, e.1),
            None => "none".into(),
        };
        let (bound, x) = match scattering_certificate_not_hc(g, args.max_subset) {
            Some(w) => (w.bound.to_string(), join(w.x.iter(), ",")),
            None => ("-".into(), "-".into()),
        };
        let line = format!(
            "graph={id} n={} edges={} septri={septri} tree_nodes={} tree_maxdeg={} tree_path={} common_edge={common} scatter_bound={bound} scatter_x={x}",
            g.n(),
            g.edge_count(),
            shape.node_count,
            shape.max_degree,
            shape.is_path,
        );
        if writeln!(stdout, "{line}").is_err() {
            return EXIT_ERROR;
        }
    }
    if skipped {
        EXIT_ERROR
    } else {
        EXIT_OK
    }
}

fn shape_class(tree: &DecompositionTree) -> &'static str {
    let shape = tree.shape();
    if shape.node_count == 1 {
        "single"
    } else if shape.is_path {
        "path"
    } else if shape.max_degree == shape.node_count - 1 {
        "star"
    } else {
        "tree"
    }
}

fn cmd_decompose(
    args: &DecomposeArgs,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let (entries, skipped) = match read_entries(&args.input, stdin, stderr) {
        Ok(v) => v,
        Err(code) => return code,
    };
    for (id, g) in &entries {
        let tree = decomposition_tree(g);
        let orders = join(tree.pieces.iter().map(|p| p.graph.n()), ",");
        let edges = join(
            tree.edges.iter().map(|(a, b, t)| {
                let [x, y, z] = t.vertices();
                format!("{a}-{b}:{x}.{y}.{z}")
            }),
            ";",
        );
        let line = format!(
            "graph={id} pieces={} orders={orders} shape={} signature={} edges={edges}",
            tree.pieces.len(),
            shape_class(&tree),
            tree.shape_signature(),
        );
        if writeln!(stdout, "{line}").is_err() {
            return EXIT_ERROR;
        }
    }
    if skipped {
        EXIT_ERROR
    } else {
        EXIT_OK
    }
}

fn cmd_construct(args: &ConstructArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let graph = if let Some(path) = &args.counterexample_tree {
        let text = match fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => {
                let _ = writeln!(stderr, "error: cannot read {}: {e}", path.display());
                return EXIT_ERROR;
            }
        };
        match Tree::parse_text(&text).and_then(|t| constructions::counterexample_from_tree(&t)) {
            Ok(ce) => ce.graph,
            Err(e) => {
                let _ = writeln!(stderr, "error: {e}");
                return EXIT_ERROR;
            }
        }
    } else if let Some(name) = &args.fixture {
        match constructions::fixture(name) {
            Ok(g) => g,
            Err(e) => {
                let _ = writeln!(stderr, "error: {e}");
                return EXIT_ERROR;
            }
        }
    } else {
        unreachable!("clap enforces exactly one construct source");
    };
    write_graphs([&graph], stdout, stderr)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str], stdin: &[u8]) -> (i32, Vec<u8>, Vec<u8>) {
        let mut input = stdin;
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_with(args, &mut input, &mut out, &mut err);
        (code, out, err)
    }

    #[test]
    fn gen_counts_and_cap() {
        let (code, out, _) = run(&["hamtri", "gen", "--n", "6"], b"");
        assert_eq!(code, EXIT_OK);
        let graphs = planar_code::read_stream(&out).unwrap();
        assert_eq!(graphs.len(), 2);
        let (code, _, err) = run(&["hamtri", "gen", "--n", "3"], b"");
        assert_eq!(code, EXIT_ERROR);
        assert!(!err.is_empty());
        let (code, _, _) = run(&["hamtri", "gen", "--n", "15"], b"");
        assert_eq!(code, EXIT_ERROR);
    }

    #[test]
    fn filter_by_triangle_count_and_tree() {
        let (_, stream, _) = run(&["hamtri", "gen", "--n", "6"], b"");
        let (code, out, _) = run(&["hamtri", "filter", "--sep-triangles", "0"], &stream);
        assert_eq!(code, EXIT_OK);
        let kept = planar_code::read_stream(&out).unwrap();
        assert_eq!(kept.len(), 1, "only the octahedron has none");
        assert_eq!(kept[0].degree(0), 4);

        let (code, out, _) = run(&["hamtri", "filter", "--sep-triangles", "2"], &stream);
        assert_eq!(code, EXIT_OK);
        assert_eq!(planar_code::read_stream(&out).unwrap().len(), 1);

        // CE10's decomposition tree is a 4-star: filtered out by `path`.
        let (_, ce, _) = run(&["hamtri", "construct", "--fixture", "ce10"], b"");
        let (code, out, _) = run(&["hamtri", "filter", "--tree", "path"], &ce);
        assert_eq!(code, EXIT_OK);
        assert_eq!(planar_code::read_stream(&out).unwrap().len(), 0);
        let (_, out, _) = run(&["hamtri", "filter", "--tree", "any"], &ce);
        assert_eq!(planar_code::read_stream(&out).unwrap().len(), 1);
    }

    #[test]
    fn check_exit_codes_and_record_shape() {
        let (_, stream, _) = run(&["hamtri", "gen", "--n", "6"], b"");
        let (code, out, _) = run(&["hamtri", "check"], &stream);
        assert_eq!(code, EXIT_OK);
        let text = String::from_utf8(out).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 2);
        assert!(lines[0].starts_with("graph=0 n=6 hamiltonian_connected=true"));
        for key in [
            "cycle_seed=", "rotation=", "path_tree_adj=", "dist2_deg4=", "dist2_deg5=",
            "flip_skip=", "contract_skip=", "search=", "refuted=", "refuted_pairs=-",
            "audit_failures=0",
        ] {
            assert!(lines[0].contains(key), "missing {key} in {}", lines[0]);
        }

        let (_, ce, _) = run(&["hamtri", "construct", "--fixture", "ce10"], b"");
        let (code, out, _) = run(&["hamtri", "check", "--mode", "naive"], &ce);
        assert_eq!(code, EXIT_COUNTEREXAMPLE);
        let text = String::from_utf8(out).unwrap();
        assert!(text.contains("hamiltonian_connected=false"));
        assert!(text.contains("refuted=10"));
        assert!(text.contains("refuted_pairs=0-1,"));
    }

    #[test]
    fn check_jobs_do_not_change_output() {
        let (_, mut stream, _) = run(&["hamtri", "gen", "--n", "7"], b"");
        let (_, ce, _) = run(&["hamtri", "construct", "--fixture", "ce10"], b"");
        stream.extend_from_slice(&ce[planar_code::HEADER.len()..]);
        let (code1, out1, err1) = run(&["hamtri", "check", "--witness"], &stream);
        let (code3, out3, err3) =
            run(&["hamtri", "check", "--witness", "--jobs", "3"], &stream);
        assert_eq!(code1, EXIT_COUNTEREXAMPLE);
        assert_eq!(code1, code3);
        assert_eq!(out1, out3, "worker count must not change bytes");
        assert_eq!(err1, err3);
    }

    #[test]
    fn analyze_and_decompose_records() {
        let (_, ce, _) = run(&["hamtri", "construct", "--fixture", "ce10"], b"");
        let (code, out, _) = run(&["hamtri", "analyze"], &ce);
        assert_eq!(code, EXIT_OK);
        let text = String::from_utf8(out).unwrap();
        assert!(text.contains("n=10 edges=24 septri=4"));
        assert!(text.contains("tree_maxdeg=4"));
        assert!(text.contains("scatter_bound=0"));
        assert!(text.contains("scatter_x=0,1,2,3,4"));

        let (code, out, _) = run(&["hamtri", "decompose"], &ce);
        assert_eq!(code, EXIT_OK);
        let text = String::from_utf8(out).unwrap();
        assert!(text.contains("pieces=5"));
        assert!(text.contains("shape=star"));

        let (_, b3, _) = run(&["hamtri", "construct", "--fixture", "b3"], b"");
        let (_, out, _) = run(&["hamtri", "analyze"], &b3);
        let text = String::from_utf8(out).unwrap();
        assert!(text.contains("septri=1"));
        assert!(text.contains("common_edge=0-1"));
    }

    #[test]
    fn construct_tree_roundtrip() {
        use std::io::Write as _;
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("star.tree");
        let mut f = std::fs::File::create(&path).unwrap();
        writeln!(f, "# four leaves\n0 1\n0 2\n0 3\n0 4").unwrap();
        drop(f);
        let (code, out, _) = run(
            &["hamtri", "construct", "--counterexample-tree", path.to_str().unwrap()],
            b"",
        );
        assert_eq!(code, EXIT_OK);
        let graphs = planar_code::read_stream(&out).unwrap();
        assert_eq!(graphs.len(), 1);
        assert_eq!(graphs[0].n(), 10);

        let (code, _, err) = run(&["hamtri", "construct", "--fixture", "nope"], b"");
        assert_eq!(code, EXIT_ERROR);
        assert!(!err.is_empty());
    }

    #[test]
    fn strict_stops_at_first_counterexample() {
        let (_, ce, _) = run(&["hamtri", "construct", "--fixture", "ce10"], b"");
        let (_, oct, _) = run(&["hamtri", "construct", "--fixture", "octahedron"], b"");
        let mut stream = ce.clone();
        stream.extend_from_slice(&oct[planar_code::HEADER.len()..]);
        let (code, out, _) = run(&["hamtri", "check", "--strict"], &stream);
        assert_eq!(code, EXIT_COUNTEREXAMPLE);
        let text = String::from_utf8(out).unwrap();
        assert_eq!(text.lines().count(), 1, "processing stops after graph 0");
        let (_, out, _) = run(&["hamtri", "check"], &stream);
        assert_eq!(String::from_utf8(out).unwrap().lines().count(), 2);
    }

    #[test]
    fn counterexample_file_collects_failures() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.pc");
        let (_, mut stream, _) = run(&["hamtri", "gen", "--n", "5"], b"");
        let (_, ce, _) = run(&["hamtri", "construct", "--fixture", "ce10"], b"");
        stream.extend_from_slice(&ce[planar_code::HEADER.len()..]);
        let (code, _, _) = run(
            &["hamtri", "check", "--counterexamples", path.to_str().unwrap()],
            &stream,
        );
        assert_eq!(code, EXIT_COUNTEREXAMPLE);
        let echoed = planar_code::read_stream(&fs::read(&path).unwrap()).unwrap();
        assert_eq!(echoed.len(), 1);
        assert_eq!(echoed[0].n(), 10);
    }
}
