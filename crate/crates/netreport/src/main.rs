//! Command-line front end: load, validate, compute, render.
//!
//! Exit codes are a stable contract: 0 success, 1 I/O or parse failure,
//! 2 manifest validation failure, 3 internal solver failure. Diagnostics
//! go to stderr; stdout carries data.

use clap::{Parser, Subcommand, ValueEnum};
use netreport::dist::{attribute_distribution, standard_distributions, DistributionSummary};
use netreport::graph::{
    disjoint_union, load_attributes, load_edge_list, AttributeTable, AttributeTarget, ColumnKind,
    Delimiter, EdgeColumns, Graph, LoadOptions, LoadWarning,
};
use netreport::manifest::{
    cross_check, parse_manifest, validate_manifest, Finding, Manifest, Severity, ValidationReport,
    MANIFEST_SCHEMA_JSON,
};
use netreport::report::{
    build_report, config_digest, stats_text_multi, stats_text_single, write_tree, OutputFormat,
    ReportOptions, StatsBlock,
};
use netreport::stats::{aggregate, analyze, point_stats, AnalysisConfig, PointStats};
use netreport::Error;
use std::collections::{HashMap, HashSet};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

/// Turn a raw network dataset into a validated, reproducible report.
#[derive(Parser, Debug)]
#[command(name = "netreport", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Produce the full report tree: document, charts, statistics, and
    /// TSV exports.
    Generate(GenerateArgs),
    /// Compute the point-statistics table and print it.
    Stats(StatsArgs),
    /// Check a manifest for completeness and consistency.
    Validate(ValidateArgs),
}

#[derive(clap::Args, Debug)]
struct InputArgs {
    /// Edge list file (single-network mode).
    #[arg(long, value_name = "FILE")]
    edges: Option<PathBuf>,

    /// Directory whose edge lists form one multi-network dataset.
    /// Hidden files and .toml/.md files are ignored.
    #[arg(long, value_name = "DIR", conflicts_with = "edges")]
    dir: Option<PathBuf>,

    /// Treat edges as directed arcs.
    #[arg(long)]
    directed: bool,

    /// Keep repeated edges as parallel edges instead of collapsing them.
    #[arg(long)]
    multigraph: bool,

    /// Field delimiter: "whitespace", "comma", or a single character.
    #[arg(long, value_name = "DELIM", default_value = "whitespace")]
    delimiter: Delimiter,

    /// Columns after src and dst: auto, none, weight, timestamp, or
    /// weight-timestamp.
    #[arg(long, value_name = "LAYOUT", default_value = "auto")]
    edge_columns: EdgeColumns,
}

#[derive(clap::Args, Debug)]
struct SolverArgs {
    /// PageRank damping factor, 0 <= alpha < 1.
    #[arg(long, default_value_t = 0.85)]
    alpha: f64,

    /// How many leading singular values to compute.
    #[arg(long = "top-k", value_name = "K", default_value_t = 100)]
    top_k: usize,

    /// Histogram bins for quantitative attribute distributions.
    #[arg(long, default_value_t = 30)]
    bins: usize,

    /// Convergence tolerance for the iterative solvers.
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,

    /// Bucket width for the temporal edge series, in timestamp units.
    #[arg(long, value_name = "UNITS")]
    window: Option<i64>,

    /// Refuse any computation path that is not deterministic. Every
    /// built-in solver uses fixed seeds, so this asserts the guarantee
    /// rather than changing behavior.
    #[arg(long)]
    seedless: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Markdown,
    Html,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> OutputFormat {
        match f {
            FormatArg::Markdown => OutputFormat::Markdown,
            FormatArg::Html => OutputFormat::Html,
        }
    }
}

#[derive(clap::Args, Debug)]
struct GenerateArgs {
    #[command(flatten)]
    input: InputArgs,

    /// Dataset manifest (TOML).
    #[arg(long, value_name = "FILE")]
    manifest: Option<PathBuf>,

    /// Node attribute CSV with an "id" column; repeatable.
    #[arg(long = "node-attrs", value_name = "FILE")]
    node_attrs: Vec<PathBuf>,

    /// Edge attribute CSV with one row per edge-list line; repeatable.
    #[arg(long = "edge-attrs", value_name = "FILE")]
    edge_attrs: Vec<PathBuf>,

    /// Force a node column kind, e.g. --node-kind age=quantitative.
    /// Kinds: quantitative, categorical, ordered-categorical.
    #[arg(long = "node-kind", value_name = "COL=KIND", value_parser = parse_kind)]
    node_kinds: Vec<(String, ColumnKind)>,

    /// Force an edge column kind; same syntax as --node-kind.
    #[arg(long = "edge-kind", value_name = "COL=KIND", value_parser = parse_kind)]
    edge_kinds: Vec<(String, ColumnKind)>,

    /// Output directory for the report tree.
    #[arg(long, value_name = "DIR", default_value = "report")]
    out: PathBuf,

    /// Document format.
    #[arg(long, value_enum, default_value_t = FormatArg::Markdown)]
    format: FormatArg,

    /// Generate even when manifest validation finds errors; the report
    /// then carries a warning banner listing them.
    #[arg(long)]
    allow_invalid_manifest: bool,

    #[command(flatten)]
    solver: SolverArgs,
}

#[derive(clap::Args, Debug)]
struct StatsArgs {
    #[command(flatten)]
    input: InputArgs,

    /// Write the statistics table here instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,

    #[command(flatten)]
    solver: SolverArgs,
}

#[derive(clap::Args, Debug)]
struct ValidateArgs {
    /// Dataset manifest (TOML).
    #[arg(long, value_name = "FILE", required_unless_present = "print_schema")]
    manifest: Option<PathBuf>,

    #[command(flatten)]
    input: InputArgs,

    /// Print the manifest JSON schema and exit.
    #[arg(long)]
    print_schema: bool,
}

fn parse_kind(s: &str) -> Result<(String, ColumnKind), String> {
    let (name, kind) = s
        .split_once('=')
        .ok_or_else(|| format!("expected COL=KIND, got {s:?}"))?;
    if name.is_empty() {
        return Err("column name is empty".to_string());
    }
    Ok((name.to_string(), kind.parse()?))
}

fn main() -> ExitCode {
    // A panic below this point is a solver bug, not bad input; it gets
    // its own exit code so callers can tell the difference.
    let code = match std::panic::catch_unwind(run) {
        Ok(code) => code,
        Err(_) => {
            eprintln!("netreport: internal error (panic); please report this");
            3
        }
    };
    ExitCode::from(code)
}

fn run() -> u8 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // Help and --version land on stdout and are not failures.
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let result = match cli.command {
        Command::Generate(args) => cmd_generate(args),
        Command::Stats(args) => cmd_stats(args),
        Command::Validate(args) => cmd_validate(args),
    };
    match result {
        Ok(()) => 0,
        Err(err) => {
            eprintln!("netreport: {err}");
            match err {
                Error::Manifest { .. } => 2,
                Error::Solver { .. } => 3,
                _ => 1,
            }
        }
    }
}

fn load_options(input: &InputArgs) -> LoadOptions {
    LoadOptions {
        directed: input.directed,
        multigraph: input.multigraph,
        delimiter: input.delimiter,
        columns: input.edge_columns,
    }
}

fn print_warnings(source: &Path, warnings: &[LoadWarning]) {
    for w in warnings {
        eprintln!("netreport: warning: {}: {}", source.display(), w.message);
    }
}

enum LoadedInput {
    Single(Graph),
    Multi(Vec<(String, Graph)>),
}

fn load_input(input: &InputArgs) -> netreport::Result<LoadedInput> {
    let opts = load_options(input);
    match (&input.edges, &input.dir) {
        (Some(edges), None) => {
            let (graph, warnings) = load_edge_list(edges, &opts)?;
            print_warnings(edges, &warnings);
            Ok(LoadedInput::Single(graph))
        }
        (None, Some(dir)) => {
            let mut members = Vec::new();
            let mut seen = HashSet::new();
            for path in member_files(dir)? {
                let name = member_name(&path);
                if !seen.insert(name.clone()) {
                    return Err(Error::usage(format!(
                        "two member files share the name {name:?}; rename one"
                    )));
                }
                let (graph, warnings) = load_edge_list(&path, &opts)?;
                print_warnings(&path, &warnings);
                members.push((name, graph));
            }
            Ok(LoadedInput::Multi(members))
        }
        (None, None) => Err(Error::usage("one of --edges or --dir is required")),
        (Some(_), Some(_)) => Err(Error::usage("--edges and --dir are mutually exclusive")),
    }
}

/// Member edge lists of a dataset directory, sorted by file name.
fn member_files(dir: &Path) -> netreport::Result<Vec<PathBuf>> {
    let entries = std::fs::read_dir(dir).map_err(|e| Error::io(dir, e))?;
    let mut files = Vec::new();
    for entry in entries {
        let entry = entry.map_err(|e| Error::io(dir, e))?;
        let path = entry.path();
        let name = entry.file_name();
        if name.to_string_lossy().starts_with('.') {
            continue;
        }
        let excluded = matches!(path.extension().and_then(|e| e.to_str()), Some("toml" | "md"));
        if excluded || !path.is_file() {
            continue;
        }
        files.push(path);
    }
    files.sort();
    if files.is_empty() {
        return Err(Error::usage(format!(
            "{}: no edge list files found (hidden, .toml, and .md files are skipped)",
            dir.display()
        )));
    }
    Ok(files)
}

fn member_name(path: &Path) -> String {
    match path.file_stem() {
        Some(stem) => stem.to_string_lossy().into_owned(),
        None => path.display().to_string(),
    }
}

fn analysis_config(solver: &SolverArgs) -> AnalysisConfig {
    AnalysisConfig {
        tol: solver.tol,
        alpha: solver.alpha,
        top_singular: solver.top_k,
        ..AnalysisConfig::default()
    }
}

fn delimiter_name(d: Delimiter) -> String {
    match d {
        Delimiter::Whitespace => "whitespace".to_string(),
        Delimiter::Comma => "comma".to_string(),
        Delimiter::Char(c) => c.to_string(),
    }
}

fn columns_name(c: EdgeColumns) -> &'static str {
    match c {
        EdgeColumns::Auto => "auto",
        EdgeColumns::None => "none",
        EdgeColumns::Weight => "weight",
        EdgeColumns::Timestamp => "timestamp",
        EdgeColumns::WeightTimestamp => "weight-timestamp",
    }
}

/// The settings that shaped this run, in a fixed order. They are echoed
/// in the report and digested so mismatched outputs are detectable.
fn effective_config(
    input: &InputArgs,
    solver: &SolverArgs,
    format: Option<FormatArg>,
) -> Vec<(String, String)> {
    let mut pairs: Vec<(String, String)> = vec![
        ("directed".into(), input.directed.to_string()),
        ("multigraph".into(), input.multigraph.to_string()),
        ("delimiter".into(), delimiter_name(input.delimiter)),
        ("edge_columns".into(), columns_name(input.edge_columns).to_string()),
        ("alpha".into(), solver.alpha.to_string()),
        ("top_k".into(), solver.top_k.to_string()),
        ("bins".into(), solver.bins.to_string()),
        ("tol".into(), format!("{:e}", solver.tol)),
    ];
    if let Some(w) = solver.window {
        pairs.push(("window".into(), w.to_string()));
    }
    if let Some(f) = format {
        let name = match f {
            FormatArg::Markdown => "markdown",
            FormatArg::Html => "html",
        };
        pairs.push(("format".into(), name.to_string()));
    }
    pairs
}

fn stats_header(config: &[(String, String)]) -> Vec<String> {
    vec![
        format!("generated by netreport {}", env!("CARGO_PKG_VERSION")),
        format!("config digest: {}", config_digest(config)),
    ]
}

struct ManifestOutcome {
    manifest: Option<Manifest>,
    /// Error lines carried into the report banner when generation was
    /// forced past validation failures.
    forced: Vec<String>,
}

fn check_manifest(
    path: Option<&Path>,
    graph: Option<&Graph>,
    allow_invalid: bool,
) -> netreport::Result<ManifestOutcome> {
    let Some(path) = path else {
        let report = ValidationReport {
            findings: vec![Finding {
                severity: Severity::Error,
                path: "manifest".to_string(),
                message: "no manifest file was provided".to_string(),
            }],
        };
        for line in report.lines() {
            eprintln!("netreport: {line}");
        }
        if allow_invalid {
            return Ok(ManifestOutcome { manifest: None, forced: report.lines() });
        }
        return Err(Error::Manifest { report });
    };

    let manifest = parse_manifest(path)?;
    let mut report = validate_manifest(&manifest);
    if let Some(g) = graph {
        report.extend(cross_check(&manifest, g));
    }
    for line in report.lines() {
        eprintln!("netreport: {line}");
    }
    if report.passed() {
        Ok(ManifestOutcome { manifest: Some(manifest), forced: Vec::new() })
    } else if allow_invalid {
        let forced = report
            .findings
            .iter()
            .filter(|f| f.severity == Severity::Error)
            .map(Finding::to_string)
            .collect();
        Ok(ManifestOutcome { manifest: Some(manifest), forced })
    } else {
        Err(Error::Manifest { report })
    }
}

fn kind_map(overrides: &[(String, ColumnKind)]) -> HashMap<String, ColumnKind> {
    overrides.iter().cloned().collect()
}

/// Bars shown for a categorical attribute before the rest collapse into
/// an "others" row.
const TOP_CATEGORIES: usize = 12;

fn push_attribute_distributions(
    dists: &mut Vec<DistributionSummary>,
    source: &Path,
    table: &AttributeTable,
    bins: usize,
) {
    for col in &table.columns {
        match attribute_distribution(table, &col.name, TOP_CATEGORIES, bins) {
            Ok(d) => dists.push(d),
            // A column with no usable values is reported, not fatal.
            Err(e) => eprintln!(
                "netreport: warning: {}: column {:?} skipped: {e}",
                source.display(),
                col.name
            ),
        }
    }
}

fn dataset_name(input: &InputArgs) -> String {
    let path = input.edges.as_deref().or(input.dir.as_deref());
    match path {
        Some(p) => member_name(p),
        None => "dataset".to_string(),
    }
}

fn cmd_generate(args: GenerateArgs) -> netreport::Result<()> {
    let cfg = analysis_config(&args.solver);
    let config = effective_config(&args.input, &args.solver, Some(args.format));
    let name = dataset_name(&args.input);

    let (stats_owned, dists, outcome) = match load_input(&args.input)? {
        LoadedInput::Single(graph) => {
            let outcome = check_manifest(
                args.manifest.as_deref(),
                Some(&graph),
                args.allow_invalid_manifest,
            )?;
            let analysis = analyze(&graph, &cfg)?;
            let mut dists = standard_distributions(&graph, &analysis, args.solver.window)?;
            let node_kinds = kind_map(&args.node_kinds);
            for path in &args.node_attrs {
                let (table, warnings) =
                    load_attributes(path, &graph, AttributeTarget::Node, &node_kinds)?;
                print_warnings(path, &warnings);
                push_attribute_distributions(&mut dists, path, &table, args.solver.bins);
            }
            let edge_kinds = kind_map(&args.edge_kinds);
            for path in &args.edge_attrs {
                let (table, warnings) =
                    load_attributes(path, &graph, AttributeTarget::Edge, &edge_kinds)?;
                print_warnings(path, &warnings);
                push_attribute_distributions(&mut dists, path, &table, args.solver.bins);
            }
            (StatsOwned::Single(analysis.point), dists, outcome)
        }
        LoadedInput::Multi(members) => {
            if !args.node_attrs.is_empty() || !args.edge_attrs.is_empty() {
                return Err(Error::usage(
                    "attribute tables are not supported with --dir; \
                     run per-member generates instead",
                ));
            }
            let refs: Vec<(String, &Graph)> =
                members.iter().map(|(n, g)| (n.clone(), g)).collect();
            let union = disjoint_union(&refs)?;
            let outcome = check_manifest(
                args.manifest.as_deref(),
                Some(&union),
                args.allow_invalid_manifest,
            )?;
            let analysis = analyze(&union, &cfg)?;
            let dists = standard_distributions(&union, &analysis, args.solver.window)?;
            let member_stats: Vec<(String, PointStats)> = members
                .iter()
                .map(|(n, g)| (n.clone(), point_stats(g, &cfg)))
                .collect();
            let aggregates =
                aggregate(&member_stats.iter().map(|(_, s)| s.clone()).collect::<Vec<_>>());
            (StatsOwned::Multi { members: member_stats, aggregates }, dists, outcome)
        }
    };

    let opts = ReportOptions {
        format: args.format.into(),
        dataset_name: name,
        config,
        forced_validation: outcome.forced,
    };
    let block = stats_owned.block();
    let report = build_report(outcome.manifest.as_ref(), &block, &dists, &opts)?;
    write_tree(&args.out, &report)?;
    eprintln!("netreport: wrote {}", args.out.join(report.document_name).display());
    Ok(())
}

/// Owned statistics that outlive the borrowed `StatsBlock` handed to the
/// renderer.
enum StatsOwned {
    Single(PointStats),
    Multi {
        members: Vec<(String, PointStats)>,
        aggregates: Vec<netreport::stats::FieldAggregate>,
    },
}

impl StatsOwned {
    fn block(&self) -> StatsBlock<'_> {
        match self {
            StatsOwned::Single(s) => StatsBlock::Single(s),
            StatsOwned::Multi { members, aggregates } => {
                StatsBlock::Multi { members, aggregates }
            }
        }
    }
}

fn cmd_stats(args: StatsArgs) -> netreport::Result<()> {
    let cfg = analysis_config(&args.solver);
    let config = effective_config(&args.input, &args.solver, None);
    let header = stats_header(&config);

    let body = match load_input(&args.input)? {
        LoadedInput::Single(graph) => {
            let analysis = analyze(&graph, &cfg)?;
            stats_text_single(&analysis.point, &header)
        }
        LoadedInput::Multi(members) => {
            let named: Vec<(String, PointStats)> = members
                .iter()
                .map(|(n, g)| (n.clone(), point_stats(g, &cfg)))
                .collect();
            let aggregates =
                aggregate(&named.iter().map(|(_, s)| s.clone()).collect::<Vec<_>>());
            stats_text_multi(&named, &aggregates, &header)
        }
    };

    match &args.out {
        Some(path) => std::fs::write(path, &body).map_err(|e| Error::io(path, e))?,
        None => print!("{body}"),
    }
    Ok(())
}

fn cmd_validate(args: ValidateArgs) -> netreport::Result<()> {
    if args.print_schema {
        print!("{MANIFEST_SCHEMA_JSON}");
        return Ok(());
    }
    let path = args.manifest.as_deref().expect("clap requires --manifest");
    let manifest = parse_manifest(path)?;
    let mut report = validate_manifest(&manifest);

    if args.input.edges.is_some() || args.input.dir.is_some() {
        let graph = match load_input(&args.input)? {
            LoadedInput::Single(g) => g,
            LoadedInput::Multi(members) => {
                let refs: Vec<(String, &Graph)> =
                    members.iter().map(|(n, g)| (n.clone(), g)).collect();
                disjoint_union(&refs)?
            }
        };
        report.extend(cross_check(&manifest, &graph));
    }

    for line in report.lines() {
        println!("{line}");
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Error::Manifest { report })
    }
}
