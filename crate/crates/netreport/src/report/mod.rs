//! Report assembly: manifest prose, statistics tables, and charts in one
//! document tree.
//!
//! A rendered report is a directory: `report.md` or `report.html`,
//! `stats.txt`, `charts/NN_name.svg`, and `distributions/name.tsv`. The
//! document walks four fixed sections (curation rationale; collection,
//! preprocessing and annotation; uses; network statistics) and references
//! every chart exactly once. Output is byte-deterministic: same inputs,
//! same bytes, no timestamps.

mod chart;
mod stats_txt;

pub use chart::{chart_for, render_chart};
pub use stats_txt::{multi as stats_text_multi, single as stats_text_single};

use crate::dist::DistributionSummary;
use crate::error::{Error, Result};
use crate::manifest::{Entry, Manifest, TypesEntry};
use crate::stats::{FieldAggregate, FieldValue, PointStats, StatValue};
use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;

/// How a chart draws its data.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mark {
    Point,
    Line,
    Bar,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scale {
    Linear,
    Log,
}

/// A fully resolved chart: data plus every visual decision.
#[derive(Clone, Debug)]
pub struct ChartSpec {
    pub source: DistributionSummary,
    pub mark: Mark,
    pub x_scale: Scale,
    pub y_scale: Scale,
    pub title: String,
    pub x_label: String,
    pub y_label: String,
    pub width: u32,
    pub height: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Markdown,
    Html,
}

/// The statistics block of a report: one network, or several members
/// with an aggregate.
pub enum StatsBlock<'a> {
    Single(&'a PointStats),
    Multi { members: &'a [(String, PointStats)], aggregates: &'a [FieldAggregate] },
}

#[derive(Clone, Debug)]
pub struct ReportOptions {
    pub format: OutputFormat,
    /// Name shown in the document title.
    pub dataset_name: String,
    /// Effective configuration, digested and echoed for reproducibility.
    pub config: Vec<(String, String)>,
    /// Validation error lines when generation was forced despite them.
    pub forced_validation: Vec<String>,
}

/// A complete report, ready to be written to disk.
pub struct RenderedReport {
    pub document: String,
    /// `report.md` or `report.html`.
    pub document_name: &'static str,
    /// (file name, svg body) pairs under `charts/`.
    pub charts: Vec<(String, String)>,
    /// (file name, tsv body) pairs under `distributions/`.
    pub distributions: Vec<(String, String)>,
    pub stats_txt: String,
}

/// FNV-1a over the canonical configuration listing. Stable across runs
/// and platforms, cheap, and good enough to spot a config mismatch.
pub fn config_digest(config: &[(String, String)]) -> String {
    let mut hash: u64 = 0xcbf29ce484222325;
    for (k, v) in config {
        for b in k.bytes().chain([b'=']).chain(v.bytes()).chain([b'\n']) {
            hash ^= u64::from(b);
            hash = hash.wrapping_mul(0x100000001b3);
        }
    }
    format!("{hash:016x}")
}

/// One renderable piece of a section. Both document renderers walk the
/// same items so the two formats cannot drift apart.
enum Item {
    Field { label: String, value: String },
    SubHeading(String),
    Paragraph(String),
    StatsTable(Vec<(String, String)>),
    AggregateTable(Vec<(String, String, String, String)>),
    Notes(Vec<String>),
    /// Index into `RenderedReport::charts` / `distributions`.
    Chart(usize),
}

struct Section {
    title: &'static str,
    items: Vec<Item>,
}

const NOT_PROVIDED: &str = "(not provided)";

fn toml_inline(v: &toml::Value) -> String {
    match v {
        toml::Value::String(s) => s.clone(),
        toml::Value::Integer(i) => i.to_string(),
        toml::Value::Float(f) => f.to_string(),
        toml::Value::Boolean(b) => b.to_string(),
        toml::Value::Datetime(d) => d.to_string(),
        toml::Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(toml_inline).collect();
            format!("[{}]", parts.join(", "))
        }
        toml::Value::Table(t) => {
            let parts: Vec<String> =
                t.iter().map(|(k, v)| format!("{k} = {}", toml_inline(v))).collect();
            format!("{{{}}}", parts.join("; "))
        }
    }
}

fn entry_value(e: &Entry) -> String {
    match e {
        Entry::Missing => NOT_PROVIDED.to_string(),
        Entry::Unknown => crate::manifest::UNKNOWN.to_string(),
        Entry::Text(s) => s.trim().to_string(),
        Entry::Structured(v) => toml_inline(v),
    }
}

fn push_extras(items: &mut Vec<Item>, extra: &toml::Table) {
    for (k, v) in extra {
        items.push(Item::Field { label: k.clone(), value: toml_inline(v) });
    }
}

fn field(label: &str, e: &Entry) -> Item {
    Item::Field { label: label.to_string(), value: entry_value(e) }
}

fn curation_section(m: &Manifest) -> Section {
    let cr = &m.curation_rationale;
    let mut items = vec![
        field("Author(s) and reference", &cr.authors_and_reference),
        field("Purpose", &cr.purpose),
        field("Domain", &cr.domain),
        field("Node semantics", &cr.node_semantics),
        field("Edge semantics", &cr.edge_semantics),
        Item::SubHeading("Contents".to_string()),
        field("Description", &cr.contents.description),
        Item::Field {
            label: "Snapshot of a larger network".to_string(),
            value: cr
                .contents
                .is_snapshot
                .as_str()
                .map_or(NOT_PROVIDED.to_string(), str::to_string),
        },
    ];
    push_extras(&mut items, &cr.contents.extra);
    let types_value = match &cr.network_types {
        TypesEntry::Missing => NOT_PROVIDED.to_string(),
        TypesEntry::Unknown => crate::manifest::UNKNOWN.to_string(),
        TypesEntry::List(tags) => tags.join(", "),
        TypesEntry::Invalid(v) => format!("invalid value: {}", toml_inline(v)),
    };
    items.push(Item::Field { label: "Network types".to_string(), value: types_value });
    push_extras(&mut items, &cr.extra);
    Section { title: "Curation Rationale", items }
}

fn sampling_value(m: &Manifest) -> String {
    let s = &m.collection.sampling;
    let mut out = s.used.as_str().map_or(NOT_PROVIDED.to_string(), str::to_string);
    if !s.strategy.is_missing() {
        let _ = write!(out, "; strategy: {}", entry_value(&s.strategy));
    }
    if !s.reason.is_missing() {
        let _ = write!(out, "; reason: {}", entry_value(&s.reason));
    }
    out
}

fn splits_value(m: &Manifest) -> String {
    let ds = &m.preprocessing.data_splits;
    let mut parts = Vec::new();
    if !ds.strategy.is_missing() {
        parts.push(entry_value(&ds.strategy));
    }
    if !ds.splits.is_empty() {
        let listed: Vec<String> = ds
            .splits
            .iter()
            .map(|s| match s.count {
                Some(c) => format!("{} ({c})", s.name),
                None => s.name.clone(),
            })
            .collect();
        parts.push(listed.join(", "));
    }
    if parts.is_empty() {
        NOT_PROVIDED.to_string()
    } else {
        parts.join(": ")
    }
}

fn collection_section(m: &Manifest) -> Section {
    let mut items = vec![
        Item::SubHeading("Collection".to_string()),
        field("Collection mechanism and raw data", &m.collection.mechanism_and_raw_data),
        Item::Field { label: "Sampling".to_string(), value: sampling_value(m) },
    ];
    push_extras(&mut items, &m.collection.sampling.extra);
    push_extras(&mut items, &m.collection.extra);

    let pp = &m.preprocessing;
    items.push(Item::SubHeading("Preprocessing".to_string()));
    items.push(field("Network construction", &pp.network_construction));
    items.push(field("Data cleaning", &pp.data_cleaning));
    items.push(field("Data filtering", &pp.data_filtering));
    items.push(field("Network transformation", &pp.network_transformation));
    items.push(field("Attribute transformation", &pp.attribute_transformation));
    items.push(Item::Field { label: "Data splits".to_string(), value: splits_value(m) });
    if let Some(ops) = &pp.operations {
        items.push(Item::Field { label: "Operations".to_string(), value: toml_inline(ops) });
    }
    push_extras(&mut items, &pp.extra);

    items.push(Item::SubHeading("Instance demographics".to_string()));
    items.push(field("Instance demographics", &m.instance_demographics));

    items.push(Item::SubHeading("Annotation".to_string()));
    items.push(field("Annotation process", &m.annotation.process));
    items.push(field("Annotator demographics", &m.annotation.annotator_demographics));
    push_extras(&mut items, &m.annotation.extra);

    Section { title: "Dataset Collection, Preprocessing and Annotation", items }
}

fn uses_section(m: &Manifest) -> Section {
    let mut items = vec![
        field("Primary intended uses", &m.uses.primary_intended),
        field("Other uses", &m.uses.other),
    ];
    push_extras(&mut items, &m.uses.extra);
    Section { title: "Uses", items }
}

fn display_name(key: &str) -> &'static str {
    match key {
        "num_nodes" => "Number of nodes",
        "num_edges_raw" => "Number of edges",
        "num_edges_simplified" => "Number of edges (deduplicated, loop-free)",
        "average_degree" => "Average degree",
        "average_degree_simplified" => "Average degree (simplified graph)",
        "lcc_fraction_weak" => "Largest weakly connected component fraction",
        "lcc_fraction_strong" => "Largest strongly connected component fraction",
        "power_law_exponent" => "Power-law degree exponent",
        "spectral_radius" => "Spectral radius",
        "spectral_radius_is_upper_bound" => "Spectral radius is an upper bound",
        "algebraic_connectivity" => "Algebraic connectivity",
        "total_triangles" => "Total triangles",
        "average_triangles_per_node" => "Average triangles per node",
        "global_clustering" => "Global clustering coefficient",
        "mean_local_clustering" => "Mean local clustering coefficient",
        "degree_assortativity" => "Degree assortativity",
        "degree_assortativity_node_mean" => "Degree assortativity (node-mean variant)",
        "max_k_core" => "Maximum k-core",
        other => {
            debug_assert!(false, "unmapped statistic key {other}");
            "Statistic"
        }
    }
}

fn field_display(v: &FieldValue) -> String {
    match v {
        FieldValue::Count(c) => c.to_string(),
        FieldValue::Real(StatValue::Value(x)) => x.to_string(),
        FieldValue::Real(StatValue::NotAvailable(reason)) => format!("N/A ({reason})"),
        FieldValue::Flag(b) => if *b { "yes" } else { "no" }.to_string(),
    }
}

fn stats_rows(stats: &PointStats) -> Vec<(String, String)> {
    stats
        .fields()
        .iter()
        .map(|(key, value)| (display_name(key).to_string(), field_display(value)))
        .collect()
}

/// The two assortativity variants weight endpoints differently, so a gap
/// between them is expected on skewed graphs; call it out when visible.
fn assortativity_footnote(stats: &PointStats) -> Option<String> {
    let edge = stats.degree_assortativity.value()?;
    let node = stats.degree_assortativity_node_mean.value()?;
    if (edge - node).abs() <= 1e-9 {
        return None;
    }
    Some(format!(
        "the edge-weighted degree assortativity ({edge}) and its node-mean variant \
         ({node}) differ; the first weights high-degree nodes by their edge count, \
         the second counts every node once"
    ))
}

fn member_notes(stats: &PointStats) -> Vec<String> {
    let mut notes = stats.notes.clone();
    if let Some(extra) = assortativity_footnote(stats) {
        notes.push(extra);
    }
    notes
}

fn aggregate_rows(aggregates: &[FieldAggregate]) -> Vec<(String, String, String, String)> {
    aggregates
        .iter()
        .map(|a| {
            let (mean, std) = match (a.mean, a.std) {
                (Some(m), Some(s)) => (m.to_string(), s.to_string()),
                _ => ("N/A".to_string(), "N/A".to_string()),
            };
            (
                display_name(a.name).to_string(),
                mean,
                std,
                format!("{}/{}", a.present, a.total),
            )
        })
        .collect()
}

fn statistics_section(stats: &StatsBlock, chart_count: usize) -> Section {
    let mut items = Vec::new();
    match stats {
        StatsBlock::Single(s) => {
            items.push(Item::StatsTable(stats_rows(s)));
            let notes = member_notes(s);
            if !notes.is_empty() {
                items.push(Item::Notes(notes));
            }
        }
        StatsBlock::Multi { members, aggregates } => {
            for (name, s) in members.iter() {
                items.push(Item::SubHeading(format!("Member: {name}")));
                items.push(Item::StatsTable(stats_rows(s)));
                let notes = member_notes(s);
                if !notes.is_empty() {
                    items.push(Item::Notes(notes));
                }
            }
            items.push(Item::SubHeading("Aggregate".to_string()));
            items.push(Item::AggregateTable(aggregate_rows(aggregates)));
        }
    }
    items.push(Item::SubHeading("Distributions".to_string()));
    if chart_count == 0 {
        items.push(Item::Paragraph("No distributions were computed for this dataset.".to_string()));
    } else {
        for i in 0..chart_count {
            items.push(Item::Chart(i));
        }
    }
    Section { title: "Network Statistics", items }
}

fn slug_for(summary: &DistributionSummary) -> String {
    let base = if summary.mode.is_empty() || summary.statistic.contains(&summary.mode) {
        summary.statistic.clone()
    } else {
        format!("{}_{}", summary.statistic, summary.mode)
    };
    let mut slug = String::with_capacity(base.len());
    let mut last_sep = true;
    for c in base.chars() {
        if c.is_ascii_alphanumeric() {
            slug.push(c.to_ascii_lowercase());
            last_sep = false;
        } else if !last_sep {
            slug.push('_');
            last_sep = true;
        }
    }
    let trimmed = slug.trim_end_matches('_');
    if trimmed.is_empty() {
        "distribution".to_string()
    } else {
        trimmed.to_string()
    }
}

/// Assemble the document, charts, TSV exports, and `stats.txt`.
pub fn build_report(
    manifest: Option<&Manifest>,
    stats: &StatsBlock,
    distributions: &[DistributionSummary],
    opts: &ReportOptions,
) -> Result<RenderedReport> {
    let digest = config_digest(&opts.config);
    let version = env!("CARGO_PKG_VERSION");

    // Charts and TSV exports share a slug; duplicates get a numeric tail.
    let mut seen: HashMap<String, usize> = HashMap::new();
    let mut charts = Vec::with_capacity(distributions.len());
    let mut tsvs = Vec::with_capacity(distributions.len());
    let mut chart_meta = Vec::with_capacity(distributions.len());
    for (i, dist) in distributions.iter().enumerate() {
        let base = slug_for(dist);
        let n = seen.entry(base.clone()).and_modify(|n| *n += 1).or_insert(1);
        let slug = if *n == 1 { base } else { format!("{base}_{n}") };
        let spec = chart_for(dist);
        let svg = render_chart(&spec)?;
        charts.push((format!("{:02}_{slug}.svg", i + 1), svg));
        tsvs.push((format!("{slug}.tsv"), dist.to_tsv()));
        chart_meta.push((spec.title.clone(), slug));
    }

    let mut sections = Vec::new();
    match manifest {
        Some(m) => {
            sections.push(curation_section(m));
            sections.push(collection_section(m));
            sections.push(uses_section(m));
        }
        None => {
            for title in
                ["Curation Rationale", "Dataset Collection, Preprocessing and Annotation", "Uses"]
            {
                sections.push(Section {
                    title,
                    items: vec![Item::Paragraph(
                        "No manifest was provided, so this section cannot be filled in."
                            .to_string(),
                    )],
                });
            }
        }
    }
    sections.push(statistics_section(stats, charts.len()));

    let header = vec![
        format!("generated by netreport {version}"),
        format!("config digest: {digest}"),
    ];
    let stats_txt = match stats {
        StatsBlock::Single(s) => stats_txt::single(s, &header),
        StatsBlock::Multi { members, aggregates } => {
            stats_txt::multi(members, aggregates, &header)
        }
    };

    let document = match opts.format {
        OutputFormat::Markdown => {
            render_markdown(&sections, &charts, &chart_meta, opts, version, &digest)
        }
        OutputFormat::Html => render_html(&sections, &charts, &chart_meta, opts, version, &digest),
    };

    Ok(RenderedReport {
        document,
        document_name: match opts.format {
            OutputFormat::Markdown => "report.md",
            OutputFormat::Html => "report.html",
        },
        charts,
        distributions: tsvs,
        stats_txt,
    })
}

fn render_markdown(
    sections: &[Section],
    charts: &[(String, String)],
    chart_meta: &[(String, String)],
    opts: &ReportOptions,
    version: &str,
    digest: &str,
) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# {}: network report\n", opts.dataset_name);
    if !opts.forced_validation.is_empty() {
        let _ = writeln!(
            out,
            "> **Warning:** the manifest failed validation and generation was forced.\n>"
        );
        for line in &opts.forced_validation {
            let _ = writeln!(out, "> - {line}");
        }
        out.push('\n');
    }
    for (i, section) in sections.iter().enumerate() {
        let _ = writeln!(out, "## {}. {}\n", i + 1, section.title);
        for item in &section.items {
            match item {
                Item::Field { label, value } => {
                    let _ = writeln!(out, "**{label}.** {value}\n");
                }
                Item::SubHeading(text) => {
                    let _ = writeln!(out, "### {text}\n");
                }
                Item::Paragraph(text) => {
                    let _ = writeln!(out, "{text}\n");
                }
                Item::StatsTable(rows) => {
                    out.push_str("| Statistic | Value |\n|---|---|\n");
                    for (name, value) in rows {
                        let _ = writeln!(out, "| {name} | {value} |");
                    }
                    out.push('\n');
                }
                Item::AggregateTable(rows) => {
                    out.push_str(
                        "| Statistic | Mean | Std. dev. | Coverage |\n|---|---|---|---|\n",
                    );
                    for (name, mean, std, coverage) in rows {
                        let _ = writeln!(out, "| {name} | {mean} | {std} | {coverage} |");
                    }
                    out.push('\n');
                }
                Item::Notes(notes) => {
                    for note in notes {
                        let _ = writeln!(out, "- *Note:* {note}");
                    }
                    out.push('\n');
                }
                Item::Chart(i) => {
                    let (title, slug) = &chart_meta[*i];
                    let (file, _) = &charts[*i];
                    let _ = writeln!(out, "![{title}](charts/{file})\n");
                    let _ = writeln!(
                        out,
                        "*{title}. Data: [{slug}.tsv](distributions/{slug}.tsv)*\n"
                    );
                }
            }
        }
    }
    let _ = writeln!(out, "---\n");
    let config_line = config_listing(opts);
    let _ = writeln!(
        out,
        "Generated by netreport {version}. Config digest `{digest}`{config_line}."
    );
    out
}

fn config_listing(opts: &ReportOptions) -> String {
    if opts.config.is_empty() {
        return String::new();
    }
    let parts: Vec<String> = opts.config.iter().map(|(k, v)| format!("{k}={v}")).collect();
    format!(" over effective configuration: {}", parts.join(", "))
}

fn render_html(
    sections: &[Section],
    charts: &[(String, String)],
    chart_meta: &[(String, String)],
    opts: &ReportOptions,
    version: &str,
    digest: &str,
) -> String {
    let esc = chart::xml_escape;
    let mut out = String::new();
    out.push_str("<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n");
    let _ = writeln!(out, "<title>{}: network report</title>", esc(&opts.dataset_name));
    out.push_str("<style>\n");
    out.push_str(
        "body{font-family:Helvetica,Arial,sans-serif;max-width:60rem;margin:2rem auto;\
         padding:0 1rem;color:#222;}\n\
         table{border-collapse:collapse;margin:1rem 0;}\n\
         td,th{border:1px solid #ccc;padding:0.3rem 0.6rem;text-align:left;}\n\
         figure{margin:1.5rem 0;}\n\
         figcaption{font-size:0.85rem;color:#555;}\n\
         .banner{border:2px solid #b00;background:#fee;padding:0.5rem 1rem;}\n\
         dt{font-weight:bold;margin-top:0.6rem;}\n\
         dd{white-space:pre-line;margin:0;}\n\
         ul.notes{color:#555;font-size:0.9rem;}\n\
         footer{margin-top:2rem;border-top:1px solid #ccc;color:#666;font-size:0.85rem;}\n",
    );
    out.push_str("</style>\n</head>\n<body>\n");
    let _ = writeln!(out, "<h1>{}: network report</h1>", esc(&opts.dataset_name));
    if !opts.forced_validation.is_empty() {
        out.push_str("<div class=\"banner\"><p><strong>Warning:</strong> the manifest failed \
                      validation and generation was forced.</p>\n<ul>\n");
        for line in &opts.forced_validation {
            let _ = writeln!(out, "<li>{}</li>", esc(line));
        }
        out.push_str("</ul></div>\n");
    }
    for (i, section) in sections.iter().enumerate() {
        let _ = writeln!(out, "<h2>{}. {}</h2>", i + 1, esc(section.title));
        let mut dl_open = false;
        let close_dl = |out: &mut String, dl_open: &mut bool| {
            if *dl_open {
                out.push_str("</dl>\n");
                *dl_open = false;
            }
        };
        for item in &section.items {
            match item {
                Item::Field { label, value } => {
                    if !dl_open {
                        out.push_str("<dl>\n");
                        dl_open = true;
                    }
                    let _ = writeln!(out, "<dt>{}</dt><dd>{}</dd>", esc(label), esc(value));
                }
                Item::SubHeading(text) => {
                    close_dl(&mut out, &mut dl_open);
                    let _ = writeln!(out, "<h3>{}</h3>", esc(text));
                }
                Item::Paragraph(text) => {
                    close_dl(&mut out, &mut dl_open);
                    let _ = writeln!(out, "<p>{}</p>", esc(text));
                }
                Item::StatsTable(rows) => {
                    close_dl(&mut out, &mut dl_open);
                    out.push_str("<table>\n<tr><th>Statistic</th><th>Value</th></tr>\n");
                    for (name, value) in rows {
                        let _ =
                            writeln!(out, "<tr><td>{}</td><td>{}</td></tr>", esc(name), esc(value));
                    }
                    out.push_str("</table>\n");
                }
                Item::AggregateTable(rows) => {
                    close_dl(&mut out, &mut dl_open);
                    out.push_str(
                        "<table>\n<tr><th>Statistic</th><th>Mean</th><th>Std. dev.</th>\
                         <th>Coverage</th></tr>\n",
                    );
                    for (name, mean, std, coverage) in rows {
                        let _ = writeln!(
                            out,
                            "<tr><td>{}</td><td>{}</td><td>{}</td><td>{}</td></tr>",
                            esc(name),
                            esc(mean),
                            esc(std),
                            esc(coverage)
                        );
                    }
                    out.push_str("</table>\n");
                }
                Item::Notes(notes) => {
                    close_dl(&mut out, &mut dl_open);
                    out.push_str("<ul class=\"notes\">\n");
                    for note in notes {
                        let _ = writeln!(out, "<li>Note: {}</li>", esc(note));
                    }
                    out.push_str("</ul>\n");
                }
                Item::Chart(i) => {
                    close_dl(&mut out, &mut dl_open);
                    let (title, slug) = &chart_meta[*i];
                    let (_, svg) = &charts[*i];
                    out.push_str("<figure>\n");
                    out.push_str(svg);
                    let _ = writeln!(
                        out,
                        "<figcaption>{}. Data: distributions/{}.tsv</figcaption>",
                        esc(title),
                        esc(slug)
                    );
                    out.push_str("</figure>\n");
                }
            }
        }
        close_dl(&mut out, &mut dl_open);
    }
    let _ = writeln!(
        out,
        "<footer><p>Generated by netreport {version}. Config digest <code>{digest}</code>{}.\
         </p></footer>",
        esc(&config_listing(opts))
    );
    out.push_str("</body>\n</html>\n");
    out
}

/// Write the report tree under `dir`, creating directories as needed.
pub fn write_tree(dir: &Path, report: &RenderedReport) -> Result<()> {
    let write = |path: &Path, body: &str| -> Result<()> {
        std::fs::write(path, body).map_err(|e| Error::io(path, e))
    };
    std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    write(&dir.join(report.document_name), &report.document)?;
    write(&dir.join("stats.txt"), &report.stats_txt)?;
    if !report.charts.is_empty() {
        let charts_dir = dir.join("charts");
        std::fs::create_dir_all(&charts_dir).map_err(|e| Error::io(&charts_dir, e))?;
        for (name, body) in &report.charts {
            write(&charts_dir.join(name), body)?;
        }
    }
    if !report.distributions.is_empty() {
        let dist_dir = dir.join("distributions");
        std::fs::create_dir_all(&dist_dir).map_err(|e| Error::io(&dist_dir, e))?;
        for (name, body) in &report.distributions {
            write(&dist_dir.join(name), body)?;
        }
    }
    Ok(())
}
