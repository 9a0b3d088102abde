//! Distributions: degree, PageRank, clustering, singular values, node and
//! edge attributes, and temporal edge activity.
//!
//! Each builder packages its numbers into a [`DistributionSummary`] that
//! carries the chart semantics along with the data: the kind of plot, the
//! axis labels, and whether an axis wants a log scale. The renderer never
//! has to guess how a distribution should look.
//!
//! All y-values are raw frequencies by default; [`normalized`] rescales a
//! summary to fractions when probability mass is wanted instead.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{
    AttributeTable, CellValue, ColumnKind, DegreeMode, Graph,
};
use crate::stats::power_law::estimate_exponent;

/// What a chart of this distribution should be.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DistKind {
    /// (value, count) points, e.g. degree frequencies.
    DiscreteFrequency,
    /// Survival curve: fraction of the population strictly above x.
    InverseCdf,
    /// Fraction of the population at or below x.
    Cdf,
    /// Equal-width bins over a numeric range.
    Histogram,
    /// Labeled bars, largest first, with an optional trailing "others".
    CategoricalBars,
    /// Edge counts per time window.
    TimeSeries,
    /// A value sequence indexed by rank, e.g. singular values.
    RankSequence,
}

impl DistKind {
    pub fn name(self) -> &'static str {
        match self {
            DistKind::DiscreteFrequency => "discrete-frequency",
            DistKind::InverseCdf => "inverse-cdf",
            DistKind::Cdf => "cdf",
            DistKind::Histogram => "histogram",
            DistKind::CategoricalBars => "categorical-bars",
            DistKind::TimeSeries => "time-series",
            DistKind::RankSequence => "rank-sequence",
        }
    }
}

/// The data payload; which variant is legal depends on the kind.
#[derive(Clone, Debug, PartialEq)]
pub enum DistData {
    /// (x, y) samples in increasing x order.
    Points(Vec<(f64, f64)>),
    /// `edges` has one more entry than `counts`; bin i spans
    /// [edges[i], edges[i+1]), the last bin closed on the right.
    Histogram { edges: Vec<f64>, counts: Vec<u64> },
    /// (label, count) bars in display order.
    Bars(Vec<(String, u64)>),
}

/// One distribution, ready to chart or serialize.
#[derive(Clone, Debug, PartialEq)]
pub struct DistributionSummary {
    pub kind: DistKind,
    /// Which statistic this is, e.g. "degree" or "attribute:age".
    pub statistic: String,
    /// Sub-mode: a degree direction, an attribute column, or empty.
    pub mode: String,
    pub x_label: String,
    pub y_label: String,
    pub x_log: bool,
    pub y_log: bool,
    pub data: DistData,
    /// Masked values excluded from an attribute distribution.
    pub masked_excluded: u64,
    /// True once y-values have been rescaled to fractions.
    pub normalized: bool,
}

impl DistributionSummary {
    /// Kind-specific shape invariants; property tests call this on every
    /// summary the builders produce.
    pub fn check(&self) -> std::result::Result<(), String> {
        match (&self.kind, &self.data) {
            (DistKind::DiscreteFrequency, DistData::Points(pts)) => {
                ensure_strictly_increasing_x(pts)?;
                for &(x, y) in pts {
                    if !self.normalized && (y < 1.0 || y.fract() != 0.0) {
                        return Err(format!("frequency at x={x} is {y}, not a positive count"));
                    }
                    if self.normalized && !(0.0..=1.0).contains(&y) {
                        return Err(format!("normalized frequency at x={x} is {y}"));
                    }
                }
                Ok(())
            }
            (DistKind::InverseCdf, DistData::Points(pts)) => {
                ensure_strictly_increasing_x(pts)?;
                let mut prev = f64::INFINITY;
                for &(x, y) in pts {
                    if !(0.0..=1.0).contains(&y) || y > prev {
                        return Err(format!("survival value at x={x} is {y}, not nonincreasing in [0,1]"));
                    }
                    prev = y;
                }
                Ok(())
            }
            (DistKind::Cdf, DistData::Points(pts)) => {
                ensure_strictly_increasing_x(pts)?;
                let mut prev = 0.0;
                for &(x, y) in pts {
                    if !(0.0..=1.0).contains(&y) || y < prev {
                        return Err(format!("cdf value at x={x} is {y}, not nondecreasing in [0,1]"));
                    }
                    prev = y;
                }
                Ok(())
            }
            (DistKind::Histogram, DistData::Histogram { edges, counts }) => {
                if edges.len() != counts.len() + 1 {
                    return Err("histogram edge/count lengths disagree".to_string());
                }
                if edges.windows(2).any(|w| w[0] >= w[1]) {
                    return Err("histogram bin edges are not strictly increasing".to_string());
                }
                Ok(())
            }
            (DistKind::CategoricalBars, DistData::Bars(bars)) => {
                if bars.iter().any(|(label, _)| label.is_empty()) {
                    return Err("categorical bar with an empty label".to_string());
                }
                Ok(())
            }
            (DistKind::TimeSeries, DistData::Points(pts)) => {
                ensure_strictly_increasing_x(pts)?;
                for &(x, y) in pts {
                    if y < 0.0 || y.fract() != 0.0 {
                        return Err(format!("edge count at t={x} is {y}"));
                    }
                }
                Ok(())
            }
            (DistKind::RankSequence, DistData::Points(pts)) => {
                ensure_strictly_increasing_x(pts)?;
                Ok(())
            }
            (kind, _) => Err(format!("kind {} carries the wrong data variant", kind.name())),
        }
    }

    /// Sum of all y mass (counts for bars and histograms).
    pub fn total_mass(&self) -> f64 {
        match &self.data {
            DistData::Points(pts) => pts.iter().map(|&(_, y)| y).sum(),
            DistData::Histogram { counts, .. } => counts.iter().map(|&c| c as f64).sum(),
            DistData::Bars(bars) => bars.iter().map(|&(_, c)| c as f64).sum(),
        }
    }

    /// The machine-readable tabular form: `#`-prefixed header lines, a
    /// column header row, then tab-separated data rows.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# statistic: {}\n", self.statistic));
        if !self.mode.is_empty() {
            out.push_str(&format!("# mode: {}\n", self.mode));
        }
        out.push_str(&format!("# kind: {}\n", self.kind.name()));
        out.push_str(&format!("# x: {}\n", self.x_label));
        out.push_str(&format!("# y: {}\n", self.y_label));
        out.push_str(&format!("# x-log: {}\n# y-log: {}\n", self.x_log, self.y_log));
        if self.masked_excluded > 0 {
            out.push_str(&format!("# masked-excluded: {}\n", self.masked_excluded));
        }
        if self.normalized {
            out.push_str("# normalized: true\n");
        }
        match &self.data {
            DistData::Points(pts) => {
                out.push_str("x\ty\n");
                for &(x, y) in pts {
                    out.push_str(&format!("{x}\t{y}\n"));
                }
            }
            DistData::Histogram { edges, counts } => {
                out.push_str("bin_left\tbin_right\tcount\n");
                for (i, &c) in counts.iter().enumerate() {
                    out.push_str(&format!("{}\t{}\t{}\n", edges[i], edges[i + 1], c));
                }
            }
            DistData::Bars(bars) => {
                out.push_str("label\tcount\n");
                for (label, c) in bars {
                    // Tabs and newlines inside labels would break the row
                    // structure; they become spaces.
                    let safe: String = label
                        .chars()
                        .map(|c| if c == '\t' || c == '\n' || c == '\r' { ' ' } else { c })
                        .collect();
                    out.push_str(&format!("{safe}\t{c}\n"));
                }
            }
        }
        out
    }
}

fn ensure_strictly_increasing_x(pts: &[(f64, f64)]) -> std::result::Result<(), String> {
    if pts.windows(2).any(|w| w[0].0 >= w[1].0) {
        return Err("x values are not strictly increasing".to_string());
    }
    Ok(())
}

/// A copy with y rescaled to fractions of the total mass. Histograms and
/// bars keep integer counts; only point-based kinds rescale.
pub fn normalized(summary: &DistributionSummary) -> DistributionSummary {
    let mut out = summary.clone();
    if out.normalized {
        return out;
    }
    if let DistData::Points(pts) = &mut out.data {
        let mass: f64 = pts.iter().map(|&(_, y)| y).sum();
        if mass > 0.0 {
            for p in pts.iter_mut() {
                p.1 /= mass;
            }
            out.normalized = true;
            out.y_label = format!("fraction ({})", summary.y_label);
        }
    }
    out
}

fn mode_name(mode: DegreeMode) -> &'static str {
    match mode {
        DegreeMode::In => "in",
        DegreeMode::Out => "out",
        DegreeMode::Total => "total",
    }
}

fn degree_axis(mode: DegreeMode, directed: bool) -> &'static str {
    if !directed {
        return "degree";
    }
    match mode {
        DegreeMode::In => "in-degree",
        DegreeMode::Out => "out-degree",
        DegreeMode::Total => "total degree",
    }
}

/// Whether degree-style charts should hint log-log axes: true exactly when
/// the default power-law fit over total degrees produces an exponent.
fn heavy_tail_hint(graph: &Graph) -> bool {
    let degrees = graph.degrees(DegreeMode::Total);
    if degrees.iter().filter(|&&d| d > 0).count() < 10 {
        return false;
    }
    estimate_exponent(&degrees, None).is_ok()
}

/// Frequency of each observed degree.
pub fn degree_distribution(graph: &Graph, mode: DegreeMode) -> DistributionSummary {
    let mut tally: BTreeMap<usize, u64> = BTreeMap::new();
    for d in graph.degrees(mode) {
        *tally.entry(d).or_insert(0) += 1;
    }
    let points: Vec<(f64, f64)> =
        tally.into_iter().map(|(d, c)| (d as f64, c as f64)).collect();
    let log = heavy_tail_hint(graph);
    DistributionSummary {
        kind: DistKind::DiscreteFrequency,
        statistic: "degree".to_string(),
        mode: mode_name(mode).to_string(),
        x_label: degree_axis(mode, graph.is_directed()).to_string(),
        y_label: "node count".to_string(),
        x_log: log,
        y_log: log,
        data: DistData::Points(points),
        masked_excluded: 0,
        normalized: false,
    }
}

/// Survival curve of the PageRank scores: for each distinct score x, the
/// fraction of nodes scoring strictly above x.
pub fn pagerank_distribution(scores: &[f64], log_hint: bool) -> Result<DistributionSummary> {
    if scores.is_empty() {
        return Err(Error::usage("cannot summarize an empty score vector"));
    }
    let n = scores.len() as f64;
    let mut sorted = scores.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("finite scores"));
    let mut points: Vec<(f64, f64)> = Vec::new();
    let mut i = 0usize;
    while i < sorted.len() {
        let x = sorted[i];
        let mut j = i;
        while j < sorted.len() && sorted[j] == x {
            j += 1;
        }
        points.push((x, (sorted.len() - j) as f64 / n));
        i = j;
    }
    Ok(DistributionSummary {
        kind: DistKind::InverseCdf,
        statistic: "pagerank".to_string(),
        mode: String::new(),
        x_label: "PageRank score".to_string(),
        y_label: "fraction of nodes above".to_string(),
        x_log: log_hint,
        y_log: log_hint,
        data: DistData::Points(points),
        masked_excluded: 0,
        normalized: false,
    })
}

/// Cumulative distribution of the local clustering coefficients.
pub fn clustering_distribution(local: &[f64]) -> DistributionSummary {
    let n = local.len() as f64;
    let mut sorted = local.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("coefficients are finite"));
    let mut points: Vec<(f64, f64)> = Vec::new();
    let mut i = 0usize;
    while i < sorted.len() {
        let x = sorted[i];
        let mut j = i;
        while j < sorted.len() && sorted[j] == x {
            j += 1;
        }
        points.push((x, j as f64 / n));
        i = j;
    }
    DistributionSummary {
        kind: DistKind::Cdf,
        statistic: "local_clustering".to_string(),
        mode: String::new(),
        x_label: "local clustering coefficient".to_string(),
        y_label: "fraction of nodes at or below".to_string(),
        x_log: false,
        y_log: false,
        data: DistData::Points(points),
        masked_excluded: 0,
        normalized: false,
    }
}

/// Singular values as a rank-indexed sequence, largest first.
pub fn singular_value_distribution(values: &[f64]) -> Result<DistributionSummary> {
    if values.is_empty() {
        return Err(Error::usage("cannot summarize an empty singular value list"));
    }
    let points: Vec<(f64, f64)> = values
        .iter()
        .enumerate()
        .map(|(i, &s)| ((i + 1) as f64, s))
        .collect();
    let first = values[0];
    let last = values[values.len() - 1];
    // Log y only when the sequence spans more than two decades.
    let y_log = first > 0.0 && last * 100.0 < first;
    Ok(DistributionSummary {
        kind: DistKind::RankSequence,
        statistic: "singular_values".to_string(),
        mode: String::new(),
        x_label: "rank".to_string(),
        y_label: "singular value".to_string(),
        x_log: false,
        y_log,
        data: DistData::Points(points),
        masked_excluded: 0,
        normalized: false,
    })
}

/// Distribution of one attribute column. Quantitative columns become a
/// histogram; categorical columns become bars, either in category order
/// (ordered kind) or by descending frequency with the tail merged into an
/// "others" bar.
pub fn attribute_distribution(
    table: &AttributeTable,
    column: &str,
    top_k: usize,
    bins: usize,
) -> Result<DistributionSummary> {
    let col = table
        .columns
        .iter()
        .find(|c| c.name == column)
        .ok_or_else(|| Error::usage(format!("no attribute column named {column:?}")))?;
    let masked = col.masked_count() as u64;
    let statistic = format!("attribute:{}", col.name);

    match col.kind {
        ColumnKind::Quantitative => {
            let values: Vec<f64> = col
                .values
                .iter()
                .filter_map(|v| match v {
                    Some(CellValue::Number(x)) => Some(*x),
                    _ => None,
                })
                .collect();
            if values.is_empty() {
                return Err(Error::usage(format!(
                    "attribute column {column:?} has no usable values"
                )));
            }
            let bins = bins.max(1);
            let mut lo = values.iter().copied().fold(f64::INFINITY, f64::min);
            let mut hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            if lo == hi {
                // Degenerate range: widen symmetrically so one real bin exists.
                lo -= 0.5;
                hi += 0.5;
            }
            let width = (hi - lo) / bins as f64;
            let mut counts = vec![0u64; bins];
            for &x in &values {
                let mut b = ((x - lo) / width) as usize;
                if b >= bins {
                    b = bins - 1;
                }
                counts[b] += 1;
            }
            let edges: Vec<f64> = (0..=bins)
                .map(|i| if i == bins { hi } else { lo + width * i as f64 })
                .collect();
            Ok(DistributionSummary {
                kind: DistKind::Histogram,
                statistic,
                mode: col.name.clone(),
                x_label: col.name.clone(),
                y_label: "count".to_string(),
                x_log: false,
                y_log: false,
                data: DistData::Histogram { edges, counts },
                masked_excluded: masked,
                normalized: false,
            })
        }
        ColumnKind::Categorical | ColumnKind::OrderedCategorical => {
            let mut tally: BTreeMap<String, u64> = BTreeMap::new();
            for v in &col.values {
                if let Some(CellValue::Text(s)) = v {
                    *tally.entry(s.clone()).or_insert(0) += 1;
                }
            }
            if tally.is_empty() {
                return Err(Error::usage(format!(
                    "attribute column {column:?} has no usable values"
                )));
            }
            let bars = if col.kind == ColumnKind::OrderedCategorical {
                // Category order: numeric when every label parses as a
                // number, otherwise lexicographic.
                let mut labels: Vec<(String, u64)> = tally.into_iter().collect();
                let numeric: Option<Vec<f64>> =
                    labels.iter().map(|(l, _)| l.parse::<f64>().ok()).collect();
                if let Some(keys) = numeric {
                    let mut order: Vec<usize> = (0..labels.len()).collect();
                    order.sort_by(|&a, &b| {
                        keys[a].partial_cmp(&keys[b]).expect("finite keys")
                    });
                    order.into_iter().map(|i| labels[i].clone()).collect()
                } else {
                    // BTreeMap already yields lexicographic order.
                    labels.sort_by(|a, b| a.0.cmp(&b.0));
                    labels
                }
            } else {
                let mut sorted: Vec<(String, u64)> = tally.into_iter().collect();
                sorted.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
                let mut bars: Vec<(String, u64)> = Vec::new();
                let mut others = 0u64;
                for (i, (label, count)) in sorted.into_iter().enumerate() {
                    if i < top_k {
                        bars.push((label, count));
                    } else {
                        others += count;
                    }
                }
                if others > 0 {
                    bars.push(("others".to_string(), others));
                }
                bars
            };
            Ok(DistributionSummary {
                kind: DistKind::CategoricalBars,
                statistic,
                mode: col.name.clone(),
                x_label: col.name.clone(),
                y_label: "count".to_string(),
                x_log: false,
                y_log: false,
                data: DistData::Bars(bars),
                masked_excluded: masked,
                normalized: false,
            })
        }
    }
}

/// Edge counts per time window over timestamped edges. Windows tile the
/// observed range starting at the earliest timestamp; x is the window
/// start relative to that origin.
pub fn temporal_edge_series(graph: &Graph, window: Option<i64>) -> Result<DistributionSummary> {
    let stamps: Vec<i64> = graph.edges().iter().filter_map(|e| e.timestamp).collect();
    if stamps.is_empty() {
        return Err(Error::usage("no edges carry timestamps"));
    }
    if let Some(w) = window {
        if w <= 0 {
            return Err(Error::usage("time window must be positive"));
        }
    }
    let t_min = *stamps.iter().min().expect("nonempty");
    let t_max = *stamps.iter().max().expect("nonempty");
    let span = t_max as i128 - t_min as i128;
    let w = match window {
        Some(w) => w as i128,
        None => (span / 100).max(1),
    };
    let buckets = (span / w + 1) as usize;
    const MAX_BUCKETS: usize = 10_000_000;
    if buckets > MAX_BUCKETS {
        return Err(Error::usage(format!(
            "window of {w} produces {buckets} buckets; choose a coarser window"
        )));
    }
    let mut counts = vec![0u64; buckets];
    for &t in &stamps {
        let b = ((t as i128 - t_min as i128) / w) as usize;
        counts[b] += 1;
    }
    let points: Vec<(f64, f64)> = counts
        .iter()
        .enumerate()
        .map(|(i, &c)| ((i as i128 * w) as f64, c as f64))
        .collect();
    Ok(DistributionSummary {
        kind: DistKind::TimeSeries,
        statistic: "temporal_edges".to_string(),
        mode: String::new(),
        x_label: format!("time since first edge (window = {w})"),
        y_label: "edges in window".to_string(),
        x_log: false,
        y_log: false,
        data: DistData::Points(points),
        masked_excluded: 0,
        normalized: false,
    })
}

/// The distribution set a report shows for one network: degrees (total,
/// or in and out when directed), the PageRank survival curve, the local
/// clustering CDF, the singular value sequence, and, when edges carry
/// timestamps, the temporal series.
pub fn standard_distributions(
    graph: &Graph,
    analysis: &crate::stats::NetworkAnalysis,
    window: Option<i64>,
) -> Result<Vec<DistributionSummary>> {
    let mut out = Vec::new();
    if graph.is_directed() {
        out.push(degree_distribution(graph, DegreeMode::In));
        out.push(degree_distribution(graph, DegreeMode::Out));
    } else {
        out.push(degree_distribution(graph, DegreeMode::Total));
    }
    let log_hint = out[0].x_log;
    if !analysis.pagerank.scores.is_empty() {
        out.push(pagerank_distribution(&analysis.pagerank.scores, log_hint)?);
    }
    if !analysis.local_clustering.is_empty() {
        out.push(clustering_distribution(&analysis.local_clustering));
    }
    if !analysis.singular.values.is_empty() {
        out.push(singular_value_distribution(&analysis.singular.values)?);
    }
    if graph.has_timestamps() {
        out.push(temporal_edge_series(graph, window)?);
    }
    Ok(out)
}

/// Multi-network datasets are treated as one network whose components are
/// the members: build the disjoint union and compute the standard set on
/// it.
pub fn componentwise_distributions(
    members: &[(String, &Graph)],
    cfg: &crate::stats::AnalysisConfig,
    window: Option<i64>,
) -> Result<(Graph, crate::stats::NetworkAnalysis, Vec<DistributionSummary>)> {
    let union = crate::graph::disjoint_union(members)?;
    let analysis = crate::stats::analyze(&union, cfg)?;
    let dists = standard_distributions(&union, &analysis, window)?;
    Ok((union, analysis, dists))
}
