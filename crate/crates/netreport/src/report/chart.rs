//! Self-drawn SVG charts.
//!
//! No charting library: axes, ticks, and marks are emitted directly so
//! that identical inputs give byte-identical files. Coordinates are
//! rounded to hundredths of a pixel, fonts are named explicitly, and
//! nothing in the output depends on time or environment.

use crate::dist::{DistData, DistKind, DistributionSummary};
use crate::error::{Error, Result};
use crate::report::{ChartSpec, Mark, Scale};

const TICK_TARGET: usize = 8;

pub(crate) fn xml_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            _ => out.push(c),
        }
    }
    out
}

/// Tick label: plain decimal in a comfortable range, scientific outside.
fn fmt_num(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    let a = v.abs();
    if !(1e-4..1e7).contains(&a) {
        return format!("{v:e}");
    }
    let s = format!("{v:.6}");
    let trimmed = s.trim_end_matches('0').trim_end_matches('.');
    trimmed.to_string()
}

/// Round ticks at 1/2/5 steps covering [lo, hi] with at most
/// `TICK_TARGET` intervals.
fn linear_ticks(lo: f64, hi: f64) -> Vec<f64> {
    let (lo, hi) = widen_if_degenerate(lo, hi);
    let raw = (hi - lo) / TICK_TARGET as f64;
    let mag = 10f64.powf(raw.log10().floor());
    let norm = raw / mag;
    let step = mag
        * if norm <= 1.0 {
            1.0
        } else if norm <= 2.0 {
            2.0
        } else if norm <= 5.0 {
            5.0
        } else {
            10.0
        };
    let first = (lo / step).ceil();
    let last = (hi / step).floor();
    let mut ticks = Vec::new();
    let mut k = first;
    while k <= last + 1e-9 {
        // Snap to the step grid so labels stay round.
        ticks.push(k * step);
        k += 1.0;
    }
    ticks
}

fn widen_if_degenerate(lo: f64, hi: f64) -> (f64, f64) {
    if hi > lo {
        return (lo, hi);
    }
    let pad = if lo == 0.0 { 1.0 } else { lo.abs() * 0.1 };
    (lo - pad, lo + pad)
}

/// Powers of ten spanning [lo, hi], thinned to at most `TICK_TARGET`
/// labels. Both bounds must be positive.
fn log_ticks(lo: f64, hi: f64) -> Vec<f64> {
    let k_lo = lo.log10().floor() as i32;
    let k_hi = hi.log10().ceil() as i32;
    let count = (k_hi - k_lo + 1).max(1) as usize;
    let stride = count.div_ceil(TICK_TARGET).max(1);
    (k_lo..=k_hi)
        .step_by(stride)
        .map(|k| 10f64.powi(k))
        .collect()
}

/// A log axis spans whole decades so its ticks sit inside the frame.
fn log_domain(lo: f64, hi: f64) -> (f64, f64) {
    let mut k_lo = lo.log10().floor() as i32;
    let mut k_hi = hi.log10().ceil() as i32;
    if k_lo == k_hi {
        // All data on one power of ten: give it air on both sides.
        k_lo -= 1;
        k_hi += 1;
    }
    (10f64.powi(k_lo), 10f64.powi(k_hi))
}

/// Maps data values onto pixels along one axis. `px0`/`px1` may run in
/// either direction (SVG y grows downward).
struct AxisMap {
    lo: f64,
    hi: f64,
    log: bool,
    px0: f64,
    px1: f64,
}

impl AxisMap {
    fn tr(&self, v: f64) -> f64 {
        if self.log {
            v.log10()
        } else {
            v
        }
    }

    fn map(&self, v: f64) -> f64 {
        let (a, b) = (self.tr(self.lo), self.tr(self.hi));
        let frac = if b > a { (self.tr(v) - a) / (b - a) } else { 0.5 };
        self.px0 + frac * (self.px1 - self.px0)
    }

    fn ticks(&self) -> Vec<f64> {
        if self.log {
            log_ticks(self.lo, self.hi)
        } else {
            linear_ticks(self.lo, self.hi)
        }
    }
}

fn px(v: f64) -> String {
    format!("{v:.2}")
}

const FONT: &str = "Helvetica, Arial, sans-serif";
const ACCENT: &str = "#4c78a8";

/// Renders the chart as a standalone SVG document.
pub fn render_chart(spec: &ChartSpec) -> Result<String> {
    let d = &spec.source;
    d.check().map_err(|m| {
        Error::usage(format!("distribution {} fails its invariants: {m}", d.statistic))
    })?;
    match (&d.data, spec.mark) {
        (DistData::Bars(_), Mark::Bar) | (DistData::Histogram { .. }, Mark::Bar) => {}
        (DistData::Bars(_) | DistData::Histogram { .. }, _) => {
            return Err(Error::usage(format!(
                "distribution {} needs the bar mark",
                d.statistic
            )));
        }
        (DistData::Points(_), Mark::Bar) => {
            return Err(Error::usage(format!(
                "distribution {} cannot use the bar mark",
                d.statistic
            )));
        }
        (DistData::Points(_), _) => {}
    }
    if matches!(d.data, DistData::Bars(_) | DistData::Histogram { .. })
        && (spec.x_scale == Scale::Log || spec.y_scale == Scale::Log)
    {
        return Err(Error::usage(format!(
            "bar charts for {} must use linear scales",
            d.statistic
        )));
    }

    match &d.data {
        DistData::Points(pts) => render_points(spec, pts),
        DistData::Histogram { edges, counts } => Ok(render_histogram(spec, edges, counts)),
        DistData::Bars(bars) => Ok(render_bars(spec, bars)),
    }
}

struct Canvas {
    h: f64,
    body: String,
}

impl Canvas {
    fn new(spec: &ChartSpec) -> Canvas {
        let w = spec.width as f64;
        let h = spec.height as f64;
        let mut body = String::new();
        body.push_str(&format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n"
        ));
        body.push_str(&format!("<rect width=\"{w}\" height=\"{h}\" fill=\"#ffffff\"/>\n"));
        body.push_str(&format!(
            "<text x=\"{}\" y=\"20\" text-anchor=\"middle\" font-family=\"{FONT}\" font-size=\"14\" font-weight=\"bold\" fill=\"#222222\">{}</text>\n",
            px(w / 2.0),
            xml_escape(&spec.title)
        ));
        Canvas { h, body }
    }

    fn axis_labels(&mut self, spec: &ChartSpec, x0: f64, x1: f64, y0: f64, y1: f64) {
        self.body.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\" font-family=\"{FONT}\" font-size=\"12\" fill=\"#222222\">{}</text>\n",
            px((x0 + x1) / 2.0),
            px(self.h - 12.0),
            xml_escape(&spec.x_label)
        ));
        let cy = (y0 + y1) / 2.0;
        self.body.push_str(&format!(
            "<text x=\"16\" y=\"{}\" text-anchor=\"middle\" font-family=\"{FONT}\" font-size=\"12\" fill=\"#222222\" transform=\"rotate(-90 16 {})\">{}</text>\n",
            px(cy),
            px(cy),
            xml_escape(&spec.y_label)
        ));
    }

    fn frame(&mut self, x0: f64, x1: f64, y0: f64, y1: f64) {
        self.body.push_str(&format!(
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#333333\" stroke-width=\"1\"/>\n",
            px(x0),
            px(y1),
            px(x1),
            px(y1)
        ));
        self.body.push_str(&format!(
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#333333\" stroke-width=\"1\"/>\n",
            px(x0),
            px(y0),
            px(x0),
            px(y1)
        ));
    }

    fn x_ticks(&mut self, axis: &AxisMap, y_base: f64, grid_top: f64) {
        for t in axis.ticks() {
            let x = axis.map(t);
            self.body.push_str(&format!(
                "<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"#e0e0e0\" stroke-width=\"1\"/>\n",
                px(x),
                px(y_base),
                px(grid_top)
            ));
            self.body.push_str(&format!(
                "<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"#333333\" stroke-width=\"1\"/>\n",
                px(x),
                px(y_base),
                px(y_base + 4.0)
            ));
            self.body.push_str(&format!(
                "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\" font-family=\"{FONT}\" font-size=\"10\" fill=\"#333333\">{}</text>\n",
                px(x),
                px(y_base + 16.0),
                xml_escape(&fmt_num(t))
            ));
        }
    }

    fn y_ticks(&mut self, axis: &AxisMap, x_base: f64, grid_right: f64) {
        for t in axis.ticks() {
            let y = axis.map(t);
            self.body.push_str(&format!(
                "<line x1=\"{1}\" y1=\"{0}\" x2=\"{2}\" y2=\"{0}\" stroke=\"#e0e0e0\" stroke-width=\"1\"/>\n",
                px(y),
                px(x_base),
                px(grid_right)
            ));
            self.body.push_str(&format!(
                "<line x1=\"{1}\" y1=\"{0}\" x2=\"{2}\" y2=\"{0}\" stroke=\"#333333\" stroke-width=\"1\"/>\n",
                px(y),
                px(x_base - 4.0),
                px(x_base)
            ));
            self.body.push_str(&format!(
                "<text x=\"{}\" y=\"{}\" text-anchor=\"end\" font-family=\"{FONT}\" font-size=\"10\" fill=\"#333333\">{}</text>\n",
                px(x_base - 7.0),
                px(y + 3.5),
                xml_escape(&fmt_num(t))
            ));
        }
    }

    fn note(&mut self, right: f64, text: &str) {
        self.body.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" text-anchor=\"end\" font-family=\"{FONT}\" font-size=\"10\" fill=\"#666666\">{}</text>\n",
            px(right),
            px(self.h - 2.0),
            xml_escape(text)
        ));
    }

    fn finish(mut self) -> String {
        self.body.push_str("</svg>\n");
        self.body
    }
}

fn render_points(spec: &ChartSpec, pts: &[(f64, f64)]) -> Result<String> {
    let mut x_log = spec.x_scale == Scale::Log;
    let mut y_log = spec.y_scale == Scale::Log;
    let kept: Vec<(f64, f64)> = pts
        .iter()
        .copied()
        .filter(|&(x, y)| (!x_log || x > 0.0) && (!y_log || y > 0.0))
        .collect();
    let dropped = pts.len() - kept.len();
    let mut notes: Vec<String> = Vec::new();
    let pts = if kept.is_empty() && !pts.is_empty() {
        // Nothing survives the log domain: draw everything on linear axes
        // instead of an empty panel.
        x_log = false;
        y_log = false;
        notes.push("log scales disabled: no positive values".to_string());
        pts.to_vec()
    } else {
        if dropped > 0 {
            notes.push(format!("{dropped} point(s) not representable on log axes omitted"));
        }
        kept
    };

    let (x0, x1) = (64.0, spec.width as f64 - 16.0);
    let (y0, y1) = (36.0, spec.height as f64 - 52.0);
    let mut canvas = Canvas::new(spec);

    if pts.is_empty() {
        canvas.note(x1, "no data");
        canvas.frame(x0, x1, y0, y1);
        canvas.axis_labels(spec, x0, x1, y0, y1);
        return Ok(canvas.finish());
    }

    let xs: Vec<f64> = pts.iter().map(|p| p.0).collect();
    let ys: Vec<f64> = pts.iter().map(|p| p.1).collect();
    let x_min = xs.iter().copied().fold(f64::INFINITY, f64::min);
    let x_max = xs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let y_min = ys.iter().copied().fold(f64::INFINITY, f64::min);
    let y_max = ys.iter().copied().fold(f64::NEG_INFINITY, f64::max);

    let (x_lo, x_hi) = if x_log { log_domain(x_min, x_max) } else { (x_min, x_max) };
    let (y_lo, y_hi) = if y_log { log_domain(y_min, y_max) } else { (y_min.min(0.0), y_max) };
    let x_axis = AxisMap { lo: x_lo, hi: x_hi, log: x_log, px0: x0, px1: x1 };
    let y_axis = AxisMap { lo: y_lo, hi: y_hi, log: y_log, px0: y1, px1: y0 };

    canvas.x_ticks(&x_axis, y1, y0);
    canvas.y_ticks(&y_axis, x0, x1);
    canvas.frame(x0, x1, y0, y1);

    match spec.mark {
        Mark::Line => {
            if pts.len() > 1 {
                let coords: Vec<String> = pts
                    .iter()
                    .map(|&(x, y)| format!("{},{}", px(x_axis.map(x)), px(y_axis.map(y))))
                    .collect();
                canvas.body.push_str(&format!(
                    "<polyline points=\"{}\" fill=\"none\" stroke=\"{ACCENT}\" stroke-width=\"1.5\"/>\n",
                    coords.join(" ")
                ));
            }
            if pts.len() <= 80 {
                for &(x, y) in &pts {
                    canvas.body.push_str(&format!(
                        "<circle cx=\"{}\" cy=\"{}\" r=\"2.5\" fill=\"{ACCENT}\"/>\n",
                        px(x_axis.map(x)),
                        px(y_axis.map(y))
                    ));
                }
            }
        }
        Mark::Point => {
            for &(x, y) in &pts {
                canvas.body.push_str(&format!(
                    "<circle cx=\"{}\" cy=\"{}\" r=\"3\" fill=\"{ACCENT}\"/>\n",
                    px(x_axis.map(x)),
                    px(y_axis.map(y))
                ));
            }
        }
        Mark::Bar => unreachable!("validated above"),
    }

    for n in &notes {
        canvas.note(x1, n);
    }
    canvas.axis_labels(spec, x0, x1, y0, y1);
    Ok(canvas.finish())
}

fn render_histogram(spec: &ChartSpec, edges: &[f64], counts: &[u64]) -> String {
    let (x0, x1) = (64.0, spec.width as f64 - 16.0);
    let (y0, y1) = (36.0, spec.height as f64 - 52.0);
    let mut canvas = Canvas::new(spec);

    let y_max = counts.iter().copied().max().unwrap_or(0) as f64;
    let x_axis =
        AxisMap { lo: edges[0], hi: edges[edges.len() - 1], log: false, px0: x0, px1: x1 };
    let y_axis = AxisMap { lo: 0.0, hi: y_max.max(1.0), log: false, px0: y1, px1: y0 };

    canvas.x_ticks(&x_axis, y1, y0);
    canvas.y_ticks(&y_axis, x0, x1);

    for (i, &c) in counts.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let left = x_axis.map(edges[i]);
        let right = x_axis.map(edges[i + 1]);
        let top = y_axis.map(c as f64);
        canvas.body.push_str(&format!(
            "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{ACCENT}\" stroke=\"#ffffff\" stroke-width=\"0.5\"/>\n",
            px(left),
            px(top),
            px(right - left),
            px(y1 - top)
        ));
    }

    canvas.frame(x0, x1, y0, y1);
    if spec.source.masked_excluded > 0 {
        canvas.note(x1, &format!("{} masked value(s) excluded", spec.source.masked_excluded));
    }
    canvas.axis_labels(spec, x0, x1, y0, y1);
    canvas.finish()
}

fn render_bars(spec: &ChartSpec, bars: &[(String, u64)]) -> String {
    // Horizontal bars: the category labels sit in a wide left margin.
    let (x0, x1) = (170.0, spec.width as f64 - 16.0);
    let (y0, y1) = (36.0, spec.height as f64 - 52.0);
    let mut canvas = Canvas::new(spec);

    let max = bars.iter().map(|&(_, c)| c).max().unwrap_or(0) as f64;
    let x_axis = AxisMap { lo: 0.0, hi: max.max(1.0), log: false, px0: x0, px1: x1 };
    canvas.x_ticks(&x_axis, y1, y0);

    let rows = bars.len().max(1) as f64;
    let row_h = (y1 - y0) / rows;
    let bar_h = (row_h * 0.7).min(28.0);
    for (i, (label, count)) in bars.iter().enumerate() {
        let cy = y0 + row_h * (i as f64 + 0.5);
        let right = x_axis.map(*count as f64);
        canvas.body.push_str(&format!(
            "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{ACCENT}\"/>\n",
            px(x0),
            px(cy - bar_h / 2.0),
            px(right - x0),
            px(bar_h)
        ));
        let shown: String = if label.chars().count() > 20 {
            let head: String = label.chars().take(19).collect();
            format!("{head}\u{2026}")
        } else {
            label.clone()
        };
        canvas.body.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" text-anchor=\"end\" font-family=\"{FONT}\" font-size=\"11\" fill=\"#222222\">{}</text>\n",
            px(x0 - 7.0),
            px(cy + 3.5),
            xml_escape(&shown)
        ));
        canvas.body.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" text-anchor=\"start\" font-family=\"{FONT}\" font-size=\"10\" fill=\"#333333\">{}</text>\n",
            px(right + 4.0),
            px(cy + 3.5),
            count
        ));
    }

    canvas.frame(x0, x1, y0, y1);
    if spec.source.masked_excluded > 0 {
        canvas.note(x1, &format!("{} masked value(s) excluded", spec.source.masked_excluded));
    }
    canvas.axis_labels(spec, x0, x1, y0, y1);
    canvas.finish()
}

/// The default chart shape for each distribution kind.
pub fn chart_for(summary: &DistributionSummary) -> ChartSpec {
    let (mark, x_scale, y_scale) = match summary.kind {
        DistKind::DiscreteFrequency => (
            Mark::Point,
            scale_of(summary.x_log),
            scale_of(summary.y_log),
        ),
        DistKind::InverseCdf => (Mark::Line, scale_of(summary.x_log), scale_of(summary.y_log)),
        DistKind::Cdf => (Mark::Line, Scale::Linear, Scale::Linear),
        DistKind::Histogram => (Mark::Bar, Scale::Linear, Scale::Linear),
        DistKind::CategoricalBars => (Mark::Bar, Scale::Linear, Scale::Linear),
        DistKind::TimeSeries => (Mark::Line, Scale::Linear, Scale::Linear),
        DistKind::RankSequence => (Mark::Line, Scale::Linear, scale_of(summary.y_log)),
    };
    ChartSpec {
        source: summary.clone(),
        mark,
        x_scale,
        y_scale,
        title: title_for(summary),
        x_label: summary.x_label.clone(),
        y_label: summary.y_label.clone(),
        width: 640,
        height: 420,
    }
}

fn scale_of(log: bool) -> Scale {
    if log {
        Scale::Log
    } else {
        Scale::Linear
    }
}

fn title_for(summary: &DistributionSummary) -> String {
    match summary.statistic.as_str() {
        "degree" => match summary.mode.as_str() {
            "in" => "In-degree distribution".to_string(),
            "out" => "Out-degree distribution".to_string(),
            _ => "Degree distribution".to_string(),
        },
        "pagerank" => "PageRank distribution".to_string(),
        "local_clustering" => "Local clustering coefficient".to_string(),
        "singular_values" => "Leading singular values".to_string(),
        "temporal_edges" => "Edges over time".to_string(),
        other => match other.strip_prefix("attribute:") {
            Some(col) => format!("Attribute distribution: {col}"),
            None => other.to_string(),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dist::degree_distribution;
    use crate::graph::{DegreeMode, Graph};

    fn triangle_chart() -> ChartSpec {
        let g = Graph::from_pairs(false, false, 3, &[(0, 1), (1, 2), (2, 0)]).expect("graph");
        chart_for(&degree_distribution(&g, DegreeMode::Total))
    }

    #[test]
    fn linear_ticks_are_round_and_bounded() {
        let t = linear_ticks(0.0, 100.0);
        assert!(t.len() <= TICK_TARGET + 1);
        assert_eq!(t.first(), Some(&0.0));
        assert_eq!(t.last(), Some(&100.0));
        for pair in t.windows(2) {
            assert!((pair[1] - pair[0] - 20.0).abs() < 1e-9);
        }
    }

    #[test]
    fn linear_ticks_handle_degenerate_ranges() {
        let t = linear_ticks(5.0, 5.0);
        assert!(t.len() >= 2);
    }

    #[test]
    fn log_ticks_are_powers_of_ten() {
        let t = log_ticks(0.5, 12345.0);
        for v in &t {
            let k = v.log10();
            assert!((k - k.round()).abs() < 1e-12, "{v} is not a power of 10");
        }
        assert!(t.len() <= TICK_TARGET + 1);
    }

    #[test]
    fn number_formatting_is_stable() {
        assert_eq!(fmt_num(0.0), "0");
        assert_eq!(fmt_num(100.0), "100");
        assert_eq!(fmt_num(0.2), "0.2");
        assert_eq!(fmt_num(1e7), "1e7");
        assert_eq!(fmt_num(2.5e-5), "2.5e-5");
    }

    #[test]
    fn triangle_chart_has_one_point() {
        let svg = render_chart(&triangle_chart()).expect("svg");
        assert_eq!(svg.matches("<circle").count(), 1);
        assert!(svg.starts_with("<svg xmlns"));
        assert!(svg.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn log_chart_coordinates_stay_inside_the_canvas() {
        // Degrees {2,3,4,8} span no full decade; the log domain must be
        // widened so ticks and marks stay inside the frame.
        let g = Graph::from_pairs(
            false,
            false,
            16,
            &[
                (0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6), (0, 7), (0, 8),
                (1, 2), (3, 4), (5, 6), (7, 8), (9, 10), (11, 12), (13, 14), (14, 15),
            ],
        )
        .expect("graph");
        let mut spec = chart_for(&degree_distribution(&g, DegreeMode::Total));
        spec.x_scale = Scale::Log;
        spec.y_scale = Scale::Log;
        let svg = render_chart(&spec).expect("svg");
        for chunk in svg.split('"').skip(1).step_by(2) {
            if let Ok(v) = chunk.parse::<f64>() {
                assert!(
                    (-0.01..=640.01).contains(&v),
                    "coordinate {v} escapes the canvas"
                );
            }
        }
    }

    #[test]
    fn rendering_is_deterministic() {
        let a = render_chart(&triangle_chart()).expect("svg");
        let b = render_chart(&triangle_chart()).expect("svg");
        assert_eq!(a, b);
    }

    #[test]
    fn titles_are_escaped() {
        let mut spec = triangle_chart();
        spec.title = "a < b & c".to_string();
        let svg = render_chart(&spec).expect("svg");
        assert!(svg.contains("a &lt; b &amp; c"));
        assert!(!svg.contains("a < b & c"));
    }

    #[test]
    fn log_axes_drop_nonpositive_points_with_a_note() {
        let mut spec = triangle_chart();
        // Survival curves end at zero; force log axes.
        spec.source.data = DistData::Points(vec![(1.0, 0.5), (2.0, 0.0)]);
        spec.source.kind = DistKind::InverseCdf;
        spec.x_scale = Scale::Log;
        spec.y_scale = Scale::Log;
        spec.mark = Mark::Line;
        let svg = render_chart(&spec).expect("svg");
        assert!(svg.contains("1 point(s) not representable on log axes omitted"));
    }

    #[test]
    fn all_nonpositive_points_fall_back_to_linear() {
        let mut spec = triangle_chart();
        spec.source.data = DistData::Points(vec![(1.0, 0.0)]);
        spec.source.kind = DistKind::RankSequence;
        spec.y_scale = Scale::Log;
        spec.mark = Mark::Line;
        let svg = render_chart(&spec).expect("svg");
        assert!(svg.contains("log scales disabled"));
        assert_eq!(svg.matches("<circle").count(), 1);
    }

    #[test]
    fn bar_data_demands_bar_mark() {
        let mut spec = triangle_chart();
        spec.source.kind = DistKind::CategoricalBars;
        spec.source.data = DistData::Bars(vec![("a".to_string(), 3)]);
        spec.mark = Mark::Point;
        assert!(render_chart(&spec).is_err());
    }

    #[test]
    fn long_bar_labels_are_truncated() {
        let mut spec = triangle_chart();
        spec.source.kind = DistKind::CategoricalBars;
        let long = "a".repeat(40);
        spec.source.data = DistData::Bars(vec![(long, 3)]);
        spec.mark = Mark::Bar;
        let svg = render_chart(&spec).expect("svg");
        assert!(svg.contains(&format!("{}\u{2026}", "a".repeat(19))));
    }
}
