//! Plain-text statistics tables.
//!
//! `stats.txt` is the machine-friendly twin of the report's statistics
//! section: one `key = value` line per statistic in canonical order,
//! `N/A (reason)` for absent values, and `# note:` lines for anything
//! the solvers want the reader to know. Multi-network runs get one
//! `[member NAME]` block per member plus an `[aggregate]` block.

use crate::stats::{FieldAggregate, FieldValue, PointStats, StatValue};
use std::fmt::Write as _;

fn push_value(out: &mut String, key: &str, value: &FieldValue) {
    match value {
        FieldValue::Count(c) => {
            let _ = writeln!(out, "{key} = {c}");
        }
        FieldValue::Real(StatValue::Value(x)) => {
            let _ = writeln!(out, "{key} = {x}");
        }
        FieldValue::Real(StatValue::NotAvailable(reason)) => {
            let _ = writeln!(out, "{key} = N/A ({reason})");
        }
        FieldValue::Flag(b) => {
            let _ = writeln!(out, "{key} = {b}");
        }
    }
}

fn push_block(out: &mut String, stats: &PointStats) {
    for (key, value) in stats.fields() {
        push_value(out, key, &value);
    }
    for note in &stats.notes {
        let _ = writeln!(out, "# note: {note}");
    }
}

/// The `stats.txt` body for a single network.
pub fn single(stats: &PointStats, header: &[String]) -> String {
    let mut out = String::new();
    for line in header {
        let _ = writeln!(out, "# {line}");
    }
    push_block(&mut out, stats);
    out
}

/// The `stats.txt` body for a multi-network run: per-member blocks in
/// input order, then the aggregate block.
pub fn multi(
    members: &[(String, PointStats)],
    aggregates: &[FieldAggregate],
    header: &[String],
) -> String {
    let mut out = String::new();
    for line in header {
        let _ = writeln!(out, "# {line}");
    }
    for (name, stats) in members {
        let _ = writeln!(out, "[member {name}]");
        push_block(&mut out, stats);
        out.push('\n');
    }
    let _ = writeln!(out, "[aggregate]");
    for agg in aggregates {
        match (agg.mean, agg.std) {
            (Some(mean), Some(std)) => {
                let _ = writeln!(out, "{}.mean = {mean}", agg.name);
                let _ = writeln!(out, "{}.std = {std}", agg.name);
            }
            _ => {
                let _ = writeln!(out, "{}.mean = N/A (no member values)", agg.name);
                let _ = writeln!(out, "{}.std = N/A (no member values)", agg.name);
            }
        }
        let _ = writeln!(out, "{}.coverage = {}/{}", agg.name, agg.present, agg.total);
    }
    out
}
