//! Edge-list parsing: delimiter handling, label interning, column layout
//! detection, and simple-graph deduplication.

use std::collections::HashMap;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{EdgeRecord, Graph};

/// Field separator. `Whitespace` splits on any run of spaces and tabs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Delimiter {
    #[default]
    Whitespace,
    Comma,
    Char(char),
}

impl FromStr for Delimiter {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "whitespace" => Ok(Delimiter::Whitespace),
            "comma" => Ok(Delimiter::Comma),
            other => {
                let mut chars = other.chars();
                match (chars.next(), chars.next()) {
                    (Some(c), None) => Ok(Delimiter::Char(c)),
                    _ => Err(format!("delimiter must be \"whitespace\", \"comma\", or a single character, got {other:?}")),
                }
            }
        }
    }
}

/// Optional column layout after `src dst`. `Auto` infers from the first data
/// line: 3 fields mean a weight, 4 mean weight then timestamp.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum EdgeColumns {
    #[default]
    Auto,
    None,
    Weight,
    Timestamp,
    WeightTimestamp,
}

impl EdgeColumns {
    fn layout(self, field_count: usize) -> Option<(bool, bool)> {
        match self {
            EdgeColumns::Auto => match field_count {
                2 => Some((false, false)),
                3 => Some((true, false)),
                4 => Some((true, true)),
                _ => None,
            },
            EdgeColumns::None => Some((false, false)),
            EdgeColumns::Weight => Some((true, false)),
            EdgeColumns::Timestamp => Some((false, true)),
            EdgeColumns::WeightTimestamp => Some((true, true)),
        }
    }
}

impl FromStr for EdgeColumns {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "auto" => Ok(EdgeColumns::Auto),
            "none" => Ok(EdgeColumns::None),
            "weight" => Ok(EdgeColumns::Weight),
            "timestamp" => Ok(EdgeColumns::Timestamp),
            "weight-timestamp" => Ok(EdgeColumns::WeightTimestamp),
            other => Err(format!(
                "edge columns must be one of auto, none, weight, timestamp, weight-timestamp, got {other:?}"
            )),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct LoadOptions {
    pub directed: bool,
    pub multigraph: bool,
    pub delimiter: Delimiter,
    pub columns: EdgeColumns,
}

/// Non-fatal loader finding, surfaced on stderr and in the report.
#[derive(Clone, Debug, PartialEq)]
pub struct LoadWarning {
    pub message: String,
}

impl LoadWarning {
    pub(crate) fn new(message: impl Into<String>) -> Self {
        LoadWarning { message: message.into() }
    }
}

pub fn load_edge_list(path: &Path, opts: &LoadOptions) -> Result<(Graph, Vec<LoadWarning>)> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_edge_list(&text, path, opts)
}

/// Parses edge-list text. `path` only labels error messages.
pub fn parse_edge_list(
    text: &str,
    path: &Path,
    opts: &LoadOptions,
) -> Result<(Graph, Vec<LoadWarning>)> {
    let mut labels: Vec<String> = Vec::new();
    let mut index: HashMap<String, u32> = HashMap::new();
    let mut intern = |token: &str| -> u32 {
        if let Some(&id) = index.get(token) {
            return id;
        }
        let id = labels.len() as u32;
        labels.push(token.to_string());
        index.insert(token.to_string(), id);
        id
    };

    let mut edges: Vec<EdgeRecord> = Vec::new();
    let mut layout: Option<(bool, bool)> = None;
    let mut fields: Vec<&str> = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        fields.clear();
        match opts.delimiter {
            Delimiter::Whitespace => fields.extend(line.split_whitespace()),
            Delimiter::Comma => fields.extend(line.split(',').map(str::trim)),
            Delimiter::Char(c) => fields.extend(line.split(c).map(str::trim)),
        }
        let (want_weight, want_ts) = match layout {
            Some(l) => l,
            None => {
                let l = opts.columns.layout(fields.len()).ok_or_else(|| {
                    Error::parse(path, lineno, format!("expected 2 to 4 columns, found {}", fields.len()))
                })?;
                layout = Some(l);
                l
            }
        };
        let expected = 2 + usize::from(want_weight) + usize::from(want_ts);
        if fields.len() != expected {
            return Err(Error::parse(
                path,
                lineno,
                format!("expected {expected} columns, found {}", fields.len()),
            ));
        }
        let src = intern(fields[0]);
        let dst = intern(fields[1]);
        let mut next = 2;
        let weight = if want_weight {
            let f = fields[next];
            next += 1;
            Some(f.parse::<f64>().map_err(|_| {
                Error::parse(path, lineno, format!("weight {f:?} is not a number"))
            })?)
        } else {
            None
        };
        let timestamp = if want_ts {
            let f = fields[next];
            Some(f.parse::<i64>().map_err(|_| {
                Error::parse(path, lineno, format!("timestamp {f:?} is not an integer"))
            })?)
        } else {
            None
        };
        edges.push(EdgeRecord { src, dst, weight, timestamp });
    }

    if edges.is_empty() {
        return Err(Error::parse(path, 0, "empty input: no edges found"));
    }

    let mut warnings = Vec::new();
    let mut dedup_removed = 0;
    if !opts.multigraph {
        // Keep the first record of each key; a key is the ordered pair for
        // directed graphs and the unordered pair otherwise.
        let before = edges.len();
        let mut seen: HashMap<(u32, u32), ()> = HashMap::with_capacity(edges.len());
        let directed = opts.directed;
        edges.retain(|e| {
            let key = if directed || e.src <= e.dst { (e.src, e.dst) } else { (e.dst, e.src) };
            seen.insert(key, ()).is_none()
        });
        dedup_removed = before - edges.len();
        if dedup_removed > 0 {
            warnings.push(LoadWarning::new(format!(
                "removed {dedup_removed} duplicate edge(s); pass the multigraph option to keep parallel edges"
            )));
        }
    }

    let graph = Graph::build(opts.directed, opts.multigraph, labels, edges, dedup_removed)?;
    Ok((graph, warnings))
}
