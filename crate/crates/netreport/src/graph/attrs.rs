//! Attribute tables: CSV columns keyed to nodes (by label) or aligned to
//! edges (by row order), with per-column kinds and a missing-value mask.

use std::collections::HashMap;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, LoadWarning};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AttributeTarget {
    Node,
    Edge,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColumnKind {
    Quantitative,
    Categorical,
    /// Categories with a meaningful order; bars keep that order instead of
    /// frequency order.
    OrderedCategorical,
}

impl ColumnKind {
    pub fn name(self) -> &'static str {
        match self {
            ColumnKind::Quantitative => "quantitative",
            ColumnKind::Categorical => "categorical",
            ColumnKind::OrderedCategorical => "ordered-categorical",
        }
    }
}

impl FromStr for ColumnKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "quantitative" => Ok(ColumnKind::Quantitative),
            "categorical" => Ok(ColumnKind::Categorical),
            "ordered-categorical" | "ordered" => Ok(ColumnKind::OrderedCategorical),
            other => Err(format!(
                "column kind must be quantitative, categorical, or ordered-categorical, got {other:?}"
            )),
        }
    }
}

/// One cell. Quantitative columns hold numbers, the others hold text.
#[derive(Clone, Debug, PartialEq)]
pub enum CellValue {
    Number(f64),
    Text(String),
}

#[derive(Clone, Debug)]
pub struct AttributeColumn {
    pub name: String,
    pub kind: ColumnKind,
    /// One entry per node or edge; `None` masks a missing or unusable value.
    pub values: Vec<Option<CellValue>>,
}

impl AttributeColumn {
    pub fn masked_count(&self) -> usize {
        self.values.iter().filter(|v| v.is_none()).count()
    }
}

#[derive(Clone, Debug)]
pub struct AttributeTable {
    pub target: AttributeTarget,
    pub columns: Vec<AttributeColumn>,
}

/// Loads a CSV attribute table. Node tables require an `id` column whose
/// values are node labels; edge tables must have exactly one row per edge in
/// input order. `kinds` overrides the per-column kind; unspecified columns
/// are quantitative when every non-empty cell parses as a number, else
/// categorical.
pub fn load_attributes(
    path: &Path,
    graph: &Graph,
    target: AttributeTarget,
    kinds: &HashMap<String, ColumnKind>,
) -> Result<(AttributeTable, Vec<LoadWarning>)> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(false)
        .from_path(path)
        .map_err(|e| csv_error(path, e))?;
    let headers: Vec<String> =
        reader.headers().map_err(|e| csv_error(path, e))?.iter().map(str::to_string).collect();
    let mut rows: Vec<Vec<String>> = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| csv_error(path, e))?;
        rows.push(record.iter().map(str::to_string).collect());
    }

    for name in kinds.keys() {
        if !headers.iter().any(|h| h == name) {
            return Err(Error::usage(format!(
                "column {name:?} named in a kind override is not in {}",
                path.display()
            )));
        }
    }

    let mut warnings = Vec::new();
    let row_count = match target {
        AttributeTarget::Node => graph.node_count(),
        AttributeTarget::Edge => {
            if rows.len() != graph.edge_count_raw() {
                return Err(Error::parse(
                    path,
                    0,
                    format!(
                        "edge attribute table has {} rows but the graph has {} edges",
                        rows.len(),
                        graph.edge_count_raw()
                    ),
                ));
            }
            graph.edge_count_raw()
        }
    };

    // For node tables, map each CSV row to a node id through the id column.
    let mut row_of: Vec<Option<usize>> = Vec::new();
    let id_col = match target {
        AttributeTarget::Node => {
            let idx = headers.iter().position(|h| h == "id").ok_or_else(|| {
                Error::parse(path, 1, "node attribute table has no \"id\" column")
            })?;
            let mut map = vec![None; graph.node_count()];
            let mut unmatched = 0usize;
            let mut duplicate = 0usize;
            for (r, row) in rows.iter().enumerate() {
                match graph.id_of(&row[idx]) {
                    Some(u) => {
                        if map[u as usize].is_some() {
                            duplicate += 1;
                        } else {
                            map[u as usize] = Some(r);
                        }
                    }
                    None => unmatched += 1,
                }
            }
            if unmatched > 0 {
                warnings.push(LoadWarning::new(format!(
                    "{unmatched} attribute row(s) have ids that match no node; ignored"
                )));
            }
            if duplicate > 0 {
                warnings.push(LoadWarning::new(format!(
                    "{duplicate} attribute row(s) repeat an id; first occurrence kept"
                )));
            }
            let missing = map.iter().filter(|m| m.is_none()).count();
            if missing > 0 {
                warnings.push(LoadWarning::new(format!(
                    "{missing} node(s) have no attribute row; their values are masked"
                )));
            }
            row_of = map;
            Some(idx)
        }
        AttributeTarget::Edge => None,
    };

    let mut columns = Vec::new();
    for (c, header) in headers.iter().enumerate() {
        if Some(c) == id_col {
            continue;
        }
        let cell_for = |i: usize| -> Option<&str> {
            let r = match target {
                AttributeTarget::Node => row_of[i]?,
                AttributeTarget::Edge => i,
            };
            let cell = rows[r][c].trim();
            if cell.is_empty() {
                None
            } else {
                Some(cell)
            }
        };
        let kind = kinds.get(header).copied().unwrap_or_else(|| {
            let mut any = false;
            let all_numeric = (0..row_count).all(|i| match cell_for(i) {
                Some(cell) => {
                    any = true;
                    cell.parse::<f64>().is_ok()
                }
                None => true,
            });
            if any && all_numeric {
                ColumnKind::Quantitative
            } else {
                ColumnKind::Categorical
            }
        });
        let mut unparsed = 0usize;
        let values: Vec<Option<CellValue>> = (0..row_count)
            .map(|i| {
                let cell = cell_for(i)?;
                match kind {
                    ColumnKind::Quantitative => match cell.parse::<f64>() {
                        Ok(x) if x.is_finite() => Some(CellValue::Number(x)),
                        _ => {
                            unparsed += 1;
                            None
                        }
                    },
                    _ => Some(CellValue::Text(cell.to_string())),
                }
            })
            .collect();
        if unparsed > 0 {
            warnings.push(LoadWarning::new(format!(
                "column {header:?}: {unparsed} value(s) are not finite numbers; masked"
            )));
        }
        columns.push(AttributeColumn { name: header.clone(), kind, values });
    }

    Ok((AttributeTable { target, columns }, warnings))
}

fn csv_error(path: &Path, e: csv::Error) -> Error {
    let line = match e.position() {
        Some(p) => p.line() as usize,
        None => 0,
    };
    Error::parse(path, line, e.to_string())
}
