//! TOML reading and canonical writing for the manifest model.
//!
//! Parsing is lenient about shape: recognized keys are lifted into the
//! model, scalars are coerced to text, and anything unrecognized or
//! malformed is preserved in the nearest `extra` table so validation can
//! point at it. Serialization writes the model back in template order;
//! parse, serialize, parse reaches a fixed point at the model level.

use std::fmt::Write as _;
use std::path::Path;

use toml::Value;

use crate::error::{Error, Result};
use crate::manifest::{
    Annotation, Collection, Contents, CurationRationale, DataSplits, Entry, Manifest,
    Preprocessing, Sampling, SplitSpec, TriState, TypesEntry, Uses, UNKNOWN,
};

/// Read and parse a manifest file.
pub fn parse_manifest(path: &Path) -> Result<Manifest> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_manifest_str(&text, path)
}

/// Parse manifest TOML. `path` is used for error messages only.
pub fn parse_manifest_str(text: &str, path: &Path) -> Result<Manifest> {
    let mut doc: toml::Table = text.parse().map_err(|e: toml::de::Error| {
        let line = e
            .span()
            .map(|s| 1 + text[..s.start.min(text.len())].matches('\n').count())
            .unwrap_or(0);
        Error::parse(path, line, format!("manifest TOML: {}", e.message()))
    })?;

    let mut manifest = Manifest::default();

    let mut section = take_section(&mut doc, "curation_rationale");
    manifest.curation_rationale = parse_curation(&mut section);
    manifest.curation_rationale.extra = section;

    let mut section = take_section(&mut doc, "collection");
    manifest.collection = parse_collection(&mut section);
    manifest.collection.extra = section;

    let mut section = take_section(&mut doc, "preprocessing");
    manifest.preprocessing = parse_preprocessing(&mut section);
    manifest.preprocessing.extra = section;

    manifest.instance_demographics = entry_from(doc.remove("instance_demographics"));

    let mut section = take_section(&mut doc, "annotation");
    manifest.annotation = Annotation {
        process: entry_from(section.remove("process")),
        annotator_demographics: entry_from(section.remove("annotator_demographics")),
        extra: section,
    };

    let mut section = take_section(&mut doc, "uses");
    manifest.uses = Uses {
        primary_intended: entry_from(section.remove("primary_intended")),
        other: entry_from(section.remove("other")),
        extra: section,
    };

    for (key, value) in doc {
        manifest.extra.insert(key, value);
    }
    Ok(manifest)
}

fn parse_curation(section: &mut toml::Table) -> CurationRationale {
    let mut contents_table = take_section(section, "contents");
    let contents = Contents {
        description: entry_from(contents_table.remove("description")),
        is_snapshot: tristate_from(contents_table.remove("is_snapshot")),
        extra: contents_table,
    };
    CurationRationale {
        authors_and_reference: entry_from(section.remove("authors_and_reference")),
        purpose: entry_from(section.remove("purpose")),
        domain: entry_from(section.remove("domain")),
        node_semantics: entry_from(section.remove("node_semantics")),
        edge_semantics: entry_from(section.remove("edge_semantics")),
        contents,
        network_types: types_from(section.remove("network_types")),
        extra: toml::Table::new(),
    }
}

fn parse_collection(section: &mut toml::Table) -> Collection {
    let mut sampling_table = take_section(section, "sampling");
    let sampling = Sampling {
        used: tristate_from(sampling_table.remove("used")),
        strategy: entry_from(sampling_table.remove("strategy")),
        reason: entry_from(sampling_table.remove("reason")),
        extra: sampling_table,
    };
    Collection {
        mechanism_and_raw_data: entry_from(section.remove("mechanism_and_raw_data")),
        sampling,
        extra: toml::Table::new(),
    }
}

fn parse_preprocessing(section: &mut toml::Table) -> Preprocessing {
    let data_splits = match section.remove("data_splits") {
        None => DataSplits::default(),
        Some(Value::Table(mut t)) => {
            let strategy = entry_from(t.remove("strategy"));
            let splits = match t.remove("splits") {
                None => Vec::new(),
                Some(value) => match parse_splits(&value) {
                    Some(splits) => splits,
                    None => {
                        t.insert("splits".to_string(), value);
                        Vec::new()
                    }
                },
            };
            DataSplits { strategy, splits, extra: t }
        }
        // A bare string is shorthand for the strategy alone.
        Some(value) => DataSplits {
            strategy: entry_from(Some(value)),
            splits: Vec::new(),
            extra: toml::Table::new(),
        },
    };
    Preprocessing {
        network_construction: entry_from(section.remove("network_construction")),
        data_cleaning: entry_from(section.remove("data_cleaning")),
        data_filtering: entry_from(section.remove("data_filtering")),
        network_transformation: entry_from(section.remove("network_transformation")),
        attribute_transformation: entry_from(section.remove("attribute_transformation")),
        data_splits,
        operations: section.remove("operations"),
        extra: toml::Table::new(),
    }
}

fn parse_splits(value: &Value) -> Option<Vec<SplitSpec>> {
    let items = value.as_array()?;
    let mut splits = Vec::with_capacity(items.len());
    for item in items {
        let table = item.as_table()?;
        let name = table.get("name")?.as_str()?.to_string();
        let count = match table.get("count") {
            None => None,
            Some(Value::Integer(n)) => Some(*n),
            Some(_) => return None,
        };
        // Only name and count are meaningful here; other keys make the
        // whole list opaque rather than silently dropped.
        if table.len() > 1 + usize::from(count.is_some()) {
            return None;
        }
        splits.push(SplitSpec { name, count });
    }
    Some(splits)
}

/// Remove `key` as a table. A present non-table value is put back so it
/// survives as an unrecognized leftover for validation to flag.
fn take_section(parent: &mut toml::Table, key: &str) -> toml::Table {
    match parent.remove(key) {
        Some(Value::Table(t)) => t,
        Some(other) => {
            parent.insert(key.to_string(), other);
            toml::Table::new()
        }
        None => toml::Table::new(),
    }
}

fn entry_from(value: Option<Value>) -> Entry {
    match value {
        None => Entry::Missing,
        Some(Value::String(s)) if s == UNKNOWN => Entry::Unknown,
        Some(Value::String(s)) => Entry::Text(s),
        Some(Value::Integer(n)) => Entry::Text(n.to_string()),
        Some(Value::Float(x)) => Entry::Text(x.to_string()),
        Some(Value::Boolean(b)) => Entry::Text(b.to_string()),
        Some(Value::Datetime(d)) => Entry::Text(d.to_string()),
        Some(v) => Entry::Structured(v),
    }
}

fn tristate_from(value: Option<Value>) -> TriState {
    match value {
        None => TriState::Missing,
        Some(Value::String(s)) => match s.as_str() {
            "yes" => TriState::Yes,
            "no" => TriState::No,
            UNKNOWN => TriState::Unknown,
            _ => TriState::Invalid(s),
        },
        Some(Value::Boolean(true)) => TriState::Yes,
        Some(Value::Boolean(false)) => TriState::No,
        Some(v) => TriState::Invalid(v.to_string()),
    }
}

fn types_from(value: Option<Value>) -> TypesEntry {
    match value {
        None => TypesEntry::Missing,
        Some(Value::String(s)) if s == UNKNOWN => TypesEntry::Unknown,
        Some(Value::Array(items)) => {
            let mut tags = Vec::with_capacity(items.len());
            for item in &items {
                match item.as_str() {
                    Some(s) => tags.push(s.to_string()),
                    None => return TypesEntry::Invalid(Value::Array(items)),
                }
            }
            TypesEntry::List(tags)
        }
        Some(v) => TypesEntry::Invalid(v),
    }
}

/// Write the model back as TOML in template order.
pub fn serialize_manifest(manifest: &Manifest) -> String {
    let mut out = String::new();

    write_entry_line(&mut out, "instance_demographics", &manifest.instance_demographics);
    write_extras(&mut out, &manifest.extra);

    let c = &manifest.curation_rationale;
    let mut body = String::new();
    write_entry_line(&mut body, "authors_and_reference", &c.authors_and_reference);
    write_entry_line(&mut body, "purpose", &c.purpose);
    write_entry_line(&mut body, "domain", &c.domain);
    write_entry_line(&mut body, "node_semantics", &c.node_semantics);
    write_entry_line(&mut body, "edge_semantics", &c.edge_semantics);
    match &c.network_types {
        TypesEntry::Missing => {}
        TypesEntry::Unknown => write_value_line(&mut body, "network_types", &unknown_value()),
        TypesEntry::List(tags) => {
            let items = tags.iter().map(|t| Value::String(t.clone())).collect();
            write_value_line(&mut body, "network_types", &Value::Array(items));
        }
        TypesEntry::Invalid(v) => write_value_line(&mut body, "network_types", v),
    }
    write_extras(&mut body, &c.extra);
    write_section(&mut out, "curation_rationale", &body);

    let mut body = String::new();
    write_entry_line(&mut body, "description", &c.contents.description);
    write_tristate_line(&mut body, "is_snapshot", &c.contents.is_snapshot);
    write_extras(&mut body, &c.contents.extra);
    write_section(&mut out, "curation_rationale.contents", &body);

    let col = &manifest.collection;
    let mut body = String::new();
    write_entry_line(&mut body, "mechanism_and_raw_data", &col.mechanism_and_raw_data);
    write_extras(&mut body, &col.extra);
    write_section(&mut out, "collection", &body);

    let mut body = String::new();
    write_tristate_line(&mut body, "used", &col.sampling.used);
    write_entry_line(&mut body, "strategy", &col.sampling.strategy);
    write_entry_line(&mut body, "reason", &col.sampling.reason);
    write_extras(&mut body, &col.sampling.extra);
    write_section(&mut out, "collection.sampling", &body);

    let p = &manifest.preprocessing;
    let mut body = String::new();
    write_entry_line(&mut body, "network_construction", &p.network_construction);
    write_entry_line(&mut body, "data_cleaning", &p.data_cleaning);
    write_entry_line(&mut body, "data_filtering", &p.data_filtering);
    write_entry_line(&mut body, "network_transformation", &p.network_transformation);
    write_entry_line(&mut body, "attribute_transformation", &p.attribute_transformation);
    if let Some(ops) = &p.operations {
        write_value_line(&mut body, "operations", ops);
    }
    write_extras(&mut body, &p.extra);
    write_section(&mut out, "preprocessing", &body);

    let ds = &p.data_splits;
    let mut body = String::new();
    write_entry_line(&mut body, "strategy", &ds.strategy);
    if !ds.splits.is_empty() {
        let items = ds
            .splits
            .iter()
            .map(|s| {
                let mut t = toml::Table::new();
                t.insert("name".to_string(), Value::String(s.name.clone()));
                if let Some(count) = s.count {
                    t.insert("count".to_string(), Value::Integer(count));
                }
                Value::Table(t)
            })
            .collect();
        write_value_line(&mut body, "splits", &Value::Array(items));
    }
    write_extras(&mut body, &ds.extra);
    write_section(&mut out, "preprocessing.data_splits", &body);

    let mut body = String::new();
    write_entry_line(&mut body, "process", &manifest.annotation.process);
    write_entry_line(&mut body, "annotator_demographics", &manifest.annotation.annotator_demographics);
    write_extras(&mut body, &manifest.annotation.extra);
    write_section(&mut out, "annotation", &body);

    let mut body = String::new();
    write_entry_line(&mut body, "primary_intended", &manifest.uses.primary_intended);
    write_entry_line(&mut body, "other", &manifest.uses.other);
    write_extras(&mut body, &manifest.uses.extra);
    write_section(&mut out, "uses", &body);

    out
}

fn unknown_value() -> Value {
    Value::String(UNKNOWN.to_string())
}

fn write_section(out: &mut String, header: &str, body: &str) {
    if body.is_empty() {
        return;
    }
    if !out.is_empty() {
        out.push('\n');
    }
    let _ = writeln!(out, "[{header}]");
    out.push_str(body);
}

fn write_entry_line(out: &mut String, key: &str, entry: &Entry) {
    match entry {
        Entry::Missing => {}
        Entry::Unknown => write_value_line(out, key, &unknown_value()),
        Entry::Text(s) => write_value_line(out, key, &Value::String(s.clone())),
        Entry::Structured(v) => write_value_line(out, key, v),
    }
}

fn write_tristate_line(out: &mut String, key: &str, state: &TriState) {
    if let Some(s) = state.as_str() {
        write_value_line(out, key, &Value::String(s.to_string()));
    }
}

fn write_extras(out: &mut String, extra: &toml::Table) {
    let mut keys: Vec<&String> = extra.keys().collect();
    keys.sort();
    for key in keys {
        write_value_line(out, key, &extra[key]);
    }
}

fn write_value_line(out: &mut String, key: &str, value: &Value) {
    let _ = writeln!(out, "{} = {}", emit_key(key), emit_value(value));
}

fn emit_key(key: &str) -> String {
    let bare = !key.is_empty()
        && key.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'-' || b == b'_');
    if bare {
        key.to_string()
    } else {
        emit_string(key)
    }
}

/// Render any value inline. Inline form sidesteps TOML's rule that plain
/// keys may not follow a sub-table header.
fn emit_value(value: &Value) -> String {
    match value {
        Value::String(s) => emit_string(s),
        Value::Integer(n) => n.to_string(),
        Value::Float(x) => emit_float(*x),
        Value::Boolean(b) => b.to_string(),
        Value::Datetime(d) => d.to_string(),
        Value::Array(items) => {
            let inner: Vec<String> = items.iter().map(emit_value).collect();
            format!("[{}]", inner.join(", "))
        }
        Value::Table(t) => {
            let mut keys: Vec<&String> = t.keys().collect();
            keys.sort();
            let inner: Vec<String> = keys
                .into_iter()
                .map(|k| format!("{} = {}", emit_key(k), emit_value(&t[k])))
                .collect();
            format!("{{ {} }}", inner.join(", "))
        }
    }
}

fn emit_float(x: f64) -> String {
    if x.is_nan() {
        "nan".to_string()
    } else if x.is_infinite() {
        if x > 0.0 { "inf".to_string() } else { "-inf".to_string() }
    } else if x == x.trunc() && x.abs() < 1e15 {
        // TOML floats need a fractional part or exponent.
        format!("{x:.1}")
    } else {
        format!("{x}")
    }
}

fn emit_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            '\r' => out.push_str("\\r"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04X}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::path::PathBuf;

    fn parse(text: &str) -> Manifest {
        parse_manifest_str(text, &PathBuf::from("test.toml")).expect("parse")
    }

    const FULL: &str = r#"
instance_demographics = "Unknown"

[curation_rationale]
authors_and_reference = "Doe et al., Example Journal 2024"
purpose = "Study collaboration patterns"
domain = "science of science"
node_semantics = "researchers"
edge_semantics = "co-authored at least one article"
network_types = ["undirected", "simple", "weighted"]

[curation_rationale.contents]
description = "One snapshot of the collaboration graph"
is_snapshot = "yes"

[collection]
mechanism_and_raw_data = "scraped from a public archive"

[collection.sampling]
used = "yes"
strategy = "random walk over the archive"
reason = "full crawl was rate limited"

[preprocessing]
network_construction = "articles joined on normalized author names"
data_cleaning = "Unknown"
data_filtering = "none"
network_transformation = "projected to the author side"
attribute_transformation = "none"

[preprocessing.data_splits]
strategy = "random 80/20"
splits = [{ name = "train", count = 800 }, { name = "test", count = 200 }]

[annotation]
process = "no manual annotation"
annotator_demographics = "Unknown"

[uses]
primary_intended = "benchmarking community detection"
other = "teaching"
"#;

    #[test]
    fn parses_full_document() {
        let m = parse(FULL);
        assert_eq!(
            m.curation_rationale.purpose,
            Entry::Text("Study collaboration patterns".to_string())
        );
        assert!(m.preprocessing.data_cleaning.is_unknown());
        assert_eq!(m.curation_rationale.contents.is_snapshot, TriState::Yes);
        assert_eq!(m.collection.sampling.used, TriState::Yes);
        assert_eq!(m.instance_demographics, Entry::Unknown);
        let (tags, unknown) = m.type_tags();
        assert_eq!(tags.len(), 3);
        assert!(unknown.is_empty());
        assert_eq!(m.preprocessing.data_splits.splits.len(), 2);
        assert_eq!(m.preprocessing.data_splits.splits[0].count, Some(800));
    }

    #[test]
    fn absent_fields_are_missing() {
        let m = parse("[uses]\nprimary_intended = \"x\"\n");
        assert!(m.uses.other.is_missing());
        assert!(m.curation_rationale.purpose.is_missing());
        assert_eq!(m.collection.sampling.used, TriState::Missing);
        assert_eq!(m.curation_rationale.network_types, TypesEntry::Missing);
    }

    #[test]
    fn scalars_coerce_to_text() {
        let m = parse("[uses]\nprimary_intended = 3\nother = true\n");
        assert_eq!(m.uses.primary_intended, Entry::Text("3".to_string()));
        assert_eq!(m.uses.other, Entry::Text("true".to_string()));
    }

    #[test]
    fn unknown_sentinel_is_case_sensitive() {
        let m = parse("[uses]\nprimary_intended = \"unknown\"\nother = \"Unknown\"\n");
        assert_eq!(m.uses.primary_intended, Entry::Text("unknown".to_string()));
        assert!(m.uses.other.is_unknown());
    }

    #[test]
    fn extra_keys_are_preserved() {
        let m = parse("[uses]\nprimary_intended = \"x\"\nlicense = \"CC0\"\n\n[funding]\nagency = \"NSF\"\n");
        assert!(m.uses.extra.contains_key("license"));
        assert!(m.extra.contains_key("funding"));
    }

    #[test]
    fn malformed_section_lands_in_extra() {
        let m = parse("collection = \"scraped\"\n");
        assert!(m.collection.mechanism_and_raw_data.is_missing());
        assert_eq!(
            m.extra.get("collection"),
            Some(&Value::String("scraped".to_string()))
        );
    }

    #[test]
    fn data_splits_accepts_bare_string() {
        let m = parse("[preprocessing]\ndata_splits = \"random 90/10\"\n");
        assert_eq!(
            m.preprocessing.data_splits.strategy,
            Entry::Text("random 90/10".to_string())
        );
        assert!(m.preprocessing.data_splits.splits.is_empty());
    }

    #[test]
    fn invalid_tristate_is_kept() {
        let m = parse("[curation_rationale.contents]\nis_snapshot = \"maybe\"\n");
        assert_eq!(
            m.curation_rationale.contents.is_snapshot,
            TriState::Invalid("maybe".to_string())
        );
    }

    #[test]
    fn syntax_error_reports_line() {
        let err = parse_manifest_str("[uses]\nbad ==\n", &PathBuf::from("m.toml"))
            .expect_err("syntax error");
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn round_trip_is_fixed_point() {
        let first = parse(FULL);
        let text = serialize_manifest(&first);
        let second = parse_manifest_str(&text, &PathBuf::from("rt.toml")).expect("reparse");
        assert_eq!(first, second);
        let text_again = serialize_manifest(&second);
        assert_eq!(text, text_again);
    }

    #[test]
    fn round_trip_keeps_awkward_values() {
        let input = concat!(
            "top_note = \"kept\"\n",
            "[uses]\n",
            "primary_intended = \"x\"\n",
            "weights = [1.0, 2.5]\n",
            "nested = { a = 1, b = \"two\" }\n",
            "when = 2024-01-02T03:04:05Z\n",
        );
        let first = parse(input);
        let text = serialize_manifest(&first);
        let second = parse_manifest_str(&text, &PathBuf::from("rt.toml")).expect("reparse");
        assert_eq!(first, second);
    }

    #[test]
    fn round_trip_escapes_strings() {
        let mut m = Manifest::default();
        m.uses.primary_intended = Entry::Text("line one\nline \"two\"\t\\end".to_string());
        let text = serialize_manifest(&m);
        let back = parse_manifest_str(&text, &PathBuf::from("rt.toml")).expect("reparse");
        assert_eq!(m, back);
    }
}
