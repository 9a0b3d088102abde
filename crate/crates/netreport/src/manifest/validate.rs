//! Completeness and consistency checks over the parsed manifest.

use std::fmt;

use crate::graph::Graph;
use crate::manifest::{Entry, Manifest, TriState, TypeTag, TypesEntry};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Severity {
    Warning,
    Error,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Severity::Warning => "WARNING",
            Severity::Error => "ERROR",
        })
    }
}

/// One validation finding, addressed by dotted field path.
#[derive(Clone, Debug, PartialEq)]
pub struct Finding {
    pub severity: Severity,
    pub path: String,
    pub message: String,
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}: {}", self.severity, self.path, self.message)
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct ValidationReport {
    pub findings: Vec<Finding>,
}

impl ValidationReport {
    pub fn error_count(&self) -> usize {
        self.findings.iter().filter(|f| f.severity == Severity::Error).count()
    }

    pub fn warning_count(&self) -> usize {
        self.findings.iter().filter(|f| f.severity == Severity::Warning).count()
    }

    pub fn passed(&self) -> bool {
        self.error_count() == 0
    }

    pub fn lines(&self) -> Vec<String> {
        self.findings.iter().map(|f| f.to_string()).collect()
    }

    pub fn extend(&mut self, findings: Vec<Finding>) {
        self.findings.extend(findings);
    }
}

struct Checker {
    findings: Vec<Finding>,
}

impl Checker {
    fn error(&mut self, path: &str, message: impl Into<String>) {
        self.findings.push(Finding {
            severity: Severity::Error,
            path: path.to_string(),
            message: message.into(),
        });
    }

    fn warning(&mut self, path: &str, message: impl Into<String>) {
        self.findings.push(Finding {
            severity: Severity::Warning,
            path: path.to_string(),
            message: message.into(),
        });
    }

    fn required(&mut self, path: &str, entry: &Entry) {
        match entry {
            Entry::Missing => self.error(
                path,
                "required field is missing; answer it or set it to \"Unknown\"",
            ),
            Entry::Unknown => self.warning(path, "explicitly marked Unknown"),
            Entry::Text(s) if s.trim().is_empty() => {
                self.error(path, "text must not be empty; use \"Unknown\" if not known")
            }
            Entry::Text(_) | Entry::Structured(_) => {}
        }
    }

    fn required_tristate(&mut self, path: &str, state: &TriState) {
        match state {
            TriState::Missing => self.error(
                path,
                "required field is missing; answer \"yes\", \"no\" or \"Unknown\"",
            ),
            TriState::Unknown => self.warning(path, "explicitly marked Unknown"),
            TriState::Invalid(s) => self.error(
                path,
                format!("\"{s}\" is not a valid answer; use \"yes\", \"no\" or \"Unknown\""),
            ),
            TriState::Yes | TriState::No => {}
        }
    }

    fn extras(&mut self, prefix: &str, extra: &toml::Table) {
        let mut keys: Vec<&String> = extra.keys().collect();
        keys.sort();
        for key in keys {
            let path = if prefix.is_empty() {
                key.to_string()
            } else {
                format!("{prefix}.{key}")
            };
            self.warning(&path, "unexpected or malformed entry");
        }
    }
}

/// Check the manifest against the template: every field answered, the
/// type tags recognized and mutually consistent.
pub fn validate_manifest(manifest: &Manifest) -> ValidationReport {
    let mut c = Checker { findings: Vec::new() };

    let cr = &manifest.curation_rationale;
    c.required("curation_rationale.authors_and_reference", &cr.authors_and_reference);
    c.required("curation_rationale.purpose", &cr.purpose);
    c.required("curation_rationale.domain", &cr.domain);
    c.required("curation_rationale.node_semantics", &cr.node_semantics);
    c.required("curation_rationale.edge_semantics", &cr.edge_semantics);
    c.required("curation_rationale.contents.description", &cr.contents.description);
    c.required_tristate("curation_rationale.contents.is_snapshot", &cr.contents.is_snapshot);
    check_types(&mut c, &cr.network_types);
    c.extras("curation_rationale.contents", &cr.contents.extra);
    c.extras("curation_rationale", &cr.extra);

    let col = &manifest.collection;
    c.required("collection.mechanism_and_raw_data", &col.mechanism_and_raw_data);
    c.required_tristate("collection.sampling.used", &col.sampling.used);
    if col.sampling.used == TriState::Yes {
        if col.sampling.strategy.is_missing() {
            c.error(
                "collection.sampling.strategy",
                "required when sampling.used is \"yes\"",
            );
        } else {
            c.required("collection.sampling.strategy", &col.sampling.strategy);
        }
        if col.sampling.reason.is_missing() {
            c.error("collection.sampling.reason", "required when sampling.used is \"yes\"");
        } else {
            c.required("collection.sampling.reason", &col.sampling.reason);
        }
    }
    c.extras("collection.sampling", &col.sampling.extra);
    c.extras("collection", &col.extra);

    let p = &manifest.preprocessing;
    c.required("preprocessing.network_construction", &p.network_construction);
    c.required("preprocessing.data_cleaning", &p.data_cleaning);
    c.required("preprocessing.data_filtering", &p.data_filtering);
    c.required("preprocessing.network_transformation", &p.network_transformation);
    c.required("preprocessing.attribute_transformation", &p.attribute_transformation);
    c.required("preprocessing.data_splits.strategy", &p.data_splits.strategy);
    for (i, split) in p.data_splits.splits.iter().enumerate() {
        if split.name.trim().is_empty() {
            c.error(
                &format!("preprocessing.data_splits.splits[{i}].name"),
                "split name must not be empty",
            );
        }
        if let Some(count) = split.count {
            if count < 0 {
                c.error(
                    &format!("preprocessing.data_splits.splits[{i}].count"),
                    "split count must not be negative",
                );
            }
        }
    }
    if let Some(ops) = &p.operations {
        match ops {
            toml::Value::Array(items) => {
                for (i, item) in items.iter().enumerate() {
                    if !item.is_table() {
                        c.warning(
                            &format!("preprocessing.operations[{i}]"),
                            "expected a table describing one step",
                        );
                    }
                }
            }
            _ => c.warning("preprocessing.operations", "expected an array of step tables"),
        }
    }
    c.extras("preprocessing.data_splits", &p.data_splits.extra);
    c.extras("preprocessing", &p.extra);

    c.required("instance_demographics", &manifest.instance_demographics);

    c.required("annotation.process", &manifest.annotation.process);
    c.required(
        "annotation.annotator_demographics",
        &manifest.annotation.annotator_demographics,
    );
    c.extras("annotation", &manifest.annotation.extra);

    c.required("uses.primary_intended", &manifest.uses.primary_intended);
    c.required("uses.other", &manifest.uses.other);
    c.extras("uses", &manifest.uses.extra);

    c.extras("", &manifest.extra);

    ValidationReport { findings: c.findings }
}

fn check_types(c: &mut Checker, types: &TypesEntry) {
    const PATH: &str = "curation_rationale.network_types";
    match types {
        TypesEntry::Missing => c.error(
            PATH,
            "required field is missing; list the network type tags or set it to \"Unknown\"",
        ),
        TypesEntry::Unknown => c.warning(PATH, "explicitly marked Unknown"),
        TypesEntry::Invalid(_) => c.error(PATH, "must be an array of type tag strings"),
        TypesEntry::List(items) => {
            if items.is_empty() {
                c.error(PATH, "must list at least one type tag");
            }
            let mut seen: Vec<&str> = Vec::new();
            let mut tags: Vec<TypeTag> = Vec::new();
            for item in items {
                if seen.contains(&item.as_str()) {
                    c.warning(PATH, format!("tag \"{item}\" is listed more than once"));
                    continue;
                }
                seen.push(item);
                match TypeTag::parse(item) {
                    Some(tag) => tags.push(tag),
                    None => c.error(PATH, format!("unrecognized network type tag \"{item}\"")),
                }
            }
            for (a, b) in TypeTag::EXCLUSIVE {
                if tags.contains(&a) && tags.contains(&b) {
                    c.error(
                        PATH,
                        format!("tags \"{a}\" and \"{b}\" are mutually exclusive"),
                    );
                }
            }
        }
    }
}

/// Compare manifest declarations against the loaded network. All findings
/// are warnings: the data wins, the prose gets flagged.
pub fn cross_check(manifest: &Manifest, graph: &Graph) -> Vec<Finding> {
    const PATH: &str = "curation_rationale.network_types";
    let mut c = Checker { findings: Vec::new() };
    let (tags, _) = manifest.type_tags();
    let has = |t: TypeTag| tags.contains(&t);

    if has(TypeTag::Directed) && !graph.is_directed() {
        c.warning(PATH, "declares \"directed\" but the edge list was loaded as undirected");
    }
    if has(TypeTag::Undirected) && graph.is_directed() {
        c.warning(PATH, "declares \"undirected\" but the edge list was loaded as directed");
    }
    if has(TypeTag::Multigraph) && !graph.is_multigraph() {
        c.warning(
            PATH,
            "declares \"multigraph\" but the edge list was loaded as simple (duplicates removed)",
        );
    }
    if has(TypeTag::Simple) && graph.is_multigraph() {
        c.warning(PATH, "declares \"simple\" but the edge list was loaded as a multigraph");
    }
    if has(TypeTag::Simple) && graph.dedup_removed() > 0 {
        c.warning(
            PATH,
            format!(
                "declares \"simple\" but {} duplicate edge(s) were removed during loading",
                graph.dedup_removed()
            ),
        );
    }
    if has(TypeTag::Weighted) && !graph.has_weights() {
        c.warning(PATH, "declares \"weighted\" but the edge list carries no weights");
    }
    if has(TypeTag::Unweighted) && graph.has_weights() {
        c.warning(PATH, "declares \"unweighted\" but the edge list carries weights");
    }
    if has(TypeTag::Temporal) && !graph.has_timestamps() {
        c.warning(PATH, "declares \"temporal\" but the edge list carries no timestamps");
    }
    if !has(TypeTag::Temporal) && !tags.is_empty() && graph.has_timestamps() {
        c.warning(
            PATH,
            "edge list carries timestamps but \"temporal\" is not declared",
        );
    }
    c.findings
}
