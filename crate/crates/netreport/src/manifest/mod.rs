//! Dataset manifest: the structured document that carries curation
//! rationale, collection and preprocessing notes, and intended uses.
//!
//! Completeness policy: every template field must be present, but a field
//! whose answer is not known must say so explicitly with the `"Unknown"`
//! sentinel. Validation treats `Unknown` as a pass with a warning and a
//! missing field as an error.

mod parse;
mod validate;

pub use parse::{parse_manifest, parse_manifest_str, serialize_manifest};
pub use validate::{cross_check, validate_manifest, Finding, Severity, ValidationReport};

use std::fmt;

/// JSON Schema for the manifest document, shipped with the tool.
pub const MANIFEST_SCHEMA_JSON: &str = include_str!("../../schema/manifest.schema.json");

/// The explicit "value not known" sentinel.
pub const UNKNOWN: &str = "Unknown";

/// A leaf field: absent, explicitly unknown, free text, or structured data.
#[derive(Clone, Debug, PartialEq)]
pub enum Entry {
    Missing,
    Unknown,
    Text(String),
    Structured(toml::Value),
}

impl Entry {
    pub fn is_missing(&self) -> bool {
        matches!(self, Entry::Missing)
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Entry::Unknown)
    }

    /// Trimmed text when this entry is plain text.
    pub fn text(&self) -> Option<&str> {
        match self {
            Entry::Text(s) => Some(s.trim()),
            _ => None,
        }
    }
}

/// Yes/no questions that may also be answered `Unknown`.
#[derive(Clone, Debug, PartialEq)]
pub enum TriState {
    Yes,
    No,
    Unknown,
    Missing,
    /// Present but not one of the three allowed values.
    Invalid(String),
}

impl TriState {
    pub fn as_str(&self) -> Option<&str> {
        match self {
            TriState::Yes => Some("yes"),
            TriState::No => Some("no"),
            TriState::Unknown => Some(UNKNOWN),
            TriState::Missing => None,
            TriState::Invalid(s) => Some(s),
        }
    }
}

/// The `network_types` declaration.
#[derive(Clone, Debug, PartialEq)]
pub enum TypesEntry {
    Missing,
    Unknown,
    List(Vec<String>),
    Invalid(toml::Value),
}

/// Recognized network type tags.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TypeTag {
    Directed,
    Undirected,
    Simple,
    Multigraph,
    Weighted,
    Unweighted,
    Signed,
    Temporal,
    Homogeneous,
    Heterogeneous,
    KnowledgeGraph,
    Bipartite,
    Multilayer,
}

impl TypeTag {
    pub const ALL: [TypeTag; 13] = [
        TypeTag::Directed,
        TypeTag::Undirected,
        TypeTag::Simple,
        TypeTag::Multigraph,
        TypeTag::Weighted,
        TypeTag::Unweighted,
        TypeTag::Signed,
        TypeTag::Temporal,
        TypeTag::Homogeneous,
        TypeTag::Heterogeneous,
        TypeTag::KnowledgeGraph,
        TypeTag::Bipartite,
        TypeTag::Multilayer,
    ];

    /// Pairs that cannot both describe one network.
    pub const EXCLUSIVE: [(TypeTag, TypeTag); 4] = [
        (TypeTag::Directed, TypeTag::Undirected),
        (TypeTag::Simple, TypeTag::Multigraph),
        (TypeTag::Weighted, TypeTag::Unweighted),
        (TypeTag::Homogeneous, TypeTag::Heterogeneous),
    ];

    pub fn parse(s: &str) -> Option<TypeTag> {
        Some(match s {
            "directed" => TypeTag::Directed,
            "undirected" => TypeTag::Undirected,
            "simple" => TypeTag::Simple,
            "multigraph" => TypeTag::Multigraph,
            "weighted" => TypeTag::Weighted,
            "unweighted" => TypeTag::Unweighted,
            "signed" => TypeTag::Signed,
            "temporal" => TypeTag::Temporal,
            "homogeneous" => TypeTag::Homogeneous,
            "heterogeneous" => TypeTag::Heterogeneous,
            "knowledge-graph" => TypeTag::KnowledgeGraph,
            "bipartite" => TypeTag::Bipartite,
            "multilayer" => TypeTag::Multilayer,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            TypeTag::Directed => "directed",
            TypeTag::Undirected => "undirected",
            TypeTag::Simple => "simple",
            TypeTag::Multigraph => "multigraph",
            TypeTag::Weighted => "weighted",
            TypeTag::Unweighted => "unweighted",
            TypeTag::Signed => "signed",
            TypeTag::Temporal => "temporal",
            TypeTag::Homogeneous => "homogeneous",
            TypeTag::Heterogeneous => "heterogeneous",
            TypeTag::KnowledgeGraph => "knowledge-graph",
            TypeTag::Bipartite => "bipartite",
            TypeTag::Multilayer => "multilayer",
        }
    }
}

impl fmt::Display for TypeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct Contents {
    pub description: Entry,
    pub is_snapshot: TriState,
    pub extra: toml::Table,
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct CurationRationale {
    pub authors_and_reference: Entry,
    pub purpose: Entry,
    pub domain: Entry,
    pub node_semantics: Entry,
    pub edge_semantics: Entry,
    pub contents: Contents,
    pub network_types: TypesEntry,
    pub extra: toml::Table,
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct Sampling {
    pub used: TriState,
    pub strategy: Entry,
    pub reason: Entry,
    pub extra: toml::Table,
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct Collection {
    pub mechanism_and_raw_data: Entry,
    pub sampling: Sampling,
    pub extra: toml::Table,
}

/// Named split with an optional size, under `preprocessing.data_splits`.
#[derive(Clone, Debug, PartialEq)]
pub struct SplitSpec {
    pub name: String,
    pub count: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct DataSplits {
    pub strategy: Entry,
    pub splits: Vec<SplitSpec>,
    pub extra: toml::Table,
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct Preprocessing {
    pub network_construction: Entry,
    pub data_cleaning: Entry,
    pub data_filtering: Entry,
    pub network_transformation: Entry,
    pub attribute_transformation: Entry,
    pub data_splits: DataSplits,
    /// Optional structured list of concrete steps, preserved verbatim.
    pub operations: Option<toml::Value>,
    pub extra: toml::Table,
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct Annotation {
    pub process: Entry,
    pub annotator_demographics: Entry,
    pub extra: toml::Table,
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct Uses {
    pub primary_intended: Entry,
    pub other: Entry,
    pub extra: toml::Table,
}

/// The parsed manifest. Unrecognized keys are preserved in the per-section
/// `extra` tables so that parse, serialize, parse is a fixed point.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct Manifest {
    pub curation_rationale: CurationRationale,
    pub collection: Collection,
    pub preprocessing: Preprocessing,
    pub instance_demographics: Entry,
    pub annotation: Annotation,
    pub uses: Uses,
    pub extra: toml::Table,
}

impl Manifest {
    /// Declared tags with their unrecognized leftovers.
    pub fn type_tags(&self) -> (Vec<TypeTag>, Vec<String>) {
        let mut tags = Vec::new();
        let mut unknown = Vec::new();
        if let TypesEntry::List(items) = &self.curation_rationale.network_types {
            for item in items {
                match TypeTag::parse(item) {
                    Some(t) => tags.push(t),
                    None => unknown.push(item.clone()),
                }
            }
        }
        (tags, unknown)
    }

    pub fn has_tag(&self, tag: TypeTag) -> bool {
        self.type_tags().0.contains(&tag)
    }
}

impl Default for Entry {
    fn default() -> Self {
        Entry::Missing
    }
}

impl Default for TriState {
    fn default() -> Self {
        TriState::Missing
    }
}

impl Default for TypesEntry {
    fn default() -> Self {
        TypesEntry::Missing
    }
}
