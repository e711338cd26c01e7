//! The JSON document format.
//!
//! Every document is an object with a `"kind"` tag. Objects and morphisms
//! are referenced by name; identities are implicit and named `id_<object>`.
//! Relation matrices and map matrices are written column by column.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// One column of a presentation or a homomorphism matrix.
pub type Column = Vec<i64>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Document {
    Category(CategoryDoc),
    Functor(FunctorDoc),
    Setdiagram(SetDiagramDoc),
    Abgroup(GroupDoc),
    Abhom(HomDoc),
    Abdiagram(AbDiagramDoc),
    Gmodule(GModuleDoc),
    Family(FamilyDoc),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Category(_) => "category",
            Document::Functor(_) => "functor",
            Document::Setdiagram(_) => "setdiagram",
            Document::Abgroup(_) => "abgroup",
            Document::Abhom(_) => "abhom",
            Document::Abdiagram(_) => "abdiagram",
            Document::Gmodule(_) => "gmodule",
            Document::Family(_) => "family",
        }
    }
}

/// A category, given by exactly one of: explicit tables, a poset, a product
/// of categories, a group, or a named shape (`terminal`, `parallel`, `span`,
/// `cospan`, `chain:N`, `discrete:N`).
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub objects: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub morphisms: Option<Vec<MorphismDoc>>,
    /// Triples `[g, f, g∘f]` for every composable non-identity pair.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub composition: Option<Vec<[String; 3]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub poset: Option<PosetDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub product: Option<Vec<CategoryDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupTableDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shape: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDoc {
    pub name: String,
    pub dom: String,
    pub cod: String,
}

/// Objects and generating relations `[a, b]` meaning `a ≤ b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetDoc {
    pub objects: Vec<String>,
    #[serde(default)]
    pub covers: Vec<[String; 2]>,
}

/// A finite group: `{"cyclic": n}` or a full multiplication table.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupTableDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cyclic: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<String>>,
    /// `table[a][b]` names the product `a·b`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorDoc {
    pub source: CategoryDoc,
    pub target: CategoryDoc,
    pub objects: BTreeMap<String, String>,
    /// Identities may be omitted.
    #[serde(default)]
    pub morphisms: BTreeMap<String, String>,
}

/// A finite set: a size, or a list of element labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SetDoc {
    Size(usize),
    Labels(Vec<String>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SetDiagramDoc {
    pub base: CategoryDoc,
    pub sets: BTreeMap<String, SetDoc>,
    /// Function tables by element index; identities may be omitted.
    #[serde(default)]
    pub maps: BTreeMap<String, Vec<usize>>,
}

/// `⟨e_1, …, e_n | relations⟩`, one column per relation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDoc {
    pub generators: usize,
    #[serde(default)]
    pub relations: Vec<Column>,
}

/// A homomorphism given by the images of the source generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomDoc {
    pub source: GroupDoc,
    pub target: GroupDoc,
    pub images: Vec<Column>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AbDiagramDoc {
    pub base: CategoryDoc,
    pub groups: BTreeMap<String, GroupDoc>,
    /// Images of generators per morphism; identities may be omitted.
    #[serde(default)]
    pub maps: BTreeMap<String, Vec<Column>>,
    /// A natural transformation into a second diagram on the same base.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub morphism: Option<Box<DiagramMorphismDoc>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramMorphismDoc {
    pub groups: BTreeMap<String, GroupDoc>,
    #[serde(default)]
    pub maps: BTreeMap<String, Vec<Column>>,
    pub components: BTreeMap<String, Vec<Column>>,
}

/// A group acting on a presented abelian group. Actions are given on group
/// generators only and extended multiplicatively.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GModuleDoc {
    pub group: GroupTableDoc,
    pub carrier: GroupDoc,
    pub action: BTreeMap<String, Vec<Column>>,
    /// An equivariant map into a second module over the same group.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub morphism: Option<Box<ModuleMorphismDoc>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleMorphismDoc {
    pub carrier: GroupDoc,
    pub action: BTreeMap<String, Vec<Column>>,
    pub images: Vec<Column>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyDoc {
    pub index: Vec<String>,
    pub groups: BTreeMap<String, GroupDoc>,
    /// A family of maps into a second family over the same index.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub morphism: Option<FamilyMorphismDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyMorphismDoc {
    pub groups: BTreeMap<String, GroupDoc>,
    pub components: BTreeMap<String, Vec<Column>>,
}

/// Parses a document. Syntax errors carry line and column; schema errors
/// carry the JSON path of the offending field.
pub fn parse_document(text: &str) -> Result<Document, CliError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        if inner.is_syntax() || inner.is_eof() {
            let (line, column) = (inner.line(), inner.column());
            let message = inner.to_string();
            let suffix = format!(" at line {line} column {column}");
            let message = message.strip_suffix(&suffix).unwrap_or(&message).to_string();
            CliError::Syntax { line, column, message }
        } else {
            CliError::Schema { path, message: inner.to_string() }
        }
    })
}

/// Pretty-printed JSON with a trailing newline.
pub fn serialize_document(doc: &Document) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_category_parses() {
        let doc = parse_document(r#"{"kind": "category", "objects": ["a"]}"#).unwrap();
        assert_eq!(doc.kind(), "category");
    }

    #[test]
    fn unknown_field_reports_path() {
        let err = parse_document(r#"{"kind": "abgroup", "generators": 1, "relatons": []}"#).unwrap_err();
        assert!(matches!(err, CliError::Schema { .. }), "{err}");
    }

    #[test]
    fn syntax_error_reports_position() {
        let err = parse_document("{\"kind\": \"category\",\n  \"objects\": [\"a\"").unwrap_err();
        match err {
            CliError::Syntax { line, .. } => assert_eq!(line, 2),
            other => panic!("{other}"),
        }
    }

    #[test]
    fn unknown_kind_is_a_schema_error() {
        assert!(matches!(parse_document(r#"{"kind": "sheaf"}"#), Err(CliError::Schema { .. })));
    }

    #[test]
    fn round_trip() {
        let text = r#"{"kind": "setdiagram", "base": {"shape": "span"},
            "sets": {"c": 2, "l": ["x", "y"], "r": 1}, "maps": {"p": [0, 1], "q": [0, 0]}}"#;
        let doc = parse_document(text).unwrap();
        assert_eq!(parse_document(&serialize_document(&doc)).unwrap(), doc);
    }
}
