//! The JSON document format for cubic soft sets.
//!
//! Every number travels as a string — an exact decimal where one exists,
//! otherwise `"n/m"` — so documents round-trip without binary-float drift.
//! Number parsing happens after JSON parsing, which keeps "malformed JSON"
//! distinct from "well-formed document violating an invariant" and lets
//! cell-level failures carry their `(parameter, element)` location.
//!
//! Grade tables are keyed by the parameter's display form (`"e1"`,
//! `"¬e1"`, `"(e1,¬e2)"`). Negation itself is a boolean field on the
//! parameter declaration, never a name prefix, so a parameter literally
//! named `"¬e1"` remains a distinct identity; a document whose declared
//! parameters collide on display form is rejected as a duplicate.
//!
//! Canonical serialization uses two-space indentation, fixed field order,
//! and lexicographically sorted map keys, making byte-stable golden
//! comparisons possible.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::model::{make_grade, CubicSoftSet, ModelError, ParameterId};
use crate::rational::UnitRational;

pub const SCHEMA_VERSION: &str = "1";

/// Wire form of one parameter declaration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParameterDecl {
    pub name: String,
    #[serde(default)]
    pub negated: bool,
}

/// Wire form of one grade cell: numbers stay as strings until validation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradeDecl {
    pub ivf: [String; 2],
    pub fuzzy: String,
}

/// A cubic soft set document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CssDocument {
    pub schema_version: String,
    pub universe: Vec<String>,
    pub parameters: Vec<ParameterDecl>,
    /// parameter display key -> element -> grade
    pub grades: BTreeMap<String, BTreeMap<String, GradeDecl>>,
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported schema_version {0:?} (expected {SCHEMA_VERSION:?})")]
    SchemaVersion(String),
    #[error("{source} at ({param},{element})")]
    Cell {
        param: String,
        element: String,
        source: ModelError,
    },
    #[error("grades table addresses undeclared parameter {0:?}")]
    UnknownParameter(String),
    #[error("grades for {param:?} address unknown element {element:?}")]
    UnknownElement { param: String, element: String },
    #[error("{0}")]
    Model(#[from] ModelError),
}

impl DocumentError {
    /// True only for JSON syntax failures, as opposed to invariant
    /// violations in a well-formed document (which includes shape errors
    /// such as missing fields).
    pub fn is_malformed_json(&self) -> bool {
        use serde_json::error::Category;
        matches!(
            self,
            DocumentError::Json(e)
                if matches!(e.classify(), Category::Syntax | Category::Eof | Category::Io)
        )
    }
}

impl CssDocument {
    /// Renders a validated set back into a document.
    pub fn from_model(set: &CubicSoftSet) -> CssDocument {
        let mut grades: BTreeMap<String, BTreeMap<String, GradeDecl>> = BTreeMap::new();
        for (p, x, g) in set.cells() {
            grades.entry(p.display_key()).or_default().insert(
                x.to_string(),
                GradeDecl {
                    ivf: [g.ivf.lo().to_string(), g.ivf.hi().to_string()],
                    fuzzy: g.fuzzy.to_string(),
                },
            );
        }
        CssDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            universe: set.universe().to_vec(),
            parameters: set
                .params()
                .iter()
                .map(|p| ParameterDecl {
                    name: p.name.clone(),
                    negated: p.negated,
                })
                .collect(),
            grades,
        }
    }

    /// Validates the document into a cubic soft set: exact number parsing,
    /// distinctness, and totality of the grade table.
    pub fn to_model(&self) -> Result<CubicSoftSet, DocumentError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(DocumentError::SchemaVersion(self.schema_version.clone()));
        }
        let params: Vec<ParameterId> = self
            .parameters
            .iter()
            .map(|d| ParameterId::new(d.name.clone(), d.negated))
            .collect();
        // Display keys index the grades table, so they must be unique even
        // when the (name, negated) identities differ.
        let keys: Vec<String> = params.iter().map(|p| p.display_key()).collect();
        for (i, k) in keys.iter().enumerate() {
            if keys[..i].contains(k) {
                return Err(ModelError::DuplicateParameter(k.clone()).into());
            }
        }
        for key in self.grades.keys() {
            if !keys.contains(key) {
                return Err(DocumentError::UnknownParameter(key.clone()));
            }
        }
        for (key, row) in &self.grades {
            for element in row.keys() {
                if !self.universe.contains(element) {
                    return Err(DocumentError::UnknownElement {
                        param: key.clone(),
                        element: element.clone(),
                    });
                }
            }
        }
        let mut grades = Vec::with_capacity(params.len() * self.universe.len());
        for key in &keys {
            let row = self.grades.get(key);
            for x in &self.universe {
                let decl = row.and_then(|r| r.get(x)).ok_or_else(|| {
                    DocumentError::Model(ModelError::MissingGrade {
                        param: key.clone(),
                        element: x.clone(),
                    })
                })?;
                let cell_err = |source: ModelError| DocumentError::Cell {
                    param: key.clone(),
                    element: x.clone(),
                    source,
                };
                let lo = UnitRational::parse(&decl.ivf[0])
                    .map_err(|e| cell_err(ModelError::Number(e)))?;
                let hi = UnitRational::parse(&decl.ivf[1])
                    .map_err(|e| cell_err(ModelError::Number(e)))?;
                let fuzzy = UnitRational::parse(&decl.fuzzy)
                    .map_err(|e| cell_err(ModelError::Number(e)))?;
                grades.push(make_grade(lo, hi, fuzzy).map_err(cell_err)?);
            }
        }
        Ok(CubicSoftSet::new(self.universe.clone(), params, grades)?)
    }

    /// Canonical text form: pretty JSON, sorted map keys, trailing newline.
    pub fn to_canonical_string(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("document serializes");
        out.push('\n');
        out
    }
}

/// Parses document text; only JSON syntax errors arise here.
pub fn parse_document(text: &str) -> Result<CssDocument, DocumentError> {
    Ok(serde_json::from_str(text)?)
}

/// Parses and validates document text into a cubic soft set.
pub fn load_cubic_soft_set(text: &str) -> Result<CubicSoftSet, DocumentError> {
    parse_document(text)?.to_model()
}

/// Canonical serialization of a set.
pub fn serialize_cubic_soft_set(set: &CubicSoftSet) -> String {
    CssDocument::from_model(set).to_canonical_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::ConstantKind;
    use crate::rational::NumberError;

    fn doc(text: &str) -> Result<CubicSoftSet, DocumentError> {
        load_cubic_soft_set(text)
    }

    const SMALL: &str = r#"{
      "schema_version": "1",
      "universe": ["p1", "p2"],
      "parameters": [{"name": "e1"}, {"name": "e1", "negated": true}],
      "grades": {
        "e1": {
          "p1": {"ivf": ["0.2", "0.5"], "fuzzy": "0.35"},
          "p2": {"ivf": ["1/3", "2/3"], "fuzzy": "0.5"}
        },
        "¬e1": {
          "p1": {"ivf": ["0", "1"], "fuzzy": "1"},
          "p2": {"ivf": ["0.5", "0.5"], "fuzzy": "0.5"}
        }
      }
    }"#;

    #[test]
    fn loads_and_round_trips() {
        let set = doc(SMALL).unwrap();
        assert_eq!(set.universe(), ["p1", "p2"]);
        assert_eq!(set.params().len(), 2);
        assert!(set.params()[1].negated);
        let text = serialize_cubic_soft_set(&set);
        let again = load_cubic_soft_set(&text).unwrap();
        assert_eq!(again, set);
        assert_eq!(serialize_cubic_soft_set(&again), text);
    }

    #[test]
    fn malformed_json_is_distinguished() {
        let err = doc("{ not json").unwrap_err();
        assert!(err.is_malformed_json());
        let err = doc(r#"{"schema_version": "1"}"#).unwrap_err();
        assert!(!err.is_malformed_json());
    }

    #[test]
    fn value_errors_carry_cell_location() {
        let text = SMALL.replace("\"0.35\"", "\"8\"");
        let err = doc(&text).unwrap_err();
        match err {
            DocumentError::Cell { param, element, source } => {
                assert_eq!(param, "e1");
                assert_eq!(element, "p1");
                assert!(matches!(
                    source,
                    ModelError::Number(NumberError::OutOfUnitRange(_))
                ));
            }
            other => panic!("expected cell error, got {other}"),
        }
    }

    #[test]
    fn inverted_interval_carries_cell_location() {
        let text = SMALL.replace(r#"["0.2", "0.5"]"#, r#"["0.5", "0.2"]"#);
        let err = doc(&text).unwrap_err();
        assert!(matches!(
            err,
            DocumentError::Cell {
                source: ModelError::InvertedInterval { .. },
                ..
            }
        ));
    }

    #[test]
    fn missing_grade_is_reported() {
        let text = SMALL.replace(
            r#""p2": {"ivf": ["1/3", "2/3"], "fuzzy": "0.5"}"#,
            r#""p2": {"ivf": ["1/3", "2/3"], "fuzzy": "0.5"}, "p3": {"ivf": ["0", "1"], "fuzzy": "0"}"#,
        );
        assert!(matches!(
            doc(&text).unwrap_err(),
            DocumentError::UnknownElement { .. }
        ));
        let mut parsed = parse_document(SMALL).unwrap();
        parsed.grades.get_mut("e1").unwrap().remove("p2");
        let err = parsed.to_model().unwrap_err();
        assert!(matches!(
            err,
            DocumentError::Model(ModelError::MissingGrade { .. })
        ));
    }

    #[test]
    fn display_key_collisions_are_rejected() {
        let text = r#"{
          "schema_version": "1",
          "universe": ["p1"],
          "parameters": [{"name": "e1", "negated": true}, {"name": "¬e1"}],
          "grades": {"¬e1": {"p1": {"ivf": ["0", "1"], "fuzzy": "0"}}}
        }"#;
        assert!(matches!(
            doc(text).unwrap_err(),
            DocumentError::Model(ModelError::DuplicateParameter(_))
        ));
    }

    #[test]
    fn empty_parameter_document_is_vacuous() {
        let text = r#"{
          "schema_version": "1",
          "universe": ["p1"],
          "parameters": [],
          "grades": {}
        }"#;
        let set = doc(text).unwrap();
        assert!(set.params().is_empty());
        assert_eq!(set.universe(), ["p1"]);
    }

    #[test]
    fn schema_version_is_enforced() {
        let text = SMALL.replace("\"schema_version\": \"1\"", "\"schema_version\": \"2\"");
        assert!(matches!(
            doc(&text).unwrap_err(),
            DocumentError::SchemaVersion(_)
        ));
    }

    #[test]
    fn canonical_form_is_stable() {
        let set = CubicSoftSet::constant(
            ConstantKind::HatOne,
            vec!["b".into(), "a".into()],
            vec![ParameterId::plain("e2"), ParameterId::plain("e1")],
        )
        .unwrap();
        let text = serialize_cubic_soft_set(&set);
        // Map keys sort; the universe and parameter arrays keep their order.
        let e1_pos = text.find("\"e1\": {").unwrap();
        let e2_pos = text.find("\"e2\": {").unwrap();
        assert!(e1_pos < e2_pos);
        assert!(text.find("\"b\"").unwrap() < text.find("\"a\"").unwrap());
        assert!(text.ends_with('\n'));
    }
}
