//! The `.poset` document format and structured (JSON) renderings.
//!
//! A document is a JSON object:
//!
//! ```json
//! {
//!   "name": "P",
//!   "elements": ["0", "u1", "1"],
//!   "covers": [["0", "u1"], ["u1", "1"]],
//!   "labels": [["0", "u1", 1], ["u1", "1", 2]]
//! }
//! ```
//!
//! `name` and `labels` are optional. Ranks are never stored; they are
//! derived when the poset is built.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::abindex::FlagVector;
use crate::chow::GammaExpansion;
use crate::ncpoly::NcPoly;
use crate::poly::{Poly, Variable};
use crate::poset::{Poset, PosetError};
use crate::rlabeling::EdgeLabeling;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Poset(#[from] PosetError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub elements: Vec<String>,
    pub covers: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<(String, String, i64)>>,
}

/// A validated poset together with the optional parts of its document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedPoset {
    pub name: Option<String>,
    pub poset: Poset,
    pub labeling: Option<EdgeLabeling>,
}

pub fn parse_poset(text: &str) -> Result<ParsedPoset, DocumentError> {
    let doc: PosetDocument =
        serde_json::from_str(text).map_err(|e| DocumentError::Parse(e.to_string()))?;
    let mut seen = HashSet::new();
    if let Some(dup) = doc.elements.iter().find(|e| !seen.insert(e.as_str())) {
        return Err(DocumentError::Parse(format!("duplicate element {dup:?}")));
    }
    let poset = Poset::build(&doc.elements, &doc.covers)?;
    let labeling = match &doc.labels {
        None => None,
        Some(labels) => {
            let labeling = EdgeLabeling::from_names(&poset, labels)
                .map_err(|e| DocumentError::Parse(format!("labels: {e}")))?;
            labeling
                .check_total(&poset)
                .map_err(|e| DocumentError::Parse(format!("labels: {e}")))?;
            Some(labeling)
        }
    };
    Ok(ParsedPoset {
        name: doc.name,
        poset,
        labeling,
    })
}

/// The document describing `poset`, with covers and labels in the poset's
/// cover order.
pub fn to_document(
    name: Option<&str>,
    poset: &Poset,
    labeling: Option<&EdgeLabeling>,
) -> PosetDocument {
    let name_of = |i: usize| poset.name(i).to_string();
    PosetDocument {
        name: name.map(str::to_string),
        elements: poset.names().to_vec(),
        covers: poset
            .covers()
            .iter()
            .map(|&(u, v)| (name_of(u), name_of(v)))
            .collect(),
        labels: labeling.map(|lab| {
            poset
                .covers()
                .iter()
                .filter_map(|&(u, v)| lab.get(u, v).map(|l| (name_of(u), name_of(v), l)))
                .collect()
        }),
    }
}

pub fn render_poset(name: Option<&str>, poset: &Poset, labeling: Option<&EdgeLabeling>) -> String {
    let mut s = serde_json::to_string_pretty(&to_document(name, poset, labeling))
        .expect("documents always serialize");
    s.push('\n');
    s
}

/// Coefficient list, ascending powers.
pub fn structured_poly<V: Variable>(p: &Poly<V>) -> Value {
    Value::from(p.coeffs().to_vec())
}

/// Object mapping each word to its coefficient list.
pub fn structured_ncpoly(f: &NcPoly) -> Value {
    let map: BTreeMap<String, Value> = f
        .terms()
        .map(|(w, c)| (w.to_string(), structured_poly(c)))
        .collect();
    serde_json::json!({ "degree": f.degree(), "terms": map })
}

pub fn structured_flags(alpha: &FlagVector, beta: &FlagVector) -> Value {
    let rows: Vec<Value> = alpha
        .iter()
        .map(|(s, a)| {
            serde_json::json!({ "set": s.iter().collect::<Vec<_>>(), "alpha": a, "beta": beta.get(s) })
        })
        .collect();
    serde_json::json!({ "rank": alpha.rank(), "flags": rows })
}

pub fn structured_gamma(g: &GammaExpansion) -> Value {
    let terms: Vec<Value> = g
        .terms
        .iter()
        .map(|(t, c)| serde_json::json!({ "set": t.iter().collect::<Vec<_>>(), "gamma": c }))
        .collect();
    serde_json::json!({
        "rank": g.n,
        "augmented": g.augmented,
        "terms": terms,
        "expansion": structured_poly(&g.expand()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn parses_bundled_fixtures() {
        let p = parse_poset(fixtures::P).unwrap();
        assert_eq!(p.name.as_deref(), Some("P"));
        assert_eq!(p.poset.rank(), 2);
        assert!(p.labeling.is_some());
        let q = parse_poset(fixtures::Q).unwrap();
        assert_eq!(q.poset.rank(), 3);
        assert!(q.labeling.is_none());
    }

    #[test]
    fn duplicate_element_is_a_parse_error() {
        let text = r#"{"elements": ["0", "0"], "covers": []}"#;
        assert!(matches!(parse_poset(text), Err(DocumentError::Parse(_))));
    }

    #[test]
    fn malformed_documents() {
        for text in [
            "",
            "{",
            r#"{"covers": []}"#,
            r#"{"elements": ["0"], "covers": [["0"]]}"#,
            r#"{"elements": ["0"], "covers": [], "extra": 1}"#,
            r#"{"elements": ["0", "1"], "covers": [["0", "1"]], "labels": [["0", "1", "x"]]}"#,
        ] {
            assert!(
                matches!(parse_poset(text), Err(DocumentError::Parse(_))),
                "{text}"
            );
        }
    }

    #[test]
    fn invalid_posets_surface_as_poset_errors() {
        let text =
            r#"{"elements": ["0", "a", "1"], "covers": [["0", "a"], ["a", "1"], ["0", "1"]]}"#;
        assert!(matches!(
            parse_poset(text),
            Err(DocumentError::Poset(PosetError::NotGraded { .. }))
        ));
    }

    #[test]
    fn partial_labels_are_rejected() {
        let text = r#"{"elements": ["0", "a", "1"], "covers": [["0", "a"], ["a", "1"]], "labels": [["0", "a", 1]]}"#;
        assert!(matches!(parse_poset(text), Err(DocumentError::Parse(_))));
    }

    #[test]
    fn render_round_trips() {
        let parsed = parse_poset(fixtures::P).unwrap();
        let text = render_poset(
            parsed.name.as_deref(),
            &parsed.poset,
            parsed.labeling.as_ref(),
        );
        assert_eq!(parse_poset(&text).unwrap(), parsed);
    }
}
