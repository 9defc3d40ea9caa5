//! The poset document format: a flat JSON object with exactly the fields
//! `name`, `elements`, `covers` and `involution`.
//!
//! ```json
//! {
//!   "name": "chain2",
//!   "elements": ["0", "1"],
//!   "covers": [[0, 1]],
//!   "involution": [1, 0]
//! }
//! ```
//!
//! Serialization is stable: keys in that order, covers sorted, one field per
//! line. Parsing a serialized document and serializing it again reproduces
//! the text byte for byte.

use serde::Deserialize;
use thiserror::Error;

use crate::error::OrderError;
use crate::order::{Element, Poset};
use crate::ortho::{attach_involution, OrthoPoset};

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("field `{field}`: {message}")]
    Field { field: String, message: String },
    #[error(transparent)]
    Invalid(#[from] OrderError),
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetDocument {
    pub name: String,
    pub elements: Vec<String>,
    pub covers: Vec<[Element; 2]>,
    pub involution: Vec<Element>,
}

impl PosetDocument {
    pub fn from_text(text: &str) -> Result<Self, DocumentError> {
        serde_json::from_str(text).map_err(|e| DocumentError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    /// Build and validate the structure the document describes.
    pub fn build(&self) -> Result<OrthoPoset, DocumentError> {
        let n = self.elements.len();
        if n == 0 {
            return Err(DocumentError::Field {
                field: "elements".into(),
                message: "the carrier is empty".into(),
            });
        }
        for (i, c) in self.covers.iter().enumerate() {
            if let Some(&bad) = c.iter().find(|&&x| x >= n) {
                return Err(DocumentError::Field {
                    field: format!("covers[{i}]"),
                    message: format!("index {bad} is out of range for {n} elements"),
                });
            }
        }
        if self.involution.len() != n {
            return Err(DocumentError::Field {
                field: "involution".into(),
                message: format!("has {} entries for {n} elements", self.involution.len()),
            });
        }
        let covers: Vec<(Element, Element)> = self.covers.iter().map(|c| (c[0], c[1])).collect();
        let poset = Poset::from_covers(self.elements.clone(), &covers)?;
        Ok(attach_involution(poset, self.involution.clone())?)
    }

    pub fn of(q: &OrthoPoset, name: &str) -> Self {
        PosetDocument {
            name: name.to_string(),
            elements: q.poset().names().to_vec(),
            covers: q.poset().covers().into_iter().map(|(a, b)| [a, b]).collect(),
            involution: q.involution().to_vec(),
        }
    }

    pub fn to_text(&self) -> String {
        let quote = |s: &str| serde_json::to_string(s).expect("strings serialize");
        let elements: Vec<String> = self.elements.iter().map(|e| quote(e)).collect();
        let covers: Vec<String> = self.covers.iter().map(|[a, b]| format!("[{a}, {b}]")).collect();
        let involution: Vec<String> = self.involution.iter().map(|x| x.to_string()).collect();
        format!(
            "{{\n  \"name\": {},\n  \"elements\": [{}],\n  \"covers\": [{}],\n  \"involution\": [{}]\n}}\n",
            quote(&self.name),
            elements.join(", "),
            covers.join(", "),
            involution.join(", ")
        )
    }
}

/// Parse and validate a document, returning its name with the structure.
pub fn parse(text: &str) -> Result<(String, OrthoPoset), DocumentError> {
    let doc = PosetDocument::from_text(text)?;
    let q = doc.build()?;
    Ok((doc.name, q))
}

/// Canonical text of a structure: covers recomputed from the order.
pub fn serialize(q: &OrthoPoset, name: &str) -> String {
    PosetDocument::of(q, name).to_text()
}
