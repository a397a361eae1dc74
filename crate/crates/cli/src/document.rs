//! Interchange format for exponent sequences.
//!
//! JSON: `{"construction": ..., "params": {...}, "order": N, "length": L, "exponents": [...]}`.
//! CSV: first line `N,L`, second line the `L` exponents separated by commas.
//! Both are UTF-8 and newline-terminated. Exponents are the data of record.

use std::collections::BTreeMap;

use perfseq::{Construction, ExponentSequence, RootOrder};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("malformed JSON document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("malformed CSV document: {0}")]
    Csv(String),
    #[error("invalid document: {0}")]
    Invalid(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceDocument {
    pub construction: String,
    pub params: BTreeMap<String, u64>,
    pub order: u64,
    pub length: usize,
    pub exponents: Vec<u64>,
}

impl SequenceDocument {
    pub fn from_construction(c: &Construction, s: &ExponentSequence) -> Self {
        SequenceDocument {
            construction: c.name().to_string(),
            params: c.params().into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            order: s.order().get(),
            length: s.len(),
            exponents: s.exps().to_vec(),
        }
    }

    pub fn from_sequence(name: &str, s: &ExponentSequence) -> Self {
        SequenceDocument {
            construction: name.to_string(),
            params: BTreeMap::new(),
            order: s.order().get(),
            length: s.len(),
            exponents: s.exps().to_vec(),
        }
    }

    pub fn to_sequence(&self) -> Result<ExponentSequence, DocumentError> {
        if self.exponents.len() != self.length {
            return Err(DocumentError::Invalid(format!(
                "length is {} but {} exponents are listed",
                self.length,
                self.exponents.len()
            )));
        }
        let order = RootOrder::new(self.order).map_err(|e| DocumentError::Invalid(e.to_string()))?;
        ExponentSequence::new(order, self.exponents.clone()).map_err(|e| DocumentError::Invalid(e.to_string()))
    }

    pub fn encode(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut out = serde_json::to_string(self).expect("document serializes");
                out.push('\n');
                out
            }
            Format::Csv => {
                let exps: Vec<String> = self.exponents.iter().map(u64::to_string).collect();
                format!("{},{}\n{}\n", self.order, self.length, exps.join(","))
            }
        }
    }

    /// Reads either format; JSON is recognized by a leading `{`.
    pub fn decode(text: &str) -> Result<Self, DocumentError> {
        let doc = if text.trim_start().starts_with('{') {
            serde_json::from_str::<SequenceDocument>(text)?
        } else {
            Self::decode_csv(text)?
        };
        doc.to_sequence()?;
        Ok(doc)
    }

    fn decode_csv(text: &str) -> Result<Self, DocumentError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| DocumentError::Csv("empty input".into()))?;
        let fields: Vec<&str> = header.split(',').map(str::trim).collect();
        let [order, length] = fields[..] else {
            return Err(DocumentError::Csv(format!("header must be `order,length`, got `{header}`")));
        };
        let parse = |field: &str, what: &str| {
            field.parse::<u64>().map_err(|_| DocumentError::Csv(format!("{what} `{field}` is not an integer")))
        };
        let order = parse(order, "order")?;
        let length = parse(length, "length")? as usize;
        let body = lines.next().ok_or_else(|| DocumentError::Csv("missing exponent line".into()))?;
        let exponents = body
            .split(',')
            .map(|f| parse(f.trim(), "exponent"))
            .collect::<Result<Vec<_>, _>>()?;
        if lines.next().is_some() {
            return Err(DocumentError::Csv("unexpected content after the exponent line".into()));
        }
        Ok(SequenceDocument { construction: "csv".into(), params: BTreeMap::new(), order, length, exponents })
    }
}
