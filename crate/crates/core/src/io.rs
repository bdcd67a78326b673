//! JSON document schemas and command-line token parsing.
//!
//! Fillings travel as `{"shape":[5,3,3,2],"rows":[[..],..]}` with ragged
//! rows matching the shape; DAGs as `{"weights":[..],"arcs":[[0,2],..]}`
//! with zero-based positional ids.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coxeter::{CoxeterElement, CoxeterError};
use crate::gk::{GraphError, WeightedDag};
use crate::shapes::{Filling, Partition, ShapeError};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("bad token {token:?} at position {position}: {expected}")]
    Token {
        token: String,
        position: usize,
        expected: String,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct FillingDoc {
    pub shape: Vec<usize>,
    pub rows: Vec<Vec<u64>>,
}

impl FillingDoc {
    pub fn from_filling(f: &Filling) -> Self {
        FillingDoc {
            shape: f.shape().parts().to_vec(),
            rows: f.rows().to_vec(),
        }
    }

    pub fn into_filling(self) -> Result<Filling, IoError> {
        let shape = Partition::new(self.shape)?;
        Ok(Filling::new(shape, self.rows)?)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct DagDoc {
    pub weights: Vec<u64>,
    pub arcs: Vec<(usize, usize)>,
}

impl DagDoc {
    pub fn from_dag(dag: &WeightedDag) -> Self {
        DagDoc {
            weights: dag.weights().to_vec(),
            arcs: dag.arcs().to_vec(),
        }
    }

    pub fn into_dag(self) -> Result<WeightedDag, IoError> {
        Ok(WeightedDag::new(self.weights, self.arcs)?)
    }
}

pub fn parse_filling_json(text: &str) -> Result<Filling, IoError> {
    let doc: FillingDoc = serde_json::from_str(text)?;
    doc.into_filling()
}

pub fn parse_dag_json(text: &str) -> Result<WeightedDag, IoError> {
    let doc: DagDoc = serde_json::from_str(text)?;
    doc.into_dag()
}

/// Comma-separated parts, e.g. `5,3,3,2`.
pub fn parse_shape_arg(text: &str) -> Result<Partition, IoError> {
    let mut parts = Vec::new();
    for (position, token) in text.split(',').enumerate() {
        let token = token.trim();
        let value: usize = token.parse().map_err(|_| IoError::Token {
            token: token.to_string(),
            position,
            expected: "a positive integer part".to_string(),
        })?;
        parts.push(value);
    }
    Ok(Partition::new(parts)?)
}

/// Whitespace-separated cycle values, e.g. `1 3 4 7 9 8 6 5 2`.
pub fn parse_cycle_arg(text: &str) -> Result<CoxeterElement, IoError> {
    let mut values = Vec::new();
    for (position, token) in text.split_whitespace().enumerate() {
        let value: usize = token.parse().map_err(|_| IoError::Token {
            token: token.to_string(),
            position,
            expected: "a cycle value".to_string(),
        })?;
        values.push(value);
    }
    Ok(CoxeterElement::from_cycle(&values)?)
}

/// Whitespace-separated letters, e.g. `s2 s1 s3`; bare indices also accepted.
pub fn parse_word_arg(text: &str) -> Result<CoxeterElement, IoError> {
    let mut letters = Vec::new();
    for (position, token) in text.split_whitespace().enumerate() {
        let digits = token.strip_prefix('s').unwrap_or(token);
        let value: usize = digits.parse().map_err(|_| IoError::Token {
            token: token.to_string(),
            position,
            expected: "a letter like s2".to_string(),
        })?;
        letters.push(value);
    }
    Ok(CoxeterElement::from_word(&letters)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filling_doc_roundtrip() {
        let text = r#"{"shape":[5,3,3,2],"rows":[[1,2,1,0,3],[2,1,1],[2,1,3],[3,2]]}"#;
        let f = parse_filling_json(text).unwrap();
        assert_eq!(f.shape().parts(), &[5, 3, 3, 2]);
        let emitted = serde_json::to_string(&FillingDoc::from_filling(&f)).unwrap();
        let reparsed = parse_filling_json(&emitted).unwrap();
        assert_eq!(reparsed, f);
    }

    #[test]
    fn filling_doc_rejects_mismatch() {
        let text = r#"{"shape":[2,1],"rows":[[1,2,3],[4]]}"#;
        assert!(parse_filling_json(text).is_err());
    }

    #[test]
    fn dag_doc_roundtrip() {
        let text = r#"{"weights":[1,2,3],"arcs":[[0,1],[1,2]]}"#;
        let dag = parse_dag_json(text).unwrap();
        assert_eq!(dag.vertex_count(), 3);
        let emitted = serde_json::to_string(&DagDoc::from_dag(&dag)).unwrap();
        assert_eq!(parse_dag_json(&emitted).unwrap(), dag);
    }

    #[test]
    fn arg_parsers() {
        assert_eq!(
            parse_shape_arg("5,3,3,2").unwrap().parts(),
            &[5, 3, 3, 2]
        );
        let err = parse_shape_arg("5,x,2").unwrap_err();
        assert!(err.to_string().contains("\"x\""));

        let c = parse_cycle_arg("1 3 4 2").unwrap();
        assert_eq!(c.cycle(), &[1, 3, 4, 2]);

        let c = parse_word_arg("s2 s1 s3").unwrap();
        assert_eq!(c.cycle(), &[1, 3, 4, 2]);
        let c = parse_word_arg("2 1 3").unwrap();
        assert_eq!(c.cycle(), &[1, 3, 4, 2]);

        assert!(parse_word_arg("s2 sq").is_err());
        assert!(parse_cycle_arg("1 2 two").is_err());
    }
}
