//! JSON matrix documents and numeric grid flags.
//!
//! ```json
//! {"rows":2,"cols":2,"entries":[[{"mu":1.0,"nu":0.0},{"mu":0.5,"nu":0.4}],
//!                               [{"mu":0.0,"nu":1.0},{"mu":0.6,"nu":0.3}]]}
//! ```

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::IfmError;
use crate::ifn::{ComponentPair, Components, Ifn};
use crate::matrix::Ifm;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntryRecord {
    pub mu: f64,
    pub nu: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDocument {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<EntryRecord>>,
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid entry at row {row}, column {col}: {source}")]
    Validation {
        /// One-based.
        row: usize,
        /// One-based.
        col: usize,
        #[source]
        source: IfmError,
    },
}

impl MatrixDocument {
    /// Full-precision document. `display` rounds every value to that many
    /// decimals instead.
    pub fn from_matrix(m: &Ifm<f64>, display: Option<usize>) -> Self {
        let round = |x: f64| match display {
            Some(d) => {
                let scale = 10f64.powi(d as i32);
                let r = (x * scale).round() / scale;
                if r == 0.0 {
                    0.0
                } else {
                    r
                }
            }
            None => x,
        };
        Self {
            rows: m.rows(),
            cols: m.cols(),
            entries: (0..m.rows())
                .map(|i| {
                    m.row(i)
                        .iter()
                        .map(|e| EntryRecord {
                            mu: round(e.mu()),
                            nu: round(e.nu()),
                        })
                        .collect()
                })
                .collect(),
        }
    }

    /// Checks shape and validates every entry as an intuitionistic fuzzy
    /// number.
    pub fn to_matrix(&self) -> Result<Ifm<f64>, DocumentError> {
        if self.rows == 0 || self.cols == 0 {
            return Err(DocumentError::Parse(format!(
                "dimensions must be positive, got {}x{}",
                self.rows, self.cols
            )));
        }
        if self.entries.len() != self.rows {
            return Err(DocumentError::Parse(format!(
                "declared {} rows but found {}",
                self.rows,
                self.entries.len()
            )));
        }
        let mut out = Vec::with_capacity(self.rows * self.cols);
        for (i, row) in self.entries.iter().enumerate() {
            if row.len() != self.cols {
                return Err(DocumentError::Parse(format!(
                    "row {} has {} entries, expected {}",
                    i + 1,
                    row.len(),
                    self.cols
                )));
            }
            for (j, rec) in row.iter().enumerate() {
                let v = Ifn::new(rec.mu, rec.nu).map_err(|source| DocumentError::Validation {
                    row: i + 1,
                    col: j + 1,
                    source,
                })?;
                out.push(v);
            }
        }
        Ok(Ifm::new(self.rows, self.cols, out).expect("shape checked above"))
    }

    /// Shape check only; entries may violate the sum constraint (powers
    /// under `p > 1`).
    pub fn to_pairs(&self) -> Result<Ifm<f64>, DocumentError> {
        let mut out = Vec::with_capacity(self.rows * self.cols);
        for (i, row) in self.entries.iter().enumerate() {
            for (j, rec) in row.iter().enumerate() {
                out.push(ComponentPair::new(rec.mu, rec.nu).map_err(|source| {
                    DocumentError::Validation {
                        row: i + 1,
                        col: j + 1,
                        source,
                    }
                })?);
            }
        }
        Ifm::from_pairs(self.rows, self.cols, out).map_err(|e| DocumentError::Parse(e.to_string()))
    }
}

/// Parses and validates a JSON matrix document.
pub fn parse_matrix(text: &str) -> Result<Ifm<f64>, DocumentError> {
    let doc: MatrixDocument =
        serde_json::from_str(text).map_err(|e| DocumentError::Parse(e.to_string()))?;
    doc.to_matrix()
}

/// Pretty JSON document. Full precision output parses back bit-exactly.
pub fn print_matrix(m: &Ifm<f64>, display: Option<usize>) -> String {
    serde_json::to_string_pretty(&MatrixDocument::from_matrix(m, display))
        .expect("documents always serialize")
}

/// Parses `start:stop:step` (inclusive, endpoint within `1e-12`), a comma
/// list, or a single value.
pub fn parse_grid(text: &str) -> Result<Vec<f64>, String> {
    let text = text.trim();
    if text.is_empty() {
        return Err("empty grid".into());
    }
    let num = |s: &str| {
        s.trim()
            .parse::<f64>()
            .map_err(|_| format!("invalid number {:?} in grid {text:?}", s.trim()))
    };
    if text.contains(':') {
        let parts: Vec<&str> = text.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("range grid must be start:stop:step, got {text:?}"));
        }
        let (start, stop, step) = (num(parts[0])?, num(parts[1])?, num(parts[2])?);
        if step.is_nan() || step <= 0.0 || !start.is_finite() || !stop.is_finite() {
            return Err(format!(
                "range grid needs finite bounds and a positive step: {text:?}"
            ));
        }
        if stop < start - 1e-12 {
            return Err(format!("range grid stop precedes start: {text:?}"));
        }
        let mut out = Vec::new();
        let mut k = 0u64;
        loop {
            let v = start + k as f64 * step;
            if v > stop + 1e-12 {
                break;
            }
            // snap the final point onto the endpoint
            out.push(if (v - stop).abs() <= 1e-12 { stop } else { v });
            k += 1;
        }
        Ok(out)
    } else {
        text.split(',').map(num).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const A_DOC: &str = r#"{"rows":3,"cols":3,"entries":[
        [{"mu":1.0,"nu":0.0},{"mu":0.5,"nu":0.4},{"mu":0.0,"nu":1.0}],
        [{"mu":0.0,"nu":1.0},{"mu":0.6,"nu":0.3},{"mu":1.0,"nu":0.0}],
        [{"mu":1.0,"nu":0.0},{"mu":1.0,"nu":0.0},{"mu":0.0,"nu":1.0}]]}"#;

    #[test]
    fn parses_example() {
        let a = parse_matrix(A_DOC).unwrap();
        assert_eq!(a.dims(), (3, 3));
        assert_eq!((a.get(0, 1).mu(), a.get(0, 1).nu()), (0.5, 0.4));
    }

    #[test]
    fn validation_error_has_coordinates() {
        let doc = r#"{"rows":1,"cols":2,"entries":[[{"mu":0.1,"nu":0.1},{"mu":0.7,"nu":0.7}]]}"#;
        match parse_matrix(doc) {
            Err(DocumentError::Validation {
                row: 1,
                col: 2,
                source,
            }) => {
                assert!(matches!(source, IfmError::SumViolation { .. }))
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn shape_errors() {
        let ragged = r#"{"rows":2,"cols":2,"entries":[[{"mu":0.1,"nu":0.1},{"mu":0.1,"nu":0.1}],[{"mu":0.1,"nu":0.1}]]}"#;
        assert!(matches!(parse_matrix(ragged), Err(DocumentError::Parse(_))));
        let short = r#"{"rows":2,"cols":1,"entries":[[{"mu":0.1,"nu":0.1}]]}"#;
        assert!(matches!(parse_matrix(short), Err(DocumentError::Parse(_))));
        assert!(matches!(
            parse_matrix("{not json"),
            Err(DocumentError::Parse(_))
        ));
        let extra = r#"{"rows":1,"cols":1,"entries":[[{"mu":0.1,"nu":0.1,"x":1}]]}"#;
        assert!(matches!(parse_matrix(extra), Err(DocumentError::Parse(_))));
    }

    #[test]
    fn display_rounding() {
        let m = Ifm::from_rows(&[vec![(0.933258056640625, 0.0533935546875)]]).unwrap();
        let text = print_matrix(&m, Some(5));
        assert!(text.contains("0.93326"));
        assert!(text.contains("0.05339"));
    }

    #[test]
    fn grids() {
        let g = parse_grid("0:1:0.1").unwrap();
        assert_eq!(g.len(), 11);
        assert_eq!(g[0], 0.0);
        assert_eq!(g[10], 1.0);
        assert_eq!(parse_grid("0.5,1,2").unwrap(), vec![0.5, 1.0, 2.0]);
        assert_eq!(parse_grid("0.6").unwrap(), vec![0.6]);
        assert!(parse_grid("").is_err());
        assert!(parse_grid("0:1").is_err());
        assert!(parse_grid("0:1:0").is_err());
        assert!(parse_grid("1:0:0.1").is_err());
        assert!(parse_grid("a,b").is_err());
    }
}
