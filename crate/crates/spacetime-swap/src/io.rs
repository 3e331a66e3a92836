//! JSON file formats: matrices on disk and machine-readable run reports.
//!
//! A matrix file looks like
//!
//! ```json
//! {
//!   "dims": [2, 2],
//!   "matrix": [[[0.5, 0.0], [0.0, 0.0]], [[0.0, 0.0], [0.5, 0.0]]],
//!   "label": "optional"
//! }
//! ```
//!
//! with row-major entries as `[re, im]` pairs and the side length equal to
//! the product of `dims` (one entry for a plain square matrix, two for a
//! bipartite operator). Values round-trip losslessly: serialization uses the
//! shortest decimal that parses back to the identical f64.
//!
//! Schemas for both documents ship in the crate's `schema/` directory.

use std::io::Read;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::linalg::{BlockStructure, Complex64, ComplexMatrix};

/// On-disk matrix document.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct MatrixFile {
    /// Tensor factor dimensions: `[d]` for a plain operator, `[dA, dB]` for
    /// a bipartite one.
    pub dims: Vec<usize>,
    /// Row-major entries, each a `[re, im]` pair.
    pub matrix: Vec<Vec<[f64; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl MatrixFile {
    pub fn from_matrix(m: &ComplexMatrix, dims: Vec<usize>, label: Option<String>) -> Self {
        let matrix = (0..m.rows())
            .map(|i| {
                (0..m.cols())
                    .map(|j| {
                        let z = m.get(i, j);
                        [z.re, z.im]
                    })
                    .collect()
            })
            .collect();
        Self {
            dims,
            matrix,
            label,
        }
    }

    /// Validate the document and materialize the matrix.
    pub fn to_matrix(&self) -> Result<ComplexMatrix> {
        if self.dims.is_empty() || self.dims.len() > 2 {
            return Err(Error::Parse(format!(
                "dims must have 1 or 2 entries, got {}",
                self.dims.len()
            )));
        }
        if self.dims.contains(&0) {
            return Err(Error::Parse("dims entries must be ≥ 1".into()));
        }
        let side: usize = self.dims.iter().product();
        if self.matrix.len() != side || self.matrix.iter().any(|r| r.len() != side) {
            return Err(Error::Parse(format!(
                "matrix must be {side}×{side} for dims {:?}",
                self.dims
            )));
        }
        let m = ComplexMatrix::from_fn(side, side, |i, j| {
            Complex64::new(self.matrix[i][j][0], self.matrix[i][j][1])
        });
        if !m.is_finite() {
            return Err(Error::Parse("matrix has non-finite entries".into()));
        }
        Ok(m)
    }

    /// The bipartite split, when the document declares two factors.
    pub fn block_structure(&self) -> Option<BlockStructure> {
        match self.dims.as_slice() {
            [a, b] => Some(BlockStructure::new(*a, *b)),
            _ => None,
        }
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let json = serde_json::to_string_pretty(self)?;
        std::fs::write(path, json + "\n")?;
        Ok(())
    }
}

/// A matrix document together with the SHA-256 of the bytes it came from.
#[derive(Clone, Debug)]
pub struct LoadedMatrix {
    pub file: MatrixFile,
    pub sha256: String,
    pub source: String,
}

/// Load a matrix file from a path, or from stdin when the path is "-".
pub fn load_matrix(path: &str) -> Result<LoadedMatrix> {
    let (bytes, source) = if path == "-" {
        let mut buf = Vec::new();
        std::io::stdin().read_to_end(&mut buf)?;
        (buf, "<stdin>".to_string())
    } else {
        (std::fs::read(path)?, path.to_string())
    };
    let sha256 = hex::encode(Sha256::digest(&bytes));
    let file: MatrixFile = serde_json::from_slice(&bytes)?;
    // Surface structural problems at load time.
    file.to_matrix()?;
    Ok(LoadedMatrix {
        file,
        sha256,
        source,
    })
}

/// Machine-readable record of one CLI invocation. All fields other than
/// `wall_time_ms` are deterministic for identical inputs, flags and seeds.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunReport {
    /// The subcommand and flags, echoed.
    pub command: String,
    /// SHA-256 per input source.
    pub inputs: std::collections::BTreeMap<String, String>,
    /// Tolerances in force for this run.
    pub tolerances: std::collections::BTreeMap<String, f64>,
    /// Seed of the random stream, when one was used.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Random generator algorithm identifier, when one was used.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rng: Option<String>,
    /// Command-specific numeric results, full precision.
    pub results: serde_json::Value,
    /// Overall verdict.
    pub pass: bool,
    /// Wall-clock duration; the one intentionally non-reproducible field.
    pub wall_time_ms: f64,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}
