//! Error types shared across the crate.

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong when building or transforming operators.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// Shapes of the operands do not line up.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A matrix that must be Hermitian is not, beyond tolerance.
    #[error("matrix is not Hermitian: ‖M − M†‖_F = {residual:.3e} exceeds {tolerance:.3e}")]
    NotHermitian { residual: f64, tolerance: f64 },

    /// An observable whose square must be the identity deviates beyond tolerance.
    #[error("observable is not dichotomic: ‖M² − 1‖_F = {residual:.3e}")]
    NotDichotomic { residual: f64 },

    /// A matrix fails the density-operator invariants (Hermitian, unit trace, PSD).
    #[error("invalid state: {0}")]
    InvalidState(String),

    /// A coefficient vector lies outside the set of valid states.
    #[error("not a state: minimum eigenvalue {min_eigenvalue:.3e}")]
    NotAState { min_eigenvalue: f64 },

    /// The block Sylvester system has data on a null block where the
    /// positivity structure forces a zero, so no solution exists.
    #[error(
        "inconsistent Sylvester system: block ({row},{col}) has norm {norm:.3e} \
         but its eigenvalue pair vanishes"
    )]
    InconsistentSystem { row: usize, col: usize, norm: f64 },

    /// Channel synthesis produced residuals above tolerance. Existence is
    /// guaranteed, so this signals a numerical defect, not a bad input.
    #[error(
        "synthesis failed: residuals ({residual_tb:.3e}, {residual_ta:.3e}) \
         exceed tolerance {tolerance:.3e}"
    )]
    SynthesisFailure {
        residual_tb: f64,
        residual_ta: f64,
        tolerance: f64,
    },

    /// An operation that needs a full-rank marginal got a rank-deficient one.
    #[error("marginal is rank-deficient: minimum eigenvalue {min_eigenvalue:.3e}")]
    RankDeficient { min_eigenvalue: f64 },

    /// A correlator table does not cover every observable pair.
    #[error("incomplete correlator table: expected {expected} entries, found {found}")]
    IncompleteTable { expected: usize, found: usize },

    /// Reading or writing a file failed.
    #[error("i/o error: {0}")]
    Io(String),

    /// A document failed to parse or violates its schema.
    #[error("parse error: {0}")]
    Parse(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
