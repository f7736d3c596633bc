use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Input outside the supported domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// An engagement query field violated the input box.
    #[error("invalid query: {field} = {value} outside [{lo}, {hi}]")]
    QueryOutOfBox {
        field: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },

    /// Missile and target occupy the same point; no line of sight exists.
    #[error("degenerate geometry: missile and target positions coincide")]
    DegenerateGeometry,

    /// A simulation state stopped being finite.
    #[error("simulation diverged at t = {time:.3} s{context}")]
    SimulationDiverged { time: f64, context: String },

    /// Missile parameter set failed validation.
    #[error("invalid missile parameters: {0}")]
    InvalidParams(String),

    /// Too few training rows for the requested model.
    #[error("underdetermined fit: {rows} rows for {features} features")]
    Underdetermined { rows: usize, features: usize },

    /// Neural-network training produced a non-finite loss.
    #[error("training diverged at epoch {epoch}")]
    TrainingDiverged { epoch: usize },

    /// Dataset generation could not find engageable samples.
    #[error("dataset generation failed: {0}")]
    Generation(String),

    /// Metric computed on inputs that make it undefined.
    #[error("metric undefined: {0}")]
    MetricUndefined(String),

    /// Report is missing cells or contains duplicates.
    #[error("invalid report: {0}")]
    InvalidReport(String),

    /// No model composition satisfies the policy constraints.
    #[error("infeasible composition: {0}")]
    InfeasibleComposition(String),

    /// A recorded artifact hash did not match the artifact on disk.
    #[error("hash mismatch for {what}: expected {expected}, got {actual}")]
    HashMismatch {
        what: String,
        expected: String,
        actual: String,
    },

    /// Malformed artifact content (CSV, JSON, TOML, manifest).
    #[error("parse error in {what}: {detail}")]
    Parse { what: String, detail: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn parse(what: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Parse {
            what: what.into(),
            detail: detail.into(),
        }
    }
}
