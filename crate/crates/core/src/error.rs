use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by a series with |b[0]| = {modulus:e} below the singularity threshold")]
    DivisionBySingularSeries { modulus: f64 },

    #[error("cannot divide by z: constant term has modulus {modulus:e}")]
    NonvanishingConstantTerm { modulus: f64 },

    #[error("composition needs inner(0) = 0, got modulus {modulus:e}")]
    InnerConstantTermNonzero { modulus: f64 },

    #[error("evaluation point |z| = {modulus} lies outside the admissible disk of radius {limit}")]
    EvaluationOutsideDisk { modulus: f64, limit: f64 },

    #[error("unknown elementary function `{0}`")]
    UnknownElementary(String),

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("empty coefficient list")]
    EmptySeries,

    #[error("Blaschke zero with modulus {modulus} exceeds the cap {cap}")]
    ZeroOutsideCap { modulus: f64, cap: f64 },

    #[error("rotation has modulus {modulus}, expected 1")]
    RotationNotUnimodular { modulus: f64 },

    #[error("constant of modulus {modulus} is not bounded by 1")]
    ConstantNotBounded { modulus: f64 },

    #[error("convex weight {0} outside [0, 1]")]
    WeightOutOfRange(f64),

    #[error("series is not normalized: {0}")]
    NotNormalized(&'static str),

    #[error("polyline resolution {got} below the minimum {min}")]
    ResolutionTooLow { got: usize, min: usize },

    #[error("boundary polyline failed a build-time check: {0}")]
    InvalidPolyline(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("no sign change found on [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },
}
