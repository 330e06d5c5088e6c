use thiserror::Error;

use crate::rational::Rational;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("square root of a negative rational: {0}")]
    NegativeSquareRoot(Box<Rational>),

    #[error("not a hyperbola of the required shape: a = 0")]
    NotAHyperbola,

    #[error("degenerate conic: a*d - b*c = 0")]
    DegenerateConic,

    #[error("point ({x}, {y}) is not on the conic")]
    OffConic { x: Box<Rational>, y: Box<Rational> },

    #[error("point lies on an asymptote: {0} = 0")]
    OnAsymptote(&'static str),

    #[error("invalid projective point: all coordinates are zero")]
    ZeroProjectivePoint,

    #[error("curve parameter D must be nonzero")]
    ZeroCurveParameter,

    #[error("point {0} is not on the curve")]
    NotOnCurve(String),

    #[error("torsion point {0}: a point of infinite order is required")]
    TorsionPoint(String),

    #[error("degenerate image: {0}")]
    DegenerateImage(&'static str),

    #[error("point {0} is not on the surface")]
    NotOnSurface(String),

    #[error("degenerate locus: {0} vanishes")]
    DegenerateLocus(&'static str),

    #[error("malformed system: {0}")]
    MalformedSystem(String),

    #[error("malformed system: missing pair {{{0}, {1}}}")]
    MissingPair(usize, usize),

    #[error("incompatible system: violated quadruples {0:?}")]
    IncompatibleSystem(Vec<[usize; 4]>),

    #[error("coincident points")]
    CoincidentPoints,

    #[error("irrational distance between points {i} and {j}")]
    IrrationalDistance { i: usize, j: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency failure: {0}")]
    Internal(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
