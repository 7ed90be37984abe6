//! Exact computations for canonical genus-4 curves: singularities of
//! quadric/cubic complete intersections in P^3, the associated nodal cubic
//! threefolds, GIT stability, divisor classes and the lattice arithmetic of
//! the ball-quotient model.

/// Call `$func::<P>(args)` for a prime `P` from the compiled-in list.
#[macro_export]
macro_rules! dispatch_prime {
    ($p:expr, $func:ident, $($arg:expr),*) => {
        match $p {
            101 => $func::<101>($($arg),*),
            103 => $func::<103>($($arg),*),
            107 => $func::<107>($($arg),*),
            109 => $func::<109>($($arg),*),
            113 => $func::<113>($($arg),*),
            127 => $func::<127>($($arg),*),
            131 => $func::<131>($($arg),*),
            137 => $func::<137>($($arg),*),
            139 => $func::<139>($($arg),*),
            149 => $func::<149>($($arg),*),
            151 => $func::<151>($($arg),*),
            157 => $func::<157>($($arg),*),
            other => Err($crate::Error::UnsupportedPrime(other)),
        }
    };
}

pub mod exactalg;
pub mod singclass;
pub mod correspond;
pub mod stability;
pub mod cli;
pub mod lattices;
pub mod divisors;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("implicit function hypothesis fails: {0}")]
    ImplicitFunction(String),
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error("prime {0} divides a denominator of the input")]
    BadPrime(u64),
    #[error("prime {0} is not supported for this computation")]
    UnsupportedPrime(u64),
    #[error("point does not lie on the scheme")]
    PointNotOnScheme,
    #[error("not a hypersurface singularity: {0}")]
    NotHypersurface(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("refused: {0}")]
    Refused(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
