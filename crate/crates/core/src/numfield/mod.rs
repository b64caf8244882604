//! Exact arithmetic: rationals, integer polynomials, Sturm sequences, real
//! algebraic numbers and number-field elements.
//!
//! Scalars are hybrid: every operation first attempts a plain rational path,
//! then a closed-form quadratic-extension path, and only falls back to the
//! general annihilator/resultant machinery when it has to. Interval
//! refinement is bisection with exact sign tests, capped at
//! [`bisection_cap`] steps (override with the `PROJLINE_MAX_BISECTIONS`
//! environment variable).

mod field;
mod poly;
mod real;
mod sturm;

pub use field::{
    abelianization_torsion, companion_matrix, is_galois_hyperbolic, FieldElement,
    NumberFieldContext, RationalMatrix,
};
pub use poly::IntPolynomial;
pub use real::RealAlgebraic;
pub use sturm::{isolate_real_roots, sturm_count, SturmChain};

pub type BigRational = num_rational::BigRational;

/// Errors raised by the exact-number kernel.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NumError {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("interval endpoint {0} is a root of the polynomial")]
    EndpointIsRoot(String),
    #[error("invalid interval (need lo < hi)")]
    BadInterval,
    #[error("division by zero")]
    DivisionByZero,
    #[error("negative number has no real square root")]
    NegativeSqrt,
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("1 is a root of the polynomial")]
    OneIsRoot,
    #[error("interval does not isolate a single root (count = {0})")]
    NotIsolating(usize),
    #[error("number field context mismatch")]
    ContextMismatch,
    #[error("element not invertible modulo the context polynomial")]
    NotInvertible,
    #[error("internal limit: exceeded {0} bisections")]
    BisectionLimit(usize),
}

/// Hard cap on interval-refinement bisections; a safety valve, not a
/// tolerance. `PROJLINE_MAX_BISECTIONS` overrides the default of 10 000.
pub fn bisection_cap() -> usize {
    std::env::var("PROJLINE_MAX_BISECTIONS")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(10_000)
}

pub(crate) fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub(crate) fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}
