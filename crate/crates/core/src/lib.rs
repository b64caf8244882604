//! Exact computation with piecewise projective homeomorphisms of the
//! projective line `RP¹ = R ∪ {∞}`.
//!
//! The crate is organized around one universal scalar type,
//! [`numfield::RealAlgebraic`], an exact real algebraic number given by an
//! integer annihilating polynomial and a rational isolating interval. On top
//! of it sit Möbius transformations ([`moebius`]), the group algebra of
//! piecewise projective circle maps ([`pwhomeo`]), named generator catalogs
//! for Thompson's T, the broken Baumslag-Solitar groups `G_λ` and the
//! Lodha-Moore group ([`catalog`]), the combinatorial binary-sequence model
//! of the Lodha-Moore group with its continued-fraction conjugacy
//! ([`treemodel`]), smoothability-obstruction audits ([`obstruct`]), and
//! numeric one-parameter Möbius flows ([`flow`]).
//!
//! All modules except `flow` are exact: no floating point is used anywhere
//! in a value-producing path. `flow` is the single numeric module; exact
//! inputs are converted to `f64` at its boundary.

pub mod catalog;
pub mod flow;
pub mod json;
pub mod moebius;
pub mod numfield;
pub mod obstruct;
pub mod pwhomeo;
pub mod treemodel;

pub use numfield::{BigRational, IntPolynomial, NumError, RealAlgebraic};
pub use moebius::{ConjClass, MoebiusMap, ProjPoint};
pub use pwhomeo::PwProjMap;
