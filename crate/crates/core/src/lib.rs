//! Exact and numeric curvature analysis of translation surfaces
//! `z = f(u) + g(v)` in Euclidean 3-space.
//!
//! * [`exactpoly`] and [`radalg`]: exact polynomial and radical algebra.
//! * [`curvature`]: symbolic mean, Gaussian and second Gaussian curvature,
//!   and the Weingarten (Jacobian) condition.
//! * [`powerlaw`]: exponent-lattice analysis for `f' = a u^p`, `g' = b v^q`.
//! * [`classify`]: decision procedures for polynomial translation surfaces.
//! * [`numeric`]: expression parsing, floating-point curvature, numeric
//!   checks and the gallery of named surfaces.
//! * [`verify`]: reproducible verification runs used by the command line.

pub mod classify;
pub mod corpus;
pub mod curvature;
pub mod error;
pub mod exactpoly;
pub mod numeric;
pub mod powerlaw;
pub mod radalg;
pub mod verify;

pub use classify::{Classification, KiiClass, LwResult, ParaboloidParams};
pub use curvature::PolyGenerators;
pub use error::{Error, ParseError, Result};
pub use exactpoly::{int, rat, Poly2, Rational, Var};
pub use numeric::{CurvatureSample, Expr, LwFit, Rect, TranslationSurface};
pub use powerlaw::{Condition, ConstraintResult, TermTable};
pub use radalg::{HalfInt, RadExpr};
