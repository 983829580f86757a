//! Exact algebra over the Eisenstein field `Q(w)` and the checks built on it
//! for the `S6`-invariant quartic threefolds
//! `sum x_i = t sum x_i^4 - (sum x_i^2)^2 = 0` in `P^5`.
//!
//! The containers ([`Polynomial`], [`ExactMatrix`], [`ProjectivePoint`],
//! [`LinearSliceVariety`]) are generic over any [`Field`]; the aliases below
//! fix the scalar to `Q(w)` with arbitrary-precision rational coordinates,
//! which is what every check uses.
//!
//! ```
//! use s6quartic::{rational, Point};
//! use s6quartic::varieties::{is_node, singular_t_values};
//!
//! let p = Point::parse("[1, 1, 1, -1, -1, -1]").unwrap();
//! assert_eq!(singular_t_values(&p).unwrap().to_string(), "{6}");
//! assert!(is_node(&rational(6, 1), &p).unwrap());
//! ```

pub mod exactnum;
pub mod harness;
pub mod linalg;
pub mod multipoly;
pub mod permgrp;
pub mod setting;
pub mod varieties;

pub use exactnum::{rational, Eisenstein, Field, Rational};
pub use linalg::{ExactMatrix, ParamSolution};
pub use multipoly::{Monomial, Polynomial};
pub use permgrp::{LabelDictionary, PermGroup, Permutation};
pub use varieties::{LinearSliceVariety, ProjectivePoint};

/// Element of `Q(w)`.
pub type Eis = Eisenstein<Rational>;
/// Polynomial in `x0..x5` over `Q(w)`.
pub type Poly = Polynomial<Eis>;
pub type Matrix = ExactMatrix<Eis>;
pub type Point = ProjectivePoint<Eis>;
pub type Variety = LinearSliceVariety<Eis>;
