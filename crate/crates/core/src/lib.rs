//! Exact-arithmetic computer algebra for the generalized double affine Hecke
//! algebras H(t, q) attached to the star-shaped affine diagrams of types
//! D4, E6, E7 and E8.
//!
//! The crate builds these algebras from presentations via noncommutative
//! Groebner bases, verifies their Poincare series against closed forms and
//! lattice-point counts, extracts centers at q = 1 and canonicalizes the
//! resulting affine del Pezzo surface equations, and cross-checks those
//! equations against Weyl-character formulas and explicit matrix models.
//!
//! Core algebra is generic over the exact coefficient [`exactnum::Field`];
//! the concrete instances used throughout are the rationals, cyclotomic
//! extensions, and multivariate rational functions in the presentation
//! parameters.

pub mod catalog;
pub mod exactnum;
pub mod freealg;
pub mod rewrite;

/// Noncommutative polynomial over the rationals.
pub type NcQ = freealg::NcPoly<exactnum::Rat>;
/// Noncommutative polynomial over a cyclotomic field.
pub type NcC = freealg::NcPoly<exactnum::Cyclo>;
/// Noncommutative polynomial with parametric coefficients.
pub type NcP = freealg::NcPoly<exactnum::ParamRat>;
