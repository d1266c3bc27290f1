//! Exact computer algebra for the quantum extended Galilei Hopf pair and the
//! induced-representation constructions built on it.

pub mod coeff;
pub mod coinduce;
pub mod duality;
pub mod finite;
pub mod galilei;
pub mod hopf;
pub mod ncpoly;
pub mod parse;
pub mod report;

pub use coeff::{CoeffPoly, Rational, Var};
pub use hopf::Presentation;
pub use ncpoly::{Algebra, Monomial, NcElement, TensorElement};
pub use report::Report;
