//! Exact invariants of monomial ideals.
//!
//! Everything is computed in exact rational arithmetic: relative Łojasiewicz
//! exponent sequences, mixed multiplicities and reduction numbers, log
//! canonical threshold sequences, Newton-polyhedron queries (support values,
//! integral-closure membership, gauges, facets, covolumes), and a randomized
//! harness that checks the implemented inequalities and dualities on generated
//! ideals.
//!
//! The crate is organized as:
//! - [`ideal`]: domain types and exact ideal arithmetic;
//! - [`parse`]: generator-list parsing and the canonical renderer;
//! - [`lp`]: exact rational simplex (feasibility and minimization);
//! - [`newton`]: Newton polyhedron queries;
//! - [`multiplicity`]: colengths, Hilbert function, mixed multiplicities,
//!   reduction numbers;
//! - [`lojasiewicz`]: orders, restrictions, Łojasiewicz sequences and their
//!   definitional oracles;
//! - [`lct`]: log canonical thresholds and the lct–Łojasiewicz dualities;
//! - [`harness`]: randomized theorem checking;
//! - [`report`]: the serializable invariant panel.

pub mod error;
pub mod harness;
pub mod ideal;
pub mod lct;
pub mod lojasiewicz;
pub mod lp;
pub mod multiplicity;
pub mod newton;
pub mod parse;
mod par;
pub mod rational;
pub mod report;

pub use error::{Error, Result};
pub use ideal::{
    compositions, maximal_ideal, maximal_ideal_power, minimalize, principal_diag, CoordinateSet,
    Exponent, MonomialIdeal, WeightVector,
};
pub use par::parallel_enabled;
pub use parse::{parse_ideal, parse_monomial, render};
pub use rational::Rat;
