//! Finite-model checking for autometrized lattice-ordered monoids
//! (AL-monoids): algebras `(A, +, ∨, ∧, ∗, 0)` where `(A, +, ∨, ∧, 0)` is a
//! commutative lattice-ordered monoid and `∗` is a distance taking values in
//! `A` itself.
//!
//! The crate checks the defining axioms on concrete tables, evaluates the
//! betweenness, triangle, linearity and ptolemaic predicates, runs the
//! associated theorems as exhaustive checks, builds the standard example
//! models (including windows of infinite ones and an exact closed-set model),
//! and enumerates small AL-monoids up to isomorphism.

pub mod algebra;
pub mod axioms;
pub mod drl;
pub mod error;
pub mod format;
pub mod geometry;
pub mod intervals;
pub mod models;
pub mod report;
pub mod search;

pub use algebra::{leq, FiniteAlgebra, Op, PartialAlgebra, Structure};
pub use axioms::{
    check_axiom2, check_axiom4, check_contractions, check_distributivity, check_lattice,
    check_metric, check_monoid, check_semiregular, classify, is_al_monoid, Axiom, Classification,
};
pub use drl::{drl_difference, is_drl_compatible};
pub use error::{Error, Result};
pub use format::{parse_algebra, write_algebra};
pub use report::{CheckReport, Witness};
