//! Backtracking enumeration of small algebras on lattice substrates, and
//! isomorphism reduction by canonical forms.

mod canon;
mod enumerate;
mod lattices;

pub use canon::{canonical_form, canonical_relabel, MAX_CANONICAL_SIZE};
pub use enumerate::{
    enumerate_al_monoids, search_counterexample, CellOrder, EnumerationResult, Rule, SearchSpec,
    AL_MONOID_AXIOMS, DEFAULT_BUDGET, DEFAULT_LIMIT,
};
pub use lattices::{enumerate_lattice_orders, LatticeOrder};

/// Largest carrier the search accepts.
pub const MAX_SEARCH_SIZE: usize = 5;
