//! Betweenness, triangles, linearity and the other metric predicates.
//!
//! Single predicates take element indices and fail with an error on a bad
//! index or an undefined operation. The exhaustive checks live in
//! [`theorems`] and skip undefined instances instead.

mod linear;
pub mod theorems;

use serde::{Deserialize, Serialize};

use crate::algebra::Structure;
use crate::error::{Error, Result};

pub use linear::{is_b_linear, is_d_linear, Betweenness, MAX_LINEAR_TUPLE};
pub use theorems::{
    check_b_implies_d, check_beta, check_chain_theorems, check_four_way_equivalence,
    check_isosceles_lemmas, check_l_implies_m, check_metrically_convex, check_no_equilateral,
    check_ptolemaic, check_quadrilateral_lemma, check_star_monotone, check_t1, check_t2,
    fixty_equivalence_check, run_theorem_suite, FourWayEquivalence, TheoremSuiteReport,
};

/// Three pairwise-distinct vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Triangle {
    a: usize,
    b: usize,
    c: usize,
}

impl Triangle {
    pub fn new(a: usize, b: usize, c: usize) -> Result<Self> {
        if a == b || b == c || a == c {
            return Err(Error::DegenerateTriangle(a, b, c));
        }
        Ok(Triangle { a, b, c })
    }

    pub fn vertices(&self) -> [usize; 3] {
        [self.a, self.b, self.c]
    }

    /// Side lengths `a∗b, b∗c, c∗a`.
    pub(crate) fn sides<S: Structure + ?Sized>(&self, alg: &S) -> Option<[usize; 3]> {
        Some([
            alg.star(self.a, self.b)?,
            alg.star(self.b, self.c)?,
            alg.star(self.c, self.a)?,
        ])
    }
}

fn defined<T>(value: Option<T>, what: impl FnOnce() -> String) -> Result<T> {
    value.ok_or_else(|| Error::Undefined(what()))
}

fn check_all<S: Structure + ?Sized>(alg: &S, elems: &[usize]) -> Result<()> {
    elems.iter().try_for_each(|&e| alg.check_index(e))
}

#[inline]
pub(crate) fn between<S: Structure + ?Sized>(alg: &S, a: usize, x: usize, b: usize) -> Option<bool> {
    Some(alg.add(alg.star(a, x)?, alg.star(x, b)?)? == alg.star(a, b)?)
}

#[inline]
pub(crate) fn lattice_between_opt<S: Structure + ?Sized>(alg: &S, a: usize, b: usize, c: usize) -> Option<bool> {
    Some(alg.leq(alg.meet(a, c)?, b)? && alg.leq(b, alg.join(a, c)?)?)
}

#[inline]
pub(crate) fn fixty<S: Structure + ?Sized>(alg: &S, a: usize, b: usize, c: usize) -> Option<bool> {
    Some(alg.star(a, b)? == c && alg.star(b, c)? == a && alg.star(c, a)? == b)
}

/// `(a, x, b)M`: `a∗x + x∗b = a∗b`.
pub fn metric_between<S: Structure + ?Sized>(alg: &S, a: usize, x: usize, b: usize) -> Result<bool> {
    check_all(alg, &[a, x, b])?;
    defined(between(alg, a, x, b), || format!("metric betweenness ({a},{x},{b})"))
}

/// `(a, b, c)L`: `a∧c ≤ b ≤ a∨c`.
pub fn lattice_between<S: Structure + ?Sized>(alg: &S, a: usize, b: usize, c: usize) -> Result<bool> {
    check_all(alg, &[a, b, c])?;
    defined(lattice_between_opt(alg, a, b, c), || {
        format!("lattice betweenness ({a},{b},{c})")
    })
}

/// `a∗b = c`, `b∗c = a` and `c∗a = b`.
pub fn has_fixty<S: Structure + ?Sized>(alg: &S, t: &Triangle) -> Result<bool> {
    check_all(alg, &t.vertices())?;
    defined(fixty(alg, t.a, t.b, t.c), || format!("sides of {t:?}"))
}

/// Whether `set` is closed under `∗`.
pub fn is_subgeometry<S: Structure + ?Sized>(alg: &S, set: &[usize]) -> Result<bool> {
    check_all(alg, set)?;
    defined(subgeometry(alg, set), || "distance within subset".into())
}

pub(crate) fn subgeometry<S: Structure + ?Sized>(alg: &S, set: &[usize]) -> Option<bool> {
    for &a in set {
        for &b in set {
            if !set.contains(&alg.star(a, b)?) {
                return Some(false);
            }
        }
    }
    Some(true)
}

pub(crate) fn triangles(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |a| {
        (a + 1..n).flat_map(move |b| (b + 1..n).map(move |c| (a, b, c)))
    })
}

/// First triangle (in lexicographic order of sorted vertices) with three
/// equal sides.
pub fn find_equilateral<S: Structure + ?Sized>(alg: &S) -> Option<Triangle> {
    triangles(alg.size())
        .find(|&(a, b, c)| {
            let t = Triangle { a, b, c };
            matches!(t.sides(alg), Some([x, y, z]) if x == y && y == z)
        })
        .map(|(a, b, c)| Triangle { a, b, c })
}

/// All triangles with at least two equal sides.
pub fn find_isosceles<S: Structure + ?Sized>(alg: &S) -> Vec<Triangle> {
    triangles(alg.size())
        .map(|(a, b, c)| Triangle { a, b, c })
        .filter(|t| matches!(t.sides(alg), Some([x, y, z]) if x == y || y == z || z == x))
        .collect()
}

/// All triangles with fixty.
pub fn find_fixty<S: Structure + ?Sized>(alg: &S) -> Vec<Triangle> {
    triangles(alg.size())
        .filter(|&(a, b, c)| fixty(alg, a, b, c) == Some(true))
        .map(|(a, b, c)| Triangle { a, b, c })
        .collect()
}

/// First incomparable pair, if any.
pub(crate) fn incomparable_pair<S: Structure + ?Sized>(alg: &S) -> Option<(usize, usize)> {
    let n = alg.size();
    (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .find(|&(a, b)| alg.leq(a, b) == Some(false) && alg.leq(b, a) == Some(false))
}

/// Every pair of elements is comparable.
pub fn is_chain<S: Structure + ?Sized>(alg: &S) -> bool {
    incomparable_pair(alg).is_none()
}

/// Elements `c > 0` with nothing strictly between `0` and `c`.
pub fn atoms<S: Structure + ?Sized>(alg: &S) -> Vec<usize> {
    let n = alg.size();
    let z = alg.zero();
    let above_zero = |x: usize| x != z && alg.leq(z, x) == Some(true);
    (0..n)
        .filter(|&c| above_zero(c))
        .filter(|&c| !(0..n).any(|x| x != c && above_zero(x) && alg.leq(x, c) == Some(true)))
        .collect()
}
