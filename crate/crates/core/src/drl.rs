//! Least differences, as in DRl-semigroups: `a − b` is the least `x` with
//! `b + x ≥ a`, and such an algebra carries the metric `(a − b) ∨ (b − a)`.

use crate::algebra::Structure;
use crate::error::Result;
use crate::report::{CheckReport, Collector, Sink, DEFAULT_WITNESS_CAP};

/// The least `x` with `b + x ≥ a`, if the set of such `x` has a least element.
///
/// Candidates are the `x` whose sum with `b` is defined and provably `≥ a`. A
/// candidate is least only if it is provably below every other candidate.
pub fn drl_difference<S: Structure + ?Sized>(alg: &S, a: usize, b: usize) -> Result<Option<usize>> {
    alg.check_index(a)?;
    alg.check_index(b)?;
    Ok(least_difference(alg, a, b))
}

fn least_difference<S: Structure + ?Sized>(alg: &S, a: usize, b: usize) -> Option<usize> {
    let candidates: Vec<usize> = (0..alg.size())
        .filter(|&x| alg.add(b, x).and_then(|s| alg.leq(a, s)) == Some(true))
        .collect();
    candidates
        .iter()
        .copied()
        .find(|&m| candidates.iter().all(|&x| alg.leq(m, x) == Some(true)))
}

/// Passes iff every difference exists and `a ∗ b = (a − b) ∨ (b − a)`.
pub fn is_drl_compatible<S: Structure + ?Sized>(alg: &S) -> CheckReport {
    let mut c = Collector::new(DEFAULT_WITNESS_CAP);
    let n = alg.size();
    for a in 0..n {
        for b in 0..n {
            let forward = least_difference(alg, a, b);
            let backward = least_difference(alg, b, a);
            match (forward, backward) {
                (Some(f), Some(g)) => {
                    c.record("star is symmetric difference", &[a, b], (|| {
                        Some(alg.star(a, b)? == alg.join(f, g)?)
                    })());
                }
                (None, _) => c.fail("difference absent", &[a, b]),
                (_, None) => c.fail("difference absent", &[b, a]),
            }
        }
    }
    c.finish("drl_compatible")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{FiniteAlgebra, Op};

    fn b2() -> FiniteAlgebra {
        FiniteAlgebra::from_fn(4, 0, |op, a, b| match op {
            Op::Add | Op::Join => a | b,
            Op::Meet => a & b,
            Op::Star => a ^ b,
        })
        .unwrap()
    }

    #[test]
    fn boolean_difference_is_relative_complement() {
        let alg = b2();
        assert_eq!(drl_difference(&alg, 3, 1).unwrap(), Some(2));
        for a in 0..4 {
            assert_eq!(drl_difference(&alg, a, a).unwrap(), Some(0));
            for b in 0..4 {
                assert_eq!(drl_difference(&alg, a, b).unwrap(), Some(a & !b));
            }
        }
        assert!(is_drl_compatible(&alg).passed);
    }

    #[test]
    fn wrong_metric_is_caught() {
        let alg = b2().with_symmetric_cell(Op::Star, 1, 2, 1).unwrap();
        let r = is_drl_compatible(&alg);
        assert!(!r.passed);
        assert!(r.has_witness("star is symmetric difference", &[1, 2]));
    }

    #[test]
    fn out_of_range() {
        assert!(drl_difference(&b2(), 0, 7).is_err());
    }
}
