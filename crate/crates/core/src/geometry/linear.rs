use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::algebra::Structure;
use crate::error::{Error, Result};

use super::{between, lattice_between_opt};

/// Largest tuple accepted by the labeling search (it tries all `n!` orders).
pub const MAX_LINEAR_TUPLE: usize = 6;

/// Relation used for B-linearity.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Betweenness {
    #[default]
    Metric,
    Lattice,
}

fn validate<S: Structure + ?Sized>(alg: &S, tuple: &[usize]) -> Result<()> {
    if tuple.len() < 3 || tuple.len() > MAX_LINEAR_TUPLE {
        return Err(Error::Tuple(format!(
            "linearity needs 3..={MAX_LINEAR_TUPLE} points, got {}",
            tuple.len()
        )));
    }
    for &p in tuple {
        alg.check_index(p)?;
    }
    if !tuple.iter().all_unique() {
        return Err(Error::Tuple(format!("points must be distinct: {tuple:?}")));
    }
    Ok(())
}

fn labelings(tuple: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    tuple.iter().copied().permutations(tuple.len())
}

pub(crate) fn b_linear_labeling<S: Structure + ?Sized>(
    alg: &S,
    tuple: &[usize],
    relation: Betweenness,
) -> Option<Vec<usize>> {
    let rel = |a, b, c| match relation {
        Betweenness::Metric => between(alg, a, b, c),
        Betweenness::Lattice => lattice_between_opt(alg, a, b, c),
    };
    labelings(tuple).find(|p| {
        (0..p.len()).tuple_combinations().all(|(i, j, k)| rel(p[i], p[j], p[k]) == Some(true))
    })
}

pub(crate) fn d_linear_labeling<S: Structure + ?Sized>(alg: &S, tuple: &[usize]) -> Option<Vec<usize>> {
    let path_length = |p: &[usize]| -> Option<usize> {
        p.windows(2)
            .map(|w| alg.star(w[0], w[1]))
            .try_fold(None, |acc: Option<usize>, d| {
                let d = d?;
                Some(Some(match acc {
                    None => d,
                    Some(s) => alg.add(s, d)?,
                }))
            })?
    };
    labelings(tuple).find(|p| {
        let end_to_end = alg.star(p[0], p[p.len() - 1]);
        end_to_end.is_some() && end_to_end == path_length(p)
    })
}

/// A labeling `(P₁, …, Pₙ)` of the tuple with `B(Pᵢ, Pⱼ, Pₖ)` for all
/// `i < j < k`, or `None`. Labelings are tried in lexicographic order of
/// positions, so the identity labeling is found first when it works.
pub fn is_b_linear<S: Structure + ?Sized>(
    alg: &S,
    tuple: &[usize],
    relation: Betweenness,
) -> Result<Option<Vec<usize>>> {
    validate(alg, tuple)?;
    Ok(b_linear_labeling(alg, tuple, relation))
}

/// A labeling with `P₁∗Pₙ = P₁∗P₂ + … + Pₙ₋₁∗Pₙ`, or `None`.
pub fn is_d_linear<S: Structure + ?Sized>(alg: &S, tuple: &[usize]) -> Result<Option<Vec<usize>>> {
    validate(alg, tuple)?;
    Ok(d_linear_labeling(alg, tuple))
}
