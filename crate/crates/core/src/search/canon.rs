use itertools::Itertools;

use crate::algebra::{FiniteAlgebra, Op, Structure};
use crate::error::{Error, Result};

/// Largest carrier accepted by [`canonical_form`] (it tries all `n!` relabelings).
pub const MAX_CANONICAL_SIZE: usize = 8;

/// Table order in the serialized form.
const CANON_OPS: [Op; 4] = [Op::Join, Op::Meet, Op::Add, Op::Star];

/// Serialization of the algebra relabeled by `perm`: size, zero, then the
/// join, meet, add and star tables row by row.
fn serialize(alg: &FiniteAlgebra, perm: &[usize], inverse: &[usize]) -> Vec<u8> {
    let n = alg.size();
    let mut out = Vec::with_capacity(2 + 4 * n * n);
    out.push(n as u8);
    out.push(perm[alg.zero()] as u8);
    for op in CANON_OPS {
        for a in 0..n {
            for b in 0..n {
                out.push(perm[alg.get(op, inverse[a], inverse[b])] as u8);
            }
        }
    }
    out
}

fn check_size(alg: &FiniteAlgebra) -> Result<()> {
    if alg.size() > MAX_CANONICAL_SIZE {
        return Err(Error::Search(format!(
            "canonical form needs size <= {MAX_CANONICAL_SIZE}, got {}",
            alg.size()
        )));
    }
    Ok(())
}

/// The smallest serialization over all relabelings, and that relabeling.
///
/// Zero is part of the serialized structure, so two algebras share a form
/// exactly when some bijection carries one onto the other, zero included.
pub fn canonical_relabel(alg: &FiniteAlgebra) -> Result<(Vec<u8>, FiniteAlgebra)> {
    check_size(alg)?;
    let n = alg.size();
    let mut best: Option<(Vec<u8>, Vec<usize>)> = None;
    let mut inverse = vec![0; n];
    for perm in (0..n).permutations(n) {
        for (x, &p) in perm.iter().enumerate() {
            inverse[p] = x;
        }
        let form = serialize(alg, &perm, &inverse);
        if best.as_ref().is_none_or(|(b, _)| form < *b) {
            best = Some((form, perm));
        }
    }
    let (form, perm) = best.expect("at least one permutation");
    Ok((form, alg.relabel(&perm)?))
}

pub fn canonical_form(alg: &FiniteAlgebra) -> Result<Vec<u8>> {
    canonical_relabel(alg).map(|(form, _)| form)
}

/// The serialization under the identity labeling.
pub(crate) fn labeled_form(alg: &FiniteAlgebra) -> Vec<u8> {
    let id: Vec<usize> = (0..alg.size()).collect();
    serialize(alg, &id, &id)
}
