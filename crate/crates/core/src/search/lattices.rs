use std::collections::BTreeMap;

use itertools::Itertools;

use crate::error::{Error, Result};

use super::MAX_SEARCH_SIZE;

/// A lattice on `0..size` given by its order and both operation tables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticeOrder {
    size: usize,
    leq: Vec<bool>,
    join: Vec<u16>,
    meet: Vec<u16>,
}

impl LatticeOrder {
    /// Builds the lattice of a partial order, or `None` if some pair lacks a
    /// least upper or greatest lower bound.
    pub fn from_order(size: usize, leq: Vec<bool>) -> Option<Self> {
        let le = |a: usize, b: usize| leq[a * size + b];
        let extreme = |cands: Vec<usize>, below: bool| -> Option<usize> {
            cands.iter().copied().find(|&c| {
                cands
                    .iter()
                    .all(|&d| if below { le(c, d) } else { le(d, c) })
            })
        };
        let mut join = Vec::with_capacity(size * size);
        let mut meet = Vec::with_capacity(size * size);
        for a in 0..size {
            for b in 0..size {
                let upper = (0..size).filter(|&c| le(a, c) && le(b, c)).collect();
                let lower = (0..size).filter(|&c| le(c, a) && le(c, b)).collect();
                join.push(extreme(upper, true)? as u16);
                meet.push(extreme(lower, false)? as u16);
            }
        }
        Some(LatticeOrder {
            size,
            leq,
            join,
            meet,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.size + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.size + b] as usize
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.size + b] as usize
    }

    pub fn is_chain(&self) -> bool {
        (0..self.size).tuple_combinations().all(|(a, b)| self.leq(a, b) || self.leq(b, a))
    }

    /// Element `x` becomes `perm[x]`.
    fn relabel(&self, perm: &[usize]) -> Self {
        let n = self.size;
        let mut leq = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                leq[perm[a] * n + perm[b]] = self.leq(a, b);
            }
        }
        LatticeOrder::from_order(n, leq).expect("relabeling preserves lattices")
    }

    fn order_bytes(&self) -> Vec<bool> {
        self.leq.clone()
    }
}

/// Every partial order on `0..n`, as row-major `≤` matrices.
fn partial_orders(n: usize) -> Vec<Vec<bool>> {
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let mut out = Vec::new();
    let mut leq = vec![false; n * n];
    for i in 0..n {
        leq[i * n + i] = true;
    }
    fn go(n: usize, pairs: &[(usize, usize)], k: usize, leq: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
        if k == pairs.len() {
            let le = |a: usize, b: usize| leq[a * n + b];
            let transitive = (0..n)
                .cartesian_product(0..n)
                .cartesian_product(0..n)
                .all(|((a, b), c)| !(le(a, b) && le(b, c)) || le(a, c));
            if transitive {
                out.push(leq.clone());
            }
            return;
        }
        let (a, b) = pairs[k];
        for state in 0..3 {
            leq[a * n + b] = state == 1;
            leq[b * n + a] = state == 2;
            go(n, pairs, k + 1, leq, out);
        }
        leq[a * n + b] = false;
        leq[b * n + a] = false;
    }
    go(n, &pairs, 0, &mut leq, &mut out);
    out
}

/// All lattices on `n` labeled elements, or with `dedup` one per
/// isomorphism class.
///
/// A class representative is its relabeling with the smallest order matrix
/// (`false < true`, row-major), and classes are listed in that order.
pub fn enumerate_lattice_orders(n: usize, dedup: bool) -> Result<Vec<LatticeOrder>> {
    if n == 0 || n > MAX_SEARCH_SIZE {
        return Err(Error::Search(format!("lattice size must be in 1..={MAX_SEARCH_SIZE}, got {n}")));
    }
    let labeled = partial_orders(n)
        .into_iter()
        .filter_map(|leq| LatticeOrder::from_order(n, leq));
    if !dedup {
        return Ok(labeled.collect());
    }
    let mut classes = BTreeMap::new();
    for lat in labeled {
        let rep = (0..n)
            .permutations(n)
            .map(|p| lat.relabel(&p))
            .min_by_key(|l| l.order_bytes())
            .expect("at least one permutation");
        classes.entry(rep.order_bytes()).or_insert(rep);
    }
    Ok(classes.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_lattice_orders(1, true).unwrap().len(), 1);
        assert_eq!(enumerate_lattice_orders(2, false).unwrap().len(), 2);
        assert_eq!(enumerate_lattice_orders(2, true).unwrap().len(), 1);
        assert_eq!(enumerate_lattice_orders(3, true).unwrap().len(), 1);
        let four = enumerate_lattice_orders(4, true).unwrap();
        assert_eq!(four.len(), 2);
        assert_eq!(four.iter().filter(|l| l.is_chain()).count(), 1);
        assert_eq!(enumerate_lattice_orders(5, true).unwrap().len(), 5);
        assert!(enumerate_lattice_orders(0, true).is_err());
    }

    #[test]
    fn labeled_counts() {
        // Labeled 3-element lattices are the 3! chains; on 4 elements there
        // are 4! chains plus 4!/2 diamonds.
        assert_eq!(enumerate_lattice_orders(3, false).unwrap().len(), 6);
        assert_eq!(enumerate_lattice_orders(4, false).unwrap().len(), 36);
    }

    #[test]
    fn non_lattice_rejected() {
        // Two incomparable elements with no bounds.
        let leq = vec![true, false, false, true];
        assert!(LatticeOrder::from_order(2, leq).is_none());
    }
}
