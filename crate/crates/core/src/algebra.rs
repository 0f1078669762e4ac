//! Finite algebras `(A, +, ∨, ∧, ∗, 0)` stored as Cayley tables.
//!
//! [`FiniteAlgebra`] has total tables. [`PartialAlgebra`] allows a cell to be
//! undefined, which is how bounded windows of infinite examples are
//! represented. Both implement [`Structure`], which is what every checker and
//! predicate in this crate is written against.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest carrier accepted by the table types.
pub const MAX_SIZE: usize = 4096;

/// Marker for an undefined cell in a [`PartialAlgebra`] table.
pub(crate) const UNDEF: u16 = u16::MAX;

/// One of the four binary operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Op {
    Add,
    Join,
    Meet,
    Star,
}

impl Op {
    pub const ALL: [Op; 4] = [Op::Add, Op::Join, Op::Meet, Op::Star];

    pub fn name(self) -> &'static str {
        match self {
            Op::Add => "add",
            Op::Join => "join",
            Op::Meet => "meet",
            Op::Star => "star",
        }
    }

    pub fn from_name(name: &str) -> Option<Op> {
        Op::ALL.into_iter().find(|op| op.name() == name)
    }

    fn slot(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Read access to an algebra given by (possibly partial) operation tables.
///
/// `cell` returns `None` for an undefined entry. The derived order is
/// `a ≤ b ⇔ a ∧ b = a`; its agreement with `∨` is a lattice law checked
/// elsewhere, not assumed here.
pub trait Structure: Sync {
    fn size(&self) -> usize;
    fn zero(&self) -> usize;
    fn cell(&self, op: Op, a: usize, b: usize) -> Option<usize>;

    #[inline]
    fn add(&self, a: usize, b: usize) -> Option<usize> {
        self.cell(Op::Add, a, b)
    }
    #[inline]
    fn join(&self, a: usize, b: usize) -> Option<usize> {
        self.cell(Op::Join, a, b)
    }
    #[inline]
    fn meet(&self, a: usize, b: usize) -> Option<usize> {
        self.cell(Op::Meet, a, b)
    }
    #[inline]
    fn star(&self, a: usize, b: usize) -> Option<usize> {
        self.cell(Op::Star, a, b)
    }
    #[inline]
    fn leq(&self, a: usize, b: usize) -> Option<bool> {
        Some(self.meet(a, b)? == a)
    }

    fn check_index(&self, index: usize) -> Result<()> {
        if index < self.size() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index,
                size: self.size(),
            })
        }
    }
}

/// `a ≤ b` in the order derived from `∧`, with range checking.
pub fn leq<S: Structure + ?Sized>(alg: &S, a: usize, b: usize) -> Result<bool> {
    alg.check_index(a)?;
    alg.check_index(b)?;
    alg.leq(a, b)
        .ok_or_else(|| Error::Undefined(format!("meet({a},{b})")))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Tables {
    size: usize,
    zero: usize,
    cells: [Vec<u16>; 4],
}

impl Tables {
    fn new(size: usize, zero: usize, tables: [Vec<u16>; 4], allow_undef: bool) -> Result<Self> {
        if size == 0 || size > MAX_SIZE {
            return Err(Error::Size {
                size,
                max: MAX_SIZE,
            });
        }
        if zero >= size {
            return Err(Error::IndexOutOfRange { index: zero, size });
        }
        for (op, table) in Op::ALL.iter().zip(&tables) {
            if table.len() != size * size {
                return Err(Error::TableShape {
                    table: op.name(),
                    found: table.len(),
                    expected: size * size,
                });
            }
            for (pos, &v) in table.iter().enumerate() {
                if (v as usize) < size || (allow_undef && v == UNDEF) {
                    continue;
                }
                return Err(Error::TableEntry {
                    table: op.name(),
                    row: pos / size,
                    col: pos % size,
                    value: v as usize,
                    size,
                });
            }
        }
        Ok(Tables {
            size,
            zero,
            cells: tables,
        })
    }

    #[inline]
    fn raw(&self, op: Op, a: usize, b: usize) -> u16 {
        self.cells[op.slot()][a * self.size + b]
    }
}

/// A finite algebra with four total operation tables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteAlgebra {
    inner: Tables,
}

impl FiniteAlgebra {
    /// Builds an algebra from row-major `size × size` tables in the order
    /// `[add, join, meet, star]`.
    pub fn new(size: usize, zero: usize, tables: [Vec<u16>; 4]) -> Result<Self> {
        Tables::new(size, zero, tables, false).map(|inner| FiniteAlgebra { inner })
    }

    /// Builds an algebra by evaluating `f(op, a, b)` on every cell.
    pub fn from_fn(size: usize, zero: usize, mut f: impl FnMut(Op, usize, usize) -> usize) -> Result<Self> {
        let tables = Op::ALL.map(|op| {
            let mut t = Vec::with_capacity(size * size);
            for a in 0..size {
                for b in 0..size {
                    t.push(f(op, a, b).min(u16::MAX as usize) as u16);
                }
            }
            t
        });
        Self::new(size, zero, tables)
    }

    pub fn table(&self, op: Op) -> &[u16] {
        &self.inner.cells[op.slot()]
    }

    /// Total-table lookup. Panics on an out-of-range index.
    #[inline]
    pub fn get(&self, op: Op, a: usize, b: usize) -> usize {
        self.inner.raw(op, a, b) as usize
    }

    /// Returns a copy with one cell replaced.
    pub fn with_cell(&self, op: Op, a: usize, b: usize, value: usize) -> Result<Self> {
        self.check_index(a)?;
        self.check_index(b)?;
        self.check_index(value)?;
        let mut next = self.clone();
        next.inner.cells[op.slot()][a * self.inner.size + b] = value as u16;
        Ok(next)
    }

    /// Replaces a cell and its mirror `(b, a)`.
    pub fn with_symmetric_cell(&self, op: Op, a: usize, b: usize, value: usize) -> Result<Self> {
        self.with_cell(op, a, b, value)?.with_cell(op, b, a, value)
    }

    /// Relabels the carrier: element `x` becomes `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.size();
        if perm.len() != n {
            return Err(Error::Tuple(format!("permutation of length {} for size {n}", perm.len())));
        }
        let mut inverse = vec![usize::MAX; n];
        for (x, &p) in perm.iter().enumerate() {
            self.check_index(p)?;
            if inverse[p] != usize::MAX {
                return Err(Error::Tuple("relabeling is not a permutation".into()));
            }
            inverse[p] = x;
        }
        FiniteAlgebra::from_fn(n, perm[self.zero()], |op, a, b| {
            perm[self.get(op, inverse[a], inverse[b])]
        })
    }
}

impl Structure for FiniteAlgebra {
    #[inline]
    fn size(&self) -> usize {
        self.inner.size
    }
    #[inline]
    fn zero(&self) -> usize {
        self.inner.zero
    }
    #[inline]
    fn cell(&self, op: Op, a: usize, b: usize) -> Option<usize> {
        Some(self.inner.raw(op, a, b) as usize)
    }
}

/// An algebra whose tables may contain undefined cells.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialAlgebra {
    inner: Tables,
}

impl PartialAlgebra {
    /// Like [`FiniteAlgebra::new`], with `None` marking undefined cells.
    pub fn new(size: usize, zero: usize, tables: [Vec<Option<usize>>; 4]) -> Result<Self> {
        let raw = tables.map(|t| {
            t.into_iter()
                .map(|c| match c {
                    Some(v) if v < UNDEF as usize => v as u16,
                    // Anything unrepresentable is rejected by the range check.
                    Some(_) => UNDEF - 1,
                    None => UNDEF,
                })
                .collect()
        });
        Tables::new(size, zero, raw, true).map(|inner| PartialAlgebra { inner })
    }

    pub fn from_fn(
        size: usize,
        zero: usize,
        mut f: impl FnMut(Op, usize, usize) -> Option<usize>,
    ) -> Result<Self> {
        let tables = Op::ALL.map(|op| {
            let mut t = Vec::with_capacity(size * size);
            for a in 0..size {
                for b in 0..size {
                    t.push(f(op, a, b));
                }
            }
            t
        });
        Self::new(size, zero, tables)
    }

    /// An algebra of the given size with every cell undefined.
    pub(crate) fn undefined(size: usize, zero: usize) -> Result<Self> {
        Self::from_fn(size, zero, |_, _, _| None)
    }

    pub(crate) fn set_cell(&mut self, op: Op, a: usize, b: usize, value: Option<usize>) {
        let n = self.inner.size;
        self.inner.cells[op.slot()][a * n + b] = value.map_or(UNDEF, |v| v as u16);
    }

    pub fn undefined_count(&self) -> usize {
        self.inner
            .cells
            .iter()
            .map(|t| t.iter().filter(|&&c| c == UNDEF).count())
            .sum()
    }

    pub fn is_total(&self) -> bool {
        self.undefined_count() == 0
    }

    /// The total algebra, if no cell is undefined.
    pub fn to_finite(&self) -> Option<FiniteAlgebra> {
        self.is_total().then(|| FiniteAlgebra {
            inner: self.inner.clone(),
        })
    }
}

impl From<FiniteAlgebra> for PartialAlgebra {
    fn from(alg: FiniteAlgebra) -> Self {
        PartialAlgebra { inner: alg.inner }
    }
}

impl Structure for PartialAlgebra {
    #[inline]
    fn size(&self) -> usize {
        self.inner.size
    }
    #[inline]
    fn zero(&self) -> usize {
        self.inner.zero
    }
    #[inline]
    fn cell(&self, op: Op, a: usize, b: usize) -> Option<usize> {
        match self.inner.raw(op, a, b) {
            UNDEF => None,
            v => Some(v as usize),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b2() -> FiniteAlgebra {
        FiniteAlgebra::from_fn(4, 0, |op, a, b| match op {
            Op::Add | Op::Join => a | b,
            Op::Meet => a & b,
            Op::Star => a ^ b,
        })
        .unwrap()
    }

    #[test]
    fn leq_on_bitmasks() {
        let alg = b2();
        assert!(leq(&alg, 1, 3).unwrap());
        assert!(!leq(&alg, 1, 2).unwrap());
        for a in 0..4 {
            assert!(leq(&alg, a, a).unwrap());
        }
    }

    #[test]
    fn leq_rejects_out_of_range() {
        assert_eq!(
            leq(&b2(), 4, 0),
            Err(Error::IndexOutOfRange { index: 4, size: 4 })
        );
    }

    #[test]
    fn constructor_rejects_bad_entries() {
        let mut t = b2().table(Op::Add).to_vec();
        t[5] = 9;
        let alg = b2();
        let err = FiniteAlgebra::new(
            4,
            0,
            [t, alg.table(Op::Join).to_vec(), alg.table(Op::Meet).to_vec(), alg.table(Op::Star).to_vec()],
        )
        .unwrap_err();
        assert!(matches!(err, Error::TableEntry { row: 1, col: 1, value: 9, .. }));
        assert!(matches!(
            FiniteAlgebra::new(2, 0, [vec![0; 3], vec![0; 4], vec![0; 4], vec![0; 4]]),
            Err(Error::TableShape { table: "add", .. })
        ));
        assert!(FiniteAlgebra::new(2, 2, [vec![0; 4], vec![0; 4], vec![0; 4], vec![0; 4]]).is_err());
    }

    #[test]
    fn partial_round_trip() {
        let p: PartialAlgebra = b2().into();
        assert!(p.is_total());
        assert_eq!(p.to_finite(), Some(b2()));
        let mut q = p.clone();
        q.set_cell(Op::Star, 1, 2, None);
        assert_eq!(q.star(1, 2), None);
        assert_eq!(q.undefined_count(), 1);
        assert!(q.to_finite().is_none());
    }

    #[test]
    fn relabel_swaps_atoms() {
        let alg = b2();
        let swapped = alg.relabel(&[0, 2, 1, 3]).unwrap();
        assert_eq!(swapped, alg);
        let moved = alg.relabel(&[3, 1, 2, 0]).unwrap();
        assert_eq!(moved.zero(), 3);
        assert_eq!(moved.get(Op::Join, 1, 2), 0);
    }
}
