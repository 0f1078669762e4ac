//! Constructors for the standard example algebras.
//!
//! Infinite examples over ℤ are built as windows `{−N, …, N}` plus their
//! extra points; any result leaving the window is an undefined cell.

use serde::{Deserialize, Serialize};

use crate::algebra::{FiniteAlgebra, Op, PartialAlgebra, Structure};
use crate::error::{Error, Result};

pub const MAX_BOOLEAN_RANK: usize = 4;
pub const MAX_CHAIN: usize = 64;
pub const MAX_WINDOW: usize = 32;
pub const DEFAULT_WINDOW: usize = 8;
pub const MAX_PRODUCT_FACTORS: usize = 3;
pub const MAX_PRODUCT_SIZE: usize = 4096;
pub const MAX_GRID: usize = 3;

/// How `+` and `∗` are defined on a finite chain `0 < 1 < … < n−1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChainMode {
    /// `a + b = min(a + b, n − 1)`, `a ∗ b = |a − b|`.
    TruncatedSum,
    /// `a + b = max(a, b)`, `a ∗ b = max(a, b)` for `a ≠ b`.
    Max,
}

/// Subsets of a `k`-set as bitmasks: `+ = ∨ = ∪`, `∧ = ∩`, `∗ = Δ`.
pub fn make_boolean(k: usize) -> Result<FiniteAlgebra> {
    if k > MAX_BOOLEAN_RANK {
        return Err(Error::Model(format!("boolean rank {k} exceeds {MAX_BOOLEAN_RANK}")));
    }
    FiniteAlgebra::from_fn(1 << k, 0, |op, a, b| match op {
        Op::Add | Op::Join => a | b,
        Op::Meet => a & b,
        Op::Star => a ^ b,
    })
}

pub fn make_chain(n: usize, mode: ChainMode) -> Result<FiniteAlgebra> {
    if n == 0 || n > MAX_CHAIN {
        return Err(Error::Model(format!("chain length must be in 1..={MAX_CHAIN}, got {n}")));
    }
    FiniteAlgebra::from_fn(n, 0, |op, a, b| match (op, mode) {
        (Op::Join, _) => a.max(b),
        (Op::Meet, _) => a.min(b),
        (Op::Add, ChainMode::TruncatedSum) => (a + b).min(n - 1),
        (Op::Star, ChainMode::TruncatedSum) => a.abs_diff(b),
        (Op::Add, ChainMode::Max) => a.max(b),
        (Op::Star, ChainMode::Max) if a == b => 0,
        (Op::Star, ChainMode::Max) => a.max(b),
    })
}

fn check_window(radius: usize) -> Result<()> {
    if radius > MAX_WINDOW {
        return Err(Error::Model(format!("window radius {radius} exceeds {MAX_WINDOW}")));
    }
    Ok(())
}

/// Window of ℤ ∪ {u}: usual `+` and `|a − b|` on integers, `u` absorbing
/// for `+`, `a ∗ u = u`, `u ∗ u = 0`.
///
/// The order between `u` and the integers is not given, so by default
/// `u ∨ a` and `u ∧ a` are undefined for integers `a`. With `u_bottom`,
/// `u` is placed below every integer.
///
/// Index 0 is `u`; index `1 + N + k` is the integer `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZWindowU {
    pub radius: usize,
    pub u_bottom: bool,
}

impl ZWindowU {
    pub fn new(radius: usize) -> Self {
        ZWindowU {
            radius,
            u_bottom: false,
        }
    }

    pub fn u(&self) -> usize {
        0
    }

    /// Index of integer `k`; panics outside the window.
    pub fn int(&self, k: i64) -> usize {
        assert!(k.unsigned_abs() as usize <= self.radius, "{k} outside window");
        (1 + self.radius as i64 + k) as usize
    }

    pub fn size(&self) -> usize {
        2 * self.radius + 2
    }

    pub fn value(&self, index: usize) -> Option<i64> {
        (index != 0).then(|| index as i64 - 1 - self.radius as i64)
    }

    pub fn integers(&self) -> impl Iterator<Item = usize> {
        1..self.size()
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.size())
            .map(|i| self.value(i).map_or("u".into(), |v| v.to_string()))
            .collect()
    }

    pub fn build(&self) -> Result<PartialAlgebra> {
        check_window(self.radius)?;
        let r = self.radius as i64;
        let index = |v: i64| (v.abs() <= r).then(|| (1 + r + v) as usize);
        let u = self.u();
        PartialAlgebra::from_fn(self.size(), self.int(0), |op, a, b| {
            match (self.value(a), self.value(b)) {
                (Some(x), Some(y)) => match op {
                    Op::Add => index(x + y),
                    Op::Join => index(x.max(y)),
                    Op::Meet => index(x.min(y)),
                    Op::Star => index((x - y).abs()),
                },
                (None, None) => match op {
                    Op::Star => index(0),
                    _ => Some(u),
                },
                (Some(_), None) | (None, Some(_)) => {
                    let int = if a == u { b } else { a };
                    match op {
                        Op::Add | Op::Star => Some(u),
                        Op::Join if self.u_bottom => Some(int),
                        Op::Meet if self.u_bottom => Some(u),
                        Op::Join | Op::Meet => None,
                    }
                }
            }
        })
    }
}

pub fn make_z_window_u(radius: usize) -> Result<PartialAlgebra> {
    ZWindowU::new(radius).build()
}

/// Window of ℤ ∪ {u, v} with `u < a < v` for every integer `a`.
///
/// `+`: usual on integers, `a + u = u`, `a + v = v`, `u + v = u`.
/// `∗`: `|a − b|` on integers, `a ∗ u = v`, `a ∗ v = v`, `u ∗ v = v`,
/// `u ∗ u = v ∗ v = 0`.
///
/// Index 0 is `u`, index 1 is `v`, index `2 + N + k` is the integer `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZWindowUV {
    pub radius: usize,
}

impl ZWindowUV {
    pub fn new(radius: usize) -> Self {
        ZWindowUV { radius }
    }

    pub fn u(&self) -> usize {
        0
    }

    pub fn v(&self) -> usize {
        1
    }

    pub fn int(&self, k: i64) -> usize {
        assert!(k.unsigned_abs() as usize <= self.radius, "{k} outside window");
        (2 + self.radius as i64 + k) as usize
    }

    pub fn size(&self) -> usize {
        2 * self.radius + 3
    }

    pub fn value(&self, index: usize) -> Option<i64> {
        (index >= 2).then(|| index as i64 - 2 - self.radius as i64)
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.size())
            .map(|i| match i {
                0 => "u".into(),
                1 => "v".into(),
                _ => self.value(i).unwrap().to_string(),
            })
            .collect()
    }

    pub fn build(&self) -> Result<PartialAlgebra> {
        check_window(self.radius)?;
        let r = self.radius as i64;
        let index = |v: i64| (v.abs() <= r).then(|| (2 + r + v) as usize);
        let (u, v) = (self.u(), self.v());
        // Position in the total order u < ℤ < v.
        let rank = |i: usize| match self.value(i) {
            Some(x) => x,
            None if i == u => i64::MIN,
            None => i64::MAX,
        };
        PartialAlgebra::from_fn(self.size(), self.int(0), |op, a, b| {
            match op {
                Op::Join => return Some(if rank(a) >= rank(b) { a } else { b }),
                Op::Meet => return Some(if rank(a) <= rank(b) { a } else { b }),
                _ => {}
            }
            match (self.value(a), self.value(b), op) {
                (Some(x), Some(y), Op::Add) => index(x + y),
                (Some(x), Some(y), _) => index((x - y).abs()),
                (_, _, Op::Star) if a == b => index(0),
                (_, _, Op::Star) => Some(v),
                _ if a == u || b == u => Some(u),
                _ => Some(v),
            }
        })
    }
}

pub fn make_z_window_uv(radius: usize) -> Result<PartialAlgebra> {
    ZWindowUV::new(radius).build()
}

/// Componentwise product. Element `(x₁, …, x_k)` has index
/// `x₁·s₁ + … + x_k·s_k` with the first factor most significant.
pub fn make_product(factors: &[FiniteAlgebra]) -> Result<FiniteAlgebra> {
    if factors.is_empty() || factors.len() > MAX_PRODUCT_FACTORS {
        return Err(Error::Model(format!(
            "product needs 1..={MAX_PRODUCT_FACTORS} factors, got {}",
            factors.len()
        )));
    }
    let size: usize = factors.iter().map(|f| f.size()).product();
    if size > MAX_PRODUCT_SIZE {
        return Err(Error::Model(format!("product size {size} exceeds {MAX_PRODUCT_SIZE}")));
    }
    let decode = |mut x: usize| -> Vec<usize> {
        let mut out = vec![0; factors.len()];
        for (i, f) in factors.iter().enumerate().rev() {
            out[i] = x % f.size();
            x /= f.size();
        }
        out
    };
    let encode = |coords: &[usize]| {
        coords
            .iter()
            .zip(factors)
            .fold(0, |acc, (&c, f)| acc * f.size() + c)
    };
    let zero = encode(&factors.iter().map(|f| f.zero()).collect::<Vec<_>>());
    FiniteAlgebra::from_fn(size, zero, |op, a, b| {
        let (xa, xb) = (decode(a), decode(b));
        let coords: Vec<usize> = factors
            .iter()
            .enumerate()
            .map(|(i, f)| f.get(op, xa[i], xb[i]))
            .collect();
        encode(&coords)
    })
}

/// Closed subsets of `[0, m]` that are unions of the grid points `{i}` and
/// the closed segments `[i, i+1]`. The operations are `∪` for `+` and `∨`,
/// `∩` for `∧`, and the closure of the symmetric difference for `∗`, so the
/// family is closed and forms a finite instance of the closed-set example.
///
/// Cells are bits: bit `2i` is the point `i`, bit `2i+1` the open segment
/// `(i, i+1)`. Elements are the closed cell sets in increasing mask order;
/// index 0 is `∅`.
pub fn make_closed_grid(m: usize) -> Result<FiniteAlgebra> {
    let masks = closed_grid_masks(m)?;
    let index_of = |mask: u32| masks.binary_search(&mask).expect("family is closed");
    let close = |mask: u32| closure(mask, m);
    FiniteAlgebra::from_fn(masks.len(), 0, |op, a, b| {
        let (x, y) = (masks[a], masks[b]);
        index_of(match op {
            Op::Add | Op::Join => x | y,
            Op::Meet => x & y,
            Op::Star => close(x ^ y),
        })
    })
}

/// Cell masks of the closed grid sets, sorted.
pub fn closed_grid_masks(m: usize) -> Result<Vec<u32>> {
    if m == 0 || m > MAX_GRID {
        return Err(Error::Model(format!("grid length must be in 1..={MAX_GRID}, got {m}")));
    }
    let cells = 2 * m + 1;
    Ok((0u32..1 << cells).filter(|&s| closure(s, m) == s).collect())
}

fn closure(mask: u32, m: usize) -> u32 {
    let mut out = mask;
    for i in 0..m {
        if mask & (1 << (2 * i + 1)) != 0 {
            out |= (1 << (2 * i)) | (1 << (2 * i + 2));
        }
    }
    out
}

/// Renders a grid cell mask as a union of closed intervals, e.g. `[0,1]∪[2,2]`.
pub fn grid_label(mask: u32, m: usize) -> String {
    let mut parts = Vec::new();
    let mut i = 0;
    while i <= m {
        if mask & (1 << (2 * i)) == 0 {
            i += 1;
            continue;
        }
        let start = i;
        while i < m && mask & (1 << (2 * i + 1)) != 0 {
            i += 1;
        }
        parts.push(format!("[{start},{i}]"));
        i += 1;
    }
    if parts.is_empty() {
        "{}".into()
    } else {
        parts.join("∪")
    }
}

/// A model family with parameters, as selected on the command line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum ModelSpec {
    Boolean { k: usize },
    Chain { n: usize, mode: ChainMode },
    ZWindowU { radius: usize, u_bottom: bool },
    ZWindowUv { radius: usize },
    ClosedGrid { m: usize },
    Product { factors: Vec<ModelSpec> },
}

/// A constructed model: total or windowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Model {
    Finite(FiniteAlgebra),
    Partial(PartialAlgebra),
}

impl Model {
    pub fn to_partial(&self) -> PartialAlgebra {
        match self {
            Model::Finite(f) => f.clone().into(),
            Model::Partial(p) => p.clone(),
        }
    }
}

impl ModelSpec {
    pub fn build(&self) -> Result<Model> {
        Ok(match self {
            ModelSpec::Boolean { k } => Model::Finite(make_boolean(*k)?),
            ModelSpec::Chain { n, mode } => Model::Finite(make_chain(*n, *mode)?),
            ModelSpec::ZWindowU { radius, u_bottom } => Model::Partial(
                ZWindowU {
                    radius: *radius,
                    u_bottom: *u_bottom,
                }
                .build()?,
            ),
            ModelSpec::ZWindowUv { radius } => Model::Partial(make_z_window_uv(*radius)?),
            ModelSpec::ClosedGrid { m } => Model::Finite(make_closed_grid(*m)?),
            ModelSpec::Product { factors } => {
                let built = factors
                    .iter()
                    .map(|f| match f.build()? {
                        Model::Finite(alg) => Ok(alg),
                        Model::Partial(_) => {
                            Err(Error::Model("product factors must be finite models".into()))
                        }
                    })
                    .collect::<Result<Vec<_>>>()?;
                Model::Finite(make_product(&built)?)
            }
        })
    }

    /// Human-readable element names.
    pub fn labels(&self) -> Result<Vec<String>> {
        Ok(match self {
            ModelSpec::Boolean { k } => (0..1usize << k).map(|x| format!("{x:0w$b}", w = (*k).max(1))).collect(),
            ModelSpec::Chain { n, .. } => (0..*n).map(|x| x.to_string()).collect(),
            ModelSpec::ZWindowU { radius, u_bottom } => ZWindowU {
                radius: *radius,
                u_bottom: *u_bottom,
            }
            .labels(),
            ModelSpec::ZWindowUv { radius } => ZWindowUV::new(*radius).labels(),
            ModelSpec::ClosedGrid { m } => closed_grid_masks(*m)?
                .into_iter()
                .map(|mask| grid_label(mask, *m))
                .collect(),
            ModelSpec::Product { factors } => {
                let mut labels = vec![String::new()];
                for f in factors {
                    let inner = f.labels()?;
                    labels = labels
                        .iter()
                        .flat_map(|prefix| {
                            inner.iter().map(move |l| {
                                if prefix.is_empty() {
                                    l.clone()
                                } else {
                                    format!("{prefix},{l}")
                                }
                            })
                        })
                        .collect();
                }
                labels.into_iter().map(|l| format!("({l})")).collect()
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::{check_axiom2, classify, is_al_monoid};
    use crate::drl::drl_difference;

    #[test]
    fn bounds() {
        assert!(make_boolean(5).is_err());
        assert!(make_chain(0, ChainMode::Max).is_err());
        assert!(make_chain(65, ChainMode::Max).is_err());
        assert!(make_z_window_u(33).is_err());
        assert!(make_product(&[]).is_err());
        assert!(make_closed_grid(4).is_err());
    }

    #[test]
    fn small_boolean_and_chains() {
        assert_eq!(make_boolean(0).unwrap().size(), 1);
        assert!(is_al_monoid(&make_boolean(0).unwrap()));
        assert!(is_al_monoid(&make_boolean(1).unwrap()));
        assert!(is_al_monoid(&make_chain(1, ChainMode::TruncatedSum).unwrap()));
        let max3 = make_chain(3, ChainMode::Max).unwrap();
        assert_eq!(max3.star(2, 1), Some(2));
        assert_eq!(drl_difference(&max3, 2, 1).unwrap(), Some(2));
    }

    #[test]
    fn z_u_window_layout() {
        let w = ZWindowU::new(8);
        let alg = w.build().unwrap();
        assert_eq!(alg.star(w.int(3), w.int(5)), Some(w.int(2)));
        assert_eq!(alg.add(w.int(8), w.int(1)), None);
        assert_eq!(alg.add(w.u(), w.int(1)), Some(w.u()));
        assert_eq!(alg.join(w.u(), w.int(1)), None);
        assert_eq!(alg.zero(), w.int(0));
        let bottom = ZWindowU { radius: 2, u_bottom: true }.build().unwrap();
        assert_eq!(bottom.leq(0, 1), Some(true));
    }

    #[test]
    fn z_uv_window_order_and_axiom2() {
        let w = ZWindowUV::new(8);
        let alg = w.build().unwrap();
        assert_eq!(alg.leq(w.u(), w.int(0)), Some(true));
        assert_eq!(alg.leq(w.int(0), w.v()), Some(true));
        assert_eq!(alg.star(w.int(4), w.u()), Some(w.v()));
        assert_eq!(alg.add(w.u(), w.v()), Some(w.u()));
        let r = check_axiom2(&alg);
        assert!(r.has_tuple(&[w.v(), w.u()]));
        assert_eq!(r.first_witness().unwrap().tuple, vec![w.v(), w.u()]);
    }

    #[test]
    fn product_layout() {
        let p = make_product(&[make_boolean(2).unwrap(), make_chain(2, ChainMode::Max).unwrap()]).unwrap();
        assert_eq!(p.size(), 8);
        assert_eq!(p.zero(), 0);
        // (1,1) ∨ (2,0) = (3,1)
        assert_eq!(p.join(3, 4), Some(7));
        let spec = ModelSpec::Product {
            factors: vec![ModelSpec::Boolean { k: 1 }, ModelSpec::Chain { n: 3, mode: ChainMode::Max }],
        };
        assert_eq!(spec.labels().unwrap()[4], "(1,1)");
    }

    #[test]
    fn closed_grid_counts_and_labels() {
        assert_eq!(closed_grid_masks(1).unwrap().len(), 5);
        assert_eq!(closed_grid_masks(2).unwrap().len(), 13);
        let labels = ModelSpec::ClosedGrid { m: 2 }.labels().unwrap();
        assert!(labels.contains(&"[0,1]∪[2,2]".to_string()));
        assert_eq!(labels[0], "{}");
        let c = classify(&make_closed_grid(2).unwrap());
        assert!(c.representable);
        assert!(!c.al_monoid);
    }
}
