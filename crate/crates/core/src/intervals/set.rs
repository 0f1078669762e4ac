use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational number.
pub type Rational = Ratio<i64>;

/// A finite union of closed intervals with rational endpoints.
///
/// Stored sorted, pairwise disjoint and with a strictly positive gap between
/// neighbours, so equal sets have equal representations. Degenerate
/// intervals `[l,l]` are points. The empty list is `∅`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntervalSet {
    parts: Vec<(Rational, Rational)>,
}

impl IntervalSet {
    pub fn empty() -> Self {
        IntervalSet::default()
    }

    /// The interval `[l, r]`.
    pub fn closed(l: impl Into<Rational>, r: impl Into<Rational>) -> Result<Self> {
        let (l, r) = (l.into(), r.into());
        if l > r {
            return Err(Error::Interval(format!("empty interval [{l},{r}]")));
        }
        Ok(IntervalSet { parts: vec![(l, r)] })
    }

    pub fn point(x: impl Into<Rational>) -> Self {
        let x = x.into();
        IntervalSet { parts: vec![(x, x)] }
    }

    /// Normalizes an arbitrary list of intervals; fails if some `l > r`.
    pub fn from_intervals(parts: impl IntoIterator<Item = (Rational, Rational)>) -> Result<Self> {
        let parts: Vec<_> = parts.into_iter().collect();
        if let Some((l, r)) = parts.iter().find(|(l, r)| l > r) {
            return Err(Error::Interval(format!("empty interval [{l},{r}]")));
        }
        Ok(Self::normalized(parts))
    }

    fn normalized(mut parts: Vec<(Rational, Rational)>) -> Self {
        parts.sort();
        let mut out: Vec<(Rational, Rational)> = Vec::with_capacity(parts.len());
        for (l, r) in parts {
            match out.last_mut() {
                Some(last) if l <= last.1 => last.1 = last.1.max(r),
                _ => out.push((l, r)),
            }
        }
        IntervalSet { parts: out }
    }

    pub fn intervals(&self) -> &[(Rational, Rational)] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn contains(&self, x: Rational) -> bool {
        self.parts.iter().any(|&(l, r)| l <= x && x <= r)
    }

    /// Whether the open interval `(a, b)` lies inside the set.
    fn contains_open(&self, a: Rational, b: Rational) -> bool {
        self.parts.iter().any(|&(l, r)| l <= a && b <= r)
    }

    fn endpoints(&self) -> impl Iterator<Item = Rational> + '_ {
        self.parts.iter().flat_map(|&(l, r)| [l, r])
    }
}

pub fn iv_union(a: &IntervalSet, b: &IntervalSet) -> IntervalSet {
    IntervalSet::normalized(a.parts.iter().chain(&b.parts).copied().collect())
}

pub fn iv_intersect(a: &IntervalSet, b: &IntervalSet) -> IntervalSet {
    let mut parts = Vec::new();
    for &(al, ar) in &a.parts {
        for &(bl, br) in &b.parts {
            let (l, r) = (al.max(bl), ar.min(br));
            if l <= r {
                parts.push((l, r));
            }
        }
    }
    IntervalSet::normalized(parts)
}

/// Closure of the symmetric difference.
///
/// Between consecutive endpoints of `a` and `b` membership in each set is
/// constant, so the difference is a union of breakpoints and open gaps; the
/// closure adds the two ends of every open gap it contains.
pub fn iv_star(a: &IntervalSet, b: &IntervalSet) -> IntervalSet {
    let mut cuts: Vec<Rational> = a.endpoints().chain(b.endpoints()).collect();
    cuts.sort();
    cuts.dedup();
    let mut parts = Vec::new();
    for &p in &cuts {
        if a.contains(p) != b.contains(p) {
            parts.push((p, p));
        }
    }
    for w in cuts.windows(2) {
        if a.contains_open(w[0], w[1]) != b.contains_open(w[0], w[1]) {
            parts.push((w[0], w[1]));
        }
    }
    IntervalSet::normalized(parts)
}

fn fmt_rational(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("{}");
        }
        let text: Vec<String> = self
            .parts
            .iter()
            .map(|(l, r)| format!("[{},{}]", fmt_rational(l), fmt_rational(r)))
            .collect();
        f.write_str(&text.join("∪"))
    }
}

fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Interval(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => s.parse::<i64>().map(Rational::from_integer).map_err(|_| bad()),
    }
}

/// Parses `[0,2]+[5/2,3]`. `∪` may be used instead of `+`; `{}` and `∅` are
/// the empty set.
impl FromStr for IntervalSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "{}" || s == "∅" {
            return Ok(IntervalSet::empty());
        }
        let mut parts = Vec::new();
        for piece in s.split(['+', '∪']) {
            let inner = piece
                .trim()
                .strip_prefix('[')
                .and_then(|p| p.strip_suffix(']'))
                .ok_or_else(|| Error::Interval(format!("expected [l,r], got {:?}", piece.trim())))?;
            let (l, r) = inner
                .split_once(',')
                .ok_or_else(|| Error::Interval(format!("expected [l,r], got [{inner}]")))?;
            parts.push((parse_rational(l)?, parse_rational(r)?));
        }
        IntervalSet::from_intervals(parts)
    }
}

impl Serialize for IntervalSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for IntervalSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(s: &str) -> IntervalSet {
        s.parse().unwrap()
    }

    #[test]
    fn lattice_operations() {
        assert_eq!(iv_union(&iv("[0,2]"), &iv("[2,3]")), iv("[0,3]"));
        assert_eq!(iv_intersect(&iv("[0,2]"), &iv("[1,3]")), iv("[1,2]"));
        assert_eq!(iv_intersect(&iv("[0,1]+[2,3]"), &iv("[1,3]")), iv("[1,1]∪[2,3]"));
        assert_eq!(iv_intersect(&iv("[0,1]"), &iv("[2,3]")), IntervalSet::empty());
    }

    #[test]
    fn star_examples() {
        assert_eq!(iv_star(&iv("[0,2]"), &iv("[1,3]")), iv("[0,1]+[2,3]"));
        assert_eq!(iv_star(&iv("[0,2]"), &iv("[0,3]")), iv("[2,3]"));
        assert!(iv_star(&iv("[0,1]+[5/2,3]"), &iv("[0,1]+[5/2,3]")).is_empty());
        // An isolated point survives.
        assert_eq!(iv_star(&iv("[0,0]"), &iv("[1,2]")), iv("[0,0]+[1,2]"));
        // A point removed from an interval leaves no trace after closure.
        assert_eq!(iv_star(&iv("[0,2]"), &iv("[1,1]")), iv("[0,2]"));
    }

    #[test]
    fn parse_and_display() {
        let s = iv("[0,2]+[5/2,3]");
        assert_eq!(s.to_string(), "[0,2]∪[5/2,3]");
        assert_eq!(iv(&s.to_string()), s);
        assert_eq!(iv("[1, 4/2]").to_string(), "[1,2]");
        assert_eq!(iv("{}"), IntervalSet::empty());
        assert!("[2,1]".parse::<IntervalSet>().is_err());
        assert!("[0,1/0]".parse::<IntervalSet>().is_err());
        assert!("0,1".parse::<IntervalSet>().is_err());
        assert_eq!(iv("[-1/2,0]").intervals()[0].0, Rational::new(-1, 2));
    }
}
