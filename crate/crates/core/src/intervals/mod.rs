//! Exact closed subsets of ℝ given as finite unions of rational intervals.
//!
//! `+` and `∨` are union, `∧` is intersection and `∗` is the closure of the
//! symmetric difference. The two demos recompute the interval
//! counterexamples exactly.

mod set;

use serde::{Deserialize, Serialize};

use crate::report::{CheckReport, Collector, Sink, DEFAULT_WITNESS_CAP};

pub use set::{iv_intersect, iv_star, iv_union, IntervalSet, Rational};

/// A demo's verdict together with the sets it computed, in evaluation order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalDemo {
    pub report: CheckReport,
    pub sets: Vec<(String, IntervalSet)>,
}

fn iv(s: &str) -> IntervalSet {
    s.parse().expect("demo literal")
}

/// `x = [0,2]`, `y = [2,3]`: `(x∗(x∨y)) ∧ (y∗(x∨y))` is `{2}`, not `∅`.
///
/// The report passes when the meet is nonempty and equals `[2,2]`.
pub fn demo_axiom4_failure() -> IntervalDemo {
    let (x, y) = (iv("[0,2]"), iv("[2,3]"));
    let top = iv_union(&x, &y);
    let left = iv_star(&x, &top);
    let right = iv_star(&y, &top);
    let meet = iv_intersect(&left, &right);

    let mut c = Collector::new(DEFAULT_WITNESS_CAP);
    c.record("meet is nonempty", &[], Some(!meet.is_empty()));
    c.record("meet is {2}", &[], Some(meet == IntervalSet::point(2)));
    IntervalDemo {
        report: c.finish("interval_axiom4_failure"),
        sets: vec![
            ("x".into(), x),
            ("y".into(), y),
            ("x∨y".into(), top),
            ("x∗(x∨y)".into(), left),
            ("y∗(x∨y)".into(), right),
            ("meet".into(), meet),
        ],
    }
}

/// `A = [0,2]`, `B = [1,3]`, `C = [0,1]∪[2,3]` form a triangle with fixty
/// whose common meet `{1}∪{2}` is not `∅`.
pub fn demo_fixty_nonzero_meet() -> IntervalDemo {
    let (a, b, c) = (iv("[0,2]"), iv("[1,3]"), iv("[0,1]∪[2,3]"));
    let ab = iv_star(&a, &b);
    let bc = iv_star(&b, &c);
    let ca = iv_star(&c, &a);
    let meet = iv_intersect(&iv_intersect(&a, &b), &c);

    let mut col = Collector::new(DEFAULT_WITNESS_CAP);
    col.record("A∗B = C", &[], Some(ab == c));
    col.record("B∗C = A", &[], Some(bc == a));
    col.record("C∗A = B", &[], Some(ca == b));
    col.record("meet is nonempty", &[], Some(!meet.is_empty()));
    col.record("meet is {1}∪{2}", &[], Some(meet == iv("[1,1]∪[2,2]")));
    IntervalDemo {
        report: col.finish("interval_fixty_nonzero_meet"),
        sets: vec![
            ("A".into(), a),
            ("B".into(), b),
            ("C".into(), c),
            ("A∗B".into(), ab),
            ("B∗C".into(), bc),
            ("C∗A".into(), ca),
            ("A∧B∧C".into(), meet),
        ],
    }
}

/// Checks `a∗(a∧b) + (a∧b) = a` on each pair; witness tuples are pair indices.
pub fn iv_check_axiom2_sample(pairs: &[(IntervalSet, IntervalSet)]) -> CheckReport {
    let mut c = Collector::new(DEFAULT_WITNESS_CAP);
    for (i, (a, b)) in pairs.iter().enumerate() {
        let m = iv_intersect(a, b);
        c.record("axiom2", &[i], Some(iv_union(&iv_star(a, &m), &m) == *a));
    }
    c.finish("interval_axiom2_sample")
}

/// Names accepted by [`run_demo`].
pub const DEMOS: [&str; 2] = ["ex", "fixty"];

pub fn run_demo(name: &str) -> Option<IntervalDemo> {
    match name {
        "ex" => Some(demo_axiom4_failure()),
        "fixty" => Some(demo_fixty_nonzero_meet()),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axiom4_demo() {
        let d = demo_axiom4_failure();
        assert!(d.report.passed);
        assert_eq!(d.sets[3].1, iv("[2,3]"));
        assert_eq!(d.sets[4].1, iv("[0,2]"));
        assert_eq!(d.sets.last().unwrap().1.to_string(), "[2,2]");
    }

    #[test]
    fn fixty_demo() {
        let d = demo_fixty_nonzero_meet();
        assert!(d.report.passed, "{:?}", d.report);
        assert_eq!(d.sets[4].1, iv("[0,2]"));
        assert_eq!(d.sets.last().unwrap().1.to_string(), "[1,1]∪[2,2]");
    }

    #[test]
    fn axiom2_samples() {
        let pairs = vec![
            (iv("[0,2]"), iv("[2,3]")),
            (iv("[0,1]+[5,6]"), iv("[0,1]+[5,6]")),
            (iv("[0,1]∪[2,3]"), iv("[1,2]")),
        ];
        let r = iv_check_axiom2_sample(&pairs);
        assert!(r.passed);
        assert_eq!(r.checked_count, 3);
        assert!(run_demo("bogus").is_none());
    }
}
