//! Exhaustive checks of the metric-geometry statements about AL-monoids.
//!
//! Each check quantifies over every tuple of the carrier and reports
//! counterexamples. On an AL-monoid the theorem checks are expected to pass;
//! the predicate checks (t1, β, convexity) describe the algebra and may
//! legitimately fail.

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::Structure;
use crate::axioms::{implies, is_al_monoid, same};
use crate::report::{CheckReport, Collector, Sink, DEFAULT_WITNESS_CAP};

use super::linear::{b_linear_labeling, d_linear_labeling, Betweenness};
use super::{atoms, between, fixty, incomparable_pair, lattice_between_opt, subgeometry, triangles, Triangle};

fn collector() -> Collector {
    Collector::new(DEFAULT_WITNESS_CAP)
}

/// No triangle has three equal sides.
pub fn check_no_equilateral<S: Structure + ?Sized>(alg: &S) -> CheckReport {
    let mut c = collector();
    for (a, b, d) in triangles(alg.size()) {
        let t = Triangle { a, b, c: d };
        c.record(
            "equilateral",
            &[a, b, d],
            t.sides(alg).map(|[x, y, z]| !(x == y && y == z)),
        );
    }
    c.finish("no_equilateral")
}

/// For every triangle: fixty ⇔ (`a∨b = b∨c = c∨a` and `a∧b∧c = 0`), and
/// fixty ⇔ (the side triangle has fixty and `{0,a,b,c}` is a subgeometry).
pub fn fixty_equivalence_check<S: Structure + ?Sized>(alg: &S) -> CheckReport {
    let mut c = collector();
    let z = alg.zero();
    for (a, b, d) in triangles(alg.size()) {
        let has = fixty(alg, a, b, d);
        let joins_meet = (|| {
            let j = alg.join(a, b)?;
            Some(j == alg.join(b, d)? && j == alg.join(d, a)? && alg.meet(alg.meet(a, b)?, d)? == z)
        })();
        let derived = (|| {
            let (p, q, r) = (alg.star(a, b)?, alg.star(b, d)?, alg.star(d, a)?);
            let distinct = p != q && q != r && p != r;
            Some(distinct && fixty(alg, p, q, r)? && subgeometry(alg, &[z, a, b, d])?)
        })();
        let t = [a, b, d];
        c.record("fixty implies equal joins and zero meet", &t, implies(has, || joins_meet));
        c.record("equal joins and zero meet imply fixty", &t, implies(joins_meet, || has));
        c.record("fixty implies derived fixty and subgeometry", &t, implies(has, || derived));
        c.record("derived fixty and subgeometry imply fixty", &t, implies(derived, || has));
    }
    c.finish("fixty_equivalence")
}

/// A chain has no fixty triangle, a non-chain has one, and a non-chain has
/// a triangle that is not isosceles.
pub fn check_chain_theorems<S: Structure + ?Sized>(alg: &S) -> CheckReport {
    let mut c = collector();
    match incomparable_pair(alg) {
        None => {
            for (a, b, d) in triangles(alg.size()) {
                c.record("fixty triangle in a chain", &[a, b, d], fixty(alg, a, b, d).map(|f| !f));
            }
        }
        Some((a, b)) => {
            let mut some_fixty = false;
            let mut some_scalene = false;
            for (x, y, w) in triangles(alg.size()) {
                let t = Triangle { a: x, b: y, c: w };
                some_fixty |= fixty(alg, x, y, w) == Some(true);
                some_scalene |=
                    matches!(t.sides(alg), Some([p, q, r]) if p != q && q != r && p != r);
            }
            c.record("non-chain without fixty triangle", &[a, b], Some(some_fixty));
            c.record("non-chain with only isosceles triangles", &[a, b], Some(some_scalene));
        }
    }
    c.finish("chain_theorems")
}

fn transitivity<S: Structure + ?Sized>(alg: &S, name: &'static str, second: bool) -> CheckReport {
    let mut c = collector();
    let n = alg.size();
    for a in 0..n {
        for b in 0..n {
            for d in 0..n {
                let first = between(alg, a, b, d);
                if first == Some(false) {
                    c.checked_many(n as u64);
                    continue;
                }
                for e in 0..n {
                    let premise = (|| Some(first? && between(alg, a, e, b)?))();
                    let outcome = implies(premise, || {
                        if second {
                            between(alg, a, e, d)
                        } else {
                            between(alg, e, b, d)
                        }
                    });
                    c.record(name, &[a, b, d, e], outcome);
                }
            }
        }
    }
    c.finish(name)
}

/// `B(a,b,c) ∧ B(a,d,b) ⟹ B(d,b,c)` with metric betweenness. Witness
/// tuples are `(a, b, c, d)`.
pub fn check_t1<S: Structure + ?Sized>(alg: &S) -> CheckReport {
    transitivity(alg, "t1", false)
}

/// `B(a,b,c) ∧ B(a,d,b) ⟹ B(a,d,c)` with metric betweenness.
pub fn check_t2<S: Structure + ?Sized>(alg: &S) -> CheckReport {
    transitivity(alg, "t2", true)
}

/// Special inner property: `B(a,b,c) ∧ B(a,c,b) ⟹ b = c`.
pub fn check_beta<S: Structure + ?Sized>(alg: &S) -> CheckReport {
    let mut c = collector();
    let n = alg.size();
    for a in 0..n {
        for b in 0..n {
            for d in (0..n).filter(|&d| d != b) {
                c.record(
                    "beta",
                    &[a, b, d],
                    (|| Some(!(between(alg, a, b, d)? && between(alg, a, d, b)?)))(),
                );
            }
        }
    }
    c.finish("beta")
}

/// `a∗b + b∗c = (a∧c)∗b + b∗(a∨c)`, its corollary
/// `(a,b,c)M ⇔ (a∧c, b, a∨c)M`, and `a ≤ b ≤ c ⟹ (a,b,c)M`.
pub fn check_quadrilateral_lemma<S: Structure + ?Sized>(alg: &S) -> CheckReport {
    let mut c = collector();
    let n = alg.size();
    for a in 0..n {
        for b in 0..n {
            for d in 0..n {
                let t = [a, b, d];
                let (lo, hi) = match (alg.meet(a, d), alg.join(a, d)) {
                    (Some(lo), Some(hi)) => (lo, hi),
                    _ => {
                        c.record("sum identity", &t, None);
                        c.record("corollary", &t, None);
                        c.record("monotone", &t, None);
                        continue;
                    }
                };
                c.record("sum identity", &t, (|| {
                    same(
                        alg.add(alg.star(a, b)?, alg.star(b, d)?),
                        alg.add(alg.star(lo, b)?, alg.star(b, hi)?),
                    )
                })());
                c.record("corollary", &t, (|| {
                    Some(between(alg, a, b, d)? == between(alg, lo, b, hi)?)
                })());
                c.record("monotone", &t, implies(
                    (|| Some(alg.leq(a, b)? && alg.leq(b, d)?))(),
                    || between(alg, a, b, d),
                ));
            }
        }
    }
    c.finish("quadrilateral_lemma")
}

/// `(a,b,c)L ⟹ (a,b,c)M`.
pub fn check_l_implies_m<S: Structure + ?Sized>(alg: &S) -> CheckReport {
    let mut c = collector();
    let n = alg.size();
    for a in 0..n {
        for b in 0..n {
            for d in 0..n {
                c.record(
                    "L implies M",
                    &[a, b, d],
                    implies(lattice_between_opt(alg, a, b, d), || between(alg, a, b, d)),
                );
            }
        }
    }
    c.finish("l_implies_m")
}

/// The three ptolemaic inequalities over all quadruples, one per pairing
/// of `{a,b,c,d}` into two opposite pairs.
pub fn check_ptolemaic<S: Structure + ?Sized>(alg: &S) -> CheckReport {
    let mut c = collector();
    let n = alg.size();
    for a in 0..n {
        for b in 0..n {
            for d in 0..n {
                for e in 0..n {
                    let t = [a, b, d, e];
                    let pairs = (|| {
                        Some([
                            alg.meet(alg.star(a, b)?, alg.star(d, e)?)?,
                            alg.meet(alg.star(a, d)?, alg.star(b, e)?)?,
                            alg.meet(alg.star(a, e)?, alg.star(b, d)?)?,
                        ])
                    })();
                    let Some([ab_cd, ac_bd, ad_bc]) = pairs else {
                        c.record("P1", &t, None);
                        c.record("P2", &t, None);
                        c.record("P3", &t, None);
                        continue;
                    };
                    let bound = |x: usize, y: usize, w: usize| Some(alg.leq(x, alg.add(y, w)?)?);
                    c.record("P1", &t, bound(ab_cd, ac_bd, ad_bc));
                    c.record("P2", &t, bound(ac_bd, ab_cd, ad_bc));
                    c.record("P3", &t, bound(ad_bc, ab_cd, ac_bd));
                }
            }
        }
    }
    c.finish("ptolemaic")
}

/// Every B-linear 3- and 4-point set is D-linear.
pub fn check_b_implies_d<S: Structure + ?Sized>(alg: &S) -> CheckReport {
    let mut c = collector();
    for k in 3..=4 {
        for set in (0..alg.size()).combinations(k) {
            let b = b_linear_labeling(alg, &set, Betweenness::Metric).is_some();
            c.record(
                "B-linear implies D-linear",
                &set,
                Some(!b || d_linear_labeling(alg, &set).is_some()),
            );
        }
    }
    c.finish("b_implies_d")
}

/// `a ≤ b ⟹ a∗c ≤ b∗c` for every `c` ("star monotone"), and the same under
/// the extra hypothesis `c ≤ a` ("star monotone above c"). Recorded as a
/// finding: the argument for the first uses `a∗c + c = a`, which needs
/// `c ≤ a`, and cancellation, which a monoid need not have.
pub fn check_star_monotone<S: Structure + ?Sized>(alg: &S) -> CheckReport {
    let mut c = collector();
    let n = alg.size();
    for a in 0..n {
        for b in 0..n {
            for d in 0..n {
                let premise = alg.leq(a, b);
                let conclusion = || alg.leq(alg.star(a, d)?, alg.star(b, d)?);
                c.record("star monotone", &[a, b, d], implies(premise, conclusion));
                let above = (|| Some(premise? && alg.leq(d, a)?))();
                c.record("star monotone above c", &[a, b, d], implies(above, conclusion));
            }
        }
    }
    c.finish("star_monotone")
}

/// Whether all three sides of a triangle satisfy `x + y = x ∨ y` pairwise.
fn sums_are_joins<S: Structure + ?Sized>(alg: &S, sides: [usize; 3]) -> Option<bool> {
    for (x, y) in [(0, 1), (1, 2), (0, 2)] {
        if alg.add(sides[x], sides[y])? != alg.join(sides[x], sides[y])? {
            return Some(false);
        }
    }
    Some(true)
}

/// Isosceles triangles whose pairwise side sums are joins: their vertices
/// break β, and no such triangle exists when t1 holds.
pub fn check_isosceles_lemmas<S: Structure + ?Sized>(alg: &S) -> CheckReport {
    let mut c = collector();
    let has_t1 = check_t1(alg).passed;
    for t in super::find_isosceles(alg) {
        let [a, b, d] = t.vertices();
        let Some(sides) = t.sides(alg) else {
            continue;
        };
        let special = sums_are_joins(alg, sides);
        let breaks_beta = || {
            let mut any = false;
            for p in [a, b, d].into_iter().permutations(3) {
                any |= between(alg, p[0], p[1], p[2])? && between(alg, p[0], p[2], p[1])?;
            }
            Some(any)
        };
        c.record("isosceles with join sums breaks beta", &[a, b, d], implies(special, breaks_beta));
        c.record(
            "t1 excludes isosceles with join sums",
            &[a, b, d],
            implies(special, || Some(!has_t1)),
        );
    }
    c.finish("isosceles_lemmas")
}

/// Every pair `a ≠ b` has some `x ∉ {a, b}` metrically between them.
pub fn check_metrically_convex<S: Structure + ?Sized>(alg: &S) -> CheckReport {
    let mut c = collector();
    let n = alg.size();
    for a in 0..n {
        for b in (0..n).filter(|&b| b != a) {
            let found = (0..n)
                .filter(|&x| x != a && x != b)
                .any(|x| between(alg, a, x, b) == Some(true));
            c.record("no point between", &[a, b], Some(found));
        }
    }
    c.finish("metrically_convex")
}

/// The four conditions of the betweenness equivalence theorem, evaluated
/// independently. Condition (3) is evaluated with hypothesis `a ≤ b∨c` as
/// stated and with `a ≥ b∨c` as used in its proof.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FourWayEquivalence {
    pub lattice_iff_metric: bool,
    pub t1: bool,
    pub condition3_stated: bool,
    pub condition3_proof: bool,
    pub beta: bool,
    pub report: CheckReport,
}

fn condition3<S: Structure + ?Sized>(alg: &S, upper: bool) -> Option<Vec<usize>> {
    let n = alg.size();
    for a in 0..n {
        for b in 0..n {
            for d in 0..n {
                let holds = (|| {
                    let j = alg.join(b, d)?;
                    let hyp_order = if upper { alg.leq(j, a)? } else { alg.leq(a, j)? };
                    let hyp = hyp_order && alg.leq(alg.star(a, d)?, alg.star(a, b)?)?;
                    Some(!hyp || alg.leq(b, d)?)
                })();
                if holds == Some(false) {
                    return Some(vec![a, b, d]);
                }
            }
        }
    }
    None
}

fn lattice_iff_metric<S: Structure + ?Sized>(alg: &S) -> Option<Vec<usize>> {
    let n = alg.size();
    (0..n)
        .flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |d| (a, b, d))))
        .find(|&(a, b, d)| {
            matches!((lattice_between_opt(alg, a, b, d), between(alg, a, b, d)), (Some(l), Some(m)) if l != m)
        })
        .map(|(a, b, d)| vec![a, b, d])
}

/// Passes iff conditions (1), (2), (4) agree and at least one reading of
/// (3) agrees with them. On disagreement the first counterexample of each
/// false condition is listed.
pub fn check_four_way_equivalence<S: Structure + ?Sized>(alg: &S) -> FourWayEquivalence {
    let c1 = lattice_iff_metric(alg);
    let t1 = check_t1(alg);
    let c3_stated = condition3(alg, false);
    let c3_proof = condition3(alg, true);
    let beta = check_beta(alg);

    let flags = FourWayEquivalence {
        lattice_iff_metric: c1.is_none(),
        t1: t1.passed,
        condition3_stated: c3_stated.is_none(),
        condition3_proof: c3_proof.is_none(),
        beta: beta.passed,
        report: CheckReport::vacuous("four_way_equivalence"),
    };
    let base = flags.lattice_iff_metric;
    let agree = flags.t1 == base
        && flags.beta == base
        && (flags.condition3_stated == base || flags.condition3_proof == base);

    let mut c = collector();
    c.record("conditions agree", &[], Some(agree));
    if !agree {
        let first = |r: &CheckReport| r.first_witness().map(|w| w.tuple.clone());
        let counterexamples = [
            ("(1) L iff M fails", c1),
            ("(2) t1 fails", first(&t1)),
            ("(3) stated reading fails", c3_stated),
            ("(3) proof reading fails", c3_proof),
            ("(4) beta fails", first(&beta)),
        ];
        for (law, tuple) in counterexamples {
            if let Some(t) = tuple {
                c.fail(law, &t);
            }
        }
    }
    FourWayEquivalence {
        report: c.finish("four_way_equivalence"),
        ..flags
    }
}

/// Results of the theorem and predicate checks on one algebra.
///
/// `theorems` is empty unless the algebra is an AL-monoid; `predicates` are
/// evaluated for every algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremSuiteReport {
    pub al_monoid: bool,
    pub theorems: Vec<CheckReport>,
    pub four_way: Option<FourWayEquivalence>,
    pub predicates: Vec<CheckReport>,
    pub findings: Vec<CheckReport>,
    pub is_chain: bool,
    pub has_t1: bool,
    pub has_t2: bool,
    pub has_beta: bool,
    pub is_ptolemaic: bool,
    pub is_metrically_convex: bool,
    pub atoms: Vec<usize>,
    pub fixty_triangles: Vec<Triangle>,
    pub equilateral: Option<Triangle>,
}

impl TheoremSuiteReport {
    /// All theorem checks passed (vacuously true for non-AL-monoids).
    pub fn theorems_passed(&self) -> bool {
        self.theorems.iter().all(|r| r.passed)
            && self.four_way.as_ref().is_none_or(|f| f.report.passed)
    }

    pub fn theorem(&self, name: &str) -> Option<&CheckReport> {
        self.theorems.iter().find(|r| r.name == name)
    }

    pub fn predicate(&self, name: &str) -> Option<&CheckReport> {
        self.predicates.iter().find(|r| r.name == name)
    }
}

type CheckFn<'a> = Box<dyn Fn() -> CheckReport + Send + Sync + 'a>;

fn run_all(checks: Vec<CheckFn<'_>>) -> Vec<CheckReport> {
    checks.par_iter().map(|f| f()).collect()
}

/// Runs every predicate check and, for AL-monoids, every theorem check.
/// Independent checks run in parallel; the report order is fixed.
pub fn run_theorem_suite<S: Structure + ?Sized>(alg: &S) -> TheoremSuiteReport {
    let al = is_al_monoid(alg);
    let predicates = run_all(vec![
        Box::new(|| check_t1(alg)),
        Box::new(|| check_t2(alg)),
        Box::new(|| check_beta(alg)),
        Box::new(|| check_ptolemaic(alg)),
        Box::new(|| check_metrically_convex(alg)),
    ]);
    let (theorems, four_way, findings) = if al {
        let mut theorems = run_all(vec![
            Box::new(|| check_no_equilateral(alg)),
            Box::new(|| fixty_equivalence_check(alg)),
            Box::new(|| check_chain_theorems(alg)),
            Box::new(|| check_l_implies_m(alg)),
            Box::new(|| check_quadrilateral_lemma(alg)),
            Box::new(|| check_b_implies_d(alg)),
            Box::new(|| check_isosceles_lemmas(alg)),
        ]);
        theorems.insert(3, predicates[1].clone());
        theorems.insert(6, predicates[3].clone());
        let findings = vec![check_star_monotone(alg)];
        (theorems, Some(check_four_way_equivalence(alg)), findings)
    } else {
        (Vec::new(), None, Vec::new())
    };
    TheoremSuiteReport {
        al_monoid: al,
        theorems,
        four_way,
        is_chain: super::is_chain(alg),
        has_t1: predicates[0].passed,
        has_t2: predicates[1].passed,
        has_beta: predicates[2].passed,
        is_ptolemaic: predicates[3].passed,
        is_metrically_convex: predicates[4].passed,
        predicates,
        findings,
        atoms: atoms(alg),
        fixty_triangles: super::find_fixty(alg),
        equilateral: super::find_equilateral(alg),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{make_boolean, make_chain, ChainMode};

    #[test]
    fn boolean_suite() {
        let s = run_theorem_suite(&make_boolean(2).unwrap());
        assert!(s.al_monoid);
        assert!(s.theorems_passed(), "{s:#?}");
        assert!(!s.is_chain && s.has_t2 && s.is_ptolemaic);
        // Nothing lies strictly between 0 and an atom.
        assert!(!s.is_metrically_convex);
        assert!(s.predicate("metrically_convex").unwrap().has_tuple(&[0, 1]));
        assert!(!s.predicate("metrically_convex").unwrap().has_tuple(&[0, 3]));
        assert_eq!(s.atoms, vec![1, 2]);
        let mono = &s.findings[0];
        assert!(mono.has_witness("star monotone", &[0, 1, 1]));
        assert!(mono.witnesses.iter().all(|w| w.law == "star monotone"));
        assert_eq!(s.fixty_triangles, vec![Triangle::new(1, 2, 3).unwrap()]);
        let fw = s.four_way.unwrap();
        assert!(fw.lattice_iff_metric && fw.t1 && fw.beta && fw.condition3_proof);
        assert!(!fw.condition3_stated);
    }

    #[test]
    fn chain_suite() {
        let s = run_theorem_suite(&make_chain(3, ChainMode::TruncatedSum).unwrap());
        assert!(s.theorems_passed(), "{s:#?}");
        assert!(s.is_chain && s.has_t1);
        let fw = s.four_way.unwrap();
        assert!(fw.lattice_iff_metric && fw.t1 && fw.condition3_proof && fw.beta);
    }

    #[test]
    fn two_chain_is_not_convex() {
        let r = check_metrically_convex(&make_chain(2, ChainMode::Max).unwrap());
        assert!(!r.passed);
        assert!(r.has_tuple(&[0, 1]));
    }

    #[test]
    fn beta_never_flags_equal_points() {
        let r = check_beta(&make_chain(4, ChainMode::Max).unwrap());
        assert!(r.witnesses.iter().all(|w| w.tuple[1] != w.tuple[2]));
    }

    #[test]
    fn max_chain_breaks_beta_and_t1() {
        // Sides of (0,1,2) are 1, 2, 2 and max is both + and ∨.
        let alg = make_chain(3, ChainMode::Max).unwrap();
        assert!(!check_beta(&alg).passed);
        assert!(!check_t1(&alg).passed);
        assert!(check_isosceles_lemmas(&alg).passed);
    }
}
