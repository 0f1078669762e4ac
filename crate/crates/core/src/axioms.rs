//! Structural axiom checkers and the classification built from them.
//!
//! Every checker quantifies over all tuples of the carrier. On a
//! [`PartialAlgebra`](crate::PartialAlgebra) an instance touching an undefined
//! cell is skipped and counted in `skipped_count`.

use serde::{Deserialize, Serialize};

use crate::algebra::{Op, Structure};
use crate::report::{CheckReport, Collector, FailFast, Sink, DEFAULT_WITNESS_CAP};

/// `p ⟹ q`, where an undefined premise skips the instance.
#[inline]
pub(crate) fn implies(p: Option<bool>, q: impl FnOnce() -> Option<bool>) -> Option<bool> {
    match p? {
        false => Some(true),
        true => q(),
    }
}

/// Equality of two possibly undefined results.
#[inline]
pub(crate) fn same(a: Option<usize>, b: Option<usize>) -> Option<bool> {
    Some(a? == b?)
}

/// The axiom groups that can be required or violated by a search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axiom {
    Lattice,
    Monoid,
    Metric,
    Contractions,
    Axiom2,
    Axiom4,
    Semiregular,
}

impl Axiom {
    pub const ALL: [Axiom; 7] = [
        Axiom::Lattice,
        Axiom::Monoid,
        Axiom::Metric,
        Axiom::Contractions,
        Axiom::Axiom2,
        Axiom::Axiom4,
        Axiom::Semiregular,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Axiom::Lattice => "lattice",
            Axiom::Monoid => "monoid",
            Axiom::Metric => "metric",
            Axiom::Contractions => "contractions",
            Axiom::Axiom2 => "axiom2",
            Axiom::Axiom4 => "axiom4",
            Axiom::Semiregular => "semiregular",
        }
    }

    pub fn from_id(id: &str) -> Option<Axiom> {
        Axiom::ALL.into_iter().find(|a| a.id() == id)
    }

    pub fn check<S: Structure + ?Sized>(self, alg: &S) -> CheckReport {
        self.check_with_cap(alg, DEFAULT_WITNESS_CAP)
    }

    pub fn check_with_cap<S: Structure + ?Sized>(self, alg: &S, cap: usize) -> CheckReport {
        let mut c = Collector::new(cap);
        self.run(alg, &mut c);
        c.finish(self.id())
    }

    /// True when no defined instance fails. Stops at the first failure.
    pub fn holds<S: Structure + ?Sized>(self, alg: &S) -> bool {
        let mut f = FailFast::default();
        self.run(alg, &mut f);
        !f.failed
    }

    pub(crate) fn run<S: Structure + ?Sized, K: Sink>(self, alg: &S, sink: &mut K) {
        match self {
            Axiom::Lattice => lattice_laws(alg, sink),
            Axiom::Monoid => {
                monoid_unit_laws(alg, sink);
                monoid_order_laws(alg, sink);
            }
            Axiom::Metric => metric_laws(alg, sink),
            Axiom::Contractions => contraction_laws(alg, sink),
            Axiom::Axiom2 => axiom2_law(alg, sink),
            Axiom::Axiom4 => axiom4_law(alg, sink),
            Axiom::Semiregular => semiregular_law(alg, sink),
        }
    }
}

pub fn check_lattice<S: Structure + ?Sized>(alg: &S) -> CheckReport {
    Axiom::Lattice.check(alg)
}

pub fn check_monoid<S: Structure + ?Sized>(alg: &S) -> CheckReport {
    Axiom::Monoid.check(alg)
}

pub fn check_metric<S: Structure + ?Sized>(alg: &S) -> CheckReport {
    Axiom::Metric.check(alg)
}

pub fn check_contractions<S: Structure + ?Sized>(alg: &S) -> CheckReport {
    Axiom::Contractions.check(alg)
}

pub fn check_axiom2<S: Structure + ?Sized>(alg: &S) -> CheckReport {
    Axiom::Axiom2.check(alg)
}

pub fn check_axiom4<S: Structure + ?Sized>(alg: &S) -> CheckReport {
    Axiom::Axiom4.check(alg)
}

pub fn check_semiregular<S: Structure + ?Sized>(alg: &S) -> CheckReport {
    Axiom::Semiregular.check(alg)
}

/// `a + (b ∨ c) = (a + b) ∨ (a + c)` and the same for `∧`. Not part of any
/// class; reported on request only.
pub fn check_distributivity<S: Structure + ?Sized>(alg: &S) -> CheckReport {
    let mut c = Collector::new(DEFAULT_WITNESS_CAP);
    let n = alg.size();
    for a in 0..n {
        for b in 0..n {
            for d in 0..n {
                let over = |lat: fn(&S, usize, usize) -> Option<usize>| {
                    same(
                        alg.add(a, lat(alg, b, d)?),
                        lat(alg, alg.add(a, b)?, alg.add(a, d)?),
                    )
                };
                c.record("add over join", &[a, b, d], over(|s, x, y| s.join(x, y)));
                c.record("add over meet", &[a, b, d], over(|s, x, y| s.meet(x, y)));
            }
        }
    }
    c.finish("distributivity")
}

fn lattice_laws<S: Structure + ?Sized, K: Sink>(alg: &S, sink: &mut K) {
    let n = alg.size();
    for a in 0..n {
        sink.record("join idempotent", &[a], same(alg.join(a, a), Some(a)));
        sink.record("meet idempotent", &[a], same(alg.meet(a, a), Some(a)));
    }
    for a in 0..n {
        for b in 0..n {
            if sink.done() {
                return;
            }
            if a < b {
                sink.record("join commutative", &[a, b], same(alg.join(a, b), alg.join(b, a)));
                sink.record("meet commutative", &[a, b], same(alg.meet(a, b), alg.meet(b, a)));
            }
            sink.record(
                "join absorbs meet",
                &[a, b],
                (|| same(alg.join(a, alg.meet(a, b)?), Some(a)))(),
            );
            sink.record(
                "meet absorbs join",
                &[a, b],
                (|| same(alg.meet(a, alg.join(a, b)?), Some(a)))(),
            );
            sink.record(
                "order consistency",
                &[a, b],
                (|| Some((alg.meet(a, b)? == a) == (alg.join(a, b)? == b)))(),
            );
        }
    }
    for a in 0..n {
        for b in 0..n {
            if sink.done() {
                return;
            }
            for c in 0..n {
                sink.record(
                    "join associative",
                    &[a, b, c],
                    (|| same(alg.join(alg.join(a, b)?, c), alg.join(a, alg.join(b, c)?)))(),
                );
                sink.record(
                    "meet associative",
                    &[a, b, c],
                    (|| same(alg.meet(alg.meet(a, b)?, c), alg.meet(a, alg.meet(b, c)?)))(),
                );
            }
        }
    }
}

/// Commutativity of `+` and `0` as its identity.
fn monoid_unit_laws<S: Structure + ?Sized, K: Sink>(alg: &S, sink: &mut K) {
    let n = alg.size();
    let z = alg.zero();
    for a in 0..n {
        sink.record("identity", &[a], same(alg.add(z, a), Some(a)));
        for b in a + 1..n {
            sink.record("add commutative", &[a, b], same(alg.add(a, b), alg.add(b, a)));
        }
    }
}

/// Associativity of `+` and isotonicity `a ≤ b ⟹ a + c ≤ b + c`.
fn monoid_order_laws<S: Structure + ?Sized, K: Sink>(alg: &S, sink: &mut K) {
    let n = alg.size();
    for a in 0..n {
        for b in 0..n {
            if sink.done() {
                return;
            }
            for c in 0..n {
                sink.record(
                    "add associative",
                    &[a, b, c],
                    (|| same(alg.add(alg.add(a, b)?, c), alg.add(a, alg.add(b, c)?)))(),
                );
                sink.record(
                    "isotone",
                    &[a, b, c],
                    implies(alg.leq(a, b), || alg.leq(alg.add(a, c)?, alg.add(b, c)?)),
                );
            }
        }
    }
}

fn metric_laws<S: Structure + ?Sized, K: Sink>(alg: &S, sink: &mut K) {
    let n = alg.size();
    let z = alg.zero();
    for a in 0..n {
        for b in 0..n {
            sink.record("M1", &[a, b], (|| {
                let d = alg.star(a, b)?;
                Some(alg.leq(z, d)? && ((d == z) == (a == b)))
            })());
            if a < b {
                sink.record("M2", &[a, b], same(alg.star(a, b), alg.star(b, a)));
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            if sink.done() {
                return;
            }
            for c in 0..n {
                sink.record(
                    "M3",
                    &[a, b, c],
                    (|| alg.leq(alg.star(a, b)?, alg.add(alg.star(a, c)?, alg.star(c, b)?)?))(),
                );
            }
        }
    }
}

fn contraction_laws<S: Structure + ?Sized, K: Sink>(alg: &S, sink: &mut K) {
    let n = alg.size();
    for op in Op::ALL {
        for a in 0..n {
            if sink.done() {
                return;
            }
            for x in 0..n {
                for y in 0..n {
                    sink.record(
                        op.name(),
                        &[a, x, y],
                        (|| {
                            let image = alg.star(alg.cell(op, a, x)?, alg.cell(op, a, y)?)?;
                            alg.leq(image, alg.star(x, y)?)
                        })(),
                    );
                }
            }
        }
    }
}

fn axiom2_law<S: Structure + ?Sized, K: Sink>(alg: &S, sink: &mut K) {
    let n = alg.size();
    for a in 0..n {
        if sink.done() {
            return;
        }
        for b in 0..n {
            sink.record(
                "axiom2",
                &[a, b],
                (|| same(alg.add(alg.star(a, alg.meet(a, b)?)?, b), alg.join(a, b)))(),
            );
        }
    }
}

fn axiom4_law<S: Structure + ?Sized, K: Sink>(alg: &S, sink: &mut K) {
    let n = alg.size();
    let z = alg.zero();
    for a in 0..n {
        if sink.done() {
            return;
        }
        for b in 0..n {
            sink.record(
                "axiom4",
                &[a, b],
                (|| {
                    let top = alg.join(a, b)?;
                    same(alg.meet(alg.star(a, top)?, alg.star(b, top)?), Some(z))
                })(),
            );
        }
    }
}

fn semiregular_law<S: Structure + ?Sized, K: Sink>(alg: &S, sink: &mut K) {
    let z = alg.zero();
    for a in 0..alg.size() {
        sink.record(
            "semiregular",
            &[a],
            implies(alg.leq(z, a), || same(alg.star(a, z), Some(a))),
        );
    }
}

/// Reflexive, antisymmetric and transitive derived order.
fn order_laws<S: Structure + ?Sized, K: Sink>(alg: &S, sink: &mut K) {
    let n = alg.size();
    for a in 0..n {
        sink.record("reflexive", &[a], alg.leq(a, a));
        for b in 0..n {
            sink.record(
                "antisymmetric",
                &[a, b],
                implies(alg.leq(a, b), || implies(alg.leq(b, a), || Some(a == b))),
            );
            for c in 0..n {
                sink.record(
                    "transitive",
                    &[a, b, c],
                    implies(alg.leq(a, b), || implies(alg.leq(b, c), || alg.leq(a, c))),
                );
            }
        }
    }
}

/// Membership of an algebra in each class of the hierarchy, with the
/// component reports it was computed from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub autometrized: bool,
    pub lattice_ordered_autometrized: bool,
    pub semiregular: bool,
    pub representable: bool,
    pub al_monoid: bool,
    pub reports: Vec<CheckReport>,
}

impl Classification {
    pub fn report(&self, axiom: Axiom) -> &CheckReport {
        self.reports
            .iter()
            .find(|r| r.name == axiom.id())
            .expect("classification holds one report per axiom")
    }
}

pub fn classify<S: Structure + ?Sized>(alg: &S) -> Classification {
    classify_with_cap(alg, DEFAULT_WITNESS_CAP)
}

pub fn classify_with_cap<S: Structure + ?Sized>(alg: &S, cap: usize) -> Classification {
    let reports: Vec<CheckReport> = Axiom::ALL
        .iter()
        .map(|ax| ax.check_with_cap(alg, cap))
        .collect();
    let ok = |ax: Axiom| reports.iter().any(|r| r.name == ax.id() && r.passed);

    let mut unit = FailFast::default();
    monoid_unit_laws(alg, &mut unit);
    let mut order = FailFast::default();
    order_laws(alg, &mut order);

    let autometrized = !unit.failed && !order.failed && ok(Axiom::Metric);
    let lattice_ordered_autometrized = ok(Axiom::Lattice) && ok(Axiom::Monoid) && ok(Axiom::Metric);
    let semiregular = autometrized && ok(Axiom::Semiregular);
    let representable =
        lattice_ordered_autometrized && ok(Axiom::Semiregular) && ok(Axiom::Contractions);
    let al_monoid = lattice_ordered_autometrized
        && ok(Axiom::Axiom2)
        && ok(Axiom::Contractions)
        && ok(Axiom::Axiom4);
    Classification {
        autometrized,
        lattice_ordered_autometrized,
        semiregular,
        representable,
        al_monoid,
        reports,
    }
}

/// Fail-fast AL-monoid membership test.
pub fn is_al_monoid<S: Structure + ?Sized>(alg: &S) -> bool {
    [
        Axiom::Axiom2,
        Axiom::Axiom4,
        Axiom::Lattice,
        Axiom::Monoid,
        Axiom::Metric,
        Axiom::Contractions,
    ]
    .into_iter()
    .all(|ax| ax.holds(alg))
}
