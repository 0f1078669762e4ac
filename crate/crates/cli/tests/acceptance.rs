//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

use std::collections::BTreeSet;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use almg_core::axioms::Axiom;
use almg_core::geometry::{check_star_monotone, find_fixty, has_fixty, is_chain, run_theorem_suite, Triangle};
use almg_core::intervals::{run_demo, IntervalSet};
use almg_core::models::{make_boolean, make_chain, ChainMode, ZWindowU, ZWindowUV};
use almg_core::search::{canonical_form, enumerate_al_monoids, DEFAULT_BUDGET};
use almg_core::*;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t < limit, format!("took {t:?}, limit {limit:?}"))?;
    Ok(t)
}

fn boolean_b2() -> Outcome {
    let start = Instant::now();
    let b2 = make_boolean(2).map_err(|e| e.to_string())?;
    ensure(classify(&b2).al_monoid, "B2 is not classified as an AL-monoid")?;
    let suite = run_theorem_suite(&b2);
    ensure(suite.theorems_passed(), format!("theorem violations: {:?}", suite.theorems))?;
    let ptolemaic = suite.predicate("ptolemaic").ok_or("no ptolemaic check")?;
    ensure(ptolemaic.passed && ptolemaic.checked_count >= 256, "ptolemaic not checked on all quadruples")?;
    let t = within(start, Duration::from_secs(1))?;
    Ok(format!("{} theorem checks, {t:?}", suite.theorems.len()))
}

fn chains() -> Outcome {
    let start = Instant::now();
    for mode in [ChainMode::TruncatedSum, ChainMode::Max] {
        for n in 1..=16 {
            let c = make_chain(n, mode).map_err(|e| e.to_string())?;
            ensure(is_al_monoid(&c), format!("{mode:?} chain {n} is not an AL-monoid"))?;
            ensure(is_chain(&c), format!("{mode:?} chain {n} is not a chain"))?;
            ensure(find_fixty(&c).is_empty(), format!("{mode:?} chain {n} has a fixty triangle"))?;
        }
    }
    let t = within(start, Duration::from_secs(1))?;
    Ok(format!("32 chains, {t:?}"))
}

fn b2_fixty() -> Outcome {
    let b2 = make_boolean(2).map_err(|e| e.to_string())?;
    ensure(!is_chain(&b2), "B2 reported as a chain")?;
    let t = Triangle::new(1, 2, 3).map_err(|e| e.to_string())?;
    ensure(has_fixty(&b2, &t).map_err(|e| e.to_string())?, "triangle (1,2,3) has no fixty")?;
    Ok("fixty (1,2,3)".into())
}

fn demo_set(name: &str, key: &str) -> Result<IntervalSet, String> {
    let demo = run_demo(name).ok_or("missing demo")?;
    ensure(demo.report.passed, format!("demo report failed: {:?}", demo.report.witnesses))?;
    demo.sets.into_iter().find(|(k, _)| k == key).map(|(_, s)| s).ok_or(format!("no set {key}"))
}

fn interval_ex() -> Outcome {
    let meet = demo_set("ex", "meet")?;
    ensure(meet == IntervalSet::point(2), format!("meet is {meet}"))?;
    Ok(format!("meet = {meet}"))
}

fn interval_fixty() -> Outcome {
    let iv = |s: &str| s.parse::<IntervalSet>().unwrap();
    let (a, b, c) = (iv("[0,2]"), iv("[1,3]"), iv("[0,1]∪[2,3]"));
    ensure(demo_set("fixty", "A∗B")? == c, "A∗B ≠ C")?;
    ensure(demo_set("fixty", "B∗C")? == a, "B∗C ≠ A")?;
    ensure(demo_set("fixty", "C∗A")? == b, "C∗A ≠ B")?;
    let meet = demo_set("fixty", "A∧B∧C")?;
    ensure(meet == iv("[1,1]∪[2,2]"), format!("meet is {meet}"))?;
    Ok(format!("meet = {meet}"))
}

fn z_u_window() -> Outcome {
    let w = ZWindowU::new(8);
    let alg = w.build().map_err(|e| e.to_string())?;
    let c = classify(&alg);
    let mut skipped = 0;
    for r in &c.reports {
        ensure(r.passed, format!("{} fails: {:?}", r.name, r.first_witness()))?;
        skipped += r.skipped_count;
    }
    ensure(skipped > 0, "no skipped instances")?;
    for a in w.integers() {
        let d = drl_difference(&alg, a, w.u()).map_err(|e| e.to_string())?;
        ensure(d.is_none(), format!("difference ({a}, u) exists"))?;
    }
    Ok(format!("{skipped} undefined instances skipped"))
}

fn z_uv_window() -> Outcome {
    let w = ZWindowUV::new(8);
    let alg = w.build().map_err(|e| e.to_string())?;
    let c = classify(&alg);
    for ax in [Axiom::Lattice, Axiom::Monoid, Axiom::Metric, Axiom::Axiom4] {
        let r = c.report(ax);
        ensure(r.passed, format!("{} fails: {:?}", r.name, r.first_witness()))?;
    }
    let a2 = c.report(Axiom::Axiom2);
    ensure(!a2.passed, "axiom2 holds")?;
    ensure(a2.has_witness("axiom2", &[w.v(), w.u()]), "no witness (v,u)")?;
    Ok("axiom2 witness (v,u)".into())
}

/// Symmetric tables over `0..n`, row-major.
fn symmetric_tables(n: usize) -> Vec<Vec<usize>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
    (0..n.pow(pairs.len() as u32))
        .map(|mut code| {
            let mut t = vec![0; n * n];
            for &(a, b) in &pairs {
                t[a * n + b] = code % n;
                t[b * n + a] = code % n;
                code /= n;
            }
            t
        })
        .collect()
}

/// Canonical forms of every AL-monoid on `n` elements, found by trying every
/// table for all four operations and every zero.
fn brute_force(n: usize) -> BTreeSet<Vec<u8>> {
    let tables = symmetric_tables(n);
    let mut out = BTreeSet::new();
    for join in &tables {
        for meet in &tables {
            for zero in 0..n {
                let lattice = FiniteAlgebra::from_fn(n, zero, |op, a, b| match op {
                    Op::Join => join[a * n + b],
                    Op::Meet => meet[a * n + b],
                    _ => a,
                })
                .unwrap();
                if !check_lattice(&lattice).passed {
                    continue;
                }
                for add in &tables {
                    for star in &tables {
                        let alg = FiniteAlgebra::from_fn(n, zero, |op, a, b| {
                            let t = match op {
                                Op::Add => add,
                                Op::Join => join,
                                Op::Meet => meet,
                                Op::Star => star,
                            };
                            t[a * n + b]
                        })
                        .unwrap();
                        if is_al_monoid(&alg) {
                            out.insert(canonical_form(&alg).unwrap());
                        }
                    }
                }
            }
        }
    }
    out
}

fn enumeration() -> Outcome {
    for n in [2, 3] {
        let r = enumerate_al_monoids(n, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        ensure(r.exhausted, format!("n={n} not exhausted"))?;
        let got: BTreeSet<Vec<u8>> = r.algebras.iter().map(|a| canonical_form(a).unwrap()).collect();
        ensure(got == brute_force(n), format!("n={n} differs from brute force"))?;
    }
    let start = Instant::now();
    let r = enumerate_al_monoids(4, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    ensure(r.exhausted, "n=4 not exhausted")?;
    let t = within(start, Duration::from_secs(600))?;
    for alg in &r.algebras {
        let suite = run_theorem_suite(alg);
        ensure(suite.al_monoid && suite.theorems_passed(), format!("theorem violation: {suite:?}"))?;
    }
    Ok(format!("{} algebras at n=4 in {t:?}, no violations", r.algebras.len()))
}

fn star_monotone() -> Outcome {
    let (mut total, mut failing) = (0, 0);
    for n in 1..=4 {
        let r = enumerate_al_monoids(n, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        for alg in &r.algebras {
            let rep = check_star_monotone(alg);
            total += 1;
            if !rep.passed {
                ensure(!rep.witnesses.is_empty(), "failure without witnesses")?;
                for w in &rep.witnesses {
                    let [a, b, c] = w.tuple[..] else { return Err("bad witness arity".into()) };
                    let lhs = alg.get(Op::Star, a, c);
                    let rhs = alg.get(Op::Star, b, c);
                    ensure(leq(alg, a, b) == Ok(true), "witness hypothesis a ≤ b fails")?;
                    if w.law == "star monotone" {
                        ensure(leq(alg, lhs, rhs) == Ok(false), "witness does not violate the law")?;
                    }
                }
                failing += 1;
            }
        }
    }
    Ok(format!("{failing} of {total} algebras have witnesses (finding)"))
}

fn almg(args: &[&str], threads: usize) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_almg"))
        .args(["--json", "--no-timing", "--threads", &threads.to_string()])
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    ensure(matches!(out.status.code(), Some(0 | 1)), format!("{args:?}: {}", String::from_utf8_lossy(&out.stderr)))?;
    Ok(out.stdout)
}

fn write_model(dir: &Path, name: &str, args: &[&str]) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_almg")).arg("model").args(args).output().map_err(|e| e.to_string())?;
    ensure(out.status.success(), String::from_utf8_lossy(&out.stderr).to_string())?;
    let path = dir.join(name);
    std::fs::write(&path, out.stdout).map_err(|e| e.to_string())?;
    Ok(path.to_string_lossy().into_owned())
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let b2 = write_model(dir.path(), "b2.alg", &["boolean", "--k", "2"])?;
    let zuv = write_model(dir.path(), "zuv.alg", &["z-uv", "--window", "8"])?;
    let prod = write_model(dir.path(), "prod.alg", &["product", "--factor", "boolean:2", "--factor", "chain:3"])?;
    let runs: Vec<Vec<&str>> = vec![
        vec!["check", &b2],
        vec!["check", &zuv],
        vec!["geometry", &b2],
        vec!["geometry", &prod],
        vec!["enumerate", "--size", "4", "--suite"],
        vec!["enumerate", "--size", "4", "--budget", "300"],
        vec!["search", "--size", "3", "--require", "monoid,metric", "--violate", "contractions", "--all"],
        vec!["search", "--size", "4", "--require", "axiom4", "--violate", "axiom2"],
        vec!["intervals", "fixty"],
    ];
    for args in &runs {
        ensure(almg(args, 1)? == almg(args, 8)?, format!("{args:?} differs between 1 and 8 threads"))?;
    }
    Ok(format!("{} commands byte-identical", runs.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("1 boolean B2 suite", boolean_b2),
        ("2 chains are fixty-free AL-monoids", chains),
        ("3 B2 not a chain, fixty (1,2,3)", b2_fixty),
        ("4 interval ex meet {2}", interval_ex),
        ("5 interval fixty", interval_fixty),
        ("6 Z∪{u} window", z_u_window),
        ("7 Z∪{u,v} window axiom2", z_uv_window),
        ("8 enumeration vs brute force", enumeration),
        ("9 star monotone finding", star_monotone),
        ("10 thread determinism", determinism),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        match f() {
            Ok(note) => println!("PASS {name}: {note}"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name}: {why}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
