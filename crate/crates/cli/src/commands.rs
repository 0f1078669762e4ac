use std::collections::BTreeSet;
use std::fs;
use std::path::Path;
use std::time::Instant;

use almg_core::axioms::Axiom;
use almg_core::geometry::{
    self, check_star_monotone, run_theorem_suite, Betweenness, Triangle,
};
use almg_core::intervals::{self, iv_intersect, iv_star, iv_union, IntervalSet};
use almg_core::models::{ChainMode, ModelSpec};
use almg_core::search::{search_counterexample, EnumerationResult, SearchSpec, AL_MONOID_AXIOMS};
use almg_core::{
    check_distributivity, classify, is_drl_compatible, parse_algebra, write_algebra, FiniteAlgebra,
    PartialAlgebra,
};
use serde_json::{json, Value};

use crate::report::{check_entry, check_summary, tuple_text, Entry, ReportDocument};

/// An input or usage problem (exit status 2).
pub type Usage = String;

pub fn load(path: &Path) -> Result<PartialAlgebra, Usage> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_algebra(&text).map_err(|e| format!("{}: {e}", path.display()))
}

pub fn parse_axioms(ids: &[String]) -> Result<BTreeSet<Axiom>, Usage> {
    ids.iter()
        .map(|id| {
            Axiom::from_id(id.trim()).ok_or_else(|| {
                let known: Vec<_> = Axiom::ALL.iter().map(|a| a.id()).collect();
                format!("unknown axiom `{id}` (known: {})", known.join(", "))
            })
        })
        .collect()
}

pub fn cmd_check(path: &Path, require: Option<&[String]>) -> Result<ReportDocument, Usage> {
    let alg = load(path)?;
    let required = match require {
        Some(ids) => parse_axioms(ids)?,
        None => AL_MONOID_AXIOMS.into_iter().collect(),
    };
    let mut doc = ReportDocument::new("check", json!(path.display().to_string()));

    let t = Instant::now();
    let c = classify(&alg);
    for ax in Axiom::ALL {
        doc.push(check_entry(c.report(ax), required.contains(&ax)), t);
    }
    let t = Instant::now();
    let flags = json!({
        "autometrized": c.autometrized,
        "lattice_ordered_autometrized": c.lattice_ordered_autometrized,
        "semiregular": c.semiregular,
        "representable": c.representable,
        "al_monoid": c.al_monoid,
    });
    let mut classes: Vec<&str> = Vec::new();
    for (name, on) in [
        ("autometrized", c.autometrized),
        ("lattice-ordered", c.lattice_ordered_autometrized),
        ("semiregular", c.semiregular),
        ("representable", c.representable),
        ("AL-monoid", c.al_monoid),
    ] {
        if on {
            classes.push(name);
        }
    }
    let summary = if classes.is_empty() { "none".to_string() } else { classes.join(", ") };
    doc.push(info("classification", summary, flags), t);

    let t = Instant::now();
    doc.push(check_entry(&check_distributivity(&alg), false), t);
    let t = Instant::now();
    doc.push(check_entry(&is_drl_compatible(&alg), false), t);
    if !alg.is_total() {
        let t = Instant::now();
        let n = alg.undefined_count();
        doc.push(info("undefined_cells", n.to_string(), json!(n)), t);
    }
    Ok(doc)
}

fn info(name: &str, summary: String, detail: Value) -> Entry {
    Entry {
        name: name.into(),
        required: false,
        passed: true,
        summary,
        detail,
    }
}

fn indices(args: &[String]) -> Result<Vec<usize>, Usage> {
    args.iter()
        .map(|a| a.parse().map_err(|_| format!("expected an element index, got `{a}`")))
        .collect()
}

pub const PREDICATES: [&str; 7] = ["M", "L", "fixty", "subgeometry", "b-linear", "b-linear-lattice", "d-linear"];

pub fn cmd_geometry(path: &Path, predicate: Option<&[String]>) -> Result<ReportDocument, Usage> {
    let alg = load(path)?;
    let mut doc = ReportDocument::new("geometry", json!(path.display().to_string()));
    if let Some(spec) = predicate {
        let t = Instant::now();
        doc.push(eval_predicate(&alg, spec)?, t);
        return Ok(doc);
    }
    let t = Instant::now();
    let suite = run_theorem_suite(&alg);
    let al = Entry {
        name: "al_monoid".into(),
        required: true,
        passed: suite.al_monoid,
        summary: if suite.al_monoid {
            "theorems apply".into()
        } else {
            "not an AL-monoid, theorems skipped".into()
        },
        detail: json!(suite.al_monoid),
    };
    doc.push(al, t);
    for r in &suite.theorems {
        doc.push(check_entry(r, true), t);
    }
    if let Some(fw) = &suite.four_way {
        let mut e = check_entry(&fw.report, true);
        e.summary = format!(
            "(1) L⟺M {}, (2) t1 {}, (3) stated {} / proof {}, (4) β {}; {}",
            fw.lattice_iff_metric,
            fw.t1,
            fw.condition3_stated,
            fw.condition3_proof,
            fw.beta,
            check_summary(&fw.report)
        );
        e.detail = serde_json::to_value(fw).expect("serializes");
        doc.push(e, t);
    }
    for r in &suite.predicates {
        let mut e = check_entry(r, false);
        e.name = format!("predicate {}", r.name);
        e.summary = format!("{}; {}", r.passed, e.summary);
        doc.push(e, t);
    }
    for r in &suite.findings {
        let mut e = check_entry(r, false);
        e.name = format!("finding {}", r.name);
        doc.push(e, t);
    }
    let triangles: Vec<String> = suite
        .fixty_triangles
        .iter()
        .map(|tr| tuple_text(&tr.vertices()))
        .collect();
    let summary = format!(
        "chain {}, atoms {}, fixty triangles {}",
        suite.is_chain,
        tuple_text(&suite.atoms),
        if triangles.is_empty() { "none".to_string() } else { triangles.join(" ") }
    );
    let detail = json!({
        "is_chain": suite.is_chain,
        "has_t1": suite.has_t1,
        "has_t2": suite.has_t2,
        "has_beta": suite.has_beta,
        "is_ptolemaic": suite.is_ptolemaic,
        "is_metrically_convex": suite.is_metrically_convex,
        "atoms": suite.atoms,
        "fixty_triangles": suite.fixty_triangles.iter().map(|t| t.vertices()).collect::<Vec<_>>(),
        "equilateral": suite.equilateral.map(|t| t.vertices()),
    });
    doc.push(info("summary", summary, detail), t);
    Ok(doc)
}

fn eval_predicate(alg: &PartialAlgebra, spec: &[String]) -> Result<Entry, Usage> {
    let (name, args) = spec.split_first().ok_or("--predicate needs a name")?;
    let xs = indices(args)?;
    let arity = |k: usize| -> Result<(), Usage> {
        if xs.len() == k {
            Ok(())
        } else {
            Err(format!("predicate {name} takes {k} elements, got {}", xs.len()))
        }
    };
    let err = |e: almg_core::Error| e.to_string();
    let (value, labeling): (bool, Option<Vec<usize>>) = match name.as_str() {
        "M" => {
            arity(3)?;
            (geometry::metric_between(alg, xs[0], xs[1], xs[2]).map_err(err)?, None)
        }
        "L" => {
            arity(3)?;
            (geometry::lattice_between(alg, xs[0], xs[1], xs[2]).map_err(err)?, None)
        }
        "fixty" => {
            arity(3)?;
            let t = Triangle::new(xs[0], xs[1], xs[2]).map_err(err)?;
            (geometry::has_fixty(alg, &t).map_err(err)?, None)
        }
        "subgeometry" => (geometry::is_subgeometry(alg, &xs).map_err(err)?, None),
        "b-linear" | "b-linear-lattice" => {
            let rel = if name == "b-linear" { Betweenness::Metric } else { Betweenness::Lattice };
            let l = geometry::is_b_linear(alg, &xs, rel).map_err(err)?;
            (l.is_some(), l)
        }
        "d-linear" => {
            let l = geometry::is_d_linear(alg, &xs).map_err(err)?;
            (l.is_some(), l)
        }
        other => {
            return Err(format!(
                "unknown predicate `{other}` (known: {})",
                PREDICATES.join(", ")
            ))
        }
    };
    let mut summary = format!("{name} {} = {value}", tuple_text(&xs));
    if let Some(l) = &labeling {
        summary.push_str(&format!(", labeling {}", tuple_text(l)));
    }
    Ok(Entry {
        name: format!("predicate {name}"),
        required: true,
        passed: value,
        summary,
        detail: json!({ "arguments": xs, "value": value, "labeling": labeling }),
    })
}

pub struct SearchArgs<'a> {
    pub spec: SearchSpec,
    pub out: Option<&'a Path>,
    pub suite: bool,
}

fn spec_json(spec: &SearchSpec) -> Value {
    json!({
        "size": spec.size,
        "require": spec.require.iter().map(|a| a.id()).collect::<Vec<_>>(),
        "violate": spec.violate.iter().map(|a| a.id()).collect::<Vec<_>>(),
        "budget": spec.budget,
        "limit": spec.limit,
        "dedup": spec.dedup,
        "all": spec.all,
    })
}

fn result_json(r: &EnumerationResult) -> Value {
    json!({
        "algebras": r.algebras.iter().map(|a| write_algebra(a, &[])).collect::<Vec<_>>(),
        "nodes": r.nodes,
        "pruned": r.pruned,
        "found": r.found,
        "dedup_collapsed": r.dedup_collapsed,
        "exhausted": r.exhausted,
        "budget_hit": r.budget_hit,
        "limit_hit": r.limit_hit,
    })
}

pub fn cmd_search(command: &str, args: SearchArgs<'_>) -> Result<ReportDocument, Usage> {
    let spec = &args.spec;
    spec.validate().map_err(|e| e.to_string())?;
    let mut doc = ReportDocument::new(command, spec_json(spec));

    let t = Instant::now();
    let r = search_counterexample(spec).map_err(|e| e.to_string())?;
    let outcome = if r.exhausted {
        "search space exhausted"
    } else if r.budget_hit {
        "node budget reached"
    } else if r.limit_hit {
        "solution limit reached"
    } else {
        "stopped at first solution"
    };
    let summary = format!(
        "{} algebras ({} solutions, {} collapsed), {} nodes, {} pruned; {outcome}",
        r.algebras.len(),
        r.found,
        r.dedup_collapsed,
        r.nodes,
        r.pruned
    );
    doc.push(info("search", summary, result_json(&r)), t);

    // Independent re-check of every emitted algebra.
    let t = Instant::now();
    let bad: Vec<usize> = r
        .algebras
        .iter()
        .enumerate()
        .filter(|(_, a)| {
            let c = classify(*a);
            let ok = |ax: Axiom| c.report(ax).passed;
            !(spec.require.iter().all(|&ax| ok(ax)) && spec.violate.iter().all(|&ax| !ok(ax)))
        })
        .map(|(i, _)| i)
        .collect();
    doc.push(
        Entry {
            name: "reverify".into(),
            required: true,
            passed: bad.is_empty(),
            summary: format!("{} of {} re-verified", r.algebras.len() - bad.len(), r.algebras.len()),
            detail: json!({ "failed": bad }),
        },
        t,
    );

    if args.suite {
        push_suite_entries(&mut doc, &r.algebras);
    }
    if let Some(dir) = args.out {
        write_outputs(dir, &r, &doc)?;
    }
    Ok(doc)
}

fn push_suite_entries(doc: &mut ReportDocument, algebras: &[FiniteAlgebra]) {
    let t = Instant::now();
    let mut violations = Vec::new();
    let mut findings = Vec::new();
    let mut checks = 0u64;
    for (i, alg) in algebras.iter().enumerate() {
        let suite = run_theorem_suite(alg);
        checks += suite.theorems.iter().map(|r| r.checked_count).sum::<u64>();
        for r in suite
            .theorems
            .iter()
            .chain(suite.four_way.as_ref().map(|f| &f.report))
            .filter(|r| !r.passed)
        {
            violations.push(json!({ "algebra": i, "theorem": r.name, "witnesses": r.witnesses }));
        }
        if !suite.al_monoid {
            violations.push(json!({ "algebra": i, "theorem": "al_monoid" }));
        }
        let mono = check_star_monotone(alg);
        if !mono.passed {
            findings.push(json!({ "algebra": i, "witness_total": mono.witness_total, "witnesses": mono.witnesses }));
        }
    }
    doc.push(
        Entry {
            name: "theorem_suite".into(),
            required: true,
            passed: violations.is_empty(),
            summary: format!(
                "{} algebras, {checks} theorem instances, {} violations",
                algebras.len(),
                violations.len()
            ),
            detail: json!({ "violations": violations }),
        },
        t,
    );
    let t = Instant::now();
    doc.push(
        info(
            "finding star_monotone",
            format!("{} of {} algebras with counterexamples", findings.len(), algebras.len()),
            json!({ "algebras_with_counterexamples": findings }),
        ),
        t,
    );
}

fn write_outputs(dir: &Path, r: &EnumerationResult, doc: &ReportDocument) -> Result<(), Usage> {
    let io = |e: std::io::Error| format!("{}: {e}", dir.display());
    fs::create_dir_all(dir).map_err(io)?;
    for (i, alg) in r.algebras.iter().enumerate() {
        let text = write_algebra(alg, &[format!("solution {i}")]);
        fs::write(dir.join(format!("alg_{i:03}.alg")), text).map_err(io)?;
    }
    let mut summary = doc.clone();
    summary.timing = None;
    fs::write(dir.join("summary.json"), summary.to_json()).map_err(io)
}

fn parse_sets(args: &[String], count: usize, demo: &str) -> Result<Vec<IntervalSet>, Usage> {
    if args.len() != count {
        return Err(format!("`intervals {demo}` takes {count} interval sets, got {}", args.len()));
    }
    args.iter()
        .map(|a| a.parse::<IntervalSet>().map_err(|e| e.to_string()))
        .collect()
}

pub const INTERVAL_COMMANDS: [&str; 6] = ["ex", "fixty", "axiom2", "union", "meet", "star"];

pub fn cmd_intervals(name: &str, args: &[String]) -> Result<ReportDocument, Usage> {
    let mut doc = ReportDocument::new("intervals", json!({ "demo": name, "arguments": args }));
    let t = Instant::now();
    match name {
        "ex" | "fixty" => {
            if !args.is_empty() {
                return Err(format!("`intervals {name}` takes no arguments"));
            }
            let demo = intervals::run_demo(name).expect("known demo");
            let sets: Vec<String> = demo.sets.iter().map(|(k, v)| format!("{k} = {v}")).collect();
            let mut e = check_entry(&demo.report, true);
            e.summary = sets.join(", ");
            e.detail = serde_json::to_value(&demo).expect("serializes");
            doc.push(e, t);
        }
        "axiom2" => {
            if args.is_empty() || args.len() % 2 != 0 {
                return Err("`intervals axiom2` takes pairs of interval sets".into());
            }
            let sets = parse_sets(args, args.len(), name)?;
            let pairs: Vec<_> = sets.chunks(2).map(|p| (p[0].clone(), p[1].clone())).collect();
            doc.push(check_entry(&intervals::iv_check_axiom2_sample(&pairs), true), t);
        }
        "union" | "meet" | "star" => {
            let s = parse_sets(args, 2, name)?;
            let value = match name {
                "union" => iv_union(&s[0], &s[1]),
                "meet" => iv_intersect(&s[0], &s[1]),
                _ => iv_star(&s[0], &s[1]),
            };
            doc.push(info(name, value.to_string(), json!(value)), t);
        }
        other => {
            return Err(format!(
                "unknown interval demo `{other}` (available: {})",
                INTERVAL_COMMANDS.join(", ")
            ))
        }
    }
    Ok(doc)
}

pub fn model_text(spec: &ModelSpec) -> Result<String, Usage> {
    let model = spec.build().map_err(|e| e.to_string())?;
    let labels = spec.labels().map_err(|e| e.to_string())?;
    let alg = model.to_partial();
    let mut comments = vec![format!(
        "model {}",
        serde_json::to_string(spec).expect("spec serializes")
    )];
    comments.extend(labels.iter().enumerate().map(|(i, l)| format!("{i} = {l}")));
    Ok(write_algebra(&alg, &comments))
}

/// Parses a product factor such as `boolean:2`, `chain:3:max` or `grid:2`.
pub fn parse_factor(text: &str) -> Result<ModelSpec, Usage> {
    let parts: Vec<&str> = text.split(':').collect();
    let num = |s: &str| -> Result<usize, Usage> {
        s.parse().map_err(|_| format!("bad number `{s}` in factor `{text}`"))
    };
    match parts.as_slice() {
        ["boolean", k] => Ok(ModelSpec::Boolean { k: num(k)? }),
        ["chain", n] => Ok(ModelSpec::Chain { n: num(n)?, mode: ChainMode::TruncatedSum }),
        ["chain", n, mode] => Ok(ModelSpec::Chain { n: num(n)?, mode: parse_mode(mode)? }),
        ["grid", m] => Ok(ModelSpec::ClosedGrid { m: num(m)? }),
        _ => Err(format!(
            "bad factor `{text}` (use boolean:K, chain:N[:truncated|max] or grid:M)"
        )),
    }
}

pub fn parse_mode(s: &str) -> Result<ChainMode, Usage> {
    match s {
        "truncated" | "truncated_sum" => Ok(ChainMode::TruncatedSum),
        "max" => Ok(ChainMode::Max),
        _ => Err(format!("unknown chain mode `{s}` (use truncated or max)")),
    }
}
