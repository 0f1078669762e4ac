use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{FiniteAlgebra, Op, PartialAlgebra, Structure};
use crate::axioms::Axiom;
use crate::error::{Error, Result};

use super::canon::{canonical_relabel, labeled_form};
use super::lattices::{enumerate_lattice_orders, LatticeOrder};
use super::MAX_SEARCH_SIZE;

pub const DEFAULT_BUDGET: u64 = 100_000_000;
pub const DEFAULT_LIMIT: u64 = 100_000;

fn default_limit() -> u64 {
    DEFAULT_LIMIT
}

/// The axiom groups whose conjunction defines an AL-monoid.
pub const AL_MONOID_AXIOMS: [Axiom; 6] = [
    Axiom::Lattice,
    Axiom::Monoid,
    Axiom::Metric,
    Axiom::Contractions,
    Axiom::Axiom2,
    Axiom::Axiom4,
];

/// A pruning rule of the backtracking search. Each is a sound filter, so
/// turning one off changes node counts but never the result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    /// Fix `a∗a = 0` up front (needs `metric`).
    StarDiagonal,
    /// Fix `0 + a = a` up front (needs `monoid`).
    AddIdentity,
    /// Check a required axiom group on every partial assignment.
    Eager(Axiom),
}

/// Order in which the free table cells are assigned.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CellOrder {
    /// Distances between comparable pairs, then the other distances, then sums.
    #[default]
    StarComparableFirst,
    /// All sums, then all distances.
    AddFirst,
    /// Pair by pair, sum before distance.
    Interleaved,
}

/// What to look for.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchSpec {
    pub size: usize,
    pub require: BTreeSet<Axiom>,
    pub violate: BTreeSet<Axiom>,
    pub budget: u64,
    /// Stop collecting after this many solutions (counted before dedup).
    #[serde(default = "default_limit")]
    pub limit: u64,
    /// Report one algebra per isomorphism class.
    pub dedup: bool,
    /// Collect every solution instead of stopping at the first.
    pub all: bool,
    #[serde(default)]
    pub disabled_rules: BTreeSet<Rule>,
    #[serde(default)]
    pub cell_order: CellOrder,
}

impl SearchSpec {
    pub fn new(size: usize) -> Self {
        SearchSpec {
            size,
            require: BTreeSet::new(),
            violate: BTreeSet::new(),
            budget: DEFAULT_BUDGET,
            limit: DEFAULT_LIMIT,
            dedup: true,
            all: false,
            disabled_rules: BTreeSet::new(),
            cell_order: CellOrder::default(),
        }
    }

    pub fn al_monoids(size: usize, budget: u64) -> Self {
        SearchSpec {
            require: AL_MONOID_AXIOMS.into_iter().collect(),
            budget,
            all: true,
            ..SearchSpec::new(size)
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.size == 0 || self.size > MAX_SEARCH_SIZE {
            return Err(Error::Search(format!(
                "size must be in 1..={MAX_SEARCH_SIZE}, got {}",
                self.size
            )));
        }
        if let Some(ax) = self.require.intersection(&self.violate).next() {
            return Err(Error::Search(format!("{} is both required and violated", ax.id())));
        }
        if self.violate.contains(&Axiom::Lattice) {
            return Err(Error::Search(
                "the search space consists of lattices, so lattice cannot be violated".into(),
            ));
        }
        Ok(())
    }

    fn rule_on(&self, rule: Rule) -> bool {
        !self.disabled_rules.contains(&rule)
    }
}

/// Algebras found and the work spent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationResult {
    /// In increasing canonical form. With dedup each is its canonical relabeling.
    pub algebras: Vec<FiniteAlgebra>,
    pub nodes: u64,
    pub pruned: u64,
    /// Solutions reached, before isomorphism reduction.
    pub found: u64,
    pub dedup_collapsed: u64,
    /// The whole space was covered. False after a first-found stop or when
    /// the budget ran out.
    pub exhausted: bool,
    pub budget_hit: bool,
    /// Collection stopped after `limit` solutions.
    pub limit_hit: bool,
}

/// Key of a stored solution: canonical form, plus the labeled form when
/// isomorphic copies are kept apart.
type Key = (Vec<u8>, Vec<u8>);

#[derive(Default)]
struct Outcome {
    nodes: u64,
    pruned: u64,
    found: u64,
    solutions: BTreeMap<Key, FiniteAlgebra>,
    budget_hit: bool,
    limit_hit: bool,
}

struct Dfs<'a> {
    spec: &'a SearchSpec,
    alg: PartialAlgebra,
    cells: Vec<(Op, usize, usize)>,
    eager: Vec<Axiom>,
    budget: u64,
    limit: u64,
    out: Outcome,
}

impl Dfs<'_> {
    fn accept(&self, alg: &FiniteAlgebra) -> bool {
        self.spec.require.iter().all(|ax| ax.holds(alg))
            && self.spec.violate.iter().all(|ax| !ax.holds(alg))
    }

    fn store(&mut self, alg: FiniteAlgebra) {
        let (form, rep) = canonical_relabel(&alg).expect("search sizes are canonicalizable");
        if self.spec.dedup {
            self.out.solutions.entry((form, Vec::new())).or_insert(rep);
        } else {
            self.out.solutions.insert((form, labeled_form(&alg)), alg);
        }
    }

    /// Returns true when the search should stop.
    fn go(&mut self, depth: usize) -> bool {
        if depth == self.cells.len() {
            let total = self.alg.to_finite().expect("all cells assigned");
            if !self.accept(&total) {
                return false;
            }
            self.store(total);
            self.out.found += 1;
            if self.out.found >= self.limit {
                self.out.limit_hit = self.spec.all;
                return true;
            }
            return !self.spec.all;
        }
        let (op, a, b) = self.cells[depth];
        let n = self.alg.size();
        for v in 0..n {
            if self.out.nodes >= self.budget {
                self.out.budget_hit = true;
                return true;
            }
            self.out.nodes += 1;
            self.alg.set_cell(op, a, b, Some(v));
            self.alg.set_cell(op, b, a, Some(v));
            if self.eager.iter().all(|ax| ax.holds(&self.alg)) {
                if self.go(depth + 1) {
                    return true;
                }
            } else {
                self.out.pruned += 1;
            }
        }
        self.alg.set_cell(op, a, b, None);
        self.alg.set_cell(op, b, a, None);
        false
    }
}

fn free_cells(spec: &SearchSpec, lat: &LatticeOrder, zero: usize) -> Vec<(Op, usize, usize)> {
    let n = lat.size();
    let diagonal = spec.require.contains(&Axiom::Metric) && spec.rule_on(Rule::StarDiagonal);
    let identity = spec.require.contains(&Axiom::Monoid) && spec.rule_on(Rule::AddIdentity);
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
    let star_free = |&(a, b): &(usize, usize)| !(diagonal && a == b);
    let add_free = |&(a, b): &(usize, usize)| !(identity && (a == zero || b == zero));
    let comparable = |&(a, b): &(usize, usize)| lat.leq(a, b) || lat.leq(b, a);

    let star = |keep: &dyn Fn(&(usize, usize)) -> bool| {
        pairs
            .iter()
            .filter(|p| star_free(p) && keep(p))
            .map(|&(a, b)| (Op::Star, a, b))
            .collect::<Vec<_>>()
    };
    let adds: Vec<_> = pairs
        .iter()
        .filter(|p| add_free(p))
        .map(|&(a, b)| (Op::Add, a, b))
        .collect();
    match spec.cell_order {
        CellOrder::StarComparableFirst => {
            let mut cells = star(&|p| comparable(p));
            cells.extend(star(&|p| !comparable(p)));
            cells.extend(adds);
            cells
        }
        CellOrder::AddFirst => {
            let mut cells = adds;
            cells.extend(star(&|_| true));
            cells
        }
        CellOrder::Interleaved => pairs
            .iter()
            .flat_map(|p| {
                let add = add_free(p).then_some((Op::Add, p.0, p.1));
                let st = star_free(p).then_some((Op::Star, p.0, p.1));
                add.into_iter().chain(st)
            })
            .collect(),
    }
}

fn run_combo(spec: &SearchSpec, lat: &LatticeOrder, zero: usize, budget: u64, limit: u64) -> Outcome {
    let n = lat.size();
    let mut alg = PartialAlgebra::undefined(n, zero).expect("size already validated");
    for a in 0..n {
        for b in 0..n {
            alg.set_cell(Op::Join, a, b, Some(lat.join(a, b)));
            alg.set_cell(Op::Meet, a, b, Some(lat.meet(a, b)));
        }
    }
    let cells = free_cells(spec, lat, zero);
    for a in 0..n {
        if !cells.contains(&(Op::Star, a, a)) {
            alg.set_cell(Op::Star, a, a, Some(zero));
        }
        let (lo, hi) = (a.min(zero), a.max(zero));
        if !cells.contains(&(Op::Add, lo, hi)) {
            alg.set_cell(Op::Add, a, zero, Some(a));
            alg.set_cell(Op::Add, zero, a, Some(a));
        }
    }
    // The substrate is a lattice by construction, so only the groups that
    // involve `+` or `∗` can prune.
    let eager = spec
        .require
        .iter()
        .copied()
        .filter(|&ax| ax != Axiom::Lattice && spec.rule_on(Rule::Eager(ax)))
        .collect();
    let mut dfs = Dfs {
        spec,
        alg,
        cells,
        eager,
        budget,
        limit,
        out: Outcome::default(),
    };
    if limit > 0 {
        dfs.go(0);
    } else {
        dfs.out.limit_hit = true;
    }
    dfs.out
}

/// Searches lattices of the given size with every choice of zero for
/// commutative `+` and symmetric `∗` tables meeting `require` and failing
/// every axiom group in `violate`.
///
/// Combinations of lattice and zero are searched in parallel, but the
/// result, including where the node budget or solution limit cuts off, is
/// that of a sequential run over the combinations in order.
pub fn search_counterexample(spec: &SearchSpec) -> Result<EnumerationResult> {
    spec.validate()?;
    let lattices = enumerate_lattice_orders(spec.size, spec.dedup)?;
    let combos: Vec<(&LatticeOrder, usize)> = lattices
        .iter()
        .flat_map(|lat| (0..spec.size).map(move |z| (lat, z)))
        .collect();
    let outcomes: Vec<Outcome> = combos
        .par_iter()
        .map(|&(lat, z)| run_combo(spec, lat, z, spec.budget, spec.limit))
        .collect();

    let mut total = Outcome::default();
    for (i, mut out) in outcomes.into_iter().enumerate() {
        let budget = spec.budget - total.nodes;
        let limit = spec.limit - total.found;
        if out.budget_hit || out.limit_hit || out.nodes > budget || out.found >= limit {
            // Replay with what a sequential run would have had left.
            let (lat, z) = combos[i];
            out = run_combo(spec, lat, z, budget, limit);
        }
        total.nodes += out.nodes;
        total.pruned += out.pruned;
        total.found += out.found;
        for (key, alg) in out.solutions {
            total.solutions.entry(key).or_insert(alg);
        }
        if out.budget_hit || out.limit_hit {
            total.budget_hit = out.budget_hit;
            total.limit_hit = out.limit_hit;
            break;
        }
        if out.found > 0 && !spec.all {
            break;
        }
    }

    let stopped = total.budget_hit || total.limit_hit;
    Ok(EnumerationResult {
        dedup_collapsed: total.found - total.solutions.len() as u64,
        algebras: total.solutions.into_values().collect(),
        nodes: total.nodes,
        pruned: total.pruned,
        found: total.found,
        exhausted: !stopped && (spec.all || total.found == 0),
        budget_hit: total.budget_hit,
        limit_hit: total.limit_hit,
    })
}

/// Every AL-monoid of size `n` up to isomorphism.
pub fn enumerate_al_monoids(n: usize, budget: u64) -> Result<EnumerationResult> {
    search_counterexample(&SearchSpec::al_monoids(n, budget))
}
