use almg_core::intervals::*;
use almg_core::models::{make_boolean, make_chain, ChainMode};
use almg_core::search::canonical_form;
use almg_core::*;
use proptest::prelude::*;

/// Interval sets with endpoints on the quarter grid of [-8, 8].
fn interval_set() -> impl Strategy<Value = IntervalSet> {
    prop::collection::vec((-32i64..=32, 0i64..=12), 0..4).prop_map(|parts| {
        IntervalSet::from_intervals(
            parts
                .into_iter()
                .map(|(l, w)| (Rational::new(l, 4), Rational::new(l + w, 4))),
        )
        .unwrap()
    })
}

/// Closure of the symmetric difference evaluated on the grid of step 1/64.
/// Endpoints sit on the quarter grid, so the half-step neighbours of a grid
/// point lie inside the open cells next to it and decide the closure.
fn grid_star_matches(a: &IntervalSet, b: &IntervalSet, star: &IntervalSet) -> Result<(), TestCaseError> {
    let in_diff = |x: Rational| a.contains(x) != b.contains(x);
    for i in -640i64..=640 {
        let x = Rational::new(i, 64);
        let h = Rational::new(1, 128);
        let closed = in_diff(x) || in_diff(x - h) || in_diff(x + h);
        prop_assert_eq!(star.contains(x), closed, "at {}", x);
    }
    Ok(())
}

proptest! {
    #[test]
    fn star_agrees_with_grid_oracle(a in interval_set(), b in interval_set()) {
        grid_star_matches(&a, &b, &iv_star(&a, &b))?;
    }

    #[test]
    fn star_laws(a in interval_set(), b in interval_set()) {
        prop_assert_eq!(iv_star(&a, &b), iv_star(&b, &a));
        prop_assert!(iv_star(&a, &a).is_empty());
        prop_assert_eq!(iv_star(&a, &IntervalSet::empty()), a.clone());
    }

    #[test]
    fn normal_form_is_stable(a in interval_set(), b in interval_set()) {
        for s in [iv_union(&a, &b), iv_intersect(&a, &b), iv_star(&a, &b)] {
            let again = IntervalSet::from_intervals(s.intervals().iter().copied()).unwrap();
            prop_assert_eq!(&again, &s);
            prop_assert_eq!(s.to_string().parse::<IntervalSet>().unwrap(), s.clone());
            for w in s.intervals().windows(2) {
                prop_assert!(w[0].1 < w[1].0);
            }
        }
    }

    #[test]
    fn axiom2_holds_on_samples(a in interval_set(), b in interval_set()) {
        prop_assert!(iv_check_axiom2_sample(&[(a, b)]).passed);
    }

    #[test]
    fn relabeling_preserves_classification(perm in Just((0..4usize).collect::<Vec<_>>()).prop_shuffle(), mode in 0..3usize) {
        let alg = match mode {
            0 => make_boolean(2).unwrap(),
            1 => make_chain(4, ChainMode::TruncatedSum).unwrap(),
            _ => make_chain(4, ChainMode::Max).unwrap(),
        };
        let moved = alg.relabel(&perm).unwrap();
        let (c, d) = (classify(&alg), classify(&moved));
        prop_assert_eq!(c.al_monoid, d.al_monoid);
        prop_assert_eq!(c.representable, d.representable);
        prop_assert_eq!(canonical_form(&alg).unwrap(), canonical_form(&moved).unwrap());
    }

    #[test]
    fn single_cell_mutations_are_reported(a in 0..4usize, b in 0..4usize, v in 0..4usize) {
        let b2 = make_boolean(2).unwrap();
        prop_assume!(b2.get(Op::Star, a, b) != v);
        let broken = b2.with_cell(Op::Star, a, b, v).unwrap();
        let c = classify(&broken);
        prop_assert!(!c.al_monoid);
        let failing: Vec<_> = c.reports.iter().filter(|r| !r.passed).collect();
        prop_assert!(!failing.is_empty());
        for r in failing {
            prop_assert!(r.witness_total > 0 && r.first_witness().is_some());
        }
    }

    #[test]
    fn algebra_files_round_trip(k in 0..=3usize, comments in prop::collection::vec("[a-z ]{0,8}", 0..3)) {
        let alg: PartialAlgebra = make_boolean(k).unwrap().into();
        let text = write_algebra(&alg, &comments);
        prop_assert_eq!(parse_algebra(&text).unwrap(), alg);
    }
}
