use num_rational::Ratio;
use praxkit_core::{ApproxKind, BinRel, ExactProbSpace, GranuleKind, Space, Subset, Universe};
use proptest::prelude::*;

fn reflexive(max_n: usize) -> impl Strategy<Value = BinRel> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<u64>(), n).prop_map(move |rows| {
            let rows = rows
                .into_iter()
                .enumerate()
                .map(|(x, r)| Subset::from_bits(r & Subset::full(n).bits()).with(x))
                .collect();
            BinRel::from_rows(Universe::numbered(n).unwrap(), rows).unwrap()
        })
    })
}

fn prax(max_n: usize) -> impl Strategy<Value = BinRel> {
    reflexive(max_n).prop_filter("proto-transitive", BinRel::is_prax)
}

fn with_set(s: impl Strategy<Value = BinRel>) -> impl Strategy<Value = (BinRel, Subset)> {
    s.prop_flat_map(|r| {
        let full = Subset::full(r.n()).bits();
        (Just(r), any::<u64>().prop_map(move |b| Subset::from_bits(b & full)))
    })
}

proptest! {
    #[test]
    fn lower_inside_upper((r, a) in with_set(reflexive(7))) {
        let s = Space::new(r);
        prop_assert!(s.l(a).is_subset(a));
        prop_assert!(a.is_subset(s.u(a)));
        prop_assert_eq!(s.l(s.l(a)), s.l(a));
    }

    #[test]
    fn proto_transitivity_readings_agree(r in reflexive(6)) {
        prop_assert_eq!(r.is_proto_transitive(), r.is_proto_transitive_elementwise());
        prop_assert_eq!(r.is_proto_transitive(), r.tau().is_equivalence());
    }

    #[test]
    fn sharp_is_a_closure(r in reflexive(6)) {
        let h = r.sharp();
        prop_assert!(r.is_subrelation(&h).unwrap());
        prop_assert_eq!(h.sharp(), h.clone());
        prop_assert!(h.is_transitive());
    }

    #[test]
    fn transitive_lower_is_inside_lower((r, a) in with_set(prax(6))) {
        let s = Space::new(r);
        prop_assert!(s.approx(a, ApproxKind::LSharp).is_subset(s.l(a)));
        prop_assert!(s.u(a).is_subset(s.approx(a, ApproxKind::USharp)));
    }

    #[test]
    fn symmetric_granules_inside_successors(r in prax(7)) {
        let s = Space::new(r);
        for x in 0..s.n() {
            prop_assert!(s.sym(x).is_subset(s.succ(x)));
        }
    }

    #[test]
    fn converse_swaps_granulations(r in reflexive(6)) {
        let a = Space::new(r.clone());
        let b = Space::new(r.converse());
        prop_assert_eq!(a.granules(GranuleKind::Succ), b.granules(GranuleKind::Pred));
    }

    #[test]
    fn subset_serde_round_trip(bits in any::<u64>()) {
        let s = Subset::from_bits(bits);
        let text = serde_json::to_string(&s).unwrap();
        prop_assert_eq!(serde_json::from_str::<Subset>(&text).unwrap(), s);
    }

    #[test]
    fn self_dependence_is_bounded(w in prop::collection::vec(0i64..16, 1..6), x in any::<u64>()) {
        prop_assume!(w.iter().any(|&v| v > 0));
        let p = ExactProbSpace::normalize(w.into_iter().map(Ratio::from_integer).collect()).unwrap();
        let x = Subset::from_bits(x) & p.full();
        let d = p.dep(x, x);
        prop_assert!(d >= Ratio::from_integer(0) && d <= Ratio::new(1, 4));
        let dc = p.dep(x, p.complement(x));
        prop_assert!(dc <= Ratio::from_integer(0) && dc >= Ratio::new(-1, 4));
    }
}
