use canon4::exactalg::Q;
use canon4::lattices::*;
use proptest::prelude::*;

#[test]
fn root_counts_by_enumeration() {
    let counts: Vec<usize> = ["A2", "D4", "E6", "E7", "E8"].iter().map(|e| roots(&make_lattice(e).unwrap()).unwrap().len()).collect();
    assert_eq!(counts, vec![6, 24, 72, 126, 240]);
    for n in 1..=8 {
        assert_eq!(roots(&make_lattice(&format!("A{n}")).unwrap()).unwrap().len(), n * (n + 1));
    }
    for n in 4..=8 {
        assert_eq!(roots(&make_lattice(&format!("D{n}")).unwrap()).unwrap().len(), 2 * n * (n - 1));
    }
}

#[test]
fn heegner_lattices() {
    let t = heegner_types().unwrap();
    let labels: Vec<(String, String)> = t.iter().map(|h| (h.divisor.clone(), h.root_system.label())).collect();
    assert_eq!(
        labels,
        vec![("H_v".into(), "E6+D4".into()), ("H_n".into(), "E6+A2^2".into()), ("H_h".into(), "E8+A2".into())]
    );
    assert!(t.iter().all(|h| h.contains_r));
    assert_eq!(t[0].root_system, RootSystem::parse("D4+E6").unwrap());
}

#[test]
fn borcherds_coefficients() {
    let b = borcherds_orders().unwrap();
    let orders: Vec<u64> = b.rows.iter().map(|r| r.vanishing_order).collect();
    assert_eq!(orders, vec![3, 9, 84]);
    let coeffs: Vec<Q> = b.rows.iter().map(|r| r.coefficient.clone()).collect();
    assert_eq!(coeffs, vec![Q::from_integer(1.into()), Q::new(9.into(), 2.into()), Q::from_integer(14.into())]);
    assert!(b.coefficients_match);
    let flagged: Vec<&str> = b.rows.iter().filter(|r| r.flagged).map(|r| r.divisor.as_str()).collect();
    assert_eq!(flagged, vec!["H_n"]);
    assert_eq!(b.rows[0].stated_order, 2);
}

#[test]
fn three_cusps() {
    let c = cusp_invariants().unwrap();
    let labels: Vec<RootSystem> = c.iter().map(|r| r.complement.clone()).collect();
    let want: Vec<RootSystem> = ["E6^2+A2^2", "E6+A2+E8", "E8^2"].iter().map(|s| RootSystem::parse(s).unwrap()).collect();
    assert_eq!(labels, want);
    for r in &c {
        assert_eq!(RootSystem::parse(&r.stated_label).unwrap(), r.complement);
    }
    let hh: Vec<bool> = c.iter().map(|r| r.hyperelliptic).collect();
    assert_eq!(hh, vec![false, true, false]);
}

#[test]
fn eisenstein_structures() {
    for e in ["A2", "D4", "E6", "E8", "A2+A2+E6", "D4+E6"] {
        let l = make_lattice(e).unwrap();
        match fpf_order3(&l).unwrap() {
            Fpf3::Found(r) => {
                assert!(r.preserves(&l) && r.has_order_three() && r.fixed_point_free() && r.eisenstein_charpoly(), "{e}");
                // Eisenstein rank is half the rank
                assert_eq!(l.rank() % 2, 0);
            }
            other => panic!("{e}: {other:?}"),
        }
    }
    for e in ["A1", "A3", "A4"] {
        assert!(matches!(fpf_order3(&make_lattice(e).unwrap()).unwrap(), Fpf3::Nonexistent(_)), "{e}");
    }
}

#[test]
fn discriminant_of_t() {
    let t = make_lattice("E8^2+U+U(3)").unwrap();
    assert_eq!(discriminant_group(&t).unwrap(), vec![3, 3]);
    assert_eq!(discriminant_group(&make_lattice("E6+A2").unwrap()).unwrap(), vec![3, 3]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn complements_pair_to_zero(
        expr in prop::sample::select(vec!["E8", "E7", "D6", "A5", "E6+A2", "D4+A3"]),
        picks in prop::collection::vec(any::<prop::sample::Index>(), 1..3),
    ) {
        let l = make_lattice(expr).unwrap();
        let rs = roots(&l).unwrap();
        let sub: Vec<Vec<i64>> = picks.iter().map(|i| rs[i.index(rs.len())].clone()).collect();
        let rank_s = canon4::exactalg::RatMatrix::from_i64(&sub).rank();
        let (basis, comp) = orthogonal_complement(&l, &sub).unwrap();
        for b in &basis {
            for s in &sub {
                prop_assert_eq!(l.pair(b, s), 0);
            }
        }
        prop_assert_eq!(rank_s + comp.rank(), l.rank());
    }

    #[test]
    fn sign_flip_is_an_involution(expr in prop::sample::select(vec!["A2", "U(3)+E8", "D4+U", "E6^2"])) {
        let l = make_lattice(expr).unwrap();
        prop_assert_eq!(l.flip().flip(), l.clone());
        prop_assert_eq!(l.flipped().convention, SignConvention::Flipped);
    }
}
