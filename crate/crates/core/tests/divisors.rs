use canon4::divisors::*;
use canon4::exactalg::Q;
use proptest::prelude::*;

fn q(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

#[test]
fn pencil_counts_match_sigma() {
    let k = pe_constants();
    let sigma = k.get("Sigma").unwrap();
    assert_eq!(Q::from_integer(pencil_singular_count(PencilConfig::FixedQuadric).singular_fibers.into()), sigma.b);
    assert_eq!(Q::from_integer(pencil_singular_count(PencilConfig::FixedCubic).singular_fibers.into()), sigma.a);
    assert_eq!(k.get("delta"), Some(sigma));
}

#[test]
fn polarization_and_slope() {
    let a = PicClass::parse("9l-1d").unwrap();
    assert_eq!(a.to(PicBasis::EtaH), PicClass::eta_h(3, 2));
    let k = pe_constants();
    let s = k.get("Sigma").unwrap().add(&k.get("V").unwrap().scale(&q(9, 2)));
    assert!(s.proportional(&a));
    assert!(!s.proportional(&PicClass::lambda_delta(1, 0)));
    let t = test_curve_constraints(&q(9, 1), &q(1, 1)).unwrap();
    assert_eq!((t.b1.clone(), t.b2.clone()), (q(3, 1), q(3, 1)));
    assert_eq!(hassett_keel_alpha(&M4Class::new(9, 1, 1, 1)), Some(q(5, 9)));
}

proptest! {
    #[test]
    fn conversion_round_trips(a in -50i64..50, b in -50i64..50, d in 1i64..12) {
        let c = PicClass::new(PicBasis::EtaH, q(a, d), q(b, d));
        prop_assert_eq!(c.to(PicBasis::LambdaDelta).to(PicBasis::EtaH), c.clone());
        let c = PicClass::new(PicBasis::LambdaDelta, q(a, d), q(b, d));
        prop_assert_eq!(c.to(PicBasis::EtaH).to(PicBasis::LambdaDelta), c);
    }

    #[test]
    fn alpha_is_scale_invariant(n in 1i64..40, d in 1i64..40) {
        let c = M4Class { a: q(9 * n, d), b0: q(n, d), b1: q(n, d), b2: q(n, d) };
        prop_assert_eq!(hassett_keel_alpha(&c), Some(q(5, 9)));
    }
}

#[test]
fn derived_class_reduces_to_slope_nine() {
    let t = test_curve_constraints(&q(9, 1), &q(1, 1)).unwrap();
    let c = absorb_exceptional(&t.class).unwrap();
    assert_eq!(c, M4Class::new(9, 1, 1, 1));
    assert_eq!(hassett_keel_alpha(&c), Some(q(5, 9)));
    assert!(absorb_exceptional(&M4Class::new(9, 2, 1, 1)).is_none());
}
