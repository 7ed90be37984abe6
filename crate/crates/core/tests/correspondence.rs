use canon4::correspond::*;
use canon4::exactalg::{q, RatMatrix, DEFAULT_JET};
use canon4::singclass::{SingType, TwoThreeScheme};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn c_ab(a: i64, b: i64) -> TwoThreeScheme {
    TwoThreeScheme::parse("x3^2 - x2 x4", &format!("{a} x2^3 + {b} x1 x2 x3 + x1^2 x4")).unwrap()
}

fn c_2a5() -> TwoThreeScheme {
    TwoThreeScheme::parse("x1 x4 - x2 x3", "x1 x3^2 + x2^2 x4").unwrap()
}

fn point(v: &[i64]) -> Vec<canon4::exactalg::Q> {
    v.iter().map(|&x| q(x)).collect()
}

#[test]
fn curve_to_cubic_normal_forms() {
    let x = curve_to_cubic(&c_ab(1, 1)).unwrap();
    let f_ab = CubicThreefold::parse("x0 x3^2 - x0 x2 x4 + x2^3 + x1 x2 x3 + x1^2 x4", None).unwrap();
    assert_eq!(x.f(), f_ab.f());
    let cd = TwoThreeScheme::parse("x1 x2", "x3^3 + x4^3").unwrap();
    let f_d = CubicThreefold::parse("x0 x1 x2 + x3^3 + x4^3", None).unwrap();
    assert_eq!(curve_to_cubic(&cd).unwrap().f(), f_d.f());
}

#[test]
fn round_trip() {
    for c in [c_ab(1, 1), c_2a5(), c_ab(0, 1)] {
        let x = curve_to_cubic(&c).unwrap();
        let back = cubic_to_curve(&x, &point(&[1, 0, 0, 0, 0]), None).unwrap();
        assert_eq!(back, c);
    }
}

#[test]
fn projecting_f01_from_its_node() {
    let x = curve_to_cubic(&c_ab(0, 1)).unwrap();
    let p = point(&[0, 0, 1, 0, 0]);
    assert_eq!(classify_threefold_point(x.f(), &p, DEFAULT_JET).unwrap(), SingType::A(1));
    let c = cubic_to_curve(&x, &p, None).unwrap();
    // swapping x1 and x2 relabels it as C_2A5
    let swap = RatMatrix::from_i64(&[vec![0, 1, 0, 0], vec![1, 0, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1]]);
    let ok = c.transform(&swap).unwrap().same_scheme(&c_2a5());
    assert!(ok, "{:?} {:?}", c.q().to_string(), c.f().to_string());
}

#[test]
fn chordal_pair_from_chordal_cubic() {
    let lemma = TwoThreeScheme::parse("x2 x4 - x3^2", "x1^2 x4 - 2 x1 x2 x3 + x2^3").unwrap();
    let ribbon = c_ab(1, -2);
    assert!(lemma.same_scheme(&ribbon));
    assert!(chordal_detect(&lemma).unwrap());
    assert!(chordal_detect(&ribbon).unwrap());
    assert!(!chordal_detect(&c_2a5()).unwrap());
    assert!(!chordal_detect(&c_ab(1, 1)).unwrap());
}

#[test]
fn marked_point_table() {
    assert_eq!(marked_point_type(&c_2a5(), DEFAULT_JET).unwrap(), SingType::A(1));
    assert_eq!(marked_point_type(&c_ab(1, 1), DEFAULT_JET).unwrap(), SingType::A(5));
    let cd = TwoThreeScheme::parse("x1 x2", "x3^3 + x4^3").unwrap();
    assert_eq!(marked_point_type(&cd, DEFAULT_JET).unwrap(), SingType::D4);
}

#[test]
fn correspondence_c_ab_and_c_d() {
    let r = correspondence_check(&c_ab(1, 1), &[101, 103], DEFAULT_JET).unwrap();
    assert!(r.bijection, "{r:?}");
    assert_eq!(r.marked_point_type, Ok(SingType::A(5)));
    assert_eq!(r.marked_point_direct, SingType::A(5));
    assert_eq!(r.threefold_points.len(), 1);
    assert_eq!(r.threefold_points[0].sing_type, SingType::A(5));

    let cd = TwoThreeScheme::parse("x1 x2", "x3^3 + x4^3").unwrap();
    let r = correspondence_check(&cd, &[101, 103], DEFAULT_JET).unwrap();
    assert!(r.bijection, "{r:?}");
    assert_eq!(r.marked_point_direct, SingType::D4);
    let t: Vec<_> = r.threefold_points.iter().map(|p| p.sing_type).collect();
    assert_eq!(t, vec![SingType::D4, SingType::D4]);
}

#[test]
fn nodal_samples_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut n = 0;
    while n < 20 {
        if let Some(s) = nodal_sample(&mut rng, 101).unwrap() {
            assert_eq!(s.curve_count, s.threefold_count);
            assert!(s.curve_count >= 1);
            n += 1;
        }
    }
}
