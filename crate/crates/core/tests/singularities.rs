use std::collections::BTreeMap;

use canon4::cli::{corpus, emit_scheme, parse_scheme, CorpusEntry};
use canon4::exactalg::{parse_rational, poly, q, var_names, MultiPoly, RatMatrix, Q};
use canon4::singclass::{classify_scheme, ReportOptions, SingularityReport, TwoThreeScheme};
use proptest::prelude::*;

fn curves() -> Vec<(CorpusEntry, TwoThreeScheme)> {
    corpus()
        .into_iter()
        .filter_map(|e| {
            let c = e.scheme()?.unwrap();
            Some((e, c))
        })
        .collect()
}

fn census(r: &SingularityReport) -> BTreeMap<String, usize> {
    let mut m = BTreeMap::new();
    for p in &r.points {
        *m.entry(format!("{}@{:?}", p.sing_type, p.location)).or_insert(0) += 1;
    }
    m
}

fn classify(c: &TwoThreeScheme) -> SingularityReport {
    classify_scheme(c, &ReportOptions::default()).unwrap()
}

// Unit upper triangular times a permutation: always invertible over Z.
fn unimodular(perm: &[usize], upper: &[i64]) -> RatMatrix {
    let mut u = vec![vec![0i64; 4]; 4];
    let mut k = 0;
    for i in 0..4 {
        u[i][i] = 1;
        for j in i + 1..4 {
            u[i][j] = upper[k];
            k += 1;
        }
    }
    let rows: Vec<Vec<Q>> = (0..4).map(|i| (0..4).map(|j| q(u[i][perm[j]])).collect()).collect();
    RatMatrix::from_rows(rows)
}

fn permutation() -> impl Strategy<Value = Vec<usize>> {
    Just(vec![0usize, 1, 2, 3]).prop_shuffle()
}

#[test]
fn scheme_files_round_trip() {
    for (e, c) in curves() {
        let text = emit_scheme(&c);
        let back = parse_scheme(&text).unwrap();
        assert_eq!(back.q(), c.q(), "{}", e.name);
        assert_eq!(back.f(), c.f(), "{}", e.name);
    }
}

#[test]
fn exact_points_lie_on_curves() {
    for (e, c) in curves() {
        for p in classify(&c).points.iter().filter(|p| p.is_exact()) {
            let pt: Vec<Q> = p.point.iter().map(|s| parse_rational(s).unwrap()).collect();
            assert!(c.contains(&pt), "{}: {:?}", e.name, p.point);
        }
    }
}

#[test]
fn f_is_only_defined_modulo_q() {
    let v = var_names("x", 1, 4);
    for (e, c) in curves() {
        let shifted = c.f() + &(c.q() * &poly("x1 - 3 x2 + x4", &v));
        let d = TwoThreeScheme::new(c.q().clone(), shifted).unwrap();
        assert!(d.same_scheme(&c), "{}", e.name);
        assert_eq!(census(&classify(&d)), census(&classify(&c)), "{}", e.name);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn classification_is_projectively_invariant(
        idx in 0usize..7,
        perm in permutation(),
        upper in prop::collection::vec(-2i64..=2, 6),
    ) {
        let names = ["stable_a1", "stable_a3_a1", "stable_a2_vertex", "C_2A5", "C_AB(1,1)", "C_AB(0,1)", "C_D"];
        let (_, c) = curves().into_iter().find(|(e, _)| e.name == names[idx]).unwrap();
        let m = unimodular(&perm, &upper);
        let d = c.transform(&m).unwrap();
        prop_assert_eq!(census(&classify(&d)), census(&classify(&c)));
    }

    #[test]
    fn products_evaluate_pointwise(
        a in prop::collection::vec(-4i64..=4, 5),
        b in prop::collection::vec(-4i64..=4, 5),
        pt in prop::collection::vec(-3i64..=3, 4),
    ) {
        let v = var_names("x", 1, 4);
        let mono = ["x1^2", "x1 x2", "x3 x4", "x4^2", "x2 x3"];
        let build = |c: &[i64]| -> MultiPoly<Q> {
            let s: Vec<String> = c.iter().zip(mono).map(|(k, m)| format!("{k} {m}")).collect();
            poly(&s.join(" + "), &v)
        };
        let (f, g) = (build(&a), build(&b));
        let x: Vec<Q> = pt.iter().map(|&t| q(t)).collect();
        prop_assert_eq!((&f * &g).eval(&x), f.eval(&x) * g.eval(&x));
        prop_assert_eq!((&f - &g).eval(&x), f.eval(&x) - g.eval(&x));
        prop_assert_eq!(MultiPoly::parse(&f.to_string(), &v).unwrap(), f);
    }
}
