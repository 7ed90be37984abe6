use std::collections::BTreeMap;

use canon4::cli::pipeline::{cubic_verdict, curve_verdict, threefold_verdict_of_curve};
use canon4::cli::{corpus, CorpusEntry, Site};
use canon4::correspond::{curve_to_cubic, CubicThreefold};
use canon4::exactalg::{poly, q, var_names, MultiPoly, RatMatrix, Q};
use canon4::singclass::{SingularityReport, TwoThreeScheme};
use canon4::stability::*;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn curves() -> Vec<(CorpusEntry, TwoThreeScheme)> {
    corpus()
        .into_iter()
        .filter_map(|e| {
            let c = e.scheme()?.unwrap();
            Some((e, c))
        })
        .collect()
}

fn observed(r: &SingularityReport) -> BTreeMap<(String, Site), usize> {
    let mut m = BTreeMap::new();
    for p in &r.points {
        *m.entry((p.sing_type.to_string(), Site::Curve(p.location))).or_insert(0) += 1;
    }
    m
}

fn expected(e: &CorpusEntry) -> BTreeMap<(String, Site), usize> {
    let mut m = BTreeMap::new();
    for (t, s) in &e.singularities {
        *m.entry((t.to_string(), *s)).or_insert(0) += 1;
    }
    m
}

#[test]
fn corpus_curve_verdicts() {
    for (e, c) in curves() {
        let (r, v) = curve_verdict(&c, &e.flags()).unwrap();
        assert_eq!(observed(&r), expected(&e), "{}", e.name);
        assert_eq!(v.status, e.status, "{}: {v:?}", e.name);
        assert_eq!(v.reasons, e.reasons, "{}", e.name);
        assert_eq!(v.minimal_orbit, e.minimal_orbit, "{}", e.name);
    }
}

#[test]
fn corpus_covers_the_table() {
    let entries = curves();
    let count = |s: Status| entries.iter().filter(|(e, _)| e.status == s).count();
    assert!(count(Status::Stable) >= 4);
    assert!(count(Status::StrictlySemistable) >= 6);
    assert!(count(Status::Unstable) >= 2);
    for label in ["2.i.alpha", "2.ii.alpha", "2.ii.beta", "2.iii"] {
        assert!(entries.iter().any(|(e, _)| e.reasons.contains(&label)), "{label}");
    }
    assert!(entries.iter().any(|(e, _)| e.reasons.contains(&"0'")));
}

#[test]
fn degeneration_targets() {
    let target = |name: &str| {
        let (e, c) = curves().into_iter().find(|(e, _)| e.name == name).unwrap();
        let (r, v) = curve_verdict(&c, &e.flags()).unwrap();
        degeneration_target(&r, &v)
    };
    assert_eq!(target("C_D"), Some(DegenerationTarget::CD));
    assert_eq!(target("C_2A5"), Some(DegenerationTarget::C2A5OrCAB));
    assert_eq!(target("C_AB(1,1)"), Some(DegenerationTarget::C2A5OrCAB));
    assert_eq!(target("vertex_a4"), Some(DegenerationTarget::Ribbon));
    assert_eq!(target("smooth"), None);
}

#[test]
fn curve_and_threefold_tables_agree() {
    let entries = curves();
    std::thread::scope(|s| {
        let handles: Vec<_> = entries
            .iter()
            .map(|(e, c)| {
                s.spawn(move || {
                    let (_, cv) = curve_verdict(c, &e.flags()).unwrap();
                    let (_, tv) = threefold_verdict_of_curve(c).unwrap();
                    assert_eq!(cv.status, tv.status, "{}: {cv:?} vs {tv:?}", e.name);
                    assert_eq!(cv.minimal_orbit.map(cubic_orbit_of), tv.minimal_orbit, "{}", e.name);
                })
            })
            .collect();
        for h in handles {
            h.join().unwrap();
        }
    });
}

#[test]
fn cubic_normal_forms() {
    for e in corpus() {
        let Some(x) = e.cubic() else { continue };
        let x = x.unwrap();
        if x.marked().is_none() {
            continue;
        }
        let (d, v) = cubic_verdict(&x).unwrap();
        assert_eq!(v.status, e.status, "{}: {v:?}", e.name);
        assert_eq!(v.reasons, e.reasons, "{}", e.name);
        assert_eq!(v.minimal_orbit, e.minimal_orbit, "{}", e.name);
        let mut got: Vec<(String, Site)> = d
            .points
            .iter()
            .enumerate()
            .filter(|(_, p)| !matches!(p.sing_type, canon4::singclass::SingType::NonIsolated))
            .map(|(i, p)| (p.sing_type.to_string(), if i == 0 { Site::Marked } else { Site::OffMarked }))
            .collect();
        if d.non_isolated {
            got.clear();
        }
        let mut want: Vec<(String, Site)> = e.singularities.iter().map(|(t, s)| (t.to_string(), *s)).collect();
        got.sort();
        want.sort();
        assert_eq!(got, want, "{}", e.name);
    }
}

#[test]
fn tau_invariance_on_f_ab() {
    let tau = RatMatrix::from_i64(
        &(0..5).map(|i| (0..5).map(|j| i64::from(i + j == 4)).collect()).collect::<Vec<_>>(),
    );
    for (a, b) in [(1, 1), (0, 1), (2, 1)] {
        let f = format!("x0 x3^2 - x0 x2 x4 + {a} x2^3 + {b} x1 x2 x3 + x1^2 x4");
        let mut e0 = vec![Q::zero(); 5];
        e0[0] = Q::one();
        let x = CubicThreefold::parse(&f, Some(e0)).unwrap();
        let y = x.transform(&tau).unwrap();
        let (_, v) = cubic_verdict(&x).unwrap();
        let (_, w) = cubic_verdict(&y).unwrap();
        assert_eq!(v, w);
        assert_eq!(v.status, Status::StrictlySemistable);
        assert!(destabilize_search(y.f(), &FrameSearch::default()).unwrap().is_none());
        let z = zero_weight_witness(y.f()).unwrap();
        assert_eq!(torus_weight_min(y.f(), &z).unwrap(), Q::zero());
    }
}

fn chow(c: &TwoThreeScheme) -> ChowForm {
    chow_form(c).unwrap()
}

#[test]
fn hilbert_mumford_cross_validation() {
    let frames = FrameSearch::random(100, 7);
    for (e, c) in curves() {
        let r = chow(&c);
        let x = curve_to_cubic(&c).unwrap();
        match e.status {
            Status::Unstable => {
                let w = chow_certificate(&r)
                    .map(|w| (chow_weight_min(&r, &w).unwrap(), w))
                    .or_else(|| {
                        let cert = destabilize_search(x.f(), &FrameSearch::default()).unwrap()?;
                        Some((Q::from_integer(cert.weight_min.into()), cert.one_ps))
                    });
                let (m, _) = w.unwrap_or_else(|| panic!("{}: no certificate", e.name));
                assert!(m >= Q::one(), "{}", e.name);
            }
            Status::StrictlySemistable if e.is_normal_form() => {
                let w = chow_zero_weight(&r).unwrap();
                assert!(!w.is_trivial());
                assert_eq!(chow_weight_min(&r, &w).unwrap(), Q::zero(), "{}", e.name);
                assert!(chow_certificate(&r).is_none(), "{}", e.name);
                let z = zero_weight_witness(x.f()).unwrap();
                assert_eq!(torus_weight_min(x.f(), &z).unwrap(), Q::zero(), "{}", e.name);
            }
            Status::Stable => {
                assert!(chow_certificate(&r).is_none(), "{}", e.name);
                assert!(destabilize_search(x.f(), &frames).unwrap().is_none(), "{}", e.name);
            }
            _ => {}
        }
    }
}

#[test]
fn chow_forms_have_degree_six() {
    for (e, c) in curves() {
        let r = chow(&c);
        assert_eq!(r.poly.degree(), Some(6), "{}", e.name);
        assert!(r.poly.is_homogeneous(), "{}", e.name);
    }
}

fn small_points(c: &TwoThreeScheme) -> Vec<Vec<Q>> {
    let mut out = Vec::new();
    let r = -3i64..=3;
    for a in r.clone() {
        for b in r.clone() {
            for d in r.clone() {
                for e in r.clone() {
                    let p = vec![q(a), q(b), q(d), q(e)];
                    if (a, b, d, e) != (0, 0, 0, 0) && c.contains(&p) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

#[test]
fn incidence_oracle_on_random_lines() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for name in ["C_2A5", "C_AB(1,1)", "stable_a3_a1", "C_D"] {
        let (_, c) = curves().into_iter().find(|(e, _)| e.name == name).unwrap();
        let r = chow(&c);
        let pts = small_points(&c);
        assert!(!pts.is_empty());
        let (mut meets, mut misses) = (0, 0);
        for k in 0..100 {
            let b: Vec<Q> = (0..4).map(|_| q(rng.gen_range(-5..=5))).collect();
            let a = if k % 2 == 0 { pts[rng.gen_range(0..pts.len())].clone() } else { (0..4).map(|_| q(rng.gen_range(-5..=5))).collect() };
            if plucker_of(&a, &b).iter().all(Zero::is_zero) {
                continue;
            }
            let direct = line_meets(&c, &a, &b);
            assert_eq!(direct, r.eval_line(&a, &b).is_zero(), "{name}: {a:?} {b:?}");
            if direct {
                meets += 1;
            } else {
                misses += 1;
            }
        }
        assert!(meets >= 40 && misses >= 20, "{name}: {meets} {misses}");
    }
}

fn plucker_of(a: &[Q], b: &[Q]) -> Vec<Q> {
    canon4::stability::chow::plucker_of(a, b)
}

#[test]
fn chow_form_is_equivariant() {
    let m = RatMatrix::from_i64(&[vec![1, 1, 0, 0], vec![0, 1, 0, 2], vec![1, 0, 1, 0], vec![0, 0, -1, 1]]);
    for name in ["C_2A5", "C_AB(1,1)"] {
        let (_, c) = curves().into_iter().find(|(e, _)| e.name == name).unwrap();
        let direct = chow(&c.transform(&m).unwrap());
        assert_eq!(chow(&c).transform(&m).unwrap(), direct, "{name}");
    }
}

#[test]
fn chow_weight_is_representative_independent() {
    let rel = canon4::stability::chow::plucker_relation();
    let pv = canon4::stability::chow::plucker_vars();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let weights = [vec![2, 1, -1, -2], vec![3, -1, -1, -1], vec![1, -1, 0, 0], vec![5, 2, -3, -4]];
    for name in ["C_2A5", "C_D", "stable_a2"] {
        let (_, c) = curves().into_iter().find(|(e, _)| e.name == name).unwrap();
        let r = chow(&c);
        for w in &weights {
            let w = OnePs::sum_zero(w.clone()).unwrap();
            let nf = chow_weight_min(&r, &w).unwrap();
            let pw: Vec<i64> = canon4::stability::chow::PLUCKER_PAIRS.iter().map(|&(i, j)| w.weights[i] + w.weights[j]).collect();
            for _ in 0..10 {
                // a random representative: add the relation times a random quartic
                let mut g = MultiPoly::zero(&pv);
                for _ in 0..6 {
                    let mut e = vec![0u32; 6];
                    for _ in 0..4 {
                        e[rng.gen_range(0..6)] += 1;
                    }
                    g.add_term(canon4::exactalg::Monomial(e), q(rng.gen_range(-3..=3)));
                }
                let rep = &r.poly + &(&rel * &g);
                assert_eq!(canon4::stability::normal_form(&rep), r.poly);
                let min = rep
                    .terms()
                    .map(|(m, _)| m.0.iter().zip(&pw).map(|(&a, &b)| a as i64 * b).sum::<i64>())
                    .min()
                    .unwrap();
                assert!(Q::from_integer(min.into()) <= nf, "{name}");
            }
        }
    }
}

#[test]
fn reducible_quadric_direction_is_positive() {
    let (_, c) = curves().into_iter().find(|(e, _)| e.name == "nonreduced_planes").unwrap();
    let r = chow(&c);
    let w = OnePs::r_convention(vec![0, 1, 1, 1]).unwrap();
    assert!(chow_weight_min(&r, &w).unwrap() > Q::zero());
    let smooth = chow(&curves().into_iter().find(|(e, _)| e.name == "smooth").unwrap().1);
    assert_eq!(chow_weight_min(&smooth, &OnePs::sum_zero(vec![0, 0, 0, 0]).unwrap()).unwrap(), Q::zero());
}

#[test]
fn ribbon_weight_vanishes_on_twisted_cubic_torus() {
    let (_, c) = curves().into_iter().find(|(e, _)| e.name == "C_AB(1,-2)").unwrap();
    let r = chow(&c);
    // the twisted cubic (s^3, s^2 t, s t^2, t^3) up to the coordinate order of the cone
    let w = chow_zero_weight(&r).unwrap();
    assert_eq!(chow_weight_min(&r, &w).unwrap(), Q::zero());
}

#[test]
fn mumford_and_schubert() {
    let w = OnePs::r_convention(vec![0, 1, 1, 1]).unwrap();
    assert_eq!(mumford_rhs(1, 3, 6, &w).unwrap(), q(9));
    assert_eq!(schubert_survivors(), vec![(3, 3)]);
    assert!(linearization_balance(3, 2));
}

fn perm_matrix(sigma: &[usize]) -> RatMatrix {
    let n = sigma.len();
    RatMatrix::from_i64(&(0..n).map(|i| (0..n).map(|j| i64::from(sigma[i] == j)).collect()).collect::<Vec<_>>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn torus_weight_is_permutation_invariant(
        terms in prop::collection::vec((prop::collection::vec(0u32..4, 5), -5i64..=5), 1..8),
        w in prop::collection::vec(-4i64..=4, 4),
        sigma in Just((0..5usize).collect::<Vec<_>>()).prop_shuffle(),
    ) {
        let v = var_names("x", 0, 5);
        let f = MultiPoly::from_terms(&v, terms.into_iter().map(|(e, c)| (e, q(c))));
        prop_assume!(!f.is_zero());
        let mut w = w;
        w.push(-w.iter().sum::<i64>());
        let w = OnePs::sum_zero(w).unwrap();
        let g = f.substitute_linear(&perm_matrix(&sigma)).unwrap();
        // x_i -> x_sigma(i) moves the weight of x_i to position sigma(i)
        let mut inv = vec![0; 5];
        for (i, &s) in sigma.iter().enumerate() {
            inv[s] = i;
        }
        prop_assert_eq!(torus_weight_min(&g, &w.permuted(&inv)).unwrap(), torus_weight_min(&f, &w).unwrap());
    }

    #[test]
    fn certificates_are_positive(
        rows in prop::collection::vec(prop::collection::vec(0i64..4, 4), 1..10),
    ) {
        if let Some(w) = canon4::stability::destabilize::certificate_for_support(&rows, 4) {
            prop_assert!(canon4::stability::destabilize::is_positive_certificate(&rows, &w));
            prop_assert_eq!(w.weights.iter().sum::<i64>(), 0);
        }
    }

    #[test]
    fn lp_feasible_points_satisfy_constraints(
        cons in prop::collection::vec((prop::collection::vec(-3i64..=3, 3), -5i64..=5, 0u8..3), 1..7),
    ) {
        let mut lp = Lp::new(3);
        for (a, b, r) in &cons {
            let rel = [Rel::Ge, Rel::Le, Rel::Eq][*r as usize];
            lp.constrain(a.iter().map(|&x| q(x)).collect(), rel, q(*b));
        }
        if let Some(x) = lp.feasible_point() {
            for (a, b, r) in &cons {
                let lhs: Q = a.iter().zip(&x).map(|(&ai, xi)| q(ai) * xi).sum();
                match r {
                    0 => prop_assert!(lhs >= q(*b)),
                    1 => prop_assert!(lhs <= q(*b)),
                    _ => prop_assert_eq!(lhs, q(*b)),
                }
            }
        }
    }
}

#[test]
fn triple_point_cubic_is_destabilized() {
    let v = var_names("x", 0, 5);
    let f = poly("x1^3 + x2 x3 x4 + x4^3 + x2^3", &v);
    let w = OnePs::sum_zero(vec![-4, 1, 1, 1, 1]).unwrap();
    assert_eq!(torus_weight_min(&f, &w).unwrap(), q(3));
    assert!(destabilize_search(&f, &FrameSearch::default()).unwrap().is_some());
}
