//! One line per acceptance criterion; exits nonzero if any fails.

use std::collections::BTreeMap;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use canon4::cli::pipeline::curve_verdict;
use canon4::cli::{corpus, CorpusEntry, Payload};
use canon4::correspond::{curve_to_cubic, nodal_sample};
use canon4::divisors::*;
use canon4::exactalg::{q, Q};
use canon4::lattices::*;
use canon4::singclass::{classify_scheme, Location, ReportOptions, SingType, TwoThreeScheme};
use canon4::stability::chow::plucker_of;
use canon4::stability::*;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(t: Instant, limit: Duration) -> Result<(), String> {
    let e = t.elapsed();
    ensure(e < limit, format!("took {e:.1?}, limit {limit:?}"))
}

fn curves() -> Vec<(CorpusEntry, TwoThreeScheme)> {
    corpus()
        .into_iter()
        .filter_map(|e| {
            let c = e.scheme()?.ok()?;
            Some((e, c))
        })
        .collect()
}

fn entry(name: &str) -> (CorpusEntry, TwoThreeScheme) {
    curves().into_iter().find(|(e, _)| e.name == name).expect("corpus entry")
}

fn types_at(c: &TwoThreeScheme) -> Result<Vec<(SingType, Location, Vec<String>)>, String> {
    let r = classify_scheme(c, &ReportOptions::default()).map_err(|e| e.to_string())?;
    let mut v: Vec<_> = r.points.into_iter().map(|p| (p.sing_type, p.location, p.point)).collect();
    v.sort();
    Ok(v)
}

fn singularity_corpus() -> Outcome {
    let t = Instant::now();
    let (_, ab) = entry("C_AB(1,1)");
    let got = types_at(&ab)?;
    let want = vec![
        (SingType::A(3), Location::VertexOfQ, vec!["1".into(), "0".into(), "0".into(), "0".into()]),
        (SingType::A(5), Location::SmoothPointOfQ, vec!["0".into(), "0".into(), "0".into(), "1".into()]),
    ];
    ensure(got == want, format!("C_AB(1,1): {got:?}"))?;
    let (_, cd) = entry("C_D");
    let mut kinds: Vec<SingType> = types_at(&cd)?.into_iter().map(|x| x.0).collect();
    kinds.sort();
    ensure(kinds == vec![SingType::A(1); 3].into_iter().chain(vec![SingType::D4; 2]).collect::<Vec<_>>(), format!("C_D: {kinds:?}"))?;
    let (_, c2) = entry("C_2A5");
    let r = classify_scheme(&c2, &ReportOptions::default()).map_err(|e| e.to_string())?;
    ensure(r.quadric_rank == 4 && r.types() == vec![SingType::A(5); 2], format!("C_2A5: {:?}", r.types()))?;
    within(t, Duration::from_secs(10))?;
    Ok(format!("C_AB(1,1), C_D, C_2A5 exact in {:.1?}", t.elapsed()))
}

fn stability_table() -> Outcome {
    let t = Instant::now();
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    let mut clauses = Vec::new();
    let mut simultaneous = false;
    let mut vertex_a2 = false;
    for (e, c) in curves() {
        let (r, v) = curve_verdict(&c, &e.flags()).map_err(|err| format!("{}: {err}", e.name))?;
        ensure(v.status == e.status && v.reasons == e.reasons && v.minimal_orbit == e.minimal_orbit, format!("{}: {v:?}", e.name))?;
        ensure(!v.reasons.is_empty(), format!("{}: no clause cited", e.name))?;
        *counts.entry(format!("{:?}", v.status)).or_default() += 1;
        clauses.extend(v.reasons.clone());
        simultaneous |= v.status == Status::Unstable && r.types().contains(&SingType::NotHypersurface);
        vertex_a2 |= v.status == Status::Stable && r.at(Location::VertexOfQ).any(|p| p.sing_type == SingType::A(2));
    }
    let n = counts.values().sum::<usize>();
    let get = |s: Status| counts.get(&format!("{s:?}")).copied().unwrap_or(0);
    ensure(n >= 12, format!("only {n} entries"))?;
    ensure(get(Status::Stable) >= 4 && vertex_a2, "stable exemplars")?;
    ensure(get(Status::StrictlySemistable) >= 6, "strictly semistable exemplars")?;
    for c in ["2.i.alpha", "2.ii.alpha", "2.iii"] {
        ensure(clauses.iter().any(|x| x.starts_with(&c[..4])), format!("clause {c} not covered"))?;
    }
    ensure(get(Status::Unstable) >= 2 && simultaneous, "unstable exemplars")?;
    within(t, Duration::from_secs(10))?;
    Ok(format!(
        "{n} entries ({} stable, {} strictly semistable, {} unstable) in {:.1?}",
        get(Status::Stable),
        get(Status::StrictlySemistable),
        get(Status::Unstable),
        t.elapsed()
    ))
}

fn cross_validation() -> Outcome {
    let t = Instant::now();
    let frames = FrameSearch::random(100, 7);
    let mut n = 0;
    for e in corpus() {
        let (chow, cubic) = match &e.payload {
            Payload::Scheme { .. } => {
                let c = e.scheme().unwrap().map_err(|x| x.to_string())?;
                (Some(chow_form(&c).map_err(|x| x.to_string())?), curve_to_cubic(&c).map_err(|x| x.to_string())?)
            }
            Payload::Cubic { .. } => (None, e.cubic().unwrap().map_err(|x| x.to_string())?),
        };
        let f = cubic.f();
        match e.status {
            Status::Unstable => {
                let from_chow = chow.as_ref().and_then(|r| chow_certificate(r).map(|w| chow_weight_min(r, &w).unwrap()));
                let m = match from_chow {
                    Some(m) => m,
                    None => {
                        let cert = destabilize_search(f, &FrameSearch::default()).map_err(|x| x.to_string())?;
                        let cert = cert.ok_or(format!("{}: no certificate", e.name))?;
                        ensure(torus_weight_min(f, &cert.one_ps).unwrap() >= Q::one(), "cubic weight")?;
                        Q::from_integer(cert.weight_min.into())
                    }
                };
                ensure(m >= Q::one(), format!("{}: weight {m}", e.name))?;
            }
            Status::StrictlySemistable if e.is_normal_form() => {
                let w = zero_weight_witness(f).ok_or(format!("{}: no zero-weight 1-PS", e.name))?;
                ensure(!w.is_trivial() && torus_weight_min(f, &w).unwrap().is_zero(), format!("{}: cubic", e.name))?;
                if let Some(r) = &chow {
                    let w = chow_zero_weight(r).ok_or(format!("{}: no Chow zero weight", e.name))?;
                    ensure(chow_weight_min(r, &w).unwrap().is_zero(), format!("{}: chow", e.name))?;
                }
            }
            Status::Stable => {
                let found = destabilize_search(f, &frames).map_err(|x| x.to_string())?;
                ensure(found.is_none(), format!("{}: certificate found", e.name))?;
                if let Some(r) = &chow {
                    ensure(chow_certificate(r).is_none(), format!("{}: Chow certificate", e.name))?;
                }
            }
            _ => continue,
        }
        n += 1;
    }
    within(t, Duration::from_secs(300))?;
    Ok(format!("{n} entries checked, stable ones over 1 + 100 frames, in {:.1?}", t.elapsed()))
}

fn correspondence() -> Outcome {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let (mut n, mut nodes) = (0, 0);
    while n < 200 {
        if let Some(s) = nodal_sample(&mut rng, 101).map_err(|e| e.to_string())? {
            ensure(s.curve_count == s.threefold_count, format!("sample {n}: {} vs {}", s.curve_count, s.threefold_count))?;
            n += 1;
            nodes += s.curve_count;
        }
    }
    within(t, Duration::from_secs(120))?;
    Ok(format!("{n} samples over F_101, {nodes} singular points, 0 mismatches, {:.1?}", t.elapsed()))
}

fn small_points(c: &TwoThreeScheme) -> Vec<Vec<Q>> {
    let r = -3i64..=3;
    let mut out = Vec::new();
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

fn chow_machinery() -> Outcome {
    for (e, c) in curves() {
        let r = chow_form(&c).map_err(|x| x.to_string())?;
        ensure(r.poly.degree() == Some(6) && r.poly.is_homogeneous(), format!("{}: degree", e.name))?;
    }
    let (_, c) = entry("C_2A5");
    let r = chow_form(&c).map_err(|x| x.to_string())?;
    let pts = small_points(&c);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut lines, mut meets) = (0, 0);
    while lines < 100 {
        let b: Vec<Q> = (0..4).map(|_| q(rng.gen_range(-5..=5))).collect();
        let a = if lines % 2 == 0 { pts[rng.gen_range(0..pts.len())].clone() } else { (0..4).map(|_| q(rng.gen_range(-5..=5))).collect() };
        if plucker_of(&a, &b).iter().all(Zero::is_zero) {
            continue;
        }
        let direct = line_meets(&c, &a, &b);
        ensure(direct == r.eval_line(&a, &b).is_zero(), format!("line {a:?} {b:?}"))?;
        lines += 1;
        meets += usize::from(direct);
    }
    let rhs = mumford_rhs(1, 3, 6, &OnePs::r_convention(vec![0, 1, 1, 1]).unwrap()).unwrap();
    ensure(rhs == q(9), format!("mumford_rhs = {rhs}"))?;
    ensure(schubert_survivors() == vec![(3, 3)], format!("{:?}", schubert_survivors()))?;
    Ok(format!("all Chow forms of degree 6; {lines} lines ({meets} meeting) agree; rhs 9; only deg(C1)=deg(C2)=3 survives"))
}

fn lattices() -> Outcome {
    let t = Instant::now();
    let counts: Vec<usize> = ["A2", "D4", "E6", "E7", "E8"].iter().map(|e| roots(&make_lattice(e).unwrap()).unwrap().len()).collect();
    ensure(counts == vec![6, 24, 72, 126, 240], format!("{counts:?}"))?;
    let b = borcherds_orders().map_err(|e| e.to_string())?;
    let orders: Vec<u64> = b.rows.iter().map(|r| r.vanishing_order).collect();
    ensure(orders == vec![3, 9, 84] && b.coefficients_match, format!("{orders:?}"))?;
    let flagged: Vec<&str> = b.rows.iter().filter(|r| r.flagged).map(|r| r.divisor.as_str()).collect();
    ensure(flagged == vec!["H_n"] && b.rows[0].stated_order == 2, format!("flags {flagged:?}"))?;
    let cusps: Vec<String> = cusp_invariants().map_err(|e| e.to_string())?.into_iter().map(|c| c.label).collect();
    ensure(cusps == vec!["E6^2+A2^2", "E8+E6+A2", "E8^2"], format!("{cusps:?}"))?;
    let heegner: Vec<String> = heegner_types().map_err(|e| e.to_string())?.into_iter().map(|h| h.root_system.label()).collect();
    ensure(heegner == vec!["E6+D4", "E6+A2^2", "E8+A2"], format!("{heegner:?}"))?;
    for e in ["A2", "D4", "E6", "E8"] {
        let l = make_lattice(e).unwrap();
        ensure(matches!(fpf_order3(&l).unwrap(), Fpf3::Found(ref i) if i.is_valid_fpf3(&l)), format!("{e}: no fpf order 3 isometry"))?;
    }
    for e in ["A1", "A3", "A4"] {
        ensure(matches!(fpf_order3(&make_lattice(e).unwrap()).unwrap(), Fpf3::Nonexistent(_)), format!("{e}: not certified"))?;
    }
    within(t, Duration::from_secs(60))?;
    Ok(format!("roots {counts:?}; orders {orders:?} -> 1, 9/2, 14 with H_n flagged; cusps {cusps:?}; in {:.1?}", t.elapsed()))
}

fn divisors() -> Outcome {
    let t = Instant::now();
    let k = pe_constants();
    let table = [("K_PE", (-14, -16)), ("V", (4, 0)), ("Sigma", (33, 34)), ("lambda", (4, 4)), ("delta", (33, 34))];
    for (n, (a, b)) in table {
        ensure(k.get(n) == Some(&PicClass::eta_h(a, b)), n.to_string())?;
    }
    let sigma = k.get("Sigma").unwrap();
    let quad = pencil_singular_count(PencilConfig::FixedQuadric).singular_fibers;
    let cub = pencil_singular_count(PencilConfig::FixedCubic).singular_fibers;
    ensure((quad, cub) == (34, 33) && q(cub) == sigma.a && q(quad) == sigma.b, format!("pencils {quad} {cub}"))?;
    let pol = PicClass::lambda_delta(9, -1);
    ensure(pol.to(PicBasis::EtaH) == PicClass::eta_h(3, 2), "9 lambda - delta")?;
    let s = sigma.add(&k.get("V").unwrap().scale(&Q::new(9.into(), 2.into())));
    ensure(s.proportional(&pol), "Sigma + 9/2 V")?;
    let tc = test_curve_constraints(&q(9), &q(1)).map_err(|e| e.to_string())?;
    ensure(tc.b1 == q(3) && tc.b2 == q(3), format!("b1 {} b2 {}", tc.b1, tc.b2))?;
    let reduced = absorb_exceptional(&tc.class).ok_or("cannot absorb")?;
    let alpha = hassett_keel_alpha(&reduced);
    ensure(alpha == Some(Q::new(5.into(), 9.into())) && hassett_keel_alpha(&M4Class::new(9, 1, 1, 1)) == alpha, format!("{alpha:?}"))?;
    within(t, Duration::from_secs(1))?;
    Ok(format!("table verbatim; pencils 34, 33; b1 = b2 = 3 derived; alpha 5/9; {:.1?}", t.elapsed()))
}

fn determinism() -> Outcome {
    let run = || {
        let out = Command::new(env!("CARGO_BIN_EXE_canon4"))
            .args(["corpus", "run", "--seed", "7"])
            .output()
            .map_err(|e| e.to_string())?;
        let code = out.status.code();
        ensure(code == Some(2), format!("exit status {code:?}, expected 2 (only flagged)"))?;
        Ok::<_, String>(out.stdout)
    };
    let t = Instant::now();
    let a = run()?;
    let b = run()?;
    ensure(!a.is_empty() && a == b, "outputs differ")?;
    Ok(format!("two runs, {} identical bytes, exit 2 (flagged only), {:.1?}", a.len(), t.elapsed()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("1 singularity corpus", singularity_corpus),
        ("2 stability table", stability_table),
        ("3 Hilbert-Mumford cross-validation", cross_validation),
        ("4 correspondence property", correspondence),
        ("5 Chow machinery", chow_machinery),
        ("6 lattices", lattices),
        ("7 divisors", divisors),
        ("8 determinism", determinism),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        match f() {
            Ok(msg) => println!("PASS criterion {name}: {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {name}: {msg}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
