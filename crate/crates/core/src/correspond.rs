//! Cubic threefolds with a double point and their (2,3) curves:
//! `F = x0 * q + f` and back, with singularity transfer.

use num_traits::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::exactalg::field::rational_reconstruct;
use crate::exactalg::{rational_to_string, var_names, Field, Gf, Matrix, MultiPoly, RatMatrix, Q};
use crate::singclass::classify::{classify_local, cubic_discriminant, local_chart};
use crate::singclass::quadric::normalize_point;
use crate::singclass::report::{classify_scheme, ReportOptions, NON_ISOLATED_THRESHOLD};
use crate::singclass::scan::{check_prime, point_count_scan, reduce_point, singular_points_scan, threefold_scan_off_marked};
use crate::singclass::{quadric_rank, Location, SingType, SingularityReport, TwoThreeScheme};
use crate::{Error, Result};

/// Variable names `x0..x4`.
pub fn threefold_vars() -> Vec<String> {
    var_names("x", 0, 5)
}

/// A cubic form in `x0..x4`, optionally with a marked double point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicThreefold {
    f: MultiPoly<Q>,
    marked: Option<Vec<Q>>,
}

/// Order of vanishing of `f` at `pt`, capped at 3.
pub fn multiplicity_at<F: Field>(f: &MultiPoly<F>, pt: &[F]) -> u32 {
    if !f.eval(pt).is_zero() {
        return 0;
    }
    let grad = f.gradient();
    if grad.iter().any(|g| !g.eval(pt).is_zero()) {
        return 1;
    }
    if grad.iter().any(|g| g.gradient().iter().any(|h| !h.eval(pt).is_zero())) {
        return 2;
    }
    3
}

impl CubicThreefold {
    pub fn new(f: MultiPoly<Q>, marked: Option<Vec<Q>>) -> Result<Self> {
        if f.nvars() != 5 {
            return Err(Error::Dimension("a cubic threefold needs 5 variables".into()));
        }
        if !f.is_homogeneous() || f.degree() != Some(3) {
            return Err(Error::NotHomogeneous("F must be a cubic form".into()));
        }
        let f = f.with_vars(&threefold_vars());
        if let Some(p) = &marked {
            if p.len() != 5 || p.iter().all(Zero::is_zero) {
                return Err(Error::Dimension("marked point needs 5 coordinates".into()));
            }
            if multiplicity_at(&f, p) < 2 {
                return Err(Error::Invalid("marked point is not a singular point of F".into()));
            }
        }
        Ok(CubicThreefold { f, marked })
    }

    pub fn parse(src: &str, marked: Option<Vec<Q>>) -> Result<Self> {
        Self::new(MultiPoly::parse(src, &threefold_vars())?, marked)
    }

    pub fn f(&self) -> &MultiPoly<Q> {
        &self.f
    }

    pub fn marked(&self) -> Option<&[Q]> {
        self.marked.as_deref()
    }

    /// Pull back along `x -> M x`; the marked point moves to `M^-1 p`.
    pub fn transform(&self, m: &RatMatrix) -> Result<Self> {
        let f = self.f.substitute_linear(m)?;
        let marked = match &self.marked {
            Some(p) => Some(m.inverse()?.mul_vec(p)),
            None => None,
        };
        Self::new(f, marked)
    }
}

/// `F = x0 q + f`, marked at `(1,0,0,0,0)`.
pub fn curve_to_cubic(c: &TwoThreeScheme) -> Result<CubicThreefold> {
    if c.q().is_zero() {
        return Err(Error::Invalid("q = 0".into()));
    }
    let v = threefold_vars();
    let pos = [1, 2, 3, 4];
    let x0 = MultiPoly::var(&v, 0);
    let f = &(&x0 * &c.q().embed(&v, &pos)) + &c.f().embed(&v, &pos);
    let mut e0 = vec![Q::zero(); 5];
    e0[0] = Q::one();
    CubicThreefold::new(f, Some(e0))
}

/// Default frame sending `e0` to `p`: column 0 is `p`, and the standard
/// vector at the first nonzero coordinate of `p` is replaced by `e0`.
pub fn default_frame(p: &[Q]) -> RatMatrix {
    let n = p.len();
    let k = p.iter().position(|c| !c.is_zero()).expect("nonzero point");
    let mut m = RatMatrix::identity(n);
    for i in 0..n {
        m[(i, 0)] = p[i].clone();
    }
    if k != 0 {
        for i in 0..n {
            m[(i, k)] = if i == 0 { Q::one() } else { Q::zero() };
        }
    }
    m
}

/// Project from the double point `p`: move it to `(1,0,0,0,0)` with `frame`
/// (or [`default_frame`]) and split `F = x0 q + f`.
pub fn cubic_to_curve(x: &CubicThreefold, p: &[Q], frame: Option<&RatMatrix>) -> Result<TwoThreeScheme> {
    if p.len() != 5 {
        return Err(Error::Dimension("point needs 5 coordinates".into()));
    }
    match multiplicity_at(x.f(), p) {
        0 => return Err(Error::PointNotOnScheme),
        1 => return Err(Error::Invalid("p is a smooth point of X".into())),
        2 => {}
        _ => return Err(Error::Refused("p is a triple point: projection from p is undefined".into())),
    }
    let m = match frame {
        Some(m) => {
            let col0 = m.col(0);
            let ratio_ok = Matrix::from_rows(vec![col0, p.to_vec()]).rank() == 1;
            if !ratio_ok {
                return Err(Error::Invalid("frame does not send e0 to p".into()));
            }
            m.clone()
        }
        None => default_frame(p),
    };
    let g = x.f().substitute_linear(&m)?;
    debug_assert!(g.degree_in(0) <= 1);
    let v4 = crate::singclass::scheme_vars();
    let drop0 = |h: &MultiPoly<Q>| -> MultiPoly<Q> {
        MultiPoly::from_terms(&v4, h.terms().map(|(mono, c)| (mono.0[1..].to_vec(), c.clone())))
    };
    TwoThreeScheme::new(drop0(&g.coeff_in(0, 1)), drop0(&g.coeff_in(0, 0)))
}

/// Type of the marked double point of `curve_to_cubic(C)`, read off from
/// the quadric and the curve.
pub fn marked_point_type(c: &TwoThreeScheme, jet: u32) -> Result<SingType> {
    let qr = quadric_rank(c.q());
    match qr.rank {
        4 => Ok(SingType::A(1)),
        3 => {
            let v = qr.vertex().unwrap().to_vec();
            if !c.contains(&v) {
                return Ok(SingType::A(2));
            }
            match crate::singclass::classify_point(c.q(), c.f(), &v, jet)?.0 {
                SingType::A(k) if k + 2 < jet => Ok(SingType::A(k + 2)),
                other => Err(Error::Refused(format!("vertex singularity {other} is outside the A_k table"))),
            }
        }
        2 => {
            let (a, b) = (&qr.kernel[0], &qr.kernel[1]);
            let v = var_names("t", 0, 2);
            let line: Vec<MultiPoly<Q>> = (0..4)
                .map(|i| MultiPoly::linear(&v, &[a[i].clone(), b[i].clone()]))
                .collect();
            let r = c.f().compose(&line);
            if r.is_zero() {
                return Err(Error::Refused("the singular line of Q lies on C".into()));
            }
            let co = |e: [u32; 2]| r.coeff(&e);
            let disc = cubic_discriminant(&co([3, 0]), &co([2, 1]), &co([1, 2]), &co([0, 3]));
            if disc.is_zero() {
                Err(Error::Refused("C meets the singular line of Q in fewer than three distinct points".into()))
            } else {
                Ok(SingType::D4)
            }
        }
        r => Err(Error::Refused(format!("quadric of rank {r}"))),
    }
}

/// Classify a singular point of a threefold by reducing its local equation.
pub fn classify_threefold_point<F: Field>(f: &MultiPoly<F>, pt: &[F], jet: u32) -> Result<SingType> {
    if multiplicity_at(f, pt) < 2 {
        return Err(Error::Invalid("point is not a singular point of X".into()));
    }
    let g = local_chart(std::slice::from_ref(f), pt).remove(0);
    classify_local(&g, jet)
}

fn classify_threefold_mod<const P: u64>(f: &MultiPoly<Q>, pt: &[u64], jet: u32) -> Result<SingType> {
    let fp = f.map_coeffs(Gf::<P>::from_rational).ok_or(Error::BadPrime(P))?;
    let x: Vec<Gf<P>> = pt.iter().map(|&c| Gf::from_u64(c)).collect();
    classify_threefold_point(&fp, &x, jet)
}

pub fn classify_threefold_point_mod(f: &MultiPoly<Q>, p: u64, pt: &[u64], jet: u32) -> Result<SingType> {
    crate::dispatch_prime!(p, classify_threefold_mod, f, pt, jet)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreefoldPoint {
    pub point: Vec<String>,
    pub prime: Option<u64>,
    #[serde(rename = "type")]
    pub sing_type: SingType,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchedPair {
    pub curve_point: Vec<String>,
    pub threefold_point: Vec<String>,
    pub prime: Option<u64>,
    #[serde(rename = "type")]
    pub sing_type: SingType,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorrespondenceReport {
    pub curve: SingularityReport,
    pub threefold_points: Vec<ThreefoldPoint>,
    pub threefold_non_isolated: bool,
    /// Marked-point type from the quadric table, or the refusal reason.
    pub marked_point_type: std::result::Result<SingType, String>,
    /// Marked-point type from direct jet reduction of `q + f`.
    pub marked_point_direct: SingType,
    pub pairs: Vec<MatchedPair>,
    pub bijection: bool,
    /// Curve singularities at singular points of Q are absorbed into the
    /// marked point and do not appear off it.
    pub absorbed_at_marked: Vec<SingType>,
}

/// Solve for `x0` making `(x0, y)` a singular point of `F`, over Q.
fn solve_x0(f: &MultiPoly<Q>, y: &[Q]) -> Option<Q> {
    let mut at0 = vec![Q::zero()];
    at0.extend(y.iter().cloned());
    let mut at1 = vec![Q::one()];
    at1.extend(y.iter().cloned());
    let grad = f.gradient();
    let a: Vec<Q> = grad.iter().map(|g| g.eval(&at0)).collect();
    let b: Vec<Q> = grad.iter().zip(&a).map(|(g, a)| g.eval(&at1) - a).collect();
    let k = b.iter().position(|c| !c.is_zero())?;
    let x0 = -a[k].clone() / b[k].clone();
    a.iter().zip(&b).all(|(ai, bi)| (ai + &x0 * bi).is_zero()).then_some(x0)
}

pub fn correspondence_check(c: &TwoThreeScheme, primes: &[u64], jet: u32) -> Result<CorrespondenceReport> {
    let opts = ReportOptions { primes: primes.to_vec(), jet, candidates: vec![] };
    let curve = classify_scheme(c, &opts)?;
    let x = curve_to_cubic(c)?;
    let local = c.q() + c.f();
    let marked_point_direct = if local.is_zero() {
        SingType::NonIsolated
    } else {
        classify_local(&local, jet)?
    };
    let marked = marked_point_type(c, jet).map_err(|e| e.to_string());

    let mut threefold_points = Vec::new();
    let mut exact_y: Vec<Vec<Q>> = Vec::new();
    let mut non_isolated = false;
    let mut scans = Vec::new();
    for &p in primes {
        let s = threefold_scan_off_marked(x.f(), p)?;
        non_isolated |= s.non_isolated || s.points.len() > NON_ISOLATED_THRESHOLD;
        scans.push((p, s.points));
    }
    if !non_isolated {
        for (p, pts) in &scans {
            for pt in pts {
                let Some(y) = pt[1..].iter().map(|&v| rational_reconstruct(v, *p)).collect::<Option<Vec<Q>>>() else {
                    continue;
                };
                let y = normalize_point(&y);
                if exact_y.contains(&y) {
                    continue;
                }
                let Some(x0) = solve_x0(x.f(), &y) else { continue };
                let mut full = vec![x0];
                full.extend(y.iter().cloned());
                if let Ok(t) = classify_threefold_point(x.f(), &full, jet) {
                    threefold_points.push(ThreefoldPoint {
                        point: full.iter().map(rational_to_string).collect(),
                        prime: None,
                        sing_type: t,
                    });
                    exact_y.push(y);
                }
            }
        }
        let best = scans
            .iter()
            .filter(|(p, _)| crate::singclass::classify::MODULAR_PRIMES.contains(p))
            .max_by_key(|(p, pts)| (pts.len(), std::cmp::Reverse(*p)));
        if let Some((p, pts)) = best {
            let known: Vec<Vec<u64>> = exact_y.iter().filter_map(|y| reduce_point(y, *p)).collect();
            for pt in pts.iter().filter(|pt| !known.contains(&pt[1..].to_vec())) {
                let t = classify_threefold_point_mod(x.f(), *p, pt, jet)?;
                threefold_points.push(ThreefoldPoint {
                    point: pt.iter().map(|v| v.to_string()).collect(),
                    prime: Some(*p),
                    sing_type: t,
                });
            }
        }
    }

    // match curve singularities at smooth points of Q with X off p
    let smooth: Vec<_> = curve.at(Location::SmoothPointOfQ).collect();
    let absorbed_at_marked: Vec<SingType> =
        curve.points.iter().filter(|p| p.location != Location::SmoothPointOfQ).map(|p| p.sing_type).collect();
    let mut pairs = Vec::new();
    let mut used = vec![false; threefold_points.len()];
    for cp in &smooth {
        let hit = threefold_points.iter().enumerate().find(|(i, tp)| {
            !used[*i] && tp.prime == cp.prime && y_part_matches(&tp.point, &cp.point, cp.prime)
        });
        if let Some((i, tp)) = hit {
            if tp.sing_type == cp.sing_type {
                used[i] = true;
                pairs.push(MatchedPair {
                    curve_point: cp.point.clone(),
                    threefold_point: tp.point.clone(),
                    prime: cp.prime,
                    sing_type: cp.sing_type,
                });
            }
        }
    }
    let bijection = !non_isolated
        && !curve.non_isolated
        && pairs.len() == smooth.len()
        && pairs.len() == threefold_points.len();
    Ok(CorrespondenceReport {
        curve,
        threefold_points,
        threefold_non_isolated: non_isolated,
        marked_point_type: marked,
        marked_point_direct,
        pairs,
        bijection,
        absorbed_at_marked,
    })
}

fn y_part_matches(threefold: &[String], curve: &[String], prime: Option<u64>) -> bool {
    match prime {
        Some(_) => threefold[1..] == *curve,
        None => {
            let parse = |v: &[String]| -> Vec<Q> {
                v.iter().map(|s| crate::exactalg::parse_rational(s).unwrap()).collect()
            };
            normalize_point(&parse(&threefold[1..])) == normalize_point(&parse(curve))
        }
    }
}

/// Support of `V(q, f)` is a twisted cubic carrying a double structure:
/// `q` of rank at least 3, and at each prime every one of the `p + 1`
/// F_p-points of `C` is singular, with the points spanning P^3.
pub fn chordal_detect(c: &TwoThreeScheme) -> Result<bool> {
    chordal_detect_at(c, &[101, 103])
}

pub fn chordal_detect_at(c: &TwoThreeScheme, primes: &[u64]) -> Result<bool> {
    if !c.is_complete_intersection() || quadric_rank(c.q()).rank < 3 {
        return Ok(false);
    }
    for &p in primes {
        check_prime(p)?;
        let sing = singular_points_scan(c, p)?;
        if sing.len() as u64 != p + 1 || point_count_scan(c, p)? as u64 != p + 1 {
            return Ok(false);
        }
        if rank_mod_p(&sing, p) != 4 {
            return Ok(false);
        }
    }
    Ok(true)
}

fn rank_mod_p(rows: &[Vec<u64>], p: u64) -> usize {
    use crate::exactalg::field::{inv_mod, mul_mod};
    let mut m: Vec<Vec<u64>> = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][col] != 0) else { continue };
        m.swap(rank, piv);
        let inv = inv_mod(m[rank][col], p).unwrap();
        for r in 0..m.len() {
            if r != rank && m[r][col] != 0 {
                let k = mul_mod(m[r][col], inv, p);
                for j in 0..cols {
                    let sub = mul_mod(k, m[rank][j], p);
                    m[r][j] = (m[r][j] + p - sub) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// A random curve over F_p (coefficients as integers in `[0, p)`) with a
/// singular point forced at a random point, and its node counts.
#[derive(Clone, Debug)]
pub struct NodalSample {
    pub scheme: TwoThreeScheme,
    pub curve_count: usize,
    pub threefold_count: usize,
}

fn random_form<R: Rng>(rng: &mut R, vars: &[String], deg: u32, p: u64, skip: impl Fn(&[u32]) -> bool) -> MultiPoly<Q> {
    let n = vars.len();
    let mut terms = Vec::new();
    let mut e = vec![0u32; n];
    fn rec(i: usize, left: u32, e: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i + 1 == e.len() {
            e[i] = left;
            out.push(e.clone());
            return;
        }
        for k in (0..=left).rev() {
            e[i] = k;
            rec(i + 1, left - k, e, out);
        }
    }
    let mut monos = Vec::new();
    rec(0, deg, &mut e, &mut monos);
    for m in monos {
        if !skip(&m) {
            terms.push((m, Q::from_integer(rng.gen_range(0..p).into())));
        }
    }
    MultiPoly::from_terms(vars, terms)
}

/// Draw one sample; `None` when it fails the filters (rank of `q` below 4
/// mod p, or non-isolated singularities).
pub fn nodal_sample<R: Rng>(rng: &mut R, p: u64) -> Result<Option<NodalSample>> {
    let v = crate::singclass::scheme_vars();
    // q(e1) = 0 and f vanishes to order 1 along the same normal direction
    let q0 = random_form(rng, &v, 2, p, |e| e[0] == 2);
    let lam = Q::from_integer(rng.gen_range(1..p).into());
    let mut f0 = random_form(rng, &v, 3, p, |e| e[0] >= 2);
    for (m, c) in q0.terms() {
        if m.0[0] == 1 {
            let mut e = m.0.clone();
            e[0] = 2;
            f0.add_term(crate::exactalg::Monomial(e), c * &lam);
        }
    }
    let frame = loop {
        let rows: Vec<Vec<Q>> = (0..4)
            .map(|_| (0..4).map(|_| Q::from_integer(rng.gen_range(0..p).into())).collect())
            .collect();
        let m = RatMatrix::from_rows(rows);
        if rank_mod_p(&reduce_rows(&m, p), p) == 4 {
            break m;
        }
    };
    let q = reduce_coeffs(&q0.substitute_linear(&frame)?, p);
    let f = reduce_coeffs(&f0.substitute_linear(&frame)?, p);
    if rank_mod_p(&reduce_rows(&crate::exactalg::quadratic_gram(&q), p), p) != 4 {
        return Ok(None);
    }
    let scheme = TwoThreeScheme::new(q, f)?;
    let curve = singular_points_scan(&scheme, p)?;
    if curve.len() > NON_ISOLATED_THRESHOLD {
        return Ok(None);
    }
    let x = curve_to_cubic(&scheme)?;
    let s = threefold_scan_off_marked(x.f(), p)?;
    if s.non_isolated {
        return Ok(None);
    }
    Ok(Some(NodalSample { scheme, curve_count: curve.len(), threefold_count: s.points.len() }))
}

fn reduce_rows(m: &RatMatrix, p: u64) -> Vec<Vec<u64>> {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(|c| crate::exactalg::field::reduce_mod(c, p).unwrap()).collect())
        .collect()
}

fn reduce_coeffs(f: &MultiPoly<Q>, p: u64) -> MultiPoly<Q> {
    f.map_coeffs(|c| crate::exactalg::field::reduce_mod(c, p).map(|r| Q::from_integer(r.into())))
        .unwrap()
}
