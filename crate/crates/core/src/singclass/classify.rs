//! Jet-based recognition of A_k and D_4 hypersurface singularities.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::exactalg::series::compose_truncated;
use crate::exactalg::{quadratic_gram, series_implicit_solve, series_implicit_system, Field, Gf, Matrix, MultiPoly, TruncatedSeries, Q};
use crate::{Error, Result};

use super::quadric::{locate, Location};

/// Singularity type of an isolated hypersurface singularity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SingType {
    A(u32),
    D4,
    /// Corank at least two and not D_4.
    Corank2Other,
    NonIsolated,
    InconclusiveAtJet(u32),
    /// Both surfaces are singular at the point.
    NotHypersurface,
}

impl fmt::Display for SingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SingType::A(k) => write!(f, "A{k}"),
            SingType::D4 => write!(f, "D4"),
            SingType::Corank2Other => write!(f, "Corank2Other"),
            SingType::NonIsolated => write!(f, "NonIsolated"),
            SingType::InconclusiveAtJet(j) => write!(f, "InconclusiveAtJet{j}"),
            SingType::NotHypersurface => write!(f, "NotHypersurface"),
        }
    }
}

impl FromStr for SingType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse { location: "singularity type".into(), message: format!("unknown type '{s}'") };
        Ok(match s {
            "D4" => SingType::D4,
            "Corank2Other" => SingType::Corank2Other,
            "NonIsolated" => SingType::NonIsolated,
            "NotHypersurface" => SingType::NotHypersurface,
            _ => {
                if let Some(j) = s.strip_prefix("InconclusiveAtJet") {
                    SingType::InconclusiveAtJet(j.parse().map_err(|_| bad())?)
                } else if let Some(k) = s.strip_prefix('A') {
                    SingType::A(k.parse().map_err(|_| bad())?)
                } else {
                    return Err(bad());
                }
            }
        })
    }
}

impl Serialize for SingType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for SingType {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Discriminant of the binary cubic `a s^3 + b s^2 u + c s u^2 + d u^3`.
pub fn cubic_discriminant<F: Field>(a: &F, b: &F, c: &F, d: &F) -> F {
    let n = |k: i64| F::from_i64(k);
    b.clone() * b.clone() * c.clone() * c.clone() - n(4) * a.clone() * c.pow_u32(3) - n(4) * b.pow_u32(3) * d.clone()
        - n(27) * a.clone() * a.clone() * d.clone() * d.clone()
        + n(18) * a.clone() * b.clone() * c.clone() * d.clone()
}

/// Classify the singularity at the origin of `g` (any number of
/// variables), looking at terms up to total degree `jet`.
///
/// The quadratic part is split off: the variables of its nondegenerate
/// block are eliminated by solving their partial derivatives as series in
/// the kernel variables, and the residual function is examined.
pub fn classify_local<F: Field>(g: &MultiPoly<F>, jet: u32) -> Result<SingType> {
    let n = g.nvars();
    let origin = vec![F::zero(); n];
    if !g.eval(&origin).is_zero() || g.gradient().iter().any(|d| !d.eval(&origin).is_zero()) {
        return Err(Error::Invalid("function is not singular at the origin".into()));
    }
    let g = g.truncate(jet);
    let hess = quadratic_gram(&g.homogeneous_part(2));
    let r = hess.rank();
    if r == n {
        return Ok(SingType::A(1));
    }
    let kernel = hess.kernel();
    let c = kernel.len();
    // complement of the kernel from standard basis vectors
    let mut cols: Vec<Vec<F>> = Vec::new();
    for i in 0..n {
        if cols.len() == r {
            break;
        }
        let mut e = vec![F::zero(); n];
        e[i] = F::one();
        let mut trial = cols.clone();
        trial.push(e.clone());
        trial.extend(kernel.iter().cloned());
        if Matrix::from_rows(trial).rank() == cols.len() + 1 + c {
            cols.push(e);
        }
    }
    cols.extend(kernel);
    let frame = Matrix::from_rows(cols).transpose();
    let g2 = g.substitute_linear(&frame)?;
    let residual = if r == 0 {
        g2
    } else {
        let eqs: Vec<MultiPoly<F>> = (0..r).map(|i| g2.partial(i)).collect();
        let solve: Vec<usize> = (0..r).collect();
        let phi = series_implicit_system(&eqs, &solve, jet)?;
        let rest: Vec<String> = g2.vars()[r..].to_vec();
        let mut subs: Vec<MultiPoly<F>> = phi.into_iter().map(TruncatedSeries::into_poly).collect();
        subs.extend((0..c).map(|i| MultiPoly::var(&rest, i)));
        compose_truncated(&g2, &subs, jet)
    };
    Ok(match c {
        1 => match residual.order() {
            Some(o) if o <= jet => SingType::A(o - 1),
            _ => SingType::InconclusiveAtJet(jet),
        },
        2 => {
            let cubic = residual.homogeneous_part(3);
            let co = |e: [u32; 2]| cubic.coeff(&e);
            let disc = cubic_discriminant(&co([3, 0]), &co([2, 1]), &co([1, 2]), &co([0, 3]));
            if disc.is_zero() {
                SingType::Corank2Other
            } else {
                SingType::D4
            }
        }
        _ => SingType::Corank2Other,
    })
}

/// Classify a plane curve germ given as a truncated series in two variables.
pub fn classify_branch<F: Field>(g: &TruncatedSeries<F>, jet: u32) -> Result<SingType> {
    if g.vars().len() != 2 {
        return Err(Error::Dimension("branch classification needs two local variables".into()));
    }
    classify_local(g.poly(), jet.min(g.bound()))
}

/// Affine chart centred at `pt`: the coordinate `k` where `pt` is first
/// nonzero is set to 1 (after scaling), the others become `pt_i + u_i`.
pub fn local_chart<F: Field>(polys: &[MultiPoly<F>], pt: &[F]) -> Vec<MultiPoly<F>> {
    let n = pt.len();
    let k = pt.iter().position(|c| !c.is_zero()).expect("zero vector is not a point");
    let lead = pt[k].clone();
    let local: Vec<String> = (0..n).filter(|&i| i != k).map(|i| format!("u{i}")).collect();
    let mut subs = Vec::with_capacity(n);
    let mut j = 0;
    for i in 0..n {
        if i == k {
            subs.push(MultiPoly::constant(&local, F::one()));
        } else {
            let c = MultiPoly::constant(&local, pt[i].clone() / lead.clone());
            subs.push(&c + &MultiPoly::var(&local, j));
            j += 1;
        }
    }
    polys.iter().map(|p| p.compose(&subs)).collect()
}

/// Result of [`verify_singular_point`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularCheck {
    pub singular: bool,
    pub q_smooth: bool,
    pub f_smooth: bool,
    /// Corank of the Hessian of the local plane-curve equation.
    pub corank: Option<usize>,
}

fn jacobian_rank<F: Field>(q: &MultiPoly<F>, f: &MultiPoly<F>, pt: &[F]) -> (Vec<F>, Vec<F>, usize) {
    let gq: Vec<F> = q.gradient().iter().map(|g| g.eval(pt)).collect();
    let gf: Vec<F> = f.gradient().iter().map(|g| g.eval(pt)).collect();
    let rank = Matrix::from_rows(vec![gq.clone(), gf.clone()]).rank();
    (gq, gf, rank)
}

/// Check that `pt` lies on `V(q, f)` and that the Jacobian has rank <= 1.
pub fn verify_singular_point<F: Field>(q: &MultiPoly<F>, f: &MultiPoly<F>, pt: &[F], jet: u32) -> Result<SingularCheck> {
    if !q.eval(pt).is_zero() || !f.eval(pt).is_zero() {
        return Err(Error::PointNotOnScheme);
    }
    let (gq, gf, rank) = jacobian_rank(q, f, pt);
    let q_smooth = gq.iter().any(|c| !c.is_zero());
    let f_smooth = gf.iter().any(|c| !c.is_zero());
    let mut corank = None;
    if rank <= 1 && (q_smooth || f_smooth) {
        let g = restricted_branch(q, f, pt, jet)?;
        corank = Some(2 - quadratic_gram(&g.poly().homogeneous_part(2)).rank());
    }
    Ok(SingularCheck { singular: rank <= 1, q_smooth, f_smooth, corank })
}

/// Local data of the curve at a point where one of the two surfaces is smooth.
pub struct BranchSetup<F: Field> {
    /// Index of the chart coordinate (set to 1).
    pub chart: usize,
    /// Local variable (0..3) solved for on the smooth surface.
    pub solved: usize,
    pub phi: TruncatedSeries<F>,
    /// Local equation of the curve inside the smooth surface.
    pub branch: TruncatedSeries<F>,
}

pub fn branch_setup<F: Field>(q: &MultiPoly<F>, f: &MultiPoly<F>, pt: &[F], jet: u32) -> Result<BranchSetup<F>> {
    let local = local_chart(&[q.clone(), f.clone()], pt);
    let zero = vec![F::zero(); 3];
    let (smooth, other) = if local[0].gradient().iter().any(|g| !g.eval(&zero).is_zero()) {
        (&local[0], &local[1])
    } else if local[1].gradient().iter().any(|g| !g.eval(&zero).is_zero()) {
        (&local[1], &local[0])
    } else {
        return Err(Error::NotHypersurface("both surfaces are singular at the point".into()));
    };
    let j = (0..3).find(|&i| !smooth.partial(i).eval(&zero).is_zero()).unwrap();
    let phi = series_implicit_solve(smooth, j, jet)?;
    let rest = phi.vars().to_vec();
    let mut subs = Vec::with_capacity(3);
    let mut r = 0;
    for i in 0..3 {
        if i == j {
            subs.push(phi.poly().clone());
        } else {
            subs.push(MultiPoly::var(&rest, r));
            r += 1;
        }
    }
    let branch = TruncatedSeries::new(compose_truncated(other, &subs, jet), jet);
    let chart = pt.iter().position(|c| !c.is_zero()).unwrap();
    Ok(BranchSetup { chart, solved: j, phi, branch })
}

/// Local equation of the curve inside whichever surface is smooth at `pt`.
pub fn restricted_branch<F: Field>(q: &MultiPoly<F>, f: &MultiPoly<F>, pt: &[F], jet: u32) -> Result<TruncatedSeries<F>> {
    Ok(branch_setup(q, f, pt, jet)?.branch)
}

/// Type and location of a singular point of `V(q, f)`.
pub fn classify_point<F: Field>(q: &MultiPoly<F>, f: &MultiPoly<F>, pt: &[F], jet: u32) -> Result<(SingType, Location)> {
    let check = verify_singular_point(q, f, pt, jet)?;
    if !check.singular {
        return Err(Error::Invalid("point is a smooth point of the curve".into()));
    }
    let loc = locate(q, pt);
    if !check.q_smooth && !check.f_smooth {
        return Ok((SingType::NotHypersurface, loc));
    }
    let g = restricted_branch(q, f, pt, jet)?;
    Ok((classify_branch(&g, jet)?, loc))
}

/// Primes for which modular classification is compiled in.
pub const MODULAR_PRIMES: [u64; 12] = [101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157];

fn classify_mod_p<const P: u64>(q: &MultiPoly<Q>, f: &MultiPoly<Q>, pt: &[u64], jet: u32) -> Result<(SingType, Location)> {
    let red = |c: &Q| Gf::<P>::from_rational(c);
    let qp = q.map_coeffs(red).ok_or(Error::BadPrime(P))?;
    let fp = f.map_coeffs(red).ok_or(Error::BadPrime(P))?;
    let x: Vec<Gf<P>> = pt.iter().map(|&c| Gf::from_u64(c)).collect();
    classify_point(&qp, &fp, &x, jet)
}

/// [`classify_point`] over F_p for a point given by residues.
pub fn classify_point_mod(q: &MultiPoly<Q>, f: &MultiPoly<Q>, p: u64, pt: &[u64], jet: u32) -> Result<(SingType, Location)> {
    crate::dispatch_prime!(p, classify_mod_p, q, f, pt, jet)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{poly, var_names};

    fn branch(src: &str) -> SingType {
        let v: Vec<String> = vec!["x".into(), "y".into()];
        classify_branch(&TruncatedSeries::new(poly(src, &v), 16), 16).unwrap()
    }

    #[test]
    fn basic_branches() {
        assert_eq!(branch("x^2 + y^2"), SingType::A(1));
        assert_eq!(branch("x^2 + x y^2"), SingType::A(3));
        assert_eq!(branch("x^2 y + x y^2"), SingType::D4);
        assert_eq!(branch("x^3 + y^4"), SingType::Corank2Other);
        assert_eq!(branch("x^2"), SingType::InconclusiveAtJet(16));
    }

    #[test]
    fn a_series() {
        for k in 1..16 {
            assert_eq!(branch(&format!("x^2 + y^{}", k + 1)), SingType::A(k));
        }
    }

    #[test]
    fn type_strings() {
        for t in [SingType::A(5), SingType::D4, SingType::InconclusiveAtJet(16), SingType::Corank2Other] {
            assert_eq!(t.to_string().parse::<SingType>().unwrap(), t);
        }
    }

    #[test]
    fn stabilization_in_more_variables() {
        let v = var_names("y", 1, 4);
        let g = poly("y1^2 + y2^2 + y3 y4 + y4^6", &v);
        assert_eq!(classify_local(&g, 16).unwrap(), SingType::A(1));
        let g = poly("y1^2 + y2^2 + y3^2 + y4^6 + y1 y4^2", &v);
        assert_eq!(classify_local(&g, 16).unwrap(), SingType::A(3));
        let g = poly("y1^2 + y2^2 + y3^2 + y4^6 + y1 y4^3", &v);
        assert_eq!(classify_local(&g, 16).unwrap(), SingType::A(5));
    }
}
