//! Chow forms of (2,3) curves in Plücker coordinates.
//!
//! The resultant of `q|L` and `f|L` is computed on the chart of lines
//! spanned by `(1,0,a2,a3)` and `(0,1,b2,b3)`, where `p01 = 1`, and then
//! homogenized to a sextic in the six Plücker coordinates. The stored
//! representative is the normal form modulo
//! `p01 p23 - p02 p13 + p03 p12`, with `p01 p23` as leading term, so no
//! monomial contains both `p01` and `p23`.

use num_traits::{One, Zero};

use crate::exactalg::{resultant_binary, univariate, Matrix, MultiPoly, RatMatrix, Q};
use crate::singclass::TwoThreeScheme;
use crate::{Error, Result};

use super::destabilize::{certificate_for_support, zero_weight_for_support};
use super::onepss::OnePs;

/// Index pairs of the Plücker coordinates, in variable order.
pub const PLUCKER_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

pub fn plucker_vars() -> Vec<String> {
    PLUCKER_PAIRS.iter().map(|(i, j)| format!("p{i}{j}")).collect()
}

/// The Plücker relation `p01 p23 - p02 p13 + p03 p12`.
pub fn plucker_relation() -> MultiPoly<Q> {
    crate::exactalg::poly("p01 p23 - p02 p13 + p03 p12", &plucker_vars())
}

/// Plücker coordinates of the line through `a` and `b`.
pub fn plucker_of(a: &[Q], b: &[Q]) -> Vec<Q> {
    PLUCKER_PAIRS.iter().map(|&(i, j)| &a[i] * &b[j] - &a[j] * &b[i]).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChowForm {
    pub poly: MultiPoly<Q>,
    pub degree: u32,
}

impl ChowForm {
    pub fn eval_line(&self, a: &[Q], b: &[Q]) -> Q {
        self.poly.eval(&plucker_of(a, b))
    }

    /// Exponent rows turned into linear forms in the four point weights.
    pub fn weight_rows(&self) -> Vec<Vec<i64>> {
        self.poly.terms().map(|(m, _)| support_row(&m.0)).collect()
    }

    /// The Chow form of `M.C`, i.e. of the curve with equations `q(Mx), f(Mx)`.
    pub fn transform(&self, m: &RatMatrix) -> Result<ChowForm> {
        let w = wedge2(m);
        let p = self.poly.substitute_linear(&w)?;
        Ok(ChowForm { poly: normal_form(&p).monic(), degree: self.degree })
    }
}

fn support_row(e: &[u32]) -> Vec<i64> {
    let mut r = vec![0i64; 4];
    for (k, &(i, j)) in PLUCKER_PAIRS.iter().enumerate() {
        r[i] += e[k] as i64;
        r[j] += e[k] as i64;
    }
    r
}

/// Second exterior power: Plücker coordinates of `(Ma, Mb)` from those of `(a, b)`.
pub fn wedge2(m: &RatMatrix) -> RatMatrix {
    let rows = PLUCKER_PAIRS
        .iter()
        .map(|&(i, j)| {
            let (ri, rj) = (m.row(i), m.row(j));
            PLUCKER_PAIRS.iter().map(|&(k, l)| &ri[k] * &rj[l] - &ri[l] * &rj[k]).collect()
        })
        .collect();
    Matrix::from_rows(rows)
}

/// Reduce modulo the Plücker relation, rewriting `p01 p23 -> p02 p13 - p03 p12`.
pub fn normal_form(p: &MultiPoly<Q>) -> MultiPoly<Q> {
    let vars = plucker_vars();
    let rhs = crate::exactalg::poly("p02 p13 - p03 p12", &vars);
    let mut out = MultiPoly::zero(&vars);
    let mut work = p.clone();
    while let Some((m, c)) = work.leading().map(|(m, c)| (m.clone(), c.clone())) {
        let mut single = MultiPoly::zero(&vars);
        single.add_term(m.clone(), c.clone());
        work = &work - &single;
        if m.0[0] > 0 && m.0[5] > 0 {
            let mut rest = m.0.clone();
            rest[0] -= 1;
            rest[5] -= 1;
            let replaced = rhs.mul_monomial(&crate::exactalg::Monomial(rest), &c);
            work = &work + &replaced;
        } else {
            out = &out + &single;
        }
    }
    out
}

fn chart_vars() -> Vec<String> {
    ["a2", "a3", "b2", "b3", "s", "u"].iter().map(|s| s.to_string()).collect()
}

pub fn chow_form(c: &TwoThreeScheme) -> Result<ChowForm> {
    let cv = chart_vars();
    let var = |i| MultiPoly::var(&cv, i);
    let (a2, a3, b2, b3, s, u) = (var(0), var(1), var(2), var(3), var(4), var(5));
    // the line s*(1,0,a2,a3) + u*(0,1,b2,b3)
    let subs = vec![s.clone(), u.clone(), &(&s * &a2) + &(&u * &b2), &(&s * &a3) + &(&u * &b3)];
    let ql = c.q().compose(&subs);
    let fl = c.f().compose(&subs);
    let res = resultant_binary(&ql, &fl, 4, 5)?;
    if res.is_zero() {
        return Err(Error::Invalid("q and f share a factor; the cycle has a surface component".into()));
    }

    let pv = plucker_vars();
    let p = |name: &str| MultiPoly::var(&pv, pv.iter().position(|v| v == name).unwrap());
    let chart_in_plucker = vec![-p("p12"), -p("p13"), p("p02"), p("p03"), MultiPoly::zero(&pv), MultiPoly::zero(&pv)];
    let d_chart = &(&a2 * &b3) - &(&a3 * &b2);
    let mut total = MultiPoly::zero(&pv);
    let max_d = res.degree().unwrap_or(0);
    for d in 0..=max_d {
        let part = res.homogeneous_part(d);
        if part.is_zero() {
            continue;
        }
        let piece = if d <= 6 {
            &part.compose(&chart_in_plucker) * &p("p01").pow(6 - d)
        } else {
            let k = d - 6;
            let quot = part
                .exact_div(&d_chart.pow(k))
                .ok_or_else(|| Error::Invalid(format!("chart degree {d} part is not divisible by the minor")))?;
            &quot.compose(&chart_in_plucker) * &p("p23").pow(k)
        };
        total = &total + &piece;
    }
    Ok(ChowForm { poly: normal_form(&total).monic(), degree: 6 })
}

/// Minimal weight of the Chow form under a diagonal 1-PS on P^3; `p_ij`
/// has weight `w_i + w_j`. The relation is torus-homogeneous of weight
/// zero and the normal-form monomials are a weight basis of the quotient,
/// so this is the maximum over all representatives of their minimal
/// support weight.
pub fn chow_weight_min(r: &ChowForm, w: &OnePs) -> Result<Q> {
    if w.len() != 4 {
        return Err(Error::Dimension(format!("{} weights for P^3", w.len())));
    }
    let w = w.normalized();
    r.weight_rows()
        .iter()
        .map(|row| row.iter().zip(&w).map(|(a, b)| a * b).sum::<i64>())
        .min()
        .map(|v| Q::from_integer(v.into()))
        .ok_or_else(|| Error::Invalid("zero Chow form".into()))
}

/// Destabilizing diagonal 1-PS for the Chow point in the standard frame.
pub fn chow_certificate(r: &ChowForm) -> Option<OnePs> {
    certificate_for_support(&r.weight_rows(), 4)
}

pub fn chow_zero_weight(r: &ChowForm) -> Option<OnePs> {
    zero_weight_for_support(&r.weight_rows(), 4)
}

/// Direct test whether the line through `a`, `b` meets `V(q, f)` over the
/// algebraic closure: restrictions to the line share a root.
pub fn line_meets(c: &TwoThreeScheme, a: &[Q], b: &[Q]) -> bool {
    let v = vec!["s".to_string(), "u".to_string()];
    let s = MultiPoly::var(&v, 0);
    let u = MultiPoly::var(&v, 1);
    let subs: Vec<MultiPoly<Q>> = (0..4)
        .map(|i| &s.scale(&a[i]) + &u.scale(&b[i]))
        .collect();
    let ql = c.q().compose(&subs);
    let fl = c.f().compose(&subs);
    if ql.is_zero() || fl.is_zero() {
        return true;
    }
    // root at infinity u = 0: both lose their s^deg term
    let top = |g: &MultiPoly<Q>| g.coeff(&[g.degree().unwrap_or(0), 0]).is_zero();
    if top(&ql) && top(&fl) {
        return true;
    }
    let one = Q::one();
    let dq = univariate::from_multipoly(&ql.specialize(1, &one), 0).unwrap_or_default();
    let df = univariate::from_multipoly(&fl.specialize(1, &one), 0).unwrap_or_default();
    univariate::degree(&univariate::gcd(&dq, &df)).unwrap_or(0) > 0
}
