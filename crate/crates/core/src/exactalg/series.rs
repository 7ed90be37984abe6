//! Truncated power series at the origin and implicit-function solving.

use std::ops::{Add, Mul, Neg, Sub};

use super::field::{Field, Q};
use super::matrix::Matrix;
use super::poly::{Monomial, MultiPoly};
use crate::{Error, Result};

/// Default jet bound.
pub const DEFAULT_JET: u32 = 16;

/// A power series known up to (and including) total degree `bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries<F: Field = Q> {
    poly: MultiPoly<F>,
    bound: u32,
}

impl<F: Field> TruncatedSeries<F> {
    pub fn new(poly: MultiPoly<F>, bound: u32) -> Self {
        TruncatedSeries { poly: poly.truncate(bound), bound }
    }

    pub fn poly(&self) -> &MultiPoly<F> {
        &self.poly
    }

    pub fn into_poly(self) -> MultiPoly<F> {
        self.poly
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn vars(&self) -> &[String] {
        self.poly.vars()
    }

    /// Lowest degree present, `None` if zero up to the bound.
    pub fn order(&self) -> Option<u32> {
        self.poly.order()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn with_bound(&self, bound: u32) -> Self {
        Self::new(self.poly.clone(), bound.min(self.bound))
    }

    /// Substitute series for every variable (all constant-free).
    pub fn compose(&self, subs: &[TruncatedSeries<F>]) -> Self {
        let bound = subs.iter().map(|s| s.bound).fold(self.bound, u32::min);
        let polys: Vec<_> = subs.iter().map(|s| s.poly.clone()).collect();
        Self::new(compose_truncated(&self.poly, &polys, bound), bound)
    }
}

impl<F: Field> Add for &TruncatedSeries<F> {
    type Output = TruncatedSeries<F>;
    fn add(self, o: Self) -> TruncatedSeries<F> {
        TruncatedSeries::new(&self.poly + &o.poly, self.bound.min(o.bound))
    }
}

impl<F: Field> Sub for &TruncatedSeries<F> {
    type Output = TruncatedSeries<F>;
    fn sub(self, o: Self) -> TruncatedSeries<F> {
        TruncatedSeries::new(&self.poly - &o.poly, self.bound.min(o.bound))
    }
}

impl<F: Field> Mul for &TruncatedSeries<F> {
    type Output = TruncatedSeries<F>;
    fn mul(self, o: Self) -> TruncatedSeries<F> {
        let b = self.bound.min(o.bound);
        TruncatedSeries { poly: self.poly.mul_truncated(&o.poly, b), bound: b }
    }
}

impl<F: Field> Neg for &TruncatedSeries<F> {
    type Output = TruncatedSeries<F>;
    fn neg(self) -> TruncatedSeries<F> {
        TruncatedSeries { poly: -&self.poly, bound: self.bound }
    }
}

/// `p(subs)` keeping only terms of total degree `<= bound`. The substituted
/// polynomials should have no constant term for the truncation to be exact.
pub fn compose_truncated<F: Field>(p: &MultiPoly<F>, subs: &[MultiPoly<F>], bound: u32) -> MultiPoly<F> {
    assert_eq!(subs.len(), p.nvars(), "composition arity");
    let target: Vec<String> = subs.first().map(|s| s.vars().to_vec()).unwrap_or_default();
    let mut powers: Vec<Vec<MultiPoly<F>>> = Vec::with_capacity(subs.len());
    for (i, s) in subs.iter().enumerate() {
        let s = s.truncate(bound);
        let mut pw = vec![MultiPoly::constant(&target, F::one())];
        for k in 1..=p.degree_in(i) as usize {
            let next = pw[k - 1].mul_truncated(&s, bound);
            pw.push(next);
        }
        powers.push(pw);
    }
    let mut out = MultiPoly::zero(&target);
    for (m, c) in p.terms() {
        let mut t = MultiPoly::constant(&target, c.clone());
        for (i, &e) in m.0.iter().enumerate() {
            if e > 0 {
                t = t.mul_truncated(&powers[i][e as usize], bound);
            }
        }
        out = &out + &t;
    }
    out
}

/// Solve `eqs = 0` for the variables `solve` as power series in the
/// remaining variables, up to total degree `bound`.
///
/// Requires every equation to vanish at the origin and the Jacobian of
/// `eqs` with respect to `solve` to be invertible there. The returned
/// series live in the remaining variables (in their original order).
pub fn series_implicit_system<F: Field>(
    eqs: &[MultiPoly<F>],
    solve: &[usize],
    bound: u32,
) -> Result<Vec<TruncatedSeries<F>>> {
    if eqs.len() != solve.len() || eqs.is_empty() {
        return Err(Error::Dimension("need as many equations as solved variables".into()));
    }
    let n = eqs[0].nvars();
    let origin = vec![F::zero(); n];
    for e in eqs {
        if !e.eval(&origin).is_zero() {
            return Err(Error::ImplicitFunction("equation does not vanish at the origin".into()));
        }
    }
    let k = solve.len();
    let mut jac = Matrix::zeros(k, k);
    for (r, e) in eqs.iter().enumerate() {
        for (c, &v) in solve.iter().enumerate() {
            jac[(r, c)] = e.partial(v).eval(&origin);
        }
    }
    let jinv = jac
        .inverse()
        .map_err(|_| Error::ImplicitFunction("Jacobian is singular at the origin".into()))?;

    let rest: Vec<usize> = (0..n).filter(|i| !solve.contains(i)).collect();
    let rest_names: Vec<String> = rest.iter().map(|&i| eqs[0].vars()[i].clone()).collect();
    let mut phi: Vec<MultiPoly<F>> = vec![MultiPoly::zero(&rest_names); k];

    let substitution = |phi: &[MultiPoly<F>]| -> Vec<MultiPoly<F>> {
        (0..n)
            .map(|i| match solve.iter().position(|&s| s == i) {
                Some(j) => phi[j].clone(),
                None => {
                    let r = rest.iter().position(|&x| x == i).unwrap();
                    MultiPoly::var(&rest_names, r)
                }
            })
            .collect()
    };

    // Each pass fixes at least one more degree.
    for _ in 0..=bound + 1 {
        let subs = substitution(&phi);
        let resid: Vec<MultiPoly<F>> = eqs.iter().map(|e| compose_truncated(e, &subs, bound)).collect();
        if resid.iter().all(|r| r.is_zero()) {
            return Ok(phi.into_iter().map(|p| TruncatedSeries::new(p, bound)).collect());
        }
        for (j, ph) in phi.iter_mut().enumerate() {
            let mut corr = MultiPoly::zero(&rest_names);
            for (r, res) in resid.iter().enumerate() {
                let c = &jinv[(j, r)];
                if !c.is_zero() {
                    corr = &corr + &res.scale(c);
                }
            }
            *ph = (&*ph - &corr).truncate(bound);
        }
    }
    Err(Error::ImplicitFunction("iteration did not converge".into()))
}

/// Solve `f = 0` for variable `solve_var` as a series in the others.
pub fn series_implicit_solve<F: Field>(f: &MultiPoly<F>, solve_var: usize, bound: u32) -> Result<TruncatedSeries<F>> {
    let mut out = series_implicit_system(std::slice::from_ref(f), &[solve_var], bound)?;
    Ok(out.remove(0))
}

/// Monomial helper used by tests and callers that build jets by hand.
pub fn monomial_series<F: Field>(vars: &[String], e: Vec<u32>, c: F, bound: u32) -> TruncatedSeries<F> {
    let mut p = MultiPoly::zero(vars);
    p.add_term(Monomial(e), c);
    TruncatedSeries::new(p, bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::poly::{poly, var_names};

    #[test]
    fn linear_solve() {
        let v: Vec<String> = ["z", "x", "y"].iter().map(|s| s.to_string()).collect();
        let f = poly("z - x - y", &v);
        let phi = series_implicit_solve(&f, 0, 5).unwrap();
        assert_eq!(phi.poly(), &poly("x + y", &v[1..]));
    }

    #[test]
    fn quadratic_solve() {
        let v: Vec<String> = ["z", "x"].iter().map(|s| s.to_string()).collect();
        let f = poly("z + z^2 - x", &v);
        let phi = series_implicit_solve(&f, 0, 3).unwrap();
        assert_eq!(phi.poly(), &poly("x - x^2 + 2 x^3", &v[1..]));
    }

    #[test]
    fn residual_vanishes_to_bound() {
        let v = var_names("x", 0, 3);
        let f = poly("x0 + x1^2 - x0*x2 + x0^3 + 3 x1 x2^2", &v);
        let j = 9;
        let phi = series_implicit_solve(&f, 0, j).unwrap();
        let rest = &v[1..];
        let subs = vec![phi.poly().clone(), MultiPoly::var(rest, 0), MultiPoly::var(rest, 1)];
        let full = f.compose(&subs);
        assert!(full.order().is_none_or(|o| o > j));
    }

    #[test]
    fn singular_jacobian_rejected() {
        let v = var_names("x", 0, 2);
        let f = poly("x0^2 - x1", &v);
        assert!(series_implicit_solve(&f, 0, 4).is_err());
    }
}
