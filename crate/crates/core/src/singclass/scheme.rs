//! Quadric/cubic pairs in P^3 with the cubic stored modulo the quadric.

use num_traits::Zero;

use crate::exactalg::{var_names, Field, Monomial, MultiPoly, RatMatrix, Q};
use crate::{Error, Result};

use super::quadric::{factor_quadric, quadric_rank};

/// Variable names `x1..x4` used for all schemes.
pub fn scheme_vars() -> Vec<String> {
    var_names("x", 1, 4)
}

/// The curve `V(q, f)` in P^3, `f` taken modulo linear multiples of `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoThreeScheme {
    q: MultiPoly<Q>,
    f: MultiPoly<Q>,
}

/// Normal form of a cubic modulo `{l * q : l linear}`: no monomial of the
/// result is divisible by the leading monomial of `q`.
pub fn reduce_mod_q<F: Field>(f: &MultiPoly<F>, q: &MultiPoly<F>) -> MultiPoly<F> {
    let Some((lm, lc)) = q.leading() else {
        return f.clone();
    };
    let (lm, lc) = (lm.clone(), lc.clone());
    let mut f = f.clone();
    loop {
        let hit = f
            .terms()
            .rev()
            .find(|(m, _)| lm.divides(m))
            .map(|(m, c)| (m.clone(), c.clone()));
        let Some((m, c)) = hit else {
            return f;
        };
        let quo: Monomial = lm.quotient_of(&m);
        f = &f - &q.mul_monomial(&quo, &(c / lc.clone()));
    }
}

/// `a = c * b` for some nonzero scalar `c`.
pub fn proportional<F: Field>(a: &MultiPoly<F>, b: &MultiPoly<F>) -> bool {
    match (a.leading(), b.leading()) {
        (None, None) => true,
        (Some((ma, ca)), Some((mb, cb))) => ma == mb && a.scale(cb) == b.scale(ca),
        _ => false,
    }
}

impl TwoThreeScheme {
    pub fn new(q: MultiPoly<Q>, f: MultiPoly<Q>) -> Result<Self> {
        let vars = scheme_vars();
        if q.nvars() != 4 || f.nvars() != 4 {
            return Err(Error::Dimension("a scheme needs forms in 4 variables".into()));
        }
        let (q, f) = (q.with_vars(&vars), f.with_vars(&vars));
        if q.is_zero() {
            return Err(Error::Invalid("the quadric is zero".into()));
        }
        if !q.is_homogeneous() || q.degree() != Some(2) {
            return Err(Error::NotHomogeneous("q must be a quadratic form".into()));
        }
        if !f.is_zero() && (!f.is_homogeneous() || f.degree() != Some(3)) {
            return Err(Error::NotHomogeneous("f must be a cubic form".into()));
        }
        let f = reduce_mod_q(&f, &q);
        Ok(TwoThreeScheme { q, f })
    }

    /// Build from strings in `x1..x4`.
    pub fn parse(q: &str, f: &str) -> Result<Self> {
        let v = scheme_vars();
        Self::new(MultiPoly::parse(q, &v)?, MultiPoly::parse(f, &v)?)
    }

    pub fn q(&self) -> &MultiPoly<Q> {
        &self.q
    }

    pub fn f(&self) -> &MultiPoly<Q> {
        &self.f
    }

    /// `q` and `f` cut out a curve: `f` is not a multiple of `q` and they
    /// share no linear factor.
    pub fn is_complete_intersection(&self) -> bool {
        if self.f.is_zero() {
            return false;
        }
        if quadric_rank(&self.q).rank >= 3 {
            return true;
        }
        match factor_quadric(&self.q) {
            Some((l1, l2)) => self.f.exact_div(&l1).is_none() && self.f.exact_div(&l2).is_none(),
            // conjugate factors: a common one would force q | f
            None => true,
        }
    }

    /// Equality of the underlying subschemes.
    pub fn same_scheme(&self, o: &Self) -> bool {
        proportional(&self.q, &o.q) && proportional(&self.f, &reduce_mod_q(&o.f, &self.q))
    }

    /// Pull back along `x -> M x`.
    pub fn transform(&self, m: &RatMatrix) -> Result<Self> {
        Self::new(self.q.substitute_linear(m)?, self.f.substitute_linear(m)?)
    }

    pub fn contains(&self, pt: &[Q]) -> bool {
        self.q.eval(pt).is_zero() && self.f.eval(pt).is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_is_canonical() {
        let c = TwoThreeScheme::parse("x1 x4 - x2 x3", "x1 x3^2 + x2^2 x4").unwrap();
        let v = scheme_vars();
        let q = MultiPoly::parse("x1 x4 - x2 x3", &v).unwrap();
        let extra = &MultiPoly::parse("x1 - 3 x3", &v).unwrap() * &q;
        let f = &MultiPoly::parse("x1 x3^2 + x2^2 x4", &v).unwrap() + &extra;
        let d = TwoThreeScheme::new(q, f).unwrap();
        assert_eq!(c, d);
        assert!(c.is_complete_intersection());
    }

    #[test]
    fn scaled_quadric_same_scheme() {
        let a = TwoThreeScheme::parse("x1 x2", "x3^3 + x4^3").unwrap();
        let b = TwoThreeScheme::parse("-2 x1 x2", "5 x3^3 + 5 x4^3").unwrap();
        assert!(a.same_scheme(&b));
    }

    #[test]
    fn common_factor_detected() {
        let c = TwoThreeScheme::parse("x1 x2", "x1 x3^2 + x1 x4^2").unwrap();
        assert!(!c.is_complete_intersection());
        let c = TwoThreeScheme::parse("x1 x2", "0").unwrap();
        assert!(!c.is_complete_intersection());
    }
}
