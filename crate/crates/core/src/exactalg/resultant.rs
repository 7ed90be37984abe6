//! Sylvester resultants of binary forms with polynomial coefficients.

use super::field::Field;
use super::poly::{Monomial, MultiPoly};
use crate::{Error, Result};

/// Coefficients `a_0..a_m` of `g = sum a_i s^(m-i) u^i`, as polynomials in
/// the remaining variables (written in the full variable set).
pub fn binary_coefficients<F: Field>(g: &MultiPoly<F>, s: usize, u: usize) -> Result<Vec<MultiPoly<F>>> {
    let mut deg = None;
    for (m, _) in g.terms() {
        let d = m.0[s] + m.0[u];
        if *deg.get_or_insert(d) != d {
            return Err(Error::NotHomogeneous(format!(
                "binary form in {} and {} mixes degrees",
                g.vars()[s],
                g.vars()[u]
            )));
        }
    }
    let m = deg.unwrap_or(0) as usize;
    let mut out = vec![MultiPoly::zero(g.vars()); m + 1];
    for (mono, c) in g.terms() {
        let i = mono.0[u] as usize;
        let mut rest = mono.clone();
        rest.0[s] = 0;
        rest.0[u] = 0;
        out[i].add_term(rest, c.clone());
    }
    Ok(out)
}

/// Resultant of two binary forms in variables `s`, `u` of `g`'s variable
/// set; other variables are treated as symbolic coefficients.
pub fn resultant_binary<F: Field>(g: &MultiPoly<F>, h: &MultiPoly<F>, s: usize, u: usize) -> Result<MultiPoly<F>> {
    if g.vars() != h.vars() {
        return Err(Error::Dimension("resultant operands use different variables".into()));
    }
    let vars = g.vars().to_vec();
    if g.is_zero() || h.is_zero() {
        return Ok(MultiPoly::zero(&vars));
    }
    let a = binary_coefficients(g, s, u)?;
    let b = binary_coefficients(h, s, u)?;
    let (m, n) = (a.len() - 1, b.len() - 1);
    let size = m + n;
    if size == 0 {
        return Ok(MultiPoly::constant(&vars, F::one()));
    }
    let mut rows = vec![vec![MultiPoly::zero(&vars); size]; size];
    for r in 0..n {
        for (i, c) in a.iter().enumerate() {
            rows[r][r + i] = c.clone();
        }
    }
    for r in 0..m {
        for (i, c) in b.iter().enumerate() {
            rows[n + r][r + i] = c.clone();
        }
    }
    Ok(bareiss_det(rows))
}

/// Sylvester resultant with respect to variable `var` (ordinary, not
/// homogeneous, elimination). Uses the actual degrees in `var`.
pub fn resultant_in<F: Field>(g: &MultiPoly<F>, h: &MultiPoly<F>, var: usize) -> MultiPoly<F> {
    let vars = g.vars().to_vec();
    if g.is_zero() || h.is_zero() {
        return MultiPoly::zero(&vars);
    }
    let (m, n) = (g.degree_in(var) as usize, h.degree_in(var) as usize);
    if m + n == 0 {
        return MultiPoly::constant(&vars, F::one());
    }
    // coefficients from the top degree down
    let a: Vec<_> = (0..=m).map(|i| g.coeff_in(var, (m - i) as u32)).collect();
    let b: Vec<_> = (0..=n).map(|i| h.coeff_in(var, (n - i) as u32)).collect();
    let size = m + n;
    let mut rows = vec![vec![MultiPoly::zero(&vars); size]; size];
    for r in 0..n {
        for (i, c) in a.iter().enumerate() {
            rows[r][r + i] = c.clone();
        }
    }
    for r in 0..m {
        for (i, c) in b.iter().enumerate() {
            rows[n + r][r + i] = c.clone();
        }
    }
    bareiss_det(rows)
}

/// Fraction-free determinant of a square matrix over a polynomial ring.
pub fn bareiss_det<F: Field>(mut m: Vec<Vec<MultiPoly<F>>>) -> MultiPoly<F> {
    let n = m.len();
    let vars = m[0][0].vars().to_vec();
    if n == 0 {
        return MultiPoly::constant(&vars, F::one());
    }
    let mut sign = false;
    let mut prev = MultiPoly::constant(&vars, F::one());
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return MultiPoly::zero(&vars);
            };
            m.swap(k, r);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.exact_div(&prev).expect("Bareiss step is exact");
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// Helper: the monomial `s^i u^j` in a variable set.
pub fn binary_monomial(n: usize, s: usize, u: usize, i: u32, j: u32) -> Monomial {
    let mut e = vec![0; n];
    e[s] = i;
    e[u] += j;
    Monomial(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::poly::poly;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn symbolic_quadratic_against_linear() {
        let v = names(&["s", "u", "a", "b", "c"]);
        let g = poly("a s^2 + b s u + c u^2", &v);
        let h = poly("s - u", &v);
        assert_eq!(resultant_binary(&g, &h, 0, 1).unwrap(), poly("a + b + c", &v));
    }

    #[test]
    fn common_root_vanishes() {
        let v = names(&["s", "u"]);
        let r = resultant_binary(&poly("s^2", &v), &poly("s^3", &v), 0, 1).unwrap();
        assert!(r.is_zero());
        let r = resultant_binary(&poly("s u", &v), &poly("s + u", &v), 0, 1).unwrap();
        assert!(!r.is_zero() && r.degree() == Some(0));
    }

    #[test]
    fn inhomogeneous_rejected() {
        let v = names(&["s", "u"]);
        assert!(resultant_binary(&poly("s^2 + u", &v), &poly("s", &v), 0, 1).is_err());
    }
}
