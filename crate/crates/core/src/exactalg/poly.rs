//! Sparse multivariate polynomials over an exact field.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose ordering is
//! graded-lexicographic, so iteration order, equality and serialization are
//! deterministic.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::One;

use super::field::{parse_rational, Field, Q};
use super::matrix::Matrix;
use crate::{Error, Result};

/// Exponent vector, ordered graded-lexicographically (`x0 > x1 > ...`).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a <= b)
    }

    /// `o / self`, assuming divisibility.
    pub fn quotient_of(&self, o: &Monomial) -> Monomial {
        Monomial(o.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in named variables with coefficients in `F`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiPoly<F: Field = Q> {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, F>,
}

/// Variable names `prefix0, prefix1, ...` starting at `start`.
pub fn var_names(prefix: &str, start: usize, count: usize) -> Vec<String> {
    (start..start + count).map(|i| format!("{prefix}{i}")).collect()
}

impl<F: Field> MultiPoly<F> {
    pub fn zero(vars: &[String]) -> Self {
        MultiPoly { vars: vars.to_vec(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &[String], c: F) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(Monomial::one(vars.len()), c);
        p
    }

    pub fn var(vars: &[String], i: usize) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(Monomial::var(vars.len(), i), F::one());
        p
    }

    pub fn from_terms(vars: &[String], terms: impl IntoIterator<Item = (Vec<u32>, F)>) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent length mismatch");
            p.add_term(Monomial(e), c);
        }
        p
    }

    /// Linear form `sum coeffs[i] * x_i`.
    pub fn linear(vars: &[String], coeffs: &[F]) -> Self {
        let mut p = Self::zero(vars);
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var(vars.len(), i), c.clone());
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: F) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn coeff(&self, e: &[u32]) -> F {
        self.terms.get(&Monomial(e.to_vec())).cloned().unwrap_or_else(F::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Lowest total degree of a term.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(Monomial::degree);
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    pub fn homogeneous_part(&self, d: u32) -> Self {
        let mut p = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            if m.degree() == d {
                p.terms.insert(m.clone(), c.clone());
            }
        }
        p
    }

    /// Drop all terms of total degree above `d`.
    pub fn truncate(&self, d: u32) -> Self {
        let mut p = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            if m.degree() <= d {
                p.terms.insert(m.clone(), c.clone());
            }
        }
        p
    }

    /// Leading term in graded-lex order.
    pub fn leading(&self) -> Option<(&Monomial, &F)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        let mut p = self.clone();
        for v in p.terms.values_mut() {
            *v = v.clone() * c.clone();
        }
        p
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &F) -> Self {
        let mut p = Self::zero(&self.vars);
        if c.is_zero() {
            return p;
        }
        for (k, v) in &self.terms {
            p.terms.insert(k.mul(m), v.clone() * c.clone());
        }
        p
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(&self.vars, F::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Multiply, dropping terms of total degree above `bound`.
    pub fn mul_truncated(&self, o: &Self, bound: u32) -> Self {
        let mut p = Self::zero(&self.vars);
        for (m1, c1) in &self.terms {
            let d1 = m1.degree();
            if d1 > bound {
                continue;
            }
            for (m2, c2) in &o.terms {
                if d1 + m2.degree() <= bound {
                    p.add_term(m1.mul(m2), c1.clone() * c2.clone());
                }
            }
        }
        p
    }

    pub fn eval(&self, point: &[F]) -> F {
        assert_eq!(point.len(), self.nvars(), "evaluation point dimension");
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t = t * x.pow_u32(e);
                }
            }
            acc = acc + t;
        }
        acc
    }

    pub fn partial(&self, i: usize) -> Self {
        let mut p = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e > 0 {
                let mut m2 = m.clone();
                m2.0[i] -= 1;
                p.add_term(m2, c.clone() * F::from_i64(e as i64));
            }
        }
        p
    }

    pub fn gradient(&self) -> Vec<Self> {
        (0..self.nvars()).map(|i| self.partial(i)).collect()
    }

    /// Substitute `x_i := subs[i]`; all `subs` share one variable set.
    pub fn compose(&self, subs: &[MultiPoly<F>]) -> MultiPoly<F> {
        assert_eq!(subs.len(), self.nvars(), "composition arity");
        let target = subs
            .first()
            .map(|s| s.vars.clone())
            .unwrap_or_default();
        let mut powers: Vec<Vec<MultiPoly<F>>> = Vec::with_capacity(subs.len());
        for (i, s) in subs.iter().enumerate() {
            let maxe = self.degree_in(i);
            let mut pw = vec![MultiPoly::constant(&target, F::one())];
            for k in 1..=maxe as usize {
                let next = &pw[k - 1] * s;
                pw.push(next);
            }
            powers.push(pw);
        }
        let mut out = MultiPoly::zero(&target);
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(&target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = &t * &powers[i][e as usize];
                }
            }
            out = &out + &t;
        }
        out
    }

    /// `F(M x)`: every variable `x_i` becomes `sum_j M[i][j] x_j`.
    pub fn substitute_linear(&self, m: &Matrix<F>) -> Result<Self> {
        let n = self.nvars();
        if m.rows() != n || m.cols() != n {
            return Err(Error::Dimension(format!(
                "{}x{} matrix for {} variables",
                m.rows(),
                m.cols(),
                n
            )));
        }
        if m.rank() < n {
            return Err(Error::SingularMatrix);
        }
        Ok(self.substitute_linear_unchecked(m))
    }

    /// As [`Self::substitute_linear`] but allows non-square or singular maps
    /// (`m` is `nvars x k`, result lives in `k` new variables named by `vars`).
    pub fn substitute_linear_into(&self, m: &Matrix<F>, vars: &[String]) -> Self {
        assert_eq!(m.rows(), self.nvars());
        assert_eq!(m.cols(), vars.len());
        let subs: Vec<_> = (0..m.rows())
            .map(|i| MultiPoly::linear(vars, &m.row(i)))
            .collect();
        self.compose(&subs)
    }

    fn substitute_linear_unchecked(&self, m: &Matrix<F>) -> Self {
        let vars = self.vars.clone();
        self.substitute_linear_into(m, &vars)
    }

    /// Reinterpret in a larger variable set; `positions[i]` is the index of
    /// this polynomial's variable `i` in `vars`.
    pub fn embed(&self, vars: &[String], positions: &[usize]) -> Self {
        let mut p = Self::zero(vars);
        for (m, c) in &self.terms {
            let mut e = vec![0; vars.len()];
            for (i, &k) in positions.iter().enumerate() {
                e[k] += m.0[i];
            }
            p.add_term(Monomial(e), c.clone());
        }
        p
    }

    /// Rename variables without touching exponents.
    pub fn with_vars(&self, vars: &[String]) -> Self {
        assert_eq!(vars.len(), self.nvars());
        MultiPoly { vars: vars.to_vec(), terms: self.terms.clone() }
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (lm, lc) = d.leading()?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rem = self.clone();
        let mut quo = Self::zero(&self.vars);
        while let Some((m, c)) = rem.leading() {
            if !lm.divides(m) {
                return None;
            }
            let qm = lm.quotient_of(m);
            let qc = c.clone() / lc.clone();
            rem = &rem - &d.mul_monomial(&qm, &qc);
            quo.add_term(qm, qc);
        }
        Some(quo)
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> Option<G>) -> Option<MultiPoly<G>> {
        let mut p = MultiPoly::zero(&self.vars);
        for (m, c) in &self.terms {
            p.add_term(m.clone(), f(c)?);
        }
        Some(p)
    }

    /// Coefficient of `x_i^k` as a polynomial in the remaining variables
    /// (still written in the full variable set, with `x_i` absent).
    pub fn coeff_in(&self, i: usize, k: u32) -> Self {
        let mut p = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            if m.0[i] == k {
                let mut m2 = m.clone();
                m2.0[i] = 0;
                p.add_term(m2, c.clone());
            }
        }
        p
    }

    /// Evaluate variable `i` at `value`, keeping the variable slot.
    pub fn specialize(&self, i: usize, value: &F) -> Self {
        let mut p = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let mut m2 = m.clone();
            let e = m2.0[i];
            m2.0[i] = 0;
            p.add_term(m2, c.clone() * value.pow_u32(e));
        }
        p
    }

    /// Constant term, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<F> {
        match self.degree() {
            None => Some(F::zero()),
            Some(0) => Some(self.coeff(&vec![0; self.nvars()])),
            _ => None,
        }
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some((_, c)) => self.scale(&(F::one() / c.clone())),
            None => self.clone(),
        }
    }
}

impl MultiPoly<Q> {
    /// Parse expressions such as `"x3^2 - x2*x4 + 1/2 x1 x2"`.
    pub fn parse(src: &str, vars: &[String]) -> Result<Self> {
        parse_poly(src, vars)
    }
}

impl<F: Field> fmt::Display for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let mut cs = c.to_string();
            let neg = cs.starts_with('-');
            if neg {
                cs.remove(0);
            }
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let mut factors = Vec::new();
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.vars[i].clone()),
                    _ => factors.push(format!("{}^{}", self.vars[i], e)),
                }
            }
            if factors.is_empty() {
                write!(f, "{cs}")?;
            } else if cs == "1" {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", cs, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

macro_rules! impl_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a, F: Field> $tr<&'a MultiPoly<F>> for &'a MultiPoly<F> {
            type Output = MultiPoly<F>;
            fn $method(self, o: &'a MultiPoly<F>) -> MultiPoly<F> {
                let f: fn(&MultiPoly<F>, &MultiPoly<F>) -> MultiPoly<F> = $body;
                f(self, o)
            }
        }
        impl<F: Field> $tr<MultiPoly<F>> for MultiPoly<F> {
            type Output = MultiPoly<F>;
            fn $method(self, o: MultiPoly<F>) -> MultiPoly<F> {
                (&self).$method(&o)
            }
        }
    };
}

impl_binop!(Add, add, |a, b| {
    debug_assert_eq!(a.nvars(), b.nvars());
    let mut p = a.clone();
    for (m, c) in &b.terms {
        p.add_term(m.clone(), c.clone());
    }
    p
});

impl_binop!(Sub, sub, |a, b| {
    debug_assert_eq!(a.nvars(), b.nvars());
    let mut p = a.clone();
    for (m, c) in &b.terms {
        p.add_term(m.clone(), -c.clone());
    }
    p
});

impl_binop!(Mul, mul, |a, b| {
    debug_assert_eq!(a.nvars(), b.nvars());
    let mut p = MultiPoly::zero(&a.vars);
    for (m1, c1) in &a.terms {
        for (m2, c2) in &b.terms {
            p.add_term(m1.mul(m2), c1.clone() * c2.clone());
        }
    }
    p
});

impl<F: Field> Neg for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn neg(self) -> MultiPoly<F> {
        self.scale(&-F::one())
    }
}

impl<F: Field> Neg for MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn neg(self) -> MultiPoly<F> {
        self.scale(&-F::one())
    }
}

fn parse_err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse { location: format!("column {}", pos + 1), message: msg.into() }
}

fn parse_poly(src: &str, vars: &[String]) -> Result<MultiPoly<Q>> {
    let chars: Vec<char> = src.chars().collect();
    let mut pos = 0;
    let mut out = MultiPoly::zero(vars);
    let skip_ws = |pos: &mut usize| {
        while *pos < chars.len() && chars[*pos].is_whitespace() {
            *pos += 1;
        }
    };
    let mut first = true;
    loop {
        skip_ws(&mut pos);
        if pos >= chars.len() {
            if first {
                return Err(parse_err(pos, "empty polynomial"));
            }
            break;
        }
        let mut sign = Q::one();
        if chars[pos] == '+' || chars[pos] == '-' {
            if chars[pos] == '-' {
                sign = -sign;
            }
            pos += 1;
            // allow a signed coefficient after the operator, as in "+ -2 x"
            skip_ws(&mut pos);
            if pos < chars.len() && (chars[pos] == '+' || chars[pos] == '-') {
                if chars[pos] == '-' {
                    sign = -sign;
                }
                pos += 1;
            }
        } else if !first {
            return Err(parse_err(pos, "expected '+' or '-'"));
        }
        first = false;
        let mut coeff = sign;
        let mut mono = vec![0u32; vars.len()];
        let mut any_factor = false;
        loop {
            skip_ws(&mut pos);
            if pos >= chars.len() || chars[pos] == '+' || chars[pos] == '-' {
                break;
            }
            if chars[pos] == '*' {
                pos += 1;
                continue;
            }
            let start = pos;
            if chars[pos].is_ascii_digit() {
                while pos < chars.len() && (chars[pos].is_ascii_digit() || chars[pos] == '/') {
                    pos += 1;
                }
                let s: String = chars[start..pos].iter().collect();
                let c = parse_rational(&s).ok_or_else(|| parse_err(start, format!("bad number '{s}'")))?;
                coeff *= c;
            } else if chars[pos].is_alphabetic() {
                while pos < chars.len() && (chars[pos].is_alphanumeric() || chars[pos] == '_') {
                    pos += 1;
                }
                let name: String = chars[start..pos].iter().collect();
                let idx = vars
                    .iter()
                    .position(|v| *v == name)
                    .ok_or_else(|| parse_err(start, format!("unknown variable '{name}'")))?;
                let mut e = 1;
                skip_ws(&mut pos);
                if pos < chars.len() && chars[pos] == '^' {
                    pos += 1;
                    skip_ws(&mut pos);
                    let es = pos;
                    while pos < chars.len() && chars[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    let s: String = chars[es..pos].iter().collect();
                    e = s.parse().map_err(|_| parse_err(es, "bad exponent"))?;
                }
                mono[idx] += e;
            } else if chars[pos] == '(' {
                return Err(parse_err(pos, "parentheses are not supported"));
            } else {
                return Err(parse_err(pos, format!("unexpected character '{}'", chars[pos])));
            }
            any_factor = true;
        }
        if !any_factor {
            return Err(parse_err(pos, "missing term"));
        }
        out.add_term(Monomial(mono), coeff);
    }
    Ok(out)
}

/// Convenience: parse with the given names, panicking on malformed input.
/// Intended for literals in code and tests.
pub fn poly(src: &str, vars: &[String]) -> MultiPoly<Q> {
    MultiPoly::parse(src, vars).unwrap_or_else(|e| panic!("bad polynomial literal {src:?}: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::field::{q, qf};

    fn xs() -> Vec<String> {
        var_names("x", 1, 4)
    }

    #[test]
    fn grlex_order() {
        let a = Monomial(vec![1, 0, 0, 1]);
        let b = Monomial(vec![0, 1, 1, 0]);
        let c = Monomial(vec![0, 0, 0, 3]);
        assert!(a > b);
        assert!(c > a);
    }

    #[test]
    fn parse_and_display() {
        let p = poly("x3^2 - x2*x4 + 1/2 x1 x2", &xs());
        assert_eq!(p.num_terms(), 3);
        assert_eq!(p.coeff(&[1, 1, 0, 0]), qf(1, 2));
        let again = poly(&p.to_string(), &xs());
        assert_eq!(p, again);
    }

    #[test]
    fn parse_rejects_unknown_variable() {
        let err = MultiPoly::parse("x1 + y7", &xs()).unwrap_err();
        match err {
            Error::Parse { location, message } => {
                assert_eq!(location, "column 6");
                assert!(message.contains("y7"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn exact_division() {
        let v = xs();
        let a = poly("x1 + x2", &v);
        let b = poly("x3^2 - 2 x1 x4", &v);
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&a), Some(b.clone()));
        assert_eq!(prod.exact_div(&b), Some(a));
        assert!(b.exact_div(&poly("x1", &v)).is_none());
    }

    #[test]
    fn derivative_and_eval() {
        let v = xs();
        let p = poly("x1^3 + 2 x1 x2 - x4", &v);
        assert_eq!(p.partial(0), poly("3 x1^2 + 2 x2", &v));
        assert_eq!(p.eval(&[q(1), q(2), q(0), q(5)]), q(0));
    }

    #[test]
    fn compose_identity() {
        let v = xs();
        let p = poly("x1 x2 - x3^3 + 4", &v);
        let subs: Vec<_> = (0..4).map(|i| MultiPoly::var(&v, i)).collect();
        assert_eq!(p.compose(&subs), p);
    }
}
