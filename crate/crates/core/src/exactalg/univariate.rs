//! Dense univariate polynomials (coefficients lowest degree first).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::field::{Field, Q};
use super::poly::MultiPoly;

pub fn trim<F: Field>(mut p: Vec<F>) -> Vec<F> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

/// Degree, `None` for the zero polynomial.
pub fn degree<F: Field>(p: &[F]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn eval<F: Field>(p: &[F], x: &F) -> F {
    p.iter().rev().fold(F::zero(), |acc, c| acc * x.clone() + c.clone())
}

pub fn derivative<F: Field>(p: &[F]) -> Vec<F> {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.clone() * F::from_i64(i as i64))
            .collect(),
    )
}

pub fn divrem<F: Field>(a: &[F], b: &[F]) -> (Vec<F>, Vec<F>) {
    let b = trim(b.to_vec());
    let db = degree(&b).expect("division by zero polynomial");
    let mut r = trim(a.to_vec());
    if r.len() <= db {
        return (vec![], r);
    }
    let mut q = vec![F::zero(); r.len() - db];
    let lead = b[db].clone();
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = r[dr].clone() / lead.clone();
        for (i, bc) in b.iter().enumerate() {
            r[dr - db + i] = r[dr - db + i].clone() - c.clone() * bc.clone();
        }
        q[dr - db] = c;
        r = trim(r);
    }
    (trim(q), r)
}

/// Monic gcd.
pub fn gcd<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let (_, r) = divrem(&a, &b);
        a = b;
        b = r;
    }
    monic(&a)
}

pub fn monic<F: Field>(a: &[F]) -> Vec<F> {
    match degree(a) {
        None => vec![],
        Some(d) => {
            let l = a[d].clone();
            a[..=d].iter().map(|c| c.clone() / l.clone()).collect()
        }
    }
}

/// Coefficients of a polynomial that only involves variable `var`.
pub fn from_multipoly<F: Field>(p: &MultiPoly<F>, var: usize) -> Option<Vec<F>> {
    let mut out = vec![F::zero(); p.degree_in(var) as usize + 1];
    for (m, c) in p.terms() {
        if m.0.iter().enumerate().any(|(i, &e)| i != var && e > 0) {
            return None;
        }
        out[m.0[var] as usize] = c.clone();
    }
    Some(trim(out))
}

/// All distinct rational roots, sorted.
pub fn rational_roots(p: &[Q]) -> Vec<Q> {
    let p = trim(p.to_vec());
    if degree(&p).unwrap_or(0) == 0 {
        return vec![];
    }
    // clear denominators
    let l = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| (c * Q::from_integer(l.clone())).to_integer()).collect();
    let mut roots = Vec::new();
    let shift = ints.iter().position(|c| !c.is_zero()).unwrap();
    if shift > 0 {
        roots.push(Q::zero());
    }
    let ints = &ints[shift..];
    if ints.len() > 1 {
        let a0 = ints[0].abs();
        let an = ints[ints.len() - 1].abs();
        let qs: Vec<Q> = ints.iter().map(|c| Q::from_integer(c.clone())).collect();
        for num in divisors(&a0) {
            for den in divisors(&an) {
                for sign in [1, -1] {
                    let x = Q::new(BigInt::from(sign) * num.clone(), den.clone());
                    if eval(&qs, &x).is_zero() && !roots.contains(&x) {
                        roots.push(x);
                    }
                }
            }
        }
    }
    roots.sort();
    roots
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            out.push(d.clone());
            let e = n / &d;
            if e != d {
                out.push(e);
            }
        }
        d += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::field::{q, qf};

    #[test]
    fn gcd_and_roots() {
        // (x-1)(x+2)(2x-3) and (x-1)(x+5)
        let a = vec![q(6), q(-7), q(-1), q(2)];
        let b = vec![q(-5), q(4), q(1)];
        assert_eq!(gcd(&a, &b), vec![q(-1), q(1)]);
        assert_eq!(rational_roots(&a), vec![q(-2), q(1), qf(3, 2)]);
        assert_eq!(rational_roots(&[q(0), q(0), q(1), q(1)]), vec![q(-1), q(0)]);
        assert!(rational_roots(&[q(-2), q(0), q(1)]).is_empty());
    }
}
