//! Rank, singular locus and linear factors of quadratic forms.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::exactalg::{quadratic_gram, Field, Matrix, MultiPoly, Q};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadricRank {
    pub rank: usize,
    /// Basis of the kernel of the Gram matrix (first nonzero entry 1).
    pub kernel: Vec<Vec<Q>>,
}

impl QuadricRank {
    /// The vertex of a rank-3 quadric in four variables.
    pub fn vertex(&self) -> Option<&[Q]> {
        (self.kernel.len() == 1).then(|| self.kernel[0].as_slice())
    }
}

/// Position of a point relative to the quadric it lies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Location {
    SmoothPointOfQ,
    VertexOfQ,
    OnSingularLineOfQ,
    /// `q` has rank at most 1 and the point lies on its double plane.
    OnDoublePlaneOfQ,
}

pub fn normalize_point<F: Field>(v: &[F]) -> Vec<F> {
    match v.iter().find(|c| !c.is_zero()) {
        Some(l) => {
            let l = l.clone();
            v.iter().map(|c| c.clone() / l.clone()).collect()
        }
        None => v.to_vec(),
    }
}

pub fn quadric_rank(q: &MultiPoly<Q>) -> QuadricRank {
    let g = quadratic_gram(q);
    QuadricRank { rank: g.rank(), kernel: g.kernel().iter().map(|v| normalize_point(v)).collect() }
}

pub fn locate<F: Field>(q: &MultiPoly<F>, pt: &[F]) -> Location {
    if q.gradient().iter().any(|g| !g.eval(pt).is_zero()) {
        return Location::SmoothPointOfQ;
    }
    match quadratic_gram(q).rank() {
        3 => Location::VertexOfQ,
        2 => Location::OnSingularLineOfQ,
        _ => Location::OnDoublePlaneOfQ,
    }
}

/// Square root in Q if it exists.
pub fn rational_sqrt(x: &Q) -> Option<Q> {
    if x.is_negative() {
        return None;
    }
    let (n, d) = (x.numer().sqrt(), x.denom().sqrt());
    (&n * &n == *x.numer() && &d * &d == *x.denom()).then(|| Q::new(n, d))
}

/// Factor a quadric of rank 1 or 2 into rational linear forms.
pub fn factor_quadric(q: &MultiPoly<Q>) -> Option<(MultiPoly<Q>, MultiPoly<Q>)> {
    let g = quadratic_gram(q);
    let n = g.rows();
    let rank = g.rank();
    if rank == 0 || rank > 2 {
        return None;
    }
    // columns: complement vectors first, then the kernel
    let kernel = g.kernel();
    let mut cols: Vec<Vec<Q>> = Vec::new();
    for i in 0..n {
        if cols.len() == rank {
            break;
        }
        let mut e = vec![Q::zero(); n];
        e[i] = Q::from_i64(1);
        let mut trial = cols.clone();
        trial.push(e.clone());
        trial.extend(kernel.iter().cloned());
        if Matrix::from_rows(trial).rank() == cols.len() + 1 + kernel.len() {
            cols.push(e);
        }
    }
    let mut basis = cols.clone();
    basis.extend(kernel);
    let b = Matrix::from_rows(basis).transpose();
    let binv = b.inverse().ok()?;
    let vars = q.vars().to_vec();
    let s = MultiPoly::linear(&vars, &binv.row(0));
    let qa = q.eval(&cols[0]);
    if rank == 1 {
        return Some((s.scale(&qa), s));
    }
    let u = MultiPoly::linear(&vars, &binv.row(1));
    let qb = q.eval(&cols[1]);
    let sum: Vec<Q> = cols[0].iter().zip(&cols[1]).map(|(x, y)| x + y).collect();
    let beta = q.eval(&sum) - &qa - &qb;
    let (l1, l2) = if qa.is_zero() {
        (u.clone(), &s.scale(&beta) + &u.scale(&qb))
    } else {
        let disc = &beta * &beta - Q::from_i64(4) * &qa * &qb;
        let r = rational_sqrt(&disc)?;
        let two_a = Q::from_i64(2) * &qa;
        let t1 = (-&beta + &r) / &two_a;
        let t2 = (-&beta - &r) / &two_a;
        ((&s - &u.scale(&t1)).scale(&qa), &s - &u.scale(&t2))
    };
    (&l1 * &l2 == *q).then_some((l1, l2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{poly, q};
    use crate::singclass::scheme::scheme_vars;

    #[test]
    fn ranks() {
        let v = scheme_vars();
        assert_eq!(quadric_rank(&poly("x1 x4 - x2 x3", &v)).rank, 4);
        let r = quadric_rank(&poly("x3^2 - x2 x4", &v));
        assert_eq!(r.rank, 3);
        assert_eq!(r.vertex().unwrap(), &[q(1), q(0), q(0), q(0)]);
        let r = quadric_rank(&poly("x1 x2", &v));
        assert_eq!(r.rank, 2);
        assert_eq!(r.kernel.len(), 2);
    }

    #[test]
    fn factors() {
        let v = scheme_vars();
        for src in ["x1 x2", "x1^2 - 4 x3^2", "x1^2 + x1 x4", "3 x2^2", "x1 x2 + x3 x2 - x1 x4 - x3 x4"] {
            let qq = poly(src, &v);
            let (a, b) = factor_quadric(&qq).unwrap();
            assert_eq!(&a * &b, qq);
        }
        assert!(factor_quadric(&poly("x1^2 + x2^2", &v)).is_none());
    }
}
