//! Exact short-vector enumeration (Fincke-Pohst over an exact LDL^T
//! decomposition) and LLL reduction of positive definite Gram matrices.

use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::exactalg::Q;

use super::lattice::Lattice;

fn qi(x: i64) -> Q {
    Q::from_integer(x.into())
}

/// `G = L^T D L` with `L` unit upper triangular: returns `(d, m)` with
/// `x^T G x = sum_i d_i (x_i + sum_{j>i} m_ij x_j)^2`. `None` unless
/// positive definite.
pub fn ldl(gram: &[Vec<i64>]) -> Option<(Vec<Q>, Vec<Vec<Q>>)> {
    let n = gram.len();
    let mut a: Vec<Vec<Q>> = gram.iter().map(|r| r.iter().map(|&x| qi(x)).collect()).collect();
    let mut d = vec![Q::zero(); n];
    let mut m = vec![vec![Q::zero(); n]; n];
    for i in 0..n {
        if !a[i][i].is_positive() {
            return None;
        }
        d[i] = a[i][i].clone();
        for j in i + 1..n {
            m[i][j] = &a[i][j] / &d[i];
        }
        for j in i + 1..n {
            for k in i + 1..n {
                let t = &d[i] * &m[i][j] * &m[i][k];
                a[j][k] -= t;
            }
        }
    }
    Some((d, m))
}

/// The Gram matrix in whichever sign makes it positive definite.
pub fn positive_gram(l: &Lattice) -> Option<Vec<Vec<i64>>> {
    if l.rank() == 0 {
        return Some(vec![]);
    }
    if ldl(&l.gram).is_some() {
        return Some(l.gram.clone());
    }
    let neg: Vec<Vec<i64>> = l.gram.iter().map(|r| r.iter().map(|x| -x).collect()).collect();
    ldl(&neg).map(|_| neg)
}

fn floor_q(x: &Q) -> i64 {
    x.floor().to_integer().to_i64().expect("bound fits in i64")
}

/// Integers `t` with `d (t + c)^2 <= budget`.
fn range(d: &Q, c: &Q, budget: &Q) -> std::ops::RangeInclusive<i64> {
    let s = (budget / d).to_f64().unwrap_or(0.0).max(0.0).sqrt();
    let cf = c.to_f64().unwrap_or(0.0);
    let lo = (-cf - s).floor() as i64 - 1;
    let hi = (-cf + s).ceil() as i64 + 1;
    let ok = |t: i64| {
        let u = qi(t) + c;
        &(d * &u * &u) <= budget
    };
    let mut a = lo;
    while a <= hi && !ok(a) {
        a += 1;
    }
    let mut b = hi;
    while b >= a && !ok(b) {
        b -= 1;
    }
    a..=b
}

fn descend(d: &[Q], m: &[Vec<Q>], i: usize, x: &mut Vec<i64>, budget: &Q, out: &mut Vec<Vec<i64>>) {
    let n = d.len();
    let c: Q = (i + 1..n).map(|j| &m[i][j] * qi(x[j])).sum();
    for t in range(&d[i], &c, budget) {
        x[i] = t;
        let u = qi(t) + &c;
        let rest = budget - &d[i] * &u * &u;
        if i == 0 {
            if rest.is_zero() && x.iter().any(|&v| v != 0) {
                out.push(x.clone());
            }
        } else {
            descend(d, m, i - 1, x, &rest, out);
        }
    }
    x[i] = 0;
}

/// All `x` with `x^T G x = norm` for a positive definite `G`, sorted.
pub fn vectors_of_norm(gram: &[Vec<i64>], norm: i64) -> Option<Vec<Vec<i64>>> {
    let n = gram.len();
    if n == 0 {
        return Some(vec![]);
    }
    let (d, m) = ldl(gram)?;
    let budget = qi(norm);
    let top = range(&d[n - 1], &Q::zero(), &budget);
    let mut out: Vec<Vec<i64>> = top
        .collect::<Vec<_>>()
        .into_par_iter()
        .flat_map_iter(|t| {
            let mut x = vec![0i64; n];
            x[n - 1] = t;
            let rest = &budget - &d[n - 1] * qi(t) * qi(t);
            let mut found = Vec::new();
            if n == 1 {
                if rest.is_zero() && t != 0 {
                    found.push(x);
                }
            } else {
                descend(&d, &m, n - 2, &mut x, &rest, &mut found);
            }
            found
        })
        .collect();
    out.sort();
    Some(out)
}

pub fn quad(gram: &[Vec<i64>], v: &[i64]) -> i64 {
    let mut s = 0;
    for (i, vi) in v.iter().enumerate() {
        for (j, vj) in v.iter().enumerate() {
            s += vi * gram[i][j] * vj;
        }
    }
    s
}

fn round_q(x: &Q) -> i64 {
    let two = qi(2);
    floor_q(&((x * &two + Q::one()) / two))
}

/// LLL with `delta = 3/4` on the standard basis of a positive definite
/// Gram matrix; returns the reduced basis as coefficient rows.
pub fn lll(gram: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = gram.len();
    let mut b: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    if n < 2 {
        return b;
    }
    let delta = Q::new(3.into(), 4.into());
    let ip = |u: &[i64], v: &[i64]| -> Q {
        let mut s = 0i64;
        for i in 0..n {
            if u[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += u[i] * gram[i][j] * v[j];
            }
        }
        qi(s)
    };
    let gso = |b: &[Vec<i64>]| -> (Vec<Q>, Vec<Vec<Q>>) {
        let mut bs = vec![Q::zero(); n];
        let mut mu = vec![vec![Q::zero(); n]; n];
        for i in 0..n {
            for j in 0..i {
                let mut v = ip(&b[i], &b[j]);
                for k in 0..j {
                    v -= &mu[j][k] * &mu[i][k] * &bs[k];
                }
                mu[i][j] = v / &bs[j];
            }
            let mut v = ip(&b[i], &b[i]);
            for k in 0..i {
                v -= &mu[i][k] * &mu[i][k] * &bs[k];
            }
            bs[i] = v;
        }
        (bs, mu)
    };
    let mut k = 1;
    let mut guard = 0usize;
    while k < n {
        guard += 1;
        assert!(guard < 1_000_000, "LLL failed to terminate");
        for j in (0..k).rev() {
            let (_, mu) = gso(&b);
            let r = round_q(&mu[k][j]);
            if r != 0 {
                let bj = b[j].clone();
                for (x, y) in b[k].iter_mut().zip(&bj) {
                    *x -= r * y;
                }
            }
        }
        let (bs, mu) = gso(&b);
        if bs[k] >= (&delta - &mu[k][k - 1] * &mu[k][k - 1]) * &bs[k - 1] {
            k += 1;
        } else {
            b.swap(k, k - 1);
            k = (k - 1).max(1);
        }
    }
    b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattices::lattice::cartan;

    #[test]
    fn root_counts() {
        for (f, n, want) in [('A', 1, 2), ('A', 2, 6), ('A', 4, 20), ('D', 4, 24), ('D', 5, 40), ('E', 6, 72), ('E', 7, 126), ('E', 8, 240)] {
            let g = cartan(f, n).unwrap();
            assert_eq!(vectors_of_norm(&g, 2).unwrap().len(), want, "{f}{n}");
        }
    }

    #[test]
    fn lll_keeps_the_lattice() {
        // a skewed basis of A2 + A1
        let t = [vec![1i64, 3, 0], vec![0, 1, 0], vec![2, 5, 1]];
        let base = [vec![2i64, -1, 0], vec![-1, 2, 0], vec![0, 0, 2]];
        let g: Vec<Vec<i64>> = t
            .iter()
            .map(|u| t.iter().map(|v| {
                let mut s = 0;
                for i in 0..3 { for j in 0..3 { s += u[i] * base[i][j] * v[j]; } }
                s
            }).collect())
            .collect();
        let red = lll(&g);
        let rg: Vec<Vec<i64>> = red.iter().map(|u| red.iter().map(|v| {
            let mut s = 0;
            for i in 0..3 { for j in 0..3 { s += u[i] * g[i][j] * v[j]; } }
            s
        }).collect()).collect();
        assert!(rg.iter().enumerate().all(|(i, r)| r[i] == 2));
        assert_eq!(vectors_of_norm(&g, 2).unwrap().len(), 8);
        assert!(ldl(&[vec![0, 1], vec![1, 0]]).is_none());
    }
}
