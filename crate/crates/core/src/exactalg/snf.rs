//! Smith normal form over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// Result of [`smith_normal_form`]: `u * m * v = d`.
#[derive(Clone, Debug)]
pub struct Smith {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl Smith {
    /// Nonzero diagonal entries `d_1 | d_2 | ...`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d[(i, i)].clone())
            .filter(|x| !x.is_zero())
            .collect()
    }
}

fn row_axpy(m: &mut IntMatrix, dst: usize, src: usize, k: &BigInt) {
    for j in 0..m.cols() {
        let t = &m[(src, j)] * k;
        m[(dst, j)] += t;
    }
}

fn col_axpy(m: &mut IntMatrix, dst: usize, src: usize, k: &BigInt) {
    for i in 0..m.rows() {
        let t = &m[(i, src)] * k;
        m[(i, dst)] += t;
    }
}

fn negate_row(m: &mut IntMatrix, r: usize) {
    for j in 0..m.cols() {
        m[(r, j)] = -m[(r, j)].clone();
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> Smith {
    let (rows, cols) = (m.rows(), m.cols());
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    for t in 0..rows.min(cols) {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !d[(i, j)].is_zero()
                        && best.is_none_or(|(bi, bj)| d[(i, j)].abs() < d[(bi, bj)].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(d, u, v);
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..rows {
                if !d[(i, t)].is_zero() {
                    let k = -d[(i, t)].div_floor(&d[(t, t)]);
                    row_axpy(&mut d, i, t, &k);
                    row_axpy(&mut u, i, t, &k);
                    clean &= d[(i, t)].is_zero();
                }
            }
            for j in t + 1..cols {
                if !d[(t, j)].is_zero() {
                    let k = -d[(t, j)].div_floor(&d[(t, t)]);
                    col_axpy(&mut d, j, t, &k);
                    col_axpy(&mut v, j, t, &k);
                    clean &= d[(t, j)].is_zero();
                }
            }
            if !clean {
                continue;
            }
            // divisibility condition on the remaining block
            let mut bad = None;
            'scan: for i in t + 1..rows {
                for j in t + 1..cols {
                    if !d[(i, j)].is_multiple_of(&d[(t, t)]) {
                        bad = Some(i);
                        break 'scan;
                    }
                }
            }
            match bad {
                Some(i) => {
                    let one = BigInt::one();
                    row_axpy(&mut d, t, i, &one);
                    row_axpy(&mut u, t, i, &one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            negate_row(&mut d, t);
            negate_row(&mut u, t);
        }
    }
    finish(d, u, v)
}

fn finish(d: IntMatrix, u: IntMatrix, v: IntMatrix) -> Smith {
    Smith { d, u, v }
}

/// Invariant factors different from 1, with 0 for each degenerate direction.
pub fn invariant_factors(m: &IntMatrix) -> Vec<BigInt> {
    let s = smith_normal_form(m);
    let n = m.rows().min(m.cols());
    (0..n)
        .map(|i| s.d[(i, i)].clone())
        .filter(|x| !x.is_one())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &IntMatrix) -> Smith {
        let s = smith_normal_form(m);
        assert_eq!(s.u.mul(m).mul(&s.v), s.d);
        assert!(s.u.det().abs().is_one());
        assert!(s.v.det().abs().is_one());
        let diag = s.diagonal();
        for w in diag.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        s
    }

    #[test]
    fn a2_gram() {
        let s = check(&IntMatrix::from_i64(&[vec![2, -1], vec![-1, 2]]));
        assert_eq!(s.diagonal(), vec![BigInt::from(1), BigInt::from(3)]);
    }

    #[test]
    fn identity_is_fixed() {
        let s = check(&IntMatrix::identity(3));
        assert_eq!(s.d, IntMatrix::identity(3));
    }

    #[test]
    fn rectangular_and_degenerate() {
        check(&IntMatrix::from_i64(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]));
        let s = check(&IntMatrix::from_i64(&[vec![0, 0], vec![0, 0], vec![3, 6]]));
        assert_eq!(s.diagonal(), vec![BigInt::from(3)]);
    }
}
