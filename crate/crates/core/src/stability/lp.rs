//! Exact two-phase simplex over Q with Bland's pivoting rule.

use num_traits::{One, Signed, Zero};

use crate::exactalg::Q;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rel {
    Ge,
    Le,
    Eq,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { x: Vec<Q>, value: Q },
    Unbounded,
    Infeasible,
}

/// Linear program in free (sign-unrestricted) variables:
/// minimize `c.x` subject to `a_i.x (rel_i) b_i`.
#[derive(Clone, Debug, Default)]
pub struct Lp {
    n: usize,
    rows: Vec<(Vec<Q>, Rel, Q)>,
}

impl Lp {
    pub fn new(n: usize) -> Self {
        Lp { n, rows: Vec::new() }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn constrain(&mut self, a: Vec<Q>, rel: Rel, b: Q) -> &mut Self {
        assert_eq!(a.len(), self.n);
        self.rows.push((a, rel, b));
        self
    }

    pub fn feasible_point(&self) -> Option<Vec<Q>> {
        match self.minimize(&vec![Q::zero(); self.n]) {
            LpOutcome::Optimal { x, .. } => Some(x),
            _ => None,
        }
    }

    pub fn minimize(&self, c: &[Q]) -> LpOutcome {
        assert_eq!(c.len(), self.n);
        // columns: x+ (n), x- (n), one slack per inequality, artificials (m)
        let m = self.rows.len();
        let n_slack = self.rows.iter().filter(|r| r.1 != Rel::Eq).count();
        let n_struct = 2 * self.n + n_slack;
        let width = n_struct + m;
        let mut t = vec![vec![Q::zero(); width + 1]; m];
        let mut slack = 2 * self.n;
        for (i, (a, rel, b)) in self.rows.iter().enumerate() {
            for j in 0..self.n {
                t[i][j] = a[j].clone();
                t[i][self.n + j] = -a[j].clone();
            }
            match rel {
                Rel::Ge => {
                    t[i][slack] = -Q::one();
                    slack += 1;
                }
                Rel::Le => {
                    t[i][slack] = Q::one();
                    slack += 1;
                }
                Rel::Eq => {}
            }
            t[i][width] = b.clone();
            if b.is_negative() {
                for v in t[i].iter_mut() {
                    *v = -v.clone();
                }
            }
            t[i][n_struct + i] = Q::one();
        }
        let mut basis: Vec<usize> = (n_struct..width).collect();

        // phase 1: minimize the sum of artificials
        let mut cost1 = vec![Q::zero(); width];
        for c in cost1.iter_mut().skip(n_struct) {
            *c = Q::one();
        }
        if simplex(&mut t, &mut basis, &cost1, width) == Step::Unbounded {
            unreachable!("phase one is bounded below by zero");
        }
        let infeas: Q = basis.iter().zip(&t).filter(|(&b, _)| b >= n_struct).map(|(_, r)| r[width].clone()).sum();
        if !infeas.is_zero() {
            return LpOutcome::Infeasible;
        }
        // drive zero-level artificials out of the basis, dropping redundant rows
        let mut i = 0;
        while i < t.len() {
            if basis[i] >= n_struct {
                match (0..n_struct).find(|&j| !t[i][j].is_zero()) {
                    Some(j) => pivot(&mut t, &mut basis, i, j),
                    None => {
                        t.remove(i);
                        basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
        for row in t.iter_mut() {
            row.drain(n_struct..width);
        }

        let mut cost2 = vec![Q::zero(); n_struct];
        for j in 0..self.n {
            cost2[j] = c[j].clone();
            cost2[self.n + j] = -c[j].clone();
        }
        if simplex(&mut t, &mut basis, &cost2, n_struct) == Step::Unbounded {
            return LpOutcome::Unbounded;
        }
        let mut full = vec![Q::zero(); n_struct];
        for (i, &b) in basis.iter().enumerate() {
            full[b] = t[i][n_struct].clone();
        }
        let x: Vec<Q> = (0..self.n).map(|j| &full[j] - &full[self.n + j]).collect();
        let value = x.iter().zip(c).map(|(a, b)| a * b).sum();
        LpOutcome::Optimal { x, value }
    }
}

#[derive(PartialEq, Eq)]
enum Step {
    Optimal,
    Unbounded,
}

fn pivot(t: &mut [Vec<Q>], basis: &mut [usize], r: usize, c: usize) {
    let inv = Q::one() / t[r][c].clone();
    for v in t[r].iter_mut() {
        *v = &*v * &inv;
    }
    let prow = t[r].clone();
    for (i, row) in t.iter_mut().enumerate() {
        if i == r || row[c].is_zero() {
            continue;
        }
        let f = row[c].clone();
        for (v, p) in row.iter_mut().zip(&prow) {
            if !p.is_zero() {
                *v = &*v - &(&f * p);
            }
        }
    }
    basis[r] = c;
}

/// Minimize over the first `width` columns; the last column is the rhs.
fn simplex(t: &mut [Vec<Q>], basis: &mut [usize], cost: &[Q], width: usize) -> Step {
    loop {
        // reduced cost of column j: cost_j - sum_i cost_{basis_i} t_ij
        let entering = (0..width).find(|&j| {
            if basis.contains(&j) {
                return false;
            }
            let mut r = cost[j].clone();
            for (i, &b) in basis.iter().enumerate() {
                if !cost[b].is_zero() && !t[i][j].is_zero() {
                    r -= &cost[b] * &t[i][j];
                }
            }
            r.is_negative()
        });
        let Some(j) = entering else { return Step::Optimal };
        let rhs = t.first().map(|r| r.len() - 1).unwrap_or(0);
        let mut best: Option<(Q, usize, usize)> = None;
        for i in 0..t.len() {
            if t[i][j].is_positive() {
                let ratio = &t[i][rhs] / &t[i][j];
                let better = match &best {
                    None => true,
                    Some((r, _, b)) => ratio < *r || (ratio == *r && basis[i] < *b),
                };
                if better {
                    best = Some((ratio, i, basis[i]));
                }
            }
        }
        let Some((_, i, _)) = best else { return Step::Unbounded };
        pivot(t, basis, i, j);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::q;

    #[test]
    fn small_optimum() {
        // min -x - y, x + 2y <= 4, 3x + y <= 6, x,y >= 0  ->  (8/5, 6/5)
        let mut lp = Lp::new(2);
        lp.constrain(vec![q(1), q(2)], Rel::Le, q(4))
            .constrain(vec![q(3), q(1)], Rel::Le, q(6))
            .constrain(vec![q(1), q(0)], Rel::Ge, q(0))
            .constrain(vec![q(0), q(1)], Rel::Ge, q(0));
        match lp.minimize(&[q(-1), q(-1)]) {
            LpOutcome::Optimal { x, value } => {
                assert_eq!(x, vec![Q::new(8.into(), 5.into()), Q::new(6.into(), 5.into())]);
                assert_eq!(value, Q::new((-14).into(), 5.into()));
            }
            o => panic!("{o:?}"),
        }
    }

    #[test]
    fn infeasible_and_unbounded() {
        let mut lp = Lp::new(1);
        lp.constrain(vec![q(1)], Rel::Ge, q(2)).constrain(vec![q(1)], Rel::Le, q(1));
        assert_eq!(lp.minimize(&[q(1)]), LpOutcome::Infeasible);
        let mut lp = Lp::new(1);
        lp.constrain(vec![q(1)], Rel::Le, q(1));
        assert_eq!(lp.minimize(&[q(1)]), LpOutcome::Unbounded);
    }

    #[test]
    fn redundant_equalities() {
        let mut lp = Lp::new(2);
        lp.constrain(vec![q(1), q(1)], Rel::Eq, q(2))
            .constrain(vec![q(2), q(2)], Rel::Eq, q(4))
            .constrain(vec![q(1), q(-1)], Rel::Eq, q(0));
        assert_eq!(lp.feasible_point(), Some(vec![q(1), q(1)]));
    }
}
