//! Exhaustive singular-point scans over prime fields.

use rayon::prelude::*;
use smallvec::SmallVec;

use crate::exactalg::field::{inv_mod, is_prime, mul_mod, rational_reconstruct, reduce_mod};
use crate::exactalg::{MultiPoly, Q};
use crate::{Error, Result};

use super::scheme::TwoThreeScheme;

/// Largest prime the scans accept; products of residues fit in a u64.
pub const MAX_SCAN_PRIME: u64 = 1 << 20;

/// A polynomial reduced modulo a runtime prime, for fast evaluation.
#[derive(Clone, Debug)]
pub struct ModPoly {
    p: u64,
    nvars: usize,
    max_exp: usize,
    terms: Vec<(u64, Vec<u32>)>,
}

/// Powers `x_i^k` for `k <= max_exp`, row-major by variable.
pub struct Powers {
    stride: usize,
    table: SmallVec<[u64; 32]>,
}

impl Powers {
    pub fn new(x: &[u64], max_exp: usize, p: u64) -> Self {
        let stride = max_exp + 1;
        let mut table = SmallVec::with_capacity(x.len() * stride);
        for &xi in x {
            let mut t = 1 % p;
            for _ in 0..stride {
                table.push(t);
                t = t * xi % p;
            }
        }
        Powers { stride, table }
    }
}

impl ModPoly {
    pub fn new(f: &MultiPoly<Q>, p: u64) -> Result<Self> {
        if p > MAX_SCAN_PRIME {
            return Err(Error::Invalid(format!("{p} exceeds the scan limit {MAX_SCAN_PRIME}")));
        }
        let mut terms = Vec::with_capacity(f.num_terms());
        for (m, c) in f.terms() {
            let c = reduce_mod(c, p).ok_or(Error::BadPrime(p))?;
            if c != 0 {
                terms.push((c, m.0.clone()));
            }
        }
        Ok(Self::from_terms(p, f.nvars(), terms))
    }

    fn from_terms(p: u64, nvars: usize, terms: Vec<(u64, Vec<u32>)>) -> Self {
        let max_exp = terms.iter().flat_map(|(_, e)| e.iter()).copied().max().unwrap_or(0) as usize;
        ModPoly { p, nvars, max_exp, terms }
    }

    pub fn max_exp(&self) -> usize {
        self.max_exp
    }

    pub fn derivative(&self, j: usize) -> ModPoly {
        let terms = self
            .terms
            .iter()
            .filter(|(_, e)| e[j] > 0)
            .filter_map(|(c, e)| {
                let c = c * (e[j] as u64 % self.p) % self.p;
                let mut e = e.clone();
                e[j] -= 1;
                (c != 0).then_some((c, e))
            })
            .collect();
        Self::from_terms(self.p, self.nvars, terms)
    }

    /// Split by the exponent of `x_j`: the coefficient of `x_j^k`.
    pub fn coefficient_of(&self, j: usize, k: u32) -> ModPoly {
        let terms = self
            .terms
            .iter()
            .filter(|(_, e)| e[j] == k)
            .map(|(c, e)| {
                let mut e = e.clone();
                e[j] = 0;
                (*c, e)
            })
            .collect();
        Self::from_terms(self.p, self.nvars, terms)
    }

    /// Drop the first variable, which must not occur.
    pub fn without_first_var(&self) -> ModPoly {
        debug_assert!(self.terms.iter().all(|(_, e)| e[0] == 0));
        let terms = self.terms.iter().map(|(c, e)| (*c, e[1..].to_vec())).collect();
        Self::from_terms(self.p, self.nvars - 1, terms)
    }

    fn degree_in_last(&self) -> usize {
        self.terms.iter().map(|(_, e)| e[self.nvars - 1]).max().unwrap_or(0) as usize
    }

    /// Coefficients in the last variable with the others fixed to `pt`
    /// (its last entry is ignored).
    fn restrict_last(&self, pt: &[u64], d: usize) -> SmallVec<[u64; 8]> {
        let p = self.p;
        let last = self.nvars - 1;
        let mut out: SmallVec<[u64; 8]> = SmallVec::from_elem(0, d + 1);
        for (c, e) in &self.terms {
            let mut t = *c;
            for (i, &k) in e[..last].iter().enumerate() {
                for _ in 0..k {
                    t = t * pt[i] % p;
                }
            }
            let slot = &mut out[e[last] as usize];
            *slot = (*slot + t) % p;
        }
        out
    }

    pub fn eval(&self, x: &[u64]) -> u64 {
        self.eval_powers(&Powers::new(x, self.max_exp, self.p))
    }

    /// Evaluate from a table with `max_exp` at least this polynomial's.
    pub fn eval_powers(&self, pw: &Powers) -> u64 {
        let p = self.p;
        let mut acc = 0u64;
        for (c, e) in &self.terms {
            let mut t = *c;
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = t * pw.table[i * pw.stride + k as usize] % p;
                }
            }
            acc += t;
        }
        acc % p
    }
}

pub fn check_prime(p: u64) -> Result<()> {
    if !is_prime(p) || p > MAX_SCAN_PRIME {
        return Err(Error::Invalid(format!("{p} is not a usable prime")));
    }
    Ok(())
}

fn point_count(n: usize, p: u64) -> u64 {
    (0..n).map(|k| p.pow((n - 1 - k) as u32)).sum()
}

/// The `idx`-th point of P^(n-1)(F_p) in the canonical order (first nonzero
/// coordinate equal to 1, remaining coordinates in base-p order).
pub fn nth_point(n: usize, p: u64, idx: u64) -> Vec<u64> {
    let mut pt = vec![0; n];
    nth_point_into(&mut pt, p, idx);
    pt
}

/// `nth_point` written into `pt`, whose length is the number of coordinates.
pub fn nth_point_into(pt: &mut [u64], p: u64, mut idx: u64) {
    let n = pt.len();
    for k in 0..n {
        let size = p.pow((n - 1 - k) as u32);
        if idx < size {
            pt[..k].fill(0);
            pt[k] = 1;
            for j in (k + 1..n).rev() {
                pt[j] = idx % p;
                idx /= p;
            }
            return;
        }
        idx -= size;
    }
    unreachable!("point index out of range")
}

/// All points of P^(n-1)(F_p) satisfying `pred`, in canonical order; `n`
/// is at most 8.
pub fn scan_projective<P>(n: usize, p: u64, pred: P) -> Vec<Vec<u64>>
where
    P: Fn(&[u64]) -> bool + Sync,
{
    assert!(n <= 8, "scan_projective handles at most 8 coordinates");
    (0..point_count(n, p))
        .into_par_iter()
        .filter_map(|i| {
            let mut buf = [0u64; 8];
            let pt = &mut buf[..n];
            nth_point_into(pt, p, i);
            pred(pt).then(|| pt.to_vec())
        })
        .collect()
}

/// Common zeros of `polys` in P^(n-1)(F_p), in canonical order. The first
/// polynomial is restricted to the lines along the last coordinate and its
/// roots are read off a power table; the rest are checked at those roots.
pub fn common_zeros(polys: &[ModPoly], p: u64) -> Vec<Vec<u64>> {
    let (first, rest) = polys.split_first().expect("at least one polynomial");
    let n = first.nvars;
    assert!((1..=8).contains(&n), "common_zeros handles 1 to 8 coordinates");
    let check = |pt: &[u64]| rest.iter().all(|g| g.eval(pt) == 0);
    let d = first.degree_in_last();
    let stride = d + 1;
    let powers: Vec<u64> = (0..p)
        .flat_map(|t| std::iter::successors(Some(1 % p), move |x| Some(x * t % p)).take(stride))
        .collect();
    let mut out = Vec::new();
    // leading 1 in position k < n-1; coordinates k+1..n-2 form the prefix
    for k in 0..n.saturating_sub(1) {
        let prefixes = p.pow((n - 2 - k) as u32);
        let found: Vec<Vec<Vec<u64>>> = (0..prefixes)
            .into_par_iter()
            .map(|idx| {
                let mut buf = [0u64; 8];
                let pt = &mut buf[..n];
                pt[k] = 1;
                let mut r = idx;
                for j in (k + 1..n - 1).rev() {
                    pt[j] = r % p;
                    r /= p;
                }
                let coeffs = first.restrict_last(pt, d);
                let mut hits = Vec::new();
                for t in 0..p {
                    let row = &powers[t as usize * stride..][..stride];
                    let v = coeffs.iter().zip(row).map(|(c, x)| c * x).sum::<u64>() % p;
                    if v == 0 {
                        pt[n - 1] = t;
                        if check(pt) {
                            hits.push(pt.to_vec());
                        }
                    }
                }
                hits
            })
            .collect();
        out.extend(found.into_iter().flatten());
    }
    let mut last = vec![0; n];
    last[n - 1] = 1;
    if first.eval(&last) == 0 && check(&last) {
        out.push(last);
    }
    out
}

fn rank_le_one(a: &[u64], b: &[u64], p: u64) -> bool {
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            if mul_mod(a[i], b[j], p) != mul_mod(a[j], b[i], p) {
                return false;
            }
        }
    }
    true
}

/// F_p-points of `C` where the Jacobian of `(q, f)` has rank at most one.
pub fn singular_points_scan(c: &TwoThreeScheme, p: u64) -> Result<Vec<Vec<u64>>> {
    check_prime(p)?;
    let q = ModPoly::new(c.q(), p)?;
    let f = ModPoly::new(c.f(), p)?;
    let gq: Vec<ModPoly> = c.q().gradient().iter().map(|g| ModPoly::new(g, p)).collect::<Result<_>>()?;
    let gf: Vec<ModPoly> = c.f().gradient().iter().map(|g| ModPoly::new(g, p)).collect::<Result<_>>()?;
    let mut pts = common_zeros(&[q, f], p);
    pts.retain(|x| {
        let a: Vec<u64> = gq.iter().map(|g| g.eval(x)).collect();
        let b: Vec<u64> = gf.iter().map(|g| g.eval(x)).collect();
        rank_le_one(&a, &b, p)
    });
    Ok(pts)
}

/// Number of F_p-points of `C`.
pub fn point_count_scan(c: &TwoThreeScheme, p: u64) -> Result<usize> {
    check_prime(p)?;
    let q = ModPoly::new(c.q(), p)?;
    let f = ModPoly::new(c.f(), p)?;
    Ok(common_zeros(&[q, f], p).len())
}

/// Singular points of a cubic threefold `F(x0..x4)` with a double point at
/// `(1,0,0,0,0)`, other than that point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreefoldScan {
    pub points: Vec<Vec<u64>>,
    /// Some line through the marked point is singular.
    pub non_isolated: bool,
}

pub fn threefold_scan_off_marked(cubic: &MultiPoly<Q>, p: u64) -> Result<ThreefoldScan> {
    check_prime(p)?;
    if cubic.nvars() != 5 {
        return Err(Error::Dimension("threefold scan expects 5 variables".into()));
    }
    if cubic.degree_in(0) > 1 {
        return Err(Error::Invalid("(1,0,0,0,0) is not a double point".into()));
    }
    // F = x0 A(y) + B(y): dF/dx0 = A, dF/dy_j = x0 dA/dy_j + dB/dy_j
    let full = ModPoly::new(cubic, p)?;
    let a_part = full.coefficient_of(0, 1);
    let b_part = full.coefficient_of(0, 0);
    let mut consts = vec![a_part.clone()];
    let mut slopes = vec![None];
    for j in 1..5 {
        consts.push(b_part.derivative(j));
        slopes.push(Some(a_part.derivative(j)));
    }
    let max_exp = consts.iter().map(ModPoly::max_exp).max().unwrap_or(0);
    // dF/dx0 does not involve x0, so it must vanish outright
    let candidates = common_zeros(&[a_part.without_first_var()], p);
    let lines: Vec<(Vec<u64>, Option<u64>)> = candidates
        .into_par_iter()
        .filter_map(|y| {
            let mut at = [0u64; 5];
            at[1..].copy_from_slice(&y);
            let pw = Powers::new(&at, max_exp, p);
            // the other partials are affine in x0: a + x0 * b
            let a: Vec<u64> = consts.iter().map(|g| g.eval_powers(&pw)).collect();
            let b: Vec<u64> = slopes.iter().map(|g| g.as_ref().map_or(0, |g| g.eval_powers(&pw))).collect();
            match b.iter().position(|&v| v != 0) {
                None => a.iter().all(|&v| v == 0).then_some((y, None)),
                Some(k) => {
                    let x0 = mul_mod(p - a[k], inv_mod(b[k], p).unwrap(), p);
                    a.iter()
                        .zip(&b)
                        .all(|(&ai, &bi)| (ai + x0 * bi).is_multiple_of(p))
                        .then_some((y, Some(x0)))
                }
            }
        })
        .collect();
    let non_isolated = lines.iter().any(|(_, x0)| x0.is_none());
    let points = lines
        .into_iter()
        .filter_map(|(y, x0)| {
            let x0 = x0?;
            let mut pt = vec![x0];
            pt.extend(y);
            Some(pt)
        })
        .collect();
    Ok(ThreefoldScan { points, non_isolated })
}

/// Lift a normalized F_p point to a small rational point, if possible.
pub fn lift_point(pt: &[u64], p: u64) -> Option<Vec<Q>> {
    pt.iter().map(|&c| rational_reconstruct(c, p)).collect()
}

/// Reduce a rational projective point to a normalized F_p point.
pub fn reduce_point(pt: &[Q], p: u64) -> Option<Vec<u64>> {
    let v: Vec<u64> = pt.iter().map(|c| reduce_mod(c, p)).collect::<Option<_>>()?;
    let lead = *v.iter().find(|&&c| c != 0)?;
    let inv = inv_mod(lead, p)?;
    Some(v.iter().map(|&c| mul_mod(c, inv, p)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_order() {
        let all: Vec<_> = (0..point_count(3, 5)).map(|i| nth_point(3, 5, i)).collect();
        assert_eq!(all.len(), 31);
        assert_eq!(all[0], vec![1, 0, 0]);
        assert_eq!(all[30], vec![0, 0, 1]);
    }

    #[test]
    fn two_a5_points() {
        let c = TwoThreeScheme::parse("x1 x4 - x2 x3", "x1 x3^2 + x2^2 x4").unwrap();
        for p in [101, 103, 107] {
            let pts = singular_points_scan(&c, p).unwrap();
            assert_eq!(pts, vec![vec![1, 0, 0, 0], vec![0, 0, 0, 1]]);
        }
    }

    #[test]
    fn common_zeros_match_brute_force() {
        let v = crate::singclass::scheme_vars();
        let cases = [
            ("x1 x4 - x2 x3", "x1^3 + x2^3 + x3^3 + x4^3"),
            ("x1 x2", "x3^3 + x4^3"),
            ("x3^2 - x2 x4", "x2^3 - 2 x1 x2 x3 + x1^2 x4"),
            ("x1^2", "x2 x3 x4 + 3 x4^3"),
            ("x4^2 + x1 x2", "x2^3"),
        ];
        for (q, f) in cases {
            let q = MultiPoly::parse(q, &v).unwrap();
            let f = MultiPoly::parse(f, &v).unwrap();
            for p in [5, 7, 13] {
                let (mq, mf) = (ModPoly::new(&q, p).unwrap(), ModPoly::new(&f, p).unwrap());
                let brute = scan_projective(4, p, |x| mq.eval(x) == 0 && mf.eval(x) == 0);
                assert_eq!(common_zeros(&[mq.clone(), mf.clone()], p), brute);
                assert_eq!(common_zeros(std::slice::from_ref(&mf), p), scan_projective(4, p, |x| mf.eval(x) == 0));
            }
        }
    }
}
