//! Hilbert-Mumford certificates by exact LP over diagonal 1-PS, in the
//! standard frame and in seeded random frames.

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::exactalg::{Matrix, MultiPoly, RatMatrix, Q};
use crate::Result;

use super::lp::{Lp, Rel};
use super::onepss::{monomial_weight, OnePs};

/// Where to look for destabilizing diagonal 1-PS.
#[derive(Clone, Debug)]
#[derive(Default)]
pub struct FrameSearch {
    /// Extra frames tried right after the standard one.
    pub known: Vec<RatMatrix>,
    pub random_frames: usize,
    pub seed: u64,
}


impl FrameSearch {
    pub fn random(n: usize, seed: u64) -> Self {
        FrameSearch { known: vec![], random_frames: n, seed }
    }

    /// Frames in search order: identity, known frames, then random ones.
    pub fn frames(&self, dim: usize) -> Vec<RatMatrix> {
        let mut out = vec![RatMatrix::identity(dim)];
        out.extend(self.known.iter().cloned());
        out.extend(random_frames(dim, self.random_frames, self.seed));
        out
    }
}

/// Invertible integer matrices with entries in [-2, 2].
pub fn random_frames(dim: usize, count: usize, seed: u64) -> Vec<RatMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let rows: Vec<Vec<i64>> = (0..dim).map(|_| (0..dim).map(|_| rng.gen_range(-2..=2)).collect()).collect();
        let m = RatMatrix::from_i64(&rows);
        if !m.det().is_zero() {
            out.push(m);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    /// Index into the searched frames; 0 is the standard frame.
    pub frame_index: usize,
    pub frame: Vec<Vec<String>>,
    pub one_ps: OnePs,
    pub weight_min: i64,
}

/// Sum-zero `w` with `<a, w> >= 1` for every row `a`, as a primitive
/// integer vector. Rows are linear forms in the weights.
pub fn certificate_for_support(rows: &[Vec<i64>], n: usize) -> Option<OnePs> {
    if rows.is_empty() {
        return None;
    }
    let mut lp = Lp::new(n);
    lp.constrain(vec![Q::one(); n], Rel::Eq, Q::zero());
    for a in dedup(rows) {
        lp.constrain(a.iter().map(|&x| Q::from_integer(x.into())).collect(), Rel::Ge, Q::one());
    }
    let x = lp.feasible_point()?;
    OnePs::from_rational(&x).ok()
}

/// Nonzero sum-zero `w` with `<a, w> >= 0` on every row and equality on at
/// least one. Tries the common kernel (a stabilizing torus) first.
pub fn zero_weight_for_support(rows: &[Vec<i64>], n: usize) -> Option<OnePs> {
    let rows = dedup(rows);
    if rows.is_empty() {
        return None;
    }
    let mut eqs: Vec<Vec<Q>> = rows.iter().map(|a| a.iter().map(|&x| Q::from_integer(x.into())).collect()).collect();
    eqs.push(vec![Q::one(); n]);
    let kernel = Matrix::from_rows(eqs).kernel();
    if let Some(k) = kernel.first() {
        let w = OnePs::from_rational(k).ok()?;
        return Some(sign_normalize(w));
    }
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let mut lp = Lp::new(n);
            lp.constrain(vec![Q::one(); n], Rel::Eq, Q::zero());
            for a in &rows {
                lp.constrain(a.iter().map(|&x| Q::from_integer(x.into())).collect(), Rel::Ge, Q::zero());
            }
            let mut d = vec![Q::zero(); n];
            d[i] = Q::one();
            d[j] = -Q::one();
            lp.constrain(d, Rel::Ge, Q::one());
            if let Some(x) = lp.feasible_point() {
                let w = OnePs::from_rational(&x).ok()?;
                let min = rows.iter().map(|a| monomial_weight_i(a, &w.weights)).min()?;
                if min == 0 {
                    return Some(w);
                }
            }
        }
    }
    None
}

fn monomial_weight_i(a: &[i64], w: &[i64]) -> i64 {
    a.iter().zip(w).map(|(x, y)| x * y).sum()
}

fn sign_normalize(w: OnePs) -> OnePs {
    match w.weights.iter().find(|&&x| x != 0) {
        Some(&x) if x < 0 => OnePs { weights: w.weights.iter().map(|v| -v).collect(), convention: w.convention },
        _ => w,
    }
}

fn dedup(rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut r = rows.to_vec();
    r.sort();
    r.dedup();
    r
}

pub fn exponent_rows(f: &MultiPoly<Q>) -> Vec<Vec<i64>> {
    f.terms().map(|(m, _)| m.0.iter().map(|&e| e as i64).collect()).collect()
}

/// Certificate for `F` in the frame `M` (i.e. for `F(Mx)`).
pub fn certificate_in_frame(f: &MultiPoly<Q>, m: &RatMatrix) -> Result<Option<OnePs>> {
    let g = f.substitute_linear(m)?;
    Ok(certificate_for_support(&exponent_rows(&g), g.nvars()))
}

/// First certificate over the searched frames, in frame order.
pub fn destabilize_search(f: &MultiPoly<Q>, search: &FrameSearch) -> Result<Option<Certificate>> {
    let frames = search.frames(f.nvars());
    let found: Vec<Option<(usize, OnePs)>> = frames
        .par_iter()
        .enumerate()
        .map(|(i, m)| certificate_in_frame(f, m).map(|w| w.map(|w| (i, w))))
        .collect::<Result<_>>()?;
    let Some((i, w)) = found.into_iter().flatten().next() else { return Ok(None) };
    let g = f.substitute_linear(&frames[i])?;
    let weight_min = g.terms().map(|(m, _)| monomial_weight(&m.0, &w.weights)).min().unwrap_or(0);
    Ok(Some(Certificate {
        frame_index: i,
        frame: frames[i].to_rows().iter().map(|r| r.iter().map(crate::exactalg::rational_to_string).collect()).collect(),
        one_ps: w,
        weight_min,
    }))
}

/// A nontrivial 1-PS in the standard frame along which `F` has minimal
/// weight exactly zero.
pub fn zero_weight_witness(f: &MultiPoly<Q>) -> Option<OnePs> {
    zero_weight_for_support(&exponent_rows(f), f.nvars())
}

pub fn is_positive_certificate(rows: &[Vec<i64>], w: &OnePs) -> bool {
    rows.iter().all(|a| Q::from_integer(monomial_weight_i(a, &w.normalized()).into()).is_positive())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{poly, var_names};
    use crate::stability::onepss::torus_weight_min;

    fn v() -> Vec<String> {
        var_names("x", 0, 5)
    }

    #[test]
    fn triple_point_is_destabilized() {
        let f = poly("x1^3 + x2^3 + x3^3 + x4^3 + x1 x2 x3", &v());
        let c = destabilize_search(&f, &FrameSearch::default()).unwrap().unwrap();
        assert_eq!(c.frame_index, 0);
        assert!(c.weight_min >= 1);
        assert!(torus_weight_min(&f, &c.one_ps).unwrap() >= Q::one());
    }

    #[test]
    fn f_ab_has_stabilizer_and_no_certificate() {
        let f = poly("x0 x3^2 - x0 x2 x4 + x2^3 + x1 x2 x3 + x1^2 x4", &v());
        assert!(destabilize_search(&f, &FrameSearch::default()).unwrap().is_none());
        let w = zero_weight_witness(&f).unwrap();
        assert_eq!(w.weights, vec![2, 1, 0, -1, -2]);
        assert_eq!(torus_weight_min(&f, &w).unwrap(), Q::zero());
    }

    #[test]
    fn f_d_stabilizer() {
        let f = poly("x0 x1 x2 + x3^3 + x4^3", &v());
        let w = zero_weight_witness(&f).unwrap();
        assert_eq!(torus_weight_min(&f, &w).unwrap(), Q::zero());
        assert!(certificate_in_frame(&f, &RatMatrix::identity(5)).unwrap().is_none());
    }

    #[test]
    fn fermat_has_no_certificate_in_random_frames() {
        let f = poly("x0^3 + x1^3 + x2^3 + x3^3 + x4^3", &v());
        assert!(destabilize_search(&f, &FrameSearch::random(10, 7)).unwrap().is_none());
    }

    #[test]
    fn random_frames_are_reproducible() {
        assert_eq!(random_frames(4, 5, 3), random_frames(4, 5, 3));
        assert_ne!(random_frames(4, 5, 3), random_frames(4, 5, 4));
    }
}
