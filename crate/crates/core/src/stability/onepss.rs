//! Diagonal one-parameter subgroups and torus weights of polynomials.

use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::exactalg::{Field, MultiPoly, Q};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Convention {
    /// Weights on the coordinate functions, summing to zero.
    SumZero,
    /// Nonnegative integers `r_i`; `x_i` has function weight
    /// `sum(r) - (N+1) r_i`.
    R,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OnePs {
    pub weights: Vec<i64>,
    pub convention: Convention,
}

impl OnePs {
    pub fn sum_zero(weights: Vec<i64>) -> Result<Self> {
        if weights.iter().sum::<i64>() != 0 {
            return Err(Error::Invalid(format!("weights {weights:?} do not sum to zero")));
        }
        Ok(OnePs { weights, convention: Convention::SumZero })
    }

    pub fn r_convention(r: Vec<i64>) -> Result<Self> {
        if r.iter().any(|&x| x < 0) {
            return Err(Error::Invalid(format!("r-weights {r:?} must be nonnegative")));
        }
        Ok(OnePs { weights: r, convention: Convention::R })
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// The weights under the sum-zero normalization.
    pub fn normalized(&self) -> Vec<i64> {
        match self.convention {
            Convention::SumZero => self.weights.clone(),
            Convention::R => {
                let s: i64 = self.weights.iter().sum();
                let n = self.weights.len() as i64;
                self.weights.iter().map(|r| s - n * r).collect()
            }
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.normalized().iter().all(|&w| w == 0)
    }

    /// Divide out the gcd of the normalized weights.
    pub fn primitive(&self) -> OnePs {
        let w = self.normalized();
        let g = w.iter().fold(0i64, |g, x| g.gcd(x));
        let w = if g == 0 { w } else { w.iter().map(|x| x / g).collect() };
        OnePs { weights: w, convention: Convention::SumZero }
    }

    /// Primitive integer vector proportional to a rational sum-zero vector.
    pub fn from_rational(w: &[Q]) -> Result<OnePs> {
        let l = w.iter().fold(num_bigint::BigInt::from(1), |l, x| l.lcm(x.denom()));
        let ints: Vec<num_bigint::BigInt> = w.iter().map(|x| (x * &Q::from_integer(l.clone())).to_integer()).collect();
        let g = ints.iter().fold(num_bigint::BigInt::zero(), |g, x| g.gcd(x));
        let ints: Vec<i64> = ints
            .iter()
            .map(|x| {
                let x = if g.is_zero() { x.clone() } else { x / &g };
                i64::try_from(x).map_err(|_| Error::Invalid("weight does not fit in i64".into()))
            })
            .collect::<Result<_>>()?;
        OnePs::sum_zero(ints)
    }

    pub fn permuted(&self, perm: &[usize]) -> OnePs {
        OnePs { weights: perm.iter().map(|&i| self.weights[i]).collect(), convention: self.convention }
    }
}

pub fn monomial_weight(e: &[u32], w: &[i64]) -> i64 {
    e.iter().zip(w).map(|(&a, &b)| a as i64 * b).sum()
}

/// Minimum of `<a, w>` over the support of `F`, with `w` sum-zero normalized.
pub fn torus_weight_min<F: Field>(f: &MultiPoly<F>, w: &OnePs) -> Result<Q> {
    if w.len() != f.nvars() {
        return Err(Error::Dimension(format!("{} weights for {} variables", w.len(), f.nvars())));
    }
    let w = w.normalized();
    f.terms()
        .map(|(m, _)| monomial_weight(&m.0, &w))
        .min()
        .map(|v| Q::from_integer(v.into()))
        .ok_or_else(|| Error::Invalid("empty polynomial has no weights".into()))
}

/// True when every support monomial has strictly positive weight.
pub fn is_destabilizing<F: Field>(f: &MultiPoly<F>, w: &OnePs) -> bool {
    torus_weight_min(f, w).map(|m| m.is_positive()).unwrap_or(false)
}
