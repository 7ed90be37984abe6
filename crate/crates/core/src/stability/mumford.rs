//! Mumford's numerical criterion for Chow points, Schubert's lower bound
//! for curves in two hyperplanes, and the C*-balance of the O(a,b)
//! linearization.

use serde::{Deserialize, Serialize};

use crate::exactalg::Q;
use crate::{Error, Result};

use super::onepss::{Convention, OnePs};

/// `(r+1)/(N+1) * deg * sum(r_i)` for an r-dimensional cycle in P^N.
pub fn mumford_rhs(r: u32, n: u32, deg: u32, w: &OnePs) -> Result<Q> {
    if w.convention != Convention::R {
        return Err(Error::Invalid("mumford_rhs takes r-convention weights".into()));
    }
    if w.len() != n as usize + 1 {
        return Err(Error::Dimension(format!("{} weights for P^{n}", w.len())));
    }
    let sum: i64 = w.weights.iter().sum();
    Ok(Q::new(((r as i64 + 1) * deg as i64 * sum).into(), (n as i64 + 1).into()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SchubertDecision {
    /// The lower bound exceeds Mumford's right-hand side.
    NotSemistable,
    /// Bound and right-hand side leave semistability open.
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchubertBound {
    #[serde(with = "crate::exactalg::field::qser")]
    pub bound: Q,
    #[serde(with = "crate::exactalg::field::qser")]
    pub rhs: Q,
    pub decision: SchubertDecision,
}

/// `e_lambda(C) >= 2 deg(C_1) + deg(C_2 . H_1)` for the 1-PS with
/// r-weights `(0,1,1,1)`, `C_1` lying in `H_1 = {x_0 = 0}`, compared with
/// the right-hand side for a degree 6 curve in P^3.
pub fn schubert_bound(deg_c1: u32, deg_c2_cap_h1: u32) -> Result<SchubertBound> {
    if deg_c1 + deg_c2_cap_h1 > 6 {
        return Err(Error::Invalid(format!(
            "component degrees {deg_c1} + {deg_c2_cap_h1} exceed the degree 6 of the curve"
        )));
    }
    let bound = Q::from_integer((2 * deg_c1 + deg_c2_cap_h1).into());
    let rhs = mumford_rhs(1, 3, 6, &OnePs::r_convention(vec![0, 1, 1, 1])?)?;
    let decision = if bound > rhs { SchubertDecision::NotSemistable } else { SchubertDecision::Undecided };
    Ok(SchubertBound { bound, rhs, decision })
}

/// Splittings `C = C_1 + C_2` of a sextic with `deg C_1 >= deg C_2` that
/// survive the bound; `C_2` meets `H_1` in `deg C_2` points.
pub fn schubert_survivors() -> Vec<(u32, u32)> {
    (0..=6u32)
        .map(|d1| (d1, 6 - d1))
        .filter(|&(d1, d2)| d1 >= d2)
        .filter(|&(d1, d2)| matches!(schubert_bound(d1, d2), Ok(b) if b.decision == SchubertDecision::Undecided))
        .collect()
}

/// `O(a, b)` on the projective bundle is invariant under the scaling
/// `t.(x0 q + f) = t^-2 x0 q + t^3 f` iff `2a = 3b`.
pub fn linearization_balance(a: u64, b: u64) -> bool {
    2 * a == 3 * b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rhs_values() {
        let w = OnePs::r_convention(vec![0, 1, 1, 1]).unwrap();
        assert_eq!(mumford_rhs(1, 3, 6, &w).unwrap(), Q::from_integer(9.into()));
        let w = OnePs::r_convention(vec![1, 1, 1, 1]).unwrap();
        assert_eq!(mumford_rhs(1, 3, 6, &w).unwrap(), Q::from_integer(12.into()));
        let w = OnePs::r_convention(vec![0, 0, 0, 0]).unwrap();
        assert_eq!(mumford_rhs(1, 3, 6, &w).unwrap(), Q::from_integer(0.into()));
        assert!(mumford_rhs(1, 3, 6, &OnePs::sum_zero(vec![1, -1, 0, 0]).unwrap()).is_err());
    }

    #[test]
    fn schubert_elimination() {
        let b = schubert_bound(4, 2).unwrap();
        assert_eq!(b.bound, Q::from_integer(10.into()));
        assert_eq!(b.decision, SchubertDecision::NotSemistable);
        let b = schubert_bound(3, 3).unwrap();
        assert_eq!(b.bound, b.rhs);
        assert_eq!(b.decision, SchubertDecision::Undecided);
        assert_eq!(schubert_bound(0, 0).unwrap().bound, Q::from_integer(0.into()));
        assert!(schubert_bound(5, 3).is_err());
        assert_eq!(schubert_survivors(), vec![(3, 3)]);
    }

    #[test]
    fn balance() {
        assert!(linearization_balance(3, 2));
        assert!(!linearization_balance(1, 1));
        assert!(linearization_balance(9, 6));
    }
}
