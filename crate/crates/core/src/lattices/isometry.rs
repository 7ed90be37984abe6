//! Fixed-point-free isometries of order 3, by Coxeter elements where they
//! work and by exhaustive search of the automorphism group otherwise.

use serde::{Deserialize, Serialize};

use crate::exactalg::{RatMatrix, Q};
use crate::{Error, Result};

use super::enumerate::{positive_gram, vectors_of_norm};
use super::lattice::Lattice;

type Mat = Vec<Vec<i64>>;

fn identity(n: usize) -> Mat {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

fn mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let m = b.first().map_or(0, |r| r.len());
    (0..n).map(|i| (0..m).map(|j| (0..b.len()).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
}

fn transpose(a: &Mat) -> Mat {
    let n = a.first().map_or(0, |r| r.len());
    (0..n).map(|j| a.iter().map(|r| r[j]).collect()).collect()
}

/// An isometry acting on coordinate columns: `v -> M v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Isometry {
    pub matrix: Mat,
}

impl Isometry {
    pub fn preserves(&self, l: &Lattice) -> bool {
        mul(&mul(&transpose(&self.matrix), &l.gram), &self.matrix) == l.gram
    }

    pub fn power(&self, k: u32) -> Mat {
        (0..k).fold(identity(self.matrix.len()), |acc, _| mul(&acc, &self.matrix))
    }

    pub fn has_order_three(&self) -> bool {
        let n = self.matrix.len();
        self.matrix != identity(n) && self.power(3) == identity(n)
    }

    /// `det(M - I) != 0`.
    pub fn fixed_point_free(&self) -> bool {
        let n = self.matrix.len();
        let d: Mat = (0..n).map(|i| (0..n).map(|j| self.matrix[i][j] - i64::from(i == j)).collect()).collect();
        !crate::exactalg::IntMatrix::from_i64(&d).det().eq(&0.into())
    }

    /// Characteristic polynomial equals `(x^2 + x + 1)^(n/2)`.
    pub fn eisenstein_charpoly(&self) -> bool {
        let n = self.matrix.len();
        if n % 2 == 1 {
            return false;
        }
        let cp = RatMatrix::from_i64(&self.matrix).charpoly();
        let mut want = vec![Q::from_integer(1.into())];
        for _ in 0..n / 2 {
            let mut next = vec![Q::from_integer(0.into()); want.len() + 2];
            for (i, c) in want.iter().enumerate() {
                for k in 0..3 {
                    next[i + k] += c;
                }
            }
            want = next;
        }
        cp == want
    }

    pub fn is_valid_fpf3(&self, l: &Lattice) -> bool {
        self.preserves(l) && self.has_order_three() && self.fixed_point_free() && self.eisenstein_charpoly()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Nonexistence {
    /// The characteristic polynomial would be `(x^2+x+1)^(rank/2)`.
    OddRank { rank: usize },
    /// No element of the full automorphism group qualifies.
    Exhaustive { group_order: usize, order_three_elements: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Fpf3 {
    Found(Isometry),
    Nonexistent(Nonexistence),
    Inconclusive(String),
}

/// Reflection in the basis vector `i` of a root basis: `v -> v - <v, e_i> e_i`.
fn reflection(g: &Mat, i: usize) -> Mat {
    let n = g.len();
    let mut m = identity(n);
    for j in 0..n {
        m[i][j] -= g[i][j];
    }
    m
}

/// Connected blocks of the Gram graph.
fn blocks(g: &Mat) -> Vec<Vec<usize>> {
    let n = g.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut block = vec![s];
        seen[s] = true;
        let mut k = 0;
        while k < block.len() {
            let i = block[k];
            for j in 0..n {
                if !seen[j] && g[i][j] != 0 {
                    seen[j] = true;
                    block.push(j);
                }
            }
            k += 1;
        }
        block.sort();
        out.push(block);
    }
    out
}

/// For a root basis: `c^(h/3)` for the Coxeter element `c` of order `h`,
/// when that is fixed-point-free.
fn coxeter_power(g: &Mat) -> Option<Mat> {
    let n = g.len();
    if g.iter().enumerate().any(|(i, r)| r[i] != 2) {
        return None;
    }
    let c = (0..n).fold(identity(n), |acc, i| mul(&acc, &reflection(g, i)));
    let mut p = c.clone();
    let mut h = 1;
    while p != identity(n) {
        p = mul(&p, &c);
        h += 1;
        if h > 64 {
            return None;
        }
    }
    if h % 3 != 0 {
        return None;
    }
    let r = Isometry { matrix: (0..h / 3).fold(identity(n), |acc, _| mul(&acc, &c)) };
    r.fixed_point_free().then_some(r.matrix)
}

/// Every automorphism of a definite lattice, as matrices whose columns are
/// the images of the basis vectors. Stops after `limit` elements.
pub fn automorphisms(l: &Lattice, limit: usize) -> Result<Option<Vec<Mat>>> {
    let g = positive_gram(l).ok_or_else(|| Error::Invalid("lattice is not definite".into()))?;
    let n = g.len();
    let mut by_norm: std::collections::BTreeMap<i64, Vec<Vec<i64>>> = Default::default();
    for i in 0..n {
        let k = g[i][i];
        by_norm.entry(k).or_insert_with(|| vectors_of_norm(&g, k).expect("definite"));
    }
    let pair = |u: &[i64], v: &[i64]| -> i64 {
        let mut s = 0;
        for i in 0..n {
            for j in 0..n {
                s += u[i] * g[i][j] * v[j];
            }
        }
        s
    };
    let mut out = Vec::new();
    let mut images: Vec<Vec<i64>> = Vec::new();
    fn go(
        i: usize,
        g: &Mat,
        by_norm: &std::collections::BTreeMap<i64, Vec<Vec<i64>>>,
        images: &mut Vec<Vec<i64>>,
        out: &mut Vec<Mat>,
        limit: usize,
        pair: &dyn Fn(&[i64], &[i64]) -> i64,
    ) -> bool {
        let n = g.len();
        if i == n {
            out.push(transpose(images));
            return out.len() < limit;
        }
        for v in &by_norm[&g[i][i]] {
            if (0..i).all(|j| pair(&images[j], v) == g[j][i]) {
                images.push(v.clone());
                let go_on = go(i + 1, g, by_norm, images, out, limit, pair);
                images.pop();
                if !go_on {
                    return false;
                }
            }
        }
        true
    }
    let complete = go(0, &g, &by_norm, &mut images, &mut out, limit, &pair);
    Ok(complete.then_some(out))
}

/// Search bound for the exhaustive automorphism enumeration.
pub const AUT_LIMIT: usize = 20_000;

pub fn fpf_order3(l: &Lattice) -> Result<Fpf3> {
    let g = positive_gram(l).ok_or_else(|| Error::Invalid("lattice is not definite".into()))?;
    let n = g.len();
    if n % 2 == 1 {
        return Ok(Fpf3::Nonexistent(Nonexistence::OddRank { rank: n }));
    }
    // block by block: a Coxeter power, else a search of the block's group
    let mut rho = identity(n);
    let mut all = true;
    for b in blocks(&g) {
        let sub: Mat = b.iter().map(|&i| b.iter().map(|&j| g[i][j]).collect()).collect();
        let m = match coxeter_power(&sub) {
            Some(m) => Some(m),
            None if b.len() % 2 == 0 && b.len() < n => {
                let sl = Lattice { gram: sub.clone(), convention: super::lattice::SignConvention::Flipped };
                automorphisms(&sl, AUT_LIMIT)?.and_then(|grp| {
                    grp.into_iter().find(|m| Isometry { matrix: m.clone() }.is_valid_fpf3(&sl))
                })
            }
            None => None,
        };
        let Some(m) = m else {
            all = false;
            break;
        };
        for (a, &i) in b.iter().enumerate() {
            for (c, &j) in b.iter().enumerate() {
                rho[i][j] = m[a][c];
            }
        }
    }
    if all {
        let r = Isometry { matrix: rho };
        if r.is_valid_fpf3(l) {
            return Ok(Fpf3::Found(r));
        }
    }
    let Some(group) = automorphisms(l, AUT_LIMIT)? else {
        return Ok(Fpf3::Inconclusive(format!("automorphism group has more than {AUT_LIMIT} elements")));
    };
    let mut order3 = 0;
    for m in &group {
        let r = Isometry { matrix: m.clone() };
        if r.has_order_three() {
            order3 += 1;
            if r.fixed_point_free() && r.is_valid_fpf3(l) {
                return Ok(Fpf3::Found(r));
            }
        }
    }
    Ok(Fpf3::Nonexistent(Nonexistence::Exhaustive { group_order: group.len(), order_three_elements: order3 }))
}
