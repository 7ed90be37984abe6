//! Integer lattices given by Gram matrices, the expression language for
//! building them, discriminant groups and orthogonal complements.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::exactalg::snf::{invariant_factors, smith_normal_form};
use crate::exactalg::IntMatrix;
use crate::{Error, Result};

/// Sign convention of a Gram matrix. In the `NegativeDefinite` convention root
/// lattices are negative definite and `U` is the hyperbolic plane; the
/// `Flipped` convention negates everything, making root lattices positive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SignConvention {
    NegativeDefinite,
    Flipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lattice {
    pub gram: Vec<Vec<i64>>,
    pub convention: SignConvention,
}

impl Lattice {
    pub fn new(gram: Vec<Vec<i64>>, convention: SignConvention) -> Result<Self> {
        let n = gram.len();
        if gram.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension("Gram matrix is not square".into()));
        }
        for i in 0..n {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::Invalid(format!("Gram matrix not symmetric at ({i}, {j})")));
                }
            }
        }
        Ok(Lattice { gram, convention })
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn flip(&self) -> Lattice {
        Lattice {
            gram: self.gram.iter().map(|r| r.iter().map(|x| -x).collect()).collect(),
            convention: match self.convention {
                SignConvention::NegativeDefinite => SignConvention::Flipped,
                SignConvention::Flipped => SignConvention::NegativeDefinite,
            },
        }
    }

    /// The same lattice in the flipped (root-positive) convention.
    pub fn flipped(&self) -> Lattice {
        match self.convention {
            SignConvention::Flipped => self.clone(),
            SignConvention::NegativeDefinite => self.flip(),
        }
    }

    pub fn direct_sum(&self, o: &Lattice) -> Lattice {
        let o = if o.convention == self.convention { o.clone() } else { o.flip() };
        let (n, m) = (self.rank(), o.rank());
        let mut g = vec![vec![0; n + m]; n + m];
        for i in 0..n {
            g[i][..n].copy_from_slice(&self.gram[i]);
        }
        for i in 0..m {
            g[n + i][n..].copy_from_slice(&o.gram[i]);
        }
        Lattice { gram: g, convention: self.convention }
    }

    pub fn scaled(&self, k: i64) -> Lattice {
        Lattice { gram: self.gram.iter().map(|r| r.iter().map(|x| x * k).collect()).collect(), convention: self.convention }
    }

    pub fn int_gram(&self) -> IntMatrix {
        IntMatrix::from_i64(&self.gram)
    }

    pub fn det(&self) -> BigInt {
        self.int_gram().det()
    }

    pub fn pair(&self, u: &[i64], v: &[i64]) -> i64 {
        let mut s = 0;
        for (i, ui) in u.iter().enumerate() {
            if *ui == 0 {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                s += ui * self.gram[i][j] * vj;
            }
        }
        s
    }

    /// Gram matrix of the vectors `basis` (coordinates in this lattice).
    pub fn restrict(&self, basis: &[Vec<i64>]) -> Lattice {
        let g = basis.iter().map(|u| basis.iter().map(|v| self.pair(u, v)).collect()).collect();
        Lattice { gram: g, convention: self.convention }
    }
}

/// Cartan matrix of an ADE diagram, positive convention. Bourbaki
/// numbering for `E`: the chain `1-3-4-5-...` with `2` attached to `4`.
pub fn cartan(family: char, n: usize) -> Result<Vec<Vec<i64>>> {
    let mut g = vec![vec![0i64; n]; n];
    for (i, row) in g.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut edge = |a: usize, b: usize| {
        g[a][b] = -1;
        g[b][a] = -1;
    };
    match (family, n) {
        ('A', n) if n >= 1 => (1..n).for_each(|i| edge(i - 1, i)),
        ('D', n) if n >= 4 => {
            (1..n - 1).for_each(|i| edge(i - 1, i));
            edge(n - 3, n - 1);
        }
        ('E', 6..=8) => {
            // 0-based: 0-2-3-4-..., 1 attached to 3
            edge(0, 2);
            edge(1, 3);
            (3..n).for_each(|i| edge(i - 1, i));
        }
        _ => return Err(Error::Invalid(format!("no root lattice {family}{n}"))),
    }
    Ok(g)
}

/// Lattice from an expression such as `E8+A2`, `A(2)`, `U(3)+E8^2` or
/// `D4(2)`. Root lattices come out negative definite.
pub fn make_lattice(expr: &str) -> Result<Lattice> {
    let mut out: Option<Lattice> = None;
    for (k, raw) in expr.split('+').enumerate() {
        let term = raw.trim();
        let err = |m: &str| Error::Parse { location: format!("term {} '{term}'", k + 1), message: m.to_string() };
        if term.is_empty() {
            return Err(err("empty summand"));
        }
        let (body, power) = match term.split_once('^') {
            Some((b, p)) => (b.trim(), p.trim().parse::<usize>().map_err(|_| err("bad exponent"))?),
            None => (term, 1),
        };
        let mut chars = body.chars();
        let family = chars.next().unwrap().to_ascii_uppercase();
        let rest: String = chars.collect();
        let digits: String = rest.chars().take_while(|c| c.is_ascii_digit()).collect();
        let tail = rest[digits.len()..].trim();
        let paren = if tail.is_empty() {
            None
        } else if tail.starts_with('(') && tail.ends_with(')') {
            Some(tail[1..tail.len() - 1].trim().parse::<i64>().map_err(|_| err("bad integer in parentheses"))?)
        } else {
            return Err(err("unexpected characters"));
        };
        let lat = match family {
            'U' => {
                if !digits.is_empty() {
                    return Err(err("U takes no rank"));
                }
                let m = paren.unwrap_or(1);
                Lattice { gram: vec![vec![0, m], vec![m, 0]], convention: SignConvention::NegativeDefinite }
            }
            'A' | 'D' | 'E' => {
                let (n, scale) = if digits.is_empty() {
                    (paren.ok_or_else(|| err("missing rank"))? as usize, 1)
                } else {
                    (digits.parse::<usize>().unwrap(), paren.unwrap_or(1))
                };
                let g = cartan(family, n).map_err(|e| err(&e.to_string()))?;
                Lattice { gram: g, convention: SignConvention::Flipped }.flip().scaled(scale)
            }
            _ => return Err(err("unknown constructor")),
        };
        for _ in 0..power {
            out = Some(match out {
                None => lat.clone(),
                Some(acc) => acc.direct_sum(&lat),
            });
        }
    }
    out.ok_or_else(|| Error::Parse { location: "expression".into(), message: "empty".into() })
}

/// Invariant factors of `L^* / L`, omitting ones.
pub fn discriminant_group(l: &Lattice) -> Result<Vec<u64>> {
    if l.det().is_zero() {
        return Err(Error::Invalid("degenerate Gram matrix".into()));
    }
    Ok(invariant_factors(&l.int_gram())
        .iter()
        .map(|x| x.abs().to_u64().expect("invariant factor fits in u64"))
        .collect())
}

/// Basis (in ambient coordinates) of the vectors orthogonal to `sub`, and
/// the induced lattice. The basis is LLL-reduced when the ambient lattice
/// is definite.
pub fn orthogonal_complement(ambient: &Lattice, sub: &[Vec<i64>]) -> Result<(Vec<Vec<i64>>, Lattice)> {
    let n = ambient.rank();
    if sub.iter().any(|v| v.len() != n) {
        return Err(Error::Dimension("sublattice vectors have the wrong length".into()));
    }
    if sub.is_empty() {
        let basis: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        return Ok((basis, ambient.clone()));
    }
    // rows: <s, .> for s in sub
    let rows: Vec<Vec<i64>> = sub.iter().map(|s| (0..n).map(|j| (0..n).map(|i| s[i] * ambient.gram[i][j]).sum()).collect()).collect();
    let a = IntMatrix::from_i64(&rows);
    let s = smith_normal_form(&a);
    let r = s.diagonal().len();
    let mut basis: Vec<Vec<i64>> = (r..n)
        .map(|j| (0..n).map(|i| s.v[(i, j)].to_i64().expect("kernel entry fits in i64")).collect())
        .collect();
    let mut lat = ambient.restrict(&basis);
    if let Some(pos) = super::enumerate::positive_gram(&lat) {
        let t = super::enumerate::lll(&pos);
        basis = t.iter().map(|c| (0..n).map(|i| c.iter().zip(&basis).map(|(ck, b)| ck * b[i]).sum()).collect()).collect();
        lat = ambient.restrict(&basis);
    }
    Ok((basis, lat))
}
