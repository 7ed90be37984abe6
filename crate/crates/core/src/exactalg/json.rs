//! JSON file format for polynomials and matrices.

use serde::{Deserialize, Serialize};

use super::field::{parse_rational, rational_to_string, Q};
use super::matrix::RatMatrix;
use super::poly::{Monomial, MultiPoly};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub c: String,
    pub e: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

impl PolyJson {
    pub fn from_poly(p: &MultiPoly<Q>) -> Self {
        // highest grlex term first, matching the printed form
        PolyJson {
            vars: p.vars().to_vec(),
            terms: p
                .terms()
                .rev()
                .map(|(m, c)| TermJson { c: rational_to_string(c), e: m.0.clone() })
                .collect(),
        }
    }

    /// Convert to a polynomial over `expected` variables. `path` is the JSON
    /// location used in diagnostics.
    pub fn to_poly(&self, expected: &[String], path: &str) -> Result<MultiPoly<Q>> {
        let mut perm = Vec::with_capacity(self.vars.len());
        for (i, v) in self.vars.iter().enumerate() {
            match expected.iter().position(|x| x == v) {
                Some(k) => perm.push(k),
                None => {
                    return Err(Error::Parse {
                        location: format!("{path}.vars[{i}]"),
                        message: format!("unknown variable '{v}' (expected one of {})", expected.join(", ")),
                    })
                }
            }
        }
        let mut p = MultiPoly::zero(expected);
        for (t, term) in self.terms.iter().enumerate() {
            let c = parse_rational(&term.c).ok_or_else(|| Error::Parse {
                location: format!("{path}.terms[{t}].c"),
                message: format!("malformed rational '{}'", term.c),
            })?;
            if term.e.len() != self.vars.len() {
                return Err(Error::Parse {
                    location: format!("{path}.terms[{t}].e"),
                    message: format!("exponent vector has length {}, expected {}", term.e.len(), self.vars.len()),
                });
            }
            let mut e = vec![0; expected.len()];
            for (i, &k) in perm.iter().enumerate() {
                e[k] += term.e[i];
            }
            p.add_term(Monomial(e), c);
        }
        Ok(p)
    }
}

pub fn matrix_to_json(m: &RatMatrix) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| r.iter().map(rational_to_string).collect()).collect()
}

pub fn matrix_from_json(rows: &[Vec<String>], path: &str) -> Result<RatMatrix> {
    let width = rows.first().map_or(0, |r| r.len());
    let mut out = Vec::with_capacity(rows.len());
    for (i, r) in rows.iter().enumerate() {
        if r.len() != width {
            return Err(Error::Parse { location: format!("{path}[{i}]"), message: "ragged matrix".into() });
        }
        let mut row = Vec::with_capacity(width);
        for (j, s) in r.iter().enumerate() {
            row.push(parse_rational(s).ok_or_else(|| Error::Parse {
                location: format!("{path}[{i}][{j}]"),
                message: format!("malformed rational '{s}'"),
            })?);
        }
        out.push(row);
    }
    Ok(RatMatrix::from_rows(out))
}
