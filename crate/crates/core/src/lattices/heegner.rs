//! Heegner divisor lattices, Borcherds vanishing orders and the cusps of
//! the ball quotient, from explicit root-lattice embeddings of `E6 + A2`.
//!
//! Vectors are in simple-root coordinates of the summands (Bourbaki order
//! for `E`), concatenated in the order the summands are written.

use serde::{Deserialize, Serialize};

use crate::exactalg::Q;
use crate::{Error, Result};

use super::lattice::{make_lattice, orthogonal_complement, Lattice};
use super::roots::{root_system, roots, RootSystem};

/// Highest root of E8 in simple-root coordinates.
const THETA_E8: [i64; 8] = [2, 3, 4, 6, 5, 4, 3, 2];
/// Highest root of E6.
const THETA_E6: [i64; 6] = [1, 2, 2, 3, 2, 1];

fn unit(n: usize, i: usize) -> Vec<i64> {
    (0..n).map(|j| i64::from(i == j)).collect()
}

fn neg(v: &[i64]) -> Vec<i64> {
    v.iter().map(|x| -x).collect()
}

/// Place vectors of a summand of rank `len` at `offset` in rank `total`.
fn place(vs: &[Vec<i64>], offset: usize, total: usize) -> Vec<Vec<i64>> {
    vs.iter()
        .map(|v| {
            let mut w = vec![0; total];
            w[offset..offset + v.len()].copy_from_slice(v);
            w
        })
        .collect()
}

fn e6_in_e6() -> Vec<Vec<i64>> {
    (0..6).map(|i| unit(6, i)).collect()
}

fn e6_in_e8() -> Vec<Vec<i64>> {
    (0..6).map(|i| unit(8, i)).collect()
}

/// `{a8, -theta}`: orthogonal to the E6 spanned by `a1..a6`.
fn a2_in_e8() -> Vec<Vec<i64>> {
    vec![unit(8, 7), neg(&THETA_E8)]
}

/// `{a2, -theta}` in E6; its complement contains `{a1,a3}` and `{a5,a6}`.
fn a2_in_e6() -> Vec<Vec<i64>> {
    vec![unit(6, 1), neg(&THETA_E6)]
}

fn a2_in_d4() -> Vec<Vec<i64>> {
    vec![unit(4, 0), unit(4, 1)]
}

fn a2_in_a2() -> Vec<Vec<i64>> {
    vec![unit(2, 0), unit(2, 1)]
}

/// Checks that `basis` spans a copy of `E6 + A2` (E6 first).
fn verify_r(ambient: &Lattice, basis: &[Vec<i64>]) -> Result<()> {
    let r = make_lattice("E6+A2")?;
    let got = ambient.restrict(basis);
    if got.gram != r.gram {
        return Err(Error::Invalid("embedding does not restrict to the Gram matrix of E6+A2".into()));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeegnerType {
    pub divisor: String,
    pub lattice: String,
    pub root_system: RootSystem,
    pub root_count: usize,
    /// `E6 + A2` embeds, checked on the Gram matrix.
    pub contains_r: bool,
}

fn heegner_data() -> Vec<(&'static str, &'static str, Vec<Vec<i64>>)> {
    let mut v_basis = place(&e6_in_e6(), 4, 10);
    v_basis.extend(place(&a2_in_d4(), 0, 10));
    let mut n_basis = place(&e6_in_e6(), 4, 10);
    n_basis.extend(place(&a2_in_a2(), 0, 10));
    let mut h_basis = place(&e6_in_e8(), 2, 10);
    h_basis.extend(place(&a2_in_a2(), 0, 10));
    vec![("H_v", "D4+E6", v_basis), ("H_n", "A2+A2+E6", n_basis), ("H_h", "A2+E8", h_basis)]
}

/// The lattices `M^perp` for the vanishing theta-null, nodal and
/// hyperelliptic divisors.
pub fn heegner_types() -> Result<Vec<HeegnerType>> {
    heegner_data()
        .into_iter()
        .map(|(d, expr, basis)| {
            let l = make_lattice(expr)?;
            let rs = root_system(&l)?;
            Ok(HeegnerType {
                divisor: d.into(),
                lattice: expr.into(),
                root_count: rs.root_count,
                root_system: rs,
                contains_r: verify_r(&l, &basis).is_ok(),
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BorcherdsRow {
    pub divisor: String,
    pub roots_heegner: usize,
    pub roots_r: usize,
    /// Half the number of roots of `M^perp` not in `R`.
    pub vanishing_order: u64,
    /// The value printed in the literature.
    pub stated_order: u64,
    pub ramification: u64,
    #[serde(with = "crate::exactalg::field::qser")]
    pub coefficient: Q,
    /// Computed and stated orders disagree.
    pub flagged: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BorcherdsOrders {
    pub rows: Vec<BorcherdsRow>,
    /// Coefficients of `H_n + 9/2 H_v + 14 H_h`.
    #[serde(with = "qvec")]
    pub theorem_coefficients: Vec<Q>,
    pub coefficients_match: bool,
}

mod qvec {
    use super::Q;
    use crate::exactalg::{parse_rational, rational_to_string};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Q], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(rational_to_string))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Q>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter()
            .map(|s| parse_rational(s).ok_or_else(|| serde::de::Error::custom(format!("bad rational {s}"))))
            .collect()
    }
}

/// Orders in the order `H_n, H_v, H_h`, with ramification `3, 2, 6`.
pub fn borcherds_orders() -> Result<BorcherdsOrders> {
    let types = heegner_types()?;
    let r_roots = roots(&make_lattice("E6+A2")?)?.len();
    let spec = [("H_n", 3u64, 2u64), ("H_v", 2, 9), ("H_h", 6, 84)];
    let mut rows = Vec::new();
    for (name, ram, stated) in spec {
        let t = types.iter().find(|t| t.divisor == name).expect("known divisor");
        let order = ((t.root_count - r_roots) / 2) as u64;
        rows.push(BorcherdsRow {
            divisor: name.into(),
            roots_heegner: t.root_count,
            roots_r: r_roots,
            vanishing_order: order,
            stated_order: stated,
            ramification: ram,
            coefficient: Q::new((order as i64).into(), (ram as i64).into()),
            flagged: order != stated,
        });
    }
    let theorem = vec![Q::from_integer(1.into()), Q::new(9.into(), 2.into()), Q::from_integer(14.into())];
    let coefficients_match = rows.iter().map(|r| r.coefficient.clone()).collect::<Vec<_>>() == theorem;
    Ok(BorcherdsOrders { rows, theorem_coefficients: theorem, coefficients_match })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CuspRecord {
    pub case: String,
    pub ambient: String,
    pub description: String,
    pub complement: RootSystem,
    pub label: String,
    pub stated_label: String,
    /// The hyperelliptic divisor passes through this cusp.
    pub hyperelliptic: bool,
}

/// The three ways `E6 + A2` sits in the root systems `E6^4` and `E8^3`,
/// with the root systems of the complements.
pub fn cusp_invariants() -> Result<Vec<CuspRecord>> {
    let cases: Vec<(&str, &str, &str, Vec<Vec<i64>>, &str, bool)> = vec![
        ("i", "E6^4", "E6 is one copy, A2 lies in another", {
            let mut b = place(&e6_in_e6(), 0, 24);
            b.extend(place(&a2_in_e6(), 6, 24));
            b
        }, "E6^2+A2^2", false),
        ("ii", "E8^3", "E6 and A2 in different copies of E8", {
            let mut b = place(&e6_in_e8(), 0, 24);
            b.extend(place(&a2_in_e8(), 8, 24));
            b
        }, "E6+A2+E8", true),
        ("iii", "E8^3", "E6 + A2 in the same copy of E8", {
            let mut b = place(&e6_in_e8(), 0, 24);
            b.extend(place(&a2_in_e8(), 0, 24));
            b
        }, "E8^2", false),
    ];
    cases
        .into_iter()
        .map(|(case, amb, desc, basis, stated, hh)| {
            let l = make_lattice(amb)?;
            verify_r(&l, &basis)?;
            let (_, comp) = orthogonal_complement(&l, &basis)?;
            let rs = root_system(&comp)?;
            Ok(CuspRecord {
                case: case.into(),
                ambient: amb.into(),
                description: desc.into(),
                label: rs.label(),
                complement: rs,
                stated_label: stated.into(),
                hyperelliptic: hh,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_complements() {
        let e8 = make_lattice("E8").unwrap();
        let (_, c) = orthogonal_complement(&e8, &a2_in_e8()).unwrap();
        assert_eq!(root_system(&c).unwrap().label(), "E6");
        let (_, c) = orthogonal_complement(&e8, &e6_in_e8()).unwrap();
        assert_eq!(roots(&c).unwrap().len(), 6);
        let mut both = e6_in_e8();
        both.extend(a2_in_e8());
        let (b, _) = orthogonal_complement(&e8, &both).unwrap();
        assert!(b.is_empty());
        let e6 = make_lattice("E6").unwrap();
        let (_, c) = orthogonal_complement(&e6, &a2_in_e6()).unwrap();
        assert_eq!(roots(&c).unwrap().len(), 12);
    }
}
