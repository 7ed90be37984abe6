//! Does a plane through the tangent line of a singular branch contain a
//! component of the curve?

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::exactalg::resultant::resultant_in;
use crate::exactalg::univariate::{self, rational_roots};
use crate::exactalg::{quadratic_gram, Matrix, MultiPoly, Q};
use crate::{Error, Result};

use super::classify::{branch_setup, classify_point, SingType};
use super::quadric::Location;
use super::scheme::TwoThreeScheme;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PlaneFlag {
    NotConsulted,
    True,
    False,
    Unknown,
}

/// Tangent line of the (unique) branch direction at an A_k point, k >= 2,
/// returned as a second point spanning the line together with `pt`.
pub fn tangent_direction(c: &TwoThreeScheme, pt: &[Q], jet: u32) -> Result<Vec<Q>> {
    let setup = branch_setup(c.q(), c.f(), pt, jet)?;
    let hess = quadratic_gram(&setup.branch.poly().homogeneous_part(2));
    let ker = hess.kernel();
    if ker.len() != 1 {
        return Err(Error::Invalid("branch has no unique tangent direction".into()));
    }
    let v = &ker[0];
    // lift to the three local coordinates
    let lin = setup.phi.poly().homogeneous_part(1);
    let slope: Q = (0..2).map(|i| lin.coeff(&unit(2, i)) * &v[i]).sum();
    let mut local = Vec::with_capacity(3);
    let mut r = 0;
    for i in 0..3 {
        if i == setup.solved {
            local.push(slope.clone());
        } else {
            local.push(v[r].clone());
            r += 1;
        }
    }
    let mut dir = vec![Q::zero(); 4];
    let mut r = 0;
    for (i, d) in dir.iter_mut().enumerate() {
        if i != setup.chart {
            *d = local[r].clone();
            r += 1;
        }
    }
    Ok(dir)
}

fn unit(n: usize, i: usize) -> Vec<u32> {
    let mut e = vec![0; n];
    e[i] = 1;
    e
}

/// `p(s*b0 + u*b1 + w*b2)` where basis entries are polynomials over `vars`
/// (whose first three variables are `s, u, w`).
fn restrict(p: &MultiPoly<Q>, basis: &[Vec<MultiPoly<Q>>; 3], vars: &[String]) -> MultiPoly<Q> {
    let subs: Vec<MultiPoly<Q>> = (0..4)
        .map(|i| {
            let mut acc = MultiPoly::zero(vars);
            for (k, b) in basis.iter().enumerate() {
                acc = &acc + &(&MultiPoly::var(vars, k) * &b[i]);
            }
            acc
        })
        .collect();
    p.compose(&subs)
}

fn constant_vec(v: &[Q], vars: &[String]) -> Vec<MultiPoly<Q>> {
    v.iter().map(|c| MultiPoly::constant(vars, c.clone())).collect()
}

/// Exact test for a single rational plane spanned by `b`.
fn plane_has_common_component(c: &TwoThreeScheme, b: &[Vec<Q>; 3]) -> Result<bool> {
    let vars: Vec<String> = ["s", "u", "w"].iter().map(|s| s.to_string()).collect();
    let basis = [constant_vec(&b[0], &vars), constant_vec(&b[1], &vars), constant_vec(&b[2], &vars)];
    let qh = restrict(c.q(), &basis, &vars);
    let fh = restrict(c.f(), &basis, &vars);
    if qh.is_zero() || fh.is_zero() {
        return Ok(true);
    }
    // a direction inside the plane off both curves makes leading terms constant
    for i in -2i64..=2 {
        for j in -2i64..=2 {
            for k in -2i64..=2 {
                let d = [Q::from_integer(i.into()), Q::from_integer(j.into()), Q::from_integer(k.into())];
                if qh.eval(&d).is_zero() || fh.eval(&d).is_zero() {
                    continue;
                }
                let others: Vec<usize> = (0..3)
                    .filter(|&m| {
                        let mut e = vec![Q::zero(); 3];
                        e[m] = Q::one();
                        Matrix::from_rows(vec![d.to_vec(), e]).rank() == 2
                    })
                    .collect();
                let mut frame = vec![d.to_vec()];
                for m in others {
                    let mut e = vec![Q::zero(); 3];
                    e[m] = Q::one();
                    let mut t = frame.clone();
                    t.push(e.clone());
                    if Matrix::from_rows(t).rank() == frame.len() + 1 {
                        frame.push(e);
                    }
                    if frame.len() == 3 {
                        break;
                    }
                }
                let m = Matrix::from_rows(frame).transpose();
                let q2 = qh.substitute_linear(&m)?;
                let f2 = fh.substitute_linear(&m)?;
                return Ok(resultant_in(&q2, &f2, 0).is_zero());
            }
        }
    }
    Err(Error::Invalid("no admissible direction in the plane".into()))
}

fn condition_polynomial(c: &TwoThreeScheme, d: &[MultiPoly<Q>], p0: &[Q], p1: &[Q], vars: &[String]) -> Option<Vec<Q>> {
    let basis = [d.to_vec(), constant_vec(p0, vars), constant_vec(p1, vars)];
    let qt = restrict(c.q(), &basis, vars);
    let ft = restrict(c.f(), &basis, vars);
    let res = resultant_in(&qt, &ft, 0);
    if res.is_zero() {
        return None;
    }
    // group by the (u, w) exponent: each group is a polynomial in a
    let mut groups: std::collections::BTreeMap<(u32, u32), Vec<Q>> = Default::default();
    for (m, coef) in res.terms() {
        let g = groups.entry((m.0[1], m.0[2])).or_default();
        let deg = m.0[3] as usize;
        if g.len() <= deg {
            g.resize(deg + 1, Q::zero());
        }
        g[deg] = coef.clone();
    }
    Some(groups.values().fold(Vec::new(), |acc, g| univariate::gcd(&acc, g)))
}

/// Whether the stability tables consult the plane-component flag.
pub fn plane_test_applies(t: SingType, loc: Location) -> bool {
    match t {
        SingType::A(k) => k >= 6 || (k >= 4 && loc == Location::VertexOfQ),
        _ => false,
    }
}

/// Plane-component flag at an `A_k` point with `k >= 6`, or `k >= 4` at
/// the vertex of a quadric cone.
pub fn plane_component_test(c: &TwoThreeScheme, pt: &[Q], jet: u32) -> Result<PlaneFlag> {
    let (t, loc) = classify_point(c.q(), c.f(), pt, jet)?;
    if !plane_test_applies(t, loc) {
        return Err(Error::Refused(format!(
            "plane-component test applies to A_k with k >= 6 (k >= 4 at a vertex), got {t} at {loc:?}"
        )));
    }
    let p0 = pt.to_vec();
    let p1 = tangent_direction(c, pt, jet)?;
    // complete {p0, p1} with two standard vectors
    let mut extra = Vec::new();
    for i in 0..4 {
        let mut e = vec![Q::zero(); 4];
        e[i] = Q::one();
        let mut t = vec![p0.clone(), p1.clone()];
        t.extend(extra.iter().cloned());
        t.push(e.clone());
        if Matrix::from_rows(t).rank() == 3 + extra.len() {
            extra.push(e);
        }
        if extra.len() == 2 {
            break;
        }
    }
    let (p2, p3) = (extra[0].clone(), extra[1].clone());

    // plane at infinity of the pencil parameter
    if plane_has_common_component(c, &[p0.clone(), p1.clone(), p2.clone()])? {
        return Ok(PlaneFlag::True);
    }
    let vars: Vec<String> = ["s", "u", "w", "a"].iter().map(|s| s.to_string()).collect();
    let a = MultiPoly::var(&vars, 3);
    let r: Vec<MultiPoly<Q>> = (0..4)
        .map(|i| &a.scale(&p2[i]) + &MultiPoly::constant(&vars, p3[i].clone()))
        .collect();
    let shifted = |extra: &[Q]| -> Vec<MultiPoly<Q>> {
        r.iter().zip(extra).map(|(x, e)| x + &MultiPoly::constant(&vars, e.clone())).collect()
    };
    let mut cond: Option<Vec<Q>> = None;
    for dir in [r.clone(), shifted(&p0), shifted(&p1)] {
        match condition_polynomial(c, &dir, &p0, &p1, &vars) {
            // every plane of the pencil: check one of them exactly
            None => continue,
            Some(g) => cond = Some(univariate::gcd(cond.as_deref().unwrap_or(&[]), &g)),
        }
    }
    let Some(cond) = cond else {
        let plane = [p0.clone(), p1.clone(), p3.clone()];
        return Ok(if plane_has_common_component(c, &plane)? { PlaneFlag::True } else { PlaneFlag::Unknown });
    };
    if univariate::degree(&cond).unwrap_or(0) == 0 {
        return Ok(PlaneFlag::False);
    }
    let roots = rational_roots(&cond);
    for root in &roots {
        let r0: Vec<Q> = (0..4).map(|i| root * &p2[i] + &p3[i]).collect();
        if plane_has_common_component(c, &[p0.clone(), p1.clone(), r0])? {
            return Ok(PlaneFlag::True);
        }
    }
    let mut rest = cond;
    for root in &roots {
        while univariate::degree(&rest).unwrap_or(0) > 0 && univariate::eval(&rest, root).is_zero() {
            rest = univariate::divrem(&rest, &[-root.clone(), Q::one()]).0;
        }
    }
    Ok(if univariate::degree(&rest).unwrap_or(0) > 0 { PlaneFlag::Unknown } else { PlaneFlag::False })
}

