//! Divisor classes on the projective bundle of (2,3) complete
//! intersections and on the moduli space of genus 4 curves: constants,
//! change of basis, Lefschetz pencil counts and the slope 5/9.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::exactalg::{parse_rational, rational_to_string, RatMatrix, Q};
use crate::{Error, Result};

fn qi(x: i64) -> Q {
    Q::from_integer(x.into())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PicBasis {
    /// `eta` pulled back from the space of quadrics, `h` the relative hyperplane class.
    EtaH,
    LambdaDelta,
}

impl PicBasis {
    fn names(self) -> [&'static str; 2] {
        match self {
            PicBasis::EtaH => ["eta", "h"],
            PicBasis::LambdaDelta => ["lambda", "delta"],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PicClass {
    pub basis: PicBasis,
    #[serde(with = "crate::exactalg::field::qser")]
    pub a: Q,
    #[serde(with = "crate::exactalg::field::qser")]
    pub b: Q,
}

impl PicClass {
    pub fn new(basis: PicBasis, a: Q, b: Q) -> Self {
        PicClass { basis, a, b }
    }

    pub fn eta_h(a: i64, b: i64) -> Self {
        Self::new(PicBasis::EtaH, qi(a), qi(b))
    }

    pub fn lambda_delta(a: i64, b: i64) -> Self {
        Self::new(PicBasis::LambdaDelta, qi(a), qi(b))
    }

    pub fn to(&self, basis: PicBasis) -> PicClass {
        convert(self, basis)
    }

    pub fn scale(&self, k: &Q) -> PicClass {
        PicClass::new(self.basis, &self.a * k, &self.b * k)
    }

    pub fn add(&self, o: &PicClass) -> PicClass {
        let o = o.to(self.basis);
        PicClass::new(self.basis, &self.a + &o.a, &self.b + &o.b)
    }

    /// Proportional as classes (the zero class only to itself).
    pub fn proportional(&self, o: &PicClass) -> bool {
        let o = o.to(self.basis);
        &self.a * &o.b == &self.b * &o.a
            && (self.a.is_zero() && self.b.is_zero()) == (o.a.is_zero() && o.b.is_zero())
    }

    /// Parse `"9l-1d"`, `"3e+2h"`, `"9/2 l - d"`. Letters: `e` (eta), `h`,
    /// `l` (lambda), `d` (delta); one basis per class.
    pub fn parse(src: &str) -> Result<PicClass> {
        let err = |at: usize, m: &str| Error::Parse { location: format!("column {}", at + 1), message: m.into() };
        let s: Vec<char> = src.chars().collect();
        let mut i = 0;
        let mut coeffs = [Q::zero(), Q::zero()];
        let mut basis: Option<PicBasis> = None;
        let mut seen = false;
        while i < s.len() {
            while i < s.len() && s[i].is_whitespace() {
                i += 1;
            }
            if i == s.len() {
                break;
            }
            let mut sign = Q::one();
            if s[i] == '+' || s[i] == '-' {
                if s[i] == '-' {
                    sign = -sign;
                }
                i += 1;
            } else if seen {
                return Err(err(i, "expected + or -"));
            }
            while i < s.len() && s[i].is_whitespace() {
                i += 1;
            }
            let num_start = i;
            while i < s.len() && (s[i].is_ascii_digit() || s[i] == '/') {
                i += 1;
            }
            let num: String = s[num_start..i].iter().collect();
            let c = if num.is_empty() { Q::one() } else { parse_rational(&num).ok_or_else(|| err(num_start, "bad coefficient"))? };
            while i < s.len() && s[i].is_whitespace() {
                i += 1;
            }
            let (b, k) = match s.get(i) {
                Some('e') => (PicBasis::EtaH, 0),
                Some('h') => (PicBasis::EtaH, 1),
                Some('l') => (PicBasis::LambdaDelta, 0),
                Some('d') => (PicBasis::LambdaDelta, 1),
                _ => return Err(err(i.min(s.len().saturating_sub(1)), "expected one of e, h, l, d")),
            };
            if basis.is_some_and(|x| x != b) {
                return Err(err(i, "mixes the (eta, h) and (lambda, delta) bases"));
            }
            basis = Some(b);
            coeffs[k] += sign * c;
            i += 1;
            seen = true;
        }
        let basis = basis.ok_or_else(|| err(0, "empty class"))?;
        let [a, b] = coeffs;
        Ok(PicClass::new(basis, a, b))
    }
}

impl fmt::Display for PicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x, y] = self.basis.names();
        write!(f, "{} {} + {} {}", rational_to_string(&self.a), x, rational_to_string(&self.b), y)
    }
}

/// Rows: `lambda` and `delta` in terms of `(eta, h)`.
fn lambda_delta_matrix() -> RatMatrix {
    RatMatrix::from_i64(&[vec![4, 4], vec![33, 34]])
}

/// Exact change of basis.
pub fn convert(c: &PicClass, to: PicBasis) -> PicClass {
    if c.basis == to {
        return c.clone();
    }
    // a lambda + b delta = (a, b) M (eta, h)^T
    let m = match to {
        PicBasis::EtaH => lambda_delta_matrix(),
        PicBasis::LambdaDelta => lambda_delta_matrix().inverse().expect("invertible"),
    };
    let a = &c.a * &m[(0, 0)] + &c.b * &m[(1, 0)];
    let b = &c.a * &m[(0, 1)] + &c.b * &m[(1, 1)];
    PicClass::new(to, a, b)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeConstants {
    pub classes: Vec<(String, PicClass)>,
    /// `eta` and `h` in the `(lambda, delta)` basis, by inverting the table.
    pub eta: PicClass,
    pub h: PicClass,
}

pub fn pe_constants() -> PeConstants {
    let classes = vec![
        ("K_PE", PicClass::eta_h(-14, -16)),
        ("V", PicClass::eta_h(4, 0)),
        ("Sigma", PicClass::eta_h(33, 34)),
        ("lambda", PicClass::eta_h(4, 4)),
        ("delta", PicClass::eta_h(33, 34)),
    ];
    PeConstants {
        classes: classes.into_iter().map(|(n, c)| (n.to_string(), c)).collect(),
        eta: PicClass::eta_h(1, 0).to(PicBasis::LambdaDelta),
        h: PicClass::eta_h(0, 1).to(PicBasis::LambdaDelta),
    }
}

impl PeConstants {
    pub fn get(&self, name: &str) -> Option<&PicClass> {
        self.classes.iter().find(|(n, _)| n == name).map(|(_, c)| c)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PencilConfig {
    /// Cubics through a fixed smooth quadric.
    FixedQuadric,
    /// Quadrics through a fixed smooth cubic surface.
    FixedCubic,
}

impl std::str::FromStr for PencilConfig {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quadric" | "fixed-quadric" | "fixed_quadric_pencil_of_cubics" => Ok(PencilConfig::FixedQuadric),
            "cubic" | "fixed-cubic" | "fixed_cubic_pencil_of_quadrics" => Ok(PencilConfig::FixedCubic),
            other => Err(Error::Invalid(format!("unknown pencil configuration '{other}'"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PencilCount {
    pub config: PencilConfig,
    pub euler_surface: i64,
    pub base_points: i64,
    pub euler_fiber: i64,
    pub singular_fibers: i64,
}

/// Euler characteristic of a smooth complete intersection curve of the
/// given degrees in P^3: `2 - 2g` with `2g - 2 = d1 d2 (d1 + d2 - 4)`.
fn euler_ci_curve(d1: i64, d2: i64) -> i64 {
    -(d1 * d2 * (d1 + d2 - 4))
}

/// Euler characteristic of a smooth surface of degree d in P^3.
fn euler_surface(d: i64) -> i64 {
    d * d * d - 4 * d * d + 6 * d
}

/// Singular members of a Lefschetz pencil of curves on a surface:
/// `e(S) + #base points - 2 e(F)` (blow up the base points, fibre over P^1).
pub fn pencil_singular_count(config: PencilConfig) -> PencilCount {
    let (surface, member) = match config {
        PencilConfig::FixedQuadric => (2, 3),
        PencilConfig::FixedCubic => (3, 2),
    };
    let e_s = euler_surface(surface);
    let base = surface * member * member;
    let e_f = euler_ci_curve(2, 3);
    PencilCount { config, euler_surface: e_s, base_points: base, euler_fiber: e_f, singular_fibers: e_s + base - 2 * e_f }
}

/// `a lambda - b0 delta0 - b1 delta1 - b2 delta2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct M4Class {
    #[serde(with = "crate::exactalg::field::qser")]
    pub a: Q,
    #[serde(with = "crate::exactalg::field::qser")]
    pub b0: Q,
    #[serde(with = "crate::exactalg::field::qser")]
    pub b1: Q,
    #[serde(with = "crate::exactalg::field::qser")]
    pub b2: Q,
}

impl M4Class {
    pub fn new(a: i64, b0: i64, b1: i64, b2: i64) -> Self {
        M4Class { a: qi(a), b0: qi(b0), b1: qi(b1), b2: qi(b2) }
    }

    pub fn parse(src: &str) -> Result<Self> {
        let parts: Vec<&str> = src.split(',').map(str::trim).collect();
        if parts.len() != 4 {
            return Err(Error::Parse { location: "class".into(), message: "expected a,b0,b1,b2".into() });
        }
        let v: Vec<Q> = parts
            .iter()
            .enumerate()
            .map(|(i, p)| {
                parse_rational(p).ok_or_else(|| Error::Parse { location: format!("entry {}", i + 1), message: format!("bad rational '{p}'") })
            })
            .collect::<Result<_>>()?;
        Ok(M4Class { a: v[0].clone(), b0: v[1].clone(), b1: v[2].clone(), b2: v[3].clone() })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TestCurveSolution {
    #[serde(with = "crate::exactalg::field::qser")]
    pub b1: Q,
    /// `b2 omega + c_lambda lambda + c_delta1 delta1` on the genus 2 side
    /// after eliminating `delta0`.
    #[serde(with = "crate::exactalg::field::qser")]
    pub reduced_lambda: Q,
    #[serde(with = "crate::exactalg::field::qser")]
    pub reduced_delta1: Q,
    #[serde(with = "crate::exactalg::field::qser")]
    pub b2: Q,
    pub class: M4Class,
}

/// Solve for `b1` from the elliptic-tail test curve (`Z.lambda = 1`,
/// `Z.delta0 = 12`, `Z.delta1 = -1`, and the class is trivial on `Z`), then
/// for `b2` from the pullback `b2 omega + a lambda - b0 delta0 - b1 delta1`
/// to the genus 2 pointed space, reduced by `10 lambda = delta0 + 2 delta1`
/// and matched with a multiple of `3 omega - lambda` modulo `delta1`.
pub fn test_curve_constraints(a: &Q, b0: &Q) -> Result<TestCurveSolution> {
    let (z_l, z_d0, z_d1) = (qi(1), qi(12), qi(-1));
    // a z_l - b0 z_d0 - b1 z_d1 = 0
    let b1 = (a * &z_l - b0 * &z_d0) / &z_d1;
    // delta0 = 10 lambda - 2 delta1
    let reduced_lambda = a - b0 * qi(10);
    let reduced_delta1 = b0 * qi(2) - &b1;
    if reduced_lambda.is_zero() {
        return Err(Error::Invalid("the lambda coefficient vanishes; no normalization against 3 omega - lambda".into()));
    }
    // (b2, reduced_lambda) proportional to (3, -1)
    let b2 = qi(3) * &reduced_lambda / qi(-1);
    Ok(TestCurveSolution {
        b1: b1.clone(),
        reduced_lambda,
        reduced_delta1,
        b2: b2.clone(),
        class: M4Class { a: a.clone(), b0: b0.clone(), b1, b2 },
    })
}

/// `delta1` and `delta2` are contracted by the map to the GIT quotient, so
/// adding effective multiples of them leaves the sections unchanged. Lower
/// `b1`, `b2` to `b0`; `None` when that would subtract them.
pub fn absorb_exceptional(c: &M4Class) -> Option<M4Class> {
    if c.b1 < c.b0 || c.b2 < c.b0 {
        return None;
    }
    Some(M4Class { a: c.a.clone(), b0: c.b0.clone(), b1: c.b0.clone(), b2: c.b0.clone() })
}

/// `K = 13 lambda - 2 delta` on the moduli space of genus 4 curves; a
/// class `a lambda - b delta` is proportional to `K + alpha delta` iff
/// `alpha = 2 - 13 b / a`.
pub fn hassett_keel_alpha(c: &M4Class) -> Option<Q> {
    if c.b0 != c.b1 || c.b1 != c.b2 || c.a.is_zero() {
        return None;
    }
    let alpha = qi(2) - qi(13) * &c.b0 / &c.a;
    Some(alpha)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_and_inverse() {
        let k = pe_constants();
        assert_eq!(k.get("Sigma").unwrap(), &PicClass::eta_h(33, 34));
        assert_eq!(k.get("lambda").unwrap(), &PicClass::eta_h(4, 4));
        assert_eq!(k.eta, PicClass::new(PicBasis::LambdaDelta, Q::new(17.into(), 2.into()), qi(-1)));
        assert_eq!(k.h, PicClass::new(PicBasis::LambdaDelta, Q::new((-33).into(), 4.into()), qi(1)));
    }

    #[test]
    fn conversions() {
        assert_eq!(PicClass::lambda_delta(9, -1).to(PicBasis::EtaH), PicClass::eta_h(3, 2));
        let l = PicClass::lambda_delta(1, 0);
        assert_eq!(l.to(PicBasis::LambdaDelta), l);
        let k = pe_constants();
        let s = k.get("Sigma").unwrap().add(&k.get("V").unwrap().scale(&Q::new(9.into(), 2.into())));
        assert_eq!(s, PicClass::eta_h(51, 34));
        assert!(s.proportional(&PicClass::lambda_delta(9, -1)));
    }

    #[test]
    fn parsing() {
        assert_eq!(PicClass::parse("9l-1d").unwrap(), PicClass::lambda_delta(9, -1));
        assert_eq!(PicClass::parse("9 l - d").unwrap(), PicClass::lambda_delta(9, -1));
        assert_eq!(PicClass::parse("3e + 2h").unwrap(), PicClass::eta_h(3, 2));
        assert_eq!(PicClass::parse("9/2 e").unwrap(), PicClass::new(PicBasis::EtaH, Q::new(9.into(), 2.into()), qi(0)));
        assert!(PicClass::parse("3e + 2d").is_err());
        assert!(PicClass::parse("3x").is_err());
    }

    #[test]
    fn pencils() {
        let q = pencil_singular_count(PencilConfig::FixedQuadric);
        assert_eq!((q.euler_surface, q.base_points, q.euler_fiber, q.singular_fibers), (4, 18, -6, 34));
        let c = pencil_singular_count(PencilConfig::FixedCubic);
        assert_eq!((c.euler_surface, c.base_points, c.singular_fibers), (9, 12, 33));
        assert!("plane".parse::<PencilConfig>().is_err());
    }

    #[test]
    fn slope() {
        let s = test_curve_constraints(&qi(9), &qi(1)).unwrap();
        assert_eq!(s.b1, qi(3));
        assert_eq!(s.b2, qi(3));
        assert_eq!(s.class, M4Class::new(9, 1, 3, 3));
        assert_eq!(hassett_keel_alpha(&M4Class::new(9, 1, 1, 1)), Some(Q::new(5.into(), 9.into())));
        assert_eq!(hassett_keel_alpha(&M4Class::new(18, 2, 2, 2)), Some(Q::new(5.into(), 9.into())));
        assert_eq!(hassett_keel_alpha(&M4Class::new(0, 0, 0, 0)), None);
        assert_eq!(hassett_keel_alpha(&M4Class::new(9, 1, 3, 3)), None);
    }
}
