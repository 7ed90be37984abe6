//! Coefficient fields: arbitrary-precision rationals and small prime fields.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// The default coefficient field.
pub type Q = BigRational;

/// Exact field arithmetic used by polynomials, series and linear algebra.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Send
    + Sync
{
    fn from_i64(n: i64) -> Self;

    /// 0 for the rationals.
    fn characteristic() -> u64;

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::one() / self.clone())
        }
    }

    fn pow_u32(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }
}

impl Field for BigRational {
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn characteristic() -> u64 {
        0
    }
}

/// Shorthand for an integer rational.
pub fn q(n: i64) -> Q {
    Q::from_i64(n)
}

/// Shorthand for `num/den`.
pub fn qf(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// Parse `"p/q"`, `"p"` or `"-p/q"`.
pub fn parse_rational(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Q::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Q::from_integer),
    }
}

/// Canonical string form used by the JSON file format.
pub fn rational_to_string(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Reduce a rational modulo `p`; `None` when `p` divides the denominator.
pub fn reduce_mod(x: &Q, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let d = x.denom().mod_floor(&pb).to_u64()?;
    if d == 0 {
        return None;
    }
    let n = x.numer().mod_floor(&pb).to_u64()?;
    Some(mul_mod(n, inv_mod(d, p)?, p))
}

pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

pub fn inv_mod(a: u64, p: u64) -> Option<u64> {
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let qt = r0 / r1;
        (r0, r1) = (r1, r0 - qt * r1);
        (t0, t1) = (t1, t0 - qt * t1);
    }
    (r0 == 1).then(|| t0.rem_euclid(p as i128) as u64)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Lift a residue to a rational `a/b` with `|a|, |b| <= sqrt(p/2)`.
pub fn rational_reconstruct(r: u64, p: u64) -> Option<Q> {
    let bound = ((p / 2) as f64).sqrt() as i128;
    let (mut r0, mut r1) = (p as i128, r as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 > bound {
        let qt = r0 / r1;
        (r0, r1) = (r1, r0 - qt * r1);
        (t0, t1) = (t1, t0 - qt * t1);
    }
    if t1 == 0 || t1.abs() > bound {
        return None;
    }
    let val = Q::new(BigInt::from(r1), BigInt::from(t1));
    (reduce_mod(&val, p) == Some(r)).then_some(val)
}

/// Element of the prime field `F_P`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf<const P: u64>(u64);

impl<const P: u64> Gf<P> {
    pub fn new(v: i64) -> Self {
        Gf(v.rem_euclid(P as i64) as u64)
    }

    pub fn from_u64(v: u64) -> Self {
        Gf(v % P)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn from_rational(x: &Q) -> Option<Self> {
        reduce_mod(x, P).map(Gf)
    }

    /// Symmetric representative in `(-P/2, P/2]`.
    pub fn signed(self) -> i64 {
        if self.0 > P / 2 {
            self.0 as i64 - P as i64
        } else {
            self.0 as i64
        }
    }
}

impl<const P: u64> fmt::Debug for Gf<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> fmt::Display for Gf<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Zero for Gf<P> {
    fn zero() -> Self {
        Gf(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Gf<P> {
    fn one() -> Self {
        Gf(1 % P)
    }
}

impl<const P: u64> Add for Gf<P> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let s = self.0 + o.0;
        Gf(if s >= P { s - P } else { s })
    }
}

impl<const P: u64> Sub for Gf<P> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Gf(if self.0 >= o.0 { self.0 - o.0 } else { self.0 + P - o.0 })
    }
}

impl<const P: u64> Neg for Gf<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Gf(if self.0 == 0 { 0 } else { P - self.0 })
    }
}

impl<const P: u64> Mul for Gf<P> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Gf(mul_mod(self.0, o.0, P))
    }
}

impl<const P: u64> Div for Gf<P> {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        let inv = inv_mod(o.0, P).expect("division by zero in prime field");
        Gf(mul_mod(self.0, inv, P))
    }
}

impl<const P: u64> Field for Gf<P> {
    fn from_i64(n: i64) -> Self {
        Gf::new(n)
    }

    fn characteristic() -> u64 {
        P
    }
}

/// Absolute value helper for rationals.
pub fn qabs(x: &Q) -> Q {
    x.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_round_trip() {
        for s in ["3/4", "-7", "0", "-12/5"] {
            let x = parse_rational(s).unwrap();
            assert_eq!(rational_to_string(&x), s);
        }
        assert!(parse_rational("1/0").is_none());
        assert!(parse_rational("abc").is_none());
    }

    #[test]
    fn prime_field_inverse() {
        type F = Gf<101>;
        for v in 1..101 {
            let x = F::new(v);
            assert_eq!(x * x.inv().unwrap(), F::one());
        }
        assert_eq!(F::new(-1).value(), 100);
        assert_eq!(F::new(-1).signed(), -1);
    }

    #[test]
    fn reconstruct_small_rationals() {
        let p = 1009;
        for (n, d) in [(1, 2), (-3, 5), (7, 1), (0, 1), (-1, 1)] {
            let x = qf(n, d);
            let r = reduce_mod(&x, p).unwrap();
            assert_eq!(rational_reconstruct(r, p), Some(x));
        }
    }

    #[test]
    fn bad_reduction_detected() {
        assert_eq!(reduce_mod(&qf(1, 101), 101), None);
        assert_eq!(reduce_mod(&qf(1, 2), 101), Some(51));
    }
}

/// Serde adapter writing rationals as strings such as `"9/2"`.
pub mod qser {
    use super::{parse_rational, rational_to_string, Q};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Q, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&rational_to_string(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).ok_or_else(|| serde::de::Error::custom(format!("bad rational {s:?}")))
    }
}
