//! Exact coefficient fields: the rationals and prime fields GF(p).
//!
//! Elements are plain values ([`Coeff`]); all arithmetic goes through the
//! owning [`CoefficientField`], which knows the modulus in the prime case.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "modulus", rename_all = "snake_case")]
pub enum CoefficientField {
    Rational,
    Prime(u32),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Rat(BigRational),
    Mod(u32),
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = p as u64;
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

impl CoefficientField {
    pub fn rationals() -> Self {
        CoefficientField::Rational
    }

    /// GF(p) for a prime `p < 2^31`.
    pub fn prime(p: u32) -> Result<Self> {
        if p >= 1 << 31 {
            return Err(Error::InvalidRing(format!("modulus {p} must be below 2^31")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidRing(format!("modulus {p} is not prime")));
        }
        Ok(CoefficientField::Prime(p))
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, CoefficientField::Rational)
    }

    pub fn zero(&self) -> Coeff {
        match self {
            CoefficientField::Rational => Coeff::Rat(BigRational::zero()),
            CoefficientField::Prime(_) => Coeff::Mod(0),
        }
    }

    pub fn one(&self) -> Coeff {
        match self {
            CoefficientField::Rational => Coeff::Rat(BigRational::one()),
            CoefficientField::Prime(_) => Coeff::Mod(1),
        }
    }

    pub fn from_i64(&self, v: i64) -> Coeff {
        match *self {
            CoefficientField::Rational => Coeff::Rat(BigRational::from_integer(v.into())),
            CoefficientField::Prime(p) => Coeff::Mod(v.rem_euclid(p as i64) as u32),
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Coeff {
        match *self {
            CoefficientField::Rational => Coeff::Rat(BigRational::from_integer(v.clone())),
            CoefficientField::Prime(p) => {
                let r = v.mod_floor(&BigInt::from(p));
                Coeff::Mod(r.to_u32().expect("residue fits"))
            }
        }
    }

    /// The image of `num/den`; `None` when `den` vanishes in the field.
    pub fn from_fraction(&self, num: &BigInt, den: &BigInt) -> Option<Coeff> {
        if den.is_zero() {
            return None;
        }
        match self {
            CoefficientField::Rational => Some(Coeff::Rat(BigRational::new(num.clone(), den.clone()))),
            CoefficientField::Prime(_) => {
                let d = self.from_bigint(den);
                if self.is_zero(&d) {
                    return None;
                }
                Some(self.div(&self.from_bigint(num), &d))
            }
        }
    }

    pub fn is_zero(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Rat(r) => r.is_zero(),
            Coeff::Mod(v) => *v == 0,
        }
    }

    pub fn is_one(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Rat(r) => r.is_one(),
            Coeff::Mod(v) => *v == 1,
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (a, b, self) {
            (Coeff::Rat(x), Coeff::Rat(y), _) => Coeff::Rat(x + y),
            (Coeff::Mod(x), Coeff::Mod(y), CoefficientField::Prime(p)) => {
                Coeff::Mod(((*x as u64 + *y as u64) % *p as u64) as u32)
            }
            _ => panic!("coefficient from a different field"),
        }
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match (a, self) {
            (Coeff::Rat(x), _) => Coeff::Rat(-x),
            (Coeff::Mod(0), _) => Coeff::Mod(0),
            (Coeff::Mod(x), CoefficientField::Prime(p)) => Coeff::Mod(p - x),
            _ => panic!("coefficient from a different field"),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (a, b) {
            (Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x - y),
            _ => self.add(a, &self.neg(b)),
        }
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (a, b, self) {
            (Coeff::Rat(x), Coeff::Rat(y), _) => {
                if x.is_integer() && y.is_integer() {
                    Coeff::Rat(BigRational::from_integer(x.numer() * y.numer()))
                } else {
                    Coeff::Rat(x * y)
                }
            }
            (Coeff::Mod(x), Coeff::Mod(y), CoefficientField::Prime(p)) => {
                Coeff::Mod(((*x as u64 * *y as u64) % *p as u64) as u32)
            }
            _ => panic!("coefficient from a different field"),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: &Coeff) -> Coeff {
        assert!(!self.is_zero(a), "inverse of zero");
        match (a, self) {
            (Coeff::Rat(x), _) => Coeff::Rat(x.recip()),
            (Coeff::Mod(x), CoefficientField::Prime(p)) => {
                Coeff::Mod(pow_mod(*x as u64, *p as u64 - 2, *p as u64) as u32)
            }
            _ => panic!("coefficient from a different field"),
        }
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (a, b) {
            (Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x / y),
            _ => self.mul(a, &self.inv(b)),
        }
    }

    /// Multipliers `(u, v)` with `u * a == v * b`, `u` nonzero.
    ///
    /// Over the rationals with integral inputs this stays fraction free:
    /// `u = b / gcd`, `v = a / gcd`. Elsewhere `u = 1`, `v = a / b`.
    pub fn elimination_factors(&self, a: &Coeff, b: &Coeff) -> (Coeff, Coeff) {
        if let (Coeff::Rat(x), Coeff::Rat(y)) = (a, b) {
            if x.is_integer() && y.is_integer() {
                let g = x.numer().gcd(y.numer());
                let mut u = y.numer() / &g;
                let mut v = x.numer() / &g;
                if u.is_negative() {
                    u = -u;
                    v = -v;
                }
                return (
                    Coeff::Rat(BigRational::from_integer(u)),
                    Coeff::Rat(BigRational::from_integer(v)),
                );
            }
        }
        (self.one(), self.div(a, b))
    }

    /// Scale factor that makes the coefficient list primitive.
    ///
    /// Rationals: clears denominators and divides by the numerator gcd, with a
    /// positive leading coefficient. Prime fields: makes the list monic.
    pub fn primitive_factor(&self, coeffs: &[&Coeff]) -> Coeff {
        let Some(first) = coeffs.first() else {
            return self.one();
        };
        match self {
            CoefficientField::Prime(_) => self.inv(first),
            CoefficientField::Rational => {
                let mut den_lcm = BigInt::one();
                let mut num_gcd = BigInt::zero();
                for c in coeffs {
                    let Coeff::Rat(r) = c else {
                        panic!("coefficient from a different field")
                    };
                    if !r.denom().is_one() {
                        den_lcm = den_lcm.lcm(r.denom());
                    }
                    if !num_gcd.is_one() {
                        num_gcd = num_gcd.gcd(r.numer());
                    }
                }
                let Coeff::Rat(lead) = first else { unreachable!() };
                if lead.is_negative() {
                    num_gcd = -num_gcd;
                }
                Coeff::Rat(BigRational::new(den_lcm, num_gcd))
            }
        }
    }

    /// Parses a literal from the ring declaration syntax (`QQ`, `GF(p)`).
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        if t == "QQ" {
            return Ok(CoefficientField::Rational);
        }
        if let Some(inner) = t.strip_prefix("GF(").and_then(|s| s.strip_suffix(')')) {
            let p: u32 = inner
                .trim()
                .parse()
                .map_err(|_| Error::InvalidRing(format!("bad modulus `{inner}`")))?;
            return CoefficientField::prime(p);
        }
        Err(Error::InvalidRing(format!("unknown coefficient field `{t}`")))
    }

    /// Coefficient magnitude used by printers: `(is_negative, |c|)`.
    pub(crate) fn sign_split(&self, a: &Coeff) -> (bool, Coeff) {
        match a {
            Coeff::Rat(r) if r.is_negative() => (true, Coeff::Rat(-r)),
            _ => (false, a.clone()),
        }
    }
}

impl fmt::Display for CoefficientField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientField::Rational => write!(f, "QQ"),
            CoefficientField::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl std::str::FromStr for CoefficientField {
    type Err = Error;

    /// `QQ` or `GF(p)`.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t == "QQ" {
            return Ok(CoefficientField::Rational);
        }
        let p = t
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .and_then(|r| r.parse::<u32>().ok())
            .ok_or_else(|| Error::InvalidRing(format!("unknown field `{s}`, expected QQ or GF(p)")))?;
        CoefficientField::prime(p)
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Rat(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Coeff::Mod(v) => write!(f, "{v}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_construction_checks_primality() {
        assert!(CoefficientField::prime(32003).is_ok());
        assert!(CoefficientField::prime(2).is_ok());
        assert!(CoefficientField::prime(1).is_err());
        assert!(CoefficientField::prime(32001).is_err());
        assert!(CoefficientField::prime(u32::MAX).is_err());
    }

    #[test]
    fn inverses_are_exact() {
        for field in [CoefficientField::Rational, CoefficientField::Prime(101)] {
            for v in [-7i64, -1, 1, 2, 3, 50, 99] {
                let a = field.from_i64(v);
                assert!(field.is_zero(&field.add(&a, &field.neg(&a))));
                assert!(field.is_one(&field.mul(&a, &field.inv(&a))));
            }
        }
    }

    #[test]
    fn fractions_in_prime_fields() {
        let f = CoefficientField::Prime(7);
        let half = f.from_fraction(&1.into(), &2.into()).unwrap();
        assert_eq!(half, Coeff::Mod(4));
        assert!(f.from_fraction(&1.into(), &7.into()).is_none());
    }

    #[test]
    fn primitive_factor_clears_denominators() {
        let q = CoefficientField::Rational;
        let a = Coeff::Rat(BigRational::new((-3).into(), 2.into()));
        let b = Coeff::Rat(BigRational::new(9.into(), 4.into()));
        let s = q.primitive_factor(&[&a, &b]);
        assert_eq!(q.mul(&a, &s), q.from_i64(2));
        assert_eq!(q.mul(&b, &s), q.from_i64(-3));
    }

    #[test]
    fn elimination_factors_cancel() {
        for field in [CoefficientField::Rational, CoefficientField::Prime(31)] {
            let a = field.from_i64(6);
            let b = field.from_i64(-4);
            let (u, v) = field.elimination_factors(&a, &b);
            assert_eq!(field.mul(&u, &a), field.mul(&v, &b));
        }
    }

    #[test]
    fn parse_fields() {
        assert_eq!(CoefficientField::parse("QQ").unwrap(), CoefficientField::Rational);
        assert_eq!(CoefficientField::parse("GF(32003)").unwrap(), CoefficientField::Prime(32003));
        assert!(CoefficientField::parse("GF(4)").is_err());
        assert!(CoefficientField::parse("RR").is_err());
    }
}
