use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Coefficient field: the rationals or a prime field `GF(p)` with `p < 2^31`.
///
/// Field elements are carried as [`BigRational`] in both cases; over `GF(p)`
/// they are normalized to integer residues in `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum FieldSpec {
    #[default]
    Rationals,
    Prime(u32),
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut k = 2u64;
    while k * k <= p {
        if p.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::InvalidInput(format!("{p} is not a prime below 2^31")));
        }
        Ok(FieldSpec::Prime(p as u32))
    }

    pub fn characteristic(self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => p as u64,
        }
    }

    /// Residue of `x` modulo `p`.
    ///
    /// Panics if the denominator of `x` is divisible by `p`, since such a
    /// rational is not an element of `GF(p)`.
    pub fn residue(p: u64, x: &BigRational) -> u64 {
        let num = int_residue(p, x.numer());
        if x.denom().is_one() {
            return num;
        }
        let den = int_residue(p, x.denom());
        assert!(den != 0, "{x} is not an element of GF({p})");
        mul_mod(num, inv_mod(den, p), p)
    }

    /// Canonical representative of `x` in this field.
    pub fn reduce(self, x: &BigRational) -> BigRational {
        match self {
            FieldSpec::Rationals => x.clone(),
            FieldSpec::Prime(p) => BigRational::from_integer(BigInt::from(Self::residue(p as u64, x))),
        }
    }

    pub fn from_i64(self, x: i64) -> BigRational {
        self.reduce(&BigRational::from_integer(BigInt::from(x)))
    }

    pub fn add(self, a: &BigRational, b: &BigRational) -> BigRational {
        self.reduce(&(a + b))
    }

    pub fn sub(self, a: &BigRational, b: &BigRational) -> BigRational {
        self.reduce(&(a - b))
    }

    pub fn mul(self, a: &BigRational, b: &BigRational) -> BigRational {
        self.reduce(&(a * b))
    }

    pub fn neg(self, a: &BigRational) -> BigRational {
        self.reduce(&-a)
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(self, a: &BigRational) -> Option<BigRational> {
        match self {
            FieldSpec::Rationals => (!a.is_zero()).then(|| a.recip()),
            FieldSpec::Prime(p) => {
                let r = Self::residue(p as u64, a);
                (r != 0).then(|| BigRational::from_integer(BigInt::from(inv_mod(r, p as u64))))
            }
        }
    }

    pub fn is_zero(self, a: &BigRational) -> bool {
        match self {
            FieldSpec::Rationals => a.is_zero(),
            FieldSpec::Prime(p) => Self::residue(p as u64, a) == 0,
        }
    }
}

fn int_residue(p: u64, x: &BigInt) -> u64 {
    if let Some(v) = x.to_i64() {
        return v.rem_euclid(p as i64) as u64;
    }
    let r = x.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits")
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2).
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => f.write_str("Q"),
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `Q`, `QQ`, `GF(p)` or `GF p`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") || t.eq_ignore_ascii_case("qq") {
            return Ok(FieldSpec::Rationals);
        }
        let inner = t
            .strip_prefix("GF")
            .or_else(|| t.strip_prefix("gf"))
            .map(|r| r.trim().trim_start_matches('(').trim_end_matches(')').trim());
        match inner.and_then(|r| r.parse::<u64>().ok()) {
            Some(p) => FieldSpec::prime(p),
            None => Err(Error::InvalidInput(format!("unrecognized field tag {s:?}"))),
        }
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Renders a field element compactly (`-3`, `1/2`).
pub fn format_scalar(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else if x.is_negative() {
        format!("-{}/{}", x.numer().abs(), x.denom())
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        assert_eq!("Q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!("GF(2)".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(2));
        assert_eq!("gf 7".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(7));
        assert!("GF(4)".parse::<FieldSpec>().is_err());
        assert!("R".parse::<FieldSpec>().is_err());
        assert!(FieldSpec::prime(2147483659).is_err());
        assert_eq!(FieldSpec::Prime(5).to_string(), "GF(5)");
    }

    #[test]
    fn residues_and_inverses() {
        let f = FieldSpec::Prime(5);
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(FieldSpec::residue(5, &half), 3);
        assert_eq!(f.from_i64(-1), f.from_i64(4));
        let three = f.from_i64(3);
        assert_eq!(f.mul(&three, &f.inv(&three).unwrap()), f.from_i64(1));
        assert!(f.inv(&f.from_i64(10)).is_none());
    }
}
