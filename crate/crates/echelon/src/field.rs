//! The abstract field contract and its two concrete instances: exact
//! rationals and prime fields GF(p).
//!
//! A [`FieldSpec`] names the field a computation runs in; a
//! [`FieldElement`] is a scalar in canonical form. Rationals are kept as
//! reduced fractions with positive denominator, prime-field residues as
//! integers in `[0, p)`, so structural equality coincides with field
//! equality and no epsilon appears anywhere.
//!
//! Arithmetic is exact and total except for the multiplicative inverse of
//! zero, which is a [`Error::DivisionByZero`]. Combining elements of two
//! different fields is a caller bug and panics; the text-format layer
//! rejects such inputs before they reach arithmetic.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Error;

/// The field a computation is carried out in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldSpec(Kind);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Kind {
    Rational,
    Prime(u64),
}

impl FieldSpec {
    /// The field of exact rational numbers.
    pub fn rational() -> FieldSpec {
        FieldSpec(Kind::Rational)
    }

    /// The prime field GF(p). The modulus is checked for primality by
    /// trial division; composite moduli are rejected.
    pub fn prime_field(modulus: u64) -> Result<FieldSpec, Error> {
        if is_prime(modulus) {
            Ok(FieldSpec(Kind::Prime(modulus)))
        } else {
            Err(Error::CompositeModulus(modulus))
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self.0, Kind::Rational)
    }

    /// The modulus of a prime field, or `None` for the rationals.
    pub fn modulus(&self) -> Option<u64> {
        match self.0 {
            Kind::Rational => None,
            Kind::Prime(p) => Some(p),
        }
    }

    /// The additive identity of this field.
    pub fn zero(&self) -> FieldElement {
        match self.0 {
            Kind::Rational => FieldElement(Repr::Rational(BigRational::zero())),
            Kind::Prime(p) => FieldElement(Repr::Prime {
                value: 0,
                modulus: p,
            }),
        }
    }

    /// The multiplicative identity of this field.
    pub fn one(&self) -> FieldElement {
        match self.0 {
            Kind::Rational => FieldElement(Repr::Rational(BigRational::one())),
            Kind::Prime(p) => FieldElement(Repr::Prime {
                value: 1,
                modulus: p,
            }),
        }
    }

    /// Embeds a signed integer: as itself over the rationals, as its
    /// residue over GF(p).
    pub fn from_i64(&self, v: i64) -> FieldElement {
        match self.0 {
            Kind::Rational => FieldElement(Repr::Rational(BigRational::from_integer(v.into()))),
            Kind::Prime(p) => {
                let value = (v as i128).rem_euclid(p as i128) as u64;
                FieldElement(Repr::Prime { value, modulus: p })
            }
        }
    }

    /// Embeds a fraction `numer/denom`; over GF(p) this is
    /// `numer * denom^-1` and fails when `denom` reduces to zero.
    pub fn from_ratio(&self, numer: i64, denom: i64) -> Result<FieldElement, Error> {
        if denom == 0 {
            return Err(Error::DivisionByZero);
        }
        match self.0 {
            Kind::Rational => Ok(FieldElement(Repr::Rational(BigRational::new(
                numer.into(),
                denom.into(),
            )))),
            Kind::Prime(_) => Ok(&self.from_i64(numer) * &self.from_i64(denom).inv()?),
        }
    }

    /// Reads one element token in this field's textual syntax: an
    /// optional-sign integer or `p/q` over the rationals, an integer in
    /// `[0, p)` over GF(p).
    pub fn parse_element(&self, token: &str) -> Result<FieldElement, Error> {
        let invalid = |reason: &str| Error::InvalidElement {
            token: token.to_string(),
            reason: reason.to_string(),
        };
        match self.0 {
            Kind::Rational => match token.split_once('/') {
                Some((numer, denom)) => {
                    let n = parse_signed_int(numer).ok_or_else(|| invalid("bad numerator"))?;
                    let d = parse_unsigned_int(denom)
                        .ok_or_else(|| invalid("denominator must be a positive integer"))?;
                    if d.is_zero() {
                        return Err(invalid("zero denominator"));
                    }
                    Ok(FieldElement(Repr::Rational(BigRational::new(n, d))))
                }
                None => {
                    let n = parse_signed_int(token).ok_or_else(|| invalid("not an integer"))?;
                    Ok(FieldElement(Repr::Rational(BigRational::from_integer(n))))
                }
            },
            Kind::Prime(p) => {
                let digits = parse_unsigned_int(token)
                    .ok_or_else(|| invalid("prime-field elements are unsigned integers"))?;
                let value =
                    u64::try_from(&digits).map_err(|_| invalid("element not in declared field"))?;
                if value >= p {
                    return Err(invalid("element not in declared field"));
                }
                Ok(FieldElement(Repr::Prime { value, modulus: p }))
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Kind::Rational => write!(f, "rational"),
            Kind::Prime(p) => write!(f, "gf {p}"),
        }
    }
}

fn parse_signed_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::from_str(s).ok()
}

fn parse_unsigned_int(s: &str) -> Option<BigInt> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::from_str(s).ok()
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    if n.is_multiple_of(3) {
        return n == 3;
    }
    let mut d = 5u64;
    while let Some(sq) = d.checked_mul(d) {
        if sq > n {
            break;
        }
        if n.is_multiple_of(d) || n.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

/// A scalar in canonical form in some field.
///
/// The canonical representation is unique per value, so derived equality
/// is exactly field equality. Elements of different fields are never
/// equal and must not be combined arithmetically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElement(Repr);

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Repr {
    Rational(BigRational),
    Prime { value: u64, modulus: u64 },
}

impl FieldElement {
    /// The field this element belongs to.
    pub fn spec(&self) -> FieldSpec {
        match &self.0 {
            Repr::Rational(_) => FieldSpec(Kind::Rational),
            Repr::Prime { modulus, .. } => FieldSpec(Kind::Prime(*modulus)),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Rational(r) => r.is_zero(),
            Repr::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Rational(r) => r.is_one(),
            Repr::Prime { value, .. } => *value == 1,
        }
    }

    /// The multiplicative inverse; `a * a.inv() == 1` for `a != 0`.
    pub fn inv(&self) -> Result<FieldElement, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.0 {
            Repr::Rational(r) => FieldElement(Repr::Rational(r.recip())),
            Repr::Prime { value, modulus } => FieldElement(Repr::Prime {
                value: mod_inverse(*value, *modulus),
                modulus: *modulus,
            }),
        })
    }

    /// The rational value, when this element is rational.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Rational(r) => Some(r),
            Repr::Prime { .. } => None,
        }
    }

    /// The residue in `[0, p)`, when this element lives in GF(p).
    pub fn residue(&self) -> Option<u64> {
        match &self.0 {
            Repr::Rational(_) => None,
            Repr::Prime { value, .. } => Some(*value),
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Rational(r) => write!(f, "{r}"),
            Repr::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}

/// Inverse of `a` modulo the prime `p`, by the extended Euclidean
/// algorithm. Requires `0 < a < p`.
fn mod_inverse(a: u64, p: u64) -> u64 {
    debug_assert!(a > 0 && a < p);
    let (mut r0, mut r1) = (a as i128, p as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1, "modulus must be prime");
    s0.rem_euclid(p as i128) as u64
}

fn mismatch(lhs: &FieldElement, rhs: &FieldElement) -> ! {
    panic!("field mismatch: {} vs {}", lhs.spec(), rhs.spec());
}

impl Add for &FieldElement {
    type Output = FieldElement;

    fn add(self, rhs: &FieldElement) -> FieldElement {
        match (&self.0, &rhs.0) {
            (Repr::Rational(a), Repr::Rational(b)) => FieldElement(Repr::Rational(a + b)),
            (
                Repr::Prime {
                    value: a,
                    modulus: p,
                },
                Repr::Prime {
                    value: b,
                    modulus: q,
                },
            ) if p == q => {
                let sum = ((*a as u128 + *b as u128) % *p as u128) as u64;
                FieldElement(Repr::Prime {
                    value: sum,
                    modulus: *p,
                })
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;

    fn mul(self, rhs: &FieldElement) -> FieldElement {
        match (&self.0, &rhs.0) {
            (Repr::Rational(a), Repr::Rational(b)) => FieldElement(Repr::Rational(a * b)),
            (
                Repr::Prime {
                    value: a,
                    modulus: p,
                },
                Repr::Prime {
                    value: b,
                    modulus: q,
                },
            ) if p == q => {
                let prod = ((*a as u128 * *b as u128) % *p as u128) as u64;
                FieldElement(Repr::Prime {
                    value: prod,
                    modulus: *p,
                })
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;

    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self + &(-rhs)
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;

    fn neg(self) -> FieldElement {
        match &self.0 {
            Repr::Rational(r) => FieldElement(Repr::Rational(-r)),
            Repr::Prime { value, modulus } => {
                let value = if *value == 0 { 0 } else { modulus - value };
                FieldElement(Repr::Prime {
                    value,
                    modulus: *modulus,
                })
            }
        }
    }
}

impl Add for FieldElement {
    type Output = FieldElement;

    fn add(self, rhs: FieldElement) -> FieldElement {
        &self + &rhs
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;

    fn mul(self, rhs: FieldElement) -> FieldElement {
        &self * &rhs
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;

    fn sub(self, rhs: FieldElement) -> FieldElement {
        &self - &rhs
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;

    fn neg(self) -> FieldElement {
        -&self
    }
}
