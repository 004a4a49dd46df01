//! Exact scalars over a prime field `F_p` or the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The base field every structure in a computation shares.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Prime(u64),
    Rational,
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if p < 2 || !is_prime(p) {
            return Err(Error::Field(format!("{p} is not prime")));
        }
        if p >= 1 << 31 {
            return Err(Error::Field(format!("modulus {p} too large")));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn zero(&self) -> Scalar {
        match *self {
            FieldSpec::Prime(p) => Scalar::Mod { value: 0, p },
            FieldSpec::Rational => Scalar::Rat(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match *self {
            FieldSpec::Prime(p) => Scalar::Mod {
                value: n.rem_euclid(p as i64) as u64,
                p,
            },
            FieldSpec::Rational => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, FieldSpec::Prime(_))
    }

    pub fn characteristic(&self) -> u64 {
        match *self {
            FieldSpec::Prime(p) => p,
            FieldSpec::Rational => 0,
        }
    }

    /// All elements in residue order; `None` for the rationals.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match *self {
            FieldSpec::Prime(p) => Some((0..p).map(|value| Scalar::Mod { value, p }).collect()),
            FieldSpec::Rational => None,
        }
    }

    pub fn zeros(&self, n: usize) -> Vec<Scalar> {
        vec![self.zero(); n]
    }

    /// Standard basis vector `e_k` of length `n`.
    pub fn unit_vector(&self, n: usize, k: usize) -> Vec<Scalar> {
        let mut v = self.zeros(n);
        v[k] = self.one();
        v
    }

    /// Parses the canonical decimal form. Non-canonical spellings such as
    /// `"2/4"`, `"+1"` or an out-of-range residue are rejected.
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let bad = |why: &str| Error::Scalar(format!("{s:?}: {why}"));
        match *self {
            FieldSpec::Prime(p) => {
                if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(bad("expected a residue in [0, p)"));
                }
                if s.len() > 1 && s.starts_with('0') {
                    return Err(bad("leading zero"));
                }
                let value: u64 = s.parse().map_err(|_| bad("residue out of range"))?;
                if value >= p {
                    return Err(bad(&format!("residue out of range for p = {p}")));
                }
                Ok(Scalar::Mod { value, p })
            }
            FieldSpec::Rational => {
                let (num, den) = match s.split_once('/') {
                    Some((n, d)) => (n, Some(d)),
                    None => (s, None),
                };
                let num = parse_int(num).ok_or_else(|| bad("malformed numerator"))?;
                let den = match den {
                    Some(d) => {
                        if d.starts_with('-') {
                            return Err(bad("denominator must be positive"));
                        }
                        let d = parse_int(d).ok_or_else(|| bad("malformed denominator"))?;
                        if d.is_zero() {
                            return Err(bad("zero denominator"));
                        }
                        if d.is_one() {
                            return Err(bad("fraction not reduced (denominator 1)"));
                        }
                        d
                    }
                    None => BigInt::one(),
                };
                if !num.gcd(&den).is_one() {
                    return Err(bad("fraction not reduced"));
                }
                Ok(Scalar::Rat(BigRational::new_raw(num, den)))
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "F_{p}"),
            FieldSpec::Rational => write!(f, "Q"),
        }
    }
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    if digits.len() > 1 && digits.starts_with('0') {
        return None;
    }
    if s.starts_with('-') && digits == "0" {
        return None;
    }
    s.parse().ok()
}

fn is_prime(n: u64) -> bool {
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

/// A field element in canonical form: a residue in `[0, p)` or a reduced fraction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Mod { value: u64, p: u64 },
    Rat(BigRational),
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Mod { p, .. } => FieldSpec::Prime(*p),
            Scalar::Rat(_) => FieldSpec::Rational,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Mod { value, .. } => *value == 0,
            Scalar::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Mod { value, .. } => *value == 1,
            Scalar::Rat(r) => r.is_one(),
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Mod { value, p } => Scalar::Mod {
                value: pow_mod(*value, p - 2, *p),
                p: *p,
            },
            Scalar::Rat(r) => Scalar::Rat(r.recip()),
        })
    }

    /// Residue for prime fields; used by enumeration code.
    pub fn residue(&self) -> Option<u64> {
        match self {
            Scalar::Mod { value, .. } => Some(*value),
            Scalar::Rat(_) => None,
        }
    }

    /// `self += a * b` without intermediate clones on the prime-field path.
    pub fn add_mul(&mut self, a: &Scalar, b: &Scalar) {
        match (&mut *self, a, b) {
            (Scalar::Mod { value, p }, Scalar::Mod { value: x, .. }, Scalar::Mod { value: y, .. }) => {
                *value = ((*value as u128 + (*x as u128) * (*y as u128)) % (*p as u128)) as u64;
            }
            _ => {
                if a.is_zero() || b.is_zero() {
                    return;
                }
                *self = &*self + &(a * b);
            }
        }
    }

    /// `self -= a * b`.
    pub fn sub_mul(&mut self, a: &Scalar, b: &Scalar) {
        match (&mut *self, a, b) {
            (Scalar::Mod { value, p }, Scalar::Mod { value: x, .. }, Scalar::Mod { value: y, .. }) => {
                let prod = ((*x as u128) * (*y as u128) % (*p as u128)) as u64;
                *value = (*value + *p - prod) % *p;
            }
            _ => {
                if a.is_zero() || b.is_zero() {
                    return;
                }
                *self = &*self - &(a * b);
            }
        }
    }
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

fn same_modulus(p: u64, q: u64) -> u64 {
    assert_eq!(p, q, "scalars from different prime fields");
    p
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, p: q }) => {
                let p = same_modulus(*p, *q);
                Scalar::Mod { value: (a + b) % p, p }
            }
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            _ => panic!("scalars from different fields"),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, p: q }) => {
                let p = same_modulus(*p, *q);
                Scalar::Mod { value: (a + p - b) % p, p }
            }
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a - b),
            _ => panic!("scalars from different fields"),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, p: q }) => {
                let p = same_modulus(*p, *q);
                Scalar::Mod {
                    value: ((*a as u128 * *b as u128) % p as u128) as u64,
                    p,
                }
            }
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            _ => panic!("scalars from different fields"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Mod { value, p } => Scalar::Mod { value: (p - value) % p, p: *p },
            Scalar::Rat(a) => Scalar::Rat(-a),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Mod { value, .. } => write!(f, "{value}"),
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

impl Scalar {
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Mod { .. } => false,
            Scalar::Rat(r) => r.is_negative(),
        }
    }
}
