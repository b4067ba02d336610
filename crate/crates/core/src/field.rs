//! Exact coefficient fields: the rationals and prime fields `ZZ/p`.
//!
//! Elements are plain values; the [`FieldDescriptor`] is only needed to
//! build constants (a prime-field zero has to know its modulus).

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Default characteristic of the probabilistic prime-field mode.
pub const DEFAULT_PRIME: u32 = 32003;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldDescriptor {
    Rationals,
    Prime(u32),
}

impl FieldDescriptor {
    pub fn prime(p: u32) -> Result<Self> {
        if p == 2 || p >= 1 << 31 || !is_prime(p) {
            return Err(Error::InvalidField(format!(
                "characteristic {p} is not an odd prime below 2^31"
            )));
        }
        Ok(FieldDescriptor::Prime(p))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            FieldDescriptor::Rationals => 0,
            FieldDescriptor::Prime(p) => *p,
        }
    }

    /// Verdicts over a prime field are only probabilistic stand-ins for the
    /// characteristic-zero answer.
    pub fn is_exact(&self) -> bool {
        matches!(self, FieldDescriptor::Rationals)
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rationals => write!(f, "QQ"),
            FieldDescriptor::Prime(p) => write!(f, "ZZ/{p}"),
        }
    }
}

/// Deterministic trial division; characteristics are below 2^31.
pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n as u64 {
        if n as u64 % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Coefficient arithmetic shared by every algorithm in the crate.
pub trait Coeff: Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero(field: FieldDescriptor) -> Self;
    fn one(field: FieldDescriptor) -> Self;
    fn from_i64(n: i64, field: FieldDescriptor) -> Self;
    /// `num / den`; fails on a zero denominator (or one divisible by p).
    fn from_ratio(num: &BigInt, den: &BigInt, field: FieldDescriptor) -> Result<Self>;
    /// Whether this coefficient type can represent elements of `field`.
    fn supports(field: FieldDescriptor) -> bool;

    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul(&i))
    }

    /// Numerator/denominator view used by the printer: `(negative, |num|, den)`.
    fn to_parts(&self) -> (bool, BigInt, BigInt);
}

/// Exact rational with an `i64` fast path.
///
/// Canonical form: reduced, positive denominator, and `Small` whenever both
/// parts fit, so derived equality and hashing are structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Rational {
    Small(i64, i64),
    Big(Box<BigRational>),
}

impl Rational {
    pub fn new(num: i64, den: i64) -> Option<Self> {
        if den == 0 {
            return None;
        }
        Some(Self::from_i128(num as i128, den as i128))
    }

    pub fn integer(n: i64) -> Self {
        Rational::Small(n, 1)
    }

    fn from_i128(num: i128, den: i128) -> Self {
        debug_assert!(den != 0);
        let g = num.gcd(&den);
        let (mut n, mut d) = if g == 0 { (0, 1) } else { (num / g, den / g) };
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Rational::Small(n, d),
            _ => Rational::Big(Box::new(BigRational::new_raw(BigInt::from(n), BigInt::from(d)))),
        }
    }

    fn from_big(r: BigRational) -> Self {
        // BigRational::new already normalises sign and gcd.
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Rational::Small(n, d),
            _ => Rational::Big(Box::new(r)),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rational::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Rational::Big(b) => (**b).clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match self {
            Rational::Small(n, _) => BigInt::from(*n),
            Rational::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match self {
            Rational::Small(_, d) => BigInt::from(*d),
            Rational::Big(b) => b.denom().clone(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Rational::Small(_, d) => *d == 1,
            Rational::Big(b) => b.is_integer(),
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Rational::Small(n, 1) => Some(*n),
            Rational::Small(..) => None,
            Rational::Big(b) if b.is_integer() => b.numer().to_i64(),
            Rational::Big(_) => None,
        }
    }

    fn binop(
        &self,
        other: &Self,
        small: impl Fn(i128, i128, i128, i128) -> Option<(i128, i128)>,
        big: impl Fn(BigRational, BigRational) -> BigRational,
    ) -> Self {
        if let (Rational::Small(a, b), Rational::Small(c, d)) = (self, other) {
            if let Some((n, m)) = small(*a as i128, *b as i128, *c as i128, *d as i128) {
                return Self::from_i128(n, m);
            }
        }
        Self::from_big(big(self.to_big(), other.to_big()))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Rational::Small(a, b), Rational::Small(c, d)) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Small(n, 1) => write!(f, "{n}"),
            Rational::Small(n, d) => write!(f, "{n}/{d}"),
            Rational::Big(b) => write!(f, "{b}"),
        }
    }
}

impl Coeff for Rational {
    fn zero(_: FieldDescriptor) -> Self {
        Rational::Small(0, 1)
    }

    fn one(_: FieldDescriptor) -> Self {
        Rational::Small(1, 1)
    }

    fn from_i64(n: i64, _: FieldDescriptor) -> Self {
        Rational::Small(n, 1)
    }

    fn from_ratio(num: &BigInt, den: &BigInt, _: FieldDescriptor) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::from_big(BigRational::new(num.clone(), den.clone())))
    }

    fn supports(field: FieldDescriptor) -> bool {
        field == FieldDescriptor::Rationals
    }

    fn is_zero(&self) -> bool {
        matches!(self, Rational::Small(0, _))
    }

    fn is_one(&self) -> bool {
        matches!(self, Rational::Small(1, 1))
    }

    fn add(&self, other: &Self) -> Self {
        self.binop(
            other,
            |a, b, c, d| {
                if b == d {
                    Some((a + c, b))
                } else {
                    Some((a * d + c * b, b * d))
                }
            },
            |x, y| x + y,
        )
    }

    fn sub(&self, other: &Self) -> Self {
        self.binop(
            other,
            |a, b, c, d| {
                if b == d {
                    Some((a - c, b))
                } else {
                    Some((a * d - c * b, b * d))
                }
            },
            |x, y| x - y,
        )
    }

    fn mul(&self, other: &Self) -> Self {
        self.binop(other, |a, b, c, d| Some((a * c, b * d)), |x, y| x * y)
    }

    fn neg(&self) -> Self {
        match self {
            Rational::Small(n, d) if *n != i64::MIN => Rational::Small(-n, *d),
            _ => Self::from_big(-self.to_big()),
        }
    }

    fn inv(&self) -> Option<Self> {
        match self {
            Rational::Small(0, _) => None,
            Rational::Small(n, d) => Some(Self::from_i128(*d as i128, *n as i128)),
            Rational::Big(b) => Some(Self::from_big(b.recip())),
        }
    }

    fn to_parts(&self) -> (bool, BigInt, BigInt) {
        let n = self.numer();
        (n.is_negative(), n.abs(), self.denom())
    }
}

/// Element of `ZZ/p`, carrying its modulus.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u32,
    modulus: u32,
}

impl Fp {
    pub fn new(n: i64, p: u32) -> Self {
        Fp {
            value: n.rem_euclid(p as i64) as u32,
            modulus: p,
        }
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    fn modulus_of(field: FieldDescriptor) -> u32 {
        match field {
            FieldDescriptor::Prime(p) => p,
            FieldDescriptor::Rationals => panic!("prime-field coefficient used over QQ"),
        }
    }

    fn pow(&self, mut e: u64) -> Fp {
        let p = self.modulus as u64;
        let mut base = self.value as u64;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        Fp {
            value: acc as u32,
            modulus: self.modulus,
        }
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Printed in the symmetric range `(-p/2, p/2]`.
impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (neg, n, _) = self.to_parts();
        if neg {
            write!(f, "-{n}")
        } else {
            write!(f, "{n}")
        }
    }
}

impl Coeff for Fp {
    fn zero(field: FieldDescriptor) -> Self {
        Fp {
            value: 0,
            modulus: Self::modulus_of(field),
        }
    }

    fn one(field: FieldDescriptor) -> Self {
        Fp {
            value: 1,
            modulus: Self::modulus_of(field),
        }
    }

    fn from_i64(n: i64, field: FieldDescriptor) -> Self {
        Fp::new(n, Self::modulus_of(field))
    }

    fn from_ratio(num: &BigInt, den: &BigInt, field: FieldDescriptor) -> Result<Self> {
        let p = Self::modulus_of(field);
        let pb = BigInt::from(p);
        let reduce = |x: &BigInt| Fp {
            value: x.mod_floor(&pb).to_u32().expect("residue below p"),
            modulus: p,
        };
        let d = reduce(den);
        if d.value == 0 {
            return Err(Error::ZeroDenominator);
        }
        Ok(reduce(num).mul(&d.inv().expect("nonzero residue")))
    }

    fn supports(field: FieldDescriptor) -> bool {
        matches!(field, FieldDescriptor::Prime(_))
    }

    fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn is_one(&self) -> bool {
        self.value == 1
    }

    fn add(&self, other: &Self) -> Self {
        let s = self.value as u64 + other.value as u64;
        Fp {
            value: (s % self.modulus as u64) as u32,
            modulus: self.modulus,
        }
    }

    fn sub(&self, other: &Self) -> Self {
        let s = self.value as u64 + self.modulus as u64 - other.value as u64;
        Fp {
            value: (s % self.modulus as u64) as u32,
            modulus: self.modulus,
        }
    }

    fn mul(&self, other: &Self) -> Self {
        Fp {
            value: (self.value as u64 * other.value as u64 % self.modulus as u64) as u32,
            modulus: self.modulus,
        }
    }

    fn neg(&self) -> Self {
        Fp {
            value: if self.value == 0 { 0 } else { self.modulus - self.value },
            modulus: self.modulus,
        }
    }

    fn inv(&self) -> Option<Self> {
        if self.value == 0 {
            None
        } else {
            Some(self.pow(self.modulus as u64 - 2))
        }
    }

    fn to_parts(&self) -> (bool, BigInt, BigInt) {
        if self.value > self.modulus / 2 {
            (true, BigInt::from(self.modulus - self.value), BigInt::one())
        } else {
            (false, BigInt::from(self.value), BigInt::one())
        }
    }
}
