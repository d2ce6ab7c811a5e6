//! Arbitrary-precision rationals with an `i64` fast path.
//!
//! Values are always stored in canonical form: the denominator is positive and
//! coprime to the numerator, and a value is kept in the small representation
//! whenever both parts fit in `i64` (excluding `i64::MIN`). Derived equality
//! is therefore structural equality of canonical forms.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Small(Ratio<i64>),
    Big(BigRational),
}

/// An exact rational number.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(Repr);

fn fits(v: i64) -> bool {
    v != i64::MIN
}

impl Rational {
    pub const ZERO: Rational = Rational(Repr::Small(Ratio::new_raw(0, 1)));
    pub const ONE: Rational = Rational(Repr::Small(Ratio::new_raw(1, 1)));

    pub fn from_integer(n: i64) -> Self {
        if fits(n) {
            Rational(Repr::Small(Ratio::from_integer(n)))
        } else {
            Self::from_big(BigRational::from_integer(BigInt::from(n)))
        }
    }

    /// `numer / denom`; `None` when `denom == 0`.
    pub fn new(numer: i64, denom: i64) -> Option<Self> {
        if denom == 0 {
            return None;
        }
        Some(Self::from_big(BigRational::new(
            BigInt::from(numer),
            BigInt::from(denom),
        )))
    }

    /// Canonical value of an already-reduced or unreduced big ratio.
    pub fn from_big(r: BigRational) -> Self {
        let (n, d) = (r.numer(), r.denom());
        match (n.to_i64(), d.to_i64()) {
            (Some(n), Some(d)) if fits(n) && fits(d) => Rational(Repr::Small(Ratio::new_raw(n, d))),
            _ => Rational(Repr::Big(r)),
        }
    }

    fn from_small(r: Ratio<i64>) -> Self {
        if fits(*r.numer()) && fits(*r.denom()) {
            Rational(Repr::Small(r))
        } else {
            Self::from_big(to_big(&r))
        }
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(r) => to_big(r),
            Repr::Big(r) => r.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Small(r) => r.is_zero(),
            Repr::Big(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Small(r) => r.is_one(),
            Repr::Big(r) => r.is_one(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(r) => r.is_negative(),
            Repr::Big(r) => r.is_negative(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(r) => r.is_integer(),
            Repr::Big(r) => r.is_integer(),
        }
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(match &self.0 {
            Repr::Small(r) => Self::from_small(r.recip()),
            Repr::Big(r) => Self::from_big(r.recip()),
        })
    }
}

fn to_big(r: &Ratio<i64>) -> BigRational {
    Ratio::new_raw(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

impl Default for Rational {
    fn default() -> Self {
        Rational::ZERO
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Rational::from_integer(n as i64)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<'a> $trait<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                if let (Repr::Small(a), Repr::Small(b)) = (&self.0, &rhs.0) {
                    if let Some(r) = a.$checked(b) {
                        return Rational::from_small(r);
                    }
                }
                Rational::from_big(self.to_big().$method(rhs.to_big()))
            }
        }

        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl<'a> Div<&'a Rational> for &'a Rational {
    type Output = Rational;
    /// Panics on division by zero.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &'a Rational) -> Rational {
        let inv = rhs.recip().expect("rational division by zero");
        self * &inv
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        &self / &rhs
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match &self.0 {
            // numerators never hold i64::MIN, so negation cannot overflow
            Repr::Small(r) => Rational(Repr::Small(-*r)),
            Repr::Big(r) => Rational::from_big(-r),
        }
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -&self
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a), Repr::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(r) => fmt_ratio(f, r.numer(), r.denom()),
            Repr::Big(r) => fmt_ratio(f, r.numer(), r.denom()),
        }
    }
}

fn fmt_ratio<T: fmt::Display + One + PartialEq>(f: &mut fmt::Formatter<'_>, n: &T, d: &T) -> fmt::Result {
    if d.is_one() {
        write!(f, "{n}")
    } else {
        write!(f, "{n}/{d}")
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Error returned when a rational or scalar token does not match the grammar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseScalarError {
    pub token: alloc::string::String,
}

impl fmt::Display for ParseScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "malformed scalar `{}`", self.token)
    }
}

impl core::error::Error for ParseScalarError {}

fn is_digits(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
}

/// Parses `UNSIGNED-RAT := DIGITS | DIGITS "/" POSDIGITS` (no sign).
pub(crate) fn parse_unsigned(s: &str) -> Option<Rational> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    if !is_digits(n) {
        return None;
    }
    let numer: BigInt = n.parse().ok()?;
    let denom: BigInt = match d {
        Some(d) if is_digits(d) => d.parse().ok()?,
        Some(_) => return None,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return None;
    }
    Some(Rational::from_big(BigRational::new(numer, denom)))
}

impl FromStr for Rational {
    type Err = ParseScalarError;

    /// `RAT := INT | INT "/" POSINT`, with an optional leading `-`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseScalarError { token: s.into() };
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let r = parse_unsigned(body).ok_or_else(err)?;
        Ok(if neg { -r } else { r })
    }
}
