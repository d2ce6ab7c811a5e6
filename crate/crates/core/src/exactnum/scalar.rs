//! Gaussian rationals `re + im·i`, the ground field of every computation.

use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use core::str::FromStr;

use super::rational::{parse_unsigned, ParseScalarError, Rational};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    pub re: Rational,
    pub im: Rational,
}

impl Scalar {
    pub const ZERO: Scalar = Scalar { re: Rational::ZERO, im: Rational::ZERO };
    pub const ONE: Scalar = Scalar { re: Rational::ONE, im: Rational::ZERO };
    pub const I: Scalar = Scalar { re: Rational::ZERO, im: Rational::ONE };

    pub fn new(re: Rational, im: Rational) -> Self {
        Scalar { re, im }
    }

    pub fn real(re: Rational) -> Self {
        Scalar { re, im: Rational::ZERO }
    }

    pub fn int(n: i64) -> Self {
        Scalar::real(Rational::from_integer(n))
    }

    /// `n / d` as a real scalar. Panics when `d == 0`.
    pub fn ratio(n: i64, d: i64) -> Self {
        Scalar::real(Rational::new(n, d).expect("zero denominator"))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Scalar { re: self.re.clone(), im: -&self.im }
    }

    /// `|z|² = re² + im²`.
    pub fn norm_sqr(&self) -> Rational {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.is_real() {
            return Some(Scalar::real(self.re.recip()?));
        }
        let n = self.norm_sqr().recip()?;
        Some(Scalar { re: &self.re * &n, im: -(&self.im * &n) })
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Scalar::ONE;
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `self -= a * b`
    pub fn sub_mul(&mut self, a: &Scalar, b: &Scalar) {
        if a.is_real() && b.is_real() && self.is_real() {
            self.re = &self.re - &(&a.re * &b.re);
        } else {
            *self = &*self - &(a * b);
        }
    }

    /// `self += a * b` without intermediate clones on the real fast path.
    pub fn add_mul(&mut self, a: &Scalar, b: &Scalar) {
        if a.is_real() && b.is_real() && self.is_real() {
            self.re = &self.re + &(&a.re * &b.re);
        } else {
            *self = &*self + &(a * b);
        }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::real(r)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        if self.is_real() && rhs.is_real() {
            return Scalar::real(&self.re + &rhs.re);
        }
        Scalar { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        if self.is_real() && rhs.is_real() {
            return Scalar::real(&self.re - &rhs.re);
        }
        Scalar { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        if self.is_real() && rhs.is_real() {
            return Scalar::real(&self.re * &rhs.re);
        }
        Scalar {
            re: &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            im: &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    /// Panics on division by zero.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &'a Scalar) -> Scalar {
        self * &rhs.inv().expect("scalar division by zero")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -&self.re, im: -&self.im }
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl fmt::Display for Scalar {
    /// Canonical text: `RAT`, `RATi`, or `RAT±URATi`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            return write!(f, "{}i", self.im);
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "{}{sign}{}i", self.re, self.im.abs())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_imag_coeff(s: &str, negative: bool) -> Option<Rational> {
    let r = parse_unsigned(s)?;
    Some(if negative { -r } else { r })
}

impl FromStr for Scalar {
    type Err = ParseScalarError;

    /// `SCALAR := RAT | RAT "i" | RAT ("+"|"-") UNSIGNED-RAT "i"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseScalarError { token: s.into() };
        let Some(body) = s.strip_suffix('i') else {
            return Ok(Scalar::real(s.parse::<Rational>().map_err(|_| err())?));
        };
        // the separator between real and imaginary parts is the last sign
        // that is not in leading position
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last();
        match split {
            Some(pos) => {
                let re: Rational = body[..pos].parse().map_err(|_| err())?;
                let negative = &body[pos..pos + 1] == "-";
                let im = parse_imag_coeff(&body[pos + 1..], negative).ok_or_else(err)?;
                Ok(Scalar { re, im })
            }
            None => {
                let (negative, mag) = match body.strip_prefix('-') {
                    Some(rest) => (true, rest),
                    None => (false, body),
                };
                let im = parse_imag_coeff(mag, negative).ok_or_else(err)?;
                Ok(Scalar { re: Rational::ZERO, im })
            }
        }
    }
}
