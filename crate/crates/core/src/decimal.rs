//! Fixed-point decimals over arbitrary-precision integers.
//!
//! A [`Decimal`] is `mantissa * 10^-scale`. Addition, subtraction and
//! multiplication are exact; division and square roots take an explicit
//! target scale and round to nearest (ties away from zero).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{Pow, Signed, Zero};

#[derive(Debug, Clone)]
pub struct Decimal {
    mantissa: BigInt,
    scale: u32,
}

fn pow10(exp: u32) -> BigInt {
    BigInt::from(10u32).pow(exp)
}

/// `num / den` rounded to nearest, ties away from zero. `den` must be nonzero.
fn div_round(num: &BigInt, den: &BigInt) -> BigInt {
    let (q, r) = num.div_rem(den);
    if (r.abs() << 1usize) >= den.abs() {
        if (num.sign() == Sign::Minus) != (den.sign() == Sign::Minus) {
            q - 1
        } else {
            q + 1
        }
    } else {
        q
    }
}

impl Decimal {
    pub fn new(mantissa: BigInt, scale: u32) -> Self {
        Decimal { mantissa, scale }
    }

    pub fn zero() -> Self {
        Decimal::new(BigInt::zero(), 0)
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Decimal::new(n.into(), 0)
    }

    /// `10^-exp`.
    pub fn epsilon(exp: u32) -> Self {
        Decimal::new(BigInt::from(1), exp)
    }

    /// `num / den` rounded at `scale` fractional digits.
    pub fn from_ratio(num: impl Into<BigInt>, den: impl Into<BigInt>, scale: u32) -> Self {
        let den = den.into();
        assert!(!den.is_zero(), "division by zero");
        Decimal::new(div_round(&(num.into() * pow10(scale)), &den), scale)
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    /// Same value rounded (or exactly padded) to `scale` fractional digits.
    pub fn rescale(&self, scale: u32) -> Self {
        match scale.cmp(&self.scale) {
            Ordering::Equal => self.clone(),
            Ordering::Greater => Decimal::new(&self.mantissa * pow10(scale - self.scale), scale),
            Ordering::Less => {
                Decimal::new(div_round(&self.mantissa, &pow10(self.scale - scale)), scale)
            }
        }
    }

    /// Drops everything past `scale` fractional digits.
    pub fn truncate(&self, scale: u32) -> Self {
        if scale >= self.scale {
            return self.clone();
        }
        // BigInt division truncates toward zero
        Decimal::new(&self.mantissa / pow10(self.scale - scale), scale)
    }

    pub fn div(&self, other: &Decimal, scale: u32) -> Self {
        assert!(!other.mantissa.is_zero(), "division by zero");
        // (a / 10^s) / (b / 10^t) = a * 10^t / (b * 10^s)
        let num = &self.mantissa * pow10(other.scale + scale);
        let den = &other.mantissa * pow10(self.scale);
        Decimal::new(div_round(&num, &den), scale)
    }

    /// Square root rounded to nearest at `scale` fractional digits.
    ///
    /// Panics on negative input.
    pub fn sqrt(&self, scale: u32) -> Self {
        assert!(!self.is_negative(), "square root of a negative decimal");
        let radicand = self.rescale(2 * scale).mantissa;
        let n = radicand.magnitude();
        let root = n.sqrt();
        // round up when n > root^2 + root, i.e. n >= (root + 1/2)^2
        let root: BigUint = if n > &(&root * &root + &root) {
            root + 1u32
        } else {
            root
        };
        Decimal::new(BigInt::from(root), scale)
    }

    pub fn abs(&self) -> Self {
        Decimal::new(self.mantissa.abs(), self.scale)
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    /// `-1`, `0` or `1`.
    pub fn signum(&self) -> i8 {
        match self.mantissa.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    /// Position of the leading digit: `v` lies in `[10^e, 10^(e+1))`.
    /// `None` for zero.
    fn exponent(&self) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        let digits = self.mantissa.magnitude().to_str_radix(10).len() as i64;
        Some(digits - 1 - i64::from(self.scale))
    }

    /// Fractional digits needed to keep `digits` significant digits.
    fn significant_scale(&self, digits: u32) -> Option<u32> {
        let exp = self.exponent()?;
        let scale = i64::from(digits) - 1 - exp;
        Some(scale.clamp(0, i64::from(self.scale)) as u32)
    }

    /// Rounds to `digits` significant digits. Never adds precision the value
    /// does not already carry and never rounds into the integer part.
    pub fn round_significant(&self, digits: u32) -> Self {
        match self.significant_scale(digits) {
            Some(scale) => {
                let rounded = self.rescale(scale);
                // rounding can carry into a new leading digit (9.99 -> 10.0)
                match rounded.significant_scale(digits) {
                    Some(s) if s < scale => rounded.rescale(s),
                    _ => rounded,
                }
            }
            None => self.clone(),
        }
    }

    /// Truncates to `digits` significant digits.
    pub fn truncate_significant(&self, digits: u32) -> Self {
        match self.significant_scale(digits) {
            Some(scale) => self.truncate(scale),
            None => self.clone(),
        }
    }
}

impl PartialEq for Decimal {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Decimal {}

impl PartialOrd for Decimal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Decimal {
    fn cmp(&self, other: &Self) -> Ordering {
        let scale = self.scale.max(other.scale);
        self.rescale(scale)
            .mantissa
            .cmp(&other.rescale(scale).mantissa)
    }
}

impl Add for &Decimal {
    type Output = Decimal;

    fn add(self, rhs: &Decimal) -> Decimal {
        let scale = self.scale.max(rhs.scale);
        Decimal::new(
            self.rescale(scale).mantissa + rhs.rescale(scale).mantissa,
            scale,
        )
    }
}

impl Sub for &Decimal {
    type Output = Decimal;

    fn sub(self, rhs: &Decimal) -> Decimal {
        self + &(-rhs)
    }
}

impl Mul for &Decimal {
    type Output = Decimal;

    fn mul(self, rhs: &Decimal) -> Decimal {
        Decimal::new(&self.mantissa * &rhs.mantissa, self.scale + rhs.scale)
    }
}

impl Neg for &Decimal {
    type Output = Decimal;

    fn neg(self) -> Decimal {
        Decimal::new(-&self.mantissa, self.scale)
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for Decimal {
            type Output = Decimal;
            fn $m(self, rhs: Decimal) -> Decimal {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl fmt::Display for Decimal {
    /// Plain positional notation, `scale` digits after the point.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = self.mantissa.magnitude().to_str_radix(10);
        let sign = if self.is_negative() { "-" } else { "" };
        let scale = self.scale as usize;
        if scale == 0 {
            return write!(f, "{sign}{digits}");
        }
        let padded = if digits.len() <= scale {
            format!("{}{}", "0".repeat(scale + 1 - digits.len()), digits)
        } else {
            digits
        };
        let (int, frac) = padded.split_at(padded.len() - scale);
        write!(f, "{sign}{int}.{frac}")
    }
}
