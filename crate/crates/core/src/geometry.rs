//! Golden-ratio convergence of `F_{n+1} / F_n` and the octagon cut from a
//! circle of diameter `F_{n+2}` by the four tangents to a concentric circle
//! of diameter `F_n`.
//!
//! All real arithmetic runs on [`Decimal`] at `digits + GUARD_DIGITS`
//! fractional digits. Octagon fields are rounded to `digits` fractional
//! digits, everything else to `digits` significant digits.

use num_bigint::BigInt;
use thiserror::Error;

use crate::decimal::Decimal;
use crate::fibonacci::{fib_pair, FibIndex, Natural};

/// Extra fractional digits carried through intermediate steps.
pub const GUARD_DIGITS: u32 = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("precision of {digits} digits is too low (need at least {required})")]
    PrecisionTooLow { digits: u32, required: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrecisionConfig {
    digits: u32,
}

impl PrecisionConfig {
    pub const MIN_DIGITS: u32 = 15;
    pub const DEFAULT_DIGITS: u32 = 50;

    pub fn new(digits: u32) -> Result<Self, GeometryError> {
        if digits < Self::MIN_DIGITS {
            return Err(GeometryError::PrecisionTooLow {
                digits,
                required: Self::MIN_DIGITS,
            });
        }
        Ok(PrecisionConfig { digits })
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    fn scale(&self) -> u32 {
        self.digits + GUARD_DIGITS
    }
}

impl Default for PrecisionConfig {
    fn default() -> Self {
        PrecisionConfig {
            digits: Self::DEFAULT_DIGITS,
        }
    }
}

fn phi_at(scale: u32) -> Decimal {
    let root5 = Decimal::from_integer(5).sqrt(scale + 1);
    (&root5 + &Decimal::from_integer(1)).div(&Decimal::from_integer(2), scale)
}

/// `(1 + sqrt 5) / 2` to `cfg.digits` significant digits.
pub fn phi(cfg: &PrecisionConfig) -> Decimal {
    phi_at(cfg.scale()).round_significant(cfg.digits)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvergenceRow {
    pub n: FibIndex,
    /// `F_{n+1} / F_n`
    pub ratio: Decimal,
    /// `phi - ratio`
    pub error: Decimal,
}

/// `F_{n+1} / F_n` and its distance to phi for `n = 0..=n_max`.
///
/// Requires `F_{n_max} < 10^(digits - 10)` so the quotients stay resolvable.
pub fn convergence_table(
    n_max: FibIndex,
    cfg: &PrecisionConfig,
) -> Result<Vec<ConvergenceRow>, GeometryError> {
    let (top, _) = fib_pair(n_max.get());
    let limit = BigInt::from(10u32).pow(cfg.digits.saturating_sub(10));
    if BigInt::from(top.clone()) >= limit {
        let required = top.to_str_radix(10).len() as u32 + 10;
        return Err(GeometryError::PrecisionTooLow {
            digits: cfg.digits,
            required,
        });
    }
    let scale = cfg.scale();
    let phi = phi_at(scale);
    let rows = (0..=n_max.get())
        .map(|n| {
            let (a, b) = fib_pair(n);
            let ratio = Decimal::from_ratio(b, a, scale);
            let error = &phi - &ratio;
            ConvergenceRow {
                n: FibIndex::new(u64::from(n)).expect("n <= n_max"),
                ratio: ratio.round_significant(cfg.digits),
                error: error.round_significant(cfg.digits),
            }
        })
        .collect();
    Ok(rows)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Point {
    pub x: Decimal,
    pub y: Decimal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OctagonGeometry {
    pub n: FibIndex,
    pub f_n: Natural,
    pub f_n2: Natural,
    /// `(F_n / 2, sqrt((F_{n+2} / 2)^2 - (F_n / 2)^2))`
    pub p: Point,
    /// `p` with its coordinates swapped.
    pub q: Point,
    /// Side `PQ` of the octagon, `sqrt 2 * (p.y - p.x)`.
    pub d: Decimal,
    /// Side of the regular octagon inscribed in the circle of diameter
    /// `F_{n+2}`: `(F_{n+2} / 2) * sqrt(2 - sqrt 2)`.
    pub e: Decimal,
    pub ratio_d_over_f: Decimal,
    pub ratio_d_over_e: Decimal,
    pub ratio_e_over_f: Decimal,
}

pub fn octagon(n: FibIndex, cfg: &PrecisionConfig) -> OctagonGeometry {
    let scale = cfg.scale();
    let (f_n, f_n1) = fib_pair(n.get());
    let f_n2 = &f_n + &f_n1;
    let inner = BigInt::from(f_n.clone());
    let outer = BigInt::from(f_n2.clone());

    let px = Decimal::from_ratio(inner.clone(), 2, scale);
    let py = Decimal::from_ratio(&outer * &outer - &inner * &inner, 4, scale).sqrt(scale);
    let root2 = Decimal::from_integer(2).sqrt(scale);
    let d = (&root2 * &(&py - &px)).rescale(scale);
    let octagon_factor = (&Decimal::from_integer(2) - &root2).sqrt(scale);
    let e = (&Decimal::from_ratio(outer, 2, scale) * &octagon_factor).rescale(scale);

    let f = Decimal::from_integer(inner);
    let ratio_d_over_f = d.div(&f, scale);
    let ratio_d_over_e = d.div(&e, scale);
    let ratio_e_over_f = e.div(&f, scale);

    // absolute accuracy matters here: coordinates grow like F_n
    let r = |v: &Decimal| v.rescale(cfg.digits);
    OctagonGeometry {
        n,
        f_n,
        f_n2,
        p: Point {
            x: r(&px),
            y: r(&py),
        },
        q: Point {
            x: r(&py),
            y: r(&px),
        },
        d: r(&d),
        e: r(&e),
        ratio_d_over_f: r(&ratio_d_over_f),
        ratio_d_over_e: r(&ratio_d_over_e),
        ratio_e_over_f: r(&ratio_e_over_f),
    }
}

/// Limits of the three octagon ratios as `n` grows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OctagonLimits {
    /// `(sqrt 2 / 2) (sqrt(phi^4 - 1) - 1)`
    pub d_over_f: Decimal,
    /// `(sqrt 2 / sqrt(2 - sqrt 2)) (sqrt(1 - phi^-4) - phi^-2)`
    pub d_over_e: Decimal,
    /// `(sqrt(2 - sqrt 2) / 2) phi^2`
    pub e_over_f: Decimal,
}

pub fn octagon_limits(cfg: &PrecisionConfig) -> OctagonLimits {
    let scale = cfg.scale();
    let one = Decimal::from_integer(1);
    let two = Decimal::from_integer(2);

    let phi = phi_at(scale);
    let phi2 = (&phi * &phi).rescale(scale);
    let phi4 = (&phi2 * &phi2).rescale(scale);
    let inv_phi2 = one.div(&phi2, scale);
    let inv_phi4 = one.div(&phi4, scale);
    let root2 = two.sqrt(scale);
    let octagon_factor = (&two - &root2).sqrt(scale);

    let d_over_f = (&root2.div(&two, scale) * &(&(&phi4 - &one).sqrt(scale) - &one)).rescale(scale);
    let d_over_e = (&root2.div(&octagon_factor, scale)
        * &(&(&one - &inv_phi4).sqrt(scale) - &inv_phi2))
        .rescale(scale);
    let e_over_f = (&octagon_factor.div(&two, scale) * &phi2).rescale(scale);

    OctagonLimits {
        d_over_f: d_over_f.round_significant(cfg.digits),
        d_over_e: d_over_e.round_significant(cfg.digits),
        e_over_f: e_over_f.round_significant(cfg.digits),
    }
}
