//! Hippasus numbers: positive `beta` for which some `alpha >= beta` gives
//! `beta * (beta + alpha) - alpha^2 = ±1`.
//!
//! Every Hippasus number is a Fibonacci number and vice versa. The
//! subtractive descent `(beta, alpha) -> (alpha - beta, beta)` decides
//! membership and recovers the Fibonacci index on the way down.

use std::fmt;

use num_bigint::Sign as BigSign;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::fibonacci::{fib, FibIndex, Natural, SignedInt};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HippasusError {
    #[error("{0} is not a Hippasus number")]
    NotHippasus(Natural),
    #[error("1 has two Hippasus successors (1 and 2)")]
    Ambiguous,
    #[error("({beta}, {alpha}) is not a Hippasus pair")]
    InvalidPair { beta: Natural, alpha: Natural },
    #[error("the pair (1, 1) has no predecessor")]
    NoPredecessor,
}

/// The value `(-1)^gamma` a Hippasus pair lands on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn negate(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// `(-1)^exponent`.
    pub fn from_parity(exponent: u64) -> Sign {
        if exponent.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn from_residual(residual: &SignedInt) -> Option<Sign> {
        if residual.is_one() {
            Some(Sign::Plus)
        } else if *residual == SignedInt::from(-1) {
            Some(Sign::Minus)
        } else {
            None
        }
    }

    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn to_signed(self) -> SignedInt {
        SignedInt::from(self.to_i8())
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// Both operands fit comfortably in `i128` arithmetic below this bound.
const SMALL_BOUND: u64 = 1 << 62;

fn small(n: &Natural) -> Option<i128> {
    n.to_u64().filter(|&v| v < SMALL_BOUND).map(i128::from)
}

/// `beta * (beta + alpha) - alpha^2`, exactly.
pub fn hippasus_residual(beta: &Natural, alpha: &Natural) -> SignedInt {
    if let (Some(b), Some(a)) = (small(beta), small(alpha)) {
        return SignedInt::from(b * (b + a) - a * a);
    }
    let lhs = beta * (beta + alpha);
    SignedInt::from(lhs) - SignedInt::from(alpha * alpha)
}

/// Residual as a small integer when it is one of `-1, 0, 1`, otherwise its
/// sign clamped to `±2`. Enough for every decision the search makes.
fn clamped_residual(beta: &Natural, alpha: &Natural) -> i8 {
    if let (Some(b), Some(a)) = (small(beta), small(alpha)) {
        return (b * (b + a) - a * a).clamp(-2, 2) as i8;
    }
    let r = hippasus_residual(beta, alpha);
    match r.to_i8() {
        Some(v) => v.clamp(-2, 2),
        None if r.sign() == BigSign::Minus => -2,
        None => 2,
    }
}

pub fn is_hippasus_pair(beta: &Natural, alpha: &Natural) -> bool {
    !beta.is_zero() && alpha >= beta && clamped_residual(beta, alpha).abs() == 1
}

/// A certified `(beta, alpha)` with `beta * (beta + alpha) - alpha^2 = sign`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HippasusPair {
    beta: Natural,
    alpha: Natural,
    sign: Sign,
}

impl HippasusPair {
    pub fn new(beta: Natural, alpha: Natural) -> Result<Self, HippasusError> {
        let sign = if beta.is_zero() || alpha < beta {
            None
        } else {
            Sign::from_residual(&hippasus_residual(&beta, &alpha))
        };
        match sign {
            Some(sign) => Ok(HippasusPair { beta, alpha, sign }),
            None => Err(HippasusError::InvalidPair { beta, alpha }),
        }
    }

    /// The base pair `(1, 1)` with residual `+1`.
    pub fn base() -> Self {
        HippasusPair {
            beta: Natural::one(),
            alpha: Natural::one(),
            sign: Sign::Plus,
        }
    }

    pub fn beta(&self) -> &Natural {
        &self.beta
    }

    pub fn alpha(&self) -> &Natural {
        &self.alpha
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn into_parts(self) -> (Natural, Natural, Sign) {
        (self.beta, self.alpha, self.sign)
    }
}

impl fmt::Display for HippasusPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.beta, self.alpha, self.sign)
    }
}

/// All Hippasus successors of `beta`, ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuccessorSet {
    pub beta: Natural,
    pub successors: Vec<Natural>,
}

impl SuccessorSet {
    pub fn is_empty(&self) -> bool {
        self.successors.is_empty()
    }

    pub fn len(&self) -> usize {
        self.successors.len()
    }
}

/// Hippasus successors of `beta`.
///
/// For `beta = 1` only `alpha` in `{1, 2}` can work. For `beta >= 2` the
/// successor lies in `[beta + 1, 2 * beta - 1]`. On that window the residual
/// falls by at least `beta + 3` per unit step of `alpha`, so at most one
/// `alpha` lands on `±1` and bisection for the first `alpha` with residual
/// `<= 1` finds it. [`successors_by_scan`] is the plain window scan.
pub fn successors(beta: &Natural) -> SuccessorSet {
    let mut found = Vec::new();
    if beta.is_one() {
        found.extend(
            [1u32, 2]
                .into_iter()
                .map(Natural::from)
                .filter(|a| is_hippasus_pair(beta, a)),
        );
    } else if let Some(b) = small(beta) {
        found.extend(successor_small(b).map(|a| Natural::from(a as u128)));
    } else if !beta.is_zero() {
        let mut lo = beta + 1u32;
        let mut hi: Natural = (beta << 1usize) - 1u32;
        if clamped_residual(beta, &hi) <= 1 {
            // first alpha in [lo, hi] with residual <= 1
            while lo < hi {
                let mid: Natural = (&lo + &hi) >> 1usize;
                if clamped_residual(beta, &mid) <= 1 {
                    hi = mid;
                } else {
                    lo = mid + 1u32;
                }
            }
            if clamped_residual(beta, &lo).abs() == 1 {
                found.push(lo);
            }
        }
    }
    SuccessorSet {
        beta: beta.clone(),
        successors: found,
    }
}

/// [`successors`] for `2 <= beta < 2^62`, same bisection in `i128`.
fn successor_small(beta: i128) -> Option<i128> {
    if beta < 2 {
        return None;
    }
    let residual = |a: i128| beta * (beta + a) - a * a;
    let (mut lo, mut hi) = (beta + 1, 2 * beta - 1);
    if residual(hi) > 1 {
        return None;
    }
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if residual(mid) <= 1 {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    (residual(lo).abs() == 1).then_some(lo)
}

/// Linear scan of the successor window. Quadratic over a range of `beta`;
/// kept as the reference the bisection in [`successors`] is checked against.
pub fn successors_by_scan(beta: &Natural) -> SuccessorSet {
    let mut found = Vec::new();
    if beta.is_one() {
        found.extend(
            [1u32, 2]
                .into_iter()
                .map(Natural::from)
                .filter(|a| is_hippasus_pair(beta, a)),
        );
    } else if !beta.is_zero() {
        let mut alpha = beta + 1u32;
        let end: Natural = beta << 1usize;
        while alpha < end {
            if is_hippasus_pair(beta, &alpha) {
                found.push(alpha.clone());
            }
            alpha += 1u32;
        }
    }
    SuccessorSet {
        beta: beta.clone(),
        successors: found,
    }
}

/// The single successor of a Hippasus number `beta >= 2`.
pub fn unique_successor(beta: &Natural) -> Result<Natural, HippasusError> {
    if beta.is_one() {
        return Err(HippasusError::Ambiguous);
    }
    successors(beta)
        .successors
        .pop()
        .ok_or_else(|| HippasusError::NotHippasus(beta.clone()))
}

/// `(beta, alpha) -> (alpha - beta, beta)`, flipping the sign.
pub fn predecessor(pair: &HippasusPair) -> Result<HippasusPair, HippasusError> {
    if pair.alpha <= pair.beta {
        return Err(HippasusError::NoPredecessor);
    }
    Ok(HippasusPair {
        beta: &pair.alpha - &pair.beta,
        alpha: pair.beta.clone(),
        sign: pair.sign.negate(),
    })
}

/// `(beta, alpha) -> (alpha, alpha + beta)`, flipping the sign.
pub fn extend(pair: &HippasusPair) -> HippasusPair {
    HippasusPair {
        beta: pair.alpha.clone(),
        alpha: &pair.alpha + &pair.beta,
        sign: pair.sign.negate(),
    }
}

/// The strictly decreasing chain `beta_1 > beta_2 > ...` produced by the
/// subtractive descent, closed by the repeated `1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentTrace {
    pub steps: Vec<Natural>,
    pub recovered_index: FibIndex,
}

impl DescentTrace {
    pub fn start(&self) -> &Natural {
        &self.steps[0]
    }
}

/// Runs the subtractive descent from `beta`.
///
/// Returns `None` when `beta` has no Hippasus successor. `beta = 1` yields
/// the one-element trace `[1]` with index 0. Otherwise the map
/// `(beta, alpha) -> (alpha - beta, beta)` runs until both entries agree
/// (which only happens at `(1, 1)`); a trace of length `L` starts at
/// `F_{L-1}`.
pub fn descend(beta: &Natural) -> Option<DescentTrace> {
    if beta.is_zero() {
        return None;
    }
    if beta.is_one() {
        return Some(DescentTrace {
            steps: vec![Natural::one()],
            recovered_index: FibIndex::ZERO,
        });
    }
    let alpha = unique_successor(beta).ok()?;

    let mut steps = vec![beta.clone()];
    let mut upper = alpha;
    let mut lower = beta.clone();
    loop {
        let next = &upper - &lower;
        debug_assert!(next <= lower && !next.is_zero());
        let done = next == lower;
        steps.push(next.clone());
        if done {
            break;
        }
        upper = std::mem::replace(&mut lower, next);
    }

    let recovered_index = FibIndex::new(steps.len() as u64 - 1).ok()?;
    assert_eq!(
        &fib(recovered_index),
        beta,
        "descent index disagrees with the Fibonacci sequence"
    );
    Some(DescentTrace {
        steps,
        recovered_index,
    })
}

pub fn is_fibonacci_by_descent(beta: &Natural) -> bool {
    descend(beta).is_some()
}

/// First `(beta, alpha)` in `beta ∈ [1, max_beta]`, `alpha ∈ [beta, 2 * beta]`
/// with `beta * (beta + alpha) = alpha^2`, in lexicographic order.
pub fn find_exact_solution(max_beta: u64) -> Option<(u64, u64)> {
    (1..=max_beta).find_map(|beta| {
        if beta < SMALL_BOUND {
            exact_alpha_small(beta).map(|alpha| (beta, alpha))
        } else {
            exact_alpha_big(beta).map(|alpha| (beta, alpha))
        }
    })
}

/// Exhaustive check that `beta * (beta + alpha) = alpha^2` has no solution
/// with `beta <= max_beta` and `beta <= alpha <= 2 * beta`.
pub fn verify_no_exact_solution(max_beta: u64) -> bool {
    find_exact_solution(max_beta).is_none()
}

fn exact_alpha_small(beta: u64) -> Option<u64> {
    let b = i128::from(beta);
    // residual(beta, beta) = beta^2; stepping alpha adds beta - 2 alpha - 1
    let mut residual = b * b;
    for alpha in beta..=2 * beta {
        if residual == 0 {
            return Some(alpha);
        }
        residual += b - 2 * i128::from(alpha) - 1;
    }
    None
}

fn exact_alpha_big(beta: u64) -> Option<u64> {
    let b = Natural::from(beta);
    (beta..=beta.saturating_mul(2))
        .find(|&alpha| hippasus_residual(&b, &Natural::from(alpha)).is_zero())
}
