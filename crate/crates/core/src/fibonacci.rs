//! Fibonacci numbers under the `F_0 = 1, F_1 = 1` indexing.
//!
//! Everything in this crate uses that convention: `F_2 = 2`, `F_3 = 3`,
//! `F_10 = 89`. The value `1` therefore occurs at two indices, 0 and 1.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

/// Arbitrary-precision non-negative integer.
pub type Natural = BigUint;

/// Arbitrary-precision signed integer.
pub type SignedInt = BigInt;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FibError {
    #[error("Fibonacci index {index} exceeds the supported maximum {max}")]
    IndexOutOfRange { index: u64, max: u32 },
}

/// Index into the Fibonacci sequence, capped at [`FibIndex::MAX`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FibIndex(u32);

impl FibIndex {
    pub const MAX: u32 = 1_000_000;
    pub const ZERO: FibIndex = FibIndex(0);

    pub fn new(index: u64) -> Result<Self, FibError> {
        if index > u64::from(Self::MAX) {
            return Err(FibError::IndexOutOfRange {
                index,
                max: Self::MAX,
            });
        }
        Ok(FibIndex(index as u32))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// The following index, if it is still in range.
    pub fn next(self) -> Result<Self, FibError> {
        Self::new(u64::from(self.0) + 1)
    }
}

impl TryFrom<u64> for FibIndex {
    type Error = FibError;

    fn try_from(index: u64) -> Result<Self, FibError> {
        Self::new(index)
    }
}

impl fmt::Display for FibIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Number of leading terms that fit in a `u64` (`F_92` is the last one).
const SMALL_LEN: usize = 93;

const fn small_table() -> [u64; SMALL_LEN] {
    let mut t = [1u64; SMALL_LEN];
    let mut i = 2;
    while i < SMALL_LEN {
        t[i] = t[i - 2] + t[i - 1];
        i += 1;
    }
    t
}

static SMALL: [u64; SMALL_LEN] = small_table();

/// Returns `F_i`.
pub fn fib(i: FibIndex) -> Natural {
    fib_pair(i.0).0
}

/// `(F_i, F_{i+1})` by fast doubling on the conventional sequence, where
/// `F_i` here equals `Fib(i + 1)` there.
pub(crate) fn fib_pair(i: u32) -> (Natural, Natural) {
    if (i as usize) + 1 < SMALL_LEN {
        let i = i as usize;
        return (Natural::from(SMALL[i]), Natural::from(SMALL[i + 1]));
    }
    // (Fib(k), Fib(k+1)) for k = i + 1
    let k = u64::from(i) + 1;
    let mut a = Natural::zero();
    let mut b = Natural::one();
    for bit in (0..64 - k.leading_zeros()).rev() {
        // Fib(2m) = Fib(m) * (2 Fib(m+1) - Fib(m)), Fib(2m+1) = Fib(m)^2 + Fib(m+1)^2
        let two_b = &b << 1usize;
        let c = &a * (two_b - &a);
        let d = &a * &a + &b * &b;
        if (k >> bit) & 1 == 0 {
            a = c;
            b = d;
        } else {
            b = &c + &d;
            a = d;
        }
    }
    (a, b)
}

/// Smallest `i` with `F_i = n`, or `None` if `n` is not a Fibonacci number.
///
/// For `n = 1` this returns index 0; index 1 also holds the value 1.
pub fn fib_index_of(n: &Natural) -> Option<FibIndex> {
    if let Some(small) = n.to_u64() {
        let pos = SMALL.partition_point(|&f| f < small);
        return (pos < SMALL_LEN && SMALL[pos] == small).then_some(FibIndex(pos as u32));
    }
    let mut index = SMALL_LEN as u32 - 1;
    let mut a = Natural::from(SMALL[SMALL_LEN - 2]);
    let mut b = Natural::from(SMALL[SMALL_LEN - 1]);
    while &b < n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
        index += 1;
        if index > FibIndex::MAX {
            return None;
        }
    }
    (&b == n).then_some(FibIndex(index))
}

/// Whether `(x, y) = (F_i, F_{i+1})` for some `i`, decided by scanning the
/// sequence. Both `(1, 1)` and `(1, 2)` qualify.
pub fn is_consecutive_fib(x: &Natural, y: &Natural) -> bool {
    if let (Some(x), Some(y)) = (x.to_u64(), y.to_u64()) {
        return SMALL
            .windows(2)
            .take_while(|w| w[0] <= x)
            .any(|w| w[0] == x && w[1] == y);
    }
    if y < x {
        return false;
    }
    let mut a = Natural::from(SMALL[SMALL_LEN - 2]);
    let mut b = Natural::from(SMALL[SMALL_LEN - 1]);
    while &a <= x {
        if &a == x {
            return &b == y;
        }
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    false
}

/// `F_i * F_{i+2} - F_{i+1}^2`, which the Cassini identity pins to `(-1)^i`.
pub fn cassini_residual(i: FibIndex) -> SignedInt {
    let (a, b) = fib_pair(i.0);
    let c = &a + &b;
    SignedInt::from(a * c) - SignedInt::from(&b * &b)
}
