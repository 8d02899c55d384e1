//! Wasteels' criterion: positive `x <= y` with `y^2 - xy - x^2 = ±1` are
//! consecutive Fibonacci numbers, and only those.

use num_traits::{One, Signed};

use crate::fibonacci::{fib_index_of, FibIndex, Natural, SignedInt};

/// `y^2 - x*y - x^2`. Equal to `-hippasus_residual(x, y)`.
pub fn wasteels_residual(x: &Natural, y: &Natural) -> SignedInt {
    let y2 = SignedInt::from(y * y);
    y2 - SignedInt::from(x * y) - SignedInt::from(x * x)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WasteelsVerdict {
    pub x: Natural,
    pub y: Natural,
    pub residual: SignedInt,
    pub consecutive: bool,
    /// `(i, i + 1)` with `F_i = x`, `F_{i+1} = y`, present iff `consecutive`.
    pub indices: Option<(FibIndex, FibIndex)>,
}

/// Decides whether `(x, y)` is a pair of consecutive Fibonacci numbers from
/// the residual alone. Order matters: `(3, 2)` is rejected.
pub fn classify(x: &Natural, y: &Natural) -> WasteelsVerdict {
    let residual = wasteels_residual(x, y);
    let consecutive = x <= y && residual.abs().is_one();
    let indices = if consecutive {
        pair_indices(x, y)
    } else {
        None
    };
    WasteelsVerdict {
        x: x.clone(),
        y: y.clone(),
        residual,
        consecutive,
        indices,
    }
}

fn pair_indices(x: &Natural, y: &Natural) -> Option<(FibIndex, FibIndex)> {
    // 1 sits at both index 0 and 1; the partner disambiguates.
    let first = if x.is_one() && *y == Natural::from(2u32) {
        FibIndex::new(1).ok()?
    } else {
        fib_index_of(x)?
    };
    Some((first, first.next().ok()?))
}
