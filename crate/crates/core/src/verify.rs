//! Range checks behind `verify`: each returns how many cases it checked, or
//! the smallest counterexample.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::fibonacci::{cassini_residual, fib_index_of, fib_pair, FibIndex, Natural};
use crate::geometry::{convergence_table, PrecisionConfig};
use crate::hippasus::{find_exact_solution, is_fibonacci_by_descent, successors, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    /// `F_i F_{i+2} - F_{i+1}^2 = (-1)^i` for `i` in `0..=bound`
    Cassini,
    /// descent, successor search and sequence membership agree on `1..=bound`
    Equivalence,
    /// `beta (beta + alpha) = alpha^2` has no solution with `beta <= bound`
    Parity,
    /// `|phi - F_{n+1}/F_n|` shrinks and alternates in sign for `n` in `1..=bound`
    Convergence,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Counterexample {
    Cassini {
        index: u64,
        residual: BigInt,
    },
    Equivalence {
        beta: u64,
        descent: bool,
        search: bool,
        sequence: bool,
    },
    Parity {
        beta: u64,
        alpha: u64,
    },
    Convergence {
        n: u64,
        reason: &'static str,
    },
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Counterexample::Cassini { index, residual } => {
                write!(f, "cassini residual at i = {index} is {residual}")
            }
            Counterexample::Equivalence {
                beta,
                descent,
                search,
                sequence,
            } => write!(
                f,
                "beta = {beta}: descent {descent}, successor search {search}, sequence {sequence}"
            ),
            Counterexample::Parity { beta, alpha } => {
                write!(f, "{beta} * ({beta} + {alpha}) = {alpha}^2")
            }
            Counterexample::Convergence { n, reason } => write!(f, "n = {n}: {reason}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("bound {bound} is too large for the {suite} suite (max {max})")]
    BoundTooLarge {
        suite: &'static str,
        bound: u64,
        max: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass { checked: u64 },
    Fail(Counterexample),
}

pub fn run(suite: Suite, bound: u64) -> Result<Outcome, VerifyError> {
    match suite {
        Suite::Cassini => cassini(bound),
        Suite::Equivalence => {
            Ok(equivalence(bound)
                .map_or_else(Outcome::Fail, |s| Outcome::Pass { checked: s.checked }))
        }
        Suite::Parity => Ok(parity(bound)),
        Suite::Convergence => convergence(bound),
    }
}

pub fn cassini(bound: u64) -> Result<Outcome, VerifyError> {
    let max = u64::from(FibIndex::MAX);
    if bound > max {
        return Err(VerifyError::BoundTooLarge {
            suite: "cassini",
            bound,
            max,
        });
    }
    for i in 0..=bound {
        let index = FibIndex::new(i).expect("bounded above");
        let residual = cassini_residual(index);
        if residual != Sign::from_parity(i).to_signed() {
            return Ok(Outcome::Fail(Counterexample::Cassini {
                index: i,
                residual,
            }));
        }
    }
    Ok(Outcome::Pass { checked: bound + 1 })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EquivalenceSummary {
    pub checked: u64,
    /// Values in range that are Fibonacci numbers (1 counted once).
    pub positives: u64,
}

/// Three independent membership decisions over `1..=bound`.
pub fn equivalence(bound: u64) -> Result<EquivalenceSummary, Counterexample> {
    let mut positives = 0;
    for beta in 1..=bound {
        let n = Natural::from(beta);
        let descent = is_fibonacci_by_descent(&n);
        let search = !successors(&n).is_empty();
        let sequence = fib_index_of(&n).is_some();
        if descent != search || search != sequence {
            return Err(Counterexample::Equivalence {
                beta,
                descent,
                search,
                sequence,
            });
        }
        positives += u64::from(descent);
    }
    Ok(EquivalenceSummary {
        checked: bound,
        positives,
    })
}

pub fn parity(bound: u64) -> Outcome {
    match find_exact_solution(bound) {
        Some((beta, alpha)) => Outcome::Fail(Counterexample::Parity { beta, alpha }),
        None => Outcome::Pass { checked: bound },
    }
}

/// Runs at 50 digits, or more when `F_bound` needs them.
pub fn convergence(bound: u64) -> Result<Outcome, VerifyError> {
    let max = u64::from(FibIndex::MAX) - 1;
    if bound > max {
        return Err(VerifyError::BoundTooLarge {
            suite: "convergence",
            bound,
            max,
        });
    }
    let n_max = FibIndex::new(bound).expect("bounded above");
    let (top, _) = fib_pair(n_max.get());
    let needed = top.to_str_radix(10).len() as u32 * 2 + 20;
    let cfg = PrecisionConfig::new(needed.max(PrecisionConfig::DEFAULT_DIGITS))
        .expect("above the minimum");
    let rows = convergence_table(n_max, &cfg).expect("digits sized for the bound");
    for pair in rows.windows(2).skip(1) {
        let (prev, row) = (&pair[0], &pair[1]);
        let n = u64::from(row.n.get());
        if row.error.abs() >= prev.error.abs() {
            return Ok(Outcome::Fail(Counterexample::Convergence {
                n,
                reason: "error did not shrink",
            }));
        }
        if row.error.signum() == prev.error.signum() {
            return Ok(Outcome::Fail(Counterexample::Convergence {
                n,
                reason: "error sign did not alternate",
            }));
        }
    }
    Ok(Outcome::Pass { checked: bound })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bounds_pass() {
        assert_eq!(run(Suite::Cassini, 300), Ok(Outcome::Pass { checked: 301 }));
        assert_eq!(
            run(Suite::Parity, 1000),
            Ok(Outcome::Pass { checked: 1000 })
        );
        assert_eq!(
            run(Suite::Convergence, 60),
            Ok(Outcome::Pass { checked: 60 })
        );
        let summary = equivalence(1000).unwrap();
        // 1 2 3 5 8 13 21 34 55 89 144 233 377 610 987
        assert_eq!(summary.positives, 15);
    }

    #[test]
    fn bound_limits() {
        assert!(matches!(
            run(Suite::Cassini, 2_000_000),
            Err(VerifyError::BoundTooLarge { .. })
        ));
    }
}
