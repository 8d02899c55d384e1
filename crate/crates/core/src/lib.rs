//! Fibonacci numbers characterized as Hippasus numbers: the positive `beta`
//! for which some `alpha >= beta` satisfies `beta (beta + alpha) - alpha^2 = ±1`.
//!
//! The sequence is indexed from `F_0 = F_1 = 1`.

pub mod cli;
pub mod decimal;
pub mod fibonacci;
pub mod geometry;
pub mod hippasus;
pub mod table;
pub mod verify;
pub mod wasteels;

pub use decimal::Decimal;
pub use fibonacci::{
    cassini_residual, fib, fib_index_of, is_consecutive_fib, FibIndex, Natural, SignedInt,
};
pub use hippasus::{
    descend, extend, hippasus_residual, is_fibonacci_by_descent, is_hippasus_pair, predecessor,
    successors, unique_successor, verify_no_exact_solution, DescentTrace, HippasusPair, Sign,
    SuccessorSet,
};
pub use wasteels::{classify, wasteels_residual, WasteelsVerdict};
