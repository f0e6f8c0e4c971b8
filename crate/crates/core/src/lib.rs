//! Exact engines for three competition problems.
//!
//! The centerpiece is the stone-placement game: on an n-by-n board you may
//! either place stones on an empty L-tromino (fixed orientation) or clear a
//! fully occupied row or column, and the question is for which n a nonzero
//! sequence of moves returns the empty board to empty. This crate answers it
//! three ways that check each other:
//!
//! * [`search`] — exhaustive breadth-first search over the reachable state
//!   space, for desk-scale boards;
//! * [`construct`] — an explicit clearing schedule whenever 3 divides n;
//! * [`algebra`] — exact cyclotomic-integer arithmetic that turns the
//!   root-counting impossibility argument into a machine-checkable
//!   certificate for every n not divisible by 3.
//!
//! Two smaller engines round out the crate: [`walk`] computes exact rational
//! return probabilities of uniform random walks (the four-leaf cricket
//! puzzle), and [`interp`] reproduces the sum-polynomial interpolation trick
//! for pairs of quadratics with cancelling leading coefficients.

pub mod algebra;
pub mod board;
pub mod construct;
pub mod interp;
pub mod search;
pub mod walk;

pub use board::{replay, BoardError, BoardState, Move, MoveSequence, ReplayError};
pub use search::{decide, predecessor_states_of_empty, reachable_set, SearchLimits, Verdict};
