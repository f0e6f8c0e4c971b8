//! Explicit clearing schedules for boards whose side is divisible by 3.
//!
//! The board is tiled by 3-by-3 sub-boards and the same three-phase
//! placement pattern runs in every sub-board. Clears act on whole board
//! lines, so the schedule interleaves globally: all first-phase placements,
//! then every row clear, then the remaining placements, then every column
//! clear. At each clear the targeted lines are full in every sub-board
//! simultaneously.

use thiserror::Error;

use crate::board::{Move, MoveSequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("clearing schedules need a side of at least 3, got {n}")]
    InvalidSide { n: usize },
    #[error("no clearing schedule exists for side {n}: it is not divisible by 3")]
    NotDivisibleBy3 { n: usize },
}

/// A sequence of exactly `n²/3 + n` moves taking the empty board of side `n`
/// back to empty, for any `n` divisible by 3.
///
/// For `n = 3` this is the six-move schedule
/// `[T(0,0), T(1,1), clear row 1, T(0,1), clear col 0, clear col 1]`.
pub fn clearing_sequence_div3(n: usize) -> Result<MoveSequence, ConstructError> {
    if n < 3 {
        return Err(ConstructError::InvalidSide { n });
    }
    if n % 3 != 0 {
        return Err(ConstructError::NotDivisibleBy3 { n });
    }

    let blocks = n / 3;
    let mut moves = Vec::with_capacity(n * n / 3 + n);

    // Two trominoes per sub-board fill its middle row and prime the rest.
    for bj in 0..blocks {
        for bi in 0..blocks {
            moves.push(Move::PlaceTromino { i: 3 * bi, j: 3 * bj });
            moves.push(Move::PlaceTromino {
                i: 3 * bi + 1,
                j: 3 * bj + 1,
            });
        }
    }
    // Every middle row (j ≡ 1 mod 3) is now full.
    for j in (0..n).filter(|j| j % 3 == 1) {
        moves.push(Move::ClearRow { j });
    }
    // A third tromino per sub-board completes its left two columns.
    for bj in 0..blocks {
        for bi in 0..blocks {
            moves.push(Move::PlaceTromino {
                i: 3 * bi,
                j: 3 * bj + 1,
            });
        }
    }
    // Columns i ≡ 0, 1 mod 3 are full; clearing them empties the board.
    for i in (0..n).filter(|i| i % 3 != 2) {
        moves.push(Move::ClearColumn { i });
    }

    Ok(MoveSequence::new(n, moves))
}
