//! Rules engine for the stone-placement game on an n-by-n board.
//!
//! Two moves exist: placing a stone on each cell of an L-shaped tromino whose
//! three cells are empty, and clearing a fully occupied row or column. The
//! tromino has a single fixed orientation; rotations are not allowed.
//!
//! Cell `(i, j)` means column `i` (increasing rightward) and row `j`
//! (increasing upward), with the origin at the lower left. This matches the
//! monomial labelling `x^i y^j` used by the [`crate::algebra`] module, so
//! board coordinates and polynomial exponents coincide.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Errors produced by board construction and move application.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum BoardError {
    /// The game is only defined for boards of side at least 2.
    #[error("board side must be at least 2, got {n}")]
    InvalidSide { n: usize },
    /// A cell coordinate lies outside the n-by-n grid.
    #[error("cell ({i}, {j}) is outside the {n}-by-{n} board")]
    CellOutOfBounds { i: usize, j: usize, n: usize },
    /// The move's indices do not fit on the board.
    #[error("{mv} does not fit on a {n}-by-{n} board")]
    OutOfBounds { mv: Move, n: usize },
    /// A tromino placement overlaps at least one stone.
    #[error("tromino anchored at ({i}, {j}) overlaps a stone")]
    CellsNotEmpty { i: usize, j: usize },
    /// A clear was attempted on a row or column that is not fully occupied.
    #[error("{mv} targets a line that is not fully occupied")]
    LineNotFull { mv: Move },
}

/// A single move of the game.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Move {
    /// Place stones on the three cells `(i, j)`, `(i+1, j)`, `(i, j+1)`.
    ///
    /// The anchor `(i, j)` is the lower-left corner of the L, so it must
    /// satisfy `i <= n-2` and `j <= n-2`.
    PlaceTromino { i: usize, j: usize },
    /// Remove all stones from row `j`, which must be fully occupied.
    ClearRow { j: usize },
    /// Remove all stones from column `i`, which must be fully occupied.
    ClearColumn { i: usize },
}

impl Move {
    fn check_bounds(&self, n: usize) -> Result<(), BoardError> {
        let ok = match *self {
            Move::PlaceTromino { i, j } => i + 1 < n && j + 1 < n,
            Move::ClearRow { j } => j < n,
            Move::ClearColumn { i } => i < n,
        };
        if ok {
            Ok(())
        } else {
            Err(BoardError::OutOfBounds { mv: *self, n })
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Move::PlaceTromino { i, j } => write!(f, "tromino at ({i}, {j})"),
            Move::ClearRow { j } => write!(f, "clear row {j}"),
            Move::ClearColumn { i } => write!(f, "clear column {i}"),
        }
    }
}

/// Wire form of a [`Move`]: `{"type":"tromino","i":0,"j":0}`,
/// `{"type":"clear_row","j":1}` or `{"type":"clear_col","i":0}`.
///
/// Serde's internally tagged enums do not reject unknown fields, so moves go
/// through this explicit representation instead.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MoveRepr {
    #[serde(rename = "type")]
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    i: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    j: Option<usize>,
}

impl From<Move> for MoveRepr {
    fn from(mv: Move) -> Self {
        match mv {
            Move::PlaceTromino { i, j } => MoveRepr {
                kind: "tromino".into(),
                i: Some(i),
                j: Some(j),
            },
            Move::ClearRow { j } => MoveRepr {
                kind: "clear_row".into(),
                i: None,
                j: Some(j),
            },
            Move::ClearColumn { i } => MoveRepr {
                kind: "clear_col".into(),
                i: Some(i),
                j: None,
            },
        }
    }
}

impl MoveRepr {
    fn into_move<E: serde::de::Error>(self) -> Result<Move, E> {
        let MoveRepr { kind, i, j } = self;
        match kind.as_str() {
            "tromino" => match (i, j) {
                (Some(i), Some(j)) => Ok(Move::PlaceTromino { i, j }),
                _ => Err(E::custom("tromino move requires fields `i` and `j`")),
            },
            "clear_row" => match (i, j) {
                (None, Some(j)) => Ok(Move::ClearRow { j }),
                (Some(_), _) => Err(E::custom("clear_row move does not take field `i`")),
                (None, None) => Err(E::custom("clear_row move requires field `j`")),
            },
            "clear_col" => match (i, j) {
                (Some(i), None) => Ok(Move::ClearColumn { i }),
                (_, Some(_)) => Err(E::custom("clear_col move does not take field `j`")),
                (None, None) => Err(E::custom("clear_col move requires field `i`")),
            },
            other => Err(E::custom(format!("unknown move type `{other}`"))),
        }
    }
}

impl Serialize for Move {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        MoveRepr::from(*self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Move {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        MoveRepr::deserialize(deserializer)?.into_move::<D::Error>()
    }
}

/// An ordered list of moves on a board of side `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MoveSequence {
    pub n: usize,
    pub moves: Vec<Move>,
}

impl MoveSequence {
    pub fn new(n: usize, moves: Vec<Move>) -> Self {
        MoveSequence { n, moves }
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }
}

/// Occupancy of an n-by-n board, stored as an n² bit grid.
///
/// States are values: applying a move yields a fresh state and leaves the
/// input untouched. Equality and hashing are bitwise over the grid.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoardState {
    n: usize,
    words: Box<[u64]>,
}

impl BoardState {
    /// The empty board of side `n`. Rejects `n < 2`.
    pub fn new(n: usize) -> Result<Self, BoardError> {
        if n < 2 {
            return Err(BoardError::InvalidSide { n });
        }
        let words = vec![0u64; (n * n).div_ceil(64)].into_boxed_slice();
        Ok(BoardState { n, words })
    }

    /// A board of side `n` with stones on exactly the given cells.
    pub fn from_cells<I>(n: usize, cells: I) -> Result<Self, BoardError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut board = BoardState::new(n)?;
        for (i, j) in cells {
            if i >= n || j >= n {
                return Err(BoardError::CellOutOfBounds { i, j, n });
            }
            board.set(i, j);
        }
        Ok(board)
    }

    pub fn side(&self) -> usize {
        self.n
    }

    fn bit(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.n && j < self.n);
        j * self.n + i
    }

    /// Whether cell `(i, j)` holds a stone. Panics outside the grid.
    pub fn occupied(&self, i: usize, j: usize) -> bool {
        assert!(i < self.n && j < self.n, "cell ({i}, {j}) outside board");
        let bit = self.bit(i, j);
        self.words[bit / 64] >> (bit % 64) & 1 == 1
    }

    fn set(&mut self, i: usize, j: usize) {
        let bit = self.bit(i, j);
        self.words[bit / 64] |= 1 << (bit % 64);
    }

    fn unset(&mut self, i: usize, j: usize) {
        let bit = self.bit(i, j);
        self.words[bit / 64] &= !(1 << (bit % 64));
    }

    pub fn stone_count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// True iff the board has no stones.
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Stones in `(j, i)`-ascending order.
    pub fn occupied_cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        (0..n).flat_map(move |j| (0..n).filter_map(move |i| self.occupied(i, j).then_some((i, j))))
    }

    fn row_full(&self, j: usize) -> bool {
        (0..self.n).all(|i| self.occupied(i, j))
    }

    fn col_full(&self, i: usize) -> bool {
        (0..self.n).all(|j| self.occupied(i, j))
    }

    fn tromino_free(&self, i: usize, j: usize) -> bool {
        !self.occupied(i, j) && !self.occupied(i + 1, j) && !self.occupied(i, j + 1)
    }

    /// Every move whose application succeeds, in a fixed order: trominoes by
    /// `(j, i)` ascending, then row clears by `j`, then column clears by `i`.
    pub fn legal_moves(&self) -> Vec<Move> {
        let n = self.n;
        let mut moves = Vec::new();
        for j in 0..n - 1 {
            for i in 0..n - 1 {
                if self.tromino_free(i, j) {
                    moves.push(Move::PlaceTromino { i, j });
                }
            }
        }
        for j in 0..n {
            if self.row_full(j) {
                moves.push(Move::ClearRow { j });
            }
        }
        for i in 0..n {
            if self.col_full(i) {
                moves.push(Move::ClearColumn { i });
            }
        }
        moves
    }

    /// Apply one move, returning the resulting board.
    pub fn apply(&self, mv: Move) -> Result<BoardState, BoardError> {
        mv.check_bounds(self.n)?;
        let mut next = self.clone();
        match mv {
            Move::PlaceTromino { i, j } => {
                if !self.tromino_free(i, j) {
                    return Err(BoardError::CellsNotEmpty { i, j });
                }
                next.set(i, j);
                next.set(i + 1, j);
                next.set(i, j + 1);
            }
            Move::ClearRow { j } => {
                if !self.row_full(j) {
                    return Err(BoardError::LineNotFull { mv });
                }
                for i in 0..self.n {
                    next.unset(i, j);
                }
            }
            Move::ClearColumn { i } => {
                if !self.col_full(i) {
                    return Err(BoardError::LineNotFull { mv });
                }
                for j in 0..self.n {
                    next.unset(i, j);
                }
            }
        }
        Ok(next)
    }
}

impl fmt::Display for BoardState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in (0..self.n).rev() {
            for i in 0..self.n {
                f.write_str(if self.occupied(i, j) { "#" } else { "." })?;
            }
            if j > 0 {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}

/// A replay failure, carrying the index of the first offending move.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ReplayError {
    #[error("board side must be at least 2, got {n}")]
    InvalidSide { n: usize },
    #[error("move {index} failed: {source}")]
    MoveFailed { index: usize, source: BoardError },
}

/// Fold a sequence's moves over the empty board of side `seq.n`.
pub fn replay(seq: &MoveSequence) -> Result<BoardState, ReplayError> {
    let mut board =
        BoardState::new(seq.n).map_err(|_| ReplayError::InvalidSide { n: seq.n })?;
    for (index, &mv) in seq.moves.iter().enumerate() {
        board = board
            .apply(mv)
            .map_err(|source| ReplayError::MoveFailed { index, source })?;
    }
    Ok(board)
}
