//! Exhaustive breadth-first search over the game's state space.
//!
//! Starting from the empty board, the search enumerates every reachable
//! occupancy pattern and decides whether some nonzero move sequence returns
//! to the empty board. Verdicts are definitive only when the frontier
//! empties before any limit is hit.
//!
//! Boards of side up to 8 fit in a single `u64` bitmask, which keeps the
//! visited set and parent map compact; larger boards fall back to the
//! general [`BoardState`] representation and in practice run into the state
//! limit almost immediately.

use std::collections::HashMap;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::board::{replay, BoardError, BoardState, Move, MoveSequence};

/// Caps on the breadth-first exploration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    /// Stop once this many distinct states have been stored.
    pub max_states: usize,
    /// Do not expand states at this depth (move count from empty).
    pub max_depth: Option<usize>,
}

impl Default for SearchLimits {
    /// Desk-scale defaults, enough to exhaust boards up to side 4.
    fn default() -> Self {
        SearchLimits {
            max_states: 1 << 20,
            max_depth: None,
        }
    }
}

impl SearchLimits {
    /// Limits that exhaust the side-5 board (2^25 possible occupancies).
    /// Expect on the order of a gigabyte of bookkeeping.
    pub fn large() -> Self {
        SearchLimits {
            max_states: 1 << 25,
            max_depth: None,
        }
    }
}

/// Outcome of [`decide`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    /// A nonzero sequence from empty back to empty exists; `witness` is a
    /// shortest one and replays to the empty board.
    Clearable { witness: MoveSequence },
    /// The full reachable set was enumerated and no move from any reachable
    /// state produces the empty board.
    ImpossibleExhausted { reachable_count: usize },
    /// A limit was hit before the reachable set was exhausted.
    Unknown { reason: String },
}

/// States reachable from the empty board, in breadth-first discovery order.
#[derive(Debug, Clone)]
pub struct ReachableSet {
    /// Distinct states, the empty board first.
    pub states: Vec<BoardState>,
    /// True iff the frontier emptied before any limit was hit.
    pub exhausted: bool,
}

/// Compact move encoding for the parent map: 2-bit kind, 7-bit coordinates.
fn encode_move(mv: Move) -> u16 {
    match mv {
        Move::PlaceTromino { i, j } => (i as u16) << 7 | j as u16,
        Move::ClearRow { j } => 1 << 14 | j as u16,
        Move::ClearColumn { i } => 2 << 14 | i as u16,
    }
}

fn decode_move(code: u16) -> Move {
    match code >> 14 {
        0 => Move::PlaceTromino {
            i: (code >> 7 & 0x7f) as usize,
            j: (code & 0x7f) as usize,
        },
        1 => Move::ClearRow {
            j: (code & 0x7f) as usize,
        },
        _ => Move::ClearColumn {
            i: (code & 0x7f) as usize,
        },
    }
}

enum StopCause {
    FrontierEmptied,
    StateLimit,
    DepthLimit,
    WitnessFound,
}

struct Exploration<S> {
    /// Discovery order; index is the state id.
    states: Vec<S>,
    stop: StopCause,
    /// Move sequence from the start back to the start, when requested.
    witness: Option<Vec<Move>>,
}

/// Breadth-first exploration from `start` with deterministic expansion
/// order. When `halt_on_witness` is set, the search stops as soon as some
/// expansion produces `start` again, which by BFS order yields a shortest
/// cycle through the start state.
fn explore<S, F>(start: S, mut successors: F, limits: SearchLimits, halt_on_witness: bool) -> Exploration<S>
where
    S: Clone + Eq + Hash,
    F: FnMut(&S, &mut Vec<(Move, S)>),
{
    let max_states = limits.max_states.max(1).min(u32::MAX as usize);
    let mut ids: HashMap<S, u32> = HashMap::new();
    let mut states: Vec<S> = Vec::new();
    let mut parents: Vec<(u32, u16)> = Vec::new();

    ids.insert(start.clone(), 0);
    states.push(start.clone());
    parents.push((0, 0));

    let mut stop = StopCause::FrontierEmptied;
    let mut witness = None;
    let mut buf: Vec<(Move, S)> = Vec::new();

    // The states vector doubles as the BFS queue: ids are assigned in
    // discovery order, so expanding them in id order is FIFO.
    let mut cursor = 0usize;
    let mut depth = 0usize;
    let mut level_end = 1usize;

    'outer: while cursor < states.len() {
        if cursor == level_end {
            depth += 1;
            level_end = states.len();
        }
        if limits.max_depth.is_some_and(|d| depth >= d) {
            stop = StopCause::DepthLimit;
            break;
        }
        let state = states[cursor].clone();
        buf.clear();
        successors(&state, &mut buf);
        for (mv, next) in buf.drain(..) {
            if halt_on_witness && next == start {
                let mut path = path_to(&parents, cursor as u32);
                path.push(mv);
                witness = Some(path);
                stop = StopCause::WitnessFound;
                break 'outer;
            }
            if ids.contains_key(&next) {
                continue;
            }
            if states.len() >= max_states {
                stop = StopCause::StateLimit;
                break 'outer;
            }
            ids.insert(next.clone(), states.len() as u32);
            states.push(next);
            parents.push((cursor as u32, encode_move(mv)));
        }
        cursor += 1;
    }

    Exploration {
        states,
        stop,
        witness,
    }
}

/// Moves along the parent chain from the root to state `id`.
fn path_to(parents: &[(u32, u16)], mut id: u32) -> Vec<Move> {
    let mut path = Vec::new();
    while id != 0 {
        let (parent, code) = parents[id as usize];
        path.push(decode_move(code));
        id = parent;
    }
    path.reverse();
    path
}

/// Move masks for boards of side at most 8, one bit per cell at `j*n + i`.
struct MaskDomain {
    trominoes: Vec<(Move, u64)>,
    rows: Vec<(Move, u64)>,
    cols: Vec<(Move, u64)>,
}

impl MaskDomain {
    fn new(n: usize) -> Self {
        assert!((2..=8).contains(&n));
        let bit = |i: usize, j: usize| 1u64 << (j * n + i);
        let mut trominoes = Vec::new();
        for j in 0..n - 1 {
            for i in 0..n - 1 {
                let mask = bit(i, j) | bit(i + 1, j) | bit(i, j + 1);
                trominoes.push((Move::PlaceTromino { i, j }, mask));
            }
        }
        let rows = (0..n)
            .map(|j| (Move::ClearRow { j }, (0..n).map(|i| bit(i, j)).fold(0, |m, b| m | b)))
            .collect();
        let cols = (0..n)
            .map(|i| (Move::ClearColumn { i }, (0..n).map(|j| bit(i, j)).fold(0, |m, b| m | b)))
            .collect();
        MaskDomain {
            trominoes,
            rows,
            cols,
        }
    }

    /// Successors in the same order as [`BoardState::legal_moves`].
    fn successors(&self, state: u64, out: &mut Vec<(Move, u64)>) {
        for &(mv, mask) in &self.trominoes {
            if state & mask == 0 {
                out.push((mv, state | mask));
            }
        }
        for &(mv, mask) in &self.rows {
            if state & mask == mask {
                out.push((mv, state & !mask));
            }
        }
        for &(mv, mask) in &self.cols {
            if state & mask == mask {
                out.push((mv, state & !mask));
            }
        }
    }

    fn board_of(n: usize, mask: u64) -> BoardState {
        let cells = (0..n * n).filter(|b| mask >> b & 1 == 1).map(|b| (b % n, b / n));
        BoardState::from_cells(n, cells).expect("mask cells lie on the board")
    }
}

fn board_successors(state: &BoardState, out: &mut Vec<(Move, BoardState)>) {
    for mv in state.legal_moves() {
        let next = state.apply(mv).expect("legal move applies");
        out.push((mv, next));
    }
}

/// All states reachable from the empty board of side `n` within `limits`.
pub fn reachable_set(n: usize, limits: SearchLimits) -> Result<ReachableSet, BoardError> {
    let empty = BoardState::new(n)?;
    if n <= 8 {
        let domain = MaskDomain::new(n);
        let exp = explore(0u64, |s, out| domain.successors(*s, out), limits, false);
        Ok(ReachableSet {
            states: exp.states.iter().map(|&m| MaskDomain::board_of(n, m)).collect(),
            exhausted: matches!(exp.stop, StopCause::FrontierEmptied),
        })
    } else {
        let exp = explore(empty, board_successors, limits, false);
        Ok(ReachableSet {
            states: exp.states,
            exhausted: matches!(exp.stop, StopCause::FrontierEmptied),
        })
    }
}

/// Decide whether some nonzero move sequence takes the empty board of side
/// `n` back to empty.
///
/// A `Clearable` witness is shortest and is verified by replay before being
/// returned. `ImpossibleExhausted` is only produced after the full reachable
/// set has been enumerated.
pub fn decide(n: usize, limits: SearchLimits) -> Result<Verdict, BoardError> {
    let empty = BoardState::new(n)?;
    let (stop, witness, count) = if n <= 8 {
        let domain = MaskDomain::new(n);
        let exp = explore(0u64, |s, out| domain.successors(*s, out), limits, true);
        (exp.stop, exp.witness, exp.states.len())
    } else {
        let exp = explore(empty, board_successors, limits, true);
        (exp.stop, exp.witness, exp.states.len())
    };

    match stop {
        StopCause::WitnessFound => {
            let moves = witness.expect("witness recorded on early stop");
            let witness = MoveSequence::new(n, moves);
            let end = replay(&witness).expect("witness must replay");
            assert!(
                end.is_empty() && !witness.is_empty(),
                "witness must clear the board"
            );
            Ok(Verdict::Clearable { witness })
        }
        StopCause::FrontierEmptied => Ok(Verdict::ImpossibleExhausted {
            reachable_count: count,
        }),
        StopCause::StateLimit => Ok(Verdict::Unknown {
            reason: format!(
                "state limit of {} reached before exhausting the reachable set",
                limits.max_states
            ),
        }),
        StopCause::DepthLimit => Ok(Verdict::Unknown {
            reason: format!(
                "depth limit of {} reached before exhausting the reachable set",
                limits.max_depth.unwrap_or(0)
            ),
        }),
    }
}

/// The `2n` states from which one legal move empties the board: exactly one
/// full row, or exactly one full column, and nothing else.
pub fn predecessor_states_of_empty(n: usize) -> Result<Vec<BoardState>, BoardError> {
    if n < 2 {
        return Err(BoardError::InvalidSide { n });
    }
    let mut states = Vec::with_capacity(2 * n);
    for j in 0..n {
        states.push(BoardState::from_cells(n, (0..n).map(|i| (i, j)))?);
    }
    for i in 0..n {
        states.push(BoardState::from_cells(n, (0..n).map(|j| (i, j)))?);
    }
    Ok(states)
}
