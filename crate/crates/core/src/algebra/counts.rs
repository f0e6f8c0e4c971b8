//! Move-count bookkeeping: how many times each tromino anchor was used and
//! how many times each line was cleared, together with the polynomials
//! T, C, R these tallies generate.
//!
//! For a sequence that starts and ends on the empty board the stones added
//! and removed at every cell must cancel, which is the single polynomial
//! identity T − C − R = 0.

use num_bigint::BigInt;

use super::bipoly::BivariateIntPoly;
use super::AlgebraError;
use crate::board::{Move, MoveSequence};

/// Tallies extracted from a move sequence on a board of side `n`:
/// `t[i][j]` placements anchored at `(i, j)`, `c[i]` clears of column `i`,
/// `r[j]` clears of row `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoveCounts {
    n: usize,
    t: Vec<Vec<u64>>,
    c: Vec<u64>,
    r: Vec<u64>,
}

impl MoveCounts {
    /// All-zero tallies for side `n`.
    pub fn zero(n: usize) -> Result<Self, AlgebraError> {
        if n < 2 {
            return Err(AlgebraError::InvalidSide { n });
        }
        Ok(MoveCounts {
            n,
            t: vec![vec![0; n - 1]; n - 1],
            c: vec![0; n],
            r: vec![0; n],
        })
    }

    pub fn side(&self) -> usize {
        self.n
    }

    /// Placements anchored at `(i, j)`, for `i, j ≤ n−2`.
    pub fn tromino(&self, i: usize, j: usize) -> u64 {
        self.t[i][j]
    }

    /// Clears of column `i`.
    pub fn col_clears(&self, i: usize) -> u64 {
        self.c[i]
    }

    /// Clears of row `j`.
    pub fn row_clears(&self, j: usize) -> u64 {
        self.r[j]
    }

    /// Total tallied moves; equals the length of the source sequence.
    pub fn total(&self) -> u64 {
        let t: u64 = self.t.iter().flatten().sum();
        let c: u64 = self.c.iter().sum();
        let r: u64 = self.r.iter().sum();
        t + c + r
    }

    /// Set a tromino tally directly, for hypothetical count grids that did
    /// not come from a concrete sequence.
    pub fn set_tromino(&mut self, i: usize, j: usize, count: u64) {
        self.t[i][j] = count;
    }

    pub fn set_col_clears(&mut self, i: usize, count: u64) {
        self.c[i] = count;
    }

    pub fn set_row_clears(&mut self, j: usize, count: u64) {
        self.r[j] = count;
    }
}

/// Tally a sequence's moves. Counting is purely syntactic: the moves need
/// not be playable, only inside the board.
pub fn counts_from_sequence(seq: &MoveSequence) -> Result<MoveCounts, AlgebraError> {
    let n = seq.n;
    let mut counts = MoveCounts::zero(n)?;
    for (index, &mv) in seq.moves.iter().enumerate() {
        let in_range = match mv {
            Move::PlaceTromino { i, j } => i + 1 < n && j + 1 < n,
            Move::ClearRow { j } => j < n,
            Move::ClearColumn { i } => i < n,
        };
        if !in_range {
            return Err(AlgebraError::MoveOutOfRange { index, n });
        }
        match mv {
            Move::PlaceTromino { i, j } => counts.t[i][j] += 1,
            Move::ClearRow { j } => counts.r[j] += 1,
            Move::ClearColumn { i } => counts.c[i] += 1,
        }
    }
    Ok(counts)
}

/// The bookkeeping polynomials:
/// `T = Σ t_{i,j} x^i y^j (1 + x + y)`,
/// `C = Σ c_i x^i (1 + y + … + y^{n−1})`,
/// `R = Σ r_j y^j (1 + x + … + x^{n−1})`.
pub fn build_tcr(
    mc: &MoveCounts,
) -> (BivariateIntPoly, BivariateIntPoly, BivariateIntPoly) {
    let n = mc.n;
    let mut t_poly = BivariateIntPoly::zero();
    for i in 0..n - 1 {
        for j in 0..n - 1 {
            let count = BigInt::from(mc.t[i][j]);
            t_poly.add_term(i, j, count.clone());
            t_poly.add_term(i + 1, j, count.clone());
            t_poly.add_term(i, j + 1, count);
        }
    }
    let mut c_poly = BivariateIntPoly::zero();
    for i in 0..n {
        for k in 0..n {
            c_poly.add_term(i, k, BigInt::from(mc.c[i]));
        }
    }
    let mut r_poly = BivariateIntPoly::zero();
    for j in 0..n {
        for k in 0..n {
            r_poly.add_term(k, j, BigInt::from(mc.r[j]));
        }
    }
    (t_poly, c_poly, r_poly)
}

/// `T − C − R`. Its `(p, q)` coefficient is the net number of stones added
/// at cell `(p, q)` over the whole sequence.
pub fn balance_polynomial(mc: &MoveCounts) -> BivariateIntPoly {
    let (t, c, r) = build_tcr(mc);
    &(&t - &c) - &r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn three_by_three_clearing() -> MoveSequence {
        MoveSequence::new(
            3,
            vec![
                Move::PlaceTromino { i: 0, j: 0 },
                Move::PlaceTromino { i: 1, j: 1 },
                Move::ClearRow { j: 1 },
                Move::PlaceTromino { i: 0, j: 1 },
                Move::ClearColumn { i: 0 },
                Move::ClearColumn { i: 1 },
            ],
        )
    }

    #[test]
    fn counts_of_the_six_move_clearing() {
        let counts = counts_from_sequence(&three_by_three_clearing()).unwrap();
        assert_eq!(counts.tromino(0, 0), 1);
        assert_eq!(counts.tromino(1, 1), 1);
        assert_eq!(counts.tromino(0, 1), 1);
        assert_eq!(counts.tromino(1, 0), 0);
        assert_eq!(
            (0..3).map(|j| counts.row_clears(j)).collect::<Vec<_>>(),
            vec![0, 1, 0]
        );
        assert_eq!(
            (0..3).map(|i| counts.col_clears(i)).collect::<Vec<_>>(),
            vec![1, 1, 0]
        );
        assert_eq!(counts.total(), 6);
    }

    #[test]
    fn counts_of_empty_sequence_are_zero() {
        let counts = counts_from_sequence(&MoveSequence::new(3, vec![])).unwrap();
        assert_eq!(counts.total(), 0);
    }

    #[test]
    fn counting_is_syntactic() {
        // The second placement is unplayable but still tallied.
        let seq = MoveSequence::new(
            3,
            vec![
                Move::PlaceTromino { i: 0, j: 0 },
                Move::PlaceTromino { i: 0, j: 0 },
            ],
        );
        let counts = counts_from_sequence(&seq).unwrap();
        assert_eq!(counts.tromino(0, 0), 2);
    }

    #[test]
    fn out_of_range_moves_are_rejected() {
        let seq = MoveSequence::new(3, vec![Move::PlaceTromino { i: 2, j: 0 }]);
        assert_eq!(
            counts_from_sequence(&seq),
            Err(AlgebraError::MoveOutOfRange { index: 0, n: 3 })
        );
    }

    #[test]
    fn single_tromino_gives_shifted_pattern() {
        let mut mc = MoveCounts::zero(4).unwrap();
        mc.set_tromino(0, 0, 1);
        let (t, c, r) = build_tcr(&mc);
        assert_eq!(t, BivariateIntPoly::one_plus_x_plus_y());
        assert!(c.is_zero());
        assert!(r.is_zero());
    }

    #[test]
    fn single_column_clear_gives_geometric_factor() {
        let mut mc = MoveCounts::zero(4).unwrap();
        mc.set_col_clears(0, 1);
        let (_, c, _) = build_tcr(&mc);
        let expected = BivariateIntPoly::from_terms([
            ((0, 0), 1),
            ((0, 1), 1),
            ((0, 2), 1),
            ((0, 3), 1),
        ]);
        assert_eq!(c, expected);
    }

    #[test]
    fn clearing_sequence_balances_to_zero() {
        let counts = counts_from_sequence(&three_by_three_clearing()).unwrap();
        let (t, c, r) = build_tcr(&counts);
        assert_eq!(&(&t - &c) - &r, BivariateIntPoly::zero());
        assert!(balance_polynomial(&counts).is_zero());
    }

    #[test]
    fn lone_tromino_does_not_balance() {
        let seq = MoveSequence::new(4, vec![Move::PlaceTromino { i: 0, j: 0 }]);
        let counts = counts_from_sequence(&seq).unwrap();
        assert_eq!(
            balance_polynomial(&counts),
            BivariateIntPoly::one_plus_x_plus_y()
        );
    }

    #[test]
    fn all_zero_counts_balance_to_zero() {
        let mc = MoveCounts::zero(4).unwrap();
        assert!(balance_polynomial(&mc).is_zero());
    }
}
