//! Transcriptions of the published derived matrices, kept as comparison
//! fixtures. Nothing in the algebra is defined from these; they are checked
//! against what the Cayley table produces and disagreements are reported.
//!
//! * `mul_matrix.txt`: the four printed 16x16 blocks of the multiplication
//!   matrix assembled into one 32x32 grid of `±b_j`.
//! * `permuted_matrix.txt`: the same after row/column reordering.
//! * `diagonal.txt`: the sixteen printed diagonal blocks, one per line,
//!   each 32 signed references into the c-vector.

use std::sync::OnceLock;

use crate::kaluza::{parse_symbol_grid, SymbolicMatrix};
use crate::signed::SignedIndex;

pub const MUL_MATRIX_TEXT: &str = include_str!("printed/mul_matrix.txt");
pub const PERMUTED_MATRIX_TEXT: &str = include_str!("printed/permuted_matrix.txt");
pub const DIAGONAL_TEXT: &str = include_str!("printed/diagonal.txt");

pub fn mul_matrix() -> &'static SymbolicMatrix {
    static CELL: OnceLock<SymbolicMatrix> = OnceLock::new();
    CELL.get_or_init(|| SymbolicMatrix::parse(MUL_MATRIX_TEXT).expect("printed fixture parses"))
}

pub fn permuted_matrix() -> &'static SymbolicMatrix {
    static CELL: OnceLock<SymbolicMatrix> = OnceLock::new();
    CELL.get_or_init(|| {
        SymbolicMatrix::parse(PERMUTED_MATRIX_TEXT).expect("printed fixture parses")
    })
}

/// `blocks[k][m]` is the printed `s_m^(k)`.
pub fn diagonal_blocks() -> &'static [[SignedIndex; 32]; 16] {
    static CELL: OnceLock<[[SignedIndex; 32]; 16]> = OnceLock::new();
    CELL.get_or_init(|| {
        let grid = parse_symbol_grid(DIAGONAL_TEXT, 'c', 16, 32).expect("printed fixture parses");
        let mut blocks = [[SignedIndex::plus(0); 32]; 16];
        for (k, row) in grid.into_iter().enumerate() {
            blocks[k].copy_from_slice(&row);
        }
        blocks
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_parse() {
        assert_eq!(mul_matrix().get(0, 3), SignedIndex::minus(3));
        assert_eq!(permuted_matrix().get(1, 2), SignedIndex::minus(6));
        assert_eq!(diagonal_blocks()[0][0], SignedIndex::plus(0));
        assert_eq!(diagonal_blocks()[1][18], SignedIndex::minus(22));
        assert_eq!(diagonal_blocks()[15][31], SignedIndex::plus(1));
    }
}
