//! Kaluza numbers, direct multiplication through the Cayley table, and the
//! 32x32 multiplication matrix of a right operand.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Neg, Sub};
use std::str::FromStr;

use nalgebra::DMatrix;
use thiserror::Error;

use crate::cayley::{CayleyTable, DIM};
use crate::linops::{OpSink, Permutation32};
use crate::signed::{Sign, SignedIndex};

/// `d0 + Σ d_n e_n` stored as its 32 real coefficients.
#[derive(Clone, Copy, PartialEq)]
pub struct KaluzaNumber {
    coeffs: [f64; DIM],
}

impl fmt::Debug for KaluzaNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("KaluzaNumber").field(&self.coeffs).finish()
    }
}

impl Default for KaluzaNumber {
    fn default() -> Self {
        KaluzaNumber::zero()
    }
}

impl KaluzaNumber {
    pub const fn new(coeffs: [f64; DIM]) -> Self {
        KaluzaNumber { coeffs }
    }

    pub const fn zero() -> Self {
        KaluzaNumber { coeffs: [0.0; DIM] }
    }

    pub fn one() -> Self {
        KaluzaNumber::basis(0)
    }

    /// `e_index` (`e_0 = 1`). Panics if `index >= 32`.
    pub fn basis(index: usize) -> Self {
        let mut coeffs = [0.0; DIM];
        coeffs[index] = 1.0;
        KaluzaNumber { coeffs }
    }

    pub fn coeffs(&self) -> &[f64; DIM] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> [f64; DIM] {
        self.coeffs
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_finite())
    }

    pub fn scale(&self, factor: f64) -> Self {
        KaluzaNumber {
            coeffs: self.coeffs.map(|c| c * factor),
        }
    }

    /// Largest absolute coefficient.
    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Componentwise sum, 32 real additions.
    pub fn add_counted<S: OpSink>(&self, other: &KaluzaNumber, counter: &mut S) -> KaluzaNumber {
        counter.record(0, DIM as u64);
        KaluzaNumber {
            coeffs: std::array::from_fn(|k| self.coeffs[k] + other.coeffs[k]),
        }
    }
}

impl Index<usize> for KaluzaNumber {
    type Output = f64;

    fn index(&self, index: usize) -> &f64 {
        &self.coeffs[index]
    }
}

impl IndexMut<usize> for KaluzaNumber {
    fn index_mut(&mut self, index: usize) -> &mut f64 {
        &mut self.coeffs[index]
    }
}

impl From<[f64; DIM]> for KaluzaNumber {
    fn from(coeffs: [f64; DIM]) -> Self {
        KaluzaNumber { coeffs }
    }
}

impl Add for KaluzaNumber {
    type Output = KaluzaNumber;

    fn add(self, rhs: KaluzaNumber) -> KaluzaNumber {
        self.add_counted(&rhs, &mut crate::linops::Uncounted)
    }
}

impl Sub for KaluzaNumber {
    type Output = KaluzaNumber;

    fn sub(self, rhs: KaluzaNumber) -> KaluzaNumber {
        KaluzaNumber {
            coeffs: std::array::from_fn(|k| self.coeffs[k] - rhs.coeffs[k]),
        }
    }
}

impl Neg for KaluzaNumber {
    type Output = KaluzaNumber;

    fn neg(self) -> KaluzaNumber {
        self.scale(-1.0)
    }
}

/// `a * b` (a on the left) by direct expansion over the Kaluza table.
impl std::ops::Mul for KaluzaNumber {
    type Output = KaluzaNumber;

    fn mul(self, rhs: KaluzaNumber) -> KaluzaNumber {
        mul_naive(&self, &rhs, &mut crate::linops::Uncounted)
    }
}

impl fmt::Display for KaluzaNumber {
    /// 32 space-separated shortest round-trip decimals.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            f.write_str(&crate::linops::format_entry(*c))?;
        }
        Ok(())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}, column {column}: `{token}` is not a decimal number")]
    InvalidNumber {
        line: usize,
        column: usize,
        token: String,
    },
    #[error("line {line}, column {column}: `{token}` is not finite")]
    NonFinite {
        line: usize,
        column: usize,
        token: String,
    },
    #[error("line {line}, column {column}: more than 32 coefficients")]
    TooMany { line: usize, column: usize },
    #[error("expected 32 coefficients, found {found}")]
    TooFew { found: usize },
}

impl FromStr for KaluzaNumber {
    type Err = ParseError;

    /// 32 whitespace-separated decimals in index order; lines whose first
    /// non-blank character is `#` are ignored. Columns are 1-based character
    /// positions.
    fn from_str(text: &str) -> Result<Self, ParseError> {
        let mut coeffs = [0.0; DIM];
        let mut count = 0;
        for (line_no, line) in text.lines().enumerate() {
            if line.trim_start().starts_with('#') {
                continue;
            }
            let mut rest = line;
            let mut offset = 0;
            while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
                let tail = &rest[start..];
                let len = tail.find(char::is_whitespace).unwrap_or(tail.len());
                let token = &tail[..len];
                let line = line_no + 1;
                let column = offset + start + 1;
                if count == DIM {
                    return Err(ParseError::TooMany { line, column });
                }
                let value: f64 = token.parse().map_err(|_| ParseError::InvalidNumber {
                    line,
                    column,
                    token: token.to_string(),
                })?;
                if !value.is_finite() {
                    return Err(ParseError::NonFinite {
                        line,
                        column,
                        token: token.to_string(),
                    });
                }
                coeffs[count] = value;
                count += 1;
                offset += start + len;
                rest = &tail[len..];
            }
        }
        if count != DIM {
            return Err(ParseError::TooFew { found: count });
        }
        Ok(KaluzaNumber { coeffs })
    }
}

/// `a * b` by direct expansion: `d_k = Σ sign(i,j) a_i b_j` over all
/// `(i, j)` with `e_i e_j = ±e_k`. 1024 multiplications, 992 additions.
pub fn mul_naive<S: OpSink>(a: &KaluzaNumber, b: &KaluzaNumber, counter: &mut S) -> KaluzaNumber {
    mul_naive_with(CayleyTable::kaluza(), a, b, counter)
}

/// [`mul_naive`] against an arbitrary table. Every row of a valid table is
/// a signed permutation, so row 0 initializes each output exactly once and
/// every later row adds exactly once into each output.
pub fn mul_naive_with<S: OpSink>(
    table: &CayleyTable,
    a: &KaluzaNumber,
    b: &KaluzaNumber,
    counter: &mut S,
) -> KaluzaNumber {
    let mut d = [0.0; DIM];
    let mut written = [false; DIM];
    let (mut muls, mut adds) = (0u64, 0u64);
    for i in 0..DIM {
        for j in 0..DIM {
            let entry = table.get(i, j);
            let k = entry.index();
            let product = a.coeffs[i] * b.coeffs[j];
            muls += 1;
            if written[k] {
                match entry.sign {
                    Sign::Plus => d[k] += product,
                    Sign::Minus => d[k] -= product,
                }
                adds += 1;
            } else {
                d[k] = entry.sign.apply(product);
                written[k] = true;
            }
        }
    }
    counter.record(muls, adds);
    KaluzaNumber { coeffs: d }
}

/// Sum of two Kaluza numbers; 32 additions.
pub fn add<S: OpSink>(a: &KaluzaNumber, b: &KaluzaNumber, counter: &mut S) -> KaluzaNumber {
    a.add_counted(b, counter)
}

/// Symbolic 32x32 matrix whose entries are `±b_j` references.
#[derive(Clone, PartialEq, Eq)]
pub struct SymbolicMatrix {
    entries: [[SignedIndex; DIM]; DIM],
}

impl fmt::Debug for SymbolicMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("SymbolicMatrix(\n")?;
        f.write_str(&self.to_text())?;
        f.write_str(")")
    }
}

impl SymbolicMatrix {
    /// `B[k][i] = sign(i, j) · b_j` where `e_i e_j = ±e_k`; exactly one `j`
    /// exists per `(k, i)` for a valid table.
    #[allow(clippy::needless_range_loop)]
    pub fn from_table(table: &CayleyTable) -> Self {
        let mut entries = [[SignedIndex::plus(0); DIM]; DIM];
        for i in 0..DIM {
            for j in 0..DIM {
                let p = table.get(i, j);
                entries[p.index()][i] = SignedIndex {
                    sign: p.sign,
                    index: j as u8,
                };
            }
        }
        SymbolicMatrix { entries }
    }

    pub fn from_entries(entries: [[SignedIndex; DIM]; DIM]) -> Self {
        SymbolicMatrix { entries }
    }

    pub fn get(&self, row: usize, column: usize) -> SignedIndex {
        self.entries[row][column]
    }

    /// `P M P` for an involutive `P`: rows and columns both reordered.
    pub fn permuted(&self, p: &Permutation32) -> SymbolicMatrix {
        let map = p.map();
        SymbolicMatrix {
            entries: std::array::from_fn(|r| {
                std::array::from_fn(|c| self.entries[map[r] as usize][map[c] as usize])
            }),
        }
    }

    pub fn evaluate(&self, b: &KaluzaNumber) -> MulMatrix {
        MulMatrix {
            entries: self.entries.map(|row| row.map(|e| e.eval(&b.coeffs))),
        }
    }

    /// One row per line, entries like `b3` / `-b3` right-aligned.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for row in &self.entries {
            let cells: Vec<String> = row
                .iter()
                .map(|e| format!("{:>4}", e.symbol('b')))
                .collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, String> {
        let rows = parse_symbol_grid(text, 'b', DIM, DIM)?;
        let mut entries = [[SignedIndex::plus(0); DIM]; DIM];
        for (r, row) in rows.into_iter().enumerate() {
            entries[r].copy_from_slice(&row);
        }
        Ok(SymbolicMatrix { entries })
    }
}

/// Parses a whitespace-separated grid of `x7` / `-x7` symbols.
pub(crate) fn parse_symbol_grid(
    text: &str,
    letter: char,
    rows: usize,
    columns: usize,
) -> Result<Vec<Vec<SignedIndex>>, String> {
    let mut grid = Vec::with_capacity(rows);
    for (line_no, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let row = line
            .split_whitespace()
            .enumerate()
            .map(|(c, tok)| {
                SignedIndex::parse_symbol(tok, letter)
                    .filter(|s| s.index() < DIM)
                    .ok_or_else(|| {
                        format!("line {}, entry {}: bad symbol `{tok}`", line_no + 1, c + 1)
                    })
            })
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != columns {
            return Err(format!(
                "line {}: expected {columns} entries, found {}",
                line_no + 1,
                row.len()
            ));
        }
        grid.push(row);
    }
    if grid.len() != rows {
        return Err(format!("expected {rows} rows, found {}", grid.len()));
    }
    Ok(grid)
}

/// Concrete multiplication matrix of a right operand `b`:
/// `(a * b).coeffs = B · a.coeffs`.
#[derive(Clone, PartialEq)]
pub struct MulMatrix {
    entries: [[f64; DIM]; DIM],
}

impl fmt::Debug for MulMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MulMatrix").finish_non_exhaustive()
    }
}

impl MulMatrix {
    pub fn identity() -> Self {
        MulMatrix {
            entries: std::array::from_fn(|r| {
                std::array::from_fn(|c| if r == c { 1.0 } else { 0.0 })
            }),
        }
    }

    pub fn get(&self, row: usize, column: usize) -> f64 {
        self.entries[row][column]
    }

    pub fn rows(&self) -> &[[f64; DIM]; DIM] {
        &self.entries
    }

    pub fn to_dense(&self) -> DMatrix<f64> {
        DMatrix::from_fn(DIM, DIM, |r, c| self.entries[r][c])
    }
}

/// Multiplication matrix of `b` from the Kaluza table.
pub fn build_mul_matrix(b: &KaluzaNumber) -> MulMatrix {
    SymbolicMatrix::from_table(CayleyTable::kaluza()).evaluate(b)
}

/// Dense matrix-vector product `m · a`; 1024 multiplications, 992 additions.
pub fn mul_dense<S: OpSink>(a: &KaluzaNumber, m: &MulMatrix, counter: &mut S) -> KaluzaNumber {
    let coeffs = std::array::from_fn(|r| {
        let row = &m.entries[r];
        let mut terms = row.iter().zip(&a.coeffs).map(|(m, x)| m * x);
        let first = terms.next().unwrap_or(0.0);
        terms.fold(first, |acc, t| acc + t)
    });
    counter.record((DIM * DIM) as u64, (DIM * (DIM - 1)) as u64);
    KaluzaNumber { coeffs }
}

/// A cell where a table-derived symbolic matrix and a printed one disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockMismatch {
    pub row: usize,
    pub column: usize,
    pub derived: SignedIndex,
    pub printed: SignedIndex,
}

impl fmt::Display for BlockMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "row {}, column {}: derived {}, printed {}",
            self.row,
            self.column,
            self.derived.symbol('b'),
            self.printed.symbol('b')
        )
    }
}

/// Cell-by-cell comparison of two symbolic matrices.
pub fn compare_symbolic(derived: &SymbolicMatrix, printed: &SymbolicMatrix) -> Vec<BlockMismatch> {
    let mut out = Vec::new();
    for row in 0..DIM {
        for column in 0..DIM {
            let (d, p) = (derived.get(row, column), printed.get(row, column));
            if d != p {
                out.push(BlockMismatch {
                    row,
                    column,
                    derived: d,
                    printed: p,
                });
            }
        }
    }
    out
}

/// Compares the table-derived symbolic multiplication matrix with the
/// printed four-block transcription in [`crate::printed`].
pub fn compare_printed_blocks(table: &CayleyTable) -> Vec<BlockMismatch> {
    compare_symbolic(
        &SymbolicMatrix::from_table(table),
        crate::printed::mul_matrix(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linops::{OpCount, Uncounted};

    fn e(i: usize) -> KaluzaNumber {
        KaluzaNumber::basis(i)
    }

    #[test]
    fn addition_examples() {
        let a: KaluzaNumber = std::array::from_fn(|k| k as f64 * 0.5 - 2.0).into();
        assert_eq!(a + KaluzaNumber::zero(), a);
        let twice = e(1) + e(1);
        assert_eq!(twice, e(1).scale(2.0));
        let lhs = KaluzaNumber::one() + e(5);
        let rhs = KaluzaNumber::one().scale(2.0) - e(5);
        assert_eq!(lhs + rhs, KaluzaNumber::one().scale(3.0));
        let mut count = OpCount::default();
        add(&a, &a, &mut count);
        assert_eq!(count, OpCount::new(0, 32));
    }

    #[test]
    fn naive_examples() {
        let x: KaluzaNumber = std::array::from_fn(|k| (k as f64) - 11.0).into();
        assert_eq!(KaluzaNumber::one() * x, x);
        assert_eq!(e(1) * e(2), e(6));
        assert_eq!(e(2) * e(1), -e(6));
        assert_eq!((e(1) + e(2)) * e(3), e(7) + e(10));
    }

    #[test]
    fn naive_and_dense_counts() {
        let a: KaluzaNumber = std::array::from_fn(|k| k as f64).into();
        let mut count = OpCount::default();
        mul_naive(&a, &a, &mut count);
        assert_eq!(count, OpCount::new(1024, 992));
        let mut count = OpCount::default();
        mul_dense(&a, &build_mul_matrix(&a), &mut count);
        assert_eq!(count, OpCount::new(1024, 992));
    }

    #[test]
    fn mul_matrix_examples() {
        assert_eq!(
            build_mul_matrix(&KaluzaNumber::one()),
            MulMatrix::identity()
        );
        let m = build_mul_matrix(&e(1));
        assert_eq!(m.get(0, 1), 1.0);
        assert_eq!(m.get(6, 2), -1.0);
        let x: KaluzaNumber = std::array::from_fn(|k| k as f64 + 1.0).into();
        assert_eq!(mul_dense(&x, &MulMatrix::identity(), &mut Uncounted), x);
        assert_eq!(
            mul_dense(&KaluzaNumber::zero(), &m, &mut Uncounted),
            KaluzaNumber::zero()
        );
    }

    #[test]
    fn symbolic_first_rows_match_printed_layout() {
        let s = SymbolicMatrix::from_table(CayleyTable::kaluza());
        assert_eq!(s.get(0, 0), SignedIndex::plus(0));
        assert_eq!(s.get(1, 0), SignedIndex::plus(1));
        assert_eq!(s.get(0, 3), SignedIndex::minus(3));
        assert_eq!(s.get(1, 1), SignedIndex::plus(0));
    }

    #[test]
    fn printed_blocks_agree_with_table() {
        assert!(compare_printed_blocks(CayleyTable::kaluza()).is_empty());
        // the uncorrected table disagrees in exactly the misprinted cell
        let report = compare_printed_blocks(&CayleyTable::printed());
        assert_eq!(
            report,
            vec![BlockMismatch {
                row: 13,
                column: 2,
                derived: SignedIndex::minus(22),
                printed: SignedIndex::plus(22),
            }]
        );
        assert_eq!(
            report[0].to_string(),
            "row 13, column 2: derived -b22, printed b22"
        );
    }

    #[test]
    fn parse_and_display() {
        let text = "# comment\n1 2 3 4 5 6 7 8\n  9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 24 25 26 27 28 29 30 31 -0.5\n";
        let k: KaluzaNumber = text.parse().unwrap();
        assert_eq!(k[31], -0.5);
        assert_eq!(k.to_string().parse::<KaluzaNumber>().unwrap(), k);
        assert_eq!(
            KaluzaNumber::zero()
                .scale(-1.0)
                .to_string()
                .split(' ')
                .next(),
            Some("0")
        );
    }

    #[test]
    fn parse_errors() {
        let short = vec!["1"; 31].join(" ");
        assert_eq!(
            short.parse::<KaluzaNumber>(),
            Err(ParseError::TooFew { found: 31 })
        );
        let long = vec!["1"; 33].join(" ");
        assert_eq!(
            long.parse::<KaluzaNumber>(),
            Err(ParseError::TooMany {
                line: 1,
                column: 65
            })
        );
        let bad = format!("{}\n0 x1", vec!["0"; 30].join(" "));
        assert_eq!(
            bad.parse::<KaluzaNumber>(),
            Err(ParseError::InvalidNumber {
                line: 2,
                column: 3,
                token: "x1".into()
            })
        );
        let inf = format!("inf {}", vec!["0"; 31].join(" "));
        assert!(matches!(
            inf.parse::<KaluzaNumber>(),
            Err(ParseError::NonFinite {
                line: 1,
                column: 1,
                ..
            })
        ));
        let nan = format!("{} NaN", vec!["0"; 31].join(" "));
        assert!(matches!(
            nan.parse::<KaluzaNumber>(),
            Err(ParseError::NonFinite { .. })
        ));
    }
}
