//! The 32x32 signed basis-product table that defines Kaluza multiplication.
//!
//! Index 0 is the real unit, indices 1..=31 are the imaginary units
//! `e1..e31`. Every product of two basis elements is a signed basis element,
//! so the table is stored as [`SignedIndex`] entries.

mod data;

use std::fmt::{self, Write as _};
use std::str::FromStr;
use std::sync::OnceLock;

use thiserror::Error;

pub use data::{PRINTED_CORRECTIONS, PRINTED_TABLE};

use crate::signed::{Sign, SignedIndex};

/// Number of basis elements (real unit plus 31 imaginary units).
pub const DIM: usize = 32;

/// Result of multiplying two basis elements.
pub type BasisProduct = SignedIndex;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TableError {
    #[error("basis index {0} out of range 0..=31")]
    IndexOutOfRange(usize),
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

/// One of the four 16x16 quadrants the table is traditionally printed in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Quadrant {
    NorthWest,
    NorthEast,
    SouthWest,
    SouthEast,
}

impl Quadrant {
    pub const ALL: [Quadrant; 4] = [
        Quadrant::NorthWest,
        Quadrant::NorthEast,
        Quadrant::SouthWest,
        Quadrant::SouthEast,
    ];

    /// `(first row, first column)` of the quadrant.
    pub fn origin(self) -> (usize, usize) {
        match self {
            Quadrant::NorthWest => (0, 0),
            Quadrant::NorthEast => (0, 16),
            Quadrant::SouthWest => (16, 0),
            Quadrant::SouthEast => (16, 16),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Quadrant::NorthWest => "NW",
            Quadrant::NorthEast => "NE",
            Quadrant::SouthWest => "SW",
            Quadrant::SouthEast => "SE",
        }
    }
}

impl FromStr for Quadrant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "NW" => Ok(Quadrant::NorthWest),
            "NE" => Ok(Quadrant::NorthEast),
            "SW" => Ok(Quadrant::SouthWest),
            "SE" => Ok(Quadrant::SouthEast),
            _ => Err(format!(
                "unknown quadrant `{s}` (expected NW, NE, SW or SE)"
            )),
        }
    }
}

/// A single broken table invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `entry(0, column)` is not `+e_column`.
    IdentityRow { column: usize, found: BasisProduct },
    /// `entry(row, 0)` is not `+e_row`.
    IdentityColumn { row: usize, found: BasisProduct },
    /// Row `row` hits basis index `index` more than once; `column` is the
    /// first repeated position.
    RowNotSignedPermutation {
        row: usize,
        column: usize,
        index: usize,
    },
    ColumnNotSignedPermutation {
        row: usize,
        column: usize,
        index: usize,
    },
    /// `entry(i, i)` is not `±1`.
    SquareNotScalar { index: usize, found: BasisProduct },
    /// Index field outside `0..32`.
    IndexOutOfRange {
        row: usize,
        column: usize,
        index: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::IdentityRow { column, found } => write!(
                f,
                "identity row: entry(0, {column}) is {}, expected {}",
                unit_symbol(found),
                unit_symbol(SignedIndex::plus(column as u8))
            ),
            Violation::IdentityColumn { row, found } => write!(
                f,
                "identity column: entry({row}, 0) is {}, expected {}",
                unit_symbol(found),
                unit_symbol(SignedIndex::plus(row as u8))
            ),
            Violation::RowNotSignedPermutation { row, column, index } => write!(
                f,
                "row {row} is not a signed permutation: index {index} repeats at column {column}"
            ),
            Violation::ColumnNotSignedPermutation { row, column, index } => write!(
                f,
                "column {column} is not a signed permutation: index {index} repeats at row {row}"
            ),
            Violation::SquareNotScalar { index, found } => write!(
                f,
                "square of e{index} is {}, expected 1 or -1",
                unit_symbol(found)
            ),
            Violation::IndexOutOfRange { row, column, index } => {
                write!(
                    f,
                    "entry({row}, {column}) has basis index {index} out of range"
                )
            }
        }
    }
}

/// Immutable 32x32 grid of basis products, row = left factor.
#[derive(Clone, PartialEq, Eq)]
pub struct CayleyTable {
    entries: [SignedIndex; DIM * DIM],
}

impl fmt::Debug for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CayleyTable").finish_non_exhaustive()
    }
}

impl CayleyTable {
    pub fn from_entries(entries: [SignedIndex; DIM * DIM]) -> Self {
        CayleyTable { entries }
    }

    /// The table exactly as printed, misprints included.
    pub fn printed() -> Self {
        CayleyTable::from_entries(PRINTED_TABLE)
    }

    /// The Kaluza table: the printed table with [`PRINTED_CORRECTIONS`]
    /// applied. Everything else in the crate is derived from this.
    pub fn kaluza() -> &'static CayleyTable {
        static TABLE: OnceLock<CayleyTable> = OnceLock::new();
        TABLE.get_or_init(|| {
            let mut table = CayleyTable::printed();
            for &(row, column, printed, corrected) in &PRINTED_CORRECTIONS {
                debug_assert_eq!(table.get(row, column), printed);
                table.set(row, column, corrected);
            }
            table
        })
    }

    /// `e_i * e_j`.
    pub fn basis_mul(&self, i: usize, j: usize) -> Result<BasisProduct, TableError> {
        if i >= DIM {
            return Err(TableError::IndexOutOfRange(i));
        }
        if j >= DIM {
            return Err(TableError::IndexOutOfRange(j));
        }
        Ok(self.get(i, j))
    }

    /// Unchecked variant of [`CayleyTable::basis_mul`]; panics when out of range.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> BasisProduct {
        self.entries[i * DIM + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BasisProduct) {
        self.entries[i * DIM + j] = value;
    }

    pub fn entries(&self) -> &[SignedIndex; DIM * DIM] {
        &self.entries
    }

    /// Checks the structural invariants and returns every violation found.
    /// An empty report means the table is valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut report = Vec::new();
        let mut ranged = true;
        for row in 0..DIM {
            for column in 0..DIM {
                let index = self.get(row, column).index();
                if index >= DIM {
                    report.push(Violation::IndexOutOfRange { row, column, index });
                    ranged = false;
                }
            }
        }
        if !ranged {
            return report;
        }

        for column in 0..DIM {
            let found = self.get(0, column);
            if found != SignedIndex::plus(column as u8) {
                report.push(Violation::IdentityRow { column, found });
            }
        }
        for row in 0..DIM {
            let found = self.get(row, 0);
            if found != SignedIndex::plus(row as u8) {
                report.push(Violation::IdentityColumn { row, found });
            }
        }
        for row in 0..DIM {
            let mut seen = [false; DIM];
            for column in 0..DIM {
                let index = self.get(row, column).index();
                if std::mem::replace(&mut seen[index], true) {
                    report.push(Violation::RowNotSignedPermutation { row, column, index });
                }
            }
        }
        for column in 0..DIM {
            let mut seen = [false; DIM];
            for row in 0..DIM {
                let index = self.get(row, column).index();
                if std::mem::replace(&mut seen[index], true) {
                    report.push(Violation::ColumnNotSignedPermutation { row, column, index });
                }
            }
        }
        for index in 0..DIM {
            let found = self.get(index, index);
            if found.index != 0 {
                report.push(Violation::SquareNotScalar { index, found });
            }
        }
        report
    }

    /// All `(i, j, k)` with `(e_i e_j) e_k != e_i (e_j e_k)`.
    ///
    /// Not one of the structural invariants, but a sharp detector for sign
    /// misprints that [`CayleyTable::validate`] cannot see.
    pub fn associativity_failures(&self) -> Vec<(usize, usize, usize)> {
        let mul = |x: SignedIndex, y: SignedIndex| {
            let p = self.get(x.index(), y.index());
            SignedIndex {
                sign: x.sign * y.sign * p.sign,
                index: p.index,
            }
        };
        let mut failures = Vec::new();
        for i in 0..DIM {
            for j in 0..DIM {
                for k in 0..DIM {
                    let (ei, ej, ek) = (
                        SignedIndex::plus(i as u8),
                        SignedIndex::plus(j as u8),
                        SignedIndex::plus(k as u8),
                    );
                    if mul(mul(ei, ej), ek) != mul(ei, mul(ej, ek)) {
                        failures.push((i, j, k));
                    }
                }
            }
        }
        failures
    }

    /// Renders one quadrant as a 16x16 right-aligned grid of `1`, `-1`,
    /// `e6`, `-e6` symbols, one table row per line.
    pub fn dump_quadrant(&self, quadrant: Quadrant) -> String {
        let (r0, c0) = quadrant.origin();
        let mut out = String::new();
        for row in r0..r0 + 16 {
            let cells: Vec<String> = (c0..c0 + 16)
                .map(|column| format!("{:>4}", unit_symbol(self.get(row, column))))
                .collect();
            let _ = writeln!(out, "{}", cells.join(" "));
        }
        out
    }

    /// Rebuilds a table from the four outputs of [`CayleyTable::dump_quadrant`].
    pub fn parse_quadrants(nw: &str, ne: &str, sw: &str, se: &str) -> Result<Self, TableError> {
        let mut entries = [SignedIndex::plus(0); DIM * DIM];
        for (quadrant, text) in Quadrant::ALL.into_iter().zip([nw, ne, sw, se]) {
            let (r0, c0) = quadrant.origin();
            let grid = parse_grid(text, 16)?;
            for (r, row) in grid.iter().enumerate() {
                for (c, &cell) in row.iter().enumerate() {
                    entries[(r0 + r) * DIM + c0 + c] = cell;
                }
            }
        }
        Ok(CayleyTable { entries })
    }

    /// Full 32-line serialization: entries like `+1`, `-e6`, `+e17`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for row in 0..DIM {
            let cells: Vec<String> = (0..DIM)
                .map(|column| {
                    let entry = self.get(row, column);
                    let symbol = unit_symbol(entry);
                    if entry.sign == Sign::Plus {
                        format!("+{symbol}")
                    } else {
                        symbol
                    }
                })
                .collect();
            let _ = writeln!(out, "{}", cells.join(" "));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self, TableError> {
        let grid = parse_grid(text, DIM)?;
        let mut entries = [SignedIndex::plus(0); DIM * DIM];
        for (r, row) in grid.iter().enumerate() {
            entries[r * DIM..(r + 1) * DIM].copy_from_slice(row);
        }
        Ok(CayleyTable { entries })
    }
}

/// `1`, `-1`, `e6`, `-e6`.
pub fn unit_symbol(entry: SignedIndex) -> String {
    let unit = if entry.index == 0 {
        "1".to_string()
    } else {
        format!("e{}", entry.index)
    };
    match entry.sign {
        Sign::Plus => unit,
        Sign::Minus => format!("-{unit}"),
    }
}

/// Inverse of [`unit_symbol`]; also accepts a leading `+`.
pub fn parse_unit_symbol(text: &str) -> Option<SignedIndex> {
    let (sign, rest) = match text.as_bytes().first()? {
        b'-' => (Sign::Minus, &text[1..]),
        b'+' => (Sign::Plus, &text[1..]),
        _ => (Sign::Plus, text),
    };
    if rest == "1" {
        return Some(SignedIndex { sign, index: 0 });
    }
    let digits = rest.strip_prefix('e')?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let index: u8 = digits.parse().ok()?;
    (1..DIM as u8)
        .contains(&index)
        .then_some(SignedIndex { sign, index })
}

fn parse_grid(text: &str, size: usize) -> Result<Vec<Vec<SignedIndex>>, TableError> {
    let mut rows = Vec::with_capacity(size);
    for (line_no, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let mut row = Vec::with_capacity(size);
        for (column, token) in line.split_whitespace().enumerate() {
            let cell = parse_unit_symbol(token).ok_or_else(|| TableError::Parse {
                line: line_no + 1,
                column: column + 1,
                message: format!("invalid basis symbol `{token}`"),
            })?;
            row.push(cell);
        }
        if row.len() != size {
            return Err(TableError::Parse {
                line: line_no + 1,
                column: row.len().min(size) + 1,
                message: format!("expected {size} entries, found {}", row.len()),
            });
        }
        rows.push(row);
    }
    if rows.len() != size {
        return Err(TableError::Parse {
            line: text.lines().count() + 1,
            column: 1,
            message: format!("expected {size} rows, found {}", rows.len()),
        });
    }
    Ok(rows)
}

/// `e_i * e_j` in the Kaluza table.
pub fn basis_mul(i: usize, j: usize) -> Result<BasisProduct, TableError> {
    CayleyTable::kaluza().basis_mul(i, j)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_examples() {
        assert_eq!(basis_mul(0, 17).unwrap(), SignedIndex::plus(17));
        assert_eq!(basis_mul(1, 2).unwrap(), SignedIndex::plus(6));
        assert_eq!(basis_mul(2, 1).unwrap(), SignedIndex::minus(6));
        assert_eq!(basis_mul(3, 3).unwrap(), SignedIndex::minus(0));
        assert_eq!(basis_mul(31, 31).unwrap(), SignedIndex::minus(0));
    }

    #[test]
    fn out_of_range() {
        assert_eq!(basis_mul(32, 0), Err(TableError::IndexOutOfRange(32)));
        assert_eq!(basis_mul(0, 40), Err(TableError::IndexOutOfRange(40)));
    }

    #[test]
    fn embedded_table_is_valid() {
        assert!(CayleyTable::kaluza().validate().is_empty());
        assert!(CayleyTable::printed().validate().is_empty());
    }

    #[test]
    fn diagonal_signs() {
        let t = CayleyTable::kaluza();
        for i in 0..3 {
            assert_eq!(t.get(i, i), SignedIndex::plus(0));
        }
        assert_eq!(t.get(3, 3), SignedIndex::minus(0));
        let squares_to_minus_one = (0..DIM)
            .filter(|&i| t.get(i, i).sign == Sign::Minus)
            .count();
        assert_eq!(squares_to_minus_one, 16);
    }

    #[test]
    fn duplicated_cell_is_reported() {
        let mut t = CayleyTable::kaluza().clone();
        t.set(5, 6, t.get(5, 5));
        let report = t.validate();
        assert!(report
            .iter()
            .any(|v| matches!(v, Violation::RowNotSignedPermutation { row: 5, .. })));
    }

    #[test]
    fn broken_identity_row_is_reported() {
        let mut t = CayleyTable::kaluza().clone();
        t.set(0, 3, SignedIndex::plus(4));
        let report = t.validate();
        assert!(report.contains(&Violation::IdentityRow {
            column: 3,
            found: SignedIndex::plus(4)
        }));
        assert!(report
            .iter()
            .any(|v| v.to_string().starts_with("identity row")));
    }

    #[test]
    fn nonscalar_square_is_reported() {
        let mut t = CayleyTable::kaluza().clone();
        t.set(7, 7, SignedIndex::plus(9));
        assert!(t.validate().contains(&Violation::SquareNotScalar {
            index: 7,
            found: SignedIndex::plus(9)
        }));
    }

    #[test]
    fn correction_restores_associativity() {
        assert!(CayleyTable::kaluza().associativity_failures().is_empty());
        let printed = CayleyTable::printed().associativity_failures();
        assert_eq!(printed.len(), 122);
    }

    #[test]
    fn quadrant_dump_cells() {
        let t = CayleyTable::kaluza();
        let cell = |q: Quadrant, r: usize, c: usize| {
            t.dump_quadrant(q)
                .lines()
                .nth(r)
                .unwrap()
                .split_whitespace()
                .nth(c)
                .unwrap()
                .to_string()
        };
        assert_eq!(cell(Quadrant::NorthWest, 1, 2), "e6");
        assert_eq!(cell(Quadrant::SouthEast, 15, 15), "-1");
        assert_eq!(cell(Quadrant::NorthEast, 1, 0), "e10");
        assert_eq!(cell(Quadrant::NorthWest, 0, 0), "1");
    }

    #[test]
    fn dump_round_trips() {
        let t = CayleyTable::kaluza();
        let [nw, ne, sw, se] = Quadrant::ALL.map(|q| t.dump_quadrant(q));
        assert_eq!(
            &CayleyTable::parse_quadrants(&nw, &ne, &sw, &se).unwrap(),
            t
        );
        assert_eq!(&CayleyTable::from_text(&t.to_text()).unwrap(), t);
    }

    #[test]
    fn parse_errors_locate_the_cell() {
        let mut text = CayleyTable::kaluza().to_text();
        text = text.replacen("+e6", "+x6", 1);
        match CayleyTable::from_text(&text) {
            Err(TableError::Parse { line, column, .. }) => {
                assert_eq!(line, 1);
                assert_eq!(column, 7);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_unit_symbol("e32").is_none());
        assert!(parse_unit_symbol("e0").is_none());
        assert_eq!(parse_unit_symbol("+1"), Some(SignedIndex::plus(0)));
    }
}
