//! Factorized Kaluza multiplication with 512 multiplications.
//!
//! After reordering rows and columns with [`Permutation32::kaluza`], the
//! multiplication matrix of a right operand `b` splits into 256 bisymmetric
//! 2x2 blocks `[[p, q], [q, p]]`. Each block factors as
//! `H2 · diag((p+q)/2, (p-q)/2) · H2`, and the Hadamard stages are shared by
//! all blocks in a block row or block column. The half-sums and
//! half-differences are, up to sign, the 32 entries of the c-vector
//! `c = ½ (I16 ⊗ H2) P b`, so the whole product becomes
//!
//! ```text
//! y = P · W · A · D(b) · R · W · P · a
//! ```
//!
//! with `W = I16 ⊗ H2`, `R` the 32 -> 512 pair replication, `D(b)` a 512-entry
//! diagonal of signed c-values and `A` the 512 -> 32 fan-in sum.
//!
//! Per product: 512 multiplications (the diagonal), 544 additions (two
//! Hadamard stages of 32 and a fan-in of 480), plus 32 additions once per
//! right operand for the c-vector.

use std::fmt;
use std::sync::OnceLock;

use nalgebra::DMatrix;
use thiserror::Error;

use crate::cayley::{CayleyTable, DIM};
use crate::kaluza::{build_mul_matrix, mul_dense, mul_naive, KaluzaNumber, SymbolicMatrix};
use crate::linops::{
    fan_in_sum_into, hadamard_pairs_into, replicate_pairs_into, scale_in_place, Composition,
    Direction, LinearStage, OpCount, OpSink, Permutation32,
};
use crate::signed::SignedIndex;

/// Number of 2x2 block rows (and block columns).
pub const BLOCKS: usize = DIM / 2;
/// Length of the expanded diagonal.
pub const DIAGONAL_LEN: usize = BLOCKS * DIM;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum FactorizationError {
    #[error("2x2 block at block row {row_pair}, block column {column_pair} is not bisymmetric")]
    NotBisymmetric { row_pair: usize, column_pair: usize },
    #[error(
        "half-{kind} of block at block row {row_pair}, block column {column_pair} is not ±c_j for any j"
    )]
    NotInCVector {
        row_pair: usize,
        column_pair: usize,
        kind: &'static str,
    },
}

/// Half-sums and half-differences of paired right-operand coefficients.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CVector(pub [f64; DIM]);

impl CVector {
    pub fn values(&self) -> &[f64; DIM] {
        &self.0
    }
}

/// `c = ½ · W · P · b`: the coefficients of `b` are reordered, combined
/// pairwise into sums and differences (32 additions), then halved (free).
pub fn compute_c<S: OpSink>(b: &KaluzaNumber, counter: &mut S) -> CVector {
    compute_c_with(&Permutation32::kaluza(), b, counter)
}

fn compute_c_with<S: OpSink>(p: &Permutation32, b: &KaluzaNumber, counter: &mut S) -> CVector {
    let mut permuted = [0.0; DIM];
    p.apply_into(b.coeffs(), &mut permuted, Direction::Forward);
    let mut c = [0.0; DIM];
    hadamard_pairs_into(&permuted, &mut c, counter);
    for v in &mut c {
        // power-of-two scaling, a shift in hardware
        *v *= 0.5;
    }
    CVector(c)
}

/// `2·c_j` as an integer combination of `b_0..b_31`, for each `j`.
fn doubled_c_definitions(p: &Permutation32) -> [[i8; DIM]; DIM] {
    let mut defs = [[0i8; DIM]; DIM];
    let map = p.map();
    for t in 0..BLOCKS {
        let (u, v) = (map[2 * t] as usize, map[2 * t + 1] as usize);
        defs[2 * t][u] += 1;
        defs[2 * t][v] += 1;
        defs[2 * t + 1][u] += 1;
        defs[2 * t + 1][v] -= 1;
    }
    defs
}

/// Every 2x2 block `(row_pair, column_pair)` of `m` that is not of the form
/// `[[p, q], [q, p]]`.
pub fn bisymmetry_failures(m: &SymbolicMatrix) -> Vec<(usize, usize)> {
    let mut failures = Vec::new();
    for r in 0..BLOCKS {
        for k in 0..BLOCKS {
            let (r0, c0) = (2 * r, 2 * k);
            let diagonal_ok = m.get(r0, c0) == m.get(r0 + 1, c0 + 1);
            let anti_ok = m.get(r0, c0 + 1) == m.get(r0 + 1, c0);
            if !(diagonal_ok && anti_ok) {
                failures.push((r, k));
            }
        }
    }
    failures
}

/// A disagreement between the derived and the printed diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalMismatch {
    pub block: usize,
    pub slot: usize,
    pub derived: SignedIndex,
    pub printed: SignedIndex,
}

impl fmt::Display for DiagonalMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "s_{}^({}): derived {}, printed {}",
            self.slot,
            self.block,
            self.derived.symbol('c'),
            self.printed.symbol('c')
        )
    }
}

/// The 512 diagonal entries as signed references into the c-vector:
/// `blocks[k][m]` multiplies slot `32k + m` of the replicated vector.
#[derive(Clone, PartialEq, Eq)]
pub struct DiagonalSpec {
    blocks: [[SignedIndex; DIM]; BLOCKS],
}

impl fmt::Debug for DiagonalSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("DiagonalSpec(\n")?;
        f.write_str(&self.to_text())?;
        f.write_str(")")
    }
}

impl DiagonalSpec {
    /// Extracts the diagonal from the symbolic multiplication matrix of
    /// `table` reordered by `permutation`. Block `(r, k)` of the reordered
    /// matrix, `[[p, q], [q, p]]`, contributes `s_{2r}^(k) = (p+q)/2` and
    /// `s_{2r+1}^(k) = (p-q)/2`, each matched against the c-vector.
    #[allow(clippy::needless_range_loop)]
    pub fn derive(
        table: &CayleyTable,
        permutation: &Permutation32,
    ) -> Result<DiagonalSpec, FactorizationError> {
        let permuted = SymbolicMatrix::from_table(table).permuted(permutation);
        let defs = doubled_c_definitions(permutation);
        let lookup = |combo: [i8; DIM]| -> Option<SignedIndex> {
            let negated = combo.map(|v| -v);
            defs.iter().enumerate().find_map(|(j, def)| {
                if *def == combo {
                    Some(SignedIndex::plus(j as u8))
                } else if *def == negated {
                    Some(SignedIndex::minus(j as u8))
                } else {
                    None
                }
            })
        };

        let mut blocks = [[SignedIndex::plus(0); DIM]; BLOCKS];
        for r in 0..BLOCKS {
            for k in 0..BLOCKS {
                let p = permuted.get(2 * r, 2 * k);
                let q = permuted.get(2 * r, 2 * k + 1);
                if permuted.get(2 * r + 1, 2 * k + 1) != p || permuted.get(2 * r + 1, 2 * k) != q {
                    return Err(FactorizationError::NotBisymmetric {
                        row_pair: r,
                        column_pair: k,
                    });
                }
                let mut sum = [0i8; DIM];
                let mut diff = [0i8; DIM];
                sum[p.index()] += p.sign.as_i8();
                sum[q.index()] += q.sign.as_i8();
                diff[p.index()] += p.sign.as_i8();
                diff[q.index()] -= q.sign.as_i8();
                let missing = |kind| FactorizationError::NotInCVector {
                    row_pair: r,
                    column_pair: k,
                    kind,
                };
                blocks[k][2 * r] = lookup(sum).ok_or_else(|| missing("sum"))?;
                blocks[k][2 * r + 1] = lookup(diff).ok_or_else(|| missing("difference"))?;
            }
        }
        Ok(DiagonalSpec { blocks })
    }

    /// The diagonal of the Kaluza table, derived once and cached.
    pub fn kaluza() -> Result<&'static DiagonalSpec, FactorizationError> {
        static SPEC: OnceLock<Result<DiagonalSpec, FactorizationError>> = OnceLock::new();
        SPEC.get_or_init(|| DiagonalSpec::derive(CayleyTable::kaluza(), &Permutation32::kaluza()))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn from_blocks(blocks: [[SignedIndex; DIM]; BLOCKS]) -> Self {
        DiagonalSpec { blocks }
    }

    pub fn blocks(&self) -> &[[SignedIndex; DIM]; BLOCKS] {
        &self.blocks
    }

    /// `s_slot^(block)`.
    pub fn get(&self, block: usize, slot: usize) -> SignedIndex {
        self.blocks[block][slot]
    }

    /// Resolves the signed references against `c`. Sign application only;
    /// no counted operations.
    pub fn materialize(&self, c: &CVector) -> Box<[f64; DIAGONAL_LEN]> {
        let mut out = Box::new([0.0; DIAGONAL_LEN]);
        for (dst, block) in out.chunks_exact_mut(DIM).zip(&self.blocks) {
            for (d, s) in dst.iter_mut().zip(block) {
                *d = s.eval(&c.0);
            }
        }
        out
    }

    /// How many of the 512 entries reference each c-vector slot.
    pub fn reference_counts(&self) -> [usize; DIM] {
        let mut counts = [0; DIM];
        for s in self.blocks.iter().flatten() {
            counts[s.index()] += 1;
        }
        counts
    }

    pub fn compare(&self, printed: &[[SignedIndex; DIM]; BLOCKS]) -> Vec<DiagonalMismatch> {
        let mut out = Vec::new();
        for block in 0..BLOCKS {
            for slot in 0..DIM {
                let (derived, printed) = (self.blocks[block][slot], printed[block][slot]);
                if derived != printed {
                    out.push(DiagonalMismatch {
                        block,
                        slot,
                        derived,
                        printed,
                    });
                }
            }
        }
        out
    }

    /// One block per line, entries like `c3` / `-c22`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for block in &self.blocks {
            let cells: Vec<String> = block
                .iter()
                .map(|s| format!("{:>4}", s.symbol('c')))
                .collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Derived diagonal against the printed one; empty when they agree.
pub fn compare_printed_diagonal() -> Result<Vec<DiagonalMismatch>, FactorizationError> {
    Ok(DiagonalSpec::kaluza()?.compare(crate::printed::diagonal_blocks()))
}

/// Everything that depends only on the right operand `b`, ready to be
/// applied to any number of left operands.
#[derive(Clone)]
pub struct FactorizedPipeline {
    permutation: Permutation32,
    c: CVector,
    diagonal: Box<[f64; DIAGONAL_LEN]>,
}

impl fmt::Debug for FactorizedPipeline {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FactorizedPipeline")
            .field("c", &self.c)
            .finish_non_exhaustive()
    }
}

impl FactorizedPipeline {
    /// Preprocesses `b`: 32 additions for the c-vector, then sign-only
    /// expansion of the diagonal.
    pub fn new<S: OpSink>(b: &KaluzaNumber, counter: &mut S) -> Result<Self, FactorizationError> {
        Ok(Self::with_spec(
            b,
            DiagonalSpec::kaluza()?,
            Permutation32::kaluza(),
            counter,
        ))
    }

    /// `spec` must have been derived with `permutation`.
    pub fn with_spec<S: OpSink>(
        b: &KaluzaNumber,
        spec: &DiagonalSpec,
        permutation: Permutation32,
        counter: &mut S,
    ) -> Self {
        let c = compute_c_with(&permutation, b, counter);
        let diagonal = spec.materialize(&c);
        FactorizedPipeline {
            permutation,
            c,
            diagonal,
        }
    }

    pub fn c_vector(&self) -> &CVector {
        &self.c
    }

    pub fn diagonal(&self) -> &[f64; DIAGONAL_LEN] {
        &self.diagonal
    }

    /// `a * b`: 512 multiplications, 544 additions.
    pub fn mul<S: OpSink>(&self, a: &KaluzaNumber, counter: &mut S) -> KaluzaNumber {
        let mut x = [0.0; DIM];
        let mut h = [0.0; DIM];
        let mut wide = [0.0; DIAGONAL_LEN];

        self.permutation
            .apply_into(a.coeffs(), &mut x, Direction::Forward);
        hadamard_pairs_into(&x, &mut h, counter);
        replicate_pairs_into(&h, &mut wide);
        scale_in_place(&mut wide, &self.diagonal[..], counter);
        fan_in_sum_into(&wide, &mut x, counter);
        hadamard_pairs_into(&x, &mut h, counter);
        self.permutation.apply_into(&h, &mut x, Direction::Forward);
        KaluzaNumber::new(x)
    }

    /// The operator chain as explicit stages, first applied first.
    pub fn composition(&self) -> Composition {
        Composition::new(vec![
            LinearStage::Permute(self.permutation),
            LinearStage::HadamardPairs { pairs: BLOCKS },
            LinearStage::Replicate {
                pairs: BLOCKS,
                copies: BLOCKS,
            },
            LinearStage::Diagonal(self.diagonal.to_vec()),
            LinearStage::FanIn {
                arity: BLOCKS,
                width: DIM,
            },
            LinearStage::HadamardPairs { pairs: BLOCKS },
            LinearStage::Permute(self.permutation),
        ])
        .expect("pipeline stages have consistent dimensions")
    }

    /// Dense 32x32 matrix of the operator chain; equals the multiplication
    /// matrix of `b`.
    pub fn materialize(&self) -> DMatrix<f64> {
        self.composition().materialize()
    }
}

pub fn build_pipeline<S: OpSink>(
    b: &KaluzaNumber,
    counter: &mut S,
) -> Result<FactorizedPipeline, FactorizationError> {
    FactorizedPipeline::new(b, counter)
}

pub fn mul_fast<S: OpSink>(
    a: &KaluzaNumber,
    pipeline: &FactorizedPipeline,
    counter: &mut S,
) -> KaluzaNumber {
    pipeline.mul(a, counter)
}

/// Multiplication strategy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Engine {
    /// Direct expansion over the Cayley table.
    Naive,
    /// Dense multiplication matrix times vector.
    Dense,
    /// Factorized pipeline.
    Fast,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Engine::Naive => "naive",
            Engine::Dense => "dense",
            Engine::Fast => "fast",
        }
    }
}

/// Runs `engine` once on fixed operands and returns the tally. With
/// `include_preprocessing`, work that depends only on the right operand
/// (the c-vector for the fast engine) is counted too; the naive engine has
/// none, and building the dense matrix only copies signed coefficients.
pub fn count_operations(
    engine: Engine,
    include_preprocessing: bool,
) -> Result<OpCount, FactorizationError> {
    let a = KaluzaNumber::new(std::array::from_fn(|k| k as f64 + 1.0));
    let b = KaluzaNumber::new(std::array::from_fn(|k| 32.0 - 2.0 * k as f64));
    let mut pre = OpCount::default();
    let mut run = OpCount::default();
    match engine {
        Engine::Naive => {
            mul_naive(&a, &b, &mut run);
        }
        Engine::Dense => {
            let m = build_mul_matrix(&b);
            mul_dense(&a, &m, &mut run);
        }
        Engine::Fast => {
            let pipeline = FactorizedPipeline::new(&b, &mut pre)?;
            pipeline.mul(&a, &mut run);
        }
    }
    Ok(if include_preprocessing {
        pre + run
    } else {
        run
    })
}
