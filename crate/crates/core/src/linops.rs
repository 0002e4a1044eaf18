//! Structured linear stages used by the factorized multiplication, with
//! per-application operation accounting and dense materialization.
//!
//! Accounting rules: every real multiplication and every real addition or
//! subtraction is tallied. Negations, data movement and multiplications by
//! powers of two are free.

use std::fmt;
use std::ops::{Add, AddAssign};

use nalgebra::DMatrix;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinopsError {
    #[error("expected a vector of length {expected}, got {found}")]
    Dimension { expected: usize, found: usize },
    #[error("pairwise Hadamard needs an even length, got {0}")]
    OddLength(usize),
    #[error("stage {stage} expects input dimension {expected}, previous stage produces {found}")]
    Composition {
        stage: usize,
        expected: usize,
        found: usize,
    },
    #[error("permutation map is not a bijection on 0..32 (index {0} repeated or out of range)")]
    NotBijective(usize),
}

/// Tally of real multiplications and real additions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct OpCount {
    pub multiplications: u64,
    pub additions: u64,
}

impl OpCount {
    pub const fn new(multiplications: u64, additions: u64) -> Self {
        OpCount {
            multiplications,
            additions,
        }
    }

    pub const fn total(self) -> u64 {
        self.multiplications + self.additions
    }
}

impl Add for OpCount {
    type Output = OpCount;

    fn add(self, rhs: OpCount) -> OpCount {
        OpCount::new(
            self.multiplications + rhs.multiplications,
            self.additions + rhs.additions,
        )
    }
}

impl AddAssign for OpCount {
    fn add_assign(&mut self, rhs: OpCount) {
        *self = *self + rhs;
    }
}

impl fmt::Display for OpCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mul, {} add", self.multiplications, self.additions)
    }
}

/// Destination for operation tallies. Kernels are generic over the sink so
/// that [`Uncounted`] compiles the bookkeeping away.
pub trait OpSink {
    fn record(&mut self, multiplications: u64, additions: u64);
}

impl OpSink for OpCount {
    #[inline]
    fn record(&mut self, multiplications: u64, additions: u64) {
        self.multiplications += multiplications;
        self.additions += additions;
    }
}

/// Sink that discards everything.
#[derive(Clone, Copy, Debug, Default)]
pub struct Uncounted;

impl OpSink for Uncounted {
    #[inline(always)]
    fn record(&mut self, _: u64, _: u64) {}
}

impl<S: OpSink + ?Sized> OpSink for &mut S {
    #[inline]
    fn record(&mut self, multiplications: u64, additions: u64) {
        (**self).record(multiplications, additions);
    }
}

/// Which way a [`Permutation32`] is applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `out[i] = x[map[i]]`
    Forward,
    /// `out[map[i]] = x[i]`
    Inverse,
}

/// Bijection on `0..32`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Permutation32 {
    map: [u8; 32],
}

impl Permutation32 {
    /// Row order used to expose the 2x2 bisymmetric block structure, as a
    /// 1-based list.
    pub const KALUZA_ORDER_ONE_BASED: [u8; 32] = [
        1, 2, 3, 7, 5, 9, 4, 8, 6, 10, 11, 17, 13, 19, 15, 21, 12, 18, 14, 20, 16, 22, 23, 27, 25,
        29, 24, 28, 26, 30, 31, 32,
    ];

    pub fn new(map: [u8; 32]) -> Result<Self, LinopsError> {
        let mut seen = [false; 32];
        for &target in &map {
            let t = target as usize;
            if t >= 32 || std::mem::replace(&mut seen[t], true) {
                return Err(LinopsError::NotBijective(t));
            }
        }
        Ok(Permutation32 { map })
    }

    pub fn identity() -> Self {
        Permutation32 {
            map: std::array::from_fn(|i| i as u8),
        }
    }

    /// The Kaluza reordering: output slot `i` takes input slot
    /// `KALUZA_ORDER_ONE_BASED[i] - 1`.
    pub fn kaluza() -> Self {
        Permutation32 {
            map: Self::KALUZA_ORDER_ONE_BASED.map(|i| i - 1),
        }
    }

    pub fn map(&self) -> &[u8; 32] {
        &self.map
    }

    pub fn inverse(&self) -> Self {
        let mut map = [0u8; 32];
        for (i, &target) in self.map.iter().enumerate() {
            map[target as usize] = i as u8;
        }
        Permutation32 { map }
    }

    /// `self ∘ other` as index maps: `(self ∘ other)[i] = other[self[i]]`, so
    /// applying the result forward equals applying `other` then `self`.
    pub fn then(&self, other: &Permutation32) -> Self {
        Permutation32 {
            map: std::array::from_fn(|i| other.map[self.map[i] as usize]),
        }
    }

    pub fn is_involution(&self) -> bool {
        self.map
            .iter()
            .enumerate()
            .all(|(i, &t)| self.map[t as usize] as usize == i)
    }

    /// Pure data movement; counts nothing.
    pub fn apply(&self, x: &[f64; 32], direction: Direction) -> [f64; 32] {
        let mut out = [0.0; 32];
        self.apply_into(x, &mut out, direction);
        out
    }

    #[inline]
    pub fn apply_into(&self, x: &[f64; 32], out: &mut [f64; 32], direction: Direction) {
        match direction {
            Direction::Forward => {
                for (o, &src) in out.iter_mut().zip(&self.map) {
                    *o = x[src as usize];
                }
            }
            Direction::Inverse => {
                for (&v, &dst) in x.iter().zip(&self.map) {
                    out[dst as usize] = v;
                }
            }
        }
    }

    /// Matrix `P` with `P x = apply(x, Forward)`.
    pub fn to_matrix(&self) -> DMatrix<f64> {
        let mut m = DMatrix::zeros(32, 32);
        for (i, &src) in self.map.iter().enumerate() {
            m[(i, src as usize)] = 1.0;
        }
        m
    }
}

/// `(x0, x1) -> (x0 + x1, x0 - x1)` on each consecutive pair.
pub fn hadamard_pairs<S: OpSink>(x: &[f64], counter: &mut S) -> Result<Vec<f64>, LinopsError> {
    if !x.len().is_multiple_of(2) {
        return Err(LinopsError::OddLength(x.len()));
    }
    let mut out = vec![0.0; x.len()];
    hadamard_pairs_into(x, &mut out, counter);
    Ok(out)
}

/// Slices must have equal even length.
#[inline]
pub fn hadamard_pairs_into<S: OpSink>(x: &[f64], out: &mut [f64], counter: &mut S) {
    debug_assert!(x.len().is_multiple_of(2) && out.len() == x.len());
    for (pair, dst) in x.chunks_exact(2).zip(out.chunks_exact_mut(2)) {
        dst[0] = pair[0] + pair[1];
        dst[1] = pair[0] - pair[1];
    }
    counter.record(0, x.len() as u64);
}

/// Stretches 32 values into 16 blocks of 32: block `k` is the pair
/// `(x[2k], x[2k+1])` repeated 16 times. Counts nothing.
pub fn replicate_pairs(x: &[f64]) -> Result<Vec<f64>, LinopsError> {
    if x.len() != 32 {
        return Err(LinopsError::Dimension {
            expected: 32,
            found: x.len(),
        });
    }
    Ok(replicate(x, 16, 16))
}

fn replicate(x: &[f64], pairs: usize, copies: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(2 * pairs * copies);
    for pair in x.chunks_exact(2).take(pairs) {
        for _ in 0..copies {
            out.extend_from_slice(pair);
        }
    }
    out
}

#[inline]
pub fn replicate_pairs_into(x: &[f64; 32], out: &mut [f64; 512]) {
    for (pair, block) in x.chunks_exact(2).zip(out.chunks_exact_mut(32)) {
        for dst in block.chunks_exact_mut(2) {
            dst.copy_from_slice(pair);
        }
    }
}

/// Componentwise product with a diagonal; one multiplication per entry.
pub fn block_diagonal_scale<S: OpSink>(
    x: &[f64],
    diagonal: &[f64],
    counter: &mut S,
) -> Result<Vec<f64>, LinopsError> {
    if x.len() != diagonal.len() {
        return Err(LinopsError::Dimension {
            expected: diagonal.len(),
            found: x.len(),
        });
    }
    let mut out = x.to_vec();
    scale_in_place(&mut out, diagonal, counter);
    Ok(out)
}

#[inline]
pub fn scale_in_place<S: OpSink>(x: &mut [f64], diagonal: &[f64], counter: &mut S) {
    debug_assert_eq!(x.len(), diagonal.len());
    for (v, &d) in x.iter_mut().zip(diagonal) {
        *v *= d;
    }
    counter.record(x.len() as u64, 0);
}

/// Sums 16 consecutive blocks of 32: `out[m] = Σ_k x[32k + m]`.
/// 15 additions per output.
pub fn fan_in_sum<S: OpSink>(x: &[f64], counter: &mut S) -> Result<Vec<f64>, LinopsError> {
    if x.len() != 512 {
        return Err(LinopsError::Dimension {
            expected: 512,
            found: x.len(),
        });
    }
    Ok(fan_in(x, 16, 32, counter))
}

fn fan_in<S: OpSink>(x: &[f64], arity: usize, width: usize, counter: &mut S) -> Vec<f64> {
    let mut out = x[..width].to_vec();
    for block in x.chunks_exact(width).take(arity).skip(1) {
        for (o, &v) in out.iter_mut().zip(block) {
            *o += v;
        }
    }
    counter.record(0, ((arity - 1) * width) as u64);
    out
}

#[inline]
pub fn fan_in_sum_into<S: OpSink>(x: &[f64; 512], out: &mut [f64; 32], counter: &mut S) {
    out.copy_from_slice(&x[..32]);
    for block in x.chunks_exact(32).skip(1) {
        for (o, &v) in out.iter_mut().zip(block) {
            *o += v;
        }
    }
    counter.record(0, 15 * 32);
}

/// One factor of a structured operator chain.
#[derive(Clone, Debug, PartialEq)]
pub enum LinearStage {
    /// Forward application of a permutation; 32 -> 32.
    Permute(Permutation32),
    /// `I_pairs ⊗ H2`; 2·pairs -> 2·pairs.
    HadamardPairs { pairs: usize },
    /// `I_pairs ⊗ (1_{copies×1} ⊗ I2)`; 2·pairs -> 2·pairs·copies.
    Replicate { pairs: usize, copies: usize },
    /// `diag(values)`; n -> n.
    Diagonal(Vec<f64>),
    /// `1_{1×arity} ⊗ I_width`; arity·width -> width.
    FanIn { arity: usize, width: usize },
}

impl LinearStage {
    pub fn input_dim(&self) -> usize {
        match self {
            LinearStage::Permute(_) => 32,
            LinearStage::HadamardPairs { pairs } => 2 * pairs,
            LinearStage::Replicate { pairs, .. } => 2 * pairs,
            LinearStage::Diagonal(values) => values.len(),
            LinearStage::FanIn { arity, width } => arity * width,
        }
    }

    pub fn output_dim(&self) -> usize {
        match self {
            LinearStage::Permute(_) => 32,
            LinearStage::HadamardPairs { pairs } => 2 * pairs,
            LinearStage::Replicate { pairs, copies } => 2 * pairs * copies,
            LinearStage::Diagonal(values) => values.len(),
            LinearStage::FanIn { width, .. } => *width,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            LinearStage::Permute(_) => "permute",
            LinearStage::HadamardPairs { .. } => "hadamard-pairs",
            LinearStage::Replicate { .. } => "replicate",
            LinearStage::Diagonal(_) => "diagonal",
            LinearStage::FanIn { .. } => "fan-in",
        }
    }

    pub fn apply<S: OpSink>(&self, x: &[f64], counter: &mut S) -> Result<Vec<f64>, LinopsError> {
        if x.len() != self.input_dim() {
            return Err(LinopsError::Dimension {
                expected: self.input_dim(),
                found: x.len(),
            });
        }
        Ok(match self {
            LinearStage::Permute(p) => {
                let x: &[f64; 32] = x.try_into().expect("length checked");
                p.apply(x, Direction::Forward).to_vec()
            }
            LinearStage::HadamardPairs { .. } => hadamard_pairs(x, counter)?,
            LinearStage::Replicate { pairs, copies } => replicate(x, *pairs, *copies),
            LinearStage::Diagonal(values) => block_diagonal_scale(x, values, counter)?,
            LinearStage::FanIn { arity, width } => fan_in(x, *arity, *width, counter),
        })
    }

    /// Dense `output_dim × input_dim` matrix of the stage.
    pub fn materialize(&self) -> DMatrix<f64> {
        match self {
            LinearStage::Permute(p) => p.to_matrix(),
            LinearStage::HadamardPairs { pairs } => {
                let mut m = DMatrix::zeros(2 * pairs, 2 * pairs);
                for k in 0..*pairs {
                    let (r, c) = (2 * k, 2 * k);
                    m[(r, c)] = 1.0;
                    m[(r, c + 1)] = 1.0;
                    m[(r + 1, c)] = 1.0;
                    m[(r + 1, c + 1)] = -1.0;
                }
                m
            }
            LinearStage::Replicate { pairs, copies } => {
                let mut m = DMatrix::zeros(2 * pairs * copies, 2 * pairs);
                for k in 0..*pairs {
                    for copy in 0..*copies {
                        let row = 2 * (k * copies + copy);
                        m[(row, 2 * k)] = 1.0;
                        m[(row + 1, 2 * k + 1)] = 1.0;
                    }
                }
                m
            }
            LinearStage::Diagonal(values) => DMatrix::from_diagonal(&values.clone().into()),
            LinearStage::FanIn { arity, width } => {
                let mut m = DMatrix::zeros(*width, arity * width);
                for k in 0..*arity {
                    for j in 0..*width {
                        m[(j, k * width + j)] = 1.0;
                    }
                }
                m
            }
        }
    }
}

/// Stages applied first to last.
#[derive(Clone, Debug, PartialEq)]
pub struct Composition {
    stages: Vec<LinearStage>,
}

impl Composition {
    pub fn new(stages: Vec<LinearStage>) -> Result<Self, LinopsError> {
        for (i, pair) in stages.windows(2).enumerate() {
            if pair[0].output_dim() != pair[1].input_dim() {
                return Err(LinopsError::Composition {
                    stage: i + 1,
                    expected: pair[1].input_dim(),
                    found: pair[0].output_dim(),
                });
            }
        }
        Ok(Composition { stages })
    }

    pub fn stages(&self) -> &[LinearStage] {
        &self.stages
    }

    pub fn apply<S: OpSink>(&self, x: &[f64], counter: &mut S) -> Result<Vec<f64>, LinopsError> {
        self.stages
            .iter()
            .try_fold(x.to_vec(), |v, stage| stage.apply(&v, counter))
    }

    /// `S_n ⋯ S_2 S_1` as a dense matrix.
    pub fn materialize(&self) -> DMatrix<f64> {
        let mut stages = self.stages.iter();
        let Some(first) = stages.next() else {
            return DMatrix::zeros(0, 0);
        };
        stages.fold(first.materialize(), |acc, stage| match stage {
            LinearStage::Diagonal(values) => {
                let mut scaled = acc;
                for (mut row, &d) in scaled.row_iter_mut().zip(values) {
                    row *= d;
                }
                scaled
            }
            _ => stage.materialize() * acc,
        })
    }
}

/// Writes a matrix as text: rows newline-separated, entries space-separated.
pub fn matrix_to_text(m: &DMatrix<f64>) -> String {
    let mut out = String::new();
    for row in m.row_iter() {
        let cells: Vec<String> = row.iter().map(|v| format_entry(*v)).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

/// Shortest round-trip decimal, with `-0` normalized to `0`.
pub fn format_entry(v: f64) -> String {
    if v == 0.0 {
        "0".to_string()
    } else {
        format!("{v}")
    }
}
