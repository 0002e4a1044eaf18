//! Seeded random operands for verification and benchmarking.
//!
//! The generator is `Mcg128Xsl64` from `rand_pcg`: a 128-bit multiplicative
//! congruential generator (multiplier 0x2360ed051fc65da44385df649fccf645)
//! with an xorshift-low output permutation to 64 bits. Seeding goes through
//! `SeedableRng::seed_from_u64`. Both are fixed algorithms, so a seed gives
//! the same operands on every platform.

use rand::{Rng, SeedableRng};
use rand_pcg::Mcg128Xsl64;

use crate::cayley::DIM;
use crate::kaluza::KaluzaNumber;

/// Bound for integer-mode coefficients: uniform in `[-2^10, 2^10]`.
pub const INTEGER_BOUND: i64 = 1 << 10;

pub struct OperandSampler {
    rng: Mcg128Xsl64,
}

impl OperandSampler {
    pub fn new(seed: u64) -> Self {
        OperandSampler {
            rng: Mcg128Xsl64::seed_from_u64(seed),
        }
    }

    /// Integer coefficients uniform in `[-bound, bound]`.
    pub fn integer_with_bound(&mut self, bound: i64) -> KaluzaNumber {
        KaluzaNumber::new(std::array::from_fn(|_| {
            self.rng.gen_range(-bound..=bound) as f64
        }))
    }

    pub fn integer(&mut self) -> KaluzaNumber {
        self.integer_with_bound(INTEGER_BOUND)
    }

    /// Real coefficients uniform in `[-1, 1)`.
    pub fn real(&mut self) -> KaluzaNumber {
        let coeffs: [f64; DIM] = std::array::from_fn(|_| self.rng.gen_range(-1.0..1.0));
        KaluzaNumber::new(coeffs)
    }
}
