//! Kaluza numbers: a 32-dimensional algebra over the reals with basis
//! `e_0 = 1, e_1, ..., e_31`, naive and factorized multiplication, and the
//! linear operators used by the factorization.
//!
//! ```
//! use kaluza::{build_pipeline, mul_fast, mul_naive, KaluzaNumber, Uncounted};
//!
//! let a = KaluzaNumber::basis(1);
//! let b = KaluzaNumber::basis(2);
//! let pipeline = build_pipeline(&b, &mut Uncounted).unwrap();
//! assert_eq!(mul_fast(&a, &pipeline, &mut Uncounted), KaluzaNumber::basis(6));
//! assert_eq!(mul_naive(&a, &b, &mut Uncounted), KaluzaNumber::basis(6));
//! ```

pub mod cayley;
pub mod fastmul;
pub mod kaluza;
pub mod linops;
pub mod printed;
pub mod sampling;
pub mod signed;

pub use cayley::{basis_mul, BasisProduct, CayleyTable, Quadrant, TableError, Violation, DIM};
pub use fastmul::{
    build_pipeline, compute_c, count_operations, mul_fast, CVector, DiagonalSpec, Engine,
    FactorizationError, FactorizedPipeline,
};
pub use kaluza::{
    add, build_mul_matrix, mul_dense, mul_naive, KaluzaNumber, MulMatrix, ParseError,
    SymbolicMatrix,
};
pub use linops::{Direction, LinopsError, OpCount, OpSink, Permutation32, Uncounted};
pub use sampling::OperandSampler;
pub use signed::{Sign, SignedIndex};
