//! Exact construction and verification of the canonical orthogonal bases of the
//! simple modules of the Hecke algebra of the symmetric group acting on tensor space.
//!
//! Module map:
//! - [`qarith`]: `Q(q)` arithmetic, q-numbers, cyclotomic unit test, series mod p
//! - [`tensorspace`]: words, sparse tensors, inner product, exact linear algebra
//! - [`symgroup`]: permutations, the Hecke algebra in the `T_w` basis, `Q S_n`
//! - [`tensorrep`]: `R_i`, the quantized `U_q sl_d` operators, Casimirs, rotation check
//! - [`canonbasis`]: partitions, tableaux, the `P` operators and canonical bases
//! - [`idempotents`]: central, canonical and Frobenius-Young idempotents at `q = 1`
//! - [`dfreport`]: t-adic valuations of `i_{(1+t)^2}` mod p, deformation checks

pub mod canonbasis;
pub mod dfreport;
pub mod error;
pub mod idempotents;
pub mod qarith;
pub mod report;
pub mod scalar;
pub mod symgroup;
pub mod tensorrep;
pub mod tensorspace;

pub use error::{Error, Result};
pub use qarith::{LaurentPoly, Rational, RingElem};
pub use report::Report;
pub use scalar::{Param, Scalar};
