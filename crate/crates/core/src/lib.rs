//! Degree-parameterized polynomial identity testing and parameterized
//! permanent/determinant computation over prime fields.
//!
//! The crate is organised bottom-up:
//!
//! - [`field`]: prime-field arithmetic, CRT reconstruction, factorial tables
//!   and univariate interpolation on consecutive nodes.
//! - [`circuit`]: arithmetic circuits over `{-1, 0, 1} ∪ {x_1..x_n}`, a
//!   line-based text format, syntactic degree and evaluation.
//! - [`svgen`]: the Shpilka–Volkovich generator `G_k` and the weight-bounded
//!   point sets `W^k_n(S)`.
//! - [`pit`]: randomized and exhaustive identity testers.
//! - [`permdet`]: `p-det`, `p-perm`, weighted k-matching counts and the
//!   reductions between them.
//!
//! Data-parallel loops go through [`exec::Execution`]; with the `parallel`
//! feature disabled every loop runs sequentially and produces identical
//! results.

pub mod circuit;
pub mod corpus;
pub mod error;
pub mod exec;
pub mod field;
pub mod permdet;
pub mod pit;
pub mod svgen;

mod bigacc;
mod combin;

pub use error::{Error, Result};
pub use exec::Execution;

/// Default cap on the number of points, permutations or search nodes an
/// exhaustive routine may enumerate before giving up with
/// [`Error::TooLarge`].
pub const DEFAULT_ENUMERATION_LIMIT: u64 = 10_000_000;
