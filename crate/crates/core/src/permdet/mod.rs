//! Parameterized determinant and permanent.
//!
//! A k-permutation moves exactly `k` points; `p-det(A, k)` and
//! `p-perm(A, k)` sum `prod_{i : σ(i) != i} a_{i σ(i)}` over all of them,
//! with and without `sgn(σ)`. Fixed points contribute nothing, so both are
//! unchanged by zeroing the diagonal, and `p-det(A, k)` is the coefficient
//! of `x^k` in `det(I + x A')` where `A'` is `A` with zero diagonal.

mod brute;
mod graph;
mod interp;
mod kperm;
mod matching;
mod matrix;
mod reduce;

pub use brute::{pdet_bruteforce, pperm_bruteforce};
pub use graph::{BipartiteGraph, Edge};
pub use interp::{det_mod_p, generating_polynomial_mod_p, pdet_interpolation, pdet_residue};
pub use kperm::{for_each_k_permutation, KPermutation};
pub use matching::count_k_matchings;
pub use matrix::{IntMatrix, MAX_ENTRY};
pub use reduce::{matchings_to_pperm, pperm_to_matchings};
