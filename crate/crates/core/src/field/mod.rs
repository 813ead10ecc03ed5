//! Prime-field arithmetic and the exact-integer plumbing built on it.

mod crt;
mod element;
mod interp;
mod primality;

pub use crt::{crt_reconstruct, CrtBasis};
pub use element::{FieldElement, PrimeField, MERSENNE_61};
pub use interp::{factorial_table, interpolate_consecutive};
pub use primality::is_prime;
