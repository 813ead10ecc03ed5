use num_bigint::{BigInt, BigUint};

use super::matrix::IntMatrix;
use crate::combin::{binomial, falling_factorial};
use crate::error::{Error, Result};
use crate::exec::{self, Execution};
use crate::field::{interpolate_consecutive, CrtBasis, FieldElement, PrimeField};

/// Determinant of a square matrix over `F_p` by Gaussian elimination with
/// pivot search down the column.
pub fn det_mod_p(field: PrimeField, n: usize, mut m: Vec<FieldElement>) -> FieldElement {
    assert_eq!(m.len(), n * n, "matrix shape");
    let mut det = field.one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r * n + col].is_zero()) else {
            return field.zero();
        };
        if pivot != col {
            for j in 0..n {
                m.swap(pivot * n + j, col * n + j);
            }
            det = -det;
        }
        let p = m[col * n + col];
        det *= p;
        let p_inv = p.inv().expect("pivot is nonzero");
        for r in col + 1..n {
            let factor = m[r * n + col] * p_inv;
            if factor.is_zero() {
                continue;
            }
            for j in col..n {
                let v = m[col * n + j];
                m[r * n + j] -= factor * v;
            }
        }
    }
    det
}

/// Coefficients (constant term first) of `det(I + x A')` over `F_p`,
/// where `A'` is `A` with zero diagonal, recovered from its values at
/// `x = 0, 1, ..., n`.
pub fn generating_polynomial_mod_p(a: &IntMatrix, field: PrimeField) -> Result<Vec<FieldElement>> {
    let n = a.order();
    if n as u64 >= field.modulus() {
        return Err(Error::FieldTooSmall {
            modulus: field.modulus(),
            required: n as u64,
        });
    }
    let reduced = a.zero_diagonal();
    let values: Vec<FieldElement> = (0..=n as u64)
        .map(|t| {
            let x = field.element(t);
            let mut m = Vec::with_capacity(n * n);
            for i in 0..n {
                for j in 0..n {
                    let entry = x * field.from_i64(reduced.get(i, j));
                    m.push(if i == j { entry + field.one() } else { entry });
                }
            }
            det_mod_p(field, n, m)
        })
        .collect();
    interpolate_consecutive(field, &values)
}

/// `p-det(A, k) mod p`.
pub fn pdet_residue(a: &IntMatrix, k: usize, field: PrimeField) -> Result<FieldElement> {
    if k > a.order() {
        return Err(Error::Domain(format!(
            "k = {k} exceeds the matrix order {}",
            a.order()
        )));
    }
    Ok(generating_polynomial_mod_p(a, field)?[k])
}

/// `|p-det(A, k)| <= C(n, k) * k! * max|a'_ij|^k`.
fn magnitude_bound(a: &IntMatrix, k: usize) -> BigUint {
    let n = a.order() as u64;
    let arrangements =
        BigUint::from(binomial(n, k as u64)) * BigUint::from(falling_factorial(k as u64, k as u64));
    arrangements * BigUint::from(a.zero_diagonal().max_abs()).pow(k as u32)
}

/// `p-det(A, k)` as the coefficient of `x^k` in `det(I + x A')`, computed
/// modulo enough 62-bit primes to pin the integer down, then recovered by
/// CRT. Costs `O(n^4)` field operations per prime.
pub fn pdet_interpolation(a: &IntMatrix, k: usize, exec: Execution) -> Result<BigInt> {
    if k > a.order() {
        return Err(Error::Domain(format!(
            "k = {k} exceeds the matrix order {}",
            a.order()
        )));
    }
    let bound = magnitude_bound(a, k);
    let basis = CrtBasis::covering(&bound);
    let primes = basis.primes();
    let residues = exec::try_map_range(exec, primes.len() as u64, |i| {
        let field = PrimeField::new(primes[i as usize])?;
        pdet_residue(a, k, field).map(|r| r.value())
    })?;
    basis.reconstruct(&residues, &bound)
}
