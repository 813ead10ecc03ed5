use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::element::PrimeField;
use super::primality::is_prime;
use crate::error::{Error, Result};

/// Pairwise-distinct primes together with their exact product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrtBasis {
    primes: Vec<u64>,
    product: BigUint,
}

impl CrtBasis {
    pub fn new(primes: Vec<u64>) -> Result<Self> {
        for (i, &p) in primes.iter().enumerate() {
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            if primes[..i].contains(&p) {
                return Err(Error::CrtRange(format!("prime {p} listed twice")));
            }
        }
        let product = primes.iter().map(|&p| BigUint::from(p)).product();
        Ok(CrtBasis { primes, product })
    }

    /// The largest primes below `2^62`, as few as needed for the product to
    /// exceed `2 * bound`.
    pub fn covering(bound: &BigUint) -> Self {
        let target: BigUint = bound * 2u32;
        let mut primes = Vec::new();
        let mut product = BigUint::one();
        let mut candidate: u64 = (1 << 62) - 1;
        while primes.is_empty() || product <= target {
            while !is_prime(candidate) {
                candidate -= 2;
            }
            primes.push(candidate);
            product *= candidate;
            candidate -= 2;
        }
        CrtBasis { primes, product }
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn product(&self) -> &BigUint {
        &self.product
    }

    /// The unique integer `v` with `|v| <= bound` and `v ≡ residues[i]
    /// (mod primes[i])`, using the balanced range `(-M/2, M/2]`.
    pub fn reconstruct(&self, residues: &[u64], bound: &BigUint) -> Result<BigInt> {
        if residues.len() != self.primes.len() {
            return Err(Error::Arity {
                expected: self.primes.len(),
                got: residues.len(),
            });
        }
        if self.product <= bound * 2u32 {
            return Err(Error::CrtRange(format!(
                "prime product {} does not exceed 2 * {}",
                self.product, bound
            )));
        }
        let mut acc = BigUint::zero();
        for (&p, &r) in self.primes.iter().zip(residues) {
            let field = PrimeField::new(p)?;
            let cofactor = &self.product / p;
            let cofactor_mod = (&cofactor % p)
                .to_u64_digits()
                .first()
                .copied()
                .unwrap_or(0);
            // Pairwise-distinct primes make the cofactor a unit mod p.
            let coeff = field.element(r) * field.element(cofactor_mod).inv()?;
            acc += cofactor * coeff.value();
        }
        acc %= &self.product;
        let half = &self.product >> 1u32;
        let value = if acc > half {
            BigInt::from(acc) - BigInt::from(self.product.clone())
        } else {
            BigInt::from(acc)
        };
        if value.magnitude() > bound {
            return Err(Error::CrtRange(format!(
                "reconstructed value {value} exceeds the bound {bound}"
            )));
        }
        Ok(value)
    }
}

/// Recover the signed integer of magnitude at most `bound` from
/// `(residue, prime)` pairs.
pub fn crt_reconstruct(residues: &[(u64, u64)], bound: &BigUint) -> Result<BigInt> {
    let basis = CrtBasis::new(residues.iter().map(|&(_, p)| p).collect())?;
    let values: Vec<u64> = residues.iter().map(|&(r, _)| r).collect();
    basis.reconstruct(&values, bound)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reconstruct(res: &[(u64, u64)], bound: u64) -> Result<BigInt> {
        crt_reconstruct(res, &BigUint::from(bound))
    }

    #[test]
    fn small_examples() {
        assert_eq!(reconstruct(&[(3, 7), (10, 11)], 20), Ok(BigInt::from(10)));
        assert_eq!(reconstruct(&[(0, 7), (0, 11)], 20), Ok(BigInt::from(0)));
        assert_eq!(reconstruct(&[(6, 7), (10, 11)], 20), Ok(BigInt::from(-1)));
    }

    #[test]
    fn examples_agree_with_enumeration() {
        // Brute-force oracle: scan [-38, 38] for the unique match.
        let oracle = |r7: i64, r11: i64| {
            let hits: Vec<i64> = (-38..=38)
                .filter(|v: &i64| v.rem_euclid(7) == r7 && v.rem_euclid(11) == r11)
                .collect();
            assert_eq!(hits.len(), 1);
            hits[0]
        };
        assert_eq!(oracle(3, 10), 10);
        assert_eq!(oracle(6, 10), -1);
    }

    #[test]
    fn insufficient_product_is_rejected() {
        assert!(matches!(
            reconstruct(&[(1, 7), (1, 11)], 40),
            Err(Error::CrtRange(_))
        ));
    }

    #[test]
    fn duplicate_or_composite_moduli_are_rejected() {
        assert!(reconstruct(&[(1, 7), (1, 7)], 1).is_err());
        assert_eq!(reconstruct(&[(1, 8)], 1), Err(Error::NotPrime(8)));
    }

    #[test]
    fn left_inverse_of_reduction_exhaustive() {
        let primes = [5u64, 7, 11];
        let bound = 192u64; // 385 > 2 * 192
        for v in -(bound as i64)..=bound as i64 {
            let res: Vec<(u64, u64)> = primes
                .iter()
                .map(|&p| (v.rem_euclid(p as i64) as u64, p))
                .collect();
            assert_eq!(reconstruct(&res, bound), Ok(BigInt::from(v)));
        }
    }

    #[test]
    fn covering_basis_is_large_enough() {
        let bound = BigUint::from(7u32).pow(200);
        let basis = CrtBasis::covering(&bound);
        assert!(basis.product() > &(&bound * 2u32));
        assert!(basis.primes().iter().all(|&p| p < 1 << 62 && is_prime(p)));
        assert_eq!(CrtBasis::covering(&BigUint::zero()).primes().len(), 1);

        let v = -BigInt::from(7u32).pow(199);
        let residues: Vec<u64> = basis
            .primes()
            .iter()
            .map(|&p| {
                let r = &v % BigInt::from(p);
                let r = if r < BigInt::zero() {
                    r + BigInt::from(p)
                } else {
                    r
                };
                r.magnitude().to_u64_digits().first().copied().unwrap_or(0)
            })
            .collect();
        assert_eq!(basis.reconstruct(&residues, &bound), Ok(v));
    }
}
