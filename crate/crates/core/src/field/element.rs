use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use super::primality::is_prime;
use crate::error::{Error, Result};

/// `2^61 - 1`, the default modulus.
pub const MERSENNE_61: u64 = (1 << 61) - 1;

const MAX_MODULUS_BITS: u32 = 62;

/// The prime field `F_p` for a prime `p < 2^62`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeField {
    modulus: u64,
}

impl Default for PrimeField {
    fn default() -> Self {
        Self::mersenne61()
    }
}

impl PrimeField {
    pub fn new(modulus: u64) -> Result<Self> {
        if modulus >> MAX_MODULUS_BITS != 0 || !is_prime(modulus) {
            return Err(Error::NotPrime(modulus));
        }
        Ok(PrimeField { modulus })
    }

    pub const fn mersenne61() -> Self {
        PrimeField {
            modulus: MERSENNE_61,
        }
    }

    #[inline]
    pub fn modulus(self) -> u64 {
        self.modulus
    }

    #[inline]
    pub fn zero(self) -> FieldElement {
        FieldElement {
            value: 0,
            field: self,
        }
    }

    #[inline]
    pub fn one(self) -> FieldElement {
        FieldElement {
            value: 1 % self.modulus,
            field: self,
        }
    }

    #[inline]
    pub fn element(self, value: u64) -> FieldElement {
        FieldElement {
            value: value % self.modulus,
            field: self,
        }
    }

    pub fn from_i64(self, value: i64) -> FieldElement {
        self.from_i128(value as i128)
    }

    pub fn from_i128(self, value: i128) -> FieldElement {
        FieldElement {
            value: value.rem_euclid(self.modulus as i128) as u64,
            field: self,
        }
    }

    #[inline]
    fn reduce_wide(self, x: u128) -> u64 {
        if self.modulus == MERSENNE_61 {
            let p = MERSENNE_61 as u128;
            let folded = (x & p) + (x >> 61);
            let folded = (folded & p) + (folded >> 61);
            let r = folded as u64;
            if r >= MERSENNE_61 {
                r - MERSENNE_61
            } else {
                r
            }
        } else {
            (x % self.modulus as u128) as u64
        }
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.modulus)
    }
}

/// A residue in `[0, p)` tagged with its field.
///
/// The operator impls panic when the operands come from different fields;
/// the `try_*` methods report [`Error::FieldMismatch`] instead.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u64,
    field: PrimeField,
}

impl FieldElement {
    #[inline]
    pub fn value(self) -> u64 {
        self.value
    }

    #[inline]
    pub fn field(self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    /// Balanced representative in `(-p/2, p/2]`.
    pub fn to_signed(self) -> i128 {
        let p = self.field.modulus;
        if self.value > p / 2 {
            self.value as i128 - p as i128
        } else {
            self.value as i128
        }
    }

    fn check(self, other: Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field.modulus,
                right: other.field.modulus,
            });
        }
        Ok(())
    }

    pub fn try_add(self, rhs: Self) -> Result<Self> {
        self.check(rhs)?;
        Ok(self.add_unchecked(rhs))
    }

    pub fn try_sub(self, rhs: Self) -> Result<Self> {
        self.check(rhs)?;
        Ok(self.add_unchecked(rhs.neg()))
    }

    pub fn try_mul(self, rhs: Self) -> Result<Self> {
        self.check(rhs)?;
        Ok(self.mul_unchecked(rhs))
    }

    pub fn try_div(self, rhs: Self) -> Result<Self> {
        self.check(rhs)?;
        Ok(self.mul_unchecked(rhs.inv()?))
    }

    #[inline]
    fn add_unchecked(self, rhs: Self) -> Self {
        let p = self.field.modulus;
        // p < 2^62, so the sum cannot overflow.
        let s = self.value + rhs.value;
        FieldElement {
            value: if s >= p { s - p } else { s },
            field: self.field,
        }
    }

    #[inline]
    fn mul_unchecked(self, rhs: Self) -> Self {
        FieldElement {
            value: self
                .field
                .reduce_wide(self.value as u128 * rhs.value as u128),
            field: self.field,
        }
    }

    /// Square-and-multiply.
    pub fn pow(self, mut exp: u64) -> Self {
        let mut base = self;
        let mut acc = self.field.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_unchecked(base);
            }
            base = base.mul_unchecked(base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via Fermat's little theorem.
    pub fn inv(self) -> Result<Self> {
        if self.value == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(self.field.modulus - 2))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[inline]
#[track_caller]
fn assert_same(a: FieldElement, b: FieldElement) {
    assert!(
        a.field == b.field,
        "field mismatch: {} vs {}",
        a.field,
        b.field
    );
}

impl Add for FieldElement {
    type Output = Self;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        assert_same(self, rhs);
        self.add_unchecked(rhs)
    }
}

impl Sub for FieldElement {
    type Output = Self;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        assert_same(self, rhs);
        self.add_unchecked(rhs.neg())
    }
}

impl Mul for FieldElement {
    type Output = Self;
    #[inline]
    fn mul(self, rhs: Self) -> Self {
        assert_same(self, rhs);
        self.mul_unchecked(rhs)
    }
}

impl Neg for FieldElement {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        FieldElement {
            value: if self.value == 0 {
                0
            } else {
                self.field.modulus - self.value
            },
            field: self.field,
        }
    }
}

impl AddAssign for FieldElement {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl SubAssign for FieldElement {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl MulAssign for FieldElement {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f101() -> PrimeField {
        PrimeField::new(101).unwrap()
    }

    #[test]
    fn inverse_of_two_mod_101() {
        let f = f101();
        let inv = f.element(2).inv().unwrap();
        assert_eq!(inv.value(), 51);
        assert_eq!((f.element(2) * inv).value(), 1);
    }

    #[test]
    fn fermat() {
        let f = f101();
        assert_eq!(f.element(3).pow(100), f.one());
        assert_eq!(f.element(0).pow(0), f.one());
    }

    #[test]
    fn additive_identity() {
        let f = f101();
        for v in 0..101 {
            assert_eq!(f.element(v) + f.zero(), f.element(v));
        }
    }

    #[test]
    fn inverse_of_zero_is_an_error() {
        assert_eq!(f101().zero().inv(), Err(Error::DivisionByZero));
        assert_eq!(
            f101().one().try_div(f101().zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn mixed_moduli_are_rejected() {
        let a = f101().element(3);
        let b = PrimeField::new(103).unwrap().element(3);
        assert_eq!(
            a.try_add(b),
            Err(Error::FieldMismatch {
                left: 101,
                right: 103
            })
        );
        assert!(a.try_mul(b).is_err());
        assert!(a.try_sub(b).is_err());
    }

    #[test]
    #[should_panic(expected = "field mismatch")]
    fn operator_panics_on_mismatch() {
        let _ = f101().one() + PrimeField::new(103).unwrap().one();
    }

    #[test]
    fn rejects_composites_and_wide_moduli() {
        assert_eq!(PrimeField::new(100), Err(Error::NotPrime(100)));
        assert_eq!(PrimeField::new(1), Err(Error::NotPrime(1)));
        let wide = 9_223_372_036_854_775_783; // prime, 63 bits
        assert!(is_prime(wide));
        assert_eq!(PrimeField::new(wide), Err(Error::NotPrime(wide)));
    }

    #[test]
    fn signed_embedding() {
        let f = f101();
        assert_eq!(f.from_i64(-1).value(), 100);
        assert_eq!(f.from_i64(-1).to_signed(), -1);
        assert_eq!(f.element(50).to_signed(), 50);
        assert_eq!(f.element(51).to_signed(), -50);
    }

    #[test]
    fn mersenne_reduction_matches_generic() {
        let f = PrimeField::mersenne61();
        let a = f.element(MERSENNE_61 - 1);
        assert_eq!((a * a).value(), 1);
        let b = f.element(0x1234_5678_9abc_def0);
        let c = f.element(0x0fed_cba9_8765_4321);
        let expected = (b.value() as u128 * c.value() as u128 % MERSENNE_61 as u128) as u64;
        assert_eq!((b * c).value(), expected);
    }

    fn arb_mersenne() -> impl Strategy<Value = FieldElement> {
        (0..MERSENNE_61).prop_map(|v| PrimeField::mersenne61().element(v))
    }

    fn arb_f101() -> impl Strategy<Value = FieldElement> {
        (0u64..101).prop_map(|v| f101().element(v))
    }

    proptest! {
        #[test]
        fn ring_axioms_mersenne(a in arb_mersenne(), b in arb_mersenne(), c in arb_mersenne()) {
            prop_assert_eq!(a + b, b + a);
            prop_assert_eq!(a * b, b * a);
            prop_assert_eq!((a + b) + c, a + (b + c));
            prop_assert_eq!((a * b) * c, a * (b * c));
            prop_assert_eq!(a * (b + c), a * b + a * c);
            prop_assert_eq!(a - b, a + (-b));
            let exp = (a.value() as u128 * b.value() as u128 % MERSENNE_61 as u128) as u64;
            prop_assert_eq!((a * b).value(), exp);
        }

        #[test]
        fn ring_axioms_small(a in arb_f101(), b in arb_f101(), c in arb_f101()) {
            prop_assert_eq!((a + b) + c, a + (b + c));
            prop_assert_eq!(a * (b + c), a * b + a * c);
        }

        #[test]
        fn nonzero_elements_invert(a in 1..MERSENNE_61) {
            let x = PrimeField::mersenne61().element(a);
            prop_assert_eq!(x * x.inv().unwrap(), PrimeField::mersenne61().one());
        }
    }
}
