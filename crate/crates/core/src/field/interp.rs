use super::element::{FieldElement, PrimeField};
use crate::error::{Error, Result};

/// `table[i] = i! mod p` for `0 <= i <= n`.
pub fn factorial_table(n: usize, field: PrimeField) -> Result<Vec<FieldElement>> {
    if n as u128 >= field.modulus() as u128 {
        return Err(Error::Domain(format!(
            "{n}! vanishes modulo {}",
            field.modulus()
        )));
    }
    let mut table = Vec::with_capacity(n + 1);
    let mut acc = field.one();
    table.push(acc);
    for i in 1..=n {
        acc *= field.element(i as u64);
        table.push(acc);
    }
    Ok(table)
}

/// Coefficients (constant term first) of the unique polynomial of degree
/// `< values.len()` taking `values[t]` at `x = t`.
pub fn interpolate_consecutive(
    field: PrimeField,
    values: &[FieldElement],
) -> Result<Vec<FieldElement>> {
    let m = values.len();
    if m == 0 {
        return Ok(Vec::new());
    }
    let d = m - 1;
    let fact = factorial_table(d, field)?;

    // master(x) = prod_{s=0}^{d} (x - s), coefficients low to high.
    let mut master = vec![field.zero(); m + 1];
    master[0] = field.one();
    for s in 0..m {
        let root = field.element(s as u64);
        for j in (0..=s + 1).rev() {
            let shifted = if j > 0 { master[j - 1] } else { field.zero() };
            master[j] = shifted - root * master[j];
        }
    }

    let mut coeffs = vec![field.zero(); m];
    let mut quotient = vec![field.zero(); m];
    for (t, &v) in values.iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        // prod_{s != t} (t - s) = t! * (-1)^(d - t) * (d - t)!
        let mut denom = fact[t] * fact[d - t];
        if (d - t) % 2 == 1 {
            denom = -denom;
        }
        let scale = v * denom.inv()?;
        // quotient = master / (x - t) by synthetic division from the top.
        let root = field.element(t as u64);
        let mut carry = field.zero();
        for j in (0..m).rev() {
            carry = master[j + 1] + carry * root;
            quotient[j] = carry;
        }
        for (c, &q) in coeffs.iter_mut().zip(&quotient) {
            *c += scale * q;
        }
    }
    Ok(coeffs)
}
