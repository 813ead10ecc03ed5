use num_bigint::BigInt;

use super::kperm::{for_each_derangement, sign_of};
use super::matrix::IntMatrix;
use crate::bigacc::{Product, Sum};
use crate::combin::{binomial, factorial, next_combination, unrank_combination};
use crate::error::{Error, Result};
use crate::exec::{self, Execution};

const SUBSETS_PER_TASK: u128 = 256;

fn check_parameter(a: &IntMatrix, k: usize) -> Result<()> {
    if k > a.order() {
        return Err(Error::Domain(format!(
            "k = {k} exceeds the matrix order {}",
            a.order()
        )));
    }
    Ok(())
}

/// Sum over all k-permutations of `sign? * prod_{moved i} a_{i σ(i)}`,
/// enumerated as (k-subset, derangement of the subset).
fn sum_over_k_permutations(
    a: &IntMatrix,
    k: usize,
    signed: bool,
    exec: Execution,
    limit: u64,
) -> Result<BigInt> {
    check_parameter(a, k)?;
    let n = a.order();
    let subsets = binomial(n as u64, k as u64);
    let work = subsets.saturating_mul(factorial(k as u64));
    if work > limit as u128 || k > u8::MAX as usize {
        return Err(Error::TooLarge(format!(
            "C({n}, {k}) * {k}! = {work} k-permutations exceed the limit {limit}"
        )));
    }
    // Derangements of 0..k, flattened, with their signs.
    let mut targets: Vec<u8> = Vec::new();
    let mut signs: Vec<i64> = Vec::new();
    for_each_derangement(k, |t| {
        targets.extend(t.iter().map(|&x| x as u8));
        signs.push(if signed { sign_of(t) } else { 1 });
    });
    let tasks = subsets.div_ceil(SUBSETS_PER_TASK);
    let partials = exec::map_range(exec, tasks as u64, |task| {
        let start = task as u128 * SUBSETS_PER_TASK;
        let end = (start + SUBSETS_PER_TASK).min(subsets);
        let mut moved = unrank_combination(n, k, start);
        let mut sum = Sum::default();
        for _ in start..end {
            for (d, &sign) in signs.iter().enumerate() {
                let target = &targets[d * k..(d + 1) * k];
                let mut term = Product::Small(sign as i128);
                for (t, &dst) in target.iter().enumerate() {
                    let entry = a.get(moved[t], moved[dst as usize]);
                    if entry == 0 {
                        term = Product::Small(0);
                        break;
                    }
                    term = term.times(entry as i128);
                }
                if !term.is_zero() {
                    sum.add(term);
                }
            }
            next_combination(&mut moved, n);
        }
        sum
    });
    Ok(partials
        .into_iter()
        .fold(Sum::default(), Sum::merge)
        .finish())
}

/// `p-perm(A, k)` by enumeration. `p-perm(A, 0) = 1` (the identity, empty
/// product) and `p-perm(A, 1) = 0`.
pub fn pperm_bruteforce(a: &IntMatrix, k: usize, exec: Execution, limit: u64) -> Result<BigInt> {
    sum_over_k_permutations(a, k, false, exec, limit)
}

/// `p-det(A, k)` by enumeration, weighting each k-permutation by its sign.
pub fn pdet_bruteforce(a: &IntMatrix, k: usize, exec: Execution, limit: u64) -> Result<BigInt> {
    sum_over_k_permutations(a, k, true, exec, limit)
}
