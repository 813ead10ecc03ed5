//! Small combinatorial helpers shared by the enumerators.

/// `C(n, k)`, saturating at `u128::MAX`.
pub(crate) fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step.
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// `n! / (n - k)!`, saturating.
pub(crate) fn falling_factorial(n: u64, k: u64) -> u128 {
    (0..k).fold(1u128, |acc, i| {
        acc.saturating_mul(n.saturating_sub(i) as u128)
    })
}

pub(crate) fn factorial(n: u64) -> u128 {
    falling_factorial(n, n)
}

/// The `rank`-th `k`-subset of `0..n` in lexicographic order.
pub(crate) fn unrank_combination(n: usize, k: usize, mut rank: u128) -> Vec<usize> {
    let mut out = Vec::with_capacity(k);
    let mut c = 0usize;
    for i in 0..k {
        let remaining = (k - i - 1) as u64;
        loop {
            let count = binomial((n - c - 1) as u64, remaining);
            if rank < count {
                break;
            }
            rank -= count;
            c += 1;
        }
        out.push(c);
        c += 1;
    }
    out
}

/// Advance `comb` (a strictly increasing subset of `0..n`) to its
/// lexicographic successor. Returns false when `comb` was the last one.
pub(crate) fn next_combination(comb: &mut [usize], n: usize) -> bool {
    let k = comb.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if comb[i] < n - k + i {
            comb[i] += 1;
            for j in i + 1..k {
                comb[j] = comb[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
