use crate::combin::next_combination;
use crate::error::{Error, Result};

/// A permutation of `0..n` that moves exactly the points in `moved`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KPermutation {
    moved: Vec<usize>,
    /// `σ(moved[t]) = moved[target[t]]`
    target: Vec<usize>,
}

impl KPermutation {
    /// From the moved set (strictly increasing) and the images of its
    /// points, in the same order.
    pub fn new(moved: Vec<usize>, image: Vec<usize>) -> Result<Self> {
        if moved.len() != image.len() {
            return Err(Error::Arity {
                expected: moved.len(),
                got: image.len(),
            });
        }
        if moved.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Domain(
                "moved set must be strictly increasing".into(),
            ));
        }
        let mut used = vec![false; moved.len()];
        let mut target = Vec::with_capacity(moved.len());
        for (t, img) in image.iter().enumerate() {
            let idx = moved
                .binary_search(img)
                .map_err(|_| Error::Domain(format!("image {img} is not a moved point")))?;
            if idx == t {
                return Err(Error::Domain(format!("{img} is a fixed point")));
            }
            if std::mem::replace(&mut used[idx], true) {
                return Err(Error::Domain(format!("{img} is hit twice")));
            }
            target.push(idx);
        }
        Ok(KPermutation { moved, target })
    }

    /// From a full permutation `perm[i] = σ(i)`.
    pub fn from_permutation(perm: &[usize]) -> Result<Self> {
        let moved: Vec<usize> = (0..perm.len()).filter(|&i| perm[i] != i).collect();
        let image = moved.iter().map(|&i| perm[i]).collect();
        Self::new(moved, image)
    }

    pub fn k(&self) -> usize {
        self.moved.len()
    }

    pub fn moved(&self) -> &[usize] {
        &self.moved
    }

    pub fn image(&self) -> Vec<usize> {
        self.target.iter().map(|&t| self.moved[t]).collect()
    }

    pub fn to_permutation(&self, n: usize) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..n).collect();
        for (t, &i) in self.moved.iter().enumerate() {
            perm[i] = self.moved[self.target[t]];
        }
        perm
    }

    /// Number of cycles on the moved set.
    pub fn cycle_count(&self) -> usize {
        cycle_count(&self.target)
    }

    /// `(-1)^(k - cycles)`, the sign of the full permutation.
    pub fn sign(&self) -> i64 {
        sign_of(&self.target)
    }

    /// Sign computed independently, by counting the swaps selection sort
    /// needs to restore the identity.
    pub fn sign_by_transpositions(&self, n: usize) -> i64 {
        let mut perm = self.to_permutation(n);
        let mut swaps = 0;
        for i in 0..n {
            while perm[i] != i {
                let j = perm[i];
                perm.swap(i, j);
                swaps += 1;
            }
        }
        if swaps % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

pub(crate) fn cycle_count(target: &[usize]) -> usize {
    let mut seen = 0u64;
    let mut seen_big = if target.len() > 64 {
        vec![false; target.len()]
    } else {
        Vec::new()
    };
    let mut cycles = 0;
    for start in 0..target.len() {
        let visited = if seen_big.is_empty() {
            seen >> start & 1 == 1
        } else {
            seen_big[start]
        };
        if visited {
            continue;
        }
        cycles += 1;
        let mut i = start;
        loop {
            if seen_big.is_empty() {
                seen |= 1 << i;
            } else {
                seen_big[i] = true;
            }
            i = target[i];
            if i == start {
                break;
            }
        }
    }
    cycles
}

pub(crate) fn sign_of(target: &[usize]) -> i64 {
    if (target.len() - cycle_count(target)).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Visit every fixed-point-free permutation of `0..k` (as `target`
/// vectors) in lexicographic order.
pub(crate) fn for_each_derangement(k: usize, mut visit: impl FnMut(&[usize])) {
    fn rec(t: usize, target: &mut Vec<usize>, used: &mut [bool], visit: &mut dyn FnMut(&[usize])) {
        let k = used.len();
        if t == k {
            visit(target);
            return;
        }
        for c in 0..k {
            if c == t || used[c] {
                continue;
            }
            used[c] = true;
            target.push(c);
            rec(t + 1, target, used, visit);
            target.pop();
            used[c] = false;
        }
    }
    let mut target = Vec::with_capacity(k);
    let mut used = vec![false; k];
    rec(0, &mut target, &mut used, &mut visit);
}

/// Visit every k-permutation of `0..n`: moved sets in lexicographic order,
/// then derangements of each.
pub fn for_each_k_permutation(n: usize, k: usize, mut visit: impl FnMut(&KPermutation)) {
    if k > n {
        return;
    }
    let mut moved: Vec<usize> = (0..k).collect();
    loop {
        for_each_derangement(k, |target| {
            visit(&KPermutation {
                moved: moved.clone(),
                target: target.to_vec(),
            })
        });
        if !next_combination(&mut moved, n) {
            break;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    /// Oracle: all permutations of 0..n by Heap's algorithm.
    fn all_permutations(n: usize) -> Vec<Vec<usize>> {
        fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if k <= 1 {
                out.push(a.clone());
                return;
            }
            for i in 0..k {
                heap(k - 1, a, out);
                if k.is_multiple_of(2) {
                    a.swap(i, k - 1);
                } else {
                    a.swap(0, k - 1);
                }
            }
        }
        let mut a: Vec<usize> = (0..n).collect();
        let mut out = Vec::new();
        heap(n, &mut a, &mut out);
        out
    }

    #[test]
    fn enumeration_matches_filtered_symmetric_group() {
        for n in 0..=6 {
            let all = all_permutations(n);
            for k in 0..=n {
                let mut got = HashSet::new();
                for_each_k_permutation(n, k, |p| {
                    assert_eq!(p.k(), k);
                    assert!(got.insert(p.to_permutation(n)));
                });
                let expect: HashSet<Vec<usize>> = all
                    .iter()
                    .filter(|p| (0..n).filter(|&i| p[i] != i).count() == k)
                    .cloned()
                    .collect();
                assert_eq!(got, expect, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn sign_agrees_with_transposition_count() {
        for n in 0..=6 {
            for k in 0..=n {
                for_each_k_permutation(n, k, |p| {
                    assert_eq!(p.sign(), p.sign_by_transpositions(n));
                    assert_eq!(
                        p.sign(),
                        if (k - p.cycle_count()) % 2 == 0 {
                            1
                        } else {
                            -1
                        }
                    );
                });
            }
        }
    }

    #[test]
    fn construction_checks() {
        assert!(KPermutation::new(vec![0, 2], vec![2, 0]).is_ok());
        assert!(KPermutation::new(vec![0, 2], vec![0, 2]).is_err());
        assert!(KPermutation::new(vec![0, 2], vec![2, 1]).is_err());
        assert!(KPermutation::new(vec![2, 0], vec![0, 2]).is_err());
        let p = KPermutation::from_permutation(&[1, 2, 0, 3]).unwrap();
        assert_eq!(p.moved(), &[0, 1, 2]);
        assert_eq!(p.image(), vec![1, 2, 0]);
        assert_eq!(p.sign(), 1);
        assert_eq!(p.cycle_count(), 1);
    }

    #[test]
    fn counts_of_k_permutations() {
        // C(n, k) * D(k), D = derangement numbers 1, 0, 1, 2, 9, 44.
        let d = [1usize, 0, 1, 2, 9, 44];
        for (k, derangements) in d.into_iter().enumerate() {
            let mut count = 0;
            for_each_k_permutation(5, k, |_| count += 1);
            let c = crate::combin::binomial(5, k as u64) as usize;
            assert_eq!(count, c * derangements);
        }
    }
}
