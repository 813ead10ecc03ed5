//! The Shpilka–Volkovich generator `G_k = (G^1_k, ..., G^n_k)` and the
//! weight-bounded point sets `W^k_n(S)`.
//!
//! With interpolation nodes `a_1..a_n` and Lagrange basis `L_i`, coordinate
//! `i` of the generator at seed `(y, z) ∈ F^{2k}` is `Σ_j L_i(y_j) z_j`.
//! Setting `y_j = a_i` routes `z_j` to coordinate `i`, so the image contains
//! every vector of Hamming weight at most `k`.

use std::collections::{HashMap, HashSet};

use crate::combin::{binomial, next_combination};
use crate::error::{Error, Result};
use crate::exec::{self, Execution};
use crate::field::{factorial_table, FieldElement, PrimeField};

#[derive(Clone, Debug)]
pub struct SvGenerator {
    field: PrimeField,
    k: usize,
    nodes: Vec<FieldElement>,
    node_index: HashMap<u64, usize>,
    /// `1 / prod_{j != i} (a_i - a_j)`
    denom_inv: Vec<FieldElement>,
}

impl SvGenerator {
    /// Generator with the canonical nodes `a_i = i`.
    pub fn new(field: PrimeField, n: usize, k: usize) -> Result<Self> {
        if n as u128 >= field.modulus() as u128 {
            return Err(Error::FieldTooSmall {
                modulus: field.modulus(),
                required: n as u64,
            });
        }
        let nodes: Vec<FieldElement> = (1..=n as u64).map(|i| field.element(i)).collect();
        // prod_{j != i} (i - j) = (i-1)! * (-1)^(n-i) * (n-i)!
        let fact = factorial_table(n.saturating_sub(1), field)?;
        let denom_inv = (1..=n)
            .map(|i| {
                let d = fact[i - 1] * fact[n - i];
                let d = if (n - i) % 2 == 1 { -d } else { d };
                d.inv()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::assemble(field, k, nodes, denom_inv))
    }

    /// Generator with arbitrary pairwise-distinct nodes.
    pub fn with_nodes(field: PrimeField, nodes: Vec<FieldElement>, k: usize) -> Result<Self> {
        let mut seen = HashSet::new();
        for a in &nodes {
            if a.field() != field {
                return Err(Error::FieldMismatch {
                    left: field.modulus(),
                    right: a.field().modulus(),
                });
            }
            if !seen.insert(a.value()) {
                return Err(Error::Domain(format!("interpolation node {a} repeated")));
            }
        }
        let denom_inv = nodes
            .iter()
            .enumerate()
            .map(|(i, &ai)| {
                nodes
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .fold(field.one(), |acc, (_, &aj)| acc * (ai - aj))
                    .inv()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::assemble(field, k, nodes, denom_inv))
    }

    fn assemble(
        field: PrimeField,
        k: usize,
        nodes: Vec<FieldElement>,
        denom_inv: Vec<FieldElement>,
    ) -> Self {
        let node_index = nodes
            .iter()
            .enumerate()
            .map(|(i, a)| (a.value(), i))
            .collect();
        SvGenerator {
            field,
            k,
            nodes,
            node_index,
            denom_inv,
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[FieldElement] {
        &self.nodes
    }

    /// Bound on the degree of each coordinate polynomial `G^i_k` in
    /// `(y, z)`. The exact value is `n` (`deg L_i = n - 1`, times `z_j`).
    pub fn coordinate_degree_bound(&self) -> u64 {
        self.n() as u64
    }

    /// `L_i(alpha)` for 1-based `i`, from the full product
    /// `prod_j (alpha - a_j) / (alpha - a_i)`.
    pub fn lagrange_basis_at(&self, i: usize, alpha: FieldElement) -> FieldElement {
        assert!(
            (1..=self.n()).contains(&i),
            "basis index {i} outside 1..={}",
            self.n()
        );
        if let Some(&j) = self.node_index.get(&alpha.value()) {
            return if j == i - 1 {
                self.field.one()
            } else {
                self.field.zero()
            };
        }
        let full = self
            .nodes
            .iter()
            .fold(self.field.one(), |acc, &a| acc * (alpha - a));
        let own = (alpha - self.nodes[i - 1])
            .inv()
            .expect("alpha is not a node");
        full * own * self.denom_inv[i - 1]
    }

    /// All of `L_1(alpha), ..., L_n(alpha)` in O(n) via prefix and suffix
    /// products of `alpha - a_t`.
    pub fn basis_row(&self, alpha: FieldElement) -> Vec<FieldElement> {
        let mut row = vec![self.field.zero(); self.n()];
        self.basis_row_into(alpha, &mut row);
        row
    }

    pub(crate) fn basis_row_into(&self, alpha: FieldElement, row: &mut [FieldElement]) {
        let n = self.n();
        if let Some(&j) = self.node_index.get(&alpha.value()) {
            row.fill(self.field.zero());
            row[j] = self.field.one();
            return;
        }
        // row[i] temporarily holds the prefix product prod_{t<i}.
        let mut acc = self.field.one();
        for (i, slot) in row.iter_mut().enumerate().take(n) {
            *slot = acc;
            acc *= alpha - self.nodes[i];
        }
        let mut suffix = self.field.one();
        for i in (0..n).rev() {
            row[i] = row[i] * suffix * self.denom_inv[i];
            suffix *= alpha - self.nodes[i];
        }
    }

    pub fn generator_image(&self, seed: &SeedPoint) -> Result<Vec<FieldElement>> {
        if seed.k() != self.k {
            return Err(Error::Arity {
                expected: self.k,
                got: seed.k(),
            });
        }
        let mut out = vec![self.field.zero(); self.n()];
        let mut row = vec![self.field.zero(); self.n()];
        self.image_into(&seed.y, &seed.z, &mut out, &mut row);
        Ok(out)
    }

    /// Unchecked image computation with caller-provided buffers.
    pub(crate) fn image_into(
        &self,
        y: &[FieldElement],
        z: &[FieldElement],
        out: &mut [FieldElement],
        row: &mut [FieldElement],
    ) {
        out.fill(self.field.zero());
        for (&yj, &zj) in y.iter().zip(z) {
            if zj.is_zero() {
                continue;
            }
            self.basis_row_into(yj, row);
            for (o, &l) in out.iter_mut().zip(row.iter()) {
                *o += l * zj;
            }
        }
    }
}

/// A seed `(y_1..y_k, z_1..z_k)` for [`SvGenerator`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeedPoint {
    pub y: Vec<FieldElement>,
    pub z: Vec<FieldElement>,
}

impl SeedPoint {
    pub fn new(y: Vec<FieldElement>, z: Vec<FieldElement>) -> Result<Self> {
        if y.len() != z.len() {
            return Err(Error::Arity {
                expected: y.len(),
                got: z.len(),
            });
        }
        Ok(SeedPoint { y, z })
    }

    pub fn k(&self) -> usize {
        self.y.len()
    }
}

/// `W^k_n(S)`: vectors in `S^n` with at most `k` nonzero coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightKSet {
    values: Vec<FieldElement>,
    nonzero: Vec<FieldElement>,
    k: usize,
    n: usize,
}

impl WeightKSet {
    /// `values` is `S`; it must contain zero and have no repeats.
    pub fn new(values: Vec<FieldElement>, k: usize, n: usize) -> Result<Self> {
        let first = values
            .first()
            .ok_or_else(|| Error::Domain("the set S is empty".into()))?;
        let mut seen = HashSet::new();
        for v in &values {
            if v.field() != first.field() {
                return Err(Error::FieldMismatch {
                    left: first.field().modulus(),
                    right: v.field().modulus(),
                });
            }
            if !seen.insert(v.value()) {
                return Err(Error::Domain(format!("value {v} repeated in S")));
            }
        }
        if !seen.contains(&0) {
            return Err(Error::Domain("the set S must contain 0".into()));
        }
        let nonzero = values.iter().copied().filter(|v| !v.is_zero()).collect();
        Ok(WeightKSet {
            values,
            nonzero,
            k,
            n,
        })
    }

    /// `S = {0, 1, ..., size - 1}`.
    pub fn consecutive(field: PrimeField, size: u64, k: usize, n: usize) -> Result<Self> {
        if size > field.modulus() {
            return Err(Error::FieldTooSmall {
                modulus: field.modulus(),
                required: size - 1,
            });
        }
        Self::new((0..size).map(|v| field.element(v)).collect(), k, n)
    }

    pub fn values(&self) -> &[FieldElement] {
        &self.values
    }

    pub fn field(&self) -> PrimeField {
        self.values[0].field()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `Σ_{i <= k} C(n, i) (|S| - 1)^i`, saturating.
    pub fn count(&self) -> u128 {
        let m = self.nonzero.len() as u128;
        (0..=self.k.min(self.n)).fold(0u128, |acc, i| {
            let pow = (0..i).fold(1u128, |p, _| p.saturating_mul(m));
            acc.saturating_add(binomial(self.n as u64, i as u64).saturating_mul(pow))
        })
    }

    /// Every support (set of nonzero positions) in enumeration order: by
    /// weight, then lexicographically.
    pub fn supports(&self) -> Vec<Vec<usize>> {
        let max_w = if self.nonzero.is_empty() {
            0
        } else {
            self.k.min(self.n)
        };
        let mut out = Vec::new();
        for w in 0..=max_w {
            let mut comb: Vec<usize> = (0..w).collect();
            loop {
                out.push(comb.clone());
                if !next_combination(&mut comb, self.n) {
                    break;
                }
            }
        }
        out
    }

    /// Visit the points with the given support in enumeration order,
    /// stopping early when `visit` returns `Some`.
    pub(crate) fn scan_support<T>(
        &self,
        support: &[usize],
        mut visit: impl FnMut(&[FieldElement]) -> Option<T>,
    ) -> Option<T> {
        let zero = self.field().zero();
        let mut point = vec![zero; self.n];
        let mut digits = vec![0usize; support.len()];
        for &pos in support {
            point[pos] = self.nonzero[0];
        }
        loop {
            if let Some(hit) = visit(&point) {
                return Some(hit);
            }
            // Odometer over nonzero values, last position fastest.
            let mut i = support.len();
            loop {
                if i == 0 {
                    return None;
                }
                i -= 1;
                digits[i] += 1;
                if digits[i] < self.nonzero.len() {
                    point[support[i]] = self.nonzero[digits[i]];
                    break;
                }
                digits[i] = 0;
                point[support[i]] = self.nonzero[0];
            }
        }
    }

    /// Stream every vector of `W^k_n(S)` exactly once.
    pub fn iter(&self) -> impl Iterator<Item = Vec<FieldElement>> + '_ {
        self.supports().into_iter().flat_map(move |support| {
            let mut pts = Vec::new();
            self.scan_support(&support, |p| {
                pts.push(p.to_vec());
                None::<()>
            });
            pts
        })
    }
}

/// Checks that every vector of `ws` is `G_k(a)` for some seed
/// `a ∈ (S ∪ {a_1..a_n})^{2k}`, by exhaustive enumeration of the seeds.
pub fn image_covers_weight_k(
    gen: &SvGenerator,
    ws: &WeightKSet,
    limit: u64,
    exec: Execution,
) -> Result<bool> {
    if ws.n() != gen.n() || ws.k() != gen.k() {
        return Err(Error::Config(format!(
            "W^{}_{} does not match G_{} on {} variables",
            ws.k(),
            ws.n(),
            gen.k(),
            gen.n()
        )));
    }
    let mut alphabet: Vec<FieldElement> = ws.values().to_vec();
    for &a in gen.nodes() {
        if !alphabet.contains(&a) {
            alphabet.push(a);
        }
    }
    let m = alphabet.len() as u128;
    let seeds = (0..2 * gen.k()).try_fold(1u128, |acc, _| acc.checked_mul(m));
    let seeds = match seeds {
        Some(s) if s <= limit as u128 => s as u64,
        _ => {
            return Err(Error::TooLarge(format!(
                "{m}^{} seeds exceed the limit {limit}",
                2 * gen.k()
            )))
        }
    };
    let k = gen.k();
    let images = exec::map_range(exec, seeds, |mut idx| {
        let mut coords = Vec::with_capacity(2 * k);
        for _ in 0..2 * k {
            coords.push(alphabet[(idx % m as u64) as usize]);
            idx /= m as u64;
        }
        let (y, z) = coords.split_at(k);
        let mut out = vec![gen.field().zero(); gen.n()];
        let mut row = out.clone();
        gen.image_into(y, z, &mut out, &mut row);
        out.iter().map(|v| v.value()).collect::<Vec<u64>>()
    });
    let image_set: HashSet<Vec<u64>> = images.into_iter().collect();
    Ok(ws
        .iter()
        .all(|p| image_set.contains(&p.iter().map(|v| v.value()).collect::<Vec<_>>())))
}
