//! Explicit sparse polynomials, used as a ground-truth oracle for small
//! circuits.

use std::collections::BTreeMap;

use rand::Rng;

use super::{Circuit, GateKind};
use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField};

/// Exponent vector, one entry per variable.
pub type Monomial = Vec<u32>;

/// Sparse multivariate polynomial over `F_p`; zero coefficients are never
/// stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyOracle {
    field: PrimeField,
    num_vars: usize,
    terms: BTreeMap<Monomial, FieldElement>,
}

impl PolyOracle {
    pub fn zero(field: PrimeField, num_vars: usize) -> Self {
        PolyOracle {
            field,
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: PrimeField, num_vars: usize, c: FieldElement) -> Self {
        let mut p = Self::zero(field, num_vars);
        p.add_term(vec![0; num_vars], c);
        p
    }

    /// `x_var` with `var` 1-based.
    pub fn variable(field: PrimeField, num_vars: usize, var: usize) -> Self {
        let mut exps = vec![0; num_vars];
        exps[var - 1] = 1;
        let mut p = Self::zero(field, num_vars);
        p.add_term(exps, field.one());
        p
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, FieldElement> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exps: &[u32]) -> FieldElement {
        self.terms.get(exps).copied().unwrap_or(self.field.zero())
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.iter().sum()).max()
    }

    pub fn add_term(&mut self, exps: Monomial, c: FieldElement) {
        assert_eq!(exps.len(), self.num_vars, "monomial arity");
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps).or_insert(self.field.zero());
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &PolyOracle) -> PolyOracle {
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    /// Product, failing with [`Error::TooLarge`] once more than `cap`
    /// monomials would be stored.
    pub fn mul(&self, other: &PolyOracle, cap: usize) -> Result<PolyOracle> {
        let mut acc: BTreeMap<Monomial, FieldElement> = BTreeMap::new();
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &other.terms {
                let m: Monomial = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                let slot = acc.entry(m).or_insert(self.field.zero());
                *slot += ca * cb;
                if acc.len() > cap {
                    return Err(Error::TooLarge(format!(
                        "expansion exceeds {cap} monomials"
                    )));
                }
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Ok(PolyOracle {
            field: self.field,
            num_vars: self.num_vars,
            terms: acc,
        })
    }

    pub fn evaluate(&self, point: &[FieldElement]) -> Result<FieldElement> {
        if point.len() != self.num_vars {
            return Err(Error::Arity {
                expected: self.num_vars,
                got: point.len(),
            });
        }
        let mut total = self.field.zero();
        for (m, &c) in &self.terms {
            let mut term = c;
            for (x, &e) in point.iter().zip(m) {
                term = term.try_mul(x.pow(e as u64))?;
            }
            total += term;
        }
        Ok(total)
    }

    /// A random polynomial with up to `max_terms` monomials of total degree
    /// at most `max_degree`, each with a random nonzero coefficient.
    pub fn random<R: Rng + ?Sized>(
        field: PrimeField,
        num_vars: usize,
        max_degree: u32,
        max_terms: usize,
        rng: &mut R,
    ) -> PolyOracle {
        let mut p = Self::zero(field, num_vars);
        for _ in 0..max_terms {
            let mut exps = vec![0u32; num_vars];
            if num_vars > 0 {
                let d = rng.random_range(0..=max_degree);
                for _ in 0..d {
                    exps[rng.random_range(0..num_vars)] += 1;
                }
            }
            let c = field.element(rng.random_range(1..field.modulus()));
            p.add_term(exps, c);
        }
        p
    }
}

/// Expand the circuit into an explicit polynomial over `field`.
///
/// Requires `syntdeg(c) <= degree_cap`, which bounds the total degree of
/// every intermediate polynomial; `monomial_cap` bounds their size.
pub fn expand_small(
    c: &Circuit,
    field: PrimeField,
    degree_cap: u64,
    monomial_cap: usize,
) -> Result<PolyOracle> {
    if c.syntdeg() > degree_cap {
        return Err(Error::ParameterViolation {
            syntdeg: c.syntdeg(),
            k: degree_cap,
        });
    }
    let n = c.num_vars();
    let mut polys: Vec<PolyOracle> = Vec::with_capacity(c.size());
    for gate in c.gates() {
        let p = match gate.kind {
            GateKind::Input(v) => PolyOracle::variable(field, n, v),
            GateKind::Const(k) => PolyOracle::constant(field, n, field.from_i64(k as i64)),
            GateKind::Add(a, b) => polys[a].add(&polys[b]),
            GateKind::Mul(a, b) => polys[a].mul(&polys[b], monomial_cap)?,
        };
        if p.num_terms() > monomial_cap {
            return Err(Error::TooLarge(format!(
                "expansion exceeds {monomial_cap} monomials"
            )));
        }
        polys.push(p);
    }
    Ok(polys.swap_remove(c.output()))
}
