//! Arithmetic circuits: DAGs of input, constant, `+` and `×` gates with a
//! single output.
//!
//! Leaves are labelled with a variable `x_i` or a constant in `{-1, 0, 1}`;
//! every internal gate has fan-in exactly two. The syntactic degree is 1 at
//! leaves, the maximum of the children at `+` and their sum at `×`, and it
//! bounds the degree of the computed polynomial.

mod parse;
mod poly;

use std::fmt;
use std::str::FromStr;

pub use parse::parse_circuit;
pub use poly::{expand_small, Monomial, PolyOracle};

use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GateKind {
    /// Reads `x_i`, with `i` 1-based.
    Input(usize),
    Const(i8),
    /// Children are indices of earlier gates.
    Add(usize, usize),
    Mul(usize, usize),
}

impl GateKind {
    pub fn children(self) -> Option<(usize, usize)> {
        match self {
            GateKind::Add(a, b) | GateKind::Mul(a, b) => Some((a, b)),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gate {
    pub name: String,
    pub kind: GateKind,
}

/// A validated circuit with its gates in topological order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circuit {
    num_vars: usize,
    gates: Vec<Gate>,
    output: usize,
    syntdeg: u64,
}

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Circuit {
    /// Validates a topologically ordered gate list. Children must point at
    /// earlier gates, and the output must be the only gate nothing reads.
    pub fn new(num_vars: usize, gates: Vec<Gate>, output: usize) -> Result<Self> {
        if gates.is_empty() || output >= gates.len() {
            return Err(Error::OutputArity(format!(
                "output index {output} outside a circuit of {} gates",
                gates.len()
            )));
        }
        let mut seen = std::collections::HashSet::with_capacity(gates.len());
        let mut out_degree = vec![0usize; gates.len()];
        for (idx, gate) in gates.iter().enumerate() {
            if !is_identifier(&gate.name) {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("invalid gate id `{}`", gate.name),
                });
            }
            if !seen.insert(gate.name.as_str()) {
                return Err(Error::DuplicateGate {
                    line: 0,
                    name: gate.name.clone(),
                });
            }
            match gate.kind {
                GateKind::Input(var) => check_variable(var, num_vars)?,
                GateKind::Const(c) => {
                    if !(-1..=1).contains(&c) {
                        return Err(Error::BadConstant {
                            line: 0,
                            value: c.to_string(),
                        });
                    }
                }
                GateKind::Add(a, b) | GateKind::Mul(a, b) => {
                    for child in [a, b] {
                        if child >= idx {
                            return Err(Error::Cycle(gate.name.clone()));
                        }
                        out_degree[child] += 1;
                    }
                }
            }
        }
        if out_degree[output] != 0 {
            return Err(Error::OutputArity(format!(
                "output gate `{}` feeds other gates",
                gates[output].name
            )));
        }
        if let Some(dead) = (0..gates.len()).find(|&i| i != output && out_degree[i] == 0) {
            return Err(Error::OutputArity(format!(
                "gate `{}` has no consumers, so the circuit has more than one output",
                gates[dead].name
            )));
        }
        let mut circuit = Circuit {
            num_vars,
            gates,
            output,
            syntdeg: 0,
        };
        circuit.syntdeg = circuit.recompute_syntdeg();
        Ok(circuit)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn output(&self) -> usize {
        self.output
    }

    /// Number of gates, including leaves.
    pub fn size(&self) -> usize {
        self.gates.len()
    }

    /// Cached syntactic degree of the output gate.
    pub fn syntdeg(&self) -> u64 {
        self.syntdeg
    }

    /// Syntactic degree of every gate, saturating at `u64::MAX`.
    pub fn gate_degrees(&self) -> Vec<u64> {
        let mut deg: Vec<u64> = Vec::with_capacity(self.gates.len());
        for gate in &self.gates {
            let d = match gate.kind {
                GateKind::Input(_) | GateKind::Const(_) => 1,
                GateKind::Add(a, b) => deg[a].max(deg[b]),
                GateKind::Mul(a, b) => u64::saturating_add(deg[a], deg[b]),
            };
            deg.push(d);
        }
        deg
    }

    pub fn recompute_syntdeg(&self) -> u64 {
        self.gate_degrees()[self.output]
    }

    /// Value of the circuit's polynomial at `point`.
    pub fn evaluate(&self, field: PrimeField, point: &[FieldElement]) -> Result<FieldElement> {
        if point.len() != self.num_vars {
            return Err(Error::Arity {
                expected: self.num_vars,
                got: point.len(),
            });
        }
        if let Some(bad) = point.iter().find(|x| x.field() != field) {
            return Err(Error::FieldMismatch {
                left: field.modulus(),
                right: bad.field().modulus(),
            });
        }
        let mut scratch = Vec::with_capacity(self.gates.len());
        Ok(self.evaluate_with(field, point, &mut scratch))
    }

    /// Like [`Circuit::evaluate`] without the argument checks, reusing
    /// `scratch` for gate values.
    pub(crate) fn evaluate_with(
        &self,
        field: PrimeField,
        point: &[FieldElement],
        scratch: &mut Vec<FieldElement>,
    ) -> FieldElement {
        scratch.clear();
        for gate in &self.gates {
            let v = match gate.kind {
                GateKind::Input(var) => point[var - 1],
                GateKind::Const(c) => field.from_i64(c as i64),
                GateKind::Add(a, b) => scratch[a] + scratch[b],
                GateKind::Mul(a, b) => scratch[a] * scratch[b],
            };
            scratch.push(v);
        }
        scratch[self.output]
    }

    /// Serialize in the line-based circuit format accepted by
    /// [`parse_circuit`].
    pub fn to_dsl(&self) -> String {
        self.to_string()
    }
}

fn check_variable(var: usize, num_vars: usize) -> Result<()> {
    if var == 0 || var > num_vars {
        return Err(Error::Domain(format!(
            "variable x{var} outside x1..x{num_vars}"
        )));
    }
    Ok(())
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "nvars {}", self.num_vars)?;
        for gate in &self.gates {
            match gate.kind {
                GateKind::Input(var) => writeln!(f, "input {} {}", gate.name, var)?,
                GateKind::Const(c) => writeln!(f, "const {} {}", gate.name, c)?,
                GateKind::Add(a, b) => writeln!(
                    f,
                    "add {} {} {}",
                    gate.name, self.gates[a].name, self.gates[b].name
                )?,
                GateKind::Mul(a, b) => writeln!(
                    f,
                    "mul {} {} {}",
                    gate.name, self.gates[a].name, self.gates[b].name
                )?,
            }
        }
        writeln!(f, "output {}", self.gates[self.output].name)
    }
}

impl FromStr for Circuit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_circuit(s)
    }
}

/// Handle to a gate inside a [`CircuitBuilder`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GateRef(usize);

/// Incremental construction of circuits in code.
///
/// Inputs and constants are shared: asking twice for `x_3` returns the same
/// gate. [`CircuitBuilder::finish`] drops every gate the output does not
/// depend on.
#[derive(Clone, Debug)]
pub struct CircuitBuilder {
    num_vars: usize,
    kinds: Vec<GateKind>,
    inputs: Vec<Option<usize>>,
    consts: [Option<usize>; 3],
}

impl CircuitBuilder {
    pub fn new(num_vars: usize) -> Self {
        CircuitBuilder {
            num_vars,
            kinds: Vec::new(),
            inputs: vec![None; num_vars + 1],
            consts: [None; 3],
        }
    }

    fn push(&mut self, kind: GateKind) -> GateRef {
        self.kinds.push(kind);
        GateRef(self.kinds.len() - 1)
    }

    /// Panics when `var` is outside `1..=num_vars`.
    pub fn input(&mut self, var: usize) -> GateRef {
        assert!(
            (1..=self.num_vars).contains(&var),
            "variable x{var} outside x1..x{}",
            self.num_vars
        );
        if let Some(idx) = self.inputs[var] {
            return GateRef(idx);
        }
        let r = self.push(GateKind::Input(var));
        self.inputs[var] = Some(r.0);
        r
    }

    /// Panics unless `c` is -1, 0 or 1.
    pub fn constant(&mut self, c: i8) -> GateRef {
        assert!((-1..=1).contains(&c), "constant {c} not in {{-1, 0, 1}}");
        let slot = (c + 1) as usize;
        if let Some(idx) = self.consts[slot] {
            return GateRef(idx);
        }
        let r = self.push(GateKind::Const(c));
        self.consts[slot] = Some(r.0);
        r
    }

    pub fn add(&mut self, a: GateRef, b: GateRef) -> GateRef {
        self.push(GateKind::Add(a.0, b.0))
    }

    pub fn mul(&mut self, a: GateRef, b: GateRef) -> GateRef {
        self.push(GateKind::Mul(a.0, b.0))
    }

    /// `a + (-1) * b`.
    pub fn sub(&mut self, a: GateRef, b: GateRef) -> GateRef {
        let neg = self.constant(-1);
        let nb = self.mul(neg, b);
        self.add(a, nb)
    }

    pub fn len(&self) -> usize {
        self.kinds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.kinds.is_empty()
    }

    /// Syntactic degree of a gate built so far.
    pub fn degree_of(&self, r: GateRef) -> u64 {
        let mut deg = Vec::with_capacity(r.0 + 1);
        for kind in &self.kinds[..=r.0] {
            let d = match *kind {
                GateKind::Input(_) | GateKind::Const(_) => 1,
                GateKind::Add(a, b) => u64::max(deg[a], deg[b]),
                GateKind::Mul(a, b) => u64::saturating_add(deg[a], deg[b]),
            };
            deg.push(d);
        }
        deg[r.0]
    }

    pub fn finish(&self, output: GateRef) -> Circuit {
        let mut live = vec![false; self.kinds.len()];
        live[output.0] = true;
        for idx in (0..=output.0).rev() {
            if !live[idx] {
                continue;
            }
            if let Some((a, b)) = self.kinds[idx].children() {
                live[a] = true;
                live[b] = true;
            }
        }
        let mut remap = vec![usize::MAX; self.kinds.len()];
        let mut gates = Vec::new();
        for (idx, kind) in self.kinds.iter().enumerate().take(output.0 + 1) {
            if !live[idx] {
                continue;
            }
            remap[idx] = gates.len();
            let (name, kind) = match *kind {
                GateKind::Input(v) => (format!("x{v}"), GateKind::Input(v)),
                GateKind::Const(c) => (
                    match c {
                        -1 => "neg_one".to_string(),
                        0 => "zero".to_string(),
                        _ => "one".to_string(),
                    },
                    GateKind::Const(c),
                ),
                GateKind::Add(a, b) => (
                    format!("g{}", gates.len()),
                    GateKind::Add(remap[a], remap[b]),
                ),
                GateKind::Mul(a, b) => (
                    format!("g{}", gates.len()),
                    GateKind::Mul(remap[a], remap[b]),
                ),
            };
            gates.push(Gate { name, kind });
        }
        let out = remap[output.0];
        Circuit::new(self.num_vars, gates, out).expect("builder output is a valid circuit")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f101() -> PrimeField {
        PrimeField::new(101).unwrap()
    }

    fn pt(f: PrimeField, v: &[u64]) -> Vec<FieldElement> {
        v.iter().map(|&x| f.element(x)).collect()
    }

    #[test]
    fn syntactic_degree_rules() {
        let mut b = CircuitBuilder::new(4);
        let x1 = b.input(1);
        assert_eq!(b.finish(x1).syntdeg(), 1);

        let x2 = b.input(2);
        let s = b.add(x1, x2);
        let sq = b.mul(s, s);
        let c = b.finish(sq);
        assert_eq!(c.syntdeg(), 2);
        assert_eq!(c.size(), 4);

        let mut b = CircuitBuilder::new(4);
        let (x1, x2, x3, x4) = (b.input(1), b.input(2), b.input(3), b.input(4));
        let p = b.mul(x1, x2);
        let p = b.mul(p, x3);
        let s = b.add(p, x4);
        let c = b.finish(s);
        assert_eq!(c.syntdeg(), 3);
        assert_eq!(c.syntdeg(), c.recompute_syntdeg());
    }

    #[test]
    fn evaluation_examples() {
        let f = f101();
        let mut b = CircuitBuilder::new(3);
        let one = b.constant(1);
        let c = b.finish(one);
        assert_eq!(c.evaluate(f, &pt(f, &[7, 8, 9])).unwrap(), f.one());

        let mut b = CircuitBuilder::new(3);
        let (x1, x2, x3) = (b.input(1), b.input(2), b.input(3));
        let s = b.add(x1, x2);
        let p = b.mul(s, x3);
        let c = b.finish(p);
        assert_eq!(c.evaluate(f, &pt(f, &[1, 2, 3])).unwrap().value(), 9);

        let mut b = CircuitBuilder::new(1);
        let x = b.input(1);
        let sq = b.mul(x, x);
        let q = b.mul(sq, sq);
        let c = b.finish(q);
        assert_eq!(c.evaluate(f, &pt(f, &[2])).unwrap().value(), 16);
        assert_eq!(c.syntdeg(), 4);
    }

    #[test]
    fn minus_one_constant_is_p_minus_one() {
        let f = f101();
        let mut b = CircuitBuilder::new(1);
        let m = b.constant(-1);
        let c = b.finish(m);
        assert_eq!(c.evaluate(f, &pt(f, &[0])).unwrap().value(), 100);
    }

    #[test]
    fn evaluate_checks_arity_and_field() {
        let f = f101();
        let mut b = CircuitBuilder::new(2);
        let x = b.input(1);
        let y = b.input(2);
        let s = b.add(x, y);
        let c = b.finish(s);
        assert_eq!(
            c.evaluate(f, &pt(f, &[1])),
            Err(Error::Arity {
                expected: 2,
                got: 1
            })
        );
        let g = PrimeField::new(103).unwrap();
        assert!(matches!(
            c.evaluate(f, &pt(g, &[1, 2])),
            Err(Error::FieldMismatch { .. })
        ));
    }

    #[test]
    fn builder_prunes_dead_gates() {
        let mut b = CircuitBuilder::new(3);
        let x1 = b.input(1);
        let x2 = b.input(2);
        let _unused = b.mul(x1, x2);
        let x3 = b.input(3);
        let out = b.add(x1, x3);
        let c = b.finish(out);
        assert_eq!(c.size(), 3);
    }

    #[test]
    fn new_rejects_dead_gates_and_back_edges() {
        let gates = vec![
            Gate {
                name: "a".into(),
                kind: GateKind::Input(1),
            },
            Gate {
                name: "b".into(),
                kind: GateKind::Input(2),
            },
        ];
        assert!(matches!(
            Circuit::new(2, gates, 1),
            Err(Error::OutputArity(_))
        ));
        let gates = vec![
            Gate {
                name: "a".into(),
                kind: GateKind::Input(1),
            },
            Gate {
                name: "b".into(),
                kind: GateKind::Add(0, 1),
            },
        ];
        assert_eq!(Circuit::new(1, gates, 1), Err(Error::Cycle("b".into())));
        let gates = vec![Gate {
            name: "c".into(),
            kind: GateKind::Const(2),
        }];
        assert!(matches!(
            Circuit::new(0, gates, 0),
            Err(Error::BadConstant { .. })
        ));
    }

    #[test]
    fn display_round_trips() {
        let mut b = CircuitBuilder::new(2);
        let x1 = b.input(1);
        let x2 = b.input(2);
        let m = b.sub(x1, x2);
        let sq = b.mul(m, m);
        let c = b.finish(sq);
        let text = c.to_dsl();
        let back: Circuit = text.parse().unwrap();
        assert_eq!(back, c);
    }
}
