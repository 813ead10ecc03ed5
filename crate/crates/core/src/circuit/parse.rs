//! Parser for the line-based circuit format:
//!
//! ```text
//! # comment
//! nvars 2
//! input x1 1
//! input x2 2
//! add s x1 x2
//! mul sq s s
//! output sq
//! ```
//!
//! `nvars` must be the first statement and `output` the last. Gates may be
//! declared in any order as long as the references form a DAG; they are
//! stored in a topological order that keeps declaration order wherever it
//! is already valid.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use super::{check_variable, is_identifier, Circuit, Gate, GateKind};
use crate::error::{Error, Result};

enum RawKind<'a> {
    Input(usize),
    Const(i8),
    Add(&'a str, &'a str),
    Mul(&'a str, &'a str),
}

struct RawGate<'a> {
    line: usize,
    name: &'a str,
    kind: RawKind<'a>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn expect_args(line: usize, words: &[&str], n: usize) -> Result<()> {
    if words.len() != n + 1 {
        return Err(parse_err(
            line,
            format!(
                "`{}` takes {} argument(s), found {}",
                words[0],
                n,
                words.len() - 1
            ),
        ));
    }
    Ok(())
}

fn gate_name(line: usize, word: &str) -> Result<()> {
    if !is_identifier(word) {
        return Err(parse_err(line, format!("invalid gate id `{word}`")));
    }
    Ok(())
}

pub fn parse_circuit(text: &str) -> Result<Circuit> {
    let mut statements = text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then(|| (i + 1, body.split_whitespace().collect::<Vec<_>>()))
    });

    let num_vars = match statements.next() {
        Some((line, words)) if words[0] == "nvars" => {
            expect_args(line, &words, 1)?;
            words[1]
                .parse::<usize>()
                .map_err(|_| parse_err(line, format!("bad variable count `{}`", words[1])))?
        }
        Some((line, _)) => return Err(parse_err(line, "first statement must be `nvars <n>`")),
        None => return Err(parse_err(0, "empty circuit description")),
    };

    let mut raw: Vec<RawGate> = Vec::new();
    let mut output: Option<(usize, &str)> = None;
    for (line, words) in statements {
        if let Some((out_line, _)) = output {
            if words[0] == "output" {
                return Err(Error::OutputArity(format!(
                    "second `output` on line {line} (first on line {out_line})"
                )));
            }
            return Err(parse_err(line, "`output` must be the last statement"));
        }
        let kind = match words[0] {
            "output" => {
                expect_args(line, &words, 1)?;
                gate_name(line, words[1])?;
                output = Some((line, words[1]));
                continue;
            }
            "input" => {
                expect_args(line, &words, 2)?;
                let var = words[2]
                    .parse::<usize>()
                    .map_err(|_| parse_err(line, format!("bad variable index `{}`", words[2])))?;
                check_variable(var, num_vars).map_err(|e| parse_err(line, e.to_string()))?;
                RawKind::Input(var)
            }
            "const" => {
                expect_args(line, &words, 2)?;
                match words[2].parse::<i64>() {
                    Ok(c) if (-1..=1).contains(&c) => RawKind::Const(c as i8),
                    _ => {
                        return Err(Error::BadConstant {
                            line,
                            value: words[2].to_string(),
                        })
                    }
                }
            }
            "add" | "mul" => {
                expect_args(line, &words, 3)?;
                gate_name(line, words[2])?;
                gate_name(line, words[3])?;
                if words[0] == "add" {
                    RawKind::Add(words[2], words[3])
                } else {
                    RawKind::Mul(words[2], words[3])
                }
            }
            "nvars" => return Err(parse_err(line, "`nvars` declared twice")),
            other => return Err(parse_err(line, format!("unknown statement `{other}`"))),
        };
        gate_name(line, words[1])?;
        raw.push(RawGate {
            line,
            name: words[1],
            kind,
        });
    }
    let (out_line, out_name) =
        output.ok_or_else(|| Error::OutputArity("no `output` statement".into()))?;

    let mut index: HashMap<&str, usize> = HashMap::with_capacity(raw.len());
    for (i, g) in raw.iter().enumerate() {
        if index.insert(g.name, i).is_some() {
            return Err(Error::DuplicateGate {
                line: g.line,
                name: g.name.to_string(),
            });
        }
    }
    let lookup = |line: usize, name: &str| {
        index.get(name).copied().ok_or_else(|| Error::UnknownGate {
            line,
            name: name.to_string(),
        })
    };

    // Resolve children and run Kahn's algorithm, always emitting the
    // earliest-declared ready gate.
    let mut children: Vec<Option<(usize, usize)>> = Vec::with_capacity(raw.len());
    let mut parents: Vec<Vec<usize>> = vec![Vec::new(); raw.len()];
    let mut pending = vec![0usize; raw.len()];
    for (i, g) in raw.iter().enumerate() {
        let kids = match g.kind {
            RawKind::Add(a, b) | RawKind::Mul(a, b) => {
                let (a, b) = (lookup(g.line, a)?, lookup(g.line, b)?);
                if a == i || b == i {
                    return Err(Error::Cycle(g.name.to_string()));
                }
                Some((a, b))
            }
            _ => None,
        };
        if let Some((a, b)) = kids {
            for c in [a, b] {
                parents[c].push(i);
                pending[i] += 1;
            }
        }
        children.push(kids);
    }
    let output_raw = lookup(out_line, out_name)?;

    let mut ready: BinaryHeap<Reverse<usize>> = (0..raw.len())
        .filter(|&i| pending[i] == 0)
        .map(Reverse)
        .collect();
    let mut order = Vec::with_capacity(raw.len());
    while let Some(Reverse(i)) = ready.pop() {
        order.push(i);
        for &p in &parents[i] {
            pending[p] -= 1;
            if pending[p] == 0 {
                ready.push(Reverse(p));
            }
        }
    }
    if order.len() != raw.len() {
        let stuck = (0..raw.len()).find(|&i| pending[i] > 0).unwrap_or(0);
        return Err(Error::Cycle(raw[stuck].name.to_string()));
    }

    let mut position = vec![0usize; raw.len()];
    for (pos, &i) in order.iter().enumerate() {
        position[i] = pos;
    }
    let gates = order
        .iter()
        .map(|&i| {
            let kind = match (&raw[i].kind, children[i]) {
                (RawKind::Input(v), _) => GateKind::Input(*v),
                (RawKind::Const(c), _) => GateKind::Const(*c),
                (RawKind::Add(..), Some((a, b))) => GateKind::Add(position[a], position[b]),
                (RawKind::Mul(..), Some((a, b))) => GateKind::Mul(position[a], position[b]),
                _ => unreachable!("binary gates always have resolved children"),
            };
            Gate {
                name: raw[i].name.to_string(),
                kind,
            }
        })
        .collect();
    Circuit::new(num_vars, gates, position[output_raw])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn leaf_circuit() {
        let c = parse_circuit("nvars 1\ninput x1 1\noutput x1\n").unwrap();
        assert_eq!(c.syntdeg(), 1);
        assert_eq!(c.size(), 1);
        assert_eq!(c.num_vars(), 1);
    }

    #[test]
    fn square_of_sum() {
        let text = "# (x1 + x2)^2\nnvars 2\ninput x1 1\ninput x2 2\nadd g1 x1 x2 # shared\nmul g2 g1 g1\noutput g2\n";
        let c = parse_circuit(text).unwrap();
        assert_eq!((c.size(), c.syntdeg(), c.num_vars()), (4, 2, 2));
    }

    #[test]
    fn self_reference_is_a_cycle() {
        let text = "nvars 1\ninput x1 1\nadd g x1 g\noutput g\n";
        assert_eq!(parse_circuit(text), Err(Error::Cycle("g".into())));
    }

    #[test]
    fn longer_cycle() {
        let text = "nvars 1\ninput x 1\nadd a x b\nadd b x a\nmul o a b\noutput o\n";
        assert!(matches!(parse_circuit(text), Err(Error::Cycle(_))));
    }

    #[test]
    fn forward_references_are_reordered() {
        let text = "nvars 1\nmul sq x x\ninput x 1\noutput sq\n";
        let c = parse_circuit(text).unwrap();
        assert_eq!(c.gates()[0].name, "x");
        assert_eq!(c.syntdeg(), 2);
    }

    #[test]
    fn unknown_gate() {
        let text = "nvars 1\ninput x 1\nadd s x y\noutput s\n";
        assert_eq!(
            parse_circuit(text),
            Err(Error::UnknownGate {
                line: 3,
                name: "y".into()
            })
        );
        assert!(matches!(
            parse_circuit("nvars 1\ninput x 1\noutput nope\n"),
            Err(Error::UnknownGate { .. })
        ));
    }

    #[test]
    fn bad_constants() {
        for c in ["2", "-2", "1.5", "one"] {
            let text = format!("nvars 0\nconst c {c}\noutput c\n");
            assert!(matches!(
                parse_circuit(&text),
                Err(Error::BadConstant { line: 2, .. })
            ));
        }
        let c = parse_circuit("nvars 0\nconst c -1\noutput c\n").unwrap();
        assert_eq!(c.gates()[0].kind, GateKind::Const(-1));
    }

    #[test]
    fn output_arity() {
        assert!(matches!(
            parse_circuit("nvars 1\ninput x 1\n"),
            Err(Error::OutputArity(_))
        ));
        assert!(matches!(
            parse_circuit("nvars 1\ninput x 1\noutput x\noutput x\n"),
            Err(Error::OutputArity(_))
        ));
        // A second sink is a second output.
        assert!(matches!(
            parse_circuit("nvars 2\ninput x 1\ninput y 2\noutput x\n"),
            Err(Error::OutputArity(_))
        ));
    }

    #[test]
    fn structural_errors() {
        assert!(matches!(parse_circuit(""), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_circuit("input x 1\noutput x\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_circuit("nvars 1\ninput x 2\noutput x\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_circuit("nvars 1\ninput x 1\ninput x 1\noutput x\n"),
            Err(Error::DuplicateGate { line: 3, .. })
        ));
        assert!(matches!(
            parse_circuit("nvars 1\ninput 9x 1\noutput 9x\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_circuit("nvars 1\ninput x 1\noutput x\ninput y 1\n"),
            Err(Error::Parse { line: 4, .. })
        ));
        assert!(matches!(
            parse_circuit("nvars 1\ninput x 1\nsub s x x\noutput s\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_circuit("nvars 1\ninput x 1\nadd s x\noutput s\n"),
            Err(Error::Parse { line: 3, .. })
        ));
    }
}
