use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest allowed entry magnitude, `2^31`.
pub const MAX_ENTRY: i64 = 1 << 31;

/// Square integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn new(n: usize, entries: Vec<i64>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::Arity {
                expected: n * n,
                got: entries.len(),
            });
        }
        if let Some(bad) = entries.iter().find(|a| a.unsigned_abs() > MAX_ENTRY as u64) {
            return Err(Error::Domain(format!(
                "entry {bad} exceeds 2^31 in magnitude"
            )));
        }
        Ok(IntMatrix { n, entries })
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::Arity {
                expected: n,
                got: r.len(),
            });
        }
        Self::new(n, rows.concat())
    }

    pub fn zeros(n: usize) -> Self {
        IntMatrix {
            n,
            entries: vec![0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.entries[i * n + i] = 1;
        }
        m
    }

    /// The all-ones matrix `J_n`.
    pub fn ones(n: usize) -> Self {
        IntMatrix {
            n,
            entries: vec![1; n * n],
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, v: i64) {
        self.entries[i * self.n + j] = v;
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn max_abs(&self) -> u64 {
        self.entries
            .iter()
            .map(|a| a.unsigned_abs())
            .max()
            .unwrap_or(0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|&a| a >= 0)
    }

    /// Copy with the diagonal replaced by zeros.
    pub fn zero_diagonal(&self) -> IntMatrix {
        let mut out = self.clone();
        for i in 0..self.n {
            out.set(i, i, 0);
        }
        out
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for row in self.entries.chunks(self.n.max(1)).take(self.n) {
            let cells: Vec<String> = row.iter().map(|a| a.to_string()).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for IntMatrix {
    type Err = Error;

    /// First line `n`, then `n` rows of `n` whitespace-separated integers.
    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let parse_err = |line: usize, message: String| Error::Parse { line, message };
        let (line, first) = lines
            .next()
            .ok_or_else(|| parse_err(0, "empty matrix file".into()))?;
        let n: usize = first
            .parse()
            .map_err(|_| parse_err(line, format!("bad matrix order `{first}`")))?;
        let mut rows = Vec::with_capacity(n);
        for r in 0..n {
            let (line, text) = lines
                .next()
                .ok_or_else(|| parse_err(line, format!("expected {n} rows, found {r}")))?;
            let row = text
                .split_whitespace()
                .map(|t| t.parse::<i64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| parse_err(line, format!("bad entry: {e}")))?;
            if row.len() != n {
                return Err(parse_err(
                    line,
                    format!("expected {n} entries, found {}", row.len()),
                ));
            }
            rows.push(row);
        }
        if let Some((line, _)) = lines.next() {
            return Err(parse_err(line, "trailing data after the last row".into()));
        }
        IntMatrix::from_rows(&rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_diagonal_examples() {
        assert_eq!(IntMatrix::identity(3).zero_diagonal(), IntMatrix::zeros(3));
        let j = IntMatrix::ones(3).zero_diagonal();
        for i in 0..3 {
            for k in 0..3 {
                assert_eq!(j.get(i, k), (i != k) as i64);
            }
        }
    }

    #[test]
    fn text_round_trip() {
        let m = IntMatrix::from_rows(&[vec![1, -2], vec![0, 7]]).unwrap();
        let text = m.to_string();
        assert_eq!(text, "2\n1 -2\n0 7\n");
        assert_eq!(text.parse::<IntMatrix>().unwrap(), m);
        assert_eq!("0\n".parse::<IntMatrix>().unwrap(), IntMatrix::zeros(0));
    }

    #[test]
    fn malformed_files() {
        assert!(matches!(
            "2\n1 2\n".parse::<IntMatrix>(),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            "2\n1 2\n3\n".parse::<IntMatrix>(),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            "1\nx\n".parse::<IntMatrix>(),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            "1\n1\n1\n".parse::<IntMatrix>(),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            "1\n4294967296\n".parse::<IntMatrix>(),
            Err(Error::Domain(_))
        ));
    }
}
