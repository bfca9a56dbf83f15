//! Finite quandles given by explicit operation tables.
//!
//! Elements are `0..n` in the API; the text matrix format uses the 1-based
//! quandle-matrix convention, where row `i` column `j` holds the index of
//! `x_i ▷ x_j`.

mod iso;
mod structure;
mod subquandle;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use subquandle::DEFAULT_SUBQUANDLE_CAP;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuandleTable {
    n: usize,
    data: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    /// `x ▷ x ≠ x`.
    Idempotence { element: usize },
    /// Column `column` sends two rows to the same element, so `· ▷ column` is not a bijection.
    RightInvertibility {
        column: usize,
        rows: (usize, usize),
        value: usize,
    },
    /// `(a ▷ b) ▷ c ≠ (a ▷ c) ▷ (b ▷ c)`.
    Distributivity { a: usize, b: usize, c: usize },
}

impl AxiomViolation {
    /// Axiom label (i), (ii) or (iii).
    pub fn axiom(&self) -> &'static str {
        match self {
            AxiomViolation::Idempotence { .. } => "i",
            AxiomViolation::RightInvertibility { .. } => "ii",
            AxiomViolation::Distributivity { .. } => "iii",
        }
    }
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            AxiomViolation::Idempotence { element } => {
                write!(f, "axiom (i): x{0} ▷ x{0} ≠ x{0}", element + 1)
            }
            AxiomViolation::RightInvertibility {
                column,
                rows: (r1, r2),
                value,
            } => write!(
                f,
                "axiom (ii): column {} is not a permutation (rows {} and {} both give {})",
                column + 1,
                r1 + 1,
                r2 + 1,
                value + 1
            ),
            AxiomViolation::Distributivity { a, b, c } => write!(
                f,
                "axiom (iii): (x{0} ▷ x{1}) ▷ x{2} ≠ (x{0} ▷ x{2}) ▷ (x{1} ▷ x{2})",
                a + 1,
                b + 1,
                c + 1
            ),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl QuandleTable {
    /// Builds a table from 1-based rows, checking shape and entry range only.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::MalformedTable("empty table".into()));
        }
        let mut data = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedTable(format!(
                    "row {} has {} entries, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            for (j, v) in row.into_iter().enumerate() {
                if v == 0 || v > n {
                    return Err(Error::MalformedTable(format!(
                        "entry ({},{}) = {v} outside 1..={n}",
                        i + 1,
                        j + 1
                    )));
                }
                data.push((v - 1) as u32);
            }
        }
        Ok(QuandleTable { n, data })
    }

    /// Builds a table from a 0-based operation `f(i, j) = i ▷ j`.
    ///
    /// # Panics
    /// If `f` returns a value `≥ n`.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let v = f(i, j);
                assert!(v < n, "entry ({i},{j}) = {v} out of range");
                data.push(v as u32);
            }
        }
        QuandleTable { n, data }
    }

    pub(crate) fn from_raw(n: usize, data: Vec<u32>) -> Self {
        debug_assert_eq!(data.len(), n * n);
        QuandleTable { n, data }
    }

    /// `T_n`: `x ▷ y = x`.
    pub fn trivial(n: usize) -> Self {
        Self::from_fn(n, |i, _| i)
    }

    /// Cyclic quandle on `Z_n`: `x ▷ y = 2y - x`. Element `k` is the residue `k`.
    pub fn cyclic(n: usize) -> Self {
        Self::alexander(n, n - 1)
    }

    /// Alexander quandle on `Z_n`: `x ▷ y = t x + (1 - t) y`, for `t` a unit mod `n`.
    pub fn alexander(n: usize, t: usize) -> Self {
        Self::from_fn(n, |x, y| (t * x + (n + 1 - t % n) * y) % n)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// `i ▷ j`, 0-based.
    pub fn op(&self, i: usize, j: usize) -> usize {
        self.data[i * self.n + j] as usize
    }

    /// Rows with 1-based entries.
    pub fn rows_one_based(&self) -> Vec<Vec<usize>> {
        self.data
            .chunks(self.n)
            .map(|r| r.iter().map(|&v| v as usize + 1).collect())
            .collect()
    }

    /// Checks the three quandle axioms, listing every violation.
    pub fn validate_axioms(&self) -> AxiomReport {
        let n = self.n;
        let mut violations = Vec::new();
        for i in 0..n {
            if self.op(i, i) != i {
                violations.push(AxiomViolation::Idempotence { element: i });
            }
        }
        for j in 0..n {
            let mut seen: Vec<Option<usize>> = vec![None; n];
            for i in 0..n {
                let v = self.op(i, j);
                match seen[v] {
                    Some(first) => violations.push(AxiomViolation::RightInvertibility {
                        column: j,
                        rows: (first, i),
                        value: v,
                    }),
                    None => seen[v] = Some(i),
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.op(a, b);
                for c in 0..n {
                    if self.op(ab, c) != self.op(self.op(a, c), self.op(b, c)) {
                        violations.push(AxiomViolation::Distributivity { a, b, c });
                    }
                }
            }
        }
        AxiomReport { violations }
    }

    pub fn is_quandle(&self) -> bool {
        self.validate_axioms().is_valid()
    }

    /// The dual table, `x ▷⁻¹ y`: `dual[i][j] = k` where `k ▷ j = i`.
    ///
    /// Requires every column to be a permutation.
    pub fn dual(&self) -> QuandleTable {
        let n = self.n;
        let mut data = vec![u32::MAX; n * n];
        for k in 0..n {
            for j in 0..n {
                data[self.op(k, j) * n + j] = k as u32;
            }
        }
        debug_assert!(
            data.iter().all(|&v| v != u32::MAX),
            "columns must be permutations"
        );
        QuandleTable { n, data }
    }

    /// True when `▷ = ▷⁻¹`.
    pub fn is_involutory(&self) -> bool {
        *self == self.dual()
    }

    /// Renames element `i` to `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> QuandleTable {
        let n = self.n;
        let mut data = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                data[perm[i] * n + perm[j]] = perm[self.op(i, j)] as u32;
            }
        }
        QuandleTable { n, data }
    }

    /// True when `map` (0-based, total) satisfies `map(x ▷ y) = map(x) ▷ map(y)`.
    pub fn is_homomorphism(&self, target: &QuandleTable, map: &[usize]) -> bool {
        map.len() == self.n
            && map.iter().all(|&v| v < target.n)
            && (0..self.n)
                .all(|i| (0..self.n).all(|j| map[self.op(i, j)] == target.op(map[i], map[j])))
    }
}

impl fmt::Display for QuandleTable {
    /// Quandle matrix file format: one line per row, 1-based entries separated by spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.data.chunks(self.n) {
            let line: Vec<String> = row.iter().map(|&v| (v + 1).to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for QuandleTable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .lines()
            .filter(|l| !l.trim().is_empty())
            .enumerate()
            .map(|(i, line)| {
                line.split_whitespace()
                    .map(|tok| {
                        tok.parse::<usize>().map_err(|_| {
                            Error::MalformedTable(format!("row {}: bad entry `{tok}`", i + 1))
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows)
    }
}
