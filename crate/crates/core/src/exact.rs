//! Exact values of the partition function.
//!
//! [`PartitionTable`] is filled by Euler's pentagonal-number recurrence.
//! [`p_brute`] counts partitions with a dynamic programme over part sizes and
//! shares no code with the recurrence, so the two can check each other.

use std::fs;
use std::io::{self, BufRead, Write};
use std::path::Path;

use rug::Integer;

use crate::error::{Error, Result};

/// Largest `n` accepted by [`p_brute`] unless a ceiling is passed explicitly.
pub const DEFAULT_ORACLE_CEILING: u64 = 2000;

/// Exact `p(0..=n_max)`, with `p(0) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionTable {
    values: Vec<Integer>,
}

impl Default for PartitionTable {
    fn default() -> Self {
        Self::new()
    }
}

impl PartitionTable {
    /// A table holding only `p(0) = 1`.
    pub fn new() -> Self {
        Self {
            values: vec![Integer::from(1)],
        }
    }

    /// A table filled exactly up to `n_max`.
    pub fn with_max(n_max: u64) -> Self {
        let mut t = Self::new();
        t.fill_to(n_max);
        t
    }

    pub fn n_max(&self) -> u64 {
        self.values.len() as u64 - 1
    }

    pub fn values(&self) -> &[Integer] {
        &self.values
    }

    pub fn get(&self, n: u64) -> Option<&Integer> {
        self.values.get(usize::try_from(n).ok()?)
    }

    /// `p(n)` from a table that must already reach `n`.
    ///
    /// # Panics
    /// If `n > n_max`. Scans pre-extend the shared table before reading it.
    pub fn at(&self, n: u64) -> &Integer {
        self.get(n)
            .unwrap_or_else(|| panic!("p({n}) requested from a table ending at {}", self.n_max()))
    }

    /// Grows the table so that it covers `n`, at least doubling its length.
    pub fn extend_to(&mut self, n: u64) {
        if n <= self.n_max() {
            return;
        }
        let doubled = self.n_max().saturating_mul(2);
        self.fill_to(n.max(doubled));
    }

    /// Grows the table to exactly `n` entries past zero (no doubling).
    pub fn fill_to(&mut self, n_max: u64) {
        let target = usize::try_from(n_max).expect("table size exceeds address space");
        self.values.reserve(target.saturating_sub(self.values.len() - 1));
        while self.values.len() <= target {
            let next = pentagonal_step(&self.values);
            self.values.push(next);
        }
    }

    /// A copy holding only `p(0..=n_max)`.
    pub fn truncated(&self, n_max: u64) -> Self {
        let end = usize::try_from(n_max).map_or(self.values.len(), |n| (n + 1).min(self.values.len()));
        Self {
            values: self.values[..end].to_vec(),
        }
    }

    /// `p(n)`, extending the table on demand.
    pub fn p(&mut self, n: u64) -> &Integer {
        self.extend_to(n);
        self.at(n)
    }

    /// Writes the table in the cache format: `"<n> <p(n)>\n"` per entry.
    pub fn write_to<W: Write>(&self, mut out: W) -> io::Result<()> {
        for (n, v) in self.values.iter().enumerate() {
            writeln!(out, "{n} {v}")?;
        }
        out.flush()
    }

    /// Parses and validates a table in the cache format.
    pub fn read_from<R: BufRead>(input: R) -> Result<Self> {
        let mut values: Vec<Integer> = Vec::new();
        for (idx, line) in input.lines().enumerate() {
            let line_no = idx + 1;
            let line = line?;
            let bad = |message: String| Error::Parse {
                line: line_no,
                message,
            };
            let (index, digits) = line
                .split_once(' ')
                .ok_or_else(|| bad(format!("expected \"<n> <value>\", got {line:?}")))?;
            let index: u64 = parse_decimal(index)
                .ok_or_else(|| bad(format!("bad index {index:?}")))?;
            if index != values.len() as u64 {
                return Err(bad(format!(
                    "expected index {}, found {index}",
                    values.len()
                )));
            }
            let value = Some(digits)
                .filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
                .and_then(|d| Integer::from_str_radix(d, 10).ok())
                .ok_or_else(|| bad(format!("bad value {digits:?}")))?;
            let expected = if values.is_empty() {
                Integer::from(1)
            } else {
                pentagonal_step(&values)
            };
            if value != expected {
                return Err(bad(format!("p({index}) = {value} contradicts the recurrence")));
            }
            values.push(value);
        }
        if values.is_empty() {
            return Err(Error::EmptyTable);
        }
        Ok(Self { values })
    }
}

fn parse_decimal<T: std::str::FromStr>(s: &str) -> Option<T> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

// p(n) from p(0..n) via the generalized pentagonal numbers k(3k -+ 1)/2.
fn pentagonal_step(prev: &[Integer]) -> Integer {
    let n = prev.len();
    let mut acc = Integer::new();
    for k in 1.. {
        let g1 = k * (3 * k - 1) / 2;
        if g1 > n {
            break;
        }
        let g2 = k * (3 * k + 1) / 2;
        let add = k % 2 == 1;
        for g in [g1, g2] {
            if g <= n {
                if add {
                    acc += &prev[n - g];
                } else {
                    acc -= &prev[n - g];
                }
            }
        }
    }
    acc
}

/// Exact `p(n)`, extending `table` as needed.
pub fn p_exact(n: u64, table: &mut PartitionTable) -> Integer {
    table.p(n).clone()
}

/// `p(n)` by counting partitions with parts of size at most `k`, for
/// `k = 1, 2, ..., n`. Rejects `n` above [`DEFAULT_ORACLE_CEILING`].
pub fn p_brute(n: u64) -> Result<Integer> {
    p_brute_with_ceiling(n, DEFAULT_ORACLE_CEILING)
}

pub fn p_brute_with_ceiling(n: u64, ceiling: u64) -> Result<Integer> {
    Ok(p_brute_all(n, ceiling)?.pop().expect("non-empty"))
}

/// `p(0..=n_max)` from a single run of the part-size dynamic programme.
pub fn p_brute_all(n_max: u64, ceiling: u64) -> Result<Vec<Integer>> {
    if n_max > ceiling {
        return Err(Error::OracleCeiling { n: n_max, ceiling });
    }
    let n = n_max as usize;
    let mut ways = vec![Integer::new(); n + 1];
    ways[0] = Integer::from(1);
    for part in 1..=n {
        for total in part..=n {
            let (head, tail) = ways.split_at_mut(total);
            tail[0] += &head[total - part];
        }
    }
    Ok(ways)
}

/// Writes `table` to `path` in the cache format.
pub fn save_table(table: &PartitionTable, path: &Path) -> Result<()> {
    let file = fs::File::create(path)?;
    table.write_to(io::BufWriter::new(file))?;
    Ok(())
}

/// Loads and validates a cache file.
pub fn load_table(path: &Path) -> Result<PartitionTable> {
    let file = fs::File::open(path)?;
    PartitionTable::read_from(io::BufReader::new(file))
}
