//! Permutations on strand positions.
//!
//! `table[i]` is the destination of the strand entering at position `i`.
//! Composition reads left to right: `a.then(b)` runs `a` first.

use std::fmt;

use crate::error::{Error, Result};
use crate::finsk::FinMap;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    table: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { table: (0..n).collect() }
    }

    pub fn from_table(table: Vec<usize>) -> Result<Self> {
        let n = table.len();
        let mut seen = vec![false; n];
        for &v in &table {
            if v >= n || seen[v] {
                return Err(Error::model(format!("not a bijection: {table:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { table })
    }

    /// The adjacent transposition swapping positions `k-1` and `k`.
    pub fn transposition(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(Error::model(format!("transposition index {k} out of range for {n}")));
        }
        let mut table: Vec<usize> = (0..n).collect();
        table.swap(k - 1, k);
        Ok(Permutation { table })
    }

    /// Moves a leading block of `a` strands past a block of `b` strands,
    /// preserving the order inside each block.
    pub fn block_transposition(a: usize, b: usize) -> Self {
        let mut table = Vec::with_capacity(a + b);
        for i in 0..a {
            table.push(b + i);
        }
        for j in 0..b {
            table.push(j);
        }
        Permutation { table }
    }

    pub fn from_finmap(map: &FinMap) -> Result<Self> {
        if !map.is_bijective() {
            return Err(Error::model(format!("{map:?} is not a bijection")));
        }
        Ok(Permutation { table: map.table.clone() })
    }

    pub fn degree(&self) -> usize {
        self.table.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.table[i]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn is_identity(&self) -> bool {
        self.table.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn then(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::model(format!(
                "degree mismatch: {} vs {}",
                self.degree(),
                other.degree()
            )));
        }
        Ok(Permutation { table: self.table.iter().map(|&i| other.table[i]).collect() })
    }

    pub fn inverse(&self) -> Permutation {
        let mut table = vec![0; self.table.len()];
        for (i, &v) in self.table.iter().enumerate() {
            table[v] = i;
        }
        Permutation { table }
    }

    pub fn block_sum(&self, other: &Permutation) -> Permutation {
        let n = self.degree();
        let mut table = self.table.clone();
        table.extend(other.table.iter().map(|&v| v + n));
        Permutation { table }
    }

    pub fn inversions(&self) -> usize {
        let mut count = 0;
        for i in 0..self.table.len() {
            for j in i + 1..self.table.len() {
                if self.table[i] > self.table[j] {
                    count += 1;
                }
            }
        }
        count
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.table.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}
