//! Cardinality sequences: the strictly increasing lists of allowed
//! path/cycle sizes that parameterize every polytope in this crate.

use crate::error::{invalid, Result};
use serde::{Deserialize, Serialize};

/// A strictly increasing sequence `c_1 < c_2 < ... < c_m` of allowed
/// cardinalities, with `m >= 1` and all values `>= 1`.
///
/// Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CardinalitySequence {
    values: Vec<usize>,
}

impl CardinalitySequence {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        if values.is_empty() {
            return Err(invalid("cardinality sequence must be nonempty"));
        }
        if values[0] < 1 {
            return Err(invalid("cardinalities must be >= 1"));
        }
        if values.windows(2).any(|w| w[0] >= w[1]) {
            return Err(invalid("cardinality sequence must be strictly increasing"));
        }
        Ok(CardinalitySequence { values })
    }

    /// Like [`CardinalitySequence::new`] but additionally requires
    /// `c_1 >= min_first`; cycle polytopes pass 2 (directed) or 3
    /// (undirected) here since shorter simple cycles do not exist.
    pub fn with_min_first(values: Vec<usize>, min_first: usize) -> Result<Self> {
        let seq = Self::new(values)?;
        if seq.first() < min_first {
            return Err(invalid(format!(
                "first cardinality {} below required minimum {}",
                seq.first(),
                min_first
            )));
        }
        Ok(seq)
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn first(&self) -> usize {
        self.values[0]
    }

    pub fn last(&self) -> usize {
        *self.values.last().unwrap()
    }

    /// `c_p` with 1-based `p`, matching the usual notation.
    pub fn at(&self, p: usize) -> usize {
        self.values[p - 1]
    }

    pub fn contains(&self, k: usize) -> bool {
        self.values.binary_search(&k).is_ok()
    }

    /// Returns the 1-based index `p` with `c_p < k < c_{p+1}` when `k` is a
    /// forbidden cardinality strictly between two allowed ones, `None`
    /// otherwise (allowed values, and values outside `(c_1, c_m)`).
    pub fn forbidden_bracket(&self, k: usize) -> Option<usize> {
        if k <= self.first() || k >= self.last() || self.contains(k) {
            return None;
        }
        // binary_search errs with the insertion point, which is the number
        // of values strictly below k, i.e. the 1-based p.
        match self.values.binary_search(&k) {
            Err(pos) => Some(pos),
            Ok(_) => None,
        }
    }

    /// Brackets `p` (1-based) that admit at least one forbidden value,
    /// i.e. `c_{p+1} > c_p + 1`.
    pub fn gapped_brackets(&self) -> Vec<usize> {
        (1..self.len())
            .filter(|&p| self.at(p + 1) > self.at(p) + 1)
            .collect()
    }

    /// True when every allowed cardinality is even.
    pub fn all_even(&self) -> bool {
        self.values.iter().all(|v| v % 2 == 0)
    }

    /// True when every allowed cardinality is odd.
    pub fn all_odd(&self) -> bool {
        self.values.iter().all(|v| v % 2 == 1)
    }
}

impl std::fmt::Display for CardinalitySequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Shorthand used pervasively in tests.
pub fn cseq(values: &[usize]) -> CardinalitySequence {
    CardinalitySequence::new(values.to_vec()).expect("valid cardinality sequence")
}
