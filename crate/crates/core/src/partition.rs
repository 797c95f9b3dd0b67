//! Integer partitions, rectangles, hook lengths and dominance order.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing list of positive parts. Trailing zeros are never
/// stored, so equality and hashing see the canonical form.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, stripping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The Young diagram of a `rows` x `cols` rectangle; empty if either is zero.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if rows == 0 || cols == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![cols; rows] }
        }
    }

    /// Single row `(a)`.
    pub fn row(a: usize) -> Self {
        Self::rectangle(1, a)
    }

    /// Single column `(1^b)`.
    pub fn column(b: usize) -> Self {
        Self::rectangle(b, 1)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (zero-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn is_row(&self) -> bool {
        self.parts.len() <= 1
    }

    pub fn is_column(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Self {
        let width = self.part(0);
        let parts = (0..width)
            .map(|c| self.parts.iter().take_while(|&&p| p > c).count())
            .collect();
        Partition { parts }
    }

    /// True if the Young diagram of `other` fits inside this one.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// All partitions of `n`, largest first in lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition { parts: prefix.clone() });
                return;
            }
            for p in (1..=n.min(max)).rev() {
                prefix.push(p);
                go(n - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions whose diagram fits inside `self`.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn go(outer: &[usize], i: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if i == outer.len() {
                out.push(Partition::from_sorted(prefix.clone()));
                return;
            }
            for p in 0..=outer[i].min(max) {
                prefix.push(p);
                go(outer, i + 1, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(&self.parts, 0, usize::MAX, &mut Vec::new(), &mut out);
        out
    }

    /// Number of standard Young tableaux of this shape, by the hook length formula.
    pub fn standard_tableau_count(&self) -> BigUint {
        let conj = self.conjugate();
        let mut num: BigUint = One::one();
        for k in 2..=self.weight() {
            num *= k;
        }
        let mut den: BigUint = One::one();
        for (r, &len) in self.parts.iter().enumerate() {
            for c in 0..len {
                let hook = (len - c - 1) + (conj.parts[c] - r - 1) + 1;
                den *= hook;
            }
        }
        num / den
    }

    /// Dominance order: every prefix sum of `self` is at most that of `other`.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool> {
        if self.weight() != other.weight() {
            return Err(Error::IncomparableWeights(self.to_string(), other.to_string()));
        }
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for i in 0..len {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// `p(3,1)` builds a partition; panics on non-decreasing input.
#[macro_export]
macro_rules! p {
    () => { $crate::partition::Partition::empty() };
    ($($x:expr),+ $(,)?) => {
        $crate::partition::Partition::new(vec![$($x),+]).expect("literal partition")
    };
}

/// A rectangle of the rectangle diagram, possibly empty.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Rectangle {
    pub rows: usize,
    pub cols: usize,
}

impl Rectangle {
    pub fn new(rows: usize, cols: usize) -> Self {
        Rectangle { rows, cols }
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0 || self.cols == 0
    }

    pub fn boxes(&self) -> usize {
        self.rows * self.cols
    }

    pub fn as_partition(&self) -> Partition {
        Partition::rectangle(self.rows, self.cols)
    }
}
