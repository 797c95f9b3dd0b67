//! Semistandard tableaux and the plactic product.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A pair `(P, Q)` with `P * Q` equal to a given tableau.
pub type Factorization = (Tableau, Tableau);

/// A semistandard Young tableau stored row by row, top row first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(mut rows: Vec<Vec<usize>>) -> Result<Self> {
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        for (r, row) in rows.iter().enumerate() {
            if row.is_empty() {
                return Err(Error::InvalidTableau(format!("row {r} is empty")));
            }
            if let Some(&0) = row.iter().min() {
                return Err(Error::InvalidEntry(0));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::InvalidTableau(format!("row {r} decreases")));
            }
            if r > 0 {
                let above = &rows[r - 1];
                if row.len() > above.len() {
                    return Err(Error::InvalidTableau("shape is not a partition".into()));
                }
                if row.iter().zip(above).any(|(b, a)| b <= a) {
                    return Err(Error::InvalidTableau(format!("column fails to increase at row {r}")));
                }
            }
        }
        Ok(Tableau { rows })
    }

    pub fn empty() -> Self {
        Tableau { rows: Vec::new() }
    }

    /// Rectangle of the given shape whose row `t` (1-based) holds `offset + t`.
    pub fn constant_rows(rows: usize, cols: usize, offset: usize) -> Self {
        if rows == 0 || cols == 0 {
            return Self::empty();
        }
        Tableau { rows: (1..=rows).map(|t| vec![offset + t; cols]).collect() }
    }

    /// Rectangle filled with `offset + 1, offset + 2, ...` in row-major order.
    pub fn row_major(rows: usize, cols: usize, offset: usize) -> Self {
        if rows == 0 || cols == 0 {
            return Self::empty();
        }
        Tableau {
            rows: (0..rows)
                .map(|r| (0..cols).map(|c| offset + r * cols + c + 1).collect())
                .collect(),
        }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn shape(&self) -> Partition {
        Partition::from_sorted(self.rows.iter().map(Vec::len).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn max_entry(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn min_entry(&self) -> Option<usize> {
        self.rows.iter().flatten().copied().min()
    }

    /// Row reading word: bottom row first, each row left to right.
    pub fn row_word(&self) -> Vec<usize> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// Multiset of entries as value -> multiplicity.
    pub fn content(&self) -> BTreeMap<usize, usize> {
        let mut c = BTreeMap::new();
        for &v in self.rows.iter().flatten() {
            *c.entry(v).or_insert(0) += 1;
        }
        c
    }

    /// Schensted row insertion of `v`.
    pub fn insert(&self, v: usize) -> Result<Self> {
        if v == 0 {
            return Err(Error::InvalidEntry(v));
        }
        let mut t = self.clone();
        t.insert_mut(v);
        Ok(t)
    }

    fn insert_mut(&mut self, mut v: usize) {
        for row in self.rows.iter_mut() {
            // leftmost entry strictly greater than v gets bumped
            let pos = row.partition_point(|&x| x <= v);
            if pos == row.len() {
                row.push(v);
                return;
            }
            std::mem::swap(&mut row[pos], &mut v);
        }
        self.rows.push(vec![v]);
    }

    /// Plactic product: inserts the row word of `other` into `self`.
    pub fn product(&self, other: &Tableau) -> Tableau {
        let mut t = self.clone();
        for v in other.row_word() {
            t.insert_mut(v);
        }
        t
    }

    /// All pairs `(P, Q)` with `P * Q == self`, sorted.
    pub fn factorizations(&self) -> Arc<Vec<Factorization>> {
        type Cache = RwLock<HashMap<Tableau, Arc<Vec<Factorization>>>>;
        static CACHE: OnceLock<Cache> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(hit) = cache.read().unwrap().get(self) {
            return hit.clone();
        }
        let computed = Arc::new(self.compute_factorizations());
        cache.write().unwrap().entry(self.clone()).or_insert(computed).clone()
    }

    fn compute_factorizations(&self) -> Vec<Factorization> {
        let shape = self.shape();
        let content: Vec<(usize, usize)> = self.content().into_iter().collect();
        let mut out = Vec::new();
        for_each_submultiset(&content, &mut |left, right| {
            let lefts: Vec<Tableau> = with_content(left)
                .into_iter()
                .filter(|p| shape.contains(&p.shape()))
                .collect();
            if lefts.is_empty() {
                return;
            }
            let rights: Vec<Tableau> = with_content(right)
                .into_iter()
                .filter(|q| shape.contains(&q.shape()))
                .collect();
            for p in &lefts {
                for q in &rights {
                    if &p.product(q) == self {
                        out.push((p.clone(), q.clone()));
                    }
                }
            }
        });
        out.sort();
        out
    }
}

/// Multiset of entries as `(value, multiplicity)` pairs.
type Content = [(usize, usize)];

fn for_each_submultiset(content: &Content, f: &mut dyn FnMut(&Content, &Content)) {
    fn go(
        content: &Content,
        i: usize,
        left: &mut Vec<(usize, usize)>,
        right: &mut Vec<(usize, usize)>,
        f: &mut dyn FnMut(&Content, &Content),
    ) {
        if i == content.len() {
            f(left, right);
            return;
        }
        let (v, m) = content[i];
        for k in 0..=m {
            if k > 0 {
                left.push((v, k));
            }
            if m - k > 0 {
                right.push((v, m - k));
            }
            go(content, i + 1, left, right, f);
            if k > 0 {
                left.pop();
            }
            if m - k > 0 {
                right.pop();
            }
        }
    }
    go(content, 0, &mut Vec::new(), &mut Vec::new(), f);
}

/// All semistandard tableaux with the given content, listed as
/// `(value, multiplicity)` pairs in increasing value order.
pub fn with_content(content: &[(usize, usize)]) -> Vec<Tableau> {
    let mut current = vec![Tableau::empty()];
    for &(v, k) in content {
        let mut next = Vec::new();
        for t in &current {
            let shape = t.shape();
            for strip in horizontal_strips(&shape, k, None) {
                let mut rows = t.rows.clone();
                for (r, add) in strip.iter().enumerate() {
                    if *add == 0 {
                        continue;
                    }
                    if r == rows.len() {
                        rows.push(Vec::new());
                    }
                    rows[r].extend(std::iter::repeat_n(v, *add));
                }
                next.push(Tableau { rows });
            }
        }
        current = next;
    }
    current
}

/// All semistandard tableaux of `shape` with entries in `1..=max_entry`.
pub fn semistandard_tableaux(shape: &Partition, max_entry: usize) -> Vec<Tableau> {
    fn go(shape: &Partition, t: Tableau, v: usize, max_entry: usize, out: &mut Vec<Tableau>) {
        let inner = t.shape();
        if &inner == shape {
            out.push(t);
            return;
        }
        if v > max_entry || shape.len() - inner.len() > max_entry - v + 1 {
            return;
        }
        let remaining = shape.weight() - inner.weight();
        for k in 0..=remaining {
            for strip in horizontal_strips(&inner, k, Some(shape)) {
                let mut rows = t.rows.clone();
                for (r, add) in strip.iter().enumerate() {
                    if *add == 0 {
                        continue;
                    }
                    if r == rows.len() {
                        rows.push(Vec::new());
                    }
                    rows[r].extend(std::iter::repeat_n(v, *add));
                }
                go(shape, Tableau { rows }, v + 1, max_entry, out);
            }
        }
    }
    let mut out = Vec::new();
    go(shape, Tableau::empty(), 1, max_entry, &mut out);
    out
}

/// Ways to add a horizontal strip of `k` boxes to `inner`, optionally
/// staying inside `outer`. Each result lists boxes added per row.
fn horizontal_strips(inner: &Partition, k: usize, outer: Option<&Partition>) -> Vec<Vec<usize>> {
    let rows = inner.len() + 1;
    let mut out = Vec::new();
    fn go(
        inner: &Partition,
        outer: Option<&Partition>,
        r: usize,
        rows: usize,
        left: usize,
        acc: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if r == rows {
            if left == 0 {
                out.push(acc.clone());
            }
            return;
        }
        let cap_above = if r == 0 { usize::MAX } else { inner.part(r - 1) - inner.part(r) };
        let cap_outer = outer.map_or(usize::MAX, |o| o.part(r).saturating_sub(inner.part(r)));
        let cap = cap_above.min(cap_outer).min(left);
        for a in 0..=cap {
            acc.push(a);
            go(inner, outer, r + 1, rows, left - a, acc, out);
            acc.pop();
        }
    }
    go(inner, outer, 0, rows, k, &mut Vec::new(), &mut out);
    out
}

impl TryFrom<Vec<Vec<usize>>> for Tableau {
    type Error = Error;
    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        Tableau::new(rows)
    }
}

impl From<Tableau> for Vec<Vec<usize>> {
    fn from(t: Tableau) -> Self {
        t.rows
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "∅");
        }
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}
