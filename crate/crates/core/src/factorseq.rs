//! Tableau diagrams, factor sequences and the conjectured rule counting
//! quiver coefficients by factor sequences.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::Permutation;
use crate::quiver::{compute_p, RankConditions};
use crate::schubert::{normalize, rank_conditions_of};
use crate::schur::PartitionTuple;
use crate::stanley::stanley_function;
use crate::tableau::Tableau;

/// How the rectangles of a diagram are filled.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Filling {
    /// Row `t` of `T_ij` holds `offset + t`.
    #[default]
    Canonical,
    /// `T_ij` holds `offset + 1, offset + 2, ...` in row-major order.
    Sequential,
}

/// A filling `T_ij` of every rectangle `R_ij` of a rectangle diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableauDiagram {
    n: usize,
    /// `rows[k - 1][i] = T_{i, i + k}`.
    rows: Vec<Vec<Tableau>>,
}

impl TableauDiagram {
    pub fn new(r: &RankConditions, filling: Filling) -> Result<Self> {
        r.check()?;
        let n = r.n();
        let mut rows: Vec<Vec<Tableau>> = (1..=n).map(|k| vec![Tableau::empty(); n + 1 - k]).collect();
        // the cone of R_ij only contains rectangles with smaller j - i
        for k in 1..=n {
            for i in 0..=n - k {
                let j = i + k;
                let rect = r.rect(i, j);
                if rect.is_empty() {
                    continue;
                }
                let mut offset = 0;
                for kk in 1..k {
                    for t in &rows[kk - 1][i..=j - kk] {
                        offset = offset.max(t.max_entry());
                    }
                }
                rows[k - 1][i] = match filling {
                    Filling::Canonical => Tableau::constant_rows(rect.rows, rect.cols, offset),
                    Filling::Sequential => Tableau::row_major(rect.rows, rect.cols, offset),
                };
            }
        }
        Ok(TableauDiagram { n, rows })
    }

    pub fn canonical(r: &RankConditions) -> Result<Self> {
        Self::new(r, Filling::Canonical)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `T_ij` for `0 <= i < j <= n`.
    pub fn get(&self, i: usize, j: usize) -> &Tableau {
        &self.rows[j - i - 1][i]
    }

    pub fn total_boxes(&self) -> usize {
        self.rows.iter().flatten().map(Tableau::size).sum()
    }

    /// The diagram formed by the bottom `n - 1` rows: `T'_ij = T_{i, j+1}`.
    pub fn bottom(&self) -> TableauDiagram {
        TableauDiagram { n: self.n - 1, rows: self.rows[1..].to_vec() }
    }

    /// Shapes match the rectangles of `r` and entries exceed every entry in
    /// the cone above.
    pub fn is_valid_for(&self, r: &RankConditions) -> bool {
        if r.n() != self.n || !r.validate() {
            return false;
        }
        for k in 1..=self.n {
            for i in 0..=self.n - k {
                let j = i + k;
                let t = self.get(i, j);
                let rect = r.rect(i, j);
                let expected = if rect.is_empty() { Partition::empty() } else { rect.as_partition() };
                if t.shape() != expected {
                    return false;
                }
                let Some(lo) = t.min_entry() else { continue };
                for kk in 1..k {
                    for ii in i..=j - kk {
                        if self.get(ii, ii + kk).max_entry() >= lo {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// All distinct factor sequences `(W_1, ..., W_n)` of a diagram.
pub fn factor_sequences(d: &TableauDiagram) -> BTreeSet<Vec<Tableau>> {
    let mut out = BTreeSet::new();
    if d.n == 0 {
        out.insert(Vec::new());
        return out;
    }
    if d.n == 1 {
        out.insert(vec![d.get(0, 1).clone()]);
        return out;
    }
    let n = d.n;
    for u in factor_sequences(&d.bottom()) {
        let choices: Vec<_> = u.iter().map(Tableau::factorizations).collect();
        let mut pick = vec![0usize; n - 1];
        loop {
            let mut w = Vec::with_capacity(n);
            let mut carry = Tableau::empty();
            for i in 0..n - 1 {
                let (p, q) = &choices[i][pick[i]];
                w.push(carry.product(d.get(i, i + 1)).product(p));
                carry = q.clone();
            }
            w.push(carry.product(d.get(n - 1, n)));
            out.insert(w);
            // odometer over the factorization choices
            let mut k = 0;
            while k < n - 1 {
                pick[k] += 1;
                if pick[k] < choices[k].len() {
                    break;
                }
                pick[k] = 0;
                k += 1;
            }
            if k == n - 1 {
                break;
            }
        }
    }
    out
}

/// Factor-sequence count tallied by shape tuple.
pub fn shape_counts(seqs: &BTreeSet<Vec<Tableau>>) -> BTreeMap<PartitionTuple, u64> {
    let mut counts = BTreeMap::new();
    for s in seqs {
        let key = PartitionTuple(s.iter().map(Tableau::shape).collect());
        *counts.entry(key).or_insert(0) += 1;
    }
    counts
}

/// Rows four and below are empty and no two neighbours in row three are
/// non-empty: the range where the rule is known to hold.
pub fn in_proven_regime(r: &RankConditions) -> Result<bool> {
    let diagram = r.rectangle_diagram()?;
    for k in 4..=r.n() {
        if diagram.row(k).iter().any(|rect| !rect.is_empty()) {
            return Ok(false);
        }
    }
    if r.n() >= 3 {
        let row = diagram.row(3);
        if row.windows(2).any(|p| !p[0].is_empty() && !p[1].is_empty()) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureEntry {
    pub factor_count: u64,
    #[serde(serialize_with = "crate::schur::serialize_coeff")]
    pub coefficient: BigInt,
    #[serde(rename = "match")]
    pub matches: bool,
}

/// Per shape tuple comparison of factor-sequence counts with `c_mu(r)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureReport {
    pub entries: BTreeMap<PartitionTuple, ConjectureEntry>,
    pub in_proven_regime: bool,
}

impl ConjectureReport {
    pub fn holds(&self) -> bool {
        self.entries.values().all(|e| e.matches)
    }

    pub fn mismatches(&self) -> impl Iterator<Item = (&PartitionTuple, &ConjectureEntry)> {
        self.entries.iter().filter(|(_, e)| !e.matches)
    }

    /// A mismatch inside the proven regime.
    pub fn is_failure(&self) -> bool {
        self.in_proven_regime && !self.holds()
    }
}

fn tuple_key(t: &PartitionTuple) -> String {
    serde_json::to_string(&t.0).expect("partitions serialize")
}

impl Serialize for ConjectureReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.entries.len()))?;
        for (k, v) in &self.entries {
            map.serialize_entry(&tuple_key(k), v)?;
        }
        map.end()
    }
}

pub fn conjecture_check(r: &RankConditions) -> Result<ConjectureReport> {
    conjecture_check_with(r, Filling::Canonical)
}

pub fn conjecture_check_with(r: &RankConditions, filling: Filling) -> Result<ConjectureReport> {
    let d = TableauDiagram::new(r, filling)?;
    let counts = shape_counts(&factor_sequences(&d));
    let p = compute_p(r)?;
    let mut entries = BTreeMap::new();
    for (key, c) in p.terms() {
        let factor_count = counts.get(key).copied().unwrap_or(0);
        let matches = BigInt::from(factor_count) == *c;
        entries.insert(key.clone(), ConjectureEntry { factor_count, coefficient: c.clone(), matches });
    }
    for (key, &factor_count) in &counts {
        entries.entry(key.clone()).or_insert(ConjectureEntry {
            factor_count,
            coefficient: BigInt::from(0),
            matches: false,
        });
    }
    Ok(ConjectureReport { entries, in_proven_regime: in_proven_regime(r)? })
}

/// Counts of factor sequences `(0, ..., W, ..., 0)` of the diagram of `w`,
/// with `W` in the middle slot, by the shape of `W`.
pub fn middle_only_counts(w: &Permutation) -> Result<BTreeMap<Partition, u64>> {
    let (w, m) = normalize(w);
    let d = TableauDiagram::canonical(&rank_conditions_of(&w))?;
    let mut counts = BTreeMap::new();
    for s in factor_sequences(&d) {
        if s.iter().enumerate().all(|(i, t)| i == m - 1 || t.is_empty()) {
            *counts.entry(s[m - 1].shape()).or_insert(0) += 1;
        }
    }
    Ok(counts)
}

/// Middle-only counts of shape `lambda'` equal `alpha_{w, lambda}`.
pub fn middle_only_check(w: &Permutation) -> Result<bool> {
    let counts = middle_only_counts(w)?;
    let f = stanley_function(w)?;
    let from_counts: BTreeMap<Partition, BigInt> =
        counts.iter().map(|(shape, &c)| (shape.conjugate(), BigInt::from(c))).collect();
    let from_f: BTreeMap<Partition, BigInt> = f.terms().map(|(l, c)| (l.clone(), c.clone())).collect();
    Ok(from_counts == from_f)
}

fn permutation_diagram(w: &Permutation) -> Result<(TableauDiagram, usize)> {
    let (w, m) = normalize(w);
    Ok((TableauDiagram::canonical(&rank_conditions_of(&w))?, m))
}

/// `T_j = T_{0j} T_{1j} ... T_{m-1,j}` for `j = m..2m-1`, in that order.
pub fn column_tableaux(w: &Permutation) -> Result<Vec<Tableau>> {
    let (d, m) = permutation_diagram(w)?;
    Ok((m..2 * m)
        .map(|j| (0..m).fold(Tableau::empty(), |acc, i| acc.product(d.get(i, j))))
        .collect())
}

/// `T_m T_{m+1} ... T_{2m-1}`.
pub fn w_right(w: &Permutation) -> Result<Tableau> {
    Ok(column_tableaux(w)?.iter().fold(Tableau::empty(), |acc, t| acc.product(t)))
}

/// `(T_{0,m} ... T_{0,2m-1}) (T_{1,m} ... T_{1,2m-1}) ... (T_{m-1,m} ... T_{m-1,2m-1})`.
pub fn w_left(w: &Permutation) -> Result<Tableau> {
    let (d, m) = permutation_diagram(w)?;
    let mut acc = Tableau::empty();
    for i in 0..m {
        for j in m..2 * m {
            acc = acc.product(d.get(i, j));
        }
    }
    Ok(acc)
}

/// `T_j` is a single column of `r_p(w)` boxes for `p = 2m + 1 - j`.
pub fn column_sizes_check(w: &Permutation) -> Result<bool> {
    let (wn, m) = normalize(w);
    let r = crate::stanley::inversion_counts(&wn);
    let cols = column_tableaux(&wn)?;
    Ok(cols.iter().zip(m..2 * m).all(|(t, j)| {
        let p = 2 * m + 1 - j;
        t.shape().len() == t.size() && t.size() == r[p - 1]
    }))
}

/// Shape checks for the two extremal factorizations.
pub fn extremal_shapes_check(w: &Permutation) -> Result<bool> {
    let lambda = crate::stanley::lambda_of(w);
    let mu = crate::stanley::mu_of(w);
    Ok(w_right(w)?.shape() == lambda.conjugate()
        && w_left(w)?.shape() == mu.conjugate()
        && column_sizes_check(w)?)
}

/// The conjecture restricted to the diagram of a permutation.
pub fn permutation_conjecture_check(w: &Permutation) -> Result<ConjectureReport> {
    let (w, _) = normalize(w);
    conjecture_check(&rank_conditions_of(&w))
}

impl TableauDiagram {
    /// Fails with a precondition error unless the diagram is valid for `r`.
    pub fn ensure_valid_for(&self, r: &RankConditions) -> Result<()> {
        if self.is_valid_for(r) {
            Ok(())
        } else {
            Err(Error::Precondition("tableau diagram does not fit the rank conditions".into()))
        }
    }
}
