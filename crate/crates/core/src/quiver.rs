//! Rank conditions for a sequence of maps `E_0 -> E_1 -> ... -> E_n`, their
//! rectangle diagrams, and the inductive construction of the element
//! `P_r = sum_mu c_mu(r) s_{mu_1} (x) ... (x) s_{mu_n}`.
//!
//! `P_r` is built from `P_{r-bar}`, where `r-bar` drops the top row of the
//! rank diagram. Each basis element of `P_{r-bar}` is replaced by a sum over
//! LR splits `mu_i -> (sigma_i, tau_i)`; output factor `i` is the Schur
//! function of the row lengths of `R_{i-1,i}` with `sigma_i` glued to its
//! right side and `tau_{i-1}` below it, straightened.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::lr::lr_splits;
use crate::partition::{Partition, Rectangle};
use crate::schur::{straighten, PartitionTuple, TensorElement};

/// Ranks `r_ij` for `0 <= i <= j <= n`, with `r_ii` the rank of `E_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RankConditions {
    n: usize,
    // rows[k][i] = r_{i, i+k}, i.e. the rank diagram read top to bottom
    rows: Vec<Vec<usize>>,
}

impl RankConditions {
    /// Builds from rank-diagram rows; row `k` must have `n + 1 - k` entries.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::InvalidRankConditions("rank diagram has no rows".into()));
        }
        let n = rows.len() - 1;
        for (k, row) in rows.iter().enumerate() {
            if row.len() != n + 1 - k {
                return Err(Error::InvalidRankConditions(format!(
                    "row {k} has {} entries, expected {}",
                    row.len(),
                    n + 1 - k
                )));
            }
        }
        Ok(RankConditions { n, rows })
    }

    /// Builds from a function of `(i, j)`, `0 <= i <= j <= n`.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let rows = (0..=n).map(|k| (0..=n - k).map(|i| f(i, i + k)).collect()).collect();
        RankConditions { n, rows }
    }

    /// Number of maps.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        assert!(i <= j && j <= self.n, "r_({i},{j}) out of range for n = {}", self.n);
        self.rows[j - i][i]
    }

    pub fn rank_rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// The occurrence conditions: `r_ij <= min(r_{i,j-1}, r_{i+1,j})` and
    /// `r_ij - r_{i,j-1} - r_{i+1,j} + r_{i+1,j-1} >= 0` for `j - i >= 2`.
    pub fn validate(&self) -> bool {
        self.check().is_ok()
    }

    pub fn check(&self) -> Result<()> {
        for i in 0..self.n {
            for j in i + 1..=self.n {
                let r = self.get(i, j);
                if r > self.get(i, j - 1) || r > self.get(i + 1, j) {
                    return Err(Error::InvalidRankConditions(format!(
                        "r_({i},{j}) = {r} exceeds min(r_({i},{}), r_({},{j}))",
                        j - 1,
                        i + 1
                    )));
                }
                if j - i >= 2 {
                    let lhs = r as i64 - self.get(i, j - 1) as i64 - self.get(i + 1, j) as i64
                        + self.get(i + 1, j - 1) as i64;
                    if lhs < 0 {
                        return Err(Error::InvalidRankConditions(format!(
                            "r_({i},{j}) - r_({i},{}) - r_({},{j}) + r_({},{}) < 0",
                            j - 1,
                            i + 1,
                            i + 1,
                            j - 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// `R_ij`: `r_{i+1,j} - r_ij` rows and `r_{i,j-1} - r_ij` columns.
    /// Assumes the conditions are valid.
    pub fn rect(&self, i: usize, j: usize) -> Rectangle {
        let r = self.get(i, j);
        Rectangle::new(self.get(i + 1, j) - r, self.get(i, j - 1) - r)
    }

    /// Expected codimension `d(r) = sum (r_{i,j-1} - r_ij)(r_{i+1,j} - r_ij)`.
    pub fn expected_codim(&self) -> Result<usize> {
        self.check()?;
        Ok((0..self.n)
            .flat_map(|i| (i + 1..=self.n).map(move |j| (i, j)))
            .map(|(i, j)| self.rect(i, j).boxes())
            .sum())
    }

    pub fn rectangle_diagram(&self) -> Result<RectangleDiagram> {
        self.check()?;
        let rows = (1..=self.n)
            .map(|k| (0..=self.n - k).map(|i| self.rect(i, i + k)).collect())
            .collect();
        Ok(RectangleDiagram { n: self.n, rows })
    }

    /// The bottom `n` rows of the rank diagram, a system with `n - 1` maps.
    pub fn bottom(&self) -> RankConditions {
        assert!(self.n >= 1);
        RankConditions { n: self.n - 1, rows: self.rows[1..].to_vec() }
    }

    /// Restriction to the subsequence of spaces `indices` (strictly increasing).
    pub fn restrict(&self, indices: &[usize]) -> RankConditions {
        assert!(!indices.is_empty() && indices.windows(2).all(|w| w[0] < w[1]));
        RankConditions::from_fn(indices.len() - 1, |a, b| self.get(indices[a], indices[b]))
    }

    /// Mirror image of the rank diagram: `r^v_ij = r_{n-j, n-i}`.
    pub fn dual(&self) -> RankConditions {
        let n = self.n;
        RankConditions::from_fn(n, |i, j| self.get(n - j, n - i))
    }

    /// Rank-diagram text form: `n`, then the rows top to bottom.
    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(ToString::to_string).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }
}

impl FromStr for RankConditions {
    type Err = Error;

    /// Parses the rank-diagram text form. Blank lines and `#` comments are ignored.
    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("missing map count".into()))?;
        let n: usize = header
            .parse()
            .map_err(|_| Error::Parse(format!("bad map count {header:?}")))?;
        let rows: Vec<Vec<usize>> = lines
            .map(|l| {
                l.split_whitespace()
                    .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad rank {t:?}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        if rows.len() != n + 1 {
            return Err(Error::Parse(format!("expected {} rank rows, found {}", n + 1, rows.len())));
        }
        RankConditions::from_rows(rows)
    }
}

impl fmt::Display for RankConditions {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.rows.iter().enumerate() {
            let line: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "{}{}", "  ".repeat(k), line.join("   "))?;
        }
        Ok(())
    }
}

/// The rectangles `R_ij`, `0 <= i < j <= n`, arranged like the rank diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RectangleDiagram {
    n: usize,
    // rows[k-1][i] = R_{i, i+k}
    rows: Vec<Vec<Rectangle>>,
}

impl RectangleDiagram {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Rectangle {
        assert!(i < j && j <= self.n);
        self.rows[j - i - 1][i]
    }

    /// Row `k` (1-based, top row first) of the rectangle diagram.
    pub fn row(&self, k: usize) -> &[Rectangle] {
        &self.rows[k - 1]
    }

    pub fn total_boxes(&self) -> usize {
        self.rows.iter().flatten().map(Rectangle::boxes).sum()
    }

    /// `(i, j)` of every non-empty rectangle.
    pub fn nonempty(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for k in 1..=self.n {
            for i in 0..=self.n - k {
                if !self.get(i, i + k).is_empty() {
                    out.push((i, i + k));
                }
            }
        }
        out
    }

    /// Widths weakly decrease going south-west (`R_ij -> R_{i-1,j}`),
    /// heights weakly decrease going south-east (`R_ij -> R_{i,j+1}`).
    pub fn is_monotone(&self) -> bool {
        for i in 0..self.n {
            for j in i + 1..=self.n {
                let r = self.get(i, j);
                if i > 0 && self.get(i - 1, j).cols > r.cols {
                    return false;
                }
                if j < self.n && self.get(i, j + 1).rows > r.rows {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for RectangleDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.rows.iter().enumerate() {
            let cells: Vec<String> = row
                .iter()
                .map(|r| if r.is_empty() { ".".to_string() } else { format!("{}x{}", r.rows, r.cols) })
                .collect();
            writeln!(f, "{}{}", "  ".repeat(k), cells.join("   "))?;
        }
        Ok(())
    }
}

/// Row lengths of `R` (h rows, c columns) with `sigma` on its right and `tau` below.
fn attached_rows(rect: Rectangle, sigma: &Partition, tau: &Partition) -> Vec<i64> {
    let mut seq: Vec<i64> = (0..rect.rows).map(|t| (rect.cols + sigma.part(t)) as i64).collect();
    seq.extend(tau.parts().iter().map(|&p| p as i64));
    seq
}

/// `P_r` in the `n`-th tensor power of the ring of symmetric functions.
/// Results are cached on the rank-diagram text form.
pub fn compute_p(r: &RankConditions) -> Result<Arc<TensorElement>> {
    r.check()?;
    Ok(compute_p_cached(r))
}

fn compute_p_cached(r: &RankConditions) -> Arc<TensorElement> {
    static CACHE: OnceLock<RwLock<HashMap<String, Arc<TensorElement>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = r.to_text();
    if let Some(hit) = cache.read().unwrap().get(&key) {
        return hit.clone();
    }
    let value = Arc::new(compute_p_uncached(r));
    cache.write().unwrap().entry(key).or_insert(value).clone()
}

fn compute_p_uncached(r: &RankConditions) -> TensorElement {
    let n = r.n();
    if n == 0 {
        return TensorElement::one(0);
    }
    let top: Vec<Rectangle> = (1..=n).map(|i| r.rect(i - 1, i)).collect();
    if n == 1 {
        let mut t = TensorElement::zero(1);
        t.add_term_unchecked(PartitionTuple(vec![top[0].as_partition()]), BigInt::one());
        return t;
    }
    let below = compute_p_cached(&r.bottom());
    let mut out = TensorElement::zero(n);
    for (mu, coeff) in below.terms() {
        // partial outputs keyed by (tau carried into the next factor, factors so far)
        let mut states: HashMap<(Partition, Vec<Partition>), BigInt> = HashMap::new();
        states.insert((Partition::empty(), Vec::new()), coeff.clone());
        for (i, rect) in top.iter().enumerate().take(n - 1) {
            let splits = lr_splits(mu.get(i));
            let mut next: HashMap<(Partition, Vec<Partition>), BigInt> = HashMap::new();
            for ((tau_prev, outs), c) in &states {
                for (sigma, tau, m) in splits.iter() {
                    if sigma.len() > rect.rows {
                        continue;
                    }
                    let (sign, lambda) = straighten(&attached_rows(*rect, sigma, tau_prev));
                    if sign == 0 {
                        continue;
                    }
                    let mut o = outs.clone();
                    o.push(lambda);
                    let v = c * BigInt::from(*m) * BigInt::from(sign);
                    *next.entry((tau.clone(), o)).or_default() += v;
                }
            }
            states = next;
        }
        for ((tau_prev, mut outs), c) in states {
            let (sign, lambda) = straighten(&attached_rows(top[n - 1], &Partition::empty(), &tau_prev));
            if sign == 0 {
                continue;
            }
            outs.push(lambda);
            out.add_term_unchecked(PartitionTuple(outs), c * BigInt::from(sign));
        }
    }
    out
}

/// `c_mu(r)`, zero when `mu` does not occur.
pub fn coefficient(r: &RankConditions, mu: &PartitionTuple) -> Result<BigInt> {
    let p = compute_p(r)?;
    if mu.arity() != p.arity() {
        return Err(Error::ArityMismatch(mu.arity(), p.arity()));
    }
    Ok(p.coefficient(mu))
}

/// `(mu_n', ..., mu_1')`.
pub fn dual_tuple(mu: &PartitionTuple) -> PartitionTuple {
    PartitionTuple(mu.0.iter().rev().map(Partition::conjugate).collect())
}

/// An independent subsequence `E_p -> ... -> E_q` together with the two
/// restricted systems.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    pub p: usize,
    pub q: usize,
    /// Restriction to `p..=q`.
    pub inner: RankConditions,
    /// Restriction to the remaining spaces, spliced.
    pub outer: RankConditions,
}

/// Every `1 <= p <= q <= n - 1` such that `R_ij` is empty whenever exactly
/// one of `i`, `j` lies in `[p, q]`, and the two restricted systems have
/// expected codimensions adding up to `d(r)`.
pub fn independent_splits(r: &RankConditions) -> Result<Vec<Split>> {
    let diagram = r.rectangle_diagram()?;
    let codim = diagram.total_boxes();
    let n = r.n();
    let mut out = Vec::new();
    for p in 1..n {
        for q in p..n {
            let inside = |k: usize| p <= k && k <= q;
            let ok = diagram
                .nonempty()
                .into_iter()
                .all(|(i, j)| inside(i) == inside(j));
            if !ok {
                continue;
            }
            let inner_idx: Vec<usize> = (p..=q).collect();
            let outer_idx: Vec<usize> = (0..p).chain(q + 1..=n).collect();
            let split = Split { p, q, inner: r.restrict(&inner_idx), outer: r.restrict(&outer_idx) };
            // dropping the middle spaces can turn a redundant condition into
            // an essential one; then the codimensions no longer add up
            if split.inner.expected_codim()? + split.outer.expected_codim()? == codim {
                out.push(split);
            }
        }
    }
    Ok(out)
}

/// The first independent subsequence in `(p, q)` order, if any.
pub fn split_independent(r: &RankConditions) -> Result<Option<Split>> {
    Ok(independent_splits(r)?.into_iter().next())
}

/// Right-hand side of the product identity for a split:
/// `(1^p (x) P_inner (x) 1^(n-q)) * Phi^{q-p+2}_p(P_outer)`.
pub fn split_product(r: &RankConditions, split: &Split) -> Result<TensorElement> {
    let n = r.n();
    let inner = compute_p(&split.inner)?.embed(split.p, n - split.q);
    let outer = compute_p(&split.outer)?.coproduct_at(split.p, split.q - split.p + 2)?;
    inner.multiply(&outer)
}
