//! The ring of symmetric functions in the Schur basis and its tensor powers.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lr::{lr_product, lr_splits};
use crate::partition::Partition;

/// Rewrites `s_I` for an arbitrary integer sequence `I` as `sign * s_lambda`.
///
/// Uses `J_i = a_i + p - i`: a repeated value (or a negative one) makes the
/// Jacobi-Trudi determinant vanish; otherwise sorting `J` decreasingly
/// permutes its rows and the sign is the parity of that sort.
pub fn straighten(seq: &[i64]) -> (i8, Partition) {
    let p = seq.len() as i64;
    let mut shifted: Vec<i64> = seq.iter().enumerate().map(|(i, a)| a + p - 1 - i as i64).collect();
    if shifted.iter().any(|&j| j < 0) {
        return (0, Partition::empty());
    }
    // insertion sort, counting transpositions
    let mut sign = 1i8;
    for i in 1..shifted.len() {
        let mut k = i;
        while k > 0 && shifted[k - 1] < shifted[k] {
            shifted.swap(k - 1, k);
            sign = -sign;
            k -= 1;
        }
    }
    if shifted.windows(2).any(|w| w[0] == w[1]) {
        return (0, Partition::empty());
    }
    let parts = shifted
        .iter()
        .enumerate()
        .map(|(i, j)| (j - (p - 1 - i as i64)) as usize)
        .collect();
    (sign, Partition::from_sorted(parts))
}

fn add_into<K: Ord>(map: &mut BTreeMap<K, BigInt>, key: K, c: BigInt) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// An element of the ring of symmetric functions, as an integer
/// combination of Schur functions. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SchurElement {
    terms: BTreeMap<Partition, BigInt>,
}

impl SchurElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::schur(Partition::empty())
    }

    pub fn schur(lambda: Partition) -> Self {
        Self::term(lambda, BigInt::one())
    }

    pub fn term(lambda: Partition, coeff: BigInt) -> Self {
        let mut e = Self::zero();
        e.add_term(lambda, coeff);
        e
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: BigInt) {
        add_into(&mut self.terms, lambda, coeff);
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    /// Number of non-zero terms; emptiness is `is_zero`.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    /// The common weight of all terms, if there is one.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Partition::weight);
        let first = it.next()?;
        it.all(|w| w == first).then_some(first)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn add(&self, other: &SchurElement) -> SchurElement {
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, k: &BigInt) -> SchurElement {
        let mut out = Self::zero();
        for (l, c) in &self.terms {
            out.add_term(l.clone(), c * k);
        }
        out
    }

    /// Product, extending `s_sigma * s_tau = sum c^mu_{sigma,tau} s_mu` bilinearly.
    pub fn multiply(&self, other: &SchurElement) -> SchurElement {
        let mut out = Self::zero();
        for (s, a) in &self.terms {
            for (t, b) in &other.terms {
                let ab = a * b;
                for (mu, c) in lr_product(s, t).iter() {
                    out.add_term(mu.clone(), &ab * BigInt::from(*c));
                }
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> SchurElement {
        (0..k).fold(Self::one(), |acc, _| acc.multiply(self))
    }
}

fn write_coeff_term(f: &mut fmt::Formatter<'_>, first: bool, c: &BigInt, body: &str) -> fmt::Result {
    let neg = c.is_negative();
    let abs = c.abs();
    match (first, neg) {
        (true, false) => {}
        (true, true) => write!(f, "-")?,
        (false, false) => write!(f, " + ")?,
        (false, true) => write!(f, " - ")?,
    }
    if abs.is_one() {
        write!(f, "{body}")
    } else if body == "1" {
        write!(f, "{abs}")
    } else {
        write!(f, "{abs}*{body}")
    }
}

fn schur_symbol(l: &Partition) -> String {
    if l.is_empty() {
        "1".to_string()
    } else {
        format!("s{l}")
    }
}

impl fmt::Display for SchurElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (l, c)) in self.terms.iter().enumerate() {
            write_coeff_term(f, i == 0, c, &schur_symbol(l))?;
        }
        Ok(())
    }
}

/// Serializes a coefficient as a JSON number when it fits in 64 bits.
pub fn serialize_coeff<S: serde::Serializer>(c: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    coeff_json(c).serialize(s)
}

pub(crate) fn coeff_json(c: &BigInt) -> serde_json::Value {
    match i64::try_from(c) {
        Ok(v) => serde_json::Value::from(v),
        Err(_) => serde_json::Value::from(c.to_string()),
    }
}

impl Serialize for SchurElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.terms.len()))?;
        for (l, c) in self.terms.iter() {
            map.serialize_entry(&l.to_string(), &coeff_json(c))?;
        }
        map.end()
    }
}

/// A fixed-arity sequence of partitions, the index of a basis element
/// `s_{mu_1} (x) ... (x) s_{mu_n}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct PartitionTuple(pub Vec<Partition>);

impl PartitionTuple {
    pub fn empties(arity: usize) -> Self {
        PartitionTuple(vec![Partition::empty(); arity])
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn total_weight(&self) -> usize {
        self.0.iter().map(Partition::weight).sum()
    }

    pub fn get(&self, i: usize) -> &Partition {
        &self.0[i]
    }
}

impl From<Vec<Partition>> for PartitionTuple {
    fn from(v: Vec<Partition>) -> Self {
        PartitionTuple(v)
    }
}

impl fmt::Display for PartitionTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(schur_symbol).collect();
        write!(f, "{}", parts.join(" ⊗ "))
    }
}

/// An element of the `arity`-th tensor power of the ring of symmetric functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement {
    arity: usize,
    terms: BTreeMap<PartitionTuple, BigInt>,
}

impl TensorElement {
    pub fn zero(arity: usize) -> Self {
        TensorElement { arity, terms: BTreeMap::new() }
    }

    /// `1 (x) ... (x) 1`.
    pub fn one(arity: usize) -> Self {
        let mut t = Self::zero(arity);
        t.terms.insert(PartitionTuple::empties(arity), BigInt::one());
        t
    }

    pub fn from_schur(e: &SchurElement) -> Self {
        let mut t = Self::zero(1);
        for (l, c) in e.terms() {
            t.terms.insert(PartitionTuple(vec![l.clone()]), c.clone());
        }
        t
    }

    pub fn from_terms(arity: usize, terms: impl IntoIterator<Item = (PartitionTuple, BigInt)>) -> Result<Self> {
        let mut t = Self::zero(arity);
        for (k, c) in terms {
            t.add_term(k, c)?;
        }
        Ok(t)
    }

    pub fn add_term(&mut self, key: PartitionTuple, coeff: BigInt) -> Result<()> {
        if key.arity() != self.arity {
            return Err(Error::ArityMismatch(key.arity(), self.arity));
        }
        add_into(&mut self.terms, key, coeff);
        Ok(())
    }

    pub(crate) fn add_term_unchecked(&mut self, key: PartitionTuple, coeff: BigInt) {
        debug_assert_eq!(key.arity(), self.arity);
        add_into(&mut self.terms, key, coeff);
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Number of non-zero terms; emptiness is `is_zero`.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PartitionTuple, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, key: &PartitionTuple) -> BigInt {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    /// Pads every key with `left` empty partitions before and `right` after.
    pub fn embed(&self, left: usize, right: usize) -> TensorElement {
        let mut out = Self::zero(left + self.arity + right);
        for (k, c) in &self.terms {
            let mut key = vec![Partition::empty(); left];
            key.extend(k.0.iter().cloned());
            key.extend(std::iter::repeat_n(Partition::empty(), right));
            out.terms.insert(PartitionTuple(key), c.clone());
        }
        out
    }

    /// Factor-wise product.
    pub fn multiply(&self, other: &TensorElement) -> Result<TensorElement> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch(self.arity, other.arity));
        }
        let mut out = Self::zero(self.arity);
        for (ka, a) in &self.terms {
            for (kb, b) in &other.terms {
                let slots: Vec<Arc<Vec<(Partition, u64)>>> =
                    ka.0.iter().zip(&kb.0).map(|(s, t)| lr_product(s, t)).collect();
                let mut partial: Vec<(Vec<Partition>, BigInt)> = vec![(Vec::new(), a * b)];
                for slot in &slots {
                    let mut next = Vec::with_capacity(partial.len() * slot.len());
                    for (prefix, c) in &partial {
                        for (mu, m) in slot.iter() {
                            let mut p = prefix.clone();
                            p.push(mu.clone());
                            next.push((p, c * BigInt::from(*m)));
                        }
                    }
                    partial = next;
                }
                for (k, c) in partial {
                    add_into(&mut out.terms, PartitionTuple(k), c);
                }
            }
        }
        Ok(out)
    }

    /// Replaces slot `p` (1-based) by its `k`-fold coproduct.
    pub fn coproduct_at(&self, p: usize, k: usize) -> Result<TensorElement> {
        if p == 0 || p > self.arity {
            return Err(Error::SlotOutOfRange { slot: p, arity: self.arity });
        }
        if k == 0 {
            return Err(Error::Precondition("coproduct order must be positive".into()));
        }
        let mut out = Self::zero(self.arity + k - 1);
        for (key, c) in &self.terms {
            for (split, m) in coproduct_k(key.get(p - 1), k).iter() {
                let mut nk: Vec<Partition> = key.0[..p - 1].to_vec();
                nk.extend(split.0.iter().cloned());
                nk.extend(key.0[p..].iter().cloned());
                add_into(&mut out.terms, PartitionTuple(nk), c * m);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            write_coeff_term(f, i == 0, c, &k.to_string())?;
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct TensorTermJson<'a> {
    shapes: &'a PartitionTuple,
    coeff: serde_json::Value,
}

impl Serialize for TensorElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TensorTermJson> = self
            .terms
            .iter()
            .map(|(k, c)| TensorTermJson { shapes: k, coeff: coeff_json(c) })
            .collect();
        terms.serialize(s)
    }
}

type CoproductTable = Arc<BTreeMap<PartitionTuple, BigInt>>;

/// The `k`-fold coproduct of `s_lambda`: every `(sigma_1, ..., sigma_k)` with
/// non-zero iterated coefficient `c^lambda_{sigma_1, ..., sigma_k}`.
pub fn coproduct_k(lambda: &Partition, k: usize) -> CoproductTable {
    static CACHE: OnceLock<RwLock<HashMap<(Partition, usize), CoproductTable>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (lambda.clone(), k);
    if let Some(hit) = cache.read().unwrap().get(&key) {
        return hit.clone();
    }
    let mut out = BTreeMap::new();
    match k {
        0 => {}
        1 => {
            out.insert(PartitionTuple(vec![lambda.clone()]), BigInt::one());
        }
        _ => {
            for (first, rest, c) in lr_splits(lambda).iter() {
                for (tail, m) in coproduct_k(rest, k - 1).iter() {
                    let mut nk = vec![first.clone()];
                    nk.extend(tail.0.iter().cloned());
                    add_into(&mut out, PartitionTuple(nk), m * BigInt::from(*c));
                }
            }
        }
    }
    let out = Arc::new(out);
    cache.write().unwrap().entry(key).or_insert(out).clone()
}
