//! Stanley symmetric functions read off the quiver coefficients, plus the
//! reduced-word and stable-limit oracles they are checked against.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::Permutation;
use crate::poly::{expand_symmetric_in_schur, schubert_oracle};
use crate::schubert::quiver_coefficients;
use crate::schur::SchurElement;

/// `F_w = sum_lambda c_w(0, 0, lambda') s_lambda`.
pub fn stanley_function(w: &Permutation) -> Result<SchurElement> {
    let mut f = SchurElement::zero();
    for (idx, c) in quiver_coefficients(w)? {
        if idx.is_zero_exponent() {
            f.add_term(idx.lambda.conjugate(), c);
        }
    }
    Ok(f)
}

/// Every reduced word `(a_1, ..., a_l)` with `w = s_{a_1} ... s_{a_l}`,
/// in lexicographic order.
pub fn reduced_words(w: &Permutation) -> Vec<Vec<usize>> {
    fn go(w: &Permutation, suffix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let descents = w.descents();
        if descents.is_empty() {
            out.push(suffix.iter().rev().copied().collect());
            return;
        }
        // w = (w s_i) s_i for each right descent i
        for i in descents {
            suffix.push(i);
            go(&w.times_simple(i), suffix, out);
            suffix.pop();
        }
    }
    let mut out = Vec::new();
    go(w, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Number of reduced words, by recursion over right descents.
pub fn reduced_word_count(w: &Permutation) -> BigUint {
    fn go(w: &Permutation, memo: &mut HashMap<Permutation, BigUint>) -> BigUint {
        let descents = w.descents();
        if descents.is_empty() {
            return BigUint::one();
        }
        if let Some(c) = memo.get(w) {
            return c.clone();
        }
        let total = descents
            .into_iter()
            .fold(BigUint::zero(), |acc, i| acc + go(&w.times_simple(i), memo));
        memo.insert(w.clone(), total.clone());
        total
    }
    go(w, &mut HashMap::new())
}

/// `sum_lambda alpha_{w,lambda} f^lambda`.
pub fn reduced_word_count_via_stanley(w: &Permutation) -> Result<BigInt> {
    let f = stanley_function(w)?;
    Ok(f.terms()
        .map(|(l, c)| c * BigInt::from(l.standard_tableau_count()))
        .sum())
}

/// Compares `F_w` with the stable Schubert polynomial `S_{1^n x w^{-1}}`
/// in `x_1..x_N` for `n = N - 1`, Schur-expanded.
pub fn stable_limit_check(w: &Permutation, n_vars: usize) -> Result<bool> {
    let len = w.length();
    if n_vars < len {
        return Err(Error::Precondition(format!(
            "need at least {len} variables for a permutation of length {len}"
        )));
    }
    let shift = n_vars.saturating_sub(1);
    let v = w.inverse().trimmed(1).shift(shift).trimmed(1);
    let schubert = schubert_oracle(&v, v.size(), false)?.with_vars(n_vars, 0);
    let lhs = expand_symmetric_in_schur(&schubert, n_vars, len)?;
    let rhs = stanley_function(w)?;
    let rhs_truncated = rhs
        .terms()
        .filter(|(l, _)| l.len() <= n_vars)
        .fold(SchurElement::zero(), |mut acc, (l, c)| {
            acc.add_term(l.clone(), c.clone());
            acc
        });
    Ok(lhs == rhs_truncated)
}

/// `r_p(w) = #{ q < p : w(q) > w(p) }` for `p = 1..=size`.
pub fn inversion_counts(w: &Permutation) -> Vec<usize> {
    let img = w.image();
    (0..img.len())
        .map(|p| (0..p).filter(|&q| img[q] > img[p]).count())
        .collect()
}

/// The values `r_p(w)` sorted into a partition.
pub fn lambda_of(w: &Permutation) -> Partition {
    let mut r = inversion_counts(w);
    r.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(r).expect("sorted")
}

/// Conjugate of `lambda_of(w^{-1})`.
pub fn mu_of(w: &Permutation) -> Partition {
    lambda_of(&w.inverse()).conjugate()
}

/// Outcome of the extremal-term check for one permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalReport {
    pub lambda: Partition,
    pub mu: Partition,
    pub lambda_coeff: BigInt,
    pub mu_coeff: BigInt,
    /// Support partitions not between `lambda` and `mu` in dominance order.
    pub outside: Vec<Partition>,
}

impl ExtremalReport {
    pub fn holds(&self) -> bool {
        self.lambda_coeff.is_one() && self.mu_coeff.is_one() && self.outside.is_empty()
    }
}

/// Checks that `s_{lambda(w)}` and `s_{mu(w)}` occur in `F_w` with coefficient
/// one and that the support lies in the dominance interval
/// `lambda(w) <= lambda <= mu(w)`.
pub fn extremal_report(w: &Permutation) -> Result<ExtremalReport> {
    let f = stanley_function(w)?;
    let lambda = lambda_of(w);
    let mu = mu_of(w);
    let mut outside = Vec::new();
    for (l, _) in f.terms() {
        if !(lambda.dominance_leq(l)? && l.dominance_leq(&mu)?) {
            outside.push(l.clone());
        }
    }
    Ok(ExtremalReport { lambda_coeff: f.coefficient(&lambda), mu_coeff: f.coefficient(&mu), lambda, mu, outside })
}

pub fn extremal_check(w: &Permutation) -> Result<bool> {
    Ok(extremal_report(w)?.holds())
}

/// `sum_{lambda |- p} f^lambda s_lambda`.
pub fn standard_tableau_sum(p: usize) -> SchurElement {
    let mut e = SchurElement::zero();
    for l in Partition::all(p) {
        let f = BigInt::from(l.standard_tableau_count());
        e.add_term(l, f);
    }
    e
}

/// For `w = 2 1 4 3 ... (2p) (2p-1)`: `F_w = sum f^lambda s_lambda = (s_1)^p`.
pub fn family_2143_check(p: usize) -> Result<bool> {
    if p == 0 {
        return Err(Error::Precondition("p must be positive".into()));
    }
    let f = stanley_function(&Permutation::adjacent_swaps(p))?;
    let box_power = SchurElement::schur(Partition::row(1)).pow(p);
    Ok(f == standard_tableau_sum(p) && f == box_power)
}

/// `F_{w x u} = F_w * F_u`.
pub fn stanley_product_check(w: &Permutation, u: &Permutation) -> Result<bool> {
    let lhs = stanley_function(&w.cross(u))?;
    Ok(lhs == stanley_function(w)?.multiply(&stanley_function(u)?))
}
