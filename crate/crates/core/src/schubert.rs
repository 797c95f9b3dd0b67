//! Double Schubert polynomials as a special case of the quiver formula.
//!
//! A permutation `w` in `S_{m+1}` gives rank conditions on the sequence
//! `F_1 ⊂ ... ⊂ F_m -> G_m ->> ... ->> G_1` (`2m - 1` maps). Slots
//! `1..m-1` of `P_r` evaluate to powers of `y_2..y_m`, slot `m` to a
//! super-symmetric Schur polynomial and slots `m+1..2m-1` to powers of
//! `-x_m..-x_2`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::Result;
use crate::partition::Partition;
use crate::perm::Permutation;
use crate::poly::{super_schur_eval, Polynomial};
use crate::quiver::{compute_p, RankConditions};
use crate::schur::PartitionTuple;

/// `w` as an element of `S_{m+1}` with `m >= 1`, and that `m`.
pub fn normalize(w: &Permutation) -> (Permutation, usize) {
    let w = w.extend_to(w.size().max(2));
    let m = w.size() - 1;
    (w, m)
}

/// `r_w(p, q) = #{ i <= p : w(i) <= q }`.
pub fn rank_function(w: &Permutation, p: usize, q: usize) -> usize {
    (1..=p).filter(|&i| w.apply(i) <= q).count()
}

/// Rank conditions of the flag-to-dual-flag sequence for `w`.
pub fn rank_conditions_of(w: &Permutation) -> RankConditions {
    let (w, m) = normalize(w);
    RankConditions::from_fn(2 * m - 1, |i, j| {
        if j < m {
            i + 1
        } else if i >= m {
            2 * m - j
        } else {
            rank_function(&w, 2 * m - j, i + 1)
        }
    })
}

/// Closed-form emptiness test for `R_ij`: non-empty iff
/// `w(2m+1-j) <= i+1` and `w^{-1}(i+2) <= 2m-j`.
pub fn nonempty_rectangle_test(w: &Permutation, i: usize, j: usize) -> bool {
    let (w, m) = normalize(w);
    if j >= 2 * m || i > j {
        return false;
    }
    let inv = w.inverse();
    w.apply(2 * m + 1 - j) <= i + 1 && inv.apply(i + 2) <= 2 * m - j
}

/// Index `(a, b, lambda)` of a Schubert coefficient; `a` holds `a_2..a_m`,
/// `b` holds `b_2..b_m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SchubertIndex {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub lambda: Partition,
}

impl SchubertIndex {
    pub fn is_zero_exponent(&self) -> bool {
        self.a.iter().chain(&self.b).all(|&e| e == 0)
    }
}

impl fmt::Display for SchubertIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[usize]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        write!(f, "a=({}) b=({}) λ={}", list(&self.a), list(&self.b), self.lambda)
    }
}

/// Reads the coefficient index off a key of `P_r`. `None` when a y-slot is
/// not a single row or an x-slot is not a single column: those terms vanish.
fn index_of(key: &PartitionTuple, m: usize) -> Option<SchubertIndex> {
    let mut a = Vec::with_capacity(m - 1);
    for slot in 0..m - 1 {
        let mu = key.get(slot);
        if !mu.is_row() {
            return None;
        }
        a.push(mu.weight());
    }
    let mut b = vec![0; m - 1];
    for k in 1..m {
        let mu = key.get(m - 1 + k);
        if !mu.is_column() {
            return None;
        }
        // slot m + k carries b_{m-k+1}
        b[m - k - 1] = mu.weight();
    }
    Some(SchubertIndex { a, b, lambda: key.get(m - 1).clone() })
}

/// All non-zero `c_w(a, b, lambda)`.
pub fn quiver_coefficients(w: &Permutation) -> Result<BTreeMap<SchubertIndex, BigInt>> {
    Ok(split_coefficients(w)?.0)
}

/// Keys of `P_r` that do not contribute to the Schubert formula.
pub fn dropped_keys(w: &Permutation) -> Result<Vec<(PartitionTuple, BigInt)>> {
    Ok(split_coefficients(w)?.1)
}

type Coefficients = BTreeMap<SchubertIndex, BigInt>;

fn split_coefficients(w: &Permutation) -> Result<(Coefficients, Vec<(PartitionTuple, BigInt)>)> {
    let (w, m) = normalize(w);
    let p = compute_p(&rank_conditions_of(&w))?;
    let mut kept = BTreeMap::new();
    let mut dropped = Vec::new();
    for (key, c) in p.terms() {
        match index_of(key, m) {
            Some(idx) => {
                kept.insert(idx, c.clone());
            }
            None => dropped.push((key.clone(), c.clone())),
        }
    }
    Ok((kept, dropped))
}

/// The expansion as text, e.g. `y2*y3*s[2](x/y) - x3*y2*y3*s[1](x/y)`.
pub fn format_expansion(coeffs: &BTreeMap<SchubertIndex, BigInt>) -> String {
    let mut out = String::new();
    for (idx, c) in coeffs {
        let flips = idx.b.iter().sum::<usize>() % 2 == 1;
        let negative = (c.sign() == num_bigint::Sign::Minus) != flips;
        let magnitude = c.magnitude().clone();
        let mut factors = Vec::new();
        if magnitude != 1u32.into() {
            factors.push(magnitude.to_string());
        }
        let power = |v: char, k: usize, e: usize| if e == 1 { format!("{v}{k}") } else { format!("{v}{k}^{e}") };
        for (k, &e) in idx.b.iter().enumerate().filter(|(_, &e)| e > 0) {
            factors.push(power('x', k + 2, e));
        }
        for (k, &e) in idx.a.iter().enumerate().filter(|(_, &e)| e > 0) {
            factors.push(power('y', k + 2, e));
        }
        if !idx.lambda.is_empty() {
            factors.push(format!("s{}(x/y)", idx.lambda));
        }
        let body = if factors.is_empty() { "1".to_string() } else { factors.join("*") };
        match (out.is_empty(), negative) {
            (true, false) => {}
            (true, true) => out.push('-'),
            (false, false) => out.push_str(" + "),
            (false, true) => out.push_str(" - "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `sum c_w(a,b,lambda) y_2^{a_2}..y_m^{a_m} (-x_2)^{b_2}..(-x_m)^{b_m} s_lambda(x/y)`
/// with `s_lambda(x/y)` in `x_1..x_m`, `y_1..y_m`, returned in `nx` x- and
/// `ny` y-variables (`nx, ny >= m`).
pub fn assemble_schubert(w: &Permutation, nx: usize, ny: usize) -> Result<Polynomial> {
    let (w, m) = normalize(w);
    if nx < m || ny < m {
        return Err(crate::Error::Precondition(format!("need at least {m} x- and y-variables")));
    }
    let coeffs = quiver_coefficients(&w)?;
    let mut out = Polynomial::zero(nx, ny);
    let mut schur_cache: BTreeMap<Partition, Polynomial> = BTreeMap::new();
    for (idx, c) in &coeffs {
        let mut term = Polynomial::constant(nx, ny, c.clone());
        for (k, &e) in idx.a.iter().enumerate() {
            if e > 0 {
                term = &term * &Polynomial::y(nx, ny, k + 2)?.pow(e as u32);
            }
        }
        for (k, &e) in idx.b.iter().enumerate() {
            if e > 0 {
                term = &term * &(-&Polynomial::x(nx, ny, k + 2)?).pow(e as u32);
            }
        }
        let s = schur_cache
            .entry(idx.lambda.clone())
            .or_insert_with(|| super_schur_eval(&idx.lambda, m, m).with_vars(nx, ny));
        out = &out + &(&term * s);
    }
    Ok(out)
}

/// Checks `S_{w x u} = S_w * S_{1^m x u}` with every polynomial assembled
/// from quiver coefficients.
pub fn product_formula_check(w: &Permutation, u: &Permutation) -> Result<bool> {
    let m = w.size();
    let prod = w.cross(u);
    let vars = normalize(&prod).1;
    let lhs = assemble_schubert(&prod, vars, vars)?;
    let a = assemble_schubert(w, vars, vars)?;
    let b = assemble_schubert(&u.shift(m), vars, vars)?;
    Ok(lhs == &a * &b)
}
