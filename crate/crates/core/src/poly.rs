//! Exact multivariate polynomials in `x_1..x_N, y_1..y_M`.
//!
//! Hosts the divided-difference construction of double Schubert
//! polynomials and finite-variable evaluations of Schur functions,
//! which serve as independent checks on the quiver formula.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::Permutation;
use crate::schur::SchurElement;
use crate::tableau::semistandard_tableaux;

type Exponents = Vec<u32>;

/// A polynomial over a fixed ordered variable list: `x_1..x_nx` then `y_1..y_ny`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nx: usize,
    ny: usize,
    terms: BTreeMap<Exponents, BigInt>,
}

impl Polynomial {
    pub fn zero(nx: usize, ny: usize) -> Self {
        Polynomial { nx, ny, terms: BTreeMap::new() }
    }

    pub fn constant(nx: usize, ny: usize, c: BigInt) -> Self {
        let mut p = Self::zero(nx, ny);
        p.add_monomial(vec![0; nx + ny], c);
        p
    }

    pub fn one(nx: usize, ny: usize) -> Self {
        Self::constant(nx, ny, BigInt::one())
    }

    /// The variable `x_i` (1-based).
    pub fn x(nx: usize, ny: usize, i: usize) -> Result<Self> {
        if i == 0 || i > nx {
            return Err(Error::VariableOutOfRange { index: i, limit: nx });
        }
        let mut e = vec![0; nx + ny];
        e[i - 1] = 1;
        let mut p = Self::zero(nx, ny);
        p.add_monomial(e, BigInt::one());
        Ok(p)
    }

    /// The variable `y_j` (1-based).
    pub fn y(nx: usize, ny: usize, j: usize) -> Result<Self> {
        if j == 0 || j > ny {
            return Err(Error::VariableOutOfRange { index: j, limit: ny });
        }
        let mut e = vec![0; nx + ny];
        e[nx + j - 1] = 1;
        let mut p = Self::zero(nx, ny);
        p.add_monomial(e, BigInt::one());
        Ok(p)
    }

    /// Builds from `(x exponents, y exponents, coefficient)` triples.
    pub fn from_terms(nx: usize, ny: usize, terms: &[(&[u32], &[u32], i64)]) -> Result<Self> {
        let mut p = Self::zero(nx, ny);
        for (ex, ey, c) in terms {
            if ex.len() > nx || ey.len() > ny {
                return Err(Error::Precondition("exponent vector longer than variable list".into()));
            }
            let mut e = vec![0; nx + ny];
            e[..ex.len()].copy_from_slice(ex);
            e[nx..nx + ey.len()].copy_from_slice(ey);
            p.add_monomial(e, BigInt::from(*c));
        }
        Ok(p)
    }

    fn add_monomial(&mut self, e: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn ny(&self) -> usize {
        self.ny
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of monomials.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    /// Exact coefficient of a monomial. The exponent vector lists the
    /// x-exponents then the y-exponents; missing trailing entries are zero.
    pub fn monomial_coefficient(&self, exponents: &[u32]) -> BigInt {
        if exponents.len() > self.nx + self.ny && exponents[self.nx + self.ny..].iter().any(|&e| e > 0) {
            return BigInt::zero();
        }
        let mut e = vec![0; self.nx + self.ny];
        let k = exponents.len().min(e.len());
        e[..k].copy_from_slice(&exponents[..k]);
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut out = Self::zero(self.nx, self.ny);
        for (e, c) in &self.terms {
            out.add_monomial(e.clone(), c * k);
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.nx, self.ny), |acc, _| &acc * self)
    }

    /// Re-expresses in a different variable list. Variables that are dropped
    /// are set to zero; new variables are appended.
    pub fn with_vars(&self, nx: usize, ny: usize) -> Self {
        let mut out = Self::zero(nx, ny);
        'terms: for (e, c) in &self.terms {
            let mut ne = vec![0; nx + ny];
            for (i, &a) in e[..self.nx].iter().enumerate() {
                if a == 0 {
                    continue;
                }
                if i >= nx {
                    continue 'terms;
                }
                ne[i] = a;
            }
            for (j, &a) in e[self.nx..].iter().enumerate() {
                if a == 0 {
                    continue;
                }
                if j >= ny {
                    continue 'terms;
                }
                ne[nx + j] = a;
            }
            out.add_monomial(ne, c.clone());
        }
        out
    }

    /// Total degree of every term, if all agree.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|e| e.iter().map(|&a| a as usize).sum::<usize>());
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Swaps `x_i` and `x_j` (1-based).
    pub fn swap_x(&self, i: usize, j: usize) -> Self {
        let mut out = Self::zero(self.nx, self.ny);
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            ne.swap(i - 1, j - 1);
            out.add_monomial(ne, c.clone());
        }
        out
    }

    /// Divided difference `(f - s_i f) / (x_i - x_{i+1})`.
    pub fn divided_difference(&self, i: usize) -> Result<Self> {
        if i == 0 || i >= self.nx {
            return Err(Error::VariableOutOfRange { index: i, limit: self.nx });
        }
        let numerator = self - &self.swap_x(i, i + 1);
        numerator.div_by_difference(i)
    }

    /// Exact division by `x_i - x_{i+1}`, synthetic division in `x_i`.
    fn div_by_difference(&self, i: usize) -> Result<Self> {
        let (a_idx, b_idx) = (i - 1, i);
        // group by the power of x_i; each group is stored without x_i
        let mut groups: BTreeMap<u32, BTreeMap<Exponents, BigInt>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            let a = rest[a_idx];
            rest[a_idx] = 0;
            groups.entry(a).or_default().insert(rest, c.clone());
        }
        let top = match groups.keys().next_back() {
            Some(&t) => t,
            None => return Ok(Self::zero(self.nx, self.ny)),
        };
        let mut out = Self::zero(self.nx, self.ny);
        // q_{a-1} = g_a + x_{i+1} q_a, from the top power down
        let mut carry: BTreeMap<Exponents, BigInt> = BTreeMap::new();
        for a in (0..=top).rev() {
            let mut cur = groups.remove(&a).unwrap_or_default();
            for (mut e, c) in std::mem::take(&mut carry) {
                e[b_idx] += 1;
                let slot = cur.entry(e).or_insert_with(BigInt::zero);
                *slot += c;
            }
            cur.retain(|_, c| !c.is_zero());
            if a == 0 {
                if !cur.is_empty() {
                    return Err(Error::NonExactDivision(i, i + 1));
                }
                break;
            }
            for (e, c) in &cur {
                let mut full = e.clone();
                full[a_idx] = a - 1;
                out.add_monomial(full, c.clone());
            }
            carry = cur;
        }
        Ok(out)
    }

    /// Applies `d_{word[0]}` first, then `d_{word[1]}`, and so on.
    pub fn apply_divided_differences(&self, word: &[usize]) -> Result<Self> {
        let mut f = self.clone();
        for &i in word {
            f = f.divided_difference(i)?;
        }
        Ok(f)
    }

    /// Checks invariance under every adjacent transposition of the x-variables.
    pub fn check_symmetric_in_x(&self) -> Result<()> {
        for i in 1..self.nx {
            if &self.swap_x(i, i + 1) != self {
                return Err(Error::NotSymmetric(i, i + 1));
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!((self.nx, self.ny), (rhs.nx, rhs.ny), "variable lists differ");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_monomial(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!((self.nx, self.ny), (rhs.nx, rhs.ny), "variable lists differ");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_monomial(e.clone(), -c);
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&BigInt::from(-1))
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!((self.nx, self.ny), (rhs.nx, rhs.ny), "variable lists differ");
        let mut out = Polynomial::zero(self.nx, self.ny);
        for (ea, a) in &self.terms {
            for (eb, b) in &rhs.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(p, q)| p + q).collect();
                out.add_monomial(e, a * b);
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest monomials first
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let mut vars = Vec::new();
            for (idx, &a) in e.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let name = if idx < self.nx { format!("x{}", idx + 1) } else { format!("y{}", idx - self.nx + 1) };
                vars.push(if a == 1 { name } else { format!("{name}^{a}") });
            }
            let body = vars.join("*");
            let abs = c.abs();
            match (k == 0, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            if body.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{body}")?;
            } else {
                write!(f, "{abs}*{body}")?;
            }
        }
        Ok(())
    }
}

/// Elementary symmetric polynomial `e_k` in the variables at `offset..offset+count`.
fn elementary(nx: usize, ny: usize, offset: usize, count: usize, k: usize) -> Polynomial {
    let mut out = Polynomial::zero(nx, ny);
    fn go(start: usize, end: usize, left: usize, e: &mut Exponents, out: &mut Polynomial) {
        if left == 0 {
            out.add_monomial(e.clone(), BigInt::one());
            return;
        }
        for v in start..end {
            if end - v < left {
                break;
            }
            e[v] = 1;
            go(v + 1, end, left - 1, e, out);
            e[v] = 0;
        }
    }
    go(offset, offset + count, k, &mut vec![0; nx + ny], &mut out);
    out
}

/// Complete homogeneous polynomial `h_k` in the variables at `offset..offset+count`.
fn complete(nx: usize, ny: usize, offset: usize, count: usize, k: usize) -> Polynomial {
    let mut out = Polynomial::zero(nx, ny);
    fn go(v: usize, end: usize, left: u32, e: &mut Exponents, out: &mut Polynomial) {
        if left == 0 {
            out.add_monomial(e.clone(), BigInt::one());
            return;
        }
        if v == end {
            return;
        }
        for a in (0..=left).rev() {
            e[v] = a;
            go(v + 1, end, left - a, e, out);
        }
        e[v] = 0;
    }
    go(offset, offset + count, k as u32, &mut vec![0; nx + ny], &mut out);
    out
}

/// `h_k(x/y) = sum_b (-1)^b e_b(y) h_{k-b}(x)`; zero for negative `k`.
fn super_complete(nx: usize, ny: usize, k: i64) -> Polynomial {
    if k < 0 {
        return Polynomial::zero(nx, ny);
    }
    let k = k as usize;
    let mut out = Polynomial::zero(nx, ny);
    for b in 0..=k.min(ny) {
        let term = &elementary(nx, ny, nx, ny, b) * &complete(nx, ny, 0, nx, k - b);
        out = if b % 2 == 0 { &out + &term } else { &out - &term };
    }
    out
}

/// Determinant by Laplace expansion along the first row, memoized on the
/// set of columns still available.
fn determinant(m: &[Vec<Polynomial>], nx: usize, ny: usize) -> Polynomial {
    let n = m.len();
    let mut memo: Vec<Option<Polynomial>> = vec![None; 1 << n];
    fn go(m: &[Vec<Polynomial>], row: usize, cols: usize, memo: &mut [Option<Polynomial>], nx: usize, ny: usize) -> Polynomial {
        let n = m.len();
        if row == n {
            return Polynomial::one(nx, ny);
        }
        if let Some(p) = &memo[cols] {
            return p.clone();
        }
        let mut acc = Polynomial::zero(nx, ny);
        let mut sign_pos = true;
        for c in 0..n {
            if cols & (1 << c) == 0 {
                continue;
            }
            if !m[row][c].is_zero() {
                let minor = go(m, row + 1, cols & !(1 << c), memo, nx, ny);
                let term = &m[row][c] * &minor;
                acc = if sign_pos { &acc + &term } else { &acc - &term };
            }
            sign_pos = !sign_pos;
        }
        memo[cols] = Some(acc.clone());
        acc
    }
    go(m, 0, (1 << n) - 1, &mut memo, nx, ny)
}

/// `det(h_{a_i + j - i}(x/y))` for an arbitrary integer sequence.
pub fn super_schur_sequence_eval(seq: &[i64], nx: usize, ny: usize) -> Polynomial {
    let p = seq.len();
    let mut cache: BTreeMap<i64, Polynomial> = BTreeMap::new();
    let matrix: Vec<Vec<Polynomial>> = (0..p)
        .map(|i| {
            (0..p)
                .map(|j| {
                    let k = seq[i] + j as i64 - i as i64;
                    cache.entry(k).or_insert_with(|| super_complete(nx, ny, k)).clone()
                })
                .collect()
        })
        .collect();
    determinant(&matrix, nx, ny)
}

/// Super-symmetric Schur polynomial `s_lambda(x/y)` in `x_1..x_nx`, `y_1..y_ny`.
pub fn super_schur_eval(lambda: &Partition, nx: usize, ny: usize) -> Polynomial {
    let seq: Vec<i64> = lambda.parts().iter().map(|&p| p as i64).collect();
    super_schur_sequence_eval(&seq, nx, ny)
}

/// `s_lambda(x_1..x_n)` as a sum over semistandard tableaux.
pub fn schur_eval(lambda: &Partition, n: usize) -> Polynomial {
    let mut out = Polynomial::zero(n, 0);
    for t in semistandard_tableaux(lambda, n) {
        let mut e = vec![0u32; n];
        for &v in t.rows().iter().flatten() {
            e[v - 1] += 1;
        }
        out.add_monomial(e, BigInt::one());
    }
    out
}

/// Evaluates a Schur-basis element in `x_1..x_n`.
pub fn schur_element_eval(f: &SchurElement, n: usize) -> Polynomial {
    let mut out = Polynomial::zero(n, 0);
    for (l, c) in f.terms() {
        out = &out + &schur_eval(l, n).scale(c);
    }
    out
}

/// Writes a symmetric polynomial homogeneous of degree `degree <= n` in the
/// Schur basis by repeatedly peeling off the lexicographically leading
/// monomial, then re-evaluates the result as a check.
pub fn expand_symmetric_in_schur(f: &Polynomial, n: usize, degree: usize) -> Result<SchurElement> {
    if degree > n {
        return Err(Error::Precondition(format!("degree {degree} exceeds variable count {n}")));
    }
    if f.ny() > 0 && f.terms().any(|(e, _)| e[f.nx()..].iter().any(|&a| a > 0)) {
        return Err(Error::Precondition("input involves y-variables".into()));
    }
    let f = f.with_vars(n, 0);
    if !f.is_zero() && f.homogeneous_degree() != Some(degree) {
        return Err(Error::NotHomogeneous(degree));
    }
    f.check_symmetric_in_x()?;
    let mut rest = f.clone();
    let mut out = SchurElement::zero();
    while let Some((lead, c)) = rest.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
        if lead.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::ExpansionMismatch);
        }
        let lambda = Partition::from_sorted(lead.iter().map(|&a| a as usize).collect());
        rest = &rest - &schur_eval(&lambda, n).scale(&c);
        out.add_term(lambda, c);
    }
    if schur_element_eval(&out, n) != f {
        return Err(Error::ExpansionMismatch);
    }
    Ok(out)
}

/// `prod_{i + j <= n} (x_i - y_j)`, or `prod_i x_i^{n-i}` without y-variables.
pub fn longest_schubert(n: usize, use_y: bool) -> Polynomial {
    let ny = if use_y { n } else { 0 };
    let mut out = Polynomial::one(n, ny);
    for i in 1..n {
        for j in 1..=n - i {
            let xi = Polynomial::x(n, ny, i).expect("in range");
            let factor = if use_y { &xi - &Polynomial::y(n, ny, j).expect("in range") } else { xi };
            out = &out * &factor;
        }
    }
    out
}

/// Double (or single) Schubert polynomial of `w` in `x_1..x_n` (and `y_1..y_n`),
/// by divided differences from the longest element of `S_n`.
pub fn schubert_oracle(w: &Permutation, n: usize, use_y: bool) -> Result<Polynomial> {
    if w.size() > n {
        return Err(Error::Precondition(format!("{w} is not in S_{n}")));
    }
    let w = w.extend_to(n);
    let u = w.inverse().compose(&Permutation::longest(n));
    // d_u with u = s_{b_1} ... s_{b_k} applies d_{b_k} first
    let mut word = u.reduced_word();
    word.reverse();
    schubert_oracle_with_word(&w, n, use_y, &word)
}

/// Like [`schubert_oracle`], applying the divided differences in the given
/// order; `order` must reverse a reduced word of `w^{-1} w_0`.
pub fn schubert_oracle_with_word(w: &Permutation, n: usize, use_y: bool, order: &[usize]) -> Result<Polynomial> {
    let w = w.extend_to(n);
    let mut check = Permutation::longest(n);
    for &i in order {
        if i == 0 || i >= n || check.apply(i) < check.apply(i + 1) {
            return Err(Error::Precondition("divided-difference order is not reduced".into()));
        }
        check = check.times_simple(i);
    }
    if check != w {
        return Err(Error::Precondition(format!("divided-difference order does not reach {w}")));
    }
    longest_schubert(n, use_y).apply_divided_differences(order)
}
