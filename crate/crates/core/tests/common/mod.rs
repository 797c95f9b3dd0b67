//! Brute-force oracles shared by the integration tests. None of these call
//! the library routines they are used to check.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use quiver_core::{Partition, Permutation, Polynomial};

pub fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

pub fn part(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

pub fn x(nx: usize, ny: usize, i: usize) -> Polynomial {
    Polynomial::x(nx, ny, i).unwrap()
}

pub fn y(nx: usize, ny: usize, j: usize) -> Polynomial {
    Polynomial::y(nx, ny, j).unwrap()
}

pub fn int(nx: usize, ny: usize, c: i64) -> Polynomial {
    Polynomial::constant(nx, ny, BigInt::from(c))
}

/// Semistandard fillings of `outer / inner` with entries `1..=n`, as lists
/// of entries per cell in row-major order.
pub fn skew_fillings(outer: &[usize], inner: &[usize], n: usize) -> Vec<Vec<usize>> {
    let cells: Vec<(usize, usize)> = outer
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (inner.get(r).copied().unwrap_or(0)..len).map(move |c| (r, c)))
        .collect();
    let mut grid: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut out = Vec::new();
    fn go(
        k: usize,
        cells: &[(usize, usize)],
        n: usize,
        grid: &mut BTreeMap<(usize, usize), usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if k == cells.len() {
            out.push(cells.iter().map(|c| grid[c]).collect());
            return;
        }
        let (r, c) = cells[k];
        let left = if c > 0 { grid.get(&(r, c - 1)).copied().unwrap_or(1) } else { 1 };
        let above = if r > 0 { grid.get(&(r - 1, c)).map(|v| v + 1).unwrap_or(1) } else { 1 };
        for v in left.max(above)..=n {
            grid.insert((r, c), v);
            go(k + 1, cells, n, grid, out);
            grid.remove(&(r, c));
        }
    }
    go(0, &cells, n, &mut grid, &mut out);
    out
}

fn conjugate(v: &[usize]) -> Vec<usize> {
    let len = v.first().copied().unwrap_or(0);
    (0..len).map(|i| v.iter().filter(|&&p| p > i).count()).collect()
}

/// Skew Schur polynomial in either `x_1..x_n` or `y_1..y_n` (inside a ring of
/// `nx`, `ny` variables).
pub fn skew_schur(outer: &[usize], inner: &[usize], n: usize, use_y: bool, nx: usize, ny: usize) -> Polynomial {
    let mut total = Polynomial::zero(nx, ny);
    for filling in skew_fillings(outer, inner, n) {
        let mut mono = Polynomial::one(nx, ny);
        for v in filling {
            let var = if use_y { y(nx, ny, v) } else { x(nx, ny, v) };
            mono = &mono * &var;
        }
        total = &total + &mono;
    }
    total
}

/// `s_lambda(x/y)` in `x_1..x_m`, `y_1..y_m` as
/// `sum_{mu in lambda} s_mu(x) (-1)^{|lambda/mu|} s_{lambda'/mu'}(y)`.
pub fn super_schur(lambda: &[usize], m: usize, nx: usize, ny: usize) -> Polynomial {
    let mut total = Polynomial::zero(nx, ny);
    let lc = conjugate(lambda);
    for mu in sub_shapes(lambda) {
        let sign = if (lambda.iter().sum::<usize>() - mu.iter().sum::<usize>()) % 2 == 1 { -1 } else { 1 };
        let sx = skew_schur(&mu, &[], m, false, nx, ny);
        let sy = skew_schur(&lc, &conjugate(&mu), m, true, nx, ny);
        total = &total + &(&(&sx * &sy) * &int(nx, ny, sign));
    }
    total
}

/// Partitions contained in `lambda`.
pub fn sub_shapes(lambda: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for (i, &bound) in lambda.iter().enumerate() {
        let mut next = Vec::new();
        for prefix in &out {
            if prefix.len() < i {
                next.push(prefix.clone());
                continue;
            }
            let cap = if i == 0 { bound } else { bound.min(prefix[i - 1]) };
            next.push(prefix.clone());
            for v in 1..=cap {
                let mut p = prefix.clone();
                p.push(v);
                next.push(p);
            }
        }
        out = next;
    }
    out
}

/// Standard Young tableaux of shape `lambda`, by removing corners.
pub fn syt_count(lambda: &[usize]) -> u64 {
    let total: usize = lambda.iter().sum();
    if total == 0 {
        return 1;
    }
    let mut count = 0;
    for i in 0..lambda.len() {
        let is_corner = lambda[i] > 0 && lambda.get(i + 1).copied().unwrap_or(0) < lambda[i];
        if is_corner {
            let mut smaller = lambda.to_vec();
            smaller[i] -= 1;
            while smaller.last() == Some(&0) {
                smaller.pop();
            }
            count += syt_count(&smaller);
        }
    }
    count
}

/// Words of length `l(w)` in `s_1..s_{m-1}` whose product is `w`.
pub fn brute_reduced_word_count(w: &Permutation) -> u64 {
    let m = w.size();
    let len = w.length();
    if m < 2 {
        return 1;
    }
    let mut count = 0;
    let mut word = vec![1usize; len];
    loop {
        let mut acc = Permutation::identity(m);
        for &i in &word {
            acc = acc.times_simple(i);
        }
        if acc == *w {
            count += 1;
        }
        let mut k = 0;
        while k < len {
            word[k] += 1;
            if word[k] < m {
                break;
            }
            word[k] = 1;
            k += 1;
        }
        if k == len {
            break;
        }
    }
    count
}

/// `r_p(w)` for every `p`.
pub fn r_values(w: &Permutation) -> Vec<usize> {
    let img = w.image();
    (0..img.len()).map(|p| img[..p].iter().filter(|&&v| v > img[p]).count()).collect()
}

pub fn lambda_w(w: &Permutation) -> Vec<usize> {
    let mut r: Vec<usize> = r_values(w).into_iter().filter(|&v| v > 0).collect();
    r.sort_by(|a, b| b.cmp(a));
    r
}

pub fn mu_w(w: &Permutation) -> Vec<usize> {
    conjugate(&lambda_w(&w.inverse()))
}

/// `h_k(x_1..x_n)` by listing monomials.
pub fn complete(k: i64, n: usize) -> Polynomial {
    if k < 0 {
        return Polynomial::zero(n, 0);
    }
    let mut total = Polynomial::zero(n, 0);
    for filling in skew_fillings(&[k as usize], &[], n) {
        let mut mono = Polynomial::one(n, 0);
        for v in filling {
            mono = &mono * &x(n, 0, v);
        }
        total = &total + &mono;
    }
    total
}

/// `det(h_{a_i - i + j})` expanded over all permutations of the columns.
pub fn jacobi_trudi(a: &[i64], n: usize) -> Polynomial {
    let p = a.len();
    let mut total = Polynomial::zero(n, 0);
    for sigma in Permutation::all(p) {
        let img = sigma.image();
        let sign = if sigma.length() % 2 == 1 { -1 } else { 1 };
        let mut term = int(n, 0, sign);
        for i in 0..p {
            let j = img[i] - 1;
            term = &term * &complete(a[i] - i as i64 + j as i64, n);
        }
        total = &total + &term;
    }
    total
}

/// Row insertion of `v` into rows of a semistandard tableau.
pub fn rsk_insert(rows: &mut Vec<Vec<usize>>, mut v: usize) {
    for row in rows.iter_mut() {
        match row.iter().position(|&e| e > v) {
            Some(pos) => v = std::mem::replace(&mut row[pos], v),
            None => {
                row.push(v);
                return;
            }
        }
    }
    rows.push(vec![v]);
}

/// Product of tableaux by inserting the reading word (bottom row first) of `b`.
pub fn rsk_product(a: &[Vec<usize>], b: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut rows = a.to_vec();
    for row in b.iter().rev() {
        for &v in row {
            rsk_insert(&mut rows, v);
        }
    }
    rows
}
