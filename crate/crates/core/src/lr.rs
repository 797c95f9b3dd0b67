//! Littlewood-Richardson coefficients by counting LR skew tableaux.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::partition::Partition;

/// `c^outer_{inner, content}`: the number of semistandard fillings of
/// `outer / inner` with content `content` whose reverse reading word
/// (rows top to bottom, each right to left) is a lattice word.
pub fn lr_coefficient(outer: &Partition, inner: &Partition, content: &Partition) -> u64 {
    if inner.weight() + content.weight() != outer.weight() || !outer.contains(inner) || !outer.contains(content) {
        return 0;
    }
    let rows = outer.len();
    // filled[r][c] for cells of the skew shape, 0 = not yet / not in shape
    let mut filled: Vec<Vec<usize>> = (0..rows).map(|r| vec![0; outer.part(r)]).collect();
    let cells: Vec<(usize, usize)> = (0..rows)
        .flat_map(|r| (inner.part(r)..outer.part(r)).rev().map(move |c| (r, c)))
        .collect();
    let mut counts = vec![0usize; content.len() + 1];
    count_fillings(outer, inner, content, &cells, 0, &mut filled, &mut counts)
}

fn count_fillings(
    outer: &Partition,
    inner: &Partition,
    content: &Partition,
    cells: &[(usize, usize)],
    k: usize,
    filled: &mut [Vec<usize>],
    counts: &mut [usize],
) -> u64 {
    if k == cells.len() {
        return 1;
    }
    let (r, c) = cells[k];
    // weakly increasing along the row: bounded by the cell to the right
    let hi = if c + 1 < outer.part(r) { filled[r][c + 1] } else { content.len() };
    // strictly increasing down the column
    let lo = if r > 0 && c >= inner.part(r - 1) { filled[r - 1][c] + 1 } else { 1 };
    let mut total = 0;
    for v in lo..=hi.min(content.len()) {
        if counts[v] == content.part(v - 1) {
            continue;
        }
        if v > 1 && counts[v] + 1 > counts[v - 1] {
            continue;
        }
        counts[v] += 1;
        filled[r][c] = v;
        total += count_fillings(outer, inner, content, cells, k + 1, filled, counts);
        filled[r][c] = 0;
        counts[v] -= 1;
    }
    total
}

type SplitTable = Arc<Vec<(Partition, Partition, u64)>>;

/// All `(sigma, tau, c)` with `c = c^lambda_{sigma, tau} > 0`.
pub fn lr_splits(lambda: &Partition) -> SplitTable {
    static CACHE: OnceLock<RwLock<HashMap<Partition, SplitTable>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.read().unwrap().get(lambda) {
        return hit.clone();
    }
    let mut out = Vec::new();
    for sigma in lambda.subpartitions() {
        for tau in Partition::all(lambda.weight() - sigma.weight()) {
            let c = lr_coefficient(lambda, &sigma, &tau);
            if c > 0 {
                out.push((sigma.clone(), tau, c));
            }
        }
    }
    out.sort();
    let out = Arc::new(out);
    cache.write().unwrap().entry(lambda.clone()).or_insert(out).clone()
}

/// `s_sigma * s_tau` as a list of `(mu, c^mu_{sigma,tau})`.
pub fn lr_product(sigma: &Partition, tau: &Partition) -> Arc<Vec<(Partition, u64)>> {
    type Cache = RwLock<HashMap<(Partition, Partition), Arc<Vec<(Partition, u64)>>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (sigma.clone(), tau.clone());
    if let Some(hit) = cache.read().unwrap().get(&key) {
        return hit.clone();
    }
    let n = sigma.weight() + tau.weight();
    let max_len = sigma.len() + tau.len();
    let max_width = sigma.part(0) + tau.part(0);
    let mut out = Vec::new();
    for mu in Partition::all(n) {
        if mu.len() > max_len || mu.part(0) > max_width {
            continue;
        }
        let c = lr_coefficient(&mu, sigma, tau);
        if c > 0 {
            out.push((mu, c));
        }
    }
    let out = Arc::new(out);
    cache.write().unwrap().entry(key).or_insert(out).clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::p;

    #[test]
    fn pieri_and_identity() {
        assert_eq!(lr_coefficient(&p![2, 1], &p![1], &p![1, 1]), 1);
        assert_eq!(lr_coefficient(&p![2], &p![1], &p![1]), 1);
        assert_eq!(lr_coefficient(&p![1, 1], &p![1], &p![1]), 1);
        for n in 0..6 {
            for l in Partition::all(n) {
                assert_eq!(lr_coefficient(&l, &l, &p![]), 1);
                assert_eq!(lr_coefficient(&l, &p![], &l), 1);
            }
        }
        assert_eq!(lr_coefficient(&p![2, 1], &p![1], &p![1]), 0);
    }

    #[test]
    fn classic_value() {
        // c^{(3,2,1)}_{(2,1),(2,1)} = 2
        assert_eq!(lr_coefficient(&p![3, 2, 1], &p![2, 1], &p![2, 1]), 2);
    }

    #[test]
    fn product_of_boxes() {
        let prod = lr_product(&p![1], &p![1]);
        assert_eq!(*prod, vec![(p![2], 1), (p![1, 1], 1)]);
    }
}
