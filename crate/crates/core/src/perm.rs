//! Permutations in one-line notation.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `1..=m` stored as `(w(1), ..., w(m))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let m = image.len();
        let mut seen = vec![false; m + 1];
        for &v in &image {
            if v == 0 || v > m || seen[v] {
                return Err(Error::InvalidPermutation(format!(
                    "{image:?} is not a permutation of 1..{m}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { image })
    }

    pub fn identity(m: usize) -> Self {
        Permutation { image: (1..=m).collect() }
    }

    /// The longest element `m ... 2 1`.
    pub fn longest(m: usize) -> Self {
        Permutation { image: (1..=m).rev().collect() }
    }

    /// `2 1 4 3 ... (2p) (2p-1)`.
    pub fn adjacent_swaps(p: usize) -> Self {
        Permutation { image: (0..p).flat_map(|k| [2 * k + 2, 2 * k + 1]).collect() }
    }

    /// All permutations of `1..=m` in lexicographic order.
    pub fn all(m: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=m).collect();
        loop {
            out.push(Permutation { image: cur.clone() });
            // next lexicographic permutation
            let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// Number of points `m` acted on.
    pub fn size(&self) -> usize {
        self.image.len()
    }

    /// `w(i)` for 1-based `i`; fixed points beyond the stored size.
    pub fn apply(&self, i: usize) -> usize {
        if i >= 1 && i <= self.image.len() {
            self.image[i - 1]
        } else {
            i
        }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.image;
        (0..w.len())
            .map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count())
            .sum()
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.image.len()];
        for (i, &v) in self.image.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { image: inv }
    }

    /// Same permutation viewed in `S_m` for `m >= size()`.
    pub fn extend_to(&self, m: usize) -> Self {
        let mut image = self.image.clone();
        image.extend(self.image.len() + 1..=m);
        Permutation { image }
    }

    /// Drops trailing fixed points, keeping at least `min` points.
    pub fn trimmed(&self, min: usize) -> Self {
        let mut image = self.image.clone();
        while image.len() > min && image.last() == Some(&image.len()) {
            image.pop();
        }
        Permutation { image }
    }

    /// `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Self {
        let m = self.size().max(other.size());
        Permutation { image: (1..=m).map(|i| self.apply(other.apply(i))).collect() }
    }

    /// `1^n x w`: identity on `1..=n`, then `i -> w(i - n) + n`.
    pub fn shift(&self, n: usize) -> Self {
        let mut image: Vec<usize> = (1..=n).collect();
        image.extend(self.image.iter().map(|v| v + n));
        Permutation { image }
    }

    /// `w x u`: `w` on the first block, `m + u(i)` on the second.
    pub fn cross(&self, other: &Permutation) -> Self {
        let m = self.size();
        let mut image = self.image.clone();
        image.extend(other.image.iter().map(|v| v + m));
        Permutation { image }
    }

    /// Right multiplication by the simple reflection `s_i` (swaps positions `i`, `i+1`).
    pub fn times_simple(&self, i: usize) -> Self {
        let mut p = self.extend_to(self.size().max(i + 1));
        p.image.swap(i - 1, i);
        p
    }

    /// Positions `i` with `w(i) > w(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.image.len()).filter(|&i| self.image[i - 1] > self.image[i]).collect()
    }

    /// One reduced word `(a_1, ..., a_l)` with `w = s_{a_1} ... s_{a_l}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut rev = Vec::new();
        while let Some(&i) = w.descents().first() {
            rev.push(i);
            w = w.times_simple(i);
        }
        rev.reverse();
        rev
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Digits (`2431`) or comma-separated values (`2,4,3,1`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::InvalidPermutation("empty input".into()));
        }
        let image: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::InvalidPermutation(format!("bad entry {t:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::InvalidPermutation(format!("bad digit {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(image)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.image
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.image.len() > 9 { "," } else { "" };
        let s: Vec<String> = self.image.iter().map(ToString::to_string).collect();
        write!(f, "{}", s.join(sep))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn parsing() {
        assert_eq!(w("2431").image(), &[2, 4, 3, 1]);
        assert_eq!(w("2,4,3,1"), w("2431"));
        assert!("2435".parse::<Permutation>().is_err());
        assert!("22".parse::<Permutation>().is_err());
        assert!("".parse::<Permutation>().is_err());
        assert!("2a".parse::<Permutation>().is_err());
        let big = Permutation::identity(10);
        assert_eq!(big.to_string().parse::<Permutation>().unwrap(), big);
    }

    #[test]
    fn constructions() {
        assert_eq!(w("312").shift(1), w("1423"));
        assert_eq!(w("21").cross(&w("21")), w("2143"));
        assert_eq!(w("2431").length(), 4);
        assert_eq!(Permutation::longest(4), w("4321"));
        assert_eq!(Permutation::adjacent_swaps(2), w("2143"));
        assert_eq!(w("2431").inverse(), w("4132"));
        assert_eq!(Permutation::all(4).len(), 24);
        assert_eq!(w("1243").trimmed(1), w("1243"));
        assert_eq!(w("2134").trimmed(2), w("21"));
    }

    #[test]
    fn reduced_word_multiplies_back() {
        for p in Permutation::all(4) {
            let word = p.reduced_word();
            assert_eq!(word.len(), p.length());
            let mut acc = Permutation::identity(4);
            for &i in &word {
                acc = acc.times_simple(i);
            }
            assert_eq!(acc, p);
        }
    }
}
