//! Permutations in one-line notation, their standard cycle form, and the
//! fundamental bijection.
//!
//! Values are 1-based everywhere in the public surface: a permutation of size
//! `n` is a word containing each of `1..=n` exactly once.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};

/// A permutation of `1..=n`, `n >= 1`, stored in one-line notation.
///
/// The derived ordering is lexicographic on the one-line word, which is the
/// order every enumerator in this crate emits.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    entries: Vec<usize>,
}

/// Disjoint cycles in standard form: each cycle starts with its largest
/// element and cycles are listed by increasing largest element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleForm {
    cycles: Vec<Vec<usize>>,
}

impl Permutation {
    /// Validates `entries` as a permutation of `1..=entries.len()`.
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidPermutation("empty word".into()));
        }
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &v in &entries {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} outside 1..={n}"
                )));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPermutation(format!("value {v} repeated")));
            }
        }
        Ok(Permutation { entries })
    }

    /// Caller guarantees `entries` is a permutation of `1..=len`.
    pub(crate) fn from_vec_unchecked(entries: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(entries.clone()).is_ok());
        Permutation { entries }
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "permutations have size at least 1");
        Permutation {
            entries: (1..=n).collect(),
        }
    }

    /// Every permutation of size `n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (1..=n)
            .permutations(n)
            .map(|entries| Permutation { entries })
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    /// The one-line word.
    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// `self(i)` for a 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.entries[i - 1]
    }

    pub fn into_entries(self) -> Vec<usize> {
        self.entries
    }

    pub fn cycle_decomposition(&self) -> CycleForm {
        let n = self.size();
        let mut seen = vec![false; n + 1];
        let mut cycles = Vec::new();
        // Scanning from n downwards meets every cycle first at its maximum.
        for start in (1..=n).rev() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                cycle.push(v);
                v = self.at(v);
            }
            cycles.push(cycle);
        }
        cycles.reverse();
        CycleForm { cycles }
    }

    pub fn cycle_count(&self) -> usize {
        let n = self.size();
        let mut seen = vec![false; n + 1];
        let mut count = 0;
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                v = self.at(v);
            }
        }
        count
    }

    /// The fundamental bijection: erase the parentheses of the standard
    /// cycle form and read the result as a one-line word.
    pub fn theta(&self) -> Permutation {
        Permutation {
            entries: self.cycle_decomposition().cycles.concat(),
        }
    }

    /// Inverse of [`Permutation::theta`]: cut the word before every
    /// left-to-right maximum and read each piece as a cycle.
    pub fn theta_inv(&self) -> Permutation {
        let n = self.size();
        let mut out = vec![0; n];
        let mut start = 0;
        let mut max = 0;
        for (i, &v) in self.entries.iter().enumerate() {
            if v > max {
                if i > 0 {
                    close_cycle(&self.entries[start..i], &mut out);
                }
                start = i;
                max = v;
            }
        }
        close_cycle(&self.entries[start..], &mut out);
        Permutation { entries: out }
    }

    /// True when the cycle form is a single cycle; the size-1 permutation
    /// counts as cyclic.
    pub fn is_cyclic(&self) -> bool {
        is_cyclic_word(&self.entries)
    }

    /// `dp = sum over i with p(i) > i of p(i) - i`.
    pub fn depth(&self) -> u64 {
        self.entries
            .iter()
            .enumerate()
            .map(|(i, &v)| v.saturating_sub(i + 1) as u64)
            .sum()
    }

    pub fn inversions(&self) -> u64 {
        let mut count = 0;
        for (i, &a) in self.entries.iter().enumerate() {
            count += self.entries[i + 1..].iter().filter(|&&b| b < a).count() as u64;
        }
        count
    }

    /// `n - cyc(p)`.
    pub fn reflection_length(&self) -> u64 {
        (self.size() - self.cycle_count()) as u64
    }

    pub fn reverse(&self) -> Permutation {
        let mut entries = self.entries.clone();
        entries.reverse();
        Permutation { entries }
    }

    pub fn inverse(&self) -> Permutation {
        let mut entries = vec![0; self.size()];
        for (i, &v) in self.entries.iter().enumerate() {
            entries[v - 1] = i + 1;
        }
        Permutation { entries }
    }

    /// `self ⊕ other`: `other` shifted above `self`, placed after it.
    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let n = self.size();
        let entries = self
            .entries
            .iter()
            .copied()
            .chain(other.entries.iter().map(|&v| v + n))
            .collect();
        Permutation { entries }
    }

    /// `self ⊖ other`: `self` shifted above `other`, placed before it.
    pub fn skew_sum(&self, other: &Permutation) -> Permutation {
        let m = other.size();
        let entries = self
            .entries
            .iter()
            .map(|&v| v + m)
            .chain(other.entries.iter().copied())
            .collect();
        Permutation { entries }
    }

    /// Inflation at value `a`: the entry `a` is replaced by a copy of `s`
    /// shifted to start at `a`, and larger entries move up by `|s| - 1`.
    pub fn inflate_at(&self, a: usize, s: &Permutation) -> Result<Permutation> {
        let n = self.size();
        if a == 0 || a > n {
            return Err(Error::Domain(format!(
                "inflation point {a} outside 1..={n}"
            )));
        }
        let k = s.size();
        let mut entries = Vec::with_capacity(n + k - 1);
        for &v in &self.entries {
            match v.cmp(&a) {
                std::cmp::Ordering::Less => entries.push(v),
                std::cmp::Ordering::Equal => entries.extend(s.entries.iter().map(|&x| x + a - 1)),
                std::cmp::Ordering::Greater => entries.push(v + k - 1),
            }
        }
        Ok(Permutation { entries })
    }

    /// `self[s]`, the inflation at the value 1.
    pub fn inflate_at_one(&self, s: &Permutation) -> Permutation {
        self.inflate_at(1, s)
            .expect("1 is always a valid inflation point")
    }

    /// The permutation order-isomorphic to a word of distinct naturals.
    pub fn reduce(word: &[usize]) -> Result<Permutation> {
        if word.is_empty() {
            return Err(Error::Domain("cannot reduce an empty word".into()));
        }
        let mut order: Vec<usize> = (0..word.len()).collect();
        order.sort_by_key(|&i| word[i]);
        if let Some(w) = order.windows(2).find(|w| word[w[0]] == word[w[1]]) {
            return Err(Error::Domain(format!(
                "word has repeated entry {}",
                word[w[0]]
            )));
        }
        let mut entries = vec![0; word.len()];
        for (rank, &i) in order.iter().enumerate() {
            entries[i] = rank + 1;
        }
        Ok(Permutation { entries })
    }

    pub fn avoids_321(&self) -> bool {
        avoids_321_word(&self.entries)
    }

    /// Positions (1-based) of the lexicographically first 321 occurrence.
    pub fn find_321(&self) -> Option<[usize; 3]> {
        let w = &self.entries;
        let n = w.len();
        for i in 0..n {
            for j in i + 1..n {
                if w[j] >= w[i] {
                    continue;
                }
                if let Some(k) = (j + 1..n).find(|&k| w[k] < w[j]) {
                    return Some([i + 1, j + 1, k + 1]);
                }
            }
        }
        None
    }

    /// Comma-separated one-line form, valid for every size.
    pub fn to_comma_string(&self) -> String {
        self.entries.iter().join(",")
    }
}

fn close_cycle(cycle: &[usize], out: &mut [usize]) {
    for (i, &v) in cycle.iter().enumerate() {
        out[v - 1] = cycle[(i + 1) % cycle.len()];
    }
}

/// Single-cycle test on a word known to be a permutation.
pub(crate) fn is_cyclic_word(w: &[usize]) -> bool {
    let n = w.len();
    let mut v = 1;
    for step in 1..=n {
        v = w[v - 1];
        if v == 1 {
            return step == n;
        }
    }
    false
}

/// A word avoids 321 iff the entries that are not left-to-right maxima
/// form an increasing sequence.
pub(crate) fn avoids_321_word(w: &[usize]) -> bool {
    let mut max = 0;
    let mut dominated = 0;
    for &v in w {
        if v > max {
            max = v;
        } else if v < dominated {
            return false;
        } else {
            dominated = v;
        }
    }
    true
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.size() <= 9 {
            for v in &self.entries {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            f.write_str(&self.to_comma_string())
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts a digit string (`2341`) or a comma list (`6,14,1,...`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse {
                position: 0,
                message: "empty permutation text".into(),
            });
        }
        let entries = if s.contains(',') {
            let mut entries = Vec::new();
            let mut offset = 0;
            for piece in s.split(',') {
                let t = piece.trim();
                let v = t.parse::<usize>().map_err(|_| Error::Parse {
                    position: offset,
                    message: format!("expected a number, found {t:?}"),
                })?;
                entries.push(v);
                offset += piece.len() + 1;
            }
            entries
        } else {
            s.char_indices()
                .map(|(i, c)| {
                    c.to_digit(10).map(|d| d as usize).ok_or(Error::Parse {
                        position: i,
                        message: format!("unexpected character {c:?}"),
                    })
                })
                .collect::<Result<Vec<_>>>()?
        };
        Permutation::new(entries)
    }
}

impl CycleForm {
    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// Applies the cycles as functions to rebuild the one-line word.
    pub fn to_permutation(&self) -> Permutation {
        let n = self.cycles.iter().map(Vec::len).sum();
        let mut out = vec![0; n];
        for c in &self.cycles {
            close_cycle(c, &mut out);
        }
        Permutation { entries: out }
    }

    /// Iterates the pairs `(x, p(x))` cycle by cycle.
    pub fn mappings(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.cycles
            .iter()
            .flat_map(|c| (0..c.len()).map(move |i| (c[i], c[(i + 1) % c.len()])))
    }
}

impl fmt::Display for CycleForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cycles {
            write!(f, "({})", c.iter().join(","))?;
        }
        Ok(())
    }
}
