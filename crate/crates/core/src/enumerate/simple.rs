//! Simple permutations, inflation at the value 1, and the constructions that
//! lift a simple member of `A_{n-2}` to four simple members of `A_n`.

use crate::characterize::in_a;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// True iff no window of length `2..n` (exclusive) holds an interval of
/// values. Sizes 1 and 2 count as simple.
pub fn is_simple(p: &Permutation) -> bool {
    let w = p.entries();
    let n = w.len();
    for i in 0..n {
        let (mut lo, mut hi) = (w[i], w[i]);
        for (len, &v) in (2..).zip(&w[i + 1..]) {
            lo = lo.min(v);
            hi = hi.max(v);
            if len < n && hi - lo + 1 == len {
                return false;
            }
        }
    }
    true
}

/// Result of [`decompose_inflation`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decomposition {
    Simple,
    /// `p == skeleton.inflate_at_one(&content)`.
    Inflation {
        skeleton: Permutation,
        content: Permutation,
    },
}

/// Writes a non-simple member of `A_n` as a simple skeleton inflated at its
/// value 1.
///
/// The content is the largest proper window of `p` whose values are
/// `1..=j`; collapsing it to a single point gives the skeleton.
pub fn decompose_inflation(p: &Permutation) -> Result<Decomposition> {
    if !in_a(p) {
        return Err(Error::Domain(format!("{p} is not in A_{}", p.size())));
    }
    if is_simple(p) {
        return Ok(Decomposition::Simple);
    }
    let w = p.entries();
    let n = w.len();
    let at_one = w
        .iter()
        .position(|&v| v == 1)
        .expect("permutation contains 1");
    let mut best: Option<(usize, usize)> = None;
    for i in 0..=at_one {
        let mut hi = 0;
        for (j, &v) in w.iter().enumerate().skip(i) {
            hi = hi.max(v);
            let len = j - i + 1;
            if j >= at_one && len < n && hi == len && best.is_none_or(|(a, b)| b - a + 1 < len) {
                best = Some((i, j));
            }
        }
    }
    let (i, j) =
        best.ok_or_else(|| Error::Invariant(format!("{p} has no proper interval containing 1")))?;
    let width = j - i + 1;
    let content = Permutation::reduce(&w[i..=j])?;
    let mut skel: Vec<usize> = w[..i].iter().map(|&v| v - width + 1).collect();
    skel.push(1);
    skel.extend(w[j + 1..].iter().map(|&v| v - width + 1));
    let skeleton = Permutation::new(skel)?;
    if !is_simple(&skeleton) || !in_a(&skeleton) || !in_a(&content) {
        return Err(Error::Invariant(format!(
            "{p} splits as {skeleton}[{content}], which is not a simple inflation inside A"
        )));
    }
    Ok(Decomposition::Inflation { skeleton, content })
}

/// The four simple members of `A_{m+2}` built from a simple `p` in `A_m`,
/// `m >= 3`, in the order: `n` inserted right after `m` with `m + 1`
/// appended; its reverse; the variant that mirrors both blocks around `n`;
/// its reverse.
pub fn lemma_constructions(p: &Permutation) -> Result<[Permutation; 4]> {
    let m = p.size();
    if m < 3 {
        return Err(Error::Domain(format!("{p} has size {m}, need at least 3")));
    }
    if !is_simple(p) || !in_a(p) {
        return Err(Error::Domain(format!(
            "{p} must be a simple member of A_{m}"
        )));
    }
    let n = m + 2;
    let w = p.entries();
    let k = w
        .iter()
        .position(|&v| v == m)
        .expect("permutation contains its size");

    let mut first: Vec<usize> = w[..=k].to_vec();
    first.push(n);
    first.extend_from_slice(&w[k + 1..]);
    first.push(n - 1);

    let mut mirrored = vec![m];
    mirrored.extend(w[..k].iter().rev());
    mirrored.push(n);
    mirrored.extend(w[k + 1..].iter().rev());
    mirrored.push(n - 1);

    let first = Permutation::new(first)?;
    let mirrored = Permutation::new(mirrored)?;
    let (first_rev, mirrored_rev) = (first.reverse(), mirrored.reverse());
    Ok([first, first_rev, mirrored, mirrored_rev])
}
