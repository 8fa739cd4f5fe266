//! Generation and counting of `C_n(321)`, `A_n` and the simple members of
//! `A_n`.
//!
//! `C_n(321)` is produced two independent ways: by a 321-avoidance search
//! filtered for cyclicity ([`enumerate_c321`]), and by a search over `A_{n-1}`
//! whose words are prefixed with `n` and sent through `theta_inv`
//! ([`enumerate_c321_via_a`]). [`count_c`] and [`count_a`] follow the same
//! two routes, so `c_n = a_{n-1}` compares them.

mod odot;
mod search;
pub mod sequence;
mod simple;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::pattern::{catalog, VincularPattern};
use crate::perm::{avoids_321_word, is_cyclic_word, Permutation};
use search::Pruner;

pub use odot::{odot, odot_perm};
pub use sequence::{Provenance, SeqName, SequenceTable};
pub use simple::{decompose_inflation, is_simple, lemma_constructions, Decomposition};

/// Rejects a placement that completes a 321. State: the largest value so
/// far and the largest value that has a larger one before it.
struct Avoid321;

impl Pruner for Avoid321 {
    type State = (usize, usize);

    fn initial(&self) -> (usize, usize) {
        (0, 0)
    }

    fn place(
        &self,
        &(max, dominated): &(usize, usize),
        word: &[usize],
        _: usize,
    ) -> Option<(usize, usize)> {
        let v = *word.last().expect("nonempty");
        if v < dominated {
            None
        } else if v < max {
            Some((max, v))
        } else {
            Some((v, dominated))
        }
    }

    fn accept(&self, word: &[usize]) -> bool {
        debug_assert!(avoids_321_word(word));
        is_cyclic_word(word)
    }
}

/// Rejects a placement that ends an occurrence of an `A_SET` pattern.
/// Patterns anchored at the end are checked on complete words only, with
/// one lookahead for `[23]1$`: the final entry must exceed the bottom of
/// every earlier adjacent ascent, so a prefix whose largest ascent bottom
/// beats every unused value is dead. State: that largest ascent bottom.
struct AvoidASet {
    open: Vec<&'static VincularPattern>,
    closing: Vec<&'static VincularPattern>,
}

impl AvoidASet {
    fn new() -> Self {
        let (closing, open) = catalog::a_patterns().iter().partition(|p| p.anchor_last());
        AvoidASet { open, closing }
    }
}

impl Pruner for AvoidASet {
    type State = usize;

    fn initial(&self) -> usize {
        0
    }

    fn place(&self, &bottom: &usize, word: &[usize], n: usize) -> Option<usize> {
        let end = word.len() - 1;
        if self.open.iter().any(|p| p.occurs_ending_at(word, end)) {
            return None;
        }
        let bottom = match word {
            [.., x, y] if x < y => bottom.max(*x),
            _ => bottom,
        };
        if word.len() < n && bottom > 0 {
            let largest_unused = (1..=n)
                .rev()
                .find(|v| !word.contains(v))
                .expect("word is partial");
            if largest_unused < bottom {
                return None;
            }
        }
        Some(bottom)
    }

    fn accept(&self, word: &[usize]) -> bool {
        let end = word.len() - 1;
        !self.closing.iter().any(|p| p.occurs_ending_at(word, end))
    }
}

fn need_positive(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("size must be at least 1".into()));
    }
    Ok(())
}

fn to_perms(words: Vec<Vec<usize>>) -> Vec<Permutation> {
    words
        .into_iter()
        .map(Permutation::from_vec_unchecked)
        .collect()
}

/// `C_n(321)` in lexicographic order, from the 321-avoidance search.
pub fn enumerate_c321(n: usize) -> Result<Vec<Permutation>> {
    need_positive(n)?;
    Ok(to_perms(search::collect_where(&Avoid321, n, 1, |_| true)?))
}

/// `C_n(321)` in lexicographic order, as `theta_inv(n tau)` over `tau` in
/// `A_{n-1}`.
pub fn enumerate_c321_via_a(n: usize) -> Result<Vec<Permutation>> {
    need_positive(n)?;
    if n == 1 {
        return Ok(vec![Permutation::identity(1)]);
    }
    let mut out: Vec<Permutation> = search::collect_where(&AvoidASet::new(), n - 1, 1, |_| true)?
        .into_iter()
        .map(|tau| {
            let mut w = Vec::with_capacity(n);
            w.push(n);
            w.extend(tau);
            Permutation::from_vec_unchecked(w).theta_inv()
        })
        .collect();
    out.sort();
    Ok(out)
}

/// `c_n = |C_n(321)|` by sharded 321-avoidance search.
pub fn count_c(n: usize, threads: usize) -> Result<BigUint> {
    need_positive(n)?;
    Ok(search::count_where(&Avoid321, n, threads, |_| true)?.into())
}

/// `A_n` in lexicographic order.
pub fn enumerate_a(n: usize) -> Result<Vec<Permutation>> {
    need_positive(n)?;
    Ok(to_perms(search::collect_where(
        &AvoidASet::new(),
        n,
        1,
        |_| true,
    )?))
}

/// `a_n = |A_n|` by sharded pattern-pruned search.
pub fn count_a(n: usize, threads: usize) -> Result<BigUint> {
    need_positive(n)?;
    Ok(search::count_where(&AvoidASet::new(), n, threads, |_| true)?.into())
}

fn simple_word(w: &[usize]) -> bool {
    is_simple(&Permutation::from_vec_unchecked(w.to_vec()))
}

/// The simple members of `A_n`, `n >= 2`, in lexicographic order.
pub fn simples_in_a(n: usize, threads: usize) -> Result<Vec<Permutation>> {
    if n < 2 {
        return Err(Error::Domain("simple counts start at n = 2".into()));
    }
    Ok(to_perms(search::collect_where(
        &AvoidASet::new(),
        n,
        threads,
        simple_word,
    )?))
}

/// `s_n`, the number of simple members of `A_n`, `n >= 2`.
pub fn count_simples_in_a(n: usize, threads: usize) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::Domain("simple counts start at n = 2".into()));
    }
    Ok(search::count_where(&AvoidASet::new(), n, threads, simple_word)?.into())
}

/// `(a_n, s_n)` from one pass over `A_n`; `s_1` is reported as 0.
pub fn count_a_and_simples(n: usize, threads: usize) -> Result<(BigUint, BigUint)> {
    need_positive(n)?;
    let parts = search::shard_fold(
        &AvoidASet::new(),
        n,
        threads,
        || (0u64, 0u64),
        |acc, w| {
            acc.0 += 1;
            if n >= 2 && simple_word(w) {
                acc.1 += 1;
            }
        },
    )?;
    let (a, s) = parts
        .into_iter()
        .fold((0, 0), |(a, s), (x, y)| (a + x, s + y));
    Ok((a.into(), s.into()))
}

/// Counts `a` and `s` through `n_max` and `c` through `n_max + 1` by
/// enumeration, each tagged `enumerated`.
pub fn enumerated_tables(n_max: usize, threads: usize) -> Result<[SequenceTable; 3]> {
    let mut c = SequenceTable::new(SeqName::C);
    let mut a = SequenceTable::new(SeqName::A);
    let mut s = SequenceTable::new(SeqName::S);
    for n in 1..=n_max {
        let (an, sn) = count_a_and_simples(n, threads)?;
        a.insert(n, an, Provenance::Enumerated)?;
        if n >= 2 {
            s.insert(n, sn, Provenance::Enumerated)?;
        }
    }
    for n in 1..=n_max + 1 {
        c.insert(n, count_c(n, threads)?, Provenance::Enumerated)?;
    }
    Ok([c, a, s])
}
