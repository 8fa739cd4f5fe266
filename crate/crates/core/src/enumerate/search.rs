//! Pruned backtracking over one-line words, sequential or sharded by prefix.
//!
//! Values are tried in increasing order, so leaves are visited in
//! lexicographic order. The sharded driver cuts the search forest at a fixed
//! prefix length; shard results come back in prefix order, which keeps every
//! merge deterministic regardless of thread count.

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Incremental acceptance test for a growing word.
pub(crate) trait Pruner: Sync {
    type State: Clone + Send + Sync;

    fn initial(&self) -> Self::State;

    /// `word` already ends with the newly placed value. `None` cuts the
    /// subtree.
    fn place(&self, state: &Self::State, word: &[usize], n: usize) -> Option<Self::State>;

    /// Final test on a complete word of length `n`.
    fn accept(&self, word: &[usize]) -> bool;
}

struct Walk<'a, P: Pruner, F> {
    pruner: &'a P,
    n: usize,
    stop_at: usize,
    used: Vec<bool>,
    word: Vec<usize>,
    visit: F,
}

impl<'a, P: Pruner, F: FnMut(&[usize], &P::State)> Walk<'a, P, F> {
    fn new(pruner: &'a P, n: usize, stop_at: usize, prefix: &[usize], visit: F) -> Self {
        let mut used = vec![false; n + 1];
        for &v in prefix {
            used[v] = true;
        }
        Walk {
            pruner,
            n,
            stop_at,
            used,
            word: prefix.to_vec(),
            visit,
        }
    }

    fn run(&mut self, state: &P::State) {
        if self.word.len() == self.stop_at {
            if self.stop_at < self.n || self.pruner.accept(&self.word) {
                (self.visit)(&self.word, state);
            }
            return;
        }
        for v in 1..=self.n {
            if self.used[v] {
                continue;
            }
            self.used[v] = true;
            self.word.push(v);
            if let Some(next) = self.pruner.place(state, &self.word, self.n) {
                self.run(&next);
            }
            self.word.pop();
            self.used[v] = false;
        }
    }
}

/// Visits every accepted word of length `n` in lexicographic order.
pub(crate) fn for_each<P: Pruner>(pruner: &P, n: usize, mut visit: impl FnMut(&[usize])) {
    Walk::new(pruner, n, n, &[], |w: &[usize], _: &P::State| visit(w)).run(&pruner.initial());
}

const SHARD_DEPTH: usize = 3;

/// Runs `fold` over every accepted word, one accumulator per shard, and
/// returns the accumulators in prefix order.
pub(crate) fn shard_fold<P, T, I, G>(
    pruner: &P,
    n: usize,
    threads: usize,
    init: I,
    fold: G,
) -> Result<Vec<T>>
where
    P: Pruner,
    T: Send,
    I: Fn() -> T + Sync,
    G: Fn(&mut T, &[usize]) + Sync,
{
    if threads <= 1 {
        let mut acc = init();
        for_each(pruner, n, |w| fold(&mut acc, w));
        return Ok(vec![acc]);
    }
    let depth = SHARD_DEPTH.min(n);
    let mut prefixes = Vec::new();
    Walk::new(pruner, n, depth, &[], |w: &[usize], s: &P::State| {
        prefixes.push((w.to_vec(), s.clone()))
    })
    .run(&pruner.initial());
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Domain(format!("thread pool: {e}")))?;
    Ok(pool.install(|| {
        prefixes
            .par_iter()
            .map(|(prefix, state)| {
                let mut acc = init();
                Walk::new(pruner, n, n, prefix, |w: &[usize], _: &P::State| {
                    fold(&mut acc, w)
                })
                .run(state);
                acc
            })
            .collect()
    }))
}

pub(crate) fn count_where<P: Pruner>(
    pruner: &P,
    n: usize,
    threads: usize,
    keep: impl Fn(&[usize]) -> bool + Sync,
) -> Result<u64> {
    let parts = shard_fold(
        pruner,
        n,
        threads,
        || 0u64,
        |acc, w| *acc += u64::from(keep(w)),
    )?;
    Ok(parts.into_iter().sum())
}

pub(crate) fn collect_where<P: Pruner>(
    pruner: &P,
    n: usize,
    threads: usize,
    keep: impl Fn(&[usize]) -> bool + Sync,
) -> Result<Vec<Vec<usize>>> {
    let parts = shard_fold(pruner, n, threads, Vec::new, |acc, w| {
        if keep(w) {
            acc.push(w.to_vec());
        }
    })?;
    Ok(parts.into_iter().flatten().collect())
}
