//! Backtracking occurrence search for vincular patterns.
//!
//! Pattern entries are placed left to right. A bonded entry has exactly one
//! candidate cell (the one right after its predecessor), and each new value
//! is checked only against its nearest lower and upper neighbours among the
//! entries already placed.

use std::ops::ControlFlow;

use super::VincularPattern;

/// Calls `visit` with the 0-based text positions of every occurrence of
/// `pat` in `text`, in lexicographic order of position tuples. When
/// `last_at` is set, only occurrences whose final entry sits at that
/// position are reported.
pub(crate) fn visit_occurrences<F>(
    text: &[usize],
    pat: &VincularPattern,
    last_at: Option<usize>,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let k = pat.size();
    let len = text.len();
    if k > len {
        return ControlFlow::Continue(());
    }
    let last = match (pat.anchor_last(), last_at) {
        (true, Some(l)) if l != len - 1 => return ControlFlow::Continue(()),
        (true, _) => Some(len - 1),
        (false, l) => l,
    };
    if let Some(l) = last {
        if l >= len || l + 1 < k {
            return ControlFlow::Continue(());
        }
    }
    let mut search = Search {
        text,
        pat,
        last,
        positions: vec![0; k],
        visit,
    };
    search.place(0)
}

struct Search<'a, F> {
    text: &'a [usize],
    pat: &'a VincularPattern,
    last: Option<usize>,
    positions: Vec<usize>,
    visit: &'a mut F,
}

impl<F> Search<'_, F>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    fn place(&mut self, j: usize) -> ControlFlow<()> {
        let k = self.pat.size();
        if j == k {
            return (self.visit)(&self.positions);
        }
        let remaining = k - 1 - j;
        let mut lo = if j == 0 { 0 } else { self.positions[j - 1] + 1 };
        let mut hi = match self.last {
            Some(l) => l - remaining,
            None => self.text.len() - 1 - remaining,
        };
        if j > 0 && self.pat.bonds[j - 1] {
            hi = hi.min(lo);
        }
        if j == 0 && self.pat.anchor_first() {
            hi = 0;
        }
        if j == k - 1 {
            if let Some(l) = self.last {
                lo = lo.max(l);
            }
        }
        let below = self.pat.below[j];
        let above = self.pat.above[j];
        let mut t = lo;
        while t <= hi {
            let v = self.text[t];
            let fits = below.is_none_or(|i| self.text[self.positions[i]] < v)
                && above.is_none_or(|i| self.text[self.positions[i]] > v);
            if fits {
                self.positions[j] = t;
                self.place(j + 1)?;
            }
            t += 1;
        }
        ControlFlow::Continue(())
    }
}
