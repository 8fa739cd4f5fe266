//! Classical, vincular, and arrow patterns, and linear combinations of their
//! counts ("pattern functions").
//!
//! A [`VincularPattern`] is a permutation whose neighbouring entries may be
//! *bonded* (their images must be adjacent in the text) plus two independent
//! boundary anchors: `^` forces the first pattern entry onto the first text
//! position and `$` forces the last pattern entry onto the last text
//! position. A classical pattern has no bonds and no anchors.
//!
//! An [`ArrowPattern`] adds constraints `b -> c` that are checked against
//! `theta_inv` of the text rather than the text itself.

mod arrow;
pub mod catalog;
mod matcher;
mod parse;

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub use arrow::ArrowPattern;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VincularPattern {
    base: Permutation,
    /// `bonds[i]` bonds pattern entries `i + 1` and `i + 2` (1-based).
    bonds: Vec<bool>,
    anchor_first: bool,
    anchor_last: bool,
    // For each entry j, the earlier entry with the nearest smaller / larger
    // base value. Derived from `base`.
    below: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
}

impl VincularPattern {
    /// `bonds` holds 1-based bond indices `i`, each joining entries `i` and
    /// `i + 1`.
    pub fn new(
        base: Permutation,
        bonds: impl IntoIterator<Item = usize>,
        anchor_first: bool,
        anchor_last: bool,
    ) -> Result<Self> {
        let k = base.size();
        let mut flags = vec![false; k - 1];
        for i in bonds {
            if i == 0 || i >= k {
                return Err(Error::Domain(format!(
                    "bond index {i} outside 1..{k} for a pattern of size {k}"
                )));
            }
            flags[i - 1] = true;
        }
        Ok(Self::from_parts(base, flags, anchor_first, anchor_last))
    }

    pub fn classical(base: Permutation) -> Self {
        let k = base.size();
        Self::from_parts(base, vec![false; k - 1], false, false)
    }

    fn from_parts(
        base: Permutation,
        bonds: Vec<bool>,
        anchor_first: bool,
        anchor_last: bool,
    ) -> Self {
        let w = base.entries();
        let mut below = Vec::with_capacity(w.len());
        let mut above = Vec::with_capacity(w.len());
        for (j, &v) in w.iter().enumerate() {
            below.push((0..j).filter(|&i| w[i] < v).max_by_key(|&i| w[i]));
            above.push((0..j).filter(|&i| w[i] > v).min_by_key(|&i| w[i]));
        }
        VincularPattern {
            base,
            bonds,
            anchor_first,
            anchor_last,
            below,
            above,
        }
    }

    pub fn base(&self) -> &Permutation {
        &self.base
    }

    pub fn size(&self) -> usize {
        self.base.size()
    }

    /// 1-based bond indices in increasing order.
    pub fn bonds(&self) -> impl Iterator<Item = usize> + '_ {
        self.bonds
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i + 1))
    }

    pub fn anchor_first(&self) -> bool {
        self.anchor_first
    }

    pub fn anchor_last(&self) -> bool {
        self.anchor_last
    }

    pub fn is_classical(&self) -> bool {
        !self.anchor_first && !self.anchor_last && !self.bonds.contains(&true)
    }

    /// Reverses the base, mirrors the bonds and swaps the anchors, so that
    /// `pat.reverse().count(&p.reverse()) == pat.count(&p)`.
    pub fn reverse(&self) -> Self {
        let mut bonds = self.bonds.clone();
        bonds.reverse();
        Self::from_parts(
            self.base.reverse(),
            bonds,
            self.anchor_last,
            self.anchor_first,
        )
    }

    /// Number of occurrences, i.e. the pattern count `[pat](p)`.
    pub fn count(&self, p: &Permutation) -> u64 {
        self.count_in_word(p.entries())
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.first_occurrence(p).is_some()
    }

    pub fn avoids(&self, p: &Permutation) -> bool {
        !self.contains(p)
    }

    /// 1-based positions of the lexicographically first occurrence.
    pub fn first_occurrence(&self, p: &Permutation) -> Option<Vec<usize>> {
        let mut found = None;
        let _ = self.for_each_occurrence(p.entries(), |pos| {
            found = Some(pos.iter().map(|t| t + 1).collect());
            ControlFlow::Break(())
        });
        found
    }

    pub(crate) fn count_in_word(&self, word: &[usize]) -> u64 {
        let mut count = 0;
        let _ = self.for_each_occurrence(word, |_| {
            count += 1;
            ControlFlow::Continue(())
        });
        count
    }

    /// Visits 0-based occurrence positions in any word of distinct values.
    pub(crate) fn for_each_occurrence<F>(&self, word: &[usize], mut f: F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        matcher::visit_occurrences(word, self, None, &mut f)
    }

    /// True when some occurrence in `word` ends exactly at position `end`.
    /// The last-entry anchor is read relative to `word.len()`.
    pub(crate) fn occurs_ending_at(&self, word: &[usize], end: usize) -> bool {
        matcher::visit_occurrences(word, self, Some(end), &mut |_| ControlFlow::Break(()))
            .is_break()
    }

    pub(super) fn write_groups(
        &self,
        f: &mut fmt::Formatter<'_>,
        entries: &[usize],
    ) -> fmt::Result {
        let comma = entries.iter().any(|&v| v > 9);
        let sep = if comma { "," } else { "" };
        if self.anchor_first {
            f.write_str("^")?;
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for (j, &v) in entries.iter().enumerate() {
            if j > 0 && self.bonds[j - 1] {
                groups.last_mut().unwrap().push(v);
            } else {
                groups.push(vec![v]);
            }
        }
        let mut rendered = groups.iter().map(|g| {
            if g.len() == 1 {
                g[0].to_string()
            } else {
                format!("[{}]", g.iter().join(sep))
            }
        });
        f.write_str(&rendered.join(sep))?;
        if self.anchor_last {
            f.write_str("$")?;
        }
        Ok(())
    }
}

impl FromStr for VincularPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let raw = parse::parse_raw(s)?;
        if !raw.arrows.is_empty() {
            return Err(Error::Parse {
                position: s.find('{').unwrap_or(0),
                message: "arrows are not allowed in a vincular pattern".into(),
            });
        }
        let base = Permutation::new(raw.entries).map_err(|e| Error::Parse {
            position: 0,
            message: format!("entries do not form a permutation: {e}"),
        })?;
        Ok(Self::from_parts(
            base,
            raw.bonds,
            raw.anchor_first,
            raw.anchor_last,
        ))
    }
}

impl fmt::Display for VincularPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_groups(f, self.base.entries())
    }
}

/// One summand of a pattern function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PatternTerm {
    Vincular(VincularPattern),
    Arrow(ArrowPattern),
}

impl PatternTerm {
    /// Parses either kind; text with a `{...}` arrow list becomes an arrow
    /// pattern.
    pub fn parse(text: &str) -> Result<Self> {
        if text.contains('{') {
            text.parse().map(PatternTerm::Arrow)
        } else {
            text.parse().map(PatternTerm::Vincular)
        }
    }

    /// `[term](p)`. For arrow terms `preimage` must be `p.theta_inv()`.
    fn count_with(&self, p: &Permutation, preimage: &Permutation) -> u64 {
        match self {
            PatternTerm::Vincular(v) => v.count(p),
            PatternTerm::Arrow(a) => a.count_given_preimage(p, preimage),
        }
    }

    pub fn count(&self, p: &Permutation) -> u64 {
        match self {
            PatternTerm::Vincular(v) => v.count(p),
            PatternTerm::Arrow(a) => a.count(p),
        }
    }

    pub fn first_occurrence(&self, p: &Permutation) -> Option<Vec<usize>> {
        match self {
            PatternTerm::Vincular(v) => v.first_occurrence(p),
            PatternTerm::Arrow(a) => a.first_occurrence(p),
        }
    }
}

impl fmt::Display for PatternTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternTerm::Vincular(v) => v.fmt(f),
            PatternTerm::Arrow(a) => a.fmt(f),
        }
    }
}

impl From<VincularPattern> for PatternTerm {
    fn from(v: VincularPattern) -> Self {
        PatternTerm::Vincular(v)
    }
}

impl From<ArrowPattern> for PatternTerm {
    fn from(a: ArrowPattern) -> Self {
        PatternTerm::Arrow(a)
    }
}

/// An integer linear combination of pattern counts.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PatternExpression {
    terms: Vec<(i64, PatternTerm)>,
}

impl PatternExpression {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn term(mut self, coefficient: i64, pattern: impl Into<PatternTerm>) -> Self {
        self.terms.push((coefficient, pattern.into()));
        self
    }

    pub fn plus(self, pattern: impl Into<PatternTerm>) -> Self {
        self.term(1, pattern)
    }

    pub fn minus(self, pattern: impl Into<PatternTerm>) -> Self {
        self.term(-1, pattern)
    }

    /// Builds `sum coefficient * [pattern]` from textual patterns.
    pub fn from_terms<'a>(terms: impl IntoIterator<Item = (i64, &'a str)>) -> Result<Self> {
        terms.into_iter().try_fold(Self::new(), |e, (c, t)| {
            Ok(e.term(c, PatternTerm::parse(t)?))
        })
    }

    pub fn terms(&self) -> &[(i64, PatternTerm)] {
        &self.terms
    }

    pub fn evaluate(&self, p: &Permutation) -> i64 {
        let needs_preimage = self
            .terms
            .iter()
            .any(|(_, t)| matches!(t, PatternTerm::Arrow(_)));
        let preimage = if needs_preimage {
            p.theta_inv()
        } else {
            p.clone()
        };
        self.terms
            .iter()
            .map(|(c, t)| c * t.count_with(p, &preimage) as i64)
            .sum()
    }
}

impl fmt::Display for PatternExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (c, t)) in self.terms.iter().enumerate() {
            let sign = if *c < 0 { "-" } else { "+" };
            if i > 0 || *c < 0 {
                write!(f, "{}{sign} ", if i > 0 { " " } else { "" })?;
            }
            if c.abs() != 1 {
                write!(f, "{}*", c.abs())?;
            }
            write!(f, "[{t}]")?;
        }
        Ok(())
    }
}
