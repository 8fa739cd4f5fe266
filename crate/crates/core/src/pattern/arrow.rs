use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use itertools::Itertools;

use super::{parse, VincularPattern};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A vincular pattern over an index word `nu` drawn from `1..=k`, together
/// with arrows `b -> c`.
///
/// For a text `t` with `s = t.theta_inv()`, a substring matching the core is
/// an occurrence when its values can be extended to an increasing family
/// `x_1 < ... < x_k` in `1..=n` with `x_{nu_j}` equal to the `j`-th matched
/// value and `s(x_b) = x_c` for every arrow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrowPattern {
    k: usize,
    nu: Vec<usize>,
    core: VincularPattern,
    arrows: Vec<(usize, usize)>,
}

impl ArrowPattern {
    /// `bonds` are 1-based positions in `nu`, as for [`VincularPattern::new`].
    pub fn new(
        k: usize,
        nu: Vec<usize>,
        bonds: impl IntoIterator<Item = usize>,
        anchor_first: bool,
        anchor_last: bool,
        arrows: Vec<(usize, usize)>,
    ) -> Result<Self> {
        if nu.is_empty() {
            return Err(Error::Domain("arrow pattern needs a nonempty word".into()));
        }
        if let Some(&bad) = nu.iter().find(|&&a| a == 0 || a > k) {
            return Err(Error::Domain(format!("index {bad} outside 1..={k}")));
        }
        if let Some(&(b, c)) = arrows
            .iter()
            .find(|&&(b, c)| b == 0 || b > k || c == 0 || c > k)
        {
            return Err(Error::Domain(format!("arrow {b}->{c} outside 1..={k}")));
        }
        let mut covered = vec![false; k + 1];
        for &a in &nu {
            covered[a] = true;
        }
        for &(b, c) in &arrows {
            covered[b] = true;
            covered[c] = true;
        }
        if let Some(missing) = (1..=k).find(|&i| !covered[i]) {
            return Err(Error::Domain(format!(
                "index {missing} is in neither the word nor an arrow"
            )));
        }
        let base = Permutation::reduce(&nu)?;
        let core = VincularPattern::new(base, bonds, anchor_first, anchor_last)?;
        Ok(ArrowPattern {
            k,
            nu,
            core,
            arrows,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn nu(&self) -> &[usize] {
        &self.nu
    }

    pub fn core(&self) -> &VincularPattern {
        &self.core
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    /// `[self](p_hat)`.
    pub fn count(&self, p_hat: &Permutation) -> u64 {
        self.count_given_preimage(p_hat, &p_hat.theta_inv())
    }

    pub(crate) fn count_given_preimage(&self, p_hat: &Permutation, sigma: &Permutation) -> u64 {
        let mut count = 0;
        let _ = self.visit(p_hat, sigma, |_| {
            count += 1;
            ControlFlow::Continue(())
        });
        count
    }

    /// 1-based positions of the first occurrence in `p_hat`.
    pub fn first_occurrence(&self, p_hat: &Permutation) -> Option<Vec<usize>> {
        let mut found = None;
        let _ = self.visit(p_hat, &p_hat.theta_inv(), |pos| {
            found = Some(pos.iter().map(|t| t + 1).collect());
            ControlFlow::Break(())
        });
        found
    }

    pub fn contains(&self, p_hat: &Permutation) -> bool {
        self.first_occurrence(p_hat).is_some()
    }

    fn visit<F>(&self, p_hat: &Permutation, sigma: &Permutation, mut f: F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        if self.k > p_hat.size() {
            return ControlFlow::Continue(());
        }
        let sigma_inv = sigma.inverse();
        let text = p_hat.entries();
        let mut x = vec![None; self.k + 1];
        self.core.for_each_occurrence(text, |pos| {
            x.iter_mut().for_each(|slot| *slot = None);
            for (j, &t) in pos.iter().enumerate() {
                x[self.nu[j]] = Some(text[t]);
            }
            if self.completes(&mut x, sigma, &sigma_inv) {
                f(pos)
            } else {
                ControlFlow::Continue(())
            }
        })
    }

    /// Whether the partial assignment `x` (indexed `1..=k`) extends to an
    /// increasing witness family that satisfies every arrow.
    fn completes(
        &self,
        x: &mut [Option<usize>],
        sigma: &Permutation,
        sigma_inv: &Permutation,
    ) -> bool {
        // Forced values first: an arrow with one end assigned fixes the other.
        loop {
            let mut changed = false;
            for &(b, c) in &self.arrows {
                match (x[b], x[c]) {
                    (Some(vb), Some(vc)) => {
                        if sigma.at(vb) != vc {
                            return false;
                        }
                    }
                    (Some(vb), None) => {
                        x[c] = Some(sigma.at(vb));
                        changed = true;
                    }
                    (None, Some(vc)) => {
                        x[b] = Some(sigma_inv.at(vc));
                        changed = true;
                    }
                    (None, None) => {}
                }
            }
            if !changed {
                break;
            }
        }
        if !increasing(x) {
            return false;
        }
        let Some(&(b, _)) = self.arrows.iter().find(|&&(b, _)| x[b].is_none()) else {
            return true;
        };
        // Both ends free: x_b must sit strictly between its assigned neighbours.
        let lo = x[..b].iter().rev().find_map(|v| *v).unwrap_or(0);
        let hi = x[b + 1..]
            .iter()
            .find_map(|v| *v)
            .unwrap_or(sigma.size() + 1);
        (lo + 1..hi).any(|v| {
            let mut trial = x.to_vec();
            trial[b] = Some(v);
            self.completes(&mut trial, sigma, sigma_inv)
        })
    }
}

fn increasing(x: &[Option<usize>]) -> bool {
    x.iter().flatten().tuple_windows().all(|(a, b)| a < b)
}

impl FromStr for ArrowPattern {
    type Err = Error;

    /// `nu` in the vincular grammar followed by `{b->c, ...}`; `k` is the
    /// largest index mentioned.
    fn from_str(s: &str) -> Result<Self> {
        let raw = parse::parse_raw(s)?;
        let k = raw
            .entries
            .iter()
            .chain(raw.arrows.iter().flat_map(|(b, c)| [b, c]))
            .copied()
            .max()
            .unwrap_or(0);
        let bonds = raw
            .bonds
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i + 1));
        ArrowPattern::new(
            k,
            raw.entries.clone(),
            bonds,
            raw.anchor_first,
            raw.anchor_last,
            raw.arrows,
        )
        .map_err(|e| Error::Parse {
            position: 0,
            message: e.to_string(),
        })
    }
}

impl fmt::Display for ArrowPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.core.write_groups(f, &self.nu)?;
        let arrows = self
            .arrows
            .iter()
            .map(|(b, c)| format!("{b}->{c}"))
            .join(",");
        write!(f, "{{{arrows}}}")
    }
}
