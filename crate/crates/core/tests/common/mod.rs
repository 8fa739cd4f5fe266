//! Brute-force reference implementations shared by the integration tests.
//! Nothing here calls into the library's matchers, statistics or searches.

#![allow(dead_code)]

use itertools::Itertools;

/// Every word of `S_n` in lexicographic order, values `1..=n`.
pub fn perms(n: usize) -> Vec<Vec<usize>> {
    (1..=n).permutations(n).collect()
}

pub fn cycles(w: &[usize]) -> Vec<Vec<usize>> {
    let n = w.len();
    let mut seen = vec![false; n + 1];
    let mut out = Vec::new();
    for start in 1..=n {
        if seen[start] {
            continue;
        }
        let mut cyc = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cyc.push(x);
            x = w[x - 1];
        }
        out.push(cyc);
    }
    out
}

pub fn is_cyclic(w: &[usize]) -> bool {
    cycles(w).len() == 1
}

pub fn has_321(w: &[usize]) -> bool {
    w.iter()
        .tuple_combinations()
        .any(|(a, b, c)| a > b && b > c)
}

pub fn in_c321(w: &[usize]) -> bool {
    is_cyclic(w) && !has_321(w)
}

/// Cycles rotated to start at their maximum, ordered by increasing maximum,
/// brackets dropped.
pub fn theta(w: &[usize]) -> Vec<usize> {
    let mut cs: Vec<Vec<usize>> = cycles(w)
        .into_iter()
        .map(|mut c| {
            let top = c.iter().position_max().unwrap();
            c.rotate_left(top);
            c
        })
        .collect();
    cs.sort_by_key(|c| c[0]);
    cs.concat()
}

/// Inverse of [`theta`]: cut before every left-to-right maximum.
pub fn theta_inv(w: &[usize]) -> Vec<usize> {
    let mut out = vec![0; w.len()];
    let mut starts: Vec<usize> = Vec::new();
    let mut max = 0;
    for (i, &v) in w.iter().enumerate() {
        if v > max {
            max = v;
            starts.push(i);
        }
    }
    starts.push(w.len());
    for (&a, &b) in starts.iter().tuple_windows() {
        for i in a..b {
            let next = if i + 1 < b { w[i + 1] } else { w[a] };
            out[w[i] - 1] = next;
        }
    }
    out
}

pub fn depth(w: &[usize]) -> u64 {
    w.iter()
        .enumerate()
        .map(|(i, &v)| v.saturating_sub(i + 1) as u64)
        .sum()
}

pub fn inversions(w: &[usize]) -> u64 {
    w.iter().tuple_combinations().filter(|(a, b)| a > b).count() as u64
}

/// A pattern in bracket notation, e.g. `^1[32]`, `[23]1$`, `[23]1{1->4}`.
#[derive(Debug, Clone)]
pub struct Pat {
    /// Letters of the word, each in `1..=k`.
    pub word: Vec<usize>,
    /// `block[j]` numbers the bracket group of letter `j`; unbracketed
    /// letters get their own group.
    pub block: Vec<usize>,
    pub first: bool,
    pub last: bool,
    pub arrows: Vec<(usize, usize)>,
    pub k: usize,
}

pub fn pat(text: &str) -> Pat {
    let (body, arrows) = match text.split_once('{') {
        Some((b, rest)) => {
            let inner = rest.strip_suffix('}').expect("closing brace");
            let arrows = inner
                .split(',')
                .map(|a| {
                    let (x, y) = a.trim().split_once("->").expect("arrow");
                    (x.parse().unwrap(), y.parse().unwrap())
                })
                .collect();
            (b, arrows)
        }
        None => (text, Vec::new()),
    };
    let mut p = Pat {
        word: vec![],
        block: vec![],
        first: false,
        last: false,
        arrows,
        k: 0,
    };
    let mut group = 0;
    let mut open = false;
    for ch in body.chars() {
        match ch {
            '^' => p.first = true,
            '$' => p.last = true,
            '[' => {
                group += 1;
                open = true;
            }
            ']' => open = false,
            d => {
                if !open {
                    group += 1;
                }
                p.word.push(d.to_digit(10).unwrap() as usize);
                p.block.push(group);
            }
        }
    }
    p.k = p
        .word
        .iter()
        .copied()
        .chain(p.arrows.iter().flat_map(|&(a, b)| [a, b]))
        .max()
        .unwrap();
    p
}

fn same_order(a: &[usize], b: &[usize]) -> bool {
    a.iter()
        .zip(b)
        .tuple_combinations()
        .all(|((x1, y1), (x2, y2))| x1.cmp(x2) == y1.cmp(y2))
}

/// Counts occurrences by filtering every increasing index tuple. Arrow
/// constraints are checked against `theta_inv(w)` by trying every
/// increasing `k`-subset of values.
pub fn count(p: &Pat, w: &[usize]) -> u64 {
    let n = w.len();
    let m = p.word.len();
    if m > n {
        return 0;
    }
    let sigma = theta_inv(w);
    let mut total = 0;
    for idx in (0..n).combinations(m) {
        if p.first && idx[0] != 0 || p.last && idx[m - 1] != n - 1 {
            continue;
        }
        if (1..m).any(|j| p.block[j] == p.block[j - 1] && idx[j] != idx[j - 1] + 1) {
            continue;
        }
        let vals: Vec<usize> = idx.iter().map(|&i| w[i]).collect();
        if !same_order(&vals, &p.word) {
            continue;
        }
        if p.arrows.is_empty() {
            total += 1;
            continue;
        }
        let ok = (1..=n).combinations(p.k).any(|x| {
            p.word.iter().zip(&vals).all(|(&a, &v)| x[a - 1] == v)
                && p.arrows
                    .iter()
                    .all(|&(b, c)| sigma[x[b - 1] - 1] == x[c - 1])
        });
        if ok {
            total += 1;
        }
    }
    total
}

pub const A_SET: [&str; 6] = [
    "[32][41]", "[14][23]", "[41][32]", "[23][14]", "[23]1$", "^1[32]",
];

pub fn in_a(w: &[usize]) -> bool {
    A_SET.iter().all(|t| count(&pat(t), w) == 0)
}

/// No window of length `2..n` carries a contiguous set of values.
pub fn is_simple(w: &[usize]) -> bool {
    let n = w.len();
    for len in 2..n {
        for win in w.windows(len) {
            let lo = win.iter().min().unwrap();
            let hi = win.iter().max().unwrap();
            if hi - lo + 1 == len {
                return false;
            }
        }
    }
    true
}

pub fn word(text: &str) -> Vec<usize> {
    if text.contains(',') {
        text.split(',').map(|t| t.parse().unwrap()).collect()
    } else {
        text.chars()
            .map(|c| c.to_digit(10).unwrap() as usize)
            .collect()
    }
}
