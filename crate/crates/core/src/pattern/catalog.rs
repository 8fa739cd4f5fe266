//! The named pattern sets and pattern functions used by the membership tests.

use std::sync::LazyLock;

use super::{PatternExpression, VincularPattern};

/// The five patterns whose avoidance (together with a leading `n`)
/// characterizes `theta` images of 321-avoiding cyclic permutations.
pub const THEOREM_SET: [&str; 5] = ["[32][41]", "[14][23]", "[41][32]", "[23][14]", "[23]1$"];

/// [`THEOREM_SET`] plus `^1[32]`; avoiders of size `n` are the class `A_n`.
pub const A_SET: [&str; 6] = [
    "[32][41]", "[14][23]", "[41][32]", "[23][14]", "[23]1$", "^1[32]",
];

/// The arrow pattern `[23]1` with `1 -> 4`.
pub const ARROW_231: &str = "[23]1{1->4}";

fn parse_all(texts: &[&str]) -> Vec<VincularPattern> {
    texts
        .iter()
        .map(|t| t.parse().expect("catalog patterns are well formed"))
        .collect()
}

static THEOREM_PATTERNS: LazyLock<Vec<VincularPattern>> = LazyLock::new(|| parse_all(&THEOREM_SET));
static A_PATTERNS: LazyLock<Vec<VincularPattern>> = LazyLock::new(|| parse_all(&A_SET));
static CLASSICAL_321: LazyLock<VincularPattern> = LazyLock::new(|| "321".parse().unwrap());

pub fn theorem_patterns() -> &'static [VincularPattern] {
    &THEOREM_PATTERNS
}

pub fn a_patterns() -> &'static [VincularPattern] {
    &A_PATTERNS
}

pub fn classical_321() -> &'static VincularPattern {
    &CLASSICAL_321
}

fn expr(terms: &[(i64, &str)]) -> PatternExpression {
    PatternExpression::from_terms(terms.iter().copied()).expect("catalog patterns are well formed")
}

static DEPTH_EXCESS: LazyLock<PatternExpression> = LazyLock::new(|| {
    expr(&[
        (1, "2[31]"),
        (1, "[14][23]"),
        (1, "[41][32]"),
        (1, "[24][13]"),
        (1, "[31][42]"),
    ])
});

static LENGTH_EXCESS: LazyLock<PatternExpression> =
    LazyLock::new(|| expr(&[(2, "2[31]"), (2, "[14][23]"), (2, "[41][32]")]));

static DIFFERENCE: LazyLock<PatternExpression> = LazyLock::new(|| {
    expr(&[
        (1, "2[31]"),
        (1, "[14][23]"),
        (1, "[41][32]"),
        (-1, "[24][13]"),
        (-1, "[31][42]"),
    ])
});

static EQ1: LazyLock<PatternExpression> = LazyLock::new(|| {
    expr(&[
        (1, "[231]"),
        (1, "[23][41]"),
        (1, "[24][31]"),
        (1, "[32][41]"),
        (1, "[14][23]"),
        (1, "[41][32]"),
        (-1, "[24][13]"),
    ])
});

static ARROW_SUM: LazyLock<PatternExpression> = LazyLock::new(|| {
    expr(&[
        (1, "[32][41]"),
        (1, "[14][23]"),
        (1, "[41][32]"),
        (1, ARROW_231),
    ])
});

static TWO_31_EXPANSION: LazyLock<PatternExpression> = LazyLock::new(|| {
    expr(&[
        (1, "[32][41]"),
        (1, "[31][42]"),
        (1, "[23][41]"),
        (1, "[24][31]"),
        (1, "[231]"),
    ])
});

static TRAILING_1_SPLIT: LazyLock<PatternExpression> = LazyLock::new(|| {
    expr(&[
        (1, "[34][12]"),
        (1, "[34][21]"),
        (1, "[24][13]"),
        (1, ARROW_231),
    ])
});

static ARROW_231_REWRITE: LazyLock<PatternExpression> =
    LazyLock::new(|| expr(&[(1, "[23][14]"), (1, "[23]1$")]));

/// On `theta(p)` for cyclic `p`: `dp(p) - (n - 1)`.
pub fn depth_excess() -> &'static PatternExpression {
    &DEPTH_EXCESS
}

/// On `theta(p)` for cyclic `p`: `inversions(p) - (n - 1)`.
pub fn length_excess() -> &'static PatternExpression {
    &LENGTH_EXCESS
}

/// On `theta(p)` for cyclic `p`: `inversions(p) - dp(p)`, which vanishes
/// exactly when `p` avoids 321.
pub fn difference() -> &'static PatternExpression {
    &DIFFERENCE
}

/// The seven-term rewrite of [`difference`] obtained by expanding `[2[31]]`.
pub fn eq1() -> &'static PatternExpression {
    &EQ1
}

/// The four-term nonnegative sum with the `[23]1{1->4}` arrow term.
pub fn arrow_sum() -> &'static PatternExpression {
    &ARROW_SUM
}

/// Equals `[2[31]]` on `theta` images of cyclic permutations.
pub fn two_31_expansion() -> &'static PatternExpression {
    &TWO_31_EXPANSION
}

/// Equals `[[23]1]` on `theta` images of cyclic permutations.
pub fn trailing_1_split() -> &'static PatternExpression {
    &TRAILING_1_SPLIT
}

/// Equals the `[23]1{1->4}` count on `theta` images of cyclic permutations.
pub fn arrow_231_rewrite() -> &'static PatternExpression {
    &ARROW_231_REWRITE
}
