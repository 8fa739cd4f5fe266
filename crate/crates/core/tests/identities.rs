//! Exhaustive checks of the pattern-function identities over small S_n.

use vincyc::characterize::{
    in_a, is_member_arrow, is_member_depth, is_member_direct, is_member_eq1, is_member_theorem,
};
use vincyc::pattern::catalog;
use vincyc::{ArrowPattern, Permutation, VincularPattern};

fn cyclic(n: usize) -> impl Iterator<Item = Permutation> {
    Permutation::all(n).filter(Permutation::is_cyclic)
}

#[test]
fn five_predicates_agree_through_n8() {
    for n in 1..=8 {
        for p in Permutation::all(n) {
            let d = is_member_direct(&p);
            assert_eq!(is_member_theorem(&p), d, "theorem {p}");
            assert_eq!(is_member_depth(&p), d, "depth {p}");
            assert_eq!(is_member_eq1(&p), d, "eq1 {p}");
            assert_eq!(is_member_arrow(&p), d, "arrow {p}");
        }
    }
}

#[test]
fn statistic_formulas_on_cyclic_through_n9() {
    for n in 1..=9 {
        for p in cyclic(n) {
            let hat = p.theta();
            let base = n as i64 - 1;
            assert_eq!(
                p.depth() as i64,
                base + catalog::depth_excess().evaluate(&hat),
                "dp {p}"
            );
            assert_eq!(
                p.inversions() as i64,
                base + catalog::length_excess().evaluate(&hat),
                "inv {p}"
            );
            assert_eq!(
                catalog::difference().evaluate(&hat),
                catalog::eq1().evaluate(&hat),
                "eq1 rewrite {p}"
            );
        }
    }
}

#[test]
fn depth_equals_length_iff_321_avoiding() {
    for n in 1..=8 {
        for p in Permutation::all(n) {
            assert_eq!(p.depth() == p.inversions(), p.avoids_321(), "{p}");
        }
    }
}

#[test]
fn two_31_expansion_on_cyclic() {
    let lhs: VincularPattern = "2[31]".parse().unwrap();
    for n in 1..=9 {
        for p in cyclic(n) {
            let hat = p.theta();
            assert_eq!(
                lhs.count(&hat) as i64,
                catalog::two_31_expansion().evaluate(&hat),
                "{p}"
            );
        }
    }
}

#[test]
fn trailing_one_split_on_cyclic() {
    let lhs: VincularPattern = "[23]1".parse().unwrap();
    for n in 1..=9 {
        for p in cyclic(n) {
            let hat = p.theta();
            assert_eq!(
                lhs.count(&hat) as i64,
                catalog::trailing_1_split().evaluate(&hat),
                "{p}"
            );
        }
    }
}

#[test]
fn arrow_lemma_on_members_and_all_cyclic() {
    let arrow: ArrowPattern = catalog::ARROW_231.parse().unwrap();
    for n in 1..=9 {
        for p in cyclic(n) {
            let hat = p.theta();
            let a = arrow.count(&hat) as i64;
            assert_eq!(a, catalog::arrow_231_rewrite().evaluate(&hat), "{p}");
            if p.avoids_321() {
                assert_eq!(a, 0, "{p}");
            }
        }
    }
}

#[test]
fn corollary_bridge() {
    let one = Permutation::identity(1);
    for m in 1..=8 {
        for tau in Permutation::all(m) {
            let member = is_member_direct(&one.skew_sum(&tau).theta_inv());
            assert_eq!(in_a(&tau), member, "{tau}");
        }
    }
}
