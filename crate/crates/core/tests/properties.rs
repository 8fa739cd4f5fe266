//! Invariants, checked exhaustively on small sizes against the brute-force
//! oracles in `common`, and by proptest on larger random inputs.

mod common;

use num_bigint::BigInt;
use proptest::prelude::*;

use common::{pat, perms};
use vincyc::cache::TableSet;
use vincyc::characterize::{
    in_a, is_member_arrow, is_member_depth, is_member_direct, is_member_eq1, is_member_theorem,
};
use vincyc::enumerate::sequence::{s_from_recurrence, table1, Provenance, SeqName, SequenceTable};
use vincyc::enumerate::{
    decompose_inflation, enumerate_a, enumerate_c321, enumerate_c321_via_a, enumerated_tables,
    Decomposition,
};
use vincyc::growth::{
    conditional_upper_identity, lower_bound_root, ratio_and_root_report, GeometricTail,
};
use vincyc::pattern::catalog;
use vincyc::{Permutation, VincularPattern};

fn perm(w: &[usize]) -> Permutation {
    Permutation::new(w.to_vec()).unwrap()
}

fn all(n: usize) -> impl Iterator<Item = Permutation> {
    Permutation::all(n)
}

fn arb_perm(max: usize) -> impl Strategy<Value = Vec<usize>> {
    (1..=max).prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
}

const VINCULAR: [&str; 17] = [
    "321", "[23]1", "^1[32]", "[23]1$", "2[31]", "[14][23]", "[41][32]", "[24][13]", "[31][42]",
    "[231]", "[23][41]", "[24][31]", "[32][41]", "[34][12]", "[34][21]", "[23][14]", "1[32]$",
];

#[test]
fn theta_round_trips_through_n8() {
    for n in 1..=8 {
        for p in all(n) {
            assert_eq!(p.theta().theta_inv(), p);
            assert_eq!(p.theta_inv().theta(), p);
            assert_eq!(p.theta().entries(), common::theta(p.entries()));
        }
    }
}

#[test]
fn reversal_duality_through_n7() {
    for t in VINCULAR {
        let v: VincularPattern = t.parse().unwrap();
        let r = v.reverse();
        for n in 1..=7 {
            for p in all(n) {
                assert_eq!(r.count(&p.reverse()), v.count(&p), "{t} on {p}");
            }
        }
    }
}

#[test]
fn five_way_agreement_n9() {
    for p in all(9) {
        let d = is_member_direct(&p);
        assert_eq!(d, common::in_c321(p.entries()), "{p}");
        assert!(
            [
                is_member_theorem(&p),
                is_member_depth(&p),
                is_member_eq1(&p),
                is_member_arrow(&p)
            ]
            .iter()
            .all(|&v| v == d),
            "{p}"
        );
    }
}

#[test]
fn inverse_closure_through_n8() {
    for n in 1..=8 {
        for p in all(n) {
            assert_eq!(is_member_direct(&p), is_member_direct(&p.inverse()), "{p}");
        }
    }
}

#[test]
fn corollary_bridge_n9() {
    let one = Permutation::identity(1);
    for tau in all(8) {
        assert_eq!(
            in_a(&tau),
            is_member_direct(&one.skew_sum(&tau).theta_inv()),
            "{tau}"
        );
    }
}

#[test]
fn avoiders_of_132_and_231_lie_in_a() {
    let (p132, p231) = (pat("132"), pat("231"));
    for m in 1..=9 {
        let avoiders: Vec<Vec<usize>> = perms(m)
            .into_iter()
            .filter(|w| common::count(&p132, w) == 0 && common::count(&p231, w) == 0)
            .collect();
        assert_eq!(avoiders.len(), 1 << (m - 1), "m = {m}");
        assert!(avoiders.iter().all(|w| in_a(&perm(w))), "m = {m}");
    }
}

#[test]
fn a_is_closed_under_reverse_n9() {
    for p in all(9) {
        assert_eq!(in_a(&p), in_a(&p.reverse()), "{p}");
    }
}

#[test]
fn a_matches_oracle_through_n7() {
    for n in 1..=7 {
        for p in all(n) {
            assert_eq!(in_a(&p), common::in_a(p.entries()), "{p}");
        }
    }
}

/// Non-simple members of `A_n` have exactly one `k` with values `1..=k`
/// contiguous and a simple quotient; that `k` is the content size.
#[test]
fn decomposition_is_unique() {
    for n in 3..=8 {
        for p in enumerate_a(n).unwrap() {
            let w = p.entries();
            let splits: Vec<(usize, Vec<usize>)> = (2..n)
                .filter_map(|k| {
                    let pos: Vec<usize> = (0..n).filter(|&i| w[i] <= k).collect();
                    if pos[k - 1] - pos[0] != k - 1 {
                        return None;
                    }
                    let quotient: Vec<usize> =
                        w.iter().filter(|&&v| v >= k).map(|&v| v - k + 1).collect();
                    common::is_simple(&quotient).then_some((k, quotient))
                })
                .collect();
            match decompose_inflation(&p).unwrap() {
                Decomposition::Simple => {
                    assert!(common::is_simple(w), "{p}");
                    assert!(splits.is_empty(), "{p}");
                }
                Decomposition::Inflation { skeleton, content } => {
                    assert_eq!(splits.len(), 1, "{p}: {splits:?}");
                    assert_eq!(content.size(), splits[0].0, "{p}");
                    assert_eq!(skeleton.entries(), splits[0].1, "{p}");
                    assert_eq!(skeleton.inflate_at_one(&content), p);
                    assert!(in_a(&content), "{p}");
                }
            }
        }
    }
}

#[test]
fn enumeration_strategies_agree_n10() {
    for n in [9, 10] {
        let direct = enumerate_c321(n).unwrap();
        assert_eq!(direct, enumerate_c321_via_a(n).unwrap(), "n = {n}");
        assert!(direct.iter().all(|p| common::in_c321(p.entries())));
    }
}

#[test]
fn endpoint_lemma_and_valleys_through_n10() {
    for n in 2..=10 {
        for p in enumerate_a(n).unwrap() {
            let w = p.entries();
            assert!(!(w[0] < w[1] && w[n - 2] > w[n - 1]), "{p}");
        }
        // Descend to 1, then ascend: choose which values sit left of 1.
        for mask in 0u32..1 << (n - 1) {
            let left: Vec<usize> = (2..=n).rev().filter(|v| mask >> (v - 2) & 1 == 1).collect();
            let right: Vec<usize> = (2..=n).filter(|v| mask >> (v - 2) & 1 == 0).collect();
            let w: Vec<usize> = left.into_iter().chain([1]).chain(right).collect();
            assert!(in_a(&perm(&w)), "{w:?}");
        }
    }
}

#[test]
fn growth_tables_from_enumeration() {
    let [c, a, s] = enumerated_tables(10, 2).unwrap();
    let values = |t: &SequenceTable| t.iter().map(|(n, v, _)| (n, v.clone())).collect::<Vec<_>>();
    assert_eq!(values(&s_from_recurrence(&a).unwrap()), values(&s));
    for n in 6..=11 {
        assert!(
            conditional_upper_identity(&c, &s, n).unwrap().equal,
            "n = {n}"
        );
    }
    for m in 4..=11 {
        let report = ratio_and_root_report(&c.truncated(m));
        assert!(report.fekete_estimate <= 4.0, "m = {m}");
        if m >= 9 {
            assert!(report.fekete_estimate >= 2.0, "m = {m}");
        }
    }
}

#[test]
fn cache_keeps_enumerated_over_paper_values() {
    let mut set = TableSet::default();
    set.s.insert(7, 6, Provenance::Enumerated).unwrap();
    set.s.merge(&table1()).unwrap();
    assert_eq!(set.s.provenance(7), Some(Provenance::Enumerated));
    let back = TableSet::from_json(&set.to_json()).unwrap();
    assert_eq!(back, set);
}

proptest! {
    #[test]
    fn theta_round_trip(w in arb_perm(40)) {
        let p = perm(&w);
        prop_assert_eq!(p.theta().theta_inv(), p.clone());
        prop_assert_eq!(p.theta().into_entries(), common::theta(&w));
        prop_assert_eq!(p.theta_inv().into_entries(), common::theta_inv(&w));
    }

    #[test]
    fn statistics(w in arb_perm(40)) {
        let p = perm(&w);
        let n = w.len() as u64;
        prop_assert_eq!(p.depth(), common::depth(&w));
        prop_assert_eq!(p.inversions(), common::inversions(&w));
        let cycles = common::cycles(&w).len() as u64;
        prop_assert_eq!(p.reflection_length(), n - cycles);
        prop_assert_eq!(p.is_cyclic(), p.reflection_length() == n - 1);
        prop_assert_eq!(p.theta().at(1) == w.len(), p.is_cyclic());
        let from_cycles = p.cycle_decomposition().to_permutation();
        prop_assert_eq!(from_cycles.depth(), p.depth());
        prop_assert_eq!(from_cycles.inversions(), p.inversions());
        prop_assert_eq!(from_cycles.reflection_length(), p.reflection_length());
    }

    #[test]
    fn matcher_agrees_with_oracle(w in arb_perm(10), i in 0..VINCULAR.len()) {
        let v: VincularPattern = VINCULAR[i].parse().unwrap();
        prop_assert_eq!(v.count(&perm(&w)), common::count(&pat(VINCULAR[i]), &w));
    }

    #[test]
    fn arrow_count_agrees_with_oracle(w in arb_perm(9)) {
        let arrow = vincyc::PatternTerm::parse(catalog::ARROW_231).unwrap();
        prop_assert_eq!(arrow.count(&perm(&w)), common::count(&pat(catalog::ARROW_231), &w));
    }

    #[test]
    fn lower_bound_is_monotone_in_tol(e1 in 3u32..12, e2 in 3u32..12) {
        let (t1, t2) = (10f64.powi(-(e1 as i32)), 10f64.powi(-(e2 as i32)));
        let tail = Some(GeometricTail { base: 2.0, coeff_index: 22 });
        let b1 = lower_bound_root(&table1(), 22, tail, t1).unwrap();
        let b2 = lower_bound_root(&table1(), 22, tail, t2).unwrap();
        prop_assert!(b1.lower <= b1.upper);
        prop_assert!(b1.value() <= b1.upper_value());
        if t1 >= t2 {
            prop_assert!(b1.value() <= b2.value());
        }
        // Both brackets hold the same root.
        prop_assert!(b1.lower <= b2.upper && b2.lower <= b1.upper);
    }

    #[test]
    fn cache_round_trip(values in proptest::collection::vec((0u64..1_000_000, 0usize..3), 1..20)) {
        let provs = [Provenance::Enumerated, Provenance::Recurrence, Provenance::PaperTable];
        let mut set = TableSet::default();
        for (i, &(v, k)) in values.iter().enumerate() {
            set.a.insert(i + 1, BigInt::from(v), provs[k]).unwrap();
            set.s.insert(i + 2, BigInt::from(v) * 7, provs[2 - k]).unwrap();
        }
        let back = TableSet::from_json(&set.to_json()).unwrap();
        prop_assert_eq!(back, set);
    }
}

#[test]
fn seq_table_rejects_low_index() {
    assert!(SequenceTable::new(SeqName::S)
        .insert(1, 1, Provenance::Enumerated)
        .is_err());
}
