//! Membership tests for the class of 321-avoiding cyclic permutations.
//!
//! The five predicates below reach the same verdict by different routes:
//! directly from the definition, from the statistic equality `dp = inv`,
//! and from three pattern characterizations of `theta(p)`.

use serde::{Deserialize, Serialize};

use crate::pattern::{catalog, PatternTerm};
use crate::perm::Permutation;

/// Cyclic and avoids the classical pattern 321.
pub fn is_member_direct(p: &Permutation) -> bool {
    p.is_cyclic() && p.avoids_321()
}

fn theta_starts_with_n(p: &Permutation) -> Option<Permutation> {
    let hat = p.theta();
    (hat.at(1) == p.size()).then_some(hat)
}

/// `theta(p)` starts with `n` and avoids every pattern in
/// [`catalog::THEOREM_SET`].
pub fn is_member_theorem(p: &Permutation) -> bool {
    theta_starts_with_n(p).is_some_and(|hat| {
        catalog::theorem_patterns()
            .iter()
            .all(|pat| pat.avoids(&hat))
    })
}

/// Cyclic and depth equals the inversion number.
pub fn is_member_depth(p: &Permutation) -> bool {
    p.is_cyclic() && p.depth() == p.inversions()
}

/// `theta(p)` starts with `n` and the seven-term pattern function
/// [`catalog::eq1`] vanishes on it.
pub fn is_member_eq1(p: &Permutation) -> bool {
    theta_starts_with_n(p).is_some_and(|hat| catalog::eq1().evaluate(&hat) == 0)
}

/// `theta(p)` starts with `n` and the four-term sum with the arrow pattern
/// [`catalog::ARROW_231`] vanishes on it.
pub fn is_member_arrow(p: &Permutation) -> bool {
    theta_starts_with_n(p).is_some_and(|hat| catalog::arrow_sum().evaluate(&hat) == 0)
}

/// Membership in `A_n`: `p` avoids every pattern in [`catalog::A_SET`].
pub fn in_a(p: &Permutation) -> bool {
    catalog::a_patterns().iter().all(|pat| pat.avoids(p))
}

/// The class-membership verdicts of every predicate, with witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipReport {
    pub perm: String,
    pub n: usize,
    pub theta: String,
    pub direct: bool,
    pub theorem: bool,
    pub depth: bool,
    pub eq1: bool,
    pub arrow: bool,
    pub witnesses: Vec<Witness>,
    pub cycles: usize,
}

/// One occurrence of a violated pattern. `on` names the word searched:
/// `"perm"` for `p` itself, `"theta"` for `theta(p)`. Positions are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub pattern: String,
    pub on: String,
    pub positions: Vec<usize>,
    pub values: Vec<usize>,
}

impl MembershipReport {
    pub fn agree(&self) -> bool {
        let v = [self.theorem, self.depth, self.eq1, self.arrow];
        v.iter().all(|&x| x == self.direct)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn witness(pattern: String, on: &str, word: &Permutation, positions: Vec<usize>) -> Witness {
    let values = positions.iter().map(|&i| word.at(i)).collect();
    Witness {
        pattern,
        on: on.into(),
        positions,
        values,
    }
}

/// Runs all five predicates and collects one witness per violated pattern.
pub fn explain(p: &Permutation) -> MembershipReport {
    let hat = p.theta();
    let mut witnesses = Vec::new();
    if let Some(pos) = p.find_321() {
        witnesses.push(witness("321".into(), "perm", p, pos.to_vec()));
    }
    if hat.at(1) == p.size() {
        for pat in catalog::theorem_patterns() {
            if let Some(pos) = pat.first_occurrence(&hat) {
                witnesses.push(witness(pat.to_string(), "theta", &hat, pos));
            }
        }
        let arrow = PatternTerm::parse(catalog::ARROW_231).expect("catalog pattern");
        if let Some(pos) = arrow.first_occurrence(&hat) {
            witnesses.push(witness(arrow.to_string(), "theta", &hat, pos));
        }
    }
    MembershipReport {
        perm: p.to_string(),
        n: p.size(),
        theta: hat.to_string(),
        direct: is_member_direct(p),
        theorem: is_member_theorem(p),
        depth: is_member_depth(p),
        eq1: is_member_eq1(p),
        arrow: is_member_arrow(p),
        witnesses,
        cycles: p.cycle_count(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    type Predicate = fn(&Permutation) -> bool;
    const ALL: [(&str, Predicate); 5] = [
        ("direct", is_member_direct),
        ("theorem", is_member_theorem),
        ("depth", is_member_depth),
        ("eq1", is_member_eq1),
        ("arrow", is_member_arrow),
    ];

    #[test]
    fn verdicts_on_examples() {
        for (name, f) in ALL {
            assert!(f(&p("2341")), "{name} on 2341");
            assert!(!f(&p("3421")), "{name} on 3421");
            assert!(!f(&p("123")), "{name} on 123");
            assert!(!f(&p("964572813")), "{name} on 964572813");
            assert!(!f(&Permutation::identity(5)), "{name} on identity");
        }
        // dp = (3-1) + (4-2), five inverted pairs
        assert_eq!(p("3421").depth(), 4);
        assert_eq!(p("3421").inversions(), 5);
    }

    #[test]
    fn a_membership() {
        let members: Vec<String> = Permutation::all(3)
            .filter(in_a)
            .map(|q| q.to_string())
            .collect();
        assert_eq!(members, ["123", "213", "312", "321"]);
        for n in 1..=9 {
            assert!(in_a(&Permutation::identity(n)));
        }
        assert!(in_a(&p("7531642")));
    }

    #[test]
    fn explain_reports() {
        let r = explain(&p("3421"));
        assert!(!r.direct && !r.theorem);
        assert_eq!(r.theta, "4132");
        let w321 = r.witnesses.iter().find(|w| w.pattern == "321").unwrap();
        assert_eq!(w321.values, vec![3, 2, 1]);
        assert_eq!(w321.positions, vec![1, 3, 4]);
        let w = r
            .witnesses
            .iter()
            .find(|w| w.pattern == "[41][32]")
            .unwrap();
        assert_eq!(w.on, "theta");
        assert_eq!(w.values, vec![4, 1, 3, 2]);

        let r = explain(&p("2341"));
        assert!(r.direct && r.theorem && r.depth && r.eq1 && r.arrow);
        assert!(r.witnesses.is_empty());
        assert_eq!(r.cycles, 1);

        let r = explain(&p("123"));
        assert!(!r.direct);
        assert_eq!(r.cycles, 3);
        assert!(r.agree());
    }

    #[test]
    fn report_json_fields() {
        let v: serde_json::Value = serde_json::from_str(&explain(&p("2341")).to_json()).unwrap();
        for key in [
            "perm",
            "n",
            "direct",
            "theorem",
            "depth",
            "eq1",
            "arrow",
            "witnesses",
            "cycles",
        ] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert_eq!(v["perm"], "2341");
    }
}
