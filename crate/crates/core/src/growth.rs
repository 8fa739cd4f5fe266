//! Growth-rate analytics for `c_n`.
//!
//! Everything except the root finder and the `n`-th roots works on exact
//! integers. The root finder bisects on exact rationals, so its lower
//! endpoint is a certified lower bound for the true root.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::enumerate::sequence::{SeqName, SequenceTable};
use crate::error::{Error, Result};

/// Geometric tail `s_j >= s_{coeff_index} * base^{j - coeff_index}` assumed
/// for every index past the explicit head.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeometricTail {
    pub base: f64,
    pub coeff_index: usize,
}

/// An exact bracket `lower <= root <= upper` with `upper - lower <= tol`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootBracket {
    pub lower: BigRational,
    pub upper: BigRational,
}

impl RootBracket {
    /// The largest `f64` that does not exceed `lower`.
    pub fn value(&self) -> f64 {
        round_down(&self.lower)
    }

    pub fn upper_value(&self) -> f64 {
        let x = self.upper.to_f64().unwrap_or(f64::INFINITY);
        if rational(x) < self.upper {
            x.next_up()
        } else {
            x
        }
    }
}

fn rational(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite float")
}

fn round_down(q: &BigRational) -> f64 {
    let x = q.to_f64().unwrap_or(f64::NEG_INFINITY);
    if rational(x) > *q {
        x.next_down()
    } else {
        x
    }
}

/// Default bisection tolerance.
pub const DEFAULT_TOL: f64 = 1e-9;
const BRACKET_OFFSET: (i64, i64) = (1, 1_000_000);
const BRACKET_TOP: i64 = 8;

/// The left side minus 1 of
/// `1 = sum_{i=2}^{head_max+1} s_i r^{-(i-1)} + s_T sum_{k>=head_max+1} b^{k-(T-1)} r^{-k}`.
struct Characteristic {
    head: Vec<BigRational>,
    tail: Option<(BigRational, BigRational, i32)>,
}

impl Characteristic {
    fn new(s: &SequenceTable, head_max: usize, tail: Option<GeometricTail>) -> Result<Self> {
        if s.name() != SeqName::S {
            return Err(Error::Domain(format!(
                "expected an s table, got {}",
                s.name()
            )));
        }
        let head = (2..=head_max + 1)
            .map(|i| Ok(BigRational::from_integer(s.require(i)?.clone())))
            .collect::<Result<Vec<_>>>()?;
        let tail = match tail {
            None => None,
            Some(t) => {
                if !(t.base.is_finite() && t.base > 0.0) {
                    return Err(Error::Numeric(format!(
                        "tail base {} must be positive",
                        t.base
                    )));
                }
                let coeff = BigRational::from_integer(s.require(t.coeff_index)?.clone());
                let k = i32::try_from(head_max + 1)
                    .map_err(|_| Error::Domain("head too long".into()))?;
                let shift = i32::try_from(t.coeff_index)
                    .map_err(|_| Error::Domain("index too large".into()))?
                    - 1;
                let b = rational(t.base);
                // s_T * b^{-(T-1)} * (b/r)^K / (1 - b/r)
                let scale = coeff * b.pow(-shift);
                Some((b, scale, k))
            }
        };
        Ok(Characteristic { head, tail })
    }

    fn eval(&self, r: &BigRational) -> BigRational {
        let inv = r.recip();
        let mut power = inv.clone();
        let mut total = -BigRational::one();
        for coeff in &self.head {
            total += coeff * &power;
            power *= &inv;
        }
        if let Some((b, scale, k)) = &self.tail {
            let ratio = b / r;
            total += scale * ratio.pow(*k) / (BigRational::one() - ratio);
        }
        total
    }
}

/// Bisects the characteristic equation of a lower recurrence for `c_n`.
///
/// The head uses `s_2..=s_{head_max+1}`. The bracket is
/// `[tail_base + 1e-6, 8]` (`[1e-6, 8]` without a tail); the left side is
/// strictly decreasing there, so a sign change pins down the unique root.
pub fn lower_bound_root(
    s: &SequenceTable,
    head_max: usize,
    tail: Option<GeometricTail>,
    tol: f64,
) -> Result<RootBracket> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::Numeric(format!("tolerance {tol} must be positive")));
    }
    let f = Characteristic::new(s, head_max, tail)?;
    let offset = BigRational::new(BRACKET_OFFSET.0.into(), BRACKET_OFFSET.1.into());
    let mut lo = match &f.tail {
        Some((b, _, _)) => b + &offset,
        None => offset,
    };
    let mut hi = BigRational::from_integer(BRACKET_TOP.into());
    if lo >= hi {
        return Err(Error::Numeric("tail base leaves an empty bracket".into()));
    }
    if !f.eval(&lo).is_positive() {
        return Err(Error::Numeric(format!(
            "no root above the bracket start {}",
            round_down(&lo)
        )));
    }
    if f.eval(&hi).is_positive() {
        return Err(Error::Numeric(format!("root exceeds {BRACKET_TOP}")));
    }
    let tol = rational(tol);
    let two = BigRational::from_integer(2.into());
    while &hi - &lo > tol {
        let mid = (&lo + &hi) / &two;
        let v = f.eval(&mid);
        if v.is_zero() {
            return Ok(RootBracket {
                lower: mid.clone(),
                upper: mid,
            });
        }
        if v.is_positive() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(RootBracket {
        lower: lo,
        upper: hi,
    })
}

/// The published head `s_2..=s_23` with tail `s_{k+1} >= 2^{k-21} s_22`.
pub fn table1_lower_bound(s: &SequenceTable, tol: f64) -> Result<RootBracket> {
    lower_bound_root(
        s,
        22,
        Some(GeometricTail {
            base: 2.0,
            coeff_index: 22,
        }),
        tol,
    )
}

/// Both sides of `4c_{n-1} - c_n = -s_{n-1} + sum_{i=2}^{n-2} s_{n-i}(4c_i - c_{i+1})`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UpperIdentity {
    pub n: usize,
    #[serde(serialize_with = "as_string")]
    pub lhs: BigInt,
    #[serde(serialize_with = "as_string")]
    pub rhs: BigInt,
    pub equal: bool,
}

fn as_string<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub fn conditional_upper_identity(
    c: &SequenceTable,
    s: &SequenceTable,
    n: usize,
) -> Result<UpperIdentity> {
    if n < 3 {
        return Err(Error::Domain(format!("identity needs n >= 3, got {n}")));
    }
    let four = BigInt::from(4);
    let lhs = &four * c.require(n - 1)? - c.require(n)?;
    let mut rhs = -s.require(n - 1)?.clone();
    for i in 2..=n - 2 {
        rhs += s.require(n - i)? * (&four * c.require(i)? - c.require(i + 1)?);
    }
    let equal = lhs == rhs;
    Ok(UpperIdentity { n, lhs, rhs, equal })
}

/// First pair `(n, m)`, `n <= m`, with `c_n c_m > c_{n+m}` inside the table.
pub fn supermultiplicative_violation(c: &SequenceTable) -> Option<(usize, usize)> {
    let top = c.max_index()?;
    for n in 1..=top {
        for m in n..=top - n {
            if let (Some(x), Some(y), Some(z)) = (c.get(n), c.get(m), c.get(n + m)) {
                if x * y > *z {
                    return Some((n, m));
                }
            }
        }
    }
    None
}

pub fn supermultiplicative_check(c: &SequenceTable) -> bool {
    supermultiplicative_violation(c).is_none()
}

/// One row of [`ratio_bounds`]: whether `lo c_{n-1} <= c_n` and
/// `c_n <= hi c_{n-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RatioBound {
    pub n: usize,
    pub lower_ok: bool,
    pub upper_ok: bool,
}

pub fn ratio_bounds(c: &SequenceTable, lo: u32, hi: u32) -> Vec<RatioBound> {
    let Some(top) = c.max_index() else {
        return Vec::new();
    };
    (2..=top)
        .filter_map(|n| {
            let (prev, cur) = (c.get(n - 1)?, c.get(n)?);
            Some(RatioBound {
                n,
                lower_ok: BigInt::from(lo) * prev <= *cur,
                upper_ok: *cur <= BigInt::from(hi) * prev,
            })
        })
        .collect()
}

/// `s_n >= 4 s_{n-2}` for `n >= 5`, and the stronger `s_n >= 9 s_{n-2}`
/// for `n >= 12` (reported, not required).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FloorCheck {
    pub n: usize,
    pub four: bool,
    pub nine: Option<bool>,
}

pub fn tail_growth_floor(s: &SequenceTable) -> Vec<FloorCheck> {
    let Some(top) = s.max_index() else {
        return Vec::new();
    };
    (5..=top)
        .filter_map(|n| {
            let (cur, prev) = (s.get(n)?, s.get(n - 2)?);
            Some(FloorCheck {
                n,
                four: BigInt::from(4) * prev <= *cur,
                nine: (n >= 12).then(|| BigInt::from(9) * prev <= *cur),
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RatioEntry {
    pub n: usize,
    /// `c_n`.
    pub numerator: String,
    /// `c_{n-1}`.
    pub denominator: String,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RootEntry {
    pub n: usize,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GrowthReport {
    pub ratios: Vec<RatioEntry>,
    pub roots: Vec<RootEntry>,
    /// `max_n c_n^{1/n}`, a lower estimate of the growth rate.
    pub fekete_estimate: f64,
    /// Indices `n` where `c_n^{1/n} < c_{n-1}^{1/(n-1)}`.
    pub root_decreases: Vec<usize>,
    pub lower_bound: Option<f64>,
    pub identity_checks: Vec<(usize, bool)>,
}

fn nth_root(v: &BigInt, n: usize) -> f64 {
    let x = v.to_f64().unwrap_or(f64::INFINITY);
    x.powf(1.0 / n as f64)
}

/// Ratios `c_n / c_{n-1}`, roots `c_n^{1/n}`, and the root-monotonicity scan.
pub fn ratio_and_root_report(c: &SequenceTable) -> GrowthReport {
    let mut ratios = Vec::new();
    let mut roots = Vec::new();
    let mut root_decreases = Vec::new();
    for (n, v, _) in c.iter() {
        let root = nth_root(v, n);
        if let Some(prev) = c.get(n.wrapping_sub(1)) {
            let value = v.to_f64().unwrap_or(f64::NAN) / prev.to_f64().unwrap_or(f64::NAN);
            ratios.push(RatioEntry {
                n,
                numerator: v.to_string(),
                denominator: prev.to_string(),
                value,
            });
            if roots
                .last()
                .is_some_and(|r: &RootEntry| r.n + 1 == n && root < r.value)
            {
                root_decreases.push(n);
            }
        }
        roots.push(RootEntry { n, value: root });
    }
    let fekete_estimate = roots.iter().map(|r| r.value).fold(0.0, f64::max);
    GrowthReport {
        ratios,
        roots,
        fekete_estimate,
        root_decreases,
        lower_bound: None,
        identity_checks: Vec::new(),
    }
}

impl GrowthReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:>4}  {:>22}  {:>10}  {:>10}",
            "n", "c_n/c_(n-1)", "ratio", "root"
        );
        for root in &self.roots {
            let ratio = self.ratios.iter().find(|r| r.n == root.n);
            let frac = ratio.map_or(String::from("-"), |r| {
                format!("{}/{}", r.numerator, r.denominator)
            });
            let value = ratio.map_or(String::from("-"), |r| format!("{:.6}", r.value));
            let _ = writeln!(
                out,
                "{:>4}  {:>22}  {:>10}  {:>10.6}",
                root.n, frac, value, root.value
            );
        }
        let _ = writeln!(out, "fekete estimate: {:.6}", self.fekete_estimate);
        if !self.root_decreases.is_empty() {
            let _ = writeln!(out, "root decreases at: {:?}", self.root_decreases);
        }
        if let Some(lb) = self.lower_bound {
            let _ = writeln!(out, "lower bound: {lb:.9}");
        }
        for (n, ok) in &self.identity_checks {
            let _ = writeln!(
                out,
                "upper identity n={n}: {}",
                if *ok { "holds" } else { "fails" }
            );
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::sequence::{a_from_s, c_from_a, table1, Provenance};

    fn s_only(values: &[u64]) -> SequenceTable {
        SequenceTable::from_values(SeqName::S, values.iter().copied(), Provenance::PaperTable)
    }

    fn c_enumerated() -> SequenceTable {
        SequenceTable::from_values(
            SeqName::C,
            [1u64, 1, 2, 4, 10, 24, 66, 178],
            Provenance::Enumerated,
        )
    }

    #[test]
    fn one_term_roots() {
        let r = lower_bound_root(&s_only(&[2]), 1, None, 1e-9).unwrap();
        assert!((r.value() - 2.0).abs() < 1e-9 && r.value() <= 2.0);
        let r = lower_bound_root(&s_only(&[4]), 1, None, 1e-9).unwrap();
        assert!((r.value() - 4.0).abs() < 1e-9 && r.value() <= 4.0);
    }

    #[test]
    fn published_lower_bound() {
        let r = table1_lower_bound(&table1(), 1e-9).unwrap();
        assert!((r.value() - 3.14101).abs() < 1e-5, "{}", r.value());
        assert!(r.upper_value() - r.value() <= 1e-9 + f64::EPSILON * 8.0);
    }

    #[test]
    fn coarser_tolerance_never_raises_the_bound() {
        let s = table1();
        let mut last = f64::INFINITY;
        for tol in [1e-12, 1e-9, 1e-6, 1e-3, 1e-1] {
            let v = table1_lower_bound(&s, tol).unwrap().value();
            assert!(v <= last);
            last = v;
        }
    }

    #[test]
    fn bracket_failures() {
        let tail = GeometricTail {
            base: 9.0,
            coeff_index: 2,
        };
        assert!(matches!(
            lower_bound_root(&s_only(&[2]), 1, Some(tail), 1e-6),
            Err(Error::Numeric(_))
        ));
        assert!(matches!(
            lower_bound_root(&s_only(&[20]), 1, None, 1e-6),
            Err(Error::Numeric(_))
        ));
        assert!(lower_bound_root(&s_only(&[2]), 1, None, 0.0).is_err());
        assert!(lower_bound_root(&s_only(&[2]), 3, None, 1e-6).is_err());
    }

    #[test]
    fn upper_identity_small_n() {
        let s = table1();
        let c = c_from_a(&a_from_s(&s, 22).unwrap()).unwrap();
        let five = conditional_upper_identity(&c, &s, 5).unwrap();
        assert_eq!(
            (five.lhs.clone(), five.rhs.clone()),
            (BigInt::from(6), BigInt::from(6))
        );
        let three = conditional_upper_identity(&c, &s, 3).unwrap();
        assert_eq!(
            (three.lhs, three.rhs, three.equal),
            (BigInt::from(2), BigInt::from(-2), false)
        );
        for n in 4..=23 {
            assert!(
                conditional_upper_identity(&c, &s, n).unwrap().equal,
                "n = {n}"
            );
        }
        assert!(conditional_upper_identity(&c, &s, 24).is_err());
    }

    #[test]
    fn supermultiplicativity() {
        assert!(supermultiplicative_check(&c_enumerated()));
        let single = SequenceTable::from_values(SeqName::C, [1u64], Provenance::Enumerated);
        assert!(supermultiplicative_check(&single));
        let bad = SequenceTable::from_values(
            SeqName::C,
            [1u64, 1, 2, 4, 10, 24, 66, 50],
            Provenance::Enumerated,
        );
        assert_eq!(supermultiplicative_violation(&bad), Some((1, 7)));
    }

    #[test]
    fn report_and_floors() {
        let report = ratio_and_root_report(&c_enumerated());
        let last = report.ratios.last().unwrap();
        assert_eq!(
            (last.numerator.as_str(), last.denominator.as_str()),
            ("178", "66")
        );
        assert!(report.root_decreases.is_empty());
        assert!(report.to_text().contains("178/66"));
        let v: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        assert!(v["ratios"].is_array());

        let floors = tail_growth_floor(&table1());
        assert!(floors.iter().all(|f| f.four));
        assert_eq!(floors.first().unwrap().n, 5);
        let f23 = floors.iter().find(|f| f.n == 23).unwrap();
        assert!(f23.nine.is_some());
        assert!(floors.iter().filter(|f| f.n < 12).all(|f| f.nine.is_none()));
    }
}
