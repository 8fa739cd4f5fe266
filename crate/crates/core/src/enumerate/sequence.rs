//! Integer sequence tables for `c_n = |C_n(321)|`, `a_n = |A_n|` and the
//! simple counts `s_n`, and the recurrences that tie them together:
//!
//! ```text
//! c_n = a_{n-1}                       (n >= 2)
//! a_n = sum_{i=2}^{n} s_i a_{n-i+1}   (a_1 = 1)
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SeqName {
    C,
    A,
    S,
}

impl SeqName {
    pub const ALL: [SeqName; 3] = [SeqName::C, SeqName::A, SeqName::S];

    /// Smallest index the sequence is defined at.
    pub fn base_index(self) -> usize {
        match self {
            SeqName::C | SeqName::A => 1,
            SeqName::S => 2,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            SeqName::C => "c",
            SeqName::A => "a",
            SeqName::S => "s",
        }
    }
}

impl fmt::Display for SeqName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SeqName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "c" => Ok(SeqName::C),
            "a" => Ok(SeqName::A),
            "s" => Ok(SeqName::S),
            other => Err(Error::Domain(format!(
                "unknown sequence {other:?}, expected c, a or s"
            ))),
        }
    }
}

/// Where a table entry came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Enumerated,
    Recurrence,
    PaperTable,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Enumerated => "enumerated",
            Provenance::Recurrence => "recurrence",
            Provenance::PaperTable => "paper-table",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Provenance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "enumerated" => Ok(Provenance::Enumerated),
            "recurrence" => Ok(Provenance::Recurrence),
            "paper-table" => Ok(Provenance::PaperTable),
            other => Err(Error::Domain(format!("unknown provenance {other:?}"))),
        }
    }
}

/// Values of one sequence by index, each tagged with its provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceTable {
    name: SeqName,
    entries: BTreeMap<usize, (BigInt, Provenance)>,
}

impl SequenceTable {
    pub fn new(name: SeqName) -> Self {
        SequenceTable {
            name,
            entries: BTreeMap::new(),
        }
    }

    /// Consecutive values starting at the sequence's base index.
    pub fn from_values<V: Into<BigInt>>(
        name: SeqName,
        values: impl IntoIterator<Item = V>,
        provenance: Provenance,
    ) -> Self {
        let base = name.base_index();
        let entries = values
            .into_iter()
            .enumerate()
            .map(|(i, v)| (base + i, (v.into(), provenance)))
            .collect();
        SequenceTable { name, entries }
    }

    pub fn name(&self) -> SeqName {
        self.name
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, n: usize) -> Option<&BigInt> {
        self.entries.get(&n).map(|(v, _)| v)
    }

    /// Like [`get`](Self::get) but a missing index is a domain error.
    pub fn require(&self, n: usize) -> Result<&BigInt> {
        self.get(n)
            .ok_or_else(|| Error::Domain(format!("{}_{n} is not in the table", self.name)))
    }

    pub fn provenance(&self, n: usize) -> Option<Provenance> {
        self.entries.get(&n).map(|&(_, p)| p)
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.keys().next_back().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigInt, Provenance)> {
        self.entries.iter().map(|(&n, (v, p))| (n, v, *p))
    }

    /// Indices run without gaps from the base index.
    pub fn is_contiguous(&self) -> bool {
        let base = self.name.base_index();
        self.entries.keys().enumerate().all(|(i, &n)| n == base + i)
    }

    /// Entries with index at most `n_max`.
    pub fn truncated(&self, n_max: usize) -> SequenceTable {
        SequenceTable {
            name: self.name,
            entries: self
                .entries
                .range(..=n_max)
                .map(|(&n, e)| (n, e.clone()))
                .collect(),
        }
    }

    /// Adds one entry. A different value already stored at `n` is a
    /// conflict; an equal value keeps the stronger provenance, with
    /// `enumerated` outranking the others.
    pub fn insert(
        &mut self,
        n: usize,
        value: impl Into<BigInt>,
        provenance: Provenance,
    ) -> Result<()> {
        if n < self.name.base_index() {
            return Err(Error::Domain(format!(
                "{}_{n} is below the base index {}",
                self.name,
                self.name.base_index()
            )));
        }
        let value = value.into();
        match self.entries.get_mut(&n) {
            None => {
                self.entries.insert(n, (value, provenance));
            }
            Some((old, old_prov)) => {
                if *old != value {
                    return Err(Error::Cache(format!(
                        "conflict at {}_{n}: stored {old} ({old_prov}), new {value} ({provenance})",
                        self.name
                    )));
                }
                if provenance == Provenance::Enumerated {
                    *old_prov = provenance;
                }
            }
        }
        Ok(())
    }

    /// Inserts every entry of `other`, failing on the first conflict.
    pub fn merge(&mut self, other: &SequenceTable) -> Result<()> {
        if other.name != self.name {
            return Err(Error::Domain(format!(
                "cannot merge {} into {}",
                other.name, self.name
            )));
        }
        for (n, v, p) in other.iter() {
            self.insert(n, v.clone(), p)?;
        }
        Ok(())
    }
}

/// Published simple counts `s_2..=s_23`.
pub const TABLE1_S: [u64; 22] = [
    2, 0, 2, 0, 10, 6, 56, 94, 406, 1000, 3656, 10478, 35950, 112834, 378818, 1240626, 4180576,
    14003702, 47592074, 161888174, 555182652, 1910032910,
];

/// [`TABLE1_S`] as an `s` table tagged `paper-table`.
pub fn table1() -> SequenceTable {
    SequenceTable::from_values(SeqName::S, TABLE1_S, Provenance::PaperTable)
}

fn require_kind(t: &SequenceTable, name: SeqName) -> Result<()> {
    if t.name() != name {
        return Err(Error::Domain(format!(
            "expected a {name} table, got {}",
            t.name()
        )));
    }
    Ok(())
}

/// `a_1..=a_{n_max}` from `s_2..=s_{n_max}`.
pub fn a_from_s(s: &SequenceTable, n_max: usize) -> Result<SequenceTable> {
    require_kind(s, SeqName::S)?;
    let mut a: Vec<BigInt> = vec![BigInt::from(0), BigInt::from(1)];
    for n in 2..=n_max {
        let mut sum = BigInt::from(0);
        for i in 2..=n {
            sum += s.require(i)? * &a[n - i + 1];
        }
        a.push(sum);
    }
    let values = a.into_iter().skip(1).take(n_max);
    Ok(SequenceTable::from_values(
        SeqName::A,
        values,
        Provenance::Recurrence,
    ))
}

/// `c_1 = 1` and `c_n = a_{n-1}`; provenance is carried over.
pub fn c_from_a(a: &SequenceTable) -> Result<SequenceTable> {
    require_kind(a, SeqName::A)?;
    let mut c = SequenceTable::new(SeqName::C);
    if let Some(p) = a.provenance(1) {
        c.insert(1, 1, p)?;
    }
    for (n, v, p) in a.iter() {
        c.insert(n + 1, v.clone(), p)?;
    }
    Ok(c)
}

/// Inverts the `a`-recurrence: `s_n = a_n - sum_{i=2}^{n-1} s_i a_{n-i+1}`.
pub fn s_from_recurrence(a: &SequenceTable) -> Result<SequenceTable> {
    require_kind(a, SeqName::A)?;
    if !a.is_contiguous() {
        return Err(Error::Domain("a table has gaps".into()));
    }
    if a.get(1).is_some_and(|v| *v != BigInt::from(1)) {
        return Err(Error::Domain("a_1 must be 1".into()));
    }
    let top = a.max_index().unwrap_or(0);
    let mut s = SequenceTable::new(SeqName::S);
    for n in 2..=top {
        let mut v = a.require(n)?.clone();
        for i in 2..n {
            v -= s.require(i)? * a.require(n - i + 1)?;
        }
        s.insert(n, v, Provenance::Recurrence)?;
    }
    Ok(s)
}

/// Which side of the recurrence check failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RecurrenceForm {
    /// `a_n = sum s_i a_{n-i+1}`.
    Direct,
    /// `a_n = t_{n-1}` with `t_m = sum_j s_{j+1} t_{m-j}`, `t_0 = 1`.
    Composition,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceFailure {
    pub n: usize,
    pub form: RecurrenceForm,
    /// The stored `a_n`, if present.
    pub stored: Option<BigInt>,
    /// The value the recurrence gives, if every term was present.
    pub computed: Option<BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceCheck {
    pub n_max: usize,
    pub first_failure: Option<RecurrenceFailure>,
}

impl RecurrenceCheck {
    pub fn holds(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Checks both forms of the `a`-recurrence for `2 <= n <= n_max`.
pub fn verify_recurrence(a: &SequenceTable, s: &SequenceTable, n_max: usize) -> RecurrenceCheck {
    let fail = |n, form, computed: Option<BigInt>| RecurrenceCheck {
        n_max,
        first_failure: Some(RecurrenceFailure {
            n,
            form,
            stored: a.get(n).cloned(),
            computed,
        }),
    };
    if a.get(1) != Some(&BigInt::from(1)) {
        return fail(1, RecurrenceForm::Direct, Some(BigInt::from(1)));
    }
    let mut t: Vec<BigInt> = vec![BigInt::from(1)];
    for n in 2..=n_max {
        let direct: Option<BigInt> = (2..=n).map(|i| Some(s.get(i)? * a.get(n - i + 1)?)).sum();
        if direct.is_none() || a.get(n) != direct.as_ref() {
            return fail(n, RecurrenceForm::Direct, direct);
        }
        let m = n - 1;
        let conv: Option<BigInt> = (1..=m).map(|j| Some(s.get(j + 1)? * &t[m - j])).sum();
        let Some(conv) = conv else {
            return fail(n, RecurrenceForm::Composition, None);
        };
        if a.get(n) != Some(&conv) {
            return fail(n, RecurrenceForm::Composition, Some(conv));
        }
        t.push(conv);
    }
    RecurrenceCheck {
        n_max,
        first_failure: None,
    }
}

/// Every composition `(k_1, ..., k_r)` of `m` with its weight
/// `s_{k_1+1} ... s_{k_r+1}`; the weights sum to `a_{m+1}`.
pub fn composition_terms(s: &SequenceTable, m: usize) -> Result<Vec<(Vec<usize>, BigInt)>> {
    if m == 0 {
        return Ok(vec![(Vec::new(), BigInt::from(1))]);
    }
    if m > 24 {
        return Err(Error::Domain(format!(
            "{m} has too many compositions to list"
        )));
    }
    let mut out = Vec::with_capacity(1 << (m - 1));
    // Bit g of `cuts` set means a part ends after unit g + 1.
    for cuts in 0u32..1 << (m - 1) {
        let mut parts = Vec::new();
        let mut len = 1;
        for g in 0..m - 1 {
            if cuts >> g & 1 == 1 {
                parts.push(len);
                len = 1;
            } else {
                len += 1;
            }
        }
        parts.push(len);
        let mut weight = BigInt::from(1);
        for &k in &parts {
            weight *= s.require(k + 1)?;
        }
        out.push((parts, weight));
    }
    out.sort();
    Ok(out)
}
