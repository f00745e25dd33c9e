//! Exact integer sequences, the binomial transform, and the embedded reference rows.
//!
//! A [`Sequence`] is a finite prefix `a(0), a(1), …` of exact integers. The
//! binomial transform maps `a` to `n ↦ Σ_i C(n,i)·a(i)`; its `k`-th power is
//! the `k`-fold composition and negative `k` applies the inverse
//! `n ↦ Σ_i (-1)^(n-i)·C(n,i)·a(i)` that many times.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// First octant sequence (G2 excursions).
pub const A059710: &str = "A059710";
/// Second octant sequence (height-2 hesitating tableaux).
pub const A108307: &str = "A108307";
/// Third octant sequence.
pub const A108304: &str = "A108304";
/// Quadrant sequences, in the order of the kernel parameter k = 0..=3.
pub const A151366: &str = "A151366";
pub const A236408: &str = "A236408";
pub const A001181: &str = "A001181";
pub const A216947: &str = "A216947";

pub const OCTANT_TAGS: [&str; 3] = [A059710, A108307, A108304];
pub const QUADRANT_TAGS: [&str; 4] = [A151366, A236408, A001181, A216947];

/// A named, finite, gap-free prefix of an integer sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Sequence {
    tag: String,
    terms: Vec<BigInt>,
}

impl Sequence {
    pub fn new(tag: impl Into<String>, terms: Vec<BigInt>) -> Self {
        Self {
            tag: tag.into(),
            terms,
        }
    }

    pub fn from_i64(tag: impl Into<String>, terms: &[i64]) -> Self {
        Self::new(tag, terms.iter().map(|&t| BigInt::from(t)).collect())
    }

    pub fn tag(&self) -> &str {
        &self.tag
    }

    pub fn terms(&self) -> &[BigInt] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<BigInt> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, n: usize) -> Option<&BigInt> {
        self.terms.get(n)
    }

    pub fn with_tag(mut self, tag: impl Into<String>) -> Self {
        self.tag = tag.into();
        self
    }

    /// The first `len` terms (or all of them, if there are fewer).
    pub fn prefix(&self, len: usize) -> Sequence {
        Sequence::new(self.tag.clone(), self.terms[..len.min(self.len())].to_vec())
    }

    /// Renders the OEIS b-file form: one `"n a(n)"` line per term, `n` from 0.
    pub fn to_bfile(&self) -> String {
        let mut out = String::new();
        for (n, term) in self.terms.iter().enumerate() {
            writeln!(out, "{n} {term}").expect("writing to a String cannot fail");
        }
        out
    }

    /// Parses a b-file. Indices must be contiguous from 0; a single trailing
    /// newline is accepted, blank lines and comments are not.
    pub fn from_bfile(tag: impl Into<String>, text: &str) -> Result<Sequence> {
        let body = text.strip_suffix('\n').unwrap_or(text);
        let mut terms = Vec::new();
        if body.is_empty() {
            return Ok(Sequence::new(tag, terms));
        }
        for (i, line) in body.split('\n').enumerate() {
            let line_no = i + 1;
            let line = line.strip_suffix('\r').unwrap_or(line);
            let parse_err = |message: String| Error::Parse {
                line: line_no,
                message,
            };
            let mut fields = line.split_ascii_whitespace();
            let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next())
            else {
                return Err(parse_err(format!("expected `n a(n)`, found {line:?}")));
            };
            let index: usize = index
                .parse()
                .map_err(|_| parse_err(format!("bad index {index:?}")))?;
            if index != terms.len() {
                return Err(parse_err(format!(
                    "expected index {}, found {index}",
                    terms.len()
                )));
            }
            let value: BigInt = value
                .parse()
                .map_err(|_| parse_err(format!("bad term {value:?}")))?;
            terms.push(value);
        }
        Ok(Sequence::new(tag, terms))
    }
}

/// Applies the binomial transform `k` times (the inverse transform `|k|`
/// times when `k < 0`). The result has the same length as `s`.
pub fn binomial_transform(s: &Sequence, k: i64) -> Result<Sequence> {
    if s.is_empty() {
        return Err(Error::EmptySequence);
    }
    let tag = if k == 0 {
        s.tag.clone()
    } else {
        format!("bt^{k}({})", s.tag)
    };
    let rounds = k.unsigned_abs() as usize;
    let inverse = k < 0;
    let len = s.len();

    // stages[0] is the input, stages[r] the r-fold transform. Term n of every
    // stage only needs terms 0..=n of the previous one, so all stages advance
    // together while a single Pascal row is kept.
    let mut stages: Vec<Vec<BigInt>> = vec![s.terms.clone()];
    stages.extend((0..rounds).map(|_| Vec::with_capacity(len)));
    let mut row: Vec<BigInt> = Vec::with_capacity(len);
    for n in 0..len {
        row.push(BigInt::one());
        for i in (1..n).rev() {
            let prev = row[i - 1].clone();
            row[i] += prev;
        }
        for r in 1..=rounds {
            let mut acc = BigInt::zero();
            for (i, c) in row.iter().enumerate() {
                let term = c * &stages[r - 1][i];
                if inverse && (n - i) % 2 == 1 {
                    acc -= term;
                } else {
                    acc += term;
                }
            }
            stages[r].push(acc);
        }
    }
    Ok(Sequence::new(
        tag,
        stages.pop().expect("at least one stage"),
    ))
}

/// Length of the longest common prefix of the two term lists.
pub fn compare_prefix(a: &Sequence, b: &Sequence) -> usize {
    a.terms
        .iter()
        .zip(&b.terms)
        .take_while(|(x, y)| x == y)
        .count()
}

/// Published term prefixes of the octant and quadrant families, keyed by OEIS tag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReferenceTable {
    rows: BTreeMap<String, Sequence>,
}

impl ReferenceTable {
    /// The seven rows exactly as originally printed.
    ///
    /// The A216947 row disagrees with every computational route from index 3
    /// on (they give 1, 3, 11, 47, 225, 1173); it is kept verbatim so the
    /// disagreement stays visible in verification reports.
    pub fn published() -> Self {
        let rows: [(&str, &[i64]); 7] = [
            (A059710, &[1, 0, 1, 1, 4, 10, 35, 120, 455, 1792]),
            (A108307, &[1, 1, 2, 5, 15, 51, 191, 772, 3320, 15032]),
            (A108304, &[1, 2, 5, 15, 52, 202, 859, 3930, 19095, 97566]),
            (A151366, &[1, 0, 2, 2, 12, 30]),
            (A236408, &[1, 1, 3, 9, 33, 131]),
            (A001181, &[1, 2, 6, 22, 92, 422]),
            (A216947, &[1, 3, 11, 49, 221, 1113]),
        ];
        let mut table = Self::empty();
        for (tag, terms) in rows {
            table.insert(Sequence::from_i64(tag, terms));
        }
        table
    }

    pub fn empty() -> Self {
        Self {
            rows: BTreeMap::new(),
        }
    }

    /// Inserts or replaces the row for `row.tag()`.
    pub fn insert(&mut self, row: Sequence) {
        self.rows.insert(row.tag.clone(), row);
    }

    pub fn get(&self, tag: &str) -> Result<&Sequence> {
        self.rows.get(tag).ok_or_else(|| Error::UnknownTag {
            tag: tag.to_owned(),
            known: self.tags().collect::<Vec<_>>().join(", "),
        })
    }

    pub fn tags(&self) -> impl Iterator<Item = &str> {
        self.rows.keys().map(String::as_str)
    }

    pub fn rows(&self) -> impl Iterator<Item = &Sequence> {
        self.rows.values()
    }
}

impl Default for ReferenceTable {
    fn default() -> Self {
        Self::published()
    }
}

/// Published prefix for `tag`.
pub fn reference(tag: &str) -> Result<Sequence> {
    ReferenceTable::published().get(tag).cloned()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn seq(terms: &[i64]) -> Sequence {
        Sequence::from_i64("s", terms)
    }

    // Direct summation, independent of the Pascal-row sweep above.
    fn naive_bt(terms: &[BigInt], sign: i64) -> Vec<BigInt> {
        fn binom(n: usize, k: usize) -> BigInt {
            (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
        }
        (0..terms.len())
            .map(|n| {
                (0..=n)
                    .map(|i| {
                        let sign = if sign < 0 && (n - i) % 2 == 1 { -1 } else { 1 };
                        binom(n, i) * &terms[i] * sign
                    })
                    .sum()
            })
            .collect()
    }

    #[test]
    fn t3_transforms_to_e3() {
        let t3 = reference(A059710).unwrap();
        let e3 = binomial_transform(&t3, 1).unwrap();
        assert_eq!(e3.terms(), reference(A108307).unwrap().terms());
    }

    #[test]
    fn e3_transforms_to_a108304() {
        let e3 = reference(A108307).unwrap();
        let out = binomial_transform(&e3, 1).unwrap();
        assert_eq!(
            out.terms(),
            seq(&[1, 2, 5, 15, 52, 202, 859, 3930, 19095, 97566]).terms()
        );
        assert_eq!(out.terms(), naive_bt(e3.terms(), 1).as_slice());
        assert_eq!(out.terms(), reference(A108304).unwrap().terms());
    }

    #[test]
    fn empty_sequence_is_rejected() {
        let err = binomial_transform(&seq(&[]), 1).unwrap_err();
        assert_eq!(err.to_string(), "empty sequence");
    }

    #[test]
    fn zero_fold_transform_is_identity() {
        let s = seq(&[3, -1, 4, 1, -5]);
        assert_eq!(binomial_transform(&s, 0).unwrap().terms(), s.terms());
    }

    #[test]
    fn all_ones_gives_powers_of_two() {
        let ones = Sequence::new("ones", vec![BigInt::one(); 80]);
        let out = binomial_transform(&ones, 1).unwrap();
        for (n, t) in out.terms().iter().enumerate() {
            assert_eq!(*t, BigInt::one() << n);
        }
    }

    #[test]
    fn reference_rows() {
        assert_eq!(
            reference(A059710).unwrap().terms(),
            seq(&[1, 0, 1, 1, 4, 10, 35, 120, 455, 1792]).terms()
        );
        assert_eq!(
            reference(A216947).unwrap().terms(),
            seq(&[1, 3, 11, 49, 221, 1113]).terms()
        );
        assert_eq!(
            reference(A151366).unwrap().terms(),
            seq(&[1, 0, 2, 2, 12, 30]).terms()
        );
        let table = ReferenceTable::published();
        assert_eq!(table.tags().count(), 7);
        for tag in OCTANT_TAGS {
            assert_eq!(table.get(tag).unwrap().len(), 10);
        }
        for tag in QUADRANT_TAGS {
            assert_eq!(table.get(tag).unwrap().len(), 6);
        }
    }

    #[test]
    fn unknown_tag_lists_known_tags() {
        let msg = reference("A000045").unwrap_err().to_string();
        assert!(msg.contains("A000045"));
        for tag in OCTANT_TAGS.iter().chain(&QUADRANT_TAGS) {
            assert!(msg.contains(tag), "{msg}");
        }
    }

    #[test]
    fn prefix_comparison() {
        assert_eq!(
            compare_prefix(&seq(&[1, 0, 1, 1]), &seq(&[1, 0, 1, 1, 4])),
            4
        );
        assert_eq!(compare_prefix(&seq(&[1, 0, 1]), &seq(&[1, 0, 2])), 2);
        assert_eq!(compare_prefix(&seq(&[]), &seq(&[1, 2])), 0);
    }

    #[test]
    fn bfile_rendering_and_parsing() {
        let s = seq(&[1, 0, -7]);
        assert_eq!(s.to_bfile(), "0 1\n1 0\n2 -7\n");
        let back = Sequence::from_bfile("s", &s.to_bfile()).unwrap();
        assert_eq!(back, s);
        assert!(Sequence::from_bfile("s", "").unwrap().is_empty());
    }

    #[test]
    fn bfile_errors_carry_line_numbers() {
        let err = Sequence::from_bfile("s", "0 1\n1 x\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 2,
                message: "bad term \"x\"".into()
            }
        );
        let err = Sequence::from_bfile("s", "0 1\n2 5\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = Sequence::from_bfile("s", "0 1\n\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = Sequence::from_bfile("s", "# header\n0 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }

    fn arb_seq() -> impl Strategy<Value = Sequence> {
        prop::collection::vec(-1000i64..1000, 1..30).prop_map(|v| seq(&v))
    }

    proptest! {
        #[test]
        fn inverse_undoes_transform(s in arb_seq(), k in 1i64..=3) {
            let there = binomial_transform(&s, k).unwrap();
            let back = binomial_transform(&there, -k).unwrap();
            prop_assert_eq!(back.terms(), s.terms());
        }

        #[test]
        fn single_transforms_compose(s in arb_seq()) {
            let once = binomial_transform(&s, 1).unwrap();
            let twice = binomial_transform(&once, 1).unwrap();
            prop_assert_eq!(twice.into_terms(), binomial_transform(&s, 2).unwrap().into_terms());
        }

        #[test]
        fn matches_direct_summation(s in arb_seq()) {
            let fwd = naive_bt(s.terms(), 1);
            let inv = naive_bt(s.terms(), -1);
            prop_assert_eq!(binomial_transform(&s, 1).unwrap().into_terms(), fwd);
            prop_assert_eq!(binomial_transform(&s, -1).unwrap().into_terms(), inv);
        }

        #[test]
        fn bfile_round_trip(s in arb_seq()) {
            let back = Sequence::from_bfile("s", &s.to_bfile()).unwrap();
            prop_assert_eq!(back, s);
        }
    }
}
