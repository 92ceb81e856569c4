//! Superpartitions `Λ = (Λᵃ; Λˢ)` and their diagram combinatorics.
//!
//! A superpartition pairs a strictly decreasing sequence of non-negative
//! integers `Λᵃ` (the fermionic parts, possibly ending in 0) with an ordinary
//! partition `Λˢ` (the bosonic parts).  Two ordinary partitions are derived
//! from it:
//!
//! * `star(Λ)`  — all parts merged and sorted, zeros dropped;
//! * `circled(Λ)` — the same with every fermionic part raised by one.
//!
//! The diagram of `Λ` is the diagram of `circled(Λ)` whose cells outside
//! `star(Λ)` are drawn as circles; circles occupy distinct rows and columns.
//! The number of circles is the fermionic degree `m(Λ)`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::Rat;
use num_rational::BigRational;
use num_traits::One;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum SuperPartitionError {
    #[error("antisymmetric parts must be strictly decreasing: {0:?}")]
    NotStrictlyDecreasing(Vec<u32>),
    #[error("symmetric parts must be weakly decreasing: {0:?}")]
    NotWeaklyDecreasing(Vec<u32>),
    #[error("symmetric parts must be positive (zeros are not stored): {0:?}")]
    ZeroSymmetricPart(Vec<u32>),
}

/// Parse failure for the text form `"a1,a2,...;s1,s2,..."`.
#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum ParseSuperPartitionError {
    #[error("missing ';' separator in superpartition string")]
    MissingSeparator,
    #[error("invalid integer at byte {position}: {text:?}")]
    InvalidInteger { position: usize, text: String },
    #[error(transparent)]
    Invalid(#[from] SuperPartitionError),
}

/// A superpartition `(Λᵃ; Λˢ)`.
///
/// Validation is eager: constructors reject malformed input instead of
/// normalizing, because the circle positions of the diagram depend on exact
/// part placement.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SuperPartition {
    #[serde(rename = "a")]
    antisymmetric: Vec<u32>,
    #[serde(rename = "s")]
    symmetric: Vec<u32>,
}

impl SuperPartition {
    pub fn new(
        antisymmetric: Vec<u32>,
        symmetric: Vec<u32>,
    ) -> Result<Self, SuperPartitionError> {
        if antisymmetric.windows(2).any(|w| w[0] <= w[1]) {
            return Err(SuperPartitionError::NotStrictlyDecreasing(antisymmetric));
        }
        if symmetric.windows(2).any(|w| w[0] < w[1]) {
            return Err(SuperPartitionError::NotWeaklyDecreasing(symmetric));
        }
        if symmetric.contains(&0) {
            return Err(SuperPartitionError::ZeroSymmetricPart(symmetric));
        }
        Ok(Self {
            antisymmetric,
            symmetric,
        })
    }

    /// The empty superpartition `(;)`.
    pub fn empty() -> Self {
        Self {
            antisymmetric: Vec::new(),
            symmetric: Vec::new(),
        }
    }

    pub fn antisymmetric_parts(&self) -> &[u32] {
        &self.antisymmetric
    }

    pub fn symmetric_parts(&self) -> &[u32] {
        &self.symmetric
    }

    /// Fermionic degree `m(Λ)`: the number of antisymmetric parts.
    pub fn fermionic_degree(&self) -> usize {
        self.antisymmetric.len()
    }

    /// Total degree `|Λ|`: the sum of all parts.
    pub fn total_degree(&self) -> u32 {
        self.antisymmetric.iter().sum::<u32>() + self.symmetric.iter().sum::<u32>()
    }

    pub fn is_empty(&self) -> bool {
        self.antisymmetric.is_empty() && self.symmetric.is_empty()
    }

    /// `Λ*`: all parts sorted non-increasingly, zeros dropped.
    pub fn star(&self) -> Vec<u32> {
        let mut parts: Vec<u32> = self
            .antisymmetric
            .iter()
            .chain(self.symmetric.iter())
            .copied()
            .filter(|&p| p > 0)
            .collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts
    }

    /// `Λ⊛`: parts of `Λᵃ + 1` and `Λˢ` sorted non-increasingly.
    pub fn circled(&self) -> Vec<u32> {
        let mut parts: Vec<u32> = self
            .antisymmetric
            .iter()
            .map(|&a| a + 1)
            .chain(self.symmetric.iter().copied())
            .collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts
    }

    /// Diagram rows in display order: `(star length, has circle)` per row.
    ///
    /// Rows are ordered by `(star, circled)` descending, which is the unique
    /// order making both `Λ*` and `Λ⊛` weakly decreasing.  A trailing
    /// fermionic 0-part appears as a `(0, true)` row.
    pub fn rows(&self) -> Vec<DiagramRow> {
        let mut rows: Vec<DiagramRow> = self
            .antisymmetric
            .iter()
            .map(|&a| DiagramRow {
                star: a,
                fermionic: true,
            })
            .chain(self.symmetric.iter().map(|&s| DiagramRow {
                star: s,
                fermionic: false,
            }))
            .collect();
        rows.sort_by_key(|row| std::cmp::Reverse((row.star, row.circled())));
        rows
    }

    /// `ε_i = circled(Λ)_i − star(Λ)_i ∈ {0,1}` for row `i` (1-based), with a
    /// trailing fermionic 0-part contributing an extra index.
    pub fn epsilon(&self, i: usize) -> Result<u8, IndexOutOfRange> {
        let rows = self.rows();
        if i == 0 || i > rows.len() {
            return Err(IndexOutOfRange {
                index: i,
                rows: rows.len(),
            });
        }
        Ok(rows[i - 1].fermionic as u8)
    }

    /// Circle positions `(row, column)`, 1-based, in row order.
    pub fn circle_positions(&self) -> Vec<(usize, u32)> {
        self.rows()
            .iter()
            .enumerate()
            .filter(|(_, r)| r.fermionic)
            .map(|(i, r)| (i + 1, r.star + 1))
            .collect()
    }

    /// Rebuild a superpartition from diagram rows (any order).
    pub fn from_rows(rows: &[DiagramRow]) -> Result<Self, SuperPartitionError> {
        let mut a: Vec<u32> = rows
            .iter()
            .filter(|r| r.fermionic)
            .map(|r| r.star)
            .collect();
        let mut s: Vec<u32> = rows
            .iter()
            .filter(|r| !r.fermionic)
            .map(|r| r.star)
            .collect();
        a.sort_unstable_by(|x, y| y.cmp(x));
        s.sort_unstable_by(|x, y| y.cmp(x));
        if s.contains(&0) {
            // zero bosonic rows carry no cells; drop them
            s.retain(|&p| p > 0);
        }
        Self::new(a, s)
    }

    /// The superpartition left after removing the first diagram row.
    pub fn remove_first_row(&self) -> Option<(DiagramRow, Self)> {
        let rows = self.rows();
        let (first, rest) = rows.split_first()?;
        let tail = Self::from_rows(rest).expect("tail of a valid diagram is valid");
        Some((*first, tail))
    }

    /// Conjugate superpartition: transpose of both `Λ*` and `Λ⊛`.
    pub fn conjugate(&self) -> Self {
        let star_t = transpose(&self.star());
        let circ_t = transpose(&self.circled());
        let mut a = Vec::new();
        let mut s = Vec::new();
        for (i, &ci) in circ_t.iter().enumerate() {
            let st = star_t.get(i).copied().unwrap_or(0);
            if ci == st + 1 {
                a.push(st);
            } else {
                debug_assert_eq!(ci, st);
                s.push(st);
            }
        }
        Self::new(a, s).expect("conjugate of a valid superpartition is valid")
    }

    /// Weight `𝗓_Λ = (−1)^binom(m,2) · |Aut(Λˢ)| / Π_i Λˢ_i`.
    pub fn z_weight(&self) -> PartitionWeight {
        let m = self.fermionic_degree();
        let sign_exponent = (m * m.saturating_sub(1) / 2) % 2;
        let mut value: BigRational = aut_order(&self.symmetric);
        for &p in &self.symmetric {
            value /= BigRational::from_integer(p.into());
        }
        if sign_exponent == 1 {
            value = -value;
        }
        PartitionWeight {
            value,
            sign_exponent: sign_exponent as u8,
        }
    }

    /// All superpartitions of total degree `n` and fermionic degree `m`, in
    /// canonical order.
    pub fn enumerate(n: u32, m: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for a in strict_decreasing_tuples(n, m) {
            let used: u32 = a.iter().sum();
            for s in partitions_of(n - used) {
                out.push(Self::new(a.clone(), s).expect("generated parts are valid"));
            }
        }
        out.sort();
        out
    }

    /// All superpartitions with `total ≤ n` and `m ≤ max_fermionic`.
    pub fn enumerate_up_to(n: u32, max_fermionic: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for total in 0..=n {
            for m in 0..=max_fermionic {
                out.extend(Self::enumerate(total, m));
            }
        }
        out
    }
}

/// One diagram row: its `Λ*` length and whether it ends with a circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiagramRow {
    pub star: u32,
    pub fermionic: bool,
}

impl DiagramRow {
    pub fn circled(&self) -> u32 {
        self.star + self.fermionic as u32
    }
}

#[derive(Debug, Error, PartialEq, Eq, Clone)]
#[error("row index {index} out of range (diagram has {rows} rows)")]
pub struct IndexOutOfRange {
    pub index: usize,
    pub rows: usize,
}

/// The weight `𝗓_Λ` together with its sign exponent `binom(m,2) mod 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionWeight {
    pub value: Rat,
    pub sign_exponent: u8,
}

/// `|Aut(λ)| = Π_i n_i!` for `λ = (1^{n₁}, 2^{n₂}, …)`, as a rational.
pub fn aut_order(parts: &[u32]) -> Rat {
    let mut value = BigRational::one();
    let mut run = 1u64;
    for i in 1..=parts.len() {
        if i < parts.len() && parts[i] == parts[i - 1] {
            run += 1;
            value *= BigRational::from_integer(run.into());
        } else {
            run = 1;
        }
    }
    value
}

/// Transpose of a partition given as a non-increasing sequence.
pub fn transpose(parts: &[u32]) -> Vec<u32> {
    let cols = parts.first().copied().unwrap_or(0) as usize;
    (1..=cols)
        .map(|c| parts.iter().filter(|&&p| p as usize >= c).count() as u32)
        .collect()
}

/// All partitions of `n` (non-increasing, positive parts).
pub fn partitions_of(n: u32) -> Vec<Vec<u32>> {
    fn rec(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Strictly decreasing `m`-tuples of non-negative integers with sum ≤ `n`.
fn strict_decreasing_tuples(n: u32, m: usize) -> Vec<Vec<u32>> {
    fn rec(budget: u32, slots: usize, max_next: i64, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 0 {
            out.push(prefix.clone());
            return;
        }
        // remaining slots need at least 0+1+…+(slots−1)
        let floor = (slots as u32 - 1) * (slots as u32) / 2;
        if budget < floor {
            return;
        }
        let hi = max_next.min((budget - floor + slots as u32 - 1) as i64);
        for v in (slots as i64 - 1..=hi).rev() {
            prefix.push(v as u32);
            rec(budget - v as u32, slots - 1, v - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, m, n as i64, &mut Vec::new(), &mut out);
    out
}

impl PartialOrd for SuperPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SuperPartition {
    /// Canonical total order: by total degree, then fermionic degree, then
    /// lexicographically larger `circled` first, then lexicographically
    /// larger `star` first.
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.fermionic_degree().cmp(&other.fermionic_degree()))
            .then_with(|| lex_desc(&self.circled(), &other.circled()))
            .then_with(|| lex_desc(&self.star(), &other.star()))
    }
}

/// Compares so that the lexicographically larger sequence sorts first.
fn lex_desc(a: &[u32], b: &[u32]) -> Ordering {
    let n = a.len().max(b.len());
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        match x.cmp(&y) {
            Ordering::Equal => continue,
            ord => return ord.reverse(),
        }
    }
    Ordering::Equal
}

impl fmt::Display for SuperPartition {
    /// Text form `"a1,a2,...;s1,s2,..."`, either side possibly empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |parts: &[u32]| {
            parts
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "{};{}", join(&self.antisymmetric), join(&self.symmetric))
    }
}

impl FromStr for SuperPartition {
    type Err = ParseSuperPartitionError;

    /// Parses `"a1,a2,...;s1,s2,..."`.  Bosonic zero parts are never
    /// stored, so `"2,0;"` (fermionic zero) is valid while `"2;0"` is
    /// rejected.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let text = text.trim();
        let text = text
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(text);
        let semi = text
            .find(';')
            .ok_or(ParseSuperPartitionError::MissingSeparator)?;
        let parse_side = |side: &str, offset: usize| -> Result<Vec<u32>, ParseSuperPartitionError> {
            let mut parts = Vec::new();
            let mut pos = offset;
            for piece in side.split(',') {
                let trimmed = piece.trim();
                if !trimmed.is_empty() {
                    let value: u32 = trimmed.parse().map_err(|_| {
                        ParseSuperPartitionError::InvalidInteger {
                            position: pos,
                            text: trimmed.to_string(),
                        }
                    })?;
                    parts.push(value);
                }
                pos += piece.len() + 1;
            }
            Ok(parts)
        };
        let a = parse_side(&text[..semi], 0)?;
        let s = parse_side(&text[semi + 1..], semi + 1)?;
        Ok(Self::new(a, s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(text: &str) -> SuperPartition {
        text.parse().unwrap()
    }

    #[test]
    fn validation_accepts_large_example() {
        let p = SuperPartition::new(vec![8, 6, 3, 2, 0], vec![5, 3]).unwrap();
        assert_eq!(p.fermionic_degree(), 5);
        assert_eq!(p.total_degree(), 27);
    }

    #[test]
    fn validation_rejects_malformed_input() {
        assert_eq!(
            SuperPartition::new(vec![2, 2], vec![1]).unwrap_err(),
            SuperPartitionError::NotStrictlyDecreasing(vec![2, 2])
        );
        assert_eq!(
            SuperPartition::new(vec![1, 2], vec![]).unwrap_err(),
            SuperPartitionError::NotStrictlyDecreasing(vec![1, 2])
        );
        assert_eq!(
            SuperPartition::new(vec![], vec![1, 2]).unwrap_err(),
            SuperPartitionError::NotWeaklyDecreasing(vec![1, 2])
        );
        assert_eq!(
            SuperPartition::new(vec![2], vec![0]).unwrap_err(),
            SuperPartitionError::ZeroSymmetricPart(vec![0])
        );
        assert!(SuperPartition::new(vec![], vec![]).is_ok());
    }

    #[test]
    fn star_and_circled_match_diagram() {
        let p = sp("8,6,3,2,0;5,3");
        assert_eq!(p.star(), vec![8, 6, 5, 3, 3, 2]);
        assert_eq!(p.circled(), vec![9, 7, 5, 4, 3, 3, 1]);

        let bosonic = sp(";4");
        assert_eq!(bosonic.star(), vec![4]);
        assert_eq!(bosonic.circled(), vec![4]);

        let lone = sp("0;");
        assert_eq!(lone.star(), Vec::<u32>::new());
        assert_eq!(lone.circled(), vec![1]);
    }

    #[test]
    fn circles_have_distinct_rows_and_columns() {
        for p in SuperPartition::enumerate_up_to(8, 4) {
            let circles = p.circle_positions();
            assert_eq!(circles.len(), p.fermionic_degree());
            for i in 0..circles.len() {
                for j in i + 1..circles.len() {
                    assert_ne!(circles[i].0, circles[j].0, "rows clash in {p}");
                    assert_ne!(circles[i].1, circles[j].1, "columns clash in {p}");
                }
            }
        }
    }

    #[test]
    fn conjugate_matches_worked_example() {
        assert_eq!(sp("8,6,3,2,0;5,3").conjugate(), sp("6,5,3,1,0;6,3,2,1"));
        assert_eq!(sp(";4").conjugate(), sp(";1,1,1,1"));
        // derived by transposing both diagrams and reading circle positions
        assert_eq!(sp("2;1").conjugate(), sp("0;2,1"));
    }

    #[test]
    fn conjugate_is_an_involution() {
        for p in SuperPartition::enumerate_up_to(8, 4) {
            let q = p.conjugate();
            assert_eq!(q.total_degree(), p.total_degree());
            assert_eq!(q.fermionic_degree(), p.fermionic_degree());
            assert_eq!(q.conjugate(), p, "double conjugate of {p}");
            // transposing star/circled directly must agree
            assert_eq!(q.star(), transpose(&p.star()));
            assert_eq!(q.circled(), transpose(&p.circled()));
        }
    }

    #[test]
    fn epsilon_profile() {
        let p = sp("4,1;3,2,2");
        let eps: Vec<u8> = (1..=5).map(|i| p.epsilon(i).unwrap()).collect();
        assert_eq!(eps, vec![1, 0, 0, 0, 1]);
        assert_eq!(sp(";4").epsilon(1).unwrap(), 0);
        assert_eq!(sp("4;").epsilon(1).unwrap(), 1);
        assert!(sp(";4").epsilon(2).is_err());

        for p in SuperPartition::enumerate_up_to(7, 3) {
            let rows = p.rows();
            let total: usize = (1..=rows.len())
                .map(|i| p.epsilon(i).unwrap() as usize)
                .sum();
            assert_eq!(total, p.fermionic_degree());
        }
    }

    #[test]
    fn z_weight_examples() {
        // direct evaluation of the weight formula
        assert_eq!(sp(";2").z_weight().value, Rat::new(1.into(), 2.into()));
        assert_eq!(sp("1,0;").z_weight().value, Rat::from_integer((-1).into()));
        assert_eq!(sp(";1,1").z_weight().value, Rat::from_integer(2.into()));
    }

    #[test]
    fn enumerate_small_classes() {
        assert_eq!(
            SuperPartition::enumerate(0, 1),
            vec![SuperPartition::new(vec![0], vec![]).unwrap()]
        );
        let one_one = SuperPartition::enumerate(1, 1);
        assert_eq!(one_one.len(), 2);
        assert!(one_one.contains(&sp("1;")));
        assert!(one_one.contains(&sp("0;1")));

        let three_one = SuperPartition::enumerate(3, 1);
        assert_eq!(three_one.len(), 7);
        for text in ["3;", "2;1", "1;2", "1;1,1", "0;3", "0;2,1", "0;1,1,1"] {
            assert!(three_one.contains(&sp(text)), "missing {text}");
        }
    }

    #[test]
    fn enumerate_counts_match_brute_force() {
        // independent count: choose a strict m-tuple summing to k, pair with
        // a partition of n−k, via dynamic programming tables
        fn strict_count(k: u32, m: usize) -> u64 {
            // number of strictly decreasing m-tuples of distinct values ≥ 0
            // summing to k
            fn rec(k: i64, m: usize, max: i64) -> u64 {
                if m == 0 {
                    return (k == 0) as u64;
                }
                let mut total = 0;
                for v in (m as i64 - 1)..=max.min(k) {
                    total += rec(k - v, m - 1, v - 1);
                }
                total
            }
            rec(k as i64, m, k as i64)
        }
        fn partition_count(n: u32) -> u64 {
            let n = n as usize;
            let mut table = vec![0u64; n + 1];
            table[0] = 1;
            for part in 1..=n {
                for total in part..=n {
                    table[total] += table[total - part];
                }
            }
            table[n]
        }
        for n in 0..=8u32 {
            for m in 0..=4usize {
                let expected: u64 = (0..=n)
                    .map(|k| strict_count(k, m) * partition_count(n - k))
                    .sum();
                let got = SuperPartition::enumerate(n, m).len() as u64;
                assert_eq!(got, expected, "count mismatch at n={n} m={m}");
            }
        }
    }

    #[test]
    fn enumerate_is_closed_under_conjugation_and_sorted() {
        for n in 0..=6u32 {
            for m in 0..=3usize {
                let class = SuperPartition::enumerate(n, m);
                for w in class.windows(2) {
                    assert!(w[0] < w[1], "not sorted: {} vs {}", w[0], w[1]);
                }
                for p in &class {
                    assert!(class.contains(&p.conjugate()), "conjugate escape: {p}");
                }
            }
        }
    }

    #[test]
    fn string_round_trip() {
        for text in ["3,0;2", ";2,1", "2,0;", ";", "8,6,3,2,0;5,3"] {
            let p = sp(text);
            assert_eq!(p.to_string(), text);
            assert_eq!(sp(&p.to_string()), p);
        }
        assert!(matches!(
            "2,2;1".parse::<SuperPartition>(),
            Err(ParseSuperPartitionError::Invalid(_))
        ));
        assert!(matches!(
            "1,x;".parse::<SuperPartition>(),
            Err(ParseSuperPartitionError::InvalidInteger { position: 2, .. })
        ));
        assert!(matches!(
            "1,2".parse::<SuperPartition>(),
            Err(ParseSuperPartitionError::MissingSeparator)
        ));
    }

    #[test]
    fn json_round_trip() {
        let p = sp("3,0;2,2");
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"a":[3,0],"s":[2,2]}"#);
        let back: SuperPartition = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn remove_first_row_peels_diagram() {
        let p = sp("3,0;3");
        let (first, tail) = p.remove_first_row().unwrap();
        assert_eq!((first.star, first.fermionic), (3, true));
        assert_eq!(tail, sp("0;3"));
        let (second, tail2) = tail.remove_first_row().unwrap();
        assert_eq!((second.star, second.fermionic), (3, false));
        assert_eq!(tail2, sp("0;"));
    }
}
