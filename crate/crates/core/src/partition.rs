//! Integer partitions and the combinatorial data attached to them: the dual
//! partition, the suffix-sum function `p`, the character sequence `phi`, and
//! multinomial counts.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A partition `λ_1 ≥ λ_2 ≥ … ≥ λ_l > 0`. Only the nonzero parts are stored;
/// [`Partition::part`] reads indices past `l` as zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

/// Result of parsing user text: the canonical partition plus whether the
/// input had to be reordered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedPartition {
    pub partition: Partition,
    pub reordered: bool,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Self { parts })
    }

    /// Sorts the parts into decreasing order before validating.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Result<Self> {
        Self::new(vec![n])
    }

    /// The one-column partition `(1,…,1)`.
    pub fn column(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        Self::new(vec![1; n])
    }

    /// Parses comma-separated decimal parts, canonicalizing the order.
    pub fn parse(text: &str) -> Result<ParsedPartition> {
        let trimmed = text.trim().trim_start_matches('(').trim_end_matches(')');
        let mut parts = Vec::new();
        for piece in trimmed.split(',') {
            let piece = piece.trim();
            let value: usize = piece
                .parse()
                .map_err(|_| Error::InvalidPartition(format!("'{piece}' is not a positive integer")))?;
            parts.push(value);
        }
        let reordered = parts.windows(2).any(|w| w[0] < w[1]);
        let partition = Self::from_unsorted(parts)?;
        Ok(ParsedPartition { partition, reordered })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `n = |λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `l`, the number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    /// `λ_j` with 1-based `j`; zero past the last part.
    pub fn part(&self, j: usize) -> usize {
        if j == 0 {
            return 0;
        }
        self.parts.get(j - 1).copied().unwrap_or(0)
    }

    /// `λ∨` with `η_j = #{i : λ_i ≥ j}`.
    pub fn dual(&self) -> Partition {
        let parts = (1..=self.parts[0])
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Sum of the last `s` entries of `λ` padded with zeros to length `n`.
    pub fn p_function(&self, s: usize) -> Result<usize> {
        let n = self.size();
        if s == 0 || s > n {
            return Err(Error::OutOfRange(format!("p-function argument s = {s} outside [1, {n}]")));
        }
        Ok((n - s + 1..=n).map(|j| self.part(j)).sum())
    }

    /// `q = p_{λ∨}(s)`, the threshold controlling which degrees appear at
    /// subset size `s`.
    pub fn relation_threshold(&self, s: usize) -> Result<usize> {
        self.dual().p_function(s)
    }

    pub fn phi_sequence(&self) -> PhiMap {
        let mut seq = Vec::with_capacity(self.size());
        for r in 1..=self.length() {
            let reps = self.part(r) - self.part(r + 1);
            for _ in 0..reps {
                seq.extend(1..=r);
            }
        }
        PhiMap { seq }
    }

    /// `n! / (λ_1! ⋯ λ_l!)`.
    pub fn multinomial(&self) -> BigUint {
        let mut result = BigUint::one();
        let mut k = 0u64;
        for &p in &self.parts {
            // running product of binomials C(k + i, i) stays integral
            for i in 1..=p as u64 {
                k += 1;
                result = result * BigUint::from(k) / BigUint::from(i);
            }
        }
        result
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&text.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::parse(s).map(|parsed| parsed.partition)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

/// The map `φ_λ : [n] → [l]`, stored as the sequence `(φ(1), …, φ(n))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PhiMap {
    seq: Vec<usize>,
}

impl PhiMap {
    pub fn as_slice(&self) -> &[usize] {
        &self.seq
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    /// `φ(i)` for 1-based `i`.
    pub fn get(&self, i: usize) -> usize {
        self.seq[i - 1]
    }

    /// Positions `i` (1-based, increasing) with `φ(i) = value`.
    pub fn fibre(&self, value: usize) -> Vec<usize> {
        self.seq
            .iter()
            .enumerate()
            .filter(|(_, &v)| v == value)
            .map(|(i, _)| i + 1)
            .collect()
    }
}

/// All partitions of `n` in reverse-lexicographic order, e.g.
/// `(3), (2,1), (1,1,1)`.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, n, &mut Vec::new(), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn dual_examples() {
        assert_eq!(p(&[5, 4, 4, 2, 2, 2, 1]).dual(), p(&[7, 6, 3, 3, 1]));
        assert_eq!(p(&[4]).dual(), p(&[1, 1, 1, 1]));
        assert_eq!(p(&[2, 1]).dual(), p(&[2, 1]));
    }

    #[test]
    fn p_function_on_worked_dual() {
        let dual = p(&[5, 4, 4, 2, 2, 2, 1]).dual();
        for s in 1..=15 {
            assert_eq!(dual.p_function(s).unwrap(), 0, "s = {s}");
        }
        let tail: Vec<usize> = (16..=20).map(|s| dual.p_function(s).unwrap()).collect();
        assert_eq!(tail, vec![1, 4, 7, 13, 20]);
    }

    #[test]
    fn p_function_small_and_errors() {
        let d = p(&[2, 1]).dual();
        assert_eq!(
            (1..=3).map(|s| d.p_function(s).unwrap()).collect::<Vec<_>>(),
            vec![0, 1, 3]
        );
        assert!(matches!(d.p_function(0), Err(Error::OutOfRange(_))));
        assert!(matches!(d.p_function(4), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn phi_examples() {
        assert_eq!(p(&[2, 1]).phi_sequence().as_slice(), &[1, 1, 2]);
        assert_eq!(p(&[4]).phi_sequence().as_slice(), &[1, 1, 1, 1]);
        assert_eq!(p(&[1, 1, 1, 1]).phi_sequence().as_slice(), &[1, 2, 3, 4]);
        assert_eq!(p(&[2, 2]).phi_sequence().as_slice(), &[1, 2, 1, 2]);
        assert_eq!(p(&[2, 2]).phi_sequence().fibre(2), vec![2, 4]);
    }

    #[test]
    fn multinomial_examples() {
        assert_eq!(p(&[2, 1]).multinomial(), BigUint::from(3u32));
        assert_eq!(p(&[1, 1, 1]).multinomial(), BigUint::from(6u32));
        assert_eq!(p(&[7]).multinomial(), BigUint::from(1u32));
        assert_eq!(p(&[3, 2, 1]).multinomial(), BigUint::from(60u32));
    }

    #[test]
    fn enumeration() {
        assert_eq!(enumerate_partitions(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(enumerate_partitions(1), vec![p(&[1])]);
        assert_eq!(enumerate_partitions(4).len(), 5);
        let counts: Vec<usize> = (1..=8).map(|n| enumerate_partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn parsing() {
        let parsed = Partition::parse("5,4,4,2,2,2,1").unwrap();
        assert!(!parsed.reordered);
        assert_eq!(parsed.partition.to_string(), "5,4,4,2,2,2,1");
        let parsed = Partition::parse("1,2").unwrap();
        assert!(parsed.reordered);
        assert_eq!(parsed.partition, p(&[2, 1]));
        assert!(Partition::parse("2,0").is_err());
        assert!(Partition::parse("a,1").is_err());
        assert!(Partition::parse("").is_err());
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn invariants_up_to_twelve() {
        for n in 1..=12 {
            for lambda in enumerate_partitions(n) {
                let dual = lambda.dual();
                assert_eq!(dual.dual(), lambda);
                assert_eq!(dual.size(), n);

                let values: Vec<usize> = (1..=n).map(|s| lambda.p_function(s).unwrap()).collect();
                assert!(values.windows(2).all(|w| w[0] <= w[1]));
                assert_eq!(values[n - 1], n);

                let phi = lambda.phi_sequence();
                assert_eq!(phi.len(), n);
                for j in 1..=lambda.length() {
                    assert_eq!(phi.fibre(j).len(), lambda.part(j));
                }
                let blocks: usize = (1..=lambda.length())
                    .map(|r| r * (lambda.part(r) - lambda.part(r + 1)))
                    .sum();
                assert_eq!(blocks, n);
            }
        }
    }
}
