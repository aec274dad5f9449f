//! Integer partitions: construction with validated invariants, conjugation,
//! rank, centralizer order, first-row padding, containment and strip tests,
//! plus enumeration in a fixed reverse-lexicographic order.
//!
//! The ordering on [`Partition`] (size first, then reverse-lexicographic
//! within a size) is fixed once here and relied on everywhere else in the
//! workspace: map iteration, program output and golden files all agree on it.

use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

mod enumerate;

pub use enumerate::{partitions_filtered, partitions_of, PartitionFilter};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PartitionError {
    #[error("parts must be weakly decreasing, got {0:?}")]
    NotWeaklyDecreasing(Vec<u32>),
    #[error("parts must be positive, got a zero part in {0:?}")]
    ZeroPart(Vec<u32>),
    #[error("bad partition literal {literal:?}: {reason}")]
    BadLiteral { literal: String, reason: String },
}

/// A partition of a nonnegative integer: weakly decreasing positive parts.
/// The empty partition is the unique partition of 0.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.contains(&0) {
            return Err(PartitionError::ZeroPart(parts));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotWeaklyDecreasing(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition (n), or the empty partition when n = 0.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// Internal constructor for parts already known to be valid.
    pub(crate) fn from_valid(parts: Vec<u32>) -> Self {
        debug_assert!(!parts.contains(&0));
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// |λ|, the number being partitioned.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// ℓ(λ), the number of parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// λ₁, or 0 for the empty partition.
    pub fn first_part(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// m_j, the number of parts equal to j.
    pub fn multiplicity(&self, j: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == j).count() as u32
    }

    /// (part, multiplicity) pairs, largest part first.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// λᵗ, rows and columns swapped.
    pub fn conjugate(&self) -> Partition {
        let cols = self.first_part() as usize;
        let mut parts = Vec::with_capacity(cols);
        for j in 1..=cols as u32 {
            parts.push(self.parts.iter().filter(|&&p| p >= j).count() as u32);
        }
        Partition::from_valid(parts)
    }

    /// rank(λ) = |λ| − ℓ(λ) = Σ_j (j−1) m_j.
    pub fn rank(&self) -> u32 {
        self.size() - self.length() as u32
    }

    /// z_λ = Π_j j^{m_j} (m_j)!, the centralizer order of the class λ.
    pub fn z(&self) -> u128 {
        let mut z: u128 = 1;
        for (part, mult) in self.multiplicities() {
            for _ in 0..mult {
                z *= part as u128;
            }
            for k in 2..=mult as u128 {
                z *= k;
            }
        }
        z
    }

    /// λ+(m): add m to the first row. For the empty partition this is (m).
    pub fn pad_first_row(&self, m: u32) -> Partition {
        if self.parts.is_empty() {
            return Partition::row(m);
        }
        let mut parts = self.parts.clone();
        parts[0] += m;
        Partition::from_valid(parts)
    }

    /// Containment of Young diagrams: every row of `inner` fits in ours.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner
            .parts
            .iter()
            .enumerate()
            .all(|(k, &p)| self.parts.get(k).is_some_and(|&q| q >= p))
    }

    /// Is self/inner a horizontal strip (at most one cell per column)?
    /// Requires containment; the strip condition is λ_{k+1} ≤ μ_k.
    pub fn horizontal_strip_over(&self, inner: &Partition) -> bool {
        self.contains(inner)
            && (1..self.parts.len())
                .all(|k| self.parts[k] <= inner.parts.get(k - 1).copied().unwrap_or(0))
    }

    /// Frobenius coordinates (a | b): arm and leg lengths along the diagonal.
    pub fn frobenius(&self) -> (Vec<u32>, Vec<u32>) {
        let conj = self.conjugate();
        let d = (0..self.parts.len())
            .take_while(|&i| self.parts[i] as usize > i)
            .count();
        let arms = (0..d).map(|i| self.parts[i] - 1 - i as u32).collect();
        let legs = (0..d).map(|i| conj.parts[i] - 1 - i as u32).collect();
        (arms, legs)
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        // Size ascending, then reverse-lexicographic: within one size the
        // lexicographically larger part sequence comes first, so iteration
        // runs (n), (n-1,1), ..., (1^n).
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Parses the comma-separated literal, e.g. "4,2,1". The empty string
    /// (or all whitespace) denotes the empty partition.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for piece in t.split(',') {
            let piece = piece.trim();
            let p: u32 = piece.parse().map_err(|e| PartitionError::BadLiteral {
                literal: s.to_string(),
                reason: format!("part {piece:?}: {e}"),
            })?;
            parts.push(p);
        }
        Partition::new(parts).map_err(|e| PartitionError::BadLiteral {
            literal: s.to_string(),
            reason: e.to_string(),
        })
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = PartitionError;
    fn try_from(parts: Vec<u32>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}

/// Shorthand used pervasively in tests: `pt("4,2,1")`.
pub fn pt(literal: &str) -> Partition {
    literal.parse().expect("valid partition literal")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugate_examples() {
        assert_eq!(pt("4,2,1").conjugate(), pt("3,2,1,1"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(pt("2,2").conjugate(), pt("2,2"));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(pt("2,2").rank(), 2);
        assert_eq!(pt("5").rank(), 4);
        assert!(Partition::new(vec![2, 2, 3]).is_err());
    }

    #[test]
    fn z_examples() {
        assert_eq!(pt("1,1,1").z(), 6);
        assert_eq!(pt("2,1").z(), 2);
        assert_eq!(pt("3").z(), 3);
        assert_eq!(pt("3,3,2,1,1,1").z(), 3 * 3 * 2 * 2 * 6);
    }

    #[test]
    fn pad_examples() {
        assert_eq!(pt("4,2,1").pad_first_row(1), pt("5,2,1"));
        assert_eq!(pt("4,2,1").pad_first_row(2), pt("6,2,1"));
        assert_eq!(Partition::empty().pad_first_row(3), pt("3"));
        assert_eq!(pt("2,1").pad_first_row(0), pt("2,1"));
    }

    #[test]
    fn ordering_is_size_then_reverse_lex() {
        let order = ["6", "5,1", "4,2", "4,1,1", "3,3", "3,2,1", "3,1,1,1", "2,2,2", "2,2,1,1", "2,1,1,1,1", "1,1,1,1,1,1"];
        for w in order.windows(2) {
            assert!(pt(w[0]) < pt(w[1]), "{} should precede {}", w[0], w[1]);
        }
        assert!(pt("1,1,1") < pt("4"), "smaller size sorts first");
    }

    #[test]
    fn strip_and_containment() {
        assert!(pt("10,6,5,1").contains(&pt("7,6,3")));
        assert!(pt("10,6,5,1").horizontal_strip_over(&pt("7,6,3")));
        assert!(!pt("10,8,5,1").horizontal_strip_over(&pt("7,6,3")));
        assert!(!pt("2,2").horizontal_strip_over(&pt("1")));
        assert!(pt("3,1").horizontal_strip_over(&pt("1,1")));
    }

    #[test]
    fn frobenius_coordinates() {
        assert_eq!(pt("4,3,1").frobenius(), (vec![3, 1], vec![2, 0]));
        assert_eq!(pt("1").frobenius(), (vec![0], vec![0]));
        assert_eq!(Partition::empty().frobenius(), (vec![], vec![]));
    }

    #[test]
    fn literal_roundtrip() {
        for s in ["", "1", "4,2,1", "2,2,2,2"] {
            assert_eq!(pt(s).to_string(), s);
        }
        assert!("2,3".parse::<Partition>().is_err());
        assert!("a,1".parse::<Partition>().is_err());
        assert!("1,0".parse::<Partition>().is_err());
    }

    #[test]
    fn serde_as_int_array() {
        let p = pt("5,1");
        let js = serde_json::to_string(&p).unwrap();
        assert_eq!(js, "[5,1]");
        assert_eq!(serde_json::from_str::<Partition>("[5,1]").unwrap(), p);
        assert!(serde_json::from_str::<Partition>("[1,5]").is_err());
    }
}
