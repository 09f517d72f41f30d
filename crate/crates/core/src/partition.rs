//! Integer partitions with the statistics used by the symmetric-function
//! layer.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

/// A weakly decreasing sequence of positive integers.
///
/// The derived ordering is lexicographic on the part lists, which for
/// equal weights refines dominance order; that is what the Schur-basis
/// elimination relies on.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition; the parts must be positive and weakly
    /// decreasing.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing"
        );
        assert!(
            parts.last().is_none_or(|&p| p > 0),
            "parts must be positive"
        );
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The weight `|lambda|`.
    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// The number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The conjugate partition (transposed diagram).
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0) as usize;
        let parts = (1..=cols)
            .map(|i| self.parts.iter().filter(|&&p| p as usize >= i).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Number of parts equal to `i`.
    pub fn multiplicity(&self, i: u32) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// The centralizer order `z_lambda = prod_i i^(m_i) m_i!`.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::one();
        let mut run_value = 0u32;
        let mut run_len = 0u64;
        for &p in self.parts.iter().chain(std::iter::once(&0)) {
            if p == run_value {
                run_len += 1;
            } else {
                run_value = p;
                run_len = 1;
            }
            if p != 0 {
                z *= BigInt::from(p) * BigInt::from(run_len);
            }
        }
        z
    }

    /// Number of parts divisible by `b` (written `l_b` in the q-analogue
    /// literature).
    pub fn parts_divisible_by(&self, b: u64) -> usize {
        assert!(b >= 1);
        self.parts.iter().filter(|&&p| p as u64 % b == 0).count()
    }

    /// Scales every part by `c` (the plethystic substitution
    /// `z_i -> z_i^c` on monomial indices).
    pub fn scale(&self, c: u32) -> Partition {
        assert!(c >= 1);
        Partition {
            parts: self.parts.iter().map(|&p| p * c).collect(),
        }
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{:?}", self.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// All partitions of `k`, in descending lexicographic order.
pub fn partitions_of(k: u32) -> Vec<Partition> {
    partitions_bounded(k, k, k as usize)
}

/// All partitions of `k` with parts at most `max_part` and at most
/// `max_len` parts, in descending lexicographic order.
pub fn partitions_bounded(k: u32, max_part: u32, max_len: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    gen(k, max_part, max_len, &mut stack, &mut out);
    out
}

fn gen(k: u32, max_part: u32, max_len: usize, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if k == 0 {
        out.push(Partition {
            parts: stack.clone(),
        });
        return;
    }
    if max_len == 0 || max_part == 0 {
        return;
    }
    for p in (1..=max_part.min(k)).rev() {
        stack.push(p);
        gen(k - p, p, max_len - 1, stack, out);
        stack.pop();
    }
}
