//! Degree tuples: weakly decreasing lists of non-negative integers.

use std::fmt;

/// Weakly decreasing tuple of non-negative integers.  Strictly
/// decreasing tuples index nonzero Schur polynomials; a repeat makes
/// them vanish but is still representable.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartitionTuple {
    parts: Vec<u32>,
}

#[derive(Debug, thiserror::Error)]
#[error("tuple must be weakly decreasing: {0:?}")]
pub struct TupleError(pub Vec<u32>);

impl PartitionTuple {
    pub fn new(parts: Vec<u32>) -> Result<Self, TupleError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(TupleError(parts));
        }
        Ok(PartitionTuple { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// Shape under the staircase correspondence: part `i` minus
    /// `N-1-i`.  `None` when the tuple is not strictly decreasing.
    pub fn shape(&self) -> Option<Vec<u32>> {
        if !self.is_strict() {
            return None;
        }
        let n = self.parts.len();
        Some(
            self.parts
                .iter()
                .enumerate()
                .map(|(i, &p)| p - (n - 1 - i) as u32)
                .collect(),
        )
    }

    /// Inverse of [`shape`](Self::shape): add the staircase back.
    pub fn from_shape(shape: &[u32]) -> Self {
        assert!(
            shape.windows(2).all(|w| w[0] >= w[1]),
            "shape must be weakly decreasing"
        );
        let n = shape.len();
        PartitionTuple {
            parts: shape
                .iter()
                .enumerate()
                .map(|(i, &p)| p + (n - 1 - i) as u32)
                .collect(),
        }
    }
}

impl fmt::Display for PartitionTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", strs.join(","))
    }
}

/// All strictly decreasing tuples of `len` non-negative parts summing
/// to `weight`, in decreasing lexicographic order.
pub fn enumerate_strict(weight: u32, len: usize) -> Vec<PartitionTuple> {
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(len);
    rec(weight, len, u32::MAX, &mut prefix, &mut out);
    out
}

fn rec(weight: u32, len: usize, cap: u32, prefix: &mut Vec<u32>, out: &mut Vec<PartitionTuple>) {
    if len == 0 {
        if weight == 0 {
            out.push(PartitionTuple {
                parts: prefix.clone(),
            });
        }
        return;
    }
    let k = (len - 1) as u32;
    let min_rest = k * k.saturating_sub(1) / 2;
    let hi = weight.min(cap.saturating_sub(1));
    for p in (0..=hi).rev() {
        let rest = weight - p;
        if k == 0 {
            if rest != 0 {
                continue;
            }
        } else {
            // k distinct parts below p sum to between 0+..+(k-1)
            // and (p-1)+..+(p-k)
            if p < k || rest < min_rest || rest > k * (2 * p - k - 1) / 2 {
                continue;
            }
        }
        prefix.push(p);
        rec(rest, len - 1, p, prefix, out);
        prefix.pop();
    }
}
