//! Integer partitions.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Weakly decreasing list of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// All partitions of `n`, largest first part first.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=max.min(left)).rev() {
            cur.push(p);
            rec(left - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// `p(0), …, p(n)` from the generating function `Π 1/(1 − x^k)`.
pub fn partition_counts(n: usize) -> Vec<u128> {
    let mut p = vec![0u128; n + 1];
    p[0] = 1;
    for k in 1..=n {
        for m in k..=n {
            p[m] += p[m - k];
        }
    }
    p
}

/// Number of `k`-tuples of partitions of total weight `0..=n`: the
/// `k`-fold convolution power of the partition counts.
pub fn multipartition_counts(k: usize, n: usize) -> Vec<u128> {
    let p = partition_counts(n);
    let mut acc = vec![0u128; n + 1];
    acc[0] = 1;
    for _ in 0..k {
        let mut next = vec![0u128; n + 1];
        for (i, a) in acc.iter().enumerate() {
            for (j, b) in p.iter().enumerate().take(n + 1 - i) {
                next[i + j] += a * b;
            }
        }
        acc = next;
    }
    acc
}
