//! Type `A_n` quivers: a path `0 - 1 - ... - (n-1)` with arbitrary
//! orientation. The indecomposables are the interval modules.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::f1vect::PartialInjection;
use crate::quiver::{Quiver, Rep};
use crate::structure::{canonical_key, CanonicalKey};

/// Largest path length handled by [`type_a_indecomposables`].
pub const MAX_TYPE_A: usize = 6;

/// Interval module on `[a, b]` (0-indexed vertices, inclusive): dimension 1
/// on the interval, identity along every edge inside it.
pub fn interval_rep(quiver: &Arc<Quiver>, a: usize, b: usize) -> Result<Rep> {
    let r = quiver.num_vertices();
    if a > b || b >= r {
        return Err(Error::Domain(format!(
            "no interval [{a},{b}] in a path with {r} vertices"
        )));
    }
    let dims: Vec<usize> = (0..r).map(|v| usize::from(a <= v && v <= b)).collect();
    let maps = quiver
        .edges()
        .iter()
        .map(|&(s, t)| {
            if dims[s] == 1 && dims[t] == 1 {
                PartialInjection::identity(1)
            } else {
                PartialInjection::zero(dims[s], dims[t])
            }
        })
        .collect();
    Rep::new(quiver.clone(), dims, maps)
}

/// One indecomposable per interval, as `((a, b), key)`, intervals in
/// lexicographic order. `forward[k]` orients edge `k` as `k → k+1`.
pub fn type_a_indecomposables(forward: &[bool]) -> Result<Vec<((usize, usize), CanonicalKey)>> {
    let n = forward.len() + 1;
    if n > MAX_TYPE_A {
        return Err(Error::Domain(format!(
            "type A with {n} vertices exceeds {MAX_TYPE_A}"
        )));
    }
    let q = Arc::new(Quiver::type_a(forward));
    let mut out = Vec::new();
    for a in 0..n {
        for b in a..n {
            out.push(((a, b), canonical_key(&interval_rep(&q, a, b)?)));
        }
    }
    Ok(out)
}

/// All `2^(n−1)` orientations of `A_n`.
pub fn orientations(n: usize) -> Vec<Vec<bool>> {
    let edges = n.saturating_sub(1);
    (0..1u32 << edges)
        .map(|mask| (0..edges).map(|k| mask >> k & 1 == 1).collect())
        .collect()
}
