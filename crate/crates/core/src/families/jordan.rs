//! The Jordan quiver: one vertex, one loop.
//!
//! Nilpotent classes are sums of blocks `N_m` and so correspond to
//! partitions; the Hall product then matches multiplication of monomial
//! symmetric functions, `[N_λ] ↦ m_λ`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::partition::{partitions, Partition};
use super::Verdict;
use crate::error::{Error, Result};
use crate::f1vect::{jordan_decompose, Block, PartialInjection};
use crate::hall::HallAlgebra;
use crate::quiver::{Quiver, Rep};
use crate::structure::{canonical_key, CanonicalKey};

pub fn jordan_quiver() -> Arc<Quiver> {
    Arc::new(Quiver::jordan())
}

/// `N_m`: the shift `k ↦ k − 1` on an `m`-dimensional space.
pub fn nilpotent_block(m: usize) -> Rep {
    let shift =
        PartialInjection::new(m, m, (0..m).collect()).expect("shift is a partial injection");
    Rep::new(jordan_quiver(), vec![m], vec![shift]).expect("valid Jordan representation")
}

/// `N_λ = ⊕ N_{λ_i}`.
pub fn partition_rep(lambda: &Partition) -> Rep {
    lambda
        .parts()
        .iter()
        .fold(Rep::zero(jordan_quiver()), |acc, &m| {
            acc.direct_sum(&nilpotent_block(m)).expect("same quiver")
        })
}

pub fn jordan_class_of_partition(lambda: &Partition) -> CanonicalKey {
    canonical_key(&partition_rep(lambda))
}

/// Inverse of [`jordan_class_of_partition`], read off the block structure
/// of the loop map.
pub fn partition_of_jordan_class(key: &CanonicalKey) -> Result<Partition> {
    let rep = key.decode(&jordan_quiver())?;
    let blocks = jordan_decompose(rep.map(0))?;
    let mut parts = Vec::new();
    for b in blocks.blocks() {
        match *b {
            Block::Nilpotent(m) => parts.push(m),
            Block::Cyclic(_) => return Err(Error::NotNilpotent),
        }
    }
    Ok(Partition::new(parts))
}

/// Distinct rearrangements of `v` (multiset permutations), in
/// lexicographic order.
fn rearrangements(v: &[usize]) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = v.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    // Standard next-permutation loop.
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..cur.len())
            .rev()
            .find(|&j| cur[j] > cur[i - 1])
            .expect("pivot exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// `m_λ · m_μ` in the monomial basis, by expanding both factors as sums of
/// monomials in `ℓ(λ) + ℓ(μ)` variables. No partition in the product has
/// more parts than that, so the coefficients are exact.
pub fn monomial_symmetric_product(lambda: &Partition, mu: &Partition) -> BTreeMap<Partition, u64> {
    let k = lambda.len() + mu.len();
    let pad = |p: &Partition| {
        let mut v = p.parts().to_vec();
        v.resize(k, 0);
        v
    };
    let mut monomials: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    let rb = rearrangements(&pad(mu));
    for a in rearrangements(&pad(lambda)) {
        for b in &rb {
            let sum: Vec<usize> = a.iter().zip(b).map(|(x, y)| x + y).collect();
            *monomials.entry(sum).or_insert(0) += 1;
        }
    }
    // The coefficient of m_ν is that of the single monomial x^ν.
    monomials
        .into_iter()
        .filter(|(e, _)| e.windows(2).all(|w| w[0] >= w[1]))
        .map(|(e, c)| (Partition::new(e), c))
        .collect()
}

/// Check `[N_λ]·[N_μ] ↦ m_λ·m_μ` for all `|λ| + |μ| ≤ max_weight`, and that
/// the generators `[N_i]` are primitive and commute.
pub fn verify_jordan_iso(hall: &HallAlgebra, max_weight: usize) -> Result<Verdict> {
    if !hall.quiver().is_jordan() {
        return Err(Error::Domain("not the Jordan quiver".into()));
    }
    let mut verdict = Verdict::default();
    let all: Vec<Partition> = (0..=max_weight).flat_map(partitions).collect();
    for lambda in &all {
        for mu in all
            .iter()
            .filter(|mu| mu.weight() + lambda.weight() <= max_weight)
        {
            let engine = hall.basis_product(
                &jordan_class_of_partition(lambda),
                &jordan_class_of_partition(mu),
            )?;
            let mut mapped = BTreeMap::new();
            for (key, c) in engine {
                mapped.insert(partition_of_jordan_class(&key)?, c);
            }
            let expected = monomial_symmetric_product(lambda, mu);
            verdict.record(mapped == expected, || {
                format!("[N{lambda}]·[N{mu}]: engine {mapped:?}, monomial {expected:?}")
            });
        }
    }
    for i in 1..=max_weight {
        let ni = hall.class(&nilpotent_block(i))?;
        verdict.record(hall.is_primitive(&ni)?, || {
            format!("[N{i}] is not primitive")
        });
        for j in 1..=max_weight - i {
            let nj = hall.class(&nilpotent_block(j))?;
            let c = hall.commutator(&ni, &nj)?;
            verdict.record(c.is_zero(), || format!("[N{i}] and [N{j}] do not commute"));
        }
    }
    Ok(verdict)
}

/// Number of nilpotent classes of dimension `n`, counted by the engine.
pub fn jordan_graded_dim(n: usize) -> usize {
    crate::hall::graded_dim(&jordan_quiver(), &crate::quiver::DimVector(vec![n]), true)
}

/// Every class key in degree `n` read back as a partition; the set must be
/// all partitions of `n`.
pub fn jordan_classes_as_partitions(n: usize) -> Result<BTreeSet<Partition>> {
    crate::structure::enumerate_reps(&jordan_quiver(), &crate::quiver::DimVector(vec![n]), true)
        .iter()
        .map(partition_of_jordan_class)
        .collect()
}

/// `m_λ` evaluated at a point, for spot checks of the expansion.
pub fn evaluate_monomial(lambda: &Partition, x: &[i64]) -> BigInt {
    let mut v = lambda.parts().to_vec();
    if v.len() > x.len() {
        return BigInt::from(0);
    }
    v.resize(x.len(), 0);
    rearrangements(&v)
        .into_iter()
        .map(|e| {
            e.iter()
                .zip(x)
                .map(|(&k, &xi)| BigInt::from(xi).pow(k.to_u32().expect("small exponent")))
                .product::<BigInt>()
        })
        .sum()
}
