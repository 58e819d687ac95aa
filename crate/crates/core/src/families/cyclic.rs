//! The cyclic quiver on residues `0..n`, edge `i` running `i → i − 1`.
//!
//! Its nilpotent indecomposables are chains `I[k,r]`: `r` elements at
//! residues `k, k+1, …, k+r−1`, each edge map stepping one element down the
//! chain, so the element at residue `k` spans the socle. In this labeling
//!
//! ```text
//! [I[i,p]]·[I[j,q]] − [I[j,q]]·[I[i,p]]
//!     = δ(j+q ≡ i) [I[j,p+q]] − δ(i+p ≡ j) [I[i,p+q]]
//! ```
//!
//! and `ψ(E_rs ⊗ t^m) = I[r mod n, s − r + mn]` turns the bracket of the
//! upper half `a_+` of the loop algebra `gl_n[t]` into the negative of the
//! Hall commutator.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use super::partition::multipartition_counts;
use super::Verdict;
use crate::error::{Error, Result};
use crate::f1vect::PartialInjection;
use crate::hall::{HallAlgebra, HallElement};
use crate::quiver::{DimVector, Quiver, Rep};
use crate::structure::canonical_key;
use crate::Rational;

pub fn cyclic_quiver(n: usize) -> Result<Arc<Quiver>> {
    Ok(Arc::new(Quiver::cyclic(n)?))
}

/// `I[k,r]` on the cyclic quiver with `n` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclicIndec {
    pub n: usize,
    /// Residue of the socle element.
    pub k: usize,
    /// Length of the chain.
    pub r: usize,
}

impl CyclicIndec {
    pub fn new(n: usize, k: usize, r: usize) -> Result<Self> {
        if n < 2 || k >= n || r == 0 {
            return Err(Error::Domain(format!(
                "no cyclic indecomposable I[{k},{r}] for n = {n}"
            )));
        }
        Ok(CyclicIndec { n, k, r })
    }

    /// Dimension vector: one per chain element at its residue.
    pub fn dimension_vector(&self) -> DimVector {
        let mut d = vec![0; self.n];
        for p in 0..self.r {
            d[(self.k + p) % self.n] += 1;
        }
        DimVector(d)
    }
}

impl fmt::Display for CyclicIndec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "I[{},{}]", self.k, self.r)
    }
}

/// The chain representation of `x`.
pub fn cyclic_indec_rep(x: CyclicIndec) -> Rep {
    let n = x.n;
    let q = cyclic_quiver(n).expect("n checked at construction");
    // Label of chain position p at its vertex: positions at a vertex are
    // numbered in increasing order.
    let label = |p: usize| p / n + 1;
    let dims = x.dimension_vector().0;
    let mut images: Vec<Vec<usize>> = dims.iter().map(|&d| vec![0; d]).collect();
    for p in 1..x.r {
        let v = (x.k + p) % n;
        images[v][label(p) - 1] = label(p - 1);
    }
    let maps = (0..n)
        .map(|v| {
            let t = (v + n - 1) % n;
            PartialInjection::new(dims[v], dims[t], images[v].clone())
                .expect("chain maps are injective")
        })
        .collect();
    Rep::new(q, dims, maps).expect("valid chain representation")
}

/// Closed-form bracket, as a list of (indecomposable, coefficient).
pub fn cyclic_bracket(x: CyclicIndec, y: CyclicIndec) -> Result<Vec<(CyclicIndec, i64)>> {
    if x.n != y.n {
        return Err(Error::QuiverMismatch);
    }
    let n = x.n;
    let (i, p, j, q) = (x.k, x.r, y.k, y.r);
    let mut terms: BTreeMap<CyclicIndec, i64> = BTreeMap::new();
    if (j + q) % n == i {
        *terms.entry(CyclicIndec::new(n, j, p + q)?).or_insert(0) += 1;
    }
    if (i + p) % n == j {
        *terms.entry(CyclicIndec::new(n, i, p + q)?).or_insert(0) -= 1;
    }
    Ok(terms.into_iter().filter(|&(_, c)| c != 0).collect())
}

/// A formal combination of indecomposables as a Hall element.
pub fn combination(hall: &HallAlgebra, terms: &[(CyclicIndec, i64)]) -> Result<HallElement> {
    let mut acc = hall.zero();
    for &(x, c) in terms {
        let class = hall.class(&cyclic_indec_rep(x))?;
        acc = &acc + &class.scale(&Rational::from_integer(BigInt::from(c)));
    }
    Ok(acc)
}

fn cyclic_length_of(hall: &HallAlgebra) -> Result<usize> {
    hall.quiver()
        .cyclic_length()
        .ok_or_else(|| Error::Domain("not a cyclic quiver".into()))
}

/// Compare the closed form with the engine commutator for all chains of
/// length at most `max_len`.
pub fn verify_cyclic_bracket(hall: &HallAlgebra, max_len: usize) -> Result<Verdict> {
    let n = cyclic_length_of(hall)?;
    let all: Vec<CyclicIndec> = (0..n)
        .flat_map(|k| (1..=max_len).map(move |r| CyclicIndec { n, k, r }))
        .collect();
    let mut verdict = Verdict::default();
    for &x in &all {
        for &y in &all {
            let engine = hall.commutator(
                &hall.class(&cyclic_indec_rep(x))?,
                &hall.class(&cyclic_indec_rep(y))?,
            )?;
            let closed = combination(hall, &cyclic_bracket(x, y)?)?;
            verdict.record(engine == closed, || {
                format!("[{x}, {y}]: engine {engine}, closed form {closed}")
            });
        }
    }
    Ok(verdict)
}

/// `E_{row,col} ⊗ t^power` in the upper half `a_+`, rows and columns
/// numbered `1..=n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LoopBasisElement {
    pub row: usize,
    pub col: usize,
    pub power: usize,
}

impl LoopBasisElement {
    /// Rejects elements outside `a_+`: strictly lower or diagonal entries
    /// need a positive power of `t`.
    pub fn new(n: usize, row: usize, col: usize, power: usize) -> Result<Self> {
        if row == 0 || col == 0 || row > n || col > n {
            return Err(Error::Domain(format!(
                "E_{row},{col} is not an {n}x{n} matrix unit"
            )));
        }
        if col <= row && power == 0 {
            return Err(Error::Domain(format!(
                "E_{row},{col} ⊗ t^0 is not in the upper half"
            )));
        }
        Ok(LoopBasisElement { row, col, power })
    }
}

impl fmt::Display for LoopBasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E{},{}t^{}", self.row, self.col, self.power)
    }
}

/// Basis of `a_+` with powers of `t` up to `max_power`.
pub fn a_plus_basis(n: usize, max_power: usize) -> Vec<LoopBasisElement> {
    let mut out = Vec::new();
    for power in 0..=max_power {
        for row in 1..=n {
            for col in 1..=n {
                if let Ok(x) = LoopBasisElement::new(n, row, col, power) {
                    out.push(x);
                }
            }
        }
    }
    out
}

/// `ψ(E_rs ⊗ t^m) = I[r mod n, s − r + mn]`.
pub fn psi(x: LoopBasisElement, n: usize) -> Result<CyclicIndec> {
    let x = LoopBasisElement::new(n, x.row, x.col, x.power)?;
    let len = (x.col + x.power * n) as i64 - x.row as i64;
    CyclicIndec::new(n, x.row % n, len as usize)
}

/// `[E_rs t^a, E_r's' t^b] = δ_{sr'} E_rs' t^{a+b} − δ_{s'r} E_r's t^{a+b}`.
pub fn loop_bracket(x: LoopBasisElement, y: LoopBasisElement) -> Vec<(LoopBasisElement, i64)> {
    let power = x.power + y.power;
    let mut terms: BTreeMap<LoopBasisElement, i64> = BTreeMap::new();
    if x.col == y.row {
        *terms
            .entry(LoopBasisElement {
                row: x.row,
                col: y.col,
                power,
            })
            .or_insert(0) += 1;
    }
    if y.col == x.row {
        *terms
            .entry(LoopBasisElement {
                row: y.row,
                col: x.col,
                power,
            })
            .or_insert(0) -= 1;
    }
    terms.into_iter().filter(|&(_, c)| c != 0).collect()
}

/// Check `ψ([x, y]) = −[ψx, ψy]` over all basis pairs with powers of `t`
/// at most `max_power`; the Hall side uses the engine commutator.
pub fn verify_psi_homomorphism(hall: &HallAlgebra, max_power: usize) -> Result<Verdict> {
    let n = cyclic_length_of(hall)?;
    let basis = a_plus_basis(n, max_power);
    let mut verdict = Verdict::default();
    for &x in &basis {
        for &y in &basis {
            let mut image = Vec::new();
            for (z, c) in loop_bracket(x, y) {
                image.push((psi(z, n)?, c));
            }
            let lhs = combination(hall, &image)?;
            let engine = hall.commutator(
                &hall.class(&cyclic_indec_rep(psi(x, n)?))?,
                &hall.class(&cyclic_indec_rep(psi(y, n)?))?,
            )?;
            let rhs = -&engine;
            verdict.record(lhs == rhs, || {
                format!("[{x}, {y}]: ψ gives {lhs}, engine gives {rhs}")
            });
        }
    }
    Ok(verdict)
}

/// Degree of `E_rs ⊗ t^m` in the root lattice of the cyclic quiver.
pub fn loop_degree(x: LoopBasisElement, n: usize) -> Result<DimVector> {
    Ok(psi(x, n)?.dimension_vector())
}

/// PBW count for `U(a_+)` at degree `alpha`: multisets of basis elements
/// with degrees summing to `alpha`.
pub fn a_plus_graded_dim(n: usize, alpha: &DimVector) -> Result<u128> {
    if alpha.len() != n {
        return Err(Error::Degree(format!(
            "degree {alpha} has the wrong length for n = {n}"
        )));
    }
    // A basis element of degree β has t-power below |β| / n + 1.
    let max_power = alpha.total() / n + 1;
    let boxes = DimVector::all_below(alpha);
    let index = |v: &DimVector| {
        v.0.iter()
            .zip(&alpha.0)
            .fold(0usize, |acc, (x, b)| acc * (b + 1) + x)
    };
    let mut ways = vec![0u128; boxes.len()];
    ways[0] = 1;
    for x in a_plus_basis(n, max_power) {
        let deg = loop_degree(x, n)?;
        if !deg.le(alpha) {
            continue;
        }
        for v in &boxes {
            if let Some(rest) = v.checked_sub(&deg) {
                ways[index(v)] += ways[index(&rest)];
            }
        }
    }
    Ok(ways[boxes.len() - 1])
}

/// Number of nilpotent classes of each total dimension `0..=max_total`,
/// counted by the engine, next to the number of `n`-tuples of partitions.
pub fn class_counts(n: usize, max_total: usize) -> Result<Vec<(u128, u128)>> {
    let q = cyclic_quiver(n)?;
    let expected = multipartition_counts(n, max_total);
    Ok((0..=max_total)
        .map(|d| {
            let engine: usize = DimVector::with_total(n, d)
                .iter()
                .map(|alpha| crate::hall::graded_dim(&q, alpha, true))
                .sum();
            (engine as u128, expected[d])
        })
        .collect())
}

/// Whether `rep` is isomorphic to the chain `x`.
pub fn is_chain(rep: &Rep, x: CyclicIndec) -> bool {
    canonical_key(rep) == canonical_key(&cyclic_indec_rep(x))
}
