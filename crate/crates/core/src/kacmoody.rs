//! The Kac-Moody side: Cartan matrices of loop-free quivers, Serre
//! relations inside the Hall algebra, the composition algebra generated by
//! the simples, and graded dimensions of `U(n+)` for finite types.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::f1vect::binomial;
use crate::hall::{HallAlgebra, HallElement};
use crate::linalg::{determinant, integer_row, Echelon};
use crate::memo::Memo;
use crate::quiver::{DimVector, Quiver, Rep, Subrep};
use crate::structure::{canonical_key, simple, CanonicalKey};
use crate::Rational;

/// Largest rank for which [`positive_roots`] runs.
pub const MAX_ROOT_RANK: usize = 4;

/// Symmetric generalized Cartan matrix `a_ij = 2δ_ij − #{edges joining i, j}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CartanMatrix {
    rank: usize,
    entries: Vec<i64>,
}

impl CartanMatrix {
    pub fn from_quiver(q: &Quiver) -> Result<Self> {
        if let Some(vertex) = q.self_loop() {
            return Err(Error::SelfLoop { vertex });
        }
        let r = q.num_vertices();
        let mut entries = vec![0i64; r * r];
        for i in 0..r {
            for j in 0..r {
                entries[i * r + j] = if i == j {
                    2
                } else {
                    -(q.edges_between(i, j) as i64)
                };
            }
        }
        Ok(CartanMatrix { rank: r, entries })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.rank + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries
            .chunks(self.rank)
            .map(<[i64]>::to_vec)
            .collect()
    }

    /// `xᵀ A x`, twice the squared length of `x`.
    pub fn norm(&self, x: &[i64]) -> i64 {
        let r = self.rank;
        (0..r)
            .map(|i| (0..r).map(|j| x[i] * self.entry(i, j) * x[j]).sum::<i64>())
            .sum()
    }

    /// Positive definite, by Sylvester's criterion on leading minors.
    pub fn is_finite_type(&self) -> bool {
        let rows = self.rows();
        (1..=self.rank).all(|k| {
            let minor: Vec<Vec<BigInt>> = rows[..k]
                .iter()
                .map(|row| row[..k].iter().map(|&a| BigInt::from(a)).collect())
                .collect();
            determinant(&minor).is_positive()
        })
    }
}

impl fmt::Display for CartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.entries.chunks(self.rank).enumerate() {
            if k > 0 {
                f.write_str("\n")?;
            }
            for (i, a) in row.iter().enumerate() {
                if i > 0 {
                    f.write_str("\t")?;
                }
                write!(f, "{a}")?;
            }
        }
        Ok(())
    }
}

/// Simple and positive roots of a finite-type, simply-laced root system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystemData {
    pub simple_roots: Vec<DimVector>,
    /// Sorted by height, then lexicographically.
    pub positive_roots: Vec<DimVector>,
}

/// Closure of the simple roots under adding simple roots while the norm
/// stays 2. In a simply-laced finite type every non-simple positive root is
/// a positive root plus a simple root, so the closure is complete.
pub fn positive_roots(a: &CartanMatrix) -> Result<RootSystemData> {
    let r = a.rank();
    if r > MAX_ROOT_RANK {
        return Err(Error::RankTooLarge {
            rank: r,
            max: MAX_ROOT_RANK,
        });
    }
    if !a.is_finite_type() {
        return Err(Error::NotFiniteType);
    }
    let simple_roots: Vec<DimVector> = (0..r).map(|i| DimVector::unit(r, i)).collect();
    let mut found: alloc::collections::BTreeSet<Vec<i64>> = alloc::collections::BTreeSet::new();
    let mut frontier: Vec<Vec<i64>> = simple_roots
        .iter()
        .map(|d| d.0.iter().map(|&x| x as i64).collect())
        .collect();
    found.extend(frontier.iter().cloned());
    while let Some(beta) = frontier.pop() {
        for i in 0..r {
            let mut gamma = beta.clone();
            gamma[i] += 1;
            if a.norm(&gamma) == 2 && found.insert(gamma.clone()) {
                frontier.push(gamma);
            }
        }
    }
    let mut positive_roots: Vec<DimVector> = found
        .into_iter()
        .map(|v| DimVector(v.into_iter().map(|x| x as usize).collect()))
        .collect();
    positive_roots.sort_by(|x, y| x.total().cmp(&y.total()).then_with(|| x.cmp(y)));
    Ok(RootSystemData {
        simple_roots,
        positive_roots,
    })
}

/// Kostant partition count: multisets of positive roots summing to `alpha`.
pub fn un_plus_graded_dim(roots: &RootSystemData, alpha: &DimVector) -> u128 {
    let boxes = DimVector::all_below(alpha);
    // Mixed-radix index of a vector below alpha, matching all_below's order.
    let index = |v: &DimVector| {
        v.0.iter()
            .zip(&alpha.0)
            .fold(0usize, |acc, (x, b)| acc * (b + 1) + x)
    };
    let mut ways = vec![0u128; boxes.len()];
    ways[0] = 1;
    for root in &roots.positive_roots {
        if root.len() != alpha.len() {
            continue;
        }
        for v in &boxes {
            if let Some(rest) = v.checked_sub(root) {
                ways[index(v)] += ways[index(&rest)];
            }
        }
    }
    ways[boxes.len() - 1]
}

/// Outcome of a Serre-relation evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SerreVerdict {
    pub i: usize,
    pub j: usize,
    pub a_ij: i64,
    /// `Σ_l (−1)^l [S_i]^{(l)} [S_j] [S_i]^{(N−l)}`, `N = 1 − a_ij`.
    pub value: HallElement,
    /// A class with nonzero coefficient, when the relation fails.
    pub witness: Option<CanonicalKey>,
}

impl SerreVerdict {
    pub fn holds(&self) -> bool {
        self.value.is_zero()
    }
}

fn check_pair(q: &Quiver, i: usize, j: usize) -> Result<()> {
    let r = q.num_vertices();
    for v in [i, j] {
        if v >= r {
            return Err(Error::BadVertex {
                vertex: v,
                num_vertices: r,
            });
        }
    }
    if i == j {
        return Err(Error::Domain(
            "Serre relations need two distinct vertices".into(),
        ));
    }
    if let Some(vertex) = q.self_loop() {
        return Err(Error::SelfLoop { vertex });
    }
    Ok(())
}

/// Evaluate the divided-power Serre relation for the ordered pair `(i, j)`.
pub fn serre_check(hall: &HallAlgebra, i: usize, j: usize) -> Result<SerreVerdict> {
    let q = hall.quiver();
    check_pair(q, i, j)?;
    let a_ij = -(q.edges_between(i, j) as i64);
    let n = (1 - a_ij) as usize;
    let s_j = hall.simple(j)?;
    let mut value = hall.zero();
    for l in 0..=n {
        let term = hall.product_all([
            &hall.divided_power(i, l)?,
            &s_j,
            &hall.divided_power(i, n - l)?,
        ])?;
        value = if l % 2 == 0 {
            &value + &term
        } else {
            &value - &term
        };
    }
    let witness = value.terms().keys().next().cloned();
    Ok(SerreVerdict {
        i,
        j,
        a_ij,
        value,
        witness,
    })
}

fn filtration_degree(m: &Rep, i: usize, j: usize, l: usize, n: usize) -> Result<()> {
    check_pair(m.quiver(), i, j)?;
    let r = m.quiver().num_vertices();
    let mut expected = DimVector::unit(r, i);
    expected.0[i] = n + l;
    expected.0[j] = 1;
    if m.dimension_vector() != expected {
        return Err(Error::Degree(alloc::format!(
            "expected dimension vector {expected}, found {}",
            m.dimension_vector()
        )));
    }
    Ok(())
}

/// Number of flags `0 ⊂ F1 ⊂ F2 ⊂ M` with `F1 ≅ S_i^{⊕n}`, `F2/F1 ≅ S_j`
/// and `M/F2 ≅ S_i^{⊕l}`, by direct enumeration of subrepresentations.
pub fn filtration_count(m: &Rep, i: usize, j: usize, l: usize, n: usize) -> Result<u64> {
    filtration_degree(m, i, j, l, n)?;
    let q = m.quiver().clone();
    let r = q.num_vertices();
    let s_i = |k: usize| canonical_key(&simple(q.clone(), i).expect("vertex checked").power(k));
    let (bottom_key, top_key) = (s_i(n), s_i(l));
    let s_j = canonical_key(&simple(q.clone(), j)?);
    let mut d1 = DimVector::zero(r);
    d1.0[i] = n;
    let mut d2 = d1.clone();
    d2.0[j] = 1;
    let lower: Vec<Subrep> = m
        .subrep_subsets_of_dim(&d1)
        .into_iter()
        .filter(|f1| canonical_key(&m.restrict(f1).expect("closed").0) == bottom_key)
        .collect();
    let mut count = 0;
    for f2 in m.subrep_subsets_of_dim(&d2) {
        let (sub2, _) = m.restrict(&f2)?;
        if canonical_key(&m.quotient(&f2)?.0) != top_key {
            continue;
        }
        for f1 in &lower {
            let inside = f1
                .members
                .iter()
                .enumerate()
                .all(|(v, xs)| xs.iter().all(|&x| f2.contains(v, x)));
            if !inside {
                continue;
            }
            // F2/F1, computed inside F2 after renumbering.
            let renumbered = Subrep {
                members: f1
                    .members
                    .iter()
                    .enumerate()
                    .map(|(v, xs)| {
                        xs.iter()
                            .map(|x| f2.members[v].iter().position(|y| y == x).expect("inside") + 1)
                            .collect()
                    })
                    .collect(),
            };
            if canonical_key(&sub2.quotient(&renumbered)?.0) == s_j {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// `u_M`: elements at `i` killed by every edge `i → j`. `v_M`: elements at
/// `i` hit by some edge `j → i`.
pub fn filtration_uv(m: &Rep, i: usize, j: usize) -> (usize, usize) {
    let q = m.quiver();
    let to_j: Vec<usize> = (0..q.num_edges())
        .filter(|&e| q.edges()[e] == (i, j))
        .collect();
    let from_j: Vec<usize> = (0..q.num_edges())
        .filter(|&e| q.edges()[e] == (j, i))
        .collect();
    let u = (1..=m.dim(i))
        .filter(|&x| to_j.iter().all(|&e| m.map(e).apply(x) == 0))
        .count();
    let v = (1..=m.dim(i))
        .filter(|&x| from_j.iter().any(|&e| m.map(e).preimage(x).is_some()))
        .count();
    (u, v)
}

/// The closed form `C(u − v, n − v)` for [`filtration_count`].
pub fn filtration_binomial(m: &Rep, i: usize, j: usize, l: usize, n: usize) -> Result<u64> {
    filtration_degree(m, i, j, l, n)?;
    let (u, v) = filtration_uv(m, i, j);
    if n < v || u < v {
        return Ok(0);
    }
    Ok(binomial((u - v) as u128, (n - v) as u128).unwrap_or(0) as u64)
}

/// The subalgebra `CQ ⊆ HQ` generated by the simple classes, one graded
/// piece at a time.
///
/// Every word in the simples ends in some `[S_i]`, so
/// `CQ[α] = Σ_i CQ[α − e_i] · [S_i]`; a basis of each piece is kept and
/// reused for the next degree.
#[derive(Debug)]
pub struct CompositionAlgebra<'a> {
    hall: &'a HallAlgebra,
    bases: Memo<DimVector, Vec<HallElement>>,
}

fn rank_of(elements: &[HallElement]) -> (usize, Vec<usize>) {
    let columns: BTreeMap<&CanonicalKey, usize> = {
        let mut keys: Vec<&CanonicalKey> = elements.iter().flat_map(|x| x.terms().keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter().enumerate().map(|(i, k)| (k, i)).collect()
    };
    let mut ech = Echelon::new(columns.len());
    let mut kept = Vec::new();
    for (idx, x) in elements.iter().enumerate() {
        let mut row = vec![Rational::zero(); columns.len()];
        for (k, c) in x.terms() {
            row[columns[k]] = c.clone();
        }
        if ech.insert(integer_row(&row)) {
            kept.push(idx);
        }
    }
    (ech.rank(), kept)
}

impl<'a> CompositionAlgebra<'a> {
    /// Requires a loop-free quiver: with a self-loop the simples are not the
    /// generators of a Kac-Moody type algebra.
    pub fn new(hall: &'a HallAlgebra) -> Result<Self> {
        if let Some(vertex) = hall.quiver().self_loop() {
            return Err(Error::SelfLoop { vertex });
        }
        Ok(CompositionAlgebra {
            hall,
            bases: Memo::new(),
        })
    }

    /// A basis of `CQ[α]`.
    pub fn basis(&self, alpha: &DimVector) -> Result<Vec<HallElement>> {
        if alpha.len() != self.hall.quiver().num_vertices() {
            return Err(Error::Degree(alloc::format!(
                "dimension vector {alpha} has the wrong length"
            )));
        }
        if let Some(b) = self.bases.get(alpha) {
            return Ok(b);
        }
        let basis = if alpha.is_zero() {
            vec![self.hall.one()]
        } else {
            let mut spanning = Vec::new();
            for i in 0..alpha.len() {
                let unit = DimVector::unit(alpha.len(), i);
                let Some(lower) = alpha.checked_sub(&unit) else {
                    continue;
                };
                let s_i = self.hall.simple(i)?;
                for b in self.basis(&lower)? {
                    spanning.push(self.hall.product(&b, &s_i)?);
                }
            }
            let (_, kept) = rank_of(&spanning);
            kept.into_iter().map(|k| spanning[k].clone()).collect()
        };
        Ok(self.bases.insert(alpha.clone(), basis))
    }

    pub fn graded_dim(&self, alpha: &DimVector) -> Result<usize> {
        Ok(self.basis(alpha)?.len())
    }
}

/// Rank of the span of all words in the simples with content `alpha`,
/// each evaluated by iterated products. Multinomially many words; meant for
/// small degrees and as a cross-check of [`CompositionAlgebra`].
pub fn composition_dim_by_words(hall: &HallAlgebra, alpha: &DimVector) -> Result<usize> {
    let simples: Vec<HallElement> = (0..alpha.len())
        .map(|i| hall.simple(i))
        .collect::<Result<_>>()?;
    let mut words = Vec::new();
    let mut left = alpha.0.clone();
    fn rec(
        hall: &HallAlgebra,
        simples: &[HallElement],
        left: &mut Vec<usize>,
        acc: HallElement,
        out: &mut Vec<HallElement>,
    ) -> Result<()> {
        if left.iter().all(|&d| d == 0) {
            out.push(acc);
            return Ok(());
        }
        for i in 0..left.len() {
            if left[i] > 0 {
                left[i] -= 1;
                let next = hall.product(&acc, &simples[i])?;
                rec(hall, simples, left, next, out)?;
                left[i] += 1;
            }
        }
        Ok(())
    }
    rec(hall, &simples, &mut left, hall.one(), &mut words)?;
    Ok(rank_of(&words).0)
}

/// The three graded dimensions compared by the kernel and cokernel of
/// `U(n+) → CQ ⊆ HQ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RhoReport {
    pub alpha: DimVector,
    pub dim_un_plus: u128,
    pub dim_composition: usize,
    pub dim_hall: usize,
}

impl RhoReport {
    /// `dim U(n+)[α] − dim CQ[α]`.
    pub fn kernel(&self) -> i128 {
        self.dim_un_plus as i128 - self.dim_composition as i128
    }

    /// `dim HQ[α] − dim CQ[α]`.
    pub fn cokernel(&self) -> i128 {
        self.dim_hall as i128 - self.dim_composition as i128
    }

    /// `alpha  dim_U(n+)  dim_CQ  dim_HQ  ker  coker`, tab separated.
    pub fn tsv_row(&self) -> alloc::string::String {
        alloc::format!(
            "{}\t{}\t{}\t{}\t{}\t{}",
            self.alpha,
            self.dim_un_plus,
            self.dim_composition,
            self.dim_hall,
            self.kernel(),
            self.cokernel()
        )
    }
}

pub const RHO_REPORT_HEADER: &str = "alpha\tdim_U(n+)\tdim_CQ\tdim_HQ\tker\tcoker";

/// Graded dimensions at `alpha` for a quiver of finite type.
pub fn rho_defect_report(
    comp: &CompositionAlgebra<'_>,
    roots: &RootSystemData,
    alpha: &DimVector,
) -> Result<RhoReport> {
    Ok(RhoReport {
        alpha: alpha.clone(),
        dim_un_plus: un_plus_graded_dim(roots, alpha),
        dim_composition: comp.graded_dim(alpha)?,
        dim_hall: comp.hall.graded_dim(alpha),
    })
}

/// Convenience wrapper building the root system from the quiver.
pub fn rho_defect_report_for(hall: &HallAlgebra, alpha: &DimVector) -> Result<RhoReport> {
    let roots = positive_roots(&CartanMatrix::from_quiver(hall.quiver())?)?;
    let comp = CompositionAlgebra::new(hall)?;
    rho_defect_report(&comp, &roots, alpha)
}
