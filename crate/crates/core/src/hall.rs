//! The Hall algebra of nilpotent representations.
//!
//! For classes `M`, `N` the product is
//!
//! ```text
//! [M]·[N] = Σ_R #{ L ⊆ R : L ≅ N, R/L ≅ M } [R]
//! ```
//!
//! so the right factor is the subobject. The subobject count equals
//! `P^R_{M,N} / (a_M a_N)`: each short exact sequence `N ↪ R ↠ M` is a
//! subobject `L` together with isomorphisms `N ≅ L` and `R/L ≅ M`.
//!
//! Candidate classes `R` come from the extension structures of `M` by `N`:
//! on the fixed set `N ⊔ M`, edge maps restrict to those of `N`, agree with
//! those of `M` wherever `M`'s map is nonzero, and may send an element that
//! `M` kills into the unused part of `N`. Every `R` with a nonzero
//! coefficient is isomorphic to one of these, and each of them has one.
//!
//! The coproduct is `Δ[M] = Σ_{A ⊕ B ≅ M} [A] ⊗ [B]`, read off the
//! Krull-Schmidt multiset.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::f1vect::{binomial, PartialInjection};
use crate::kacmoody::CartanMatrix;
use crate::memo::Memo;
use crate::quiver::{DimVector, Quiver, Rep};
use crate::structure::{aut_count, canonical_key, indecomposable_summands, simple, CanonicalKey};
use crate::Rational;

/// A finitely supported rational combination of nilpotent classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HallElement {
    quiver: Arc<Quiver>,
    terms: BTreeMap<CanonicalKey, Rational>,
}

fn add_term<K: Ord>(terms: &mut BTreeMap<K, Rational>, key: K, c: Rational) {
    use alloc::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match terms.entry(key) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl HallElement {
    pub fn zero(quiver: Arc<Quiver>) -> Self {
        HallElement {
            quiver,
            terms: BTreeMap::new(),
        }
    }

    /// The class of the zero representation.
    pub fn one(quiver: Arc<Quiver>) -> Self {
        let key = canonical_key(&Rep::zero(quiver.clone()));
        let mut terms = BTreeMap::new();
        terms.insert(key, Rational::one());
        HallElement { quiver, terms }
    }

    /// `[M]` for a key; the class must be nilpotent.
    pub fn basis(quiver: Arc<Quiver>, key: CanonicalKey) -> Result<Self> {
        let rep = key.decode(&quiver)?;
        if !rep.is_nilpotent() {
            return Err(Error::NotNilpotent);
        }
        let mut terms = BTreeMap::new();
        terms.insert(key, Rational::one());
        Ok(HallElement { quiver, terms })
    }

    pub fn from_rep(rep: &Rep) -> Result<Self> {
        if !rep.is_nilpotent() {
            return Err(Error::NotNilpotent);
        }
        let mut terms = BTreeMap::new();
        terms.insert(canonical_key(rep), Rational::one());
        Ok(HallElement {
            quiver: rep.quiver().clone(),
            terms,
        })
    }

    pub(crate) fn from_terms(quiver: Arc<Quiver>, terms: BTreeMap<CanonicalKey, Rational>) -> Self {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        HallElement { quiver, terms }
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn terms(&self) -> &BTreeMap<CanonicalKey, Rational> {
        &self.terms
    }

    pub fn coefficient(&self, key: &CanonicalKey) -> Rational {
        self.terms.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> HallElement {
        if c.is_zero() {
            return HallElement::zero(self.quiver.clone());
        }
        HallElement {
            quiver: self.quiver.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Restriction of the support to degree `alpha`.
    pub fn graded_component(&self, alpha: &DimVector) -> HallElement {
        HallElement {
            quiver: self.quiver.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| &k.dimension_vector() == alpha)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    pub fn degrees(&self) -> BTreeSet<DimVector> {
        self.terms
            .keys()
            .map(CanonicalKey::dimension_vector)
            .collect()
    }

    /// Render as `c1*[k1] + c2*[k2]`, keys through `name`.
    pub fn render(&self, mut name: impl FnMut(&CanonicalKey) -> String) -> String {
        use core::fmt::Write;
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, false) => {}
                (0, true) => s.push('-'),
                (_, false) => s.push_str(" + "),
                (_, true) => s.push_str(" - "),
            }
            write!(s, "{}*[{}]", c.abs(), name(k)).expect("writing to a String");
        }
        s
    }

    fn check_same(&self, other: &HallElement) {
        assert!(
            Arc::ptr_eq(&self.quiver, &other.quiver) || self.quiver == other.quiver,
            "Hall elements over different quivers"
        );
    }
}

impl fmt::Display for HallElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(|k| k.to_hex()))
    }
}

impl Add for &HallElement {
    type Output = HallElement;
    fn add(self, rhs: &HallElement) -> HallElement {
        self.check_same(rhs);
        let mut terms = self.terms.clone();
        for (k, v) in &rhs.terms {
            add_term(&mut terms, k.clone(), v.clone());
        }
        HallElement {
            quiver: self.quiver.clone(),
            terms,
        }
    }
}

impl Neg for &HallElement {
    type Output = HallElement;
    fn neg(self) -> HallElement {
        HallElement {
            quiver: self.quiver.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }
}

impl Sub for &HallElement {
    type Output = HallElement;
    fn sub(self, rhs: &HallElement) -> HallElement {
        self + &(-rhs)
    }
}

/// Element of `H ⊗ H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorElement {
    pub terms: BTreeMap<(CanonicalKey, CanonicalKey), Rational>,
}

impl TensorElement {
    pub fn zero() -> Self {
        TensorElement {
            terms: BTreeMap::new(),
        }
    }

    /// `x ⊗ y`.
    pub fn pure(x: &HallElement, y: &HallElement) -> Self {
        let mut t = TensorElement::zero();
        for (a, c) in &x.terms {
            for (b, d) in &y.terms {
                add_term(&mut t.terms, (a.clone(), b.clone()), c * d);
            }
        }
        t
    }

    pub fn add_term(&mut self, a: CanonicalKey, b: CanonicalKey, c: Rational) {
        add_term(&mut self.terms, (a, b), c);
    }

    pub fn swap(&self) -> TensorElement {
        TensorElement {
            terms: self
                .terms
                .iter()
                .map(|((a, b), c)| ((b.clone(), a.clone()), c.clone()))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl Add for &TensorElement {
    type Output = TensorElement;
    fn add(self, rhs: &TensorElement) -> TensorElement {
        let mut terms = self.terms.clone();
        for (k, v) in &rhs.terms {
            add_term(&mut terms, k.clone(), v.clone());
        }
        TensorElement { terms }
    }
}

/// Element of `H ⊗ H ⊗ H`, for coassociativity checks.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TripleTensor {
    pub terms: BTreeMap<(CanonicalKey, CanonicalKey, CanonicalKey), Rational>,
}

/// The Hall algebra of `Rep_nil(Q, F1)` with its memo tables.
#[derive(Debug)]
pub struct HallAlgebra {
    quiver: Arc<Quiver>,
    constants: Memo<(CanonicalKey, CanonicalKey, CanonicalKey), u64>,
    products: Memo<(CanonicalKey, CanonicalKey), Vec<(CanonicalKey, u64)>>,
}

impl HallAlgebra {
    pub fn new(quiver: Arc<Quiver>) -> Self {
        HallAlgebra {
            quiver,
            constants: Memo::new(),
            products: Memo::new(),
        }
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn one(&self) -> HallElement {
        HallElement::one(self.quiver.clone())
    }

    pub fn zero(&self) -> HallElement {
        HallElement::zero(self.quiver.clone())
    }

    pub fn class(&self, rep: &Rep) -> Result<HallElement> {
        if rep.quiver() != &self.quiver {
            return Err(Error::QuiverMismatch);
        }
        HallElement::from_rep(rep)
    }

    pub fn basis(&self, key: &CanonicalKey) -> Result<HallElement> {
        HallElement::basis(self.quiver.clone(), key.clone())
    }

    /// `[S_i]`.
    pub fn simple(&self, i: usize) -> Result<HallElement> {
        self.class(&simple(self.quiver.clone(), i)?)
    }

    /// Divided power `[S_i]^{(l)} = [S_i^{⊕ l}]`.
    pub fn divided_power(&self, i: usize, l: usize) -> Result<HallElement> {
        self.class(&simple(self.quiver.clone(), i)?.power(l))
    }

    fn decode_nilpotent(&self, key: &CanonicalKey) -> Result<Rep> {
        let rep = key.decode(&self.quiver)?;
        if !rep.is_nilpotent() {
            return Err(Error::NotNilpotent);
        }
        Ok(rep)
    }

    /// `#{ L ⊆ R : L ≅ N, R/L ≅ M }`, by enumerating subrepresentations of
    /// `R` with the dimension vector of `N`.
    pub fn structure_constant(
        &self,
        m: &CanonicalKey,
        n: &CanonicalKey,
        r: &CanonicalKey,
    ) -> Result<u64> {
        let (dm, dn, dr) = (
            m.dimension_vector(),
            n.dimension_vector(),
            r.dimension_vector(),
        );
        if dm.len() != dr.len() || dn.len() != dr.len() || &dm + &dn != dr {
            return Ok(0);
        }
        let triple = (m.clone(), n.clone(), r.clone());
        if let Some(c) = self.constants.get(&triple) {
            return Ok(c);
        }
        self.decode_nilpotent(m)?;
        self.decode_nilpotent(n)?;
        let big = self.decode_nilpotent(r)?;
        let mut count = 0;
        for sub in big.subrep_subsets_of_dim(&dn) {
            let (l, _) = big.restrict(&sub)?;
            if &canonical_key(&l) != n {
                continue;
            }
            let (quot, _) = big.quotient(&sub)?;
            if &canonical_key(&quot) == m {
                count += 1;
            }
        }
        Ok(self.constants.insert(triple, count))
    }

    /// Visit every extension structure of `m` by `n` (see module docs).
    /// `n` occupies the low labels at each vertex.
    pub fn for_each_extension(&self, m: &Rep, n: &Rep, mut visit: impl FnMut(&Rep)) {
        let q = &self.quiver;
        let r = q.num_vertices();
        let dims: Vec<usize> = (0..r).map(|v| n.dim(v) + m.dim(v)).collect();
        struct EdgePlan {
            base: Vec<usize>,
            free_sources: Vec<usize>,
            free_targets: Vec<usize>,
            choices: Vec<PartialInjection>,
        }
        let plans: Vec<EdgePlan> = q
            .edges()
            .iter()
            .enumerate()
            .map(|(e, &(s, t))| {
                let (fm, fn_) = (m.map(e), n.map(e));
                let mut base: Vec<usize> = fn_.images().to_vec();
                let mut free_sources = Vec::new();
                for y in 1..=m.dim(s) {
                    let z = fm.apply(y);
                    if z == 0 {
                        free_sources.push(n.dim(s) + y);
                        base.push(0);
                    } else {
                        base.push(n.dim(t) + z);
                    }
                }
                let used: BTreeSet<usize> =
                    fn_.images().iter().copied().filter(|&z| z != 0).collect();
                let free_targets: Vec<usize> =
                    (1..=n.dim(t)).filter(|z| !used.contains(z)).collect();
                let choices = PartialInjection::all(free_sources.len(), free_targets.len());
                EdgePlan {
                    base,
                    free_sources,
                    free_targets,
                    choices,
                }
            })
            .collect();
        let mut odometer = vec![0usize; plans.len()];
        loop {
            let maps = q
                .edges()
                .iter()
                .zip(&plans)
                .zip(&odometer)
                .map(|((&(s, t), plan), &k)| {
                    let mut image = plan.base.clone();
                    let choice = &plan.choices[k];
                    for (i, &src) in plan.free_sources.iter().enumerate() {
                        let c = choice.apply(i + 1);
                        image[src - 1] = if c == 0 { 0 } else { plan.free_targets[c - 1] };
                    }
                    PartialInjection::from_parts_unchecked(dims[s], dims[t], image)
                })
                .collect();
            visit(&Rep::from_parts_unchecked(q.clone(), dims.clone(), maps));
            let mut k = 0;
            loop {
                if k == odometer.len() {
                    return;
                }
                odometer[k] += 1;
                if odometer[k] < plans[k].choices.len() {
                    break;
                }
                odometer[k] = 0;
                k += 1;
            }
        }
    }

    /// Number of extension structures of `m` by `n` in each class `R`.
    /// Equals `c_R · a_M a_N / a_R` where `c_R` is the structure constant.
    pub fn extension_counts(
        &self,
        m: &CanonicalKey,
        n: &CanonicalKey,
    ) -> Result<BTreeMap<CanonicalKey, u64>> {
        let (mr, nr) = (self.decode_nilpotent(m)?, self.decode_nilpotent(n)?);
        let mut counts = BTreeMap::new();
        self.for_each_extension(&mr, &nr, |rep| {
            *counts.entry(canonical_key(rep)).or_insert(0) += 1;
        });
        Ok(counts)
    }

    /// `[M]·[N]` as (class, coefficient) pairs in key order.
    pub fn basis_product(
        &self,
        m: &CanonicalKey,
        n: &CanonicalKey,
    ) -> Result<Vec<(CanonicalKey, u64)>> {
        let pair = (m.clone(), n.clone());
        if let Some(p) = self.products.get(&pair) {
            return Ok(p);
        }
        let (mr, nr) = (self.decode_nilpotent(m)?, self.decode_nilpotent(n)?);
        let result = if mr.is_zero() {
            vec![(n.clone(), 1)]
        } else if nr.is_zero() {
            vec![(m.clone(), 1)]
        } else {
            let mut support = BTreeSet::new();
            self.for_each_extension(&mr, &nr, |rep| {
                support.insert(canonical_key(rep));
            });
            support
                .into_iter()
                .map(|r| {
                    let c = self.structure_constant(m, n, &r)?;
                    debug_assert!(c > 0, "extension class with zero coefficient");
                    Ok((r, c))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Ok(self.products.insert(pair, result))
    }

    pub fn product(&self, x: &HallElement, y: &HallElement) -> Result<HallElement> {
        if x.quiver != self.quiver || y.quiver != self.quiver {
            return Err(Error::QuiverMismatch);
        }
        let mut terms = BTreeMap::new();
        for (m, a) in &x.terms {
            for (n, b) in &y.terms {
                let ab = a * b;
                for (r, c) in self.basis_product(m, n)? {
                    add_term(&mut terms, r, &ab * Rational::from_integer(BigInt::from(c)));
                }
            }
        }
        Ok(HallElement::from_terms(self.quiver.clone(), terms))
    }

    /// Product of a sequence of elements, left to right.
    pub fn product_all<'a>(
        &self,
        factors: impl IntoIterator<Item = &'a HallElement>,
    ) -> Result<HallElement> {
        let mut acc = self.one();
        for f in factors {
            acc = self.product(&acc, f)?;
        }
        Ok(acc)
    }

    pub fn power(&self, x: &HallElement, k: usize) -> Result<HallElement> {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.product(&acc, x)?;
        }
        Ok(acc)
    }

    /// `xy - yx`.
    pub fn commutator(&self, x: &HallElement, y: &HallElement) -> Result<HallElement> {
        Ok(&self.product(x, y)? - &self.product(y, x)?)
    }

    /// `Δ[M]` as the list of ordered pairs `(A, B)` with `A ⊕ B ≅ M`.
    pub fn coproduct_basis(&self, m: &CanonicalKey) -> Result<Vec<(CanonicalKey, CanonicalKey)>> {
        let rep = m.decode(&self.quiver)?;
        let summands: Vec<(Rep, usize)> = indecomposable_summands(&rep)
            .iter()
            .map(|(k, mult)| Ok((k.decode(&self.quiver)?, mult)))
            .collect::<Result<_>>()?;
        let mut out = Vec::new();
        let mut split = vec![0usize; summands.len()];
        loop {
            let mut a = Rep::zero(self.quiver.clone());
            let mut b = Rep::zero(self.quiver.clone());
            for ((c, mult), &k) in summands.iter().zip(&split) {
                a = a.direct_sum(&c.power(k))?;
                b = b.direct_sum(&c.power(mult - k))?;
            }
            out.push((canonical_key(&a), canonical_key(&b)));
            let mut i = 0;
            loop {
                if i == split.len() {
                    return Ok(out);
                }
                split[i] += 1;
                if split[i] <= summands[i].1 {
                    break;
                }
                split[i] = 0;
                i += 1;
            }
        }
    }

    pub fn coproduct(&self, x: &HallElement) -> Result<TensorElement> {
        let mut t = TensorElement::zero();
        for (m, c) in &x.terms {
            for (a, b) in self.coproduct_basis(m)? {
                t.add_term(a, b, c.clone());
            }
        }
        Ok(t)
    }

    /// `(Δ ⊗ id) Δ x`.
    pub fn coproduct_twice_left(&self, x: &HallElement) -> Result<TripleTensor> {
        let mut out = TripleTensor::default();
        for ((ab, c), coef) in &self.coproduct(x)?.terms {
            for (a, b) in self.coproduct_basis(ab)? {
                add_term(&mut out.terms, (a, b, c.clone()), coef.clone());
            }
        }
        Ok(out)
    }

    /// `(id ⊗ Δ) Δ x`.
    pub fn coproduct_twice_right(&self, x: &HallElement) -> Result<TripleTensor> {
        let mut out = TripleTensor::default();
        for ((a, bc), coef) in &self.coproduct(x)?.terms {
            for (b, c) in self.coproduct_basis(bc)? {
                add_term(&mut out.terms, (a.clone(), b, c), coef.clone());
            }
        }
        Ok(out)
    }

    /// Componentwise product in `H ⊗ H`: `(a⊗b)(c⊗d) = ac ⊗ bd`.
    pub fn tensor_product(&self, x: &TensorElement, y: &TensorElement) -> Result<TensorElement> {
        let mut out = TensorElement::zero();
        for ((a, b), c1) in &x.terms {
            for ((c, d), c2) in &y.terms {
                let coef = c1 * c2;
                let left = self.basis_product(a, c)?;
                let right = self.basis_product(b, d)?;
                for (p, u) in &left {
                    for (q, v) in &right {
                        let scale = Rational::from_integer(BigInt::from(u * v));
                        out.add_term(p.clone(), q.clone(), &coef * scale);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `Δx = x ⊗ 1 + 1 ⊗ x`.
    pub fn is_primitive(&self, x: &HallElement) -> Result<bool> {
        let one = self.one();
        let expected = &TensorElement::pure(x, &one) + &TensorElement::pure(&one, x);
        Ok(self.coproduct(x)? == expected)
    }

    /// Number of nilpotent classes of dimension vector `alpha`.
    pub fn graded_dim(&self, alpha: &DimVector) -> usize {
        graded_dim(&self.quiver, alpha, true)
    }

    pub fn memo_sizes(&self) -> (usize, usize) {
        (self.constants.len(), self.products.len())
    }
}

pub fn graded_dim(quiver: &Arc<Quiver>, alpha: &DimVector, nilpotent: bool) -> usize {
    crate::structure::enumerate_reps(quiver, alpha, nilpotent).len()
}

/// Element of the extended algebra `Sym(h) ⊗ H`, normal ordered with the
/// Cartan monomial `Z^a` on the left of each class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtHallElement {
    pub terms: BTreeMap<(Vec<u32>, CanonicalKey), Rational>,
}

impl ExtHallElement {
    pub fn zero() -> Self {
        ExtHallElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> ExtHallElement {
        let mut out = ExtHallElement::zero();
        for (k, v) in &self.terms {
            add_term(&mut out.terms, k.clone(), v * c);
        }
        out
    }
}

impl Add for &ExtHallElement {
    type Output = ExtHallElement;
    fn add(self, rhs: &ExtHallElement) -> ExtHallElement {
        let mut terms = self.terms.clone();
        for (k, v) in &rhs.terms {
            add_term(&mut terms, k.clone(), v.clone());
        }
        ExtHallElement { terms }
    }
}

impl Sub for &ExtHallElement {
    type Output = ExtHallElement;
    fn sub(self, rhs: &ExtHallElement) -> ExtHallElement {
        self + &rhs.scale(&-Rational::one())
    }
}

impl Mul<&Rational> for &ExtHallElement {
    type Output = ExtHallElement;
    fn mul(self, rhs: &Rational) -> ExtHallElement {
        self.scale(rhs)
    }
}

/// `HQ^e`, with `[Z_i, f] = Z_i(α) f` for `f` of degree `α` and
/// `Z_i(α_j) = a_ji`.
#[derive(Debug)]
pub struct ExtendedHall<'a> {
    hall: &'a HallAlgebra,
    cartan: CartanMatrix,
}

impl<'a> ExtendedHall<'a> {
    /// Fails on quivers with self-loops, which carry no Cartan datum.
    pub fn new(hall: &'a HallAlgebra) -> Result<Self> {
        let cartan = CartanMatrix::from_quiver(hall.quiver())?;
        Ok(ExtendedHall { hall, cartan })
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    fn rank(&self) -> usize {
        self.cartan.rank()
    }

    /// `Z_i`.
    pub fn cartan_generator(&self, i: usize) -> ExtHallElement {
        let mut exps = vec![0; self.rank()];
        exps[i] = 1;
        let mut out = ExtHallElement::zero();
        out.terms.insert(
            (exps, canonical_key(&Rep::zero(self.hall.quiver().clone()))),
            Rational::one(),
        );
        out
    }

    /// Embed `x ∈ H` as `Z^0 ⊗ x`.
    pub fn lift(&self, x: &HallElement) -> ExtHallElement {
        let zero = vec![0; self.rank()];
        ExtHallElement {
            terms: x
                .terms()
                .iter()
                .map(|(k, c)| ((zero.clone(), k.clone()), c.clone()))
                .collect(),
        }
    }

    /// `Z_i(α)`.
    pub fn evaluate(&self, i: usize, alpha: &DimVector) -> i64 {
        (0..self.rank())
            .map(|j| alpha[j] as i64 * self.cartan.entry(j, i))
            .sum()
    }

    pub fn product(&self, x: &ExtHallElement, y: &ExtHallElement) -> Result<ExtHallElement> {
        let mut out = ExtHallElement::zero();
        let r = self.rank();
        for ((a, m), c1) in &x.terms {
            let alpha = m.dimension_vector();
            let shifts: Vec<i64> = (0..r).map(|i| self.evaluate(i, &alpha)).collect();
            for ((b, n), c2) in &y.terms {
                // [M] Z^b = Π_i (Z_i - Z_i(α_M))^{b_i} [M]
                let hall = self.hall.basis_product(m, n)?;
                let mut k = vec![0u32; r];
                loop {
                    let mut coef = c1 * c2;
                    for i in 0..r {
                        let choose = binomial(b[i] as u128, k[i] as u128).expect("small exponents");
                        let shift = BigInt::from(-shifts[i]).pow(b[i] - k[i]);
                        coef *= Rational::from_integer(BigInt::from(choose) * shift);
                    }
                    if !coef.is_zero() {
                        let exps: Vec<u32> = a.iter().zip(&k).map(|(p, q)| p + q).collect();
                        for (rk, c) in &hall {
                            add_term(
                                &mut out.terms,
                                (exps.clone(), rk.clone()),
                                &coef * Rational::from_integer(BigInt::from(*c)),
                            );
                        }
                    }
                    let mut i = 0;
                    loop {
                        if i == r {
                            break;
                        }
                        k[i] += 1;
                        if k[i] <= b[i] {
                            break;
                        }
                        k[i] = 0;
                        i += 1;
                    }
                    if i == r {
                        break;
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Independent count of short exact sequences `N ↪ R ↠ M`, divided by
/// `a_M a_N`, for cross-checking structure constants on small inputs.
/// Counts subobjects through the Riedtmann identity
/// `c = X · a_R / (a_M a_N)` with `X` the number of extension structures.
pub fn riedtmann_constant(
    hall: &HallAlgebra,
    m: &CanonicalKey,
    n: &CanonicalKey,
    r: &CanonicalKey,
) -> Result<u64> {
    let q = hall.quiver();
    let counts = hall.extension_counts(m, n)?;
    let x = counts.get(r).copied().unwrap_or(0) as u128;
    let a_m = aut_count(&m.decode(q)?);
    let a_n = aut_count(&n.decode(q)?);
    let a_r = aut_count(&r.decode(q)?);
    let num = x * a_r;
    assert_eq!(num % (a_m * a_n), 0, "non-integral Riedtmann quotient");
    Ok((num / (a_m * a_n)) as u64)
}
