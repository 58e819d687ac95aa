//! Structure theory of `Rep(Q, F1)`: simples, composition series,
//! Krull-Schmidt decomposition, canonical forms and enumeration of
//! isomorphism classes.
//!
//! # Decomposition
//!
//! The connected components of the undirected element graph are direct
//! summands. A component is closed under every edge map and under every
//! preimage, so both it and its complement are subrepresentations and the
//! representation splits as their sum. A connected element graph cannot
//! split: in `U ⊕ W` no arc joins an element of `U` to one of `W`.
//!
//! # Canonical form
//!
//! Edge maps are partial injections, so from any element each edge leads to
//! at most one image and at most one preimage. Fixing a start element of a
//! connected component therefore determines a unique breadth-first labeling
//! of the whole component; its code (vertex and edge images per label) is an
//! invariant of the pair (component, start). The component code is the
//! minimum over starts, the key of a representation is built from its
//! components sorted by code, and an automorphism of a component is the same
//! thing as a second start with the minimal code.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::f1vect::PartialInjection;
use crate::quiver::{DimVector, ElementIndex, Quiver, Rep, Subrep};

/// Canonical byte encoding of an isomorphism class.
///
/// Layout (all integers big-endian `u16`): vertex count, edge count, the
/// dimension vector, then the image list of every edge map of the canonical
/// representative. Two representations of the same quiver have equal keys
/// iff they are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey {
    bytes: Vec<u8>,
}

const KEY_PREFIX: &str = "f1k1:";

impl CanonicalKey {
    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    fn word(&self, i: usize) -> usize {
        u16::from_be_bytes([self.bytes[2 * i], self.bytes[2 * i + 1]]) as usize
    }

    pub fn num_vertices(&self) -> usize {
        self.word(0)
    }

    pub fn dimension_vector(&self) -> DimVector {
        DimVector((0..self.num_vertices()).map(|v| self.word(2 + v)).collect())
    }

    pub fn total_dim(&self) -> usize {
        (0..self.num_vertices()).map(|v| self.word(2 + v)).sum()
    }

    /// Versioned hex form, e.g. `f1k1:0001000100010000`.
    pub fn to_hex(&self) -> String {
        use core::fmt::Write;
        let mut s = String::with_capacity(KEY_PREFIX.len() + 2 * self.bytes.len());
        s.push_str(KEY_PREFIX);
        for b in &self.bytes {
            write!(s, "{b:02x}").expect("writing to a String");
        }
        s
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        let body = s
            .strip_prefix(KEY_PREFIX)
            .ok_or_else(|| Error::BadKey(alloc::format!("missing `{KEY_PREFIX}` prefix")))?;
        if body.len() % 4 != 0 || body.len() < 8 {
            return Err(Error::BadKey("truncated key".into()));
        }
        let bytes = (0..body.len() / 2)
            .map(|i| u8::from_str_radix(&body[2 * i..2 * i + 2], 16))
            .collect::<core::result::Result<Vec<u8>, _>>()
            .map_err(|_| Error::BadKey("non-hex digit".into()))?;
        Ok(CanonicalKey { bytes })
    }

    /// Rebuild the canonical representative on `quiver`.
    pub fn decode(&self, quiver: &Arc<Quiver>) -> Result<Rep> {
        let words = self.bytes.len() / 2;
        let bad = |msg: &str| Error::BadKey(msg.into());
        if words < 2 || self.word(0) != quiver.num_vertices() || self.word(1) != quiver.num_edges()
        {
            return Err(bad("key does not belong to this quiver"));
        }
        let r = quiver.num_vertices();
        if words < 2 + r {
            return Err(bad("truncated key"));
        }
        let dims: Vec<usize> = (0..r).map(|v| self.word(2 + v)).collect();
        let mut pos = 2 + r;
        let mut maps = Vec::with_capacity(quiver.num_edges());
        for &(s, t) in quiver.edges() {
            if pos + dims[s] > words {
                return Err(bad("truncated key"));
            }
            let image = (pos..pos + dims[s]).map(|i| self.word(i)).collect();
            pos += dims[s];
            maps.push(
                PartialInjection::new(dims[s], dims[t], image)
                    .map_err(|e| Error::BadKey(alloc::format!("{e}")))?,
            );
        }
        if pos != words {
            return Err(bad("trailing data in key"));
        }
        Rep::new(quiver.clone(), dims, maps)
    }

    fn encode(rep: &Rep) -> Self {
        let q = rep.quiver();
        let mut bytes = Vec::with_capacity(2 * (2 + q.num_vertices() + rep.total_dim() * 2));
        let mut push = |x: usize| {
            let w = u16::try_from(x).expect("dimensions above 65535 are not supported");
            bytes.extend_from_slice(&w.to_be_bytes());
        };
        push(q.num_vertices());
        push(q.num_edges());
        for s in rep.spaces() {
            push(s.dim);
        }
        for f in rep.maps() {
            for &y in f.images() {
                push(y);
            }
        }
        CanonicalKey { bytes }
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

/// Canonical key together with the data used to reach it.
#[derive(Debug, Clone)]
pub struct CanonicalForm {
    pub key: CanonicalKey,
    /// The canonical representative (what `key` encodes).
    pub representative: Rep,
    /// `relabeling[v][x-1]` is the canonical label of element `x` at `v`.
    pub relabeling: Vec<Vec<usize>>,
    pub automorphisms: u128,
}

struct Components {
    /// Global element ids per component.
    members: Vec<Vec<usize>>,
}

fn components(rep: &Rep, idx: &ElementIndex) -> Components {
    let succ = idx.successors(rep);
    let pred = idx.predecessors(rep);
    let n = idx.len();
    let mut comp = vec![usize::MAX; n];
    let mut members = Vec::new();
    for root in 0..n {
        if comp[root] != usize::MAX {
            continue;
        }
        let c = members.len();
        let mut list = vec![root];
        comp[root] = c;
        let mut i = 0;
        while i < list.len() {
            let u = list[i];
            i += 1;
            for &w in succ[u].iter().chain(&pred[u]) {
                if comp[w] == usize::MAX {
                    comp[w] = c;
                    list.push(w);
                }
            }
        }
        list.sort_unstable();
        members.push(list);
    }
    Components { members }
}

/// Breadth-first traversal of the component containing `start`.
/// Returns the visit order and the code; `label` is scratch space of length
/// `idx.len()` filled with `u32::MAX`, restored on return.
fn traverse(
    rep: &Rep,
    idx: &ElementIndex,
    transposes: &[PartialInjection],
    start: usize,
    label: &mut [u32],
) -> (Vec<usize>, Vec<u32>) {
    let q = rep.quiver();
    let mut order = vec![start];
    label[start] = 0;
    let mut i = 0;
    while i < order.len() {
        let (v, x) = idx.element(order[i]);
        i += 1;
        for (e, &(s, t)) in q.edges().iter().enumerate() {
            if s == v {
                let y = rep.map(e).apply(x);
                if y != 0 {
                    let id = idx.id(t, y);
                    if label[id] == u32::MAX {
                        label[id] = order.len() as u32;
                        order.push(id);
                    }
                }
            }
            if t == v {
                let p = transposes[e].apply(x);
                if p != 0 {
                    let id = idx.id(s, p);
                    if label[id] == u32::MAX {
                        label[id] = order.len() as u32;
                        order.push(id);
                    }
                }
            }
        }
    }
    let mut code = Vec::with_capacity(order.len() * (1 + q.num_edges()));
    for &u in &order {
        let (v, x) = idx.element(u);
        code.push(v as u32);
        for (e, &(s, t)) in q.edges().iter().enumerate() {
            if s == v {
                let y = rep.map(e).apply(x);
                code.push(if y == 0 { 0 } else { label[idx.id(t, y)] + 1 });
            }
        }
    }
    for &u in &order {
        label[u] = u32::MAX;
    }
    (order, code)
}

struct ComponentCode {
    code: Vec<u32>,
    order: Vec<usize>,
    automorphisms: u128,
}

fn component_code(
    rep: &Rep,
    idx: &ElementIndex,
    transposes: &[PartialInjection],
    members: &[usize],
    label: &mut [u32],
) -> ComponentCode {
    let min_vertex = members
        .iter()
        .map(|&u| idx.element(u).0)
        .min()
        .expect("nonempty component");
    let mut best: Option<ComponentCode> = None;
    for &start in members.iter().filter(|&&u| idx.element(u).0 == min_vertex) {
        let (order, code) = traverse(rep, idx, transposes, start, label);
        match &mut best {
            Some(b) if code == b.code => b.automorphisms += 1,
            Some(b) if code > b.code => {}
            _ => {
                best = Some(ComponentCode {
                    code,
                    order,
                    automorphisms: 1,
                })
            }
        }
    }
    best.expect("nonempty component")
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

pub fn canonical_form(rep: &Rep) -> CanonicalForm {
    let idx = rep.elements();
    let transposes: Vec<PartialInjection> =
        rep.maps().iter().map(PartialInjection::transpose).collect();
    let comps = components(rep, &idx);
    let mut label = vec![u32::MAX; idx.len()];
    let mut codes: Vec<ComponentCode> = comps
        .members
        .iter()
        .map(|m| component_code(rep, &idx, &transposes, m, &mut label))
        .collect();
    codes.sort_by(|a, b| a.code.cmp(&b.code));

    let mut automorphisms: u128 = 1;
    let mut i = 0;
    while i < codes.len() {
        let mut j = i;
        while j < codes.len() && codes[j].code == codes[i].code {
            j += 1;
        }
        let m = j - i;
        automorphisms = automorphisms
            .checked_mul(factorial(m))
            .and_then(|a| a.checked_mul(codes[i].automorphisms.pow(m as u32)))
            .expect("automorphism count overflows u128");
        i = j;
    }

    let r = rep.quiver().num_vertices();
    let mut next = vec![0usize; r];
    let mut relabeling: Vec<Vec<usize>> = (0..r).map(|v| vec![0; rep.dim(v)]).collect();
    for c in &codes {
        for &u in &c.order {
            let (v, x) = idx.element(u);
            next[v] += 1;
            relabeling[v][x - 1] = next[v];
        }
    }
    let representative = rep.relabel(&relabeling);
    CanonicalForm {
        key: CanonicalKey::encode(&representative),
        representative,
        relabeling,
        automorphisms,
    }
}

pub fn canonical_key(rep: &Rep) -> CanonicalKey {
    canonical_form(rep).key
}

pub fn iso(v: &Rep, w: &Rep) -> Result<bool> {
    if v.quiver() != w.quiver() {
        return Err(Error::QuiverMismatch);
    }
    Ok(v.dimension_vector() == w.dimension_vector() && canonical_key(v) == canonical_key(w))
}

/// `#Aut(V)`.
pub fn aut_count(rep: &Rep) -> u128 {
    canonical_form(rep).automorphisms
}

/// `S_i`: one-dimensional at `i`, zero elsewhere.
pub fn simple(quiver: Arc<Quiver>, i: usize) -> Result<Rep> {
    let r = quiver.num_vertices();
    if i >= r {
        return Err(Error::BadVertex {
            vertex: i,
            num_vertices: r,
        });
    }
    let dims = DimVector::unit(r, i).0;
    let maps = quiver
        .edges()
        .iter()
        .map(|&(s, t)| PartialInjection::zero(dims[s], dims[t]))
        .collect();
    Rep::new(quiver, dims, maps)
}

/// Elements killed by every outgoing edge map, as `(vertex, label)` in
/// lexicographic order. Each spans a copy of a simple inside `rep`.
pub fn socle_elements(rep: &Rep) -> Vec<(usize, usize)> {
    let q = rep.quiver();
    let mut out = Vec::new();
    for v in 0..q.num_vertices() {
        for x in 1..=rep.dim(v) {
            let sink = q
                .edges()
                .iter()
                .enumerate()
                .all(|(e, &(s, _))| s != v || rep.map(e).apply(x) == 0);
            if sink {
                out.push((v, x));
            }
        }
    }
    out
}

/// Vertex labels of the simple subquotients of a maximal filtration, bottom
/// first. The least socle element is peeled off at every step.
pub fn composition_series(rep: &Rep) -> Result<Vec<usize>> {
    composition_series_with(rep, |_| 0)
}

/// As [`composition_series`], with `choose` picking an index into the list
/// of available socle elements at every step.
pub fn composition_series_with(
    rep: &Rep,
    mut choose: impl FnMut(&[(usize, usize)]) -> usize,
) -> Result<Vec<usize>> {
    if !rep.is_nilpotent() {
        return Err(Error::NotNilpotent);
    }
    let r = rep.quiver().num_vertices();
    let mut labels = Vec::with_capacity(rep.total_dim());
    let mut cur = rep.clone();
    while !cur.is_zero() {
        let socle = socle_elements(&cur);
        let (v, x) = socle[choose(&socle) % socle.len()];
        let mut members = vec![Vec::new(); r];
        members[v].push(x);
        cur = cur.quotient(&Subrep { members })?.0;
        labels.push(v);
    }
    Ok(labels)
}

/// Multiset of indecomposable summands.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Decomposition {
    pub summands: BTreeMap<CanonicalKey, usize>,
}

impl Decomposition {
    pub fn num_summands(&self) -> usize {
        self.summands.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CanonicalKey, usize)> {
        self.summands.iter().map(|(k, &m)| (k, m))
    }

    /// Direct sum of the representatives, summands in key order.
    pub fn rebuild(&self, quiver: &Arc<Quiver>) -> Result<Rep> {
        let mut acc = Rep::zero(quiver.clone());
        for (key, m) in self.iter() {
            let rep = key.decode(quiver)?;
            for _ in 0..m {
                acc = acc.direct_sum(&rep)?;
            }
        }
        Ok(acc)
    }
}

/// The connected components of the element graph as subsets.
pub fn component_subsets(rep: &Rep) -> Vec<Subrep> {
    let idx = rep.elements();
    let r = rep.quiver().num_vertices();
    components(rep, &idx)
        .members
        .into_iter()
        .map(|m| {
            let mut members = vec![Vec::new(); r];
            for u in m {
                let (v, x) = idx.element(u);
                members[v].push(x);
            }
            Subrep { members }
        })
        .collect()
}

pub fn indecomposable_summands(rep: &Rep) -> Decomposition {
    let mut summands = BTreeMap::new();
    for sub in component_subsets(rep) {
        let (part, _) = rep
            .restrict(&sub)
            .expect("components are subrepresentations");
        *summands.entry(canonical_key(&part)).or_insert(0) += 1;
    }
    Decomposition { summands }
}

pub fn is_indecomposable(rep: &Rep) -> Result<bool> {
    if rep.is_zero() {
        return Err(Error::ZeroRepresentation);
    }
    let idx = rep.elements();
    Ok(components(rep, &idx).members.len() == 1)
}

/// Whether the vertices with nonzero entries are connected in the underlying
/// graph (the zero vector counts as disconnected).
fn support_connected(quiver: &Quiver, d: &DimVector) -> bool {
    let support: Vec<usize> = (0..d.len()).filter(|&v| d[v] > 0).collect();
    let Some(&root) = support.first() else {
        return false;
    };
    let mut seen = vec![false; d.len()];
    seen[root] = true;
    let mut stack = vec![root];
    while let Some(v) = stack.pop() {
        for &(s, t) in quiver.edges() {
            for (a, b) in [(s, t), (t, s)] {
                if a == v && d[b] > 0 && !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
    }
    support.iter().all(|&v| seen[v])
}

/// Calls `visit` on every representation with dimension vector `d`
/// (all assignments of edge maps, odometer order).
pub fn for_each_rep(quiver: &Arc<Quiver>, d: &DimVector, mut visit: impl FnMut(&Rep)) {
    assert_eq!(d.len(), quiver.num_vertices(), "dimension vector length");
    let choices: Vec<Vec<PartialInjection>> = quiver
        .edges()
        .iter()
        .map(|&(s, t)| PartialInjection::all(d[s], d[t]))
        .collect();
    let mut odometer = vec![0usize; choices.len()];
    loop {
        let maps = odometer
            .iter()
            .zip(&choices)
            .map(|(&i, c)| c[i].clone())
            .collect();
        let rep = Rep::from_parts_unchecked(quiver.clone(), d.0.clone(), maps);
        visit(&rep);
        let mut k = 0;
        loop {
            if k == odometer.len() {
                return;
            }
            odometer[k] += 1;
            if odometer[k] < choices[k].len() {
                break;
            }
            odometer[k] = 0;
            k += 1;
        }
    }
}

/// All isomorphism classes with dimension vector `d`, sorted by key.
pub fn enumerate_reps(
    quiver: &Arc<Quiver>,
    d: &DimVector,
    nilpotent_only: bool,
) -> Vec<CanonicalKey> {
    let mut seen = BTreeSet::new();
    for_each_rep(quiver, d, |rep| {
        if !nilpotent_only || rep.is_nilpotent() {
            seen.insert(canonical_key(rep));
        }
    });
    seen.into_iter().collect()
}

/// Indecomposable classes of total dimension `1..=max_total_dim`, sorted by
/// key.
pub fn enumerate_indecomposables(
    quiver: &Arc<Quiver>,
    max_total_dim: usize,
    nilpotent_only: bool,
) -> Vec<CanonicalKey> {
    let mut out = BTreeSet::new();
    for total in 1..=max_total_dim {
        for d in DimVector::with_total(quiver.num_vertices(), total) {
            if !support_connected(quiver, &d) {
                continue;
            }
            for_each_rep(quiver, &d, |rep| {
                if (!nilpotent_only || rep.is_nilpotent())
                    && is_indecomposable(rep).expect("nonzero")
                {
                    out.insert(canonical_key(rep));
                }
            });
        }
    }
    out.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::jordan::nilpotent_block;

    fn a2() -> Arc<Quiver> {
        Arc::new(Quiver::new(2, vec![(0, 1)]).unwrap())
    }

    fn pi(src: usize, tgt: usize, image: &[usize]) -> PartialInjection {
        PartialInjection::new(src, tgt, image.to_vec()).unwrap()
    }

    fn r12() -> Rep {
        Rep::new(a2(), vec![1, 1], vec![pi(1, 1, &[1])]).unwrap()
    }

    #[test]
    fn simple_examples() {
        let s = simple(a2(), 1).unwrap();
        assert_eq!(s.dimension_vector(), DimVector(vec![0, 1]));
        assert_eq!(s.subrep_subsets().len(), 2);
        assert!(is_indecomposable(&s).unwrap());
        assert!(s.is_nilpotent());
        assert!(simple(a2(), 2).is_err());
    }

    #[test]
    fn composition_series_examples() {
        assert_eq!(
            composition_series(&simple(a2(), 0).unwrap()).unwrap(),
            vec![0]
        );
        let mut labels = composition_series(&r12()).unwrap();
        assert_eq!(labels, vec![1, 0]);
        labels.sort();
        assert_eq!(labels, vec![0, 1]);
        assert_eq!(
            composition_series(&nilpotent_block(3)).unwrap(),
            vec![0, 0, 0]
        );
        let cyc = Rep::new(Arc::new(Quiver::jordan()), vec![1], vec![pi(1, 1, &[1])]).unwrap();
        assert_eq!(composition_series(&cyc), Err(Error::NotNilpotent));
    }

    #[test]
    fn summand_examples() {
        let d = indecomposable_summands(&r12());
        assert_eq!(d.num_summands(), 1);
        let s1 = simple(a2(), 0).unwrap();
        let d = indecomposable_summands(&s1.power(2));
        assert_eq!(d.summands.get(&canonical_key(&s1)), Some(&2));
        let v = Rep::new(a2(), vec![2, 2], vec![pi(2, 2, &[1, 0])]).unwrap();
        let d = indecomposable_summands(&v);
        let expected: BTreeMap<_, _> = [
            (canonical_key(&r12()), 1),
            (canonical_key(&s1), 1),
            (canonical_key(&simple(a2(), 1).unwrap()), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(d.summands, expected);
    }

    #[test]
    fn indecomposable_examples() {
        let s0 = simple(a2(), 0).unwrap();
        let s1 = simple(a2(), 1).unwrap();
        assert!(is_indecomposable(&s0).unwrap());
        assert!(!is_indecomposable(&s0.direct_sum(&s1).unwrap()).unwrap());
        assert!(is_indecomposable(&nilpotent_block(2)).unwrap());
        assert_eq!(
            is_indecomposable(&Rep::zero(a2())),
            Err(Error::ZeroRepresentation)
        );
    }

    #[test]
    fn automorphism_examples() {
        let s = simple(a2(), 0).unwrap();
        for n in 0..=5 {
            assert_eq!(aut_count(&s.power(n)), factorial(n));
        }
        for m in 1..=5 {
            assert_eq!(aut_count(&nilpotent_block(m)), 1);
        }
        // C_3 on the Jordan quiver: rotations only.
        let c3 = Rep::new(
            Arc::new(Quiver::jordan()),
            vec![3],
            vec![pi(3, 3, &[2, 3, 1])],
        )
        .unwrap();
        assert_eq!(aut_count(&c3), 3);
    }

    #[test]
    fn key_round_trip() {
        let v = Rep::new(a2(), vec![2, 2], vec![pi(2, 2, &[0, 2])]).unwrap();
        let key = canonical_key(&v);
        let hex = key.to_hex();
        assert!(hex.starts_with("f1k1:"));
        assert_eq!(CanonicalKey::from_hex(&hex).unwrap(), key);
        let back = key.decode(&a2()).unwrap();
        assert!(iso(&back, &v).unwrap());
        assert_eq!(key.dimension_vector(), DimVector(vec![2, 2]));
        assert!(CanonicalKey::from_hex("f1k2:00").is_err());
        assert!(key.decode(&Arc::new(Quiver::jordan())).is_err());
    }

    #[test]
    fn enumerate_examples() {
        let jq = Arc::new(Quiver::jordan());
        assert_eq!(enumerate_reps(&jq, &DimVector(vec![4]), true).len(), 5);
        assert_eq!(enumerate_reps(&a2(), &DimVector(vec![1, 1]), true).len(), 2);
        let d4 = Arc::new(Quiver::new(4, vec![(0, 1), (2, 1), (3, 1)]).unwrap());
        assert_eq!(enumerate_reps(&d4, &DimVector::unit(4, 2), true).len(), 1);
        let a3 = Arc::new(Quiver::type_a(&[true, true]));
        assert_eq!(enumerate_indecomposables(&a3, 3, true).len(), 6);
        assert_eq!(enumerate_indecomposables(&jq, 4, true).len(), 4);
        // Without the nilpotency restriction the Jordan quiver also has the
        // cyclic blocks.
        assert_eq!(enumerate_indecomposables(&jq, 3, false).len(), 6);
    }
}
