//! Quivers and their representations in pointed sets.
//!
//! A representation places a pointed space at every vertex and a partial
//! injection along every edge. Throughout, the *element graph* of a
//! representation has the nonzero elements as nodes and an arc `x → f_h(x)`
//! whenever `f_h(x) ≠ 0`.
//!
//! A representation is nilpotent when every sufficiently long path of edge
//! maps composes to zero. We test this as acyclicity of the element graph:
//! a cycle in the element graph gives nonzero compositions along arbitrarily
//! long paths, and without cycles any nonzero composition visits distinct
//! elements, so every path longer than the total dimension acts as zero.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Index};

use crate::error::{Error, Result};
use crate::f1vect::{PartialInjection, PointedSpace};

/// A finite directed multigraph; self-loops and parallel edges allowed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Quiver {
    num_vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl Quiver {
    pub fn new(num_vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if num_vertices == 0 {
            return Err(Error::RepShape("a quiver needs at least one vertex".into()));
        }
        for &(s, t) in &edges {
            for v in [s, t] {
                if v >= num_vertices {
                    return Err(Error::BadVertex {
                        vertex: v,
                        num_vertices,
                    });
                }
            }
        }
        Ok(Quiver {
            num_vertices,
            edges,
        })
    }

    /// One vertex with one loop.
    pub fn jordan() -> Self {
        Quiver {
            num_vertices: 1,
            edges: vec![(0, 0)],
        }
    }

    /// The equioriented cycle on residues `0..n`, edge `i` going `i → i-1`.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Domain("cyclic quiver needs n >= 2".into()));
        }
        Ok(Quiver {
            num_vertices: n,
            edges: (0..n).map(|i| (i, (i + n - 1) % n)).collect(),
        })
    }

    /// Type `A_n` on `0..n`; `forward[k]` orients edge `k` as `k → k+1`,
    /// otherwise `k+1 → k`.
    pub fn type_a(forward: &[bool]) -> Self {
        Quiver {
            num_vertices: forward.len() + 1,
            edges: forward
                .iter()
                .enumerate()
                .map(|(k, &f)| if f { (k, k + 1) } else { (k + 1, k) })
                .collect(),
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn self_loop(&self) -> Option<usize> {
        self.edges.iter().find(|(s, t)| s == t).map(|&(s, _)| s)
    }

    /// Number of edges joining `i` and `j` in either direction.
    pub fn edges_between(&self, i: usize, j: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(s, t)| (s == i && t == j) || (s == j && t == i))
            .count()
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.num_vertices];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(s, t) in &self.edges {
                for (a, b) in [(s, t), (t, s)] {
                    if a == v && !seen[b] {
                        seen[b] = true;
                        stack.push(b);
                    }
                }
            }
        }
        seen.into_iter().all(|x| x)
    }

    /// Underlying graph is a tree: connected, `r - 1` edges, no loops.
    pub fn is_tree(&self) -> bool {
        self.self_loop().is_none()
            && self.edges.len() + 1 == self.num_vertices
            && self.is_connected()
    }

    pub fn is_jordan(&self) -> bool {
        self.num_vertices == 1 && self.edges == [(0, 0)]
    }

    /// `Some(n)` when this is exactly [`Quiver::cyclic`]`(n)`.
    pub fn cyclic_length(&self) -> Option<usize> {
        let n = self.num_vertices;
        (n >= 2 && Quiver::cyclic(n).ok().as_ref() == Some(self)).then_some(n)
    }
}

/// Per-vertex dimensions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DimVector(pub Vec<usize>);

impl DimVector {
    pub fn zero(r: usize) -> Self {
        DimVector(vec![0; r])
    }

    pub fn unit(r: usize, i: usize) -> Self {
        let mut v = vec![0; r];
        v[i] = 1;
        DimVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&d| d == 0)
    }

    /// Componentwise `self ≤ other`.
    pub fn le(&self, other: &DimVector) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_sub(&self, other: &DimVector) -> Option<DimVector> {
        if !other.le(self) {
            return None;
        }
        Some(DimVector(
            self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
        ))
    }

    /// All vectors of length `r` with entries in `0..=max_entry`, in
    /// lexicographic order.
    pub fn box_below(r: usize, max_entry: usize) -> Vec<DimVector> {
        Self::all_below(&DimVector(vec![max_entry; r]))
    }

    /// All vectors componentwise below `bound`, lexicographic.
    pub fn all_below(bound: &DimVector) -> Vec<DimVector> {
        let mut out = vec![DimVector(Vec::new())];
        for &b in &bound.0 {
            let mut next = Vec::with_capacity(out.len() * (b + 1));
            for v in &out {
                for d in 0..=b {
                    let mut w = v.0.clone();
                    w.push(d);
                    next.push(DimVector(w));
                }
            }
            out = next;
        }
        out
    }

    /// All vectors of length `r` with total exactly `total`.
    pub fn with_total(r: usize, total: usize) -> Vec<DimVector> {
        fn rec(r: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<DimVector>) {
            if cur.len() + 1 == r {
                cur.push(left);
                out.push(DimVector(cur.clone()));
                cur.pop();
                return;
            }
            for d in (0..=left).rev() {
                cur.push(d);
                rec(r, left - d, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if r > 0 {
            rec(r, total, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl Add for &DimVector {
    type Output = DimVector;
    fn add(self, rhs: &DimVector) -> DimVector {
        assert_eq!(
            self.0.len(),
            rhs.0.len(),
            "dimension vectors of different length"
        );
        DimVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Index<usize> for DimVector {
    type Output = usize;
    fn index(&self, i: usize) -> &usize {
        &self.0[i]
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// A representation of a quiver in pointed sets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rep {
    quiver: Arc<Quiver>,
    spaces: Vec<PointedSpace>,
    maps: Vec<PartialInjection>,
}

/// A subrepresentation given by its nonzero elements at each vertex, sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subrep {
    pub members: Vec<Vec<usize>>,
}

impl Subrep {
    pub fn dimension_vector(&self) -> DimVector {
        DimVector(self.members.iter().map(Vec::len).collect())
    }

    pub fn contains(&self, vertex: usize, x: usize) -> bool {
        x == 0 || self.members[vertex].binary_search(&x).is_ok()
    }
}

impl Rep {
    pub fn new(quiver: Arc<Quiver>, dims: Vec<usize>, maps: Vec<PartialInjection>) -> Result<Self> {
        let rep = Rep {
            quiver,
            spaces: dims.into_iter().map(PointedSpace::new).collect(),
            maps,
        };
        rep.validate()?;
        Ok(rep)
    }

    pub(crate) fn from_parts_unchecked(
        quiver: Arc<Quiver>,
        dims: Vec<usize>,
        maps: Vec<PartialInjection>,
    ) -> Self {
        let rep = Rep {
            quiver,
            spaces: dims.into_iter().map(PointedSpace::new).collect(),
            maps,
        };
        debug_assert!(rep.validate().is_ok());
        rep
    }

    /// The zero representation, the unit of the Hall algebra.
    pub fn zero(quiver: Arc<Quiver>) -> Self {
        let r = quiver.num_vertices();
        let maps = vec![PartialInjection::zero(0, 0); quiver.num_edges()];
        Rep {
            quiver,
            spaces: vec![PointedSpace::ZERO; r],
            maps,
        }
    }

    /// Checks that there is one space per vertex, one map per edge, and that
    /// every edge map runs between the spaces at its endpoints.
    pub fn validate(&self) -> Result<()> {
        let q = &self.quiver;
        if self.spaces.len() != q.num_vertices() {
            return Err(Error::RepShape(format!(
                "{} spaces for {} vertices",
                self.spaces.len(),
                q.num_vertices()
            )));
        }
        if self.maps.len() != q.num_edges() {
            return Err(Error::RepShape(format!(
                "{} maps for {} edges",
                self.maps.len(),
                q.num_edges()
            )));
        }
        for (e, (&(s, t), f)) in q.edges().iter().zip(&self.maps).enumerate() {
            let expected = (self.spaces[s].dim, self.spaces[t].dim);
            let found = (f.src_dim(), f.tgt_dim());
            if expected != found {
                return Err(Error::EdgeShape {
                    edge: e,
                    expected,
                    found,
                });
            }
        }
        Ok(())
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn spaces(&self) -> &[PointedSpace] {
        &self.spaces
    }

    pub fn dim(&self, vertex: usize) -> usize {
        self.spaces[vertex].dim
    }

    pub fn maps(&self) -> &[PartialInjection] {
        &self.maps
    }

    pub fn map(&self, edge: usize) -> &PartialInjection {
        &self.maps[edge]
    }

    pub fn dimension_vector(&self) -> DimVector {
        DimVector(self.spaces.iter().map(|s| s.dim).collect())
    }

    pub fn total_dim(&self) -> usize {
        self.spaces.iter().map(|s| s.dim).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub(crate) fn elements(&self) -> ElementIndex {
        ElementIndex::new(self)
    }

    pub fn is_nilpotent(&self) -> bool {
        let idx = self.elements();
        let succ = idx.successors(self);
        // Iterative three-colour DFS.
        let n = idx.len();
        let mut colour = vec![0u8; n];
        for root in 0..n {
            if colour[root] != 0 {
                continue;
            }
            let mut stack = vec![(root, 0usize)];
            colour[root] = 1;
            while let Some(&mut (node, ref mut next)) = stack.last_mut() {
                if let Some(&child) = succ[node].get(*next) {
                    *next += 1;
                    match colour[child] {
                        0 => {
                            colour[child] = 1;
                            stack.push((child, 0));
                        }
                        1 => return false,
                        _ => {}
                    }
                } else {
                    colour[node] = 2;
                    stack.pop();
                }
            }
        }
        true
    }

    /// Vertexwise direct sum, `self` first.
    pub fn direct_sum(&self, other: &Rep) -> Result<Rep> {
        if self.quiver != other.quiver {
            return Err(Error::QuiverMismatch);
        }
        Ok(Rep {
            quiver: self.quiver.clone(),
            spaces: self
                .spaces
                .iter()
                .zip(&other.spaces)
                .map(|(a, b)| PointedSpace::new(a.dim + b.dim))
                .collect(),
            maps: self
                .maps
                .iter()
                .zip(&other.maps)
                .map(|(f, g)| f.direct_sum(g))
                .collect(),
        })
    }

    /// `self^{⊕ n}`.
    pub fn power(&self, n: usize) -> Rep {
        let mut acc = Rep::zero(self.quiver.clone());
        for _ in 0..n {
            acc = acc.direct_sum(self).expect("same quiver");
        }
        acc
    }

    /// Relabel elements: `perm[v][x-1]` is the new label of element `x` at
    /// vertex `v`.
    pub fn relabel(&self, perm: &[Vec<usize>]) -> Rep {
        let maps = self
            .quiver
            .edges()
            .iter()
            .zip(&self.maps)
            .map(|(&(s, t), f)| {
                let mut image = vec![0; f.src_dim()];
                for x in 1..=f.src_dim() {
                    let y = f.apply(x);
                    image[perm[s][x - 1] - 1] = if y == 0 { 0 } else { perm[t][y - 1] };
                }
                PartialInjection::from_parts_unchecked(f.src_dim(), f.tgt_dim(), image)
            })
            .collect();
        Rep {
            quiver: self.quiver.clone(),
            spaces: self.spaces.clone(),
            maps,
        }
    }

    pub fn is_closed(&self, sub: &Subrep) -> Result<()> {
        if sub.members.len() != self.spaces.len() {
            return Err(Error::RepShape(
                "subset has wrong number of vertices".into(),
            ));
        }
        for (v, m) in sub.members.iter().enumerate() {
            if m.iter().any(|&x| x == 0 || x > self.dim(v)) || m.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::RepShape(format!("bad member list at vertex {v}")));
            }
        }
        for (e, &(s, t)) in self.quiver.edges().iter().enumerate() {
            for &x in &sub.members[s] {
                if !sub.contains(t, self.maps[e].apply(x)) {
                    return Err(Error::NotClosed { edge: e });
                }
            }
        }
        Ok(())
    }

    /// All subrepresentations, as member sets, in a fixed deterministic order.
    pub fn subrep_subsets(&self) -> Vec<Subrep> {
        SubrepSearch::new(self, None).run()
    }

    /// Subrepresentations with the given dimension vector.
    pub fn subrep_subsets_of_dim(&self, dim: &DimVector) -> Vec<Subrep> {
        if !dim.le(&self.dimension_vector()) {
            return Vec::new();
        }
        SubrepSearch::new(self, Some(dim)).run()
    }

    /// All subrepresentations with their inclusions.
    pub fn subrepresentations(&self) -> Vec<(Rep, RepMorphism)> {
        self.subrep_subsets()
            .iter()
            .map(|s| self.restrict(s).expect("search yields closed subsets"))
            .collect()
    }

    /// The subrepresentation on a closed subset, elements renumbered in
    /// increasing order, with its inclusion.
    pub fn restrict(&self, sub: &Subrep) -> Result<(Rep, RepMorphism)> {
        self.is_closed(sub)?;
        let relabel = self.labels_of(sub, true);
        let dims: Vec<usize> = sub.members.iter().map(Vec::len).collect();
        let maps = self
            .quiver
            .edges()
            .iter()
            .zip(&self.maps)
            .map(|(&(s, t), f)| {
                let image = sub.members[s]
                    .iter()
                    .map(|&x| relabel[t][f.apply(x)])
                    .collect();
                PartialInjection::from_parts_unchecked(dims[s], dims[t], image)
            })
            .collect();
        let sub_rep = Rep {
            quiver: self.quiver.clone(),
            spaces: dims.iter().map(|&d| PointedSpace::new(d)).collect(),
            maps,
        };
        let components = sub
            .members
            .iter()
            .enumerate()
            .map(|(v, m)| PartialInjection::from_parts_unchecked(m.len(), self.dim(v), m.clone()))
            .collect();
        let incl = RepMorphism {
            source: sub_rep.clone(),
            target: self.clone(),
            components,
        };
        Ok((sub_rep, incl))
    }

    /// Collapse a closed subset to the basepoint; surviving elements are
    /// renumbered in increasing order.
    pub fn quotient(&self, sub: &Subrep) -> Result<(Rep, RepMorphism)> {
        self.is_closed(sub)?;
        let relabel = self.labels_of(sub, false);
        let dims: Vec<usize> = (0..self.spaces.len())
            .map(|v| self.dim(v) - sub.members[v].len())
            .collect();
        let maps = self
            .quiver
            .edges()
            .iter()
            .zip(&self.maps)
            .map(|(&(s, t), f)| {
                let image = (1..=self.dim(s))
                    .filter(|&x| relabel[s][x] != 0)
                    .map(|x| relabel[t][f.apply(x)])
                    .collect();
                PartialInjection::new(dims[s], dims[t], image)
                    .expect("quotient of a closed subset is a representation")
            })
            .collect();
        let q = Rep {
            quiver: self.quiver.clone(),
            spaces: dims.iter().map(|&d| PointedSpace::new(d)).collect(),
            maps,
        };
        let components = (0..self.spaces.len())
            .map(|v| {
                PartialInjection::from_parts_unchecked(
                    self.dim(v),
                    dims[v],
                    relabel[v][1..].to_vec(),
                )
            })
            .collect();
        let proj = RepMorphism {
            source: self.clone(),
            target: q.clone(),
            components,
        };
        Ok((q, proj))
    }

    /// Per vertex, a table `old label → new label` (`0` for dropped), keeping
    /// members (`keep_members`) or non-members.
    fn labels_of(&self, sub: &Subrep, keep_members: bool) -> Vec<Vec<usize>> {
        (0..self.spaces.len())
            .map(|v| {
                let mut table = vec![0; self.dim(v) + 1];
                let mut next = 0;
                for x in 1..=self.dim(v) {
                    if sub.contains(v, x) == keep_members {
                        next += 1;
                        table[x] = next;
                    }
                }
                table
            })
            .collect()
    }
}

/// Global numbering of the nonzero elements of a representation: vertex by
/// vertex, then by label.
#[derive(Debug, Clone)]
pub(crate) struct ElementIndex {
    offsets: Vec<usize>,
    vertex_of: Vec<usize>,
}

impl ElementIndex {
    pub(crate) fn new(rep: &Rep) -> Self {
        let mut offsets = Vec::with_capacity(rep.spaces.len() + 1);
        let mut vertex_of = Vec::new();
        let mut acc = 0;
        for (v, s) in rep.spaces.iter().enumerate() {
            offsets.push(acc);
            acc += s.dim;
            vertex_of.extend(core::iter::repeat_n(v, s.dim));
        }
        offsets.push(acc);
        ElementIndex { offsets, vertex_of }
    }

    pub(crate) fn len(&self) -> usize {
        self.vertex_of.len()
    }

    pub(crate) fn id(&self, vertex: usize, x: usize) -> usize {
        self.offsets[vertex] + x - 1
    }

    /// `(vertex, label)` of a global id.
    pub(crate) fn element(&self, id: usize) -> (usize, usize) {
        let v = self.vertex_of[id];
        (v, id - self.offsets[v] + 1)
    }

    pub(crate) fn successors(&self, rep: &Rep) -> Vec<Vec<usize>> {
        let mut succ = vec![Vec::new(); self.len()];
        for (e, &(s, t)) in rep.quiver.edges().iter().enumerate() {
            for x in 1..=rep.dim(s) {
                let y = rep.maps[e].apply(x);
                if y != 0 {
                    succ[self.id(s, x)].push(self.id(t, y));
                }
            }
        }
        succ
    }

    pub(crate) fn predecessors(&self, rep: &Rep) -> Vec<Vec<usize>> {
        let mut pred = vec![Vec::new(); self.len()];
        for (e, &(s, t)) in rep.quiver.edges().iter().enumerate() {
            for x in 1..=rep.dim(s) {
                let y = rep.maps[e].apply(x);
                if y != 0 {
                    pred[self.id(t, y)].push(self.id(s, x));
                }
            }
        }
        pred
    }
}

/// Backtracking over elements: including an element forces its forward
/// closure in, excluding it forces everything that reaches it out. Every
/// leaf is a distinct closed subset, so the search never dead-ends except
/// through the optional dimension bound.
struct SubrepSearch<'a> {
    rep: &'a Rep,
    idx: ElementIndex,
    succ: Vec<Vec<usize>>,
    pred: Vec<Vec<usize>>,
    state: Vec<u8>, // 0 unknown, 1 in, 2 out
    count_in: Vec<usize>,
    count_unknown: Vec<usize>,
    target: Option<Vec<usize>>,
    out: Vec<Subrep>,
}

impl<'a> SubrepSearch<'a> {
    fn new(rep: &'a Rep, target: Option<&DimVector>) -> Self {
        let idx = rep.elements();
        let succ = idx.successors(rep);
        let pred = idx.predecessors(rep);
        let n = idx.len();
        SubrepSearch {
            rep,
            succ,
            pred,
            state: vec![0; n],
            count_in: vec![0; rep.spaces.len()],
            count_unknown: rep.spaces.iter().map(|s| s.dim).collect(),
            target: target.map(|t| t.0.clone()),
            idx,
            out: Vec::new(),
        }
    }

    fn run(mut self) -> Vec<Subrep> {
        self.rec(0);
        self.out
    }

    fn feasible(&self) -> bool {
        match &self.target {
            None => true,
            Some(t) => t.iter().enumerate().all(|(v, &d)| {
                self.count_in[v] <= d && self.count_in[v] + self.count_unknown[v] >= d
            }),
        }
    }

    /// Set `start` and everything reachable along `adj` to `value`; returns
    /// the ids changed.
    fn flood(&mut self, start: usize, value: u8, forward: bool) -> Vec<usize> {
        let mut changed = Vec::new();
        let mut stack = vec![start];
        while let Some(node) = stack.pop() {
            if self.state[node] != 0 {
                debug_assert_eq!(self.state[node], value);
                continue;
            }
            self.state[node] = value;
            let v = self.idx.vertex_of[node];
            self.count_unknown[v] -= 1;
            if value == 1 {
                self.count_in[v] += 1;
            }
            changed.push(node);
            let adj = if forward {
                &self.succ[node]
            } else {
                &self.pred[node]
            };
            stack.extend(adj.iter().copied().filter(|&m| self.state[m] == 0));
        }
        changed
    }

    fn undo(&mut self, changed: Vec<usize>) {
        for node in changed {
            let v = self.idx.vertex_of[node];
            if self.state[node] == 1 {
                self.count_in[v] -= 1;
            }
            self.count_unknown[v] += 1;
            self.state[node] = 0;
        }
    }

    fn rec(&mut self, from: usize) {
        let next = (from..self.state.len()).find(|&i| self.state[i] == 0);
        let Some(node) = next else {
            let mut members = vec![Vec::new(); self.rep.spaces.len()];
            for (id, &s) in self.state.iter().enumerate() {
                if s == 1 {
                    let (v, x) = self.idx.element(id);
                    members[v].push(x);
                }
            }
            self.out.push(Subrep { members });
            return;
        };
        let changed = self.flood(node, 2, false);
        if self.feasible() {
            self.rec(node + 1);
        }
        self.undo(changed);
        let changed = self.flood(node, 1, true);
        if self.feasible() {
            self.rec(node + 1);
        }
        self.undo(changed);
    }
}

/// A morphism of representations: per-vertex partial injections commuting
/// with every edge map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepMorphism {
    source: Rep,
    target: Rep,
    components: Vec<PartialInjection>,
}

impl RepMorphism {
    pub fn new(source: Rep, target: Rep, components: Vec<PartialInjection>) -> Result<Self> {
        if source.quiver != target.quiver {
            return Err(Error::QuiverMismatch);
        }
        if components.len() != source.spaces.len() {
            return Err(Error::RepShape(format!(
                "{} components for {} vertices",
                components.len(),
                source.spaces.len()
            )));
        }
        for (v, phi) in components.iter().enumerate() {
            if phi.src_dim() != source.dim(v) {
                return Err(Error::DimensionMismatch {
                    expected: source.dim(v),
                    found: phi.src_dim(),
                });
            }
            if phi.tgt_dim() != target.dim(v) {
                return Err(Error::DimensionMismatch {
                    expected: target.dim(v),
                    found: phi.tgt_dim(),
                });
            }
        }
        let m = RepMorphism {
            source,
            target,
            components,
        };
        for (e, &(s, t)) in m.source.quiver.edges().iter().enumerate() {
            let left = m.target.maps[e].compose(&m.components[s])?;
            let right = m.components[t].compose(&m.source.maps[e])?;
            if left != right {
                return Err(Error::NotCommuting { edge: e });
            }
        }
        Ok(m)
    }

    pub fn identity(rep: &Rep) -> Self {
        RepMorphism {
            source: rep.clone(),
            target: rep.clone(),
            components: rep
                .spaces
                .iter()
                .map(|s| PartialInjection::identity(s.dim))
                .collect(),
        }
    }

    pub fn zero(source: &Rep, target: &Rep) -> Result<Self> {
        let components = source
            .spaces
            .iter()
            .zip(&target.spaces)
            .map(|(a, b)| PartialInjection::zero(a.dim, b.dim))
            .collect();
        RepMorphism::new(source.clone(), target.clone(), components)
    }

    pub fn source(&self) -> &Rep {
        &self.source
    }

    pub fn target(&self) -> &Rep {
        &self.target
    }

    pub fn components(&self) -> &[PartialInjection] {
        &self.components
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &RepMorphism) -> Result<RepMorphism> {
        if other.target != self.source {
            return Err(Error::QuiverMismatch);
        }
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(f, g)| f.compose(g))
            .collect::<Result<Vec<_>>>()?;
        Ok(RepMorphism {
            source: other.source.clone(),
            target: self.target.clone(),
            components,
        })
    }

    pub fn is_injective(&self) -> bool {
        self.components.iter().all(PartialInjection::is_injective)
    }

    pub fn is_surjective(&self) -> bool {
        self.components.iter().all(PartialInjection::is_surjective)
    }

    /// Vertexwise kernel with the restricted edge maps, and its inclusion.
    pub fn kernel(&self) -> (Rep, RepMorphism) {
        let sub = Subrep {
            members: self
                .components
                .iter()
                .map(|phi| phi.kernel().1.images().to_vec())
                .collect(),
        };
        self.source
            .restrict(&sub)
            .expect("kernel of a morphism is a subrepresentation")
    }

    /// Vertexwise cokernel with the induced edge maps, and the projection.
    pub fn cokernel(&self) -> (Rep, RepMorphism) {
        let sub = Subrep {
            members: self
                .components
                .iter()
                .map(|phi| {
                    let mut im: Vec<usize> =
                        phi.images().iter().copied().filter(|&y| y != 0).collect();
                    im.sort_unstable();
                    im
                })
                .collect(),
        };
        self.target
            .quotient(&sub)
            .expect("image of a morphism is a subrepresentation")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{canonical_key, simple};

    fn a2() -> Arc<Quiver> {
        Arc::new(Quiver::new(2, vec![(0, 1)]).unwrap())
    }

    fn pi(src: usize, tgt: usize, image: &[usize]) -> PartialInjection {
        PartialInjection::new(src, tgt, image.to_vec()).unwrap()
    }

    /// `R_12`: one element at each vertex of `0 → 1`, mapped across.
    fn r12() -> Rep {
        Rep::new(a2(), vec![1, 1], vec![pi(1, 1, &[1])]).unwrap()
    }

    fn jordan_rep(image: &[usize]) -> Rep {
        let n = image.len();
        Rep::new(Arc::new(Quiver::jordan()), vec![n], vec![pi(n, n, image)]).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(Rep::zero(a2()).validate().is_ok());
        assert!(r12().validate().is_ok());
        let err = Rep::new(a2(), vec![2, 1], vec![pi(1, 1, &[1])]).unwrap_err();
        assert_eq!(
            err,
            Error::EdgeShape {
                edge: 0,
                expected: (2, 1),
                found: (1, 1)
            }
        );
        assert!(alloc::format!("{err}").contains("e0"));
        assert!(Rep::new(a2(), vec![1], vec![pi(1, 1, &[1])]).is_err());
    }

    #[test]
    fn quiver_constructors() {
        assert!(Quiver::new(2, vec![(0, 2)]).is_err());
        assert_eq!(
            Quiver::cyclic(3).unwrap().edges(),
            &[(0, 2), (1, 0), (2, 1)]
        );
        assert_eq!(Quiver::cyclic(3).unwrap().cyclic_length(), Some(3));
        assert!(Quiver::type_a(&[true, false]).is_tree());
        assert!(!Quiver::cyclic(2).unwrap().is_tree());
        assert!(Quiver::jordan().is_jordan());
        assert_eq!(Quiver::jordan().self_loop(), Some(0));
    }

    #[test]
    fn kernel_cokernel_examples() {
        let v = r12();
        let (k, _) = RepMorphism::identity(&v).kernel();
        assert!(k.is_zero());
        let (c, _) = RepMorphism::identity(&v).cokernel();
        assert!(c.is_zero());

        let w = Rep::new(a2(), vec![2, 1], vec![pi(2, 1, &[1, 0])]).unwrap();
        let zero = RepMorphism::zero(&v, &w).unwrap();
        assert_eq!(canonical_key(&zero.kernel().0), canonical_key(&v));
        assert_eq!(canonical_key(&zero.cokernel().0), canonical_key(&w));

        // R_12 → S_2 is not a morphism (square fails); R_12 → S_1 is.
        let s1 = simple(a2(), 0).unwrap();
        let s2 = simple(a2(), 1).unwrap();
        assert_eq!(
            RepMorphism::new(v.clone(), s2.clone(), vec![pi(1, 0, &[0]), pi(1, 1, &[1])]),
            Err(Error::NotCommuting { edge: 0 })
        );
        let proj =
            RepMorphism::new(v.clone(), s1.clone(), vec![pi(1, 1, &[1]), pi(1, 0, &[0])]).unwrap();
        let (k, incl) = proj.kernel();
        assert_eq!(canonical_key(&k), canonical_key(&s2));
        assert!(incl.is_injective());
        assert!(proj
            .compose(&incl)
            .unwrap()
            .components()
            .iter()
            .all(|c| c.is_zero()));
    }

    #[test]
    fn direct_sum_examples() {
        let v = r12();
        assert_eq!(v.direct_sum(&Rep::zero(a2())).unwrap(), v);
        let s = simple(a2(), 0)
            .unwrap()
            .direct_sum(&simple(a2(), 1).unwrap())
            .unwrap();
        assert_eq!(s.dimension_vector(), DimVector(vec![1, 1]));
        assert!(s.map(0).is_zero());
        assert_eq!(
            v.direct_sum(&s).unwrap().dimension_vector(),
            &v.dimension_vector() + &s.dimension_vector()
        );
        let j = jordan_rep(&[0]);
        assert_eq!(v.direct_sum(&j), Err(Error::QuiverMismatch));
    }

    #[test]
    fn nilpotency_examples() {
        assert!(r12().is_nilpotent());
        assert!(jordan_rep(&[0, 1, 2]).is_nilpotent());
        assert!(!jordan_rep(&[2, 3, 1]).is_nilpotent());
        assert!(!jordan_rep(&[1]).is_nilpotent());
        let cyc = Arc::new(Quiver::cyclic(2).unwrap());
        let r = Rep::new(cyc, vec![1, 1], vec![pi(1, 1, &[1]), pi(1, 1, &[1])]).unwrap();
        assert!(!r.is_nilpotent());
    }

    #[test]
    fn subrep_examples() {
        let zero = Rep::zero(a2());
        assert_eq!(zero.subrepresentations().len(), 1);
        let n2 = jordan_rep(&[0, 1]);
        let subs = n2.subrep_subsets();
        assert_eq!(subs.len(), 3);
        let mut dims: Vec<usize> = subs.iter().map(|s| s.members[0].len()).collect();
        dims.sort();
        assert_eq!(dims, vec![0, 1, 2]);
        let point = Arc::new(Quiver::new(1, vec![]).unwrap());
        let ss = Rep::new(point, vec![2], vec![]).unwrap();
        assert_eq!(ss.subrep_subsets().len(), 4);
    }

    #[test]
    fn quotient_examples() {
        let v = r12();
        let none = Subrep {
            members: vec![vec![], vec![]],
        };
        assert_eq!(v.quotient(&none).unwrap().0, v);
        let all = Subrep {
            members: vec![vec![1], vec![1]],
        };
        assert!(v.quotient(&all).unwrap().0.is_zero());
        let target = Subrep {
            members: vec![vec![], vec![1]],
        };
        let (q, proj) = v.quotient(&target).unwrap();
        assert_eq!(canonical_key(&q), canonical_key(&simple(a2(), 0).unwrap()));
        assert!(proj.is_surjective());
        let source = Subrep {
            members: vec![vec![1], vec![]],
        };
        assert_eq!(v.quotient(&source), Err(Error::NotClosed { edge: 0 }));
    }

    #[test]
    fn dim_vector_enumeration() {
        assert_eq!(DimVector::with_total(3, 2).len(), 6);
        assert_eq!(DimVector::box_below(2, 2).len(), 9);
        assert_eq!(DimVector::all_below(&DimVector(vec![1, 2])).len(), 6);
    }
}
