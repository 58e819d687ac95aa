//! Independent oracles shared by the integration tests. Everything here is
//! deliberately naive: exhaustive relabeling for isomorphism, exhaustive
//! subset search for splittings.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use f1hall::quiver::{Quiver, Rep, Subrep};
use f1hall::PartialInjection;
use rand::seq::SliceRandom;
use rand::Rng;

/// All permutations of `1..=n` as image lists.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n);
            out.push(q);
        }
    }
    out
}

/// Every choice of one permutation per vertex.
fn relabelings(dims: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let mut out = vec![vec![]];
    for &d in dims {
        let perms = permutations(d);
        let mut next = Vec::new();
        for prefix in &out {
            for p in &perms {
                let mut v = prefix.clone();
                v.push(p.clone());
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// Isomorphism by trying every per-vertex relabeling.
pub fn brute_iso(v: &Rep, w: &Rep) -> bool {
    if v.dimension_vector() != w.dimension_vector() {
        return false;
    }
    let dims = v.dimension_vector().0;
    relabelings(&dims)
        .iter()
        .any(|perm| v.relabel(perm).maps() == w.maps())
}

/// Number of automorphisms by the same exhaustive search.
pub fn brute_aut(v: &Rep) -> u128 {
    let dims = v.dimension_vector().0;
    relabelings(&dims)
        .iter()
        .filter(|perm| v.relabel(perm).maps() == v.maps())
        .count() as u128
}

fn elements(rep: &Rep) -> Vec<(usize, usize)> {
    (0..rep.quiver().num_vertices())
        .flat_map(|v| (1..=rep.dim(v)).map(move |x| (v, x)))
        .collect()
}

fn subset(rep: &Rep, chosen: &[(usize, usize)]) -> Subrep {
    let mut members = vec![Vec::new(); rep.quiver().num_vertices()];
    for &(v, x) in chosen {
        members[v].push(x);
    }
    for m in &mut members {
        m.sort_unstable();
    }
    Subrep { members }
}

/// Split into indecomposable pieces by searching for any subset whose
/// complement is also closed under every edge map.
pub fn brute_split(rep: &Rep) -> Vec<Rep> {
    let elems = elements(rep);
    let n = elems.len();
    if n == 0 {
        return vec![];
    }
    for mask in 1..(1u32 << n) - 1 {
        let inside: Vec<_> = (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| elems[i])
            .collect();
        let outside: Vec<_> = (0..n)
            .filter(|i| mask >> i & 1 == 0)
            .map(|i| elems[i])
            .collect();
        let (a, b) = (subset(rep, &inside), subset(rep, &outside));
        if rep.is_closed(&a).is_ok() && rep.is_closed(&b).is_ok() {
            let mut pieces = brute_split(&rep.restrict(&a).unwrap().0);
            pieces.extend(brute_split(&rep.restrict(&b).unwrap().0));
            return pieces;
        }
    }
    vec![rep.clone()]
}

/// Whether two lists of representations agree as multisets up to
/// isomorphism.
pub fn same_multiset(xs: &[Rep], ys: &[Rep]) -> bool {
    if xs.len() != ys.len() {
        return false;
    }
    let mut used = vec![false; ys.len()];
    xs.iter().all(
        |x| match (0..ys.len()).find(|&j| !used[j] && brute_iso(x, &ys[j])) {
            Some(j) => {
                used[j] = true;
                true
            }
            None => false,
        },
    )
}

pub fn random_partial_injection<R: Rng>(rng: &mut R, src: usize, tgt: usize) -> PartialInjection {
    let mut targets: Vec<usize> = (1..=tgt).collect();
    targets.shuffle(rng);
    let image = (0..src)
        .map(|_| {
            if rng.gen_bool(0.75) {
                targets.pop().unwrap_or(0)
            } else {
                0
            }
        })
        .collect();
    PartialInjection::new(src, tgt, image).unwrap()
}

/// Random representation with total dimension in `1..=max_total`.
pub fn random_rep<R: Rng>(rng: &mut R, q: &Arc<Quiver>, max_total: usize) -> Rep {
    let r = q.num_vertices();
    let total = rng.gen_range(1..=max_total);
    let mut dims = vec![0; r];
    for _ in 0..total {
        dims[rng.gen_range(0..r)] += 1;
    }
    let maps = q
        .edges()
        .iter()
        .map(|&(s, t)| random_partial_injection(rng, dims[s], dims[t]))
        .collect();
    Rep::new(q.clone(), dims, maps).unwrap()
}

pub fn random_nilpotent_rep<R: Rng>(rng: &mut R, q: &Arc<Quiver>, max_total: usize) -> Rep {
    loop {
        let rep = random_rep(rng, q, max_total);
        if rep.is_nilpotent() {
            return rep;
        }
    }
}

/// A random permutation per vertex.
pub fn random_relabeling<R: Rng>(rng: &mut R, rep: &Rep) -> Vec<Vec<usize>> {
    (0..rep.quiver().num_vertices())
        .map(|v| {
            let mut p: Vec<usize> = (1..=rep.dim(v)).collect();
            p.shuffle(rng);
            p
        })
        .collect()
}

/// Labeled trees on `n` vertices from Prüfer sequences, as edge lists.
pub fn labeled_trees(n: usize) -> Vec<Vec<(usize, usize)>> {
    if n == 1 {
        return vec![vec![]];
    }
    if n == 2 {
        return vec![vec![(0, 1)]];
    }
    let mut out = Vec::new();
    let total = n.pow((n - 2) as u32);
    for code in 0..total {
        let mut seq = Vec::new();
        let mut c = code;
        for _ in 0..n - 2 {
            seq.push(c % n);
            c /= n;
        }
        let mut degree = vec![1; n];
        for &s in &seq {
            degree[s] += 1;
        }
        let mut edges = Vec::new();
        for &s in &seq {
            let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
            edges.push((leaf.min(s), leaf.max(s)));
            degree[leaf] -= 1;
            degree[s] -= 1;
        }
        let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        edges.push((rest[0], rest[1]));
        out.push(edges);
    }
    out
}

/// One representative per isomorphism class of trees on `n` vertices.
pub fn unlabeled_trees(n: usize) -> Vec<Vec<(usize, usize)>> {
    let perms = permutations(n);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for edges in labeled_trees(n) {
        let canon = perms
            .iter()
            .map(|p| {
                let mut e: Vec<(usize, usize)> = edges
                    .iter()
                    .map(|&(a, b)| {
                        let (x, y) = (p[a] - 1, p[b] - 1);
                        (x.min(y), x.max(y))
                    })
                    .collect();
                e.sort();
                e
            })
            .min()
            .unwrap();
        if seen.insert(canon) {
            out.push(edges);
        }
    }
    out
}

/// All orientations of an undirected edge list.
pub fn orientations(edges: &[(usize, usize)]) -> Vec<Vec<(usize, usize)>> {
    (0..1u32 << edges.len())
        .map(|mask| {
            edges
                .iter()
                .enumerate()
                .map(|(k, &(a, b))| if mask >> k & 1 == 1 { (a, b) } else { (b, a) })
                .collect()
        })
        .collect()
}

/// Indicator vectors of the nonempty vertex sets inducing a connected
/// subgraph.
pub fn connected_subsets(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 1u32..1 << n {
        let inside = |v: usize| mask >> v & 1 == 1;
        let start = (0..n).find(|&v| inside(v)).unwrap();
        let mut seen = vec![false; n];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &(a, b) in edges {
                for (x, y) in [(a, b), (b, a)] {
                    if x == v && inside(y) && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        if (0..n).all(|v| !inside(v) || seen[v]) {
            out.push((0..n).map(|v| usize::from(inside(v))).collect());
        }
    }
    out
}

/// `C(n, k)` from Pascal's triangle.
pub fn pascal(n: usize, k: usize) -> u128 {
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = vec![1u128; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    if k > n {
        0
    } else {
        row[k]
    }
}

/// Partitions of `n` counted by a plain recursion on the largest part.
pub fn count_partitions(n: usize) -> u128 {
    fn rec(n: usize, max: usize) -> u128 {
        if n == 0 {
            return 1;
        }
        (1..=max.min(n)).map(|p| rec(n - p, p)).sum()
    }
    rec(n, n)
}
