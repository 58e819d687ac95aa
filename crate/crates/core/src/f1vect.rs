//! Linear algebra over F1.
//!
//! A vector space over F1 is a pointed finite set. We always label its
//! elements `0..=dim` with `0` the basepoint, so a linear map is just the
//! list of images of `1..=dim`, with `0` meaning "sent to the basepoint".
//! Linear maps are exactly the basepoint-preserving maps that are injective
//! away from the zero fiber.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A pointed finite set with elements `0..=dim`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PointedSpace {
    pub dim: usize,
}

impl PointedSpace {
    pub const ZERO: PointedSpace = PointedSpace { dim: 0 };

    pub fn new(dim: usize) -> Self {
        PointedSpace { dim }
    }

    /// Nonzero elements, in increasing order.
    pub fn elements(&self) -> core::ops::RangeInclusive<usize> {
        1..=self.dim
    }
}

/// A morphism of pointed sets, injective away from the zero fiber.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartialInjection {
    src_dim: usize,
    tgt_dim: usize,
    image: Vec<usize>,
}

impl PartialInjection {
    pub fn new(src_dim: usize, tgt_dim: usize, image: Vec<usize>) -> Result<Self> {
        if image.len() != src_dim {
            return Err(Error::DimensionMismatch {
                expected: src_dim,
                found: image.len(),
            });
        }
        let mut hit = vec![false; tgt_dim + 1];
        for (x, &y) in image.iter().enumerate() {
            if y > tgt_dim {
                return Err(Error::NotPartialInjection(alloc::format!(
                    "element {} maps to {y}, outside 0..={tgt_dim}",
                    x + 1
                )));
            }
            if y != 0 {
                if hit[y] {
                    return Err(Error::NotPartialInjection(alloc::format!(
                        "target {y} is hit twice"
                    )));
                }
                hit[y] = true;
            }
        }
        Ok(PartialInjection {
            src_dim,
            tgt_dim,
            image,
        })
    }

    pub(crate) fn from_parts_unchecked(src_dim: usize, tgt_dim: usize, image: Vec<usize>) -> Self {
        debug_assert!(Self::new(src_dim, tgt_dim, image.clone()).is_ok());
        PartialInjection {
            src_dim,
            tgt_dim,
            image,
        }
    }

    pub fn identity(dim: usize) -> Self {
        PartialInjection {
            src_dim: dim,
            tgt_dim: dim,
            image: (1..=dim).collect(),
        }
    }

    pub fn zero(src_dim: usize, tgt_dim: usize) -> Self {
        PartialInjection {
            src_dim,
            tgt_dim,
            image: vec![0; src_dim],
        }
    }

    pub fn src_dim(&self) -> usize {
        self.src_dim
    }

    pub fn tgt_dim(&self) -> usize {
        self.tgt_dim
    }

    pub fn source(&self) -> PointedSpace {
        PointedSpace::new(self.src_dim)
    }

    pub fn target(&self) -> PointedSpace {
        PointedSpace::new(self.tgt_dim)
    }

    /// Images of `1..=src_dim`.
    pub fn images(&self) -> &[usize] {
        &self.image
    }

    /// Image of an element; the basepoint goes to the basepoint.
    pub fn apply(&self, x: usize) -> usize {
        if x == 0 {
            0
        } else {
            self.image[x - 1]
        }
    }

    /// The unique preimage of a nonzero `y`, if any.
    pub fn preimage(&self, y: usize) -> Option<usize> {
        if y == 0 {
            return None;
        }
        self.image.iter().position(|&z| z == y).map(|x| x + 1)
    }

    pub fn is_zero(&self) -> bool {
        self.image.iter().all(|&y| y == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.src_dim == self.tgt_dim && self.image.iter().enumerate().all(|(x, &y)| y == x + 1)
    }

    /// Number of elements not sent to the basepoint.
    pub fn rank(&self) -> usize {
        self.image.iter().filter(|&&y| y != 0).count()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.src_dim
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.tgt_dim
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &PartialInjection) -> Result<PartialInjection> {
        if g.tgt_dim != self.src_dim {
            return Err(Error::DimensionMismatch {
                expected: self.src_dim,
                found: g.tgt_dim,
            });
        }
        Ok(PartialInjection {
            src_dim: g.src_dim,
            tgt_dim: self.tgt_dim,
            image: g.image.iter().map(|&y| self.apply(y)).collect(),
        })
    }

    /// The subspace `f⁻¹(0)` with its inclusion into the source.
    pub fn kernel(&self) -> (PointedSpace, PartialInjection) {
        let inclusion: Vec<usize> = self
            .image
            .iter()
            .enumerate()
            .filter(|(_, &y)| y == 0)
            .map(|(x, _)| x + 1)
            .collect();
        let dim = inclusion.len();
        (
            PointedSpace::new(dim),
            PartialInjection {
                src_dim: dim,
                tgt_dim: self.src_dim,
                image: inclusion,
            },
        )
    }

    /// The quotient `W / f(V)` with the projection from `W`. Surviving
    /// elements keep their relative order.
    pub fn cokernel(&self) -> (PointedSpace, PartialInjection) {
        let mut in_image = vec![false; self.tgt_dim + 1];
        for &y in &self.image {
            in_image[y] = true;
        }
        let mut next = 0;
        let projection: Vec<usize> = (1..=self.tgt_dim)
            .map(|w| {
                if in_image[w] {
                    0
                } else {
                    next += 1;
                    next
                }
            })
            .collect();
        (
            PointedSpace::new(next),
            PartialInjection {
                src_dim: self.tgt_dim,
                tgt_dim: next,
                image: projection,
            },
        )
    }

    /// `f^t(w) = f⁻¹(w)`.
    pub fn transpose(&self) -> PartialInjection {
        let mut image = vec![0; self.tgt_dim];
        for (x, &y) in self.image.iter().enumerate() {
            if y != 0 {
                image[y - 1] = x + 1;
            }
        }
        PartialInjection {
            src_dim: self.tgt_dim,
            tgt_dim: self.src_dim,
            image,
        }
    }

    /// Blockwise sum `f ⊕ g : V ⊕ V' → W ⊕ W'`.
    pub fn direct_sum(&self, g: &PartialInjection) -> PartialInjection {
        let mut image = self.image.clone();
        image.extend(
            g.image
                .iter()
                .map(|&y| if y == 0 { 0 } else { y + self.tgt_dim }),
        );
        PartialInjection {
            src_dim: self.src_dim + g.src_dim,
            tgt_dim: self.tgt_dim + g.tgt_dim,
            image,
        }
    }

    /// `f ⊗ g` on pointed Cartesian products, see [`tensor_index`].
    pub fn tensor(&self, g: &PartialInjection) -> PartialInjection {
        let mut image = Vec::with_capacity(self.src_dim * g.src_dim);
        for v in 1..=self.src_dim {
            for w in 1..=g.src_dim {
                let (fv, gw) = (self.apply(v), g.apply(w));
                image.push(if fv == 0 || gw == 0 {
                    0
                } else {
                    tensor_index(fv, gw, g.tgt_dim)
                });
            }
        }
        PartialInjection {
            src_dim: self.src_dim * g.src_dim,
            tgt_dim: self.tgt_dim * g.tgt_dim,
            image,
        }
    }

    /// All partial injections `src_dim → tgt_dim`, in lexicographic order of
    /// image lists.
    pub fn all(src_dim: usize, tgt_dim: usize) -> Vec<PartialInjection> {
        let mut out = Vec::new();
        let mut image = vec![0; src_dim];
        let mut used = vec![false; tgt_dim + 1];
        fn rec(
            pos: usize,
            image: &mut Vec<usize>,
            used: &mut Vec<bool>,
            tgt_dim: usize,
            out: &mut Vec<PartialInjection>,
        ) {
            if pos == image.len() {
                out.push(PartialInjection {
                    src_dim: image.len(),
                    tgt_dim,
                    image: image.clone(),
                });
                return;
            }
            for y in 0..=tgt_dim {
                if y != 0 && used[y] {
                    continue;
                }
                image[pos] = y;
                used[y] = y != 0;
                rec(pos + 1, image, used, tgt_dim, out);
                if y != 0 {
                    used[y] = false;
                }
            }
            image[pos] = 0;
        }
        rec(0, &mut image, &mut used, tgt_dim, &mut out);
        out
    }
}

impl fmt::Display for PartialInjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, y) in self.image.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{y}")?;
        }
        f.write_str("]")
    }
}

/// `V ⊕ W` with its structure maps. `V` occupies `1..=dim V`, `W` the
/// following `dim W` labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectSum {
    pub space: PointedSpace,
    pub inject_left: PartialInjection,
    pub inject_right: PartialInjection,
    pub project_left: PartialInjection,
    pub project_right: PartialInjection,
}

pub fn direct_sum(v: PointedSpace, w: PointedSpace) -> DirectSum {
    let dim = v.dim + w.dim;
    let inject_left = PartialInjection {
        src_dim: v.dim,
        tgt_dim: dim,
        image: (1..=v.dim).collect(),
    };
    let inject_right = PartialInjection {
        src_dim: w.dim,
        tgt_dim: dim,
        image: (v.dim + 1..=dim).collect(),
    };
    DirectSum {
        space: PointedSpace::new(dim),
        project_left: inject_left.transpose(),
        project_right: inject_right.transpose(),
        inject_left,
        inject_right,
    }
}

/// Pointed Cartesian product: `(V × W) / (V × 0 ∪ 0 × W)`.
pub fn tensor(v: PointedSpace, w: PointedSpace) -> PointedSpace {
    PointedSpace::new(v.dim * w.dim)
}

/// Label of the pair `(v, w)` in `V ⊗ W`, rows indexed by `v`.
pub fn tensor_index(v: usize, w: usize, w_dim: usize) -> usize {
    (v - 1) * w_dim + w
}

/// `V* = Hom(V, k)` has the same dimension as `V`; the dual of a map is its
/// transpose.
pub fn dual(v: PointedSpace) -> PointedSpace {
    v
}

/// Block types in the normal form of an endomorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Block {
    /// `N_m`: a chain `m ↦ m-1 ↦ … ↦ 1 ↦ 0`.
    Nilpotent(usize),
    /// `C_m`: a cyclic permutation of `m` elements.
    Cyclic(usize),
}

impl Block {
    pub fn size(&self) -> usize {
        match *self {
            Block::Nilpotent(m) | Block::Cyclic(m) => m,
        }
    }
}

/// Block multiset of an endomorphism, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EndoBlockDecomposition {
    blocks: Vec<Block>,
}

impl EndoBlockDecomposition {
    pub fn new(mut blocks: Vec<Block>) -> Self {
        blocks.sort_unstable();
        EndoBlockDecomposition { blocks }
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn dim(&self) -> usize {
        self.blocks.iter().map(Block::size).sum()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.blocks.iter().all(|b| matches!(b, Block::Nilpotent(_)))
    }

    /// A representative endomorphism: blocks laid out consecutively, each
    /// `N_m` as `k ↦ k-1` and each `C_m` as `k ↦ k+1 (mod m)`.
    pub fn representative(&self) -> PartialInjection {
        let mut image = Vec::with_capacity(self.dim());
        let mut offset = 0;
        for block in &self.blocks {
            match *block {
                Block::Nilpotent(m) => {
                    image.push(0);
                    image.extend((1..m).map(|k| offset + k));
                }
                Block::Cyclic(m) => {
                    image.extend((2..=m).map(|k| offset + k));
                    image.push(offset + 1);
                }
            }
            offset += block.size();
        }
        PartialInjection {
            src_dim: offset,
            tgt_dim: offset,
            image,
        }
    }
}

/// Normal form of an endomorphism.
///
/// Elements whose forward orbit reaches `0` form nilpotent chains; every
/// chain is traced from its top (an element with no preimage) and gives one
/// `N_m`. What remains is permuted, and each cycle gives one `C_m`.
pub fn jordan_decompose(t: &PartialInjection) -> Result<EndoBlockDecomposition> {
    if t.src_dim != t.tgt_dim {
        return Err(Error::NotSquare {
            src: t.src_dim,
            tgt: t.tgt_dim,
        });
    }
    let dim = t.src_dim;
    let mut has_preimage = vec![false; dim + 1];
    for &y in &t.image {
        has_preimage[y] = true;
    }
    let mut seen = vec![false; dim + 1];
    let mut blocks = Vec::new();
    for top in 1..=dim {
        if has_preimage[top] {
            continue;
        }
        let mut len = 0;
        let mut x = top;
        while x != 0 {
            seen[x] = true;
            len += 1;
            x = t.apply(x);
        }
        blocks.push(Block::Nilpotent(len));
    }
    for start in 1..=dim {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            len += 1;
            x = t.apply(x);
        }
        blocks.push(Block::Cyclic(len));
    }
    Ok(EndoBlockDecomposition::new(blocks))
}

/// Number of `k`-dimensional subspaces of an `n`-dimensional space.
///
/// Up to `n = 12` the subspaces are enumerated; above that the binomial
/// coefficient is used.
pub fn count_subspaces(n: usize, k: usize) -> Result<u128> {
    if k > n {
        return Err(Error::SubspaceTooLarge { n, k });
    }
    if n <= 12 {
        return Ok(enumerate_subspaces(n, k).len() as u128);
    }
    binomial(n as u128, k as u128).ok_or(Error::Overflow)
}

/// The `k`-dimensional subspaces of an `n`-dimensional space, as bitmasks
/// over the nonzero elements (bit `x-1` for element `x`).
pub fn enumerate_subspaces(n: usize, k: usize) -> Vec<u64> {
    assert!(n < 64, "subspace enumeration limited to dim < 64");
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    // Gosper's hack over k-subsets of n bits.
    if k == 0 {
        out.push(0);
        return out;
    }
    let mut set: u64 = (1u64 << k) - 1;
    let limit = 1u64 << n;
    while set < limit {
        out.push(set);
        let c = set & set.wrapping_neg();
        let r = set + c;
        set = (((r ^ set) >> 2) / c) | r;
    }
    out
}

pub(crate) fn binomial(n: u128, k: u128) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k {
        acc = acc.checked_mul(n - k + i)? / i;
    }
    Some(acc)
}
