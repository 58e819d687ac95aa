//! Exact linear algebra over the rationals, done fraction-free on integer
//! rows.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::Rational;

/// Clear denominators: multiply through by the lcm of the denominators.
pub fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    row.iter().map(|q| q.numer() * (&lcm / q.denom())).collect()
}

fn normalize(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x /= &g;
        }
    }
}

/// Row-echelon basis built one row at a time.
///
/// Each stored row vanishes at the pivot columns of all earlier rows, so a
/// new row is reduced by a single pass in insertion order using the integer
/// update `row ← p·row − c·pivot_row`, followed by division by the content.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    rows: Vec<(usize, Vec<BigInt>)>,
    width: usize,
}

impl Echelon {
    pub fn new(width: usize) -> Self {
        Echelon {
            rows: Vec::new(),
            width,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `row`; keep it and return `true` iff it is independent of the
    /// rows stored so far.
    pub fn insert(&mut self, row: Vec<BigInt>) -> bool {
        assert_eq!(row.len(), self.width, "row width");
        let mut row = row;
        for (col, pivot) in &self.rows {
            if row[*col].is_zero() {
                continue;
            }
            let p = &pivot[*col];
            let c = row[*col].clone();
            for (x, y) in row.iter_mut().zip(pivot) {
                *x = &*x * p - &c * y;
            }
            normalize(&mut row);
        }
        match row.iter().position(|x| !x.is_zero()) {
            Some(col) => {
                if row[col].is_negative() {
                    for x in row.iter_mut() {
                        *x = -&*x;
                    }
                }
                self.rows.push((col, row));
                true
            }
            None => false,
        }
    }
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let Some(first) = rows.first() else {
        return 0;
    };
    let mut ech = Echelon::new(first.len());
    for row in rows {
        ech.insert(integer_row(row));
    }
    ech.rank()
}

/// Determinant by Bareiss elimination.
pub fn determinant(matrix: &[Vec<BigInt>]) -> BigInt {
    let n = matrix.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}
