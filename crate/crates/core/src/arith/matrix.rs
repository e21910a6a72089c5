//! Small dense matrices: division-free determinants over any commutative ring,
//! and Gaussian elimination over ℚ.

use std::collections::HashMap;

use num_traits::{One, Zero};

use super::poly::MultiPoly;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Minimal commutative-ring interface for division-free algorithms.
pub trait RingElem: Clone {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn add_elem(&self, o: &Self) -> Self;
    fn sub_elem(&self, o: &Self) -> Self;
    fn mul_elem(&self, o: &Self) -> Self;
    fn neg_elem(&self) -> Self {
        self.zero_like().sub_elem(self)
    }
}

impl RingElem for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_elem(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_elem(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_elem(&self, o: &Self) -> Self {
        self * o
    }
}

impl RingElem for MultiPoly {
    fn zero_like(&self) -> Self {
        MultiPoly::zero(self.vars())
    }
    fn one_like(&self) -> Self {
        MultiPoly::one(self.vars())
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_elem(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_elem(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_elem(&self, o: &Self) -> Self {
        self * o
    }
}

impl RingElem for super::univariate::UniPoly {
    fn zero_like(&self) -> Self {
        Self::zero()
    }
    fn one_like(&self) -> Self {
        Self::constant(Rational::one())
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_elem(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn sub_elem(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn mul_elem(&self, o: &Self) -> Self {
        self.mul(o)
    }
}

/// Determinant of the submatrix on `rows` x `cols` by Laplace expansion along rows,
/// memoized on the set of remaining columns.
pub fn minor<T: RingElem>(m: &[Vec<T>], rows: &[usize], cols: &[usize]) -> T {
    assert_eq!(rows.len(), cols.len());
    assert!(cols.len() <= 64);
    let probe = m[rows[0]][cols[0]].clone();
    let mut memo: HashMap<u64, T> = HashMap::new();
    expand(m, rows, cols, 0, (1u64 << cols.len()) - 1, &probe, &mut memo)
}

fn expand<T: RingElem>(
    m: &[Vec<T>],
    rows: &[usize],
    cols: &[usize],
    depth: usize,
    mask: u64,
    probe: &T,
    memo: &mut HashMap<u64, T>,
) -> T {
    if depth == rows.len() {
        return probe.one_like();
    }
    if let Some(v) = memo.get(&mask) {
        return v.clone();
    }
    let mut acc = probe.zero_like();
    let mut sign_pos = true;
    for (k, &c) in cols.iter().enumerate() {
        if mask & (1 << k) == 0 {
            continue;
        }
        let entry = &m[rows[depth]][c];
        if !entry.is_zero_elem() {
            let sub = expand(m, rows, cols, depth + 1, mask & !(1 << k), probe, memo);
            if !sub.is_zero_elem() {
                let t = entry.mul_elem(&sub);
                acc = if sign_pos { acc.add_elem(&t) } else { acc.sub_elem(&t) };
            }
        }
        sign_pos = !sign_pos;
    }
    memo.insert(mask, acc.clone());
    acc
}

pub fn determinant<T: RingElem>(m: &[Vec<T>]) -> T {
    let idx: Vec<usize> = (0..m.len()).collect();
    minor(m, &idx, &idx)
}

/// Classical adjugate: `adj(M)[i][j] = (-1)^(i+j) det(M without row j, column i)`.
pub fn adjugate<T: RingElem>(m: &[Vec<T>]) -> Vec<Vec<T>> {
    let n = m.len();
    let probe = m[0][0].clone();
    if n == 1 {
        return vec![vec![probe.one_like()]];
    }
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let rows: Vec<usize> = (0..n).filter(|&r| r != j).collect();
                    let cols: Vec<usize> = (0..n).filter(|&c| c != i).collect();
                    let d = minor(m, &rows, &cols);
                    if (i + j) % 2 == 0 {
                        d
                    } else {
                        d.neg_elem()
                    }
                })
                .collect()
        })
        .collect()
}

/// All k-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// All maximal minors of an r x c matrix (r <= c), indexed by column subsets.
pub fn maximal_minors<T: RingElem>(m: &[Vec<T>]) -> Vec<(Vec<usize>, T)> {
    let r = m.len();
    let c = m[0].len();
    let rows: Vec<usize> = (0..r).collect();
    subsets(c, r).into_iter().map(|cols| {
        let d = minor(m, &rows, &cols);
        (cols, d)
    }).collect()
}

pub type QMatrix = Vec<Vec<Rational>>;

pub fn zeros(r: usize, c: usize) -> QMatrix {
    vec![vec![Rational::zero(); c]; r]
}

pub fn identity(n: usize) -> QMatrix {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Rational::one();
    }
    m
}

pub fn transpose(m: &[Vec<Rational>]) -> QMatrix {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len()).map(|j| m.iter().map(|row| row[j].clone()).collect()).collect()
}

pub fn mat_mul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> QMatrix {
    let inner = b.len();
    let cols = b.first().map(|r| r.len()).unwrap_or(0);
    a.iter()
        .map(|row| {
            assert_eq!(row.len(), inner);
            (0..cols)
                .map(|j| {
                    row.iter()
                        .zip(b.iter())
                        .filter(|(x, _)| !x.is_zero())
                        .map(|(x, brow)| x * &brow[j])
                        .fold(Rational::zero(), |s, t| s + t)
                })
                .collect()
        })
        .collect()
}

pub fn mat_vec(a: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).fold(Rational::zero(), |s, t| s + t))
        .collect()
}

/// Reduced row echelon form; returns the pivot columns.
pub fn rref(m: &mut [Vec<Rational>]) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let (pivot_row, other) = if i < r {
                    let (a, b) = m.split_at_mut(r);
                    (&b[0], &mut a[i])
                } else {
                    let (a, b) = m.split_at_mut(i);
                    (&a[r], &mut b[0])
                };
                for (x, y) in other.iter_mut().zip(pivot_row.iter()) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &[Vec<Rational>]) -> usize {
    let mut a = m.to_vec();
    rref(&mut a).len()
}

/// Basis of the right kernel `{v : M v = 0}`.
pub fn kernel(m: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut a = m.to_vec();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[r][f].clone();
            }
            v
        })
        .collect()
}

pub fn det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut a = m.to_vec();
    let mut d = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d *= &a[c][c];
        let inv = a[c][c].recip();
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] * &inv;
            for j in c..n {
                let t = &f * &a[c][j];
                a[i][j] -= t;
            }
        }
    }
    d
}

pub fn inverse(m: &[Vec<Rational>]) -> Result<QMatrix> {
    let n = m.len();
    let mut aug: QMatrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    let piv = rref(&mut aug);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return Err(Error::Singular);
    }
    Ok(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::rat;

    fn q(rows: &[&[i64]]) -> QMatrix {
        rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
    }

    #[test]
    fn determinant_routes_agree() {
        let m = q(&[&[2, -1, 0, 3], &[1, 4, 2, -2], &[0, 5, -3, 1], &[7, 0, 1, 1]]);
        assert_eq!(determinant(&m), det(&m));
    }

    #[test]
    fn adjugate_identity() {
        let m = q(&[&[2, -1, 0], &[1, 4, 2], &[0, 5, -3]]);
        let adj = adjugate(&m);
        let prod = mat_mul(&m, &adj);
        let d = det(&m);
        for (i, row) in prod.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                assert_eq!(*x, if i == j { d.clone() } else { rat(0) });
            }
        }
    }

    #[test]
    fn kernel_and_rank() {
        let m = q(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(rank(&m), 1);
        let k = kernel(&m, 3);
        assert_eq!(k.len(), 2);
        for v in k {
            assert!(mat_vec(&m, &v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn inverse_round_trip() {
        let m = q(&[&[2, 1], &[7, 4]]);
        let inv = inverse(&m).unwrap();
        assert_eq!(mat_mul(&m, &inv), identity(2));
        assert_eq!(inverse(&q(&[&[1, 2], &[2, 4]])), Err(Error::Singular));
    }

    #[test]
    fn subset_enumeration() {
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets(6, 4).len(), 15);
        assert_eq!(subsets(3, 3), vec![vec![0, 1, 2]]);
    }
}
