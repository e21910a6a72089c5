use std::collections::HashMap;
use std::fmt;

use num_traits::Zero;

use crate::arith::matrix::{self, RingElem};
use crate::arith::{MultiPoly, Rational, Vars};
use crate::error::{Error, Result};

/// Skew-symmetric square matrix over a commutative ring (ℚ or a polynomial ring).
#[derive(Clone, PartialEq, Eq)]
pub struct SkewMatrix<T> {
    rows: Vec<Vec<T>>,
}

pub type QSkew = SkewMatrix<Rational>;
pub type PolySkew = SkewMatrix<MultiPoly>;

impl<T: RingElem + PartialEq> SkewMatrix<T> {
    /// Validates `a_ij = -a_ji` and `a_ii = 0`.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSkew(format!("row {i} has length {}, expected {n}", row.len())));
            }
        }
        for i in 0..n {
            if !rows[i][i].is_zero_elem() {
                return Err(Error::NotSkew(format!("nonzero diagonal entry at ({i},{i})")));
            }
            for j in i + 1..n {
                if rows[i][j].add_elem(&rows[j][i]).is_zero_elem() {
                    continue;
                }
                return Err(Error::NotSkew(format!("entries ({i},{j}) and ({j},{i}) are not opposite")));
            }
        }
        Ok(SkewMatrix { rows })
    }

    /// Builds from the strict upper triangle listed row by row.
    pub fn from_upper(size: usize, upper: &[T], zero: &T) -> Result<Self> {
        if upper.len() != size * (size - 1) / 2 {
            return Err(Error::Dimension(format!("{} upper entries for a {size}x{size} matrix", upper.len())));
        }
        let mut rows = vec![vec![zero.zero_like(); size]; size];
        let mut k = 0;
        for i in 0..size {
            for j in i + 1..size {
                rows[i][j] = upper[k].clone();
                rows[j][i] = upper[k].neg_elem();
                k += 1;
            }
        }
        Ok(SkewMatrix { rows })
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    /// Strict upper triangle, row by row.
    pub fn upper(&self) -> Vec<T> {
        let n = self.size();
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| self.rows[i][j].clone()).collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x.add_elem(y)).collect())
            .collect();
        SkewMatrix { rows }
    }

    pub fn scale(&self, c: &T) -> Self {
        SkewMatrix { rows: self.rows.iter().map(|r| r.iter().map(|x| x.mul_elem(c)).collect()).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.iter().all(|x| x.is_zero_elem()))
    }

    pub fn determinant(&self) -> T {
        matrix::determinant(&self.rows)
    }

    /// Pfaffian of the whole matrix; the size must be even.
    pub fn pfaffian(&self) -> Result<T> {
        if self.size() % 2 == 1 {
            return Err(Error::OddPfaffian(self.size()));
        }
        let idx: Vec<usize> = (0..self.size()).collect();
        Ok(self.sub_pfaffian(&idx))
    }

    /// Pfaffian of the principal submatrix on the (increasing, even-length) index list.
    pub fn sub_pfaffian(&self, idx: &[usize]) -> T {
        assert!(idx.len() % 2 == 0 && idx.len() <= 64);
        let probe = self.rows[0][0].clone();
        if idx.is_empty() {
            return probe.one_like();
        }
        let mut memo = HashMap::new();
        self.pf_rec(idx, (1u64 << idx.len()) - 1, &probe, &mut memo)
    }

    // Expansion along the first remaining index:
    // Pf = sum_j (-1)^(pos(j)+1) a_{first,j} Pf(rest without first, j).
    fn pf_rec(&self, idx: &[usize], mask: u64, probe: &T, memo: &mut HashMap<u64, T>) -> T {
        if mask == 0 {
            return probe.one_like();
        }
        if let Some(v) = memo.get(&mask) {
            return v.clone();
        }
        let first = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << first);
        let mut acc = probe.zero_like();
        let mut pos = 0usize;
        let mut bits = rest;
        while bits != 0 {
            let k = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            pos += 1;
            let a = &self.rows[idx[first]][idx[k]];
            if a.is_zero_elem() {
                continue;
            }
            let sub = self.pf_rec(idx, rest & !(1 << k), probe, memo);
            if sub.is_zero_elem() {
                continue;
            }
            let t = a.mul_elem(&sub);
            acc = if pos % 2 == 1 { acc.add_elem(&t) } else { acc.sub_elem(&t) };
        }
        memo.insert(mask, acc.clone());
        acc
    }

    /// Pfaffian as a signed sum over perfect matchings (small sizes only).
    pub fn pfaffian_by_matchings(&self) -> Result<T> {
        let n = self.size();
        if n % 2 == 1 {
            return Err(Error::OddPfaffian(n));
        }
        let probe = self.rows[0][0].clone();
        let mut total = probe.zero_like();
        let mut pairs = Vec::new();
        let free: Vec<usize> = (0..n).collect();
        self.matchings(&free, &mut pairs, &mut total);
        Ok(total)
    }

    fn matchings(&self, free: &[usize], pairs: &mut Vec<(usize, usize)>, total: &mut T) {
        if free.is_empty() {
            let perm: Vec<usize> = pairs.iter().flat_map(|&(i, j)| [i, j]).collect();
            let mut term = self.rows[0][0].one_like();
            for &(i, j) in pairs.iter() {
                term = term.mul_elem(&self.rows[i][j]);
            }
            *total = if permutation_sign(&perm) > 0 { total.add_elem(&term) } else { total.sub_elem(&term) };
            return;
        }
        let i = free[0];
        for k in 1..free.len() {
            let j = free[k];
            let rest: Vec<usize> = free[1..].iter().copied().filter(|&x| x != j).collect();
            pairs.push((i, j));
            self.matchings(&rest, pairs, total);
            pairs.pop();
        }
    }
}

/// Sign of a permutation of `0..n` given as its image list.
pub fn permutation_sign(perm: &[usize]) -> i32 {
    let mut inv = 0usize;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

impl QSkew {
    pub fn zero(size: usize) -> QSkew {
        SkewMatrix { rows: matrix::zeros(size, size) }
    }

    /// `E_ij - E_ji`.
    pub fn elementary(size: usize, i: usize, j: usize) -> QSkew {
        let mut m = Self::zero(size);
        m.rows[i][j] = Rational::from_integer(1.into());
        m.rows[j][i] = Rational::from_integer((-1).into());
        m
    }

    /// `u v^T - v u^T`.
    pub fn wedge(u: &[Rational], v: &[Rational]) -> QSkew {
        let n = u.len();
        let rows = (0..n).map(|i| (0..n).map(|j| &u[i] * &v[j] - &u[j] * &v[i]).collect()).collect();
        SkewMatrix { rows }
    }

    pub fn from_integer_rows(rows: &[Vec<i64>]) -> Result<QSkew> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect()).collect())
    }

    /// Exact rank (always even).
    pub fn rank(&self) -> usize {
        matrix::rank(&self.rows)
    }

    pub fn apply(&self, x: &[Rational]) -> Vec<Rational> {
        matrix::mat_vec(&self.rows, x)
    }

    /// `x^T A y`.
    pub fn bilinear(&self, x: &[Rational], y: &[Rational]) -> Rational {
        x.iter().zip(self.apply(y)).map(|(a, b)| a * b).fold(Rational::zero(), |s, t| s + t)
    }

    /// `G^T A G`.
    pub fn congruent(&self, g: &[Vec<Rational>]) -> QSkew {
        let gt = matrix::transpose(g);
        SkewMatrix { rows: matrix::mat_mul(&matrix::mat_mul(&gt, &self.rows), g) }
    }

    /// Embeds into a polynomial ring as constants.
    pub fn to_poly(&self, vars: &Vars) -> PolySkew {
        SkewMatrix {
            rows: self.rows.iter().map(|r| r.iter().map(|x| MultiPoly::constant(vars, x.clone())).collect()).collect(),
        }
    }

    /// `sum_k coeffs[k] * mats[k]` with polynomial coefficients.
    pub fn combination(mats: &[QSkew], coeffs: &[MultiPoly]) -> PolySkew {
        assert_eq!(mats.len(), coeffs.len());
        let vars = coeffs[0].vars().clone();
        let n = mats[0].size();
        let mut rows = vec![vec![MultiPoly::zero(&vars); n]; n];
        for (m, c) in mats.iter().zip(coeffs) {
            for i in 0..n {
                for j in 0..n {
                    if !m.rows[i][j].is_zero() {
                        rows[i][j] = &rows[i][j] + &c.scale(&m.rows[i][j]);
                    }
                }
            }
        }
        SkewMatrix { rows }
    }
}

impl PolySkew {
    /// Evaluates every entry at a point.
    pub fn eval(&self, point: &[Rational]) -> QSkew {
        SkewMatrix { rows: self.rows.iter().map(|r| r.iter().map(|x| x.eval(point)).collect()).collect() }
    }
}

impl<T: fmt::Display> fmt::Display for SkewMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl<T: fmt::Display> fmt::Debug for SkewMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewMatrix\n{self}")
    }
}

/// Position of a 6x6 skew matrix with respect to the dual Grassmannian of lines in P^5.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DualStratum {
    /// Rank 6: a hyperplane section of G(1,5) not tangent to it.
    General,
    /// Rank 4: on the Pfaffian cubic hypersurface.
    OnDualG,
    /// Rank 2: on its singular locus G(3,5).
    OnG35,
    Zero,
}

pub fn in_dual_strata(m: &QSkew) -> Result<DualStratum> {
    if m.size() != 6 {
        return Err(Error::Dimension(format!("dual strata are defined for 6x6 matrices, got {}", m.size())));
    }
    Ok(match m.rank() {
        6 => DualStratum::General,
        4 => DualStratum::OnDualG,
        2 => DualStratum::OnG35,
        _ => DualStratum::Zero,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn symplectic_block_has_pfaffian_one() {
        let m = QSkew::elementary(6, 0, 1).add(&QSkew::elementary(6, 2, 3)).add(&QSkew::elementary(6, 4, 5));
        assert_eq!(m.pfaffian().unwrap(), rat(1));
        assert_eq!(m.pfaffian_by_matchings().unwrap(), rat(1));
    }

    #[test]
    fn rank_two_has_zero_pfaffian() {
        let m = QSkew::wedge(&[rat(1), rat(2), rat(0), rat(-1), rat(3), rat(1)], &[rat(0), rat(1), rat(1), rat(5), rat(-2), rat(2)]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.pfaffian().unwrap(), rat(0));
        assert_eq!(in_dual_strata(&m).unwrap(), DualStratum::OnG35);
        assert_eq!(QSkew::zero(6).rank(), 0);
    }

    #[test]
    fn odd_size_is_rejected() {
        assert_eq!(QSkew::zero(5).pfaffian(), Err(Error::OddPfaffian(5)));
    }

    #[test]
    fn validation() {
        assert!(QSkew::from_integer_rows(&[vec![0, 1], vec![1, 0]]).is_err());
        assert!(QSkew::from_integer_rows(&[vec![1, 1], vec![-1, 0]]).is_err());
        assert!(QSkew::from_integer_rows(&[vec![0, 2], vec![-2, 0]]).is_ok());
    }

    #[test]
    fn symbolic_four_by_four() {
        let v = Vars::new(["a", "b", "c", "d", "e", "f"]);
        let x: Vec<MultiPoly> = (0..6).map(|i| MultiPoly::var(&v, i)).collect();
        let m = SkewMatrix::from_upper(4, &x, &MultiPoly::zero(&v)).unwrap();
        let pf = m.pfaffian().unwrap();
        // Pf = a f - b e + c d for upper entries (a b c / d e / f)
        let expected = crate::arith::parse_poly("a*f - b*e + c*d", &v).unwrap();
        assert_eq!(pf, expected);
        assert_eq!(m.pfaffian_by_matchings().unwrap(), expected);
        assert_eq!(&pf * &pf, m.determinant());
    }
}
