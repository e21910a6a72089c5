use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::skew::QSkew;
use crate::arith::matrix;
use crate::arith::rational::primitive_integer_vector;
use crate::arith::{format_rational, MultiPoly, Rational};
use crate::error::{Error, Result};

/// All pairs `(i, j)` with `0 <= i < j <= n` in lexicographic order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect()
}

/// Plücker coordinates `p_ij` (`i < j`) of a line in P^n, listed lexicographically.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PluckerVector {
    pub n: usize,
    #[serde(with = "crate::arith::serde_rational::vec")]
    pub coords: Vec<Rational>,
}

impl PluckerVector {
    pub fn new(n: usize, coords: Vec<Rational>) -> Result<Self> {
        if coords.len() != (n + 1) * n / 2 {
            return Err(Error::Dimension(format!("{} Plücker coordinates for P^{n}", coords.len())));
        }
        Ok(PluckerVector { n, coords })
    }

    /// `p_ij = P_i Q_j - P_j Q_i`.
    pub fn from_points(p: &[Rational], q: &[Rational]) -> Result<Self> {
        if p.len() != q.len() {
            return Err(Error::Dimension("points of different ambient spaces".into()));
        }
        let n = p.len() - 1;
        let coords: Vec<Rational> = pairs(n).iter().map(|&(i, j)| &p[i] * &q[j] - &p[j] * &q[i]).collect();
        if coords.iter().all(|c| c.is_zero()) {
            return Err(Error::CoincidentPoints);
        }
        Ok(PluckerVector { n, coords })
    }

    /// Signed accessor: `p_ji = -p_ij`, `p_ii = 0`.
    pub fn get(&self, i: usize, j: usize) -> Rational {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => Rational::zero(),
            Less => self.coords[pair_position(self.n, i, j)].clone(),
            Greater => -self.coords[pair_position(self.n, j, i)].clone(),
        }
    }

    /// Skew matrix with entry `(i, j) = p_ij`.
    pub fn to_skew(&self) -> QSkew {
        let rows = (0..=self.n).map(|i| (0..=self.n).map(|j| self.get(i, j)).collect()).collect();
        QSkew::from_rows(rows).expect("skew by construction")
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// Values of the quadrics `p_ij p_kl - p_ik p_jl + p_il p_jk` for all `i<j<k<l`.
    pub fn relation_values(&self) -> Vec<Rational> {
        let n = self.n;
        let mut out = Vec::new();
        for i in 0..=n {
            for j in i + 1..=n {
                for k in j + 1..=n {
                    for l in k + 1..=n {
                        out.push(
                            self.get(i, j) * self.get(k, l) - self.get(i, k) * self.get(j, l) + self.get(i, l) * self.get(j, k),
                        );
                    }
                }
            }
        }
        out
    }

    /// Nonzero and satisfying all Plücker relations.
    pub fn is_line(&self) -> bool {
        !self.is_zero() && self.relation_values().iter().all(|r| r.is_zero())
    }

    /// Two points spanning the line (independent columns of the skew matrix).
    pub fn spanning_points(&self) -> Result<(Vec<Rational>, Vec<Rational>)> {
        if !self.is_line() {
            return Err(Error::Invalid("not a line: Plücker relations fail".into()));
        }
        let m = self.to_skew();
        let cols: Vec<Vec<Rational>> = (0..=self.n).map(|j| m.rows().iter().map(|r| r[j].clone()).collect()).collect();
        let mut chosen: Vec<Vec<Rational>> = Vec::new();
        for c in cols {
            if c.iter().all(|x| x.is_zero()) {
                continue;
            }
            let mut trial = chosen.clone();
            trial.push(c.clone());
            if matrix::rank(&trial) == trial.len() {
                chosen.push(c);
            }
            if chosen.len() == 2 {
                break;
            }
        }
        let p = primitive(&chosen[0]);
        let q = primitive(&chosen[1]);
        Ok((p, q))
    }

    /// `x` lies on the line iff `x ∧ p = 0`: `x_i p_jk - x_j p_ik + x_k p_ij = 0`.
    pub fn contains_point(&self, x: &[Rational]) -> bool {
        let n = self.n;
        for i in 0..=n {
            for j in i + 1..=n {
                for k in j + 1..=n {
                    let v = &x[i] * self.get(j, k) - &x[j] * self.get(i, k) + &x[k] * self.get(i, j);
                    if !v.is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `sum_{i<j} a_ij p_ij`; zero iff the line lies in the linear complex of `a`.
    pub fn pairing(&self, a: &QSkew) -> Rational {
        pairs(self.n)
            .iter()
            .zip(&self.coords)
            .map(|(&(i, j), p)| a.get(i, j) * p)
            .fold(Rational::zero(), |s, t| s + t)
    }

    /// Projectively equal (proportional) to `other`.
    pub fn same_line(&self, other: &PluckerVector) -> bool {
        self.n == other.n && proportional(&self.coords, &other.coords)
    }

    /// Scaled to coprime integers with first nonzero coordinate positive.
    pub fn normalized(&self) -> PluckerVector {
        PluckerVector { n: self.n, coords: primitive(&self.coords) }
    }

    /// Polynomial parametrization `λ P + μ Q` in a two-variable ring.
    pub fn parametrize(&self, binary: &crate::arith::Vars) -> Result<Vec<MultiPoly>> {
        let (p, q) = self.spanning_points()?;
        let l = MultiPoly::var(binary, 0);
        let m = MultiPoly::var(binary, 1);
        Ok(p.iter().zip(&q).map(|(a, b)| &l.scale(a) + &m.scale(b)).collect())
    }
}

/// Position of pair `(i, j)` in [`pairs`]`(n)`.
pub fn pair_position(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j <= n);
    // rows r < i contribute (n - r) pairs each
    let before: usize = (0..i).map(|r| n - r).sum();
    before + (j - i - 1)
}

pub(crate) fn primitive(v: &[Rational]) -> Vec<Rational> {
    primitive_integer_vector(v).into_iter().map(Rational::from_integer).collect()
}

pub fn proportional(a: &[Rational], b: &[Rational]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let Some(k) = a.iter().position(|x| !x.is_zero()) else {
        return b.iter().all(|x| x.is_zero());
    };
    if b[k].is_zero() {
        return false;
    }
    let r = &b[k] / &a[k];
    a.iter().zip(b).all(|(x, y)| &(x * &r) == y)
}

impl fmt::Display for PluckerVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.coords.iter().map(format_rational).collect();
        write!(f, "[{}]", c.join(" : "))
    }
}

impl fmt::Debug for PluckerVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PluckerVector(P^{}){self}", self.n)
    }
}

/// Plücker coordinates of the 3-space `ker A` of a rank-2 6x6 matrix, indexed by
/// 4-subsets `K` of `0..6`: `q_K = sign(K^c, K) · a_{K^c}` where `K^c = {i<j}` is the
/// complementary pair (the complementary-index identification `∧²V* ≅ ∧⁴V`).
pub fn three_space_plucker(a: &QSkew) -> Result<Vec<(Vec<usize>, Rational)>> {
    if a.size() != 6 || a.rank() != 2 {
        return Err(Error::Rank { expected: 2, found: a.rank() });
    }
    let mut out = Vec::new();
    for k in matrix::subsets(6, 4) {
        let comp: Vec<usize> = (0..6).filter(|i| !k.contains(i)).collect();
        let perm: Vec<usize> = comp.iter().chain(k.iter()).copied().collect();
        let s = super::skew::permutation_sign(&perm);
        let v = a.get(comp[0], comp[1]).clone();
        out.push((k, if s > 0 { v } else { -v }));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn e(n: usize, i: usize) -> Vec<Rational> {
        (0..=n).map(|k| rat((k == i) as i64)).collect()
    }

    #[test]
    fn positions() {
        let n = 5;
        for (k, (i, j)) in pairs(n).into_iter().enumerate() {
            assert_eq!(pair_position(n, i, j), k);
        }
    }

    #[test]
    fn basis_points() {
        let l = PluckerVector::from_points(&e(5, 0), &e(5, 1)).unwrap();
        assert_eq!(l.get(0, 1), rat(1));
        assert_eq!(l.coords.iter().filter(|c| !c.is_zero()).count(), 1);
        let r = PluckerVector::from_points(&e(5, 1), &e(5, 0)).unwrap();
        assert!(l.same_line(&r));
        assert_eq!(r.get(0, 1), rat(-1));
        assert_eq!(PluckerVector::from_points(&e(3, 2), &e(3, 2)), Err(Error::CoincidentPoints));
    }

    #[test]
    fn line_recovery() {
        let p = vec![rat(1), rat(2), rat(-1), rat(3)];
        let q = vec![rat(0), rat(1), rat(4), rat(1)];
        let l = PluckerVector::from_points(&p, &q).unwrap();
        assert!(l.is_line());
        assert_eq!(l.to_skew().rank(), 2);
        let (a, b) = l.spanning_points().unwrap();
        assert!(PluckerVector::from_points(&a, &b).unwrap().same_line(&l));
        assert!(l.contains_point(&p) && l.contains_point(&q));
        assert!(!l.contains_point(&e(3, 0)));
    }

    #[test]
    fn pairing_is_bilinear_form() {
        let p = vec![rat(1), rat(2), rat(-1), rat(3), rat(0), rat(1)];
        let q = vec![rat(0), rat(1), rat(4), rat(1), rat(2), rat(-3)];
        let a = QSkew::from_upper(6, &(1..=15).map(|k| rat(k * k % 7 - 3)).collect::<Vec<_>>(), &rat(0)).unwrap();
        let l = PluckerVector::from_points(&p, &q).unwrap();
        assert_eq!(l.pairing(&a), a.bilinear(&p, &q));
    }
}
