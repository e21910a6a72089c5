use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use super::plucker::{primitive, PluckerVector};
use super::skew::QSkew;
use crate::arith::matrix::{self, QMatrix};
use crate::arith::{format_rational, MultiPoly, Rational, Vars};
use crate::error::{Error, Result};
use crate::groebner::Ideal;

/// Projective linear subspace of P^n, kept both as a span of points and as
/// the zero set of independent linear forms.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct LinearSubspace {
    pub n: usize,
    #[serde(serialize_with = "ser_matrix")]
    points: QMatrix,
    #[serde(serialize_with = "ser_matrix")]
    forms: QMatrix,
}

fn ser_matrix<S: serde::Serializer>(m: &QMatrix, s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(m.len()))?;
    for row in m {
        let r: Vec<String> = row.iter().map(format_rational).collect();
        seq.serialize_element(&r)?;
    }
    seq.end()
}

fn row_basis(rows: &[Vec<Rational>], ncols: usize) -> QMatrix {
    let mut a = rows.to_vec();
    if a.is_empty() {
        return a;
    }
    let piv = matrix::rref(&mut a);
    a.truncate(piv.len());
    a.into_iter().map(|r| primitive(&r)).filter(|r| r.len() == ncols).collect()
}

impl LinearSubspace {
    pub fn from_points(points: &[Vec<Rational>]) -> Result<Self> {
        let n = points.first().map(|p| p.len()).ok_or_else(|| Error::Dimension("no points".into()))? - 1;
        let pts = row_basis(points, n + 1);
        let forms = row_basis(&matrix::kernel(&pts, n + 1), n + 1);
        Ok(LinearSubspace { n, points: pts, forms })
    }

    pub fn from_forms(n: usize, forms: &[Vec<Rational>]) -> Self {
        let f = row_basis(forms, n + 1);
        let pts = row_basis(&matrix::kernel(&f, n + 1), n + 1);
        LinearSubspace { n, points: pts, forms: f }
    }

    /// Coordinate subspace `{x_i = 0 for i in idx}`.
    pub fn coordinate(n: usize, idx: &[usize]) -> Self {
        let forms: Vec<Vec<Rational>> = idx
            .iter()
            .map(|&i| (0..=n).map(|k| Rational::from_integer(((k == i) as i64).into())).collect())
            .collect();
        Self::from_forms(n, &forms)
    }

    /// Projective dimension (`-1` for the empty subspace).
    pub fn dim(&self) -> i64 {
        self.points.len() as i64 - 1
    }

    pub fn points(&self) -> &QMatrix {
        &self.points
    }

    pub fn forms(&self) -> &QMatrix {
        &self.forms
    }

    pub fn contains_point(&self, x: &[Rational]) -> bool {
        self.forms.iter().all(|f| f.iter().zip(x).map(|(a, b)| a * b).fold(Rational::zero(), |s, t| s + t).is_zero())
    }

    pub fn contains(&self, other: &LinearSubspace) -> bool {
        other.points.iter().all(|p| self.contains_point(p))
    }

    pub fn contains_line(&self, l: &PluckerVector) -> Result<bool> {
        let (p, q) = l.spanning_points()?;
        Ok(self.contains_point(&p) && self.contains_point(&q))
    }

    /// True when the line meets the subspace.
    pub fn meets_line(&self, l: &PluckerVector) -> Result<bool> {
        let (p, q) = l.spanning_points()?;
        // some λp + μq satisfies all forms: the forms restricted to the line have rank < 2
        let m: QMatrix = self
            .forms
            .iter()
            .map(|f| {
                let fp = f.iter().zip(&p).map(|(a, b)| a * b).fold(Rational::zero(), |s, t| s + t);
                let fq = f.iter().zip(&q).map(|(a, b)| a * b).fold(Rational::zero(), |s, t| s + t);
                vec![fp, fq]
            })
            .collect();
        Ok(m.is_empty() || matrix::rank(&m) < 2)
    }

    pub fn same_as(&self, other: &LinearSubspace) -> bool {
        self.n == other.n && self.dim() == other.dim() && self.contains(other)
    }

    /// Ideal of the subspace in `vars` (which must have `n+1` variables).
    pub fn ideal(&self, vars: &Vars) -> Result<Ideal> {
        if vars.len() != self.n + 1 {
            return Err(Error::Dimension(format!("{} variables for P^{}", vars.len(), self.n)));
        }
        Ideal::new(vars, self.forms.iter().map(|f| MultiPoly::linear(vars, f)).collect())
    }

    /// Linear forms of the subspace as polynomials.
    pub fn form_polys(&self, vars: &Vars) -> Vec<MultiPoly> {
        self.forms.iter().map(|f| MultiPoly::linear(vars, f)).collect()
    }

    /// `x = sum_k s_k P_k` with `s` the variables of `params`.
    pub fn parametrization(&self, params: &Vars) -> Result<Vec<MultiPoly>> {
        if params.len() != self.points.len() {
            return Err(Error::Dimension(format!("{} parameters for a {}-dimensional subspace", params.len(), self.dim())));
        }
        Ok((0..=self.n)
            .map(|i| {
                let coeffs: Vec<Rational> = self.points.iter().map(|p| p[i].clone()).collect();
                MultiPoly::linear(params, &coeffs)
            })
            .collect())
    }

    /// Image under `x ↦ g x`.
    pub fn transform(&self, g: &[Vec<Rational>]) -> Result<Self> {
        let pts: QMatrix = self.points.iter().map(|p| matrix::mat_vec(g, p)).collect();
        Self::from_points(&pts)
    }
}

/// The projectivized kernel of a skew matrix.
pub fn kernel_subspace(m: &QSkew) -> LinearSubspace {
    LinearSubspace::from_forms(m.size() - 1, m.rows())
}

/// `π_A`: the 3-space `P(ker A)` of a rank-2 6x6 skew matrix.
pub fn kernel_space(m: &QSkew) -> Result<LinearSubspace> {
    let r = m.rank();
    if m.size() != 6 || r != 2 {
        return Err(Error::Rank { expected: 2, found: r });
    }
    Ok(kernel_subspace(m))
}

impl fmt::Display for LinearSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars = Vars::projective(self.n);
        let eqs: Vec<String> = self.form_polys(&vars).iter().map(|p| format!("{p} = 0")).collect();
        write!(f, "{{{}}}", eqs.join(", "))
    }
}

impl fmt::Debug for LinearSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearSubspace(dim {} in P^{}){self}", self.dim(), self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn kernel_of_elementary() {
        let k = kernel_space(&QSkew::elementary(6, 0, 1)).unwrap();
        assert_eq!(k.dim(), 3);
        assert!(k.same_as(&LinearSubspace::coordinate(5, &[0, 1])));
        let k = kernel_space(&QSkew::elementary(6, 2, 3)).unwrap();
        assert!(k.same_as(&LinearSubspace::coordinate(5, &[2, 3])));
        let full = QSkew::elementary(6, 0, 1).add(&QSkew::elementary(6, 2, 3));
        assert_eq!(kernel_space(&full), Err(Error::Rank { expected: 2, found: 4 }));
    }

    #[test]
    fn meets_and_contains() {
        let s = LinearSubspace::coordinate(3, &[0, 1]);
        let l = PluckerVector::from_points(&[rat(0), rat(0), rat(1), rat(0)], &[rat(1), rat(0), rat(0), rat(0)]).unwrap();
        assert!(s.meets_line(&l).unwrap());
        assert!(!s.contains_line(&l).unwrap());
        let m = PluckerVector::from_points(&[rat(1), rat(0), rat(1), rat(0)], &[rat(0), rat(1), rat(0), rat(1)]).unwrap();
        assert!(!s.meets_line(&m).unwrap());
    }
}
