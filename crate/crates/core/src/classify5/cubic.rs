use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::matrix::{self, QMatrix};
use crate::arith::{Monomial, MultiPoly, Rational, Vars};
use crate::congruence::SkewWeb;
use crate::error::{Error, Result};
use crate::grassmann::QSkew;
use crate::groebner::{affine_rational_points, hilbert_polynomial, projective_rational_points, Ideal};

/// `Pf(a A_1 + b A_2 + c A_3 + d A_4)` in the dual coordinates `a, b, c, d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PfaffianCubic {
    pub poly: MultiPoly,
}

impl PfaffianCubic {
    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn vars(&self) -> &Vars {
        self.poly.vars()
    }
}

/// The generic member `sum_k w_k A_k` of the web as a matrix of linear forms.
pub fn generic_member(web: &SkewWeb) -> crate::grassmann::PolySkew {
    let vars = Vars::dual(web.matrices().len());
    let coeffs: Vec<MultiPoly> = (0..vars.len()).map(|i| MultiPoly::var(&vars, i)).collect();
    QSkew::combination(web.matrices(), &coeffs)
}

/// Matrix `sum_k w_k A_k` at a point of the dual space.
pub fn member_at(web: &SkewWeb, w: &[Rational]) -> QSkew {
    let mut acc = QSkew::zero(web.n() + 1);
    for (c, a) in w.iter().zip(web.matrices()) {
        if !c.is_zero() {
            acc = acc.add(&a.scale(c));
        }
    }
    acc
}

pub fn pfaffian_cubic(web: &SkewWeb) -> Result<PfaffianCubic> {
    if web.n() != 5 {
        return Err(Error::Unsupported(format!("the Pfaffian cubic needs n = 5, got {}", web.n())));
    }
    Ok(PfaffianCubic { poly: generic_member(web).pfaffian()? })
}

/// Ideal of the members of rank at most `rank` (sub-Pfaffians of size `rank + 2`).
pub fn rank_locus(web: &SkewWeb, rank: usize) -> Result<Ideal> {
    let m = generic_member(web);
    let size = m.size();
    let gens: Vec<MultiPoly> = matrix::subsets(size, rank + 2).iter().map(|idx| m.sub_pfaffian(idx)).filter(|p| !p.is_zero()).collect();
    Ideal::new(&Vars::dual(web.matrices().len()), gens)
}

/// Points of the dual space where the member has rank two.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct G35Locus {
    /// Projective dimension of the rank-two locus (`-1` when empty).
    pub dimension: i64,
    /// Length of the scheme when it is finite.
    pub length: u64,
    #[serde(with = "crate::arith::serde_rational::vec_vec")]
    pub points: Vec<Vec<Rational>>,
}

pub fn g35_locus(web: &SkewWeb) -> Result<G35Locus> {
    let ideal = rank_locus(web, 2)?;
    let hp = hilbert_polynomial(&ideal)?;
    let points = if hp.dimension == 0 { projective_rational_points(&ideal)?.unwrap_or_default() } else { Vec::new() };
    let length = if hp.dimension == 0 { hp.degree } else { 0 };
    Ok(G35Locus { dimension: hp.dimension, length, points })
}

/// A factorization `S = linear * quadric` over ℚ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicSplit {
    pub linear: MultiPoly,
    pub quadric: MultiPoly,
    pub quadric_rank: usize,
    /// Number of distinct rational linear factors of `S`.
    pub linear_factors: usize,
}

/// Rational linear factors of a homogeneous form, normalized with leading coefficient one.
pub fn linear_factors(f: &MultiPoly) -> Result<Vec<MultiPoly>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let vars = f.vars().clone();
    let n = vars.len();
    let mut out = Vec::new();
    for lead in 0..n {
        // l = x_lead + sum_{j > lead} p_j x_j; substitute x_lead = -sum p_j x_j and require f = 0
        let rest: Vec<usize> = (lead + 1..n).collect();
        let pnames: Vec<String> = rest.iter().map(|j| format!("p{j}")).collect();
        let mut names = pnames.clone();
        names.extend(vars.names().iter().cloned());
        let big = Vars::new(names);
        let np = rest.len();
        let x = |j: usize| MultiPoly::var(&big, np + j);
        let mut images = Vec::with_capacity(n);
        for j in 0..n {
            images.push(if j == lead {
                let mut s = MultiPoly::zero(&big);
                for (k, &r) in rest.iter().enumerate() {
                    s = &s - &(&MultiPoly::var(&big, k) * &x(r));
                }
                s
            } else {
                x(j)
            });
        }
        let g = f.substitute(&images);
        let pvars = Vars::new(pnames);
        // coefficients of g as a polynomial in the x's
        let mut by_x: std::collections::BTreeMap<Vec<u16>, Vec<(Monomial, Rational)>> = Default::default();
        for (m, c) in g.terms() {
            let e = m.exponents();
            by_x.entry(e[np..].to_vec()).or_default().push((Monomial::from_exponents(&e[..np]), c.clone()));
        }
        if np == 0 {
            if by_x.is_empty() {
                out.push(MultiPoly::var(&vars, lead));
            }
            continue;
        }
        let eqs: Vec<MultiPoly> = by_x.into_values().map(|t| MultiPoly::from_terms(&pvars, t)).collect();
        let sols = match affine_rational_points(&Ideal::new(&pvars, eqs)?)? {
            Some(s) => s,
            None => return Err(Error::Unsupported("form has infinitely many linear factors".into())),
        };
        for p in sols {
            let mut coeffs = vec![Rational::zero(); n];
            coeffs[lead] = Rational::one();
            for (k, &r) in rest.iter().enumerate() {
                coeffs[r] = p[k].clone();
            }
            out.push(MultiPoly::linear(&vars, &coeffs));
        }
    }
    Ok(out)
}

/// Symmetric matrix of a quadratic form (half its Hessian).
pub fn quadric_matrix(q: &MultiPoly) -> QMatrix {
    let n = q.vars().len();
    let half = Rational::new(1.into(), 2.into());
    (0..n)
        .map(|i| (0..n).map(|j| q.partial_derivative(i).partial_derivative(j).constant_term() * &half).collect())
        .collect()
}

pub fn split_cubic(s: &PfaffianCubic) -> Result<Option<CubicSplit>> {
    let factors = linear_factors(&s.poly)?;
    let Some(l) = factors.first() else { return Ok(None) };
    let q = s.poly.exact_divide(l)?.ok_or_else(|| Error::Contract("linear factor does not divide the cubic".into()))?;
    if &(l * &q) != &s.poly {
        return Err(Error::Contract("cubic split does not multiply back".into()));
    }
    let quadric_rank = matrix::rank(&quadric_matrix(&q));
    Ok(Some(CubicSplit { linear: l.clone(), quadric: q, quadric_rank, linear_factors: factors.len() }))
}

/// Singular point of the Pfaffian cubic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularPointRecord {
    #[serde(with = "crate::arith::serde_rational::vec")]
    pub point: Vec<Rational>,
    /// Rank of the corresponding skew matrix.
    pub rank: usize,
    pub on_g35: bool,
    /// `S` is a cone with this vertex.
    pub cone_vertex: bool,
}

/// Jacobian analysis of a nonzero cubic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularLocus {
    /// Projective dimension of `Sing S` (`-1` when smooth).
    pub dimension: i64,
    /// Length of the Jacobian scheme when finite.
    pub jacobian_length: u64,
    /// Rational singular points (all singular points are rational when their count equals the
    /// number of distinct points over ℂ; irrational ones are only counted).
    pub points: Vec<SingularPointRecord>,
}

pub fn singular_locus(s: &PfaffianCubic, web: &SkewWeb) -> Result<SingularLocus> {
    if s.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let jac = Ideal::new(s.vars(), s.poly.gradient())?;
    let hp = hilbert_polynomial(&jac)?;
    let mut points = Vec::new();
    if hp.dimension == 0 {
        for p in projective_rational_points(&jac)?.unwrap_or_default() {
            let rank = member_at(web, &p).rank();
            points.push(SingularPointRecord { cone_vertex: is_cone_vertex(s, &p), on_g35: rank <= 2, rank, point: p });
        }
    }
    let jacobian_length = if hp.dimension == 0 { hp.degree } else { 0 };
    Ok(SingularLocus { dimension: hp.dimension, jacobian_length, points })
}

/// `D_v S = 0` identically.
pub fn is_cone_vertex(s: &PfaffianCubic, v: &[Rational]) -> bool {
    let mut d = MultiPoly::zero(s.vars());
    for (i, c) in v.iter().enumerate() {
        if !c.is_zero() {
            d = &d + &s.poly.partial_derivative(i).scale(c);
        }
    }
    d.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{parse_poly, rat};
    use crate::fixtures;

    #[test]
    fn constructed_split() {
        let v = Vars::dual(4);
        let s = PfaffianCubic { poly: parse_poly("a*(b^2 + c*d)", &v).unwrap() };
        let sp = split_cubic(&s).unwrap().unwrap();
        assert_eq!(sp.linear, parse_poly("a", &v).unwrap());
        assert_eq!(sp.quadric_rank, 3);
        let t = PfaffianCubic { poly: parse_poly("(a - 2*b + 3*c)*(a*b - c*d + d^2)", &v).unwrap() };
        let sp = split_cubic(&t).unwrap().unwrap();
        assert_eq!(sp.linear, parse_poly("a - 2*b + 3*c", &v).unwrap());
    }

    #[test]
    fn generic_cubic_is_smooth_and_irreducible() {
        let w = fixtures::palatini_generic();
        let s = pfaffian_cubic(&w).unwrap();
        assert!(s.poly.is_homogeneous() && s.poly.total_degree() == Some(3));
        assert!(split_cubic(&s).unwrap().is_none());
        assert_eq!(singular_locus(&s, &w).unwrap().dimension, -1);
        assert_eq!(g35_locus(&w).unwrap().dimension, -1);
    }

    #[test]
    fn block_matrices_factor() {
        // matrices supported in the diagonal 2x2 blocks span at most three dimensions
        let e = |i, j| QSkew::elementary(6, i, j);
        let d = e(0, 1).add(&e(2, 3)).add(&e(4, 5));
        assert_eq!(SkewWeb::new(5, vec![e(0, 1), e(2, 3), e(4, 5), d.clone()]), Err(Error::DependentWeb));
        let v = Vars::dual(4);
        let coeffs: Vec<MultiPoly> = (0..4).map(|i| MultiPoly::var(&v, i)).collect();
        let pf = QSkew::combination(&[e(0, 1), e(2, 3), e(4, 5), d], &coeffs).pfaffian().unwrap();
        assert_eq!(pf, parse_poly("(a + d)*(b + d)*(c + d)", &v).unwrap());
        assert_eq!(linear_factors(&pf).unwrap().len(), 3);
    }

    #[test]
    fn one_rank_two_generator_is_a_singular_point() {
        let w = fixtures::split_web(1);
        let s = pfaffian_cubic(&w).unwrap();
        let sing = singular_locus(&s, &w).unwrap();
        assert_eq!(sing.dimension, 0);
        assert_eq!(sing.points.len(), 1);
        assert_eq!(sing.points[0].point, vec![rat(1), rat(0), rat(0), rat(0)]);
        assert!(sing.points[0].on_g35);
        let g = g35_locus(&w).unwrap();
        assert_eq!((g.dimension, g.length), (0, 1));
    }

    #[test]
    fn cone_fixture() {
        let w = fixtures::cone();
        let s = pfaffian_cubic(&w).unwrap();
        let sing = singular_locus(&s, &w).unwrap();
        let v: Vec<_> = sing.points.iter().filter(|p| p.cone_vertex).collect();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].rank, 4);
    }

    #[test]
    fn reducible_cases_split() {
        for case in 1..=4 {
            let s = pfaffian_cubic(&fixtures::reducible_case(case)).unwrap();
            let sp = split_cubic(&s).unwrap().expect("linear factor");
            assert_eq!(&sp.linear * &sp.quadric, s.poly);
        }
    }
}
