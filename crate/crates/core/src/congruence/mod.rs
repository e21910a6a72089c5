//! Linear congruences of lines in P^n cut out by `n-1` linear complexes.
//!
//! Row `k` of the matrix `M` is `(A_k x)^T`, i.e. `L_kj = sum_i a^k_ji x_i`. A line `P∧Q`
//! lies in complex `k` iff `P^T A_k Q = 0`, equivalently `M(P)·Q = 0` row by row, so the
//! congruence line through a point `P` is the projectivized kernel of `M(P)`.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arith::matrix::{self, QMatrix};
use crate::arith::{binary_form_gcd, BinaryForm, IsolatingInterval, MultiPoly, Rational, Vars};
use crate::error::{Error, Result};
use crate::grassmann::{pairs, LinearSubspace, PluckerVector, QSkew};
use crate::groebner::{poly_gcd, Ideal};

/// The `n-1` skew matrices `A_1..A_{n-1}` of size `n+1` defining the complexes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SkewWeb {
    n: usize,
    mats: Vec<QSkew>,
}

impl SkewWeb {
    /// Validates sizes and linear independence.
    pub fn new(n: usize, mats: Vec<QSkew>) -> Result<SkewWeb> {
        if n < 2 {
            return Err(Error::Dimension(format!("congruences need n >= 2, got {n}")));
        }
        if mats.len() != n - 1 {
            return Err(Error::Dimension(format!("P^{n} needs {} matrices, got {}", n - 1, mats.len())));
        }
        for (k, m) in mats.iter().enumerate() {
            if m.size() != n + 1 {
                return Err(Error::Dimension(format!("matrix {k} has size {}, expected {}", m.size(), n + 1)));
            }
        }
        let vectors: QMatrix = mats.iter().map(|m| m.upper()).collect();
        if matrix::rank(&vectors) < mats.len() {
            return Err(Error::DependentWeb);
        }
        Ok(SkewWeb { n, mats })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrices(&self) -> &[QSkew] {
        &self.mats
    }

    /// Seeded web with integer entries in `[-bound, bound]`.
    pub fn random(n: usize, seed: u64, bound: i64) -> SkewWeb {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        loop {
            let mats = (0..n - 1).map(|_| random_skew(&mut rng, n + 1, bound)).collect();
            if let Ok(w) = SkewWeb::new(n, mats) {
                return w;
            }
        }
    }

    /// Same complexes, different generators: `B_k = sum_j c_kj A_j` for invertible `c`.
    pub fn recombine(&self, c: &[Vec<Rational>]) -> Result<SkewWeb> {
        if matrix::det(c).is_zero() {
            return Err(Error::Singular);
        }
        let mats = c
            .iter()
            .map(|row| {
                let mut acc = QSkew::zero(self.n + 1);
                for (cj, a) in row.iter().zip(&self.mats) {
                    if !cj.is_zero() {
                        acc = acc.add(&a.scale(cj));
                    }
                }
                acc
            })
            .collect();
        SkewWeb::new(self.n, mats)
    }
}

pub fn random_skew(rng: &mut impl Rng, size: usize, bound: i64) -> QSkew {
    let upper: Vec<Rational> = (0..size * (size - 1) / 2).map(|_| Rational::from_integer(rng.gen_range(-bound..=bound).into())).collect();
    QSkew::from_upper(size, &upper, &Rational::zero()).unwrap()
}

/// A congruence together with its matrix of linear forms.
#[derive(Clone, Debug)]
pub struct Congruence {
    web: SkewWeb,
    vars: Vars,
    m: Vec<Vec<MultiPoly>>,
}

pub fn build_congruence(web: &SkewWeb) -> Result<Congruence> {
    let n = web.n;
    let vars = Vars::projective(n);
    let m: Vec<Vec<MultiPoly>> = web
        .mats
        .iter()
        .map(|a| (0..=n).map(|j| MultiPoly::linear(&vars, &a.rows()[j])).collect())
        .collect();
    let c = Congruence { web: web.clone(), vars, m };
    c.check_pairing(10, 0x5eed)?;
    Ok(c)
}

impl Congruence {
    pub fn web(&self) -> &SkewWeb {
        &self.web
    }

    pub fn n(&self) -> usize {
        self.web.n
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    /// The `(n-1) x (n+1)` matrix of linear forms.
    pub fn matrix(&self) -> &[Vec<MultiPoly>] {
        &self.m
    }

    pub fn matrix_at(&self, p: &[Rational]) -> QMatrix {
        self.m.iter().map(|row| row.iter().map(|l| l.eval(p)).collect()).collect()
    }

    // Row k of M(P) dotted with Q equals -P^T A_k Q = -pairing(A_k, P∧Q).
    fn check_pairing(&self, trials: usize, seed: u64) -> Result<()> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = self.n();
        let mut done = 0;
        while done < trials {
            let p = random_point(&mut rng, n, 9);
            let q = random_point(&mut rng, n, 9);
            let Ok(l) = PluckerVector::from_points(&p, &q) else { continue };
            let mp = self.matrix_at(&p);
            for (k, a) in self.web.mats.iter().enumerate() {
                let row: Rational = mp[k].iter().zip(&q).map(|(x, y)| x * y).fold(Rational::zero(), |s, t| s + t);
                if row != -l.pairing(a) {
                    return Err(Error::Contract(format!("row {k} of M does not reproduce its complex")));
                }
            }
            done += 1;
        }
        Ok(())
    }

    /// Ideal of all maximal minors of `M`.
    pub fn focal_ideal(&self) -> Ideal {
        let gens: Vec<MultiPoly> = focal_minors(&self.m).into_iter().map(|(_, d)| d).collect();
        Ideal::new(&self.vars, gens).unwrap()
    }

    /// True when `P` lies on the focal locus (rank of `M(P)` below `n-1`).
    pub fn is_focal(&self, p: &[Rational]) -> bool {
        matrix::rank(&self.matrix_at(p)) < self.n() - 1
    }

    /// Whether the line lies in all complexes.
    pub fn contains_line(&self, l: &PluckerVector) -> bool {
        self.web.mats.iter().all(|a| l.pairing(a).is_zero())
    }

    /// Transforms the web so that lines map by `x ↦ g x`: `A_k ↦ g^-T A_k g^-1`.
    pub fn apply_projectivity(&self, g: &[Vec<Rational>]) -> Result<Congruence> {
        let gi = matrix::inverse(g)?;
        let mats = self.web.mats.iter().map(|a| a.congruent(&gi)).collect();
        build_congruence(&SkewWeb::new(self.n(), mats)?)
    }
}

/// Maximal minors of a matrix of polynomials, indexed by column subsets.
pub fn focal_minors(m: &[Vec<MultiPoly>]) -> Vec<(Vec<usize>, MultiPoly)> {
    use rayon::prelude::*;
    let r = m.len();
    let c = m[0].len();
    let rows: Vec<usize> = (0..r).collect();
    matrix::subsets(c, r).into_par_iter().map(|cols| {
        let d = matrix::minor(m, &rows, &cols);
        (cols, d)
    }).collect()
}

pub fn random_point(rng: &mut impl Rng, n: usize, bound: i64) -> Vec<Rational> {
    loop {
        let p: Vec<Rational> = (0..=n).map(|_| Rational::from_integer(rng.gen_range(-bound..=bound).into())).collect();
        if p.iter().any(|x| !x.is_zero()) {
            return p;
        }
    }
}

/// `(n^2 - 3n + 4) / 2`, the degree of the focal locus of a linear congruence in P^n.
pub fn expected_degree(n: usize) -> usize {
    (n * n + 4 - 3 * n) / 2
}

/// The unique congruence line through a non-focal point: `p_ij = (-1)^(i+j+1)` times
/// the minor of `M(P)` deleting columns `i` and `j`.
pub fn line_through_point(c: &Congruence, p: &[Rational]) -> Result<PluckerVector> {
    let n = c.n();
    if p.len() != n + 1 {
        return Err(Error::Dimension(format!("point with {} coordinates in P^{n}", p.len())));
    }
    let mp = c.matrix_at(p);
    let r = matrix::rank(&mp);
    if r < n - 1 {
        return Err(Error::FocalPoint { rank: r, expected: n - 1 });
    }
    let rows: Vec<usize> = (0..n - 1).collect();
    let coords: Vec<Rational> = pairs(n)
        .iter()
        .map(|&(i, j)| {
            let cols: Vec<usize> = (0..=n).filter(|&k| k != i && k != j).collect();
            let d = matrix::minor(&mp, &rows, &cols);
            if (i + j + 1) % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .collect();
    let l = PluckerVector::new(n, coords)?;
    if !l.is_line() || !l.contains_point(p) || !c.contains_line(&l) {
        return Err(Error::Contract("line through point failed its postconditions".into()));
    }
    Ok(l)
}

/// Foci on a congruence line, parametrized as `λ P + μ Q`.
#[derive(Clone, Debug, Serialize)]
pub struct FocusSet {
    pub line: PluckerVector,
    #[serde(serialize_with = "ser_points")]
    pub points: (Vec<Rational>, Vec<Rational>),
    /// Coefficient `i` multiplies `λ^i μ^(d-i)`.
    #[serde(serialize_with = "ser_form")]
    pub form: BinaryForm,
    /// Real roots of the form in `t = λ/μ`.
    pub real_roots: Vec<IsolatingInterval>,
    pub root_at_infinity: usize,
    pub multiplicities: Vec<u32>,
    pub line_in_focal_locus: bool,
}

fn ser_form<S: serde::Serializer>(f: &BinaryForm, s: S) -> std::result::Result<S::Ok, S::Error> {
    crate::arith::serde_rational::vec::serialize(f.coeffs(), s)
}

fn ser_points<S: serde::Serializer>(p: &(Vec<Rational>, Vec<Rational>), s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(2))?;
    for v in [&p.0, &p.1] {
        let r: Vec<String> = v.iter().map(crate::arith::format_rational).collect();
        seq.serialize_element(&r)?;
    }
    seq.end()
}

impl FocusSet {
    /// Number of distinct foci over ℂ.
    pub fn distinct(&self) -> usize {
        self.multiplicities.len()
    }
}

/// Foci on a congruence line given by its Plücker vector.
pub fn foci_on_line(c: &Congruence, l: &PluckerVector) -> Result<FocusSet> {
    let (p, q) = l.spanning_points()?;
    foci_between(c, &p, &q)
}

/// Foci on the congruence line through `p` and `q`, as roots of the gcd of the maximal
/// minors of `M(λp + μq)`.
pub fn foci_between(c: &Congruence, p: &[Rational], q: &[Rational]) -> Result<FocusSet> {
    let l = PluckerVector::from_points(p, q)?;
    if !c.contains_line(&l) {
        return Err(Error::NotCongruenceLine);
    }
    let n = c.n();
    let b = Vars::binary();
    let lm = MultiPoly::var(&b, 0);
    let mu = MultiPoly::var(&b, 1);
    let x: Vec<MultiPoly> = p.iter().zip(q).map(|(a, bb)| &lm.scale(a) + &mu.scale(bb)).collect();
    let mm: Vec<Vec<MultiPoly>> = c.matrix().iter().map(|row| row.iter().map(|e| e.substitute(&x)).collect()).collect();
    let forms = focal_minors(&mm)
        .into_iter()
        .map(|(_, d)| BinaryForm::from_poly_with_degree(&d, n - 1))
        .collect::<Result<Vec<_>>>()?;
    let points = (p.to_vec(), q.to_vec());
    match binary_form_gcd(&forms) {
        Err(Error::AllZero) => Ok(FocusSet {
            line: l,
            points,
            form: BinaryForm::zero(n - 1),
            real_roots: Vec::new(),
            root_at_infinity: 0,
            multiplicities: Vec::new(),
            line_in_focal_locus: true,
        }),
        Err(e) => Err(e),
        Ok(g) => {
            if g.degree() != n - 1 {
                return Err(Error::Contract(format!("focus form of degree {} on a line in P^{n}", g.degree())));
            }
            Ok(FocusSet {
                line: l,
                points,
                real_roots: g.real_roots()?,
                root_at_infinity: g.multiplicity_at_infinity(),
                multiplicities: g.multiplicity_pattern(),
                form: g,
                line_in_focal_locus: false,
            })
        }
    }
}

/// Plane of the pencil of congruence lines through a focal point of corank one.
pub fn pencil_plane(c: &Congruence, p: &[Rational]) -> Result<LinearSubspace> {
    let n = c.n();
    let mp = c.matrix_at(p);
    let r = matrix::rank(&mp);
    if r == n - 1 {
        return Err(Error::NotFocalPoint);
    }
    if r < n - 2 {
        return Err(Error::DegenerateFocus(n - 1 - r));
    }
    let plane = LinearSubspace::from_forms(n, &mp);
    debug_assert_eq!(plane.dim(), 2);
    if !plane.contains_point(p) {
        return Err(Error::Contract("pencil plane misses its centre".into()));
    }
    for q in plane.points() {
        if let Ok(l) = PluckerVector::from_points(p, q) {
            if !c.contains_line(&l) {
                return Err(Error::Contract("pencil line outside the congruence".into()));
            }
        }
    }
    Ok(plane)
}

/// Web basis adapted to a focal point: the first matrix kills `P`.
pub fn adapted_web(c: &Congruence, p: &[Rational]) -> Result<SkewWeb> {
    let mp = c.matrix_at(p);
    let left = matrix::kernel(&matrix::transpose(&mp), mp.len());
    let lam = left.first().ok_or(Error::NotFocalPoint)?;
    let k = c.n() - 1;
    let mut basis: QMatrix = vec![lam.clone()];
    for j in 0..k {
        let e: Vec<Rational> = (0..k).map(|i| Rational::from_integer(((i == j) as i64).into())).collect();
        let mut trial = basis.clone();
        trial.push(e.clone());
        if matrix::rank(&trial) == trial.len() {
            basis.push(e);
        }
        if basis.len() == k {
            break;
        }
    }
    c.web().recombine(&basis)
}

/// Degree of the curve cut on the pencil plane at `P` by the focal locus, out of `P`.
pub fn residual_plane_curve_degree(c: &Congruence, p: &[Rational]) -> Result<usize> {
    let plane = pencil_plane(c, p)?;
    let params = Vars::new(["s0", "s1", "s2"]);
    let x = plane.parametrization(&params)?;
    let mm: Vec<Vec<MultiPoly>> = c.matrix().iter().map(|row| row.iter().map(|e| e.substitute(&x)).collect()).collect();
    let restricted: Vec<MultiPoly> = focal_minors(&mm).into_iter().map(|(_, d)| d).filter(|d| !d.is_zero()).collect();
    if restricted.is_empty() {
        return Err(Error::PlaneInFocalLocus);
    }
    let g = poly_gcd(&restricted)?;
    Ok(g.total_degree().unwrap_or(0) as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::groebner::hilbert_polynomial;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn first_row_of_single_complex() {
        let mut mats = vec![QSkew::elementary(6, 0, 1)];
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..3 {
            mats.push(random_skew(&mut rng, 6, 3));
        }
        let c = build_congruence(&SkewWeb::new(5, mats).unwrap()).unwrap();
        let x = |i| MultiPoly::var(c.vars(), i);
        assert_eq!(c.matrix()[0][0], x(1));
        assert_eq!(c.matrix()[0][1], -&x(0));
        assert!(c.matrix()[0][2..].iter().all(|e| e.is_zero()));
    }

    #[test]
    fn dependent_web_rejected() {
        let a = QSkew::elementary(4, 0, 1).add(&QSkew::elementary(4, 2, 3));
        assert_eq!(SkewWeb::new(3, vec![a.clone(), a.scale(&rat(3))]), Err(Error::DependentWeb));
    }

    #[test]
    fn minor_sign_convention_holds_symbolically() {
        // The signed minors of M(x) at a symbolic point pass through x and lie in every complex.
        let web = SkewWeb::random(4, 11, 4);
        let c = build_congruence(&web).unwrap();
        let n = 4;
        let rows: Vec<usize> = (0..n - 1).collect();
        let p: Vec<MultiPoly> = pairs(n)
            .iter()
            .map(|&(i, j)| {
                let cols: Vec<usize> = (0..=n).filter(|&k| k != i && k != j).collect();
                let d = matrix::minor(c.matrix(), &rows, &cols);
                if (i + j + 1) % 2 == 0 { d } else { -d }
            })
            .collect();
        let get = |i: usize, j: usize| -> MultiPoly {
            if i < j {
                p[crate::grassmann::plucker::pair_position(n, i, j)].clone()
            } else {
                -&p[crate::grassmann::plucker::pair_position(n, j, i)]
            }
        };
        let x: Vec<MultiPoly> = (0..=n).map(|i| MultiPoly::var(c.vars(), i)).collect();
        for i in 0..=n {
            for j in i + 1..=n {
                for k in j + 1..=n {
                    let t = &(&(&x[i] * &get(j, k)) - &(&x[j] * &get(i, k))) + &(&x[k] * &get(i, j));
                    assert!(t.is_zero());
                }
            }
        }
        for a in web.matrices() {
            let mut s = MultiPoly::zero(c.vars());
            for (idx, &(i, j)) in pairs(n).iter().enumerate() {
                s = &s + &p[idx].scale(a.get(i, j));
            }
            assert!(s.is_zero());
        }
    }

    #[test]
    fn expected_degrees() {
        assert_eq!((expected_degree(3), expected_degree(4), expected_degree(5)), (2, 4, 7));
    }

    #[test]
    fn generic_p4_focal_degree_and_conic() {
        let web = SkewWeb::random(4, 3, 5);
        let c = build_congruence(&web).unwrap();
        let hp = hilbert_polynomial(&c.focal_ideal()).unwrap();
        assert_eq!((hp.dimension, hp.degree), (2, 4));
        let k = crate::grassmann::kernel_subspace(&web.matrices()[0]);
        assert_eq!(k.dim(), 0);
        let p = k.points()[0].clone();
        assert!(c.is_focal(&p));
        assert_eq!(residual_plane_curve_degree(&c, &p).unwrap(), 2);
    }

    #[test]
    fn lines_and_foci_generic_p5() {
        let c = build_congruence(&SkewWeb::random(5, 5, 5)).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..3 {
            let p = random_point(&mut rng, 5, 9);
            let l = line_through_point(&c, &p).unwrap();
            let f = foci_on_line(&c, &l).unwrap();
            assert_eq!(f.form.degree(), 4);
            assert!(f.form.has_distinct_roots());
        }
    }

    #[test]
    fn split_fixture_line_inside_focal_space() {
        let mut mats = vec![QSkew::elementary(6, 0, 1)];
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..3 {
            mats.push(random_skew(&mut rng, 6, 3));
        }
        let c = build_congruence(&SkewWeb::new(5, mats).unwrap()).unwrap();
        // find a congruence line inside π_A = {x0 = x1 = 0}: through P ∈ π_A the pencil plane meets π_A
        let p = v(&[0, 0, 1, 2, -1, 3]);
        assert!(c.is_focal(&p));
        let plane = pencil_plane(&c, &p).unwrap();
        let pi = LinearSubspace::coordinate(5, &[0, 1]);
        let q = plane.points().iter().find(|q| pi.contains_point(q) && PluckerVector::from_points(&p, q).is_ok());
        if let Some(q) = q {
            let f = foci_between(&c, &p, q).unwrap();
            assert!(f.line_in_focal_locus);
        }
        assert_eq!(residual_plane_curve_degree(&c, &p).unwrap(), 3);
    }

    #[test]
    fn corank_two_is_reported() {
        let c = build_congruence(&SkewWeb::new(3, vec![QSkew::elementary(4, 0, 1), QSkew::elementary(4, 0, 2)]).unwrap()).unwrap();
        // at e3 both rows vanish
        assert_eq!(pencil_plane(&c, &v(&[0, 0, 0, 1])), Err(Error::DegenerateFocus(2)));
    }
}
