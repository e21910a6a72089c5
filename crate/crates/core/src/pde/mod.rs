//! Systems of conservation laws `u_t + f(u)_x = 0` with polynomial or rational fluxes,
//! the line family they define, and sample-based Temple certificates.

mod temple;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::matrix::{self, QMatrix, RingElem};
use crate::arith::{parse_poly, BinaryForm, IsolatingInterval, MultiPoly, Rational, UniPoly, Vars};
use crate::congruence::Congruence;
use crate::error::{Error, Result};
use crate::grassmann::PluckerVector;

pub use temple::{
    is_temple, linear_degeneracy_check, random_samples, straight_rarefaction_check, CheckOutcome, Condition, TempleReport, TempleVerdict,
    Witness,
};

/// Fluxes `f^i = g^i / h` in the unknowns `u1, ..., um`.
#[derive(Clone, Debug)]
pub struct FluxSystem {
    vars: Vars,
    numerators: Vec<MultiPoly>,
    denominator: MultiPoly,
    // h Dg - g Dh, so that Jf = k / h^2
    k: Vec<Vec<MultiPoly>>,
    h2: MultiPoly,
    dk: Vec<Vec<Vec<MultiPoly>>>,
    dh2: Vec<MultiPoly>,
}

impl FluxSystem {
    pub fn new(flux: Vec<MultiPoly>) -> Result<FluxSystem> {
        let vars = flux.first().map(|f| f.vars().clone()).ok_or_else(|| Error::Invalid("empty flux list".into()))?;
        let one = MultiPoly::one(&vars);
        FluxSystem::rational(flux, one)
    }

    /// Fluxes with a common denominator `h`.
    pub fn rational(numerators: Vec<MultiPoly>, denominator: MultiPoly) -> Result<FluxSystem> {
        let m = numerators.len();
        if m == 0 {
            return Err(Error::Invalid("empty flux list".into()));
        }
        let vars = Vars::flux(m);
        if numerators.iter().chain(Some(&denominator)).any(|f| f.vars() != &vars) {
            return Err(Error::VariableMismatch(format!("{:?}", vars.names()), "flux polynomial ring".into()));
        }
        if denominator.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (numerators, denominator) = if denominator.is_constant() {
            let c = Rational::one() / denominator.constant_term();
            (numerators.iter().map(|g| g.scale(&c)).collect(), MultiPoly::one(&vars))
        } else {
            (numerators, denominator)
        };
        let dh = denominator.gradient();
        let k: Vec<Vec<MultiPoly>> = numerators
            .iter()
            .map(|g| {
                let dg = g.gradient();
                (0..m).map(|j| &(&denominator * &dg[j]) - &(g * &dh[j])).collect()
            })
            .collect();
        let h2 = &denominator * &denominator;
        let dk = k.iter().map(|row| row.iter().map(|e| e.gradient()).collect()).collect();
        let dh2 = h2.gradient();
        Ok(FluxSystem { vars, numerators, denominator, k, h2, dk, dh2 })
    }

    /// Parses fluxes written in `u1, ..., um`.
    pub fn parse(flux: &[&str], denominator: Option<&str>) -> Result<FluxSystem> {
        let vars = Vars::flux(flux.len());
        let g = flux.iter().map(|s| parse_poly(s, &vars)).collect::<Result<Vec<_>>>()?;
        let h = match denominator {
            Some(s) => parse_poly(s, &vars)?,
            None => MultiPoly::one(&vars),
        };
        FluxSystem::rational(g, h)
    }

    /// Number of unknowns.
    pub fn m(&self) -> usize {
        self.numerators.len()
    }

    /// Ambient dimension of the associated line family.
    pub fn n(&self) -> usize {
        self.m() + 1
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn numerators(&self) -> &[MultiPoly] {
        &self.numerators
    }

    pub fn denominator(&self) -> &MultiPoly {
        &self.denominator
    }

    pub fn has_polynomial_flux(&self) -> bool {
        self.denominator.is_one_poly()
    }

    /// `f(u)`; errors when the denominator vanishes at `u`.
    pub fn flux_at(&self, u: &[Rational]) -> Result<Vec<Rational>> {
        let h = self.denominator_at(u)?;
        Ok(self.numerators.iter().map(|g| g.eval(u) / &h).collect())
    }

    fn denominator_at(&self, u: &[Rational]) -> Result<Rational> {
        if u.len() != self.m() {
            return Err(Error::Dimension(format!("sample with {} coordinates for {} unknowns", u.len(), self.m())));
        }
        let h = self.denominator.eval(u);
        if h.is_zero() {
            return Err(Error::Sample(format!("flux denominator vanishes at {}", fmt_point(u))));
        }
        Ok(h)
    }

    /// Symbolic Jacobian `∂f^i/∂u^j`, as numerators over `h^2`.
    pub fn jacobian_numerators(&self) -> (&[Vec<MultiPoly>], &MultiPoly) {
        (&self.k, &self.h2)
    }

    pub fn jacobian_at(&self, u: &[Rational]) -> Result<QMatrix> {
        let h = self.denominator_at(u)?;
        let h2 = &h * &h;
        Ok(self.k.iter().map(|row| row.iter().map(|e| e.eval(u) / &h2).collect()).collect())
    }

    /// `det(t I - Jf(u))`.
    pub fn characteristic_polynomial(&self, u: &[Rational]) -> Result<UniPoly> {
        let j = self.jacobian_at(u)?;
        let m = self.m();
        let rows: Vec<Vec<UniPoly>> = (0..m)
            .map(|r| {
                (0..m)
                    .map(|c| {
                        let e = UniPoly::constant(-j[r][c].clone());
                        if r == c {
                            e.add(&UniPoly::t())
                        } else {
                            e
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(matrix::determinant(&rows))
    }

    /// The system in the coordinates `v = P u + q`: `f~(v) = P f(P^-1 (v - q))`.
    pub fn affine_change(&self, p: &[Vec<Rational>], q: &[Rational]) -> Result<FluxSystem> {
        let m = self.m();
        if p.len() != m || q.len() != m {
            return Err(Error::Dimension("affine change of the wrong size".into()));
        }
        let inv = matrix::inverse(p)?;
        let v = &self.vars;
        let images: Vec<MultiPoly> = (0..m)
            .map(|k| {
                let mut e = MultiPoly::zero(v);
                for l in 0..m {
                    let shifted = &MultiPoly::var(v, l) - &MultiPoly::constant(v, q[l].clone());
                    e = &e + &shifted.scale(&inv[k][l]);
                }
                e
            })
            .collect();
        let g: Vec<MultiPoly> = self.numerators.iter().map(|g| g.substitute(&images)).collect();
        let g2 = (0..m)
            .map(|i| {
                let mut e = MultiPoly::zero(v);
                for l in 0..m {
                    e = &e + &g[l].scale(&p[i][l]);
                }
                e
            })
            .collect();
        FluxSystem::rational(g2, self.denominator.substitute(&images))
    }

    /// Image of a sample under `u ↦ P u + q`.
    pub fn affine_point(p: &[Vec<Rational>], q: &[Rational], u: &[Rational]) -> Vec<Rational> {
        matrix::mat_vec(p, u).into_iter().zip(q).map(|(a, b)| a + b).collect()
    }

    /// Derivative data at `u` along each coordinate direction, evaluated over `ℚ[t][ε]/(ε^2)`.
    pub(crate) fn jets(&self, u: &[Rational]) -> Result<JetData> {
        self.denominator_at(u)?;
        let m = self.m();
        let t = UniPoly::t();
        let h2 = self.h2.eval(u);
        let kk: Vec<Vec<Rational>> = self.k.iter().map(|row| row.iter().map(|e| e.eval(u)).collect()).collect();
        let mut det_eps = Vec::with_capacity(m);
        let mut adj_eps = Vec::with_capacity(m);
        let mut det_re = UniPoly::zero();
        let mut adj_re = Vec::new();
        for j in 0..m {
            let dh2 = self.dh2[j].eval(u);
            let b: Vec<Vec<Jet>> = (0..m)
                .map(|r| {
                    (0..m)
                        .map(|c| {
                            let mut re = UniPoly::constant(kk[r][c].clone());
                            let mut eps = UniPoly::constant(self.dk[r][c][j].eval(u));
                            if r == c {
                                re = re.sub(&t.scale(&h2));
                                eps = eps.sub(&t.scale(&dh2));
                            }
                            Jet { re, eps }
                        })
                        .collect()
                })
                .collect();
            let d = matrix::determinant(&b);
            let a = matrix::adjugate(&b);
            det_re = d.re;
            det_eps.push(d.eps);
            adj_re = a.iter().map(|row| row.iter().map(|x| x.re.clone()).collect()).collect();
            adj_eps.push(a.into_iter().map(|row| row.into_iter().map(|x| x.eps).collect()).collect());
        }
        Ok(JetData { det: det_re, det_eps, adj: adj_re, adj_eps })
    }
}

/// `C(t) = det(K(u) - t h(u)^2 I)` and `adj(K - t h^2 I)`, with their partial derivatives
/// in `u_j` (the `eps` parts).
pub(crate) struct JetData {
    pub det: UniPoly,
    pub det_eps: Vec<UniPoly>,
    pub adj: Vec<Vec<UniPoly>>,
    pub adj_eps: Vec<Vec<Vec<UniPoly>>>,
}

/// First-order jet `re + ε eps` with `ε^2 = 0`.
#[derive(Clone, Debug)]
struct Jet {
    re: UniPoly,
    eps: UniPoly,
}

impl RingElem for Jet {
    fn zero_like(&self) -> Self {
        Jet { re: UniPoly::zero(), eps: UniPoly::zero() }
    }
    fn one_like(&self) -> Self {
        Jet { re: UniPoly::constant(Rational::one()), eps: UniPoly::zero() }
    }
    fn is_zero_elem(&self) -> bool {
        self.re.is_zero() && self.eps.is_zero()
    }
    fn add_elem(&self, o: &Self) -> Self {
        Jet { re: self.re.add(&o.re), eps: self.eps.add(&o.eps) }
    }
    fn sub_elem(&self, o: &Self) -> Self {
        Jet { re: self.re.sub(&o.re), eps: self.eps.sub(&o.eps) }
    }
    fn mul_elem(&self, o: &Self) -> Self {
        Jet { re: self.re.mul(&o.re), eps: self.re.mul(&o.eps).add(&self.eps.mul(&o.re)) }
    }
}

trait IsOne {
    fn is_one_poly(&self) -> bool;
}

impl IsOne for MultiPoly {
    fn is_one_poly(&self) -> bool {
        self.is_constant() && self.constant_term().is_one()
    }
}

pub(crate) fn fmt_point(u: &[Rational]) -> String {
    let parts: Vec<String> = u.iter().map(crate::arith::format_rational).collect();
    format!("({})", parts.join(", "))
}

/// The lines `Λ(u)` joining `(1 : u : 0)` and `(0 : -f(u) : 1)`.
#[derive(Clone, Debug)]
pub struct LineFamily {
    sys: FluxSystem,
}

pub fn line_family(sys: &FluxSystem) -> LineFamily {
    LineFamily { sys: sys.clone() }
}

impl LineFamily {
    pub fn n(&self) -> usize {
        self.sys.n()
    }

    pub fn points_at(&self, u: &[Rational]) -> Result<(Vec<Rational>, Vec<Rational>)> {
        let f = self.sys.flux_at(u)?;
        let mut p = vec![Rational::one()];
        p.extend_from_slice(u);
        p.push(Rational::zero());
        let mut q = vec![Rational::zero()];
        q.extend(f.into_iter().map(|x| -x));
        q.push(Rational::one());
        Ok((p, q))
    }

    pub fn line_at(&self, u: &[Rational]) -> Result<PluckerVector> {
        let (p, q) = self.points_at(u)?;
        PluckerVector::from_points(&p, &q)
    }
}

/// One eigenvector: exact for rational eigenvalues, otherwise a column of
/// `adj(Jf(u) - t I)` whose entries are to be evaluated at the isolated root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EigenVector {
    Exact {
        #[serde(with = "crate::arith::serde_rational::vec")]
        vector: Vec<Rational>,
    },
    AtRoot { components: Vec<String> },
}

#[derive(Clone, Debug, Serialize)]
pub struct EigenData {
    #[serde(with = "crate::arith::serde_rational::vec")]
    pub u: Vec<Rational>,
    /// Coefficients of `det(t I - Jf(u))`, constant term first.
    #[serde(serialize_with = "ser_uni")]
    pub characteristic_polynomial: UniPoly,
    pub eigenvalues: Vec<IsolatingInterval>,
    pub eigenvectors: Vec<EigenVector>,
    pub hyperbolic: bool,
    pub strictly_hyperbolic: bool,
}

fn ser_uni<S: serde::Serializer>(p: &UniPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
    crate::arith::serde_rational::vec::serialize(p.coeffs(), s)
}

/// Real roots of `p` in increasing order, with rational roots pinned exactly.
pub(crate) fn isolate_pinned(p: &UniPoly) -> Result<Vec<IsolatingInterval>> {
    let mut ivs = p.isolate_real_roots()?;
    let rational = p.rational_roots()?;
    for iv in ivs.iter_mut() {
        if iv.exact.is_none() {
            if let Some((r, _)) = rational.iter().find(|(r, _)| iv.contains(r)) {
                iv.exact = Some(r.clone());
            }
        }
    }
    Ok(ivs)
}

/// First nonzero coordinate scaled to one.
pub(crate) fn normalize_first(v: &[Rational]) -> Vec<Rational> {
    match v.iter().find(|x| !x.is_zero()) {
        Some(p) => {
            let p = p.clone();
            v.iter().map(|x| x / &p).collect()
        }
        None => v.to_vec(),
    }
}

/// Index of a column of `adj` not vanishing at the root in `iv`.
pub(crate) fn nonvanishing_column(adj: &[Vec<UniPoly>], owner: &UniPoly, iv: &IsolatingInterval) -> Option<usize> {
    let m = adj.len();
    (0..m).find(|&c| (0..m).any(|r| !adj[r][c].vanishes_at_root(owner, iv)))
}

pub fn eigen_data(sys: &FluxSystem, u: &[Rational]) -> Result<EigenData> {
    let m = sys.m();
    let chi = sys.characteristic_polynomial(u)?;
    let eigenvalues = isolate_pinned(&chi)?;
    let jet = sys.jets(u)?;
    let j = sys.jacobian_at(u)?;
    let mut eigenvectors = Vec::new();
    for iv in &eigenvalues {
        match &iv.exact {
            Some(l) => {
                let shifted: QMatrix =
                    (0..m).map(|r| (0..m).map(|c| &j[r][c] - if r == c { l.clone() } else { Rational::zero() }).collect()).collect();
                let ker = matrix::kernel(&shifted, m);
                let v = ker.first().ok_or(Error::Contract("eigenvalue without eigenvector".into()))?;
                eigenvectors.push(EigenVector::Exact { vector: normalize_first(v) });
            }
            None => {
                let c = nonvanishing_column(&jet.adj, &jet.det, iv)
                    .ok_or_else(|| Error::Unsupported(format!("eigenvalue of multiplicity {} has no adjugate column", iv.multiplicity)))?;
                let components = (0..m).map(|r| uni_string(&jet.adj[r][c])).collect();
                eigenvectors.push(EigenVector::AtRoot { components });
            }
        }
    }
    let real: u32 = eigenvalues.iter().map(|iv| iv.multiplicity).sum();
    let hyperbolic = real as usize == m;
    let strictly_hyperbolic = hyperbolic && eigenvalues.len() == m;
    Ok(EigenData { u: u.to_vec(), characteristic_polynomial: chi, eigenvalues, eigenvectors, hyperbolic, strictly_hyperbolic })
}

pub(crate) fn uni_string(p: &UniPoly) -> String {
    MultiPoly::from_univariate(&Vars::new(["t"]), 0, p).to_string()
}

/// Foci of `Λ(u)` read off the rank drop of the differential of `(u, λ, μ) ↦ λ P(u) + μ Q(u)`,
/// compared with the eigenvalues of `Jf(u)`.
#[derive(Clone, Debug, Serialize)]
pub struct FocusEigenReport {
    #[serde(with = "crate::arith::serde_rational::vec")]
    pub u: Vec<Rational>,
    /// Coefficient `i` multiplies `λ^i μ^(m-i)`; roots are the focus parameters `y_0 / y_n`.
    #[serde(serialize_with = "ser_form")]
    pub focus_form: BinaryForm,
    pub foci: Vec<IsolatingInterval>,
    pub eigenvalues: Vec<IsolatingInterval>,
    pub agree: bool,
}

fn ser_form<S: serde::Serializer>(f: &BinaryForm, s: S) -> std::result::Result<S::Ok, S::Error> {
    crate::arith::serde_rational::vec::serialize(f.coeffs(), s)
}

pub fn focus_eigenvalue_check(sys: &FluxSystem, u: &[Rational]) -> Result<FocusEigenReport> {
    let eig = eigen_data(sys, u)?;
    if !eig.strictly_hyperbolic {
        return Err(Error::Sample(format!("not strictly hyperbolic at {}", fmt_point(u))));
    }
    let m = sys.m();
    let n = m + 1;
    let (p, q) = line_family(sys).points_at(u)?;
    let j = sys.jacobian_at(u)?;
    let b = Vars::binary();
    let lm = MultiPoly::var(&b, 0);
    let mu = MultiPoly::var(&b, 1);
    // columns: P, Q, and λ ∂P/∂u_k + μ ∂Q/∂u_k
    let mut cols: Vec<Vec<MultiPoly>> = vec![
        p.iter().map(|x| MultiPoly::constant(&b, x.clone())).collect(),
        q.iter().map(|x| MultiPoly::constant(&b, x.clone())).collect(),
    ];
    for k in 0..m {
        let mut col = vec![MultiPoly::zero(&b); n + 1];
        col[k + 1] = lm.clone();
        for i in 0..m {
            col[i + 1] = &col[i + 1] - &mu.scale(&j[i][k]);
        }
        cols.push(col);
    }
    let rows: Vec<Vec<MultiPoly>> = (0..=n).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
    let det = matrix::determinant(&rows);
    let form = BinaryForm::from_poly_with_degree(&det, m)?;
    let foci = if form.is_zero() { Vec::new() } else { isolate_pinned(&form.dehomogenize())? };
    let chi = &eig.characteristic_polynomial;
    let dehom = form.dehomogenize();
    let proportional = !dehom.is_zero() && dehom.degree() == chi.degree() && dehom.scale(&(chi.lead() / dehom.lead())) == *chi;
    let agree = proportional
        && form.multiplicity_at_infinity() == 0
        && foci.len() == eig.eigenvalues.len()
        && foci.iter().zip(&eig.eigenvalues).all(|(a, b)| a.exact == b.exact);
    Ok(FocusEigenReport { u: u.to_vec(), focus_form: form, foci, eigenvalues: eig.eigenvalues, agree })
}

/// Fluxes of the congruence in the chart `y_0 = 1, y_n = 0`: the line through
/// `(1 : u : 0)` meets `{y_0 = 0}` in `(0 : -f(u) : 1)`.
pub fn flux_from_congruence(c: &Congruence) -> Result<FluxSystem> {
    let n = c.n();
    let m = n - 1;
    let v = Vars::flux(m);
    let mut images = vec![MultiPoly::one(&v)];
    images.extend((0..m).map(|i| MultiPoly::var(&v, i)));
    images.push(MultiPoly::zero(&v));
    let mm: Vec<Vec<MultiPoly>> = c.matrix().iter().map(|row| row.iter().map(|e| e.substitute(&images)).collect()).collect();
    let rows: Vec<usize> = (0..n - 1).collect();
    // p_0j = (-1)^(j+1) minor(M(P) without columns 0, j) is the j-th coordinate of the meet
    let p0: Vec<MultiPoly> = (1..=n)
        .map(|j| {
            let cols: Vec<usize> = (1..=n).filter(|&k| k != j).collect();
            let d = matrix::minor(&mm, &rows, &cols);
            if j % 2 == 1 {
                d
            } else {
                -d
            }
        })
        .collect();
    let h = p0[n - 1].clone();
    if h.is_zero() {
        return Err(Error::Unsupported("the chart point (0 : ... : 0 : 1) is fundamental".into()));
    }
    let g: Vec<MultiPoly> = p0[..m].iter().map(|x| -x.clone()).collect();
    FluxSystem::rational(g, h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::congruence::{build_congruence, foci_on_line};
    use crate::fixtures;
    use crate::grassmann::LinearSubspace;

    fn pt(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn wave_lines_meet_both_axes() {
        let fam = line_family(&fixtures::wave_flux());
        let l1 = LinearSubspace::from_forms(3, &[pt(&[1, 0, 0, -1]), pt(&[0, 1, -1, 0])]);
        let l2 = LinearSubspace::from_forms(3, &[pt(&[1, 0, 0, 1]), pt(&[0, 1, 1, 0])]);
        for u in [[2, 1], [-3, 5], [0, 0]] {
            let l = fam.line_at(&pt(&u)).unwrap();
            assert!(l.is_line());
            assert!(l1.meets_line(&l).unwrap() && l2.meets_line(&l).unwrap());
        }
    }

    #[test]
    fn zero_flux_is_a_star() {
        let s = FluxSystem::parse(&["0", "0"], None).unwrap();
        let fam = line_family(&s);
        for u in [[1, 2], [3, -1]] {
            assert!(fam.line_at(&pt(&u)).unwrap().contains_point(&pt(&[0, 0, 0, 1])));
        }
    }

    #[test]
    fn conic_envelope_lines_are_not_concurrent() {
        let fam = line_family(&FluxSystem::parse(&["u1^2"], None).unwrap());
        let rows: Vec<Vec<Rational>> = [0, 1, 2].iter().map(|&u| fam.line_at(&pt(&[u])).unwrap().coords).collect();
        assert!(!matrix::det(&rows).is_zero());
    }

    #[test]
    fn eigenvalues_of_fixtures() {
        let w = eigen_data(&fixtures::wave_flux(), &pt(&[2, 1])).unwrap();
        assert!(w.strictly_hyperbolic);
        let ex: Vec<_> = w.eigenvalues.iter().map(|iv| iv.exact.clone().unwrap()).collect();
        assert_eq!(ex, pt(&[-1, 1]));
        assert_eq!(w.eigenvectors[1], EigenVector::Exact { vector: pt(&[1, -1]) });
        let r = eigen_data(&fixtures::rotated_flux(), &pt(&[2, 1])).unwrap();
        assert!(r.eigenvalues.is_empty() && !r.hyperbolic);
        let b = eigen_data(&FluxSystem::parse(&["u1^2"], None).unwrap(), &pt(&[3])).unwrap();
        assert_eq!(b.eigenvalues[0].exact, Some(rat(6)));
    }

    #[test]
    fn foci_are_eigenvalues() {
        let r = focus_eigenvalue_check(&fixtures::wave_flux(), &pt(&[2, 1])).unwrap();
        assert!(r.agree);
        let roots: Vec<_> = r.foci.iter().map(|iv| iv.exact.clone().unwrap()).collect();
        assert_eq!(roots, pt(&[-1, 1]));
        let b = focus_eigenvalue_check(&fixtures::burgers_flux(), &pt(&[3])).unwrap();
        assert_eq!(b.foci[0].exact, Some(rat(3)));
        let lin = FluxSystem::parse(&["u1 + 2*u2", "3*u1 + 4*u2"], None).unwrap();
        for u in [[0, 0], [5, -7]] {
            let r = focus_eigenvalue_check(&lin, &pt(&u)).unwrap();
            assert!(r.agree && r.foci.len() == 2 && r.foci.iter().all(|iv| iv.exact.is_none()));
        }
        assert!(matches!(focus_eigenvalue_check(&fixtures::rotated_flux(), &pt(&[1, 1])), Err(Error::Sample(_))));
    }

    #[test]
    fn wave_web_gives_wave_flux() {
        let c = build_congruence(&fixtures::wave_web()).unwrap();
        let s = flux_from_congruence(&c).unwrap();
        assert!(s.has_polynomial_flux());
        assert_eq!(s.numerators(), fixtures::wave_flux().numerators());
        // foci of the congruence line agree with the eigenvalues
        let u = pt(&[2, 1]);
        let l = line_family(&s).line_at(&u).unwrap();
        assert!(c.contains_line(&l));
        let f = foci_on_line(&c, &l).unwrap();
        assert_eq!(f.form.degree(), 2);
        assert_eq!(f.real_roots.len(), 2);
    }

    #[test]
    fn affine_change_keeps_eigenvalues() {
        let s = fixtures::wave_flux();
        let p = vec![pt(&[2, 1]), pt(&[1, 1])];
        let q = pt(&[3, -1]);
        let t = s.affine_change(&p, &q).unwrap();
        let u = pt(&[4, 7]);
        let v = FluxSystem::affine_point(&p, &q, &u);
        assert_eq!(s.characteristic_polynomial(&u).unwrap(), t.characteristic_polynomial(&v).unwrap());
    }
}
