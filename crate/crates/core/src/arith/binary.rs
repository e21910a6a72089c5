use std::fmt;

use num_traits::{One, Zero};

use super::monomial::Monomial;
use super::poly::{MultiPoly, Vars};
use super::rational::Rational;
use super::univariate::{IsolatingInterval, UniPoly};
use crate::error::{Error, Result};

/// Homogeneous form of degree `d` in `(λ:μ)`: `sum_i coeffs[i] * λ^i * μ^(d-i)`.
#[derive(Clone, PartialEq, Eq)]
pub struct BinaryForm {
    degree: usize,
    coeffs: Vec<Rational>,
}

impl BinaryForm {
    pub fn new(degree: usize, coeffs: Vec<Rational>) -> Self {
        assert_eq!(coeffs.len(), degree + 1, "a degree-d form has d+1 coefficients");
        BinaryForm { degree, coeffs }
    }

    pub fn zero(degree: usize) -> Self {
        Self::new(degree, vec![Rational::zero(); degree + 1])
    }

    /// Reads a homogeneous polynomial in two variables (first = λ, second = μ).
    pub fn from_poly(p: &MultiPoly) -> Result<Self> {
        if p.vars().len() != 2 {
            return Err(Error::Dimension("binary forms live in two variables".into()));
        }
        if !p.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let d = p.total_degree().unwrap_or(0) as usize;
        let mut coeffs = vec![Rational::zero(); d + 1];
        for (m, c) in p.terms() {
            coeffs[m.exponent(0) as usize] = c.clone();
        }
        Ok(Self::new(d, coeffs))
    }

    /// Like [`from_poly`](Self::from_poly) but keeps the nominal degree for the zero form.
    pub fn from_poly_with_degree(p: &MultiPoly, degree: usize) -> Result<Self> {
        if p.is_zero() {
            return Ok(Self::zero(degree));
        }
        let f = Self::from_poly(p)?;
        if f.degree != degree {
            return Err(Error::Dimension(format!("form of degree {} where {} was expected", f.degree, degree)));
        }
        Ok(f)
    }

    pub fn to_poly(&self, vars: &Vars) -> MultiPoly {
        MultiPoly::from_terms(
            vars,
            self.coeffs.iter().enumerate().map(|(i, c)| {
                (Monomial::from_exponents(&[i as u16, (self.degree - i) as u16]), c.clone())
            }),
        )
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// `f(t, 1)` as a polynomial in `t = λ/μ`.
    pub fn dehomogenize(&self) -> UniPoly {
        UniPoly::new(self.coeffs.clone())
    }

    /// Multiplicity of the root `(1:0)`.
    pub fn multiplicity_at_infinity(&self) -> usize {
        if self.is_zero() {
            return 0;
        }
        self.degree - self.dehomogenize().degree().unwrap()
    }

    pub fn from_univariate(p: &UniPoly, degree: usize) -> Self {
        let mut coeffs = p.coeffs().to_vec();
        assert!(coeffs.len() <= degree + 1);
        coeffs.resize(degree + 1, Rational::zero());
        Self::new(degree, coeffs)
    }

    pub fn eval(&self, l: &Rational, m: &Rational) -> Rational {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * num_traits::pow(l.clone(), i) * num_traits::pow(m.clone(), self.degree - i))
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// Content-normalized representative.
    pub fn primitive(&self) -> Self {
        let u = UniPoly::new(self.coeffs.clone()).primitive();
        Self::from_univariate(&u, self.degree)
    }

    /// Real roots `t = λ/μ` of the dehomogenized form; the root at infinity is reported separately.
    pub fn real_roots(&self) -> Result<Vec<IsolatingInterval>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        self.dehomogenize().isolate_real_roots()
    }

    /// Multiplicities of all roots over ℂ, sorted descending (infinity included).
    pub fn multiplicity_pattern(&self) -> Vec<u32> {
        if self.is_zero() {
            return Vec::new();
        }
        let mut pat = Vec::new();
        for (f, k) in self.dehomogenize().squarefree_decomposition() {
            for _ in 0..f.degree().unwrap() {
                pat.push(k);
            }
        }
        let inf = self.multiplicity_at_infinity();
        if inf > 0 {
            pat.push(inf as u32);
        }
        pat.sort_unstable_by(|a, b| b.cmp(a));
        pat
    }

    /// True when all roots in P^1 are distinct (nonzero discriminant).
    pub fn has_distinct_roots(&self) -> bool {
        !self.is_zero() && self.multiplicity_pattern().iter().all(|&k| k == 1)
    }
}

/// Gcd of binary forms, content-normalized; zero forms are ignored.
pub fn binary_form_gcd(forms: &[BinaryForm]) -> Result<BinaryForm> {
    let nonzero: Vec<&BinaryForm> = forms.iter().filter(|f| !f.is_zero()).collect();
    if nonzero.is_empty() {
        return Err(Error::AllZero);
    }
    let inf = nonzero.iter().map(|f| f.multiplicity_at_infinity()).min().unwrap();
    let g = nonzero
        .iter()
        .map(|f| f.dehomogenize())
        .reduce(|a, b| a.gcd(&b))
        .unwrap()
        .primitive();
    let d = g.degree().unwrap() + inf;
    Ok(BinaryForm::from_univariate(&g, d))
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly(&Vars::binary()))
    }
}

impl fmt::Debug for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryForm[{}]({self})", self.degree)
    }
}

impl BinaryForm {
    /// The form `λ` of degree one.
    pub fn lambda() -> Self {
        Self::new(1, vec![Rational::zero(), Rational::one()])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse::parse_poly;

    fn bf(s: &str) -> BinaryForm {
        BinaryForm::from_poly(&parse_poly(s, &Vars::binary()).unwrap()).unwrap()
    }

    #[test]
    fn gcd_of_lambda_mu_and_lambda_squared() {
        assert_eq!(binary_form_gcd(&[bf("l*m"), bf("l^2")]).unwrap(), BinaryForm::lambda());
    }

    #[test]
    fn gcd_idempotent() {
        let f = bf("2*l^3 - 4*l*m^2 + 6*m^3");
        assert_eq!(binary_form_gcd(&[f.clone(), f.clone()]).unwrap(), f.primitive());
    }

    #[test]
    fn gcd_keeps_infinity() {
        let g = binary_form_gcd(&[bf("m^2*(l-m)"), bf("m*(l-m)*(l+m)")]).unwrap();
        assert_eq!(g, bf("l*m - m^2"));
        assert_eq!(binary_form_gcd(&[BinaryForm::zero(2)]), Err(Error::AllZero));
    }

    #[test]
    fn multiplicities() {
        let f = bf("(l-m)^2*(l+2*m)*m");
        assert_eq!(f.multiplicity_pattern(), vec![2, 1, 1]);
        assert!(!f.has_distinct_roots());
        assert!(bf("l^2 - m^2").has_distinct_roots());
    }
}
