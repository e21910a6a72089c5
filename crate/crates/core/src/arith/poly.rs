use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::monomial::{cmp_grevlex, Monomial};
use super::rational::{denominator_lcm, format_rational, integer_content, Rational};
use super::univariate::UniPoly;
use crate::error::{Error, Result};

/// An ordered list of variable names shared by the polynomials of one ring.
#[derive(Clone)]
pub struct Vars(Arc<Vec<String>>);

impl Vars {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        Vars(Arc::new(names.into_iter().map(Into::into).collect()))
    }

    /// `x0, ..., xn`: homogeneous coordinates of P^n.
    pub fn projective(n: usize) -> Self {
        Self::new((0..=n).map(|i| format!("x{i}")))
    }

    /// `a, b, c, ...`: coordinates on the dual space spanned by a web.
    pub fn dual(k: usize) -> Self {
        let letters = ["a", "b", "c", "d", "e", "f", "g", "h"];
        if k <= letters.len() {
            Self::new(letters[..k].iter().copied())
        } else {
            Self::new((1..=k).map(|i| format!("w{i}")))
        }
    }

    /// `u1, ..., um`: unknowns of a flux system.
    pub fn flux(m: usize) -> Self {
        Self::new((1..=m).map(|i| format!("u{i}")))
    }

    /// `l, m`: the homogeneous pair (λ:μ).
    pub fn binary() -> Self {
        Self::new(["l", "m"])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }

    /// New ring with `extra` variables placed before the current ones.
    pub fn prepend(&self, extra: &[&str]) -> Vars {
        Vars::new(extra.iter().map(|s| s.to_string()).chain(self.0.iter().cloned()))
    }

    /// New ring with the listed variables removed.
    pub fn without(&self, drop: &[usize]) -> Vars {
        Vars::new(self.0.iter().enumerate().filter(|(i, _)| !drop.contains(i)).map(|(_, v)| v.clone()))
    }
}

impl PartialEq for Vars {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Vars {}

impl fmt::Debug for Vars {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Sparse polynomial with exact rational coefficients.
///
/// Terms are kept sorted by descending graded reverse lexicographic order and
/// no stored coefficient is zero.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vars,
    terms: Vec<(Monomial, Rational)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

/// Checked ring operation; fails when the variable sets differ.
pub fn poly_arith(a: &MultiPoly, b: &MultiPoly, op: PolyOp) -> Result<MultiPoly> {
    a.check_ring(b)?;
    Ok(match op {
        PolyOp::Add => a.add_impl(b, false),
        PolyOp::Sub => a.add_impl(b, true),
        PolyOp::Mul => a.mul_impl(b),
    })
}

impl MultiPoly {
    pub fn zero(vars: &Vars) -> Self {
        MultiPoly { vars: vars.clone(), terms: Vec::new() }
    }

    pub fn one(vars: &Vars) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn constant(vars: &Vars, c: Rational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.push((Monomial::one(vars.len()), c));
        }
        p
    }

    pub fn var(vars: &Vars, i: usize) -> Self {
        MultiPoly { vars: vars.clone(), terms: vec![(Monomial::var(vars.len(), i), Rational::one())] }
    }

    pub fn var_named(vars: &Vars, name: &str) -> Result<Self> {
        let i = vars.index_of(name).ok_or_else(|| Error::UnknownVariable(name.into()))?;
        Ok(Self::var(vars, i))
    }

    pub fn term(vars: &Vars, mono: Monomial, c: Rational) -> Self {
        assert_eq!(mono.nvars(), vars.len());
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.push((mono, c));
        }
        p
    }

    /// Linear form `sum coeffs[i] * var_i`.
    pub fn linear(vars: &Vars, coeffs: &[Rational]) -> Self {
        assert_eq!(coeffs.len(), vars.len());
        let terms = coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (Monomial::var(vars.len(), i), c.clone()))
            .collect();
        MultiPoly { vars: vars.clone(), terms }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms(vars: &Vars, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), vars.len());
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        Self::from_map(vars, acc)
    }

    fn from_map(vars: &Vars, acc: HashMap<Monomial, Rational>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| cmp_grevlex(b.0.exponents(), a.0.exponents()));
        MultiPoly { vars: vars.clone(), terms }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn constant_term(&self) -> Rational {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => Rational::zero(),
        }
    }

    /// Leading term in graded reverse lexicographic order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u16> {
        self.terms.iter().map(|(m, _)| m.exponent(var)).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => self.terms.iter().all(|(m, _)| m.degree() == m0.degree()),
        }
    }

    /// Indices of variables that actually occur.
    pub fn support(&self) -> Vec<usize> {
        (0..self.vars.len()).filter(|&i| self.terms.iter().any(|(m, _)| m.exponent(i) > 0)).collect()
    }

    pub fn coefficient(&self, mono: &Monomial) -> Rational {
        self.terms
            .iter()
            .find(|(m, _)| m == mono)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Coefficients of a linear form, one per variable (constant terms ignored).
    pub fn linear_coefficients(&self) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.vars.len()];
        for (m, c) in &self.terms {
            if m.degree() == 1 {
                let i = m.exponents().iter().position(|&e| e == 1).unwrap();
                out[i] = c.clone();
            }
        }
        out
    }

    pub fn homogeneous_component(&self, d: u32) -> MultiPoly {
        let terms = self.terms.iter().filter(|(m, _)| m.degree() == d).cloned().collect();
        MultiPoly { vars: self.vars.clone(), terms }
    }

    fn check_ring(&self, other: &MultiPoly) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::VariableMismatch(format!("{:?}", self.vars), format!("{:?}", other.vars)));
        }
        Ok(())
    }

    fn add_impl(&self, other: &MultiPoly, subtract: bool) -> MultiPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match cmp_grevlex(a[i].0.exponents(), b[j].0.exponents()) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let c = if subtract { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if subtract { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if subtract { -&t.1 } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        MultiPoly { vars: self.vars.clone(), terms: out }
    }

    fn mul_impl(&self, other: &MultiPoly) -> MultiPoly {
        if self.is_zero() || other.is_zero() {
            return MultiPoly::zero(&self.vars);
        }
        if other.terms.len() == 1 {
            return self.mul_term(&other.terms[0].0, &other.terms[0].1);
        }
        if self.terms.len() == 1 {
            return other.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        let mut acc: HashMap<Monomial, Rational> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let prod = ca * cb;
                match acc.entry(ma.mul(mb)) {
                    std::collections::hash_map::Entry::Occupied(mut e) => *e.get_mut() += prod,
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(prod);
                    }
                }
            }
        }
        Self::from_map(&self.vars, acc)
    }

    /// Multiplication by a single term keeps the order, so no sort is needed.
    pub fn mul_term(&self, mono: &Monomial, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.vars);
        }
        let terms = self.terms.iter().map(|(m, a)| (m.mul(mono), a * c)).collect();
        MultiPoly { vars: self.vars.clone(), terms }
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.vars);
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect();
        MultiPoly { vars: self.vars.clone(), terms }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut result = MultiPoly::one(&self.vars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.vars.len());
        let mut powers: Vec<Vec<Rational>> = point.iter().map(|x| vec![Rational::one(), x.clone()]).collect();
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = &mut powers[i];
                while pw.len() <= e as usize {
                    let next = pw.last().unwrap() * &point[i];
                    pw.push(next);
                }
                t *= &pw[e as usize];
            }
            total += t;
        }
        total
    }

    /// Substitutes `images[i]` for variable `i`; the images share the target ring.
    pub fn substitute(&self, images: &[MultiPoly]) -> MultiPoly {
        assert_eq!(images.len(), self.vars.len());
        let target = images.first().map(|p| p.vars.clone()).expect("at least one variable");
        let mut powers: Vec<Vec<MultiPoly>> = images.iter().map(|p| vec![MultiPoly::one(&target), p.clone()]).collect();
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(&target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = &mut powers[i];
                while pw.len() <= e as usize {
                    let next = pw.last().unwrap() * &images[i];
                    pw.push(next);
                }
                t = &t * &pw[e as usize];
            }
            for (tm, tc) in t.terms {
                *acc.entry(tm).or_insert_with(Rational::zero) += tc;
            }
        }
        Self::from_map(&target, acc)
    }

    /// Moves the polynomial into ring `target`, matching variables by name.
    pub fn rename_into(&self, target: &Vars) -> Result<MultiPoly> {
        let mut map = Vec::with_capacity(self.vars.len());
        for (i, name) in self.vars.names().iter().enumerate() {
            match target.index_of(name) {
                Some(j) => map.push(Some(j)),
                None => {
                    if self.terms.iter().any(|(m, _)| m.exponent(i) > 0) {
                        return Err(Error::UnknownVariable(name.clone()));
                    }
                    map.push(None);
                }
            }
        }
        // inverse map: target var k <- source var
        let mut inv: Vec<Option<usize>> = vec![None; target.len()];
        for (i, j) in map.iter().enumerate() {
            if let Some(j) = j {
                inv[*j] = Some(i);
            }
        }
        Ok(Self::from_terms(target, self.terms.iter().map(|(m, c)| (m.remap(&inv), c.clone()))))
    }

    /// Formal partial derivative with respect to variable `var`.
    pub fn partial_derivative(&self, var: usize) -> MultiPoly {
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, c)| {
                let e = m.exponent(var);
                m.lower(var).map(|low| (low, c * Rational::from_integer(BigInt::from(e))))
            })
            .collect::<Vec<_>>();
        // Lowering one exponent keeps grevlex order among the survivors.
        let mut p = MultiPoly { vars: self.vars.clone(), terms };
        p.terms.sort_by(|a, b| cmp_grevlex(b.0.exponents(), a.0.exponents()));
        p
    }

    pub fn gradient(&self) -> Vec<MultiPoly> {
        (0..self.vars.len()).map(|i| self.partial_derivative(i)).collect()
    }

    /// Returns `q` with `self = divisor * q`, or `None` if the division is not exact.
    pub fn exact_divide(&self, divisor: &MultiPoly) -> Result<Option<MultiPoly>> {
        self.check_ring(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (lm, lc) = divisor.leading_term().unwrap();
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rem = self.clone();
        let mut quotient_terms = Vec::new();
        while let Some((m, c)) = rem.leading_term() {
            let Some(q) = lm.divide_into(m) else {
                return Ok(None);
            };
            let qc = c / &lc;
            rem = &rem - &divisor.mul_term(&q, &qc);
            quotient_terms.push((q, qc));
        }
        Ok(Some(MultiPoly::from_terms(&self.vars, quotient_terms)))
    }

    /// Content-normalized copy: coprime integer coefficients, positive leading coefficient.
    pub fn primitive(&self) -> MultiPoly {
        if self.is_zero() {
            return self.clone();
        }
        let l = denominator_lcm(self.terms.iter().map(|(_, c)| c));
        let ints: Vec<BigInt> = self.terms.iter().map(|(_, c)| (c * Rational::from_integer(l.clone())).to_integer()).collect();
        let mut g = integer_content(ints.iter());
        if self.terms[0].1.is_negative() {
            g = -g;
        }
        let terms = self
            .terms
            .iter()
            .zip(ints)
            .map(|((m, _), c)| (m.clone(), Rational::from_integer(c / &g)))
            .collect();
        MultiPoly { vars: self.vars.clone(), terms }
    }

    /// Rescaled so the leading coefficient is one.
    pub fn monic(&self) -> MultiPoly {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// View as a dense univariate polynomial in `var`; fails if other variables occur.
    pub fn to_univariate(&self, var: usize) -> Result<UniPoly> {
        let mut coeffs: Vec<Rational> = Vec::new();
        for (m, c) in &self.terms {
            if m.degree() != m.exponent(var) as u32 {
                return Err(Error::NotUnivariate);
            }
            let e = m.exponent(var) as usize;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, Rational::zero());
            }
            coeffs[e] += c;
        }
        Ok(UniPoly::new(coeffs))
    }

    /// Embeds a univariate polynomial as a polynomial in variable `var` of `vars`.
    pub fn from_univariate(vars: &Vars, var: usize, p: &UniPoly) -> MultiPoly {
        let n = vars.len();
        MultiPoly::from_terms(
            vars,
            p.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(e, c)| {
                (Monomial::one(n).with_exponent(var, e as u16), c.clone())
            }),
        )
    }

    /// Homogenizes with respect to an existing variable `h` (which must not occur).
    pub fn homogenize(&self, h: usize) -> MultiPoly {
        let d = self.total_degree().unwrap_or(0);
        MultiPoly::from_terms(
            &self.vars,
            self.terms.iter().map(|(m, c)| (m.with_exponent(h, (d - m.degree()) as u16), c.clone())),
        )
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_ring(rhs).expect("ring mismatch");
        self.add_impl(rhs, false)
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_ring(rhs).expect("ring mismatch");
        self.add_impl(rhs, true)
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_ring(rhs).expect("ring mismatch");
        self.mul_impl(rhs)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        MultiPoly { vars: self.vars.clone(), terms }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(mut self) -> MultiPoly {
        for (_, c) in self.terms.iter_mut() {
            *c = -&*c;
        }
        self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(format_rational(&abs));
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.vars.name(i).to_string()),
                    _ => factors.push(format!("{}^{}", self.vars.name(i), e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse::parse_poly;
    use crate::arith::rational::rat;

    fn p(s: &str, vars: &Vars) -> MultiPoly {
        parse_poly(s, vars).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let v = Vars::new(["x", "y"]);
        let prod = &p("x+y", &v) * &p("x-y", &v);
        assert_eq!(prod, p("x^2 - y^2", &v));
    }

    #[test]
    fn annihilator() {
        let v = Vars::new(["x", "y"]);
        assert!((&p("3*x^2*y - 7", &v) * &MultiPoly::zero(&v)).is_zero());
    }

    #[test]
    fn mismatched_rings() {
        let a = MultiPoly::var(&Vars::new(["x"]), 0);
        let b = MultiPoly::var(&Vars::new(["y"]), 0);
        assert!(matches!(poly_arith(&a, &b, PolyOp::Add), Err(Error::VariableMismatch(..))));
    }

    #[test]
    fn exact_division_examples() {
        let v = Vars::new(["x", "y"]);
        let q = p("x^2-y^2", &v).exact_divide(&p("x-y", &v)).unwrap().unwrap();
        assert_eq!(q, p("x+y", &v));
        assert_eq!(p("x^2+y^2", &v).exact_divide(&p("x-y", &v)).unwrap(), None);
        assert_eq!(p("x", &v).exact_divide(&MultiPoly::zero(&v)), Err(Error::DivisionByZero));
    }

    #[test]
    fn derivatives() {
        let v = Vars::new(["x", "y"]);
        assert_eq!(p("x^3", &v).partial_derivative(0), p("3*x^2", &v));
        assert!(p("5/7", &v).partial_derivative(0).is_zero());
        assert_eq!(p("x^2*y^3 + y", &v).partial_derivative(1), p("3*x^2*y^2 + 1", &v));
    }

    #[test]
    fn primitive_normalization() {
        let v = Vars::new(["x", "y"]);
        assert_eq!(p("-2/3*x + 4/9*y", &v).primitive(), p("3*x - 2*y", &v));
    }

    #[test]
    fn substitution_and_eval() {
        let v = Vars::new(["x", "y"]);
        let t = Vars::new(["s"]);
        let f = p("x^2 + x*y - 3", &v);
        let g = f.substitute(&[p("s+1", &t), p("2*s", &t)]);
        assert_eq!(g, p("3*s^2 + 4*s - 2", &t));
        assert_eq!(f.eval(&[rat(2), rat(5)]), rat(11));
    }

    #[test]
    fn rename_between_rings() {
        let v = Vars::new(["x", "y"]);
        let w = Vars::new(["t", "y", "x"]);
        let f = p("x^2 - y", &v).rename_into(&w).unwrap();
        assert_eq!(f, p("x^2 - y", &w));
    }

    #[test]
    fn display_round_trip() {
        let v = Vars::projective(3);
        let f = p("-1/2*x0^2*x3 + 3*x1 - x2*x3 + 7", &v);
        assert_eq!(p(&f.to_string(), &v), f);
    }
}
