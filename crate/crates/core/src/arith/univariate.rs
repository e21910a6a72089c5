//! Dense univariate polynomials over ℚ and Sturm-certified real root isolation.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{denominator_lcm, format_rational, integer_content, rat, simplest_in, Rational};
use crate::error::{Error, Result};

/// Coefficients stored from the constant term upwards; no trailing zeros.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| rat(x)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Self::from_ints(&[0, 1])
    }

    /// `t - r`.
    pub fn linear_root(r: &Rational) -> Self {
        Self::new(vec![-r, Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn sign_at(&self, x: &Rational) -> i8 {
        let v = self.eval(x);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn add(&self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = Rational::zero();
        Self::new((0..n).map(|i| self.coeffs.get(i).unwrap_or(&z) + o.coeffs.get(i).unwrap_or(&z)).collect())
    }

    pub fn sub(&self, o: &UniPoly) -> UniPoly {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> UniPoly {
        (0..e).fold(UniPoly::constant(Rational::one()), |acc, _| acc.mul(self))
    }

    pub fn derivative(&self) -> UniPoly {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * rat(i as i64)).collect())
    }

    pub fn div_rem(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((UniPoly::zero(), self.clone()));
        }
        let lc = d.lead();
        let mut q = vec![Rational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] / &lc;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] -= &c * dc;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        Ok((Self::new(q), Self::new(r)))
    }

    /// Exact quotient, if `d` divides `self`.
    pub fn exact_div(&self, d: &UniPoly) -> Result<Option<UniPoly>> {
        let (q, r) = self.div_rem(d)?;
        Ok(if r.is_zero() { Some(q) } else { None })
    }

    /// Integer coprime coefficients with positive leading coefficient.
    pub fn primitive(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let l = denominator_lcm(self.coeffs.iter());
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect();
        let mut g = integer_content(ints.iter());
        if ints.last().unwrap().is_negative() {
            g = -g;
        }
        Self::new(ints.into_iter().map(|c| Rational::from_integer(c / &g)).collect())
    }

    /// Positive rescaling to coprime integers (sign of every value is preserved).
    fn positive_primitive(&self) -> UniPoly {
        let p = self.primitive();
        if !self.is_zero() && self.lead().is_negative() {
            p.neg()
        } else {
            p
        }
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lead().recip())
    }

    /// Greatest common divisor, content-normalized.
    pub fn gcd(&self, o: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.primitive(), o.primitive());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.primitive();
        }
        a.primitive()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree().unwrap_or(0) == 0
    }

    /// Yun's square-free decomposition: `self = c * prod f_k^k` with pairwise coprime
    /// square-free `f_k`. Returns the nonconstant `(f_k, k)`.
    pub fn squarefree_decomposition(&self) -> Vec<(UniPoly, u32)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let d = self.derivative();
        let a0 = self.gcd(&d);
        let mut b = self.exact_div(&a0).unwrap().unwrap();
        let mut c = d.exact_div(&a0).unwrap().unwrap();
        let mut dd = c.sub(&b.derivative());
        let mut k = 1;
        loop {
            let a = b.gcd(&dd);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.primitive(), k));
            }
            b = b.exact_div(&a).unwrap().unwrap();
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            c = dd.exact_div(&a).unwrap().unwrap();
            dd = c.sub(&b.derivative());
            k += 1;
        }
        out
    }

    pub fn squarefree_part(&self) -> UniPoly {
        self.squarefree_decomposition()
            .into_iter()
            .fold(UniPoly::constant(Rational::one()), |acc, (f, _)| acc.mul(&f))
            .primitive()
    }

    /// Sturm sequence `p, p', -rem(...)...`, each term rescaled by a positive constant.
    pub fn sturm_sequence(&self) -> Vec<UniPoly> {
        let mut seq = vec![self.positive_primitive(), self.derivative().positive_primitive()];
        loop {
            let n = seq.len();
            if seq[n - 1].is_zero() {
                seq.pop();
                break;
            }
            let (_, r) = seq[n - 2].div_rem(&seq[n - 1]).unwrap();
            if r.is_zero() {
                break;
            }
            seq.push(r.neg().positive_primitive());
        }
        seq
    }

    /// Cauchy bound: every real root lies strictly inside `(-B, B)`.
    pub fn root_bound(&self) -> Rational {
        let lc = self.lead().abs();
        let m = self.coeffs[..self.coeffs.len() - 1].iter().map(|c| c.abs() / &lc).max().unwrap_or_else(Rational::zero);
        m + Rational::one()
    }

    /// Real roots with multiplicities, each in its own certified interval.
    pub fn isolate_real_roots(&self) -> Result<Vec<IsolatingInterval>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let factors = self.squarefree_decomposition();
        if factors.is_empty() {
            return Ok(Vec::new());
        }
        let sqf = factors.iter().fold(UniPoly::constant(Rational::one()), |acc, (f, _)| acc.mul(f));
        let sturm = Sturm::new(&sqf);
        let mut out = Vec::new();
        for (lo, hi, exact) in sturm.isolate() {
            let multiplicity = factors
                .iter()
                .find(|(f, _)| match &exact {
                    Some(r) => f.eval(r).is_zero(),
                    None => f.sign_at(&lo) * f.sign_at(&hi) < 0,
                })
                .map(|(_, k)| *k)
                .expect("root belongs to exactly one square-free factor");
            out.push(IsolatingInterval { lo, hi, multiplicity, exact });
        }
        Ok(out)
    }

    /// Distinct real roots counted in `(a, b]` (Sturm's theorem on the square-free part).
    pub fn count_roots_in(&self, a: &Rational, b: &Rational) -> usize {
        Sturm::new(&self.squarefree_part()).count(a, b)
    }

    /// All rational roots, with multiplicities, in increasing order.
    pub fn rational_roots(&self) -> Result<Vec<(Rational, u32)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut out = Vec::new();
        for (f, k) in self.squarefree_decomposition() {
            let l = f.primitive().lead().abs();
            let l2 = Rational::from_integer((l.numer() * l.numer()).clone());
            for iv in f.isolate_real_roots()? {
                if let Some(r) = iv.exact {
                    out.push((r, k));
                    continue;
                }
                let (mut lo, mut hi) = (iv.lo, iv.hi);
                let slo = f.sign_at(&lo);
                while (&hi - &lo) * &l2 >= Rational::one() {
                    let mid = (&lo + &hi) / rat(2);
                    let s = f.sign_at(&mid);
                    if s == 0 {
                        lo = mid.clone();
                        hi = mid;
                        break;
                    }
                    if s == slo {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                let cand = simplest_in(&lo, &hi);
                if f.eval(&cand).is_zero() {
                    out.push((cand, k));
                }
            }
        }
        out.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(out)
    }

    /// Does `self` vanish at the unique root of `owner` inside `iv`?
    pub fn vanishes_at_root(&self, owner: &UniPoly, iv: &IsolatingInterval) -> bool {
        if let Some(r) = &iv.exact {
            return self.eval(r).is_zero();
        }
        let g = self.gcd(&owner.squarefree_part());
        if g.degree().unwrap_or(0) == 0 {
            return false;
        }
        g.count_roots_in(&iv.lo, &iv.hi) > 0
    }
}

/// Open interval `(lo, hi)` holding exactly one distinct real root.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsolatingInterval {
    #[serde(with = "crate::arith::serde_rational")]
    pub lo: Rational,
    #[serde(with = "crate::arith::serde_rational")]
    pub hi: Rational,
    pub multiplicity: u32,
    /// The root itself, when the bisection landed on it exactly.
    #[serde(with = "crate::arith::serde_rational::option")]
    pub exact: Option<Rational>,
}

impl IsolatingInterval {
    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo < x && x < &self.hi
    }

    pub fn midpoint(&self) -> Rational {
        self.exact.clone().unwrap_or_else(|| (&self.lo + &self.hi) / rat(2))
    }
}

impl fmt::Display for IsolatingInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.exact {
            Some(r) => write!(f, "{} (x{})", format_rational(r), self.multiplicity),
            None => write!(f, "({}, {}) (x{})", format_rational(&self.lo), format_rational(&self.hi), self.multiplicity),
        }
    }
}

struct Sturm {
    poly: UniPoly,
    seq: Vec<UniPoly>,
}

impl Sturm {
    fn new(p: &UniPoly) -> Self {
        Sturm { poly: p.clone(), seq: p.sturm_sequence() }
    }

    fn variations(&self, x: &Rational) -> usize {
        let mut last = 0i8;
        let mut v = 0;
        for s in &self.seq {
            let sg = s.sign_at(x);
            if sg != 0 {
                if last != 0 && sg != last {
                    v += 1;
                }
                last = sg;
            }
        }
        v
    }

    fn count(&self, a: &Rational, b: &Rational) -> usize {
        self.variations(a).saturating_sub(self.variations(b))
    }

    /// Bisection on `(-B, B)`; returns `(lo, hi, exact_root)` sorted by position.
    fn isolate(&self) -> Vec<(Rational, Rational, Option<Rational>)> {
        if self.poly.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let b = self.poly.root_bound();
        let mut out = Vec::new();
        let mut stack = vec![(-b.clone(), b)];
        while let Some((lo, hi)) = stack.pop() {
            let n = self.count(&lo, &hi);
            if n == 0 {
                continue;
            }
            let mid = (&lo + &hi) / rat(2);
            if self.poly.eval(&mid).is_zero() {
                // Shrink a window around the exact root until it isolates it.
                let mut delta = (&hi - &lo) / rat(4);
                loop {
                    let (a, c) = (&mid - &delta, &mid + &delta);
                    if !self.poly.eval(&a).is_zero() && !self.poly.eval(&c).is_zero() && self.count(&a, &c) == 1 {
                        stack.push((lo.clone(), a.clone()));
                        stack.push((c.clone(), hi.clone()));
                        out.push((a, c, Some(mid.clone())));
                        break;
                    }
                    delta /= rat(2);
                }
                continue;
            }
            if n == 1 {
                out.push((lo, hi, None));
                continue;
            }
            stack.push((lo, mid.clone()));
            stack.push((mid, hi));
        }
        out.sort_by(|x, y| x.0.cmp(&y.0));
        out
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{}", format_rational(&a))?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{}*", format_rational(&a))?;
                    }
                    if i == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::ratio;

    fn from_roots(roots: &[(i64, i64)]) -> UniPoly {
        roots.iter().fold(UniPoly::constant(rat(1)), |acc, &(n, d)| acc.mul(&UniPoly::linear_root(&ratio(n, d))))
    }

    #[test]
    fn unit_roots() {
        let p = UniPoly::from_ints(&[-1, 0, 1]);
        let ivs = p.isolate_real_roots().unwrap();
        assert_eq!(ivs.len(), 2);
        assert!(ivs[0].contains(&rat(-1)) || ivs[0].exact == Some(rat(-1)));
        assert!(ivs[1].contains(&rat(1)) || ivs[1].exact == Some(rat(1)));
        assert!(ivs.iter().all(|iv| iv.multiplicity == 1));
    }

    #[test]
    fn no_real_roots() {
        assert!(UniPoly::from_ints(&[1, 0, 1]).isolate_real_roots().unwrap().is_empty());
        assert_eq!(UniPoly::zero().isolate_real_roots(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn squaring_doubles_multiplicity() {
        let p = from_roots(&[(1, 3), (-2, 1), (5, 7)]).mul(&UniPoly::from_ints(&[-2, 0, 1]));
        let sq = p.mul(&p);
        let a = p.isolate_real_roots().unwrap();
        let b = sq.isolate_real_roots().unwrap();
        assert_eq!(a.len(), 5);
        assert_eq!(b.len(), 5);
        for (x, y) in a.iter().zip(b.iter()) {
            assert_eq!(2 * x.multiplicity, y.multiplicity);
        }
    }

    #[test]
    fn intervals_are_disjoint_and_certified() {
        let p = UniPoly::from_ints(&[-2, 0, 1]).mul(&UniPoly::from_ints(&[-3, 0, 1])).mul(&UniPoly::from_ints(&[1, 1, 0, 1]));
        let ivs = p.isolate_real_roots().unwrap();
        assert_eq!(ivs.len(), 5);
        for w in ivs.windows(2) {
            assert!(w[0].hi <= w[1].lo);
        }
        for iv in &ivs {
            if iv.exact.is_none() {
                assert_eq!(p.count_roots_in(&iv.lo, &iv.hi), 1);
                assert!(p.sign_at(&iv.lo) * p.sign_at(&iv.hi) < 0);
            }
        }
    }

    #[test]
    fn rational_root_recovery() {
        let p = from_roots(&[(3, 7), (-11, 5), (3, 7)]).mul(&UniPoly::from_ints(&[-5, 0, 1])).scale(&ratio(13, 4));
        let rr = p.rational_roots().unwrap();
        assert_eq!(rr, vec![(ratio(-11, 5), 1), (ratio(3, 7), 2)]);
    }

    #[test]
    fn yun_decomposition() {
        let f1 = UniPoly::from_ints(&[1, 0, 1]);
        let f2 = UniPoly::from_ints(&[-2, 1]);
        let p = f1.mul(&f2).mul(&f2).mul(&f2);
        let d = p.squarefree_decomposition();
        assert_eq!(d, vec![(f1, 1), (f2, 3)]);
    }

    #[test]
    fn gcd_examples() {
        let a = from_roots(&[(1, 1), (2, 1), (3, 1)]);
        let b = from_roots(&[(2, 1), (3, 1), (4, 1)]);
        assert_eq!(a.gcd(&b), from_roots(&[(2, 1), (3, 1)]));
    }

    #[test]
    fn root_membership_irrational() {
        let p = UniPoly::from_ints(&[-2, 0, 1]);
        let ivs = p.isolate_real_roots().unwrap();
        let q = UniPoly::from_ints(&[-2, 0, 1]).mul(&UniPoly::from_ints(&[1, 1]));
        assert!(q.vanishes_at_root(&p, &ivs[0]));
        assert!(!UniPoly::from_ints(&[-3, 0, 1]).vanishes_at_root(&p, &ivs[1]));
    }
}
