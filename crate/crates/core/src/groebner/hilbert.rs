//! Hilbert series and polynomials of homogeneous ideals, read off the leading-term ideal.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::ideal::Ideal;
use super::order::MonomialOrder;
use crate::arith::{Monomial, MultiPoly, Rational, UniPoly, Vars};
use crate::error::{Error, Result};

/// Hilbert data of `S/I` for `S = ℚ[x0..x_{n-1}]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertPolynomial {
    /// Coefficients of `P(t)`, lowest degree first.
    #[serde(with = "crate::arith::serde_rational::vec")]
    pub coeffs: Vec<Rational>,
    /// Projective dimension of `V(I)`; `-1` when `V(I)` is empty.
    pub dimension: i64,
    /// Degree of `V(I)` (zero when empty).
    pub degree: u64,
    /// Numerator `Q(t)` of the reduced Hilbert series `Q(t)/(1-t)^(dimension+1)`, serialized as decimal strings.
    #[serde(with = "bigint_strings", default)]
    pub series_numerator: Vec<BigInt>,
    /// Largest degree of a minimal generator of the leading-term ideal.
    pub max_generator_degree: u32,
    pub nvars: usize,
}

impl HilbertPolynomial {
    pub fn as_unipoly(&self) -> UniPoly {
        UniPoly::new(self.coeffs.clone())
    }

    pub fn eval(&self, t: i64) -> Rational {
        self.as_unipoly().eval(&Rational::from_integer(BigInt::from(t)))
    }

    /// `P` as a polynomial in the variable `t`.
    pub fn to_poly(&self) -> MultiPoly {
        MultiPoly::from_univariate(&Vars::new(["t"]), 0, &self.as_unipoly())
    }

    /// Degree from which the Hilbert function is guaranteed to agree with `P`.
    pub fn regularity_bound(&self) -> u32 {
        self.max_generator_degree + self.nvars as u32
    }

    /// Arithmetic genus `(-1)^d (P(0) - 1)` of a `d`-dimensional scheme.
    pub fn arithmetic_genus(&self) -> Option<Rational> {
        if self.dimension < 0 {
            return None;
        }
        let p0 = self.coeffs.first().cloned().unwrap_or_else(Rational::zero);
        let g = p0 - Rational::one();
        Some(if self.dimension % 2 == 0 { g } else { -g })
    }
}

type Exps = Vec<u16>;

fn divides(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn minimalize(mut gens: Vec<Exps>) -> Vec<Exps> {
    gens.sort_by_key(|g| g.iter().map(|&e| e as u32).sum::<u32>());
    gens.dedup();
    let mut out: Vec<Exps> = Vec::new();
    for g in gens {
        if !out.iter().any(|h| divides(h, &g)) {
            out.push(g);
        }
    }
    out
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add_shifted(a: &mut Vec<BigInt>, b: &[BigInt], shift: usize, sign: i32) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, BigInt::zero());
    }
    for (i, y) in b.iter().enumerate() {
        if sign > 0 {
            a[i + shift] += y;
        } else {
            a[i + shift] -= y;
        }
    }
}

/// Numerator `N(t)` of the Hilbert series `N(t)/(1-t)^n` of `S/J` for a monomial ideal `J`,
/// by pivoting on a variable power: `N(J) = N(J + p) + t^deg(p) N(J : p)`.
pub fn series_numerator(gens: &[Exps], nvars: usize) -> Vec<BigInt> {
    let gens = minimalize(gens.to_vec());
    numerator_rec(gens, nvars)
}

fn numerator_rec(gens: Vec<Exps>, nvars: usize) -> Vec<BigInt> {
    if gens.is_empty() {
        return vec![BigInt::one()];
    }
    let deg = |g: &Exps| g.iter().map(|&e| e as usize).sum::<usize>();
    // Pairwise coprime generators: product of (1 - t^deg).
    let mut counts = vec![0usize; nvars];
    for g in &gens {
        for (i, &e) in g.iter().enumerate() {
            if e > 0 {
                counts[i] += 1;
            }
        }
    }
    if counts.iter().all(|&c| c <= 1) {
        let mut acc = vec![BigInt::one()];
        for g in &gens {
            let mut f = vec![BigInt::zero(); deg(g) + 1];
            f[0] = BigInt::one();
            f[deg(g)] -= BigInt::one();
            acc = poly_mul(&acc, &f);
        }
        return acc;
    }
    let var = (0..nvars).max_by_key(|&i| (counts[i], std::cmp::Reverse(i))).unwrap();
    let e = gens.iter().filter(|g| g[var] > 0).map(|g| g[var]).min().unwrap();
    // J + x^e: every generator involving `var` is divisible by x^e.
    let mut sum: Vec<Exps> = gens.iter().filter(|g| g[var] == 0).cloned().collect();
    let mut p = vec![0u16; nvars];
    p[var] = e;
    sum.push(p);
    // J : x^e
    let colon: Vec<Exps> = gens
        .iter()
        .map(|g| {
            let mut h = g.clone();
            h[var] = h[var].saturating_sub(e);
            h
        })
        .collect();
    let mut out = numerator_rec(minimalize(sum), nvars);
    let c = numerator_rec(minimalize(colon), nvars);
    poly_add_shifted(&mut out, &c, e as usize, 1);
    while out.len() > 1 && out.last().unwrap().is_zero() {
        out.pop();
    }
    out
}

/// Hilbert function `dim (S/J)_t` of a monomial ideal for `t = 0..=upto`, from the series.
pub fn hilbert_function_from_numerator(num: &[BigInt], nvars: usize, upto: usize) -> Vec<BigInt> {
    // 1/(1-t)^n has coefficients C(k+n-1, n-1).
    let binom = |k: usize| -> BigInt {
        if nvars == 0 {
            return if k == 0 { BigInt::one() } else { BigInt::zero() };
        }
        let mut r = BigInt::one();
        for j in 1..nvars {
            r = r * BigInt::from(k + j) / BigInt::from(j);
        }
        r
    };
    (0..=upto)
        .map(|t| {
            num.iter()
                .enumerate()
                .filter(|(i, _)| *i <= t)
                .map(|(i, c)| c * binom(t - i))
                .fold(BigInt::zero(), |a, b| a + b)
        })
        .collect()
}

/// Hilbert polynomial from a series numerator over `nvars` variables.
pub fn hilbert_from_numerator(num: &[BigInt], nvars: usize, max_generator_degree: u32) -> HilbertPolynomial {
    let mut q: Vec<BigInt> = num.to_vec();
    let mut d = nvars as i64;
    let is_zero = |q: &[BigInt]| q.iter().all(|c| c.is_zero());
    if is_zero(&q) {
        return HilbertPolynomial {
            coeffs: Vec::new(),
            dimension: -1,
            degree: 0,
            series_numerator: Vec::new(),
            max_generator_degree,
            nvars,
        };
    }
    // Strip factors (1 - t) while Q(1) = 0.
    while d > 0 && q.iter().fold(BigInt::zero(), |a, b| a + b).is_zero() {
        // synthetic division by (1 - t): q = (1 - t) r  =>  r_k = sum_{i<=k} q_i
        let mut r = Vec::with_capacity(q.len() - 1);
        let mut acc = BigInt::zero();
        for c in &q[..q.len() - 1] {
            acc += c;
            r.push(acc.clone());
        }
        q = r;
        d -= 1;
    }
    let krull = d;
    let degree = q.iter().fold(BigInt::zero(), |a, b| a + b);
    if krull == 0 {
        return HilbertPolynomial {
            coeffs: Vec::new(),
            dimension: -1,
            degree: 0,
            series_numerator: q,
            max_generator_degree,
            nvars,
        };
    }
    // P(s) = sum_k q_k C(s - k + krull - 1, krull - 1)
    let r = (krull - 1) as usize;
    let mut fact = BigInt::one();
    for j in 1..=r {
        fact *= BigInt::from(j);
    }
    let mut total = UniPoly::zero();
    for (k, qk) in q.iter().enumerate() {
        if qk.is_zero() {
            continue;
        }
        let mut term = UniPoly::constant(Rational::from_integer(qk.clone()));
        for j in 1..=r {
            // factor (s - k + j)
            let shift = Rational::from_integer(BigInt::from(j as i64 - k as i64));
            term = term.mul(&UniPoly::new(vec![shift, Rational::one()]));
        }
        total = total.add(&term);
    }
    let total = total.scale(&(Rational::one() / Rational::from_integer(fact)));
    HilbertPolynomial {
        coeffs: total.coeffs().to_vec(),
        dimension: krull - 1,
        degree: degree.abs().to_u64().unwrap_or(u64::MAX),
        series_numerator: q,
        max_generator_degree,
        nvars,
    }
}

/// Leading monomials of a grevlex basis (computed if needed).
pub fn leading_ideal(ideal: &Ideal) -> Result<Vec<Monomial>> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let gb = ideal.groebner(MonomialOrder::Grevlex)?;
    Ok(gb.leading_monomials().to_vec())
}

/// Hilbert polynomial of `S/I` for a homogeneous ideal `I`.
pub fn hilbert_polynomial(ideal: &Ideal) -> Result<HilbertPolynomial> {
    let lead = leading_ideal(ideal)?;
    let n = ideal.vars().len();
    let exps: Vec<Exps> = lead.iter().map(|m| m.exponents().to_vec()).collect();
    let maxdeg = lead.iter().map(|m| m.degree()).max().unwrap_or(0);
    let num = series_numerator(&exps, n);
    Ok(hilbert_from_numerator(&num, n, maxdeg))
}

/// Hilbert function of `S/I` in degrees `0..=upto`.
pub fn hilbert_function(ideal: &Ideal, upto: usize) -> Result<Vec<BigInt>> {
    let lead = leading_ideal(ideal)?;
    let n = ideal.vars().len();
    let exps: Vec<Exps> = lead.iter().map(|m| m.exponents().to_vec()).collect();
    Ok(hilbert_function_from_numerator(&series_numerator(&exps, n), n, upto))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::ratio;

    /// Counts degree-t monomials not divisible by any generator.
    fn brute_force(gens: &[Exps], n: usize, t: usize) -> usize {
        fn rec(i: usize, left: usize, cur: &mut Vec<u16>, gens: &[Exps], n: usize) -> usize {
            if i == n - 1 {
                cur[i] = left as u16;
                let ok = !gens.iter().any(|g| divides(g, cur));
                cur[i] = 0;
                return ok as usize;
            }
            let mut c = 0;
            for e in 0..=left {
                cur[i] = e as u16;
                c += rec(i + 1, left - e, cur, gens, n);
            }
            cur[i] = 0;
            c
        }
        rec(0, t, &mut vec![0; n], gens, n)
    }

    #[test]
    fn three_space_in_p5() {
        let v = Vars::projective(5);
        let hp = hilbert_polynomial(&Ideal::of_variables(&v, &[0, 1])).unwrap();
        assert_eq!(hp.dimension, 3);
        assert_eq!(hp.degree, 1);
        assert_eq!(hp.coeffs, vec![ratio(1, 1), ratio(11, 6), ratio(1, 1), ratio(1, 6)]);
    }

    #[test]
    fn staircase_matches_brute_force() {
        let gens: Vec<Exps> = vec![vec![2, 1, 0, 0], vec![0, 3, 1, 0], vec![1, 0, 0, 2], vec![0, 0, 2, 1], vec![1, 1, 1, 0]];
        let num = series_numerator(&gens, 4);
        let hf = hilbert_function_from_numerator(&num, 4, 8);
        for t in 0..=8 {
            assert_eq!(hf[t], BigInt::from(brute_force(&gens, 4, t)), "degree {t}");
        }
    }

    #[test]
    fn empty_and_points() {
        let v = Vars::projective(2);
        let unit = hilbert_polynomial(&Ideal::unit(&v)).unwrap();
        assert_eq!(unit.dimension, -1);
        let irrelevant = hilbert_polynomial(&Ideal::of_variables(&v, &[0, 1, 2])).unwrap();
        assert_eq!(irrelevant.dimension, -1);
        let point = hilbert_polynomial(&Ideal::of_variables(&v, &[0, 1])).unwrap();
        assert_eq!((point.dimension, point.degree), (0, 1));
    }
}

mod bigint_strings {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|x| x.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<String>::deserialize(d)?.iter().map(|x| x.parse().map_err(serde::de::Error::custom)).collect()
    }
}
