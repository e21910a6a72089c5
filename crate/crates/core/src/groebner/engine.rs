//! Integer-coefficient Buchberger engine.
//!
//! Polynomials are kept primitive over ℤ; reductions are fraction-free and the
//! scalar lost along the way is tracked when an exact normal form over ℚ is needed.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use super::order::MonomialOrder;
use crate::arith::{Monomial, MultiPoly, Rational, Vars};
use crate::error::{Error, Result};

pub(crate) const MAX_VARS: usize = 16;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub(crate) struct Mon {
    e: [u8; MAX_VARS],
    deg: u16,
    mask: u16,
}

impl Mon {
    fn from_monomial(m: &Monomial) -> Result<Mon> {
        let mut e = [0u8; MAX_VARS];
        let mut mask = 0u16;
        for (i, &x) in m.exponents().iter().enumerate() {
            if x > 200 {
                return Err(Error::Unsupported(format!("exponent {x} too large for the Gröbner engine")));
            }
            e[i] = x as u8;
            if x > 0 {
                mask |= 1 << i;
            }
        }
        Ok(Mon { e, deg: m.degree() as u16, mask })
    }

    fn to_monomial(self, n: usize) -> Monomial {
        let ex: Vec<u16> = self.e[..n].iter().map(|&x| x as u16).collect();
        Monomial::from_exponents(&ex)
    }

    #[inline]
    fn divides(&self, o: &Mon) -> bool {
        self.mask & !o.mask == 0 && self.deg <= o.deg && self.e.iter().zip(o.e.iter()).all(|(a, b)| a <= b)
    }

    #[inline]
    fn mul(&self, o: &Mon) -> Mon {
        let mut e = [0u8; MAX_VARS];
        for i in 0..MAX_VARS {
            let s = self.e[i] as u16 + o.e[i] as u16;
            assert!(s < 255, "exponent overflow in the Gröbner engine");
            e[i] = s as u8;
        }
        Mon { e, deg: self.deg + o.deg, mask: self.mask | o.mask }
    }

    /// `o / self`; caller guarantees divisibility.
    #[inline]
    fn quotient_of(&self, o: &Mon) -> Mon {
        let mut e = [0u8; MAX_VARS];
        let mut mask = 0u16;
        for i in 0..MAX_VARS {
            e[i] = o.e[i] - self.e[i];
            if e[i] > 0 {
                mask |= 1 << i;
            }
        }
        Mon { e, deg: o.deg - self.deg, mask }
    }

    fn lcm(&self, o: &Mon) -> Mon {
        let mut e = [0u8; MAX_VARS];
        let mut deg = 0u16;
        for i in 0..MAX_VARS {
            e[i] = self.e[i].max(o.e[i]);
            deg += e[i] as u16;
        }
        Mon { e, deg, mask: self.mask | o.mask }
    }

    fn coprime(&self, o: &Mon) -> bool {
        self.mask & o.mask == 0
    }
}

#[inline]
fn grevlex(a: &[u8], b: &[u8]) -> Ordering {
    let da: u32 = a.iter().map(|&x| x as u32).sum();
    let db: u32 = b.iter().map(|&x| x as u32).sum();
    if da != db {
        return da.cmp(&db);
    }
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

#[derive(Clone, Copy)]
pub(crate) struct Ord_ {
    order: MonomialOrder,
}

impl Ord_ {
    #[inline]
    pub(crate) fn cmp(&self, a: &Mon, b: &Mon) -> Ordering {
        match self.order {
            MonomialOrder::Grevlex => {
                if a.deg != b.deg {
                    return a.deg.cmp(&b.deg);
                }
                for i in (0..MAX_VARS).rev() {
                    if a.e[i] != b.e[i] {
                        return b.e[i].cmp(&a.e[i]);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Lex => a.e.cmp(&b.e),
            MonomialOrder::Block(k) => {
                let k = k.min(MAX_VARS);
                grevlex(&a.e[..k], &b.e[..k]).then_with(|| grevlex(&a.e[k..], &b.e[k..]))
            }
        }
    }
}

/// Polynomial with integer coefficients, terms sorted descending in the engine order.
#[derive(Clone, Debug)]
pub(crate) struct IPoly {
    pub(crate) terms: Vec<(Mon, BigInt)>,
    sugar: u32,
}

impl IPoly {
    fn lt(&self) -> &Mon {
        &self.terms[0].0
    }

    fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn leading_monomial(&self) -> Option<&Mon> {
        self.terms.first().map(|t| &t.0)
    }
}

fn content(terms: &[(Mon, BigInt)]) -> BigInt {
    let mut g = BigInt::zero();
    for (_, c) in terms {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Divides by the content and makes the leading coefficient positive; returns the divisor used.
fn make_primitive(terms: &mut [(Mon, BigInt)]) -> BigInt {
    if terms.is_empty() {
        return BigInt::one();
    }
    let mut g = content(terms);
    if terms[0].1.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for (_, c) in terms.iter_mut() {
            *c = &*c / &g;
        }
    }
    g
}

pub(crate) struct Engine {
    pub(crate) nvars: usize,
    ord: Ord_,
}

/// Outcome of a Buchberger run: the reduced basis and some bookkeeping.
pub(crate) struct GbOutput {
    pub(crate) basis: Vec<IPoly>,
    pub(crate) pairs_processed: usize,
    pub(crate) pairs_skipped: usize,
}

#[derive(Clone, Copy)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Mon,
    sugar: u32,
}

impl Engine {
    pub(crate) fn new(nvars: usize, order: MonomialOrder) -> Result<Self> {
        if nvars > MAX_VARS {
            return Err(Error::Unsupported(format!("at most {MAX_VARS} variables in Gröbner computations")));
        }
        Ok(Engine { nvars, ord: Ord_ { order } })
    }

    pub(crate) fn import(&self, p: &MultiPoly) -> Result<IPoly> {
        Ok(self.import_with_factor(p)?.0)
    }

    /// Returns `(q, k)` with `p = k·q` and `q` primitive over ℤ.
    pub(crate) fn import_with_factor(&self, p: &MultiPoly) -> Result<(IPoly, Rational)> {
        let den = crate::arith::rational::denominator_lcm(p.terms().iter().map(|(_, c)| c));
        let mut terms = p
            .terms()
            .iter()
            .map(|(m, c)| Ok((Mon::from_monomial(m)?, (c * Rational::from_integer(den.clone())).to_integer())))
            .collect::<Result<Vec<_>>>()?;
        terms.sort_by(|a, b| self.ord.cmp(&b.0, &a.0));
        let g = make_primitive(&mut terms);
        let sugar = p.total_degree().unwrap_or(0);
        Ok((IPoly { terms, sugar }, Rational::new(g, den)))
    }

    /// Exports with the leading coefficient scaled to one.
    pub(crate) fn export_monic(&self, p: &IPoly, vars: &Vars) -> MultiPoly {
        if p.is_zero() {
            return MultiPoly::zero(vars);
        }
        let lc = Rational::from_integer(p.lc().clone());
        MultiPoly::from_terms(
            vars,
            p.terms.iter().map(|(m, c)| (m.to_monomial(self.nvars), Rational::from_integer(c.clone()) / &lc)),
        )
    }

    pub(crate) fn export_scaled(&self, terms: &[(Mon, BigInt)], scale: &Rational, vars: &Vars) -> MultiPoly {
        MultiPoly::from_terms(
            vars,
            terms.iter().map(|(m, c)| (m.to_monomial(self.nvars), Rational::from_integer(c.clone()) / scale)),
        )
    }

    pub(crate) fn mon_to_monomial(&self, m: &Mon) -> Monomial {
        m.to_monomial(self.nvars)
    }

    /// `a*f - b*m*g` where the leading terms are known to cancel when `skip_lead` is set.
    fn combine(&self, a: &BigInt, f: &[(Mon, BigInt)], b: &BigInt, m: &Mon, g: &[(Mon, BigInt)], skip_lead: bool) -> Vec<(Mon, BigInt)> {
        let (f, g) = if skip_lead { (&f[1..], &g[1..]) } else { (f, g) };
        let mut out = Vec::with_capacity(f.len() + g.len());
        let (mut i, mut j) = (0, 0);
        let a_one = a.is_one();
        while i < f.len() || j < g.len() {
            let gm = if j < g.len() { Some(m.mul(&g[j].0)) } else { None };
            let ord = match (&gm, i < f.len()) {
                (Some(gm), true) => self.ord.cmp(&f[i].0, gm),
                (None, true) => Ordering::Greater,
                (Some(_), false) => Ordering::Less,
                (None, false) => unreachable!(),
            };
            match ord {
                Ordering::Greater => {
                    let c = if a_one { f[i].1.clone() } else { a * &f[i].1 };
                    out.push((f[i].0, c));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((gm.unwrap(), -(b * &g[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if a_one { f[i].1.clone() } else { a * &f[i].1 } - b * &g[j].1;
                    if !c.is_zero() {
                        out.push((f[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    fn find_reducer<'a>(&self, m: &Mon, basis: &[&'a IPoly]) -> Option<&'a IPoly> {
        basis.iter().find(|g| g.lt().divides(m)).copied()
    }

    /// Full fraction-free reduction. Returns `(r, s)` with `f ≡ r / s` modulo the basis,
    /// `r` fully reduced and primitive up to the tracked scale `s`.
    pub(crate) fn reduce(&self, f: &[(Mon, BigInt)], basis: &[&IPoly], track: bool) -> (Vec<(Mon, BigInt)>, Rational) {
        let mut todo: Vec<(Mon, BigInt)> = f.to_vec();
        let mut rem: Vec<(Mon, BigInt)> = Vec::new();
        let mut scale = Rational::one();
        let mut steps = 0usize;
        // `todo` is consumed from the front; keep an offset instead of shifting.
        let mut start = 0usize;
        while start < todo.len() {
            let m = todo[start].0;
            match self.find_reducer(&m, basis) {
                None => {
                    let t = std::mem::replace(&mut todo[start].1, BigInt::zero());
                    rem.push((m, t));
                    start += 1;
                }
                Some(g) => {
                    let c = &todo[start].1;
                    let d = c.gcd(g.lc());
                    let mut a = g.lc() / &d;
                    let mut b = c / &d;
                    if a.is_negative() {
                        a = -a;
                        b = -b;
                    }
                    let q = g.lt().quotient_of(&m);
                    todo = self.combine(&a, &todo[start..], &b, &q, &g.terms, true);
                    start = 0;
                    if !a.is_one() {
                        for (_, c) in rem.iter_mut() {
                            *c *= &a;
                        }
                        if track {
                            scale *= Rational::from_integer(a);
                        }
                    }
                    steps += 1;
                    if steps % 8 == 0 {
                        let mut gg = content(&todo[start..]);
                        if !gg.is_one() {
                            for (_, c) in rem.iter() {
                                gg = gg.gcd(c);
                                if gg.is_one() {
                                    break;
                                }
                            }
                        }
                        if !gg.is_one() && !gg.is_zero() {
                            for (_, c) in todo.iter_mut().chain(rem.iter_mut()) {
                                *c = &*c / &gg;
                            }
                            if track {
                                scale /= Rational::from_integer(gg);
                            }
                        }
                    }
                }
            }
        }
        if !rem.is_empty() {
            let g = content(&rem);
            if !g.is_one() {
                for (_, c) in rem.iter_mut() {
                    *c = &*c / &g;
                }
                if track {
                    scale /= Rational::from_integer(g);
                }
            }
        }
        (rem, scale)
    }

    fn spoly(&self, f: &IPoly, g: &IPoly, lcm: &Mon) -> Vec<(Mon, BigInt)> {
        let mf = f.lt().quotient_of(lcm);
        let mg = g.lt().quotient_of(lcm);
        let d = f.lc().gcd(g.lc());
        let a = g.lc() / &d;
        let b = f.lc() / &d;
        let fm: Vec<(Mon, BigInt)> = f.terms.iter().map(|(m, c)| (mf.mul(m), c.clone())).collect();
        self.combine(&a, &fm, &b, &mg, &g.terms, true)
    }

    fn pair_key(&self, p: &Pair) -> (u16, u32) {
        (p.lcm.deg, p.sugar)
    }

    /// Gebauer–Möller update after appending `polys[h]`.
    fn update(&self, polys: &[IPoly], active: &mut [bool], pairs: &mut Vec<Pair>, h: usize, skipped: &mut usize) {
        let lh = *polys[h].lt();
        let mut cands: Vec<Pair> = (0..h)
            .filter(|&g| active[g])
            .map(|g| {
                let lcm = lh.lcm(polys[g].lt());
                let sugar = (polys[h].sugar + lcm.deg as u32 - lh.deg as u32)
                    .max(polys[g].sugar + lcm.deg as u32 - polys[g].lt().deg as u32);
                Pair { i: g, j: h, lcm, sugar }
            })
            .collect();
        cands.sort_by(|a, b| self.ord.cmp(&a.lcm, &b.lcm).then(a.i.cmp(&b.i)));
        let n0 = cands.len();
        // Chain criterion among the new pairs; coprime pairs survive this step.
        let mut kept: Vec<Pair> = Vec::new();
        for (idx, p) in cands.iter().enumerate() {
            let g = p.i;
            if lh.coprime(polys[g].lt()) {
                kept.push(*p);
                continue;
            }
            let dominated = cands[idx + 1..].iter().any(|q| q.lcm.divides(&p.lcm))
                || kept.iter().any(|q| q.lcm.divides(&p.lcm));
            if !dominated {
                kept.push(*p);
            }
        }
        // Product criterion: coprime pairs only served to discard others above.
        let new_pairs: Vec<Pair> = kept.into_iter().filter(|p| !lh.coprime(polys[p.i].lt())).collect();
        *skipped += n0 - new_pairs.len();
        let before = pairs.len();
        pairs.retain(|p| {
            !(lh.divides(&p.lcm)
                && lh.lcm(polys[p.i].lt()) != p.lcm
                && lh.lcm(polys[p.j].lt()) != p.lcm)
        });
        *skipped += before - pairs.len();
        pairs.extend(new_pairs);
        for g in 0..h {
            if active[g] && lh.divides(polys[g].lt()) {
                active[g] = false;
            }
        }
        active[h] = true;
    }

    /// Buchberger's algorithm with the normal selection strategy, sugar tie-break,
    /// and both criteria. Pairs of the same minimal degree are reduced in parallel.
    pub(crate) fn buchberger(&self, input: Vec<IPoly>) -> GbOutput {
        let mut polys: Vec<IPoly> = Vec::new();
        let mut active: Vec<bool> = Vec::new();
        let mut pairs: Vec<Pair> = Vec::new();
        let mut skipped = 0usize;
        let mut processed = 0usize;

        let mut input: Vec<IPoly> = input.into_iter().filter(|p| !p.is_zero()).collect();
        input.sort_by(|a, b| self.ord.cmp(a.lt(), b.lt()));
        for f in input {
            let basis: Vec<&IPoly> = polys.iter().zip(&active).filter(|(_, a)| **a).map(|(p, _)| p).collect();
            let (r, _) = self.reduce(&f.terms, &basis, false);
            if r.is_empty() {
                continue;
            }
            polys.push(IPoly { terms: r, sugar: f.sugar });
            active.push(false);
            let h = polys.len() - 1;
            self.update(&polys, &mut active, &mut pairs, h, &mut skipped);
        }

        while !pairs.is_empty() {
            let key = pairs.iter().map(|p| self.pair_key(p)).min().unwrap();
            let (mut batch, rest): (Vec<Pair>, Vec<Pair>) = pairs.drain(..).partition(|p| self.pair_key(p) == key);
            pairs = rest;
            batch.sort_by(|a, b| self.ord.cmp(&a.lcm, &b.lcm).then(a.i.cmp(&b.i)).then(a.j.cmp(&b.j)));
            processed += batch.len();
            let basis: Vec<&IPoly> = polys.iter().zip(&active).filter(|(_, a)| **a).map(|(p, _)| p).collect();
            let reduced: Vec<(Vec<(Mon, BigInt)>, u32)> = batch
                .par_iter()
                .map(|p| {
                    let s = self.spoly(&polys[p.i], &polys[p.j], &p.lcm);
                    (self.reduce(&s, &basis, false).0, p.sugar)
                })
                .collect();
            drop(basis);
            for (r, sugar) in reduced {
                if r.is_empty() {
                    continue;
                }
                let basis: Vec<&IPoly> = polys.iter().zip(&active).filter(|(_, a)| **a).map(|(p, _)| p).collect();
                let (r, _) = self.reduce(&r, &basis, false);
                if r.is_empty() {
                    continue;
                }
                polys.push(IPoly { terms: r, sugar });
                active.push(false);
                let h = polys.len() - 1;
                self.update(&polys, &mut active, &mut pairs, h, &mut skipped);
            }
        }

        let mut minimal: Vec<IPoly> = polys.into_iter().zip(active).filter(|(_, a)| *a).map(|(p, _)| p).collect();
        minimal.sort_by(|a, b| self.ord.cmp(a.lt(), b.lt()));
        let basis = self.interreduce(minimal);
        GbOutput { basis, pairs_processed: processed, pairs_skipped: skipped }
    }

    /// Reduces every tail against the other elements of a minimal basis.
    fn interreduce(&self, minimal: Vec<IPoly>) -> Vec<IPoly> {
        let out: Vec<IPoly> = (0..minimal.len())
            .into_par_iter()
            .map(|k| {
                let others: Vec<&IPoly> = minimal.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, p)| p).collect();
                let p = &minimal[k];
                // tail ≡ tail_red / s, so p is proportional to s*lead + tail_red.
                let (tail_red, s) = self.reduce(&p.terms[1..], &others, true);
                let num = s.numer().clone();
                let den = s.denom().clone();
                let mut terms = vec![(p.terms[0].0, &p.terms[0].1 * &num)];
                terms.extend(tail_red.into_iter().map(|(m, c)| (m, c * &den)));
                make_primitive(&mut terms);
                IPoly { terms, sugar: p.sugar }
            })
            .collect();
        out
    }

    /// True when every S-pair of `basis` reduces to zero (pairs with coprime
    /// leading monomials are skipped by the product criterion).
    pub(crate) fn is_groebner(&self, basis: &[IPoly]) -> bool {
        let refs: Vec<&IPoly> = basis.iter().collect();
        let pairs: Vec<(usize, usize)> = (0..basis.len())
            .flat_map(|j| (0..j).map(move |i| (i, j)))
            .filter(|&(i, j)| !basis[i].lt().coprime(basis[j].lt()))
            .collect();
        pairs.par_iter().all(|&(i, j)| {
            let lcm = basis[i].lt().lcm(basis[j].lt());
            let s = self.spoly(&basis[i], &basis[j], &lcm);
            self.reduce(&s, &refs, false).0.is_empty()
        })
    }
}
