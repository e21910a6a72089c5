use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::engine::{Engine, IPoly};
use super::order::MonomialOrder;
use crate::arith::{Monomial, MultiPoly, Rational, Vars};
use crate::error::{Error, Result};

/// Reduced Gröbner basis together with the engine-side copy used for reductions.
#[derive(Clone)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    polys: Vec<MultiPoly>,
    leading: Vec<Monomial>,
    internal: Arc<Vec<IPoly>>,
    pairs_processed: usize,
    pairs_skipped: usize,
}

impl GroebnerBasis {
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// Monic basis elements, sorted by increasing leading monomial.
    pub fn polys(&self) -> &[MultiPoly] {
        &self.polys
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leading
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// S-pairs reduced / discarded by the criteria during construction.
    pub fn pair_counts(&self) -> (usize, usize) {
        (self.pairs_processed, self.pairs_skipped)
    }
}

impl fmt::Debug for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroebnerBasis").field("order", &self.order).field("polys", &self.polys).finish()
    }
}

/// Ideal of a polynomial ring over ℚ, optionally carrying a certified Gröbner basis.
#[derive(Clone)]
pub struct Ideal {
    vars: Vars,
    generators: Vec<MultiPoly>,
    basis: Option<GroebnerBasis>,
    homogeneous: bool,
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(vars: &Vars, generators: Vec<MultiPoly>) -> Result<Ideal> {
        for g in &generators {
            if g.vars() != vars {
                return Err(Error::VariableMismatch(format!("{:?}", g.vars()), format!("{vars:?}")));
            }
        }
        let generators: Vec<MultiPoly> = generators.into_iter().filter(|g| !g.is_zero()).collect();
        let homogeneous = generators.iter().all(|g| g.is_homogeneous());
        Ok(Ideal { vars: vars.clone(), generators, basis: None, homogeneous })
    }

    pub fn unit(vars: &Vars) -> Ideal {
        Ideal::new(vars, vec![MultiPoly::one(vars)]).unwrap()
    }

    pub fn zero(vars: &Vars) -> Ideal {
        Ideal::new(vars, Vec::new()).unwrap()
    }

    /// Ideal generated by variables `idx`.
    pub fn of_variables(vars: &Vars, idx: &[usize]) -> Ideal {
        Ideal::new(vars, idx.iter().map(|&i| MultiPoly::var(vars, i)).collect()).unwrap()
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn generators(&self) -> &[MultiPoly] {
        &self.generators
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    pub fn basis(&self) -> Option<&GroebnerBasis> {
        self.basis.as_ref()
    }

    fn check_ring(&self, other: &Vars) -> Result<()> {
        if &self.vars != other {
            return Err(Error::VariableMismatch(format!("{:?}", self.vars), format!("{other:?}")));
        }
        Ok(())
    }

    /// Returns an ideal carrying a basis for `order`, computing it if necessary.
    pub fn with_basis(&self, order: MonomialOrder) -> Result<Ideal> {
        match &self.basis {
            Some(b) if b.order == order => Ok(self.clone()),
            _ => buchberger(self, order),
        }
    }

    /// Basis for `order`, computed if not cached.
    pub fn groebner(&self, order: MonomialOrder) -> Result<GroebnerBasis> {
        match &self.basis {
            Some(b) if b.order == order => Ok(b.clone()),
            _ => Ok(buchberger(self, order)?.basis.unwrap()),
        }
    }

    fn any_basis(&self) -> Result<GroebnerBasis> {
        match &self.basis {
            Some(b) => Ok(b.clone()),
            None => self.groebner(MonomialOrder::Grevlex),
        }
    }

    pub fn contains(&self, f: &MultiPoly) -> Result<bool> {
        self.check_ring(f.vars())?;
        let b = self.any_basis()?;
        Ok(reduce_with(&b, f, &self.vars)?.is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        self.check_ring(&other.vars)?;
        let b = self.any_basis()?;
        for g in &other.generators {
            if !reduce_with(&b, g, &self.vars)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn same_ideal(&self, other: &Ideal) -> Result<bool> {
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.any_basis()?.polys.iter().any(|p| p.is_constant()))
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(&other.vars)?;
        Ideal::new(&self.vars, self.generators.iter().chain(&other.generators).cloned().collect())
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(&other.vars)?;
        let gens = self.generators.iter().flat_map(|a| other.generators.iter().map(move |b| a * b)).collect();
        Ideal::new(&self.vars, gens)
    }

    /// Generators of a reduced basis if one is cached, else the original generators.
    pub fn best_generators(&self) -> &[MultiPoly] {
        match &self.basis {
            Some(b) => &b.polys,
            None => &self.generators,
        }
    }

    /// Applies a substitution `x_i ↦ images[i]` to every generator.
    pub fn map(&self, images: &[MultiPoly]) -> Result<Ideal> {
        let target = images.first().map(|p| p.vars().clone()).ok_or_else(|| Error::Dimension("empty substitution".into()))?;
        Ideal::new(&target, self.generators.iter().map(|g| g.substitute(images)).collect())
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

fn reduce_with(b: &GroebnerBasis, f: &MultiPoly, vars: &Vars) -> Result<MultiPoly> {
    let eng = Engine::new(vars.len(), b.order)?;
    if f.is_zero() {
        return Ok(f.clone());
    }
    let (fi, k) = eng.import_with_factor(f)?;
    let refs: Vec<&IPoly> = b.internal.iter().collect();
    let (r, s) = eng.reduce(&fi.terms, &refs, true);
    Ok(eng.export_scaled(&r, &(s / k), vars))
}

/// Computes the reduced Gröbner basis and certifies it: all S-pairs reduce to zero
/// and every generator reduces to zero.
pub fn buchberger(ideal: &Ideal, order: MonomialOrder) -> Result<Ideal> {
    let eng = Engine::new(ideal.vars.len(), order)?;
    let input = ideal.generators.iter().map(|g| eng.import(g)).collect::<Result<Vec<_>>>()?;
    let out = eng.buchberger(input.clone());
    let refs: Vec<&IPoly> = out.basis.iter().collect();
    if !eng.is_groebner(&out.basis) {
        return Err(Error::Contract("basis failed the S-pair certificate".into()));
    }
    for f in &input {
        if !eng.reduce(&f.terms, &refs, false).0.is_empty() {
            return Err(Error::Contract("generator does not reduce to zero modulo its basis".into()));
        }
    }
    let polys: Vec<MultiPoly> = out.basis.iter().map(|p| eng.export_monic(p, &ideal.vars)).collect();
    let leading = out.basis.iter().map(|p| eng.mon_to_monomial(p.leading_monomial().unwrap())).collect();
    let basis = GroebnerBasis {
        order,
        polys,
        leading,
        internal: Arc::new(out.basis),
        pairs_processed: out.pairs_processed,
        pairs_skipped: out.pairs_skipped,
    };
    Ok(Ideal { basis: Some(basis), ..ideal.clone() })
}

/// Unique remainder of `f` modulo the cached basis; zero iff `f` lies in the ideal.
pub fn normal_form(f: &MultiPoly, ideal: &Ideal) -> Result<MultiPoly> {
    ideal.check_ring(f.vars())?;
    let b = ideal.basis.as_ref().ok_or(Error::MissingBasis)?;
    reduce_with(b, f, &ideal.vars)
}

/// Leading monomial of `f` under `order`.
pub fn leading_monomial(f: &MultiPoly, order: MonomialOrder) -> Option<Monomial> {
    f.terms().iter().map(|(m, _)| m).max_by(|a, b| order.cmp(a, b)).cloned()
}

/// `I ∩ k[vars not eliminated]`, returned in the smaller ring.
pub fn eliminate(ideal: &Ideal, elim: &[usize]) -> Result<Ideal> {
    if elim.is_empty() {
        return Ok(ideal.clone());
    }
    let n = ideal.vars.len();
    let keep: Vec<usize> = (0..n).filter(|i| !elim.contains(i)).collect();
    let mut sorted_elim: Vec<usize> = elim.to_vec();
    sorted_elim.sort_unstable();
    sorted_elim.dedup();
    let perm: Vec<usize> = sorted_elim.iter().chain(keep.iter()).copied().collect();
    let names: Vec<String> = perm.iter().map(|&i| ideal.vars.name(i).to_string()).collect();
    let work = Vars::new(names);
    let inv: Vec<Option<usize>> = perm.iter().map(|&i| Some(i)).collect();
    let gens: Vec<MultiPoly> = ideal
        .generators
        .iter()
        .map(|g| MultiPoly::from_terms(&work, g.terms().iter().map(|(m, c)| (m.remap(&inv), c.clone()))))
        .collect();
    let k = sorted_elim.len();
    let gb = Ideal::new(&work, gens)?.groebner(MonomialOrder::Block(k))?;
    let target = ideal.vars.without(&sorted_elim);
    let back: Vec<Option<usize>> = (k..n).map(Some).collect();
    let out: Vec<MultiPoly> = gb
        .polys
        .iter()
        .filter(|p| p.terms().iter().all(|(m, _)| m.exponents()[..k].iter().all(|&e| e == 0)))
        .map(|p| MultiPoly::from_terms(&target, p.terms().iter().map(|(m, c)| (m.remap(&back), c.clone()))))
        .collect();
    Ideal::new(&target, out)
}

/// `I ∩ J` via `t·I + (1−t)·J` and elimination of `t`.
pub fn intersect(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    a.check_ring(&b.vars)?;
    if a.is_zero() || b.is_zero() {
        return Ideal::new(&a.vars, Vec::new());
    }
    let t_name = fresh_name(&a.vars);
    let ext = a.vars.prepend(&[t_name.as_str()]);
    let t = MultiPoly::var(&ext, 0);
    let one_minus_t = &MultiPoly::one(&ext) - &t;
    let mut gens = Vec::new();
    for g in a.best_generators() {
        gens.push(&t * &g.rename_into(&ext)?);
    }
    for g in b.best_generators() {
        gens.push(&one_minus_t * &g.rename_into(&ext)?);
    }
    let elim = eliminate(&Ideal::new(&ext, gens)?, &[0])?;
    let gens = elim.generators.iter().map(|g| g.rename_into(&a.vars)).collect::<Result<Vec<_>>>()?;
    Ideal::new(&a.vars, gens)
}

fn fresh_name(vars: &Vars) -> String {
    let mut name = "t_".to_string();
    while vars.index_of(&name).is_some() {
        name.push('_');
    }
    name
}

/// `I : g` for a single polynomial.
fn quotient_by_poly(ideal: &Ideal, g: &MultiPoly) -> Result<Ideal> {
    if let Some(fast) = linear_quotient(ideal, g, false)? {
        return Ok(fast);
    }
    let principal = Ideal::new(&ideal.vars, vec![g.clone()])?;
    let inter = intersect(ideal, &principal)?;
    let mut gens = Vec::new();
    for h in &inter.generators {
        match h.exact_divide(g)? {
            Some(q) => gens.push(q),
            None => return Err(Error::Contract("intersection element not divisible by the divisor".into())),
        }
    }
    Ideal::new(&ideal.vars, gens)
}

/// For homogeneous `I` and a linear form `g`, move `g` to the last variable, where
/// a grevlex basis of `I` divided by powers of that variable generates `I : g` (or `I : g^∞`).
fn linear_quotient(ideal: &Ideal, g: &MultiPoly, saturate: bool) -> Result<Option<Ideal>> {
    if !ideal.homogeneous || !g.is_homogeneous() || g.total_degree() != Some(1) {
        return Ok(None);
    }
    let n = ideal.vars.len();
    let c = g.linear_coefficients();
    let p = (0..n).rev().find(|&i| !c[i].is_zero()).unwrap();
    let last = n - 1;
    let sigma = |i: usize| if i == p { last } else if i == last { p } else { i };
    let vars = &ideal.vars;
    // forward: x_i ↦ y_σ(i) (i ≠ p), x_p ↦ (y_last − Σ_{i≠p} c_i y_σ(i)) / c_p
    let mut fwd: Vec<MultiPoly> = (0..n).map(|i| MultiPoly::var(vars, sigma(i))).collect();
    let mut xp = MultiPoly::var(vars, last);
    for i in 0..n {
        if i != p && !c[i].is_zero() {
            xp = &xp - &MultiPoly::var(vars, sigma(i)).scale(&c[i]);
        }
    }
    fwd[p] = xp.scale(&(Rational::one() / &c[p]));
    // backward: y_last ↦ g(x), y_j ↦ x_σ(j) otherwise
    let bwd: Vec<MultiPoly> = (0..n).map(|j| if j == last { g.clone() } else { MultiPoly::var(vars, sigma(j)) }).collect();
    let moved = ideal.map(&fwd)?;
    let gb = moved.groebner(MonomialOrder::Grevlex)?;
    let mut gens = Vec::new();
    for h in &gb.polys {
        let k = h.terms().iter().map(|(m, _)| m.exponent(last)).min().unwrap_or(0);
        let k = if saturate { k } else { k.min(1) };
        let q = if k == 0 {
            h.clone()
        } else {
            MultiPoly::from_terms(vars, h.terms().iter().map(|(m, c)| (m.with_exponent(last, m.exponent(last) - k), c.clone())))
        };
        gens.push(q.substitute(&bwd));
    }
    Ok(Some(Ideal::new(vars, gens)?))
}

/// `I : J = {f : fJ ⊆ I}`; both containments are checked before returning.
pub fn ideal_quotient(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    i.check_ring(&j.vars)?;
    let mut acc: Option<Ideal> = None;
    for g in j.best_generators() {
        let q = quotient_by_poly(i, g)?;
        acc = Some(match acc {
            None => q,
            Some(a) => intersect(&a, &q)?,
        });
    }
    let q = match acc {
        None => Ideal::unit(&i.vars),
        Some(q) => q.with_basis(MonomialOrder::Grevlex)?,
    };
    check_quotient_contract(i, j, &q)?;
    Ok(q)
}

fn check_quotient_contract(i: &Ideal, j: &Ideal, q: &Ideal) -> Result<()> {
    if !q.contains_ideal(i)? {
        return Err(Error::Contract("I ⊄ (I : J)".into()));
    }
    let ib = i.with_basis(MonomialOrder::Grevlex)?;
    for a in q.best_generators() {
        for b in j.best_generators() {
            if !normal_form(&(a * b), &ib)?.is_zero() {
                return Err(Error::Contract("(I : J)·J ⊄ I".into()));
            }
        }
    }
    Ok(())
}

pub const SATURATION_CAP: usize = 20;

/// `I : J^∞`, iterating quotients until two successive ones agree.
pub fn saturate(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    i.check_ring(&j.vars)?;
    // Principal linear saturator: one Gröbner basis suffices.
    if j.generators.len() == 1 {
        if let Some(s) = linear_quotient(i, &j.generators[0], true)? {
            let s = s.with_basis(MonomialOrder::Grevlex)?;
            if !s.contains_ideal(i)? {
                return Err(Error::Contract("I ⊄ (I : J^∞)".into()));
            }
            return Ok(s);
        }
    }
    let mut cur = i.with_basis(MonomialOrder::Grevlex)?;
    for _ in 0..SATURATION_CAP {
        let next = ideal_quotient(&cur, j)?;
        if next.contains_ideal(&cur)? && cur.contains_ideal(&next)? {
            return Ok(next);
        }
        cur = next;
    }
    Err(Error::SaturationCap(SATURATION_CAP))
}

/// Greatest common divisor of polynomials, as `f·g / lcm(f, g)` with the lcm read off
/// the principal ideal `⟨f⟩ ∩ ⟨g⟩`. Zero inputs are skipped; the result is monic.
pub fn poly_gcd(polys: &[MultiPoly]) -> Result<MultiPoly> {
    let nonzero: Vec<&MultiPoly> = polys.iter().filter(|p| !p.is_zero()).collect();
    let Some(first) = nonzero.first() else {
        return Err(Error::AllZero);
    };
    let vars = first.vars().clone();
    let mut g = first.monic();
    for f in &nonzero[1..] {
        if g.is_constant() {
            break;
        }
        if f.exact_divide(&g)?.is_some() {
            continue;
        }
        let a = Ideal::new(&vars, vec![g.clone()])?;
        let b = Ideal::new(&vars, vec![(*f).clone()])?;
        let inter = intersect(&a, &b)?.groebner(MonomialOrder::Grevlex)?;
        if inter.polys().len() != 1 {
            return Err(Error::Contract("intersection of principal ideals is not principal".into()));
        }
        let lcm = &inter.polys()[0];
        let prod = &g * *f;
        g = prod
            .exact_divide(lcm)?
            .ok_or_else(|| Error::Contract("lcm does not divide the product".into()))?
            .monic();
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse_poly;

    fn ideal(vars: &Vars, gens: &[&str]) -> Ideal {
        Ideal::new(vars, gens.iter().map(|g| parse_poly(g, vars).unwrap()).collect()).unwrap()
    }

    #[test]
    fn trivial_basis() {
        let v = Vars::new(["x", "y"]);
        let i = buchberger(&ideal(&v, &["x", "y"]), MonomialOrder::Grevlex).unwrap();
        assert_eq!(i.basis().unwrap().polys(), &[parse_poly("y", &v).unwrap(), parse_poly("x", &v).unwrap()]);
    }

    #[test]
    fn normal_form_basics() {
        let v = Vars::new(["x", "y"]);
        let i = buchberger(&ideal(&v, &["x", "y"]), MonomialOrder::Grevlex).unwrap();
        assert!(normal_form(&parse_poly("x", &v).unwrap(), &i).unwrap().is_zero());
        assert_eq!(normal_form(&MultiPoly::one(&v), &i).unwrap(), MultiPoly::one(&v));
        assert_eq!(normal_form(&MultiPoly::one(&v), &ideal(&v, &["x"])), Err(Error::MissingBasis));
    }

    #[test]
    fn normal_form_is_exact_over_q() {
        let v = Vars::new(["x", "y"]);
        let i = buchberger(&ideal(&v, &["3*x - 2*y"]), MonomialOrder::Lex).unwrap();
        let r = normal_form(&parse_poly("x^2 + 1/5", &v).unwrap(), &i).unwrap();
        assert_eq!(r, parse_poly("4/9*y^2 + 1/5", &v).unwrap());
    }

    #[test]
    fn parabola_elimination() {
        let v = Vars::new(["t", "x", "y"]);
        let e = eliminate(&ideal(&v, &["x - t", "y - t^2"]), &[0]).unwrap();
        let w = Vars::new(["x", "y"]);
        assert!(e.same_ideal(&ideal(&w, &["y - x^2"])).unwrap());
    }

    #[test]
    fn quotients() {
        let v = Vars::new(["x", "y"]);
        let q = ideal_quotient(&ideal(&v, &["x*y"]), &ideal(&v, &["x"])).unwrap();
        assert!(q.same_ideal(&ideal(&v, &["y"])).unwrap());
        let i = ideal(&v, &["x^2", "x*y"]);
        assert!(ideal_quotient(&i, &Ideal::unit(&v)).unwrap().same_ideal(&i).unwrap());
        let s = saturate(&i, &ideal(&v, &["y"])).unwrap();
        assert!(s.same_ideal(&ideal(&v, &["x"])).unwrap());
        assert!(saturate(&i, &ideal(&v, &["x"])).unwrap().is_unit().unwrap());
        assert!(saturate(&i, &Ideal::unit(&v)).unwrap().same_ideal(&i).unwrap());
        // non-linear divisor goes through the elimination route
        let q = ideal_quotient(&ideal(&v, &["x^3*y", "y^3"]), &ideal(&v, &["x^2 + y^2"])).unwrap();
        assert!(q.contains(&parse_poly("x*y^3", &v).unwrap()).unwrap());
    }

    #[test]
    fn gcd_of_forms() {
        let v = Vars::new(["x", "y", "z"]);
        let p = |s: &str| parse_poly(s, &v).unwrap();
        let g = poly_gcd(&[p("(x^2 + y*z)*(x - y)"), p("(x^2 + y*z)*(x + z)^2"), MultiPoly::zero(&v)]).unwrap();
        assert_eq!(g, p("x^2 + y*z"));
        assert!(poly_gcd(&[p("x"), p("y")]).unwrap().is_constant());
    }

    #[test]
    fn intersection_of_lines() {
        let v = Vars::new(["x", "y", "z"]);
        let i = intersect(&ideal(&v, &["x", "y"]), &ideal(&v, &["y", "z"])).unwrap();
        assert!(i.same_ideal(&ideal(&v, &["y", "x*z"])).unwrap());
    }
}
