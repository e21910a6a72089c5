//! Rational points of zero-dimensional ideals by minimal polynomials and back-substitution.

use std::collections::HashMap;

use num_traits::{One, Zero};

use super::ideal::{normal_form, Ideal};
use super::order::MonomialOrder;
use crate::arith::{matrix, Monomial, MultiPoly, Rational, UniPoly, Vars};
use crate::error::Result;

/// Minimal polynomial of the variable `v` in the quotient by `ideal`, whose basis must be
/// cached and zero-dimensional.
fn minimal_polynomial(ideal: &Ideal, v: usize) -> Result<UniPoly> {
    let vars = ideal.vars();
    let x = MultiPoly::var(vars, v);
    let mut powers = vec![normal_form(&MultiPoly::one(vars), ideal)?];
    loop {
        let next = normal_form(&(&x * powers.last().unwrap()), ideal)?;
        powers.push(next);
        let mut index: HashMap<Monomial, usize> = HashMap::new();
        for p in &powers {
            for (m, _) in p.terms() {
                let n = index.len();
                index.entry(m.clone()).or_insert(n);
            }
        }
        let mut rows = vec![vec![Rational::zero(); powers.len()]; index.len()];
        for (k, p) in powers.iter().enumerate() {
            for (m, c) in p.terms() {
                rows[index[m]][k] = c.clone();
            }
        }
        let ker = matrix::kernel(&rows, powers.len());
        if let Some(c) = ker.into_iter().next() {
            return Ok(UniPoly::new(c));
        }
    }
}

/// Rational points of an affine ideal, or `None` when `V(I)` has positive dimension.
/// Points are sorted lexicographically.
pub fn affine_rational_points(ideal: &Ideal) -> Result<Option<Vec<Vec<Rational>>>> {
    let vars = ideal.vars().clone();
    let k = vars.len();
    if ideal.generators().is_empty() {
        return Ok(if k == 0 { Some(vec![Vec::new()]) } else { None });
    }
    let ideal = ideal.with_basis(MonomialOrder::Grevlex)?;
    let gb = ideal.basis().expect("basis was just computed");
    if gb.polys().iter().any(|p| p.is_constant() && !p.is_zero()) {
        return Ok(Some(Vec::new()));
    }
    for v in 0..k {
        let pure = gb.leading_monomials().iter().any(|m| m.exponent(v) > 0 && m.degree() == m.exponent(v) as u32);
        if !pure {
            return Ok(None);
        }
    }
    let last = k - 1;
    let roots = minimal_polynomial(&ideal, last)?.rational_roots()?;
    if k == 1 {
        return Ok(Some(roots.into_iter().map(|(r, _)| vec![r]).collect()));
    }
    let sub = vars.without(&[last]);
    let mut out = Vec::new();
    for (r, _) in roots {
        let mut images: Vec<MultiPoly> = (0..last).map(|i| MultiPoly::var(&sub, i)).collect();
        images.push(MultiPoly::constant(&sub, r.clone()));
        let gens: Vec<MultiPoly> = gb.polys().iter().map(|p| p.substitute(&images)).collect();
        let fibre = Ideal::new(&sub, gens)?;
        let pts = affine_rational_points(&fibre)?.unwrap_or_default();
        for mut p in pts {
            p.push(r.clone());
            out.push(p);
        }
    }
    out.sort();
    Ok(Some(out))
}

/// Rational points of a homogeneous ideal in projective space, normalized so that the
/// first nonzero coordinate is 1; `None` when `V(I)` has positive dimension.
pub fn projective_rational_points(ideal: &Ideal) -> Result<Option<Vec<Vec<Rational>>>> {
    let vars = ideal.vars().clone();
    let n = vars.len();
    let mut out = Vec::new();
    for i in 0..n {
        // chart x_j = 0 for j < i, x_i = 1
        let free: Vec<usize> = (i + 1..n).collect();
        let fixed = |pt: &[Rational]| -> Vec<Rational> {
            let mut full = vec![Rational::zero(); i];
            full.push(Rational::one());
            full.extend_from_slice(pt);
            full
        };
        if free.is_empty() {
            let p = fixed(&[]);
            if ideal.generators().iter().all(|g| g.eval(&p).is_zero()) {
                out.push(p);
            }
            continue;
        }
        let drop: Vec<usize> = (0..=i).collect();
        let sub: Vars = vars.without(&drop);
        let mut images: Vec<MultiPoly> = (0..i).map(|_| MultiPoly::zero(&sub)).collect();
        images.push(MultiPoly::one(&sub));
        images.extend((0..free.len()).map(|k| MultiPoly::var(&sub, k)));
        let gens: Vec<MultiPoly> = ideal.generators().iter().map(|g| g.substitute(&images)).collect();
        match affine_rational_points(&Ideal::new(&sub, gens)?)? {
            None => return Ok(None),
            Some(pts) => out.extend(pts.iter().map(|p| fixed(p))),
        }
    }
    Ok(Some(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{parse_poly, rat};

    #[test]
    fn affine_points() {
        let v = Vars::new(["x", "y"]);
        let i = Ideal::new(&v, vec![parse_poly("x^2 - 2*y", &v).unwrap(), parse_poly("y^2 - 2*y", &v).unwrap()]).unwrap();
        // y = 0 gives x = 0; y = 2 gives x^2 = 4
        let pts = affine_rational_points(&i).unwrap().unwrap();
        assert_eq!(pts, vec![vec![rat(-2), rat(2)], vec![rat(0), rat(0)], vec![rat(2), rat(2)]]);
        let irr = Ideal::new(&v, vec![parse_poly("x^2 - 2", &v).unwrap(), parse_poly("y", &v).unwrap()]).unwrap();
        assert_eq!(affine_rational_points(&irr).unwrap().unwrap(), Vec::<Vec<Rational>>::new());
        let curve = Ideal::new(&v, vec![parse_poly("x*y - 1", &v).unwrap()]).unwrap();
        assert_eq!(affine_rational_points(&curve).unwrap(), None);
    }

    #[test]
    fn projective_points() {
        let v = Vars::projective(2);
        // two points (1:0:0), (0:1:1) and the line through them
        let i = Ideal::new(&v, vec![parse_poly("x1 - x2", &v).unwrap(), parse_poly("x0*x1", &v).unwrap()]).unwrap();
        let pts = projective_rational_points(&i).unwrap().unwrap();
        assert_eq!(pts, vec![vec![rat(1), rat(0), rat(0)], vec![rat(0), rat(1), rat(1)]]);
        let line = Ideal::new(&v, vec![parse_poly("x1 - x2", &v).unwrap()]).unwrap();
        assert_eq!(projective_rational_points(&line).unwrap(), None);
    }
}
