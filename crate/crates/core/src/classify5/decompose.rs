use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::cubic::{member_at, CubicSplit};
use crate::arith::{binary_form_gcd, BinaryForm, MultiPoly, Rational, Vars};
use crate::congruence::{line_through_point, random_point, Congruence};
use crate::error::{Error, Result};
use crate::grassmann::{kernel_subspace, LinearSubspace};
use crate::groebner::{eliminate, hilbert_polynomial, ideal_quotient, saturate, HilbertPolynomial, Ideal};

/// Number of random congruence lines used to certify a parasitic component.
pub const PARASITIC_SAMPLES: usize = 20;
const PARASITIC_SEED: u64 = 0x9a7a;

/// A component of the focal scheme together with its ideal.
#[derive(Clone, Debug)]
pub struct Component {
    pub ideal: Ideal,
    pub record: ComponentRecord,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentRecord {
    pub name: String,
    pub description: String,
    pub degree: u64,
    pub dimension: i64,
    pub hilbert: HilbertPolynomial,
    /// `Some(true)` when every sampled congruence line misses the component.
    pub parasitic: Option<bool>,
    pub generators: Vec<String>,
}

impl Component {
    pub fn new(name: &str, description: &str, ideal: Ideal) -> Result<Component> {
        let hilbert = hilbert_polynomial(&ideal)?;
        let generators = ideal.best_generators().iter().map(|g| g.to_string()).collect();
        Ok(Component {
            record: ComponentRecord {
                name: name.into(),
                description: description.into(),
                degree: hilbert.degree,
                dimension: hilbert.dimension,
                hilbert,
                parasitic: None,
                generators,
            },
            ideal,
        })
    }
}

/// True when `samples` random congruence lines all miss `V(ideal)`.
pub fn is_parasitic(c: &Congruence, ideal: &Ideal, samples: usize, seed: u64) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let b = Vars::binary();
    let mut done = 0;
    let mut attempts = 0;
    while done < samples {
        attempts += 1;
        if attempts > 50 * samples {
            return Err(Error::Sample("could not draw off-focal points".into()));
        }
        let p = random_point(&mut rng, c.n(), 20);
        let l = match line_through_point(c, &p) {
            Ok(l) => l,
            Err(Error::FocalPoint { .. }) => continue,
            Err(e) => return Err(e),
        };
        let x = l.parametrize(&b)?;
        let forms: Vec<BinaryForm> =
            ideal.best_generators().iter().map(|g| BinaryForm::from_poly(&g.substitute(&x))).collect::<Result<_>>()?;
        match binary_form_gcd(&forms) {
            Err(Error::AllZero) => return Ok(false),
            Err(e) => return Err(e),
            Ok(g) if g.degree() > 0 => return Ok(false),
            Ok(_) => {}
        }
        done += 1;
    }
    Ok(true)
}

fn flag_parasitic(c: &Congruence, comps: &mut [Component]) -> Result<()> {
    for (i, comp) in comps.iter_mut().enumerate() {
        comp.record.parasitic = Some(is_parasitic(c, &comp.ideal, PARASITIC_SAMPLES, PARASITIC_SEED + i as u64)?);
    }
    Ok(())
}

fn residual_name(n: usize, k: usize) -> &'static str {
    match (n, k) {
        (5, 1) => "singular Bordiga scroll",
        (5, 2) => "Castelnuovo threefold",
        (5, 3) => "Del Pezzo threefold",
        (5, 4) => "rational normal cubic scroll",
        (4, 1) => "cubic scroll",
        (4, 2) => "quadric",
        (4, 3) => "plane through the three pairwise intersection points",
        _ => "residual component",
    }
}

/// Peels the spaces `π_A = P(ker A)` of the given rank-two members off the focal scheme
/// (3-spaces in P^5, planes in P^4). The last component is the residual.
pub fn decompose_focal(c: &Congruence, focal: &Ideal, g35_points: &[Vec<Rational>]) -> Result<(Vec<Component>, Vec<String>)> {
    let mut comps = Vec::new();
    let mut notes = Vec::new();
    let mut residual = focal.clone();
    for (i, w) in g35_points.iter().enumerate() {
        let a = member_at(c.web(), w);
        if a.rank() != 2 {
            return Err(Error::Rank { expected: 2, found: a.rank() });
        }
        let pi = kernel_subspace(&a);
        let ip = pi.ideal(c.vars())?;
        if !ip.contains_ideal(focal)? {
            return Err(Error::Contract(format!("focal ideal not contained in the ideal of pi_{i}")));
        }
        residual = ideal_quotient(&residual, &ip)?;
        comps.push(Component::new(&format!("pi_{i}"), &format!("{}-space {pi}", pi.dim()), ip)?);
    }
    for (i, comp) in comps.iter().enumerate() {
        if comp.ideal.contains_ideal(&residual)? {
            notes.push(format!("pi_{i} counts at least twice in the focal scheme"));
        }
    }
    let k = g35_points.len();
    let res = Component::new("residual", residual_name(c.n(), k), residual)?;
    if k == 1 && c.n() == 5 {
        let meet = res.ideal.sum(&comps[0].ideal)?;
        let hp = hilbert_polynomial(&meet)?;
        notes.push(format!("residual meets pi_0 in a surface of dimension {} and degree {}", hp.dimension, hp.degree));
    }
    comps.push(res);
    flag_parasitic(c, &mut comps)?;
    Ok((comps, notes))
}

/// Union of the kernel lines of the members parametrized by the plane `{l = 0}`.
pub fn kernel_union(c: &Congruence, plane: &MultiPoly) -> Result<Ideal> {
    let coeffs = plane.linear_coefficients();
    let span = LinearSubspace::from_forms(coeffs.len() - 1, &[coeffs]);
    let pts = span.points();
    let n = c.n();
    let mut names: Vec<String> = (1..pts.len()).map(|i| format!("s{i}")).collect();
    names.extend(c.vars().names().iter().cloned());
    let big = Vars::new(names);
    let ns = pts.len() - 1;
    let x: Vec<MultiPoly> = (0..=n).map(|i| MultiPoly::var(&big, ns + i)).collect();
    let mut s = vec![MultiPoly::one(&big)];
    s.extend((0..ns).map(|i| MultiPoly::var(&big, i)));
    let mats: Vec<_> = pts.iter().map(|p| member_at(c.web(), p)).collect();
    let mut gens = Vec::new();
    for i in 0..=n {
        let mut e = MultiPoly::zero(&big);
        for (sk, m) in s.iter().zip(&mats) {
            for (j, xj) in x.iter().enumerate() {
                let a = m.get(i, j);
                if !a.is_zero() {
                    e = &e + &(sk * xj).scale(a);
                }
            }
        }
        gens.push(e);
    }
    let elim = eliminate(&Ideal::new(&big, gens)?, &(0..ns).collect::<Vec<_>>())?;
    let gens = elim.generators().iter().map(|g| g.rename_into(c.vars())).collect::<Result<Vec<_>>>()?;
    Ideal::new(c.vars(), gens)
}

fn reducible_names(case: usize) -> (&'static str, &'static str) {
    match case {
        1 => ("3-space L swept by secants of a twisted cubic", "sextic threefold X"),
        2 => ("quadric threefold Gamma", "quintic threefold Y"),
        3 => ("rational cubic scroll Z1", "quartic threefold Z2 (complete intersection of two quadrics)"),
        4 => ("cone C(V) over a projected Veronese surface", "cubic threefold T"),
        _ => ("union of kernel lines", "residual component"),
    }
}

/// Sub-case (1..=4) of a reducible cubic, read off the degree of the residual component.
pub fn reducible_case_of(residual_degree: u64) -> Option<usize> {
    match residual_degree {
        6 => Some(1),
        5 => Some(2),
        4 => Some(3),
        3 => Some(4),
        _ => None,
    }
}

/// Splits the focal scheme of a congruence with `S = π ∪ Q` into the union `Z_π` of the
/// kernel lines of the members in `π` and the residual `F : Z_π^∞`.
pub fn decompose_reducible(c: &Congruence, focal: &Ideal, split: &CubicSplit) -> Result<(Option<usize>, Vec<Component>)> {
    let z = kernel_union(c, &split.linear)?;
    if !z.contains_ideal(focal)? {
        return Err(Error::Contract("kernel lines of the plane are not focal".into()));
    }
    let residual = saturate(focal, &z)?;
    let hz = hilbert_polynomial(&z)?;
    let hr = hilbert_polynomial(&residual)?;
    let case = if hz.dimension == 3 && hr.dimension == 3 && hz.degree + hr.degree == 7 { reducible_case_of(hr.degree) } else { None };
    let (zn, rn) = reducible_names(case.unwrap_or(0));
    let mut comps = vec![Component::new("z_pi", zn, z)?, Component::new("residual", rn, residual)?];
    flag_parasitic(c, &mut comps)?;
    Ok((case, comps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::congruence::build_congruence;
    use crate::fixtures;
    use crate::grassmann::{kernel_space, QSkew};

    #[test]
    fn split_ladder_degrees() {
        for k in 1..=4 {
            let w = fixtures::split_web(k);
            let c = build_congruence(&w).unwrap();
            let pts: Vec<Vec<Rational>> = (0..k).map(|i| (0..4).map(|j| Rational::from_integer(((i == j) as i64).into())).collect()).collect();
            let (comps, _) = decompose_focal(&c, &c.focal_ideal(), &pts).unwrap();
            let degs: Vec<u64> = comps.iter().map(|x| x.record.degree).collect();
            let mut expect = vec![1; k];
            expect.push(7 - k as u64);
            assert_eq!(degs, expect, "k = {k}");
            assert!(comps.iter().all(|x| x.record.parasitic == Some(false)));
        }
    }

    #[test]
    fn reducible_case_one() {
        let c = build_congruence(&fixtures::reducible_case(1)).unwrap();
        let s = super::super::cubic::pfaffian_cubic(c.web()).unwrap();
        let sp = super::super::cubic::split_cubic(&s).unwrap().unwrap();
        let (case, comps) = decompose_reducible(&c, &c.focal_ideal(), &sp).unwrap();
        assert_eq!(case, Some(1));
        assert_eq!(comps[1].record.hilbert.coeffs, vec![2, 0, 3, 1].into_iter().map(|x| Rational::from_integer(x.into())).collect::<Vec<_>>());
        assert_eq!(comps[0].record.parasitic, Some(true));
        assert_eq!(comps[1].record.parasitic, Some(false));
    }

    #[test]
    fn every_line_meets_a_rank_two_space() {
        let w = fixtures::split_web(1);
        let c = build_congruence(&w).unwrap();
        let pi = kernel_space(&QSkew::elementary(6, 0, 1)).unwrap().ideal(c.vars()).unwrap();
        assert!(!is_parasitic(&c, &pi, 5, 3).unwrap());
    }
}
