use num_traits::{Signed, Zero};

use super::cubic::{generic_member, member_at, rank_locus};
use super::decompose::{decompose_focal, is_parasitic, Component, PARASITIC_SAMPLES};
use super::{finish, ClassificationReport, Label, SurfaceData};
use crate::arith::{BinaryForm, Rational};
use crate::congruence::{build_congruence, SkewWeb};
use crate::error::{Error, Result};
use crate::grassmann::kernel_subspace;
use crate::groebner::{hilbert_polynomial, projective_rational_points};

/// Classifies webs in P^3 (a pencil of complexes) and P^4 (a net).
pub fn classify_low(web: &SkewWeb) -> Result<ClassificationReport> {
    match web.n() {
        3 => classify_p3(web),
        4 => classify_p4(web),
        n => Err(Error::Unsupported(format!("classify_low handles n = 3, 4; got {n}"))),
    }
}

fn base_report(web: &SkewWeb) -> Result<(crate::congruence::Congruence, ClassificationReport)> {
    let c = build_congruence(web)?;
    let focal = Component::new("focal", "focal scheme", c.focal_ideal())?;
    let report = ClassificationReport {
        n: web.n(),
        label: Label::Degenerate,
        description: String::new(),
        cubic: None,
        surface: SurfaceData::Zero,
        g35: None,
        focal: focal.record,
        components: Vec::new(),
        notes: Vec::new(),
    };
    Ok((c, report))
}

fn classify_p3(web: &SkewWeb) -> Result<ClassificationReport> {
    let (c, mut report) = base_report(web)?;
    let mut notes = Vec::new();
    let q = generic_member(web).pfaffian()?;
    let f = BinaryForm::from_poly_with_degree(&q, 2)?;
    // coeffs[i] multiplies a^i b^(2-i)
    let k = f.coeffs();
    let disc = &k[1] * &k[1] - Rational::from_integer(4.into()) * &k[0] * &k[2];
    report.surface = SurfaceData::BinaryQuadric { form: q.to_string(), discriminant: disc.clone() };
    if f.is_zero() {
        report.label = Label::NotCongruence;
        notes.push("the dual line lies on the dual Klein quadric".into());
        return Ok(finish(report, notes));
    }
    report.label = if disc.is_zero() { Label::KleinDoubleLine } else { Label::KleinJoin };
    if disc.is_negative() {
        notes.push("the two dual points are complex conjugate".into());
    }
    // rational points of the dual line on the Klein quadric give the focal lines
    let mut roots: Vec<Vec<Rational>> = Vec::new();
    if !k[2].is_zero() || !k[1].is_zero() || !k[0].is_zero() {
        if f.multiplicity_at_infinity() > 0 {
            roots.push(vec![Rational::from_integer(1.into()), Rational::zero()]);
        }
        for (r, _) in f.dehomogenize().rational_roots()? {
            roots.push(vec![r, Rational::from_integer(1.into())]);
        }
    }
    for (i, w) in roots.iter().enumerate() {
        let a = member_at(web, w);
        let line = kernel_subspace(&a);
        let mut comp = Component::new(&format!("line_{i}"), &format!("focal line {line}"), line.ideal(c.vars())?)?;
        comp.record.parasitic = Some(is_parasitic(&c, &comp.ideal, PARASITIC_SAMPLES, 17 + i as u64)?);
        report.components.push(comp.record);
    }
    Ok(finish(report, notes))
}

fn classify_p4(web: &SkewWeb) -> Result<ClassificationReport> {
    let (c, mut report) = base_report(web)?;
    let mut notes = Vec::new();
    let ideal = rank_locus(web, 2)?;
    if ideal.generators().is_empty() {
        report.surface = SurfaceData::DualPlane { dimension: 2, length: 0 };
        report.label = Label::NotCongruence;
        notes.push("the dual plane lies in the dual Grassmannian".into());
        return Ok(finish(report, notes));
    }
    let hp = hilbert_polynomial(&ideal)?;
    let length = if hp.dimension == 0 { hp.degree } else { 0 };
    report.surface = SurfaceData::DualPlane { dimension: hp.dimension, length };
    match hp.dimension {
        -1 => {
            report.label = Label::VeroneseTrisecants;
            report.components = vec![report.focal.clone()];
        }
        0 => {
            report.label = Label::FocalPlanes(length as usize);
            let pts = projective_rational_points(&ideal)?.unwrap_or_default();
            if (pts.len() as u64) < length {
                notes.push(format!("intersection of length {length} with {} rational point(s)", pts.len()));
            }
            if !pts.is_empty() {
                let (comps, extra) = decompose_focal(&c, &c.focal_ideal(), &pts)?;
                notes.extend(extra);
                report.components = comps.into_iter().map(|x| x.record).collect();
            }
        }
        _ => {
            report.label = Label::NotCongruence;
            notes.push("the dual plane meets the dual Grassmannian along a curve".into());
        }
    }
    Ok(finish(report, notes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn wave_is_a_join() {
        let r = classify_low(&fixtures::wave_web()).unwrap();
        assert_eq!(r.label, Label::KleinJoin);
        assert_eq!(r.components.len(), 2);
        assert_eq!((r.focal.dimension, r.focal.degree), (1, 2));
    }

    #[test]
    fn tangent_pencil() {
        let r = classify_low(&fixtures::tangent_p3()).unwrap();
        assert_eq!(r.label, Label::KleinDoubleLine, "{:?}", r.notes);
    }

    #[test]
    fn generic_net() {
        let r = classify_low(&fixtures::generic_p4()).unwrap();
        assert_eq!(r.label, Label::VeroneseTrisecants);
        assert_eq!(r.focal.degree, 4);
    }

    #[test]
    fn one_focal_plane() {
        let r = classify_low(&fixtures::focal_plane_p4()).unwrap();
        assert_eq!(r.label, Label::FocalPlanes(1), "{:?}", r.notes);
        assert_eq!(r.component_degrees(), vec![1, 3]);
    }
}
