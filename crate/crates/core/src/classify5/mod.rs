//! Classification of linear congruences by the position of the dual space of the web with
//! respect to the dual Grassmannian: the Pfaffian cubic in P^5, the binary quadric in P^3
//! and the sub-Pfaffian locus in P^4.

mod cubic;
mod decompose;
mod low;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use cubic::{
    g35_locus, generic_member, is_cone_vertex, linear_factors, member_at, pfaffian_cubic, quadric_matrix, rank_locus,
    singular_locus, split_cubic, CubicSplit, G35Locus, PfaffianCubic, SingularLocus, SingularPointRecord,
};
pub use decompose::{
    decompose_focal, decompose_reducible, is_parasitic, kernel_union, reducible_case_of, Component, ComponentRecord,
    PARASITIC_SAMPLES,
};
pub use low::classify_low;

use crate::congruence::{build_congruence, expected_degree, SkewWeb};
use crate::error::{Error, Result};
use crate::groebner::hilbert_polynomial;

/// Row of the classification table, with the sub-case where there is one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "case")]
pub enum Label {
    /// P^5, smooth cubic.
    SmoothPalatini,
    /// P^5, irreducible cubic with isolated singular points off G(3,5).
    SingularPalatini,
    /// P^5, the cubic is a cone with vertex off G(3,5).
    PalatiniCone,
    /// P^5, `k` singular points on G(3,5): `k` focal 3-spaces plus a residual of degree `7 - k`.
    SplitG35(usize),
    /// P^5, irreducible cubic singular along a line.
    RuledDoubleLine,
    /// P^5, `S = π ∪ Q`; sub-case 1 to 4.
    Reducible(usize),
    /// P^3, the dual line meets the Klein quadric in two points.
    KleinJoin,
    /// P^3, the dual line is tangent to the Klein quadric.
    KleinDoubleLine,
    /// P^4, the dual plane misses the dual Grassmannian.
    VeroneseTrisecants,
    /// P^4, finite intersection of the given length.
    FocalPlanes(usize),
    /// The family of lines is too large to be a congruence.
    NotCongruence,
    /// Special position without a row of its own; see the notes.
    Degenerate,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::SmoothPalatini => write!(f, "smooth Palatini scroll"),
            Label::SingularPalatini => write!(f, "singular Palatini scroll (isolated singular points off G(3,5))"),
            Label::PalatiniCone => write!(f, "singular Palatini scroll (S is a cubic cone)"),
            Label::SplitG35(k) => write!(f, "{k} focal 3-space(s) plus a residual threefold of degree {}", 7 - k),
            Label::RuledDoubleLine => write!(f, "singular Palatini scroll (S ruled with a double line)"),
            Label::Reducible(1) => write!(f, "reducible S, case 1: L' + X with deg X = 6"),
            Label::Reducible(2) => write!(f, "reducible S, case 2: Gamma' + Y with deg Y = 5"),
            Label::Reducible(3) => write!(f, "reducible S, case 3: Z1 + Z2 with deg Z2 = 4"),
            Label::Reducible(k) => write!(f, "reducible S, case {k}: C(V) + T with deg T = 3"),
            Label::KleinJoin => write!(f, "lines meeting two fixed lines"),
            Label::KleinDoubleLine => write!(f, "focal double line"),
            Label::VeroneseTrisecants => write!(f, "trisecants of a projected Veronese surface"),
            Label::FocalPlanes(k) => write!(f, "{k} focal plane(s)"),
            Label::NotCongruence => write!(f, "not a congruence"),
            Label::Degenerate => write!(f, "degenerate"),
        }
    }
}

/// What the dual space of the web looks like.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum SurfaceData {
    /// The Pfaffian vanishes on the whole dual space.
    Zero,
    Smooth,
    Singular { locus: SingularLocus },
    Reducible { linear: String, quadric: String, quadric_rank: usize, linear_factors: usize },
    /// P^3: `Pf(aA + bB)`.
    BinaryQuadric {
        form: String,
        #[serde(with = "crate::arith::serde_rational")]
        discriminant: crate::arith::Rational,
    },
    /// P^4: rank-two locus of the dual plane.
    DualPlane { dimension: i64, length: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub n: usize,
    pub label: Label,
    pub description: String,
    /// `Pf` of the generic member, when defined.
    pub cubic: Option<String>,
    pub surface: SurfaceData,
    pub g35: Option<G35Locus>,
    /// The whole focal scheme.
    pub focal: ComponentRecord,
    pub components: Vec<ComponentRecord>,
    pub notes: Vec<String>,
}

impl ClassificationReport {
    /// Degrees of the components, in report order.
    pub fn component_degrees(&self) -> Vec<u64> {
        self.components.iter().map(|c| c.degree).collect()
    }
}

/// Classifies a web in P^3, P^4 or P^5.
pub fn classify_any(web: &SkewWeb) -> Result<ClassificationReport> {
    match web.n() {
        3 | 4 => classify_low(web),
        5 => classify(web),
        n => Err(Error::Unsupported(format!("classification is available for n = 3, 4, 5; got {n}"))),
    }
}

/// Classifies a web in P^5.
pub fn classify(web: &SkewWeb) -> Result<ClassificationReport> {
    if web.n() != 5 {
        return Err(Error::Unsupported(format!("classify needs n = 5, got {}", web.n())));
    }
    let c = build_congruence(web)?;
    let focal_ideal = c.focal_ideal();
    let focal = Component::new("focal", "focal scheme", focal_ideal.clone())?;
    let s = pfaffian_cubic(web)?;
    let mut notes = Vec::new();
    let mut report = ClassificationReport {
        n: 5,
        label: Label::Degenerate,
        description: String::new(),
        cubic: Some(s.poly.to_string()),
        surface: SurfaceData::Zero,
        g35: None,
        focal: focal.record.clone(),
        components: Vec::new(),
        notes: Vec::new(),
    };
    if s.is_zero() {
        notes.push("the dual space lies in the dual Grassmannian: it meets G(3,5) and the focal locus has dimension > 3".into());
        return Ok(finish(report, notes));
    }
    let g35 = g35_locus(web)?;
    report.g35 = Some(g35.clone());
    let split = split_cubic(&s)?;
    if let Some(sp) = &split {
        report.surface = SurfaceData::Reducible {
            linear: sp.linear.to_string(),
            quadric: sp.quadric.to_string(),
            quadric_rank: sp.quadric_rank,
            linear_factors: sp.linear_factors,
        };
    }
    if g35.dimension >= 1 {
        notes.push(format!("S meets G(3,5) along a set of dimension {}: focal locus of dimension > 3", g35.dimension));
        return Ok(finish(report, notes));
    }
    if g35.dimension == 0 {
        if split.is_none() {
            report.surface = SurfaceData::Singular { locus: singular_locus(&s, web)? };
        }
        let k = g35.points.len();
        if (k as u64) < g35.length {
            notes.push(format!(
                "rank-two locus has length {} but only {k} rational points; the others are not peeled",
                g35.length
            ));
        }
        if k == 0 {
            notes.push("no rational point on G(3,5) to peel".into());
            return Ok(finish(report, notes));
        }
        if let SurfaceData::Singular { locus } = &report.surface {
            if locus.points.iter().any(|p| p.on_g35 && p.cone_vertex) {
                notes.push("S is a cone with vertex on G(3,5)".into());
            }
        }
        let (comps, extra) = decompose_focal(&c, &focal_ideal, &g35.points)?;
        notes.extend(extra);
        let residual = comps.last().expect("residual component").record.clone();
        report.components = comps.into_iter().map(|x| x.record).collect();
        if residual.dimension == 3 && residual.degree == 7 - k as u64 && (k as u64) == g35.length {
            report.label = Label::SplitG35(k);
        } else {
            notes.push(format!("residual of degree {} and dimension {} after peeling {k} 3-space(s)", residual.degree, residual.dimension));
        }
        return Ok(finish(report, notes));
    }
    if let Some(sp) = &split {
        let (case, comps) = decompose_reducible(&c, &focal_ideal, sp)?;
        report.components = comps.into_iter().map(|x| x.record).collect();
        match case {
            Some(k) if sp.quadric_rank == 4 && sp.linear_factors == 1 => report.label = Label::Reducible(k),
            Some(k) => notes.push(format!(
                "degeneration of reducible case {k}: quadric of rank {}, {} linear factor(s)",
                sp.quadric_rank, sp.linear_factors
            )),
            None => notes.push("reducible S with an unresolved focal decomposition".into()),
        }
        return Ok(finish(report, notes));
    }
    let locus = singular_locus(&s, web)?;
    report.label = match locus.dimension {
        -1 => Label::SmoothPalatini,
        0 if locus.points.iter().any(|p| p.cone_vertex) => Label::PalatiniCone,
        0 => {
            let found = locus.points.len() as u64;
            if found < locus.jacobian_length {
                notes.push(format!(
                    "Jacobian scheme of length {} with {found} rational point(s); irrational points are counted, not located",
                    locus.jacobian_length
                ));
            }
            Label::SingularPalatini
        }
        1 => {
            notes.push("irreducibility is certified over Q only; the orbit of the double line is not identified".into());
            Label::RuledDoubleLine
        }
        _ => Label::Degenerate,
    };
    report.surface = if locus.dimension < 0 { SurfaceData::Smooth } else { SurfaceData::Singular { locus } };
    report.components = vec![focal.record];
    Ok(finish(report, notes))
}

fn finish(mut report: ClassificationReport, mut notes: Vec<String>) -> ClassificationReport {
    let f = &report.focal;
    let expected = expected_degree(report.n) as u64;
    let congruence_dim = report.n as i64 - 2;
    if f.dimension != congruence_dim && !matches!(report.label, Label::NotCongruence) {
        notes.push(format!("focal scheme has dimension {} instead of {congruence_dim}", f.dimension));
        report.label = Label::Degenerate;
    } else if f.dimension == congruence_dim && f.degree != expected {
        notes.push(format!("focal degree {} differs from the expected {expected}", f.degree));
    }
    report.description = report.label.to_string();
    report.notes = notes;
    report
}

/// Hilbert polynomial of the focal scheme of any web.
pub fn focal_hilbert(web: &SkewWeb) -> Result<crate::groebner::HilbertPolynomial> {
    hilbert_polynomial(&build_congruence(web)?.focal_ideal())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn palatini_fixture() {
        let r = classify(&fixtures::palatini_generic()).unwrap();
        assert_eq!(r.label, Label::SmoothPalatini);
        assert_eq!(r.focal.degree, 7);
    }

    #[test]
    fn split_fixtures() {
        for k in 1..=4 {
            let r = classify(&fixtures::split_web(k)).unwrap();
            assert_eq!(r.label, Label::SplitG35(k), "{:?}", r.notes);
            let mut degs = r.component_degrees();
            degs.sort();
            assert_eq!(degs.iter().sum::<u64>(), 7);
        }
    }

    #[test]
    fn reducible_fixtures() {
        for case in 1..=4 {
            let r = classify(&fixtures::reducible_case(case)).unwrap();
            assert_eq!(r.label, Label::Reducible(case), "{:?}", r.notes);
        }
    }

    #[test]
    fn cone_fixture() {
        let r = classify(&fixtures::cone()).unwrap();
        assert_eq!(r.label, Label::PalatiniCone, "{:?}", r.notes);
    }

    #[test]
    fn report_round_trips() {
        let r = classify(&fixtures::split_web(2)).unwrap();
        let s = serde_json::to_string(&r).unwrap();
        let back: ClassificationReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
    }
}
