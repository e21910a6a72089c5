//! Built-in webs used by the examples, the tests and the command-line tool.

use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arith::matrix;
use crate::arith::{parse_poly, MultiPoly, Rational, Vars};
use crate::congruence::{random_point, random_skew, SkewWeb};
use crate::error::{Error, Result};
use crate::grassmann::QSkew;
use crate::pde::FluxSystem;

/// Seed of the generic P^5 web used as the default smooth example.
pub const PALATINI_SEED: u64 = 1;
/// Seed of the random generators completing the split webs.
pub const SPLIT_SEED: u64 = 2024;
/// Seed of the generic P^4 web.
pub const P4_SEED: u64 = 4;

/// A named web with a one-line description.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub note: &'static str,
    pub web: SkewWeb,
}

/// Reads a skew matrix whose upper-triangle entries are linear forms in `k` dual
/// coordinates, row by row, and returns the `k` coefficient matrices.
pub fn web_from_linear_upper(n: usize, k: usize, upper: &[&str]) -> Result<SkewWeb> {
    let size = n + 1;
    if upper.len() != size * (size - 1) / 2 {
        return Err(Error::Dimension(format!("{} entries for a {size}x{size} upper triangle", upper.len())));
    }
    let vars = Vars::dual(k);
    let polys: Vec<MultiPoly> = upper.iter().map(|s| parse_poly(s, &vars)).collect::<Result<_>>()?;
    for p in &polys {
        if !(p.is_zero() || p.is_homogeneous() && p.total_degree() == Some(1)) {
            return Err(Error::Invalid(format!("entry `{p}` is not a linear form")));
        }
    }
    let mats = (0..k)
        .map(|j| {
            let e: Vec<Rational> = polys.iter().map(|p| p.linear_coefficients()[j].clone()).collect();
            QSkew::from_upper(size, &e, &Rational::zero())
        })
        .collect::<Result<Vec<_>>>()?;
    SkewWeb::new(n, mats)
}

fn fill_random(n: usize, mut mats: Vec<QSkew>, seed: u64) -> SkewWeb {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while mats.len() < n - 1 {
        mats.push(random_skew(&mut rng, n + 1, 3));
    }
    SkewWeb::new(n, mats).expect("random completion is independent")
}

/// Generic web in P^5: the Pfaffian cubic is smooth.
pub fn palatini_generic() -> SkewWeb {
    SkewWeb::random(5, PALATINI_SEED, 5)
}

/// Web in P^5 spanned by `k` rank-two matrices in general position and `4 - k` random ones.
/// The rank-two matrices are `E01`, `E23`, `E45` and `u∧v` for seeded random `u`, `v`.
pub fn split_web(k: usize) -> SkewWeb {
    assert!((1..=4).contains(&k));
    let mut mats: Vec<QSkew> = [(0, 1), (2, 3), (4, 5)].iter().take(k.min(3)).map(|&(i, j)| QSkew::elementary(6, i, j)).collect();
    if k == 4 {
        let mut rng = ChaCha8Rng::seed_from_u64(SPLIT_SEED);
        loop {
            let u = random_point(&mut rng, 5, 3);
            let v = random_point(&mut rng, 5, 3);
            let w = QSkew::wedge(&u, &v);
            // the kernel must meet each coordinate 3-space transversally
            let mut ok = w.rank() == 2;
            for (i, j) in [(0, 1), (2, 3), (4, 5)] {
                let m = vec![u.clone(), v.clone(), unit(i), unit(j)];
                ok &= matrix::rank(&m) == 4;
            }
            if ok {
                mats.push(w);
                break;
            }
        }
    }
    fill_random(5, mats, SPLIT_SEED + k as u64)
}

fn unit(i: usize) -> Vec<Rational> {
    (0..6).map(|k| Rational::from_integer(((k == i) as i64).into())).collect()
}

/// The four webs whose Pfaffian cubic is a plane plus a quadric.
pub fn reducible_case(case: usize) -> SkewWeb {
    let upper: [&str; 15] = match case {
        1 => ["-d", "a", "b", "c", "0", "0", "a", "b", "c", "d", "0", "d", "0", "0", "-d"],
        2 => ["a", "b", "c", "d", "0", "0", "d", "c", "b", "0", "d", "0", "0", "d", "a"],
        3 => ["a", "b", "d", "0", "0", "c", "0", "d", "0", "0", "0", "d", "a", "b", "c"],
        4 => ["a", "b", "c", "d", "0", "c", "d", "b", "0", "0", "0", "d", "a", "0", "0"],
        _ => panic!("reducible cases are numbered 1 to 4"),
    };
    web_from_linear_upper(5, 4, &upper).expect("fixture is valid")
}

/// Web whose Pfaffian cubic is a cone.
pub fn cone() -> SkewWeb {
    let upper = ["c", "a", "d-c", "b", "0", "d", "a", "0", "b", "c", "d", "0", "0", "c", "0"];
    web_from_linear_upper(5, 4, &upper).expect("fixture is valid")
}

/// Lines of P^3 meeting `{y0 = y3, y1 = y2}` and `{y0 = -y3, y1 = -y2}`.
pub fn wave_web() -> SkewWeb {
    let r = |v: [i64; 4]| -> Vec<Rational> { v.iter().map(|&x| Rational::from_integer(x.into())).collect() };
    let meet = |l1: Vec<Rational>, l2: Vec<Rational>| -> QSkew {
        let rows = (0..4)
            .map(|i| {
                (0..4)
                    .map(|j| {
                        let m = vec![unit4(i), unit4(j), l1.clone(), l2.clone()];
                        matrix::det(&m)
                    })
                    .collect()
            })
            .collect();
        QSkew::from_rows(rows).expect("determinant pairing is skew")
    };
    let a = meet(r([1, 0, 0, 1]), r([0, 1, 1, 0]));
    let b = meet(r([1, 0, 0, -1]), r([0, 1, -1, 0]));
    SkewWeb::new(3, vec![a, b]).expect("two distinct lines")
}

fn unit4(i: usize) -> Vec<Rational> {
    (0..4).map(|k| Rational::from_integer(((k == i) as i64).into())).collect()
}

/// Pencil of complexes in P^3 tangent to the Klein quadric.
pub fn tangent_p3() -> SkewWeb {
    let b = QSkew::elementary(4, 0, 2).add(&QSkew::elementary(4, 1, 3));
    SkewWeb::new(3, vec![QSkew::elementary(4, 0, 1), b]).expect("independent")
}

/// Generic web in P^4.
pub fn generic_p4() -> SkewWeb {
    SkewWeb::random(4, P4_SEED, 5)
}

/// Web in P^4 spanned by one rank-two matrix and two random ones.
pub fn focal_plane_p4() -> SkewWeb {
    fill_random(4, vec![QSkew::elementary(5, 0, 1)], SPLIT_SEED)
}

/// The whole corpus, by name.
pub fn corpus() -> Vec<Fixture> {
    let mut out = vec![
        Fixture { name: "palatini-generic", note: "generic web; seeded integer entries in [-5, 5]", web: palatini_generic() },
        Fixture { name: "cone", note: "Pfaffian cubic is a cone over a plane cubic", web: cone() },
        Fixture { name: "wave", note: "lines meeting two skew lines (the linear wave system)", web: wave_web() },
        Fixture { name: "tangent-p3", note: "pencil tangent to the Klein quadric: focal double line", web: tangent_p3() },
        Fixture { name: "generic-p4", note: "generic web in P^4: trisecants of a projected Veronese surface", web: generic_p4() },
        Fixture { name: "focal-plane-p4", note: "web in P^4 containing one rank-two complex", web: focal_plane_p4() },
    ];
    let split_notes = [
        "one rank-two generator E01: focal 3-space plus a singular Bordiga scroll",
        "rank-two generators E01, E23: two focal 3-spaces plus a Castelnuovo threefold",
        "rank-two generators E01, E23, E45: three focal 3-spaces plus a Del Pezzo threefold",
        "four rank-two generators: four focal 3-spaces plus a rational normal cubic scroll",
    ];
    for k in 1..=4 {
        out.push(Fixture { name: ["af-k1", "af-k2", "af-k3", "af-k4"][k - 1], note: split_notes[k - 1], web: split_web(k) });
    }
    let case_notes = [
        "plane of secants of a twisted cubic: parasitic 3-space plus a sextic with P(t) = t^3+3t^2+2",
        "plane of lines in a quadric meeting a fixed line: quadric plus a quintic",
        "plane of joins of two projectively related planes: cubic scroll plus a quartic",
        "plane of lines of a cone over a projected Veronese surface: quartic cone plus a cubic",
    ];
    for case in 1..=4 {
        out.push(Fixture {
            name: ["af-case1", "af-case2", "af-case3", "af-case4"][case - 1],
            note: case_notes[case - 1],
            web: reducible_case(case),
        });
    }
    out
}

pub fn by_name(name: &str) -> Option<Fixture> {
    corpus().into_iter().find(|f| f.name == name)
}

/// `f = (-u2, -u1)`: the linear wave system, whose lines meet two fixed skew lines.
pub fn wave_flux() -> FluxSystem {
    FluxSystem::parse(&["-u2", "-u1"], None).expect("fixture is valid")
}

/// `f = (u2, -u1)`: `Jf` is a rotation, so there are no real characteristic velocities.
pub fn rotated_flux() -> FluxSystem {
    FluxSystem::parse(&["u2", "-u1"], None).expect("fixture is valid")
}

/// `f = u^2 / 2`.
pub fn burgers_flux() -> FluxSystem {
    FluxSystem::parse(&["1/2*u1^2"], None).expect("fixture is valid")
}

/// `f = (u1^2 + u2^2, u1 u2)`: eigenvector fields that turn along their own integral curves.
pub fn curved_flux() -> FluxSystem {
    FluxSystem::parse(&["u1^2 + u2^2", "u1*u2"], None).expect("fixture is valid")
}

/// Named flux systems.
pub fn flux_corpus() -> Vec<(&'static str, &'static str, FluxSystem)> {
    vec![
        ("wave", "linear wave system; a Temple system", wave_flux()),
        ("rotated", "rotation Jacobian; not hyperbolic", rotated_flux()),
        ("burgers", "Burgers equation; genuinely nonlinear", burgers_flux()),
        ("curved", "quadratic fluxes with curved rarefaction curves", curved_flux()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_valid_and_named_uniquely() {
        let c = corpus();
        let mut names: Vec<&str> = c.iter().map(|f| f.name).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), c.len());
    }

    #[test]
    fn split_webs_have_rank_two_generators() {
        for k in 1..=4 {
            let w = split_web(k);
            for m in &w.matrices()[..k] {
                assert_eq!(m.rank(), 2);
            }
        }
    }

    #[test]
    fn linear_upper_rejects_constants() {
        let mut up = vec!["a"; 6];
        up[2] = "1";
        assert!(web_from_linear_upper(3, 2, &up).is_err());
    }
}
