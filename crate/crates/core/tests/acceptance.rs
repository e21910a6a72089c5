//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits non-zero on any failure.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use plueckerlab::arith::{matrix, rat, ratio, MultiPoly, Rational};
use plueckerlab::classify5::{
    classify, classify_any, decompose_focal, focal_hilbert, pfaffian_cubic, split_cubic, Label,
};
use plueckerlab::congruence::{
    build_congruence, expected_degree, foci_between, foci_on_line, line_through_point, random_point,
    residual_plane_curve_degree, Congruence, SkewWeb,
};
use plueckerlab::fixtures;
use plueckerlab::grassmann::QSkew;
use plueckerlab::groebner::{hilbert_function, Ideal};
use plueckerlab::groebner::hilbert::leading_ideal;
use plueckerlab::pde::{focus_eigenvalue_check, line_family};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn random_int_skew(rng: &mut impl Rng, size: usize, bound: i64) -> QSkew {
    let mut rows = vec![vec![0i64; size]; size];
    for i in 0..size {
        for j in i + 1..size {
            let x = rng.gen_range(-bound..=bound);
            rows[i][j] = x;
            rows[j][i] = -x;
        }
    }
    QSkew::from_integer_rows(&rows).unwrap()
}

fn pfaffian_squares_to_determinant() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for i in 0..1000 {
        let a = random_int_skew(&mut rng, 6, 9);
        let pf = ok(a.pfaffian())?;
        ensure(&pf * &pf == a.determinant(), || format!("matrix {i}: Pf^2 != det"))?;
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(10), || format!("took {t:?}"))?;
    Ok(format!("1000 matrices in {t:.2?}"))
}

fn generic_focal_hilbert() -> Outcome {
    let expect = vec![rat(1), ratio(11, 6), rat(2), ratio(7, 6)];
    let seeds = [101u64, 202, 303];
    for seed in seeds {
        let w = SkewWeb::random(5, seed, 5);
        let hp = ok(focal_hilbert(&w))?;
        ensure(hp.coeffs == expect, || format!("seed {seed}: P(t) coefficients {:?}", hp.coeffs))?;
        ensure(hp.degree as usize == expected_degree(5), || format!("seed {seed}: degree {}", hp.degree))?;
    }
    Ok(format!("seeds {seeds:?}: P(t) = 7/6 t^3 + 2 t^2 + 11/6 t + 1, degree {}", expected_degree(5)))
}

fn unit_points(k: usize) -> Vec<Vec<Rational>> {
    (0..k).map(|i| (0..4).map(|j| rat((i == j) as i64)).collect()).collect()
}

fn split_ladder() -> Outcome {
    let mut degrees = Vec::new();
    for k in 1..=4 {
        let c = ok(build_congruence(&fixtures::split_web(k)))?;
        let (comps, _) = ok(decompose_focal(&c, &c.focal_ideal(), &unit_points(k)))?;
        let residual = comps.last().ok_or("no components")?;
        ensure(residual.record.degree == 7 - k as u64, || format!("k = {k}: residual degree {}", residual.record.degree))?;
        degrees.push(residual.record.degree);
        let m = c.matrix();
        if k == 2 {
            let q = &(&m[2][4] * &m[3][5]) - &(&m[2][5] * &m[3][4]);
            ensure(ok(residual.ideal.contains(&q))?, || "k = 2: residual is not on the quadric L34 L45 - L35 L44".into())?;
        }
        if k == 3 {
            let x = |i| MultiPoly::var(c.vars(), i);
            let f = &(&x(0) * &m[3][0]) + &(&x(1) * &m[3][1]);
            let g = &(&x(4) * &m[3][4]) + &(&x(5) * &m[3][5]);
            let ci = ok(Ideal::new(c.vars(), vec![f, g]))?;
            ensure(ok(residual.ideal.same_ideal(&ci))?, || "k = 3: residual differs from the complete intersection".into())?;
        }
    }
    Ok(format!("residual degrees {degrees:?}; quadric (k = 2) and complete intersection (k = 3) confirmed"))
}

fn reducible_cases() -> Outcome {
    let mut summary = Vec::new();
    for case in 1..=4 {
        let w = fixtures::reducible_case(case);
        let s = ok(pfaffian_cubic(&w))?;
        let sp = ok(split_cubic(&s))?.ok_or(format!("case {case}: no linear factor"))?;
        let q = ok(s.poly.exact_divide(&sp.linear))?.ok_or(format!("case {case}: linear factor does not divide"))?;
        ensure(&q * &sp.linear == s.poly && q == sp.quadric, || format!("case {case}: bad division certificate"))?;
        let r = ok(classify(&w))?;
        ensure(r.label == Label::Reducible(case), || format!("case {case}: label {:?}", r.label))?;
        match case {
            1 | 2 => {
                let expect = if case == 1 {
                    vec![rat(2), rat(0), rat(3), rat(1)]
                } else {
                    vec![rat(1), ratio(5, 3), ratio(5, 2), ratio(5, 6)]
                };
                let residual = r.components.last().ok_or("no components")?;
                ensure(residual.hilbert.coeffs == expect, || format!("case {case}: residual P(t) {:?}", residual.hilbert.coeffs))?;
            }
            _ => {
                let mut d = r.component_degrees();
                d.sort();
                ensure(d == vec![3, 4], || format!("case {case}: component degrees {d:?}"))?;
            }
        }
        summary.push(format!("{case}:{:?}", r.component_degrees()));
    }
    Ok(format!("exact divisions; component degrees {}", summary.join(" ")))
}

fn lines_and_foci() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut count = 0;
    for f in fixtures::corpus() {
        let c = ok(build_congruence(&f.web))?;
        let n = c.n();
        let mut lines = Vec::new();
        while lines.len() < 100 {
            let p = random_point(&mut rng, n, 9);
            if c.is_focal(&p) {
                continue;
            }
            ensure(matrix::rank(&c.matrix_at(&p)) == n - 1, || format!("{}: rank", f.name))?;
            let l = ok(line_through_point(&c, &p))?;
            ensure(l.is_line() && l.contains_point(&p) && c.contains_line(&l), || format!("{}: bad line", f.name))?;
            lines.push(l);
        }
        for l in lines.iter().take(50) {
            let fs = ok(foci_on_line(&c, l))?;
            if fs.line_in_focal_locus {
                return Err(format!("{}: random line inside the focal locus", f.name));
            }
            ensure(fs.form.degree() == n - 1 && !fs.form.is_zero(), || format!("{}: focus form of degree {}", f.name, fs.form.degree()))?;
        }
        count += 1;
    }
    Ok(format!("{count} fixtures: 100 lines each, 50 focus forms of degree n - 1"))
}

fn pencil_degrees(c: &Congruence, plane_zero: &[usize], want: usize, rng: &mut ChaCha8Rng, name: &str) -> Result<(), String> {
    let mut done = 0;
    while done < 10 {
        let mut p = random_point(rng, c.n(), 9);
        for &i in plane_zero {
            p[i] = rat(0);
        }
        if p.iter().all(|x| *x == rat(0)) {
            continue;
        }
        ensure(c.is_focal(&p), || format!("{name}: point off the focal locus"))?;
        let d = ok(residual_plane_curve_degree(c, &p))?;
        ensure(d == want, || format!("{name}: residual curve of degree {d} at {p:?}"))?;
        done += 1;
    }
    Ok(())
}

fn pencil_planes() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for k in 1..=4 {
        let c = ok(build_congruence(&fixtures::split_web(k)))?;
        pencil_degrees(&c, &[0, 1], 3, &mut rng, &format!("af-k{k}"))?;
    }
    let c = ok(build_congruence(&fixtures::focal_plane_p4()))?;
    pencil_degrees(&c, &[0, 1], 2, &mut rng, "focal-plane-p4")?;
    Ok("cubic on the focal 3-spaces of af-k1..4, conic on the focal plane in P^4".into())
}

fn wave_temple() -> Outcome {
    let start = Instant::now();
    let sys = fixtures::wave_flux();
    let fam = line_family(&sys);
    let c = ok(build_congruence(&fixtures::wave_web()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let pm = [rat(-1), rat(1)];
    for _ in 0..50 {
        let u = vec![rat(rng.gen_range(-20..=20)), rat(rng.gen_range(-20..=20))];
        let (p, q) = ok(fam.points_at(&u))?;
        let l = ok(fam.line_at(&u))?;
        ensure(c.contains_line(&l), || format!("line at {u:?} is not a congruence line"))?;
        let fs = ok(foci_between(&c, &p, &q))?;
        let roots: Vec<_> = fs.real_roots.iter().map(|iv| iv.exact.clone()).collect();
        ensure(roots == vec![Some(pm[0].clone()), Some(pm[1].clone())], || format!("foci {roots:?} at {u:?}"))?;
        let r = ok(focus_eigenvalue_check(&sys, &u))?;
        let foci: Vec<_> = r.foci.iter().map(|iv| iv.exact.clone()).collect();
        ensure(r.agree && foci == roots, || format!("eigenvalues disagree at {u:?}"))?;
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(5), || format!("took {t:?}"))?;
    Ok(format!("50 lines meet both focal lines, foci at -1 and 1, in {t:.2?}"))
}

fn random_projectivity(rng: &mut ChaCha8Rng) -> Vec<Vec<Rational>> {
    loop {
        let g: Vec<Vec<Rational>> = (0..6).map(|_| (0..6).map(|_| rat(rng.gen_range(-2..=2))).collect()).collect();
        if matrix::rank(&g) == 6 {
            return g;
        }
    }
}

fn projective_invariance() -> Outcome {
    use rayon::prelude::*;
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for name in ["palatini-generic", "af-k2"] {
        let f = fixtures::by_name(name).unwrap();
        let c = ok(build_congruence(&f.web))?;
        let base = ok(classify(&f.web))?;
        let mut degs = base.component_degrees();
        degs.sort();
        // x -> g^-1 x keeps the transformed web integral
        let gs: Vec<_> = (0..20).map(|_| matrix::inverse(&random_projectivity(&mut rng)).unwrap()).collect();
        gs.par_iter().enumerate().try_for_each(|(i, g)| {
            let t = ok(c.apply_projectivity(g))?;
            let r = ok(classify(t.web()))?;
            let mut d = r.component_degrees();
            d.sort();
            ensure(r.label == base.label && d == degs, || format!("{name}, projectivity {i}: {:?} {d:?}", r.label))
        })?;
    }
    Ok(format!("{} and {} stable under 20 projectivities each", "palatini-generic", "af-k2"))
}

fn low_dimensional_labels() -> Outcome {
    for (name, want) in [("wave", Label::KleinJoin), ("tangent-p3", Label::KleinDoubleLine), ("generic-p4", Label::VeroneseTrisecants)] {
        let r = ok(classify_any(&fixtures::by_name(name).unwrap().web))?;
        ensure(r.label == want, || format!("{name}: {:?}", r.label))?;
    }
    Ok("wave, tangent-p3, generic-p4".into())
}

fn standard_monomials(lead: &[Vec<u16>], n: usize, d: usize) -> usize {
    fn rec(i: usize, left: usize, cur: &mut Vec<u16>, lead: &[Vec<u16>], n: usize) -> usize {
        if i == n - 1 {
            cur[i] = left as u16;
            let divisible = lead.iter().any(|g| g.iter().zip(cur.iter()).all(|(a, b)| a <= b));
            return usize::from(!divisible);
        }
        (0..=left)
            .map(|e| {
                cur[i] = e as u16;
                rec(i + 1, left - e, cur, lead, n)
            })
            .sum()
    }
    rec(0, d, &mut vec![0; n], lead, n)
}

fn oracles() -> Outcome {
    let corpus = fixtures::corpus();
    for f in &corpus {
        let name = f.name;
        let c = ok(build_congruence(&f.web))?;
        let ideal = c.focal_ideal();
        let n = ideal.vars().len();
        let lead: Vec<Vec<u16>> = ok(leading_ideal(&ideal))?.iter().map(|m| m.exponents().to_vec()).collect();
        let hf = ok(hilbert_function(&ideal, 8))?;
        for (d, v) in hf.iter().enumerate() {
            ensure(*v == BigInt::from(standard_monomials(&lead, n, d)), || format!("{name}: H({d}) = {v}"))?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for size in [4, 6] {
        for _ in 0..50 {
            let a = random_int_skew(&mut rng, size, 9);
            ensure(ok(a.pfaffian())? == ok(a.pfaffian_by_matchings())?, || format!("{size}x{size} Pfaffian mismatch"))?;
        }
    }
    Ok(format!("Hilbert functions in degrees 0..8 on {} focal ideals; Pfaffians on 100 matrices", corpus.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("Pf^2 = det on random 6x6 skew matrices", pfaffian_squares_to_determinant),
        ("Hilbert polynomial of generic focal loci", generic_focal_hilbert),
        ("split ladder residuals", split_ladder),
        ("reducible Pfaffian cubics", reducible_cases),
        ("lines through points and focus forms", lines_and_foci),
        ("pencil planes at focal points", pencil_planes),
        ("wave system is Temple with foci at -1 and 1", wave_temple),
        ("projective invariance of the classification", projective_invariance),
        ("labels in P^3 and P^4", low_dimensional_labels),
        ("Hilbert function and Pfaffian oracles", oracles),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let t = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {:2} PASS  {name}: {detail} [{t:.1?}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:2} FAIL  {name}: {why} [{t:.1?}]", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
