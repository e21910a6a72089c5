//! Commands behind the `plueckerlab` binary: each reads a web or flux file (or a built-in
//! fixture name), runs one stage of the pipeline and returns a [`Report`].

pub mod files;

use std::fmt::Write as _;
use std::time::Instant;

use num_traits::ToPrimitive;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::arith::{format_rational, parse_point, Rational};
use crate::classify5::{classify_any, generic_member, rank_locus, split_cubic, PfaffianCubic};
use crate::congruence::{
    build_congruence, foci_on_line, line_through_point, pencil_plane, random_point, residual_plane_curve_degree,
    Congruence, FocusSet,
};
use crate::error::{Error, Result};
use crate::grassmann::PluckerVector;
use crate::groebner::{hilbert_polynomial, HilbertPolynomial};
use crate::pde::{eigen_data, focus_eigenvalue_check, is_temple, random_samples, TempleVerdict};
use files::{read_flux_input, read_web_input, FluxFile, Input, WebFile};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Default number of random samples for `temple`.
pub const DEFAULT_SAMPLES: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Classify,
    Foci,
    Hilbert,
    Temple,
    Pfaffian,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Classify => "classify",
            Command::Foci => "foci",
            Command::Hilbert => "hilbert",
            Command::Temple => "temple",
            Command::Pfaffian => "pfaffian",
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct Options {
    pub seed: u64,
    pub samples: Option<usize>,
    pub line: Option<String>,
    pub point: Option<String>,
    pub pencil: bool,
    /// `focal`, `residual` or `residual:<component>`.
    pub ideal: Option<String>,
}

/// Output of one command. Everything except `elapsed_ms` is determined by the input,
/// the options and the version.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub input: String,
    /// SHA-256 of the input text.
    pub input_digest: String,
    pub version: String,
    pub elapsed_ms: u64,
    pub result: Value,
    pub notes: Vec<String>,
    #[serde(skip)]
    pub text: String,
}

/// Exit status for an error: 2 for bad input, 3 for unsupported configurations and 4 for
/// internal contract violations.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. }
        | Error::UnknownVariable(_)
        | Error::Invalid(_)
        | Error::NotSkew(_)
        | Error::Dimension(_)
        | Error::DependentWeb
        | Error::FocalPoint { .. }
        | Error::NotFocalPoint
        | Error::NotCongruenceLine
        | Error::DegenerateFocus(_)
        | Error::CoincidentPoints
        | Error::Sample(_)
        | Error::Singular => 2,
        Error::Unsupported(_) | Error::SaturationCap(_) | Error::PlaneInFocalLocus | Error::OddPfaffian(_) => 3,
        _ => 4,
    }
}

pub fn run(cmd: Command, input: &str, opts: &Options) -> Result<Report> {
    let start = Instant::now();
    let (inp, (result, text, notes)) = match cmd {
        Command::Temple => {
            let inp = read_flux_input(input)?;
            let out = cmd_temple(&inp, opts)?;
            (inp, out)
        }
        _ => {
            let inp = read_web_input(input)?;
            let wf = WebFile::parse(&inp.text)?;
            let out = match cmd {
                Command::Classify => cmd_classify(&wf)?,
                Command::Foci => cmd_foci(&wf, opts)?,
                Command::Hilbert => cmd_hilbert(&wf, opts)?,
                _ => cmd_pfaffian(&wf)?,
            };
            (inp, out)
        }
    };
    let digest = hex::encode(Sha256::digest(inp.text.as_bytes()));
    Ok(Report {
        command: cmd.name().into(),
        input: inp.label,
        input_digest: digest,
        version: VERSION.into(),
        elapsed_ms: start.elapsed().as_millis() as u64,
        result,
        notes,
        text,
    })
}

type Output = (Value, String, Vec<String>);

fn fixture_notes(wf: &WebFile) -> Vec<String> {
    match (&wf.fixture, &wf.note) {
        (Some(f), Some(n)) => vec![format!("fixture {f}: {n}")],
        (Some(f), None) => vec![format!("fixture {f}")],
        (None, Some(n)) => vec![n.clone()],
        _ => Vec::new(),
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn hp_string(h: &HilbertPolynomial) -> String {
    h.to_poly().to_string()
}

pub fn cmd_classify(wf: &WebFile) -> Result<Output> {
    let web = wf.to_web()?;
    let r = classify_any(&web)?;
    let mut t = String::new();
    writeln!(t, "label: {}", r.label).unwrap();
    if !r.description.is_empty() && r.description != r.label.to_string() {
        writeln!(t, "{}", r.description).unwrap();
    }
    if let Some(c) = &r.cubic {
        writeln!(t, "Pfaffian: {c}").unwrap();
    }
    writeln!(t, "focal scheme: dimension {}, degree {}, P(t) = {}", r.focal.dimension, r.focal.degree, hp_string(&r.focal.hilbert))
        .unwrap();
    for c in &r.components {
        let par = match c.parasitic {
            Some(true) => ", parasitic",
            _ => "",
        };
        writeln!(t, "  {}: {} (dimension {}, degree {}{par}, P(t) = {})", c.name, c.description, c.dimension, c.degree, hp_string(&c.hilbert))
            .unwrap();
    }
    let mut notes = fixture_notes(wf);
    notes.extend(r.notes.iter().cloned());
    Ok((to_value(&r), t, notes))
}

fn focus_text(t: &mut String, f: &FocusSet) {
    writeln!(t, "line: {}", f.line).unwrap();
    if f.line_in_focal_locus {
        writeln!(t, "the line lies in the focal locus").unwrap();
        return;
    }
    let c: Vec<String> = f.form.coeffs().iter().map(format_rational).collect();
    writeln!(t, "focus form (coefficients of l^i m^(d-i)): [{}]", c.join(", ")).unwrap();
    for iv in &f.real_roots {
        let approx = iv.midpoint().to_f64().unwrap_or(f64::NAN);
        writeln!(t, "  focus at l/m ~ {approx:.6}, isolated in {iv}").unwrap();
    }
    if f.root_at_infinity > 0 {
        writeln!(t, "  focus at m = 0 (multiplicity {})", f.root_at_infinity).unwrap();
    }
    writeln!(t, "multiplicities over C: {:?}", f.multiplicities).unwrap();
}

fn random_line(c: &Congruence, seed: u64) -> Result<(Vec<Rational>, PluckerVector)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..100 {
        let p = random_point(&mut rng, c.n(), 10);
        match line_through_point(c, &p) {
            Ok(l) => return Ok((p, l.normalized())),
            Err(Error::FocalPoint { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::Sample("no off-focal random point found".into()))
}

pub fn cmd_foci(wf: &WebFile, opts: &Options) -> Result<Output> {
    let c = build_congruence(&wf.to_web()?)?;
    let n = c.n();
    let mut t = String::new();
    let point = opts.point.as_deref().map(parse_point).transpose()?;
    if let Some(p) = &point {
        if p.len() != n + 1 {
            return Err(Error::Invalid(format!("point with {} coordinates in P^{n}", p.len())));
        }
    }
    if opts.pencil {
        let p = point.ok_or_else(|| Error::Invalid("--pencil needs --point".into()))?;
        let plane = pencil_plane(&c, &p)?;
        let deg = residual_plane_curve_degree(&c, &p)?;
        writeln!(t, "pencil plane: {plane}").unwrap();
        writeln!(t, "residual focal curve in the plane: degree {deg}").unwrap();
        let forms: Vec<Vec<String>> = plane.forms().iter().map(|f| f.iter().map(format_rational).collect()).collect();
        let v = json!({
            "mode": "pencil",
            "point": p.iter().map(format_rational).collect::<Vec<_>>(),
            "plane_forms": forms,
            "residual_curve_degree": deg,
        });
        return Ok((v, t, fixture_notes(wf)));
    }
    let (mode, p, l) = match (&opts.line, point) {
        (Some(_), Some(_)) => return Err(Error::Invalid("give either --line or --point".into())),
        (Some(s), None) => {
            let l = PluckerVector::new(n, parse_point(s)?)?;
            if !l.is_line() {
                return Err(Error::Invalid("the Plücker vector violates the Plücker relations".into()));
            }
            ("line", None, l)
        }
        (None, Some(p)) => {
            let l = line_through_point(&c, &p)?.normalized();
            ("point", Some(p), l)
        }
        (None, None) => {
            let (p, l) = random_line(&c, opts.seed)?;
            ("random", Some(p), l)
        }
    };
    let f = foci_on_line(&c, &l)?;
    if let Some(p) = &p {
        let s: Vec<String> = p.iter().map(format_rational).collect();
        writeln!(t, "point: ({})", s.join(" : ")).unwrap();
    }
    focus_text(&mut t, &f);
    let v = json!({
        "mode": mode,
        "point": p.map(|p| p.iter().map(format_rational).collect::<Vec<_>>()),
        "foci": to_value(&f),
    });
    Ok((v, t, fixture_notes(wf)))
}

pub fn cmd_hilbert(wf: &WebFile, opts: &Options) -> Result<Output> {
    let web = wf.to_web()?;
    let which = opts.ideal.clone().unwrap_or_else(|| "focal".into());
    let (name, h) = if which == "focal" {
        let c = build_congruence(&web)?;
        ("focal".to_string(), hilbert_polynomial(&c.focal_ideal())?)
    } else {
        let comp = match which.as_str() {
            "residual" => "residual",
            w => w.strip_prefix("residual:").ok_or_else(|| Error::Invalid(format!("unknown ideal `{w}`")))?,
        };
        let r = classify_any(&web)?;
        let rec = r.components.iter().find(|c| c.name == comp).ok_or_else(|| {
            let names: Vec<&str> = r.components.iter().map(|c| c.name.as_str()).collect();
            Error::Invalid(format!("no component `{comp}`; this web has {names:?}"))
        })?;
        (comp.to_string(), rec.hilbert.clone())
    };
    let t = format!("{name}: P(t) = {}\ndimension {}, degree {}\n", hp_string(&h), h.dimension, h.degree);
    let v = json!({ "ideal": name, "polynomial": hp_string(&h), "hilbert": to_value(&h) });
    Ok((v, t, fixture_notes(wf)))
}

pub fn cmd_pfaffian(wf: &WebFile) -> Result<Output> {
    let web = wf.to_web()?;
    let n = web.n();
    let mut t = String::new();
    if n % 2 == 1 {
        let pf = generic_member(&web).pfaffian()?;
        writeln!(t, "Pf = {pf}").unwrap();
        let mut v = json!({ "n": n, "pfaffian": pf.to_string(), "degree": (n + 1) / 2 });
        if n == 5 {
            let s = PfaffianCubic { poly: pf.clone() };
            if let Some(sp) = split_cubic(&s)? {
                writeln!(t, "Pf = ({}) * ({}), quadric rank {}", sp.linear, sp.quadric, sp.quadric_rank).unwrap();
                v["linear_factor"] = json!(sp.linear.to_string());
                v["quadric"] = json!(sp.quadric.to_string());
                v["quadric_rank"] = json!(sp.quadric_rank);
            }
        }
        return Ok((v, t, fixture_notes(wf)));
    }
    if n != 4 {
        return Err(Error::Unsupported(format!("no Pfaffian data for even n = {n} beyond n = 4")));
    }
    let ideal = rank_locus(&web, 2)?;
    let h = hilbert_polynomial(&ideal)?;
    let gens: Vec<String> = ideal.generators().iter().map(|g| g.to_string()).collect();
    writeln!(t, "4x4 sub-Pfaffians of the generic member:").unwrap();
    for g in &gens {
        writeln!(t, "  {g}").unwrap();
    }
    writeln!(t, "rank-two locus: dimension {}, degree {}", h.dimension, h.degree).unwrap();
    let v = json!({ "n": n, "sub_pfaffians": gens, "rank_two_locus": to_value(&h) });
    Ok((v, t, fixture_notes(wf)))
}

fn cmd_temple(inp: &Input, opts: &Options) -> Result<Output> {
    let ff = FluxFile::parse(&inp.text)?;
    let sys = ff.to_system()?;
    let samples = match ff.sample_points()? {
        Some(s) => s,
        None => {
            let k = opts.samples.unwrap_or(DEFAULT_SAMPLES);
            if k == 0 {
                return Err(Error::Invalid("empty sample list".into()));
            }
            random_samples(&sys, k, opts.seed, 10)
        }
    };
    let report = is_temple(&sys, &samples)?;
    let mut checks = Vec::new();
    for u in &samples {
        if eigen_data(&sys, u)?.strictly_hyperbolic {
            let r = focus_eigenvalue_check(&sys, u)?;
            if !r.agree {
                return Err(Error::Contract(format!("foci and eigenvalues differ at {:?}", r.u)));
            }
            checks.push(r);
        }
    }
    let mut t = String::new();
    let f: Vec<String> = sys.numerators().iter().map(|g| g.to_string()).collect();
    writeln!(t, "flux: ({}){}", f.join(", "), if sys.has_polynomial_flux() { String::new() } else { format!(" / ({})", sys.denominator()) })
        .unwrap();
    match &report.verdict {
        TempleVerdict::TempleAtSamples => writeln!(t, "verdict: temple_at_samples").unwrap(),
        TempleVerdict::NotTemple { witness } => {
            let u: Vec<String> = witness.u.iter().map(format_rational).collect();
            writeln!(t, "verdict: not_temple ({:?} fails for family {} at u = ({}), eigenvalue {})", witness.condition, witness.family, u.join(", "), witness.eigenvalue)
                .unwrap();
        }
        TempleVerdict::NotStrictlyHyperbolic { .. } => writeln!(t, "verdict: not strictly hyperbolic at any sample").unwrap(),
    }
    writeln!(t, "samples: {} ({} not strictly hyperbolic, skipped)", report.samples, report.skipped).unwrap();
    writeln!(t, "foci equal eigenvalues at {} sample(s)", checks.len()).unwrap();
    writeln!(t, "{}", report.certificate).unwrap();
    let v = json!({
        "flux": f,
        "denominator": sys.denominator().to_string(),
        "samples": samples.iter().map(|u| u.iter().map(format_rational).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "temple": to_value(&report),
        "focus_checks": to_value(&checks),
    });
    let mut notes = Vec::new();
    if let (Some(n), Some(d)) = (&ff.name, &ff.note) {
        notes.push(format!("flux {n}: {d}"));
    }
    Ok((v, t, notes))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> Options {
        Options { seed: 1, ..Default::default() }
    }

    #[test]
    fn classify_builtin() {
        let r = run(Command::Classify, "wave", &opts()).unwrap();
        assert_eq!(r.result["label"]["kind"], "klein_join");
        assert!(r.notes[0].starts_with("fixture wave"));
        let back: Report = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        assert_eq!(back.result, r.result);
    }

    #[test]
    fn exit_codes() {
        let e = run(Command::Classify, "/nonexistent/web.json", &opts()).unwrap_err();
        assert_eq!(exit_code(&e), 2);
        assert_eq!(exit_code(&Error::Unsupported("x".into())), 3);
        assert_eq!(exit_code(&Error::Contract("x".into())), 4);
    }

    #[test]
    fn foci_through_point() {
        let o = Options { point: Some("(1:3:5:2)".into()), ..opts() };
        let r = run(Command::Foci, "wave", &o).unwrap();
        assert_eq!(r.result["foci"]["real_roots"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn temple_builtin() {
        let r = run(Command::Temple, "wave", &Options { samples: Some(5), ..opts() }).unwrap();
        assert_eq!(r.result["temple"]["verdict"]["verdict"], "temple_at_samples");
        let b = run(Command::Temple, "burgers", &opts()).unwrap();
        assert_eq!(b.result["temple"]["verdict"]["verdict"], "not_temple");
    }
}
