//! JSON input formats. Rationals are written as `"p/q"` strings; plain JSON integers are
//! accepted on input.

use std::path::Path;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::{format_rational, parse_rational, Rational};
use crate::congruence::SkewWeb;
use crate::error::{Error, Result};
use crate::fixtures;
use crate::grassmann::QSkew;
use crate::pde::FluxSystem;

/// An exact rational read from a JSON integer or a `"p/q"` string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Num(pub Rational);

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for Num {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(i) => Ok(Num(Rational::from_integer(i.into()))),
            Raw::Text(s) => parse_rational(&s).map(Num).map_err(serde::de::Error::custom),
        }
    }
}

fn nums(v: &[Rational]) -> Vec<Num> {
    v.iter().cloned().map(Num).collect()
}

/// A web of `n - 1` skew matrices of size `n + 1`, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WebFile {
    pub n: usize,
    pub matrices: Vec<Vec<Vec<Num>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixture: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl WebFile {
    pub fn from_web(web: &SkewWeb, fixture: Option<&str>, note: Option<&str>) -> WebFile {
        WebFile {
            n: web.n(),
            matrices: web.matrices().iter().map(|m| m.rows().iter().map(|r| nums(r)).collect()).collect(),
            fixture: fixture.map(str::to_string),
            note: note.map(str::to_string),
        }
    }

    /// Checks shape, skew-symmetry and independence.
    pub fn to_web(&self) -> Result<SkewWeb> {
        let n = self.n;
        if n < 2 {
            return Err(Error::Invalid(format!("ambient dimension {n} is too small")));
        }
        if self.matrices.len() != n - 1 {
            return Err(Error::Invalid(format!("a web in P^{n} needs {} matrices, found {}", n - 1, self.matrices.len())));
        }
        let mats = self
            .matrices
            .iter()
            .enumerate()
            .map(|(k, m)| {
                if m.len() != n + 1 || m.iter().any(|r| r.len() != n + 1) {
                    return Err(Error::Invalid(format!("matrix {k} is not {0}x{0}", n + 1)));
                }
                let rows = m.iter().map(|r| r.iter().map(|x| x.0.clone()).collect()).collect();
                QSkew::from_rows(rows).map_err(|e| Error::Invalid(format!("matrix {k}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        SkewWeb::new(n, mats)
    }

    pub fn parse(text: &str) -> Result<WebFile> {
        serde_json::from_str(text).map_err(|e| Error::Invalid(format!("web file: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("web files serialize")
    }
}

/// Fluxes `f^i = flux[i] / denominator` in `u1..um`, with optional samples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FluxFile {
    pub m: usize,
    pub flux: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub denominator: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<Vec<Vec<Num>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl FluxFile {
    pub fn from_system(sys: &FluxSystem, name: Option<&str>, note: Option<&str>) -> FluxFile {
        let den = if sys.has_polynomial_flux() { None } else { Some(sys.denominator().to_string()) };
        FluxFile {
            m: sys.m(),
            flux: sys.numerators().iter().map(|f| f.to_string()).collect(),
            denominator: den,
            samples: None,
            name: name.map(str::to_string),
            note: note.map(str::to_string),
        }
    }

    pub fn to_system(&self) -> Result<FluxSystem> {
        if self.flux.len() != self.m || self.m == 0 {
            return Err(Error::Invalid(format!("m = {} but {} flux components", self.m, self.flux.len())));
        }
        let flux: Vec<&str> = self.flux.iter().map(String::as_str).collect();
        FluxSystem::parse(&flux, self.denominator.as_deref())
    }

    /// Samples listed in the file; an explicit empty list is an error.
    pub fn sample_points(&self) -> Result<Option<Vec<Vec<Rational>>>> {
        match &self.samples {
            None => Ok(None),
            Some(s) if s.is_empty() => Err(Error::Invalid("empty sample list".into())),
            Some(s) => {
                if s.iter().any(|u| u.len() != self.m) {
                    return Err(Error::Invalid(format!("samples must have {} coordinates", self.m)));
                }
                Ok(Some(s.iter().map(|u| u.iter().map(|x| x.0.clone()).collect()).collect()))
            }
        }
    }

    pub fn parse(text: &str) -> Result<FluxFile> {
        serde_json::from_str(text).map_err(|e| Error::Invalid(format!("flux file: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("flux files serialize")
    }
}

/// Raw input: the file contents, or the canonical JSON of a built-in fixture.
pub struct Input {
    pub label: String,
    pub text: String,
}

fn read_or_builtin(arg: &str, builtin: impl Fn(&str) -> Option<String>) -> Result<Input> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("cannot read {arg}: {e}")))?;
        return Ok(Input { label: arg.to_string(), text });
    }
    match builtin(arg.strip_prefix("fixture:").unwrap_or(arg)) {
        Some(text) => Ok(Input { label: format!("fixture:{}", arg.strip_prefix("fixture:").unwrap_or(arg)), text }),
        None => Err(Error::Invalid(format!("`{arg}` is neither a readable file nor a built-in fixture"))),
    }
}

/// A web file path, or the name of a built-in web.
pub fn read_web_input(arg: &str) -> Result<Input> {
    read_or_builtin(arg, |name| fixtures::by_name(name).map(|f| WebFile::from_web(&f.web, Some(f.name), Some(f.note)).to_json()))
}

/// A flux file path, or the name of a built-in flux system.
pub fn read_flux_input(arg: &str) -> Result<Input> {
    read_or_builtin(arg, |name| {
        fixtures::flux_corpus()
            .into_iter()
            .find(|(n, _, _)| *n == name)
            .map(|(n, note, s)| FluxFile::from_system(&s, Some(n), Some(note)).to_json())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn web_files_round_trip() {
        for f in fixtures::corpus() {
            let wf = WebFile::from_web(&f.web, Some(f.name), None);
            let back = WebFile::parse(&wf.to_json()).unwrap();
            assert_eq!(back, wf);
            assert_eq!(back.to_web().unwrap(), f.web);
        }
    }

    #[test]
    fn integers_and_fractions_are_accepted() {
        let text = r#"{"n": 3, "matrices": [
            [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, "1/2"], [0, 0, "-1/2", 0]],
            [[0, 0, 1, 0], [0, 0, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 0]]]}"#;
        assert!(WebFile::parse(text).unwrap().to_web().is_ok());
    }

    #[test]
    fn non_skew_is_rejected() {
        let text = r#"{"n": 3, "matrices": [
            [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]],
            [[0, 0, 1, 0], [0, 0, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 0]]]}"#;
        assert!(matches!(WebFile::parse(text).unwrap().to_web(), Err(Error::Invalid(_))));
    }

    #[test]
    fn flux_files() {
        let f = FluxFile::parse(r#"{"m": 2, "flux": ["-u2", "-u1"], "samples": [[1, "1/2"]]}"#).unwrap();
        assert_eq!(f.to_system().unwrap().m(), 2);
        assert_eq!(f.sample_points().unwrap().unwrap().len(), 1);
        let e = FluxFile::parse(r#"{"m": 1, "flux": ["u1^2"], "samples": []}"#).unwrap();
        assert!(e.sample_points().is_err());
    }
}
