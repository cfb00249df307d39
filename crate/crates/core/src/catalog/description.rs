use std::collections::HashMap;

use serde::Serialize;

use super::report::{kind_name, to_spaced_json, JsonEquivalence};
use super::{DistanceCheck, ReportFormat};
use crate::codes::{Code, CodeOverR, EquivalenceReport, GrayParams, ShiftKind};
use crate::error::{Error, Result};
use crate::finite_field::{gcd, parse_u64, Automorphism, FieldSpec};
use crate::ring_r::RingElement;
use crate::skew_poly::{FqPoly, RPoly};

#[derive(Clone, Debug, PartialEq)]
pub enum GeneratorSource {
    Generator(RPoly),
    Components([FqPoly; 3]),
}

/// A code given by a text file of `key: value` lines.
///
/// ```text
/// # comments and blank lines are ignored
/// field: p=3 m=2 mod=1,0,1
/// t: 1
/// alpha: 1|1|1
/// n: 7
/// generator: 1|0|0,1|1|1,1|0|0,1|1|1,1|0|0,1|1|1,1|0|0
/// ```
///
/// Instead of `generator`, the lines `f1`, `f2`, `f3` give component generators over `F_q`.
#[derive(Clone, Debug, PartialEq)]
pub struct CodeDescription {
    pub aut: Automorphism,
    pub alpha: RingElement,
    pub n: usize,
    pub source: GeneratorSource,
}

const KEYS: [&str; 8] = ["field", "t", "alpha", "n", "generator", "f1", "f2", "f3"];

impl CodeDescription {
    pub fn parse(text: &str) -> Result<CodeDescription> {
        let mut values: HashMap<&str, &str> = HashMap::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once(':').ok_or_else(|| {
                Error::Parse(format!("line {}: expected `key: value`", lineno + 1))
            })?;
            let key = key.trim();
            if !KEYS.contains(&key) {
                return Err(Error::Parse(format!(
                    "line {}: unknown key {key:?}",
                    lineno + 1
                )));
            }
            if values.insert(key, value.trim()).is_some() {
                return Err(Error::Parse(format!(
                    "line {}: duplicate key {key:?}",
                    lineno + 1
                )));
            }
        }
        let get = |k: &str| {
            values
                .get(k)
                .copied()
                .ok_or_else(|| Error::Parse(format!("missing key {k:?}")))
        };

        let spec: FieldSpec = get("field")?.parse()?;
        let t = u32::try_from(parse_u64(get("t")?)?)
            .map_err(|_| Error::Parse("t is too large".into()))?;
        let aut = Automorphism::new(spec, t)?;
        let alpha = RingElement::parse(spec, get("alpha")?)?;
        let n = usize::try_from(parse_u64(get("n")?)?)
            .map_err(|_| Error::Parse("n is too large".into()))?;
        if n == 0 {
            return Err(Error::Parse("n must be positive".into()));
        }
        let has_components = ["f1", "f2", "f3"].iter().any(|k| values.contains_key(k));
        let source = match (values.get("generator"), has_components) {
            (Some(g), false) => GeneratorSource::Generator(RPoly::parse(g, aut)?),
            (None, true) => GeneratorSource::Components([
                FqPoly::parse(get("f1")?, aut)?,
                FqPoly::parse(get("f2")?, aut)?,
                FqPoly::parse(get("f3")?, aut)?,
            ]),
            (Some(_), true) => {
                return Err(Error::Parse(
                    "give either `generator` or `f1`..`f3`, not both".into(),
                ))
            }
            (None, false) => return Err(Error::Parse("missing `generator` or `f1`..`f3`".into())),
        };
        Ok(CodeDescription {
            aut,
            alpha,
            n,
            source,
        })
    }

    pub fn build(&self) -> Result<CodeOverR> {
        match &self.source {
            GeneratorSource::Generator(f) => CodeOverR::from_generator_poly(f, self.n, self.alpha),
            GeneratorSource::Components(fs) => {
                let betas = self.alpha.split();
                let mut codes = Vec::with_capacity(3);
                for (f, beta) in fs.iter().zip(betas) {
                    codes.push(Code::from_right_divisor(f, self.n, beta)?);
                }
                let c3 = codes.pop().expect("three components");
                let c2 = codes.pop().expect("three components");
                let c1 = codes.pop().expect("three components");
                CodeOverR::from_components(c1, c2, c3, self.alpha, self.aut)
            }
        }
    }
}

/// Parameters and structural properties of one code.
#[derive(Clone, Debug, PartialEq)]
pub struct CodeReport {
    pub n: usize,
    pub k_components: [usize; 3],
    pub generator: Option<String>,
    pub gray_params: GrayParams,
    pub distance_check: DistanceCheck,
    pub invariances: Vec<String>,
    pub equivalence: Option<EquivalenceReport>,
    pub self_dual: bool,
}

#[derive(Serialize)]
struct JsonCodeReport<'a> {
    n: usize,
    k_components: [usize; 3],
    generator: Option<&'a str>,
    gray_params: (usize, usize, Option<usize>),
    distance_check: &'static str,
    invariances: &'a [String],
    equivalence: Option<JsonEquivalence>,
    self_dual: bool,
}

impl CodeReport {
    pub fn render(&self, format: ReportFormat) -> Result<String> {
        let p = self.gray_params;
        match format {
            ReportFormat::Json => {
                let json = JsonCodeReport {
                    n: self.n,
                    k_components: self.k_components,
                    generator: self.generator.as_deref(),
                    gray_params: (p.length, p.dimension, p.distance),
                    distance_check: self.distance_check.as_str(),
                    invariances: &self.invariances,
                    equivalence: self.equivalence.as_ref().map(JsonEquivalence::from),
                    self_dual: self.self_dual,
                };
                Ok(format!("{}\n", to_spaced_json(&json)?))
            }
            ReportFormat::Csv => {
                let mut w = csv::WriterBuilder::new()
                    .terminator(csv::Terminator::Any(b'\n'))
                    .from_writer(Vec::new());
                let csv_err = |e: csv::Error| Error::Io(e.to_string());
                w.write_record([
                    "n",
                    "k1",
                    "k2",
                    "k3",
                    "generator",
                    "length",
                    "dimension",
                    "distance",
                    "distance_check",
                    "invariances",
                    "gcd_l",
                    "equivalence",
                    "verified",
                    "self_dual",
                ])
                .map_err(csv_err)?;
                let eq = self.equivalence.as_ref();
                w.write_record([
                    self.n.to_string(),
                    self.k_components[0].to_string(),
                    self.k_components[1].to_string(),
                    self.k_components[2].to_string(),
                    self.generator.clone().unwrap_or_default(),
                    p.length.to_string(),
                    p.dimension.to_string(),
                    p.distance.map(|d| d.to_string()).unwrap_or_default(),
                    self.distance_check.as_str().to_string(),
                    self.invariances.join(";"),
                    eq.map(|r| r.gcd_l.to_string()).unwrap_or_default(),
                    eq.map(|r| kind_name(r.kind).to_string())
                        .unwrap_or_default(),
                    eq.map(|r| r.verified.to_string()).unwrap_or_default(),
                    self.self_dual.to_string(),
                ])
                .map_err(csv_err)?;
                let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
                String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
            }
        }
    }
}

/// Computes the report for `code`. With `strict`, a distance that exceeds
/// `limit` is an error instead of an unverified entry.
pub fn code_report(code: &CodeOverR, limit: u64, strict: bool) -> Result<CodeReport> {
    let (distance, check) = match code.min_lee_distance(limit) {
        Ok(d) => {
            let small = code.cardinality().is_some_and(|s| s <= u128::from(limit));
            if small {
                let direct = code.gray_min_distance(limit)?;
                if direct != d {
                    return Err(Error::VerificationFailed(format!(
                        "Gray distance {direct} differs from component distance {d}"
                    )));
                }
                (Some(d), DistanceCheck::CrossChecked)
            } else {
                (Some(d), DistanceCheck::ComponentOnly)
            }
        }
        Err(Error::ZeroCode) => (None, DistanceCheck::Undefined),
        Err(e @ Error::EnumerationTooLarge { .. }) if strict => return Err(e),
        Err(Error::EnumerationTooLarge { .. }) => (None, DistanceCheck::Unverified),
        Err(e) => return Err(e),
    };

    let alpha = code.alpha();
    let skew = code.is_skew_constacyclic()?;
    let mut invariances = Vec::new();
    if skew {
        invariances.push("skew-constacyclic".to_string());
    }
    if code.is_invariant(&ShiftKind::Constacyclic { alpha })? {
        invariances.push("constacyclic".to_string());
    }
    let l = gcd(code.len(), code.automorphism().order());
    if l > 1
        && code.is_invariant(&ShiftKind::QuasiTwisted {
            alpha,
            block_len: l,
        })?
    {
        invariances.push(format!("quasi-twisted-{l}"));
    }
    let equivalence = if skew && alpha.is_self_inverse() {
        Some(code.equivalence_report()?)
    } else {
        None
    };

    Ok(CodeReport {
        n: code.len(),
        k_components: code.components().clone().map(|c| c.dimension()),
        generator: code.generator_poly().ok().map(|f| f.to_string()),
        gray_params: GrayParams {
            length: 3 * code.len(),
            dimension: code.gray_dimension(),
            distance,
        },
        distance_check: check,
        invariances,
        equivalence,
        self_dual: code.is_self_dual(),
    })
}
