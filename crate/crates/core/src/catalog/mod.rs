//! Divisor enumeration and code search over `R`.

mod description;
mod report;

pub use description::{code_report, CodeDescription, CodeReport, GeneratorSource};
pub use report::{emit_report, render_report, ReportFormat};

use std::collections::BTreeMap;

use crate::codes::{Code, CodeOverR, EquivalenceKind, EquivalenceReport, GrayParams, ShiftKind};
use crate::error::{Error, Result};
use crate::finite_field::{gcd, Automorphism, FieldElement, FieldSpec};
use crate::ring_r::RingElement;
use crate::skew_poly::{FqPoly, RPoly};

/// Largest `n` accepted by [`factor_xn_minus_beta`].
pub const MAX_FACTOR_LENGTH: usize = 20;
/// Largest field order accepted by [`factor_xn_minus_beta`].
pub const MAX_FACTOR_FIELD: u32 = 49;
const MAX_CANDIDATES: u64 = 10_000_000;

/// Monic irreducible factors of `x^n - beta` in the commutative ring `F_q[x]`,
/// with multiplicity, sorted by degree and then coefficients.
pub fn factor_xn_minus_beta(n: usize, beta: FieldElement) -> Result<Vec<FqPoly>> {
    let spec = beta.spec();
    if beta.is_zero() {
        return Err(Error::BetaZero);
    }
    if n == 0 || n > MAX_FACTOR_LENGTH {
        return Err(Error::SearchBound(format!(
            "n = {n} must lie in 1..={MAX_FACTOR_LENGTH}"
        )));
    }
    if spec.q() > MAX_FACTOR_FIELD {
        return Err(Error::SearchBound(format!(
            "q = {} exceeds {MAX_FACTOR_FIELD}",
            spec.q()
        )));
    }
    let id = Automorphism::identity(spec);
    let mut rest = FqPoly::x_n_minus(n, beta, id);
    let mut factors = Vec::new();
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        let count = u64::from(spec.q()).pow(d as u32);
        if count > MAX_CANDIDATES {
            return Err(Error::SearchBound(format!(
                "{count} trial divisors of degree {d}"
            )));
        }
        for index in 0..count {
            let candidate = monic_candidate(spec, d, index, id);
            loop {
                let (quot, rem) = rest.right_divmod(&candidate)?;
                if !rem.is_zero() {
                    break;
                }
                factors.push(candidate.clone());
                rest = quot;
            }
            if rest.degree().unwrap_or(0) < 2 * d {
                break;
            }
        }
        d += 1;
    }
    if rest.degree().unwrap_or(0) >= 1 {
        factors.push(rest);
    }
    factors.sort_by_key(poly_key);
    Ok(factors)
}

/// The monic polynomial of degree `d` whose lower coefficients are the base-`q`
/// digits of `index`.
fn monic_candidate(spec: FieldSpec, d: usize, mut index: u64, aut: Automorphism) -> FqPoly {
    let q = u64::from(spec.q());
    let mut coeffs = Vec::with_capacity(d + 1);
    for _ in 0..d {
        coeffs.push(FieldElement::from_raw(spec, (index % q) as u32));
        index /= q;
    }
    coeffs.push(spec.one());
    FqPoly::from_parts(coeffs, aut)
}

fn poly_key(f: &FqPoly) -> (usize, Vec<u32>) {
    let mut values: Vec<u32> = f.coeffs().iter().map(|c| c.value()).collect();
    values.reverse();
    (f.coeffs().len(), values)
}

/// Monic commutative divisors of `x^n - beta` that are also right divisors in
/// the skew ring of `aut`, sorted by degree and then coefficients.
pub fn component_divisors(n: usize, beta: FieldElement, aut: Automorphism) -> Result<Vec<FqPoly>> {
    if !aut.fixes(beta) {
        return Err(Error::BadUnit(beta.to_string()));
    }
    let factors = factor_xn_minus_beta(n, beta)?;
    let mut distinct: Vec<(FqPoly, usize)> = Vec::new();
    for f in factors {
        match distinct.last_mut() {
            Some((g, m)) if *g == f => *m += 1,
            _ => distinct.push((f, 1)),
        }
    }
    let id = Automorphism::identity(beta.spec());
    let modulus = FqPoly::x_n_minus(n, beta, aut);
    let mut out = Vec::new();
    let mut exps = vec![0usize; distinct.len()];
    loop {
        let mut product = FqPoly::one(id);
        for ((f, _), &e) in distinct.iter().zip(&exps) {
            for _ in 0..e {
                product = product.mul(f)?;
            }
        }
        let candidate = product.with_automorphism(aut)?;
        if candidate.is_right_divisor_of(&modulus)? {
            out.push(candidate);
        }
        let Some(i) = (0..exps.len()).find(|&i| exps[i] < distinct[i].1) else {
            break;
        };
        exps[i] += 1;
        exps[..i].iter_mut().for_each(|e| *e = 0);
    }
    out.sort_by_key(poly_key);
    out.dedup();
    Ok(out)
}

/// All right divisors `(1-u-v) f_1 + u f_2 + v f_3` of `x^n - alpha` built from
/// the component divisors, each re-verified over `R`.
pub fn enumerate_right_divisors(
    n: usize,
    alpha: RingElement,
    aut: Automorphism,
) -> Result<Vec<RPoly>> {
    crate::codes::validate_unit(alpha, &aut)?;
    let lists = component_lists(n, alpha, aut)?;
    let modulus = RPoly::x_n_minus(n, alpha, aut);
    let mut out = Vec::new();
    for f1 in &lists[0] {
        for f2 in &lists[1] {
            for f3 in &lists[2] {
                let f = RPoly::join(f1, f2, f3)?;
                if !f.is_right_divisor_of(&modulus)? {
                    return Err(Error::VerificationFailed(format!(
                        "{f} does not divide x^{n} - alpha"
                    )));
                }
                out.push(f);
            }
        }
    }
    Ok(out)
}

fn component_lists(n: usize, alpha: RingElement, aut: Automorphism) -> Result<[Vec<FqPoly>; 3]> {
    let [b1, b2, b3] = alpha.split();
    Ok([
        component_divisors(n, b1, aut)?,
        component_divisors(n, b2, aut)?,
        component_divisors(n, b3, aut)?,
    ])
}

/// A search over all codes `<f>` with `f` a right divisor of `x^n - alpha`.
#[derive(Clone, Debug)]
pub struct SearchJob {
    pub aut: Automorphism,
    pub n: usize,
    pub alpha: RingElement,
    /// Bound on codewords visited per distance computation.
    pub limit: u64,
}

/// How the reported distance was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DistanceCheck {
    /// Component distances agree with a computation on the Gray image itself.
    CrossChecked,
    /// Component distances only; the Gray image exceeded the limit.
    ComponentOnly,
    /// A component distance exceeded the limit.
    Unverified,
    /// The zero code.
    Undefined,
}

impl DistanceCheck {
    pub fn as_str(self) -> &'static str {
        match self {
            DistanceCheck::CrossChecked => "cross-checked",
            DistanceCheck::ComponentOnly => "component-only",
            DistanceCheck::Unverified => "unverified",
            DistanceCheck::Undefined => "undefined",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CatalogEntry {
    /// Monic component generators `f_1, f_2, f_3`.
    pub components: [String; 3],
    pub generator: String,
    pub gray_params: GrayParams,
    pub distance_check: DistanceCheck,
    /// `None` unless `alpha^2 = 1`.
    pub equivalence: Option<EquivalenceReport>,
    pub self_dual: bool,
}

struct ComponentInfo {
    poly: FqPoly,
    code: Code,
    distance: Result<usize>,
    self_dual: bool,
    equivalent: bool,
}

/// Builds every code of the job and sorts by distance (descending, undefined
/// and unverified last), then dimension (descending), then generator text.
pub fn run_search(job: &SearchJob) -> Result<Vec<CatalogEntry>> {
    let aut = job.aut;
    let n = job.n;
    if job.limit == 0 {
        return Err(Error::SearchBound("limit must be at least 1".into()));
    }
    crate::codes::validate_unit(job.alpha, &aut)?;
    let betas = job.alpha.split();
    let lists = component_lists(n, job.alpha, aut)?;
    let l = gcd(n, aut.order());
    let with_equivalence = job.alpha.is_self_inverse();

    let mut infos: Vec<Vec<ComponentInfo>> = Vec::with_capacity(3);
    for (list, &beta) in lists.iter().zip(&betas) {
        let shift = if l == 1 {
            ShiftKind::Constacyclic { alpha: beta }
        } else {
            ShiftKind::QuasiTwisted {
                alpha: beta,
                block_len: l,
            }
        };
        let mut row = Vec::with_capacity(list.len());
        for poly in list {
            let code = Code::from_right_divisor(poly, n, beta)?;
            let distance = code.min_distance(job.limit);
            if let Err(e) = &distance {
                if !matches!(e, Error::ZeroCode | Error::EnumerationTooLarge { .. }) {
                    return Err(e.clone());
                }
            }
            let skew = ShiftKind::SkewConstacyclic { alpha: beta, aut };
            if !code.is_invariant(&skew)? {
                return Err(Error::VerificationFailed(format!(
                    "<{poly}> is not skew constacyclic"
                )));
            }
            row.push(ComponentInfo {
                self_dual: code.is_self_dual(),
                equivalent: code.is_invariant(&shift)?,
                poly: poly.clone(),
                code,
                distance,
            });
        }
        infos.push(row);
    }

    let q = u128::from(aut.spec().q());
    let mut entries = Vec::new();
    for c1 in &infos[0] {
        for c2 in &infos[1] {
            for c3 in &infos[2] {
                let parts = [c1, c2, c3];
                let generator = RPoly::join(&c1.poly, &c2.poly, &c3.poly)?;
                let dimension: usize = parts.iter().map(|c| c.code.dimension()).sum();
                let (distance, mut check) = combine_distances(&parts);
                if check == DistanceCheck::ComponentOnly
                    && q.checked_pow(dimension as u32)
                        .is_some_and(|s| s <= u128::from(job.limit))
                {
                    let code = CodeOverR::from_components(
                        c1.code.clone(),
                        c2.code.clone(),
                        c3.code.clone(),
                        job.alpha,
                        aut,
                    )?;
                    let direct = code.gray_min_distance(job.limit)?;
                    if Some(direct) != distance {
                        return Err(Error::VerificationFailed(format!(
                            "Gray distance {direct} differs from component distance for {generator}"
                        )));
                    }
                    check = DistanceCheck::CrossChecked;
                }
                let equivalence = with_equivalence.then(|| EquivalenceReport {
                    gcd_l: l,
                    kind: if l == 1 {
                        EquivalenceKind::Constacyclic
                    } else {
                        EquivalenceKind::QuasiTwisted { index: l }
                    },
                    verified: parts.iter().all(|c| c.equivalent),
                });
                entries.push(CatalogEntry {
                    components: parts.map(|c| c.poly.to_string()),
                    generator: generator.to_string(),
                    gray_params: GrayParams {
                        length: 3 * n,
                        dimension,
                        distance,
                    },
                    distance_check: check,
                    equivalence,
                    self_dual: parts.iter().all(|c| c.self_dual),
                });
            }
        }
    }
    entries.sort_by(|a, b| {
        let key = |e: &CatalogEntry| std::cmp::Reverse(e.gray_params.distance.map_or(0, |d| d + 1));
        key(a)
            .cmp(&key(b))
            .then(b.gray_params.dimension.cmp(&a.gray_params.dimension))
            .then_with(|| a.generator.cmp(&b.generator))
    });
    Ok(entries)
}

fn combine_distances(parts: &[&ComponentInfo; 3]) -> (Option<usize>, DistanceCheck) {
    let mut best: Option<usize> = None;
    for c in parts {
        match &c.distance {
            Ok(d) => best = Some(best.map_or(*d, |b| b.min(*d))),
            Err(Error::ZeroCode) => {}
            Err(_) => return (None, DistanceCheck::Unverified),
        }
    }
    match best {
        Some(d) => (Some(d), DistanceCheck::ComponentOnly),
        None => (None, DistanceCheck::Undefined),
    }
}

/// Groups entries by Gray parameters, for summaries.
pub fn parameter_histogram(
    entries: &[CatalogEntry],
) -> BTreeMap<(usize, usize, Option<usize>), usize> {
    let mut map = BTreeMap::new();
    for e in entries {
        let p = e.gray_params;
        *map.entry((p.length, p.dimension, p.distance)).or_insert(0) += 1;
    }
    map
}
