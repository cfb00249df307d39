//! Linear codes over `F_q` and over `R`.

mod gray;
mod over_r;
mod shift;

pub use gray::{gray_inverse, gray_map, hamming_weight, lee_weight, pi3};
pub use over_r::{
    self_dual_alpha_admissible, CodeOverR, EquivalenceKind, EquivalenceReport, GrayParams,
};
pub use shift::{apply_shift, ShiftKind};

pub(crate) use over_r::validate_unit;

use crate::error::{Error, Result};
use crate::finite_field::{FieldElement, FieldSpec};
use crate::linalg::Echelon;
use crate::skew_poly::FqPoly;

/// Default bound on the number of codewords visited by distance computations.
pub const DEFAULT_ENUMERATION_LIMIT: u64 = 10_000_000;

/// A monic generator polynomial and the constacyclic unit it divides against.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorPoly {
    pub poly: FqPoly,
    pub beta: FieldElement,
}

/// A linear code over `F_q`, stored as a generator matrix in reduced row echelon form.
#[derive(Clone, Debug)]
pub struct Code {
    spec: FieldSpec,
    n: usize,
    basis: Echelon,
    generator: Option<GeneratorPoly>,
}

/// Two codes are equal when they have the same ambient space and row space.
impl PartialEq for Code {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec && self.n == other.n && self.basis == other.basis
    }
}

impl Code {
    pub fn from_rows(spec: FieldSpec, n: usize, rows: &[Vec<FieldElement>]) -> Result<Code> {
        let mut raw = Vec::with_capacity(rows.len());
        for row in rows {
            if row.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            if row.iter().any(|c| c.spec() != spec) {
                return Err(Error::SpecMismatch);
            }
            raw.push(row.iter().map(|c| c.value()).collect());
        }
        Ok(Code::from_raw_rows(spec, n, raw))
    }

    pub(crate) fn from_raw_rows(spec: FieldSpec, n: usize, rows: Vec<Vec<u32>>) -> Code {
        Code {
            spec,
            n,
            basis: Echelon::new(spec, rows, n),
            generator: None,
        }
    }

    pub fn zero(spec: FieldSpec, n: usize) -> Code {
        Code::from_raw_rows(spec, n, Vec::new())
    }

    pub fn full(spec: FieldSpec, n: usize) -> Code {
        let rows = (0..n)
            .map(|i| {
                let mut r = vec![0; n];
                r[i] = 1;
                r
            })
            .collect();
        Code::from_raw_rows(spec, n, rows)
    }

    /// The left ideal generated by `g` in `F_q[x; theta] / <x^n - beta>`.
    ///
    /// Its rows are `x^i * g` for `0 <= i < n - deg g`.
    pub fn from_right_divisor(g: &FqPoly, n: usize, beta: FieldElement) -> Result<Code> {
        let aut = g.automorphism();
        let spec = aut.spec();
        if beta.spec() != spec {
            return Err(Error::SpecMismatch);
        }
        if beta.is_zero() || !aut.fixes(beta) {
            return Err(Error::BadUnit(beta.to_string()));
        }
        let not_divisor = || Error::NotARightDivisor {
            n,
            beta: beta.to_string(),
        };
        let d = g.degree().ok_or_else(not_divisor)?;
        if d > n || !g.is_right_divisor_of(&FqPoly::x_n_minus(n, beta, aut))? {
            return Err(not_divisor());
        }
        let rows = (0..n - d)
            .map(|i| {
                let row = g.shift_left_by_x(i).to_vector(n)?;
                Ok(row.iter().map(|c| c.value()).collect())
            })
            .collect::<Result<Vec<Vec<u32>>>>()?;
        let mut code = Code::from_raw_rows(spec, n, rows);
        code.generator = Some(GeneratorPoly {
            poly: g.make_monic()?,
            beta,
        });
        Ok(code)
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn dimension(&self) -> usize {
        self.basis.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.dimension() == 0
    }

    pub fn generator(&self) -> Option<&GeneratorPoly> {
        self.generator.as_ref()
    }

    /// `q^k`, or `None` on overflow.
    pub fn cardinality(&self) -> Option<u128> {
        u128::from(self.spec.q()).checked_pow(self.dimension() as u32)
    }

    pub fn generator_matrix(&self) -> Vec<Vec<FieldElement>> {
        self.basis
            .rows
            .iter()
            .map(|r| self.to_elements(r))
            .collect()
    }

    #[cfg(test)]
    pub(crate) fn raw_rows(&self) -> &[Vec<u32>] {
        &self.basis.rows
    }

    fn to_elements(&self, raw: &[u32]) -> Vec<FieldElement> {
        raw.iter()
            .map(|&v| FieldElement::from_raw(self.spec, v))
            .collect()
    }

    pub fn contains(&self, v: &[FieldElement]) -> bool {
        v.len() == self.n
            && v.iter().all(|c| c.spec() == self.spec)
            && self.contains_raw(&v.iter().map(|c| c.value()).collect::<Vec<_>>())
    }

    pub(crate) fn contains_raw(&self, v: &[u32]) -> bool {
        self.basis.contains(self.spec, v)
    }

    /// The dual under the standard inner product `sum x_i y_i`.
    pub fn dual(&self) -> Code {
        Code::from_raw_rows(self.spec, self.n, self.basis.null_space(self.spec, self.n))
    }

    pub fn is_self_dual(&self) -> bool {
        2 * self.dimension() == self.n && *self == self.dual()
    }

    /// Every codeword, in a fixed order; errors when `q^k > limit`.
    pub fn codewords(&self, limit: u64) -> Result<Vec<Vec<FieldElement>>> {
        let mut out = Vec::new();
        self.for_each_codeword(limit, |c| out.push(self.to_elements(c)))?;
        Ok(out)
    }

    pub(crate) fn for_each_codeword(&self, limit: u64, mut f: impl FnMut(&[u32])) -> Result<()> {
        match self.cardinality() {
            Some(size) if size <= u128::from(limit) => {}
            _ => return Err(Error::EnumerationTooLarge { limit }),
        }
        let q = self.spec.q();
        let k = self.dimension();
        let mut info = vec![0u32; k];
        loop {
            let mut word = vec![0u32; self.n];
            for (row, &m) in self.basis.rows.iter().zip(&info) {
                if m != 0 {
                    crate::linalg::axpy(self.spec, &mut word, self.spec.neg_raw(m), row);
                }
            }
            f(&word);
            let Some(i) = info.iter().position(|&m| m + 1 < q) else {
                return Ok(());
            };
            info[i] += 1;
            info[..i].iter_mut().for_each(|m| *m = 0);
        }
    }

    /// Minimum weight by enumerating all `q^k` codewords.
    pub fn min_distance_exhaustive(&self, limit: u64) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroCode);
        }
        let mut best = usize::MAX;
        self.for_each_codeword(limit, |c| {
            let w = c.iter().filter(|&&x| x != 0).count();
            if w > 0 {
                best = best.min(w);
            }
        })?;
        Ok(best)
    }

    /// Exact minimum distance.
    ///
    /// A codeword with information vector `m` has weight at least `wt(m)`, because
    /// the pivot columns reproduce `m`. Information vectors are visited by
    /// increasing weight (first nonzero entry normalized to 1) and the search
    /// stops once no heavier vector can improve the best weight found. `limit`
    /// bounds the number of vectors visited.
    pub fn min_distance(&self, limit: u64) -> Result<usize> {
        let k = self.dimension();
        if k == 0 {
            return Err(Error::ZeroCode);
        }
        let spec = self.spec;
        let q = spec.q();
        let mut best = usize::MAX;
        let mut visited = 0u64;
        for w in 1..=k {
            if best <= w {
                break;
            }
            let mut support: Vec<usize> = (0..w).collect();
            loop {
                let mut values = vec![1u32; w];
                loop {
                    visited += 1;
                    if visited > limit {
                        return Err(Error::EnumerationTooLarge { limit });
                    }
                    let mut word = vec![0u32; self.n];
                    for (&i, &m) in support.iter().zip(&values) {
                        crate::linalg::axpy(spec, &mut word, spec.neg_raw(m), &self.basis.rows[i]);
                    }
                    best = best.min(word.iter().filter(|&&x| x != 0).count());
                    // odometer over entries 1.., entry 0 stays 1
                    match (1..w).find(|&j| values[j] + 1 < q) {
                        Some(j) => {
                            values[j] += 1;
                            values[1..j].iter_mut().for_each(|v| *v = 1);
                        }
                        None => break,
                    }
                }
                if !next_combination(&mut support, k) {
                    break;
                }
            }
        }
        Ok(best)
    }

    /// True iff the shift of every generator row lies in the code.
    pub fn is_invariant(&self, kind: &ShiftKind<FieldElement>) -> Result<bool> {
        for row in self.generator_matrix() {
            let shifted = kind.apply(&row)?;
            if !self.contains(&shifted) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Advances `c` to the next `c.len()`-subset of `0..n` in lexicographic order.
fn next_combination(c: &mut [usize], n: usize) -> bool {
    let w = c.len();
    let Some(i) = (0..w).rev().find(|&i| c[i] < n - w + i) else {
        return false;
    };
    c[i] += 1;
    for j in i + 1..w {
        c[j] = c[j - 1] + 1;
    }
    true
}
