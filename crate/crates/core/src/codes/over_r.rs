use super::{gray_map, Code, ShiftKind};
use crate::error::{Error, Result};
use crate::finite_field::{gcd, Automorphism, FieldSpec};
use crate::ring_r::RingElement;
use crate::skew_poly::{extended_gcd, FqPoly, RPoly};

/// Parameters `[3n, k, d]` of the Gray image; `distance` is `None` for the zero code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GrayParams {
    pub length: usize,
    pub dimension: usize,
    pub distance: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EquivalenceKind {
    Constacyclic,
    QuasiTwisted { index: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub gcd_l: usize,
    pub kind: EquivalenceKind,
    /// Whether the claimed invariance held when checked on the generator rows.
    pub verified: bool,
}

/// An `R`-linear code `C = (1-u-v) C_1 + u C_2 + v C_3` of length `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct CodeOverR {
    n: usize,
    components: [Code; 3],
    alpha: RingElement,
    aut: Automorphism,
}

pub(crate) fn validate_unit(alpha: RingElement, aut: &Automorphism) -> Result<()> {
    if alpha.spec() != aut.spec() {
        return Err(Error::SpecMismatch);
    }
    if !alpha.is_unit() || !alpha.is_fixed_by(aut) {
        return Err(Error::BadUnit(alpha.to_string()));
    }
    Ok(())
}

/// True iff every CRT component of `alpha` is `1` or `-1`.
pub fn self_dual_alpha_admissible(alpha: RingElement) -> bool {
    alpha.split().iter().all(|c| c.is_one() || (-*c).is_one())
}

impl CodeOverR {
    pub fn from_components(
        c1: Code,
        c2: Code,
        c3: Code,
        alpha: RingElement,
        aut: Automorphism,
    ) -> Result<CodeOverR> {
        validate_unit(alpha, &aut)?;
        let n = c1.len();
        let components = [c1, c2, c3];
        let betas = alpha.split();
        for (i, c) in components.iter().enumerate() {
            if c.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    found: c.len(),
                });
            }
            if c.spec() != aut.spec() {
                return Err(Error::SpecMismatch);
            }
            if let Some(g) = c.generator() {
                if g.beta != betas[i] || g.poly.automorphism() != aut {
                    return Err(Error::UnitMismatch(i + 1));
                }
            }
        }
        Ok(CodeOverR {
            n,
            components,
            alpha,
            aut,
        })
    }

    /// The `R`-span of `rows`. Its components are the `F_q`-spans of the split rows.
    pub fn from_rows(
        n: usize,
        rows: &[Vec<RingElement>],
        alpha: RingElement,
        aut: Automorphism,
    ) -> Result<CodeOverR> {
        let spec = aut.spec();
        let mut parts: [Vec<Vec<u32>>; 3] = Default::default();
        for row in rows {
            if row.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            if row.iter().any(|r| r.spec() != spec) {
                return Err(Error::SpecMismatch);
            }
            for (dst, p) in parts.iter_mut().zip(Self::split_raw(row)) {
                dst.push(p);
            }
        }
        let [c1, c2, c3] = parts.map(|r| Code::from_raw_rows(spec, n, r));
        CodeOverR::from_components(c1, c2, c3, alpha, aut)
    }

    /// The left ideal generated by a right divisor `f` of `x^n - alpha`.
    pub fn from_generator_poly(f: &RPoly, n: usize, alpha: RingElement) -> Result<CodeOverR> {
        let aut = f.automorphism();
        validate_unit(alpha, &aut)?;
        let not_divisor = || Error::NotARightDivisor {
            n,
            beta: alpha.to_string(),
        };
        if f.degree().is_none_or(|d| d > n) {
            return Err(not_divisor());
        }
        match f.is_right_divisor_of(&RPoly::x_n_minus(n, alpha, aut)) {
            Ok(true) => {}
            Ok(false) | Err(Error::NonUnitLeadingCoeff) => return Err(not_divisor()),
            Err(e) => return Err(e),
        }
        let betas = alpha.split();
        let [f1, f2, f3] = f.split();
        CodeOverR::from_components(
            Code::from_right_divisor(&f1, n, betas[0])?,
            Code::from_right_divisor(&f2, n, betas[1])?,
            Code::from_right_divisor(&f3, n, betas[2])?,
            alpha,
            aut,
        )
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn spec(&self) -> FieldSpec {
        self.aut.spec()
    }

    pub fn alpha(&self) -> RingElement {
        self.alpha
    }

    pub fn automorphism(&self) -> Automorphism {
        self.aut
    }

    pub fn components(&self) -> &[Code; 3] {
        &self.components
    }

    /// `k_1 + k_2 + k_3`, the dimension of the Gray image.
    pub fn gray_dimension(&self) -> usize {
        self.components.iter().map(Code::dimension).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.gray_dimension() == 0
    }

    /// `|C_1| |C_2| |C_3|`, or `None` on overflow.
    pub fn cardinality(&self) -> Option<u128> {
        u128::from(self.spec().q()).checked_pow(self.gray_dimension() as u32)
    }

    /// Stacked `(1-u-v) G_1`, `u G_2`, `v G_3`.
    pub fn generator_matrix(&self) -> Vec<Vec<RingElement>> {
        let idempotents = RingElement::idempotents(self.spec());
        let mut rows = Vec::new();
        for (code, e) in self.components.iter().zip(idempotents) {
            for row in code.generator_matrix() {
                rows.push(
                    row.into_iter()
                        .map(|c| RingElement::from_field(c) * e)
                        .collect(),
                );
            }
        }
        rows
    }

    fn split_raw(v: &[RingElement]) -> [Vec<u32>; 3] {
        let mut parts: [Vec<u32>; 3] = Default::default();
        for r in v {
            let s = r.split_raw();
            for i in 0..3 {
                parts[i].push(s[i]);
            }
        }
        parts
    }

    /// Membership, tested on each CRT component.
    pub fn contains(&self, v: &[RingElement]) -> bool {
        if v.len() != self.n || v.iter().any(|r| r.spec() != self.spec()) {
            return false;
        }
        let parts = Self::split_raw(v);
        self.components
            .iter()
            .zip(&parts)
            .all(|(c, p)| c.contains_raw(p))
    }

    /// Every codeword; errors when `|C| > limit`.
    pub fn codewords(&self, limit: u64) -> Result<Vec<Vec<RingElement>>> {
        match self.cardinality() {
            Some(size) if size <= u128::from(limit) => {}
            _ => return Err(Error::EnumerationTooLarge { limit }),
        }
        let spec = self.spec();
        let mut lists: [Vec<Vec<u32>>; 3] = Default::default();
        for (list, code) in lists.iter_mut().zip(&self.components) {
            code.for_each_codeword(limit, |w| list.push(w.to_vec()))?;
        }
        let mut out = Vec::with_capacity(lists.iter().map(Vec::len).product());
        for w1 in &lists[0] {
            for w2 in &lists[1] {
                for w3 in &lists[2] {
                    let word = (0..self.n)
                        .map(|i| RingElement::join_raw(spec, [w1[i], w2[i], w3[i]]))
                        .collect();
                    out.push(word);
                }
            }
        }
        Ok(out)
    }

    /// `Phi(C)`, built as the `F_q`-span of `Phi(r g)` for the generator rows `g`
    /// and `r` in `{1, u, v}`.
    pub fn gray_image(&self) -> Code {
        let spec = self.spec();
        let scalars = [
            RingElement::one(spec),
            RingElement::u(spec),
            RingElement::v(spec),
        ];
        let mut rows = Vec::new();
        for row in self.generator_matrix() {
            for s in scalars {
                let scaled: Vec<RingElement> = row.iter().map(|&c| s * c).collect();
                rows.push(gray_map(&scaled).iter().map(|c| c.value()).collect());
            }
        }
        Code::from_raw_rows(spec, 3 * self.n, rows)
    }

    /// True iff the shift of every generator row lies in the code.
    pub fn is_invariant(&self, kind: &ShiftKind<RingElement>) -> Result<bool> {
        for row in self.generator_matrix() {
            if !self.contains(&kind.apply(&row)?) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn skew_shift(&self) -> ShiftKind<RingElement> {
        ShiftKind::SkewConstacyclic {
            alpha: self.alpha,
            aut: self.aut,
        }
    }

    pub fn is_skew_constacyclic(&self) -> Result<bool> {
        self.is_invariant(&self.skew_shift())
    }

    /// Minimum Lee distance as the least distance among the nonzero components.
    pub fn min_lee_distance(&self, limit: u64) -> Result<usize> {
        let mut best = None;
        for c in self.components.iter().filter(|c| !c.is_zero()) {
            let d = c.min_distance(limit)?;
            best = Some(best.map_or(d, |b: usize| b.min(d)));
        }
        best.ok_or(Error::ZeroCode)
    }

    /// Minimum Hamming distance of the Gray image, computed on the image itself.
    pub fn gray_min_distance(&self, limit: u64) -> Result<usize> {
        self.gray_image().min_distance(limit)
    }

    pub fn gray_parameters(&self, limit: u64) -> Result<GrayParams> {
        let distance = match self.min_lee_distance(limit) {
            Ok(d) => Some(d),
            Err(Error::ZeroCode) => None,
            Err(e) => return Err(e),
        };
        Ok(GrayParams {
            length: 3 * self.n,
            dimension: self.gray_dimension(),
            distance,
        })
    }

    /// `C^perp = (1-u-v) C_1^perp + u C_2^perp + v C_3^perp`, labelled with `alpha^{-1}`.
    pub fn dual(&self) -> CodeOverR {
        let [c1, c2, c3] = &self.components;
        CodeOverR {
            n: self.n,
            components: [c1.dual(), c2.dual(), c3.dual()],
            alpha: self.alpha.inv().expect("alpha is a unit"),
            aut: self.aut,
        }
    }

    pub fn is_self_dual(&self) -> bool {
        self.components.iter().all(Code::is_self_dual)
    }

    /// Whether the dual is skew `alpha^{-1}`-constacyclic; needs `k | n`.
    pub fn dual_constacyclicity_check(&self) -> Result<bool> {
        let k = self.aut.order();
        if !self.n.is_multiple_of(k) {
            return Err(Error::OrderDoesNotDivideLength { k, n: self.n });
        }
        let dual = self.dual();
        dual.is_invariant(&dual.skew_shift())
    }

    /// `f = (1-u-v) f_1 + u f_2 + v f_3`, checked to divide `x^n - alpha` and to
    /// regenerate the code.
    pub fn generator_poly(&self) -> Result<RPoly> {
        let mut polys = Vec::with_capacity(3);
        for (i, c) in self.components.iter().enumerate() {
            let g = c
                .generator()
                .ok_or(Error::MissingComponentGenerator(i + 1))?;
            polys.push(g.poly.clone());
        }
        let f = RPoly::join(&polys[0], &polys[1], &polys[2])?;
        let regenerated = CodeOverR::from_generator_poly(&f, self.n, self.alpha)?;
        if regenerated.components != self.components {
            return Err(Error::VerificationFailed(
                "generator does not regenerate the code".into(),
            ));
        }
        Ok(f)
    }

    /// An idempotent `e` with `e * e = e` modulo `x^n - alpha` and `<e> = C`.
    ///
    /// Needs `gcd(n, k) = 1` and `gcd(n, q) = 1`. For each component with
    /// `x^n - beta = h g`, solve `s g + t h = 1` in `F_q[x]` and take
    /// `e_i = s g mod (x^n - beta)`.
    pub fn idempotent_generator(&self) -> Result<RPoly> {
        let spec = self.spec();
        let k = self.aut.order();
        if gcd(self.n, k) != 1 || gcd(self.n, spec.p() as usize) != 1 {
            return Err(Error::GcdPrecondFailed {
                n: self.n,
                k,
                q: spec.q(),
            });
        }
        let id = Automorphism::identity(spec);
        let mut parts = Vec::with_capacity(3);
        for (i, c) in self.components.iter().enumerate() {
            let gen = c
                .generator()
                .ok_or(Error::MissingComponentGenerator(i + 1))?;
            let g = gen.poly.with_automorphism(id)?;
            let modulus = FqPoly::x_n_minus(self.n, gen.beta, id);
            let (h, r) = modulus.right_divmod(&g)?;
            if !r.is_zero() {
                return Err(Error::VerificationFailed(format!(
                    "component {} generator does not divide x^n - beta commutatively",
                    i + 1
                )));
            }
            let (d, s, _) = extended_gcd(&g, &h)?;
            if d != FqPoly::one(id) {
                return Err(Error::NotSquarefree);
            }
            let e = s.mul(&g)?.rem_x_n_minus(self.n, gen.beta)?;
            parts.push(e.with_automorphism(self.aut)?);
        }
        let e = RPoly::join(&parts[0], &parts[1], &parts[2])?;

        let square = e.mul(&e)?.rem_x_n_minus(self.n, self.alpha)?;
        if square != e {
            return Err(Error::VerificationFailed("e * e differs from e".into()));
        }
        if self.ideal_components(&e)? != self.components {
            return Err(Error::VerificationFailed(
                "<e> differs from the code".into(),
            ));
        }
        Ok(e)
    }

    /// Component codes of the left ideal generated by `f` modulo `x^n - alpha`.
    fn ideal_components(&self, f: &RPoly) -> Result<[Code; 3]> {
        let spec = self.spec();
        let mut rows: [Vec<Vec<u32>>; 3] = Default::default();
        for i in 0..self.n {
            let word = f
                .shift_left_by_x(i)
                .rem_x_n_minus(self.n, self.alpha)?
                .to_vector(self.n)?;
            let parts = Self::split_raw(&word);
            for (dst, p) in rows.iter_mut().zip(parts) {
                dst.push(p);
            }
        }
        Ok(rows.map(|r| Code::from_raw_rows(spec, self.n, r)))
    }

    /// Constacyclic (`gcd(n, k) = 1`) or quasi-twisted of index `gcd(n, k)`,
    /// checked directly on the generator rows. Requires `alpha^2 = 1`.
    pub fn equivalence_report(&self) -> Result<EquivalenceReport> {
        if !self.alpha.is_self_inverse() {
            return Err(Error::AlphaNotSelfInverse);
        }
        if !self.is_skew_constacyclic()? {
            return Err(Error::NotSkewConstacyclic);
        }
        let l = gcd(self.n, self.aut.order());
        let (kind, shift) = if l == 1 {
            (
                EquivalenceKind::Constacyclic,
                ShiftKind::Constacyclic { alpha: self.alpha },
            )
        } else {
            (
                EquivalenceKind::QuasiTwisted { index: l },
                ShiftKind::QuasiTwisted {
                    alpha: self.alpha,
                    block_len: l,
                },
            )
        };
        Ok(EquivalenceReport {
            gcd_l: l,
            kind,
            verified: self.is_invariant(&shift)?,
        })
    }
}
