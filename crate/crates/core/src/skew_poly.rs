//! Skew polynomial rings `F_q[x; theta]` and `R[x; theta]`.
//!
//! Multiplication follows `a x^i * b x^j = a theta^i(b) x^{i+j}`. Only right
//! division is provided: the codes in this crate are left submodules of
//! `S[x; theta] / <x^n - alpha>`, and reducing modulo the left ideal generated by
//! `x^n - alpha` is exactly taking the right remainder.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::finite_field::{Automorphism, FieldElement, FieldSpec};
use crate::ring_r::RingElement;

/// Coefficient rings for [`SkewPoly`]: `F_q` and `R`.
pub trait Coefficient:
    Copy
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn spec(&self) -> FieldSpec;
    fn zero(spec: FieldSpec) -> Self;
    fn one(spec: FieldSpec) -> Self;
    fn from_int(spec: FieldSpec, n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn unit_inverse(&self) -> Option<Self>;
    /// `theta^power(self)`.
    fn twist(&self, aut: &Automorphism, power: usize) -> Self;
    fn parse(spec: FieldSpec, s: &str) -> Result<Self>;

    /// Right division when the divisor's leading coefficient is not a unit.
    fn right_divmod_nonunit(
        _f: &SkewPoly<Self>,
        _g: &SkewPoly<Self>,
    ) -> Result<(SkewPoly<Self>, SkewPoly<Self>)> {
        Err(Error::NonUnitLeadingCoeff)
    }
}

impl Coefficient for FieldElement {
    fn spec(&self) -> FieldSpec {
        FieldElement::spec(*self)
    }
    fn zero(spec: FieldSpec) -> Self {
        spec.zero()
    }
    fn one(spec: FieldSpec) -> Self {
        spec.one()
    }
    fn from_int(spec: FieldSpec, n: i64) -> Self {
        spec.from_int(n)
    }
    fn is_zero(&self) -> bool {
        FieldElement::is_zero(*self)
    }
    fn unit_inverse(&self) -> Option<Self> {
        self.inv().ok()
    }
    fn twist(&self, aut: &Automorphism, power: usize) -> Self {
        aut.apply_pow(*self, power)
    }
    fn parse(spec: FieldSpec, s: &str) -> Result<Self> {
        spec.parse_element(s)
    }
}

impl Coefficient for RingElement {
    fn spec(&self) -> FieldSpec {
        RingElement::spec(*self)
    }
    fn zero(spec: FieldSpec) -> Self {
        RingElement::zero(spec)
    }
    fn one(spec: FieldSpec) -> Self {
        RingElement::one(spec)
    }
    fn from_int(spec: FieldSpec, n: i64) -> Self {
        RingElement::from_ints(spec, n, 0, 0)
    }
    fn is_zero(&self) -> bool {
        RingElement::is_zero(*self)
    }
    fn unit_inverse(&self) -> Option<Self> {
        self.inv().ok()
    }
    fn twist(&self, aut: &Automorphism, power: usize) -> Self {
        self.theta_pow(aut, power)
    }
    fn parse(spec: FieldSpec, s: &str) -> Result<Self> {
        RingElement::parse(spec, s)
    }

    // R[x; theta] is the product of three copies of F_q[x; theta], so divide
    // each CRT component separately. Works whenever no component of the
    // divisor vanishes, e.g. for (1-u-v) f1 + u f2 + v f3 with unequal degrees.
    fn right_divmod_nonunit(f: &RPoly, g: &RPoly) -> Result<(RPoly, RPoly)> {
        let fs = f.split();
        let gs = g.split();
        if gs.iter().any(|c| c.is_zero()) {
            return Err(Error::NonUnitLeadingCoeff);
        }
        let mut quotients = Vec::with_capacity(3);
        let mut remainders = Vec::with_capacity(3);
        for i in 0..3 {
            let (q, r) = fs[i].right_divmod(&gs[i])?;
            quotients.push(q);
            remainders.push(r);
        }
        Ok((
            RPoly::join(&quotients[0], &quotients[1], &quotients[2])?,
            RPoly::join(&remainders[0], &remainders[1], &remainders[2])?,
        ))
    }
}

/// A polynomial over `F_q` or `R` in the skew ring defined by `aut`.
///
/// Coefficients are ascending and normalized: the highest stored coefficient
/// is nonzero, and the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct SkewPoly<C> {
    coeffs: Vec<C>,
    aut: Automorphism,
}

pub type FqPoly = SkewPoly<FieldElement>;
pub type RPoly = SkewPoly<RingElement>;

/// Text form `c0,c1,...,cd`; the zero polynomial prints as its zero coefficient.
impl<C: Coefficient> fmt::Display for SkewPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "{}", C::zero(self.spec()));
        }
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl<C: Coefficient> SkewPoly<C> {
    pub fn new(coeffs: Vec<C>, aut: Automorphism) -> Result<Self> {
        if coeffs.iter().any(|c| c.spec() != aut.spec()) {
            return Err(Error::SpecMismatch);
        }
        Ok(Self::from_parts(coeffs, aut))
    }

    pub(crate) fn from_parts(mut coeffs: Vec<C>, aut: Automorphism) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        SkewPoly { coeffs, aut }
    }

    /// Polynomial with integer coefficients taken in the prime subfield.
    pub fn from_ints(coeffs: &[i64], aut: Automorphism) -> Self {
        let spec = aut.spec();
        Self::from_parts(coeffs.iter().map(|&n| C::from_int(spec, n)).collect(), aut)
    }

    pub fn parse(s: &str, aut: Automorphism) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let coeffs = s
            .split(',')
            .map(|t| C::parse(aut.spec(), t))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_parts(coeffs, aut))
    }

    pub fn zero(aut: Automorphism) -> Self {
        SkewPoly {
            coeffs: Vec::new(),
            aut,
        }
    }

    pub fn one(aut: Automorphism) -> Self {
        Self::constant(C::one(aut.spec()), aut)
    }

    pub fn constant(c: C, aut: Automorphism) -> Self {
        Self::monomial(c, 0, aut)
    }

    /// `c x^i`.
    pub fn monomial(c: C, i: usize, aut: Automorphism) -> Self {
        let mut coeffs = vec![C::zero(aut.spec()); i + 1];
        coeffs[i] = c;
        Self::from_parts(coeffs, aut)
    }

    /// `x^n - alpha`.
    pub fn x_n_minus(n: usize, alpha: C, aut: Automorphism) -> Self {
        let mut coeffs = vec![C::zero(aut.spec()); n + 1];
        coeffs[n] = C::one(aut.spec());
        coeffs[0] = coeffs[0] - alpha;
        Self::from_parts(coeffs, aut)
    }

    pub fn automorphism(&self) -> Automorphism {
        self.aut
    }

    pub fn spec(&self) -> FieldSpec {
        self.aut.spec()
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> C {
        self.coeffs
            .get(i)
            .copied()
            .unwrap_or_else(|| C::zero(self.spec()))
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<C> {
        self.coeffs.last().copied()
    }

    /// Coefficients padded with zeros to length `n`.
    pub fn to_vector(&self, n: usize) -> Result<Vec<C>> {
        if self.coeffs.len() > n {
            return Err(Error::DegreeTooLarge {
                degree: self.coeffs.len() - 1,
                n,
            });
        }
        let mut v = self.coeffs.clone();
        v.resize(n, C::zero(self.spec()));
        Ok(v)
    }

    /// Same coefficients in the skew ring of another automorphism of the same field.
    pub fn with_automorphism(&self, aut: Automorphism) -> Result<Self> {
        if aut.spec() != self.spec() {
            return Err(Error::SpecMismatch);
        }
        Ok(SkewPoly {
            coeffs: self.coeffs.clone(),
            aut,
        })
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.aut == other.aut {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Ok(Self::from_parts(coeffs, self.aut))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        SkewPoly {
            coeffs: self.coeffs.iter().map(|&c| -c).collect(),
            aut: self.aut,
        }
    }

    /// `c * f` (left scalar multiplication, no twist).
    pub fn scale_left(&self, c: C) -> Self {
        Self::from_parts(self.coeffs.iter().map(|&a| c * a).collect(), self.aut)
    }

    /// The skew product `self * other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.aut));
        }
        let zero = C::zero(self.spec());
        let mut out = vec![zero; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j] + a * b.twist(&self.aut, i);
            }
        }
        Ok(Self::from_parts(out, self.aut))
    }

    /// `x^i * self`, i.e. shift up by `i` after applying `theta^i`.
    pub fn shift_left_by_x(&self, i: usize) -> Self {
        let zero = C::zero(self.spec());
        let mut coeffs = vec![zero; i];
        coeffs.extend(self.coeffs.iter().map(|c| c.twist(&self.aut, i)));
        Self::from_parts(coeffs, self.aut)
    }

    /// Right division: `(q, r)` with `self = q * divisor + r` and `deg r < deg divisor`.
    pub fn right_divmod(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.check(divisor)?;
        let lead = divisor.leading().ok_or(Error::DivisorZero)?;
        match lead.unit_inverse() {
            Some(lead_inv) => Ok(self.right_divmod_unit(divisor, lead_inv)),
            None => C::right_divmod_nonunit(self, divisor),
        }
    }

    // Cancel the leading term of the running remainder with
    // (lc(r) theta^d(lc(g)^{-1})) x^d * g, d = deg r - deg g.
    fn right_divmod_unit(&self, divisor: &Self, lead_inv: C) -> (Self, Self) {
        let zero = C::zero(self.spec());
        let dg = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![zero; rem.len().saturating_sub(dg)];
        while rem.len() > dg {
            let top = rem.len() - 1;
            let lead_r = rem[top];
            if !lead_r.is_zero() {
                let d = top - dg;
                let c = lead_r * lead_inv.twist(&self.aut, d);
                quot[d] = quot[d] + c;
                for (j, &gj) in divisor.coeffs.iter().enumerate() {
                    rem[d + j] = rem[d + j] - c * gj.twist(&self.aut, d);
                }
            }
            rem.pop();
        }
        (
            Self::from_parts(quot, self.aut),
            Self::from_parts(rem, self.aut),
        )
    }

    /// True iff `self` is a right divisor of `dividend`, i.e. `dividend = h * self`.
    pub fn is_right_divisor_of(&self, dividend: &Self) -> Result<bool> {
        let (_, r) = dividend.right_divmod(self)?;
        Ok(r.is_zero())
    }

    /// Representative of `self` modulo the left ideal generated by `x^n - alpha`.
    pub fn rem_x_n_minus(&self, n: usize, alpha: C) -> Result<Self> {
        let modulus = Self::x_n_minus(n, alpha, self.aut);
        Ok(self.right_divmod(&modulus)?.1)
    }

    /// `lc^{-1} * self`, so the leading coefficient becomes 1.
    pub fn make_monic(&self) -> Result<Self> {
        let lead = self.leading().ok_or(Error::DivisorZero)?;
        let inv = lead.unit_inverse().ok_or(Error::NonUnitLeadingCoeff)?;
        Ok(self.scale_left(inv))
    }

    /// Membership in the center `(fixed subring)[x^k]`.
    pub fn is_central(&self) -> bool {
        let k = self.aut.order();
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .all(|(i, c)| i % k == 0 && c.twist(&self.aut, 1) == *c)
    }
}

impl RPoly {
    /// Coefficientwise CRT split into three polynomials over `F_q`.
    pub fn split(&self) -> [FqPoly; 3] {
        let mut parts: [Vec<FieldElement>; 3] = Default::default();
        for c in &self.coeffs {
            let s = c.split();
            for i in 0..3 {
                parts[i].push(s[i]);
            }
        }
        parts.map(|coeffs| SkewPoly::from_parts(coeffs, self.aut))
    }

    /// `(1-u-v) f1 + u f2 + v f3`.
    pub fn join(f1: &FqPoly, f2: &FqPoly, f3: &FqPoly) -> Result<RPoly> {
        f1.check(f2)?;
        f1.check(f3)?;
        let len = f1.coeffs.len().max(f2.coeffs.len()).max(f3.coeffs.len());
        let coeffs = (0..len)
            .map(|i| RingElement::join(f1.coeff(i), f2.coeff(i), f3.coeff(i)))
            .collect::<Result<Vec<_>>>()?;
        Ok(SkewPoly::from_parts(coeffs, f1.aut))
    }

    /// Embeds a polynomial over `F_q` into `R[x; theta]`.
    pub fn from_field_poly(f: &FqPoly) -> RPoly {
        let coeffs = f
            .coeffs
            .iter()
            .map(|&c| RingElement::from_field(c))
            .collect();
        SkewPoly::from_parts(coeffs, f.aut)
    }
}

/// The substitution `f(x) -> f(alpha x)`, mapping representatives modulo
/// `x^n - 1` to representatives modulo `x^n - alpha`.
///
/// Requires odd `n`, `alpha^2 = 1` and `alpha` fixed by the automorphism; under
/// those hypotheses `alpha^i` is `1` or `alpha` and commutes with the twist.
pub fn rho_map<C: Coefficient>(f: &SkewPoly<C>, alpha: C, n: usize) -> Result<SkewPoly<C>> {
    if n.is_multiple_of(2) {
        return Err(Error::EvenLength(n));
    }
    let one = C::one(f.spec());
    if alpha * alpha != one {
        return Err(Error::AlphaNotSelfInverse);
    }
    if alpha.twist(&f.aut, 1) != alpha {
        return Err(Error::AlphaNotFixed);
    }
    if let Some(d) = f.degree().filter(|&d| d >= n) {
        return Err(Error::DegreeTooLarge { degree: d, n });
    }
    let mut power = one;
    let coeffs = f
        .coeffs
        .iter()
        .map(|&c| {
            let out = power * c;
            power = power * alpha;
            out
        })
        .collect();
    Ok(SkewPoly::from_parts(coeffs, f.aut))
}

/// Extended Euclid in the commutative ring `F_q[x]`: returns `(d, s, t)` with
/// `s a + t b = d`, `d` monic (or zero when both inputs are zero).
pub fn extended_gcd(a: &FqPoly, b: &FqPoly) -> Result<(FqPoly, FqPoly, FqPoly)> {
    let aut = Automorphism::identity(a.spec());
    let (mut r0, mut r1) = (a.with_automorphism(aut)?, b.with_automorphism(aut)?);
    let (mut s0, mut s1) = (FqPoly::one(aut), FqPoly::zero(aut));
    let (mut t0, mut t1) = (FqPoly::zero(aut), FqPoly::one(aut));
    while !r1.is_zero() {
        let (q, r) = r0.right_divmod(&r1)?;
        let s2 = s0.sub(&q.mul(&s1)?)?;
        let t2 = t0.sub(&q.mul(&t1)?)?;
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if let Some(lead) = r0.leading() {
        let inv = lead.inv()?;
        r0 = r0.scale_left(inv);
        s0 = s0.scale_left(inv);
        t0 = t0.scale_left(inv);
    }
    Ok((r0, s0, t0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f9() -> FieldSpec {
        FieldSpec::new(3, 2, &[1, 0, 1]).unwrap()
    }

    fn f25() -> FieldSpec {
        FieldSpec::new(5, 2, &[1, 1, 1]).unwrap()
    }

    fn frob(spec: FieldSpec) -> Automorphism {
        Automorphism::new(spec, 1).unwrap()
    }

    fn fq(coeffs: &[u32], aut: Automorphism) -> FqPoly {
        let spec = aut.spec();
        FqPoly::new(
            coeffs.iter().map(|&v| spec.element(v).unwrap()).collect(),
            aut,
        )
        .unwrap()
    }

    // Term-by-term expansion with explicit theta powers, kept apart from `mul`.
    fn expand_terms(f: &FqPoly, g: &FqPoly) -> Vec<FieldElement> {
        let spec = f.spec();
        let aut = f.automorphism();
        let mut out = vec![spec.zero(); f.coeffs().len() + g.coeffs().len()];
        for (i, &a) in f.coeffs().iter().enumerate() {
            for (j, &b) in g.coeffs().iter().enumerate() {
                let mut tb = b;
                for _ in 0..i {
                    tb = aut.apply(tb).unwrap();
                }
                out[i + j] = out[i + j] + a * tb;
            }
        }
        while out.last().is_some_and(|c| c.is_zero()) {
            out.pop();
        }
        out
    }

    fn length7_generator(aut: Automorphism) -> RPoly {
        let spec = aut.spec();
        let one = RingElement::one(spec);
        let alpha = RingElement::from_ints(spec, 1, -2, -2);
        RPoly::new(vec![one, alpha, one, alpha, one, alpha, one], aut).unwrap()
    }

    #[test]
    fn addition_examples() {
        let aut = frob(f9());
        let f = fq(&[3, 5, 1], aut);
        assert_eq!(f.add(&FqPoly::zero(aut)).unwrap(), f);
        let g = FqPoly::from_ints(&[1, 1], aut);
        let h = FqPoly::from_ints(&[-1, -1], aut);
        assert!(g.add(&h).unwrap().is_zero());
        let f3 = FieldSpec::prime(3).unwrap();
        let id = Automorphism::identity(f3);
        let p = FqPoly::from_ints(&[2, 1], id);
        assert_eq!(p.add(&p).unwrap(), FqPoly::from_ints(&[1, 2], id));
    }

    #[test]
    fn ring_mismatch() {
        let spec = f9();
        let a = FqPoly::one(frob(spec));
        let b = FqPoly::one(Automorphism::identity(spec));
        assert_eq!(a.add(&b), Err(Error::RingMismatch));
        assert_eq!(a.mul(&b), Err(Error::RingMismatch));
        let other = FqPoly::one(frob(f25()));
        assert_eq!(a.add(&other), Err(Error::RingMismatch));
        assert_eq!(
            FqPoly::new(vec![f25().one()], frob(spec)),
            Err(Error::SpecMismatch)
        );
    }

    #[test]
    fn multiplication_examples() {
        let spec = f9();
        let aut = frob(spec);
        let w = spec.generator();
        let wx = FqPoly::monomial(w, 1, aut);
        assert_eq!(wx.mul(&wx).unwrap(), FqPoly::monomial(spec.one(), 2, aut));
        assert_eq!(
            wx.mul(&wx).unwrap().coeffs(),
            expand_terms(&wx, &wx).as_slice()
        );
        let x = FqPoly::monomial(spec.one(), 1, aut);
        for a in spec.elements().filter(|a| !a.is_zero()) {
            let lhs = x.mul(&FqPoly::constant(a, aut)).unwrap();
            assert_eq!(lhs, FqPoly::monomial(aut.apply(a).unwrap(), 1, aut));
        }
        let id = Automorphism::identity(spec);
        let f = fq(&[w.value(), 2, 7], id);
        let g = fq(&[4, 0, 1, w.value()], id);
        assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
    }

    #[test]
    fn division_examples() {
        let spec = f9();
        let aut = frob(spec);
        let alpha = RingElement::from_ints(spec, 1, -2, -2);
        let f = length7_generator(aut);
        let modulus = RPoly::x_n_minus(7, alpha, aut);
        let (q, r) = modulus.right_divmod(&f).unwrap();
        assert!(r.is_zero());
        assert_eq!(q.mul(&f).unwrap(), modulus);
        assert!(f.is_right_divisor_of(&modulus).unwrap());

        let (q, r) = f.right_divmod(&f).unwrap();
        assert_eq!(q, RPoly::one(aut));
        assert!(r.is_zero());

        let small = RPoly::from_ints(&[1, 1], aut);
        let (q, r) = small.right_divmod(&f).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, small);

        assert_eq!(f.right_divmod(&RPoly::zero(aut)), Err(Error::DivisorZero));
    }

    #[test]
    fn divisor_examples() {
        let g25 = f25();
        let aut = frob(g25);
        let x6m1 = FqPoly::x_n_minus(6, g25.one(), aut);
        assert!(FqPoly::from_ints(&[1, 1, 1], aut)
            .is_right_divisor_of(&x6m1)
            .unwrap());
        let x = FqPoly::monomial(g25.one(), 1, aut);
        for c in 1..5 {
            let g = FqPoly::from_ints(&[-c, 1], aut);
            assert!(!g.is_right_divisor_of(&x).unwrap());
        }
    }

    #[test]
    fn non_unit_leading_coefficient_goes_componentwise() {
        let spec = f25();
        let aut = frob(spec);
        let f1 = FqPoly::from_ints(&[1, 0, 4, 0, 1], aut);
        let f2 = FqPoly::from_ints(&[1, 1, 1], aut);
        let f3 = FqPoly::from_ints(&[1, -1, 1], aut);
        let f = RPoly::join(&f1, &f2, &f3).unwrap();
        assert!(!f.leading().unwrap().is_unit());
        let alpha = RingElement::from_ints(spec, -1, 2, 2);
        let modulus = RPoly::x_n_minus(6, alpha, aut);
        let (q, r) = modulus.right_divmod(&f).unwrap();
        assert!(r.is_zero());
        assert_eq!(q.mul(&f).unwrap(), modulus);
        // a divisor with a vanishing component cannot divide
        let g = RPoly::join(&f1, &f2, &FqPoly::zero(aut)).unwrap();
        assert_eq!(modulus.right_divmod(&g), Err(Error::NonUnitLeadingCoeff));
    }

    #[test]
    fn rho_examples() {
        let spec = f9();
        let aut = frob(spec);
        let alpha = RingElement::from_ints(spec, 1, -2, -2);
        let one = RPoly::one(aut);
        assert_eq!(rho_map(&one, alpha, 7).unwrap(), one);
        let x2 = RPoly::monomial(RingElement::one(spec), 2, aut);
        assert_eq!(rho_map(&x2, alpha, 7).unwrap(), x2);
        let x = RPoly::monomial(RingElement::one(spec), 1, aut);
        assert_eq!(
            rho_map(&x, alpha, 7).unwrap(),
            RPoly::monomial(alpha, 1, aut)
        );

        assert_eq!(rho_map(&x, alpha, 6), Err(Error::EvenLength(6)));
        let w = RingElement::from_field(spec.generator());
        assert_eq!(rho_map(&x, w, 7), Err(Error::AlphaNotSelfInverse));
        let x9 = RPoly::monomial(RingElement::one(spec), 9, aut);
        assert!(matches!(
            rho_map(&x9, alpha, 7),
            Err(Error::DegreeTooLarge { .. })
        ));
    }

    #[test]
    fn center_examples() {
        let spec = f9();
        let aut = frob(spec);
        let one = RingElement::one(spec);
        assert!(RPoly::monomial(one, 2, aut).is_central());
        let w = RingElement::from_field(spec.generator());
        assert!(!RPoly::monomial(w, 2, aut).is_central());
        let alpha = RingElement::from_ints(spec, 1, -2, -2);
        assert!(!RPoly::x_n_minus(7, alpha, aut).is_central());
        assert!(RPoly::x_n_minus(6, alpha, aut).is_central());
    }

    #[test]
    fn split_examples() {
        let spec = f25();
        let aut = frob(spec);
        // (1-u-v)x^4 + (4-3u-3v)x^2 + (u-v)x + 1
        let f = RPoly::new(
            vec![
                RingElement::from_ints(spec, 1, 0, 0),
                RingElement::from_ints(spec, 0, 1, -1),
                RingElement::from_ints(spec, 4, -3, -3),
                RingElement::zero(spec),
                RingElement::from_ints(spec, 1, -1, -1),
            ],
            aut,
        )
        .unwrap();
        let [f1, f2, f3] = f.split();
        assert_eq!(f1, FqPoly::from_ints(&[1, 0, 4, 0, 1], aut));
        assert_eq!(f2, FqPoly::from_ints(&[1, 1, 1], aut));
        assert_eq!(f3, FqPoly::from_ints(&[1, -1, 1], aut));
        assert_eq!(RPoly::join(&f1, &f2, &f3).unwrap(), f);

        let ones = RPoly::one(aut).split();
        assert!(ones.iter().all(|p| *p == FqPoly::one(aut)));

        let g9 = f9();
        let aut9 = frob(g9);
        let [e1, e2, e3] = length7_generator(aut9).split();
        assert_eq!(e1, FqPoly::from_ints(&[1; 7], aut9));
        assert_eq!(e2, FqPoly::from_ints(&[1, -1, 1, -1, 1, -1, 1], aut9));
        assert_eq!(e3, e2);
    }

    #[test]
    fn text_roundtrip() {
        let spec = f25();
        let aut = frob(spec);
        let f = RPoly::parse("1|0|0,0|1|4,4|2|2,0|0|0,1|4|4", aut).unwrap();
        assert_eq!(f.degree(), Some(4));
        assert_eq!(f.to_string(), "1|0|0,0|1|4,4|2|2,0|0|0,1|4|4");
        assert_eq!(RPoly::zero(aut).to_string(), "0|0|0");
        assert!(RPoly::parse("0|0|0", aut).unwrap().is_zero());
        assert!(FqPoly::parse("1,x", aut).is_err());
        assert_eq!(FqPoly::parse("0", aut).unwrap(), FqPoly::zero(aut));
    }

    #[test]
    fn extended_gcd_basics() {
        let spec = f9();
        let id = Automorphism::identity(spec);
        let a = FqPoly::from_ints(&[-1, 0, 0, 0, 0, 0, 0, 1], id);
        let b = FqPoly::from_ints(&[-1, 1], id);
        let (d, s, t) = extended_gcd(&a, &b).unwrap();
        assert_eq!(d, FqPoly::from_ints(&[-1, 1], id));
        assert_eq!(s.mul(&a).unwrap().add(&t.mul(&b).unwrap()).unwrap(), d);
        let c = FqPoly::from_ints(&[1, 1], id);
        let (d, s, t) = extended_gcd(&b, &c).unwrap();
        assert_eq!(d, FqPoly::one(id));
        assert_eq!(s.mul(&b).unwrap().add(&t.mul(&c).unwrap()).unwrap(), d);
    }

    fn poly_strategy(spec: FieldSpec, max_len: usize) -> impl Strategy<Value = Vec<u32>> {
        proptest::collection::vec(0..spec.q(), 0..=max_len)
    }

    fn rpoly_strategy(
        spec: FieldSpec,
        max_len: usize,
    ) -> impl Strategy<Value = Vec<(u32, u32, u32)>> {
        let q = spec.q();
        proptest::collection::vec((0..q, 0..q, 0..q), 0..=max_len)
    }

    fn to_rpoly(v: &[(u32, u32, u32)], aut: Automorphism) -> RPoly {
        let spec = aut.spec();
        let coeffs = v
            .iter()
            .map(|&(a, b, c)| {
                RingElement::new(
                    spec.element(a).unwrap(),
                    spec.element(b).unwrap(),
                    spec.element(c).unwrap(),
                )
                .unwrap()
            })
            .collect();
        RPoly::new(coeffs, aut).unwrap()
    }

    proptest! {
        #[test]
        fn fq_product_matches_expansion(a in poly_strategy(f25(), 5), b in poly_strategy(f25(), 5)) {
            let aut = frob(f25());
            let (f, g) = (fq(&a, aut), fq(&b, aut));
            let product = f.mul(&g).unwrap();
            let expected = expand_terms(&f, &g);
            prop_assert_eq!(product.coeffs(), expected.as_slice());
        }

        #[test]
        fn associativity_and_distributivity(
            a in rpoly_strategy(f9(), 5),
            b in rpoly_strategy(f9(), 5),
            c in rpoly_strategy(f9(), 5),
        ) {
            let aut = frob(f9());
            let (f, g, h) = (to_rpoly(&a, aut), to_rpoly(&b, aut), to_rpoly(&c, aut));
            let left = f.mul(&g).unwrap().mul(&h).unwrap();
            let right = f.mul(&g.mul(&h).unwrap()).unwrap();
            prop_assert_eq!(left, right);
            prop_assert_eq!(
                f.mul(&g.add(&h).unwrap()).unwrap(),
                f.mul(&g).unwrap().add(&f.mul(&h).unwrap()).unwrap()
            );
            prop_assert_eq!(
                f.add(&g).unwrap().mul(&h).unwrap(),
                f.mul(&h).unwrap().add(&g.mul(&h).unwrap()).unwrap()
            );
        }

        #[test]
        fn associativity_over_f25(
            a in poly_strategy(f25(), 5),
            b in poly_strategy(f25(), 5),
            c in poly_strategy(f25(), 5),
        ) {
            let aut = frob(f25());
            let (f, g, h) = (fq(&a, aut), fq(&b, aut), fq(&c, aut));
            prop_assert_eq!(
                f.mul(&g).unwrap().mul(&h).unwrap(),
                f.mul(&g.mul(&h).unwrap()).unwrap()
            );
        }

        #[test]
        fn divmod_roundtrip(a in rpoly_strategy(f9(), 9), b in rpoly_strategy(f9(), 4)) {
            let aut = frob(f9());
            let (f, g) = (to_rpoly(&a, aut), to_rpoly(&b, aut));
            match f.right_divmod(&g) {
                Ok((q, r)) => {
                    prop_assert_eq!(q.mul(&g).unwrap().add(&r).unwrap(), f);
                    prop_assert!(r.degree() < g.degree());
                }
                Err(Error::DivisorZero) => prop_assert!(g.is_zero()),
                Err(Error::NonUnitLeadingCoeff) => {
                    prop_assert!(g.split().iter().any(|c| c.is_zero()));
                }
                Err(e) => prop_assert!(false, "unexpected error {e}"),
            }
        }

        #[test]
        fn unit_and_componentwise_division_agree(a in rpoly_strategy(f9(), 8), b in rpoly_strategy(f9(), 3)) {
            let aut = frob(f9());
            let (f, g) = (to_rpoly(&a, aut), to_rpoly(&b, aut));
            prop_assume!(g.leading().is_some_and(|c| c.is_unit()));
            let direct = f.right_divmod(&g).unwrap();
            let componentwise = RingElement::right_divmod_nonunit(&f, &g).unwrap();
            prop_assert_eq!(direct, componentwise);
        }

        #[test]
        fn split_is_multiplicative(a in rpoly_strategy(f9(), 5), b in rpoly_strategy(f9(), 5)) {
            let aut = frob(f9());
            let (f, g) = (to_rpoly(&a, aut), to_rpoly(&b, aut));
            let fg = f.mul(&g).unwrap().split();
            let (fs, gs) = (f.split(), g.split());
            for i in 0..3 {
                prop_assert_eq!(&fg[i], &fs[i].mul(&gs[i]).unwrap());
            }
            let [f1, f2, f3] = fs;
            prop_assert_eq!(RPoly::join(&f1, &f2, &f3).unwrap(), f);
        }

        #[test]
        fn rho_is_an_involution_and_intertwines_x(a in rpoly_strategy(f9(), 7), unit in 0usize..8) {
            let spec = f9();
            let aut = frob(spec);
            let n = 7;
            let alpha = crate::ring_r::self_inverse_units(spec)[unit];
            let f = to_rpoly(&a, aut);
            let twice = rho_map(&rho_map(&f, alpha, n).unwrap(), alpha, n).unwrap();
            prop_assert_eq!(&twice, &f);
            // rho(x * f mod x^n - 1) = alpha x * rho(f) mod x^n - alpha
            let x = RPoly::monomial(RingElement::one(spec), 1, aut);
            let lhs = rho_map(
                &x.mul(&f).unwrap().rem_x_n_minus(n, RingElement::one(spec)).unwrap(),
                alpha,
                n,
            ).unwrap();
            let rhs = x
                .mul(&rho_map(&f, alpha, n).unwrap())
                .unwrap()
                .scale_left(alpha)
                .rem_x_n_minus(n, alpha)
                .unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
