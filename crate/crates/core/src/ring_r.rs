//! The ring `R = F_q + uF_q + vF_q` with `u^2 = u`, `v^2 = v`, `uv = vu = 0`.
//!
//! Elements are stored as the coordinates `(a, b, c)` of `a + ub + vc`. The
//! orthogonal idempotents `1-u-v`, `u`, `v` give the ring isomorphism
//! `R -> F_q^3`, `a + ub + vc -> (a, a+b, a+c)` ([`RingElement::split`]), which
//! every decomposition in this crate goes through.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::finite_field::{Automorphism, FieldElement, FieldSpec};

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingElement {
    a: u32,
    b: u32,
    c: u32,
    spec: FieldSpec,
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}|{}@F{}", self.a, self.b, self.c, self.spec.q())
    }
}

/// Text form `a|b|c`, each coordinate in the canonical integer encoding.
impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}|{}", self.a, self.b, self.c)
    }
}

impl RingElement {
    /// `a + ub + vc`.
    pub fn new(a: FieldElement, b: FieldElement, c: FieldElement) -> Result<RingElement> {
        let spec = a.spec();
        if b.spec() != spec || c.spec() != spec {
            return Err(Error::SpecMismatch);
        }
        Ok(RingElement {
            a: a.value(),
            b: b.value(),
            c: c.value(),
            spec,
        })
    }

    pub fn from_field(a: FieldElement) -> RingElement {
        RingElement {
            a: a.value(),
            b: 0,
            c: 0,
            spec: a.spec(),
        }
    }

    /// `a + ub + vc` with integer coordinates taken in the prime subfield.
    pub fn from_ints(spec: FieldSpec, a: i64, b: i64, c: i64) -> RingElement {
        RingElement {
            a: spec.from_int(a).value(),
            b: spec.from_int(b).value(),
            c: spec.from_int(c).value(),
            spec,
        }
    }

    pub fn zero(spec: FieldSpec) -> RingElement {
        RingElement {
            a: 0,
            b: 0,
            c: 0,
            spec,
        }
    }

    pub fn one(spec: FieldSpec) -> RingElement {
        RingElement {
            a: 1,
            b: 0,
            c: 0,
            spec,
        }
    }

    pub fn u(spec: FieldSpec) -> RingElement {
        RingElement {
            a: 0,
            b: 1,
            c: 0,
            spec,
        }
    }

    pub fn v(spec: FieldSpec) -> RingElement {
        RingElement {
            a: 0,
            b: 0,
            c: 1,
            spec,
        }
    }

    /// The three orthogonal idempotents `1-u-v`, `u`, `v`.
    pub fn idempotents(spec: FieldSpec) -> [RingElement; 3] {
        [
            RingElement::from_ints(spec, 1, -1, -1),
            RingElement::u(spec),
            RingElement::v(spec),
        ]
    }

    /// All `q^3` elements, in order of `(a, b, c)` with `c` varying fastest.
    pub fn elements(spec: FieldSpec) -> impl Iterator<Item = RingElement> {
        let q = spec.q();
        (0..q).flat_map(move |a| {
            (0..q).flat_map(move |b| (0..q).map(move |c| RingElement { a, b, c, spec }))
        })
    }

    /// Parses `a|b|c`.
    pub fn parse(spec: FieldSpec, s: &str) -> Result<RingElement> {
        let parts: Vec<&str> = s.trim().split('|').collect();
        if parts.len() != 3 {
            return Err(Error::Parse(format!(
                "ring element must look like a|b|c, got `{s}`"
            )));
        }
        RingElement::new(
            spec.parse_element(parts[0])?,
            spec.parse_element(parts[1])?,
            spec.parse_element(parts[2])?,
        )
    }

    pub fn spec(self) -> FieldSpec {
        self.spec
    }

    pub fn a(self) -> FieldElement {
        FieldElement::from_raw(self.spec, self.a)
    }

    pub fn b(self) -> FieldElement {
        FieldElement::from_raw(self.spec, self.b)
    }

    pub fn c(self) -> FieldElement {
        FieldElement::from_raw(self.spec, self.c)
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0 && self.c == 0
    }

    pub fn is_one(self) -> bool {
        self.a == 1 && self.b == 0 && self.c == 0
    }

    /// CRT components `(a, a+b, a+c)`.
    pub fn split(self) -> [FieldElement; 3] {
        let s = self.split_raw();
        s.map(|v| FieldElement::from_raw(self.spec, v))
    }

    /// Inverse of [`split`](Self::split): `(1-u-v)s1 + u s2 + v s3`.
    pub fn join(s1: FieldElement, s2: FieldElement, s3: FieldElement) -> Result<RingElement> {
        let spec = s1.spec();
        if s2.spec() != spec || s3.spec() != spec {
            return Err(Error::SpecMismatch);
        }
        Ok(RingElement::join_raw(
            spec,
            [s1.value(), s2.value(), s3.value()],
        ))
    }

    pub(crate) fn split_raw(self) -> [u32; 3] {
        let f = self.spec;
        [self.a, f.add_raw(self.a, self.b), f.add_raw(self.a, self.c)]
    }

    pub(crate) fn join_raw(spec: FieldSpec, s: [u32; 3]) -> RingElement {
        RingElement {
            a: s[0],
            b: spec.sub_raw(s[1], s[0]),
            c: spec.sub_raw(s[2], s[0]),
            spec,
        }
    }

    pub fn try_add(self, rhs: RingElement) -> Result<RingElement> {
        self.check(rhs)?;
        let f = self.spec;
        Ok(RingElement {
            a: f.add_raw(self.a, rhs.a),
            b: f.add_raw(self.b, rhs.b),
            c: f.add_raw(self.c, rhs.c),
            spec: f,
        })
    }

    pub fn try_sub(self, rhs: RingElement) -> Result<RingElement> {
        self.try_add(-rhs)
    }

    /// `(a1+ub1+vc1)(a2+ub2+vc2) = a1a2 + u(a1b2+b1a2+b1b2) + v(a1c2+c1a2+c1c2)`.
    pub fn try_mul(self, rhs: RingElement) -> Result<RingElement> {
        self.check(rhs)?;
        let f = self.spec;
        let mixed = |x1: u32, x2: u32| {
            let t = f.add_raw(f.mul_raw(self.a, x2), f.mul_raw(x1, rhs.a));
            f.add_raw(t, f.mul_raw(x1, x2))
        };
        Ok(RingElement {
            a: f.mul_raw(self.a, rhs.a),
            b: mixed(self.b, rhs.b),
            c: mixed(self.c, rhs.c),
            spec: f,
        })
    }

    /// Scalar multiple by an element of `F_q`.
    pub fn scale(self, k: FieldElement) -> Result<RingElement> {
        self.try_mul(RingElement::from_field(k))
    }

    /// A unit exactly when all three CRT components are nonzero.
    pub fn is_unit(self) -> bool {
        self.split_raw().iter().all(|&s| s != 0)
    }

    /// `(1-u-v)a^{-1} + u(a+b)^{-1} + v(a+c)^{-1}`.
    pub fn inv(self) -> Result<RingElement> {
        let s = self.split_raw();
        let mut out = [0u32; 3];
        for i in 0..3 {
            out[i] = self
                .spec
                .inv_raw(s[i])
                .ok_or_else(|| Error::NotAUnit(self.to_string()))?;
        }
        Ok(RingElement::join_raw(self.spec, out))
    }

    /// `theta(a) + u theta(b) + v theta(c)`.
    pub fn theta(self, aut: &Automorphism) -> Result<RingElement> {
        if aut.spec() != self.spec {
            return Err(Error::SpecMismatch);
        }
        Ok(self.theta_pow(aut, 1))
    }

    /// `theta^power` applied coordinatewise.
    pub fn theta_pow(self, aut: &Automorphism, power: usize) -> RingElement {
        assert!(
            aut.spec() == self.spec,
            "ring element from a different field"
        );
        RingElement {
            a: aut.apply_pow_raw(self.a, power),
            b: aut.apply_pow_raw(self.b, power),
            c: aut.apply_pow_raw(self.c, power),
            spec: self.spec,
        }
    }

    /// True iff `theta(x) = x`, i.e. all coordinates lie in the fixed subfield.
    pub fn is_fixed_by(self, aut: &Automorphism) -> bool {
        aut.spec() == self.spec && self.theta_pow(aut, 1) == self
    }

    /// True iff `x^2 = 1`.
    pub fn is_self_inverse(self) -> bool {
        (self * self).is_one()
    }

    fn check(self, rhs: RingElement) -> Result<()> {
        if self.spec == rhs.spec {
            Ok(())
        } else {
            Err(Error::SpecMismatch)
        }
    }
}

impl Add for RingElement {
    type Output = RingElement;
    fn add(self, rhs: RingElement) -> RingElement {
        self.try_add(rhs)
            .expect("ring elements over different fields")
    }
}

impl Sub for RingElement {
    type Output = RingElement;
    fn sub(self, rhs: RingElement) -> RingElement {
        self.try_sub(rhs)
            .expect("ring elements over different fields")
    }
}

impl Mul for RingElement {
    type Output = RingElement;
    fn mul(self, rhs: RingElement) -> RingElement {
        self.try_mul(rhs)
            .expect("ring elements over different fields")
    }
}

impl Neg for RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        let f = self.spec;
        RingElement {
            a: f.neg_raw(self.a),
            b: f.neg_raw(self.b),
            c: f.neg_raw(self.c),
            spec: f,
        }
    }
}

/// The eight units with `alpha^2 = 1`: `+-1, +-(1-2u), +-(1-2v), +-(1-2u-2v)`.
pub fn self_inverse_units(spec: FieldSpec) -> Vec<RingElement> {
    let mut out = Vec::with_capacity(8);
    for (b, c) in [(0, 0), (-2, 0), (0, -2), (-2, -2)] {
        out.push(RingElement::from_ints(spec, 1, b, c));
        out.push(RingElement::from_ints(spec, -1, -b, -c));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f9() -> FieldSpec {
        FieldSpec::new(3, 2, &[1, 0, 1]).unwrap()
    }

    fn f25() -> FieldSpec {
        FieldSpec::new(5, 2, &[1, 1, 1]).unwrap()
    }

    // Multiplication by rewriting the expanded product with the defining
    // relations: each pair of basis monomials {1,u,v} multiplies to a basis
    // monomial or to zero.
    fn mul_by_relations(x: RingElement, y: RingElement) -> RingElement {
        let spec = x.spec();
        let basis = [
            RingElement::one(spec),
            RingElement::u(spec),
            RingElement::v(spec),
        ];
        // table[i][j] = basis index of e_i e_j, or None for zero
        let table = [
            [Some(0), Some(1), Some(2)],
            [Some(1), Some(1), None],
            [Some(2), None, Some(2)],
        ];
        let xs = [x.a(), x.b(), x.c()];
        let ys = [y.a(), y.b(), y.c()];
        let mut acc = RingElement::zero(spec);
        for i in 0..3 {
            for j in 0..3 {
                if let Some(k) = table[i][j] {
                    acc = acc + basis[k].scale(xs[i] * ys[j]).unwrap();
                }
            }
        }
        acc
    }

    #[test]
    fn relation_table_matches_formula() {
        let f = f9();
        let els: Vec<_> = RingElement::elements(f).collect();
        assert_eq!(els.len(), 729);
        for &x in els.iter().step_by(7) {
            for &y in els.iter().step_by(5) {
                assert_eq!(x * y, mul_by_relations(x, y));
            }
        }
    }

    #[test]
    fn defining_relations() {
        let f = f9();
        let (u, v) = (RingElement::u(f), RingElement::v(f));
        assert_eq!(u * v, RingElement::zero(f));
        assert_eq!(v * u, RingElement::zero(f));
        assert_eq!(u * u, u);
        assert_eq!(v * v, v);
        let alpha = RingElement::from_ints(f, 1, -2, -2);
        assert_eq!(alpha * alpha, RingElement::one(f));
    }

    #[test]
    fn split_examples() {
        let f = f9();
        let ints = |s: [FieldElement; 3]| s.map(|e| e.value());
        assert_eq!(ints(RingElement::u(f).split()), [0, 1, 0]);
        assert_eq!(ints(RingElement::one(f).split()), [1, 1, 1]);
        assert_eq!(
            ints(RingElement::from_ints(f, 1, -2, -2).split()),
            [1, 2, 2]
        );
    }

    #[test]
    fn join_examples() {
        let f = f9();
        let j = |a, b, c| RingElement::join(f.from_int(a), f.from_int(b), f.from_int(c)).unwrap();
        assert_eq!(j(1, 1, 1), RingElement::one(f));
        assert_eq!(j(0, 1, 0), RingElement::u(f));
        assert_eq!(j(1, -1, -1), RingElement::from_ints(f, 1, -2, -2));
        let g = f25();
        assert_eq!(
            RingElement::join(f.one(), g.one(), f.one()),
            Err(Error::SpecMismatch)
        );
    }

    #[test]
    fn unit_examples() {
        let f = f9();
        assert!(RingElement::from_ints(f, 1, -2, -2).is_unit());
        assert!(!RingElement::u(f).is_unit());
        assert!(RingElement::from_ints(f, 1, 1, 0).is_unit());
        assert_eq!(RingElement::one(f).inv().unwrap(), RingElement::one(f));
        let alpha = RingElement::from_ints(f, 1, -2, -2);
        assert_eq!(alpha.inv().unwrap(), alpha);
        assert!(matches!(RingElement::u(f).inv(), Err(Error::NotAUnit(_))));
    }

    #[test]
    fn theta_examples() {
        let f = f9();
        let theta = Automorphism::new(f, 1).unwrap();
        assert_eq!(RingElement::u(f).theta(&theta).unwrap(), RingElement::u(f));
        let w = f.generator();
        let x = RingElement::new(w, w, f.zero()).unwrap();
        let w3 = theta.apply(w).unwrap();
        assert_eq!(
            x.theta(&theta).unwrap(),
            RingElement::new(w3, w3, f.zero()).unwrap()
        );
        assert_eq!(w3, f.from_coords(&[0, 2]).unwrap());
        for r in RingElement::elements(f) {
            assert_eq!(r.theta_pow(&theta, 2), r);
        }
        assert!(RingElement::from_ints(f, 1, -2, -2).is_fixed_by(&theta));
        assert!(!RingElement::from_field(w).is_fixed_by(&theta));
        let id = Automorphism::identity(f);
        assert!(RingElement::elements(f).all(|r| r.is_fixed_by(&id)));
    }

    #[test]
    fn split_is_a_ring_isomorphism() {
        let f = f9();
        let els: Vec<_> = RingElement::elements(f).collect();
        for &x in &els {
            let s = x.split();
            assert_eq!(RingElement::join(s[0], s[1], s[2]).unwrap(), x);
        }
        for &x in &els {
            for &y in els.iter().step_by(11) {
                let (sx, sy, sxy) = (x.split(), y.split(), (x * y).split());
                let ssum = (x + y).split();
                for i in 0..3 {
                    assert_eq!(sxy[i], sx[i] * sy[i]);
                    assert_eq!(ssum[i], sx[i] + sy[i]);
                }
            }
        }
    }

    #[test]
    fn unit_criterion_matches_search() {
        let f = f9();
        let els: Vec<_> = RingElement::elements(f).collect();
        let one = RingElement::one(f);
        for &x in &els {
            let has_inverse = els.iter().any(|&y| x * y == one);
            assert_eq!(x.is_unit(), has_inverse, "{x}");
            if x.is_unit() {
                assert_eq!(x * x.inv().unwrap(), one);
            }
        }
        assert_eq!(els.iter().filter(|x| x.is_unit()).count(), 8 * 8 * 8);
    }

    #[test]
    fn maximal_ideals_have_index_q() {
        let f = f9();
        let els: Vec<_> = RingElement::elements(f).collect();
        let gens = [
            RingElement::one(f) - RingElement::u(f),
            RingElement::one(f) - RingElement::v(f),
            RingElement::u(f) + RingElement::v(f),
        ];
        for g in gens {
            let mut ideal: Vec<_> = els.iter().map(|&r| r * g).collect();
            ideal.sort_by_key(|r| (r.a, r.b, r.c));
            ideal.dedup();
            assert_eq!(els.len() / ideal.len(), 9);
        }
    }

    #[test]
    fn eight_self_inverse_units() {
        let f = f9();
        let listed = self_inverse_units(f);
        let found: Vec<_> = RingElement::elements(f)
            .filter(|r| r.is_self_inverse())
            .collect();
        assert_eq!(found.len(), 8);
        for r in &found {
            assert!(listed.contains(r));
        }
    }

    #[test]
    fn text_roundtrip() {
        let f = f25();
        let r = RingElement::from_ints(f, -1, 2, 2);
        assert_eq!(r.to_string(), "4|2|2");
        assert_eq!(RingElement::parse(f, "4|2|2").unwrap(), r);
        assert!(RingElement::parse(f, "4|2").is_err());
        assert!(RingElement::parse(f, "4|2|25").is_err());
    }
}
