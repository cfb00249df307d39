//! Prime-power fields `F_{p^m}` in the polynomial basis of an explicit modulus.
//!
//! A [`FieldSpec`] is validated once (odd prime characteristic, monic irreducible
//! modulus) and interned, so the handle is `Copy` and two specs with the same
//! parameters compare equal by identity. Elements are encoded by the canonical
//! integer `sum c_i p^i` of their coordinates `c_0 + c_1 w + ... + c_{m-1} w^{m-1}`,
//! where `w` is the class of `x` modulo the modulus.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};

/// Largest field order accepted; log/antilog tables are kept for every field.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

struct FieldData {
    p: u32,
    m: usize,
    q: u32,
    modulus: Vec<u32>,
    // exp[i] = g^i for a primitive element g, doubled to skip one reduction
    exp: Vec<u32>,
    log: Vec<u32>,
    // p^j mod (q - 1) for j in 0..m
    frob_exp: Vec<u64>,
}

type Registry = Mutex<HashMap<(u32, Vec<u32>), &'static FieldData>>;

fn registry() -> &'static Registry {
    static FIELDS: OnceLock<Registry> = OnceLock::new();
    FIELDS.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Handle to a validated finite field `F_q`, `q = p^m`.
#[derive(Clone, Copy)]
pub struct FieldSpec(&'static FieldData);

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.0, other.0)
    }
}

impl Eq for FieldSpec {}

impl Hash for FieldSpec {
    fn hash<H: Hasher>(&self, state: &mut H) {
        std::ptr::hash(self.0, state)
    }
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}({})", self.q(), self)
    }
}

/// Text form `p=<int> m=<int> mod=<c0,...,cm>`.
impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "p={} m={} mod={}",
            self.p(),
            self.m(),
            join_ints(self.modulus())
        )
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = None;
        let mut m = None;
        let mut modulus = None;
        for token in s.split_whitespace() {
            let (key, value) = token
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got `{token}`")))?;
            match key {
                "p" => p = Some(parse_u64(value)?),
                "m" => m = Some(parse_u64(value)?),
                "mod" => modulus = Some(parse_int_list(value)?),
                _ => return Err(Error::Parse(format!("unknown field key `{key}`"))),
            }
        }
        let p = p.ok_or_else(|| Error::Parse("missing p=".into()))?;
        let m = m.ok_or_else(|| Error::Parse("missing m=".into()))?;
        let modulus = match modulus {
            Some(list) => list,
            None => first_irreducible(to_u32(p)?, m as usize)?,
        };
        FieldSpec::new(to_u32(p)?, m as usize, &modulus)
    }
}

impl FieldSpec {
    /// Validates `(p, m, modulus)` and returns the field handle.
    ///
    /// `modulus` lists the ascending coefficients of a monic degree-`m`
    /// polynomial over `F_p`; irreducibility is checked by trial division.
    pub fn new(p: u32, m: usize, modulus: &[u32]) -> Result<FieldSpec> {
        if !is_prime(p as u64) {
            return Err(Error::NonPrime(p as u64));
        }
        if p == 2 {
            return Err(Error::EvenCharacteristic);
        }
        if m == 0 || modulus.len() != m + 1 {
            return Err(Error::DegreeMismatch {
                expected: m,
                found: modulus.len().saturating_sub(1),
            });
        }
        if let Some(&c) = modulus.iter().find(|&&c| c >= p) {
            return Err(Error::ValueOutOfRange {
                value: c as u64,
                bound: p as u64,
            });
        }
        if modulus[m] != 1 {
            return Err(Error::NotMonic);
        }
        let q = (p as u64)
            .checked_pow(m as u32)
            .filter(|&q| q <= MAX_FIELD_ORDER)
            .ok_or(Error::FieldTooLarge((p as u64).saturating_pow(m as u32)))?;
        if !is_irreducible_mod_p(modulus, p) {
            return Err(Error::ReducibleModulus { p });
        }

        let key = (p, modulus.to_vec());
        let mut fields = registry().lock().expect("field registry poisoned");
        if let Some(&data) = fields.get(&key) {
            return Ok(FieldSpec(data));
        }
        let data: &'static FieldData = Box::leak(Box::new(build_tables(p, m, q as u32, modulus)));
        fields.insert(key, data);
        Ok(FieldSpec(data))
    }

    /// The prime field `F_p`, presented with modulus `x`.
    pub fn prime(p: u32) -> Result<FieldSpec> {
        FieldSpec::new(p, 1, &[0, 1])
    }

    pub fn p(self) -> u32 {
        self.0.p
    }

    pub fn m(self) -> usize {
        self.0.m
    }

    pub fn q(self) -> u32 {
        self.0.q
    }

    pub fn modulus(self) -> &'static [u32] {
        &self.0.modulus
    }

    pub fn zero(self) -> FieldElement {
        FieldElement {
            value: 0,
            spec: self,
        }
    }

    pub fn one(self) -> FieldElement {
        FieldElement {
            value: 1,
            spec: self,
        }
    }

    /// The class `w` of `x` modulo the defining polynomial.
    pub fn generator(self) -> FieldElement {
        let value = if self.m() == 1 {
            (self.p() - self.modulus()[0]) % self.p()
        } else {
            self.p()
        };
        FieldElement { value, spec: self }
    }

    /// Element from its canonical integer encoding.
    pub fn element(self, value: u32) -> Result<FieldElement> {
        if value >= self.q() {
            return Err(Error::ValueOutOfRange {
                value: value as u64,
                bound: self.q() as u64,
            });
        }
        Ok(FieldElement { value, spec: self })
    }

    /// Element from polynomial-basis coordinates (ascending, at most `m` of them).
    pub fn from_coords(self, coords: &[u32]) -> Result<FieldElement> {
        if coords.len() > self.m() {
            return Err(Error::LengthMismatch {
                expected: self.m(),
                found: coords.len(),
            });
        }
        let mut value = 0u32;
        for &c in coords.iter().rev() {
            if c >= self.p() {
                return Err(Error::ValueOutOfRange {
                    value: c as u64,
                    bound: self.p() as u64,
                });
            }
            value = value * self.p() + c;
        }
        Ok(FieldElement { value, spec: self })
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(self, n: i64) -> FieldElement {
        let value = n.rem_euclid(self.p() as i64) as u32;
        FieldElement { value, spec: self }
    }

    pub fn elements(self) -> impl Iterator<Item = FieldElement> {
        (0..self.q()).map(move |value| FieldElement { value, spec: self })
    }

    /// Parses the canonical integer encoding.
    pub fn parse_element(self, s: &str) -> Result<FieldElement> {
        let value = parse_u64(s.trim())?;
        if value >= self.q() as u64 {
            return Err(Error::ValueOutOfRange {
                value,
                bound: self.q() as u64,
            });
        }
        Ok(FieldElement {
            value: value as u32,
            spec: self,
        })
    }

    pub(crate) fn add_raw(self, a: u32, b: u32) -> u32 {
        let p = self.p();
        if self.m() == 1 {
            return (a + b) % p;
        }
        let (mut a, mut b, mut scale, mut out) = (a, b, 1u32, 0u32);
        while a > 0 || b > 0 {
            out += ((a % p + b % p) % p) * scale;
            a /= p;
            b /= p;
            scale *= p;
        }
        out
    }

    pub(crate) fn neg_raw(self, a: u32) -> u32 {
        let p = self.p();
        if self.m() == 1 {
            return (p - a) % p;
        }
        let (mut a, mut scale, mut out) = (a, 1u32, 0u32);
        while a > 0 {
            out += ((p - a % p) % p) * scale;
            a /= p;
            scale *= p;
        }
        out
    }

    pub(crate) fn sub_raw(self, a: u32, b: u32) -> u32 {
        self.add_raw(a, self.neg_raw(b))
    }

    pub(crate) fn mul_raw(self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let d = self.0;
        d.exp[(d.log[a as usize] + d.log[b as usize]) as usize]
    }

    pub(crate) fn inv_raw(self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let d = self.0;
        let order = d.q - 1;
        Some(d.exp[((order - d.log[a as usize]) % order) as usize])
    }

    pub(crate) fn pow_raw(self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let d = self.0;
        let order = (d.q - 1) as u64;
        let idx = (d.log[a as usize] as u64 * (e % order)) % order;
        d.exp[idx as usize]
    }

    /// `a^(p^j)`.
    pub(crate) fn frobenius_raw(self, a: u32, j: usize) -> u32 {
        if a == 0 {
            return 0;
        }
        let d = self.0;
        let order = (d.q - 1) as u64;
        let idx = (d.log[a as usize] as u64 * d.frob_exp[j % d.m]) % order;
        d.exp[idx as usize]
    }

    fn check(self, other: FieldSpec) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::SpecMismatch)
        }
    }
}

/// An element of `F_q`, carrying its field.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u32,
    spec: FieldSpec,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@F{}", self.value, self.spec.q())
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl FieldElement {
    pub fn spec(self) -> FieldSpec {
        self.spec
    }

    /// Canonical integer encoding `sum c_i p^i`.
    pub fn value(self) -> u32 {
        self.value
    }

    /// Polynomial-basis coordinates, ascending, always `m` of them.
    pub fn coords(self) -> Vec<u32> {
        let p = self.spec.p();
        let mut v = self.value;
        (0..self.spec.m())
            .map(|_| {
                let c = v % p;
                v /= p;
                c
            })
            .collect()
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn is_one(self) -> bool {
        self.value == 1
    }

    pub fn try_add(self, rhs: FieldElement) -> Result<FieldElement> {
        self.spec.check(rhs.spec)?;
        Ok(self.with(self.spec.add_raw(self.value, rhs.value)))
    }

    pub fn try_sub(self, rhs: FieldElement) -> Result<FieldElement> {
        self.spec.check(rhs.spec)?;
        Ok(self.with(self.spec.sub_raw(self.value, rhs.value)))
    }

    pub fn try_mul(self, rhs: FieldElement) -> Result<FieldElement> {
        self.spec.check(rhs.spec)?;
        Ok(self.with(self.spec.mul_raw(self.value, rhs.value)))
    }

    pub fn inv(self) -> Result<FieldElement> {
        self.spec
            .inv_raw(self.value)
            .map(|v| self.with(v))
            .ok_or(Error::DivisionByZero)
    }

    pub fn pow(self, e: u64) -> FieldElement {
        self.with(self.spec.pow_raw(self.value, e))
    }

    pub(crate) fn from_raw(spec: FieldSpec, value: u32) -> FieldElement {
        debug_assert!(value < spec.q());
        FieldElement { value, spec }
    }

    fn with(self, value: u32) -> FieldElement {
        FieldElement {
            value,
            spec: self.spec,
        }
    }
}

// The operator forms panic when the operands come from different fields;
// use the `try_*` methods where that can happen.
impl Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: FieldElement) -> FieldElement {
        self.try_add(rhs)
            .expect("field elements from different fields")
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: FieldElement) -> FieldElement {
        self.try_sub(rhs)
            .expect("field elements from different fields")
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: FieldElement) -> FieldElement {
        self.try_mul(rhs)
            .expect("field elements from different fields")
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.with(self.spec.neg_raw(self.value))
    }
}

/// The Frobenius power `theta_t: a -> a^(p^t)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Automorphism {
    spec: FieldSpec,
    t: u32,
    order: u32,
}

impl Automorphism {
    /// `theta_t` for `1 <= t <= m`; `t` need not divide `m`.
    pub fn new(spec: FieldSpec, t: u32) -> Result<Automorphism> {
        let m = spec.m();
        if t == 0 || t as usize > m {
            return Err(Error::InvalidExponent { t, m });
        }
        let order = (m / gcd(m, t as usize)) as u32;
        Ok(Automorphism { spec, t, order })
    }

    /// `theta_m`, the identity map.
    pub fn identity(spec: FieldSpec) -> Automorphism {
        Automorphism {
            spec,
            t: spec.m() as u32,
            order: 1,
        }
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    /// Smallest `k >= 1` with `theta^k = id`, i.e. `m / gcd(m, t)`.
    pub fn order(&self) -> usize {
        self.order as usize
    }

    pub fn is_identity(&self) -> bool {
        self.order == 1
    }

    /// Degree over `F_p` of the fixed subfield, `gcd(t, m)`.
    pub fn fixed_field_degree(&self) -> usize {
        gcd(self.t as usize, self.spec.m())
    }

    pub fn apply(&self, a: FieldElement) -> Result<FieldElement> {
        self.spec.check(a.spec)?;
        Ok(self.apply_pow(a, 1))
    }

    /// `theta^power(a)`. Panics if `a` is not in this automorphism's field.
    pub fn apply_pow(&self, a: FieldElement, power: usize) -> FieldElement {
        assert!(self.spec == a.spec, "field element from a different field");
        FieldElement::from_raw(self.spec, self.apply_pow_raw(a.value, power))
    }

    pub(crate) fn apply_pow_raw(&self, a: u32, power: usize) -> u32 {
        let j = (self.t as usize * (power % self.order as usize)) % self.spec.m();
        self.spec.frobenius_raw(a, j)
    }

    pub fn fixes(&self, a: FieldElement) -> bool {
        self.apply_pow(a, 1) == a
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The monic irreducible of degree `m` over `F_p` whose lower coefficients,
/// read as a base-`p` integer `c_0 + c_1 p + ...`, are smallest.
pub fn first_irreducible(p: u32, m: usize) -> Result<Vec<u32>> {
    if !is_prime(p as u64) {
        return Err(Error::NonPrime(p as u64));
    }
    if m == 0 {
        return Err(Error::DegreeMismatch {
            expected: 1,
            found: 0,
        });
    }
    let count = (p as u64)
        .checked_pow(m as u32)
        .filter(|&q| q <= MAX_FIELD_ORDER)
        .ok_or(Error::FieldTooLarge((p as u64).saturating_pow(m as u32)))?;
    for code in 0..count {
        let mut poly = base_digits(code, p, m);
        poly.push(1);
        if is_irreducible_mod_p(&poly, p) {
            return Ok(poly);
        }
    }
    Err(Error::ReducibleModulus { p })
}

fn base_digits(mut n: u64, p: u32, len: usize) -> Vec<u32> {
    (0..len)
        .map(|_| {
            let d = (n % p as u64) as u32;
            n /= p as u64;
            d
        })
        .collect()
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn is_irreducible_mod_p(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() - 1;
    if deg <= 1 {
        return true;
    }
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for code in 0..count {
            let mut divisor = base_digits(code, p, d);
            divisor.push(1);
            if rem_mod_p(poly, &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

// remainder of `f` by a monic `g` over F_p
fn rem_mod_p(f: &[u32], g: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u64> = f.iter().map(|&c| c as u64).collect();
    let dg = g.len() - 1;
    let p64 = p as u64;
    while r.len() > dg {
        let lead = r.pop().unwrap() % p64;
        let shift = r.len() - dg;
        if lead != 0 {
            for (j, &gj) in g[..dg].iter().enumerate() {
                r[shift + j] = (r[shift + j] + p64 * p64 - lead * gj as u64) % p64;
            }
        }
    }
    r.into_iter().map(|c| (c % p64) as u32).collect()
}

// product of coordinate vectors modulo the monic modulus
fn mul_coords(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let m = modulus.len() - 1;
    let p64 = p as u64;
    let mut prod = vec![0u64; 2 * m - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p64;
        }
    }
    let prod: Vec<u32> = prod.into_iter().map(|c| c as u32).collect();
    let mut r = rem_mod_p(&prod, modulus, p);
    r.resize(m, 0);
    r
}

fn build_tables(p: u32, m: usize, q: u32, modulus: &[u32]) -> FieldData {
    let encode = |coords: &[u32]| coords.iter().rev().fold(0u32, |acc, &c| acc * p + c);
    let order = q - 1;
    let mut exp = Vec::new();
    // Search for a primitive element in canonical order.
    for candidate in 1..q {
        let g = base_digits(candidate as u64, p, m);
        let mut cur = base_digits(1, p, m);
        let mut powers = Vec::with_capacity(order as usize);
        let mut primitive = true;
        for i in 0..order {
            let value = encode(&cur);
            if i > 0 && value == 1 {
                primitive = false;
                break;
            }
            powers.push(value);
            cur = mul_coords(&cur, &g, modulus, p);
        }
        if primitive {
            exp = powers;
            break;
        }
    }
    assert_eq!(
        exp.len(),
        order as usize,
        "irreducible modulus must yield a primitive element"
    );
    let mut log = vec![0u32; q as usize];
    for (i, &v) in exp.iter().enumerate() {
        log[v as usize] = i as u32;
    }
    let doubled: Vec<u32> = exp.iter().chain(exp.iter()).copied().collect();
    let frob_exp = (0..m)
        .map(|j| {
            let mut e = 1u64;
            for _ in 0..j {
                e = e * p as u64 % order as u64;
            }
            e
        })
        .collect();
    FieldData {
        p,
        m,
        q,
        modulus: modulus.to_vec(),
        exp: doubled,
        log,
        frob_exp,
    }
}

pub(crate) fn join_ints<T: fmt::Display>(values: &[T]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub(crate) fn parse_u64(s: &str) -> Result<u64> {
    s.trim()
        .parse::<u64>()
        .map_err(|_| Error::Parse(format!("expected a non-negative integer, got `{s}`")))
}

fn parse_int_list(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|t| parse_u64(t).and_then(to_u32))
        .collect()
}

fn to_u32(v: u64) -> Result<u32> {
    u32::try_from(v).map_err(|_| Error::ValueOutOfRange {
        value: v,
        bound: u32::MAX as u64,
    })
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

    // a^e by plain repeated multiplication, independent of the log tables
    fn naive_pow(a: FieldElement, e: u64) -> FieldElement {
        let mut acc = a.spec().one();
        for _ in 0..e {
            acc = acc * a;
        }
        acc
    }

    #[test]
    fn make_fields() {
        assert_eq!(f9().q(), 9);
        assert_eq!(f25().q(), 25);
        let f3 = FieldSpec::new(3, 1, &[0, 1]).unwrap();
        assert_eq!(f3.q(), 3);
        assert_eq!(f3, FieldSpec::prime(3).unwrap());
        assert_eq!(f9(), f9());
        assert_ne!(f9(), FieldSpec::new(3, 2, &[2, 2, 1]).unwrap());
    }

    #[test]
    fn construction_errors() {
        assert_eq!(FieldSpec::new(9, 1, &[0, 1]), Err(Error::NonPrime(9)));
        assert_eq!(
            FieldSpec::new(2, 2, &[1, 1, 1]),
            Err(Error::EvenCharacteristic)
        );
        assert_eq!(
            FieldSpec::new(3, 2, &[2, 0, 1]),
            Err(Error::ReducibleModulus { p: 3 })
        );
        assert_eq!(
            FieldSpec::new(3, 2, &[1, 1]),
            Err(Error::DegreeMismatch {
                expected: 2,
                found: 1
            })
        );
        assert_eq!(FieldSpec::new(3, 2, &[1, 0, 2]), Err(Error::NotMonic));
        // x^4 + 1 = (x^2 + x + 2)(x^2 + 2x + 2) over F_3 has no root but is reducible
        assert_eq!(
            FieldSpec::new(3, 4, &[1, 0, 0, 0, 1]),
            Err(Error::ReducibleModulus { p: 3 })
        );
        assert!(FieldSpec::new(3, 4, &[2, 0, 0, 1, 1]).is_ok());
    }

    #[test]
    fn parse_and_display() {
        let f: FieldSpec = "p=3 m=2 mod=1,0,1".parse().unwrap();
        assert_eq!(f, f9());
        assert_eq!(f.to_string(), "p=3 m=2 mod=1,0,1");
        assert!("p=3 m=2".parse::<FieldSpec>().is_ok());
        assert!("p=3 mod=1,0,1".parse::<FieldSpec>().is_err());
        assert!("p=3 m=2 mod=1,x,1".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn default_modulus_choice() {
        assert_eq!(first_irreducible(3, 2).unwrap(), vec![1, 0, 1]);
        assert_eq!(first_irreducible(5, 2).unwrap(), vec![2, 0, 1]);
        assert_eq!(first_irreducible(7, 1).unwrap(), vec![0, 1]);
    }

    #[test]
    fn addition_examples() {
        let f = f9();
        assert_eq!(f.from_int(1) + f.from_int(2), f.zero());
        assert_eq!(f.generator() + f.zero(), f.generator());
        let g = f25();
        assert_eq!(g.from_int(4) + g.from_int(1), g.zero());
        assert_eq!(g.from_int(4) - g.from_int(1), g.from_int(3));
        assert_eq!(-g.generator(), g.from_coords(&[0, 4]).unwrap());
    }

    #[test]
    fn multiplication_examples() {
        let f = f9();
        let w = f.generator();
        assert_eq!(w * w, f.from_int(2));
        let g = f25();
        let w = g.generator();
        assert_eq!(w * w, g.from_coords(&[4, 4]).unwrap());
        for a in g.elements() {
            assert_eq!(a * g.one(), a);
        }
    }

    #[test]
    fn inverses() {
        let f = f9();
        assert_eq!(f.one().inv().unwrap(), f.one());
        assert_eq!(f.from_int(2).inv().unwrap(), f.from_int(2));
        // exhaustive search oracle for w^{-1}
        let w = f.generator();
        let found: Vec<_> = f.elements().filter(|&b| w * b == f.one()).collect();
        assert_eq!(found, vec![f.from_coords(&[0, 2]).unwrap()]);
        assert_eq!(w.inv().unwrap(), found[0]);
        assert_eq!(f.zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn spec_mismatch_is_an_error() {
        let a = f9().one();
        let b = f25().one();
        assert_eq!(a.try_add(b), Err(Error::SpecMismatch));
        assert_eq!(a.try_mul(b), Err(Error::SpecMismatch));
        let theta = Automorphism::new(f9(), 1).unwrap();
        assert_eq!(theta.apply(b), Err(Error::SpecMismatch));
    }

    #[test]
    fn frobenius_examples() {
        let f = f9();
        let theta = Automorphism::new(f, 1).unwrap();
        let w = f.generator();
        // oracle: w^3 by repeated multiplication
        assert_eq!(naive_pow(w, 3), f.from_coords(&[0, 2]).unwrap());
        assert_eq!(theta.apply(w).unwrap(), naive_pow(w, 3));
        for c in 0..3 {
            assert_eq!(theta.apply(f.from_int(c)).unwrap(), f.from_int(c));
        }
        for a in f.elements() {
            assert_eq!(theta.apply_pow(a, 2), a);
        }
    }

    #[test]
    fn automorphism_orders() {
        assert_eq!(Automorphism::new(f9(), 1).unwrap().order(), 2);
        assert_eq!(Automorphism::new(f25(), 1).unwrap().order(), 2);
        assert_eq!(Automorphism::new(f9(), 2).unwrap().order(), 1);
        let f81 = FieldSpec::new(3, 4, &[2, 0, 0, 1, 1]).unwrap();
        assert_eq!(Automorphism::new(f81, 2).unwrap().order(), 2);
        assert_eq!(Automorphism::new(f81, 3).unwrap().order(), 4);
        assert!(Automorphism::new(f81, 0).is_err());
        assert!(Automorphism::new(f81, 5).is_err());
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for spec in [f9(), f25(), FieldSpec::prime(7).unwrap()] {
            let els: Vec<_> = spec.elements().collect();
            for &a in &els {
                assert_eq!(a + (-a), spec.zero());
                if !a.is_zero() {
                    assert_eq!(a * a.inv().unwrap(), spec.one());
                }
                for &b in &els {
                    assert_eq!(a + b, b + a);
                    assert_eq!(a * b, b * a);
                }
            }
            for &a in els.iter().step_by(2) {
                for &b in els.iter().step_by(3) {
                    for &c in &els {
                        assert_eq!((a + b) + c, a + (b + c));
                        assert_eq!((a * b) * c, a * (b * c));
                        assert_eq!(a * (b + c), a * b + a * c);
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_is_a_ring_automorphism() {
        let f81 = FieldSpec::new(3, 4, &[2, 0, 0, 1, 1]).unwrap();
        for spec in [f9(), f25(), f81] {
            for t in 1..=spec.m() as u32 {
                let theta = Automorphism::new(spec, t).unwrap();
                for a in spec.elements() {
                    assert_eq!(
                        theta.apply_pow(a, 1),
                        naive_pow(a, (spec.p() as u64).pow(t))
                    );
                    assert_eq!(theta.apply_pow(a, theta.order()), a);
                    for b in spec.elements().step_by(5) {
                        assert_eq!(
                            theta.apply_pow(a * b, 1),
                            theta.apply_pow(a, 1) * theta.apply_pow(b, 1)
                        );
                        assert_eq!(
                            theta.apply_pow(a + b, 1),
                            theta.apply_pow(a, 1) + theta.apply_pow(b, 1)
                        );
                    }
                }
                let fixed = spec.elements().filter(|&a| theta.fixes(a)).count();
                assert_eq!(
                    fixed as u32,
                    spec.p().pow(theta.fixed_field_degree() as u32)
                );
            }
        }
    }

    #[test]
    fn coords_roundtrip() {
        let f = f25();
        for a in f.elements() {
            assert_eq!(f.from_coords(&a.coords()).unwrap(), a);
            assert_eq!(f.parse_element(&a.to_string()).unwrap(), a);
        }
        assert!(f.parse_element("25").is_err());
    }
}
