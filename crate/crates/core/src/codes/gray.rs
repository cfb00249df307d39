use super::ShiftKind;
use crate::error::{Error, Result};
use crate::finite_field::{Automorphism, FieldElement};
use crate::ring_r::RingElement;
use crate::skew_poly::Coefficient;

/// `(r_1..r_n) -> (a_1..a_n, a_1+b_1..a_n+b_n, a_1+c_1..a_n+c_n)`.
pub fn gray_map(v: &[RingElement]) -> Vec<FieldElement> {
    let mut out = Vec::with_capacity(3 * v.len());
    for block in 0..3 {
        out.extend(v.iter().map(|r| r.split()[block]));
    }
    out
}

pub fn gray_inverse(v: &[FieldElement]) -> Result<Vec<RingElement>> {
    if !v.len().is_multiple_of(3) {
        return Err(Error::IndexMismatch {
            len: v.len(),
            index: 3,
        });
    }
    let n = v.len() / 3;
    (0..n)
        .map(|i| RingElement::join(v[i], v[n + i], v[2 * n + i]))
        .collect()
}

pub fn hamming_weight<C: Coefficient>(v: &[C]) -> usize {
    v.iter().filter(|c| !c.is_zero()).count()
}

pub fn lee_weight(v: &[RingElement]) -> usize {
    v.iter().map(|r| hamming_weight(&r.split())).sum()
}

/// The three-block shift matching the skew `alpha`-constacyclic shift through
/// the Gray map: block `i` uses the `i`-th CRT component of `alpha`.
pub fn pi3(alpha: RingElement, aut: Automorphism) -> ShiftKind<FieldElement> {
    ShiftKind::SkewQuasiCyclic {
        units: alpha.split().to_vec(),
        aut,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_field::FieldSpec;

    fn f9() -> FieldSpec {
        FieldSpec::new(3, 2, &[1, 0, 1]).unwrap()
    }

    #[test]
    fn gray_examples() {
        let spec = f9();
        let zero = RingElement::zero(spec);
        assert!(gray_map(&[zero; 4]).iter().all(|c| c.is_zero()));
        let ints = |v: Vec<FieldElement>| v.iter().map(|c| c.value()).collect::<Vec<_>>();
        assert_eq!(ints(gray_map(&[RingElement::u(spec)])), vec![0, 1, 0]);
        let alpha = RingElement::from_ints(spec, 1, -2, -2);
        assert_eq!(ints(gray_map(&[alpha])), vec![1, 2, 2]);
        let v = vec![alpha, RingElement::u(spec), RingElement::v(spec)];
        assert_eq!(gray_inverse(&gray_map(&v)).unwrap(), v);
        assert!(gray_inverse(&[spec.one(); 4]).is_err());
    }

    #[test]
    fn lee_examples() {
        let spec = f9();
        assert_eq!(lee_weight(&[RingElement::u(spec)]), 1);
        assert_eq!(lee_weight(&[RingElement::one(spec)]), 3);
        assert_eq!(lee_weight(&[RingElement::from_ints(spec, 1, -2, -2)]), 3);
        assert_eq!(lee_weight(&[]), 0);
    }

    #[test]
    fn isometry_on_single_coordinates() {
        let spec = f9();
        for r in RingElement::elements(spec) {
            assert_eq!(lee_weight(&[r]), hamming_weight(&gray_map(&[r])));
        }
    }
}
