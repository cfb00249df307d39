use crate::error::{Error, Result};
use crate::finite_field::Automorphism;
use crate::skew_poly::Coefficient;

/// Shift operators on vectors over `F_q` or `R`, indexed from 0.
#[derive(Clone, Debug, PartialEq)]
pub enum ShiftKind<C> {
    /// `(c_0, ..., c_{n-1}) -> (alpha theta(c_{n-1}), theta(c_0), ..., theta(c_{n-2}))`.
    SkewConstacyclic { alpha: C, aut: Automorphism },
    /// The same rotation without the twist.
    Constacyclic { alpha: C },
    /// One skew constacyclic shift per block; the number of blocks is `units.len()`.
    SkewQuasiCyclic { units: Vec<C>, aut: Automorphism },
    /// Moves the last block of length `block_len`, scaled by `alpha`, to the front.
    QuasiTwisted { alpha: C, block_len: usize },
}

impl<C: Coefficient> ShiftKind<C> {
    pub fn apply(&self, v: &[C]) -> Result<Vec<C>> {
        match self {
            ShiftKind::SkewConstacyclic { alpha, aut } => Ok(rotate(v, *alpha, Some(aut))),
            ShiftKind::Constacyclic { alpha } => Ok(rotate(v, *alpha, None)),
            ShiftKind::SkewQuasiCyclic { units, aut } => {
                let blocks = units.len();
                if blocks == 0 || !v.len().is_multiple_of(blocks) {
                    return Err(Error::IndexMismatch {
                        len: v.len(),
                        index: blocks,
                    });
                }
                let len = v.len() / blocks;
                let mut out = Vec::with_capacity(v.len());
                for (b, unit) in units.iter().enumerate() {
                    out.extend(rotate(&v[b * len..(b + 1) * len], *unit, Some(aut)));
                }
                Ok(out)
            }
            ShiftKind::QuasiTwisted { alpha, block_len } => {
                let l = *block_len;
                if l == 0 || !v.len().is_multiple_of(l) {
                    return Err(Error::IndexMismatch {
                        len: v.len(),
                        index: l,
                    });
                }
                let split = v.len() - l;
                let mut out: Vec<C> = v[split..].iter().map(|&c| *alpha * c).collect();
                out.extend_from_slice(&v[..split]);
                Ok(out)
            }
        }
    }
}

pub fn apply_shift<C: Coefficient>(kind: &ShiftKind<C>, v: &[C]) -> Result<Vec<C>> {
    kind.apply(v)
}

fn rotate<C: Coefficient>(v: &[C], alpha: C, aut: Option<&Automorphism>) -> Vec<C> {
    let twist = |c: C| match aut {
        Some(a) => c.twist(a, 1),
        None => c,
    };
    let Some((&last, init)) = v.split_last() else {
        return Vec::new();
    };
    let mut out = Vec::with_capacity(v.len());
    out.push(alpha * twist(last));
    out.extend(init.iter().map(|&c| twist(c)));
    out
}
