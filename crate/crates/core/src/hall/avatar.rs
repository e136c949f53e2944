use alloc::collections::BTreeMap;

use super::locus::rank_at_i;
use super::{locus_indicator, GradedDims, HallFunction, HallSpace, Locus, Orientation, QuiverShape};
use crate::error::{Error, Result};
use crate::ffield::gaussian_count;
use crate::freealg::Weight;
use crate::scalar::{EvalConvention, SqrtQValue};

/// Function avatars of the sheaves at weight `mi + j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Avatar {
    /// `v^{-mN}` times the indicator of the open locus, extended by zero.
    E(u32),
    /// `v^{-d_p}` times the number of `p`-dimensional `W ⊆ V_i` containing
    /// the image of `x`, with `d_p = p(m-p) + pN`. Sink-at-`i` only.
    I(u32, u32),
}

impl Avatar {
    pub fn dims(self) -> GradedDims {
        match self {
            Avatar::E(m) | Avatar::I(m, _) => Weight::new(m, 1),
        }
    }
}

pub fn avatar(kind: Avatar, shape: QuiverShape, q: u32, conv: EvalConvention) -> Result<HallFunction> {
    avatar_in(kind, &HallSpace::new(shape, kind.dims(), q)?, conv)
}

/// [`avatar`] on a given space, whose dimension vector must be `(m, 1)`.
pub fn avatar_in(kind: Avatar, space: &HallSpace, conv: EvalConvention) -> Result<HallFunction> {
    if space.dims() != kind.dims() {
        return Err(Error::WrongWeight {
            expected: kind.dims(),
            found: space.dims(),
        });
    }
    let n = i64::from(space.shape().arrows());
    let q = space.q();
    match kind {
        Avatar::E(m) => {
            let which = match space.shape().orientation() {
                Orientation::SinkAtI => Locus::SinkOpen,
                Orientation::SourceAtI => Locus::SourceOpen,
            };
            let inside = locus_indicator(space, which)?;
            let c = conv.v_power(-i64::from(m) * n, q);
            let zero = SqrtQValue::zero(q);
            Ok(HallFunction::from_fn(*space, conv, |_, x| {
                if inside(x) {
                    c.clone()
                } else {
                    zero.clone()
                }
            }))
        }
        Avatar::I(m, p) => {
            if space.shape().orientation() != Orientation::SinkAtI {
                return Err(Error::Orientation("sink-at-i"));
            }
            if p > m {
                return Err(Error::BinomialRange {
                    m: m.into(),
                    p: p.into(),
                });
            }
            let (m64, p64) = (i64::from(m), i64::from(p));
            let c = conv.v_power(-(p64 * (m64 - p64) + p64 * n), q);
            let mut by_rank = BTreeMap::new();
            Ok(HallFunction::from_fn(*space, conv, |_, x| {
                let r = rank_at_i(space, x) as u32;
                by_rank
                    .entry(r)
                    .or_insert_with(|| {
                        if r > p {
                            SqrtQValue::zero(q)
                        } else {
                            &c * &SqrtQValue::from_int(gaussian_count(m - r, p - r, q), q)
                        }
                    })
                    .clone()
            }))
        }
    }
}
