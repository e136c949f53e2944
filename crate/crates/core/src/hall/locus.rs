use super::{HallFunction, HallSpace, Orientation, RepPoint};
use crate::error::{Error, Result};
use crate::scalar::SqrtQValue;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Locus {
    /// `Q` only: the arrows into `i` jointly surject onto `V_i`.
    SinkOpen,
    /// `Q'` only: the arrows out of `i` are jointly injective on `V_i`.
    SourceOpen,
    /// The arrows at `i` have joint rank at most `p`.
    Stratum(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TransferMode {
    Restrict,
    ExtendByZero,
}

/// Rank of the arrows at `i` taken together.
pub(crate) fn rank_at_i(space: &HallSpace, x: &RepPoint) -> usize {
    let stacked = match space.shape().orientation() {
        Orientation::SinkAtI => x.hstacked(),
        Orientation::SourceAtI => x.vstacked(),
    };
    stacked.rank(space.field())
}

fn check(space: &HallSpace, which: Locus) -> Result<()> {
    match (which, space.shape().orientation()) {
        (Locus::SinkOpen, Orientation::SourceAtI) => Err(Error::Orientation("sink-at-i")),
        (Locus::SourceOpen, Orientation::SinkAtI) => Err(Error::Orientation("source-at-i")),
        _ => Ok(()),
    }
}

/// Membership predicate for a locus.
pub fn locus_indicator(space: &HallSpace, which: Locus) -> Result<impl Fn(&RepPoint) -> bool + '_> {
    check(space, which)?;
    let d_i = space.dims().i as usize;
    Ok(move |x: &RepPoint| {
        let r = rank_at_i(space, x);
        match which {
            Locus::SinkOpen | Locus::SourceOpen => r == d_i,
            Locus::Stratum(p) => r <= p as usize,
        }
    })
}

/// `Restrict` zeroes `f` off the locus and tags it; `ExtendByZero` drops the
/// tag after checking that `f` vanishes off the locus.
pub fn transfer(f: &HallFunction, which: Locus, mode: TransferMode) -> Result<HallFunction> {
    let space = *f.space();
    let inside = locus_indicator(&space, which)?;
    let zero = SqrtQValue::zero(space.q());
    match mode {
        TransferMode::Restrict => {
            let g = HallFunction::from_fn(space, f.conv(), |k, x| {
                if inside(x) {
                    f.value(k).clone()
                } else {
                    zero.clone()
                }
            });
            Ok(g.with_locus(Some(which)))
        }
        TransferMode::ExtendByZero => {
            if f.locus() != Some(which) && f.support().any(|k| !inside(&space.decode(k))) {
                return Err(Error::NotSupportedOnLocus);
            }
            Ok(f.clone().with_locus(None))
        }
    }
}
