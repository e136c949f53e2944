//! Exact arithmetic for rank-2 Lusztig symmetries.
//!
//! The crate has two layers that are checked against each other:
//!
//! - a symbolic layer: Laurent polynomials in `v` ([`laurent`]), the free
//!   algebra on `θ_i, θ_j` in divided-power words ([`freealg`]), the weight
//!   spaces of weight `mi + j` with the symmetry `T_i` ([`rank2`]) and the
//!   Euler-characteristic bookkeeping of the standard-module resolutions
//!   ([`resolution`]);
//! - a numeric layer: functions on the `F_q`-points of representation
//!   varieties of the two-vertex quiver with `N` parallel arrows, with the
//!   twisted Hall convolution, the algebra map `varpi`, the reflection map
//!   `omega_i` and the sheaf avatars ([`hall`]).
//!
//! Everything is exact. Scalars on the numeric side live in `Q(√q)`
//! ([`scalar`]); finite-field linear algebra is in [`ffield`].
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod ffield;
pub mod freealg;
pub mod hall;
pub mod laurent;
pub mod rank2;
pub mod resolution;
pub mod scalar;

pub use error::{Error, Result};
pub use freealg::{DividedWord, FreeElement, Generator, Weight};
pub use hall::{
    avatar, rank_certificate, Avatar, GradedDims, HallFunction, HallSpace, Locus, Orientation,
    QuiverShape, RepPoint, TransferMode, DEFAULT_POINT_CAP,
};
pub use laurent::{qbinom, qfact, qint, LaurentPoly};
pub use rank2::{CoordVector, Direction, Rank2Datum};
pub use scalar::{eval_sqrt_q, EvalConvention, SqrtQValue};
