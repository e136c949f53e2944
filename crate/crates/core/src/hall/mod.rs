//! Functions on the `F_q`-points of representation varieties of the
//! two-vertex quiver with `N` parallel arrows, in both orientations.
//!
//! `Q` has its arrows `j → i` (so `i` is a sink) and `Q'` has them `i → j`.
//! Vectors are columns; an arrow `s → t` is a `d_t × d_s` matrix, and a
//! point is the list of its arrow matrices. Points are indexed by
//! concatenating every arrow matrix in arrow order, each row-major, and
//! reading the entries as little-endian base-`q` digits.

mod avatar;
mod certificate;
mod function;
mod locus;
mod omega;
mod product;

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::ffield::{Mat, PrimeField};
use crate::freealg::{Generator, Weight};

pub use avatar::{avatar, avatar_in, Avatar};
pub use certificate::rank_certificate;
pub use function::HallFunction;
pub use locus::{locus_indicator, transfer, Locus, TransferMode};
pub use omega::{omega_i, omega_i_with_basis, reflect_point, reflected_dims};
pub use product::{hall_product, stable_subspaces, varpi, GradedSubspace};

/// Default bound on the number of points of a single variety.
pub const DEFAULT_POINT_CAP: u64 = 1_000_000;

/// Dimension vector `(d_i, d_j)`.
pub type GradedDims = Weight;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    /// `Q`: arrows `j → i`.
    SinkAtI,
    /// `Q'`: arrows `i → j`.
    SourceAtI,
}

impl Orientation {
    /// `(source, target)` of every arrow.
    pub fn ends(self) -> (Generator, Generator) {
        match self {
            Orientation::SinkAtI => (Generator::J, Generator::I),
            Orientation::SourceAtI => (Generator::I, Generator::J),
        }
    }

    pub fn reversed(self) -> Self {
        match self {
            Orientation::SinkAtI => Orientation::SourceAtI,
            Orientation::SourceAtI => Orientation::SinkAtI,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuiverShape {
    arrows: u32,
    orientation: Orientation,
}

impl QuiverShape {
    pub fn new(arrows: u32, orientation: Orientation) -> Result<Self> {
        if arrows == 0 {
            return Err(Error::NoArrows);
        }
        Ok(Self { arrows, orientation })
    }

    /// `Q` with `n` arrows `j → i`.
    pub fn q(n: u32) -> Result<Self> {
        Self::new(n, Orientation::SinkAtI)
    }

    /// `Q'` with `n` arrows `i → j`.
    pub fn q_prime(n: u32) -> Result<Self> {
        Self::new(n, Orientation::SourceAtI)
    }

    pub fn arrows(self) -> u32 {
        self.arrows
    }

    pub fn orientation(self) -> Orientation {
        self.orientation
    }

    pub fn reversed(self) -> Self {
        Self {
            arrows: self.arrows,
            orientation: self.orientation.reversed(),
        }
    }

    /// `m_{ν',ν''} = Σ_k ν'_k ν''_k + Σ_ρ ν'_{s(ρ)} ν''_{t(ρ)}`; the Hall
    /// product carries the factor `v^{-m}`.
    pub fn twist_exponent(self, first: GradedDims, second: GradedDims) -> i64 {
        let (s, t) = self.orientation.ends();
        let diag = i64::from(first.i) * i64::from(second.i) + i64::from(first.j) * i64::from(second.j);
        let arrows = i64::from(self.arrows) * i64::from(first.get(s)) * i64::from(second.get(t));
        -(diag + arrows)
    }
}

/// A point: one matrix per arrow, in arrow order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RepPoint {
    mats: Vec<Mat>,
}

impl RepPoint {
    pub fn new(mats: Vec<Mat>) -> Self {
        Self { mats }
    }

    pub fn arrow(&self, h: usize) -> &Mat {
        &self.mats[h]
    }

    pub fn arrows(&self) -> &[Mat] {
        &self.mats
    }

    /// The arrows side by side, `d_t × N d_s`.
    pub fn hstacked(&self) -> Mat {
        let rows = self.mats.first().map_or(0, Mat::rows);
        Mat::hstack(&self.mats, rows)
    }

    /// The arrows on top of each other, `N d_t × d_s`.
    pub fn vstacked(&self) -> Mat {
        let cols = self.mats.first().map_or(0, Mat::cols);
        Mat::vstack(&self.mats, cols)
    }
}

/// The variety `E_V(F_q)` for one shape and dimension vector.
#[derive(Debug, Clone, Copy)]
pub struct HallSpace {
    shape: QuiverShape,
    dims: GradedDims,
    field: PrimeField,
    cap: u64,
    points: u64,
}

impl PartialEq for HallSpace {
    fn eq(&self, other: &Self) -> bool {
        self.shape == other.shape && self.dims == other.dims && self.field == other.field
    }
}

impl Eq for HallSpace {}

impl HallSpace {
    pub fn new(shape: QuiverShape, dims: GradedDims, q: u32) -> Result<Self> {
        Self::with_cap(shape, dims, q, DEFAULT_POINT_CAP)
    }

    pub fn with_cap(shape: QuiverShape, dims: GradedDims, q: u32, cap: u64) -> Result<Self> {
        let field = PrimeField::new(q)?;
        let entries = Self::entry_count(shape, dims);
        let points = u128::from(q)
            .checked_pow(u32::try_from(entries).unwrap_or(u32::MAX))
            .unwrap_or(u128::MAX);
        if points > u128::from(cap) {
            return Err(Error::CapExceeded { points, cap });
        }
        Ok(Self {
            shape,
            dims,
            field,
            cap,
            points: points as u64,
        })
    }

    fn entry_count(shape: QuiverShape, dims: GradedDims) -> u64 {
        u64::from(shape.arrows) * u64::from(dims.i) * u64::from(dims.j)
    }

    /// Same shape, field and cap at other dimensions.
    pub fn at(&self, dims: GradedDims) -> Result<Self> {
        Self::with_cap(self.shape, dims, self.field.order(), self.cap)
    }

    pub fn shape(&self) -> QuiverShape {
        self.shape
    }

    pub fn dims(&self) -> GradedDims {
        self.dims
    }

    pub fn q(&self) -> u32 {
        self.field.order()
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    pub fn num_points(&self) -> u64 {
        self.points
    }

    /// `(rows, cols)` of every arrow matrix.
    pub fn arrow_shape(&self) -> (usize, usize) {
        let (s, t) = self.shape.orientation.ends();
        (self.dims.get(t) as usize, self.dims.get(s) as usize)
    }

    pub fn decode(&self, index: u64) -> RepPoint {
        debug_assert!(index < self.points);
        let (rows, cols) = self.arrow_shape();
        let q = u64::from(self.q());
        let mut rest = index;
        let mats = (0..self.shape.arrows)
            .map(|_| {
                let data = (0..rows * cols)
                    .map(|_| {
                        let d = (rest % q) as u32;
                        rest /= q;
                        d
                    })
                    .collect();
                Mat::from_rows(rows, cols, data)
            })
            .collect();
        RepPoint { mats }
    }

    pub fn encode(&self, x: &RepPoint) -> u64 {
        let q = u64::from(self.q());
        let mut index = 0u64;
        let mut place = 1u64;
        for m in &x.mats {
            for &e in m.data() {
                index += u64::from(e) * place;
                place = place.wrapping_mul(q);
            }
        }
        index
    }

    /// Every point, in index order.
    pub fn enumerate_points(&self) -> impl Iterator<Item = RepPoint> + '_ {
        (0..self.points).map(move |k| self.decode(k))
    }
}

/// An element `(g_i, g_j)` of `GL(d_i) × GL(d_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupElement {
    g_i: Mat,
    g_j: Mat,
}

impl GroupElement {
    pub fn new(g_i: Mat, g_j: Mat, f: PrimeField) -> Result<Self> {
        if g_i.inverse(f).is_none() || g_j.inverse(f).is_none() {
            return Err(Error::SingularGroupElement);
        }
        Ok(Self { g_i, g_j })
    }

    pub fn identity(dims: GradedDims) -> Self {
        Self {
            g_i: Mat::identity(dims.i as usize),
            g_j: Mat::identity(dims.j as usize),
        }
    }

    pub fn block(&self, g: Generator) -> &Mat {
        match g {
            Generator::I => &self.g_i,
            Generator::J => &self.g_j,
        }
    }
}

/// `x_ρ ↦ g_{t(ρ)} x_ρ g_{s(ρ)}^{-1}`.
pub fn group_act(space: &HallSpace, g: &GroupElement, x: &RepPoint) -> Result<RepPoint> {
    let (s, t) = space.shape.orientation.ends();
    let f = space.field;
    let gs_inv = g.block(s).inverse(f).ok_or(Error::SingularGroupElement)?;
    let gt = g.block(t);
    let mats = x.mats.iter().map(|m| gt.mul(m, f).mul(&gs_inv, f)).collect();
    Ok(RepPoint { mats })
}
