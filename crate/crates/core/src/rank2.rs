//! Weight spaces of weight `mi + j` for the rank-2 datum `a_ij = -N`:
//! coordinates in the monomial basis `θ_i^(p) θ_j θ_i^(m-p)`, the
//! projections onto `_i f` and `^i f`, the splitting `f = _i f ⊕ θ_i f`,
//! and the symmetry `T_i`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::freealg::{reflection_word, DividedWord, FreeElement, Generator, Side, Weight};
use crate::laurent::{qint, LaurentPoly};

/// `N = -a_ij`, the number of arrows `j → i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rank2Datum {
    n: u32,
}

impl Rank2Datum {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoArrows);
        }
        Ok(Self { n })
    }

    pub fn n(self) -> u32 {
        self.n
    }

    pub fn a_ij(self) -> i64 {
        -i64::from(self.n)
    }

    fn check_regime(self, m: u32) -> Result<()> {
        if m > self.n {
            return Err(Error::OutsideBasisRegime { m, n: self.n });
        }
        Ok(())
    }

    /// `f(i,j;m)`.
    pub fn f(self, m: u32) -> FreeElement {
        reflection_word(Side::Lower, m, self.a_ij()).expect("a_ij is non-positive")
    }

    /// `f'(i,j;m)`.
    pub fn f_prime(self, m: u32) -> FreeElement {
        reflection_word(Side::Upper, m, self.a_ij()).expect("a_ij is non-positive")
    }

    pub fn reflection_word(self, side: Side, m: u32) -> FreeElement {
        match side {
            Side::Lower => self.f(m),
            Side::Upper => self.f_prime(m),
        }
    }
}

/// Coordinates of a weight-`(m, 1)` element: entry `p` is the coefficient of
/// `θ_i^(p) θ_j θ_i^(m-p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordVector {
    m: u32,
    coords: Vec<LaurentPoly>,
}

impl CoordVector {
    pub fn new(coords: Vec<LaurentPoly>) -> Self {
        assert!(!coords.is_empty(), "coordinate vector has length m + 1 >= 1");
        let m = u32::try_from(coords.len() - 1).expect("length fits u32");
        Self { m, coords }
    }

    pub fn zero(m: u32) -> Self {
        Self::new(alloc::vec![LaurentPoly::zero(); m as usize + 1])
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn coords(&self) -> &[LaurentPoly] {
        &self.coords
    }

    pub fn get(&self, p: u32) -> &LaurentPoly {
        &self.coords[p as usize]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(LaurentPoly::is_zero)
    }
}

/// The monomial `θ_i^(p) θ_j θ_i^(m-p)`.
pub fn monomial(m: u32, p: u32) -> FreeElement {
    FreeElement::word(DividedWord::i_j_i(p, m - p))
}

fn check_weight(x: &FreeElement, m: u32) -> Result<()> {
    if x.is_zero() {
        return Ok(());
    }
    let found = x.weight_of()?;
    let expected = Weight::new(m, 1);
    if found != expected {
        return Err(Error::WrongWeight { expected, found });
    }
    Ok(())
}

pub fn to_coords(x: &FreeElement, m: u32, datum: Rank2Datum) -> Result<CoordVector> {
    datum.check_regime(m)?;
    check_weight(x, m)?;
    let mut out = CoordVector::zero(m);
    for (w, c) in x.terms() {
        let (a, _) = w.as_i_j_i().ok_or(Error::NotMonomialShape)?;
        out.coords[a as usize] = c.clone();
    }
    Ok(out)
}

pub fn from_coords(c: &CoordVector) -> FreeElement {
    let mut out = FreeElement::zero();
    for (p, x) in c.coords.iter().enumerate() {
        out.add_term(DividedWord::i_j_i(p as u32, c.m - p as u32), x);
    }
    out
}

/// Projection onto `_i f` (lower) or `^i f` (upper) at weight `(m, 1)`.
///
/// Lower: `c` is the coefficient of `θ_j θ_i^(m)`, the only monomial not in
/// `θ_i f`, and the image is `c · f(i,j;m)`. Upper: `c` is the coefficient of
/// `θ_i^(m) θ_j` and the image is `c · f'(i,j;m)`.
pub fn project(
    x: &FreeElement,
    side: Side,
    m: u32,
    datum: Rank2Datum,
) -> Result<(LaurentPoly, FreeElement)> {
    let coords = to_coords(x, m, datum)?;
    let c = match side {
        Side::Lower => coords.get(0).clone(),
        Side::Upper => coords.get(m).clone(),
    };
    let image = datum.reflection_word(side, m).scale(&c);
    Ok((c, image))
}

/// Split `x = c · f(i,j;m) + θ_i · y`.
///
/// `y` is found by left division by `θ_i`: the coefficient of
/// `θ_i^(a) θ_j θ_i^(b)` is divided by `[a]` and the run shortened by one.
/// Fails with [`Error::NotIntegral`] when that division leaves
/// `Z[v, v^-1]`, i.e. the θ_i-component of `x` lies in `θ_i f` but not in
/// `θ_i f_A`.
pub fn decompose_theta_i(
    x: &FreeElement,
    m: u32,
    datum: Rank2Datum,
) -> Result<(LaurentPoly, FreeElement)> {
    let (c, image) = project(x, Side::Lower, m, datum)?;
    let rest = x - &image;
    let mut y = FreeElement::zero();
    for (w, coeff) in rest.terms() {
        let (a, b) = w.as_i_j_i().ok_or(Error::NotMonomialShape)?;
        // project() removed the only word with a = 0
        assert!(a >= 1, "residual after projection starts with θ_i");
        let q = coeff
            .div_exact(&qint(a.into()))
            .map_err(|_| Error::NotIntegral)?;
        y.add_term(DividedWord::i_j_i(a - 1, b), &q);
    }
    Ok((c, y))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    Inverse,
}

/// `T_i(c · f(i,j;m)) = c · f'(i,j;N-m)` (forward) and
/// `T_i^{-1}(c · f'(i,j;m)) = c · f(i,j;N-m)` (inverse).
pub fn lusztig_t(
    x: &FreeElement,
    m: u32,
    datum: Rank2Datum,
    direction: Direction,
) -> Result<FreeElement> {
    let (side, target) = match direction {
        Direction::Forward => (Side::Lower, Side::Upper),
        Direction::Inverse => (Side::Upper, Side::Lower),
    };
    let (c, image) = project(x, side, m, datum)?;
    if image != *x {
        return Err(Error::NotInSubalgebra);
    }
    Ok(datum.reflection_word(target, datum.n - m).scale(&c))
}

/// `θ_i · y`.
pub fn left_theta_i(y: &FreeElement) -> FreeElement {
    FreeElement::divided_power(Generator::I, 1).multiply(y)
}
