//! Laurent polynomials in `v` over the integers and the quantum numbers
//! `[n]`, `[n]!` and quantum binomials built from them.

use alloc::collections::BTreeMap;
use alloc::string::String;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An element of `Z[v, v^-1]`, stored sparsely as exponent ↦ coefficient.
///
/// No zero coefficient is ever stored, so the zero polynomial is the empty
/// map and equality is map equality.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `coeff · v^exp`.
    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff.into());
        p
    }

    /// `v^exp`.
    pub fn v_pow(exp: i64) -> Self {
        Self::monomial(1, exp)
    }

    /// `(-1)^k`.
    pub fn sign(k: i64) -> Self {
        Self::monomial(if k.rem_euclid(2) == 0 { 1 } else { -1 }, 0)
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// The single term, if the polynomial is a monomial.
    pub fn as_monomial(&self) -> Option<(i64, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms().next()
        } else {
            None
        }
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            alloc::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            alloc::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Multiply by `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.checked_add(k).expect("exponent overflow"), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// The bar involution `v ↦ v^-1`.
    pub fn bar(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division. Returns [`Error::InexactDivision`] if `divisor` does
    /// not divide `self` in `Z[v, v^-1]`.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        let (d_top, d_lead) = match divisor.terms.iter().next_back() {
            Some((e, c)) => (*e, c.clone()),
            None => return Err(Error::InexactDivision),
        };
        let d_low = divisor.min_exp().unwrap_or(0);
        let Some(low_bound) = self.min_exp().map(|m| m - d_low) else {
            return Ok(Self::zero());
        };
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((&top, lead)) = rem.terms.iter().next_back() {
            let shift = top - d_top;
            if shift < low_bound {
                return Err(Error::InexactDivision);
            }
            let (q, r) = lead.div_rem(&d_lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            let step = Self::monomial(q, shift);
            rem -= &(&step * divisor);
            quot += &step;
        }
        Ok(quot)
    }
}

impl fmt::Display for LaurentPoly {
    /// Terms in decreasing degree, e.g. `v^2 + 1 - 3*v^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let v_part: Option<String> = match *e {
                0 => None,
                1 => Some("v".into()),
                e => Some(alloc::format!("v^{e}")),
            };
            match v_part {
                None => write!(f, "{mag}")?,
                Some(v) if mag.is_one() => f.write_str(&v)?,
                Some(v) => write!(f, "{mag}*{v}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::monomial(c, 0)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1.checked_add(*e2).expect("exponent overflow"), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// The quantum integer `[n] = v^(n-1) + v^(n-3) + ... + v^(1-n)`,
/// extended by `[-n] = -[n]`.
pub fn qint(n: i64) -> LaurentPoly {
    if n < 0 {
        return -qint(-n);
    }
    LaurentPoly::from_terms((0..n).map(|k| (n - 1 - 2 * k, 1)))
}

/// `[n]! = [n][n-1]...[1]`, with `[0]! = 1`.
pub fn qfact(n: i64) -> Result<LaurentPoly> {
    if n < 0 {
        return Err(Error::Negative { what: "n", value: n });
    }
    Ok((1..=n).fold(LaurentPoly::one(), |acc, k| &acc * &qint(k)))
}

/// The quantum binomial `[m]! / ([p]! [m-p]!)`, computed by exact division.
pub fn qbinom(m: i64, p: i64) -> Result<LaurentPoly> {
    if m < 0 {
        return Err(Error::Negative { what: "m", value: m });
    }
    if p < 0 || p > m {
        return Err(Error::BinomialRange { m, p });
    }
    let num = qfact(m)?;
    let den = &qfact(p)? * &qfact(m - p)?;
    let quot = num.div_exact(&den);
    Ok(quot.expect("[m]! is divisible by [p]![m-p]!"))
}

/// Internal shorthand for indices known to be in range.
pub(crate) fn qbinom_u(m: u32, p: u32) -> LaurentPoly {
    qbinom(m.into(), p.into()).expect("binomial index in range")
}

pub(crate) fn qfact_u(n: u32) -> LaurentPoly {
    qfact(n.into()).expect("non-negative factorial")
}
