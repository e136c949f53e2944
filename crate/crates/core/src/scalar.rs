//! The scalar field `Q(√q)` for a prime `q`, and evaluation of Laurent
//! polynomials at `v = ±q^(±1/2)`.

use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ffield::is_prime;
use crate::laurent::LaurentPoly;

/// `a + b√q` with rational `a`, `b`. The prime `q` travels with the value;
/// combining values with different `q` panics.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SqrtQValue {
    a: BigRational,
    b: BigRational,
    q: u32,
}

impl SqrtQValue {
    pub fn new(a: BigRational, b: BigRational, q: u32) -> Self {
        Self { a, b, q }
    }

    pub fn zero(q: u32) -> Self {
        Self::from_int(0, q)
    }

    pub fn one(q: u32) -> Self {
        Self::from_int(1, q)
    }

    pub fn from_int(n: impl Into<BigInt>, q: u32) -> Self {
        Self::new(BigRational::from_integer(n.into()), BigRational::zero(), q)
    }

    pub fn from_ratio(num: i64, den: i64, q: u32) -> Self {
        Self::new(
            BigRational::new(num.into(), den.into()),
            BigRational::zero(),
            q,
        )
    }

    /// `√q`.
    pub fn sqrt_q(q: u32) -> Self {
        Self::new(BigRational::zero(), BigRational::one(), q)
    }

    /// `q^(k/2)` for any integer `k`.
    pub fn q_half_power(k: i64, q: u32) -> Self {
        let whole = k.div_euclid(2);
        let odd = k.rem_euclid(2) == 1;
        let base = BigRational::from_integer(BigInt::from(q));
        let mag = pow_rational(&base, whole);
        if odd {
            Self::new(BigRational::zero(), mag, q)
        } else {
            Self::new(mag, BigRational::zero(), q)
        }
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn sqrt_part(&self) -> &BigRational {
        &self.b
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// The norm `a² − b²q` to `Q`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.b * &self.b * BigRational::from_integer(self.q.into())
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        Ok(Self::new(&self.a / &n, -(&self.b / &n), self.q))
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one(self.q);
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.q, other.q, "mixing Q(√q) values with different q");
    }
}

fn pow_rational(base: &BigRational, k: i64) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..k.unsigned_abs() {
        acc *= base;
    }
    if k < 0 {
        acc.recip()
    } else {
        acc
    }
}

impl fmt::Display for SqrtQValue {
    /// `a`, `b*sqrt(q)` or `a + b*sqrt(q)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = self.q;
        match (self.a.is_zero(), self.b.is_zero()) {
            (true, true) => f.write_str("0"),
            (false, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}*sqrt({q})", self.b),
            (false, false) => {
                let sign = if self.b.is_negative() { '-' } else { '+' };
                write!(f, "{} {sign} {}*sqrt({q})", self.a, self.b.abs())
            }
        }
    }
}

impl fmt::Debug for SqrtQValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SqrtQValue({self})")
    }
}

impl Add for &SqrtQValue {
    type Output = SqrtQValue;
    fn add(self, rhs: &SqrtQValue) -> SqrtQValue {
        self.check(rhs);
        SqrtQValue::new(&self.a + &rhs.a, &self.b + &rhs.b, self.q)
    }
}

impl AddAssign<&SqrtQValue> for SqrtQValue {
    fn add_assign(&mut self, rhs: &SqrtQValue) {
        self.check(rhs);
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl Sub for &SqrtQValue {
    type Output = SqrtQValue;
    fn sub(self, rhs: &SqrtQValue) -> SqrtQValue {
        self.check(rhs);
        SqrtQValue::new(&self.a - &rhs.a, &self.b - &rhs.b, self.q)
    }
}

impl Mul for &SqrtQValue {
    type Output = SqrtQValue;
    fn mul(self, rhs: &SqrtQValue) -> SqrtQValue {
        self.check(rhs);
        if self.is_zero() || rhs.is_zero() {
            return SqrtQValue::zero(self.q);
        }
        let q = BigRational::from_integer(self.q.into());
        let a = &self.a * &rhs.a + &self.b * &rhs.b * q;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        SqrtQValue::new(a, b, self.q)
    }
}

impl Neg for &SqrtQValue {
    type Output = SqrtQValue;
    fn neg(self) -> SqrtQValue {
        SqrtQValue::new(-&self.a, -&self.b, self.q)
    }
}

/// The image of `v` in `Q(√q)`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EvalConvention {
    /// `v ↦ +q^(-1/2)`
    PlusInvSqrt,
    /// `v ↦ -q^(-1/2)`
    MinusInvSqrt,
    /// `v ↦ +q^(1/2)`
    #[default]
    PlusSqrt,
    /// `v ↦ -q^(1/2)`
    MinusSqrt,
}

impl EvalConvention {
    pub const ALL: [EvalConvention; 4] = [
        EvalConvention::PlusInvSqrt,
        EvalConvention::MinusInvSqrt,
        EvalConvention::PlusSqrt,
        EvalConvention::MinusSqrt,
    ];

    /// Sign of the image of `v`.
    pub fn sign(self) -> i64 {
        match self {
            Self::PlusInvSqrt | Self::PlusSqrt => 1,
            Self::MinusInvSqrt | Self::MinusSqrt => -1,
        }
    }

    /// `+1` if `|v| = q^(1/2)`, `-1` if `|v| = q^(-1/2)`.
    pub fn half_exponent(self) -> i64 {
        match self {
            Self::PlusSqrt | Self::MinusSqrt => 1,
            Self::PlusInvSqrt | Self::MinusInvSqrt => -1,
        }
    }

    /// The image of `v^n`.
    pub fn v_power(self, n: i64, q: u32) -> SqrtQValue {
        let mag = SqrtQValue::q_half_power(self.half_exponent() * n, q);
        if self.sign() < 0 && n.rem_euclid(2) == 1 {
            -&mag
        } else {
            mag
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::PlusInvSqrt => "+q^-1/2",
            Self::MinusInvSqrt => "-q^-1/2",
            Self::PlusSqrt => "+q^1/2",
            Self::MinusSqrt => "-q^1/2",
        }
    }
}

impl fmt::Display for EvalConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for EvalConvention {
    type Err = &'static str;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        let t: alloc::string::String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let t = t.strip_prefix('+').unwrap_or(&t);
        match t {
            "q^-1/2" | "q^(-1/2)" => Ok(Self::PlusInvSqrt),
            "-q^-1/2" | "-q^(-1/2)" => Ok(Self::MinusInvSqrt),
            "q^1/2" | "q^(1/2)" => Ok(Self::PlusSqrt),
            "-q^1/2" | "-q^(1/2)" => Ok(Self::MinusSqrt),
            _ => Err("expected one of +q^-1/2, -q^-1/2, +q^1/2, -q^1/2"),
        }
    }
}

/// Ring homomorphism `Z[v, v^-1] → Q(√q)` sending `v` to the convention's value.
pub fn eval_sqrt_q(x: &LaurentPoly, q: u32, conv: EvalConvention) -> Result<SqrtQValue> {
    if !is_prime(q.into()) {
        return Err(Error::NotPrime(q.into()));
    }
    Ok(eval_unchecked(x, q, conv))
}

pub(crate) fn eval_unchecked(x: &LaurentPoly, q: u32, conv: EvalConvention) -> SqrtQValue {
    let mut acc = SqrtQValue::zero(q);
    for (e, c) in x.terms() {
        let term = &conv.v_power(e, q) * &SqrtQValue::from_int(c.clone(), q);
        acc += &term;
    }
    acc
}
