use alloc::vec::Vec;

use super::{group_act, GroupElement, HallSpace, Locus, RepPoint};
use crate::error::{Error, Result};
use crate::scalar::{EvalConvention, SqrtQValue};

/// A function on the points of a [`HallSpace`] with values in `Q(√q)`,
/// stored densely by point index. A function produced by restriction to an
/// open locus carries that locus as a tag and vanishes off it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HallFunction {
    space: HallSpace,
    conv: EvalConvention,
    values: Vec<SqrtQValue>,
    locus: Option<Locus>,
}

impl HallFunction {
    pub fn from_values(space: HallSpace, conv: EvalConvention, values: Vec<SqrtQValue>) -> Self {
        assert_eq!(values.len() as u64, space.num_points(), "one value per point");
        Self {
            space,
            conv,
            values,
            locus: None,
        }
    }

    pub fn from_fn(
        space: HallSpace,
        conv: EvalConvention,
        mut value: impl FnMut(u64, &RepPoint) -> SqrtQValue,
    ) -> Self {
        let values = (0..space.num_points())
            .map(|k| value(k, &space.decode(k)))
            .collect();
        Self::from_values(space, conv, values)
    }

    pub fn constant(space: HallSpace, conv: EvalConvention, c: &SqrtQValue) -> Self {
        Self::from_values(space, conv, alloc::vec![c.clone(); space.num_points() as usize])
    }

    pub fn zero(space: HallSpace, conv: EvalConvention) -> Self {
        Self::constant(space, conv, &SqrtQValue::zero(space.q()))
    }

    pub(crate) fn with_locus(mut self, locus: Option<Locus>) -> Self {
        self.locus = locus;
        self
    }

    pub fn space(&self) -> &HallSpace {
        &self.space
    }

    pub fn conv(&self) -> EvalConvention {
        self.conv
    }

    pub fn q(&self) -> u32 {
        self.space.q()
    }

    pub fn locus(&self) -> Option<Locus> {
        self.locus
    }

    pub fn values(&self) -> &[SqrtQValue] {
        &self.values
    }

    pub fn value(&self, index: u64) -> &SqrtQValue {
        &self.values[index as usize]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(SqrtQValue::is_zero)
    }

    /// Indices where the value is nonzero.
    pub fn support(&self) -> impl Iterator<Item = u64> + '_ {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(k, _)| k as u64)
    }

    pub(crate) fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.space.shape() != other.space.shape() {
            return Err(Error::Mismatch("quiver shapes"));
        }
        if self.q() != other.q() {
            return Err(Error::Mismatch("field sizes"));
        }
        if self.conv != other.conv {
            return Err(Error::Mismatch("evaluation conventions"));
        }
        Ok(())
    }

    fn zip(&self, other: &Self, op: impl Fn(&SqrtQValue, &SqrtQValue) -> SqrtQValue) -> Result<Self> {
        self.check_compatible(other)?;
        if self.space.dims() != other.space.dims() {
            return Err(Error::Mismatch("dimension vectors"));
        }
        let values = self.values.iter().zip(&other.values).map(|(a, b)| op(a, b)).collect();
        let locus = if self.locus == other.locus { self.locus } else { None };
        Ok(Self::from_values(self.space, self.conv, values).with_locus(locus))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &SqrtQValue) -> Self {
        let values = self.values.iter().map(|v| v * c).collect();
        Self::from_values(self.space, self.conv, values).with_locus(self.locus)
    }

    /// Points where `self` and `expected` differ, as
    /// `(index, expected value, actual value)` in index order.
    pub fn differences(&self, expected: &Self) -> Result<Vec<(u64, SqrtQValue, SqrtQValue)>> {
        self.check_compatible(expected)?;
        if self.space.dims() != expected.space.dims() {
            return Err(Error::Mismatch("dimension vectors"));
        }
        Ok(self
            .values
            .iter()
            .zip(&expected.values)
            .enumerate()
            .filter(|(_, (a, e))| a != e)
            .map(|(k, (a, e))| (k as u64, e.clone(), a.clone()))
            .collect())
    }

    /// Points `x` with `f(g·x) ≠ f(x)`.
    pub fn invariance_defects(&self, g: &GroupElement) -> Result<Vec<u64>> {
        let mut out = Vec::new();
        for k in 0..self.space.num_points() {
            let gx = group_act(&self.space, g, &self.space.decode(k))?;
            if self.values[self.space.encode(&gx) as usize] != self.values[k as usize] {
                out.push(k);
            }
        }
        Ok(out)
    }
}
