use super::{locus_indicator, GradedDims, HallFunction, HallSpace, Locus, Orientation, RepPoint};
use crate::error::{Error, Result};
use crate::ffield::Mat;
use crate::freealg::Weight;
use crate::scalar::SqrtQValue;

/// `s_i (d_i, d_j) = (N d_j - d_i, d_j)`.
pub fn reflected_dims(dims: GradedDims, arrows: u32) -> Result<GradedDims> {
    let total = arrows * dims.j;
    if dims.i > total {
        return Err(Error::NotReflectable(dims));
    }
    Ok(Weight::new(total - dims.i, dims.j))
}

/// For `y` in the source-open locus of `Q'`, a point `x` of `Q` such that
/// `0 → V'_i → ⊕_h V_j → V_i → 0` (maps `y`, then `x`) is exact. The rows of
/// the stacked `x` are the reduced basis of the left kernel of the stacked `y`.
pub fn reflect_point(space: &HallSpace, y: &RepPoint) -> Result<RepPoint> {
    if space.shape().orientation() != Orientation::SourceAtI {
        return Err(Error::Orientation("source-at-i"));
    }
    let f = space.field();
    let d_j = space.dims().j as usize;
    let stacked = y.vstacked();
    if stacked.rank(f) != space.dims().i as usize {
        return Err(Error::NotInjective);
    }
    let x = stacked.transpose().null_space(f);
    let mats = (0..space.shape().arrows() as usize)
        .map(|h| x.column_block(h * d_j, d_j))
        .collect();
    Ok(RepPoint::new(mats))
}

/// The BGP-reflection map from functions on the sink-open locus of `Q` at
/// `ν` to functions on the source-open locus of `Q'` at `s_i ν`:
/// `g(y) = f(x)` with `x` from [`reflect_point`], scaled by `q^{s/2}` where
/// `s = m^2 - m'^2` compares `dim GL(V_i)` with `dim GL(V'_i)`.
pub fn omega_i(f: &HallFunction) -> Result<HallFunction> {
    omega_i_with_basis(f, |_| None)
}

/// [`omega_i`] with the splitting at point index `k` replaced by `A_k X`
/// whenever `basis(k)` returns `Some(A_k)`.
pub fn omega_i_with_basis(
    f: &HallFunction,
    mut basis: impl FnMut(u64) -> Option<Mat>,
) -> Result<HallFunction> {
    let src = *f.space();
    if src.shape().orientation() != Orientation::SinkAtI {
        return Err(Error::Orientation("sink-at-i"));
    }
    let inside = locus_indicator(&src, Locus::SinkOpen)?;
    if f.support().any(|k| !inside(&src.decode(k))) {
        return Err(Error::NotSupportedOnLocus);
    }
    let arrows = src.shape().arrows();
    let dims = src.dims();
    let target_dims = reflected_dims(dims, arrows)?;
    let target = HallSpace::with_cap(src.shape().reversed(), target_dims, src.q(), src.cap())?;
    let field = src.field();
    let q = src.q();
    let m = i64::from(dims.i);
    let m2 = i64::from(target_dims.i);
    let scale = SqrtQValue::q_half_power(m * m - m2 * m2, q);

    let mut values = alloc::vec::Vec::with_capacity(target.num_points() as usize);
    for k in 0..target.num_points() {
        let y = target.decode(k);
        let x = match reflect_point(&target, &y) {
            Ok(x) => x,
            Err(Error::NotInjective) => {
                values.push(SqrtQValue::zero(q));
                continue;
            }
            Err(e) => return Err(e),
        };
        let x = match basis(k) {
            None => x,
            Some(a) => {
                if a.inverse(field).is_none() {
                    return Err(Error::SingularGroupElement);
                }
                RepPoint::new(x.arrows().iter().map(|b| a.mul(b, field)).collect())
            }
        };
        values.push(f.value(src.encode(&x)) * &scale);
    }
    Ok(HallFunction::from_values(target, f.conv(), values).with_locus(Some(Locus::SourceOpen)))
}
