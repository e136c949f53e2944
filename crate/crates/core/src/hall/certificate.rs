use alloc::vec::Vec;

use super::HallFunction;
use crate::error::{Error, Result};

/// Rank over `Q(√q)` of the value vectors of `fs`, by exact elimination.
pub fn rank_certificate(fs: &[HallFunction]) -> Result<usize> {
    let Some(first) = fs.first() else {
        return Ok(0);
    };
    for f in &fs[1..] {
        f.check_compatible(first)?;
        if f.space().dims() != first.space().dims() {
            return Err(Error::Mismatch("dimension vectors"));
        }
    }
    let mut rows: Vec<Vec<_>> = fs.iter().map(|f| f.values().to_vec()).collect();
    let cols = first.values().len();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][c].inv()?;
        let pivot: Vec<_> = rows[rank].iter().map(|x| x * &inv).collect();
        for r in rank + 1..rows.len() {
            let factor = rows[r][c].clone();
            if factor.is_zero() {
                continue;
            }
            for (x, y) in rows[r].iter_mut().zip(&pivot) {
                *x = &*x - &(&factor * y);
            }
        }
        rows[rank] = pivot;
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    Ok(rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::{theta_y, Generator::*, Weight};
    use crate::hall::{varpi, HallSpace, QuiverShape};
    use crate::scalar::{EvalConvention, SqrtQValue};

    #[test]
    fn small_ranks() {
        let conv = EvalConvention::PlusSqrt;
        let sp = HallSpace::new(QuiverShape::q(1).unwrap(), Weight::new(1, 1), 2).unwrap();
        let ji = varpi(&theta_y(&[(J, 1), (I, 1)]), &sp, conv).unwrap();
        let ij = varpi(&theta_y(&[(I, 1), (J, 1)]), &sp, conv).unwrap();
        assert_eq!(rank_certificate(&[ji.clone(), ij]).unwrap(), 2);
        assert_eq!(rank_certificate(&[ji.clone(), ji.clone()]).unwrap(), 1);
        let scaled = ji.scale(&SqrtQValue::sqrt_q(2));
        assert_eq!(rank_certificate(&[ji, scaled]).unwrap(), 1);
        assert_eq!(rank_certificate(&[]).unwrap(), 0);
    }
}
