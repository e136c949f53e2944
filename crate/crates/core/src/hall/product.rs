use alloc::collections::btree_map::{BTreeMap, Entry};
use alloc::vec::Vec;

use super::{GradedDims, HallFunction, HallSpace, RepPoint};
use crate::error::{Error, Result};
use crate::ffield::{echelon_subspaces, Mat, PrimeField, Subspace};
use crate::freealg::{FreeElement, Generator, Weight};
use crate::laurent::qfact_u;
use crate::scalar::{eval_unchecked, EvalConvention, SqrtQValue};

/// A pair `(W_i, W_j)` of subspaces.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedSubspace {
    pub i: Subspace,
    pub j: Subspace,
}

impl GradedSubspace {
    pub fn at(&self, g: Generator) -> &Subspace {
        match g {
            Generator::I => &self.i,
            Generator::J => &self.j,
        }
    }

    pub fn dims(&self) -> GradedDims {
        Weight::new(self.i.dim() as u32, self.j.dim() as u32)
    }
}

fn candidates(dims: GradedDims, sub: GradedDims, f: PrimeField) -> Vec<GradedSubspace> {
    if sub.i > dims.i || sub.j > dims.j {
        return Vec::new();
    }
    let wi = echelon_subspaces(dims.i as usize, sub.i as usize, f);
    let wj = echelon_subspaces(dims.j as usize, sub.j as usize, f);
    let mut out = Vec::with_capacity(wi.len() * wj.len());
    for a in &wi {
        for b in &wj {
            out.push(GradedSubspace { i: a.clone(), j: b.clone() });
        }
    }
    out
}

fn column(m: &Mat, c: usize) -> Vec<u32> {
    (0..m.rows()).map(|r| m.get(r, c)).collect()
}

fn is_stable(space: &HallSpace, x: &RepPoint, w: &GradedSubspace) -> bool {
    let (s, t) = space.shape().orientation().ends();
    let f = space.field();
    let (ws, wt) = (w.at(s), w.at(t));
    x.arrows().iter().all(|m| {
        (0..ws.dim()).all(|k| wt.coordinates(&m.mul_vec(ws.basis().row(k), f), f).is_some())
    })
}

/// `x` restricted to a stable `W`, in the echelon bases of `W`.
fn restrict_to(space: &HallSpace, x: &RepPoint, w: &GradedSubspace) -> RepPoint {
    let (s, t) = space.shape().orientation().ends();
    let f = space.field();
    let (ws, wt) = (w.at(s), w.at(t));
    let mats = x
        .arrows()
        .iter()
        .map(|m| {
            let mut out = Mat::zeros(wt.dim(), ws.dim());
            for k in 0..ws.dim() {
                let img = m.mul_vec(ws.basis().row(k), f);
                let coords = wt.coordinates(&img, f).expect("W is x-stable");
                for (r, c) in coords.into_iter().enumerate() {
                    out.set(r, k, c);
                }
            }
            out
        })
        .collect();
    RepPoint::new(mats)
}

/// `x` on `V/W`, in the basis of standard vectors at the non-pivot columns.
fn quotient_by(space: &HallSpace, x: &RepPoint, w: &GradedSubspace) -> RepPoint {
    let (s, t) = space.shape().orientation().ends();
    let f = space.field();
    let (ws, wt) = (w.at(s), w.at(t));
    let mats = x
        .arrows()
        .iter()
        .map(|m| {
            let mut out = Mat::zeros(wt.ambient_dim() - wt.dim(), ws.ambient_dim() - ws.dim());
            for (k, &c) in ws.non_pivots().iter().enumerate() {
                let coords = wt.quotient_coordinates(&column(m, c), f);
                for (r, v) in coords.into_iter().enumerate() {
                    out.set(r, k, v);
                }
            }
            out
        })
        .collect();
    RepPoint::new(mats)
}

/// All `x`-stable graded subspaces of dimension `sub`.
pub fn stable_subspaces(space: &HallSpace, x: &RepPoint, sub: GradedDims) -> Vec<GradedSubspace> {
    candidates(space.dims(), sub, space.field())
        .into_iter()
        .filter(|w| is_stable(space, x, w))
        .collect()
}

/// `(f1 ∘ f2)(x) = v^{-m} Σ_W f1(x on V/W) f2(x on W)` over the `x`-stable
/// `W` of dimension `dims(f2)`, with `m` from
/// [`QuiverShape::twist_exponent`](super::QuiverShape::twist_exponent).
pub fn hall_product(f1: &HallFunction, f2: &HallFunction) -> Result<HallFunction> {
    f1.check_compatible(f2)?;
    let (d1, d2) = (f1.space().dims(), f2.space().dims());
    let space = f1.space().at(d1 + d2)?;
    let (s1, s2) = (f1.space(), f2.space());
    let q = space.q();
    let conv = f1.conv();
    let twist = conv.v_power(space.shape().twist_exponent(d1, d2), q);
    let subs = candidates(space.dims(), d2, space.field());
    Ok(HallFunction::from_fn(space, conv, |_, x| {
        let mut acc = SqrtQValue::zero(q);
        for w in subs.iter().filter(|w| is_stable(&space, x, w)) {
            let a = f1.value(s1.encode(&quotient_by(&space, x, w)));
            if a.is_zero() {
                continue;
            }
            let b = f2.value(s2.encode(&restrict_to(&space, x, w)));
            if !b.is_zero() {
                acc += &(a * b);
            }
        }
        &acc * &twist
    }))
}

/// The algebra map from the free algebra to functions: `θ_g` goes to the
/// constant `1` on the point of the simple at `g`, `θ_g^(n)` to the n-th
/// power divided by the value of `[n]!`, and words to Hall products.
pub fn varpi(x: &FreeElement, space: &HallSpace, conv: EvalConvention) -> Result<HallFunction> {
    let dims = space.dims();
    if x.is_zero() {
        return Ok(HallFunction::zero(*space, conv));
    }
    let w = x.weight_of()?;
    if w != dims {
        return Err(Error::WrongWeight { expected: dims, found: w });
    }
    let q = space.q();
    let mut runs = BTreeMap::new();
    let mut acc = HallFunction::zero(*space, conv);
    for (word, c) in x.terms() {
        let mut f: Option<HallFunction> = None;
        for &(g, n) in word.runs().iter().rev() {
            let r = match runs.entry((g, n)) {
                Entry::Occupied(e) => e.into_mut(),
                Entry::Vacant(e) => e.insert(run_function(space, conv, g, n)?),
            };
            f = Some(match f {
                None => r.clone(),
                Some(rest) => hall_product(r, &rest)?,
            });
        }
        let f = match f {
            Some(f) => f,
            None => HallFunction::constant(space.at(Weight::default())?, conv, &SqrtQValue::one(q)),
        };
        acc = acc.add(&f.scale(&eval_unchecked(c, q, conv)))?;
    }
    Ok(acc)
}

fn run_function(space: &HallSpace, conv: EvalConvention, g: Generator, n: u32) -> Result<HallFunction> {
    let q = space.q();
    let base = HallFunction::constant(space.at(Weight::of(g, 1))?, conv, &SqrtQValue::one(q));
    let mut pow = base.clone();
    for _ in 1..n {
        pow = hall_product(&base, &pow)?;
    }
    Ok(pow.scale(&eval_unchecked(&qfact_u(n), q, conv).inv()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::gaussian_count;
    use crate::freealg::{serre_element, theta_y, DividedWord};
    use crate::hall::QuiverShape;
    use crate::laurent::LaurentPoly;
    use Generator::{I, J};

    const CONV: EvalConvention = EvalConvention::PlusSqrt;

    fn space(n: u32, dims: (u32, u32), q: u32) -> HallSpace {
        HallSpace::new(QuiverShape::q(n).unwrap(), Weight::new(dims.0, dims.1), q).unwrap()
    }

    fn gen(g: Generator, q: u32, n: u32) -> HallFunction {
        HallFunction::constant(space(n, (Weight::of(g, 1).i, Weight::of(g, 1).j), q), CONV, &SqrtQValue::one(q))
    }

    #[test]
    fn stable_subspace_counts() {
        let sp = space(2, (2, 1), 3);
        let zero = sp.decode(0);
        for (wi, wj) in [(0, 0), (1, 0), (1, 1), (2, 1), (0, 1)] {
            let n = stable_subspaces(&sp, &zero, Weight::new(wi, wj)).len() as u64;
            assert_eq!(n, gaussian_count(2, wi, 3) * gaussian_count(1, wj, 3));
        }
        let sp = space(1, (1, 1), 2);
        let x = sp.decode(1);
        assert!(stable_subspaces(&sp, &x, Weight::new(0, 1)).is_empty());
        assert_eq!(stable_subspaces(&sp, &x, Weight::new(1, 0)).len(), 1);
    }

    #[test]
    fn product_examples() {
        for q in [2, 3, 5] {
            let (fi, fj) = (gen(I, q, 1), gen(J, q, 1));
            let ji = hall_product(&fj, &fi).unwrap();
            assert!(ji.values().iter().all(|v| *v == CONV.v_power(-1, q)));
            let ij = hall_product(&fi, &fj).unwrap();
            assert_eq!(*ij.value(0), SqrtQValue::one(q));
            assert!(ij.values()[1..].iter().all(SqrtQValue::is_zero));
        }
        let fi = gen(I, 2, 1);
        let ii = hall_product(&fi, &fi).unwrap();
        let three_halves_root2 = &SqrtQValue::from_ratio(3, 2, 2) * &SqrtQValue::sqrt_q(2);
        assert_eq!(ii.values(), &[three_halves_root2]);
    }

    #[test]
    fn divided_power_is_constant_one() {
        for q in [2, 3] {
            for n in 1..=3 {
                let sp = space(1, (n, 0), q);
                let f = varpi(&FreeElement::divided_power(I, n), &sp, CONV).unwrap();
                assert!(f.values().iter().all(|v| *v == SqrtQValue::one(q)));
            }
        }
    }

    #[test]
    fn varpi_f1_is_e1_avatar() {
        let sp = space(1, (1, 1), 3);
        let f = crate::freealg::reflection_word(crate::freealg::Side::Lower, 1, -1).unwrap();
        let h = varpi(&f, &sp, CONV).unwrap();
        assert!(h.value(0).is_zero());
        assert!(h.values()[1..].iter().all(|v| *v == CONV.v_power(-1, 3)));
    }

    #[test]
    fn serre_vanishes_small() {
        for n in 1..=2 {
            let sp = space(n, (n + 1, 1), 2);
            let s = serre_element(-i64::from(n)).unwrap();
            assert!(varpi(&s, &sp, CONV).unwrap().is_zero(), "N = {n}");
        }
    }

    #[test]
    fn varpi_rejects_wrong_weight() {
        let sp = space(1, (1, 1), 2);
        let x = theta_y(&[(I, 2), (J, 1)]);
        assert!(matches!(varpi(&x, &sp, CONV), Err(Error::WrongWeight { .. })));
        let unit = FreeElement::term(LaurentPoly::from(2), DividedWord::unit());
        let f = varpi(&unit, &space(1, (0, 0), 2), CONV).unwrap();
        assert_eq!(f.values(), &[SqrtQValue::from_int(2, 2)]);
    }
}
