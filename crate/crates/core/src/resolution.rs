//! Exponent bookkeeping for the standard modules at weight `mi + j`: the
//! coefficients `a`, `b`, `c`, the triangular system expressing `θ_j θ_i^(m)`
//! through the elements `χ(E^(k))`, its closed-form solution with the
//! recursion that proves it, and the graded Euler characteristic of the
//! resolution of `K_m`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::freealg::{DividedWord, FreeElement, Generator};
use crate::laurent::{qbinom_u, LaurentPoly};
use crate::rank2::{from_coords, to_coords, CoordVector, Rank2Datum};

/// `a_p^(m) = p(m-p) - mN`.
pub fn a_exp(m: u32, p: u32, n: u32) -> i64 {
    let (m, p, n) = (i64::from(m), i64::from(p), i64::from(n));
    p * (m - p) - m * n
}

/// `b_p^(m) = (p-N)(m-p)`.
pub fn b_exp(m: u32, p: u32, n: u32) -> i64 {
    let (m, p, n) = (i64::from(m), i64::from(p), i64::from(n));
    (p - n) * (m - p)
}

/// `c_p^(m) = (-1)^p v^{-p(1+N-m)}`.
pub fn c_closed(m: u32, p: u32, n: u32) -> LaurentPoly {
    let (m, p, n) = (i64::from(m), i64::from(p), i64::from(n));
    LaurentPoly::monomial(if p % 2 == 0 { 1 } else { -1 }, -p * (1 + n - m))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientRow {
    pub m: u32,
    pub p: u32,
    pub a: i64,
    pub b: i64,
    pub c: LaurentPoly,
}

fn check(m: u32, p: u32, n: u32) -> Result<()> {
    Rank2Datum::new(n)?;
    if m > n {
        return Err(Error::OutsideBasisRegime { m, n });
    }
    if p > m {
        return Err(Error::BinomialRange {
            m: m.into(),
            p: p.into(),
        });
    }
    Ok(())
}

pub fn coefficients(m: u32, p: u32, n: u32) -> Result<CoefficientRow> {
    check(m, p, n)?;
    Ok(CoefficientRow {
        m,
        p,
        a: a_exp(m, p, n),
        b: b_exp(m, p, n),
        c: c_closed(m, p, n),
    })
}

/// Every row with `p ≤ m ≤ N`, ordered by `m` then `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientTable {
    pub n: u32,
    pub rows: Vec<CoefficientRow>,
}

impl CoefficientTable {
    pub fn new(n: u32) -> Result<Self> {
        let mut rows = Vec::new();
        for m in 0..=n {
            for p in 0..=m {
                rows.push(coefficients(m, p, n)?);
            }
        }
        Ok(Self { n, rows })
    }
}

/// `c^(m')_q` for all `q ≤ m' ≤ m` from
/// `c_q^(m) = -Σ_{k<q} v^{b^(m)_{k+m-q}} c_k^(k+m-q) [q choose k]`, `c_0 = 1`.
fn c_table(m: u32, n: u32) -> Vec<Vec<LaurentPoly>> {
    let mut table: Vec<Vec<LaurentPoly>> = Vec::with_capacity(m as usize + 1);
    for mm in 0..=m {
        let mut row = alloc::vec![LaurentPoly::one()];
        for q in 1..=mm {
            let mut acc = LaurentPoly::zero();
            for k in 0..q {
                let lower = k + mm - q;
                let term = LaurentPoly::v_pow(b_exp(mm, lower, n))
                    * &table[lower as usize][k as usize]
                    * qbinom_u(q, k);
                acc += &term;
            }
            row.push(-acc);
        }
        table.push(row);
    }
    table
}

pub fn c_recursive(m: u32, n: u32) -> Result<Vec<LaurentPoly>> {
    check(m, 0, n)?;
    Ok(c_table(m, n).pop().expect("table has m + 1 rows"))
}

/// `χ(E^(k))` for `k = 0..=m` by forward substitution in
/// `θ_j θ_i^(k) = Σ_{p ≤ k} v^{b_p^(k)} θ_i^(k-p) χ(E^(p))`.
fn chi_e_elements(m: u32, n: u32) -> Vec<FreeElement> {
    let mut out: Vec<FreeElement> = Vec::with_capacity(m as usize + 1);
    for k in 0..=m {
        let mut x = FreeElement::word(DividedWord::i_j_i(0, k));
        for (p, chi) in out.iter().enumerate() {
            let p = p as u32;
            let lead = FreeElement::term(LaurentPoly::v_pow(b_exp(k, p, n)), DividedWord::run(Generator::I, k - p));
            x = &x - &lead.multiply(chi);
        }
        out.push(x);
    }
    out
}

pub fn chi_e_symbolic(m: u32, n: u32) -> Result<CoordVector> {
    check(m, 0, n)?;
    let datum = Rank2Datum::new(n)?;
    let chi = chi_e_elements(m, n).pop().expect("m + 1 elements");
    to_coords(&chi, m, datum)
}

/// `Σ_{k ≤ m} v^{b_k^(m)} θ_i^(m-k) χ(E^(k))`, which should give back
/// `θ_j θ_i^(m)`.
pub fn reassemble(m: u32, n: u32) -> Result<FreeElement> {
    check(m, 0, n)?;
    let mut acc = FreeElement::zero();
    for k in 0..=m {
        let chi = from_coords(&chi_e_symbolic(k, n)?);
        let lead = FreeElement::term(LaurentPoly::v_pow(b_exp(m, k, n)), DividedWord::run(Generator::I, m - k));
        acc = &acc + &lead.multiply(&chi);
    }
    Ok(acc)
}

/// `Σ_{k=0}^{d} (-1)^k v^{k(d-1)} [d choose k]`.
pub fn qbinom_alternating(d: u32) -> Result<LaurentPoly> {
    if d == 0 {
        return Err(Error::Negative {
            what: "d - 1",
            value: -1,
        });
    }
    let mut acc = LaurentPoly::zero();
    for k in 0..=d {
        let term = LaurentPoly::monomial(if k % 2 == 0 { 1 } else { -1 }, i64::from(k) * i64::from(d - 1))
            * qbinom_u(d, k);
        acc += &term;
    }
    Ok(acc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ShadowTerm {
    pub hom_degree: u32,
    pub grade_shift: i64,
    /// `p` for the monomial `θ_i^(p) θ_j θ_i^(m-p)`.
    pub monomial: u32,
}

/// Graded Euler-characteristic shadow of the resolution of `K_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionShadow {
    pub m: u32,
    pub n: u32,
    pub terms: Vec<ShadowTerm>,
}

impl ResolutionShadow {
    /// `Σ_p (-1)^{hom degree} v^{shift} e_{monomial}`.
    pub fn euler_characteristic(&self) -> CoordVector {
        let mut coords = alloc::vec![LaurentPoly::zero(); self.m as usize + 1];
        for t in &self.terms {
            let sign = if t.hom_degree % 2 == 0 { 1 } else { -1 };
            coords[t.monomial as usize] += &LaurentPoly::monomial(sign, t.grade_shift);
        }
        CoordVector::new(coords)
    }
}

pub fn resolution_shadow(m: u32, n: u32) -> Result<ResolutionShadow> {
    check(m, 0, n)?;
    let shift = -(1 + i64::from(n) - i64::from(m));
    let terms = (0..=m)
        .map(|p| ShadowTerm {
            hom_degree: p,
            grade_shift: i64::from(p) * shift,
            monomial: p,
        })
        .collect();
    Ok(ResolutionShadow { m, n, terms })
}

pub fn euler_check(m: u32, n: u32) -> Result<bool> {
    Ok(resolution_shadow(m, n)?.euler_characteristic() == chi_e_symbolic(m, n)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(e: i64) -> LaurentPoly {
        LaurentPoly::v_pow(e)
    }

    #[test]
    fn coefficient_examples() {
        let r = coefficients(2, 0, 2).unwrap();
        assert_eq!((r.a, r.b, r.c.clone()), (-4, -4, LaurentPoly::one()));
        assert_eq!(coefficients(2, 1, 2).unwrap().c, -v(-1));
        for n in 1..=4 {
            for m in 0..=n {
                assert_eq!(coefficients(m, m, n).unwrap().b, 0);
            }
        }
        assert_eq!(coefficients(3, 0, 2), Err(Error::OutsideBasisRegime { m: 3, n: 2 }));
        assert_eq!(CoefficientTable::new(2).unwrap().rows.len(), 6);
    }

    #[test]
    fn recursion_examples() {
        assert_eq!(c_recursive(0, 3).unwrap(), alloc::vec![LaurentPoly::one()]);
        assert_eq!(c_recursive(1, 1).unwrap(), alloc::vec![LaurentPoly::one(), -v(-1)]);
        assert_eq!(
            c_recursive(2, 2).unwrap(),
            alloc::vec![LaurentPoly::one(), -v(-1), v(-2)]
        );
    }

    #[test]
    fn chi_examples() {
        assert_eq!(chi_e_symbolic(0, 2).unwrap().coords(), &[LaurentPoly::one()]);
        assert_eq!(chi_e_symbolic(1, 1).unwrap().coords(), &[LaurentPoly::one(), -v(-1)]);
        assert_eq!(
            chi_e_symbolic(2, 2).unwrap().coords(),
            &[LaurentPoly::one(), -v(-1), v(-2)]
        );
    }

    #[test]
    fn alternating_examples() {
        for d in [1, 2, 5] {
            assert!(qbinom_alternating(d).unwrap().is_zero());
        }
        assert!(qbinom_alternating(0).is_err());
    }

    #[test]
    fn shadow_examples() {
        let s = resolution_shadow(1, 1).unwrap();
        assert_eq!(
            s.terms,
            alloc::vec![
                ShadowTerm { hom_degree: 0, grade_shift: 0, monomial: 0 },
                ShadowTerm { hom_degree: 1, grade_shift: -1, monomial: 1 },
            ]
        );
        assert_eq!(resolution_shadow(0, 4).unwrap().terms.len(), 1);
        let shifts: Vec<i64> = resolution_shadow(2, 3).unwrap().terms.iter().map(|t| t.grade_shift).collect();
        assert_eq!(shifts, alloc::vec![0, -2, -4]);
        assert!(euler_check(1, 1).unwrap());
        assert!(euler_check(0, 3).unwrap());
        assert!(euler_check(3, 3).unwrap());
    }

    #[test]
    fn reassembly_small() {
        for n in 1..=3 {
            for m in 0..=n {
                assert_eq!(reassemble(m, n).unwrap(), FreeElement::word(DividedWord::i_j_i(0, m)));
            }
        }
    }
}
