use crate::freealg::Weight;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{what} must be non-negative, got {value}")]
    Negative { what: &'static str, value: i64 },
    #[error("binomial index out of range: p = {p}, m = {m}")]
    BinomialRange { m: i64, p: i64 },
    #[error("exact division failed: nonzero remainder")]
    InexactDivision,
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error("wrong weight: expected {expected}, found {found}")]
    WrongWeight { expected: Weight, found: Weight },
    #[error("word is not of the form θ_i^(a) θ_j θ_i^(b)")]
    NotMonomialShape,
    #[error("Cartan entry a_ij must be non-positive, got {0}")]
    PositiveCartanEntry(i64),
    #[error("number of arrows must be at least 1")]
    NoArrows,
    #[error("weight parameter m = {m} is outside the basis regime m <= N = {n}")]
    OutsideBasisRegime { m: u32, n: u32 },
    #[error("element has a nonzero residual outside the requested subalgebra line")]
    NotInSubalgebra,
    #[error("θ_i-component is not integral over Z[v, v^-1]")]
    NotIntegral,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("mismatched {0}")]
    Mismatch(&'static str),
    #[error("point count {points} exceeds the cap {cap}")]
    CapExceeded { points: u128, cap: u64 },
    #[error("group element has a singular block")]
    SingularGroupElement,
    #[error("operation requires the {0} orientation")]
    Orientation(&'static str),
    #[error("representation is not injective at i")]
    NotInjective,
    #[error("function does not vanish off the locus")]
    NotSupportedOnLocus,
    #[error("dimension vector {0} is not reflectable at i")]
    NotReflectable(Weight),
    #[error("division by zero in Q(√q)")]
    DivisionByZero,
}
