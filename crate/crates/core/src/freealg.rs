//! The free algebra on `θ_i, θ_j` over `Z[v, v^-1]`, written in the basis
//! of divided-power words `θ_{g1}^(a1) θ_{g2}^(a2) ...`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};
use crate::laurent::{qbinom_u, LaurentPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    I,
    J,
}

impl Generator {
    pub fn symbol(self) -> &'static str {
        match self {
            Generator::I => "θ_i",
            Generator::J => "θ_j",
        }
    }
}

/// Dimension vector `count_i · i + count_j · j`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    pub i: u32,
    pub j: u32,
}

impl Weight {
    pub const fn new(i: u32, j: u32) -> Self {
        Self { i, j }
    }

    pub fn of(g: Generator, n: u32) -> Self {
        match g {
            Generator::I => Self::new(n, 0),
            Generator::J => Self::new(0, n),
        }
    }

    pub fn get(self, g: Generator) -> u32 {
        match g {
            Generator::I => self.i,
            Generator::J => self.j,
        }
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        Weight::new(self.i + rhs.i, self.j + rhs.j)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.i, self.j)
    }
}

/// A divided-power word in canonical form: adjacent runs have distinct
/// generators and every exponent is at least 1. The empty word is the unit.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DividedWord {
    runs: Vec<(Generator, u32)>,
}

impl DividedWord {
    pub fn unit() -> Self {
        Self::default()
    }

    /// `θ_g^(n)`; `n = 0` gives the unit word.
    pub fn run(g: Generator, n: u32) -> Self {
        if n == 0 {
            Self::unit()
        } else {
            Self { runs: alloc::vec![(g, n)] }
        }
    }

    /// `θ_i^(a) θ_j θ_i^(b)`.
    pub fn i_j_i(a: u32, b: u32) -> Self {
        let mut runs = Vec::with_capacity(3);
        if a > 0 {
            runs.push((Generator::I, a));
        }
        runs.push((Generator::J, 1));
        if b > 0 {
            runs.push((Generator::I, b));
        }
        Self { runs }
    }

    pub fn runs(&self) -> &[(Generator, u32)] {
        &self.runs
    }

    pub fn is_unit(&self) -> bool {
        self.runs.is_empty()
    }

    pub fn weight(&self) -> Weight {
        self.runs
            .iter()
            .fold(Weight::default(), |w, &(g, n)| w + Weight::of(g, n))
    }

    /// Concatenation, merging the boundary runs if they share a generator.
    /// Returns the merge coefficient `[a+b choose a]` alongside the word.
    pub fn concat(&self, other: &DividedWord) -> (LaurentPoly, DividedWord) {
        match (self.runs.last(), other.runs.first()) {
            (Some(&(g, a)), Some(&(h, b))) if g == h => {
                let mut runs = Vec::with_capacity(self.runs.len() + other.runs.len() - 1);
                runs.extend_from_slice(&self.runs[..self.runs.len() - 1]);
                runs.push((g, a + b));
                runs.extend_from_slice(&other.runs[1..]);
                (qbinom_u(a + b, a), DividedWord { runs })
            }
            _ => {
                let mut runs = self.runs.clone();
                runs.extend_from_slice(&other.runs);
                (LaurentPoly::one(), DividedWord { runs })
            }
        }
    }

    /// If the word is `θ_i^(a) θ_j θ_i^(b)`, return `(a, b)`.
    pub fn as_i_j_i(&self) -> Option<(u32, u32)> {
        use Generator::{I, J};
        match self.runs.as_slice() {
            [(J, 1)] => Some((0, 0)),
            [(I, a), (J, 1)] => Some((*a, 0)),
            [(J, 1), (I, b)] => Some((0, *b)),
            [(I, a), (J, 1), (I, b)] => Some((*a, *b)),
            _ => None,
        }
    }
}

impl fmt::Display for DividedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.runs.is_empty() {
            return f.write_str("1");
        }
        for (k, (g, n)) in self.runs.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            f.write_str(g.symbol())?;
            if *n > 1 {
                write!(f, "^({n})")?;
            }
        }
        Ok(())
    }
}

/// A finite `Z[v, v^-1]`-linear combination of divided-power words.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct FreeElement {
    terms: BTreeMap<DividedWord, LaurentPoly>,
}

impl FreeElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::word(DividedWord::unit())
    }

    pub fn word(w: DividedWord) -> Self {
        Self::term(LaurentPoly::one(), w)
    }

    pub fn term(c: LaurentPoly, w: DividedWord) -> Self {
        let mut x = Self::zero();
        x.add_term(w, &c);
        x
    }

    /// `θ_g^(n)`.
    pub fn divided_power(g: Generator, n: u32) -> Self {
        Self::word(DividedWord::run(g, n))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &DividedWord) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DividedWord, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, w: DividedWord, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        for (w, x) in &self.terms {
            out.add_term(w.clone(), &(x * c));
        }
        out
    }

    pub fn multiply(&self, other: &FreeElement) -> FreeElement {
        let mut out = FreeElement::zero();
        for (u, a) in &self.terms {
            for (w, b) in &other.terms {
                let (merge, word) = u.concat(w);
                out.add_term(word, &(&(a * b) * &merge));
            }
        }
        out
    }

    /// The common weight of all words. The zero element has no weight.
    pub fn weight_of(&self) -> Result<Weight> {
        let mut it = self.terms.keys().map(DividedWord::weight);
        let first = it.next().ok_or(Error::NotHomogeneous)?;
        if it.all(|w| w == first) {
            Ok(first)
        } else {
            Err(Error::NotHomogeneous)
        }
    }
}

impl Add for &FreeElement {
    type Output = FreeElement;
    fn add(self, rhs: &FreeElement) -> FreeElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c);
        }
        out
    }
}

impl Sub for &FreeElement {
    type Output = FreeElement;
    fn sub(self, rhs: &FreeElement) -> FreeElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), &-c);
        }
        out
    }
}

impl Mul for &FreeElement {
    type Output = FreeElement;
    fn mul(self, rhs: &FreeElement) -> FreeElement {
        self.multiply(rhs)
    }
}

impl fmt::Display for FreeElement {
    /// `θ_j*θ_i^(2) - v^-1*θ_i*θ_j*θ_i`; non-monomial coefficients are
    /// parenthesised, e.g. `(v + v^-1)*θ_i^(2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        // words with shorter leading θ_i runs first: θ_j θ_i^(2), θ_i θ_j θ_i, ...
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_cached_key(|(w, _)| {
            w.runs()
                .iter()
                .map(|&(g, n)| (g == Generator::I, n))
                .collect::<Vec<_>>()
        });
        for (k, (w, c)) in terms.into_iter().enumerate() {
            let (negative, coeff) = match c.as_monomial() {
                Some((_, x)) if x < &0.into() => (true, -c),
                _ => (false, c.clone()),
            };
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let word = if w.is_unit() { None } else { Some(w) };
            match (coeff.is_one(), coeff.num_terms() > 1, word) {
                (true, _, Some(w)) => write!(f, "{w}")?,
                (true, _, None) => f.write_str("1")?,
                (false, true, Some(w)) => write!(f, "({coeff})*{w}")?,
                (false, true, None) => write!(f, "({coeff})")?,
                (false, false, Some(w)) => write!(f, "{coeff}*{w}")?,
                (false, false, None) => write!(f, "{coeff}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FreeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeElement({self})")
    }
}

/// The product `θ_{g1}^(a1) θ_{g2}^(a2) ...` in canonical form. Zero
/// exponents are skipped.
pub fn theta_y(y: &[(Generator, u32)]) -> FreeElement {
    y.iter().fold(FreeElement::one(), |acc, &(g, n)| {
        acc.multiply(&FreeElement::divided_power(g, n))
    })
}

/// `Σ_{k=0}^{1-a} (-1)^k θ_i^(k) θ_j θ_i^(1-a-k)` for `a = a_ij ≤ 0`.
pub fn serre_element(a_ij: i64) -> Result<FreeElement> {
    if a_ij > 0 {
        return Err(Error::PositiveCartanEntry(a_ij));
    }
    let top = u32::try_from(1 - a_ij).expect("Cartan entry in range");
    let mut out = FreeElement::zero();
    for k in 0..=top {
        out.add_term(DividedWord::i_j_i(k, top - k), &LaurentPoly::sign(k.into()));
    }
    Ok(out)
}

/// Which of the two alternating sums to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// `f(i,j;m)`: `θ_i^(r) θ_j θ_i^(s)`, generating the subalgebra `_i f`.
    Lower,
    /// `f'(i,j;m)`: `θ_i^(s) θ_j θ_i^(r)`, generating `^i f`.
    Upper,
}

/// `Σ_{r+s=m} (-1)^r v^{-r(-a_ij-m+1)} θ_i^(r) θ_j θ_i^(s)` (lower) or the
/// mirrored word order (upper).
pub fn reflection_word(side: Side, m: u32, a_ij: i64) -> Result<FreeElement> {
    if a_ij > 0 {
        return Err(Error::PositiveCartanEntry(a_ij));
    }
    let m_i = i64::from(m);
    let mut out = FreeElement::zero();
    for r in 0..=m {
        let r_i = i64::from(r);
        let c = LaurentPoly::monomial(
            if r % 2 == 0 { 1 } else { -1 },
            -r_i * (-a_ij - m_i + 1),
        );
        let word = match side {
            Side::Lower => DividedWord::i_j_i(r, m - r),
            Side::Upper => DividedWord::i_j_i(m - r, r),
        };
        out.add_term(word, &c);
    }
    Ok(out)
}
