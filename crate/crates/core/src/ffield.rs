//! Dense linear algebra over a prime field `F_q` and enumeration of
//! subspaces by reduced row-echelon form.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Arithmetic modulo a prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    q: u32,
}

impl PrimeField {
    pub fn new(q: u32) -> Result<Self> {
        if is_prime(q.into()) {
            Ok(Self { q })
        } else {
            Err(Error::NotPrime(q.into()))
        }
    }

    pub fn order(self) -> u32 {
        self.q
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.q as u64) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        ((a as u64 + self.q as u64 - b as u64) % self.q as u64) as u32
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.q as u64) as u32
    }

    pub fn inv(self, a: u32) -> u32 {
        debug_assert!(a % self.q != 0);
        // Fermat
        let mut base = a as u64 % self.q as u64;
        let mut exp = self.q as u64 - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.q as u64;
            }
            base = base * base % self.q as u64;
            exp >>= 1;
        }
        acc as u32
    }
}

/// Row-major matrix over `F_q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m.set(k, k, 1);
        }
        m
    }

    pub fn from_rows(rows: usize, cols: usize, data: Vec<u32>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length");
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, x: u32) {
        self.data[r * self.cols + c] = x;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn mul(&self, other: &Mat, f: PrimeField) -> Mat {
        assert_eq!(self.cols, other.rows, "matrix shapes");
        let mut out = Mat::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let cur = out.get(r, c);
                    out.set(r, c, f.add(cur, f.mul(a, other.get(k, c))));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u32], f: PrimeField) -> Vec<u32> {
        assert_eq!(self.cols, v.len(), "vector length");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect()
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c));
            }
        }
        out
    }

    /// Stack `blocks` on top of each other.
    pub fn vstack(blocks: &[Mat], cols: usize) -> Mat {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column count");
            data.extend_from_slice(&b.data);
        }
        Mat { rows, cols, data }
    }

    /// Place `blocks` side by side.
    pub fn hstack(blocks: &[Mat], rows: usize) -> Mat {
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Mat::zeros(rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hstack row count");
            for r in 0..rows {
                for c in 0..b.cols {
                    out.set(r, off + c, b.get(r, c));
                }
            }
            off += b.cols;
        }
        out
    }

    /// Columns `start..start + width` as a new matrix.
    pub fn column_block(&self, start: usize, width: usize) -> Mat {
        let mut out = Mat::zeros(self.rows, width);
        for r in 0..self.rows {
            for c in 0..width {
                out.set(r, c, self.get(r, start + c));
            }
        }
        out
    }

    /// Reduced row-echelon form (lowest-index pivots first) and pivot columns.
    pub fn rref(&self, f: PrimeField) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = f.inv(m.get(row, col));
            for c in 0..m.cols {
                let x = m.get(row, c);
                m.set(row, c, f.mul(x, inv));
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col);
                if factor == 0 {
                    continue;
                }
                for c in 0..m.cols {
                    let x = f.sub(m.get(r, c), f.mul(factor, m.get(row, c)));
                    m.set(r, c, x);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self, f: PrimeField) -> usize {
        self.rref(f).1.len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn inverse(&self, f: PrimeField) -> Option<Mat> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(Mat::zeros(0, 0));
        }
        let aug = Mat::hstack(&[self.clone(), Mat::identity(n)], n);
        let (red, pivots) = aug.rref(f);
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(red.column_block(n, n))
    }

    /// Basis (as rows) of the right null space `{x : self · x = 0}`,
    /// one vector per free column of the rref, in increasing column order.
    pub fn null_space(&self, f: PrimeField) -> Mat {
        let (red, pivots) = self.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Mat::zeros(free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            out.set(k, fc, 1);
            for (r, &pc) in pivots.iter().enumerate() {
                out.set(k, pc, f.sub(0, red.get(r, fc)));
            }
        }
        out
    }
}

/// A subspace of `F_q^d`, held as its reduced row-echelon basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: Mat,
    pivots: Vec<usize>,
    non_pivots: Vec<usize>,
}

impl Subspace {
    pub fn from_rref(basis: Mat, pivots: Vec<usize>) -> Self {
        let non_pivots = (0..basis.cols()).filter(|c| !pivots.contains(c)).collect();
        Self {
            basis,
            pivots,
            non_pivots,
        }
    }

    /// The span of the rows of `m`.
    pub fn span(m: &Mat, f: PrimeField) -> Self {
        let (red, pivots) = m.rref(f);
        let basis = Mat::from_rows(pivots.len(), m.cols(), red.data()[..pivots.len() * m.cols()].to_vec());
        Self::from_rref(basis, pivots)
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns of the standard basis vectors used as a complement.
    pub fn non_pivots(&self) -> &[usize] {
        &self.non_pivots
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v ∉ self`.
    pub fn coordinates(&self, v: &[u32], f: PrimeField) -> Option<Vec<u32>> {
        let (coords, residual) = self.reduce(v, f);
        residual.iter().all(|&x| x == 0).then_some(coords)
    }

    /// Split `v = Σ c_k b_k + r` with `r` vanishing at every pivot column.
    pub fn reduce(&self, v: &[u32], f: PrimeField) -> (Vec<u32>, Vec<u32>) {
        let mut r = v.to_vec();
        let mut coords = Vec::with_capacity(self.dim());
        for (k, &pc) in self.pivots.iter().enumerate() {
            let c = r[pc];
            coords.push(c);
            if c != 0 {
                for (x, &b) in r.iter_mut().zip(self.basis.row(k)) {
                    *x = f.sub(*x, f.mul(c, b));
                }
            }
        }
        (coords, r)
    }

    /// Coordinates of the class of `v` in `F_q^d / self`, read off the
    /// non-pivot columns of the reduced residual.
    pub fn quotient_coordinates(&self, v: &[u32], f: PrimeField) -> Vec<u32> {
        let (_, r) = self.reduce(v, f);
        self.non_pivots.iter().map(|&c| r[c]).collect()
    }

    pub fn contains_all(&self, vectors: &Mat, f: PrimeField) -> bool {
        (0..vectors.rows()).all(|r| self.coordinates(vectors.row(r), f).is_some())
    }
}

/// All `w`-dimensional subspaces of `F_q^d`, one per reduced echelon form,
/// ordered by pivot set (lexicographic) and then by free entries.
pub fn echelon_subspaces(d: usize, w: usize, f: PrimeField) -> Vec<Subspace> {
    let mut out = Vec::new();
    for_each_echelon_form(d, w, f.order(), |basis, pivots| {
        out.push(Subspace::from_rref(basis.clone(), pivots.to_vec()));
    });
    out
}

fn for_each_echelon_form(d: usize, w: usize, q: u32, mut visit: impl FnMut(&Mat, &[usize])) {
    if w > d {
        return;
    }
    let mut pivots: Vec<usize> = (0..w).collect();
    loop {
        // free slots: (row k, column c) with c > pivot_k and c not a pivot
        let free: Vec<(usize, usize)> = (0..w)
            .flat_map(|k| {
                let pk = pivots[k];
                let piv = &pivots;
                (pk + 1..d)
                    .filter(move |c| !piv.contains(c))
                    .map(move |c| (k, c))
            })
            .collect();
        let mut m = Mat::zeros(w, d);
        for (k, &pk) in pivots.iter().enumerate() {
            m.set(k, pk, 1);
        }
        let mut digits = vec![0u32; free.len()];
        loop {
            for (slot, &(k, c)) in free.iter().enumerate() {
                m.set(k, c, digits[slot]);
            }
            visit(&m, &pivots);
            // odometer
            let mut pos = 0;
            while pos < digits.len() {
                digits[pos] += 1;
                if digits[pos] < q {
                    break;
                }
                digits[pos] = 0;
                pos += 1;
            }
            if pos == digits.len() {
                break;
            }
        }
        if !next_combination(&mut pivots, d) {
            break;
        }
    }
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Number of `p`-dimensional subspaces of `F_q^m`, by enumerating every
/// reduced row-echelon form.
pub fn gaussian_count(m: u32, p: u32, q: u32) -> u64 {
    let mut count = 0u64;
    for_each_echelon_form(m as usize, p as usize, q, |_, _| count += 1);
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(q: u32) -> PrimeField {
        PrimeField::new(q).unwrap()
    }

    /// Independent count: the number of `p`-subsets of nonzero vectors that are
    /// linearly independent, divided by `|GL_p|`-many ordered bases.
    fn count_by_bases(m: u32, p: u32, q: u64) -> u64 {
        let qm = q.pow(m);
        let ordered: u64 = (0..p).map(|k| qm - q.pow(k)).product();
        let per_space: u64 = (0..p).map(|k| q.pow(p) - q.pow(k)).product();
        ordered / per_space
    }

    #[test]
    fn gaussian_examples() {
        assert_eq!(gaussian_count(2, 1, 2), 3);
        assert_eq!(gaussian_count(2, 1, 3), 4);
        for m in 0..5 {
            assert_eq!(gaussian_count(m, 0, 5), 1);
            assert_eq!(gaussian_count(m, m, 5), 1);
        }
        assert_eq!(gaussian_count(1, 2, 2), 0);
    }

    #[test]
    fn gaussian_matches_basis_count() {
        for q in [2u32, 3, 5] {
            for m in 0..=4 {
                for p in 0..=m {
                    assert_eq!(gaussian_count(m, p, q), count_by_bases(m, p, q.into()));
                }
            }
        }
    }

    #[test]
    fn subspaces_are_distinct_and_reduced() {
        let fq = f(3);
        let subs = echelon_subspaces(3, 2, fq);
        assert_eq!(subs.len(), 13);
        for (a, s) in subs.iter().enumerate() {
            assert_eq!(Subspace::span(s.basis(), fq), *s);
            for t in &subs[a + 1..] {
                assert_ne!(s, t);
            }
        }
    }

    #[test]
    fn inverse_and_null_space() {
        let fq = f(5);
        let a = Mat::from_rows(2, 2, vec![1, 2, 3, 4]);
        assert_eq!(Mat::zeros(0, 0).inverse(fq), Some(Mat::zeros(0, 0)));
        let inv = a.inverse(fq).unwrap();
        assert_eq!(a.mul(&inv, fq), Mat::identity(2));
        let singular = Mat::from_rows(2, 2, vec![1, 2, 2, 4]);
        assert!(singular.inverse(fq).is_none());
        let ns = singular.null_space(fq);
        assert_eq!(ns.rows(), 1);
        assert!(singular.mul(&ns.transpose(), fq).is_zero());
    }

    #[test]
    fn quotient_coordinates_kill_subspace() {
        let fq = f(2);
        let s = Subspace::span(&Mat::from_rows(1, 3, vec![1, 1, 0]), fq);
        assert_eq!(s.quotient_coordinates(&[1, 1, 0], fq), vec![0, 0]);
        assert_eq!(s.quotient_coordinates(&[0, 1, 1], fq), vec![1, 1]);
        assert_eq!(s.coordinates(&[1, 1, 0], fq), Some(vec![1]));
        assert_eq!(s.coordinates(&[1, 0, 0], fq), None);
    }
}
