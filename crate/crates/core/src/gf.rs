//! Exact linear algebra over the prime fields GF(2), GF(3) and GF(5).
//!
//! Matrices keep one residue per byte. Everything here is a pure function
//! of its inputs.

use std::fmt;

use crate::error::{Error, Result};

/// Order of one of the supported prime fields.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldId(u8);

impl FieldId {
    pub const GF2: FieldId = FieldId(2);
    pub const GF3: FieldId = FieldId(3);
    pub const GF5: FieldId = FieldId(5);

    pub fn new(q: u8) -> Result<Self> {
        match q {
            2 | 3 | 5 => Ok(FieldId(q)),
            _ => Err(Error::UnsupportedField(q)),
        }
    }

    #[inline]
    pub fn q(self) -> u8 {
        self.0
    }

    #[inline]
    pub fn add(self, a: u8, b: u8) -> u8 {
        (a + b) % self.0
    }

    #[inline]
    pub fn sub(self, a: u8, b: u8) -> u8 {
        (a + self.0 - b) % self.0
    }

    #[inline]
    pub fn mul(self, a: u8, b: u8) -> u8 {
        (a * b) % self.0
    }

    #[inline]
    pub fn neg(self, a: u8) -> u8 {
        (self.0 - a) % self.0
    }

    /// Multiplicative inverse of a nonzero residue.
    pub fn inv(self, a: u8) -> u8 {
        debug_assert!(!a.is_multiple_of(self.0));
        (1..self.0).find(|&b| self.mul(a, b) == 1).expect("nonzero residue")
    }

    /// Image of an integer in the field (`-1` maps to `q - 1`).
    pub fn from_int(self, x: i64) -> u8 {
        x.rem_euclid(self.0 as i64) as u8
    }
}

impl fmt::Display for FieldId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0)
    }
}

/// Dense row-major matrix over GF(q).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GFMatrix {
    field: FieldId,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl GFMatrix {
    pub fn new(field: FieldId, rows: usize, cols: usize, data: Vec<u8>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyMatrix { rows, cols });
        }
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        if let Some(pos) = data.iter().position(|&x| x >= field.q()) {
            return Err(Error::InvalidResidue { row: pos / cols, col: pos % cols, value: data[pos], q: field.q() });
        }
        Ok(GFMatrix { field, rows, cols, data })
    }

    pub fn from_rows(field: FieldId, rows: &[Vec<u8>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        GFMatrix::new(field, r, c, rows.concat())
    }

    pub fn zeros(field: FieldId, rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0);
        GFMatrix { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: FieldId, n: usize) -> Self {
        let mut m = GFMatrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn field(&self) -> FieldId {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u8) {
        debug_assert!(v < self.field.q());
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u8] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> &[u8] {
        &self.data
    }

    pub fn transpose(&self) -> GFMatrix {
        let mut t = GFMatrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// Matrix product over GF(q).
    pub fn mul(&self, other: &GFMatrix) -> Result<GFMatrix> {
        if self.cols != other.rows || self.field != other.field {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let q = self.field.q() as u32;
        let mut out = GFMatrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let s: u32 = (0..self.cols).map(|l| self.get(i, l) as u32 * other.get(l, j) as u32).sum();
                out.set(i, j, (s % q) as u8);
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

/// Standard inner product mod q.
pub fn dot(field: FieldId, a: &[u8], b: &[u8]) -> u8 {
    let s: u32 = a.iter().zip(b).map(|(&x, &y)| x as u32 * y as u32).sum();
    (s % field.q() as u32) as u8
}

/// Reduced row-echelon form with leftmost pivots. Among candidate pivot rows
/// the smallest index is used, so the result is deterministic.
pub fn rref(m: &GFMatrix) -> (GFMatrix, usize, Vec<usize>) {
    let f = m.field;
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..a.cols {
        if rank == a.rows {
            break;
        }
        let Some(pr) = (rank..a.rows).find(|&r| a.get(r, col) != 0) else {
            continue;
        };
        a.swap_rows(rank, pr);
        let inv = f.inv(a.get(rank, col));
        for c in col..a.cols {
            let v = f.mul(a.get(rank, c), inv);
            a.set(rank, c, v);
        }
        for r in 0..a.rows {
            if r == rank {
                continue;
            }
            let factor = a.get(r, col);
            if factor == 0 {
                continue;
            }
            for c in col..a.cols {
                let v = f.sub(a.get(r, c), f.mul(factor, a.get(rank, c)));
                a.set(r, c, v);
            }
        }
        pivots.push(col);
        rank += 1;
    }
    (a, rank, pivots)
}

/// A linear code given by a generator matrix, with its reduced basis cached.
///
/// `reduced` has the same shape as `generator`; only its first `dimension`
/// rows are nonzero. A zero code keeps a single all-zero row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    generator: GFMatrix,
    reduced: GFMatrix,
    dimension: usize,
    pivots: Vec<usize>,
}

impl LinearCode {
    pub fn new(generator: GFMatrix) -> Self {
        let (reduced, dimension, pivots) = rref(&generator);
        LinearCode { generator, reduced, dimension, pivots }
    }

    pub fn field(&self) -> FieldId {
        self.generator.field
    }

    pub fn length(&self) -> usize {
        self.generator.cols
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn generator(&self) -> &GFMatrix {
        &self.generator
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis rows in reduced row-echelon form.
    pub fn basis(&self) -> impl Iterator<Item = &[u8]> {
        (0..self.dimension).map(move |r| self.reduced.row(r))
    }

    /// The reduced basis as a `k x n` matrix, or `None` for the zero code.
    pub fn basis_matrix(&self) -> Option<GFMatrix> {
        if self.dimension == 0 {
            return None;
        }
        let n = self.length();
        Some(GFMatrix {
            field: self.field(),
            rows: self.dimension,
            cols: n,
            data: self.reduced.data[..self.dimension * n].to_vec(),
        })
    }

    /// Same row space, compared through the reduced basis.
    pub fn same_space(&self, other: &LinearCode) -> bool {
        self.field() == other.field()
            && self.length() == other.length()
            && self.dimension == other.dimension
            && self.basis().eq(other.basis())
    }

    pub fn contains(&self, word: &[u8]) -> bool {
        let f = self.field();
        let mut w = word.to_vec();
        for (row, &p) in self.basis().zip(&self.pivots) {
            let c = w[p];
            if c != 0 {
                for (x, &y) in w.iter_mut().zip(row) {
                    *x = f.sub(*x, f.mul(c, y));
                }
            }
        }
        w.iter().all(|&x| x == 0)
    }
}

/// The dual code: dimension `n - k`, orthogonal to every generator row.
pub fn dual_code(c: &LinearCode) -> LinearCode {
    let f = c.field();
    let n = c.length();
    let k = c.dimension;
    if k == n {
        return LinearCode::new(GFMatrix::zeros(f, 1, n));
    }
    let mut is_pivot = vec![false; n];
    for &p in &c.pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..n).filter(|&j| !is_pivot[j]).collect();
    let mut data = vec![0u8; free.len() * n];
    for (r, &fc) in free.iter().enumerate() {
        data[r * n + fc] = 1;
        for (i, &p) in c.pivots.iter().enumerate() {
            data[r * n + p] = f.neg(c.reduced.get(i, fc));
        }
    }
    LinearCode::new(GFMatrix { field: f, rows: free.len(), cols: n, data })
}

/// True iff `2k = n` and every pair of basis rows is orthogonal.
pub fn is_self_dual(c: &LinearCode) -> bool {
    2 * c.dimension == c.length() && is_self_orthogonal(c)
}

pub fn is_self_orthogonal(c: &LinearCode) -> bool {
    let f = c.field();
    let rows: Vec<&[u8]> = c.basis().collect();
    rows.iter().enumerate().all(|(i, a)| rows[i..].iter().all(|b| dot(f, a, b) == 0))
}

/// Doubly-even test on the basis: weights divisible by four and all pairwise
/// overlaps even.
pub fn is_doubly_even(c: &LinearCode) -> Result<bool> {
    if c.field() != FieldId::GF2 {
        return Err(Error::NotBinary(c.field().q()));
    }
    let rows: Vec<&[u8]> = c.basis().collect();
    let weights_ok = rows.iter().all(|r| r.iter().filter(|&&x| x != 0).count() % 4 == 0);
    let overlaps_ok = rows
        .iter()
        .enumerate()
        .all(|(i, a)| rows[i + 1..].iter().all(|b| a.iter().zip(*b).filter(|(&x, &y)| x & y != 0).count() % 2 == 0));
    Ok(weights_ok && overlaps_ok)
}

/// Hamming weight of a vector of residues.
pub fn weight(v: &[u8]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}
