//! Prime-field scalars, vectors and dense matrices.
//!
//! Entries are stored as residues `0..p` in a `u8`, so any prime `p < 256`
//! is supported. Everything else in the crate is built on [`FieldMatrix`],
//! [`rref`], [`systematic_form`] and [`solve`].

use std::fmt;
use std::ops::{Add, Mul, Sub};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("modulus {0} is not a prime below 256")]
    NotPrime(u32),
    #[error("entry {value} out of range for GF({p})")]
    EntryOutOfRange { value: u32, p: u8 },
    #[error("matrix has rank {rank} but {rows} rows")]
    RankDeficient { rank: usize, rows: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// The prime field GF(p).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Field {
    p: u8,
}

impl Default for Field {
    fn default() -> Self {
        Field::BINARY
    }
}

impl Field {
    pub const BINARY: Field = Field { p: 2 };

    /// Builds GF(p), checking primality by trial division.
    pub fn new(p: u32) -> Result<Self, AlgebraError> {
        if !(2..256).contains(&p) || !is_prime(p) {
            return Err(AlgebraError::NotPrime(p));
        }
        Ok(Field { p: p as u8 })
    }

    pub fn order(&self) -> u8 {
        self.p
    }

    pub fn is_binary(&self) -> bool {
        self.p == 2
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        ((a as u16 + b as u16) % self.p as u16) as u8
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        ((a as u16 + self.p as u16 - b as u16) % self.p as u16) as u8
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.sub(0, a)
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        ((a as u16 * b as u16) % self.p as u16) as u8
    }

    /// Multiplicative inverse; `a` must be nonzero.
    pub fn inv(&self, a: u8) -> u8 {
        assert!(!a.is_multiple_of(self.p), "zero has no inverse");
        // a^(p-2) by square and multiply
        let mut base = a;
        let mut exp = self.p as u32 - 2;
        let mut acc = 1u8;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Reduces an arbitrary integer into the field.
    pub fn reduce(&self, v: i64) -> u8 {
        v.rem_euclid(self.p as i64) as u8
    }

    pub fn check(&self, v: u32) -> Result<u8, AlgebraError> {
        if v < self.p as u32 {
            Ok(v as u8)
        } else {
            Err(AlgebraError::EntryOutOfRange { value: v, p: self.p })
        }
    }

    pub fn add_vec(&self, a: &[u8], b: &[u8]) -> Vec<u8> {
        assert_eq!(a.len(), b.len(), "vector length mismatch");
        a.iter().zip(b).map(|(&x, &y)| self.add(x, y)).collect()
    }

    pub fn sub_vec(&self, a: &[u8], b: &[u8]) -> Vec<u8> {
        assert_eq!(a.len(), b.len(), "vector length mismatch");
        a.iter().zip(b).map(|(&x, &y)| self.sub(x, y)).collect()
    }

    pub fn scale_vec(&self, c: u8, a: &[u8]) -> Vec<u8> {
        a.iter().map(|&x| self.mul(c, x)).collect()
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, x: &[u8], m: &FieldMatrix) -> Vec<u8> {
        assert_eq!(x.len(), m.rows, "vector length must equal matrix rows");
        let mut out = vec![0u8; m.cols];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (o, &e) in out.iter_mut().zip(m.row(i)) {
                *o = self.add(*o, self.mul(xi, e));
            }
        }
        out
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// All-one vector `j_n`.
pub fn all_ones(n: usize) -> Vec<u8> {
    vec![1; n]
}

/// Number of nonzero entries.
pub fn hamming_weight(v: &[u8]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

pub fn hamming_distance(a: &[u8], b: &[u8]) -> usize {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

/// Every vector of GF(p)^k in lexicographic order (last coordinate fastest).
pub fn all_vectors(field: Field, k: usize) -> AllVectors {
    AllVectors { p: field.order(), next: Some(vec![0; k]) }
}

/// Iterator returned by [`all_vectors`].
#[derive(Debug, Clone)]
pub struct AllVectors {
    p: u8,
    next: Option<Vec<u8>>,
}

impl Iterator for AllVectors {
    type Item = Vec<u8>;

    fn next(&mut self) -> Option<Vec<u8>> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        for i in (0..succ.len()).rev() {
            succ[i] += 1;
            if succ[i] < self.p {
                self.next = Some(succ);
                return Some(cur);
            }
            succ[i] = 0;
        }
        Some(cur)
    }
}

/// `p^k` when it fits below `limit`, `None` otherwise.
pub fn checked_space_size(field: Field, k: usize, limit: u64) -> Option<u64> {
    let p = field.order() as u64;
    let mut size = 1u64;
    for _ in 0..k {
        size = size.checked_mul(p)?;
        if size > limit {
            return None;
        }
    }
    Some(size)
}

/// Dense row-major matrix over GF(p).
///
/// Zero-sized shapes (`0×n`, `m×0`) are legal and act as identities for
/// block composition.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl fmt::Debug for FieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldMatrix(GF({}), {}x{})", self.field.p, self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "\n  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

impl fmt::Display for FieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FieldMatrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        FieldMatrix { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u8) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j) % field.p);
            }
        }
        FieldMatrix { field, rows, cols, data }
    }

    /// Builds a matrix from explicit rows. An empty slice gives a `0×cols`
    /// matrix only through [`FieldMatrix::zeros`]; here it yields `0×0`.
    pub fn from_rows<R: AsRef<[u8]>>(field: Field, rows: &[R]) -> Result<Self, AlgebraError> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(AlgebraError::DimensionMismatch(format!(
                    "row {i} has length {} but row 0 has length {cols}",
                    r.len()
                )));
            }
            for &v in r {
                data.push(field.check(v as u32)?);
            }
        }
        Ok(FieldMatrix { field, rows: rows.len(), cols, data })
    }

    pub fn row_vector(field: Field, v: &[u8]) -> Self {
        Self::from_fn(field, 1, v.len(), |_, j| v[j])
    }

    pub fn column_vector(field: Field, v: &[u8]) -> Self {
        Self::from_fn(field, v.len(), 1, |i, _| v[i])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        self.data[i * self.cols + j] = v % self.field.p;
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn set_row(&mut self, i: usize, v: &[u8]) {
        assert_eq!(v.len(), self.cols);
        for (j, &x) in v.iter().enumerate() {
            self.set(i, j, x);
        }
    }

    pub fn column(&self, j: usize) -> Vec<u8> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn set_column(&mut self, j: usize, v: &[u8]) {
        assert_eq!(v.len(), self.rows);
        for (i, &x) in v.iter().enumerate() {
            self.set(i, j, x);
        }
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[u8]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    /// Entries in row-major order.
    pub fn as_slice(&self) -> &[u8] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn weight(&self) -> usize {
        hamming_weight(&self.data)
    }

    pub fn row_weight(&self, i: usize) -> usize {
        hamming_weight(self.row(i))
    }

    pub fn col_weight(&self, j: usize) -> usize {
        (0..self.rows).filter(|&i| self.get(i, j) != 0).count()
    }

    pub fn scale(&self, c: u8) -> Self {
        let f = self.field;
        Self::from_fn(f, self.rows, self.cols, |i, j| f.mul(c, self.get(i, j)))
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &FieldMatrix) -> Self {
        assert_eq!(self.rows, other.rows, "hstack needs equal row counts");
        Self::from_fn(self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j)
            } else {
                other.get(i, j - self.cols)
            }
        })
    }

    /// `[self ; other]`.
    pub fn vstack(&self, other: &FieldMatrix) -> Self {
        assert_eq!(self.cols, other.cols, "vstack needs equal column counts");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        FieldMatrix { field: self.field, rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Assembles `[[tl, tr], [bl, br]]`.
    pub fn blocks(tl: &FieldMatrix, tr: &FieldMatrix, bl: &FieldMatrix, br: &FieldMatrix) -> Self {
        tl.hstack(tr).vstack(&bl.hstack(br))
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        assert!(rows.end <= self.rows && cols.end <= self.cols, "submatrix out of bounds");
        Self::from_fn(self.field, rows.len(), cols.len(), |i, j| self.get(rows.start + i, cols.start + j))
    }

    /// Column `j` of the result is column `idx[j]` of `self`.
    pub fn select_columns(&self, idx: &[usize]) -> Self {
        Self::from_fn(self.field, self.rows, idx.len(), |i, j| self.get(i, idx[j]))
    }

    /// Row `i` of the result is row `idx[i]` of `self`.
    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Self::from_fn(self.field, idx.len(), self.cols, |i, j| self.get(idx[i], j))
    }

    pub fn rank(&self) -> usize {
        rref(self).rank
    }

    /// Text form: one row per line, digits concatenated for GF(2) and
    /// space-separated otherwise. No trailing newline.
    pub fn to_text(&self) -> String {
        let sep = if self.field.is_binary() { "" } else { " " };
        self.row_iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep))
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// Parses the text form. Blank lines are ignored. A line without
    /// whitespace is read one digit per character; otherwise tokens are
    /// whitespace-separated.
    pub fn parse(field: Field, text: &str) -> Result<Self, AlgebraError> {
        let mut rows = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            rows.push(parse_line(field, line, lineno + 1)?);
        }
        Self::from_rows(field, &rows)
    }
}

pub(crate) fn parse_line(field: Field, line: &str, lineno: usize) -> Result<Vec<u8>, AlgebraError> {
    let parse_tok = |tok: &str| -> Result<u8, AlgebraError> {
        let v: u32 =
            tok.parse().map_err(|_| AlgebraError::Parse { line: lineno, msg: format!("invalid entry {tok:?}") })?;
        field.check(v).map_err(|e| AlgebraError::Parse { line: lineno, msg: e.to_string() })
    };
    if line.contains(char::is_whitespace) {
        line.split_whitespace().map(parse_tok).collect()
    } else {
        line.chars().map(|c| parse_tok(&c.to_string())).collect()
    }
}

/// Parses a single vector in the text form.
pub fn parse_vector(field: Field, s: &str) -> Result<Vec<u8>, AlgebraError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    parse_line(field, s, 1)
}

pub fn vector_to_text(field: Field, v: &[u8]) -> String {
    let sep = if field.is_binary() { "" } else { " " };
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

impl Add for &FieldMatrix {
    type Output = FieldMatrix;

    fn add(self, rhs: &FieldMatrix) -> FieldMatrix {
        assert_eq!(self.shape(), rhs.shape(), "matrix shapes differ");
        let f = self.field;
        let data = self.data.iter().zip(&rhs.data).map(|(&a, &b)| f.add(a, b)).collect();
        FieldMatrix { field: f, rows: self.rows, cols: self.cols, data }
    }
}

impl Sub for &FieldMatrix {
    type Output = FieldMatrix;

    fn sub(self, rhs: &FieldMatrix) -> FieldMatrix {
        assert_eq!(self.shape(), rhs.shape(), "matrix shapes differ");
        let f = self.field;
        let data = self.data.iter().zip(&rhs.data).map(|(&a, &b)| f.sub(a, b)).collect();
        FieldMatrix { field: f, rows: self.rows, cols: self.cols, data }
    }
}

impl Mul for &FieldMatrix {
    type Output = FieldMatrix;

    fn mul(self, rhs: &FieldMatrix) -> FieldMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        let f = self.field;
        let mut out = FieldMatrix::zeros(f, self.rows, rhs.cols);
        for i in 0..self.rows {
            let r = f.vec_mul(self.row(i), rhs);
            out.data[i * rhs.cols..(i + 1) * rhs.cols].copy_from_slice(&r);
        }
        out
    }
}

/// Result of row reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub reduced: FieldMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Reduced row echelon form. Pivots are chosen on the leftmost nonzero
/// column, so the output is deterministic.
pub fn rref(m: &FieldMatrix) -> Rref {
    let f = m.field;
    let mut r = m.clone();
    let (rows, cols) = m.shape();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pr) = (rank..rows).find(|&i| r.get(i, c) != 0) else {
            continue;
        };
        if pr != rank {
            for j in 0..cols {
                r.data.swap(pr * cols + j, rank * cols + j);
            }
        }
        let inv = f.inv(r.get(rank, c));
        if inv != 1 {
            for j in c..cols {
                let v = f.mul(inv, r.get(rank, j));
                r.set(rank, j, v);
            }
        }
        for i in 0..rows {
            if i == rank {
                continue;
            }
            let factor = r.get(i, c);
            if factor == 0 {
                continue;
            }
            for j in c..cols {
                let v = f.sub(r.get(i, j), f.mul(factor, r.get(rank, j)));
                r.set(i, j, v);
            }
        }
        pivots.push(c);
        rank += 1;
    }
    Rref { reduced: r, rank, pivots }
}

/// Systematic encoder `(I_k | A)` of a row space, up to a column permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystematicForm {
    /// `k × (n-k)` redundancy part.
    pub a: FieldMatrix,
    /// `perm[j]` is the original column that sits at systematic position `j`.
    /// The first `k` entries are the information set.
    pub perm: Vec<usize>,
    /// The rows `(I_k | A)` mapped back to original coordinates.
    pub generator: FieldMatrix,
}

impl SystematicForm {
    pub fn dimension(&self) -> usize {
        self.a.rows()
    }

    pub fn length(&self) -> usize {
        self.perm.len()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// Reorders an original-coordinate vector into systematic order.
    pub fn to_systematic(&self, v: &[u8]) -> Vec<u8> {
        assert_eq!(v.len(), self.perm.len());
        self.perm.iter().map(|&p| v[p]).collect()
    }

    /// Inverse of [`SystematicForm::to_systematic`].
    pub fn from_systematic(&self, s: &[u8]) -> Vec<u8> {
        assert_eq!(s.len(), self.perm.len());
        let mut v = vec![0; s.len()];
        for (j, &p) in self.perm.iter().enumerate() {
            v[p] = s[j];
        }
        v
    }
}

/// Extracts `A` and the column permutation from a full-row-rank generator.
///
/// Dependent columns in the leading block are swapped with the leftmost
/// later pivot column; if the first `k` columns are already independent the
/// permutation is the identity.
pub fn systematic_form(g: &FieldMatrix) -> Result<SystematicForm, AlgebraError> {
    let Rref { reduced, rank, pivots } = rref(g);
    if rank < g.rows() {
        return Err(AlgebraError::RankDeficient { rank, rows: g.rows() });
    }
    let n = g.cols();
    let mut perm: Vec<usize> = (0..n).collect();
    for (i, &p) in pivots.iter().enumerate() {
        if p != i {
            perm.swap(i, p);
        }
    }
    let a = reduced.select_columns(&perm[rank..]);
    // the reduced rows restricted to the pivots form I_k, so `reduced` already
    // is (I_k | A) in original coordinates
    Ok(SystematicForm { a, perm, generator: reduced.submatrix(0..rank, 0..n) })
}

/// Outcome of [`solve`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<u8>),
    NoSolution,
    /// Consistent, with a solution space of positive dimension.
    Underdetermined,
}

/// Solves `coeffs · x = rhs` for a column `x`.
pub fn solve(coeffs: &FieldMatrix, rhs: &[u8]) -> Result<Solution, AlgebraError> {
    if rhs.len() != coeffs.rows() {
        return Err(AlgebraError::DimensionMismatch(format!(
            "rhs has length {} but system has {} equations",
            rhs.len(),
            coeffs.rows()
        )));
    }
    let f = coeffs.field();
    let aug = coeffs.hstack(&FieldMatrix::column_vector(f, rhs));
    let Rref { reduced, rank, pivots } = rref(&aug);
    let unknowns = coeffs.cols();
    if pivots.last() == Some(&unknowns) {
        return Ok(Solution::NoSolution);
    }
    if rank < unknowns {
        return Ok(Solution::Underdetermined);
    }
    let mut x = vec![0; unknowns];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = reduced.get(r, unknowns);
    }
    Ok(Solution::Unique(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    const F2: Field = Field::BINARY;

    fn m(rows: &[&str]) -> FieldMatrix {
        FieldMatrix::parse(F2, &rows.join("\n")).unwrap()
    }

    // independent oracle: the full row space by enumerating coefficient vectors
    fn span(g: &FieldMatrix) -> HashSet<Vec<u8>> {
        let f = g.field();
        let p = f.order() as usize;
        let k = g.rows();
        let mut out = HashSet::new();
        for idx in 0..p.pow(k as u32) {
            let mut t = idx;
            let mut w = vec![0u8; g.cols()];
            for i in 0..k {
                let c = (t % p) as u8;
                t /= p;
                for (j, x) in w.iter_mut().enumerate() {
                    *x = f.add(*x, f.mul(c, g.get(i, j)));
                }
            }
            out.insert(w);
        }
        out
    }

    #[test]
    fn field_construction() {
        assert!(Field::new(2).is_ok());
        assert!(Field::new(7).is_ok());
        assert_eq!(Field::new(4), Err(AlgebraError::NotPrime(4)));
        assert_eq!(Field::new(1), Err(AlgebraError::NotPrime(1)));
        assert_eq!(Field::new(257), Err(AlgebraError::NotPrime(257)));
        let f5 = Field::new(5).unwrap();
        for a in 1..5 {
            assert_eq!(f5.mul(a, f5.inv(a)), 1);
        }
        assert_eq!(f5.sub(1, 3), 3);
        assert_eq!(f5.reduce(-1), 4);
    }

    #[test]
    fn rref_identity() {
        let i3 = FieldMatrix::identity(F2, 3);
        let r = rref(&i3);
        assert_eq!(r.reduced, i3);
        assert_eq!(r.rank, 3);
        assert_eq!(r.pivots, vec![0, 1, 2]);
    }

    #[test]
    fn rref_two_rows() {
        let g = m(&["1111", "1010"]);
        let r = rref(&g);
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivots, vec![0, 1]);
        assert_eq!(span(&r.reduced), span(&g));
        assert_eq!(span(&g).len(), 4);
    }

    #[test]
    fn rref_zero() {
        let z = FieldMatrix::zeros(F2, 2, 4);
        let r = rref(&z);
        assert_eq!(r.reduced, z);
        assert_eq!(r.rank, 0);
        assert!(r.pivots.is_empty());
    }

    #[test]
    fn rref_over_gf5() {
        let f5 = Field::new(5).unwrap();
        let g = FieldMatrix::parse(f5, "1 2 3\n2 4 0").unwrap();
        let r = rref(&g);
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivots, vec![0, 2]);
        assert_eq!(span(&r.reduced), span(&g));
    }

    #[test]
    fn systematic_even_weight() {
        let g = m(&["1001", "0101", "0011"]);
        let s = systematic_form(&g).unwrap();
        assert!(s.is_identity());
        assert_eq!(s.a, m(&["1", "1", "1"]));
        // oracle: (x, xA) has even weight and the map is injective
        let words: HashSet<_> = span(&FieldMatrix::identity(F2, 3))
            .into_iter()
            .map(|x| {
                let mut w = x.clone();
                w.extend(F2.vec_mul(&x, &s.a));
                assert_eq!(hamming_weight(&w) % 2, 0);
                w
            })
            .collect();
        assert_eq!(words.len(), 8);
    }

    #[test]
    fn systematic_two_rows() {
        let g = m(&["1111", "1010"]);
        let s = systematic_form(&g).unwrap();
        assert!(s.is_identity());
        assert_eq!(s.a, FieldMatrix::identity(F2, 2));
        let enc: HashSet<_> = span(&FieldMatrix::identity(F2, 2))
            .into_iter()
            .map(|x| {
                let mut w = x.clone();
                w.extend(F2.vec_mul(&x, &s.a));
                s.from_systematic(&w)
            })
            .collect();
        assert_eq!(enc, span(&g));
    }

    #[test]
    fn systematic_full_space() {
        let s = systematic_form(&FieldMatrix::identity(F2, 3)).unwrap();
        assert_eq!(s.a.shape(), (3, 0));
        assert!(s.is_identity());
    }

    #[test]
    fn systematic_with_permutation() {
        // first column is zero so the information set must move
        let g = m(&["0110", "0011"]);
        let s = systematic_form(&g).unwrap();
        assert_eq!(s.perm, vec![1, 2, 0, 3]);
        let enc: HashSet<_> = span(&FieldMatrix::identity(F2, 2))
            .into_iter()
            .map(|x| {
                let mut w = x.clone();
                w.extend(F2.vec_mul(&x, &s.a));
                s.from_systematic(&w)
            })
            .collect();
        assert_eq!(enc, span(&g));
    }

    #[test]
    fn systematic_rank_deficient() {
        let g = m(&["1100", "1100"]);
        assert_eq!(systematic_form(&g), Err(AlgebraError::RankDeficient { rank: 1, rows: 2 }));
    }

    #[test]
    fn solve_cases() {
        let i2 = FieldMatrix::identity(F2, 2);
        assert_eq!(solve(&i2, &[1, 0]).unwrap(), Solution::Unique(vec![1, 0]));
        assert_eq!(solve(&m(&["11"]), &[1]).unwrap(), Solution::Underdetermined);
        assert_eq!(solve(&m(&["10", "10"]), &[0, 1]).unwrap(), Solution::NoSolution);
        assert!(matches!(solve(&i2, &[1]), Err(AlgebraError::DimensionMismatch(_))));
    }

    #[test]
    fn solve_no_unknowns() {
        let z = FieldMatrix::zeros(F2, 2, 0);
        assert_eq!(solve(&z, &[0, 0]).unwrap(), Solution::Unique(vec![]));
        assert_eq!(solve(&z, &[0, 1]).unwrap(), Solution::NoSolution);
    }

    #[test]
    fn text_format() {
        let g = m(&["1001", "0101"]);
        assert_eq!(g.to_text(), "1001\n0101");
        let f3 = Field::new(3).unwrap();
        let h = FieldMatrix::parse(f3, "1 2\n0 1\n").unwrap();
        assert_eq!(h.to_text(), "1 2\n0 1");
        assert!(FieldMatrix::parse(F2, "102").is_err());
        assert!(FieldMatrix::parse(F2, "10\n1").is_err());
        // spaced binary is accepted too
        assert_eq!(FieldMatrix::parse(F2, "1 0 0 1\n0 1 0 1").unwrap(), g);
    }

    #[test]
    fn enumerates_lexicographically() {
        let all: Vec<_> = all_vectors(F2, 2).collect();
        assert_eq!(all, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(all_vectors(F2, 0).count(), 1);
        assert_eq!(all_vectors(Field::new(3).unwrap(), 3).count(), 27);
        assert_eq!(checked_space_size(F2, 10, 1 << 10), Some(1024));
        assert_eq!(checked_space_size(F2, 11, 1 << 10), None);
    }

    #[test]
    fn arithmetic() {
        let a = m(&["10", "11"]);
        let b = m(&["01", "10"]);
        assert_eq!(&a * &b, m(&["01", "11"]));
        assert_eq!(&a + &b, m(&["11", "01"]));
        assert_eq!(a.transpose(), m(&["11", "01"]));
        let z = FieldMatrix::zeros(F2, 0, 3);
        assert_eq!(z.vstack(&m(&["101"])), m(&["101"]));
        assert_eq!(FieldMatrix::blocks(&m(&["1"]), &m(&["0"]), &m(&["0"]), &m(&["1"])), FieldMatrix::identity(F2, 2));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn matrix(max_r: usize, max_c: usize) -> impl Strategy<Value = FieldMatrix> {
            (0..=max_r, 1..=max_c).prop_flat_map(|(r, c)| {
                proptest::collection::vec(0u8..3, r * c)
                    .prop_map(move |d| FieldMatrix::from_fn(Field::new(3).unwrap(), r, c, |i, j| d[i * c + j]))
            })
        }

        proptest! {
            #[test]
            fn rref_is_idempotent(g in matrix(5, 6)) {
                let once = rref(&g).reduced;
                prop_assert_eq!(rref(&once).reduced, once);
            }

            #[test]
            fn rref_preserves_row_space(g in matrix(4, 5)) {
                prop_assert_eq!(span(&rref(&g).reduced), span(&g));
            }

            #[test]
            fn systematic_form_is_sound(g in matrix(4, 6)) {
                let Rref { reduced, rank, .. } = rref(&g);
                let basis = reduced.submatrix(0..rank, 0..g.cols());
                let s = systematic_form(&basis).unwrap();
                let f = g.field();
                let enc: HashSet<_> = span(&FieldMatrix::identity(f, rank)).into_iter().map(|x| {
                    let mut w = x.clone();
                    w.extend(f.vec_mul(&x, &s.a));
                    s.from_systematic(&w)
                }).collect();
                prop_assert_eq!(enc, span(&g));
            }

            #[test]
            fn solve_returns_a_solution(g in matrix(5, 4), rhs in proptest::collection::vec(0u8..3, 5)) {
                let rhs = &rhs[..g.rows()];
                if let Solution::Unique(x) = solve(&g, rhs).unwrap() {
                    let col = &g * &FieldMatrix::column_vector(g.field(), &x);
                    prop_assert_eq!(col.column(0), rhs.to_vec());
                }
            }
        }
    }
}
