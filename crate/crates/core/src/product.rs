//! Products of affine codes.
//!
//! A [`ProductCode`] pairs a row code `C + u` (length `n`, dimension `k`)
//! with a column code `D + v` (length `m`, dimension `l`). Codewords are
//! `m × n` matrices whose leading `l × k` block, in systematic coordinates,
//! carries the information. With `u = (0_k, a)` and `v = (0_l, b)` the code
//! is the coset `(C ⊗ D) + U` of the classical product.
//!
//! Matrices handed in and out are in original coordinates. The systematic
//! block sits at rows `col.permutation()[..l]` and columns
//! `row.permutation()[..k]`.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::affine::AffineCode;
use crate::algebra::{all_ones, all_vectors, checked_space_size, AlgebraError, Field, FieldMatrix};
use crate::codes::{CodeError, LinearCode};

/// An `m × n` codeword of a matrix code.
pub type MatrixCodeword = FieldMatrix;

/// Largest matrix code that [`ProductCode::codewords`] will walk.
pub const PRODUCT_ENUMERATION_LIMIT: u64 = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Row,
    Column,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Row => "row",
            Side::Column => "column",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProductError {
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error("expected a {}x{} matrix, got {}x{}", .expected.0, .expected.1, .got.0, .got.1)]
    ShapeMismatch { expected: (usize, usize), got: (usize, usize) },
    #[error("row and column codes are over different fields")]
    FieldMismatch,
    #[error("representatives violate the compatibility condition; the two encoding orders disagree")]
    Incompatible,
    #[error("{0} code does not contain the all-one vector")]
    NotSelfComplementary(Side),
    #[error("{0} subcode does not contain the all-one vector")]
    MissingAllOne(Side),
    #[error("{0} codes are not nested")]
    NotNested(Side),
}

impl From<AlgebraError> for ProductError {
    fn from(e: AlgebraError) -> Self {
        ProductError::Code(CodeError::Algebra(e))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProductKind {
    /// Both representatives zero.
    Classical,
    /// Compatible representatives without the all-one vector in both codes.
    Affine,
    ConstructionI,
    #[serde(rename = "construction_ia")]
    ConstructionIA,
}

fn check_shape(m: &FieldMatrix, expected: (usize, usize)) -> Result<(), ProductError> {
    if m.shape() != expected {
        return Err(ProductError::ShapeMismatch { expected, got: m.shape() });
    }
    Ok(())
}

/// `j_r^T x` as an `r × |x|` matrix.
fn ones_times(field: Field, r: usize, x: &[u8]) -> FieldMatrix {
    FieldMatrix::from_fn(field, r, x.len(), |_, j| x[j])
}

/// `y^T j_c` as a `|y| × c` matrix.
fn times_ones(field: Field, y: &[u8], c: usize) -> FieldMatrix {
    FieldMatrix::from_fn(field, y.len(), c, |i, _| y[i])
}

/// Whether `b^T (j_k A - j_{n-k}) == (B^T j_l^T - j_{m-l}^T) a`.
///
/// `row_a` is the `k × (n-k)` redundancy of the row code and `col_b` the
/// `l × (m-l)` redundancy of the column code.
pub fn check_compatibility(row_a: &FieldMatrix, col_b: &FieldMatrix, a: &[u8], b: &[u8]) -> Result<bool, ProductError> {
    let f = row_a.field();
    if a.len() != row_a.cols() {
        return Err(ProductError::ShapeMismatch { expected: (1, row_a.cols()), got: (1, a.len()) });
    }
    if b.len() != col_b.cols() {
        return Err(ProductError::ShapeMismatch { expected: (1, col_b.cols()), got: (1, b.len()) });
    }
    let row_defect = f.sub_vec(&f.vec_mul(&all_ones(row_a.rows()), row_a), &all_ones(row_a.cols()));
    let col_defect = f.sub_vec(&f.vec_mul(&all_ones(col_b.rows()), col_b), &all_ones(col_b.cols()));
    let left = &FieldMatrix::column_vector(f, b) * &FieldMatrix::row_vector(f, &row_defect);
    let right = &FieldMatrix::column_vector(f, &col_defect) * &FieldMatrix::row_vector(f, a);
    Ok(left == right)
}

/// The coset leader for self-complementary components, in systematic
/// coordinates:
///
/// ```text
/// [ 0_{l×k}      | j_l^T a                     ]
/// [ b^T j_k      | b^T j_{n-k} + j_{m-l}^T a   ]
/// ```
///
/// It does not depend on the redundancy matrices.
pub fn coset_leader(
    field: Field,
    a: &[u8],
    b: &[u8],
    k: usize,
    l: usize,
    m: usize,
    n: usize,
) -> Result<FieldMatrix, ProductError> {
    if k > n || l > m || a.len() != n - k || b.len() != m - l {
        return Err(ProductError::ShapeMismatch { expected: (m - l.min(m), n - k.min(n)), got: (b.len(), a.len()) });
    }
    let tl = FieldMatrix::zeros(field, l, k);
    let tr = ones_times(field, l, a);
    let bl = times_ones(field, b, k);
    let br = &times_ones(field, b, n - k) + &ones_times(field, m - l, a);
    Ok(FieldMatrix::blocks(&tl, &tr, &bl, &br))
}

/// The general coset leader, valid whenever the compatibility condition
/// holds: the bottom-right block is `b^T j_k A + j_{m-l}^T a`.
pub fn coset_leader_general(row_a: &FieldMatrix, a: &[u8], b: &[u8], l: usize) -> FieldMatrix {
    let f = row_a.field();
    let k = row_a.rows();
    let tl = FieldMatrix::zeros(f, l, k);
    let tr = ones_times(f, l, a);
    let bl = times_ones(f, b, k);
    let br = &(&bl * row_a) + &ones_times(f, b.len(), a);
    FieldMatrix::blocks(&tl, &tr, &bl, &br)
}

/// A systematic matrix code `(C + u) ⊗ (D + v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductCode {
    row: AffineCode,
    col: AffineCode,
    leader: FieldMatrix,
    kind: ProductKind,
}

impl ProductCode {
    /// The classical product `C ⊗ D`.
    pub fn classical(row: LinearCode, col: LinearCode) -> Result<Self, ProductError> {
        Self::new(AffineCode::linear(row), AffineCode::linear(col))
    }

    /// Product of two affine codes, refused unless the compatibility
    /// condition holds (otherwise the two encoding orders give different
    /// codes).
    pub fn new(row: AffineCode, col: AffineCode) -> Result<Self, ProductError> {
        if row.base().field() != col.base().field() {
            return Err(ProductError::FieldMismatch);
        }
        let (ra, cb) = (row.base().redundancy(), col.base().redundancy());
        if !check_compatibility(ra, cb, row.tail(), col.tail())? {
            return Err(ProductError::Incompatible);
        }
        let kind = if row.is_linear() && col.is_linear() {
            ProductKind::Classical
        } else if row.base().is_self_complementary() && col.base().is_self_complementary() {
            ProductKind::ConstructionI
        } else {
            ProductKind::Affine
        };
        let leader_sys = coset_leader_general(ra, row.tail(), col.tail(), col.dimension());
        Ok(Self::assemble(row, col, leader_sys, kind))
    }

    /// Construction I: both base codes contain the all-one vector, so any
    /// pair of canonical representatives is compatible and the leader takes
    /// the closed form of [`coset_leader`].
    pub fn construction_i(row: AffineCode, col: AffineCode) -> Result<Self, ProductError> {
        if row.base().field() != col.base().field() {
            return Err(ProductError::FieldMismatch);
        }
        if !row.base().is_self_complementary() {
            return Err(ProductError::NotSelfComplementary(Side::Row));
        }
        if !col.base().is_self_complementary() {
            return Err(ProductError::NotSelfComplementary(Side::Column));
        }
        let (k, l, m, n) = (row.dimension(), col.dimension(), col.length(), row.length());
        let leader_sys = coset_leader(row.base().field(), row.tail(), col.tail(), k, l, m, n)?;
        debug_assert_eq!(leader_sys, coset_leader_general(row.base().redundancy(), row.tail(), col.tail(), l));
        Ok(Self::assemble(row, col, leader_sys, ProductKind::ConstructionI))
    }

    /// Construction IA: pick hyperplanes `C1 ⊆ C3 ⊂ C2`, `D1 ⊆ D3 ⊂ D2` and
    /// translates `u ∈ C2 \ C3`, `v ∈ D2 \ D3`, then apply Construction I
    /// to `C3 + u` and `D3 + v`. No row of a codeword lies in `C1` and no
    /// column in `D1`.
    pub fn construction_ia(
        c1: &LinearCode,
        c2: &LinearCode,
        d1: &LinearCode,
        d2: &LinearCode,
    ) -> Result<Self, ProductError> {
        if !c1.is_self_complementary() {
            return Err(ProductError::MissingAllOne(Side::Row));
        }
        if !d1.is_self_complementary() {
            return Err(ProductError::MissingAllOne(Side::Column));
        }
        let hyper = |small: &LinearCode, big: &LinearCode, side| {
            small.hyperplane_between(big).map_err(|e| match e {
                CodeError::NotNested => ProductError::NotNested(side),
                e => e.into(),
            })
        };
        let (c3, u) = hyper(c1, c2, Side::Row)?;
        let (d3, v) = hyper(d1, d2, Side::Column)?;
        let mut pc = Self::construction_i(AffineCode::new(c3, &u)?, AffineCode::new(d3, &v)?)?;
        pc.kind = ProductKind::ConstructionIA;
        Ok(pc)
    }

    fn assemble(row: AffineCode, col: AffineCode, leader_sys: FieldMatrix, kind: ProductKind) -> Self {
        let mut pc = ProductCode { leader: leader_sys.clone(), row, col, kind };
        pc.leader = pc.to_original(&leader_sys);
        pc
    }

    pub fn row_code(&self) -> &AffineCode {
        &self.row
    }

    pub fn col_code(&self) -> &AffineCode {
        &self.col
    }

    /// The coset leader `U` in original coordinates.
    pub fn leader(&self) -> &FieldMatrix {
        &self.leader
    }

    pub fn kind(&self) -> ProductKind {
        self.kind
    }

    pub fn field(&self) -> Field {
        self.row.base().field()
    }

    /// `(m, n)`.
    pub fn shape(&self) -> (usize, usize) {
        (self.col.length(), self.row.length())
    }

    /// `(l, k)`, the shape of an information matrix.
    pub fn info_shape(&self) -> (usize, usize) {
        (self.col.dimension(), self.row.dimension())
    }

    pub fn dimension(&self) -> usize {
        self.row.dimension() * self.col.dimension()
    }

    /// Number of codewords, if at most [`PRODUCT_ENUMERATION_LIMIT`].
    pub fn size(&self) -> Option<u64> {
        checked_space_size(self.field(), self.dimension(), PRODUCT_ENUMERATION_LIMIT)
    }

    /// Original-coordinate positions of the systematic block:
    /// `(rows, cols)`.
    pub fn systematic_positions(&self) -> (Vec<usize>, Vec<usize>) {
        let (l, k) = self.info_shape();
        (self.col.base().permutation()[..l].to_vec(), self.row.base().permutation()[..k].to_vec())
    }

    fn to_original(&self, s: &FieldMatrix) -> FieldMatrix {
        let (rp, cp) = (self.col.base().permutation(), self.row.base().permutation());
        let mut out = FieldMatrix::zeros(self.field(), s.rows(), s.cols());
        for (i, &r) in rp.iter().enumerate() {
            for (j, &c) in cp.iter().enumerate() {
                out.set(r, c, s.get(i, j));
            }
        }
        out
    }

    fn to_systematic(&self, n: &FieldMatrix) -> FieldMatrix {
        let (rp, cp) = (self.col.base().permutation(), self.row.base().permutation());
        FieldMatrix::from_fn(self.field(), n.rows(), n.cols(), |i, j| n.get(rp[i], cp[j]))
    }

    fn parts(&self, info: &FieldMatrix) -> Result<[FieldMatrix; 4], ProductError> {
        check_shape(info, self.info_shape())?;
        let f = self.field();
        let (l, k) = self.info_shape();
        let a_mat = self.row.base().redundancy();
        let bt = self.col.base().redundancy().transpose();
        let top_right = &(info * a_mat) + &ones_times(f, l, self.row.tail());
        let bottom_left = &(&bt * info) + &times_ones(f, self.col.tail(), k);
        Ok([info.clone(), top_right, bottom_left, bt])
    }

    /// Encode the first `k` columns with the column code, then every row
    /// with the row code.
    pub fn encode_cols_then_rows(&self, info: &FieldMatrix) -> Result<MatrixCodeword, ProductError> {
        let [tl, tr, bl, _] = self.parts(info)?;
        let f = self.field();
        let m_minus_l = bl.rows();
        let br = &(&bl * self.row.base().redundancy()) + &ones_times(f, m_minus_l, self.row.tail());
        Ok(self.to_original(&FieldMatrix::blocks(&tl, &tr, &bl, &br)))
    }

    /// Encode the first `l` rows with the row code, then every column with
    /// the column code.
    pub fn encode_rows_then_cols(&self, info: &FieldMatrix) -> Result<MatrixCodeword, ProductError> {
        let [tl, tr, bl, bt] = self.parts(info)?;
        let f = self.field();
        let n_minus_k = tr.cols();
        let br = &(&bt * &tr) + &times_ones(f, self.col.tail(), n_minus_k);
        Ok(self.to_original(&FieldMatrix::blocks(&tl, &tr, &bl, &br)))
    }

    /// Systematic encoder; both orders agree for every code this type can
    /// hold.
    pub fn encode(&self, info: &FieldMatrix) -> Result<MatrixCodeword, ProductError> {
        self.encode_cols_then_rows(info)
    }

    /// The `l × k` information block of a matrix.
    pub fn information(&self, n: &FieldMatrix) -> Result<FieldMatrix, ProductError> {
        check_shape(n, self.shape())?;
        let (l, k) = self.info_shape();
        Ok(self.to_systematic(n).submatrix(0..l, 0..k))
    }

    /// Information matrix number `index` in row-major lexicographic order.
    pub fn info_from_vector(&self, x: &[u8]) -> FieldMatrix {
        let (l, k) = self.info_shape();
        assert_eq!(x.len(), l * k);
        FieldMatrix::from_fn(self.field(), l, k, |i, j| x[i * k + j])
    }

    /// `count` information matrices drawn uniformly from `seed`.
    pub fn random_information(&self, count: usize, seed: u64) -> Vec<FieldMatrix> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (l, k) = self.info_shape();
        let p = self.field().order();
        (0..count).map(|_| FieldMatrix::from_fn(self.field(), l, k, |_, _| rng.gen_range(0..p))).collect()
    }

    /// Membership: `N - U` has every row in `C` and every column in `D`.
    pub fn contains(&self, n: &FieldMatrix) -> Result<bool, ProductError> {
        check_shape(n, self.shape())?;
        let diff = n - &self.leader;
        for r in diff.row_iter() {
            if !self.row.base().contains(r)? {
                return Ok(false);
            }
        }
        for j in 0..diff.cols() {
            if !self.col.base().contains(&diff.column(j))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Every codeword, information matrices taken in row-major
    /// lexicographic order.
    pub fn codewords(&self) -> Result<impl Iterator<Item = MatrixCodeword> + '_, ProductError> {
        if self.size().is_none() {
            return Err(CodeError::TooLargeToEnumerate {
                what: format!("matrix code of dimension {}", self.dimension()),
                limit: PRODUCT_ENUMERATION_LIMIT,
            }
            .into());
        }
        Ok(all_vectors(self.field(), self.dimension())
            .map(move |x| self.encode(&self.info_from_vector(&x)).expect("shape is correct")))
    }

    /// Minimum distance, computed as the least weight of `N - U` over
    /// codewords `N ≠ U` (distances in a coset are those of the underlying
    /// linear code).
    pub fn min_distance(&self) -> Result<usize, ProductError> {
        if self.dimension() == 0 {
            return Err(CodeError::EmptyCode.into());
        }
        Ok(self.codewords()?.map(|n| (&n - &self.leader).weight()).filter(|&w| w > 0).min().expect("dimension >= 1"))
    }

    /// Exact row and column weight extrema over every codeword.
    pub fn weight_bounds(&self) -> Result<WeightBounds, ProductError> {
        let mut wb = WeightBounds::empty();
        for n in self.codewords()? {
            wb.absorb(&n);
        }
        Ok(wb)
    }
}

/// Row and column weight extrema over a set of matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightBounds {
    pub row_min: usize,
    pub row_max: usize,
    pub col_min: usize,
    pub col_max: usize,
}

impl WeightBounds {
    pub fn empty() -> Self {
        WeightBounds { row_min: usize::MAX, row_max: 0, col_min: usize::MAX, col_max: 0 }
    }

    pub fn absorb(&mut self, n: &FieldMatrix) {
        for i in 0..n.rows() {
            let w = n.row_weight(i);
            self.row_min = self.row_min.min(w);
            self.row_max = self.row_max.max(w);
        }
        for j in 0..n.cols() {
            let w = n.col_weight(j);
            self.col_min = self.col_min.min(w);
            self.col_max = self.col_max.max(w);
        }
    }

    /// Rows within `[dr, n - dr]`, columns within `[dc, m - dc]`.
    pub fn within(&self, dr: usize, n: usize, dc: usize, m: usize) -> bool {
        self.row_min >= dr && self.row_max + dr <= n && self.col_min >= dc && self.col_max + dc <= m
    }
}

/// Property (C, D): every row of `n` is in `row` and every column in `col`.
pub fn verify_property(n: &FieldMatrix, row: &AffineCode, col: &AffineCode) -> Result<bool, ProductError> {
    check_shape(n, (col.length(), row.length()))?;
    for r in n.row_iter() {
        if !row.contains(r)? {
            return Ok(false);
        }
    }
    for j in 0..n.cols() {
        if !col.contains(&n.column(j))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `|U| · |V| · p^{k1 l1}`, the size of the union of Construction I codes
/// over all representative pairs. `None` on overflow.
pub fn union_coset_size(p: u8, k1: usize, l1: usize, size_u: u128, size_v: u128) -> Option<u128> {
    let exp = u32::try_from(k1.checked_mul(l1)?).ok()?;
    (p as u128).checked_pow(exp)?.checked_mul(size_u)?.checked_mul(size_v)
}

/// Size of the union construction for expurgated codes `C2 \ C1`,
/// `D2 \ D1`: `(p^{k2-k1} - 1)(p^{l2-l1} - 1) p^{k1 l1}`.
pub fn expurgated_union_size(p: u8, k1: usize, k2: usize, l1: usize, l2: usize) -> Option<u128> {
    let reps = |lo: usize, hi: usize| -> Option<u128> {
        Some((p as u128).checked_pow(u32::try_from(hi.checked_sub(lo)?).ok()?)? - 1)
    };
    union_coset_size(p, k1, l1, reps(k1, k2)?, reps(l1, l2)?)
}

/// Whether `n` lies in `(C1 + u) ⊗ (D1 + v)` for some `u ∈ us`, `v ∈ vs`.
pub fn union_coset_contains(
    n: &FieldMatrix,
    c1: &LinearCode,
    d1: &LinearCode,
    us: &[Vec<u8>],
    vs: &[Vec<u8>],
) -> Result<bool, ProductError> {
    for u in us {
        for v in vs {
            let pc = ProductCode::construction_i(AffineCode::new(c1.clone(), u)?, AffineCode::new(d1.clone(), v)?)?;
            if pc.contains(n)? {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Every `size`-subset of flat coordinates `0..mn` on which the given
/// matrices restrict onto all of GF(p)^size.
pub fn systematic_coordinate_sets(words: &[FieldMatrix], size: usize) -> Vec<Vec<usize>> {
    let Some(first) = words.first() else {
        return Vec::new();
    };
    let f = first.field();
    let total = first.rows() * first.cols();
    let Some(target) = checked_space_size(f, size, u64::MAX) else {
        return Vec::new();
    };
    if (words.len() as u64) < target {
        return Vec::new();
    }
    let mut found = Vec::new();
    for subset in Combinations::new(total, size) {
        let mut seen = std::collections::HashSet::new();
        for w in words {
            let data = w.as_slice();
            seen.insert(subset.iter().map(|&c| data[c]).collect::<Vec<u8>>());
        }
        if seen.len() as u64 == target {
            found.push(subset);
        }
    }
    found
}

/// Lexicographic `r`-subsets of `0..n`.
#[derive(Debug, Clone)]
pub struct Combinations {
    n: usize,
    cur: Option<Vec<usize>>,
}

impl Combinations {
    pub fn new(n: usize, r: usize) -> Self {
        Combinations { n, cur: (r <= n).then(|| (0..r).collect()) }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.cur.take()?;
        let r = cur.len();
        let mut succ = cur.clone();
        let mut i = r;
        while i > 0 {
            i -= 1;
            if succ[i] < self.n - r + i {
                succ[i] += 1;
                for t in i + 1..r {
                    succ[t] = succ[t - 1] + 1;
                }
                self.cur = Some(succ);
                return Some(cur);
            }
        }
        Some(cur)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_vector;
    use crate::codes::{even_weight, reed_muller_1, repetition};

    const F2: Field = Field::BINARY;

    fn v(s: &str) -> Vec<u8> {
        parse_vector(F2, s).unwrap()
    }

    fn mat(s: &str) -> FieldMatrix {
        FieldMatrix::parse(F2, &s.replace(' ', "\n")).unwrap()
    }

    fn c3_coset() -> AffineCode {
        let base = LinearCode::spanned_by(F2, 4, &[v("1111"), v("1010")]).unwrap();
        AffineCode::new(base, &v("0011")).unwrap()
    }

    fn exa90() -> ProductCode {
        ProductCode::construction_i(c3_coset(), c3_coset()).unwrap()
    }

    #[test]
    fn compatibility() {
        let ev = even_weight(F2, 4).unwrap();
        let rm = reed_muller_1(2).unwrap();
        assert!(check_compatibility(ev.redundancy(), rm.redundancy(), &[1], &[0]).unwrap());
        assert!(check_compatibility(ev.redundancy(), rm.redundancy(), &[1], &[1]).unwrap());
        let single = LinearCode::spanned_by(F2, 2, &[v("10")]).unwrap();
        let a = single.redundancy();
        assert_eq!(a, &mat("0"));
        assert!(check_compatibility(a, a, &[0], &[0]).unwrap());
        // both sides equal 1 here
        assert!(check_compatibility(a, a, &[1], &[1]).unwrap());
        // left side 0, right side 1
        assert!(!check_compatibility(a, a, &[1], &[0]).unwrap());
        assert!(check_compatibility(a, a, &[1, 0], &[0]).is_err());
    }

    #[test]
    fn leaders() {
        assert_eq!(coset_leader(F2, &[1, 1], &[1, 1], 2, 2, 4, 4).unwrap(), mat("0011 0011 1100 1100"));
        assert!(coset_leader(F2, &[0, 0], &[0, 0], 2, 2, 4, 4).unwrap().is_zero());
        assert_eq!(coset_leader(F2, &[1], &[0], 1, 1, 2, 2).unwrap(), mat("01 01"));
        assert!(coset_leader(F2, &[1], &[0], 1, 1, 2, 3).is_err());
    }

    #[test]
    fn exa90_encodings() {
        let pc = exa90();
        assert_eq!(pc.leader(), &mat("0011 0011 1100 1100"));
        let zero = FieldMatrix::zeros(F2, 2, 2);
        assert_eq!(pc.encode_cols_then_rows(&zero).unwrap(), *pc.leader());
        assert_eq!(pc.encode_rows_then_cols(&zero).unwrap(), *pc.leader());
        let id = FieldMatrix::identity(F2, 2);
        let expected = mat("1001 0110 0110 1001");
        assert_eq!(pc.encode_cols_then_rows(&id).unwrap(), expected);
        assert_eq!(pc.encode_rows_then_cols(&id).unwrap(), expected);
        assert_eq!(pc.dimension(), 4);
        assert_eq!(pc.codewords().unwrap().count(), 16);
        assert_eq!(pc.weight_bounds().unwrap(), WeightBounds { row_min: 2, row_max: 2, col_min: 2, col_max: 2 });
    }

    #[test]
    fn classical_reduces_to_linear_product() {
        let ev = even_weight(F2, 4).unwrap();
        let pc = ProductCode::classical(ev.clone(), ev.clone()).unwrap();
        assert_eq!(pc.kind(), ProductKind::Classical);
        assert!(pc.leader().is_zero());
        let m = mat("101 011 110");
        let a = ev.redundancy();
        let bt = a.transpose();
        let expected = FieldMatrix::blocks(&m, &(&m * a), &(&bt * &m), &(&(&bt * &m) * a));
        assert_eq!(pc.encode_cols_then_rows(&m).unwrap(), expected);
        assert_eq!(pc.encode_rows_then_cols(&m).unwrap(), expected);
        assert_eq!(pc.codewords().unwrap().count(), 512);
        assert_eq!(pc.weight_bounds().unwrap(), WeightBounds { row_min: 0, row_max: 4, col_min: 0, col_max: 4 });
    }

    #[test]
    fn construction_i_refuses_non_self_complementary() {
        let single = LinearCode::spanned_by(F2, 2, &[v("10")]).unwrap();
        let ac = AffineCode::new(single, &v("01")).unwrap();
        let err = ProductCode::construction_i(ac.clone(), c3_coset()).unwrap_err();
        assert_eq!(err, ProductError::NotSelfComplementary(Side::Row));
        let err = ProductCode::construction_i(AffineCode::linear(repetition(F2, 2).unwrap()), ac.clone()).unwrap_err();
        assert_eq!(err, ProductError::NotSelfComplementary(Side::Column));
        // incompatible representatives are refused outright
        let zero_rep = AffineCode::linear(ac.base().clone());
        assert_eq!(ProductCode::new(ac, zero_rep).unwrap_err(), ProductError::Incompatible);
    }

    #[test]
    fn construction_ia_parameters() {
        let j4 = repetition(F2, 4).unwrap();
        let ev = even_weight(F2, 4).unwrap();
        let pc = ProductCode::construction_ia(&j4, &ev, &j4, &ev).unwrap();
        assert_eq!(pc.kind(), ProductKind::ConstructionIA);
        assert_eq!(pc.dimension(), 4);
        assert_eq!(pc.weight_bounds().unwrap(), WeightBounds { row_min: 2, row_max: 2, col_min: 2, col_max: 2 });

        let j8 = repetition(F2, 8).unwrap();
        let rm = reed_muller_1(3).unwrap();
        let pc = ProductCode::construction_ia(&j8, &rm, &j8, &rm).unwrap();
        assert_eq!(pc.dimension(), 9);

        let j16 = repetition(F2, 16).unwrap();
        let rm4 = reed_muller_1(4).unwrap();
        assert_eq!(ProductCode::construction_ia(&j16, &rm4, &j16, &rm4).unwrap().dimension(), 16);
    }

    #[test]
    fn construction_ia_errors() {
        let ev = even_weight(F2, 4).unwrap();
        let single = LinearCode::spanned_by(F2, 4, &[v("1000")]).unwrap();
        let j4 = repetition(F2, 4).unwrap();
        assert_eq!(
            ProductCode::construction_ia(&single, &ev, &j4, &ev).unwrap_err(),
            ProductError::MissingAllOne(Side::Row)
        );
        let other = LinearCode::spanned_by(F2, 4, &[v("1111"), v("1000")]).unwrap();
        assert_eq!(
            ProductCode::construction_ia(&j4, &ev, &other, &ev).unwrap_err(),
            ProductError::NotNested(Side::Column)
        );
    }

    #[test]
    fn property_checks() {
        let pc = exa90();
        for n in pc.codewords().unwrap() {
            assert!(verify_property(&n, pc.row_code(), pc.col_code()).unwrap());
            assert!(pc.contains(&n).unwrap());
        }
        // the naive 3x3 information choice that ends with an all-one row
        let naive = mat("1001 0101 0011 1111");
        let ev = AffineCode::linear(even_weight(F2, 4).unwrap());
        assert!(verify_property(&naive, &ev, &ev).unwrap());
        let j4 = repetition(F2, 4).unwrap();
        assert!(!(0..4).all(|i| !j4.contains(naive.row(i)).unwrap()));
        assert!(!pc.contains(&naive).unwrap());
        let rep0 = AffineCode::linear(repetition(F2, 4).unwrap());
        assert!(verify_property(&FieldMatrix::zeros(F2, 4, 4), &rep0, &rep0).unwrap());
        assert!(verify_property(&FieldMatrix::zeros(F2, 3, 4), &rep0, &rep0).is_err());
    }

    #[test]
    fn random_information_is_seeded() {
        let pc = exa90();
        let a = pc.random_information(20, 5);
        assert_eq!(a, pc.random_information(20, 5));
        assert_ne!(a, pc.random_information(20, 6));
        assert!(a.iter().all(|m| m.shape() == (2, 2)));
    }

    #[test]
    fn union_sizes() {
        assert_eq!(union_coset_size(2, 1, 1, 3, 3), Some(18));
        assert_eq!(union_coset_size(2, 1, 1, 0, 3), Some(0));
        assert_eq!(expurgated_union_size(2, 1, 3, 1, 3), Some(18));
        assert_eq!(union_coset_size(2, 100, 100, 1, 1), None);
    }

    #[test]
    fn union_membership() {
        let j4 = repetition(F2, 4).unwrap();
        let us = vec![v("0011"), v("0101"), v("0110")];
        // c1 = <j_4> has k1 = 1 so the canonical reps are 0abc
        let pc = ProductCode::construction_i(
            AffineCode::new(j4.clone(), &us[1]).unwrap(),
            AffineCode::new(j4.clone(), &us[2]).unwrap(),
        )
        .unwrap();
        let n = pc.codewords().unwrap().last().unwrap();
        assert!(union_coset_contains(&n, &j4, &j4, &us, &us).unwrap());
        assert!(!union_coset_contains(&FieldMatrix::zeros(F2, 4, 4), &j4, &j4, &us, &us).unwrap());
    }

    #[test]
    fn combinations() {
        assert_eq!(Combinations::new(16, 5).count(), 4368);
        let all: Vec<_> = Combinations::new(4, 2).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![0, 1]);
        assert_eq!(all[5], vec![2, 3]);
        assert_eq!(Combinations::new(3, 0).count(), 1);
        assert_eq!(Combinations::new(2, 3).count(), 0);
    }

    #[test]
    fn systematic_sets_of_a_product() {
        let pc = exa90();
        let words: Vec<_> = pc.codewords().unwrap().collect();
        let sets = systematic_coordinate_sets(&words, 4);
        let (rows, cols) = pc.systematic_positions();
        let mut block: Vec<usize> = rows.iter().flat_map(|&r| cols.iter().map(move |&c| r * 4 + c)).collect();
        block.sort();
        assert!(sets.contains(&block));
        assert!(systematic_coordinate_sets(&words, 5).is_empty());
    }
}
