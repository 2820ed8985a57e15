//! Linear codes given by a generator matrix.
//!
//! A [`LinearCode`] caches its systematic encoder `(I_k | A)` together with
//! the column permutation that exposes the information set, and lazily the
//! minimum distance. Membership is decided by rank, never by enumeration.

use std::sync::OnceLock;

use thiserror::Error;

use crate::algebra::{
    all_ones, all_vectors, checked_space_size, hamming_weight, rref, systematic_form, AlgebraError, Field, FieldMatrix,
    SystematicForm,
};

/// Largest codebook that enumeration-based routines will walk.
pub const ENUMERATION_LIMIT: u64 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("{what} too large to enumerate (limit {limit})")]
    TooLargeToEnumerate { what: String, limit: u64 },
    #[error("expected a vector of length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("invalid code parameters: {0}")]
    InvalidParams(String),
    #[error("the first code is not a subcode of the second")]
    NotNested,
    #[error("nested codes have equal dimension")]
    EqualDimensions,
    #[error("zero-dimensional code has no minimum distance")]
    EmptyCode,
}

/// A linear `[n, k]` code over a prime field.
#[derive(Debug, Clone)]
pub struct LinearCode {
    generator: FieldMatrix,
    systematic: SystematicForm,
    distance: OnceLock<usize>,
}

impl PartialEq for LinearCode {
    /// Codes compare as sets: the reduced generator is canonical.
    fn eq(&self, other: &Self) -> bool {
        self.systematic.generator == other.systematic.generator
    }
}

impl Eq for LinearCode {}

impl LinearCode {
    /// Wraps a full-row-rank generator matrix.
    pub fn new(generator: FieldMatrix) -> Result<Self, CodeError> {
        let systematic = systematic_form(&generator)?;
        Ok(LinearCode { generator, systematic, distance: OnceLock::new() })
    }

    /// The span of arbitrary (possibly dependent) rows of length `n`.
    pub fn spanned_by<R: AsRef<[u8]>>(field: Field, n: usize, rows: &[R]) -> Result<Self, CodeError> {
        let m = if rows.is_empty() { FieldMatrix::zeros(field, 0, n) } else { FieldMatrix::from_rows(field, rows)? };
        if m.cols() != n {
            return Err(CodeError::LengthMismatch { expected: n, got: m.cols() });
        }
        let r = rref(&m);
        Self::new(r.reduced.submatrix(0..r.rank, 0..n))
    }

    pub fn field(&self) -> Field {
        self.generator.field()
    }

    pub fn length(&self) -> usize {
        self.generator.cols()
    }

    pub fn dimension(&self) -> usize {
        self.generator.rows()
    }

    /// The generator as supplied at construction.
    pub fn generator(&self) -> &FieldMatrix {
        &self.generator
    }

    pub fn systematic(&self) -> &SystematicForm {
        &self.systematic
    }

    /// The `A` of the systematic encoder `(I_k | A)`.
    pub fn redundancy(&self) -> &FieldMatrix {
        &self.systematic.a
    }

    pub fn permutation(&self) -> &[usize] {
        &self.systematic.perm
    }

    /// Number of codewords, if enumerable.
    pub fn size(&self) -> Option<u64> {
        checked_space_size(self.field(), self.dimension(), ENUMERATION_LIMIT)
    }

    fn check_len(&self, w: &[u8]) -> Result<(), CodeError> {
        if w.len() != self.length() {
            return Err(CodeError::LengthMismatch { expected: self.length(), got: w.len() });
        }
        Ok(())
    }

    fn enumeration_guard(&self) -> Result<(), CodeError> {
        self.size().map(|_| ()).ok_or_else(|| CodeError::TooLargeToEnumerate {
            what: format!("code of dimension {} over GF({})", self.dimension(), self.field().order()),
            limit: ENUMERATION_LIMIT,
        })
    }

    /// Systematic encoding `x ↦ (x, xA)` reported in original coordinates.
    pub fn encode(&self, x: &[u8]) -> Result<Vec<u8>, CodeError> {
        if x.len() != self.dimension() {
            return Err(CodeError::LengthMismatch { expected: self.dimension(), got: x.len() });
        }
        Ok(self.field().vec_mul(x, &self.systematic.generator))
    }

    /// The information vector of a codeword (its systematic coordinates).
    pub fn information(&self, c: &[u8]) -> Vec<u8> {
        self.systematic.perm[..self.dimension()].iter().map(|&p| c[p]).collect()
    }

    /// All codewords, in lexicographic order of the information vector.
    pub fn codewords(&self) -> Result<impl Iterator<Item = Vec<u8>> + '_, CodeError> {
        self.enumeration_guard()?;
        let f = self.field();
        Ok(all_vectors(f, self.dimension()).map(move |x| f.vec_mul(&x, &self.systematic.generator)))
    }

    /// Exact minimum distance by enumerating every nonzero codeword.
    pub fn min_distance(&self) -> Result<usize, CodeError> {
        if self.dimension() == 0 {
            return Err(CodeError::EmptyCode);
        }
        if let Some(&d) = self.distance.get() {
            return Ok(d);
        }
        self.enumeration_guard()?;
        Ok(*self.distance.get_or_init(|| {
            self.codewords().expect("guard checked").skip(1).map(|c| hamming_weight(&c)).min().expect("k >= 1")
        }))
    }

    pub fn contains(&self, w: &[u8]) -> Result<bool, CodeError> {
        self.check_len(w)?;
        let f = self.field();
        let stacked = self.systematic.generator.vstack(&FieldMatrix::row_vector(f, w));
        Ok(stacked.rank() == self.dimension())
    }

    /// Whether the all-one vector is a codeword.
    pub fn is_self_complementary(&self) -> bool {
        self.contains(&all_ones(self.length())).expect("length matches")
    }

    /// Every generator row of `self` lies in `other`.
    pub fn is_subcode_of(&self, other: &LinearCode) -> Result<bool, CodeError> {
        if self.length() != other.length() {
            return Err(CodeError::LengthMismatch { expected: other.length(), got: self.length() });
        }
        for r in self.generator.row_iter() {
            if !other.contains(r)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The `a` of the canonical representative `(0_k, a)` of `C + u`, in
    /// systematic coordinates: `a = u_2 - u_1 A`.
    pub fn coset_tail(&self, u: &[u8]) -> Result<Vec<u8>, CodeError> {
        self.check_len(u)?;
        let f = self.field();
        let k = self.dimension();
        let s = self.systematic.to_systematic(u);
        let (u1, u2) = s.split_at(k);
        Ok(f.sub_vec(u2, &f.vec_mul(u1, &self.systematic.a)))
    }

    /// Canonical representative of `C + u`: the unique coset element that is
    /// zero on the information set. Returned in original coordinates.
    pub fn coset_representative(&self, u: &[u8]) -> Result<Vec<u8>, CodeError> {
        let mut s = vec![0; self.dimension()];
        s.extend(self.coset_tail(u)?);
        Ok(self.systematic.from_systematic(&s))
    }

    /// Deterministic hyperplane `c3` with `self ⊆ c3 ⊂ sup` and a vector
    /// `u ∈ sup \ c3`.
    ///
    /// A basis of `self` is extended by scanning the generator rows of `sup`
    /// in order and keeping those independent of the span so far. `c3` is
    /// spanned by all but the last kept row, which becomes `u`.
    pub fn hyperplane_between(&self, sup: &LinearCode) -> Result<(LinearCode, Vec<u8>), CodeError> {
        if !self.is_subcode_of(sup)? {
            return Err(CodeError::NotNested);
        }
        if self.dimension() == sup.dimension() {
            return Err(CodeError::EqualDimensions);
        }
        let f = self.field();
        let mut basis = self.generator.clone();
        let mut kept: Vec<Vec<u8>> = Vec::new();
        for r in sup.generator.row_iter() {
            let extended = basis.vstack(&FieldMatrix::row_vector(f, r));
            if extended.rank() > basis.rows() {
                basis = extended;
                kept.push(r.to_vec());
            }
        }
        let u = kept.pop().expect("dimensions differ so at least one row is kept");
        let c3 = LinearCode::new(basis.submatrix(0..basis.rows() - 1, 0..basis.cols()))?;
        Ok((c3, u))
    }
}

/// The named code families shipped with the library.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `[n, n-1, 2]`: all words whose coordinates sum to zero.
    EvenWeight(usize),
    /// `[n, 1, n]`.
    Repetition(usize),
    /// First-order Reed-Muller `[2^r, r+1, 2^(r-1)]`, binary only.
    ReedMuller1(usize),
    /// `[n, n, 1]`.
    FullSpace(usize),
}

impl Family {
    pub fn build(self, field: Field) -> Result<LinearCode, CodeError> {
        match self {
            Family::EvenWeight(n) => even_weight(field, n),
            Family::Repetition(n) => repetition(field, n),
            Family::ReedMuller1(r) => reed_muller_1(r),
            Family::FullSpace(n) => full_space(field, n),
        }
    }
}

/// Generator `(I_{n-1} | -j^T)`.
pub fn even_weight(field: Field, n: usize) -> Result<LinearCode, CodeError> {
    if n < 2 {
        return Err(CodeError::InvalidParams(format!("even_weight needs n >= 2, got {n}")));
    }
    let minus_one = field.neg(1);
    let g = FieldMatrix::from_fn(field, n - 1, n, |i, j| {
        if j == i {
            1
        } else if j == n - 1 {
            minus_one
        } else {
            0
        }
    });
    LinearCode::new(g)
}

pub fn repetition(field: Field, n: usize) -> Result<LinearCode, CodeError> {
    if n < 1 {
        return Err(CodeError::InvalidParams("repetition needs n >= 1".into()));
    }
    LinearCode::new(FieldMatrix::row_vector(field, &all_ones(n)))
}

/// Rows: `j_{2^r}`, then for each bit of the column index (most significant
/// first) the indicator of columns with that bit set.
pub fn reed_muller_1(r: usize) -> Result<LinearCode, CodeError> {
    if !(1..=16).contains(&r) {
        return Err(CodeError::InvalidParams(format!("reed_muller_1 needs 1 <= r <= 16, got {r}")));
    }
    let n = 1usize << r;
    let g = FieldMatrix::from_fn(Field::BINARY, r + 1, n, |i, j| if i == 0 { 1 } else { ((j >> (r - i)) & 1) as u8 });
    LinearCode::new(g)
}

pub fn full_space(field: Field, n: usize) -> Result<LinearCode, CodeError> {
    if n < 1 {
        return Err(CodeError::InvalidParams("full_space needs n >= 1".into()));
    }
    LinearCode::new(FieldMatrix::identity(field, n))
}
