//! Irregular products: row `i` lies in its own code `C_i + u` and column
//! `j` in `D_j + v`.
//!
//! Row codes have length `n` and nondecreasing dimensions
//! `k_0 <= … <= k_{m-1}`; column codes have length `m` and dimensions
//! `l_0 <= … <= l_{n-1}`. With both chains nested the code has dimension
//!
//! ```text
//! K = Σ_j Σ_{l_{j-1} <= i < l_j} max(k_i - j, 0)        (0-based, l_{-1} = 0)
//! ```
//!
//! and cell `(i, j)` carries information exactly when `i < l_j` and
//! `j < k_i`.
//!
//! Encoding walks the columns left to right. In column `j` the top `l_j`
//! cells are either information or, once `j >= k_i`, the parity of row
//! `i`'s prefix under `C_i`; the rest of the column comes from `D_j`.
//! Every component must have its information set in the leading
//! coordinates.

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{all_vectors, checked_space_size, Field, FieldMatrix};
use crate::codes::{CodeError, LinearCode};
use crate::product::{Side, WeightBounds, PRODUCT_ENUMERATION_LIMIT};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IrregularError {
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error("need at least one row code and one column code")]
    Empty,
    #[error("component codes are over different fields")]
    FieldMismatch,
    #[error("{side} code {index} has length {got}, expected {expected}")]
    ComponentLength { side: Side, index: usize, expected: usize, got: usize },
    #[error("{side} representative has length {got}, expected {expected}")]
    RepLength { side: Side, expected: usize, got: usize },
    #[error("{0} code dimensions must be nondecreasing")]
    UnsortedDimensions(Side),
    #[error("{0} codes are not nested")]
    NotNested(Side),
    #[error("{side} code {index} does not have its information set in the leading coordinates")]
    NonLeadingInformationSet { side: Side, index: usize },
    #[error("{0} representative is not of the form (0, a)")]
    NonCanonicalRep(Side),
    #[error("expected {expected} information symbols, got {got}")]
    InfoLength { expected: usize, got: usize },
    #[error("expected a {}x{} matrix, got {}x{}", .expected.0, .expected.1, .got.0, .got.1)]
    ShapeMismatch { expected: (usize, usize), got: (usize, usize) },
    #[error("weight bounds need binary codes")]
    NotBinary,
    #[error("{side} code {index} is not contained in the {side} supercode")]
    NotInSupercode { side: Side, index: usize },
    #[error("{0} supercode does not contain the all-one vector")]
    SupercodeNotSelfComplementary(Side),
    #[error("{0} representative is not in the {0} supercode")]
    RepOutsideSupercode(Side),
    #[error("{side} representative lies in {side} code {index}")]
    RepInComponent { side: Side, index: usize },
}

/// Per-row and per-column component codes with a representative on each
/// side. Representatives are in original coordinates.
#[derive(Debug, Clone)]
pub struct IrregularSpec {
    rows: Vec<LinearCode>,
    cols: Vec<LinearCode>,
    row_rep: Vec<u8>,
    col_rep: Vec<u8>,
    nested_rows: bool,
    nested_cols: bool,
}

fn is_chain(codes: &[LinearCode]) -> Result<bool, CodeError> {
    for w in codes.windows(2) {
        if !w[0].is_subcode_of(&w[1])? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn leading(code: &LinearCode) -> bool {
    code.permutation()[..code.dimension()].iter().enumerate().all(|(i, &p)| i == p)
}

impl IrregularSpec {
    pub fn new(
        rows: Vec<LinearCode>,
        cols: Vec<LinearCode>,
        row_rep: Vec<u8>,
        col_rep: Vec<u8>,
    ) -> Result<Self, IrregularError> {
        if rows.is_empty() || cols.is_empty() {
            return Err(IrregularError::Empty);
        }
        let (m, n) = (rows.len(), cols.len());
        let field = rows[0].field();
        if rows.iter().chain(&cols).any(|c| c.field() != field) {
            return Err(IrregularError::FieldMismatch);
        }
        for (side, codes, len) in [(Side::Row, &rows, n), (Side::Column, &cols, m)] {
            for (index, c) in codes.iter().enumerate() {
                if c.length() != len {
                    return Err(IrregularError::ComponentLength { side, index, expected: len, got: c.length() });
                }
            }
            if codes.windows(2).any(|w| w[0].dimension() > w[1].dimension()) {
                return Err(IrregularError::UnsortedDimensions(side));
            }
        }
        for (side, rep, len) in [(Side::Row, &row_rep, n), (Side::Column, &col_rep, m)] {
            if rep.len() != len {
                return Err(IrregularError::RepLength { side, expected: len, got: rep.len() });
            }
            if let Some(&bad) = rep.iter().find(|&&x| x >= field.order()) {
                return Err(CodeError::InvalidParams(format!("symbol {bad} out of range")).into());
            }
        }
        let nested_rows = is_chain(&rows)?;
        let nested_cols = is_chain(&cols)?;
        Ok(IrregularSpec { rows, cols, row_rep, col_rep, nested_rows, nested_cols })
    }

    /// Representatives zero.
    pub fn linear(rows: Vec<LinearCode>, cols: Vec<LinearCode>) -> Result<Self, IrregularError> {
        let (m, n) = (rows.len(), cols.len());
        Self::new(rows, cols, vec![0; n], vec![0; m])
    }

    /// The same components with both representatives zero.
    pub fn without_reps(&self) -> Self {
        IrregularSpec { row_rep: vec![0; self.cols.len()], col_rep: vec![0; self.rows.len()], ..self.clone() }
    }

    pub fn field(&self) -> Field {
        self.rows[0].field()
    }

    /// `(m, n)`.
    pub fn shape(&self) -> (usize, usize) {
        (self.rows.len(), self.cols.len())
    }

    pub fn row_codes(&self) -> &[LinearCode] {
        &self.rows
    }

    pub fn col_codes(&self) -> &[LinearCode] {
        &self.cols
    }

    pub fn row_rep(&self) -> &[u8] {
        &self.row_rep
    }

    pub fn col_rep(&self) -> &[u8] {
        &self.col_rep
    }

    pub fn nested_rows(&self) -> bool {
        self.nested_rows
    }

    pub fn nested_cols(&self) -> bool {
        self.nested_cols
    }

    pub fn row_dims(&self) -> Vec<usize> {
        self.rows.iter().map(LinearCode::dimension).collect()
    }

    pub fn col_dims(&self) -> Vec<usize> {
        self.cols.iter().map(LinearCode::dimension).collect()
    }

    /// The dimension formula. An upper bound in general, exact when both
    /// chains are nested.
    pub fn dimension_bound(&self) -> usize {
        let k = self.row_dims();
        let l = self.col_dims();
        let mut total = 0;
        let mut prev = 0;
        for (j, &lj) in l.iter().enumerate() {
            total += (prev..lj).map(|i| k[i].saturating_sub(j)).sum::<usize>();
            prev = lj;
        }
        total
    }

    /// Whether cell `(i, j)` carries an information symbol.
    pub fn is_free(&self, i: usize, j: usize) -> bool {
        i < self.cols[j].dimension() && j < self.rows[i].dimension()
    }

    fn check_encodable(&self) -> Result<(), IrregularError> {
        if !self.nested_rows {
            return Err(IrregularError::NotNested(Side::Row));
        }
        if !self.nested_cols {
            return Err(IrregularError::NotNested(Side::Column));
        }
        for (side, codes) in [(Side::Row, &self.rows), (Side::Column, &self.cols)] {
            if let Some(index) = codes.iter().position(|c| !leading(c)) {
                return Err(IrregularError::NonLeadingInformationSet { side, index });
            }
        }
        Ok(())
    }

    /// `(k_m, l_n)`: the largest row and column dimensions.
    fn top_dims(&self) -> (usize, usize) {
        (self.rows.last().unwrap().dimension(), self.cols.last().unwrap().dimension())
    }

    /// The translate added to every linear codeword:
    ///
    /// ```text
    /// [ 0_{l_n×k_m}    | j^T a                          ]
    /// [ b^T j_{k_m}    | b^T j_{n-k_m} + j^T_{m-l_n} a  ]
    /// ```
    ///
    /// with `u = (0_{k_m}, a)` and `v = (0_{l_n}, b)`.
    pub fn translate_matrix(&self) -> Result<FieldMatrix, IrregularError> {
        let (km, ln) = self.top_dims();
        if self.row_rep[..km].iter().any(|&x| x != 0) {
            return Err(IrregularError::NonCanonicalRep(Side::Row));
        }
        if self.col_rep[..ln].iter().any(|&x| x != 0) {
            return Err(IrregularError::NonCanonicalRep(Side::Column));
        }
        let f = self.field();
        let (m, n) = self.shape();
        Ok(FieldMatrix::from_fn(f, m, n, |i, j| match (i < ln, j < km) {
            (true, true) => 0,
            (true, false) => self.row_rep[j],
            (false, true) => self.col_rep[i],
            (false, false) => f.add(self.col_rep[i], self.row_rep[j]),
        }))
    }

    /// Encodes `K` information symbols; needs both chains nested.
    pub fn encode(&self, info: &[u8]) -> Result<FieldMatrix, IrregularError> {
        self.check_encodable()?;
        let dim = self.dimension_bound();
        if info.len() != dim {
            return Err(IrregularError::InfoLength { expected: dim, got: info.len() });
        }
        let f = self.field();
        let (m, n) = self.shape();
        let mut out = FieldMatrix::zeros(f, m, n);
        let mut symbols = info.iter();
        for j in 0..n {
            let lj = self.cols[j].dimension();
            for i in 0..lj {
                let ki = self.rows[i].dimension();
                let x = if j < ki {
                    *symbols.next().expect("length checked")
                } else {
                    // parity of row i, all of whose information cells are
                    // already filled
                    let prefix = &out.row(i)[..ki];
                    let redundancy = self.rows[i].redundancy();
                    (0..ki).fold(0, |acc, t| f.add(acc, f.mul(prefix[t], redundancy.get(t, j - ki))))
                };
                out.set(i, j, x);
            }
            let top: Vec<u8> = (0..lj).map(|i| out.get(i, j)).collect();
            let column = self.cols[j].encode(&top)?;
            for (i, &x) in column.iter().enumerate().skip(lj) {
                out.set(i, j, x);
            }
        }
        let translate = self.translate_matrix()?;
        Ok(&out + &translate)
    }

    /// Whether row `i` lies in `C_i + u` and column `j` in `D_j + v` for
    /// every `i`, `j`.
    pub fn verify(&self, n: &FieldMatrix) -> Result<bool, IrregularError> {
        if n.shape() != self.shape() {
            return Err(IrregularError::ShapeMismatch { expected: self.shape(), got: n.shape() });
        }
        let f = self.field();
        for (i, code) in self.rows.iter().enumerate() {
            if !code.contains(&f.sub_vec(n.row(i), &self.row_rep))? {
                return Ok(false);
            }
        }
        for (j, code) in self.cols.iter().enumerate() {
            if !code.contains(&f.sub_vec(&n.column(j), &self.col_rep))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Every codeword, information vectors in lexicographic order.
    pub fn codewords(&self) -> Result<impl Iterator<Item = FieldMatrix> + '_, IrregularError> {
        self.check_encodable()?;
        let dim = self.dimension_bound();
        if checked_space_size(self.field(), dim, PRODUCT_ENUMERATION_LIMIT).is_none() {
            return Err(CodeError::TooLargeToEnumerate {
                what: format!("irregular code of dimension {dim}"),
                limit: PRODUCT_ENUMERATION_LIMIT,
            }
            .into());
        }
        Ok(all_vectors(self.field(), dim).map(move |x| self.encode(&x).expect("encodable")))
    }

    /// Row/column weight extrema over every codeword, for binary specs
    /// whose components sit inside self-complementary supercodes with
    /// `u ∈ row_super \ ∪ C_i` and `v ∈ col_super \ ∪ D_j`. Rows then
    /// weigh between `d(row_super)` and `n - d(row_super)`, columns
    /// likewise.
    pub fn weight_bounds(
        &self,
        row_super: &LinearCode,
        col_super: &LinearCode,
    ) -> Result<WeightBounds, IrregularError> {
        if !self.field().is_binary() {
            return Err(IrregularError::NotBinary);
        }
        for (side, codes, sup, rep) in
            [(Side::Row, &self.rows, row_super, &self.row_rep), (Side::Column, &self.cols, col_super, &self.col_rep)]
        {
            if !sup.is_self_complementary() {
                return Err(IrregularError::SupercodeNotSelfComplementary(side));
            }
            for (index, c) in codes.iter().enumerate() {
                if !c.is_subcode_of(sup)? {
                    return Err(IrregularError::NotInSupercode { side, index });
                }
                if c.contains(rep)? {
                    return Err(IrregularError::RepInComponent { side, index });
                }
            }
            if !sup.contains(rep)? {
                return Err(IrregularError::RepOutsideSupercode(side));
            }
        }
        let mut wb = WeightBounds::empty();
        for n in self.codewords()? {
            wb.absorb(&n);
        }
        Ok(wb)
    }

    pub fn summary(&self) -> IrregularSummary {
        IrregularSummary {
            shape: self.shape(),
            row_dims: self.row_dims(),
            col_dims: self.col_dims(),
            nested_rows: self.nested_rows,
            nested_cols: self.nested_cols,
            dimension_bound: self.dimension_bound(),
            exact: self.nested_rows && self.nested_cols,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IrregularSummary {
    pub shape: (usize, usize),
    pub row_dims: Vec<usize>,
    pub col_dims: Vec<usize>,
    pub nested_rows: bool,
    pub nested_cols: bool,
    pub dimension_bound: usize,
    /// Whether the bound is the true dimension.
    pub exact: bool,
}
