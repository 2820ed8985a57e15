//! Affine codes `C + u`.
//!
//! The representative is kept in canonical form `(0_k, a)`. Internally `a`
//! lives in the base code's systematic coordinates; every public input and
//! output is in original coordinates.

use crate::algebra::{hamming_distance, hamming_weight, solve, FieldMatrix, Solution};
use crate::codes::{CodeError, LinearCode};

/// A received symbol: `None` is an erasure.
pub type Symbol = Option<u8>;

/// Why an erasure pattern could not be filled in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ErasureFailure {
    /// More than one codeword agrees with the surviving symbols.
    Ambiguous,
    /// No codeword agrees with the surviving symbols.
    Inconsistent,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineCode {
    base: LinearCode,
    tail: Vec<u8>,
}

impl AffineCode {
    /// The coset `base + u` for any `u`; the representative is canonicalized.
    pub fn new(base: LinearCode, u: &[u8]) -> Result<Self, CodeError> {
        let tail = base.coset_tail(u)?;
        Ok(AffineCode { base, tail })
    }

    /// The base code itself (representative zero).
    pub fn linear(base: LinearCode) -> Self {
        let tail = vec![0; base.length() - base.dimension()];
        AffineCode { base, tail }
    }

    pub fn base(&self) -> &LinearCode {
        &self.base
    }

    pub fn length(&self) -> usize {
        self.base.length()
    }

    pub fn dimension(&self) -> usize {
        self.base.dimension()
    }

    /// `a` of the representative `(0_k, a)`, systematic coordinates.
    pub fn tail(&self) -> &[u8] {
        &self.tail
    }

    /// The canonical representative in original coordinates.
    pub fn representative(&self) -> Vec<u8> {
        let mut s = vec![0; self.dimension()];
        s.extend_from_slice(&self.tail);
        self.base.systematic().from_systematic(&s)
    }

    pub fn is_linear(&self) -> bool {
        self.tail.iter().all(|&x| x == 0)
    }

    fn check_len(&self, n: usize) -> Result<(), CodeError> {
        if n != self.length() {
            return Err(CodeError::LengthMismatch { expected: self.length(), got: n });
        }
        Ok(())
    }

    /// `x ↦ (x, xA + a)`, mapped back through the base permutation.
    pub fn encode(&self, x: &[u8]) -> Result<Vec<u8>, CodeError> {
        if x.len() != self.dimension() {
            return Err(CodeError::LengthMismatch { expected: self.dimension(), got: x.len() });
        }
        let f = self.base.field();
        let mut s = x.to_vec();
        s.extend(f.add_vec(&f.vec_mul(x, self.base.redundancy()), &self.tail));
        Ok(self.base.systematic().from_systematic(&s))
    }

    pub fn contains(&self, w: &[u8]) -> Result<bool, CodeError> {
        self.check_len(w.len())?;
        let f = self.base.field();
        self.base.contains(&f.sub_vec(w, &self.representative()))
    }

    /// All coset elements, ordered by information vector.
    pub fn codewords(&self) -> Result<impl Iterator<Item = Vec<u8>> + '_, CodeError> {
        let f = self.base.field();
        let rep = self.representative();
        Ok(self.base.codewords()?.map(move |c| f.add_vec(&c, &rep)))
    }

    /// Minimum and maximum Hamming weight over the coset.
    pub fn weight_profile(&self) -> Result<(usize, usize), CodeError> {
        let mut lo = usize::MAX;
        let mut hi = 0;
        for w in self.codewords()? {
            let wt = hamming_weight(&w);
            lo = lo.min(wt);
            hi = hi.max(wt);
        }
        Ok((lo, hi))
    }

    /// Fills erasures by solving for the unique information vector that agrees
    /// with every surviving coordinate.
    pub fn erasure_decode(&self, w: &[Symbol]) -> Result<Result<Vec<u8>, ErasureFailure>, CodeError> {
        self.check_len(w.len())?;
        let f = self.base.field();
        let rep = self.representative();
        let g = &self.base.systematic().generator;
        let known: Vec<usize> = (0..w.len()).filter(|&j| w[j].is_some()).collect();
        let coeffs = g.select_columns(&known).transpose();
        let rhs: Vec<u8> = known
            .iter()
            .map(|&j| {
                let s = w[j].expect("known position");
                if s >= f.order() {
                    Err(CodeError::InvalidParams(format!("symbol {s} out of range at position {j}")))
                } else {
                    Ok(f.sub(s, rep[j]))
                }
            })
            .collect::<Result<_, _>>()?;
        let x = match solve(&coeffs, &rhs)? {
            Solution::Unique(x) => x,
            Solution::NoSolution => return Ok(Err(ErasureFailure::Inconsistent)),
            Solution::Underdetermined => return Ok(Err(ErasureFailure::Ambiguous)),
        };
        // the generator is (I_k | A) up to permutation, so x is also the
        // information vector
        Ok(Ok(self.encode(&x)?))
    }

    /// The unique coset element within `radius` of `w`, by exhaustive search.
    /// `None` when there is no such element or more than one.
    pub fn bounded_distance_decode(&self, w: &[u8], radius: usize) -> Result<Option<Vec<u8>>, CodeError> {
        self.check_len(w.len())?;
        let mut found = None;
        for c in self.codewords()? {
            if hamming_distance(&c, w) <= radius {
                if found.is_some() {
                    return Ok(None);
                }
                found = Some(c);
            }
        }
        Ok(found)
    }

    /// For a binary coset `C + u` with `j ∈ C` and `u ∉ C`, every element
    /// weighs between `d` and `n - d`, `d` being the minimum distance of
    /// `C + <u>`. `None` when those conditions fail.
    pub fn weight_window(&self) -> Result<Option<(usize, usize)>, CodeError> {
        let f = self.base.field();
        if !f.is_binary() || self.is_linear() || !self.base.is_self_complementary() {
            return Ok(None);
        }
        let mut rows: Vec<Vec<u8>> = self.generator().row_iter().map(<[u8]>::to_vec).collect();
        rows.push(self.representative());
        let d = LinearCode::spanned_by(f, self.length(), &rows)?.min_distance()?;
        Ok(Some((d, self.length() - d)))
    }

    /// The base generator in systematic form, original coordinates.
    pub fn generator(&self) -> &FieldMatrix {
        &self.base.systematic().generator
    }
}
