//! Serializable descriptions of codes, products and irregular products.
//!
//! ```json
//! {"family": "even_weight", "n": 4}
//! {"generator": ["1111", "1010"], "p": 2}
//! {"row": {...}, "row_rep": "0011", "col": {...}, "col_rep": "0011"}
//! {"construction": "IA", "c1": {...}, "c2": {...}, "d1": {...}, "d2": {...}}
//! {"rows": [{...}, ...], "cols": [{...}, ...], "row_rep": "...", "col_rep": "..."}
//! ```
//!
//! `p` defaults to 2. Representatives default to zero.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::affine::AffineCode;
use crate::algebra::{parse_vector, AlgebraError, Field, FieldMatrix};
use crate::codes::{CodeError, Family, LinearCode};
use crate::irregular::{IrregularError, IrregularSpec};
use crate::product::{ProductCode, ProductError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchemaError {
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Product(#[from] ProductError),
    #[error(transparent)]
    Irregular(#[from] IrregularError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyName {
    EvenWeight,
    Repetition,
    #[serde(rename = "reed_muller_1")]
    ReedMuller1,
    FullSpace,
}

/// Generator rows as one newline-separated string or a list of rows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GeneratorText {
    Text(String),
    Rows(Vec<String>),
}

impl GeneratorText {
    fn joined(&self) -> String {
        match self {
            GeneratorText::Text(s) => s.clone(),
            GeneratorText::Rows(rows) => rows.join("\n"),
        }
    }
}

/// A linear code: a named family or an explicit generator.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilyName>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<GeneratorText>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u8>,
}

impl CodeSpec {
    pub fn family(family: FamilyName, size: usize) -> Self {
        match family {
            FamilyName::ReedMuller1 => CodeSpec { family: Some(family), r: Some(size), ..Default::default() },
            _ => CodeSpec { family: Some(family), n: Some(size), ..Default::default() },
        }
    }

    pub fn generator(g: &FieldMatrix) -> Self {
        let p = g.field().order();
        CodeSpec { generator: Some(GeneratorText::Text(g.to_text())), p: (p != 2).then_some(p), ..Default::default() }
    }

    pub fn field(&self) -> Result<Field, SchemaError> {
        Ok(Field::new(self.p.unwrap_or(2) as u32)?)
    }

    pub fn build(&self) -> Result<LinearCode, SchemaError> {
        let field = self.field()?;
        match (&self.family, &self.generator) {
            (Some(_), Some(_)) => Err(SchemaError::Invalid("give either \"family\" or \"generator\", not both".into())),
            (None, None) => Err(SchemaError::Invalid("code spec needs \"family\" or \"generator\"".into())),
            (None, Some(g)) => {
                if self.n.is_some() || self.r.is_some() {
                    return Err(SchemaError::Invalid("\"n\" and \"r\" only apply to families".into()));
                }
                Ok(LinearCode::new(FieldMatrix::parse(field, &g.joined())?)?)
            }
            (Some(family), None) => {
                let need_n = || self.n.ok_or_else(|| SchemaError::Invalid(format!("{family:?} needs \"n\"")));
                let fam = match family {
                    FamilyName::EvenWeight => Family::EvenWeight(need_n()?),
                    FamilyName::Repetition => Family::Repetition(need_n()?),
                    FamilyName::FullSpace => Family::FullSpace(need_n()?),
                    FamilyName::ReedMuller1 => Family::ReedMuller1(
                        self.r.ok_or_else(|| SchemaError::Invalid("reed_muller_1 needs \"r\"".into()))?,
                    ),
                };
                Ok(fam.build(field)?)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConstructionName {
    /// Pick the kind from the inputs.
    #[serde(rename = "auto")]
    Auto,
    #[serde(rename = "classical")]
    Classical,
    #[serde(rename = "I")]
    I,
    #[serde(rename = "IA")]
    IA,
}

/// A product code.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub construction: Option<ConstructionName>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub row: Option<CodeSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub row_rep: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub col: Option<CodeSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub col_rep: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c1: Option<CodeSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c2: Option<CodeSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d1: Option<CodeSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d2: Option<CodeSpec>,
}

fn required<'a>(spec: &'a Option<CodeSpec>, name: &str) -> Result<&'a CodeSpec, SchemaError> {
    spec.as_ref().ok_or_else(|| SchemaError::Invalid(format!("product spec needs \"{name}\"")))
}

fn affine(code: LinearCode, rep: &Option<String>) -> Result<AffineCode, SchemaError> {
    Ok(match rep {
        Some(s) => AffineCode::new(code.clone(), &parse_vector(code.field(), s)?)?,
        None => AffineCode::linear(code),
    })
}

impl ProductSpec {
    pub fn build(&self) -> Result<ProductCode, SchemaError> {
        let construction = self.construction.unwrap_or(ConstructionName::Auto);
        if construction == ConstructionName::IA {
            if self.row.is_some() || self.col.is_some() || self.row_rep.is_some() || self.col_rep.is_some() {
                return Err(SchemaError::Invalid("construction IA takes c1, c2, d1, d2 only".into()));
            }
            let [c1, c2, d1, d2] = [(&self.c1, "c1"), (&self.c2, "c2"), (&self.d1, "d1"), (&self.d2, "d2")]
                .map(|(s, name)| required(s, name).and_then(CodeSpec::build));
            return Ok(ProductCode::construction_ia(&c1?, &c2?, &d1?, &d2?)?);
        }
        if [&self.c1, &self.c2, &self.d1, &self.d2].iter().any(|s| s.is_some()) {
            return Err(SchemaError::Invalid("c1, c2, d1, d2 need \"construction\": \"IA\"".into()));
        }
        let row = affine(required(&self.row, "row")?.build()?, &self.row_rep)?;
        let col = affine(required(&self.col, "col")?.build()?, &self.col_rep)?;
        Ok(match construction {
            ConstructionName::Classical => {
                if !row.is_linear() || !col.is_linear() {
                    return Err(SchemaError::Invalid("a classical product takes no representatives".into()));
                }
                ProductCode::classical(row.base().clone(), col.base().clone())?
            }
            ConstructionName::I => ProductCode::construction_i(row, col)?,
            _ => ProductCode::new(row, col)?,
        })
    }
}

/// An irregular product code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IrregularJson {
    pub rows: Vec<CodeSpec>,
    pub cols: Vec<CodeSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub row_rep: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub col_rep: Option<String>,
}

impl IrregularJson {
    pub fn build(&self) -> Result<IrregularSpec, SchemaError> {
        let rows = self.rows.iter().map(CodeSpec::build).collect::<Result<Vec<_>, _>>()?;
        let cols = self.cols.iter().map(CodeSpec::build).collect::<Result<Vec<_>, _>>()?;
        let (Some(first), m, n) = (rows.first(), rows.len(), cols.len()) else {
            return Err(IrregularError::Empty.into());
        };
        let field = first.field();
        let rep = |s: &Option<String>, len: usize| -> Result<Vec<u8>, SchemaError> {
            Ok(match s {
                Some(s) => parse_vector(field, s)?,
                None => vec![0; len],
            })
        };
        Ok(IrregularSpec::new(rows, cols, rep(&self.row_rep, n)?, rep(&self.col_rep, m)?)?)
    }
}
