//! Systematic product codes built from affine codes.
//!
//! The crate covers prime-field linear algebra ([`algebra`]), linear codes
//! and named families ([`codes`]), cosets of linear codes ([`affine`]),
//! regular products of affine codes ([`product`]), irregular products with
//! per-row and per-column component codes ([`irregular`]), and a
//! power-line channel model with the matching erasure decoder ([`plc`]).
//! JSON-facing descriptions of all of these live in [`schema`].

pub mod affine;
pub mod algebra;
pub mod codes;
pub mod irregular;
pub mod plc;
pub mod product;
pub mod schema;

pub use affine::{AffineCode, ErasureFailure, Symbol};
pub use algebra::{AlgebraError, Field, FieldMatrix};
pub use codes::{CodeError, Family, LinearCode};
pub use irregular::{IrregularError, IrregularSpec};
pub use plc::{DecodeFailure, DecodeOptions, NoiseConfig, NoiseEvents, PlcError, ReceivedMatrix, SimulationReport};
pub use product::{MatrixCodeword, ProductCode, ProductError, ProductKind, Side, WeightBounds};
pub use schema::{CodeSpec, IrregularJson, ProductSpec, SchemaError};
