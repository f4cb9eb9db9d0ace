//! Exact Jacobi sums, cyclotomic matrices and elliptic-curve traces over
//! finite fields, with verifiers for the identities that tie them together.

pub mod characters;
pub mod cyclotomic;
pub mod error;
pub mod field;
pub mod matrices;
pub mod nt_base;
pub mod theorems;

pub use cyclotomic::{CycInt, CycRat};
pub use error::{Error, Result};
pub use field::{FieldCtx, FieldElement, GeneratorChoice};
pub use nt_base::SymbolValue;
