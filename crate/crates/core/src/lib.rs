//! Cyclic codes over finite fields: field and polynomial arithmetic, code
//! construction from a parity-check polynomial, shift-cycle and
//! proportionality-class partitions, stratification by minimal polynomial,
//! closed-form orbit and minimum-distance predictions, and the reports that
//! compare them with exhaustive enumeration.

pub mod arith;
pub mod code;
pub mod distance;
pub mod error;
pub mod field;
pub mod poly;
pub mod report;
pub mod structure;

pub use code::{code_from_parity_check, Budget, CodeSpec, Codeword};
pub use error::{Error, Result};
pub use field::{FieldElement, FieldSpec};
pub use poly::{Factorization, Poly};
