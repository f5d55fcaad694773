//! Exact computations with BMW, HOMFLY-PT skein and q-Schur diagram algebras.

pub mod error;
pub mod invariants;
pub mod jaeger;
pub mod diagram;
pub mod ring;
pub mod schur;

pub use error::{Result, SkeinError};
pub use ring::{BiLaurent, LaurentQ, RatFun, SignConvention};
