//! Three families of cyclic codes over F_q built from trace representations,
//! their closed-form weight distributions, and brute-force oracles that check
//! the closed forms.

pub mod arith;
pub mod cli;
pub mod code;
pub mod engine;
pub mod error;
pub mod field;
pub mod hermitian;
pub mod linalg;
pub mod poly;
pub mod quadform;
pub mod spectra;

pub use error::{Error, Result};
pub use field::{Elem, FieldCtx, TraceLevel};
pub use poly::Poly;
pub use code::{CodeSpec, Family};
pub use engine::{EngineConfig, Tier};
pub use spectra::WeightDistribution;
