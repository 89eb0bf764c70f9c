//! Finite Rauszer Boolean algebras: the closure and interior a preorder
//! induces on a powerset, the Heyting-Brouwer lattice of its open sets,
//! De Morgan and Nelson structure from point involutions, and the
//! prime-filter representation of finite algebras back into such opens.

pub mod algebra;
pub mod cli;
pub mod dot;
pub mod enumerate;
pub mod error;
pub mod info;
pub mod laws;
pub mod order;
pub mod rauszer;
pub mod report;
pub mod representation;
pub mod subset;

pub use algebra::{BinaryOp, FiniteAlgebra, UnaryOp};
pub use error::{Error, Result};
pub use order::{build_preorder, BuildMode, Preorder};
pub use subset::Subset;
