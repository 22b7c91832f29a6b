//! Exact dual canonical bases of the quantum unipotent subgroups of affine sl2
//! attached to the words `(s_0 s_1)^n`, their quantum cluster structure, and the
//! K-theory label tables built from them.

pub mod aalg;
pub mod cluster;
pub mod error;
pub mod freealg;
pub mod ictables;
pub mod invariants;
pub mod linalg;
pub mod pbw;
pub mod qring;
pub mod rootdata;

pub use error::{Error, Result};
