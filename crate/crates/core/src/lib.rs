//! Exact construction of the commutative unital algebra `A(g)` attached to a
//! split simple Lie algebra `g` over the rationals.
//!
//! The pipeline is
//!
//! 1. [`rootsys`]: root-system combinatorics and the canonical form,
//! 2. [`chevalley`]: a Chevalley basis with integral structure constants,
//!    the Killing form and its dual basis,
//! 3. [`algcore`]: the operators `P` and `S`, the algebra `A(g) = im S`, its
//!    product, counit and trace form,
//! 4. [`unitize`]: algebras of the form `Unit(V, f)` and polynomial-identity
//!    probes,
//! 5. [`verify`]: a check-by-check verification report,
//! 6. [`construction2`]: the realization of `A(g)` inside `End(V)` for small
//!    representations.
//!
//! All arithmetic is exact (`BigRational`). Data-parallel loops go through
//! [`par`], which falls back to sequential iteration when the `parallel`
//! feature is disabled.

pub mod algcore;
pub mod chevalley;
pub mod construction2;
pub mod error;
pub mod exactla;
pub mod io;
pub mod par;
pub mod rational;
pub mod rootsys;
pub mod structure;
pub mod unitize;
pub mod verify;

pub use algcore::{AlgebraTable, CounitSplit, Sym2};
pub use chevalley::LieAlgebra;
pub use error::{Error, Result};
pub use exactla::RatMatrix;
pub use par::Execution;
pub use rational::Q;
pub use rootsys::{Family, RootDatum, RootSystemSpec};
pub use structure::StructureTable;
pub use unitize::UnitizedAlgebra;

/// Version string embedded into exported artifacts.
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
