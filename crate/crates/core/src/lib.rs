//! Exact-arithmetic computations around the degenerate special linear
//! group of type A: fundamental and tensor highest-weight modules for the
//! abelianized lowering operators, generalized Pluecker relations and
//! their straightening, the coordinate-ring parametrization, the ideal
//! quotient picture, and linear-algebra models of the flag varieties.
//!
//! Everything runs over arbitrary-precision rationals; there is no
//! floating point anywhere in the computational core.

pub mod cli;
pub mod error;
pub mod exactlin;
pub mod flaggeo;
pub mod fundmod;
pub mod ideal;
pub mod jsonio;
pub mod pluecker;
pub mod roots;
pub mod tensormod;

pub use error::{Error, Result};
pub use exactlin::Rational;
pub use roots::{MultDegree, RootIndex};
