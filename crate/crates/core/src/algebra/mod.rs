//! Linear algebra over F2 and over F2[U] with monomial entries.

pub mod f2;
pub mod mono;
pub mod smith;

pub use f2::{rank, solve_affine_f2, EchelonSpan, F2Equation, F2SolutionSpace, F2System, F2Vec};
pub use mono::{forced_exponent, Basis, Chain, Generator, MonoMatrix};
pub use smith::{graded_smith, SmithForm};
