//! Temperley–Lieb algebras of affine type C, computed two ways: by
//! generator-and-relation rewriting on the monomial basis indexed by fully
//! commutative elements, and by a decorated planar diagram calculus. The
//! crate also checks, exhaustively up to a length bound, that the algebra map
//! sending each generator to its simple diagram takes monomials to single
//! admissible diagrams without scalars and does so injectively.

pub mod cli;
pub mod coxeter;
pub mod diagram;
pub mod error;
pub mod heap;
pub mod poly;
pub mod starops;
pub mod theta;
pub mod tl;
pub mod verify;
pub mod verlinde;

pub use error::{Error, Result};
