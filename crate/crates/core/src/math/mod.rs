//! Special functions and quadrature used across the library.

pub mod erf;
pub mod quad;
