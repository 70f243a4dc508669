//! Closed-form and numeric polynomial algebra, and small dense linear algebra.
//!
//! The numeric root finder and the Jacobi eigensolver are deliberately
//! independent of the closed-form routines so they can serve as oracles.

mod closed;
mod linalg;
mod poly;
mod roots;

pub use closed::{depress_quartic, solve_cubic, solve_quadratic, solve_quartic, DepressedQuartic};
pub use linalg::{determinant, solve_linear, symmetric_eigenvalues};
pub use poly::{ComplexRootSet, Polynomial, Root};
pub use roots::numeric_roots;

pub use num_complex::Complex64;
