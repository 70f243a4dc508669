//! Exact level-crossing analysis of the X²Π₃/₂ OH Stark-Zeeman Hamiltonian.
//!
//! The crate is organised bottom-up:
//!
//! * [`units`] — physical constants, field configurations and the scaled
//!   ("tilde") parameters `B̃ = 4μ_B B`, `Ẽ = 2μ_e E`, `Δ̃ = 5ħΔ`, all carried as
//!   frequencies in GHz.
//! * [`hamiltonian`] — the 8×8 effective matrix and its 4×4 blocks.
//! * [`algebra`] — closed-form cubic/quartic solvers, a numeric polynomial
//!   root finder, a Jacobi eigensolver and a pivoted determinant.
//! * [`spectrum`] — characteristic polynomial and closed-form eigenvalues.
//! * [`discriminant`] — the discriminant by eigenvalue product and by its
//!   `f₀ f₁ f₂²` factorization, plus the coefficient audit.
//! * [`crossings`] — crossing and avoided-crossing location, the `B₁` field
//!   and the `δ₋₃/₂` gap.
//! * [`fit`] — power-law fits used for the gap scaling analysis.

pub mod algebra;
pub mod crossings;
pub mod discriminant;
pub mod error;
pub mod fit;
pub mod hamiltonian;
pub mod sampling;
pub mod spectrum;
pub mod units;

pub use error::{Error, Result};
pub use hamiltonian::{assemble, build_blocks, BlockMatrices, SymmetricMatrix8};
pub use spectrum::{analytic_eigenvalues, characteristic_polynomial, eigenvalue_at, CharPoly, Spectrum};
pub use units::{
    convert_energy, scale_parameters, EnergyUnit, FieldConfiguration, MoleculeParameters,
    PhysicalConstants, ScaledParameters, Scaling,
};
