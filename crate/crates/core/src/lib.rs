//! Eisenstein lattices, the unitary group of `Λ¹⁰ = E₈^O ⊕ H_O`, and the
//! arithmetic of rational elliptic surfaces with a `μ₃`-action.

pub mod classify;
pub mod kodaira;
pub mod lattice;
pub mod omatrix;
pub mod pham;
pub mod picard;
pub mod ring;
pub mod shortvec;
pub mod unitary;
pub mod verify;
pub mod weierstrass;
pub mod zlinalg;
