pub mod certificate;
pub mod cli;
pub mod error;
pub mod lattice;
pub mod json;
pub mod matrix;
pub mod periods;
pub mod monodromy;
pub mod mukai;
pub mod symplectic;
pub mod normal_form;

pub use error::{Error, Result};
pub use lattice::{Lattice, LatticeVector, Signature, StandardLattice};
pub use matrix::IntMat;
