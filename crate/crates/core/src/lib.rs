pub mod algebra;
pub mod constructors;
pub mod derivation;
pub mod error;
pub mod io;
pub mod linalg;
pub mod structure;
pub mod verify;

pub use algebra::{Algebra, Element, Ideal, LinearMap};
pub use derivation::{DerivationKind, DerivationSpace};
pub use error::{Error, Result};
