//! Stanley decompositions, Hilbert series and Bernstein degrees for modules
//! of covariants, computed from families of nonintersecting lattice paths.

pub mod cli;
pub mod error;
pub mod oracle;
pub mod paths;
pub mod poset;
pub mod series;
pub mod stanley;
pub mod tableaux;

pub use error::{Error, Result};
