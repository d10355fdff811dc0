//! Exact computation of weight filtrations and relative weight filtrations of
//! nilpotent operators on finite-dimensional rational vector spaces, with
//! models of surface homology (curve systems, Picard–Lefschetz operators,
//! pants decompositions) and the representation-dimension arithmetic used to
//! bound handlebody subgroups.

pub mod error;
pub mod filtered;
pub mod json;
pub mod linalg;
pub mod nilwf;
pub mod pants;
pub mod repdim;
pub mod surface;

pub use error::{Error, Result};
