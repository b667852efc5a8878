//! Exact enumeration of alternating sign matrices through the six-vertex
//! model with domain wall boundary conditions.

pub mod combinat;
pub mod error;
pub mod exact;

pub use error::{Error, Result};
pub mod closed_forms;
pub mod hankel;
pub mod linalg;
pub mod moments;
pub mod oracle;
pub mod orthopoly;
pub mod refined3;
pub mod verify;
