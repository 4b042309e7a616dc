pub mod error;
pub mod linalg;
pub mod presentation;

pub use error::{Error, Result};
pub mod ar;
pub mod document;
pub mod extension;
pub mod rep;
pub mod tautilt;
