//! Finite monadic Heyting algebras, MS4-algebras and their frames.

pub mod algebras;
pub mod duality;
pub mod error;
pub mod fixtures;
pub mod frames;
pub mod io;
pub mod morphisms;
pub mod random;
pub mod relation;
pub mod render;
pub mod report;
pub mod semantics;
pub mod syntax;
pub mod verify;

pub use error::{Error, Result};
