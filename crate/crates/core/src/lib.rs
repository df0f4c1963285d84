//! Hurwitz systems, exceptional dissections of marked surfaces and the
//! braid group action relating them.

pub mod error;
pub mod perm;
pub mod surface;
pub mod arcs;
pub mod mutation;
pub mod deck;
pub mod fukaya;
pub mod orbit;

pub use error::{Error, Result};
