pub mod error;
pub mod groebner;
pub mod idealfile;
pub mod ideals;
pub mod linkage;
pub mod polyring;
pub mod resolution;
pub mod verify;

pub use error::{Error, Result};
