pub mod arith;
pub mod classify5;
pub mod cli;
pub mod congruence;
pub mod error;
pub mod fixtures;
pub mod grassmann;
pub mod groebner;
pub mod pde;

pub use error::{Error, Result};
