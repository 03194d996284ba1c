pub mod error;
pub mod group;
pub mod perm;
pub mod pg_operad;
pub mod norms;
pub mod free_operad;
pub mod presentation;
pub mod cli;

pub use error::{Error, Result};
