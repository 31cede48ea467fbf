//! Finite categories, the arrow-category monad `P = (−)²`, the Freyd
//! completion `Fr`, factorisation systems, and the correspondence between
//! algebras for these monads and factorisation systems, all verified by
//! exhaustive computation.

pub mod algcorr;
pub mod arrowmonad;
pub mod cli;
pub mod error;
pub mod factsys;
pub mod fincat;
pub mod fixtures;
pub mod format;
pub mod freyd;
pub mod guard;
pub mod report;

pub use error::{Error, InputError, Result};
