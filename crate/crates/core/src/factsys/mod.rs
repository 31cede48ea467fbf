//! Factorisation systems on finite categories: ordinary, strict and proper
//! systems, their enumeration, chosen factorisations and the free extension
//! property of the arrow category and the Freyd completion.

mod choice;
mod enumerate;
mod extend;
mod system;

pub use choice::{comparison_iso, FactorisationChoice};
pub use enumerate::{enumerate_fs, enumerate_strict_fs};
pub use extend::{extend_functor, extend_functor_proper, preserves_fs};
pub use system::{equivalent_strict, span, FactorisationSystem, FsViolation, MorSet, StrictFactorisationSystem};
