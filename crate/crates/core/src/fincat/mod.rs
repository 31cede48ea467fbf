//! Finite categories, functors, natural transformations and congruences.

mod category;
mod congruence;
mod functor;
mod predicates;
mod search;

pub use category::{BuildError, Built, CategoryBuilder, FinCategory, LawViolation, Mor, Ob};
pub use congruence::{Congruence, CongruenceError};
pub use functor::{Functor, FunctorViolation, NatTransformation};
pub use search::{enumerate_functors, enumerate_natural_transformations, FunctorSearch};

pub(crate) use functor::same_category;
