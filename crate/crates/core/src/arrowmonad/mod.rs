//! The arrow-category monad `P = (−)²`, its canonical factorisation system
//! and its cubical structure.

mod arrow;
mod cubical;
mod monad;
mod stream;

pub use arrow::{arrow_category, square_name, ArrowCat};
pub use cubical::{check_cubical_equations, connection, connection_squares, face, Sign, SquareMap, SIGNS};
pub use stream::{count_squares, find_square};
pub use monad::{canonical_fs, check_monad_laws, multiplication, strict_factor, Level, MonadKind, Tower};
