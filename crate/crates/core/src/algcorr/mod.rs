//! Algebras for `P` and `Fr`, and their correspondence with factorisation
//! systems: algebra to system via `τ±`, system to pseudo algebra via
//! chosen factorisations and comparison isos, round trips both ways, and
//! properness against compatibility with the Freyd congruence.

mod algebra;
mod correspond;
mod proper;

pub use algebra::{
    check_algebra_morphism, check_pseudo_algebra, check_strict_algebra, check_taus, check_two_cell,
    identity_morphism, tau_transforms, AlgebraMorphism, PseudoAlgebra, StrictAlgebra, Taus, PSEUDO_CONDITIONS,
};
pub use correspond::{
    algebra_to_fs, fs_to_pseudo_algebra, morphism_from_functor, roundtrip_algebra, roundtrip_fs, roundtrip_strict,
    strict_algebra_to_strict_fs, strict_fs_to_algebra,
};
pub use proper::{
    enumerate_strict_algebras, induce_fr_algebra, is_r_compatible, proper_correspondence_check, r_compat_failure,
    ProperCorrespondence,
};
