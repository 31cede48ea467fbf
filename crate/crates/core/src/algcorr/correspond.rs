//! Algebras to factorisation systems and back.

use std::sync::Arc;

use super::algebra::{tau_transforms, AlgebraMorphism, PseudoAlgebra, StrictAlgebra};
use crate::arrowmonad::{MonadKind, Tower};
use crate::error::{Error, Result};
use crate::factsys::{
    comparison_iso, extend_functor, extend_functor_proper, FactorisationChoice, FactorisationSystem, MorSet,
    StrictFactorisationSystem,
};
use crate::fincat::{same_category, Functor};

/// `E = {x : τ⁺(x̂) iso}`, `M = {x : τ⁻(x̂) iso}`. Only `t` is read, never
/// `θ`.
pub fn algebra_to_fs(tower: &Tower, t: &Functor) -> Result<FactorisationSystem> {
    let x = tower.base();
    let taus = tau_transforms(tower, t);
    let e = MorSet::from_predicate(x, |f| x.is_iso(taus.plus[f.index()]));
    let m = MorSet::from_predicate(x, |f| x.is_iso(taus.minus[f.index()]));
    let fs = FactorisationSystem::from_sets(x.clone(), e, m);
    match fs.violations().first() {
        None => Ok(fs),
        Some(v) => Err(Error::FsViolation(format!("derived classes are not an fs, so the input is not an algebra: {v}"))),
    }
}

/// The strict variant: identities in place of isos.
pub fn strict_algebra_to_strict_fs(a: &StrictAlgebra) -> Result<StrictFactorisationSystem> {
    let tower = a.tower();
    let x = tower.base();
    let taus = tau_transforms(tower, a.t());
    let e0 = MorSet::from_predicate(x, |f| x.is_identity(taus.plus[f.index()]));
    let m0 = MorSet::from_predicate(x, |f| x.is_identity(taus.minus[f.index()]));
    let strict = StrictFactorisationSystem::from_sets(x.clone(), e0, m0);
    match strict.violations().first() {
        None => Ok(strict),
        Some(v) => Err(Error::FsViolation(format!("derived classes are not a strict fs: {v}"))),
    }
}

/// The structure map of the algebra of a factorisation system: chosen
/// images on objects, fill-ins on squares. For `Fr` the system must be
/// proper.
fn structure_map(tower: &Tower, choice: &FactorisationChoice) -> Result<Functor> {
    let id = Functor::identity(tower.base());
    match tower.kind() {
        MonadKind::P => extend_functor(tower.one().arrow(), &id, choice),
        MonadKind::Fr => match tower.one() {
            crate::arrowmonad::Level::Freyd(frx) => extend_functor_proper(frx, &id, choice),
            crate::arrowmonad::Level::Arrow(_) => unreachable!("Fr tower over an arrow category"),
        },
    }
}

/// `t(x̂)` the chosen image of `x`, `t` on squares the unique fill-in, and
/// `θ` at `ξ: x̂ → ŷ` the comparison between the outer factorisation
/// `(m_y m_w)(e_w e_x)` of the diagonal, `w = t(ξ)`, and its chosen one.
pub fn fs_to_pseudo_algebra(tower: Arc<Tower>, choice: &FactorisationChoice) -> Result<PseudoAlgebra> {
    if !same_category(choice.base(), tower.base()) {
        return Err(Error::Precondition("choice is over a different category".into()));
    }
    let x = &**tower.base();
    let one = tower.one();
    let t = structure_map(&tower, choice)?;
    let tx = &**one.cat();
    let mut theta = Vec::with_capacity(tx.morphism_count());
    for k in tx.morphisms() {
        let (ex, _, _) = choice.factor(one.object_of(tx.dom(k)));
        let (_, _, my) = choice.factor(one.object_of(tx.cod(k)));
        let w = t.mor(k);
        let (ew, zw, mw) = choice.factor(w);
        let outer = (x.compose(ew, ex), zw, x.compose(my, mw));
        theta.push(comparison_iso(x, outer, choice.factor(one.diagonal(k)))?);
    }
    PseudoAlgebra::new(tower, t, theta)
}

/// The strict algebra of a strict system: its forced choice, with every
/// `θ` component checked to be an identity.
pub fn strict_fs_to_algebra(tower: Arc<Tower>, strict: &StrictFactorisationSystem) -> Result<StrictAlgebra> {
    let choice = FactorisationChoice::from_strict(strict)?;
    let pseudo = fs_to_pseudo_algebra(tower, &choice)?;
    pseudo
        .to_strict()
        .ok_or_else(|| Error::Consistency("a strict system produced non-identity coherence".into()))
}

/// `φ(x̂)` comparing `F` applied to the `τ`-factorisation of `x` with the
/// `τ′`-factorisation of `F x`. Exists exactly when `F` carries the first
/// system into the second.
pub fn morphism_from_functor(src: &PseudoAlgebra, tgt: &PseudoAlgebra, f: &Functor) -> Result<AlgebraMorphism> {
    if src.kind() != tgt.kind() {
        return Err(Error::Precondition("algebras for different monads".into()));
    }
    if !same_category(f.source(), src.base()) || !same_category(f.target(), tgt.base()) {
        return Err(Error::Precondition("functor does not go between the carriers".into()));
    }
    let y = &**tgt.base();
    let (one, one_) = (src.tower().one(), tgt.tower().one());
    let taus = tau_transforms(src.tower(), src.t());
    let taus_ = tau_transforms(tgt.tower(), tgt.t());
    let tf = one.lift(f, one_);
    let mut phi = Vec::with_capacity(one.cat().object_count());
    for o in one.cat().objects() {
        let i = o.index();
        let first = (f.mor(taus.minus[i]), f.ob(src.t().ob(o)), f.mor(taus.plus[i]));
        let fo = tf.ob(o);
        let j = fo.index();
        let second = (taus_.minus[j], tgt.t().ob(fo), taus_.plus[j]);
        phi.push(comparison_iso(y, first, second)?);
    }
    Ok(AlgebraMorphism { f: f.clone(), phi })
}

/// The pseudo isomorphism `(1, φ)` between two algebras inducing the same
/// system.
pub fn roundtrip_algebra(a: &PseudoAlgebra, b: &PseudoAlgebra) -> Result<AlgebraMorphism> {
    if !same_category(a.base(), b.base()) {
        return Err(Error::Precondition("algebras on different categories".into()));
    }
    let fa = algebra_to_fs(a.tower(), a.t())?;
    let fb = algebra_to_fs(b.tower(), b.t())?;
    if fa != fb {
        return Err(Error::Precondition("the algebras induce different factorisation systems".into()));
    }
    morphism_from_functor(a, b, &Functor::identity(a.base()))
}

/// `fs → algebra → fs` is the identity, for each given choice.
pub fn roundtrip_fs(tower: &Arc<Tower>, fs: &FactorisationSystem, choices: &[FactorisationChoice]) -> Result<bool> {
    for choice in choices {
        if choice.fs() != fs {
            return Err(Error::Precondition("choice is for a different system".into()));
        }
        let a = fs_to_pseudo_algebra(tower.clone(), choice)?;
        if &algebra_to_fs(tower, a.t())? != fs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Both strict round trips: `strict fs → algebra → strict fs` and
/// `algebra → strict fs → algebra`.
pub fn roundtrip_strict(tower: &Arc<Tower>, strict: &StrictFactorisationSystem) -> Result<bool> {
    let a = strict_fs_to_algebra(tower.clone(), strict)?;
    let back = strict_algebra_to_strict_fs(&a)?;
    if back.e0() != strict.e0() || back.m0() != strict.m0() {
        return Ok(false);
    }
    Ok(strict_fs_to_algebra(tower.clone(), &back)? == a)
}
