//! Extension of a functor `F: X → A` along `η: X → PX` (and along
//! `η′: X → FrX` when the target system is proper).

use super::choice::FactorisationChoice;
use super::system::FactorisationSystem;
use crate::arrowmonad::ArrowCat;
use crate::error::{Error, Result};
use crate::fincat::{same_category, Functor};
use crate::freyd::FreydCat;

/// `G: PX → A` with `G(x̂)` the chosen image of `F x` and `G(f′, f″)` the
/// unique fill-in between the chosen factorisations of `F x` and `F y`.
pub fn extend_functor(px: &ArrowCat, f: &Functor, choice: &FactorisationChoice) -> Result<Functor> {
    let a = &**choice.base();
    if !same_category(f.source(), px.base()) || !same_category(f.target(), choice.base()) {
        return Err(Error::Precondition("functor does not match PX and the target system".into()));
    }
    let p = &**px.cat();
    let on_objects = p.objects().map(|o| choice.factor(f.mor(px.object_of(o))).1).collect();
    let mut on_morphisms = Vec::with_capacity(p.morphism_count());
    for sq in p.morphisms() {
        let (top, bottom) = px.square_of(sq);
        let (ex, _, mx) = choice.factor(f.mor(px.source_arrow(sq)));
        let (ey, _, my) = choice.factor(f.mor(px.target_arrow(sq)));
        let u = a.compose(ey, f.mor(top));
        let v = a.compose(f.mor(bottom), mx);
        match a.fill_ins(ex, my, u, v).as_slice() {
            [w] => on_morphisms.push(*w),
            other => {
                return Err(Error::FsViolation(format!(
                    "square {} has {} fill-ins in the target",
                    p.morphism_name(sq),
                    other.len()
                )))
            }
        }
    }
    Ok(Functor::new(px.cat().clone(), choice.base().clone(), on_objects, on_morphisms))
}

/// Whether `g` sends `E` into `E′` and `M` into `M′`.
pub fn preserves_fs(g: &Functor, src: &FactorisationSystem, tgt: &FactorisationSystem) -> bool {
    src.e().iter().all(|m| tgt.e().contains(g.mor(m))) && src.m().iter().all(|m| tgt.m().contains(g.mor(m)))
}

/// `G′: FrX → A` with `G′ ∘ p = G`, where `G` is [`extend_functor`] on
/// the arrow category underlying `frx`. Requires `G` to be constant on
/// every Freyd class, which a proper target system guarantees.
pub fn extend_functor_proper(frx: &FreydCat, f: &Functor, choice: &FactorisationChoice) -> Result<Functor> {
    if !choice.fs().is_proper() {
        return Err(Error::Precondition("target factorisation system is not proper".into()));
    }
    let g = extend_functor(frx.arrow(), f, choice)?;
    let fr = &**frx.cat();
    let mut on_morphisms = Vec::with_capacity(fr.morphism_count());
    for k in fr.morphisms() {
        let reps = frx.representatives(k);
        let image = g.mor(reps[0]);
        if let Some(&bad) = reps.iter().find(|&&m| g.mor(m) != image) {
            return Err(Error::FsViolation(format!(
                "extension separates {} from {} in one Freyd class",
                frx.arrow().cat().morphism_name(reps[0]),
                frx.arrow().cat().morphism_name(bad)
            )));
        }
        on_morphisms.push(image);
    }
    let on_objects: Vec<_> = fr.objects().map(|o| g.ob(o)).collect();
    Ok(Functor::new(frx.cat().clone(), choice.base().clone(), on_objects, on_morphisms))
}
