//! Compatibility with the Freyd congruence, algebras for `Fr`, and the
//! correspondence between proper systems and compatible algebras.

use std::sync::Arc;

use serde::Serialize;

use super::algebra::{check_pseudo_algebra, tau_transforms, PseudoAlgebra, StrictAlgebra};
use super::correspond::{algebra_to_fs, fs_to_pseudo_algebra};
use crate::arrowmonad::{Level, MonadKind, Tower};
use crate::error::{Error, Result};
use crate::factsys::{enumerate_fs, FactorisationChoice};
use crate::fincat::{same_category, FinCategory, Functor, FunctorSearch, Mor};
use crate::freyd::FreydCat;
use crate::guard::SizeGuard;
use crate::report::Checks;

fn freyd_over(tower: &Tower) -> Result<FreydCat> {
    match tower.one() {
        Level::Arrow(px) => Ok(FreydCat::from_arrow(px.clone())),
        Level::Freyd(_) => Err(Error::Precondition("compatibility is a property of P-algebras".into())),
    }
}

/// First pair of Freyd-related squares that `t` separates.
pub fn r_compat_failure(tower: &Tower, t: &Functor) -> Result<Option<String>> {
    let frx = freyd_over(tower)?;
    let x = &**tower.base();
    let px = &**frx.arrow().cat();
    for k in frx.cat().morphisms() {
        let reps = frx.representatives(k);
        let image = t.mor(reps[0]);
        if let Some(&bad) = reps.iter().find(|&&m| t.mor(m) != image) {
            return Ok(Some(format!(
                "{} and {} have one diagonal but map to {} and {}",
                px.morphism_name(reps[0]),
                px.morphism_name(bad),
                x.morphism_name(image),
                x.morphism_name(t.mor(bad))
            )));
        }
    }
    Ok(None)
}

/// Whether `t` is constant on every Freyd class of `PX`.
pub fn is_r_compatible(tower: &Tower, t: &Functor) -> Result<bool> {
    Ok(r_compat_failure(tower, t)?.is_none())
}

/// `t′: FrX → X` with `t = t′ ∘ p`, and `θ′` read off `θ` on
/// representatives, which must agree across each class.
pub fn induce_fr_algebra(a: &PseudoAlgebra, fr: Arc<Tower>) -> Result<PseudoAlgebra> {
    if fr.kind() != MonadKind::Fr || !same_category(fr.base(), a.base()) {
        return Err(Error::Precondition("target must be the Fr tower over the same category".into()));
    }
    if let Some(why) = r_compat_failure(a.tower(), a.t())? {
        return Err(Error::Precondition(format!("structure map is not compatible with R: {why}")));
    }
    let Level::Freyd(frx) = fr.one() else {
        unreachable!("Fr tower over an arrow category")
    };
    let x = &**a.base();
    let mut on_morphisms = Vec::with_capacity(frx.cat().morphism_count());
    let mut theta = Vec::with_capacity(frx.cat().morphism_count());
    for k in frx.cat().morphisms() {
        let reps = frx.representatives(k);
        on_morphisms.push(a.t().mor(reps[0]));
        // objects of T2X are morphisms of TX, index for index
        let component = a.theta(crate::fincat::Ob(reps[0].0));
        if let Some(&bad) = reps.iter().find(|&&m| a.theta(crate::fincat::Ob(m.0)) != component) {
            return Err(Error::Precondition(format!(
                "theta differs on {} and {}: {} vs {}",
                frx.arrow().cat().morphism_name(reps[0]),
                frx.arrow().cat().morphism_name(bad),
                x.morphism_name(component),
                x.morphism_name(a.theta(crate::fincat::Ob(bad.0)))
            )));
        }
        theta.push(component);
    }
    let on_objects = frx.cat().objects().map(|o| a.t().ob(o)).collect();
    let t = Functor::new(frx.cat().clone(), fr.base().clone(), on_objects, on_morphisms);
    PseudoAlgebra::new(fr, t, theta)
}

/// Outcome of [`proper_correspondence_check`].
#[derive(Clone, Debug, Serialize)]
pub struct ProperCorrespondence {
    pub systems: usize,
    pub proper: usize,
    pub compatible: usize,
    pub checks: Checks,
}

/// For a mono-side morphism `m` of a compatible algebra: `m f₁ = m f₂`
/// forces `τ⁻(m̂) f₁ = τ⁻(m̂) f₂`, and so `f₁ = f₂`.
fn cancellation_failure(x: &FinCategory, m: Mor, tau_minus: Mor) -> Option<String> {
    for w in x.objects() {
        let hom = x.hom(w, x.dom(m));
        for (i, &f1) in hom.iter().enumerate() {
            for &f2 in &hom[i + 1..] {
                if x.compose(m, f1) != x.compose(m, f2) {
                    continue;
                }
                let same = x.compose(tau_minus, f1) == x.compose(tau_minus, f2);
                return Some(format!(
                    "{} ∘ {} = {} ∘ {}{}",
                    x.morphism_name(m),
                    x.morphism_name(f1),
                    x.morphism_name(m),
                    x.morphism_name(f2),
                    if same { "" } else { ", and tau- does not identify them" }
                ));
            }
        }
    }
    None
}

/// Over every enumerated system with its least choice: proper iff the
/// derived `P`-algebra is compatible with `R`; the cancellation argument
/// on `M`; and the induced `Fr`-algebra of each compatible one.
pub fn proper_correspondence_check(x: &Arc<FinCategory>, guard: &SizeGuard) -> Result<ProperCorrespondence> {
    let systems = enumerate_fs(x, guard)?;
    let tower = Arc::new(Tower::new(MonadKind::P, x));
    let fr = Arc::new(Tower::new(MonadKind::Fr, x));
    let (mut proper, mut compatible) = (0, 0);
    let (mut iff, mut cancel, mut induced, mut roundtrip) = (None, None, None, None);
    for fs in &systems {
        let label = || format!("E = {:?}", fs.e().names(x));
        let a = fs_to_pseudo_algebra(tower.clone(), &FactorisationChoice::least(fs)?)?;
        let is_proper = fs.is_proper();
        let is_compatible = is_r_compatible(&tower, a.t())?;
        proper += is_proper as usize;
        compatible += is_compatible as usize;
        if is_proper != is_compatible {
            iff.get_or_insert_with(|| format!("{}: proper {is_proper}, compatible {is_compatible}", label()));
        }
        if !is_compatible {
            continue;
        }
        let taus = tau_transforms(&tower, a.t());
        for m in fs.m().iter() {
            if let Some(why) = cancellation_failure(x, m, taus.minus[m.index()]) {
                cancel.get_or_insert_with(|| format!("{}: {why}", label()));
            }
        }
        match induce_fr_algebra(&a, fr.clone()) {
            Ok(b) => {
                let checks = check_pseudo_algebra(&b)?;
                if let Some(bad) = checks.failures().next() {
                    induced.get_or_insert_with(|| format!("{}: {} ({:?})", label(), bad.law, bad.counterexample));
                }
                if algebra_to_fs(&fr, b.t()).ok().as_ref() != Some(fs) {
                    roundtrip.get_or_insert_with(label);
                }
            }
            Err(e) => {
                induced.get_or_insert_with(|| format!("{}: {e}", label()));
            }
        }
    }
    let mut checks = Checks::new();
    checks.record("proper iff compatible", "E epi and M mono <=> t constant on R-classes", iff);
    checks.record("mono side cancels", "m f1 = m f2 => tau-(m) f1 = tau-(m) f2 => f1 = f2", cancel);
    checks.record("induced Fr-algebra", "t = t' . p is a pseudo Fr-algebra", induced);
    checks.record("induced Fr-algebra gives the system back", "t' induces (E, M)", roundtrip);
    Ok(ProperCorrespondence { systems: systems.len(), proper, compatible, checks })
}

/// Every strict algebra for the tower's monad, by search over functors
/// `TX → X` with `t ∘ η = 1` pinned, filtered by `t ∘ Tt = t ∘ μ`.
pub fn enumerate_strict_algebras(tower: &Arc<Tower>, guard: &SizeGuard) -> Result<Vec<StrictAlgebra>> {
    let x = tower.base();
    SizeGuard::require("strict algebra enumeration", x.morphism_count(), guard.strict_algebras)?;
    let one = tower.one();
    let eta = tower.unit();
    let mu = tower.mult()?;
    let mut search = FunctorSearch::new(one.cat(), x);
    for o in x.objects() {
        search.pin_object(eta.ob(o), o);
    }
    for f in x.morphisms() {
        search.pin_morphism(eta.mor(f), f);
    }
    let mut out = Vec::new();
    search.for_each(|t| {
        let tt = tower.two().lift(&t, one);
        if tt.then(&t) == mu.then(&t) {
            out.push(StrictAlgebra::new(tower.clone(), t).expect("typed by the search"));
        }
        true
    });
    Ok(out)
}
