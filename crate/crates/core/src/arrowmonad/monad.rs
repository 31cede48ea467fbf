//! The monads `P` and `Fr` behind one interface, so that algebras, law
//! checks and the command line treat both alike.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use super::arrow::{arrow_category, square_name, ArrowCat};
use super::stream::find_square;
use crate::error::{Error, Result};
use crate::fincat::{FinCategory, Functor, Mor, Ob};
use crate::freyd::{freyd_completion, FreydCat};
use crate::guard::SizeGuard;
use crate::report::{functor_difference, functor_failure, Checks};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MonadKind {
    P,
    Fr,
}

impl fmt::Display for MonadKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MonadKind::P => "P",
            MonadKind::Fr => "Fr",
        })
    }
}

impl FromStr for MonadKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "P" => Ok(MonadKind::P),
            "Fr" => Ok(MonadKind::Fr),
            other => Err(format!("unknown monad '{other}' (expected P or Fr)")),
        }
    }
}

/// `TX` for one of the two monads, with provenance back to `X`.
///
/// Objects of `TX` stand for morphisms of `X` (object `i` is base morphism
/// `i`); morphisms are squares, or classes of squares for `Fr`.
#[derive(Debug, Clone)]
pub enum Level {
    Arrow(ArrowCat),
    Freyd(FreydCat),
}

impl Level {
    pub fn build(kind: MonadKind, base: &Arc<FinCategory>) -> Level {
        match kind {
            MonadKind::P => Level::Arrow(arrow_category(base)),
            MonadKind::Fr => Level::Freyd(freyd_completion(base)),
        }
    }

    pub fn kind(&self) -> MonadKind {
        match self {
            Level::Arrow(_) => MonadKind::P,
            Level::Freyd(_) => MonadKind::Fr,
        }
    }

    pub fn cat(&self) -> &Arc<FinCategory> {
        match self {
            Level::Arrow(a) => a.cat(),
            Level::Freyd(f) => f.cat(),
        }
    }

    pub fn base(&self) -> &Arc<FinCategory> {
        match self {
            Level::Arrow(a) => a.base(),
            Level::Freyd(f) => f.base(),
        }
    }

    /// The underlying arrow category (`TX` itself for `P`).
    pub fn arrow(&self) -> &ArrowCat {
        match self {
            Level::Arrow(a) => a,
            Level::Freyd(f) => f.arrow(),
        }
    }

    #[inline]
    pub fn object_of(&self, o: Ob) -> Mor {
        Mor(o.0)
    }

    #[inline]
    pub fn object_for(&self, m: Mor) -> Ob {
        Ob(m.0)
    }

    /// The least `(top, bottom)` pair representing a morphism.
    pub fn representative(&self, k: Mor) -> (Mor, Mor) {
        match self {
            Level::Arrow(a) => a.square_of(k),
            Level::Freyd(f) => f.representative(k),
        }
    }

    /// Every `(top, bottom)` pair representing a morphism, least first.
    pub fn representatives(&self, k: Mor) -> Vec<(Mor, Mor)> {
        match self {
            Level::Arrow(a) => vec![a.square_of(k)],
            Level::Freyd(f) => f.representatives(k).iter().map(|&m| f.arrow().square_of(m)).collect(),
        }
    }

    /// The morphism `(top, bottom): x → y`, if the square commutes.
    pub fn square(&self, x: Mor, y: Mor, top: Mor, bottom: Mor) -> Option<Mor> {
        match self {
            Level::Arrow(a) => a.square(x, y, top, bottom),
            Level::Freyd(f) => f.square(x, y, top, bottom),
        }
    }

    pub fn diagonal(&self, k: Mor) -> Mor {
        match self {
            Level::Arrow(a) => a.diagonal(k),
            Level::Freyd(f) => f.diagonal(k),
        }
    }

    /// The unit `X → TX`, `f ↦ (f, f)`.
    pub fn unit(&self) -> Functor {
        match self {
            Level::Arrow(a) => a.eta(),
            Level::Freyd(f) => f.eta(),
        }
    }

    /// `T F: TA → TB` for `F: A → B`; `self` is `TA`, `target` is `TB`.
    pub fn lift(&self, f: &Functor, target: &Level) -> Functor {
        match (self, target) {
            (Level::Arrow(a), Level::Arrow(b)) => a.lift(f, b),
            (Level::Freyd(a), Level::Freyd(b)) => a.lift(f, b),
            _ => panic!("lifting across different monads"),
        }
    }

    pub fn to_file(&self) -> crate::format::CategoryFile {
        match self {
            Level::Arrow(a) => a.to_file(),
            Level::Freyd(f) => f.to_file(),
        }
    }
}

/// The multiplication `T²X → TX`, where `lower = TX` and `upper = T(TX)`.
///
/// An object `ξ = (a, b): x → y` goes to its diagonal; a morphism with top
/// `(f′, f″)` and bottom `(g′, g″)` goes to `(f′, g″): d₀ → d₁`. For `Fr`
/// the result is computed from every choice of representatives and must
/// not depend on the choice.
pub fn multiplication(lower: &Level, upper: &Level) -> Result<Functor> {
    let t1 = &**lower.cat();
    let t2 = &**upper.cat();
    let on_objects: Vec<Ob> = t2
        .objects()
        .map(|xi| lower.object_for(lower.diagonal(upper.object_of(xi))))
        .collect();
    let mut on_morphisms = Vec::with_capacity(t2.morphism_count());
    for big in t2.morphisms() {
        let d0 = lower.object_of(on_objects[t2.dom(big).index()]);
        let d1 = lower.object_of(on_objects[t2.cod(big).index()]);
        let mut image: Option<Mor> = None;
        for (upper_top, upper_bottom) in upper.representatives(big) {
            for (f1, _) in lower.representatives(upper_top) {
                for (_, g2) in lower.representatives(upper_bottom) {
                    let k = lower.square(d0, d1, f1, g2).ok_or_else(|| {
                        Error::Consistency(format!("multiplication of {} is not a square", t2.morphism_name(big)))
                    })?;
                    match image {
                        None => image = Some(k),
                        Some(prev) if prev != k => {
                            return Err(Error::Consistency(format!(
                                "multiplication of {} depends on representatives: {} vs {}",
                                t2.morphism_name(big),
                                t1.morphism_name(prev),
                                t1.morphism_name(k)
                            )))
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        on_morphisms.push(image.expect("every class has a representative"));
    }
    Ok(Functor::new(upper.cat().clone(), lower.cat().clone(), on_objects, on_morphisms))
}

/// `X`, `TX` and `T²X` for one monad.
#[derive(Debug, Clone)]
pub struct Tower {
    base: Arc<FinCategory>,
    one: Level,
    two: Level,
}

impl Tower {
    pub fn new(kind: MonadKind, base: &Arc<FinCategory>) -> Tower {
        let one = Level::build(kind, base);
        let two = Level::build(kind, one.cat());
        Tower { base: base.clone(), one, two }
    }

    pub fn kind(&self) -> MonadKind {
        self.one.kind()
    }

    pub fn base(&self) -> &Arc<FinCategory> {
        &self.base
    }

    pub fn one(&self) -> &Level {
        &self.one
    }

    pub fn two(&self) -> &Level {
        &self.two
    }

    pub fn unit(&self) -> Functor {
        self.one.unit()
    }

    pub fn mult(&self) -> Result<Functor> {
        multiplication(&self.one, &self.two)
    }
}

/// Unit, multiplication, both unit laws and associativity, checked by
/// evaluating both sides on every object and morphism of `TX`, `T²X` and
/// `T³X`. `T³X` is streamed square by square rather than built, but its
/// size still explodes, hence the guard.
pub fn check_monad_laws(kind: MonadKind, x: &Arc<FinCategory>, guard: &SizeGuard) -> Result<Checks> {
    guard.check_cube("monad laws", x.morphism_count())?;
    let mut checks = Checks::new();
    let tower = Tower::new(kind, x);
    let eta = tower.unit();
    checks.record("unit is a functor", "unit X -> TX, f |-> (f, f)", functor_failure(&eta));
    let mu = tower.mult()?;
    checks.record("multiplication is a functor", "diagonal multiplication T2X -> TX", functor_failure(&mu));
    let one = tower.one();
    let two = tower.two();
    let id = Functor::identity(one.cat());
    let eta_t = two.unit();
    checks.record(
        "left unit law",
        "mu . eta T = 1",
        functor_difference(&eta_t.then(&mu), &id),
    );
    let t_eta = one.lift(&eta, two);
    checks.record(
        "right unit law",
        "mu . T eta = 1",
        functor_difference(&t_eta.then(&mu), &id),
    );
    checks.record("associativity", "mu . mu T = mu . T mu", associativity_failure(&tower, &mu));
    Ok(checks)
}

/// `μ ∘ μT` against `μ ∘ Tμ` on every object and morphism of `T³X`. A
/// morphism of `T³X` is given by a square of `T²X`; for `Fr` every class is
/// reached through each of its representative squares.
fn associativity_failure(tower: &Tower, mu: &Functor) -> Option<String> {
    let two = tower.two();
    let t2 = &**two.cat();
    let diagonal: Vec<Mor> = t2.morphisms().map(|k| two.diagonal(k)).collect();
    for k in t2.morphisms() {
        let left = mu.ob(two.object_for(diagonal[k.index()]));
        let right = mu.ob(two.object_for(mu.mor(k)));
        if left != right {
            return Some(format!("object {}", t2.morphism_name(k)));
        }
    }
    let first_top: Vec<Mor> = t2.morphisms().map(|k| two.representative(k).0).collect();
    let first_bottom: Vec<Mor> = t2.morphisms().map(|k| two.representative(k).1).collect();
    find_square(t2, |x, y, top, bottom| {
        let name = || {
            square_name(t2.morphism_name(top), t2.morphism_name(bottom), t2.morphism_name(x), t2.morphism_name(y))
        };
        let mu_t = two.square(diagonal[x.index()], diagonal[y.index()], first_top[top.index()], first_bottom[bottom.index()]);
        let t_mu = two.square(mu.mor(x), mu.mor(y), mu.mor(top), mu.mor(bottom));
        match (mu_t, t_mu) {
            (Some(a), Some(b)) if mu.mor(a) == mu.mor(b) => None,
            (Some(_), Some(_)) => Some(format!("morphism {}", name())),
            _ => Some(format!("morphism {} has no image", name())),
        }
    })
}

/// The strict factorisation `(1, f″): x̂ → d̂` then `(f′, 1): d̂ → ŷ` of a
/// square through its diagonal.
pub fn strict_factor(px: &ArrowCat, f: Mor) -> (Mor, Mor) {
    let b = &**px.base();
    let (top, bottom) = px.square_of(f);
    let x = px.source_arrow(f);
    let y = px.target_arrow(f);
    let d = px.diagonal(f);
    let e = px.square(x, d, b.identity(b.dom(x)), bottom).expect("lower triangle commutes");
    let m = px.square(d, y, top, b.identity(b.cod(y))).expect("upper triangle commutes");
    (e, m)
}

/// The canonical systems on `PX`: `E` / `M` are the squares whose top /
/// bottom leg is iso, `E₀` / `M₀` those whose leg is an identity.
pub fn canonical_fs(
    px: &ArrowCat,
) -> (crate::factsys::FactorisationSystem, crate::factsys::StrictFactorisationSystem) {
    use crate::factsys::{FactorisationSystem, StrictFactorisationSystem};
    let b = &**px.base();
    let c = px.cat();
    let pick = |p: &dyn Fn(Mor, Mor) -> bool| c.morphisms().filter(|&m| {
        let (t, bt) = px.square_of(m);
        p(t, bt)
    }).collect::<Vec<_>>();
    let fs = FactorisationSystem::new(c.clone(), pick(&|t, _| b.is_iso(t)), pick(&|_, bt| b.is_iso(bt)));
    let strict = StrictFactorisationSystem::new(
        c.clone(),
        pick(&|t, _| b.is_identity(t)),
        pick(&|_, bt| b.is_identity(bt)),
    );
    (fs, strict)
}
