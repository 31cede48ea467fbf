//! The Freyd completion `FrX = X²/R`: parallel squares are identified when
//! their diagonals agree.

use std::collections::HashMap;
use std::sync::Arc;

use crate::arrowmonad::{arrow_category, multiplication, ArrowCat, Level, MonadKind, Tower};
use crate::error::{Error, Result};
use crate::factsys::{span, FactorisationSystem, StrictFactorisationSystem};
use crate::fincat::{Congruence, FinCategory, Functor, Mor, Ob};
use crate::format::CategoryFile;
use crate::guard::SizeGuard;
use crate::report::{functor_difference, Checks};

/// `FrX` together with `PX`, the projection `p: PX → FrX` and, per class,
/// the common diagonal and the ordered list of representative squares.
#[derive(Debug, Clone)]
pub struct FreydCat {
    arrow: ArrowCat,
    cat: Arc<FinCategory>,
    congruence: Congruence,
    projection: Functor,
    diagonal_of: Vec<Mor>,
    representatives: Vec<Vec<Mor>>,
}

/// Partition of the squares of `PX` by source, target and diagonal.
pub fn freyd_congruence(px: &ArrowCat) -> Congruence {
    let c = &**px.cat();
    let mut first: HashMap<(Ob, Ob, Mor), Mor> = HashMap::new();
    let mut pairs = Vec::new();
    for m in c.morphisms() {
        let key = (c.dom(m), c.cod(m), px.diagonal(m));
        match first.get(&key) {
            Some(&r) => pairs.push((r, m)),
            None => {
                first.insert(key, m);
            }
        }
    }
    Congruence::generated_by(px.cat(), pairs).expect("squares with one diagonal are parallel")
}

/// `FrX`, built as the quotient of `PX` by the Freyd congruence.
pub fn freyd_completion(base: &Arc<FinCategory>) -> FreydCat {
    FreydCat::from_arrow(arrow_category(base))
}

impl FreydCat {
    pub fn from_arrow(arrow: ArrowCat) -> FreydCat {
        let congruence = freyd_congruence(&arrow);
        let (cat, projection) = congruence.quotient().expect("the Freyd relation is a congruence");
        let px = &**arrow.cat();
        let mut diagonal_of = vec![Mor(0); cat.morphism_count()];
        let mut representatives = vec![Vec::new(); cat.morphism_count()];
        for m in px.morphisms() {
            let class = projection.mor(m);
            diagonal_of[class.index()] = arrow.diagonal(m);
            representatives[class.index()].push(m);
        }
        FreydCat { arrow, cat, congruence, projection, diagonal_of, representatives }
    }

    pub fn cat(&self) -> &Arc<FinCategory> {
        &self.cat
    }

    pub fn base(&self) -> &Arc<FinCategory> {
        self.arrow.base()
    }

    /// The arrow category this is a quotient of.
    pub fn arrow(&self) -> &ArrowCat {
        &self.arrow
    }

    pub fn congruence(&self) -> &Congruence {
        &self.congruence
    }

    /// `p: PX → FrX`.
    pub fn projection(&self) -> &Functor {
        &self.projection
    }

    #[inline]
    pub fn object_of(&self, o: Ob) -> Mor {
        Mor(o.0)
    }

    #[inline]
    pub fn object_for(&self, m: Mor) -> Ob {
        Ob(m.0)
    }

    /// The diagonal shared by every representative of a class.
    pub fn diagonal(&self, k: Mor) -> Mor {
        self.diagonal_of[k.index()]
    }

    /// Representatives of a class as `PX` morphisms, least first.
    pub fn representatives(&self, k: Mor) -> &[Mor] {
        &self.representatives[k.index()]
    }

    /// The least representative square `(top, bottom)`.
    pub fn representative(&self, k: Mor) -> (Mor, Mor) {
        self.arrow.square_of(self.representatives[k.index()][0])
    }

    /// The class `[top, bottom]: x → y`, provided the square commutes.
    pub fn square(&self, x: Mor, y: Mor, top: Mor, bottom: Mor) -> Option<Mor> {
        let b = &**self.base();
        if b.try_compose(y, top)? != b.try_compose(bottom, x)? {
            return None;
        }
        self.class_with_diagonal(x, y, b.compose(bottom, x))
    }

    /// The class from `x` to `y` with the given diagonal.
    pub fn class_with_diagonal(&self, x: Mor, y: Mor, diagonal: Mor) -> Option<Mor> {
        self.cat
            .hom(self.object_for(x), self.object_for(y))
            .iter()
            .copied()
            .find(|&k| self.diagonal_of[k.index()] == diagonal)
    }

    /// Unit `η′: X → FrX`, `f ↦ [f, f]`, looked up by diagonal.
    pub fn eta(&self) -> Functor {
        let x = &**self.base();
        let on_objects = x.objects().map(|o| self.object_for(x.identity(o))).collect();
        let on_morphisms = x
            .morphisms()
            .map(|f| {
                let (d, c) = (x.identity(x.dom(f)), x.identity(x.cod(f)));
                self.class_with_diagonal(d, c, f).expect("degenerate class")
            })
            .collect();
        Functor::new(self.base().clone(), self.cat.clone(), on_objects, on_morphisms)
    }

    /// `Fr(F): FrA → FrB`. `self` is `FrA`.
    pub fn lift(&self, f: &Functor, target: &FreydCat) -> Functor {
        let a = &*self.cat;
        let on_objects = a.objects().map(|o| target.object_for(f.mor(self.object_of(o)))).collect();
        let on_morphisms = a
            .morphisms()
            .map(|k| {
                let x = f.mor(self.object_of(a.dom(k)));
                let y = f.mor(self.object_of(a.cod(k)));
                target
                    .class_with_diagonal(x, y, f.mor(self.diagonal(k)))
                    .expect("functors preserve diagonals")
            })
            .collect();
        Functor::new(self.cat.clone(), target.cat.clone(), on_objects, on_morphisms)
    }

    /// The category file of `FrX`: objects carry `of`, morphisms carry
    /// `diagonal` and their `representatives` as `[top, bottom]` pairs.
    pub fn to_file(&self) -> CategoryFile {
        let x = &**self.base();
        let mut file = CategoryFile::from_category(&self.cat);
        for (i, entry) in file.objects.iter_mut().enumerate() {
            *entry = crate::format::ObjectEntry::WithProvenance {
                name: entry.name().to_string(),
                of: Some(x.morphism_name(Mor(i as u32)).to_string()),
            };
        }
        for (i, entry) in file.morphisms.iter_mut().enumerate() {
            let k = Mor(i as u32);
            entry.diagonal = Some(x.morphism_name(self.diagonal(k)).to_string());
            entry.representatives = Some(
                self.representatives(k)
                    .iter()
                    .map(|&m| {
                        let (t, b) = self.arrow.square_of(m);
                        [x.morphism_name(t).to_string(), x.morphism_name(b).to_string()]
                    })
                    .collect(),
            );
        }
        file
    }

    /// Canonical epis `[1, f″]` and canonical monos `[f′, 1]`.
    pub fn canonical_proper_strict_fs(&self) -> StrictFactorisationSystem {
        let b = &**self.base();
        let mut e0 = Vec::new();
        let mut m0 = Vec::new();
        for k in self.cat.morphisms() {
            let reps = self.representatives(k).iter().map(|&m| self.arrow.square_of(m));
            let (mut has_e, mut has_m) = (false, false);
            for (top, bottom) in reps {
                has_e |= b.is_identity(top);
                has_m |= b.is_identity(bottom);
            }
            if has_e {
                e0.push(k);
            }
            if has_m {
                m0.push(k);
            }
        }
        StrictFactorisationSystem::new(self.cat.clone(), e0, m0)
    }

    /// The canonical factorisation `[f] = [f′, 1] ∘ [1, f″]` through the
    /// diagonal object.
    pub fn canonical_factorisation(&self, k: Mor) -> (Mor, Ob, Mor) {
        let (top, bottom) = self.representative(k);
        let x = self.object_of(self.cat.dom(k));
        let y = self.object_of(self.cat.cod(k));
        let d = self.diagonal(k);
        let b = &**self.base();
        let e = self
            .square(x, d, b.identity(b.dom(x)), bottom)
            .expect("canonical epi exists");
        let m = self
            .square(d, y, top, b.identity(b.cod(y)))
            .expect("canonical mono exists");
        (e, self.object_for(d), m)
    }

    /// Membership in the spanned `E` by the section criterion: `[f]: x → y`
    /// is in `E` iff some `u: Y′ → X′` has `y ∘ f′ ∘ u = y`.
    pub fn in_e_by_sections(&self, k: Mor) -> bool {
        let b = &**self.base();
        let y = self.object_of(self.cat.cod(k));
        let x = self.object_of(self.cat.dom(k));
        self.representatives(k).iter().all(|&m| {
            let (top, _) = self.arrow.square_of(m);
            let yf = b.compose(y, top);
            b.hom(b.dom(y), b.dom(x)).iter().any(|&u| b.compose(yf, u) == y)
        })
    }

    /// Dual criterion for `M`: some `v: Y″ → X″` has `v ∘ f″ ∘ x = x`.
    pub fn in_m_by_retractions(&self, k: Mor) -> bool {
        let b = &**self.base();
        let y = self.object_of(self.cat.cod(k));
        let x = self.object_of(self.cat.dom(k));
        self.representatives(k).iter().all(|&m| {
            let (_, bottom) = self.arrow.square_of(m);
            let fx = b.compose(bottom, x);
            b.hom(b.cod(y), b.cod(x)).iter().any(|&v| b.compose(v, fx) == x)
        })
    }

    /// The fs spanned by the canonical proper strict fs, cross-checked
    /// against the section criterion on every class.
    pub fn spanned_fs(&self) -> Result<FactorisationSystem> {
        let strict = self.canonical_proper_strict_fs();
        let fs = span(&strict)?;
        for k in self.cat.morphisms() {
            if fs.e().contains(k) != self.in_e_by_sections(k) {
                return Err(Error::Consistency(format!(
                    "E membership of {} disagrees with the section criterion",
                    self.cat.morphism_name(k)
                )));
            }
            if fs.m().contains(k) != self.in_m_by_retractions(k) {
                return Err(Error::Consistency(format!(
                    "M membership of {} disagrees with the retraction criterion",
                    self.cat.morphism_name(k)
                )));
            }
        }
        Ok(fs)
    }
}

/// `p: P → Fr` as a strict morphism of monads: `p ∘ η = η′` and
/// `p ∘ μ = μ′ ∘ p₂`, with `p₂ = Fr(p) ∘ p_PX` compared against
/// `p_FrX ∘ P(p)`.
pub fn check_projection_monad_morphism(x: &Arc<FinCategory>, guard: &SizeGuard) -> Result<Checks> {
    guard.check_cube("projection check", x.morphism_count())?;
    let p_tower = Tower::new(MonadKind::P, x);
    let Level::Arrow(px) = p_tower.one() else { unreachable!() };
    let Level::Arrow(ppx) = p_tower.two() else { unreachable!() };
    let frx = FreydCat::from_arrow(px.clone());
    let p = frx.projection();
    let fr_px = FreydCat::from_arrow(ppx.clone());
    let frfrx = freyd_completion(frx.cat());
    let pfrx = arrow_category(frx.cat());

    let mut checks = Checks::new();
    checks.record(
        "projection preserves the unit",
        "p . eta = eta'",
        functor_difference(&px.eta().then(p), &frx.eta()),
    );
    let via_fr = fr_px.projection().then(&fr_px.lift(p, &frfrx));
    let via_p = ppx.lift(p, &pfrx).then(frfrx.projection());
    checks.record(
        "both composites for p2 agree",
        "Fr(p) . pP = pFr . P(p)",
        functor_difference(&via_fr, &via_p),
    );
    let mu = p_tower.mult()?;
    let mu_prime = multiplication(&Level::Freyd(frx.clone()), &Level::Freyd(frfrx))?;
    checks.record(
        "projection preserves the multiplication",
        "p . mu = mu' . p2",
        functor_difference(&mu.then(p), &via_fr.then(&mu_prime)),
    );
    Ok(checks)
}

/// The structure of `FrX` itself: the canonical strict system is a proper
/// strict fs, canonical factorisations compose back, the spanned system
/// matches the section and retraction criteria, and epis and monos of `X`
/// on the legs of a square transfer to its class.
pub fn check_freyd_properness(x: &Arc<FinCategory>) -> Checks {
    let frx = freyd_completion(x);
    let fr = &**frx.cat();
    let b = &**x;
    let strict = frx.canonical_proper_strict_fs();
    let mut checks = Checks::new();
    checks.record(
        "canonical system is a strict fs",
        "[f] = [f', 1] . [1, f'']",
        strict.violations().first().map(|v| v.to_string()),
    );
    let improper = strict
        .e0()
        .iter()
        .find(|&k| !fr.is_epi(k))
        .map(|k| format!("{} is in E0 but not epi", fr.morphism_name(k)))
        .or_else(|| {
            strict
                .m0()
                .iter()
                .find(|&k| !fr.is_mono(k))
                .map(|k| format!("{} is in M0 but not mono", fr.morphism_name(k)))
        });
    checks.record("canonical system is proper", "E0 epi, M0 mono", improper);
    let recompose = fr.morphisms().find(|&k| {
        let (e, _, m) = frx.canonical_factorisation(k);
        fr.compose(m, e) != k || frx.diagonal(e) != frx.diagonal(k) || frx.diagonal(m) != frx.diagonal(k)
    });
    checks.record(
        "canonical factorisation",
        "[f', 1] . [1, f''] = [f], both with diagonal f",
        recompose.map(|k| format!("at {}", fr.morphism_name(k))),
    );
    checks.record(
        "spanned system matches the split-epi criterion",
        "[f] in E iff y . f' . u = y for some u",
        frx.spanned_fs().err().map(|e| e.to_string()),
    );
    let px = frx.arrow();
    let mut epi = None;
    let mut mono = None;
    for m in px.cat().morphisms() {
        let (top, bottom) = px.square_of(m);
        let k = frx.projection().mor(m);
        if b.is_epi(top) && !fr.is_epi(k) {
            epi.get_or_insert_with(|| format!("{} has an epi top leg", px.cat().morphism_name(m)));
        }
        if b.is_mono(bottom) && !fr.is_mono(k) {
            mono.get_or_insert_with(|| format!("{} has a mono bottom leg", px.cat().morphism_name(m)));
        }
    }
    checks.record("epi transfer", "f' epi => [f] epi", epi);
    checks.record("mono transfer", "f'' mono => [f] mono", mono);
    checks
}
