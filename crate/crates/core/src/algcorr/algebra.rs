use std::collections::BTreeMap;
use std::sync::Arc;

use crate::arrowmonad::{connection, face, MonadKind, Sign, Tower};
use crate::error::{Error, InputError, Result};
use crate::fincat::{FinCategory, Functor, Mor, NatTransformation, Ob};
use crate::format::AlgebraFile;
use crate::report::{functor_difference, functor_failure, Checks};

/// A strict algebra `t: TX → X`.
#[derive(Clone, Debug)]
pub struct StrictAlgebra {
    tower: Arc<Tower>,
    t: Functor,
}

/// A unitary pseudo algebra: `t: TX → X` with `t ∘ η = 1` on the nose and
/// `θ: t ∘ Tt ≅ t ∘ μ`, stored as one component per object of `T²X`.
#[derive(Clone, Debug)]
pub struct PseudoAlgebra {
    tower: Arc<Tower>,
    t: Functor,
    theta: Vec<Mor>,
}

/// A morphism of pseudo algebras `(F, φ)` with `φ: F ∘ t → t′ ∘ TF`, one
/// component per object of `TX`.
#[derive(Clone, Debug)]
pub struct AlgebraMorphism {
    pub f: Functor,
    pub phi: Vec<Mor>,
}

fn check_structure_map(tower: &Tower, t: &Functor) -> Result<()> {
    let one = tower.one();
    if !crate::fincat::same_category(t.source(), one.cat()) || !crate::fincat::same_category(t.target(), tower.base()) {
        return Err(Error::Precondition("structure map must go from TX to X".into()));
    }
    Ok(())
}

impl StrictAlgebra {
    pub fn new(tower: Arc<Tower>, t: Functor) -> Result<Self> {
        check_structure_map(&tower, &t)?;
        Ok(StrictAlgebra { tower, t })
    }

    /// The faces `∂⁻` (`t(x̂) = dom x`) and `∂⁺` (`t(x̂) = cod x`), the two
    /// trivial algebras for `P`.
    pub fn face(tower: Arc<Tower>, sign: Sign) -> Result<Self> {
        if tower.kind() != MonadKind::P {
            return Err(Error::Precondition("faces are algebras for P only".into()));
        }
        let t = face(tower.one().arrow(), sign);
        StrictAlgebra::new(tower, t)
    }

    pub fn tower(&self) -> &Arc<Tower> {
        &self.tower
    }

    pub fn t(&self) -> &Functor {
        &self.t
    }

    /// The same structure map with identity coherence components.
    pub fn to_pseudo(&self) -> PseudoAlgebra {
        let x = &**self.tower.base();
        let tt = self.tower.two().lift(&self.t, self.tower.one());
        let theta = self
            .tower
            .two()
            .cat()
            .objects()
            .map(|xi| x.identity(self.t.ob(tt.ob(xi))))
            .collect();
        PseudoAlgebra { tower: self.tower.clone(), t: self.t.clone(), theta }
    }

    pub fn from_file(tower: Arc<Tower>, file: &AlgebraFile) -> Result<Self> {
        if file.theta.is_some() {
            return Err(InputError::new("theta", "a strict algebra has no coherence components").into());
        }
        let t = structure_map_from_file(&tower, file)?;
        StrictAlgebra::new(tower, t)
    }

    pub fn to_file(&self) -> AlgebraFile {
        structure_map_to_file(&self.tower, &self.t)
    }
}

impl PartialEq for StrictAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.t.object_table() == other.t.object_table() && self.t.morphism_table() == other.t.morphism_table()
    }
}

impl PseudoAlgebra {
    pub fn new(tower: Arc<Tower>, t: Functor, theta: Vec<Mor>) -> Result<Self> {
        check_structure_map(&tower, &t)?;
        if theta.len() != tower.two().cat().object_count() {
            return Err(Error::Precondition("theta needs one component per object of T2X".into()));
        }
        Ok(PseudoAlgebra { tower, t, theta })
    }

    pub fn tower(&self) -> &Arc<Tower> {
        &self.tower
    }

    pub fn kind(&self) -> MonadKind {
        self.tower.kind()
    }

    pub fn base(&self) -> &Arc<FinCategory> {
        self.tower.base()
    }

    pub fn t(&self) -> &Functor {
        &self.t
    }

    /// `θ` at an object of `T²X`.
    pub fn theta(&self, xi: Ob) -> Mor {
        self.theta[xi.index()]
    }

    pub fn theta_table(&self) -> &[Mor] {
        &self.theta
    }

    /// Whether every coherence component is an identity.
    pub fn is_strict(&self) -> bool {
        self.theta.iter().all(|&m| self.base().is_identity(m))
    }

    pub fn to_strict(&self) -> Option<StrictAlgebra> {
        self.is_strict().then(|| StrictAlgebra { tower: self.tower.clone(), t: self.t.clone() })
    }

    /// Replaces one coherence component.
    pub fn with_theta(&self, xi: Ob, component: Mor) -> PseudoAlgebra {
        let mut theta = self.theta.clone();
        theta[xi.index()] = component;
        PseudoAlgebra { tower: self.tower.clone(), t: self.t.clone(), theta }
    }

    pub fn from_file(tower: Arc<Tower>, file: &AlgebraFile) -> Result<Self> {
        let t = structure_map_from_file(&tower, file)?;
        match &file.theta {
            None => Ok(StrictAlgebra::new(tower, t)?.to_pseudo()),
            Some(entries) => {
                let x = &**tower.base();
                let t2 = &**tower.two().cat();
                let mut theta = vec![None; t2.object_count()];
                for (key, value) in entries {
                    let xi = t2.object_by_name(key).ok_or_else(|| {
                        InputError::new(format!("theta[{key:?}]"), format!("unknown object of T2X '{key}'"))
                    })?;
                    let m = x.morphism_by_name(value).ok_or_else(|| {
                        InputError::new(format!("theta[{key:?}]"), format!("unknown morphism '{value}'"))
                    })?;
                    theta[xi.index()] = Some(m);
                }
                let theta = theta
                    .into_iter()
                    .enumerate()
                    .map(|(i, m)| {
                        m.ok_or_else(|| {
                            InputError::new("theta", format!("missing component at '{}'", t2.object_name(Ob(i as u32))))
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                PseudoAlgebra::new(tower, t, theta)
            }
        }
    }

    pub fn to_file(&self) -> AlgebraFile {
        let mut file = structure_map_to_file(&self.tower, &self.t);
        if !self.is_strict() {
            let x = &**self.base();
            let t2 = &**self.tower.two().cat();
            file.theta = Some(
                t2.objects()
                    .map(|xi| (t2.object_name(xi).to_string(), x.morphism_name(self.theta(xi)).to_string()))
                    .collect(),
            );
        }
        file
    }
}

fn structure_map_from_file(tower: &Arc<Tower>, file: &AlgebraFile) -> Result<Functor> {
    let kind: MonadKind = file.monad.parse().map_err(|e: String| InputError::new("monad", e))?;
    if kind != tower.kind() {
        return Err(InputError::new("monad", format!("expected {}, got {kind}", tower.kind())).into());
    }
    let x = &**tower.base();
    let tx = &**tower.one().cat();
    let mut objects = vec![None; tx.object_count()];
    for (key, value) in &file.on_objects {
        let o = tx
            .object_by_name(key)
            .ok_or_else(|| InputError::new(format!("on_objects[{key:?}]"), format!("unknown object of TX '{key}'")))?;
        let v = x
            .object_by_name(value)
            .ok_or_else(|| InputError::new(format!("on_objects[{key:?}]"), format!("unknown object '{value}'")))?;
        objects[o.index()] = Some(v);
    }
    let mut morphisms = vec![None; tx.morphism_count()];
    for (key, value) in &file.on_morphisms {
        let m = tx.morphism_by_name(key).ok_or_else(|| {
            InputError::new(format!("on_morphisms[{key:?}]"), format!("unknown morphism of TX '{key}'"))
        })?;
        let v = x
            .morphism_by_name(value)
            .ok_or_else(|| InputError::new(format!("on_morphisms[{key:?}]"), format!("unknown morphism '{value}'")))?;
        morphisms[m.index()] = Some(v);
    }
    let objects = objects
        .into_iter()
        .enumerate()
        .map(|(i, o)| o.ok_or_else(|| InputError::new("on_objects", format!("missing '{}'", tx.object_name(Ob(i as u32))))))
        .collect::<Result<Vec<_>, _>>()?;
    let morphisms = morphisms
        .into_iter()
        .enumerate()
        .map(|(i, m)| {
            m.ok_or_else(|| InputError::new("on_morphisms", format!("missing '{}'", tx.morphism_name(Mor(i as u32)))))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Functor::new(tower.one().cat().clone(), tower.base().clone(), objects, morphisms))
}

fn structure_map_to_file(tower: &Tower, t: &Functor) -> AlgebraFile {
    let x = &**tower.base();
    let tx = &**tower.one().cat();
    AlgebraFile {
        monad: tower.kind().to_string(),
        on_objects: tx
            .objects()
            .map(|o| (tx.object_name(o).to_string(), x.object_name(t.ob(o)).to_string()))
            .collect::<BTreeMap<_, _>>(),
        on_morphisms: tx
            .morphisms()
            .map(|m| (tx.morphism_name(m).to_string(), x.morphism_name(t.mor(m)).to_string()))
            .collect(),
        theta: None,
    }
}

/// Both laws of a strict algebra, exhaustively.
pub fn check_strict_algebra(a: &StrictAlgebra) -> Result<Checks> {
    let tower = &a.tower;
    let mut checks = Checks::new();
    checks.record("structure map is a functor", "t: TX -> X", functor_failure(&a.t));
    checks.record(
        "unit law",
        "t . eta = 1",
        functor_difference(&tower.unit().then(&a.t), &Functor::identity(tower.base())),
    );
    if !a.t.is_functor() {
        checks.record("multiplication law", "t . Tt = t . mu", Some("structure map is not a functor".into()));
        return Ok(checks);
    }
    let tt = tower.two().lift(&a.t, tower.one());
    let mu = tower.mult()?;
    checks.record("multiplication law", "t . Tt = t . mu", functor_difference(&tt.then(&a.t), &mu.then(&a.t)));
    Ok(checks)
}

/// Law names of the four pseudo-algebra conditions, in order.
pub const PSEUDO_CONDITIONS: [&str; 4] = ["unitary", "coherence iso", "coherence on units", "coherence on T3X"];

/// The four conditions of a unitary pseudo algebra, each reported on its
/// own: unitarity; `θ` a natural iso; `θ` trivial on the images of `Tη` and
/// `ηT`; and agreement of the two composites `t Tt T²t ⇒ t μ μT` at every
/// object of `T³X`, computed from the morphisms of `T²X`.
pub fn check_pseudo_algebra(a: &PseudoAlgebra) -> Result<Checks> {
    let tower = &a.tower;
    let x = &**tower.base();
    let one = tower.one();
    let two = tower.two();
    let t = &a.t;
    let mut checks = Checks::new();
    checks.record("structure map is a functor", "t: TX -> X", functor_failure(t));
    checks.record(
        PSEUDO_CONDITIONS[0],
        "t . eta = 1",
        functor_difference(&tower.unit().then(t), &Functor::identity(tower.base())),
    );
    if !t.is_functor() {
        for law in &PSEUDO_CONDITIONS[1..] {
            checks.record(law, "requires a functor", Some("structure map is not a functor".into()));
        }
        return Ok(checks);
    }
    let tt = two.lift(t, one);
    let mu = tower.mult()?;
    let left = tt.then(t);
    let right = mu.then(t);
    let theta = NatTransformation::new(left.clone(), right.clone(), a.theta.clone());
    let t2 = &**two.cat();
    let iso_failure = theta.failure().or_else(|| {
        t2.objects()
            .find(|&xi| !x.is_iso(a.theta(xi)))
            .map(|xi| format!("component at {} is not iso", t2.object_name(xi)))
    });
    checks.record(PSEUDO_CONDITIONS[1], "theta: t . Tt ~= t . mu", iso_failure);

    let t_eta = one.lift(&tower.unit(), two);
    let eta_t = two.unit();
    let tx = &**one.cat();
    let mut unit_failure = None;
    for o in tx.objects() {
        for (which, xi) in [("T eta", t_eta.ob(o)), ("eta T", eta_t.ob(o))] {
            if !x.is_identity(a.theta(xi)) {
                unit_failure.get_or_insert_with(|| {
                    format!("theta at {} = {which}({}) is {}", t2.object_name(xi), tx.object_name(o), x.morphism_name(a.theta(xi)))
                });
            }
        }
    }
    checks.record(PSEUDO_CONDITIONS[2], "theta(T eta) = 1 = theta(eta T)", unit_failure);

    let mut cube_failure = None;
    for big in t2.morphisms() {
        let name = || t2.morphism_name(big).to_string();
        let (xi0, xi1) = (t2.dom(big), t2.cod(big));
        let at = |k: Mor| two.object_for(k);
        // theta at mu T, after theta at T2 t
        let path_a = x.try_compose(a.theta(at(two.diagonal(big))), a.theta(at(tt.mor(big))));
        // theta at T mu, after t applied to T theta
        let t_theta = one.square(left.mor(big), right.mor(big), a.theta(xi0), a.theta(xi1));
        let path_b = t_theta.and_then(|k| x.try_compose(a.theta(at(mu.mor(big))), t.mor(k)));
        let failure = match (path_a, path_b) {
            (Some(p), Some(q)) if p == q => None,
            (Some(p), Some(q)) => Some(format!("at {}: {} vs {}", name(), x.morphism_name(p), x.morphism_name(q))),
            _ => Some(format!("at {}: composites are not defined", name())),
        };
        if failure.is_some() {
            cube_failure = failure;
            break;
        }
    }
    checks.record(
        PSEUDO_CONDITIONS[3],
        "theta(mu T) . theta(T2 t) = theta(T mu) . t(T theta)",
        cube_failure,
    );
    Ok(checks)
}

/// `τ⁻(x̂) = t(1, x)` and `τ⁺(x̂) = t(x, 1)`, one component per object of
/// `TX`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Taus {
    pub minus: Vec<Mor>,
    pub plus: Vec<Mor>,
}

pub fn tau_transforms(tower: &Tower, t: &Functor) -> Taus {
    let x = &**tower.base();
    let one = tower.one();
    let tx = &**one.cat();
    let mut minus = Vec::with_capacity(tx.object_count());
    let mut plus = Vec::with_capacity(tx.object_count());
    for o in tx.objects() {
        let f = one.object_of(o);
        let (d, c) = (x.identity(x.dom(f)), x.identity(x.cod(f)));
        minus.push(t.mor(one.square(d, f, d, f).expect("(1, x) commutes")));
        plus.push(t.mor(one.square(f, c, f, c).expect("(x, 1) commutes")));
    }
    Taus { minus, plus }
}

/// Naturality of `τ⁻: ∂⁻ → t` and `τ⁺: t → ∂⁺` (checked on every
/// representative square), `τ⁺ ∘ τ⁻ = x`, and for `P` agreement with the
/// connections: `τ⁻ = Pt ∘ g⁺`, `τ⁺ = Pt ∘ g⁻` componentwise.
pub fn check_taus(tower: &Tower, t: &Functor) -> Checks {
    let x = &**tower.base();
    let one = tower.one();
    let tx = &**one.cat();
    let taus = tau_transforms(tower, t);
    let mut checks = Checks::new();
    let mut minus_failure = None;
    let mut plus_failure = None;
    for k in tx.morphisms() {
        let (a, b) = (tx.dom(k), tx.cod(k));
        for (top, bottom) in one.representatives(k) {
            let l = x.try_compose(t.mor(k), taus.minus[a.index()]);
            let r = x.try_compose(taus.minus[b.index()], top);
            if l.is_none() || l != r {
                minus_failure.get_or_insert_with(|| format!("at {}", tx.morphism_name(k)));
            }
            let l = x.try_compose(taus.plus[b.index()], t.mor(k));
            let r = x.try_compose(bottom, taus.plus[a.index()]);
            if l.is_none() || l != r {
                plus_failure.get_or_insert_with(|| format!("at {}", tx.morphism_name(k)));
            }
        }
    }
    checks.record("tau- is natural", "tau-: d- -> t", minus_failure);
    checks.record("tau+ is natural", "tau+: t -> d+", plus_failure);
    let split = tx.objects().find(|&o| {
        x.try_compose(taus.plus[o.index()], taus.minus[o.index()]) != Some(one.object_of(o))
    });
    checks.record(
        "tau factorisation",
        "tau+(x) . tau-(x) = x",
        split.map(|o| format!("at {}", tx.object_name(o))),
    );
    if tower.kind() == MonadKind::P {
        let px = one.arrow();
        let ppx = tower.two().arrow();
        let pt = ppx.lift(t, px);
        for (sign, taus, law) in [
            (Sign::Plus, &taus.minus, "tau- = Pt . g+"),
            (Sign::Minus, &taus.plus, "tau+ = Pt . g-"),
        ] {
            let g = connection(px, ppx, sign);
            let bad = tx.objects().find(|&o| px.object_of(pt.ob(g.ob(o))) != taus[o.index()]);
            checks.record(
                &format!("{} via connections", law.split(' ').next().unwrap_or(law)),
                law,
                bad.map(|o| format!("at {}", tx.object_name(o))),
            );
        }
    }
    checks
}

/// The unit and coherence conditions for `(F, φ): (X, t) → (Y, t′)`, together with
/// naturality and invertibility of `φ`.
pub fn check_algebra_morphism(src: &PseudoAlgebra, tgt: &PseudoAlgebra, m: &AlgebraMorphism) -> Result<Checks> {
    if src.kind() != tgt.kind() {
        return Err(Error::Precondition("algebras for different monads".into()));
    }
    let (ts, tt_) = (&src.tower, &tgt.tower);
    let y = &**tt_.base();
    let f = &m.f;
    let mut checks = Checks::new();
    checks.record("underlying functor", "F: X -> Y", functor_failure(f));
    let tf = ts.one().lift(f, tt_.one());
    let phi = NatTransformation::new(src.t.then(f), tf.then(&tgt.t), m.phi.clone());
    let tx = &**ts.one().cat();
    let iso = phi.failure().or_else(|| {
        tx.objects()
            .find(|&o| !y.is_iso(m.phi[o.index()]))
            .map(|o| format!("component at {} is not iso", tx.object_name(o)))
    });
    checks.record("phi is a natural iso", "phi: F t ~= t' TF", iso);

    let eta = ts.unit();
    let unit_failure = ts
        .base()
        .objects()
        .find(|&o| !y.is_identity(m.phi[eta.ob(o).index()]))
        .map(|o| format!("at {}", ts.base().object_name(o)));
    checks.record("morphism unit condition", "phi(eta) = 1", unit_failure);

    let mu = ts.mult()?;
    let t_t = ts.two().lift(&src.t, ts.one());
    let t2f = ts.two().lift(&tf, tt_.two());
    let t2 = &**ts.two().cat();
    let mut failure = None;
    for xi in t2.objects() {
        let k = ts.two().object_of(xi);
        let (a, b) = (tx.dom(k), tx.cod(k));
        let left = y.try_compose(m.phi[mu.ob(xi).index()], f.mor(src.theta(xi)));
        let t_phi = tt_
            .one()
            .square(f.mor(src.t.mor(k)), tgt.t.mor(tf.mor(k)), m.phi[a.index()], m.phi[b.index()]);
        let right = t_phi.and_then(|s| {
            let step = y.try_compose(tgt.t.mor(s), m.phi[t_t.ob(xi).index()])?;
            y.try_compose(tgt.theta(t2f.ob(xi)), step)
        });
        match (left, right) {
            (Some(l), Some(r)) if l == r => {}
            _ => {
                failure = Some(format!("at {}", t2.object_name(xi)));
                break;
            }
        }
    }
    checks.record(
        "morphism coherence",
        "phi(mu) . F theta = theta'(T2 F) . t'(T phi) . phi(Tt)",
        failure,
    );
    Ok(checks)
}

/// The 2-cell condition for a natural `α: F → G` between algebra morphisms
/// `(F, φ)` and `(G, ψ)`: `ψ ∘ α t = t′(Tα) ∘ φ` at every object of `TX`.
pub fn check_two_cell(
    src: &PseudoAlgebra,
    tgt: &PseudoAlgebra,
    first: &AlgebraMorphism,
    second: &AlgebraMorphism,
    alpha: &NatTransformation,
) -> Option<String> {
    let x = &**src.base();
    let y = &**tgt.base();
    let one = src.tower.one();
    let tx = &**one.cat();
    for o in tx.objects() {
        let f = one.object_of(o);
        let left = y.try_compose(second.phi[o.index()], alpha.at(src.t.ob(o)));
        let t_alpha = tgt.tower.one().square(
            first.f.mor(f),
            second.f.mor(f),
            alpha.at(x.dom(f)),
            alpha.at(x.cod(f)),
        );
        let right = t_alpha.and_then(|s| y.try_compose(tgt.t.mor(s), first.phi[o.index()]));
        if left.is_none() || left != right {
            return Some(format!("at {}", tx.object_name(o)));
        }
    }
    None
}

/// The identity morphism `(1, 1)` of an algebra.
pub fn identity_morphism(a: &PseudoAlgebra) -> AlgebraMorphism {
    let x = &**a.base();
    let phi = a.tower.one().cat().objects().map(|o| x.identity(a.t.ob(o))).collect();
    AlgebraMorphism { f: Functor::identity(a.base()), phi }
}
