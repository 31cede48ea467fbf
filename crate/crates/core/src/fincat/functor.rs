use std::fmt;
use std::sync::Arc;

use super::category::{FinCategory, Mor, Ob};

/// A structure-preserving map between finite categories, stored as two
/// total tables.
#[derive(Clone)]
pub struct Functor {
    source: Arc<FinCategory>,
    target: Arc<FinCategory>,
    on_objects: Vec<Ob>,
    on_morphisms: Vec<Mor>,
}

impl fmt::Debug for Functor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for x in self.source.morphisms() {
            m.entry(
                &self.source.morphism_name(x),
                &self.target.morphism_name(self.on_morphisms[x.index()]),
            );
        }
        m.finish()
    }
}

impl PartialEq for Functor {
    fn eq(&self, other: &Self) -> bool {
        same_category(&self.source, &other.source)
            && same_category(&self.target, &other.target)
            && self.on_objects == other.on_objects
            && self.on_morphisms == other.on_morphisms
    }
}

impl Eq for Functor {}

pub(crate) fn same_category(a: &Arc<FinCategory>, b: &Arc<FinCategory>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// A way in which a candidate functor fails to be one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FunctorViolation {
    Endpoints { morphism: String },
    Identity { object: String },
    Composition { g: String, f: String },
}

impl fmt::Display for FunctorViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FunctorViolation::Endpoints { morphism } => {
                write!(f, "image of {morphism} has the wrong domain or codomain")
            }
            FunctorViolation::Identity { object } => write!(f, "identity of {object} not preserved"),
            FunctorViolation::Composition { g, f: ff } => {
                write!(f, "composite {g} ∘ {ff} not preserved")
            }
        }
    }
}

impl Functor {
    /// Wraps the tables without checking them; see [`Functor::violations`].
    pub fn new(
        source: Arc<FinCategory>,
        target: Arc<FinCategory>,
        on_objects: Vec<Ob>,
        on_morphisms: Vec<Mor>,
    ) -> Self {
        assert_eq!(on_objects.len(), source.object_count(), "object table size");
        assert_eq!(on_morphisms.len(), source.morphism_count(), "morphism table size");
        Functor { source, target, on_objects, on_morphisms }
    }

    pub fn identity(c: &Arc<FinCategory>) -> Self {
        Functor::new(c.clone(), c.clone(), c.objects().collect(), c.morphisms().collect())
    }

    /// Constant functor at the object `o`.
    pub fn constant(source: &Arc<FinCategory>, target: &Arc<FinCategory>, o: Ob) -> Self {
        let id = target.identity(o);
        Functor::new(
            source.clone(),
            target.clone(),
            vec![o; source.object_count()],
            vec![id; source.morphism_count()],
        )
    }

    pub fn source(&self) -> &Arc<FinCategory> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FinCategory> {
        &self.target
    }

    #[inline]
    pub fn ob(&self, o: Ob) -> Ob {
        self.on_objects[o.index()]
    }

    #[inline]
    pub fn mor(&self, m: Mor) -> Mor {
        self.on_morphisms[m.index()]
    }

    pub fn object_table(&self) -> &[Ob] {
        &self.on_objects
    }

    pub fn morphism_table(&self) -> &[Mor] {
        &self.on_morphisms
    }

    /// `other ∘ self`: first `self`, then `other`.
    pub fn then(&self, other: &Functor) -> Functor {
        assert!(
            same_category(&self.target, &other.source),
            "functors are not composable"
        );
        Functor {
            source: self.source.clone(),
            target: other.target.clone(),
            on_objects: self.on_objects.iter().map(|&o| other.ob(o)).collect(),
            on_morphisms: self.on_morphisms.iter().map(|&m| other.mor(m)).collect(),
        }
    }

    pub fn violations(&self) -> Vec<FunctorViolation> {
        let (s, t) = (&*self.source, &*self.target);
        let mut out = Vec::new();
        for f in s.morphisms() {
            let ff = self.mor(f);
            if t.dom(ff) != self.ob(s.dom(f)) || t.cod(ff) != self.ob(s.cod(f)) {
                out.push(FunctorViolation::Endpoints { morphism: s.morphism_name(f).into() });
            }
        }
        if !out.is_empty() {
            return out;
        }
        for o in s.objects() {
            if self.mor(s.identity(o)) != t.identity(self.ob(o)) {
                out.push(FunctorViolation::Identity { object: s.object_name(o).into() });
            }
        }
        for f in s.morphisms() {
            for &g in s.outgoing(s.cod(f)) {
                if self.mor(s.compose(g, f)) != t.compose(self.mor(g), self.mor(f)) {
                    out.push(FunctorViolation::Composition {
                        g: s.morphism_name(g).into(),
                        f: s.morphism_name(f).into(),
                    });
                }
            }
        }
        out
    }

    pub fn is_functor(&self) -> bool {
        self.violations().is_empty()
    }

    /// Injective on objects and on morphisms.
    pub fn is_injective(&self) -> bool {
        let mut o = self.on_objects.clone();
        o.sort();
        o.dedup();
        let mut m = self.on_morphisms.clone();
        m.sort();
        m.dedup();
        o.len() == self.on_objects.len() && m.len() == self.on_morphisms.len()
    }

    /// Every target morphism between images of source objects is an image.
    pub fn is_full(&self) -> bool {
        let s = &*self.source;
        for x in s.objects() {
            for y in s.objects() {
                for &t in self.target.hom(self.ob(x), self.ob(y)) {
                    if !s.hom(x, y).iter().any(|&m| self.mor(m) == t) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_surjective_on_morphisms(&self) -> bool {
        let mut hit = vec![false; self.target.morphism_count()];
        for &m in &self.on_morphisms {
            hit[m.index()] = true;
        }
        hit.into_iter().all(|b| b)
    }
}

/// A natural transformation `α: F → G` between parallel functors.
#[derive(Clone, Debug)]
pub struct NatTransformation {
    source: Functor,
    target: Functor,
    components: Vec<Mor>,
}

impl NatTransformation {
    pub fn new(source: Functor, target: Functor, components: Vec<Mor>) -> Self {
        assert_eq!(components.len(), source.source().object_count());
        NatTransformation { source, target, components }
    }

    pub fn identity(f: &Functor) -> Self {
        let comps = f.source().objects().map(|o| f.target().identity(f.ob(o))).collect();
        NatTransformation::new(f.clone(), f.clone(), comps)
    }

    pub fn source(&self) -> &Functor {
        &self.source
    }

    pub fn target(&self) -> &Functor {
        &self.target
    }

    #[inline]
    pub fn at(&self, o: Ob) -> Mor {
        self.components[o.index()]
    }

    pub fn components(&self) -> &[Mor] {
        &self.components
    }

    /// First object whose component is mistyped, or first morphism whose
    /// naturality square fails.
    pub fn failure(&self) -> Option<String> {
        let c = &**self.source.source();
        let d = &**self.source.target();
        if !same_category(self.source.source(), self.target.source())
            || !same_category(self.source.target(), self.target.target())
        {
            return Some("functors are not parallel".into());
        }
        for o in c.objects() {
            let a = self.at(o);
            if d.dom(a) != self.source.ob(o) || d.cod(a) != self.target.ob(o) {
                return Some(format!("component at {} is mistyped", c.object_name(o)));
            }
        }
        for f in c.morphisms() {
            let left = d.compose(self.target.mor(f), self.at(c.dom(f)));
            let right = d.compose(self.at(c.cod(f)), self.source.mor(f));
            if left != right {
                return Some(format!("naturality square at {} fails", c.morphism_name(f)));
            }
        }
        None
    }

    pub fn is_natural(&self) -> bool {
        self.failure().is_none()
    }

    pub fn is_iso(&self) -> bool {
        let d = self.source.target();
        self.components.iter().all(|&m| d.is_iso(m))
    }

    /// Vertical composite `other · self`.
    pub fn then(&self, other: &NatTransformation) -> NatTransformation {
        let d = self.source.target();
        let comps = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(&a, &b)| d.compose(b, a))
            .collect();
        NatTransformation::new(self.source.clone(), other.target.clone(), comps)
    }
}
