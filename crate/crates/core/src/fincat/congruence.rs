use std::sync::Arc;

use thiserror::Error;

use super::category::{BuildError, CategoryBuilder, FinCategory, Mor};
use super::functor::Functor;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CongruenceError {
    #[error("classes do not partition the morphisms: {0}")]
    NotAPartition(String),
    #[error("{a} and {b} are related but not parallel")]
    NotParallel { a: String, b: String },
    #[error("composition is not compatible: {g} ∘ {f} and {g2} ∘ {f2} land in different classes")]
    Incompatible { g: String, f: String, g2: String, f2: String },
    #[error(transparent)]
    Build(#[from] BuildError),
}

/// Disjoint-set forest over morphism indices.
#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    /// Merges the classes; the smaller index becomes the root. Returns
    /// whether anything changed.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

/// A partition of the morphisms of `base`, meant to be a congruence.
#[derive(Debug, Clone)]
pub struct Congruence {
    base: Arc<FinCategory>,
    class_of: Vec<usize>,
    classes: Vec<Vec<Mor>>,
}

impl Congruence {
    /// Every morphism in its own class.
    pub fn discrete(base: &Arc<FinCategory>) -> Self {
        Congruence {
            base: base.clone(),
            class_of: (0..base.morphism_count()).collect(),
            classes: base.morphisms().map(|m| vec![m]).collect(),
        }
    }

    /// Takes an explicit partition. Fails if some morphism is missing,
    /// repeated or out of range; does not check the congruence laws.
    pub fn from_classes(base: &Arc<FinCategory>, classes: Vec<Vec<Mor>>) -> Result<Self, CongruenceError> {
        let n = base.morphism_count();
        let mut class_of = vec![usize::MAX; n];
        let mut normalized: Vec<Vec<Mor>> = Vec::new();
        for class in classes {
            if class.is_empty() {
                return Err(CongruenceError::NotAPartition("empty class".into()));
            }
            let mut class = class;
            class.sort();
            normalized.push(class);
        }
        normalized.sort();
        for (i, class) in normalized.iter().enumerate() {
            for &m in class {
                if m.index() >= n {
                    return Err(CongruenceError::NotAPartition(format!("unknown morphism #{}", m.0)));
                }
                if class_of[m.index()] != usize::MAX {
                    return Err(CongruenceError::NotAPartition(format!(
                        "{} appears twice",
                        base.morphism_name(m)
                    )));
                }
                class_of[m.index()] = i;
            }
        }
        if let Some(m) = class_of.iter().position(|&c| c == usize::MAX) {
            return Err(CongruenceError::NotAPartition(format!(
                "{} is in no class",
                base.morphism_name(Mor(m as u32))
            )));
        }
        Ok(Congruence { base: base.clone(), class_of, classes: normalized })
    }

    /// The least congruence containing the given pairs, computed with
    /// union-find and merged to a fixed point under composition. Fails if a
    /// pair (or a consequence of one) relates non-parallel morphisms.
    pub fn generated_by(
        base: &Arc<FinCategory>,
        pairs: impl IntoIterator<Item = (Mor, Mor)>,
    ) -> Result<Self, CongruenceError> {
        let c = &**base;
        let mut uf = UnionFind::new(c.morphism_count());
        for (a, b) in pairs {
            uf.union(a.index(), b.index());
        }
        loop {
            let mut changed = false;
            for f in c.morphisms() {
                let r = Mor(uf.find(f.index()) as u32);
                if r == f {
                    continue;
                }
                if c.dom(r) != c.dom(f) || c.cod(r) != c.cod(f) {
                    return Err(CongruenceError::NotParallel {
                        a: c.morphism_name(r).into(),
                        b: c.morphism_name(f).into(),
                    });
                }
                for &g in c.outgoing(c.cod(f)) {
                    changed |= uf.union(c.compose(g, f).index(), c.compose(g, r).index());
                }
                for &h in c.incoming(c.dom(f)) {
                    changed |= uf.union(c.compose(f, h).index(), c.compose(r, h).index());
                }
            }
            if !changed {
                break;
            }
        }
        let mut groups: Vec<Vec<Mor>> = vec![Vec::new(); c.morphism_count()];
        for m in c.morphisms() {
            groups[uf.find(m.index())].push(m);
        }
        Congruence::from_classes(base, groups.into_iter().filter(|g| !g.is_empty()).collect())
    }

    pub fn base(&self) -> &Arc<FinCategory> {
        &self.base
    }

    /// Classes ordered by their least member.
    pub fn classes(&self) -> &[Vec<Mor>] {
        &self.classes
    }

    pub fn class_of(&self, m: Mor) -> usize {
        self.class_of[m.index()]
    }

    pub fn related(&self, a: Mor, b: Mor) -> bool {
        self.class_of(a) == self.class_of(b)
    }

    pub fn is_discrete(&self) -> bool {
        self.classes.len() == self.base.morphism_count()
    }

    /// First failure of parallelism or compatibility with composition.
    pub fn check(&self) -> Result<(), CongruenceError> {
        let c = &*self.base;
        let name = |m: Mor| c.morphism_name(m).to_string();
        for class in &self.classes {
            let r = class[0];
            for &m in &class[1..] {
                if c.dom(m) != c.dom(r) || c.cod(m) != c.cod(r) {
                    return Err(CongruenceError::NotParallel { a: name(r), b: name(m) });
                }
            }
        }
        // With parallel classes, compatibility reduces to changing one side
        // at a time.
        for f in c.morphisms() {
            let r = self.classes[self.class_of(f)][0];
            for &g in c.outgoing(c.cod(f)) {
                if !self.related(c.compose(g, f), c.compose(g, r)) {
                    return Err(CongruenceError::Incompatible { g: name(g), f: name(f), g2: name(g), f2: name(r) });
                }
            }
            for &h in c.incoming(c.dom(f)) {
                if !self.related(c.compose(f, h), c.compose(r, h)) {
                    return Err(CongruenceError::Incompatible { g: name(f), f: name(h), g2: name(r), f2: name(h) });
                }
            }
        }
        Ok(())
    }

    pub fn is_congruence(&self) -> bool {
        self.check().is_ok()
    }

    /// The quotient category and its projection. Objects are unchanged; each
    /// class becomes one morphism named after its least member. Induced
    /// composition is checked over every pair of class members.
    pub fn quotient(&self) -> Result<(Arc<FinCategory>, Functor), CongruenceError> {
        self.check()?;
        let c = &*self.base;
        let mut b = CategoryBuilder::with_capacity(c.object_count(), self.classes.len());
        for o in c.objects() {
            b.object(c.object_name(o));
        }
        for class in &self.classes {
            let r = class[0];
            b.morphism(c.morphism_name(r), c.dom(r).index(), c.cod(r).index());
        }
        for o in c.objects() {
            b.set_identity(o.index(), self.class_of(c.identity(o)));
        }
        let mut incompatible = None;
        let built = b.build(|gc, fc| {
            let g_class = &self.classes[gc];
            let f_class = &self.classes[fc];
            let h = self.class_of(c.compose(g_class[0], f_class[0]));
            for &g in g_class {
                for &f in f_class {
                    let h2 = self.class_of(c.compose(g, f));
                    if h2 != h && incompatible.is_none() {
                        incompatible = Some((g, f, g_class[0], f_class[0]));
                    }
                }
            }
            Some(h)
        })?;
        if let Some((g, f, g2, f2)) = incompatible {
            let name = |m: Mor| c.morphism_name(m).to_string();
            return Err(CongruenceError::Incompatible { g: name(g), f: name(f), g2: name(g2), f2: name(f2) });
        }
        let q = Arc::new(built.category);
        let on_objects = c.objects().map(|o| built.object_of_raw[o.index()]).collect();
        let on_morphisms = c
            .morphisms()
            .map(|m| built.morphism_of_raw[self.class_of(m)])
            .collect();
        let projection = Functor::new(self.base.clone(), q.clone(), on_objects, on_morphisms);
        Ok((q, projection))
    }
}
