//! Backtracking enumeration of functors between finite categories.

use std::sync::Arc;

use super::category::{FinCategory, Mor, Ob};
use super::functor::Functor;

/// Functor search with optional pinned values. Objects are assigned first,
/// then morphisms in index order; every composition constraint is checked as
/// soon as its three morphisms are assigned.
pub struct FunctorSearch<'a> {
    source: &'a Arc<FinCategory>,
    target: &'a Arc<FinCategory>,
    pinned_objects: Vec<Option<Ob>>,
    pinned_morphisms: Vec<Option<Mor>>,
}

impl<'a> FunctorSearch<'a> {
    pub fn new(source: &'a Arc<FinCategory>, target: &'a Arc<FinCategory>) -> Self {
        FunctorSearch {
            source,
            target,
            pinned_objects: vec![None; source.object_count()],
            pinned_morphisms: vec![None; source.morphism_count()],
        }
    }

    pub fn pin_object(&mut self, o: Ob, to: Ob) -> &mut Self {
        self.pinned_objects[o.index()] = Some(to);
        self
    }

    pub fn pin_morphism(&mut self, m: Mor, to: Mor) -> &mut Self {
        self.pinned_morphisms[m.index()] = Some(to);
        self
    }

    /// All functors matching the pins, in lexicographic order of their
    /// (object table, morphism table).
    pub fn run(&self) -> Vec<Functor> {
        let mut out = Vec::new();
        self.for_each(|f| {
            out.push(f);
            true
        });
        out
    }

    /// Streams solutions to `visit`; stops early when it returns `false`.
    pub fn for_each<V: FnMut(Functor) -> bool>(&self, mut visit: V) {
        let s = &**self.source;
        // constraints[k]: triples (g, f, g∘f) whose largest index is k
        let mut constraints: Vec<Vec<(Mor, Mor, Mor)>> = vec![Vec::new(); s.morphism_count()];
        for f in s.morphisms() {
            for &g in s.outgoing(s.cod(f)) {
                let h = s.compose(g, f);
                let k = f.max(g).max(h);
                constraints[k.index()].push((g, f, h));
            }
        }
        let mut objs = vec![Ob(0); s.object_count()];
        let mut mors = vec![Mor(0); s.morphism_count()];
        self.assign_object(0, &mut objs, &mut mors, &constraints, &mut visit);
    }

    fn assign_object<V: FnMut(Functor) -> bool>(
        &self,
        i: usize,
        objs: &mut Vec<Ob>,
        mors: &mut Vec<Mor>,
        constraints: &[Vec<(Mor, Mor, Mor)>],
        visit: &mut V,
    ) -> bool {
        if i == objs.len() {
            return self.assign_morphism(0, objs, mors, constraints, visit);
        }
        let choices: Vec<Ob> = match self.pinned_objects[i] {
            Some(o) => vec![o],
            None => self.target.objects().collect(),
        };
        for o in choices {
            objs[i] = o;
            if !self.assign_object(i + 1, objs, mors, constraints, visit) {
                return false;
            }
        }
        true
    }

    fn assign_morphism<V: FnMut(Functor) -> bool>(
        &self,
        k: usize,
        objs: &mut Vec<Ob>,
        mors: &mut Vec<Mor>,
        constraints: &[Vec<(Mor, Mor, Mor)>],
        visit: &mut V,
    ) -> bool {
        let s = &**self.source;
        let t = &**self.target;
        if k == mors.len() {
            let f = Functor::new(self.source.clone(), self.target.clone(), objs.clone(), mors.clone());
            return visit(f);
        }
        let m = Mor(k as u32);
        let (x, y) = (objs[s.dom(m).index()], objs[s.cod(m).index()]);
        let forced_identity = s.is_identity(m).then(|| t.identity(x));
        let candidates: Vec<Mor> = match (self.pinned_morphisms[k], forced_identity) {
            (Some(p), Some(id)) if p != id => Vec::new(),
            (Some(p), _) => vec![p],
            (None, Some(id)) => vec![id],
            (None, None) => t.hom(x, y).to_vec(),
        };
        for c in candidates {
            if t.dom(c) != x || t.cod(c) != y {
                continue;
            }
            mors[k] = c;
            let ok = constraints[k]
                .iter()
                .all(|&(g, f, h)| t.compose(mors[g.index()], mors[f.index()]) == mors[h.index()]);
            if ok && !self.assign_morphism(k + 1, objs, mors, constraints, visit) {
                return false;
            }
        }
        true
    }
}

/// Every functor `C → D`, deterministically ordered.
pub fn enumerate_functors(c: &Arc<FinCategory>, d: &Arc<FinCategory>) -> Vec<Functor> {
    FunctorSearch::new(c, d).run()
}

/// Every natural transformation between two parallel functors.
pub fn enumerate_natural_transformations(
    f: &Functor,
    g: &Functor,
) -> Vec<super::functor::NatTransformation> {
    let c = &**f.source();
    let d = &**f.target();
    let mut out = Vec::new();
    let mut comps = vec![Mor(0); c.object_count()];
    fn go(
        i: usize,
        c: &FinCategory,
        d: &FinCategory,
        f: &Functor,
        g: &Functor,
        comps: &mut Vec<Mor>,
        out: &mut Vec<super::functor::NatTransformation>,
    ) {
        if i == comps.len() {
            let a = super::functor::NatTransformation::new(f.clone(), g.clone(), comps.clone());
            if a.is_natural() {
                out.push(a);
            }
            return;
        }
        let o = Ob(i as u32);
        for &m in d.hom(f.ob(o), g.ob(o)) {
            comps[i] = m;
            go(i + 1, c, d, f, g, comps, out);
        }
    }
    go(0, c, d, f, g, &mut comps, &mut out);
    out
}
