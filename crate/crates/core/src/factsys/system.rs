use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fincat::{FinCategory, Mor, Ob};
use crate::format::FsFile;

/// A set of morphisms of one category, as a membership bitmap.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MorSet(Vec<bool>);

impl MorSet {
    pub fn empty(n: usize) -> Self {
        MorSet(vec![false; n])
    }

    pub fn full(n: usize) -> Self {
        MorSet(vec![true; n])
    }

    pub fn from_morphisms(n: usize, ms: impl IntoIterator<Item = Mor>) -> Self {
        let mut s = MorSet::empty(n);
        for m in ms {
            s.insert(m);
        }
        s
    }

    pub fn from_predicate(c: &FinCategory, mut p: impl FnMut(Mor) -> bool) -> Self {
        MorSet(c.morphisms().map(|m| p(m)).collect())
    }

    #[inline]
    pub fn contains(&self, m: Mor) -> bool {
        self.0[m.index()]
    }

    pub fn insert(&mut self, m: Mor) {
        self.0[m.index()] = true;
    }

    pub fn remove(&mut self, m: Mor) {
        self.0[m.index()] = false;
    }

    pub fn iter(&self) -> impl Iterator<Item = Mor> + '_ {
        self.0.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| Mor(i as u32))
    }

    pub fn len(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_subset(&self, other: &MorSet) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| !a || b)
    }

    /// Morphism names, in lexicographic order.
    pub fn names(&self, c: &FinCategory) -> Vec<String> {
        self.iter().map(|m| c.morphism_name(m).to_string()).collect()
    }
}

/// Ways in which a candidate (strict) factorisation system fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FsViolation {
    MissingIso { class: &'static str, morphism: String },
    MissingIdentity { class: &'static str, morphism: String },
    NotClosed { class: &'static str, g: String, f: String },
    NoFactorisation { morphism: String },
    NotUnique { morphism: String, count: usize },
    NotOrthogonal { e: String, m: String, u: String, v: String, fill_ins: usize },
}

impl fmt::Display for FsViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FsViolation::MissingIso { class, morphism } => write!(f, "iso {morphism} is not in {class}"),
            FsViolation::MissingIdentity { class, morphism } => {
                write!(f, "identity {morphism} is not in {class}")
            }
            FsViolation::NotClosed { class, g, f: ff } => {
                write!(f, "{class} is not closed under composition: {g} ∘ {ff}")
            }
            FsViolation::NoFactorisation { morphism } => write!(f, "{morphism} has no factorisation"),
            FsViolation::NotUnique { morphism, count } => {
                write!(f, "{morphism} has {count} strict factorisations")
            }
            FsViolation::NotOrthogonal { e, m, u, v, fill_ins } => write!(
                f,
                "{e} is not orthogonal to {m}: square ({u}, {v}) has {fill_ins} fill-ins"
            ),
        }
    }
}

fn closure_violation(c: &FinCategory, s: &MorSet, class: &'static str) -> Option<FsViolation> {
    for f in s.iter() {
        for &g in c.outgoing(c.cod(f)) {
            if s.contains(g) && !s.contains(c.compose(g, f)) {
                return Some(FsViolation::NotClosed {
                    class,
                    g: c.morphism_name(g).into(),
                    f: c.morphism_name(f).into(),
                });
            }
        }
    }
    None
}

/// A pair of morphism classes `(E, M)`; `violations` decides whether it is
/// a factorisation system.
///
/// The axioms: `E` and `M` contain the isos and are closed under
/// composition, every morphism is `m ∘ e` with `e ∈ E`, `m ∈ M`, and every
/// `e ∈ E` is orthogonal to every `m ∈ M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorisationSystem {
    base: Arc<FinCategory>,
    e: MorSet,
    m: MorSet,
}

impl FactorisationSystem {
    pub fn new(base: Arc<FinCategory>, e: impl IntoIterator<Item = Mor>, m: impl IntoIterator<Item = Mor>) -> Self {
        let n = base.morphism_count();
        FactorisationSystem { e: MorSet::from_morphisms(n, e), m: MorSet::from_morphisms(n, m), base }
    }

    pub fn from_sets(base: Arc<FinCategory>, e: MorSet, m: MorSet) -> Self {
        FactorisationSystem { base, e, m }
    }

    /// `(isos, all)`.
    pub fn isos_all(base: &Arc<FinCategory>) -> Self {
        let e = MorSet::from_predicate(base, |f| base.is_iso(f));
        FactorisationSystem::from_sets(base.clone(), e, MorSet::full(base.morphism_count()))
    }

    /// `(all, isos)`.
    pub fn all_isos(base: &Arc<FinCategory>) -> Self {
        let m = MorSet::from_predicate(base, |f| base.is_iso(f));
        FactorisationSystem::from_sets(base.clone(), MorSet::full(base.morphism_count()), m)
    }

    pub fn from_file(base: &Arc<FinCategory>, file: &FsFile) -> Result<Self> {
        let (e, m) = file.classes(base)?;
        Ok(FactorisationSystem::new(base.clone(), e, m))
    }

    pub fn to_file(&self) -> FsFile {
        FsFile { e: Some(self.e.names(&self.base)), m: Some(self.m.names(&self.base)), ..FsFile::default() }
    }

    pub fn base(&self) -> &Arc<FinCategory> {
        &self.base
    }

    pub fn e(&self) -> &MorSet {
        &self.e
    }

    pub fn m(&self) -> &MorSet {
        &self.m
    }

    /// Every `(e, mid, m)` with `f = m ∘ e`, `e ∈ E`, `m ∈ M`, ordered by
    /// `(mid, e, m)`.
    pub fn factorisations(&self, f: Mor) -> Vec<(Mor, Ob, Mor)> {
        let c = &*self.base;
        let mut out = Vec::new();
        for mid in c.objects() {
            for &e in c.hom(c.dom(f), mid) {
                if !self.e.contains(e) {
                    continue;
                }
                for &m in c.hom(mid, c.cod(f)) {
                    if self.m.contains(m) && c.compose(m, e) == f {
                        out.push((e, mid, m));
                    }
                }
            }
        }
        out
    }

    /// Exhaustive check of the axioms; empty iff this is an fs.
    pub fn violations(&self) -> Vec<FsViolation> {
        let c = &*self.base;
        let name = |m: Mor| c.morphism_name(m).to_string();
        let mut out = Vec::new();
        for f in c.morphisms() {
            if c.is_iso(f) {
                if !self.e.contains(f) {
                    out.push(FsViolation::MissingIso { class: "E", morphism: name(f) });
                }
                if !self.m.contains(f) {
                    out.push(FsViolation::MissingIso { class: "M", morphism: name(f) });
                }
            }
        }
        out.extend(closure_violation(c, &self.e, "E"));
        out.extend(closure_violation(c, &self.m, "M"));
        for f in c.morphisms() {
            if self.factorisations(f).is_empty() {
                out.push(FsViolation::NoFactorisation { morphism: name(f) });
            }
        }
        for e in self.e.iter() {
            for m in self.m.iter() {
                if let Some((u, v, n)) = c.orthogonality_failure(e, m) {
                    out.push(FsViolation::NotOrthogonal {
                        e: name(e),
                        m: name(m),
                        u: name(u),
                        v: name(v),
                        fill_ins: n,
                    });
                }
            }
        }
        out
    }

    pub fn is_fs(&self) -> bool {
        self.violations().is_empty()
    }

    /// Every `e ∈ E` is epi and every `m ∈ M` is mono.
    pub fn is_proper(&self) -> bool {
        self.e.iter().all(|f| self.base.is_epi(f)) && self.m.iter().all(|f| self.base.is_mono(f))
    }
}

/// A pair of subcategories `(E₀, M₀)` with strictly unique factorisations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrictFactorisationSystem {
    base: Arc<FinCategory>,
    e0: MorSet,
    m0: MorSet,
}

impl StrictFactorisationSystem {
    pub fn new(base: Arc<FinCategory>, e0: impl IntoIterator<Item = Mor>, m0: impl IntoIterator<Item = Mor>) -> Self {
        let n = base.morphism_count();
        StrictFactorisationSystem { e0: MorSet::from_morphisms(n, e0), m0: MorSet::from_morphisms(n, m0), base }
    }

    pub fn from_sets(base: Arc<FinCategory>, e0: MorSet, m0: MorSet) -> Self {
        StrictFactorisationSystem { base, e0, m0 }
    }

    /// `(identities, all)`.
    pub fn identities_all(base: &Arc<FinCategory>) -> Self {
        let e = MorSet::from_predicate(base, |f| base.is_identity(f));
        StrictFactorisationSystem::from_sets(base.clone(), e, MorSet::full(base.morphism_count()))
    }

    /// `(all, identities)`.
    pub fn all_identities(base: &Arc<FinCategory>) -> Self {
        let m = MorSet::from_predicate(base, |f| base.is_identity(f));
        StrictFactorisationSystem::from_sets(base.clone(), MorSet::full(base.morphism_count()), m)
    }

    pub fn from_file(base: &Arc<FinCategory>, file: &FsFile) -> Result<Self> {
        let (e, m) = file.classes(base)?;
        Ok(StrictFactorisationSystem::new(base.clone(), e, m))
    }

    pub fn to_file(&self) -> FsFile {
        FsFile { e0: Some(self.e0.names(&self.base)), m0: Some(self.m0.names(&self.base)), ..FsFile::default() }
    }

    pub fn base(&self) -> &Arc<FinCategory> {
        &self.base
    }

    pub fn e0(&self) -> &MorSet {
        &self.e0
    }

    pub fn m0(&self) -> &MorSet {
        &self.m0
    }

    /// Every `(e, m)` with `f = m ∘ e`, `e ∈ E₀`, `m ∈ M₀`.
    pub fn factorisations(&self, f: Mor) -> Vec<(Mor, Mor)> {
        let c = &*self.base;
        let mut out = Vec::new();
        for &e in c.outgoing(c.dom(f)) {
            if !self.e0.contains(e) {
                continue;
            }
            for &m in c.hom(c.cod(e), c.cod(f)) {
                if self.m0.contains(m) && c.compose(m, e) == f {
                    out.push((e, m));
                }
            }
        }
        out
    }

    /// The unique factorisation, when there is exactly one.
    pub fn factor(&self, f: Mor) -> Option<(Mor, Mor)> {
        let all = self.factorisations(f);
        (all.len() == 1).then(|| all[0])
    }

    pub fn violations(&self) -> Vec<FsViolation> {
        let c = &*self.base;
        let name = |m: Mor| c.morphism_name(m).to_string();
        let mut out = Vec::new();
        for o in c.objects() {
            let id = c.identity(o);
            if !self.e0.contains(id) {
                out.push(FsViolation::MissingIdentity { class: "E0", morphism: name(id) });
            }
            if !self.m0.contains(id) {
                out.push(FsViolation::MissingIdentity { class: "M0", morphism: name(id) });
            }
        }
        out.extend(closure_violation(c, &self.e0, "E0"));
        out.extend(closure_violation(c, &self.m0, "M0"));
        for f in c.morphisms() {
            match self.factorisations(f).len() {
                0 => out.push(FsViolation::NoFactorisation { morphism: name(f) }),
                1 => {}
                n => out.push(FsViolation::NotUnique { morphism: name(f), count: n }),
            }
        }
        out
    }

    pub fn is_strict_fs(&self) -> bool {
        self.violations().is_empty()
    }

    /// `E₀` consists of epis and `M₀` of monos.
    pub fn is_proper(&self) -> bool {
        self.e0.iter().all(|f| self.base.is_epi(f)) && self.m0.iter().all(|f| self.base.is_mono(f))
    }
}

/// The fs spanned by a strict one: `u = m ∘ e` is in `E` iff `m` is iso,
/// and in `M` iff `e` is iso.
pub fn span(strict: &StrictFactorisationSystem) -> Result<FactorisationSystem> {
    let c = strict.base();
    if let Some(v) = strict.violations().into_iter().next() {
        return Err(Error::Precondition(format!("not a strict fs: {v}")));
    }
    let mut e = MorSet::empty(c.morphism_count());
    let mut m = MorSet::empty(c.morphism_count());
    for u in c.morphisms() {
        let (ue, um) = strict.factor(u).expect("strict factorisation exists");
        if c.is_iso(um) {
            e.insert(u);
        }
        if c.is_iso(ue) {
            m.insert(u);
        }
    }
    Ok(FactorisationSystem::from_sets(c.clone(), e, m))
}

/// Two strict systems are equivalent when they span the same fs.
pub fn equivalent_strict(s1: &StrictFactorisationSystem, s2: &StrictFactorisationSystem) -> Result<bool> {
    let (a, b) = (span(s1)?, span(s2)?);
    Ok(a.e == b.e && a.m == b.m)
}
