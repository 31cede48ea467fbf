use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

/// Index of an object in a [`FinCategory`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ob(pub u32);

/// Index of a morphism in a [`FinCategory`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mor(pub u32);

impl Ob {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl Mor {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("duplicate object name '{0}'")]
    DuplicateObject(String),
    #[error("duplicate morphism name '{0}'")]
    DuplicateMorphism(String),
    #[error("object '{0}' has no identity")]
    MissingIdentity(String),
    #[error("identity of '{object}' is '{morphism}', which is not an endomorphism of it")]
    BadIdentity { object: String, morphism: String },
    #[error("incomplete table: no composite for ({g}, {f})")]
    IncompleteTable { g: String, f: String },
}

/// One violated law instance found by [`FinCategory::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LawViolation {
    /// `f ∘ id(dom f) ≠ f`.
    RightIdentity { f: String, got: String },
    /// `id(cod f) ∘ f ≠ f`.
    LeftIdentity { f: String, got: String },
    /// `g ∘ f` has the wrong domain or codomain.
    Coherence { g: String, f: String, composite: String },
    /// `h ∘ (g ∘ f) ≠ (h ∘ g) ∘ f`.
    Associativity { h: String, g: String, f: String, left: String, right: String },
}

impl LawViolation {
    pub fn law(&self) -> &'static str {
        match self {
            LawViolation::RightIdentity { .. } | LawViolation::LeftIdentity { .. } => "identity",
            LawViolation::Coherence { .. } => "coherence",
            LawViolation::Associativity { .. } => "associativity",
        }
    }
}

impl fmt::Display for LawViolation {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LawViolation::RightIdentity { f, got } => {
                write!(fm, "identity law: {f} ∘ id = {got}, expected {f}")
            }
            LawViolation::LeftIdentity { f, got } => {
                write!(fm, "identity law: id ∘ {f} = {got}, expected {f}")
            }
            LawViolation::Coherence { g, f, composite } => {
                write!(fm, "coherence: {g} ∘ {f} = {composite} has wrong domain or codomain")
            }
            LawViolation::Associativity { h, g, f, left, right } => write!(
                fm,
                "associativity: {h} ∘ ({g} ∘ {f}) = {left} but ({h} ∘ {g}) ∘ {f} = {right}"
            ),
        }
    }
}

/// A finite category given by explicit tables.
///
/// Objects and morphisms are kept sorted by name, so `Ob(i) < Ob(j)` iff the
/// name of `i` is lexicographically smaller. Composition is stored densely over
/// composable pairs: `table[g][pos(f)]` for every `f` ending at `dom g`.
#[derive(Clone)]
pub struct FinCategory {
    objects: Vec<String>,
    morphisms: Vec<String>,
    dom: Vec<Ob>,
    cod: Vec<Ob>,
    identity: Vec<Mor>,
    incoming: Vec<Vec<Mor>>,
    outgoing: Vec<Vec<Mor>>,
    in_pos: Vec<u32>,
    table: Vec<Vec<Mor>>,
    // per domain: outgoing morphisms sorted by codomain, and the range of
    // each codomain within that list
    by_cod: Vec<Vec<Mor>>,
    hom_ranges: Vec<Vec<(Ob, u32, u32)>>,
    object_index: HashMap<String, Ob>,
    morphism_index: HashMap<String, Mor>,
}

impl fmt::Debug for FinCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FinCategory")
            .field("objects", &self.objects.len())
            .field("morphisms", &self.morphisms.len())
            .finish()
    }
}

impl PartialEq for FinCategory {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self, other)
            || (self.objects == other.objects
                && self.morphisms == other.morphisms
                && self.dom == other.dom
                && self.cod == other.cod
                && self.identity == other.identity
                && self.table == other.table)
    }
}

impl Eq for FinCategory {}

/// Output of [`CategoryBuilder::build`]: the category plus the renumbering
/// from insertion order to the sorted order.
#[derive(Debug, Clone)]
pub struct Built {
    pub category: FinCategory,
    pub object_of_raw: Vec<Ob>,
    pub morphism_of_raw: Vec<Mor>,
}

/// Collects objects and morphisms in any order; `build` sorts them by name.
#[derive(Debug, Default, Clone)]
pub struct CategoryBuilder {
    objects: Vec<String>,
    morphisms: Vec<(String, usize, usize)>,
    identity: Vec<Option<usize>>,
}

impl CategoryBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(objects: usize, morphisms: usize) -> Self {
        CategoryBuilder {
            objects: Vec::with_capacity(objects),
            morphisms: Vec::with_capacity(morphisms),
            identity: Vec::with_capacity(objects),
        }
    }

    /// Adds an object and returns its raw index.
    pub fn object(&mut self, name: impl Into<String>) -> usize {
        self.objects.push(name.into());
        self.identity.push(None);
        self.objects.len() - 1
    }

    /// Adds a morphism between raw object indices and returns its raw index.
    pub fn morphism(&mut self, name: impl Into<String>, dom: usize, cod: usize) -> usize {
        self.morphisms.push((name.into(), dom, cod));
        self.morphisms.len() - 1
    }

    pub fn set_identity(&mut self, object: usize, morphism: usize) {
        self.identity[object] = Some(morphism);
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn raw_dom(&self, m: usize) -> usize {
        self.morphisms[m].1
    }

    pub fn raw_cod(&self, m: usize) -> usize {
        self.morphisms[m].2
    }

    /// Sorts by name and tabulates composition. `compose(g, f)` receives raw
    /// indices of a pair with `dom g = cod f` and must return the raw index of
    /// the composite; `None` is reported as an incomplete table.
    pub fn build<C>(self, mut compose: C) -> Result<Built, BuildError>
    where
        C: FnMut(usize, usize) -> Option<usize>,
    {
        let CategoryBuilder { objects, morphisms, identity } = self;

        let mut obj_order: Vec<usize> = (0..objects.len()).collect();
        obj_order.sort_by(|&a, &b| objects[a].cmp(&objects[b]));
        let mut object_of_raw = vec![Ob(0); objects.len()];
        for (new, &raw) in obj_order.iter().enumerate() {
            object_of_raw[raw] = Ob(new as u32);
        }
        for w in obj_order.windows(2) {
            if objects[w[0]] == objects[w[1]] {
                return Err(BuildError::DuplicateObject(objects[w[0]].clone()));
            }
        }

        let mut mor_order: Vec<usize> = (0..morphisms.len()).collect();
        mor_order.sort_by(|&a, &b| morphisms[a].0.cmp(&morphisms[b].0));
        let mut morphism_of_raw = vec![Mor(0); morphisms.len()];
        for (new, &raw) in mor_order.iter().enumerate() {
            morphism_of_raw[raw] = Mor(new as u32);
        }
        for w in mor_order.windows(2) {
            if morphisms[w[0]].0 == morphisms[w[1]].0 {
                return Err(BuildError::DuplicateMorphism(morphisms[w[0]].0.clone()));
            }
        }

        let n_obj = objects.len();
        let n_mor = morphisms.len();
        let mut dom = vec![Ob(0); n_mor];
        let mut cod = vec![Ob(0); n_mor];
        for (raw, (_, d, c)) in morphisms.iter().enumerate() {
            let m = morphism_of_raw[raw].index();
            dom[m] = object_of_raw[*d];
            cod[m] = object_of_raw[*c];
        }
        let mut ident = vec![Mor(0); n_obj];
        for (raw, id) in identity.iter().enumerate() {
            let Some(id) = *id else {
                return Err(BuildError::MissingIdentity(objects[raw].clone()));
            };
            let o = object_of_raw[raw];
            let m = morphism_of_raw[id];
            if dom[m.index()] != o || cod[m.index()] != o {
                return Err(BuildError::BadIdentity {
                    object: objects[raw].clone(),
                    morphism: morphisms[id].0.clone(),
                });
            }
            ident[o.index()] = m;
        }

        let mut incoming = vec![Vec::new(); n_obj];
        let mut outgoing = vec![Vec::new(); n_obj];
        let mut in_pos = vec![0u32; n_mor];
        for m in 0..n_mor {
            let mm = Mor(m as u32);
            in_pos[m] = incoming[cod[m].index()].len() as u32;
            incoming[cod[m].index()].push(mm);
            outgoing[dom[m].index()].push(mm);
        }
        let mut by_cod = outgoing.clone();
        let mut hom_ranges = Vec::with_capacity(n_obj);
        for list in &mut by_cod {
            list.sort_by_key(|m| cod[m.index()]);
            let mut ranges: Vec<(Ob, u32, u32)> = Vec::new();
            for (i, m) in list.iter().enumerate() {
                let c = cod[m.index()];
                match ranges.last_mut() {
                    Some(r) if r.0 == c => r.2 = i as u32 + 1,
                    _ => ranges.push((c, i as u32, i as u32 + 1)),
                }
            }
            hom_ranges.push(ranges);
        }

        let mut table = Vec::with_capacity(n_mor);
        for (g, &g_raw) in mor_order.iter().enumerate() {
            let d = dom[g];
            let mut row = Vec::with_capacity(incoming[d.index()].len());
            for &f in &incoming[d.index()] {
                let f_raw = mor_order[f.index()];
                match compose(g_raw, f_raw) {
                    Some(h_raw) => row.push(morphism_of_raw[h_raw]),
                    None => {
                        return Err(BuildError::IncompleteTable {
                            g: morphisms[g_raw].0.clone(),
                            f: morphisms[f_raw].0.clone(),
                        })
                    }
                }
            }
            table.push(row);
        }

        let mut objects_sorted = Vec::with_capacity(n_obj);
        for &raw in &obj_order {
            objects_sorted.push(objects[raw].clone());
        }
        let mut morphisms_sorted = Vec::with_capacity(n_mor);
        for &raw in &mor_order {
            morphisms_sorted.push(morphisms[raw].0.clone());
        }
        let object_index = objects_sorted
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), Ob(i as u32)))
            .collect();
        let morphism_index = morphisms_sorted
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), Mor(i as u32)))
            .collect();

        Ok(Built {
            category: FinCategory {
                objects: objects_sorted,
                morphisms: morphisms_sorted,
                dom,
                cod,
                identity: ident,
                incoming,
                outgoing,
                in_pos,
                table,
                by_cod,
                hom_ranges,
                object_index,
                morphism_index,
            },
            object_of_raw,
            morphism_of_raw,
        })
    }
}

impl FinCategory {
    /// The category with no objects.
    pub fn empty() -> Self {
        CategoryBuilder::new().build(|_, _| None).expect("empty category").category
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> impl ExactSizeIterator<Item = Ob> + Clone {
        (0..self.objects.len() as u32).map(Ob)
    }

    pub fn morphisms(&self) -> impl ExactSizeIterator<Item = Mor> + Clone {
        (0..self.morphisms.len() as u32).map(Mor)
    }

    pub fn object_name(&self, o: Ob) -> &str {
        &self.objects[o.index()]
    }

    pub fn morphism_name(&self, m: Mor) -> &str {
        &self.morphisms[m.index()]
    }

    pub fn object_names(&self) -> &[String] {
        &self.objects
    }

    pub fn morphism_names(&self) -> &[String] {
        &self.morphisms
    }

    pub fn object_by_name(&self, name: &str) -> Option<Ob> {
        self.object_index.get(name).copied()
    }

    pub fn morphism_by_name(&self, name: &str) -> Option<Mor> {
        self.morphism_index.get(name).copied()
    }

    /// Panicking lookup for code that works with known fixture names.
    pub fn mor(&self, name: &str) -> Mor {
        self.morphism_by_name(name)
            .unwrap_or_else(|| panic!("no morphism named '{name}'"))
    }

    /// Panicking lookup for code that works with known fixture names.
    pub fn ob(&self, name: &str) -> Ob {
        self.object_by_name(name)
            .unwrap_or_else(|| panic!("no object named '{name}'"))
    }

    #[inline]
    pub fn dom(&self, m: Mor) -> Ob {
        self.dom[m.index()]
    }

    #[inline]
    pub fn cod(&self, m: Mor) -> Ob {
        self.cod[m.index()]
    }

    #[inline]
    pub fn identity(&self, o: Ob) -> Mor {
        self.identity[o.index()]
    }

    pub fn is_identity(&self, m: Mor) -> bool {
        self.identity[self.dom(m).index()] == m
    }

    /// `g ∘ f`, or `None` when `dom g ≠ cod f`.
    #[inline]
    pub fn try_compose(&self, g: Mor, f: Mor) -> Option<Mor> {
        (self.dom(g) == self.cod(f)).then(|| self.table[g.index()][self.in_pos[f.index()] as usize])
    }

    /// `g ∘ f`. Panics if the pair is not composable.
    #[inline]
    pub fn compose(&self, g: Mor, f: Mor) -> Mor {
        debug_assert!(
            self.dom(g) == self.cod(f),
            "{} ∘ {} is not composable",
            self.morphism_name(g),
            self.morphism_name(f)
        );
        self.table[g.index()][self.in_pos[f.index()] as usize]
    }

    /// Morphisms ending at `o`, in index order.
    pub fn incoming(&self, o: Ob) -> &[Mor] {
        &self.incoming[o.index()]
    }

    /// Morphisms starting at `o`, in index order.
    pub fn outgoing(&self, o: Ob) -> &[Mor] {
        &self.outgoing[o.index()]
    }

    /// `hom(x, y)` in lexicographic order of names.
    #[inline]
    pub fn hom(&self, x: Ob, y: Ob) -> &[Mor] {
        let ranges = &self.hom_ranges[x.index()];
        match ranges.binary_search_by_key(&y, |r| r.0) {
            Ok(i) => {
                let (_, lo, hi) = ranges[i];
                &self.by_cod[x.index()][lo as usize..hi as usize]
            }
            Err(_) => &[],
        }
    }

    /// Number of composable pairs `(g, f)`.
    pub fn composable_pair_count(&self) -> usize {
        self.table.iter().map(Vec::len).sum()
    }

    /// Exhaustive check of the identity, coherence and associativity laws.
    /// An empty result means the tables form a category.
    pub fn validate(&self) -> Vec<LawViolation> {
        let mut out = Vec::new();
        let name = |m: Mor| self.morphism_name(m).to_string();
        for f in self.morphisms() {
            let r = self.compose(f, self.identity(self.dom(f)));
            if r != f {
                out.push(LawViolation::RightIdentity { f: name(f), got: name(r) });
            }
            let l = self.compose(self.identity(self.cod(f)), f);
            if l != f {
                out.push(LawViolation::LeftIdentity { f: name(f), got: name(l) });
            }
        }
        let mut coherent = true;
        for f in self.morphisms() {
            for &g in self.outgoing(self.cod(f)) {
                let gf = self.compose(g, f);
                if self.dom(gf) != self.dom(f) || self.cod(gf) != self.cod(g) {
                    coherent = false;
                    out.push(LawViolation::Coherence { g: name(g), f: name(f), composite: name(gf) });
                }
            }
        }
        if !coherent {
            // associativity is not even well-typed on an incoherent table
            return out;
        }
        for f in self.morphisms() {
            for &g in self.outgoing(self.cod(f)) {
                let gf = self.compose(g, f);
                for &h in self.outgoing(self.cod(g)) {
                    let left = self.compose(h, gf);
                    let right = self.compose(self.compose(h, g), f);
                    if left != right {
                        out.push(LawViolation::Associativity {
                            h: name(h),
                            g: name(g),
                            f: name(f),
                            left: name(left),
                            right: name(right),
                        });
                    }
                }
            }
        }
        out
    }

    /// Rebuilds the category with the composition table modified by `patch`.
    /// Used to produce deliberately corrupted inputs.
    pub fn with_patched_composition<P>(&self, mut patch: P) -> FinCategory
    where
        P: FnMut(Mor, Mor, Mor) -> Mor,
    {
        let mut copy = self.clone();
        for g in self.morphisms() {
            for (i, &f) in self.incoming(self.dom(g)).iter().enumerate() {
                copy.table[g.index()][i] = patch(g, f, self.table[g.index()][i]);
            }
        }
        copy
    }
}
