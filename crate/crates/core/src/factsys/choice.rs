use std::sync::Arc;

use super::system::{span, FactorisationSystem, StrictFactorisationSystem};
use crate::error::{Error, InputError, Result};
use crate::fincat::{FinCategory, Mor, Ob};
use crate::format::{ChoiceEntry, ChoiceFile};

/// A chosen factorisation `f = m ∘ e` through `mid`, for every morphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorisationChoice {
    fs: FactorisationSystem,
    triples: Vec<(Mor, Ob, Mor)>,
}

impl FactorisationChoice {
    /// Validates a table of triples: totality, membership, identities
    /// assigned `(id, obj, id)`.
    pub fn new(fs: &FactorisationSystem, triples: Vec<(Mor, Ob, Mor)>) -> Result<Self> {
        let c = &**fs.base();
        if triples.len() != c.morphism_count() {
            return Err(Error::Precondition("choice is not total".into()));
        }
        for f in c.morphisms() {
            let (e, mid, m) = triples[f.index()];
            let name = c.morphism_name(f);
            if c.is_identity(f) {
                if e != f || m != f || mid != c.dom(f) {
                    return Err(Error::Precondition(format!("identity {name} must be chosen as (id, obj, id)")));
                }
                continue;
            }
            let typed = c.dom(e) == c.dom(f) && c.cod(e) == mid && c.dom(m) == mid && c.cod(m) == c.cod(f);
            if !typed || c.compose(m, e) != f {
                return Err(Error::Precondition(format!("chosen triple for {name} does not factor it")));
            }
            if !fs.e().contains(e) || !fs.m().contains(m) {
                return Err(Error::Precondition(format!("chosen triple for {name} is not an (E, M) factorisation")));
            }
        }
        Ok(FactorisationChoice { fs: fs.clone(), triples })
    }

    fn pick(fs: &FactorisationSystem, last: bool) -> Result<Self> {
        let c = &**fs.base();
        let mut triples = Vec::with_capacity(c.morphism_count());
        for f in c.morphisms() {
            if c.is_identity(f) {
                triples.push((f, c.dom(f), f));
                continue;
            }
            let all = fs.factorisations(f);
            let t = if last { all.last() } else { all.first() };
            let t = t.copied().ok_or_else(|| {
                Error::FsViolation(format!("{} has no factorisation", c.morphism_name(f)))
            })?;
            triples.push(t);
        }
        FactorisationChoice::new(fs, triples)
    }

    /// The lexicographically least valid `(mid, e, m)` for each morphism,
    /// identities forced to `(id, obj, id)`.
    pub fn least(fs: &FactorisationSystem) -> Result<Self> {
        FactorisationChoice::pick(fs, false)
    }

    /// The lexicographically greatest valid triple; an alternative
    /// identity-respecting choice.
    pub fn greatest(fs: &FactorisationSystem) -> Result<Self> {
        FactorisationChoice::pick(fs, true)
    }

    /// Every identity-respecting choice, up to `limit` of them.
    pub fn all(fs: &FactorisationSystem, limit: usize) -> Result<Vec<Self>> {
        let c = &**fs.base();
        let options: Vec<Vec<(Mor, Ob, Mor)>> = c
            .morphisms()
            .map(|f| {
                if c.is_identity(f) {
                    vec![(f, c.dom(f), f)]
                } else {
                    fs.factorisations(f)
                }
            })
            .collect();
        let mut current = Vec::with_capacity(options.len());
        fn go(
            options: &[Vec<(Mor, Ob, Mor)>],
            current: &mut Vec<(Mor, Ob, Mor)>,
            out: &mut Vec<Vec<(Mor, Ob, Mor)>>,
            limit: usize,
        ) {
            if out.len() >= limit {
                return;
            }
            if current.len() == options.len() {
                out.push(current.clone());
                return;
            }
            for &t in &options[current.len()] {
                current.push(t);
                go(options, current, out, limit);
                current.pop();
            }
        }
        let mut raw = Vec::new();
        go(&options, &mut current, &mut raw, limit);
        raw.into_iter().map(|t| FactorisationChoice::new(fs, t)).collect()
    }

    /// The choice forced by a strict system, over the fs it spans.
    pub fn from_strict(strict: &StrictFactorisationSystem) -> Result<Self> {
        let fs = span(strict)?;
        let c = &**strict.base();
        let triples = c
            .morphisms()
            .map(|f| {
                let (e, m) = strict.factor(f).expect("spanning checked the strict system");
                (e, c.cod(e), m)
            })
            .collect();
        FactorisationChoice::new(&fs, triples)
    }

    pub fn from_file(fs: &FactorisationSystem, file: &ChoiceFile) -> Result<Self> {
        let c = &**fs.base();
        let mut triples: Vec<Option<(Mor, Ob, Mor)>> = vec![None; c.morphism_count()];
        for (key, entry) in file {
            let f = c
                .morphism_by_name(key)
                .ok_or_else(|| InputError::new(format!("choice[{key:?}]"), format!("unknown morphism '{key}'")))?;
            let look_m = |n: &str, slot: &str| {
                c.morphism_by_name(n).ok_or_else(|| {
                    InputError::new(format!("choice[{key:?}].{slot}"), format!("unknown morphism '{n}'"))
                })
            };
            let e = look_m(&entry.e, "e")?;
            let m = look_m(&entry.m, "m")?;
            let mid = c.object_by_name(&entry.mid).ok_or_else(|| {
                InputError::new(format!("choice[{key:?}].mid"), format!("unknown object '{}'", entry.mid))
            })?;
            triples[f.index()] = Some((e, mid, m));
        }
        let mut full = Vec::with_capacity(triples.len());
        for f in c.morphisms() {
            match triples[f.index()] {
                Some(t) => full.push(t),
                None if c.is_identity(f) => full.push((f, c.dom(f), f)),
                None => {
                    return Err(InputError::new(
                        "choice",
                        format!("no factorisation chosen for '{}'", c.morphism_name(f)),
                    )
                    .into())
                }
            }
        }
        FactorisationChoice::new(fs, full)
    }

    pub fn to_file(&self) -> ChoiceFile {
        let c = &**self.fs.base();
        c.morphisms()
            .map(|f| {
                let (e, mid, m) = self.triples[f.index()];
                (
                    c.morphism_name(f).to_string(),
                    ChoiceEntry {
                        e: c.morphism_name(e).into(),
                        mid: c.object_name(mid).into(),
                        m: c.morphism_name(m).into(),
                    },
                )
            })
            .collect()
    }

    pub fn fs(&self) -> &FactorisationSystem {
        &self.fs
    }

    pub fn base(&self) -> &Arc<FinCategory> {
        self.fs.base()
    }

    /// The chosen `(e, mid, m)` for `f`.
    #[inline]
    pub fn factor(&self, f: Mor) -> (Mor, Ob, Mor) {
        self.triples[f.index()]
    }
}

/// The unique `w: mid₁ → mid₂` with `w ∘ e₁ = e₂` and `m₂ ∘ w = m₁`, linking
/// two factorisations of the same morphism. It must exist, be unique and be
/// an iso; anything else means the classes are not an fs.
pub fn comparison_iso(c: &FinCategory, first: (Mor, Ob, Mor), second: (Mor, Ob, Mor)) -> Result<Mor> {
    let (e1, mid1, m1) = first;
    let (e2, mid2, m2) = second;
    if c.compose(m1, e1) != c.compose(m2, e2) {
        return Err(Error::Precondition("the two factorisations have different composites".into()));
    }
    let fills: Vec<Mor> = c
        .hom(mid1, mid2)
        .iter()
        .copied()
        .filter(|&w| c.compose(w, e1) == e2 && c.compose(m2, w) == m1)
        .collect();
    let what = || format!("{} ∘ {}", c.morphism_name(m1), c.morphism_name(e1));
    match fills.as_slice() {
        [w] if c.is_iso(*w) => Ok(*w),
        [w] => Err(Error::FsViolation(format!(
            "comparison {} for {} is not iso",
            c.morphism_name(*w),
            what()
        ))),
        [] => Err(Error::FsViolation(format!("no comparison map for {}", what()))),
        many => Err(Error::FsViolation(format!("{} comparison maps for {}", many.len(), what()))),
    }
}
