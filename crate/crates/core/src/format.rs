//! JSON file formats: categories (optionally carrying provenance),
//! factorisation systems, factorisation choices and algebras.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, InputError, Result};
use crate::fincat::{CategoryBuilder, FinCategory, Mor};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ObjectEntry {
    Name(String),
    WithProvenance {
        name: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        of: Option<String>,
    },
}

impl ObjectEntry {
    pub fn name(&self) -> &str {
        match self {
            ObjectEntry::Name(n) => n,
            ObjectEntry::WithProvenance { name, .. } => name,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismEntry {
    pub name: String,
    pub dom: String,
    pub cod: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub top: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bottom: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagonal: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub representatives: Option<Vec<[String; 2]>>,
}

impl MorphismEntry {
    pub fn plain(name: &str, dom: &str, cod: &str) -> Self {
        MorphismEntry {
            name: name.into(),
            dom: dom.into(),
            cod: cod.into(),
            top: None,
            bottom: None,
            diagonal: None,
            representatives: None,
        }
    }
}

/// The category file. Identity composites are implied and must not be
/// listed; every other composable pair must be.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryFile {
    pub objects: Vec<ObjectEntry>,
    pub morphisms: Vec<MorphismEntry>,
    pub identities: BTreeMap<String, String>,
    pub composition: Vec<[String; 3]>,
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str, what: &str) -> Result<T, InputError> {
    serde_json::from_str(text).map_err(|e| {
        InputError::new(format!("{what} line {} column {}", e.line(), e.column()), e.to_string())
    })
}

impl CategoryFile {
    pub fn parse(text: &str) -> Result<Self, InputError> {
        parse_json(text, "category")
    }

    /// Deterministic pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("category serializes");
        s.push('\n');
        s
    }

    /// Emits a category; composition is listed for every composable pair of
    /// non-identities, ordered by (g, f).
    pub fn from_category(c: &FinCategory) -> Self {
        let objects = c.objects().map(|o| ObjectEntry::Name(c.object_name(o).into())).collect();
        let morphisms = c
            .morphisms()
            .map(|m| {
                MorphismEntry::plain(c.morphism_name(m), c.object_name(c.dom(m)), c.object_name(c.cod(m)))
            })
            .collect();
        let identities = c
            .objects()
            .map(|o| (c.object_name(o).to_string(), c.morphism_name(c.identity(o)).to_string()))
            .collect();
        let mut composition = Vec::new();
        for g in c.morphisms() {
            if c.is_identity(g) {
                continue;
            }
            for &f in c.incoming(c.dom(g)) {
                if c.is_identity(f) {
                    continue;
                }
                composition.push([
                    c.morphism_name(g).to_string(),
                    c.morphism_name(f).to_string(),
                    c.morphism_name(c.compose(g, f)).to_string(),
                ]);
            }
        }
        CategoryFile { objects, morphisms, identities, composition }
    }

    /// Builds the tables, rejecting duplicates, unknown names, listed
    /// identity composites and missing composites. The category laws are
    /// not checked here; see [`FinCategory::validate`].
    pub fn to_category_unchecked(&self) -> Result<FinCategory, InputError> {
        let mut b = CategoryBuilder::with_capacity(self.objects.len(), self.morphisms.len());
        let mut obj_index: HashMap<&str, usize> = HashMap::new();
        for (i, o) in self.objects.iter().enumerate() {
            if obj_index.insert(o.name(), b.object(o.name())).is_some() {
                return Err(InputError::new(format!("objects[{i}]"), format!("duplicate object '{}'", o.name())));
            }
        }
        let mut mor_index: HashMap<&str, usize> = HashMap::new();
        for (i, m) in self.morphisms.iter().enumerate() {
            let d = *obj_index.get(m.dom.as_str()).ok_or_else(|| {
                InputError::new(format!("morphisms[{i}].dom"), format!("unknown object '{}'", m.dom))
            })?;
            let c = *obj_index.get(m.cod.as_str()).ok_or_else(|| {
                InputError::new(format!("morphisms[{i}].cod"), format!("unknown object '{}'", m.cod))
            })?;
            if mor_index.insert(m.name.as_str(), b.morphism(m.name.as_str(), d, c)).is_some() {
                return Err(InputError::new(
                    format!("morphisms[{i}]"),
                    format!("duplicate morphism '{}'", m.name),
                ));
            }
        }
        let mut is_identity = vec![false; self.morphisms.len()];
        for (o, m) in &self.identities {
            let oi = *obj_index.get(o.as_str()).ok_or_else(|| {
                InputError::new(format!("identities[{o:?}]"), format!("unknown object '{o}'"))
            })?;
            let mi = *mor_index.get(m.as_str()).ok_or_else(|| {
                InputError::new(format!("identities[{o:?}]"), format!("unknown morphism '{m}'"))
            })?;
            if b.raw_dom(mi) != oi || b.raw_cod(mi) != oi {
                return Err(InputError::new(
                    format!("identities[{o:?}]"),
                    format!("'{m}' is not an endomorphism of '{o}'"),
                ));
            }
            if is_identity[mi] {
                return Err(InputError::new(format!("identities[{o:?}]"), format!("'{m}' is already an identity")));
            }
            is_identity[mi] = true;
            b.set_identity(oi, mi);
        }
        for (i, o) in self.objects.iter().enumerate() {
            if !self.identities.contains_key(o.name()) {
                return Err(InputError::new(format!("objects[{i}]"), format!("object '{}' has no identity", o.name())));
            }
        }
        let mut table: HashMap<(usize, usize), usize> = HashMap::new();
        for (i, [g, f, h]) in self.composition.iter().enumerate() {
            let look = |name: &String, slot: usize| {
                mor_index.get(name.as_str()).copied().ok_or_else(|| {
                    InputError::new(format!("composition[{i}][{slot}]"), format!("unknown morphism '{name}'"))
                })
            };
            let (gi, fi, hi) = (look(g, 0)?, look(f, 1)?, look(h, 2)?);
            if b.raw_dom(gi) != b.raw_cod(fi) {
                return Err(InputError::new(format!("composition[{i}]"), format!("'{g}' ∘ '{f}' is not composable")));
            }
            if is_identity[gi] || is_identity[fi] {
                return Err(InputError::new(
                    format!("composition[{i}]"),
                    format!("'{g}' ∘ '{f}' involves an identity; identity composites are implied"),
                ));
            }
            if table.insert((gi, fi), hi).is_some() {
                return Err(InputError::new(format!("composition[{i}]"), format!("duplicate entry for '{g}' ∘ '{f}'")));
            }
        }
        let built = b
            .build(|g, f| {
                if is_identity[g] {
                    Some(f)
                } else if is_identity[f] {
                    Some(g)
                } else {
                    table.get(&(g, f)).copied()
                }
            })
            .map_err(|e| InputError::new("composition", e.to_string()))?;
        Ok(built.category)
    }

    /// Builds and validates: the result is a category.
    pub fn to_category(&self) -> Result<FinCategory> {
        let c = self.to_category_unchecked()?;
        let violations = c.validate();
        if violations.is_empty() {
            Ok(c)
        } else {
            Err(Error::NotACategory(violations))
        }
    }
}

/// Parses and validates a category file.
pub fn load_category(text: &str) -> Result<FinCategory> {
    CategoryFile::parse(text)?.to_category()
}

/// Factorisation system file: either `E`/`M` or `E0`/`M0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct FsFile {
    #[serde(rename = "E", default, skip_serializing_if = "Option::is_none")]
    pub e: Option<Vec<String>>,
    #[serde(rename = "M", default, skip_serializing_if = "Option::is_none")]
    pub m: Option<Vec<String>>,
    #[serde(rename = "E0", default, skip_serializing_if = "Option::is_none")]
    pub e0: Option<Vec<String>>,
    #[serde(rename = "M0", default, skip_serializing_if = "Option::is_none")]
    pub m0: Option<Vec<String>>,
}

impl FsFile {
    pub fn parse(text: &str) -> Result<Self, InputError> {
        let f: FsFile = parse_json(text, "fs")?;
        match (&f.e, &f.m, &f.e0, &f.m0) {
            (Some(_), Some(_), None, None) | (None, None, Some(_), Some(_)) => Ok(f),
            _ => Err(InputError::new("fs", "expected exactly one of the key pairs E/M or E0/M0")),
        }
    }

    pub fn is_strict(&self) -> bool {
        self.e0.is_some()
    }

    /// The two classes, resolved against `c`.
    pub fn classes(&self, c: &FinCategory) -> Result<(Vec<Mor>, Vec<Mor>), InputError> {
        let (lk, rk, l, r) = match (&self.e, &self.m, &self.e0, &self.m0) {
            (Some(e), Some(m), _, _) => ("E", "M", e, m),
            (_, _, Some(e), Some(m)) => ("E0", "M0", e, m),
            _ => return Err(InputError::new("fs", "missing classes")),
        };
        Ok((resolve_names(c, l, lk)?, resolve_names(c, r, rk)?))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("fs serializes");
        s.push('\n');
        s
    }
}

pub(crate) fn resolve_names(c: &FinCategory, names: &[String], key: &str) -> Result<Vec<Mor>, InputError> {
    let mut seen = HashSet::new();
    names
        .iter()
        .enumerate()
        .map(|(i, n)| {
            let m = c
                .morphism_by_name(n)
                .ok_or_else(|| InputError::new(format!("{key}[{i}]"), format!("unknown morphism '{n}'")))?;
            if !seen.insert(m) {
                return Err(InputError::new(format!("{key}[{i}]"), format!("duplicate morphism '{n}'")));
            }
            Ok(m)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChoiceEntry {
    pub e: String,
    pub mid: String,
    pub m: String,
}

/// Choice file: morphism name to its chosen factorisation.
pub type ChoiceFile = BTreeMap<String, ChoiceEntry>;

pub fn parse_choice(text: &str) -> Result<ChoiceFile, InputError> {
    parse_json(text, "choice")
}

/// Algebra file. Names follow the generated names of the emitted `T X`
/// and `T² X` categories; `theta` omitted means identity components.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub monad: String,
    pub on_objects: BTreeMap<String, String>,
    pub on_morphisms: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta: Option<BTreeMap<String, String>>,
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<Self, InputError> {
        parse_json(text, "algebra")
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("algebra serializes");
        s.push('\n');
        s
    }
}
