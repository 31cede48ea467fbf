//! The bundled fixture categories.
//!
//! * `two`: `0 → 1`, morphisms `id0`, `id1`, `a`.
//! * `three`: the chain `0 → 1 → 2` with `f`, `g` and `gf = g ∘ f`.
//! * `idem`: one object `•`, morphisms `1` and an idempotent `e`.
//! * `split`: `p: A → B` with section `s`, `p ∘ s = idB`, `e = s ∘ p`.
//! * `pair`: two parallel arrows `f, g: A → B`.

use std::sync::Arc;

use crate::fincat::FinCategory;
use crate::format::load_category;

pub const TWO: &str = include_str!("../fixtures/two.json");
pub const THREE: &str = include_str!("../fixtures/three.json");
pub const IDEM: &str = include_str!("../fixtures/idem.json");
pub const SPLIT: &str = include_str!("../fixtures/split.json");
pub const PAIR: &str = include_str!("../fixtures/pair.json");

pub const NAMES: [&str; 5] = ["two", "three", "idem", "split", "pair"];

pub fn source(name: &str) -> Option<&'static str> {
    Some(match name {
        "two" => TWO,
        "three" => THREE,
        "idem" => IDEM,
        "split" => SPLIT,
        "pair" => PAIR,
        _ => return None,
    })
}

/// Loads a bundled fixture by name.
pub fn by_name(name: &str) -> Option<Arc<FinCategory>> {
    source(name).map(|s| Arc::new(load_category(s).expect("bundled fixture is a category")))
}

pub fn two() -> Arc<FinCategory> {
    by_name("two").unwrap()
}

pub fn three() -> Arc<FinCategory> {
    by_name("three").unwrap()
}

pub fn idem() -> Arc<FinCategory> {
    by_name("idem").unwrap()
}

pub fn split() -> Arc<FinCategory> {
    by_name("split").unwrap()
}

pub fn pair() -> Arc<FinCategory> {
    by_name("pair").unwrap()
}

/// All five fixtures with their names.
pub fn all() -> Vec<(&'static str, Arc<FinCategory>)> {
    NAMES.iter().map(|&n| (n, by_name(n).unwrap())).collect()
}

/// The category with no objects.
pub fn empty() -> Arc<FinCategory> {
    Arc::new(FinCategory::empty())
}

/// One object, one morphism.
pub fn terminal() -> Arc<FinCategory> {
    let text = r#"{"objects":["*"],"morphisms":[{"name":"id","dom":"*","cod":"*"}],
        "identities":{"*":"id"},"composition":[]}"#;
    Arc::new(load_category(text).unwrap())
}
