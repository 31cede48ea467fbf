//! Loads a category from JSON, validates it, classifies its morphisms and
//! takes a quotient by a generated congruence.
//!
//!     cargo run --example categories [path/to/category.json]

use std::sync::Arc;

use factoriad::arrowmonad::arrow_category;
use factoriad::fincat::{enumerate_functors, Congruence};
use factoriad::fixtures;
use factoriad::format::load_category;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let x = match std::env::args().nth(1) {
        Some(path) => Arc::new(load_category(&std::fs::read_to_string(path)?)?),
        None => fixtures::split(),
    };
    println!("{} objects, {} morphisms, {} composable pairs", x.object_count(), x.morphism_count(), x.composable_pair_count());
    for f in x.morphisms() {
        let kind = match (x.is_iso(f), x.is_epi(f), x.is_mono(f), x.is_split_epi(f)) {
            (true, ..) => "iso",
            (_, true, true, _) => "epi and mono",
            (_, true, _, true) => "split epi",
            (_, true, _, _) => "epi",
            (_, _, true, _) => "mono",
            _ => "neither epi nor mono",
        };
        println!("  {}: {} -> {}  {kind}", x.morphism_name(f), x.object_name(x.dom(f)), x.object_name(x.cod(f)));
    }

    // on split, s . p := idA breaks associativity
    if let (Some(s), Some(p)) = (x.morphism_by_name("s"), x.morphism_by_name("p")) {
        let id = x.identity(x.dom(p));
        let bad = x.with_patched_composition(|g, f, h| if (g, f) == (s, p) { id } else { h });
        for v in bad.validate().iter().take(3) {
            println!("corrupted: {v}");
        }
    }

    // identify parallel squares of the arrow category with equal diagonals
    let px = arrow_category(&x);
    let c = px.cat();
    let mut pairs = Vec::new();
    for a in c.morphisms() {
        for &b in c.hom(c.dom(a), c.cod(a)) {
            if px.diagonal(a) == px.diagonal(b) {
                pairs.push((a, b));
            }
        }
    }
    let r = Congruence::generated_by(c, pairs)?;
    let (q, projection) = r.quotient()?;
    println!(
        "arrow category: {} squares; quotient by equal diagonals: {} classes (full: {}, laws hold: {})",
        c.morphism_count(),
        q.morphism_count(),
        projection.is_full(),
        q.validate().is_empty()
    );
    println!("functors two -> X: {}", enumerate_functors(&fixtures::two(), &x).len());
    Ok(())
}
