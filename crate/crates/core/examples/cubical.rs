//! Faces, degeneracy and connections of the arrow category, and the
//! equations between them, on every fixture.

use factoriad::arrowmonad::{check_cubical_equations, connection, face, Level, MonadKind, Sign, Tower, SIGNS};
use factoriad::fixtures;
use factoriad::guard::SizeGuard;

fn main() -> factoriad::Result<()> {
    let x = fixtures::two();
    let t = Tower::new(MonadKind::P, &x);
    let (Level::Arrow(px), Level::Arrow(ppx)) = (t.one(), t.two()) else { unreachable!() };
    let a_hat = px.object_for(x.mor("a"));
    for sign in SIGNS {
        let g = connection(px, ppx, sign);
        let sq = ppx.object_of(g.ob(a_hat));
        let (top, bottom) = px.square_of(sq);
        println!(
            "connection{} at a: ({}, {}) : {} -> {}",
            sign.symbol(),
            x.morphism_name(top),
            x.morphism_name(bottom),
            px.cat().object_name(px.cat().dom(sq)),
            px.cat().object_name(px.cat().cod(sq)),
        );
    }
    let sq = px.eta().mor(x.mor("a"));
    println!(
        "faces of the unit square: {} and {}",
        x.morphism_name(face(px, Sign::Minus).mor(sq)),
        x.morphism_name(face(px, Sign::Plus).mor(sq))
    );

    for (name, x) in fixtures::all() {
        let checks = check_cubical_equations(&x, &SizeGuard::default())?;
        println!("{name}: {} equations, {}", checks.len(), if checks.passed() { "all hold" } else { "FAIL" });
        for r in checks.failures() {
            println!("  {} [{}]: {}", r.law, r.anchor, r.counterexample.as_deref().unwrap_or(""));
        }
    }
    Ok(())
}
