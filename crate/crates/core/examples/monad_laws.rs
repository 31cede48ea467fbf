//! Builds the arrow monad and the Freyd monad on each bundled fixture and
//! checks unit, multiplication, unit laws and associativity exhaustively.

use std::time::Instant;

use factoriad::arrowmonad::{check_monad_laws, MonadKind, Tower};
use factoriad::fixtures;
use factoriad::guard::SizeGuard;

fn main() -> factoriad::Result<()> {
    let guard = SizeGuard::default();
    for (name, x) in fixtures::all() {
        for kind in [MonadKind::P, MonadKind::Fr] {
            let start = Instant::now();
            let tower = Tower::new(kind, &x);
            let checks = check_monad_laws(kind, &x, &guard)?;
            println!(
                "{kind} on {name}: |TX| = {} morphisms, |T2X| = {} morphisms, laws {} ({:.2?})",
                tower.one().cat().morphism_count(),
                tower.two().cat().morphism_count(),
                if checks.passed() { "hold" } else { "FAIL" },
                start.elapsed()
            );
            for failure in checks.failures() {
                println!("  {}: {}", failure.law, failure.counterexample.as_deref().unwrap_or(""));
            }
        }
    }
    Ok(())
}
