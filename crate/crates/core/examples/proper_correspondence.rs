//! Proper factorisation systems are the algebras compatible with the Freyd
//! congruence: on each fixture, count both sides and show why an improper
//! system's algebra does not descend to the Freyd completion.

use std::sync::Arc;

use factoriad::algcorr::{fs_to_pseudo_algebra, proper_correspondence_check, r_compat_failure};
use factoriad::arrowmonad::{MonadKind, Tower};
use factoriad::factsys::{FactorisationChoice, FactorisationSystem};
use factoriad::fixtures;
use factoriad::guard::SizeGuard;

fn main() -> factoriad::Result<()> {
    for (name, x) in fixtures::all() {
        let r = proper_correspondence_check(&x, &SizeGuard::default())?;
        println!(
            "{name}: {} systems, {} proper, {} compatible; checks {}",
            r.systems,
            r.proper,
            r.compatible,
            if r.checks.passed() { "pass" } else { "FAIL" }
        );
    }
    let x = fixtures::split();
    let p = Arc::new(Tower::new(MonadKind::P, &x));
    let fs = FactorisationSystem::isos_all(&x);
    let a = fs_to_pseudo_algebra(p.clone(), &FactorisationChoice::least(&fs)?)?;
    if let Some(why) = r_compat_failure(&p, a.t())? {
        println!("split, E = isos: {why}");
    }
    Ok(())
}
