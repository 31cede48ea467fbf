//! The Freyd completion of `split`: the collapsed squares, the canonical
//! proper factorisation, and the projection from the arrow category as a
//! morphism of monads.

use factoriad::arrowmonad::arrow_category;
use factoriad::fixtures;
use factoriad::freyd::{check_freyd_properness, check_projection_monad_morphism, freyd_completion};
use factoriad::guard::SizeGuard;

fn main() -> factoriad::Result<()> {
    let x = fixtures::split();
    let px = arrow_category(&x);
    let fr = freyd_completion(&x);
    println!("P(split): {} squares, Fr(split): {} classes", px.cat().morphism_count(), fr.cat().morphism_count());
    for k in fr.cat().morphisms() {
        let reps = fr.representatives(k);
        if reps.len() > 1 {
            let names: Vec<_> = reps.iter().map(|&m| px.cat().morphism_name(m)).collect();
            println!("  class of diagonal {}: {}", x.morphism_name(fr.diagonal(k)), names.join(" ~ "));
        }
    }

    let strict = fr.canonical_proper_strict_fs();
    let fs = fr.spanned_fs()?;
    println!(
        "canonical epis {}, canonical monos {}; spanned E {}, M {}",
        strict.e0().len(),
        strict.m0().len(),
        fs.e().len(),
        fs.m().len()
    );
    let k = fr.eta().mor(x.mor("p"));
    let (e, mid, m) = fr.canonical_factorisation(k);
    println!(
        "[p, p] = {} . {} through {}",
        fr.cat().morphism_name(m),
        fr.cat().morphism_name(e),
        fr.cat().object_name(mid)
    );

    for (name, x) in fixtures::all() {
        let mut checks = check_freyd_properness(&x);
        checks.extend(check_projection_monad_morphism(&x, &SizeGuard::default())?);
        println!("{name}: {} checks, {}", checks.len(), if checks.passed() { "pass" } else { "FAIL" });
    }
    Ok(())
}
