//! Every factorisation system, strict system and proper system on each
//! fixture, with the span of each strict system.

use factoriad::factsys::{enumerate_fs, enumerate_strict_fs, span};
use factoriad::fixtures;
use factoriad::guard::SizeGuard;

fn main() -> factoriad::Result<()> {
    let guard = SizeGuard::from_env();
    for (name, x) in fixtures::all() {
        let systems = enumerate_fs(&x, &guard)?;
        let strict = enumerate_strict_fs(&x, &guard)?;
        let proper = systems.iter().filter(|f| f.is_proper()).count();
        println!("{name}: {} fs ({proper} proper), {} strict fs", systems.len(), strict.len());
        for fs in &systems {
            println!("  E = {{{}}}  M = {{{}}}", fs.e().names(&x).join(", "), fs.m().names(&x).join(", "));
        }
        for s in &strict {
            let spanned = span(s)?;
            println!(
                "  strict E0 = {{{}}}  M0 = {{{}}}  spans E = {{{}}}",
                s.e0().names(&x).join(", "),
                s.m0().names(&x).join(", "),
                spanned.e().names(&x).join(", ")
            );
        }
    }
    Ok(())
}
