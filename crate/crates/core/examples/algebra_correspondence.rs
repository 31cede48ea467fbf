//! Factorisation systems and pseudo algebras for the arrow monad: build the
//! algebra of a system and a choice of factorisations, check it, read the
//! system back off, and compare algebras from different choices.

use std::sync::Arc;

use factoriad::algcorr::{
    algebra_to_fs, check_algebra_morphism, check_pseudo_algebra, enumerate_strict_algebras, fs_to_pseudo_algebra,
    roundtrip_algebra, strict_algebra_to_strict_fs, tau_transforms,
};
use factoriad::arrowmonad::{MonadKind, Tower};
use factoriad::factsys::{FactorisationChoice, FactorisationSystem};
use factoriad::fixtures;
use factoriad::format::load_category;
use factoriad::guard::SizeGuard;

/// `0 -> A ≅ B`: `f` factors through `A` or through `B`.
const ISO_TAIL: &str = r#"{
  "objects": ["0", "A", "B"],
  "morphisms": [
    {"name": "id0", "dom": "0", "cod": "0"}, {"name": "idA", "dom": "A", "cod": "A"},
    {"name": "idB", "dom": "B", "cod": "B"}, {"name": "f", "dom": "0", "cod": "A"},
    {"name": "g", "dom": "0", "cod": "B"}, {"name": "i", "dom": "A", "cod": "B"},
    {"name": "j", "dom": "B", "cod": "A"}
  ],
  "identities": {"0": "id0", "A": "idA", "B": "idB"},
  "composition": [["i", "f", "g"], ["j", "g", "f"], ["j", "i", "idA"], ["i", "j", "idB"]]
}"#;

fn main() -> factoriad::Result<()> {
    let x = Arc::new(load_category(ISO_TAIL)?);
    let p = Arc::new(Tower::new(MonadKind::P, &x));
    let fs = FactorisationSystem::all_isos(&x);
    let least = fs_to_pseudo_algebra(p.clone(), &FactorisationChoice::least(&fs)?)?;
    let greatest = fs_to_pseudo_algebra(p.clone(), &FactorisationChoice::greatest(&fs)?)?;
    for (label, a) in [("least", &least), ("greatest", &greatest)] {
        let checks = check_pseudo_algebra(a)?;
        let taus = tau_transforms(&p, a.t());
        let f = x.mor("f");
        println!(
            "{label} choice: strict {}, conditions {}; f = {} . {}",
            a.is_strict(),
            if checks.passed() { "hold" } else { "FAIL" },
            x.morphism_name(taus.plus[f.index()]),
            x.morphism_name(taus.minus[f.index()]),
        );
        println!("  back to E = {{{}}}", algebra_to_fs(&p, a.t())?.e().names(&x).join(", "));
    }
    let m = roundtrip_algebra(&least, &greatest)?;
    let phi: Vec<_> = m.phi.iter().map(|&k| x.morphism_name(k)).collect();
    println!(
        "comparison least -> greatest: phi = [{}], morphism laws {}",
        phi.join(", "),
        if check_algebra_morphism(&least, &greatest, &m)?.passed() { "hold" } else { "FAIL" }
    );

    // strict algebras are exactly the strict systems
    for (name, x) in [("two", fixtures::two()), ("idem", fixtures::idem())] {
        let p = Arc::new(Tower::new(MonadKind::P, &x));
        for a in enumerate_strict_algebras(&p, &SizeGuard::default())? {
            let s = strict_algebra_to_strict_fs(&a)?;
            println!("{name}: strict algebra with E0 = {{{}}}", s.e0().names(&x).join(", "));
        }
    }
    Ok(())
}
