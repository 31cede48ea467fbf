//! The free property of the arrow category: a functor `two -> A` and a
//! factorisation system on `A` extend to `P(two) -> A`, sending a square to
//! the chosen image of its diagonal.

use factoriad::arrowmonad::{arrow_category, canonical_fs};
use factoriad::factsys::{enumerate_fs, extend_functor, extend_functor_proper, preserves_fs, FactorisationChoice};
use factoriad::fincat::enumerate_functors;
use factoriad::fixtures;
use factoriad::freyd::freyd_completion;
use factoriad::guard::SizeGuard;

fn main() -> factoriad::Result<()> {
    let two = fixtures::two();
    let ptwo = arrow_category(&two);
    let frtwo = freyd_completion(&two);
    let (canonical, _) = canonical_fs(&ptwo);
    let a = fixtures::split();
    for fs in enumerate_fs(&a, &SizeGuard::default())? {
        let choice = FactorisationChoice::least(&fs)?;
        println!("E = {{{}}}{}", fs.e().names(&a).join(", "), if fs.is_proper() { " (proper)" } else { "" });
        for f in enumerate_functors(&two, &a) {
            let g = extend_functor(&ptwo, &f, &choice)?;
            let images: Vec<_> = two
                .morphisms()
                .map(|m| {
                    let o = ptwo.object_for(m);
                    format!("{}^ -> {}", two.morphism_name(m), a.object_name(g.ob(o)))
                })
                .collect();
            let through_p = if fs.is_proper() {
                let g2 = extend_functor_proper(&frtwo, &f, &choice)?;
                format!(", factors through Fr: {}", frtwo.projection().then(&g2) == g)
            } else {
                String::new()
            };
            println!(
                "  F(a) = {}: objects {}; preserves fs: {}, G . eta = F: {}{through_p}",
                a.morphism_name(f.mor(two.mor("a"))),
                images.join(", "),
                preserves_fs(&g, &canonical, &fs),
                ptwo.eta().then(&g) == f
            );
        }
    }
    Ok(())
}
