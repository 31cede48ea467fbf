mod common;

use common::{iso_tail, preorder};
use factoriad::arrowmonad::{arrow_category, canonical_fs, multiplication, Level, MonadKind, Tower};
use factoriad::fincat::FinCategory;
use factoriad::fixtures;
use factoriad::freyd::*;
use factoriad::guard::SizeGuard;
use proptest::prelude::*;

/// Number of Freyd classes: squares grouped by (source, target, diagonal).
fn oracle_class_count(x: &FinCategory) -> usize {
    let mut n = 0;
    for f in x.morphisms() {
        for g in x.morphisms() {
            for d in x.morphisms() {
                if x.dom(d) != x.dom(f) || x.cod(d) != x.cod(g) {
                    continue;
                }
                let realised = x.morphisms().any(|top| {
                    x.dom(top) == x.dom(f)
                        && x.cod(top) == x.dom(g)
                        && x.compose(g, top) == d
                        && x.morphisms().any(|bottom| {
                            x.dom(bottom) == x.cod(f) && x.cod(bottom) == x.cod(g) && x.compose(bottom, f) == d
                        })
                });
                if realised {
                    n += 1;
                }
            }
        }
    }
    n
}

#[test]
fn freyd_sizes() {
    let fr = freyd_completion(&fixtures::two());
    assert_eq!((fr.cat().object_count(), fr.cat().morphism_count()), (3, 6));
    let split = fixtures::split();
    assert_eq!(freyd_completion(&split).cat().morphism_count(), 26);
    assert_eq!(arrow_category(&split).cat().morphism_count(), 39);
    for (name, x) in fixtures::all() {
        let fr = freyd_completion(&x);
        assert_eq!(fr.cat().morphism_count(), oracle_class_count(&x), "{name}");
        assert!(fr.cat().validate().is_empty(), "{name}");
        let p = fr.projection();
        assert!(p.is_functor() && p.is_full() && p.is_surjective_on_morphisms(), "{name}");
    }
}

#[test]
fn the_split_merge() {
    let x = fixtures::split();
    let px = arrow_category(&x);
    let r = freyd_congruence(&px);
    let (p, e, id_a, id_b) = (x.mor("p"), x.mor("e"), x.mor("idA"), x.mor("idB"));
    let first = px.square(p, p, e, id_b).unwrap();
    let second = px.square(p, p, id_a, id_b).unwrap();
    assert!(r.related(first, second));
    assert!(r.is_congruence());
    let two = fixtures::two();
    assert!(freyd_congruence(&arrow_category(&two)).is_discrete());
}

#[test]
fn freyd_unit_and_multiplication() {
    let x = fixtures::two();
    let fr = freyd_completion(&x);
    let k = fr.eta().mor(x.mor("a"));
    assert_eq!(fr.representative(k), (x.mor("a"), x.mor("a")));
    assert_eq!(fr.object_of(fr.cat().dom(k)), x.mor("id0"));
    assert_eq!(fr.object_of(fr.cat().cod(k)), x.mor("id1"));

    let split = fixtures::split();
    let t = Tower::new(MonadKind::Fr, &split);
    let (one, two) = (t.one(), t.two());
    let Level::Freyd(frx) = one else { unreachable!() };
    let k = frx.square(split.mor("p"), split.mor("p"), split.mor("e"), split.mor("idB")).unwrap();
    let mu = multiplication(one, two).unwrap();
    assert_eq!(one.object_of(mu.ob(two.object_for(k))), split.mor("p"));
    assert!(mu.is_functor());
}

#[test]
fn canonical_epis_and_monos() {
    let x = fixtures::two();
    let fr = freyd_completion(&x);
    let strict = fr.canonical_proper_strict_fs();
    let k = fr.square(x.mor("id0"), x.mor("a"), x.mor("id0"), x.mor("a")).unwrap();
    assert!(strict.e0().contains(k));
    for (name, x) in fixtures::all() {
        let fr = freyd_completion(&x);
        let strict = fr.canonical_proper_strict_fs();
        assert!(strict.is_strict_fs(), "{name}");
        assert!(strict.is_proper(), "{name}");
        for k in fr.cat().morphisms() {
            let (e, _, m) = fr.canonical_factorisation(k);
            assert_eq!(fr.cat().compose(m, e), k, "{name}");
        }
    }
}

#[test]
fn spanned_system_follows_the_section_criterion() {
    for (name, x) in fixtures::all() {
        let fr = freyd_completion(&x);
        let fs = fr.spanned_fs().unwrap();
        assert!(fs.is_fs() && fs.is_proper(), "{name}");
        for k in fr.cat().morphisms() {
            let split_epi = fr.cat().is_split_epi(k);
            // members of E are split epis in FrX
            if fs.e().contains(k) {
                assert!(split_epi || fr.cat().is_epi(k), "{name}");
            }
        }
    }
}

#[test]
fn properness_report_passes() {
    for (name, x) in fixtures::all() {
        let checks = check_freyd_properness(&x);
        assert!(checks.passed(), "{name}: {:?}", checks.failures().collect::<Vec<_>>());
    }
    assert!(check_freyd_properness(&iso_tail()).passed());
}

#[test]
fn projection_is_a_monad_morphism() {
    let g = SizeGuard::default();
    for (name, x) in fixtures::all() {
        let checks = check_projection_monad_morphism(&x, &g).unwrap();
        assert!(checks.passed(), "{name}: {:?}", checks.failures().collect::<Vec<_>>());
    }
}

#[test]
fn thin_bases_have_discrete_congruence() {
    let x = fixtures::three();
    let px = arrow_category(&x);
    assert!(freyd_congruence(&px).is_discrete());
    let (fs, _) = canonical_fs(&px);
    let fr = freyd_completion(&x);
    assert_eq!(fr.cat().morphism_count(), px.cat().morphism_count());
    assert_eq!(fs.e().len(), fr.spanned_fs().unwrap().e().len());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn properness_on_random_monoids(map in proptest::collection::vec(0usize..4, 1..5)) {
        let x = common::cyclic_monoid(&map);
        prop_assert!(check_freyd_properness(&x).passed());
        prop_assert_eq!(freyd_completion(&x).cat().morphism_count(), oracle_class_count(&x));
    }

    #[test]
    fn properness_on_random_preorders(n in 1usize..4, edges in proptest::collection::vec((0usize..4, 0usize..4), 0..4)) {
        let x = preorder(n, &edges);
        prop_assert!(check_freyd_properness(&x).passed());
        prop_assert!(freyd_congruence(&arrow_category(&x)).is_discrete());
    }
}
