mod common;

use std::sync::Arc;

use common::{cyclic_monoid, iso_tail, oracle_functor_count, oracle_is_epi, oracle_is_iso, oracle_is_mono, preorder, swap};
use factoriad::arrowmonad::arrow_category;
use factoriad::fincat::{enumerate_functors, Congruence, FinCategory, Functor, LawViolation, Mor, Ob};
use factoriad::fixtures;
use factoriad::format::{load_category, CategoryFile};
use factoriad::Error;
use proptest::prelude::*;

#[test]
fn fixtures_validate() {
    for (name, c) in fixtures::all() {
        assert!(c.validate().is_empty(), "{name}");
    }
    assert!(fixtures::empty().validate().is_empty());
    assert!(fixtures::terminal().validate().is_empty());
}

#[test]
fn fixture_sizes() {
    let sizes: Vec<_> = fixtures::all().iter().map(|(_, c)| (c.object_count(), c.morphism_count())).collect();
    assert_eq!(sizes, vec![(2, 3), (3, 6), (1, 2), (2, 5), (2, 4)]);
}

#[test]
fn corrupted_split_is_reported() {
    let x = fixtures::split();
    let (p, s) = (x.mor("p"), x.mor("s"));
    // s ∘ p := idA: then e ∘ (s ∘ p) = e but (e ∘ s) ∘ p = idA
    let bad = x.with_patched_composition(|g, f, h| if g == s && f == p { x.identity(x.ob("A")) } else { h });
    let v = bad.validate();
    assert!(v.iter().any(|v| v.law() == "associativity"), "{v:?}");
}

#[test]
fn corrupted_identity_composite_is_cited() {
    let x = fixtures::idem();
    let (one, e) = (x.mor("1"), x.mor("e"));
    let bad = x.with_patched_composition(|g, f, h| if g == one && f == e { one } else { h });
    let v = bad.validate();
    assert!(v.contains(&LawViolation::LeftIdentity { f: "e".into(), got: "1".into() }), "{v:?}");
    // e ∘ e := 1 is a legitimate change: the result is Z/2
    let z2 = x.with_patched_composition(|g, f, h| if g == e && f == e { one } else { h });
    assert!(z2.validate().is_empty());
}

#[test]
fn missing_composite_names_the_pair() {
    let text = fixtures::SPLIT.replace(r#"["p", "s", "idB"],"#, "");
    let file = CategoryFile::parse(&text).unwrap();
    match file.to_category_unchecked() {
        Err(e) => assert!(e.message.contains("incomplete") && e.message.contains("(p, s)"), "{e}"),
        Ok(_) => panic!("expected an incomplete table"),
    }
}

#[test]
fn not_a_category_is_an_error() {
    let text = r#"{
      "objects": ["*"],
      "morphisms": [{"name": "1", "dom": "*", "cod": "*"}, {"name": "a", "dom": "*", "cod": "*"}, {"name": "b", "dom": "*", "cod": "*"}],
      "identities": {"*": "1"},
      "composition": [["a", "a", "b"], ["a", "b", "a"], ["b", "a", "b"], ["b", "b", "b"]]
    }"#;
    match load_category(text) {
        Err(Error::NotACategory(v)) => assert!(v.iter().any(|v| v.law() == "associativity")),
        other => panic!("{other:?}"),
    }
}

#[test]
fn parse_errors_are_located() {
    let cases = [
        (r#"{"objects": ["A", "A"], "morphisms": [], "identities": {}, "composition": []}"#, "objects[1]"),
        (
            r#"{"objects": ["A"], "morphisms": [{"name": "f", "dom": "A", "cod": "Z"}], "identities": {}, "composition": []}"#,
            "morphisms[0].cod",
        ),
        (
            r#"{"objects": ["A"], "morphisms": [{"name": "1", "dom": "A", "cod": "A"}], "identities": {"A": "1"}, "composition": [["1", "1", "1"]]}"#,
            "composition[0]",
        ),
        (
            r#"{"objects": ["A"], "morphisms": [{"name": "1", "dom": "A", "cod": "A"}], "identities": {"A": "nope"}, "composition": []}"#,
            "identities",
        ),
        (r#"{"objects": ["A"], "morphisms": [], "identities": {}, "composition": []}"#, "objects[0]"),
        ("{\"objects\": [\"A\",\n  }", "line 2"),
        (r#"{"objects": [], "morphisms": [], "identities": {}, "composition": [], "extra": 1}"#, "line 1"),
    ];
    for (text, location) in cases {
        match load_category(text) {
            Err(Error::Input(e)) => assert!(e.location.contains(location), "{} vs {location}", e.location),
            other => panic!("{location}: {other:?}"),
        }
    }
}

#[test]
fn category_files_round_trip() {
    for (name, c) in fixtures::all() {
        let text = CategoryFile::from_category(&c).to_json();
        assert_eq!(load_category(&text).unwrap(), *c, "{name}");
        assert_eq!(CategoryFile::from_category(&c).to_json(), text, "{name}");
    }
    let p = arrow_category(&fixtures::split());
    let text = p.to_file().to_json();
    let back = load_category(&text).unwrap();
    assert_eq!(back.morphism_count(), p.cat().morphism_count());
}

#[test]
fn epi_mono_iso_examples() {
    let two = fixtures::two();
    let a = two.mor("a");
    assert!(two.is_epi(a) && two.is_mono(a) && !two.is_iso(a));
    let split = fixtures::split();
    let p = split.mor("p");
    assert!(split.is_epi(p) && !split.is_mono(p) && split.is_split_epi(p));
    let idem = fixtures::idem();
    let e = idem.mor("e");
    assert!(!idem.is_epi(e) && !idem.is_mono(e));
}

#[test]
fn predicates_match_the_oracles() {
    let mut cats = fixtures::all();
    cats.push(("iso_tail", iso_tail()));
    cats.push(("swap", swap()));
    for (name, c) in cats {
        for f in c.morphisms() {
            assert_eq!(c.is_epi(f), oracle_is_epi(&c, f), "{name}");
            assert_eq!(c.is_mono(f), oracle_is_mono(&c, f), "{name}");
            assert_eq!(c.is_iso(f), oracle_is_iso(&c, f), "{name}");
            if c.is_iso(f) {
                assert!(c.is_epi(f) && c.is_mono(f));
            }
        }
    }
}

#[test]
fn orthogonality_examples() {
    let two = fixtures::two();
    assert!(two.orthogonal(two.mor("id0"), two.mor("a")));
    assert!(!two.orthogonal(two.mor("a"), two.mor("a")));
    let idem = fixtures::idem();
    assert!(!idem.orthogonal(idem.mor("e"), idem.mor("e")));
    for (name, c) in fixtures::all() {
        for f in c.morphisms() {
            for o in c.objects() {
                assert!(c.orthogonal(c.identity(o), f), "{name}");
                assert!(c.orthogonal(f, c.identity(o)), "{name}");
            }
        }
    }
}

#[test]
fn functor_examples() {
    let split = fixtures::split();
    assert!(Functor::identity(&split).is_functor());
    let (two, idem) = (fixtures::two(), fixtures::idem());
    let f = Functor::new(two.clone(), idem.clone(), vec![Ob(0), Ob(0)], vec![idem.mor("e"), idem.mor("1"), idem.mor("1")]);
    assert_eq!(two.morphism_name(Mor(0)), "a");
    assert!(f.is_functor());
    let swap = Functor::new(two.clone(), two.clone(), vec![Ob(1), Ob(0)], vec![two.mor("a"), two.mor("id1"), two.mor("id0")]);
    assert!(!swap.is_functor());
}

#[test]
fn functor_counts() {
    let (two, idem) = (fixtures::two(), fixtures::idem());
    assert_eq!(enumerate_functors(&two, &two).len(), 3);
    assert_eq!(enumerate_functors(&two, &idem).len(), 2);
    let cats = fixtures::all();
    for (a, c) in &cats {
        for (b, d) in &cats {
            if c.morphism_count() * d.morphism_count() > 30 {
                continue;
            }
            let found = enumerate_functors(c, d);
            assert_eq!(found.len(), oracle_functor_count(c, d), "{a} → {b}");
            assert!(found.iter().all(Functor::is_functor));
        }
    }
}

#[test]
fn hom_sets() {
    let two = fixtures::two();
    assert!(two.hom(two.ob("1"), two.ob("0")).is_empty());
    assert_eq!(two.hom(two.ob("0"), two.ob("1")), &[two.mor("a")]);
    let pair = fixtures::pair();
    let names: Vec<_> = pair.hom(pair.ob("A"), pair.ob("B")).iter().map(|&m| pair.morphism_name(m)).collect();
    assert_eq!(names, ["f", "g"]);
}

#[test]
fn congruences() {
    let split = fixtures::split();
    let discrete = Congruence::discrete(&split);
    assert!(discrete.is_congruence());
    let (q, proj) = discrete.quotient().unwrap();
    assert_eq!(q.morphism_count(), split.morphism_count());
    assert!(proj.is_functor() && proj.is_full() && proj.is_surjective_on_morphisms());

    let two = fixtures::two();
    assert!(Congruence::from_classes(&two, vec![vec![two.mor("a"), two.mor("id0")], vec![two.mor("id1")]])
        .map_or(true, |c| !c.is_congruence()));

    let p = arrow_category(&split);
    let c = p.cat();
    let po = Ob(p.object_for(split.mor("p")).0);
    let first = p.square(split.mor("p"), split.mor("p"), split.mor("e"), split.mor("idB")).unwrap();
    let second = p.square(split.mor("p"), split.mor("p"), split.mor("idA"), split.mor("idB")).unwrap();
    assert_eq!(c.dom(first), po);
    let r = Congruence::generated_by(c, [(first, second)]).unwrap();
    assert!(r.is_congruence());
    let (q, proj) = r.quotient().unwrap();
    assert!(q.morphism_count() < c.morphism_count());
    assert!(q.validate().is_empty());
    assert!(proj.is_functor() && proj.is_full());
}

#[test]
fn non_parallel_merges_are_rejected() {
    let two = fixtures::two();
    assert!(Congruence::generated_by(&two, [(two.mor("a"), two.mor("id0"))]).is_err());
}

#[test]
fn degenerate_categories_are_accepted() {
    let empty = fixtures::empty();
    let one = fixtures::terminal();
    assert_eq!(enumerate_functors(&empty, &one).len(), 1);
    assert_eq!(enumerate_functors(&one, &empty).len(), 0);
    let (q, _) = Congruence::discrete(&one).quotient().unwrap();
    assert_eq!(q.morphism_count(), 1);
    assert_eq!(arrow_category(&empty).cat().object_count(), 0);
}

fn any_small_category() -> impl Strategy<Value = Arc<FinCategory>> {
    prop_oneof![
        (1usize..4, proptest::collection::vec((0usize..4, 0usize..4), 0..5)).prop_map(|(n, e)| preorder(n, &e)),
        proptest::collection::vec(0usize..4, 1..5).prop_map(|m| cyclic_monoid(&m)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generated_categories_validate_and_round_trip(c in any_small_category()) {
        prop_assert!(c.validate().is_empty());
        let text = CategoryFile::from_category(&c).to_json();
        prop_assert_eq!(&load_category(&text).unwrap(), &*c);
    }

    #[test]
    fn predicates_agree_with_oracles(c in any_small_category()) {
        for f in c.morphisms() {
            prop_assert_eq!(c.is_epi(f), oracle_is_epi(&c, f));
            prop_assert_eq!(c.is_mono(f), oracle_is_mono(&c, f));
            prop_assert_eq!(c.is_iso(f), oracle_is_iso(&c, f));
        }
    }

    #[test]
    fn functor_enumeration_agrees_with_brute_force(c in any_small_category(), d in any_small_category()) {
        prop_assume!(c.morphism_count() <= 4 && d.morphism_count() <= 6);
        prop_assert_eq!(enumerate_functors(&c, &d).len(), oracle_functor_count(&c, &d));
    }

    #[test]
    fn discrete_quotient_is_a_copy(c in any_small_category()) {
        let (q, proj) = Congruence::discrete(&c).quotient().unwrap();
        prop_assert_eq!(q.morphism_count(), c.morphism_count());
        prop_assert!(proj.is_functor());
    }
}
