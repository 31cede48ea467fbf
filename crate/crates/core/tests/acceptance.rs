//! The acceptance suite: one line per criterion, then a single assertion
//! that all of them hold. Run with `--nocapture` to see the lines.

mod common;

use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use common::{fixture_path, iso_tail, oracle_fs, oracle_strict_algebra_count, oracle_strict_fs, swap};
use factoriad::algcorr::*;
use factoriad::arrowmonad::{arrow_category, canonical_fs, check_cubical_equations, check_monad_laws, MonadKind, Tower};
use factoriad::factsys::*;
use factoriad::fincat::{enumerate_functors, enumerate_natural_transformations, FinCategory};
use factoriad::fixtures;
use factoriad::freyd::{check_freyd_properness, check_projection_monad_morphism, freyd_completion};
use factoriad::guard::SizeGuard;

type Outcome = Result<String, String>;

fn ensure(ok: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn failures(c: &factoriad::report::Checks) -> String {
    c.failures()
        .map(|r| format!("{}: {}", r.law, r.counterexample.as_deref().unwrap_or("")))
        .collect::<Vec<_>>()
        .join("; ")
}

fn monad_laws() -> Outcome {
    let g = SizeGuard::default();
    let mut slowest = Duration::ZERO;
    for (name, x) in fixtures::all() {
        let start = Instant::now();
        for kind in [MonadKind::P, MonadKind::Fr] {
            let c = check_monad_laws(kind, &x, &g).map_err(err)?;
            ensure(c.passed(), || format!("{kind} on {name}: {}", failures(&c)))?;
        }
        let took = start.elapsed();
        ensure(took < Duration::from_secs(10), || format!("{name} took {took:.2?}"))?;
        slowest = slowest.max(took);
    }
    Ok(format!("P and Fr on 5 fixtures, slowest fixture {slowest:.2?}"))
}

fn cubical() -> Outcome {
    let g = SizeGuard::default();
    let start = Instant::now();
    let mut n = 0;
    for (name, x) in fixtures::all() {
        let c = check_cubical_equations(&x, &g).map_err(err)?;
        ensure(c.passed(), || format!("{name}: {}", failures(&c)))?;
        n += c.len();
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(30), || format!("took {took:.2?}"))?;
    Ok(format!("{n} equations over 5 fixtures in {took:.2?}"))
}

fn projection() -> Outcome {
    let g = SizeGuard::default();
    for (name, x) in fixtures::all() {
        let c = check_projection_monad_morphism(&x, &g).map_err(err)?;
        ensure(c.passed(), || format!("{name}: {}", failures(&c)))?;
    }
    Ok("p . eta = eta' and p . mu = mu' . p2 on 5 fixtures".into())
}

fn freyd_properness() -> Outcome {
    for (name, x) in fixtures::all() {
        let c = check_freyd_properness(&x);
        ensure(c.passed(), || format!("{name}: {}", failures(&c)))?;
    }
    Ok("strict, proper, split-epi criterion and transfer on 5 fixtures".into())
}

fn strict_correspondence() -> Outcome {
    let g = SizeGuard::default();
    let mut counts = Vec::new();
    for (name, x) in [("two", fixtures::two()), ("idem", fixtures::idem())] {
        let p = Arc::new(Tower::new(MonadKind::P, &x));
        let systems = enumerate_strict_fs(&x, &g).map_err(err)?;
        let algebras = enumerate_strict_algebras(&p, &g).map_err(err)?;
        ensure(systems.len() == 2 && algebras.len() == 2, || {
            format!("{name}: {} strict fs, {} strict algebras", systems.len(), algebras.len())
        })?;
        ensure(oracle_strict_fs(&x).len() == 2 && oracle_strict_algebra_count(&p) == 2, || {
            format!("{name}: brute force disagrees")
        })?;
        let mut images = Vec::new();
        for s in &systems {
            let a = strict_fs_to_algebra(p.clone(), s).map_err(err)?;
            ensure(check_strict_algebra(&a).map_err(err)?.passed(), || format!("{name}: image is not an algebra"))?;
            ensure(strict_algebra_to_strict_fs(&a).map_err(err)? == *s, || format!("{name}: fs round trip"))?;
            ensure(algebras.iter().any(|b| *b == a), || format!("{name}: image not enumerated"))?;
            images.push(a);
        }
        ensure(images[0] != images[1], || format!("{name}: not injective"))?;
        for a in &algebras {
            let s = strict_algebra_to_strict_fs(a).map_err(err)?;
            ensure(strict_fs_to_algebra(p.clone(), &s).map_err(err)? == *a, || format!("{name}: algebra round trip"))?;
        }
        counts.push(format!("{name} 2/2"));
    }
    Ok(format!("bijection with both round trips the identity ({})", counts.join(", ")))
}

/// Every choice the suite tests for `fs`: up to eight, plus the greatest.
fn choices(fs: &FactorisationSystem) -> Result<Vec<FactorisationChoice>, String> {
    let mut all = FactorisationChoice::all(fs, 8).map_err(err)?;
    let greatest = FactorisationChoice::greatest(fs).map_err(err)?;
    if !all.contains(&greatest) {
        all.push(greatest);
    }
    Ok(all)
}

fn pseudo_correspondence(algebras_out: &mut Vec<(String, PseudoAlgebra)>) -> Outcome {
    let g = SizeGuard::default();
    let (mut systems, mut pairs) = (0, 0);
    let cats = [
        ("two", fixtures::two()),
        ("idem", fixtures::idem()),
        ("split", fixtures::split()),
        ("iso_tail", iso_tail()),
    ];
    for (name, x) in cats {
        let p = Arc::new(Tower::new(MonadKind::P, &x));
        for fs in enumerate_fs(&x, &g).map_err(err)? {
            systems += 1;
            let cs = choices(&fs)?;
            ensure(roundtrip_fs(&p, &fs, &cs).map_err(err)?, || format!("{name}: roundtrip_fs"))?;
            let algebras: Vec<PseudoAlgebra> =
                cs.iter().map(|c| fs_to_pseudo_algebra(p.clone(), c)).collect::<Result<_, _>>().map_err(err)?;
            for a in &algebras {
                let c = check_pseudo_algebra(a).map_err(err)?;
                ensure(c.passed(), || format!("{name}: {}", failures(&c)))?;
            }
            for a in &algebras {
                for b in &algebras {
                    let m = roundtrip_algebra(a, b).map_err(err)?;
                    let c = check_algebra_morphism(a, b, &m).map_err(err)?;
                    ensure(c.passed(), || format!("{name}: {}", failures(&c)))?;
                    ensure(m.phi.iter().all(|&k| x.is_iso(k)), || format!("{name}: phi not invertible"))?;
                    pairs += 1;
                }
            }
            algebras_out.extend(algebras.into_iter().map(|a| (name.to_string(), a)));
        }
    }
    Ok(format!("{systems} systems, {} algebras, {pairs} pairs of choices compared", algebras_out.len()))
}

fn proper_correspondence() -> Outcome {
    let g = SizeGuard::default();
    let mut summary = Vec::new();
    for (name, x) in [("two", fixtures::two()), ("idem", fixtures::idem()), ("split", fixtures::split())] {
        let r = proper_correspondence_check(&x, &g).map_err(err)?;
        ensure(r.checks.passed(), || format!("{name}: {}", failures(&r.checks)))?;
        ensure(r.proper == r.compatible, || format!("{name}: {} proper vs {} compatible", r.proper, r.compatible))?;
        summary.push(format!("{name} {}/{}", r.proper, r.systems));
        if name == "idem" {
            ensure(r.proper == 0 && oracle_fs(&x).len() == 2, || "idem should have no proper fs".into())?;
            let fr = Arc::new(Tower::new(MonadKind::Fr, &x));
            let strict_proper = enumerate_strict_fs(&x, &g).map_err(err)?.iter().filter(|s| s.is_proper()).count();
            let fr_algebras = enumerate_strict_algebras(&fr, &g).map_err(err)?.len();
            ensure(fr_algebras == strict_proper, || format!("{fr_algebras} Fr-algebras vs {strict_proper}"))?;
        }
    }
    Ok(format!("proper iff compatible (proper/total: {})", summary.join(", ")))
}

fn redundancy(algebras: &[(String, PseudoAlgebra)]) -> Outcome {
    for (name, a) in algebras {
        let c = check_pseudo_algebra(a).map_err(err)?;
        for law in &PSEUDO_CONDITIONS[2..] {
            ensure(c.get(law).is_some_and(|r| r.passed), || format!("{name}: {law}"))?;
        }
    }
    let g = SizeGuard::default();
    let mut morphisms = 0;
    let mut cells = 0;
    let cats = fixtures::all();
    for (sname, src) in &cats {
        for (tname, tgt) in &cats {
            let functors = enumerate_functors(src, tgt);
            if functors.len() > 200 {
                continue;
            }
            let (ps, pt) = (Arc::new(Tower::new(MonadKind::P, src)), Arc::new(Tower::new(MonadKind::P, tgt)));
            for fs in enumerate_fs(src, &g).map_err(err)? {
                let a = fs_to_pseudo_algebra(ps.clone(), &FactorisationChoice::least(&fs).map_err(err)?).map_err(err)?;
                for gs in enumerate_fs(tgt, &g).map_err(err)? {
                    let b = fs_to_pseudo_algebra(pt.clone(), &FactorisationChoice::least(&gs).map_err(err)?)
                        .map_err(err)?;
                    let ms: Vec<AlgebraMorphism> = functors
                        .iter()
                        .filter(|f| preserves_fs(f, &fs, &gs))
                        .map(|f| morphism_from_functor(&a, &b, f))
                        .collect::<Result<_, _>>()
                        .map_err(err)?;
                    for m in &ms {
                        let c = check_algebra_morphism(&a, &b, m).map_err(err)?;
                        ensure(c.passed(), || format!("{sname} → {tname}: {}", failures(&c)))?;
                        morphisms += 1;
                    }
                    if *sname == "two" && *tname == "split" {
                        for m in &ms {
                            for n in &ms {
                                for alpha in enumerate_natural_transformations(&m.f, &n.f) {
                                    if let Some(why) = check_two_cell(&a, &b, m, n, &alpha) {
                                        return Err(format!("two → split: {why}"));
                                    }
                                    cells += 1;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    ensure(cells > 0, || "no 2-cells were checked".into())?;
    Ok(format!(
        "{} algebras satisfy both unused conditions; {morphisms} morphisms, {cells} 2-cells on two → split",
        algebras.len()
    ))
}

fn free_extension() -> Outcome {
    let g = SizeGuard::default();
    let two = fixtures::two();
    let ptwo = arrow_category(&two);
    let frtwo = freyd_completion(&two);
    let (canonical, _) = canonical_fs(&ptwo);
    let mut n = 0;
    for (name, a) in fixtures::all() {
        for fs in enumerate_fs(&a, &g).map_err(err)? {
            let choice = FactorisationChoice::least(&fs).map_err(err)?;
            for f in enumerate_functors(&two, &a) {
                let ext = extend_functor(&ptwo, &f, &choice).map_err(err)?;
                ensure(ext.is_functor(), || format!("{name}: extension is not a functor"))?;
                ensure(preserves_fs(&ext, &canonical, &fs), || format!("{name}: fs not preserved"))?;
                ensure(ptwo.eta().then(&ext) == f, || format!("{name}: G . eta != F"))?;
                if fs.is_proper() {
                    let ext2 = extend_functor_proper(&frtwo, &f, &choice).map_err(err)?;
                    ensure(frtwo.projection().then(&ext2) == ext, || format!("{name}: no factorisation through p"))?;
                }
                n += 1;
            }
        }
    }
    Ok(format!("{n} extensions"))
}

fn oracle_equivalence() -> Outcome {
    let mut cats: Vec<(&str, Arc<FinCategory>)> = fixtures::all();
    cats.push(("iso_tail", iso_tail()));
    cats.push(("swap", swap()));
    let mut checked = Vec::new();
    for (name, c) in cats.into_iter().filter(|(_, c)| c.morphism_count() <= 7) {
        let found = enumerate_fs(&c, &SizeGuard::unlimited()).map_err(err)?;
        let found: std::collections::BTreeSet<_> = found
            .iter()
            .map(|f| (f.e().names(&c).into_iter().collect(), f.m().names(&c).into_iter().collect()))
            .collect();
        ensure(found == oracle_fs(&c), || format!("{name}: pruned enumeration differs"))?;
        checked.push(name);
    }
    let two = fixtures::two();
    let g = SizeGuard::default();
    let (n, s) = (enumerate_fs(&two, &g).map_err(err)?.len(), enumerate_strict_fs(&two, &g).map_err(err)?.len());
    ensure((n, s) == (2, 2), || format!("two: {n} fs, {s} strict fs"))?;
    Ok(format!("agrees on {}; two has 2 fs and 2 strict fs", checked.join(", ")))
}

fn determinism() -> Outcome {
    let dir = std::path::PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("acceptance");
    std::fs::create_dir_all(&dir).map_err(err)?;
    let fs_file = dir.join("fs.json");
    std::fs::write(&fs_file, r#"{"E": ["idA", "idB"], "M": ["e", "idA", "idB", "p", "s"]}"#).map_err(err)?;
    let alg_file = dir.join("alg.json");
    let split = fixture_path("split");
    let (fs_path, alg_path) = (fs_file.to_string_lossy().into_owned(), alg_file.to_string_lossy().into_owned());
    let run = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_factoriad")).args(args).env_remove("FACTORIAD_SIZE_GUARD").output()
    };
    run(&["fs-to-algebra", &split, &fs_path, "-o", &alg_path]).map_err(err)?;
    let commands: Vec<Vec<&str>> = vec![
        vec!["check", &split],
        vec!["arrow", &split],
        vec!["freyd", &split],
        vec!["monad-laws", &split, "--monad", "P"],
        vec!["monad-laws", &split, "--monad", "Fr"],
        vec!["cubical", &split],
        vec!["fs-check", &split, &fs_path],
        vec!["fs-enumerate", &split],
        vec!["fs-enumerate", &split, "--strict"],
        vec!["algebra-check", &split, &alg_path],
        vec!["algebra-to-fs", &split, &alg_path],
        vec!["fs-to-algebra", &split, &fs_path],
        vec!["roundtrip", &split],
        vec!["fr-compat", &split, &alg_path],
        vec!["projection-check", &split],
    ];
    for args in &commands {
        let (a, b) = (run(args).map_err(err)?, run(args).map_err(err)?);
        ensure(a.stdout == b.stdout && a.status.code() == b.status.code(), || format!("{args:?} differs"))?;
        let pretty: Vec<&str> = std::iter::once("--pretty").chain(args.iter().copied()).collect();
        let (a, b) = (run(&pretty).map_err(err)?, run(&pretty).map_err(err)?);
        ensure(a.stdout == b.stdout, || format!("{pretty:?} differs"))?;
    }
    Ok(format!("{} commands byte-identical across runs, JSON and text", commands.len()))
}

#[test]
fn acceptance() {
    let mut algebras = Vec::new();
    let results: Vec<(&str, Outcome)> = vec![
        ("monad laws", monad_laws()),
        ("cubical comonad", cubical()),
        ("projection is a monad morphism", projection()),
        ("Freyd properness", freyd_properness()),
        ("strict algebras = strict systems", strict_correspondence()),
        ("pseudo algebras = systems", pseudo_correspondence(&mut algebras)),
        ("proper systems = compatible algebras", proper_correspondence()),
        ("redundant conditions hold", redundancy(&algebras)),
        ("free extension", free_extension()),
        ("pruned enumeration = oracle", oracle_equivalence()),
        ("CLI determinism", determinism()),
    ];
    for (i, (name, outcome)) in results.iter().enumerate() {
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail}", i + 1),
            Err(why) => println!("criterion {:>2} FAIL {name}: {why}", i + 1),
        }
    }
    let failed: Vec<_> = results.iter().filter(|(_, o)| o.is_err()).map(|(n, _)| *n).collect();
    assert!(failed.is_empty(), "failed: {failed:?}");
}
