//! Independent oracles and extra categories for the integration tests.
//!
//! The oracles only use the raw tables of a category (`dom`, `cod`,
//! `compose`, `morphisms`), never the library's own searches or predicates.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use factoriad::arrowmonad::Tower;
use factoriad::fincat::{CategoryBuilder, FinCategory, Functor, Mor, Ob};
use factoriad::format::load_category;

pub fn fixture_path(name: &str) -> String {
    format!("{}/fixtures/{name}.json", env!("CARGO_MANIFEST_DIR"))
}

/// `0 → A ≅ B`: `f: 0 → A`, `g = i f: 0 → B`, `i: A → B` inverse to `j`.
/// Factorisations through `A` and `B` differ by the iso, so choices differ.
pub const ISO_TAIL: &str = r#"{
  "objects": ["0", "A", "B"],
  "morphisms": [
    {"name": "id0", "dom": "0", "cod": "0"},
    {"name": "idA", "dom": "A", "cod": "A"},
    {"name": "idB", "dom": "B", "cod": "B"},
    {"name": "f", "dom": "0", "cod": "A"},
    {"name": "g", "dom": "0", "cod": "B"},
    {"name": "i", "dom": "A", "cod": "B"},
    {"name": "j", "dom": "B", "cod": "A"}
  ],
  "identities": {"0": "id0", "A": "idA", "B": "idB"},
  "composition": [["i", "f", "g"], ["j", "g", "f"], ["j", "i", "idA"], ["i", "j", "idB"]]
}"#;

/// The group of order two on one object.
pub const SWAP: &str = r#"{
  "objects": ["*"],
  "morphisms": [{"name": "id", "dom": "*", "cod": "*"}, {"name": "s", "dom": "*", "cod": "*"}],
  "identities": {"*": "id"},
  "composition": [["s", "s", "id"]]
}"#;

pub fn iso_tail() -> Arc<FinCategory> {
    Arc::new(load_category(ISO_TAIL).unwrap())
}

pub fn swap() -> Arc<FinCategory> {
    Arc::new(load_category(SWAP).unwrap())
}

/// The preorder generated by `edges` on `n` objects (reflexive, transitive
/// closure), as a thin category.
pub fn preorder(n: usize, edges: &[(usize, usize)]) -> Arc<FinCategory> {
    let mut le = vec![vec![false; n]; n];
    for i in 0..n {
        le[i][i] = true;
    }
    for &(a, b) in edges {
        le[a % n][b % n] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if le[i][k] && le[k][j] {
                    le[i][j] = true;
                }
            }
        }
    }
    let mut b = CategoryBuilder::new();
    let objs: Vec<usize> = (0..n).map(|i| b.object(format!("o{i}"))).collect();
    let mut index = vec![vec![None; n]; n];
    for i in 0..n {
        for j in 0..n {
            if le[i][j] {
                let m = b.morphism(format!("m{i}{j}"), objs[i], objs[j]);
                index[i][j] = Some(m);
                if i == j {
                    b.set_identity(objs[i], m);
                }
            }
        }
    }
    let mut ends = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if le[i][j] {
                ends.push((i, j));
            }
        }
    }
    let built = b
        .build(|g, f| {
            let (_, c) = ends[g];
            let (a, _) = ends[f];
            index[a][c]
        })
        .unwrap();
    Arc::new(built.category)
}

/// The monoid of self-maps of `{0..n}` generated by `map`, on one object.
pub fn cyclic_monoid(map: &[usize]) -> Arc<FinCategory> {
    let n = map.len();
    let id: Vec<usize> = (0..n).collect();
    let gen: Vec<usize> = map.iter().map(|&v| v % n).collect();
    let mut elements = vec![id.clone()];
    let mut cur = gen.clone();
    while !elements.contains(&cur) {
        elements.push(cur.clone());
        cur = cur.iter().map(|&v| gen[v]).collect();
    }
    let mut b = CategoryBuilder::new();
    let o = b.object("*");
    for (k, _) in elements.iter().enumerate() {
        let m = b.morphism(format!("t{k}"), o, o);
        if k == 0 {
            b.set_identity(o, m);
        }
    }
    let built = b
        .build(|g, f| {
            // g after f
            let h: Vec<usize> = (0..n).map(|x| elements[g][elements[f][x]]).collect();
            elements.iter().position(|e| *e == h)
        })
        .unwrap();
    Arc::new(built.category)
}

pub fn oracle_is_iso(c: &FinCategory, f: Mor) -> bool {
    c.morphisms().any(|g| {
        c.dom(g) == c.cod(f)
            && c.cod(g) == c.dom(f)
            && c.compose(g, f) == c.identity(c.dom(f))
            && c.compose(f, g) == c.identity(c.cod(f))
    })
}

pub fn oracle_is_epi(c: &FinCategory, f: Mor) -> bool {
    for g in c.morphisms() {
        for h in c.morphisms() {
            if g != h
                && c.dom(g) == c.cod(f)
                && c.dom(h) == c.cod(f)
                && c.cod(g) == c.cod(h)
                && c.compose(g, f) == c.compose(h, f)
            {
                return false;
            }
        }
    }
    true
}

pub fn oracle_is_mono(c: &FinCategory, f: Mor) -> bool {
    for g in c.morphisms() {
        for h in c.morphisms() {
            if g != h
                && c.cod(g) == c.dom(f)
                && c.cod(h) == c.dom(f)
                && c.dom(g) == c.dom(h)
                && c.compose(f, g) == c.compose(f, h)
            {
                return false;
            }
        }
    }
    true
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<bool>> {
    (0u64..1 << n).map(move |bits| (0..n).map(|i| bits >> i & 1 == 1).collect())
}

fn closed(c: &FinCategory, s: &[bool]) -> bool {
    c.morphisms().all(|f| {
        c.morphisms()
            .all(|g| !(s[f.index()] && s[g.index()] && c.dom(g) == c.cod(f)) || s[c.compose(g, f).index()])
    })
}

fn names(c: &FinCategory, s: &[bool]) -> BTreeSet<String> {
    c.morphisms().filter(|m| s[m.index()]).map(|m| c.morphism_name(m).to_string()).collect()
}

/// Every `(E, M)` over the power set satisfying the fs axioms literally:
/// isos in both, closure, existence of factorisations and unique fill-ins.
pub fn oracle_fs(c: &FinCategory) -> BTreeSet<(BTreeSet<String>, BTreeSet<String>)> {
    let n = c.morphism_count();
    let isos: Vec<bool> = c.morphisms().map(|f| oracle_is_iso(c, f)).collect();
    let candidates: Vec<Vec<bool>> = subsets(n)
        .filter(|s| (0..n).all(|i| !isos[i] || s[i]) && closed(c, s))
        .collect();
    let mut out = BTreeSet::new();
    for e in &candidates {
        for m in &candidates {
            let factors = c.morphisms().all(|f| {
                c.morphisms().any(|ee| {
                    e[ee.index()]
                        && c.dom(ee) == c.dom(f)
                        && c.morphisms().any(|mm| {
                            m[mm.index()] && c.dom(mm) == c.cod(ee) && c.compose(mm, ee) == f
                        })
                })
            });
            if !factors {
                continue;
            }
            let orthogonal = c.morphisms().filter(|x| e[x.index()]).all(|ee| {
                c.morphisms().filter(|x| m[x.index()]).all(|mm| unique_fill_ins(c, ee, mm))
            });
            if orthogonal {
                out.insert((names(c, e), names(c, m)));
            }
        }
    }
    out
}

fn unique_fill_ins(c: &FinCategory, e: Mor, m: Mor) -> bool {
    for u in c.morphisms() {
        if c.dom(u) != c.dom(e) || c.cod(u) != c.dom(m) {
            continue;
        }
        for v in c.morphisms() {
            if c.dom(v) != c.cod(e) || c.cod(v) != c.cod(m) || c.compose(m, u) != c.compose(v, e) {
                continue;
            }
            let fills = c
                .morphisms()
                .filter(|&w| {
                    c.dom(w) == c.cod(e)
                        && c.cod(w) == c.dom(m)
                        && c.compose(w, e) == u
                        && c.compose(m, w) == v
                })
                .count();
            if fills != 1 {
                return false;
            }
        }
    }
    true
}

/// Every `(E₀, M₀)` of subcategories with exactly one factorisation of
/// each morphism.
pub fn oracle_strict_fs(c: &FinCategory) -> BTreeSet<(BTreeSet<String>, BTreeSet<String>)> {
    let n = c.morphism_count();
    let ids: Vec<bool> = c.morphisms().map(|f| c.objects().any(|o| c.identity(o) == f)).collect();
    let candidates: Vec<Vec<bool>> = subsets(n)
        .filter(|s| (0..n).all(|i| !ids[i] || s[i]) && closed(c, s))
        .collect();
    let mut out = BTreeSet::new();
    for e in &candidates {
        for m in &candidates {
            let unique = c.morphisms().all(|f| {
                let mut count = 0;
                for ee in c.morphisms().filter(|x| e[x.index()] && c.dom(*x) == c.dom(f)) {
                    for mm in c.morphisms().filter(|x| m[x.index()] && c.dom(*x) == c.cod(ee)) {
                        if c.compose(mm, ee) == f {
                            count += 1;
                        }
                    }
                }
                count == 1
            });
            if unique {
                out.insert((names(c, e), names(c, m)));
            }
        }
    }
    out
}

/// Every functor `C → D` by trying every pair of total maps, with optional
/// pinned values. Exponential; for tiny categories only.
pub fn oracle_functors(
    c: &Arc<FinCategory>,
    d: &Arc<FinCategory>,
    pinned_objects: &[Option<Ob>],
    pinned_morphisms: &[Option<Mor>],
) -> Vec<Functor> {
    let (no, nm) = (c.object_count(), c.morphism_count());
    let (do_, dm) = (d.object_count(), d.morphism_count());
    let mut out = Vec::new();
    let mut obs = vec![0usize; no];
    loop {
        let ob_ok = (0..no).all(|i| pinned_objects.get(i).copied().flatten().map_or(true, |p| p.index() == obs[i]));
        if ob_ok {
            let mut mors = vec![0usize; nm];
            loop {
                let pins_ok = (0..nm)
                    .all(|i| pinned_morphisms.get(i).copied().flatten().map_or(true, |p| p.index() == mors[i]));
                if pins_ok && is_functor_table(c, d, &obs, &mors) {
                    out.push(Functor::new(
                        c.clone(),
                        d.clone(),
                        obs.iter().map(|&i| Ob(i as u32)).collect(),
                        mors.iter().map(|&i| Mor(i as u32)).collect(),
                    ));
                }
                if !odometer(&mut mors, dm) {
                    break;
                }
            }
        }
        if !odometer(&mut obs, do_) {
            break;
        }
    }
    out
}

fn odometer(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

fn is_functor_table(c: &FinCategory, d: &FinCategory, obs: &[usize], mors: &[usize]) -> bool {
    let fo = |o: Ob| Ob(obs[o.index()] as u32);
    let fm = |m: Mor| Mor(mors[m.index()] as u32);
    c.morphisms().all(|m| d.dom(fm(m)) == fo(c.dom(m)) && d.cod(fm(m)) == fo(c.cod(m)))
        && c.objects().all(|o| fm(c.identity(o)) == d.identity(fo(o)))
        && c.morphisms().all(|f| {
            c.outgoing(c.cod(f)).iter().all(|&g| fm(c.compose(g, f)) == d.compose(fm(g), fm(f)))
        })
}

/// Number of functors `C → D`.
pub fn oracle_functor_count(c: &Arc<FinCategory>, d: &Arc<FinCategory>) -> usize {
    oracle_functors(c, d, &[], &[]).len()
}

/// Every functor `TX → X` restricting to the identity along the unit.
pub fn unit_pinned_functors(t: &Tower) -> Vec<Functor> {
    let x = t.base();
    let eta = t.unit();
    let tx = t.one().cat();
    let mut pin_o = vec![None; tx.object_count()];
    let mut pin_m = vec![None; tx.morphism_count()];
    for o in x.objects() {
        pin_o[eta.ob(o).index()] = Some(o);
    }
    for f in x.morphisms() {
        pin_m[eta.mor(f).index()] = Some(f);
    }
    oracle_functors(tx, x, &pin_o, &pin_m)
}

/// Strict algebras: unit-pinned functors `s` with `s ∘ Ts = s ∘ μ`.
pub fn oracle_strict_algebra_count(t: &Tower) -> usize {
    let mu = t.mult().unwrap();
    unit_pinned_functors(t)
        .into_iter()
        .filter(|s| {
            let ts = t.two().lift(s, t.one());
            ts.then(s) == mu.then(s)
        })
        .count()
}
