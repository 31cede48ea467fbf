//! Exhaustive enumeration of factorisation systems.
//!
//! Ordinary systems: an fs is determined by `E`, since `M` is then the
//! class of morphisms right orthogonal to all of `E`. The search decides `E`
//! membership for the non-isos one at a time, pruning as soon as a decided
//! composite breaks closure, and tests `(E, E^⊥)` at the leaves.
//!
//! Strict systems: `E₀` is searched the same way, then `M₀`, keeping a count
//! of factorisations per morphism; counts only grow, so a branch dies as
//! soon as some morphism factors twice.

use std::sync::Arc;

use super::system::{FactorisationSystem, MorSet, StrictFactorisationSystem};
use crate::error::Result;
use crate::fincat::{FinCategory, Mor};
use crate::guard::SizeGuard;

/// Composable triples `(g, f, g ∘ f)`, grouped by the position (in
/// `order`) of the last of the three to be decided. Triples touching a
/// morphism outside `order` are attached to the positions of the others.
fn closure_triples(c: &FinCategory, order: &[Mor]) -> Vec<Vec<(Mor, Mor, Mor)>> {
    let mut pos = vec![None; c.morphism_count()];
    for (i, m) in order.iter().enumerate() {
        pos[m.index()] = Some(i);
    }
    let mut out = vec![Vec::new(); order.len()];
    for f in c.morphisms() {
        for &g in c.outgoing(c.cod(f)) {
            let h = c.compose(g, f);
            let last = [g, f, h].iter().filter_map(|m| pos[m.index()]).max();
            if let Some(k) = last {
                out[k].push((g, f, h));
            }
        }
    }
    out
}

fn closed_at(set: &MorSet, triples: &[(Mor, Mor, Mor)]) -> bool {
    triples
        .iter()
        .all(|&(g, f, h)| !(set.contains(g) && set.contains(f)) || set.contains(h))
}

/// All classes containing `fixed` and closed under composition, with the
/// free morphisms decided in `order`.
fn closed_classes(c: &FinCategory, fixed: &MorSet, order: &[Mor]) -> Vec<MorSet> {
    let triples = closure_triples(c, order);
    let mut out = Vec::new();
    let mut set = fixed.clone();
    if !closed_at(&set, &triples_for_fixed(c, fixed, order)) {
        return out;
    }
    fn go(k: usize, order: &[Mor], triples: &[Vec<(Mor, Mor, Mor)>], set: &mut MorSet, out: &mut Vec<MorSet>) {
        if k == order.len() {
            out.push(set.clone());
            return;
        }
        for include in [false, true] {
            if include {
                set.insert(order[k]);
            } else {
                set.remove(order[k]);
            }
            if closed_at(set, &triples[k]) {
                go(k + 1, order, triples, set, out);
            }
        }
        set.remove(order[k]);
    }
    go(0, order, &triples, &mut set, &mut out);
    out
}

/// Triples made only of fixed morphisms.
fn triples_for_fixed(c: &FinCategory, fixed: &MorSet, order: &[Mor]) -> Vec<(Mor, Mor, Mor)> {
    let mut free = vec![false; c.morphism_count()];
    for m in order {
        free[m.index()] = true;
    }
    let mut out = Vec::new();
    for f in fixed.iter() {
        for &g in c.outgoing(c.cod(f)) {
            let h = c.compose(g, f);
            if fixed.contains(g) && !free[h.index()] {
                out.push((g, f, h));
            }
        }
    }
    out
}

/// Every factorisation system on `c`, ordered by `(E, M)`.
pub fn enumerate_fs(c: &Arc<FinCategory>, guard: &SizeGuard) -> Result<Vec<FactorisationSystem>> {
    SizeGuard::require("fs enumeration", c.morphism_count(), guard.enumerate_fs)?;
    let isos = MorSet::from_predicate(c, |f| c.is_iso(f));
    let free: Vec<Mor> = c.morphisms().filter(|&f| !isos.contains(f)).collect();
    let orthogonal: Vec<Vec<bool>> = c
        .morphisms()
        .map(|e| c.morphisms().map(|m| c.orthogonal(e, m)).collect())
        .collect();
    let mut out = Vec::new();
    for e in closed_classes(c, &isos, &free) {
        let m = MorSet::from_predicate(c, |m| e.iter().all(|x| orthogonal[x.index()][m.index()]));
        let fs = FactorisationSystem::from_sets(c.clone(), e, m);
        if fs.is_fs() {
            out.push(fs);
        }
    }
    out.sort_by(|a, b| (a.e(), a.m()).cmp(&(b.e(), b.m())));
    Ok(out)
}

/// Every strict factorisation system on `c`, ordered by `(E₀, M₀)`.
pub fn enumerate_strict_fs(c: &Arc<FinCategory>, guard: &SizeGuard) -> Result<Vec<StrictFactorisationSystem>> {
    SizeGuard::require("strict fs enumeration", c.morphism_count(), guard.enumerate_strict_fs)?;
    let ids = MorSet::from_predicate(c, |f| c.is_identity(f));
    let free: Vec<Mor> = c.morphisms().filter(|&f| !ids.contains(f)).collect();
    let m_triples = closure_triples(c, &free);
    let mut out = Vec::new();
    for e0 in closed_classes(c, &ids, &free) {
        // counts with M₀ = identities
        let mut count = vec![0usize; c.morphism_count()];
        for e in e0.iter() {
            count[e.index()] += 1;
        }
        if count.iter().any(|&k| k > 1) {
            continue;
        }
        let mut m0 = ids.clone();
        search_m0(c, &e0, &free, &m_triples, 0, &mut m0, &mut count, &mut out);
    }
    out.sort_by(|a, b| (a.e0(), a.m0()).cmp(&(b.e0(), b.m0())));
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn search_m0(
    c: &Arc<FinCategory>,
    e0: &MorSet,
    order: &[Mor],
    triples: &[Vec<(Mor, Mor, Mor)>],
    k: usize,
    m0: &mut MorSet,
    count: &mut Vec<usize>,
    out: &mut Vec<StrictFactorisationSystem>,
) {
    if k == order.len() {
        if count.iter().all(|&n| n == 1) {
            out.push(StrictFactorisationSystem::from_sets(c.clone(), e0.clone(), m0.clone()));
        }
        return;
    }
    let m = order[k];
    // exclude
    if closed_at(m0, &triples[k]) {
        search_m0(c, e0, order, triples, k + 1, m0, count, out);
    }
    // include
    m0.insert(m);
    let mut touched = Vec::new();
    let mut ok = closed_at(m0, &triples[k]);
    if ok {
        for &e in c.incoming(c.dom(m)) {
            if e0.contains(e) {
                let h = c.compose(m, e);
                count[h.index()] += 1;
                touched.push(h);
                if count[h.index()] > 1 {
                    ok = false;
                }
            }
        }
    }
    if ok {
        search_m0(c, e0, order, triples, k + 1, m0, count, out);
    }
    for h in touched {
        count[h.index()] -= 1;
    }
    m0.remove(m);
}
