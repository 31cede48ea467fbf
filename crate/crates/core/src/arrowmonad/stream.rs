//! Streaming over the morphisms of `P C` without building `P C`.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::fincat::{FinCategory, Mor};

/// Runs `check(x, y, top, bottom)` on every commuting square
/// `bottom ∘ x = y ∘ top` of `c` (every morphism of `P c`), and returns the
/// failure with the least source `x`, in the same order a sequential scan
/// would meet it. Sources are split across threads.
pub fn find_square<F>(c: &FinCategory, check: F) -> Option<String>
where
    F: Fn(Mor, Mor, Mor, Mor) -> Option<String> + Sync,
{
    let n = c.morphism_count();
    if n == 0 {
        return None;
    }
    // factorisations[d]: every (top, y) with y ∘ top = d
    let mut factorisations: Vec<Vec<(Mor, Mor)>> = vec![Vec::new(); n];
    for top in c.morphisms() {
        for &y in c.outgoing(c.cod(top)) {
            factorisations[c.compose(y, top).index()].push((top, y));
        }
    }
    let threads = std::thread::available_parallelism().map_or(1, |k| k.get()).min(n);
    let chunk = n.div_ceil(threads);
    let best = AtomicUsize::new(usize::MAX);
    let scan = |lo: usize, hi: usize| -> Option<(usize, String)> {
        for i in lo..hi {
            if best.load(Ordering::Relaxed) < i {
                return None;
            }
            let x = Mor(i as u32);
            for &bottom in c.outgoing(c.cod(x)) {
                for &(top, y) in &factorisations[c.compose(bottom, x).index()] {
                    if let Some(msg) = check(x, y, top, bottom) {
                        best.fetch_min(i, Ordering::Relaxed);
                        return Some((i, msg));
                    }
                }
            }
        }
        None
    };
    let found: Vec<Option<(usize, String)>> = if threads == 1 {
        vec![scan(0, n)]
    } else {
        std::thread::scope(|s| {
            let handles: Vec<_> = (0..threads)
                .map(|t| {
                    let scan = &scan;
                    s.spawn(move || scan(t * chunk, ((t + 1) * chunk).min(n)))
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("square scan panicked")).collect()
        })
    };
    found.into_iter().flatten().min_by_key(|(i, _)| *i).map(|(_, msg)| msg)
}

/// Number of commuting squares of `c`.
pub fn count_squares(c: &FinCategory) -> usize {
    let counter = AtomicUsize::new(0);
    find_square(c, |_, _, _, _| {
        counter.fetch_add(1, Ordering::Relaxed);
        None
    });
    counter.into_inner()
}
