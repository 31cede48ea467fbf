//! Brute-force predicates: epi, mono, iso, orthogonality.

use std::collections::HashSet;

use super::category::{FinCategory, Mor};

impl FinCategory {
    /// `f` is right-cancellable: `g ∘ f = h ∘ f` implies `g = h`.
    pub fn is_epi(&self, f: Mor) -> bool {
        let y = self.cod(f);
        for z in self.objects() {
            let mut seen = HashSet::new();
            for &g in self.hom(y, z) {
                if !seen.insert(self.compose(g, f)) {
                    return false;
                }
            }
        }
        true
    }

    /// `f` is left-cancellable: `f ∘ g = f ∘ h` implies `g = h`.
    pub fn is_mono(&self, f: Mor) -> bool {
        let x = self.dom(f);
        for z in self.objects() {
            let mut seen = HashSet::new();
            for &g in self.hom(z, x) {
                if !seen.insert(self.compose(f, g)) {
                    return false;
                }
            }
        }
        true
    }

    /// The two-sided inverse of `f`, if any.
    pub fn inverse(&self, f: Mor) -> Option<Mor> {
        let (x, y) = (self.dom(f), self.cod(f));
        self.hom(y, x)
            .iter()
            .copied()
            .find(|&g| self.compose(g, f) == self.identity(x) && self.compose(f, g) == self.identity(y))
    }

    pub fn is_iso(&self, f: Mor) -> bool {
        self.inverse(f).is_some()
    }

    /// Does `g` have a section, i.e. some `s` with `g ∘ s = id`?
    pub fn is_split_epi(&self, g: Mor) -> bool {
        let id = self.identity(self.cod(g));
        self.hom(self.cod(g), self.dom(g)).iter().any(|&s| self.compose(g, s) == id)
    }

    /// All `w: cod e → dom m` with `w ∘ e = u` and `m ∘ w = v`.
    pub fn fill_ins(&self, e: Mor, m: Mor, u: Mor, v: Mor) -> Vec<Mor> {
        self.hom(self.cod(e), self.dom(m))
            .iter()
            .copied()
            .filter(|&w| self.compose(w, e) == u && self.compose(m, w) == v)
            .collect()
    }

    /// First commuting square `(u, v)` from `e` to `m` whose fill-in is
    /// missing or not unique, together with the number of fill-ins found.
    pub fn orthogonality_failure(&self, e: Mor, m: Mor) -> Option<(Mor, Mor, usize)> {
        for &u in self.hom(self.dom(e), self.dom(m)) {
            let mu = self.compose(m, u);
            for &v in self.hom(self.cod(e), self.cod(m)) {
                if mu != self.compose(v, e) {
                    continue;
                }
                let n = self.fill_ins(e, m, u, v).len();
                if n != 1 {
                    return Some((u, v, n));
                }
            }
        }
        None
    }

    /// `e ⊥ m`: every commuting square from `e` to `m` has exactly one
    /// diagonal fill-in.
    pub fn orthogonal(&self, e: Mor, m: Mor) -> bool {
        self.orthogonality_failure(e, m).is_none()
    }
}
