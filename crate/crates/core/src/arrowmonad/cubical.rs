//! Faces, degeneracy and connections of `P`, and the equations between them.

use std::sync::Arc;

use super::arrow::ArrowCat;
use super::monad::{MonadKind, Tower};
use crate::error::Result;
use crate::fincat::{FinCategory, Functor, Mor};
use crate::guard::SizeGuard;
use crate::report::{functor_difference, functor_failure, Checks};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn opposite(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Plus => Sign::Minus,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Minus => "-",
            Sign::Plus => "+",
        }
    }
}

pub const SIGNS: [Sign; 2] = [Sign::Minus, Sign::Plus];

/// `∂⁻: PX → X` (domains, tops) or `∂⁺` (codomains, bottoms).
pub fn face(px: &ArrowCat, sign: Sign) -> Functor {
    let b = &**px.base();
    let c = &**px.cat();
    let on_objects = c
        .objects()
        .map(|o| {
            let x = px.object_of(o);
            match sign {
                Sign::Minus => b.dom(x),
                Sign::Plus => b.cod(x),
            }
        })
        .collect();
    let on_morphisms = c
        .morphisms()
        .map(|m| match sign {
            Sign::Minus => px.top(m),
            Sign::Plus => px.bottom(m),
        })
        .collect();
    Functor::new(px.cat().clone(), px.base().clone(), on_objects, on_morphisms)
}

/// A functor into `P(A.cat)` kept as data of `A.cat`: each object is an
/// `A`-morphism, each morphism a square `(source, target, top, bottom)` of
/// `A`-morphisms. Used for maps into `P³X`, which is never built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareMap {
    pub objects: Vec<Mor>,
    pub morphisms: Vec<(Mor, Mor, Mor, Mor)>,
}

impl SquareMap {
    /// Indexes into an arrow category that has been built.
    fn resolve(&self, source: &Arc<FinCategory>, target: &ArrowCat) -> Functor {
        let on_objects = self.objects.iter().map(|&m| target.object_for(m)).collect();
        let on_morphisms = self
            .morphisms
            .iter()
            .map(|&(x, y, top, bottom)| target.square(x, y, top, bottom).expect("square commutes"))
            .collect();
        Functor::new(source.clone(), target.cat().clone(), on_objects, on_morphisms)
    }

}

/// The connection `g: A → P A` for `A = px.cat()`, as [`SquareMap`].
pub fn connection_squares(px: &ArrowCat, sign: Sign) -> SquareMap {
    let b = &**px.base();
    let c = &**px.cat();
    let ident = |o| px.object_of(px.object_for(b.identity(o)));
    // the A-morphism g(x̂), seen as an object of P A
    let object_square = |x: Mor| {
        let (d, k) = (b.dom(x), b.cod(x));
        match sign {
            Sign::Minus => px.square(x, b.identity(k), x, b.identity(k)).expect("(x, 1) commutes"),
            Sign::Plus => px.square(b.identity(d), x, b.identity(d), x).expect("(1, x) commutes"),
        }
    };
    let objects = c.objects().map(|o| object_square(px.object_of(o))).collect();
    let morphisms = c
        .morphisms()
        .map(|m| {
            let (f1, f2) = px.square_of(m);
            let (x, y) = (px.source_arrow(m), px.target_arrow(m));
            let (top, bottom) = match sign {
                Sign::Minus => (m, px.square(ident(b.cod(x)), ident(b.cod(y)), f2, f2).expect("(f″, f″)")),
                Sign::Plus => (px.square(ident(b.dom(x)), ident(b.dom(y)), f1, f1).expect("(f′, f′)"), m),
            };
            (object_square(x), object_square(y), top, bottom)
        })
        .collect();
    SquareMap { objects, morphisms }
}

/// `g⁻: PX → P²X`, `x̂ ↦ (x, 1): x̂ → 1̂`, or `g⁺`, `x̂ ↦ (1, x): 1̂ → x̂`.
/// `ppx` must be the arrow category of `px.cat()`.
pub fn connection(px: &ArrowCat, ppx: &ArrowCat, sign: Sign) -> Functor {
    connection_squares(px, sign).resolve(px.cat(), ppx)
}

/// `P F ∘ G` for `G: D → P A` given as squares, where `pb = P B`.
fn lift_after(g: &SquareMap, source: &Arc<FinCategory>, f: &Functor, pb: &ArrowCat) -> Functor {
    let on_objects = g.objects.iter().map(|&m| pb.object_for(f.mor(m))).collect();
    let on_morphisms = g
        .morphisms
        .iter()
        .map(|&(x, y, top, bottom)| pb.square(f.mor(x), f.mor(y), f.mor(top), f.mor(bottom)).expect("functors keep squares"))
        .collect();
    Functor::new(source.clone(), pb.cat().clone(), on_objects, on_morphisms)
}

/// `P F ∘ G` as squares, for `G: D → P A` given as a functor and `F: A → B`.
fn lift_squares(ppa: &ArrowCat, g: &Functor, f: &Functor) -> SquareMap {
    let c = &**g.source();
    let objects = c.objects().map(|o| f.mor(ppa.object_of(g.ob(o)))).collect();
    let morphisms = c
        .morphisms()
        .map(|m| {
            let k = g.mor(m);
            let (top, bottom) = ppa.square_of(k);
            (f.mor(ppa.source_arrow(k)), f.mor(ppa.target_arrow(k)), f.mor(top), f.mor(bottom))
        })
        .collect();
    SquareMap { objects, morphisms }
}

/// First difference between two maps into `P³X`, by name.
fn square_map_difference(c: &FinCategory, a: &FinCategory, left: &SquareMap, right: &SquareMap) -> Option<String> {
    for o in c.objects() {
        if left.objects[o.index()] != right.objects[o.index()] {
            return Some(format!("object {}", c.object_name(o)));
        }
    }
    for m in c.morphisms() {
        let (l, r) = (left.morphisms[m.index()], right.morphisms[m.index()]);
        if l != r {
            return Some(format!(
                "morphism {}: top {} vs {}, bottom {} vs {}",
                c.morphism_name(m),
                a.morphism_name(l.2),
                a.morphism_name(r.2),
                a.morphism_name(l.3),
                a.morphism_name(r.3)
            ));
        }
    }
    None
}

/// Every equation of the cubical comonad on `P`, checked exhaustively:
/// faces against multiplication, connections against multiplication,
/// counit, co-absorbancy, co-associativity and the degeneracy laws.
/// Maps into `P³X` are evaluated as squares of `P²X`, so `P³X` itself is
/// never built.
pub fn check_cubical_equations(x: &Arc<FinCategory>, guard: &SizeGuard) -> Result<Checks> {
    guard.check_cube("cubical equations", x.morphism_count())?;
    let tower = Tower::new(MonadKind::P, x);
    let px = tower.one().arrow();
    let ppx = tower.two().arrow();

    let eta = tower.unit();
    let eta_p = ppx.eta();
    let mu = tower.mult()?;
    let p_eta = px.lift(&eta, ppx);
    let id_x = Functor::identity(x);
    let id_px = Functor::identity(px.cat());

    let d = |s| face(px, s);
    let d_p = |s| face(ppx, s);
    let p_d = |s| ppx.lift(&face(px, s), px);
    let g = |s| connection(px, ppx, s);
    // maps P²X → P³X, as squares of P²X
    let g_p = |s| connection_squares(ppx, s);
    let p_g = |s| lift_squares(ppx, &Functor::identity(ppx.cat()), &g(s));
    // P μ after a map P²X → P³X
    let p_mu_after = |m: &SquareMap| lift_after(m, ppx.cat(), &mu, ppx);

    let mut checks = Checks::new();
    for s in SIGNS {
        let e = s.symbol();
        checks.record(&format!("face {e} is a functor"), "faces PX -> X", functor_failure(&d(s)));
        checks.record(&format!("connection {e} is a functor"), "connections PX -> P2X", functor_failure(&g(s)));
        checks.record(
            &format!("face {e} after multiplication"),
            "d mu = d Pd",
            functor_difference(&mu.then(&d(s)), &p_d(s).then(&d(s))),
        );
        checks.record(
            &format!("face {e} after its whiskering"),
            "d Pd = d dP",
            functor_difference(&p_d(s).then(&d(s)), &d_p(s).then(&d(s))),
        );
        checks.record(
            &format!("multiplication after connection {e}"),
            "mu g = 1",
            functor_difference(&g(s).then(&mu), &id_px),
        );
        let mixed = g(s.opposite()).then(&p_mu_after(&g_p(s)));
        checks.record(
            &format!("mixed connections {e}"),
            "P mu . g P . g' = eta P",
            functor_difference(&mixed, &eta_p),
        );
        let same = g(s).then(&p_mu_after(&g_p(s)));
        checks.record(
            &format!("repeated connection {e}"),
            "P mu . g P . g = g",
            functor_difference(&same, &g(s)),
        );
        let lifted = g(s).then(&p_mu_after(&p_g(s)));
        checks.record(
            &format!("repeated lifted connection {e}"),
            "P mu . P g . g = g",
            functor_difference(&lifted, &g(s)),
        );
        checks.record(
            &format!("counit {e}, whiskered face"),
            "dP . g = 1",
            functor_difference(&g(s).then(&d_p(s)), &id_px),
        );
        checks.record(
            &format!("counit {e}, lifted face"),
            "Pd . g = 1",
            functor_difference(&g(s).then(&p_d(s)), &id_px),
        );
        let absorbed = d(s).then(&eta);
        checks.record(
            &format!("co-absorbancy {e}, whiskered face"),
            "dP . g' = eta . d",
            functor_difference(&g(s.opposite()).then(&d_p(s)), &absorbed),
        );
        checks.record(
            &format!("co-absorbancy {e}, lifted face"),
            "Pd . g' = eta . d",
            functor_difference(&g(s.opposite()).then(&p_d(s)), &absorbed),
        );
        checks.record(
            &format!("face {e} of degeneracy"),
            "d eta = 1",
            functor_difference(&eta.then(&d(s)), &id_x),
        );
        checks.record(
            &format!("connection {e} of degeneracy"),
            "g eta = eta P . eta",
            functor_difference(&eta.then(&g(s)), &eta.then(&eta_p)),
        );
        let (gs, gp, pg) = (g(s), g_p(s), p_g(s));
        let left = SquareMap {
            objects: gs.object_table().iter().map(|&o| gp.objects[o.index()]).collect(),
            morphisms: gs.morphism_table().iter().map(|&k| gp.morphisms[k.index()]).collect(),
        };
        let right = SquareMap {
            objects: gs.object_table().iter().map(|&o| pg.objects[o.index()]).collect(),
            morphisms: gs.morphism_table().iter().map(|&k| pg.morphisms[k.index()]).collect(),
        };
        checks.record(
            &format!("co-associativity {e}"),
            "g P . g = P g . g",
            square_map_difference(px.cat(), ppx.cat(), &left, &right),
        );
    }
    checks.record(
        "degeneracies commute",
        "P eta . eta = eta P . eta",
        functor_difference(&eta.then(&p_eta), &eta.then(&eta_p)),
    );
    checks.record(
        "unit factors through connections",
        "eta(x) = g-(x) . g+(x)",
        unit_through_connections(px, ppx, &eta),
    );
    Ok(checks)
}

/// `η(x) = g⁻(x̂) ∘ g⁺(x̂)` in `PX`, for every `x`.
fn unit_through_connections(px: &ArrowCat, ppx: &ArrowCat, eta: &Functor) -> Option<String> {
    let b = &**px.base();
    let c = &**px.cat();
    let minus = connection(px, ppx, Sign::Minus);
    let plus = connection(px, ppx, Sign::Plus);
    for x in b.morphisms() {
        let o = px.object_for(x);
        let gm = ppx.object_of(minus.ob(o));
        let gp = ppx.object_of(plus.ob(o));
        if c.compose(gm, gp) != eta.mor(x) {
            return Some(format!("at {}", b.morphism_name(x)));
        }
    }
    None
}
