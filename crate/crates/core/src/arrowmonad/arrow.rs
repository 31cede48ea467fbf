use std::collections::HashMap;
use std::sync::Arc;

use crate::fincat::{CategoryBuilder, FinCategory, Functor, Mor, Ob};
use crate::format::CategoryFile;

/// The arrow category `PX = X²` with provenance back to `X`.
///
/// Objects of `PX` are named after the morphisms of `X` and so share their
/// order: object `i` is base morphism `i`. A morphism is a commuting square
/// `(top, bottom): x → y`, named `(top|bottom):x->y`.
#[derive(Debug, Clone)]
pub struct ArrowCat {
    cat: Arc<FinCategory>,
    base: Arc<FinCategory>,
    square_of: Vec<(Mor, Mor)>,
}

pub fn square_name(top: &str, bottom: &str, src: &str, tgt: &str) -> String {
    format!("({top}|{bottom}):{src}->{tgt}")
}

/// Builds `PX`. Composition is pairwise on the legs of the squares.
pub fn arrow_category(base: &Arc<FinCategory>) -> ArrowCat {
    let x = &**base;
    let mut b = CategoryBuilder::with_capacity(x.morphism_count(), 0);
    for m in x.morphisms() {
        b.object(x.morphism_name(m));
    }
    let mut raw_squares: Vec<(Ob, Ob, Mor, Mor)> = Vec::new();
    for src in x.morphisms() {
        for &top in x.outgoing(x.dom(src)) {
            for &bottom in x.outgoing(x.cod(src)) {
                let diagonal = x.compose(bottom, src);
                for &tgt in x.hom(x.cod(top), x.cod(bottom)) {
                    if x.compose(tgt, top) == diagonal {
                        raw_squares.push((Ob(src.0), Ob(tgt.0), top, bottom));
                    }
                }
            }
        }
    }
    let mut raw_index: HashMap<(Ob, Ob, Mor, Mor), usize> = HashMap::with_capacity(raw_squares.len());
    for &(s, t, top, bottom) in &raw_squares {
        let name = square_name(
            x.morphism_name(top),
            x.morphism_name(bottom),
            x.morphism_name(Mor(s.0)),
            x.morphism_name(Mor(t.0)),
        );
        let i = b.morphism(name, s.index(), t.index());
        raw_index.insert((s, t, top, bottom), i);
    }
    for m in x.morphisms() {
        let o = Ob(m.0);
        let (d, c) = (x.dom(m), x.cod(m));
        b.set_identity(o.index(), raw_index[&(o, o, x.identity(d), x.identity(c))]);
    }
    let built = b
        .build(|g, f| {
            let (_, gt, g1, g2) = raw_squares[g];
            let (fs, _, f1, f2) = raw_squares[f];
            raw_index.get(&(fs, gt, x.compose(g1, f1), x.compose(g2, f2))).copied()
        })
        .expect("squares compose");
    debug_assert!(x.objects().count() == 0 || built.object_of_raw.iter().enumerate().all(|(i, o)| o.index() == i));
    let mut square_of = vec![(Mor(0), Mor(0)); raw_squares.len()];
    for (raw, &(_, _, top, bottom)) in raw_squares.iter().enumerate() {
        square_of[built.morphism_of_raw[raw].index()] = (top, bottom);
    }
    ArrowCat { cat: Arc::new(built.category), base: base.clone(), square_of }
}

impl ArrowCat {
    pub fn cat(&self) -> &Arc<FinCategory> {
        &self.cat
    }

    pub fn base(&self) -> &Arc<FinCategory> {
        &self.base
    }

    /// The base morphism an object stands for.
    #[inline]
    pub fn object_of(&self, o: Ob) -> Mor {
        Mor(o.0)
    }

    /// The object standing for a base morphism.
    #[inline]
    pub fn object_for(&self, m: Mor) -> Ob {
        Ob(m.0)
    }

    /// `(top, bottom)` legs of a square.
    #[inline]
    pub fn square_of(&self, m: Mor) -> (Mor, Mor) {
        self.square_of[m.index()]
    }

    pub fn top(&self, m: Mor) -> Mor {
        self.square_of[m.index()].0
    }

    pub fn bottom(&self, m: Mor) -> Mor {
        self.square_of[m.index()].1
    }

    /// The square `(top, bottom): x → y`, if it exists and commutes.
    pub fn square(&self, x: Mor, y: Mor, top: Mor, bottom: Mor) -> Option<Mor> {
        self.cat
            .hom(self.object_for(x), self.object_for(y))
            .iter()
            .copied()
            .find(|&m| self.square_of[m.index()] == (top, bottom))
    }

    /// The common composite `bottom ∘ x = y ∘ top`.
    pub fn diagonal(&self, m: Mor) -> Mor {
        let (_, bottom) = self.square_of(m);
        self.base.compose(bottom, self.object_of(self.cat.dom(m)))
    }

    /// Base morphism of the source object of a square.
    pub fn source_arrow(&self, m: Mor) -> Mor {
        self.object_of(self.cat.dom(m))
    }

    /// Base morphism of the target object of a square.
    pub fn target_arrow(&self, m: Mor) -> Mor {
        self.object_of(self.cat.cod(m))
    }

    /// Unit `η: X → PX`, `f ↦ (f, f): 1̂ → 1̂`.
    pub fn eta(&self) -> Functor {
        let x = &*self.base;
        let on_objects = x.objects().map(|o| self.object_for(x.identity(o))).collect();
        let on_morphisms = x
            .morphisms()
            .map(|f| {
                let (d, c) = (x.identity(x.dom(f)), x.identity(x.cod(f)));
                self.square(d, c, f, f).expect("degenerate square")
            })
            .collect();
        Functor::new(self.base.clone(), self.cat.clone(), on_objects, on_morphisms)
    }

    /// `PF: PA → PB`, applying `F` to both legs. `self` is `PA`.
    pub fn lift(&self, f: &Functor, target: &ArrowCat) -> Functor {
        let a = &*self.cat;
        let on_objects = a.objects().map(|o| target.object_for(f.mor(self.object_of(o)))).collect();
        let on_morphisms = a
            .morphisms()
            .map(|m| {
                let (top, bottom) = self.square_of(m);
                let x = f.mor(self.source_arrow(m));
                let y = f.mor(self.target_arrow(m));
                target
                    .square(x, y, f.mor(top), f.mor(bottom))
                    .expect("functors preserve commuting squares")
            })
            .collect();
        Functor::new(self.cat.clone(), target.cat.clone(), on_objects, on_morphisms)
    }

    /// The category file of `PX` with provenance: objects carry `of`,
    /// morphisms carry `top` and `bottom`.
    pub fn to_file(&self) -> CategoryFile {
        let x = &*self.base;
        let mut file = CategoryFile::from_category(&self.cat);
        for (i, entry) in file.objects.iter_mut().enumerate() {
            *entry = crate::format::ObjectEntry::WithProvenance {
                name: entry.name().to_string(),
                of: Some(x.morphism_name(Mor(i as u32)).to_string()),
            };
        }
        for (i, entry) in file.morphisms.iter_mut().enumerate() {
            let (top, bottom) = self.square_of[i];
            entry.top = Some(x.morphism_name(top).to_string());
            entry.bottom = Some(x.morphism_name(bottom).to_string());
        }
        file
    }
}
