use std::collections::BTreeMap;
use std::sync::Arc;

use super::category::{CatBuilder, FinCategory, FincatError};
use super::functor::FinFunctor;

/// A comma category together with its object dictionary and the projection
/// to the source of the defining functor.
#[derive(Debug, Clone)]
pub struct CommaCategory {
    pub cat: Arc<FinCategory>,
    /// (object of the functor source, morphism of the functor target)
    pub objects: Vec<(usize, usize)>,
    /// per comma morphism, the underlying morphism of the functor source
    pub underlying: Vec<usize>,
    pub projection: FinFunctor,
}

impl CommaCategory {
    pub fn object_index(&self, a: usize, f: usize) -> Option<usize> {
        self.objects.iter().position(|&o| o == (a, f))
    }
}

/// The comma category F/d: objects (a, f : F(a) → d), morphisms the
/// source arrows making the triangle commute.
pub fn comma_over(func: &FinFunctor, d: usize) -> Result<CommaCategory, FincatError> {
    build_comma(func, d, true)
}

/// The comma category d/F: objects (a, f : d → F(a)).
pub fn comma_under(d: usize, func: &FinFunctor) -> Result<CommaCategory, FincatError> {
    build_comma(func, d, false)
}

fn build_comma(func: &FinFunctor, d: usize, over: bool) -> Result<CommaCategory, FincatError> {
    let src = func.source.clone();
    let tgt = func.target.clone();
    let mut objects = Vec::new();
    for a in 0..src.object_count() {
        let homs = if over { tgt.hom(func.on_object(a), d) } else { tgt.hom(d, func.on_object(a)) };
        for f in homs {
            objects.push((a, f));
        }
    }
    let mut b = CatBuilder::with_cap(usize::MAX);
    for &(a, f) in &objects {
        b.add_object(format!("({}, {})", src.object_label(a), tgt.morphism(f).label));
    }
    // identities occupy indices 0..objects.len() in declaration order
    let mut underlying: Vec<usize> = objects.iter().map(|&(a, _)| src.identity_of(a)).collect();
    let mut endpoints: Vec<(usize, usize)> = (0..objects.len()).map(|i| (i, i)).collect();
    let mut locate: BTreeMap<(usize, usize, usize), usize> = BTreeMap::new();
    for (i, &(a, _)) in objects.iter().enumerate() {
        locate.insert((i, i, src.identity_of(a)), b.identity_index(i));
    }
    for (i, &(_, f)) in objects.iter().enumerate() {
        for (j, &(_, f2)) in objects.iter().enumerate() {
            for &g in &src.hom(objects[i].0, objects[j].0) {
                if src.is_identity(g) {
                    continue;
                }
                let fg = func.on_morphism(g);
                let commutes = if over {
                    tgt.compose(f2, fg) == Some(f) // f2 ∘ F(g) = f
                } else {
                    tgt.compose(fg, f) == Some(f2) // F(g) ∘ f = f2
                };
                if commutes {
                    let m = b.add_morphism(i, j, src.morphism(g).label.clone());
                    underlying.push(g);
                    endpoints.push((i, j));
                    locate.insert((i, j, g), m);
                }
            }
        }
    }
    let under = underlying.clone();
    let ends = endpoints.clone();
    let cat = Arc::new(b.build_with(|g, f| {
        let u = src.compose(under[g], under[f]).expect("composable underlying arrows");
        locate[&(ends[f].0, ends[g].1, u)]
    })?);
    let proj_ob: Vec<usize> = objects.iter().map(|&(a, _)| a).collect();
    let projection = FinFunctor::check(cat.clone(), func.source.clone(), proj_ob, underlying.clone())?;
    Ok(CommaCategory { cat, objects, underlying, projection })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comma_of_identity_on_terminal_is_terminal() {
        let one = Arc::new(FinCategory::terminal());
        let id = FinFunctor::identity(one);
        let c = comma_over(&id, 0).unwrap();
        assert_eq!(c.cat.object_count(), 1);
        assert_eq!(c.cat.morphism_count(), 1);
    }

    #[test]
    fn comma_of_point_into_arrow_over_codomain() {
        // F : 1 → (a → b) picking a; comma over b has one object (a, the arrow)
        let one = Arc::new(FinCategory::terminal());
        let arrow = Arc::new(FinCategory::arrow());
        let f = FinFunctor::check(one, arrow.clone(), vec![0], vec![arrow.identity_of(0)]).unwrap();
        let c = comma_over(&f, 1).unwrap();
        assert_eq!(c.cat.object_count(), 1);
        assert_eq!(c.cat.morphism_count(), 1);
    }
}
