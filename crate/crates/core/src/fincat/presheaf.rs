use std::sync::Arc;

use super::category::{FinCategory, FincatError};
use super::functor::FinFunctor;

/// A covariant Set-valued presheaf on a finite category: a finite set per
/// object and a function per morphism, validated against identities and the
/// full composition table.
#[derive(Debug, Clone)]
pub struct SetPresheaf {
    pub base: Arc<FinCategory>,
    sizes: Vec<usize>,
    maps: Vec<Vec<usize>>,
}

impl SetPresheaf {
    pub fn check(
        base: Arc<FinCategory>,
        sizes: Vec<usize>,
        maps: Vec<Vec<usize>>,
    ) -> Result<SetPresheaf, FincatError> {
        if sizes.len() != base.object_count() || maps.len() != base.morphism_count() {
            return Err(FincatError::BadPresheaf("table lengths disagree with the base".into()));
        }
        for (f, map) in maps.iter().enumerate() {
            if map.len() != sizes[base.src(f)] {
                return Err(FincatError::BadPresheaf(format!("map of morphism {f} has wrong domain")));
            }
            for &y in map {
                if y >= sizes[base.tgt(f)] {
                    return Err(FincatError::BadPresheaf(format!(
                        "map of morphism {f} escapes its codomain"
                    )));
                }
            }
        }
        for o in 0..base.object_count() {
            let e = base.identity_of(o);
            if maps[e].iter().enumerate().any(|(x, &y)| x != y) {
                return Err(FincatError::BadPresheaf(format!("identity of object {o} not the identity map")));
            }
        }
        for f in 0..base.morphism_count() {
            for &g in base.morphisms_from(base.tgt(f)) {
                let gf = base.compose(g, f).expect("composable");
                for x in 0..sizes[base.src(f)] {
                    if maps[gf][x] != maps[g][maps[f][x]] {
                        return Err(FincatError::BadPresheaf(format!(
                            "action not functorial on composite ({g}, {f})"
                        )));
                    }
                }
            }
        }
        Ok(SetPresheaf { base, sizes, maps })
    }

    /// The constant presheaf with a fixed fiber size (all maps identities).
    pub fn constant(base: Arc<FinCategory>, size: usize) -> SetPresheaf {
        let sizes = vec![size; base.object_count()];
        let maps = (0..base.morphism_count()).map(|_| (0..size).collect()).collect();
        SetPresheaf { base, sizes, maps }
    }

    pub fn size(&self, o: usize) -> usize {
        self.sizes[o]
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn apply(&self, f: usize, x: usize) -> usize {
        self.maps[f][x]
    }

    pub fn map(&self, f: usize) -> &[usize] {
        &self.maps[f]
    }

    /// Restriction along a functor into the base: (u^*X)(a) = X(u a).
    pub fn restrict(&self, u: &FinFunctor) -> SetPresheaf {
        let sizes = (0..u.source.object_count()).map(|o| self.sizes[u.on_object(o)]).collect();
        let maps = (0..u.source.morphism_count())
            .map(|m| self.maps[u.on_morphism(m)].clone())
            .collect();
        SetPresheaf { base: u.source.clone(), sizes, maps }
    }
}
