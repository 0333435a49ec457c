use std::collections::BTreeMap;
use std::sync::Arc;

use super::bimodule::Bimodule;
use super::category::{CatBuilder, FinCategory, FincatError};
use super::functor::FinFunctor;

/// The two-sided Grothendieck construction of a bimodule, with its two
/// projection functors.
#[derive(Debug, Clone)]
pub struct TwoSidedFibration {
    pub total: Arc<FinCategory>,
    /// objects of the total category: (b, a, element of F(b, a))
    pub objects: Vec<(usize, usize, usize)>,
    /// per total morphism, the underlying (φ of B, ψ of A)
    pub underlying: Vec<(usize, usize)>,
    pub to_left: FinFunctor,
    pub to_right: FinFunctor,
}

impl TwoSidedFibration {
    pub fn object_index(&self, b: usize, a: usize, e: usize) -> Option<usize> {
        self.objects.iter().position(|&o| o == (b, a, e))
    }
}

/// Builds ∫F for a bimodule F : B^op × A → Set. Objects are triples
/// (b, a, f ∈ F(b, a)); a morphism (b, a, f) → (b', a', f') is a pair
/// (φ : b → b', ψ : a → a') with ψ·f = φ*(f').
pub fn grothendieck(f: &Bimodule) -> Result<TwoSidedFibration, FincatError> {
    let left = f.left.clone();
    let right = f.right.clone();
    let mut objects = Vec::new();
    for b in 0..left.object_count() {
        for a in 0..right.object_count() {
            for e in 0..f.size(b, a) {
                objects.push((b, a, e));
            }
        }
    }
    let mut builder = CatBuilder::with_cap(usize::MAX);
    for &(b, a, e) in &objects {
        builder.add_object(format!(
            "({}, {}, {e})",
            left.object_label(b),
            right.object_label(a)
        ));
    }
    let mut underlying: Vec<(usize, usize)> = objects
        .iter()
        .map(|&(b, a, _)| (left.identity_of(b), right.identity_of(a)))
        .collect();
    let mut endpoints: Vec<(usize, usize)> = (0..objects.len()).map(|i| (i, i)).collect();
    let mut locate: BTreeMap<(usize, usize, usize), usize> = BTreeMap::new();
    for (i, &(b, a, _)) in objects.iter().enumerate() {
        locate.insert(
            (i, left.identity_of(b), right.identity_of(a)),
            builder.identity_index(i),
        );
    }
    for (i, &(b, a, e)) in objects.iter().enumerate() {
        for (j, &(b2, a2, e2)) in objects.iter().enumerate() {
            for &phi in &left.hom(b, b2) {
                for &psi in &right.hom(a, a2) {
                    if left.is_identity(phi) && right.is_identity(psi) && i == j {
                        continue; // identities handled by the builder
                    }
                    if f.push(b, psi, e) == f.pull(phi, a2, e2) {
                        let m = builder.add_morphism(
                            i,
                            j,
                            format!("({}, {})", left.morphism(phi).label, right.morphism(psi).label),
                        );
                        underlying.push((phi, psi));
                        endpoints.push((i, j));
                        locate.insert((i, phi, psi), m);
                    }
                }
            }
        }
    }
    let under = underlying.clone();
    let ends = endpoints.clone();
    let total = Arc::new(builder.build_with(|g, fm| {
        let phi = left.compose(under[g].0, under[fm].0).expect("left composable");
        let psi = right.compose(under[g].1, under[fm].1).expect("right composable");
        locate[&(ends[fm].0, phi, psi)]
    })?);
    let ob_left: Vec<usize> = objects.iter().map(|&(b, _, _)| b).collect();
    let ob_right: Vec<usize> = objects.iter().map(|&(_, a, _)| a).collect();
    let mor_left: Vec<usize> = underlying.iter().map(|&(p, _)| p).collect();
    let mor_right: Vec<usize> = underlying.iter().map(|&(_, p)| p).collect();
    let to_left = FinFunctor::check(total.clone(), left, ob_left, mor_left)?;
    let to_right = FinFunctor::check(total.clone(), right, ob_right, mor_right)?;
    Ok(TwoSidedFibration { total, objects, underlying, to_left, to_right })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::category::FinCategory;

    #[test]
    fn constant_singleton_bimodule_on_terminal_categories() {
        let one = Arc::new(FinCategory::terminal());
        let f = Bimodule::from_fns(one.clone(), one, |_, _| 1, |_, _, x| x, |_, _, x| x).unwrap();
        let g = grothendieck(&f).unwrap();
        assert_eq!(g.total.object_count(), 1);
        assert_eq!(g.total.morphism_count(), 1);
    }
}
