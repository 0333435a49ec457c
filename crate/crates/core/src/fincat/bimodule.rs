use std::collections::BTreeMap;
use std::sync::Arc;

use super::category::{FinCategory, FincatError};

/// A Set-valued bimodule F : B^op × A → Set, stored as explicit tables.
///
/// `left_act` is the contravariant action of the left leg B (pulling back
/// along φ : b → b'), `right_act` the covariant action of the right leg A.
/// The two actions are validated to be functorial and to commute.
#[derive(Debug, Clone)]
pub struct Bimodule {
    pub left: Arc<FinCategory>,
    pub right: Arc<FinCategory>,
    sizes: BTreeMap<(usize, usize), usize>,
    /// (φ in B with φ : b → b', a) ↦ function F(b', a) → F(b, a)
    left_act: BTreeMap<(usize, usize), Vec<usize>>,
    /// (b, ψ in A with ψ : a → a') ↦ function F(b, a) → F(b, a')
    right_act: BTreeMap<(usize, usize), Vec<usize>>,
}

impl Bimodule {
    pub fn check(
        left: Arc<FinCategory>,
        right: Arc<FinCategory>,
        sizes: BTreeMap<(usize, usize), usize>,
        left_act: BTreeMap<(usize, usize), Vec<usize>>,
        right_act: BTreeMap<(usize, usize), Vec<usize>>,
    ) -> Result<Bimodule, FincatError> {
        let m = Bimodule { left, right, sizes, left_act, right_act };
        for b in 0..m.left.object_count() {
            for a in 0..m.right.object_count() {
                if !m.sizes.contains_key(&(b, a)) {
                    return Err(FincatError::BadBimodule(format!("missing value at ({b}, {a})")));
                }
            }
        }
        // left action: contravariant functoriality
        for phi in 0..m.left.morphism_count() {
            let (b, b2) = (m.left.src(phi), m.left.tgt(phi));
            for a in 0..m.right.object_count() {
                let f = m
                    .left_act
                    .get(&(phi, a))
                    .ok_or_else(|| FincatError::BadBimodule(format!("missing left action ({phi}, {a})")))?;
                if f.len() != m.size(b2, a) || f.iter().any(|&y| y >= m.size(b, a)) {
                    return Err(FincatError::BadBimodule(format!("left action ({phi}, {a}) ill-typed")));
                }
            }
        }
        for b in 0..m.left.object_count() {
            let e = m.left.identity_of(b);
            for a in 0..m.right.object_count() {
                if m.left_act[&(e, a)].iter().enumerate().any(|(x, &y)| x != y) {
                    return Err(FincatError::BadBimodule(format!("left identity action at ({b}, {a})")));
                }
            }
        }
        for phi in 0..m.left.morphism_count() {
            for &psi in m.left.morphisms_from(m.left.tgt(phi)) {
                let comp = m.left.compose(psi, phi).expect("composable");
                for a in 0..m.right.object_count() {
                    for x in 0..m.size(m.left.tgt(psi), a) {
                        let via = m.left_act[&(phi, a)][m.left_act[&(psi, a)][x]];
                        if m.left_act[&(comp, a)][x] != via {
                            return Err(FincatError::BadBimodule(format!(
                                "left action not functorial on ({psi}, {phi})"
                            )));
                        }
                    }
                }
            }
        }
        // right action: covariant functoriality
        for psi in 0..m.right.morphism_count() {
            let (a, a2) = (m.right.src(psi), m.right.tgt(psi));
            for b in 0..m.left.object_count() {
                let f = m
                    .right_act
                    .get(&(b, psi))
                    .ok_or_else(|| FincatError::BadBimodule(format!("missing right action ({b}, {psi})")))?;
                if f.len() != m.size(b, a) || f.iter().any(|&y| y >= m.size(b, a2)) {
                    return Err(FincatError::BadBimodule(format!("right action ({b}, {psi}) ill-typed")));
                }
            }
        }
        for a in 0..m.right.object_count() {
            let e = m.right.identity_of(a);
            for b in 0..m.left.object_count() {
                if m.right_act[&(b, e)].iter().enumerate().any(|(x, &y)| x != y) {
                    return Err(FincatError::BadBimodule(format!("right identity action at ({b}, {a})")));
                }
            }
        }
        for psi in 0..m.right.morphism_count() {
            for &chi in m.right.morphisms_from(m.right.tgt(psi)) {
                let comp = m.right.compose(chi, psi).expect("composable");
                for b in 0..m.left.object_count() {
                    for x in 0..m.size(b, m.right.src(psi)) {
                        let via = m.right_act[&(b, chi)][m.right_act[&(b, psi)][x]];
                        if m.right_act[&(b, comp)][x] != via {
                            return Err(FincatError::BadBimodule(format!(
                                "right action not functorial on ({chi}, {psi})"
                            )));
                        }
                    }
                }
            }
        }
        // the two actions commute
        for phi in 0..m.left.morphism_count() {
            let (b, b2) = (m.left.src(phi), m.left.tgt(phi));
            for psi in 0..m.right.morphism_count() {
                let (a, a2) = (m.right.src(psi), m.right.tgt(psi));
                for x in 0..m.size(b2, a) {
                    let down_then_right = m.right_act[&(b, psi)][m.left_act[&(phi, a)][x]];
                    let right_then_down = m.left_act[&(phi, a2)][m.right_act[&(b2, psi)][x]];
                    if down_then_right != right_then_down {
                        return Err(FincatError::BadBimodule(format!(
                            "actions do not commute at (φ={phi}, ψ={psi}, x={x})"
                        )));
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn size(&self, b: usize, a: usize) -> usize {
        self.sizes[&(b, a)]
    }

    /// Pull x ∈ F(b', a) back along φ : b → b'.
    pub fn pull(&self, phi: usize, a: usize, x: usize) -> usize {
        self.left_act[&(phi, a)][x]
    }

    /// Push x ∈ F(b, a) forward along ψ : a → a'.
    pub fn push(&self, b: usize, psi: usize, x: usize) -> usize {
        self.right_act[&(b, psi)][x]
    }

    /// Builds the tables from closures (sizes and both actions), then validates.
    pub fn from_fns(
        left: Arc<FinCategory>,
        right: Arc<FinCategory>,
        size: impl Fn(usize, usize) -> usize,
        pull: impl Fn(usize, usize, usize) -> usize,
        push: impl Fn(usize, usize, usize) -> usize,
    ) -> Result<Bimodule, FincatError> {
        let mut sizes = BTreeMap::new();
        for b in 0..left.object_count() {
            for a in 0..right.object_count() {
                sizes.insert((b, a), size(b, a));
            }
        }
        let mut left_act = BTreeMap::new();
        for phi in 0..left.morphism_count() {
            for a in 0..right.object_count() {
                let n = sizes[&(left.tgt(phi), a)];
                left_act.insert((phi, a), (0..n).map(|x| pull(phi, a, x)).collect());
            }
        }
        let mut right_act = BTreeMap::new();
        for b in 0..left.object_count() {
            for psi in 0..right.morphism_count() {
                let n = sizes[&(b, right.src(psi))];
                right_act.insert((b, psi), (0..n).map(|x| push(b, psi, x)).collect());
            }
        }
        Bimodule::check(left, right, sizes, left_act, right_act)
    }
}
