use std::sync::Arc;

use super::category::{FinCategory, FincatError};

/// A functor between finite categories, stored as index maps and validated
/// exhaustively: sources, targets, identities and all composites.
#[derive(Debug, Clone)]
pub struct FinFunctor {
    pub source: Arc<FinCategory>,
    pub target: Arc<FinCategory>,
    ob: Vec<usize>,
    mor: Vec<usize>,
}

impl FinFunctor {
    pub fn check(
        source: Arc<FinCategory>,
        target: Arc<FinCategory>,
        ob: Vec<usize>,
        mor: Vec<usize>,
    ) -> Result<FinFunctor, FincatError> {
        if ob.len() != source.object_count() || mor.len() != source.morphism_count() {
            return Err(FincatError::NotAFunctor("map lengths disagree with the source".into()));
        }
        for &o in &ob {
            if o >= target.object_count() {
                return Err(FincatError::DanglingIndex { what: "functor object image", index: o });
            }
        }
        for (f, &ff) in mor.iter().enumerate() {
            if ff >= target.morphism_count() {
                return Err(FincatError::DanglingIndex { what: "functor morphism image", index: ff });
            }
            if target.src(ff) != ob[source.src(f)] || target.tgt(ff) != ob[source.tgt(f)] {
                return Err(FincatError::NotAFunctor(format!(
                    "morphism {f} maps to {ff} with wrong endpoints"
                )));
            }
        }
        for o in 0..source.object_count() {
            if mor[source.identity_of(o)] != target.identity_of(ob[o]) {
                return Err(FincatError::NotAFunctor(format!("identity of object {o} not preserved")));
            }
        }
        for f in 0..source.morphism_count() {
            for &g in source.morphisms_from(source.tgt(f)) {
                let gf = source.compose(g, f).expect("composable");
                let img = target.compose(mor[g], mor[f]).expect("composable image");
                if mor[gf] != img {
                    return Err(FincatError::NotAFunctor(format!(
                        "composite of ({g}, {f}) not preserved"
                    )));
                }
            }
        }
        Ok(FinFunctor { source, target, ob, mor })
    }

    pub fn identity(c: Arc<FinCategory>) -> FinFunctor {
        let ob = (0..c.object_count()).collect();
        let mor = (0..c.morphism_count()).collect();
        FinFunctor { source: c.clone(), target: c, ob, mor }
    }

    pub fn on_object(&self, o: usize) -> usize {
        self.ob[o]
    }

    pub fn on_morphism(&self, m: usize) -> usize {
        self.mor[m]
    }

    /// The same maps read as a functor between the opposite categories.
    pub fn opposite(&self) -> FinFunctor {
        FinFunctor {
            source: Arc::new(self.source.opposite()),
            target: Arc::new(self.target.opposite()),
            ob: self.ob.clone(),
            mor: self.mor.clone(),
        }
    }

    pub fn compose_with(&self, outer: &FinFunctor) -> FinFunctor {
        let ob = self.ob.iter().map(|&o| outer.ob[o]).collect();
        let mor = self.mor.iter().map(|&m| outer.mor[m]).collect();
        FinFunctor { source: self.source.clone(), target: outer.target.clone(), ob, mor }
    }
}
