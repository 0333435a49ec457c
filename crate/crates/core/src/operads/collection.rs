use std::collections::BTreeMap;

use thiserror::Error;

use crate::budget::Budget;
use crate::optrees::OperadClass;
use crate::ordinals::{all_quasibijections, enumerate_ordinals, NOrdinal, OrdinalMap};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OperadError {
    #[error("axiom failure: {0}")]
    AxiomFailure(String),
    #[error("composition on classes depends on representatives: {0}")]
    RepresentativeDependence(String),
    #[error("size budget exceeded: {0}")]
    SizeBudgetExceeded(String),
    #[error("ill-typed data: {0}")]
    IllTyped(String),
}

/// The colours of a given class and depth, up to an ordinal-size budget, in
/// enumeration order.
pub fn colours(depth: usize, max_size: usize, class: OperadClass) -> Vec<NOrdinal> {
    let lo = match class {
        OperadClass::General => 0,
        OperadClass::ConstantFree | OperadClass::Normal => 1,
    };
    let mut out = Vec::new();
    for k in lo..=max_size {
        out.extend(enumerate_ordinals(depth, k, 1_000_000).expect("in-budget enumeration"));
    }
    out
}

/// A finite-set-valued collection on the quasibijection category: a set per
/// in-budget colour and a compatible function per quasibijection, acting
/// contravariantly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Collection {
    pub depth: usize,
    pub max_size: usize,
    pub class: OperadClass,
    values: BTreeMap<NOrdinal, usize>,
    /// per quasibijection σ : T → S, the function A(S) → A(T)
    action: BTreeMap<OrdinalMap, Vec<usize>>,
}

impl Collection {
    pub fn check(
        depth: usize,
        max_size: usize,
        class: OperadClass,
        values: BTreeMap<NOrdinal, usize>,
        action: BTreeMap<OrdinalMap, Vec<usize>>,
    ) -> Result<Collection, OperadError> {
        let cols = colours(depth, max_size, class);
        for t in &cols {
            if !values.contains_key(t) {
                return Err(OperadError::IllTyped(format!("missing value at {t:?}")));
            }
        }
        let c = Collection { depth, max_size, class, values, action };
        for s in &cols {
            for t in &cols {
                for q in all_quasibijections(t, s) {
                    let f = c
                        .action
                        .get(&q)
                        .ok_or_else(|| OperadError::IllTyped(format!("missing action at {q:?}")))?;
                    if f.len() != c.value(s) || f.iter().any(|&y| y >= c.value(t)) {
                        return Err(OperadError::IllTyped(format!("ill-typed action at {q:?}")));
                    }
                }
            }
        }
        // identities and contravariant functoriality
        for t in &cols {
            let id = OrdinalMap::identity(t);
            if c.action[&id].iter().enumerate().any(|(x, &y)| x != y) {
                return Err(OperadError::AxiomFailure(format!("identity action at {t:?}")));
            }
        }
        for s in &cols {
            for t in &cols {
                for q in all_quasibijections(t, s) {
                    for u in &cols {
                        for r in all_quasibijections(s, u) {
                            let qr = q.then(&r);
                            for x in 0..c.value(u) {
                                if c.act(&qr, x) != c.act(&q, c.act(&r, x)) {
                                    return Err(OperadError::AxiomFailure(format!(
                                        "action not functorial on {q:?} then {r:?}"
                                    )));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(c)
    }

    /// The constant collection with a fixed fiber and identity actions.
    pub fn constant(
        depth: usize,
        max_size: usize,
        class: OperadClass,
        size: usize,
    ) -> Collection {
        let cols = colours(depth, max_size, class);
        let values = cols.iter().map(|t| (t.clone(), size)).collect();
        let mut action = BTreeMap::new();
        for s in &cols {
            for t in &cols {
                for q in all_quasibijections(t, s) {
                    action.insert(q, (0..size).collect());
                }
            }
        }
        Collection { depth, max_size, class, values, action }
    }

    /// The collection represented by an object: T ↦ quasibijections T → R,
    /// acting by precomposition.
    pub fn representable(
        depth: usize,
        max_size: usize,
        class: OperadClass,
        r: &NOrdinal,
    ) -> Collection {
        let cols = colours(depth, max_size, class);
        let cell = |t: &NOrdinal| all_quasibijections(t, r);
        let values = cols.iter().map(|t| (t.clone(), cell(t).len())).collect();
        let mut action = BTreeMap::new();
        for s in &cols {
            let cell_s = cell(s);
            for t in &cols {
                let cell_t = cell(t);
                for q in all_quasibijections(t, s) {
                    let f = cell_s
                        .iter()
                        .map(|h| {
                            let composite = q.then(h);
                            cell_t.iter().position(|x| *x == composite).expect("closed")
                        })
                        .collect();
                    action.insert(q, f);
                }
            }
        }
        Collection { depth, max_size, class, values, action }
    }

    /// Disjoint union of two collections over the same index data.
    pub fn coproduct(&self, other: &Collection) -> Collection {
        assert_eq!((self.depth, self.max_size, self.class), (other.depth, other.max_size, other.class));
        let values = self
            .values
            .iter()
            .map(|(t, &n)| (t.clone(), n + other.value_of(t)))
            .collect();
        let action = self
            .action
            .iter()
            .map(|(q, f)| {
                let g = &other.action[q];
                let left = self.value(q.source());
                let mut combined: Vec<usize> = f.clone();
                combined.extend(g.iter().map(|&y| y + left));
                (q.clone(), combined)
            })
            .collect();
        Collection { values, action, ..self.clone() }
    }

    /// The empty collection.
    pub fn empty(depth: usize, max_size: usize, class: OperadClass) -> Collection {
        Collection::constant(depth, max_size, class, 0)
    }

    pub fn value_of(&self, t: &NOrdinal) -> usize {
        self.values[t]
    }

    pub fn value(&self, t: &NOrdinal) -> usize {
        self.values[t]
    }

    pub fn act(&self, q: &OrdinalMap, x: usize) -> usize {
        self.action[q][x]
    }

    pub fn values(&self) -> &BTreeMap<NOrdinal, usize> {
        &self.values
    }

    pub fn action_table(&self) -> &BTreeMap<OrdinalMap, Vec<usize>> {
        &self.action
    }

    pub fn colour_list(&self) -> Vec<NOrdinal> {
        colours(self.depth, self.max_size, self.class)
    }

    pub fn from_budget(b: &Budget) -> (usize, usize) {
        (b.max_depth, b.max_arity)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_and_representable_collections_validate() {
        for class in [OperadClass::General, OperadClass::ConstantFree, OperadClass::Normal] {
            let c = Collection::constant(2, 3, class, 2);
            Collection::check(2, 3, class, c.values.clone(), c.action.clone()).unwrap();
        }
        let r = NOrdinal::new(2, 2, vec![1]).unwrap();
        let c = Collection::representable(2, 3, OperadClass::Normal, &r);
        Collection::check(2, 3, OperadClass::Normal, c.values.clone(), c.action.clone()).unwrap();
        // the representable at the level-1 pair has 2 elements at the
        // level-0 pair and 1 at itself
        let a = NOrdinal::new(2, 2, vec![0]).unwrap();
        assert_eq!(c.value(&a), 2);
        assert_eq!(c.value(&r), 1);
    }

    #[test]
    fn coproduct_adds_sizes() {
        let a = Collection::constant(2, 2, OperadClass::Normal, 1);
        let b = Collection::constant(2, 2, OperadClass::Normal, 2);
        let c = a.coproduct(&b);
        let t = NOrdinal::new(2, 2, vec![0]).unwrap();
        assert_eq!(c.value(&t), 3);
        Collection::check(2, 2, OperadClass::Normal, c.values.clone(), c.action.clone()).unwrap();
    }
}
