use super::category::FincatError;
use super::comma::{comma_over, comma_under};
use super::functor::FinFunctor;
use super::limits::UnionFind;

/// Outcome of a finality check: one witness comma object per target object,
/// or the first failing object with its component decomposition.
#[derive(Debug, Clone)]
pub struct FinalityCertificate {
    pub is_final: bool,
    /// per target object b, a witness object of b/u (when nonempty)
    pub witnesses: Vec<Option<(usize, usize)>>,
    /// on failure, the offending b and the components of b/u (objects listed
    /// as (source object, target morphism) pairs; empty when b/u is empty)
    pub failure: Option<(usize, Vec<Vec<(usize, usize)>>)>,
}

/// Certifies finality of a functor: every comma category b/u must be
/// nonempty and connected.
pub fn is_final(u: &FinFunctor) -> Result<FinalityCertificate, FincatError> {
    let tgt = &u.target;
    let mut witnesses = Vec::new();
    for b in 0..tgt.object_count() {
        let c = comma_under(b, u)?;
        let comps = components_of(&c.cat, c.objects.len());
        if comps.len() != 1 {
            let decomposition = comps
                .into_iter()
                .map(|g| g.into_iter().map(|i| c.objects[i]).collect())
                .collect();
            witnesses.push(None);
            return Ok(FinalityCertificate {
                is_final: false,
                witnesses,
                failure: Some((b, decomposition)),
            });
        }
        witnesses.push(Some(c.objects[0]));
    }
    Ok(FinalityCertificate { is_final: true, witnesses, failure: None })
}

fn components_of(cat: &super::category::FinCategory, n_objects: usize) -> Vec<Vec<usize>> {
    let mut uf = UnionFind::new(n_objects);
    for m in 0..cat.morphism_count() {
        uf.union(cat.src(m), cat.tgt(m));
    }
    uf.groups()
}

/// Report of the per-object comma analysis behind the disconnectedness
/// checks: terminal objects per component, and the π₀ transition data.
#[derive(Debug, Clone)]
pub struct DisconnectedReport {
    pub holds: bool,
    /// object b at which the condition first fails, if any
    pub failing_object: Option<usize>,
    /// morphism of the base at which the π₀-bijection first fails, if any
    pub failing_transition: Option<usize>,
}

/// True iff every comma category u/b has a terminal object in each connected
/// component.
pub fn is_disconnected_functor(u: &FinFunctor) -> Result<DisconnectedReport, FincatError> {
    for b in 0..u.target.object_count() {
        let c = comma_over(u, b)?;
        if !each_component_has_terminal(&c.cat) {
            return Ok(DisconnectedReport {
                holds: false,
                failing_object: Some(b),
                failing_transition: None,
            });
        }
    }
    Ok(DisconnectedReport { holds: true, failing_object: None, failing_transition: None })
}

/// True iff the functor is disconnected and every morphism b → b' of the
/// target induces a bijection π₀(u/b) → π₀(u/b').
pub fn is_constantly_disconnected(u: &FinFunctor) -> Result<DisconnectedReport, FincatError> {
    let base = is_disconnected_functor(u)?;
    if !base.holds {
        return Ok(base);
    }
    let tgt = &u.target;
    let mut commas = Vec::new();
    for b in 0..tgt.object_count() {
        commas.push(comma_over(u, b)?);
    }
    let pi0: Vec<(usize, Vec<usize>)> = commas
        .iter()
        .map(|c| {
            let comps = components_of(&c.cat, c.objects.len());
            let mut class = vec![0usize; c.objects.len()];
            for (ci, g) in comps.iter().enumerate() {
                for &o in g {
                    class[o] = ci;
                }
            }
            (comps.len(), class)
        })
        .collect();
    for g in 0..tgt.morphism_count() {
        let (b, b2) = (tgt.src(g), tgt.tgt(g));
        let mut image = vec![usize::MAX; pi0[b].0];
        for (i, &(a, f)) in commas[b].objects.iter().enumerate() {
            let gf = tgt.compose(g, f).expect("composable");
            let j = commas[b2].object_index(a, gf).expect("comma image");
            let (src_cls, dst_cls) = (pi0[b].1[i], pi0[b2].1[j]);
            if image[src_cls] == usize::MAX {
                image[src_cls] = dst_cls;
            } else if image[src_cls] != dst_cls {
                // not even well defined on components; cannot be a bijection
                return Ok(DisconnectedReport {
                    holds: false,
                    failing_object: None,
                    failing_transition: Some(g),
                });
            }
        }
        let mut seen = vec![false; pi0[b2].0];
        let mut ok = pi0[b].0 == pi0[b2].0;
        for &v in &image {
            if v == usize::MAX || seen[v] {
                ok = false;
                break;
            }
            seen[v] = true;
        }
        if !ok || seen.iter().any(|&s| !s) {
            return Ok(DisconnectedReport {
                holds: false,
                failing_object: None,
                failing_transition: Some(g),
            });
        }
    }
    Ok(DisconnectedReport { holds: true, failing_object: None, failing_transition: None })
}

/// True iff the category has a terminal object in every connected component.
pub fn each_component_has_terminal(cat: &super::category::FinCategory) -> bool {
    let comps = components_of(cat, cat.object_count());
    for comp in comps {
        let mut found = false;
        for &t in &comp {
            if comp.iter().all(|&x| cat.hom(x, t).len() == 1) {
                found = true;
                break;
            }
        }
        if !found {
            return false;
        }
    }
    true
}

/// True iff the category has an initial object in every connected component.
pub fn each_component_has_initial(cat: &super::category::FinCategory) -> bool {
    each_component_has_terminal(&cat.opposite())
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::fincat::category::FinCategory;

    #[test]
    fn identity_functor_is_final() {
        let arrow = Arc::new(FinCategory::arrow());
        let id = FinFunctor::identity(arrow);
        assert!(is_final(&id).unwrap().is_final);
        let rep = is_constantly_disconnected(&id).unwrap();
        assert!(rep.holds);
    }

    #[test]
    fn terminal_object_inclusion_is_final() {
        let arrow = Arc::new(FinCategory::arrow());
        let one = Arc::new(FinCategory::terminal());
        let incl = FinFunctor::check(one, arrow.clone(), vec![1], vec![arrow.identity_of(1)]).unwrap();
        assert!(is_final(&incl).unwrap().is_final);
    }

    #[test]
    fn domain_inclusion_into_arrow_is_not_final() {
        // the comma b/u at b = codomain is empty
        let arrow = Arc::new(FinCategory::arrow());
        let one = Arc::new(FinCategory::terminal());
        let incl = FinFunctor::check(one, arrow.clone(), vec![0], vec![arrow.identity_of(0)]).unwrap();
        let cert = is_final(&incl).unwrap();
        assert!(!cert.is_final);
        assert_eq!(cert.failure.as_ref().unwrap().0, 1);
        assert!(cert.failure.unwrap().1.is_empty());
    }

    #[test]
    fn empty_into_nonempty_is_not_final() {
        let empty = Arc::new(FinCategory::empty());
        let one = Arc::new(FinCategory::terminal());
        let u = FinFunctor::check(empty, one, vec![], vec![]).unwrap();
        assert!(!is_final(&u).unwrap().is_final);
    }

    #[test]
    fn discrete_to_terminal_is_disconnected_but_not_constantly_on_noniso() {
        let two = Arc::new(FinCategory::discrete(2));
        let one = Arc::new(FinCategory::terminal());
        let u = FinFunctor::check(two, one, vec![0, 0], vec![0, 0]).unwrap();
        assert!(is_disconnected_functor(&u).unwrap().holds);
        assert!(is_constantly_disconnected(&u).unwrap().holds);
    }
}
