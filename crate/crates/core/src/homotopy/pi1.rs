use std::collections::VecDeque;

use num_traits::One;

use crate::fincat::FinCategory;

use super::matrix::{snf_invariant_factors, SparseInt};
use super::nerve::HomotopyError;

/// Edge-path presentation of the fundamental group of the nerve: generators
/// are the non-identity morphisms outside a spanning tree, one relation per
/// composable pair, and the abelianization via integer Smith normal form.
#[derive(Debug, Clone)]
pub struct GroupPresentation {
    pub basepoint: usize,
    /// morphism indices serving as generators
    pub generators: Vec<usize>,
    /// the spanning tree, as morphism indices
    pub tree: Vec<usize>,
    /// relations (g, f, g∘f) over composable non-identity pairs
    pub relations: Vec<(usize, usize, usize)>,
    pub ab_free_rank: usize,
    pub ab_torsion: Vec<String>,
}

impl GroupPresentation {
    pub fn abelianization_display(&self) -> String {
        if self.ab_free_rank == 0 && self.ab_torsion.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        if self.ab_free_rank == 1 {
            parts.push("Z".to_string());
        } else if self.ab_free_rank > 1 {
            parts.push(format!("Z^{}", self.ab_free_rank));
        }
        for t in &self.ab_torsion {
            parts.push(format!("Z/{t}"));
        }
        parts.join(" + ")
    }
}

/// Edge-path group presentation of a connected category, abelianized.
///
/// The spanning tree is grown breadth-first from the least object index, so
/// the output is deterministic.
pub fn pi1_presentation(
    cat: &FinCategory,
    basepoint: usize,
) -> Result<GroupPresentation, HomotopyError> {
    if cat.object_count() == 0 || !cat.is_connected() {
        return Err(HomotopyError::NotConnected);
    }
    assert!(basepoint < cat.object_count());
    // breadth-first spanning tree over the undirected graph of non-identity
    // morphisms, rooted at the least object
    let nonid: Vec<usize> = (0..cat.morphism_count()).filter(|&m| !cat.is_identity(m)).collect();
    let mut tree = Vec::new();
    let mut visited = vec![false; cat.object_count()];
    visited[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(o) = queue.pop_front() {
        for &m in &nonid {
            let (s, t) = (cat.src(m), cat.tgt(m));
            let other = if s == o {
                t
            } else if t == o {
                s
            } else {
                continue;
            };
            if !visited[other] {
                visited[other] = true;
                tree.push(m);
                queue.push_back(other);
            }
        }
    }
    let in_tree = |m: usize| tree.contains(&m);
    let generators: Vec<usize> = nonid.iter().copied().filter(|&m| !in_tree(m)).collect();
    let gen_index = |m: usize| generators.binary_search(&m).ok();

    let mut relations = Vec::new();
    for &f in &nonid {
        for &g in cat.morphisms_from(cat.tgt(f)) {
            if cat.is_identity(g) {
                continue;
            }
            let gf = cat.compose(g, f).expect("composable");
            relations.push((g, f, gf));
        }
    }

    // abelianized relation matrix: rows are relations, columns generators;
    // tree edges and identities contribute zero
    let mut m = SparseInt::new(relations.len(), generators.len());
    for (r, &(g, f, gf)) in relations.iter().enumerate() {
        for (mor, sign) in [(g, 1i64), (f, 1), (gf, -1)] {
            if cat.is_identity(mor) {
                continue;
            }
            if let Some(c) = gen_index(mor) {
                m.add(r, c, sign);
            }
        }
    }
    let factors = snf_invariant_factors(&m);
    let rank = factors.len();
    let ab_torsion = factors
        .iter()
        .filter(|f| !(*f).is_one())
        .map(|f| f.to_string())
        .collect();
    Ok(GroupPresentation {
        basepoint,
        generators: generators.clone(),
        tree,
        relations,
        ab_free_rank: generators.len() - rank,
        ab_torsion,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::fincat::FinCategory;
    use crate::ordinals::quasibijection_category;

    #[test]
    fn terminal_object_gives_trivial_abelianization() {
        let p = pi1_presentation(&FinCategory::arrow(), 0).unwrap();
        assert_eq!(p.ab_free_rank, 0);
        assert!(p.ab_torsion.is_empty());
    }

    #[test]
    fn q_2_2_has_infinite_cyclic_abelianization() {
        let q = quasibijection_category(2, 2, &Budget::default()).unwrap();
        let p = pi1_presentation(&q.cat, 0).unwrap();
        assert_eq!(p.ab_free_rank, 1);
        assert!(p.ab_torsion.is_empty());
    }

    #[test]
    fn q_3_2_abelianization_is_z_mod_2() {
        let q = quasibijection_category(3, 2, &Budget::default()).unwrap();
        let p = pi1_presentation(&q.cat, 0).unwrap();
        assert_eq!(p.ab_free_rank, 0);
        assert_eq!(p.ab_torsion, vec!["2".to_string()]);
    }

    #[test]
    fn disconnected_input_is_rejected() {
        assert!(pi1_presentation(&FinCategory::discrete(2), 0).is_err());
    }
}
