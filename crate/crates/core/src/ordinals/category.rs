use std::collections::BTreeMap;
use std::sync::Arc;

use crate::budget::Budget;
use crate::fincat::{comma_over, CatBuilder, CommaCategory, FinCategory, FinFunctor, FincatError};

use super::map::{all_quasibijections, OrdinalMap};
use super::ordinal::{enumerate_ordinals, NOrdinal, OrdinalError};

/// The category Q_n(k): all n-ordinals of size k with every quasibijection
/// between them.
#[derive(Debug, Clone)]
pub struct QuasibijCategory {
    pub cat: Arc<FinCategory>,
    pub ordinals: Vec<NOrdinal>,
    /// per morphism, the ordinal map it stands for
    pub maps: Vec<OrdinalMap>,
}

impl QuasibijCategory {
    pub fn ordinal_index(&self, t: &NOrdinal) -> Option<usize> {
        self.ordinals.iter().position(|o| o == t)
    }
}

pub fn quasibijection_category(
    depth: usize,
    size: usize,
    budget: &Budget,
) -> Result<QuasibijCategory, OrdinalError> {
    if depth > budget.max_depth || size > budget.max_ordinal_size {
        return Err(OrdinalError::SizeBudgetExceeded(format!(
            "Q_{depth}({size}) exceeds the budget (n ≤ {}, k ≤ {})",
            budget.max_depth, budget.max_ordinal_size
        )));
    }
    let ordinals = enumerate_ordinals(depth, size, budget.max_morphisms)?;
    let mut b = CatBuilder::with_cap(budget.max_morphisms);
    for t in &ordinals {
        b.add_object(super::literal::print_ordinal(t));
    }
    let mut maps: Vec<OrdinalMap> = ordinals.iter().map(OrdinalMap::identity).collect();
    let mut locate: BTreeMap<(usize, usize, Vec<usize>), usize> = BTreeMap::new();
    for (i, t) in ordinals.iter().enumerate() {
        locate.insert((i, i, (0..t.size()).collect()), b.identity_index(i));
    }
    for (i, s) in ordinals.iter().enumerate() {
        for (j, t) in ordinals.iter().enumerate() {
            for f in all_quasibijections(s, t) {
                if i == j && f.underlying().iter().enumerate().all(|(x, &y)| x == y) {
                    continue; // identity
                }
                let m = b.add_morphism(i, j, format!("{:?}", f.underlying()));
                locate.insert((i, j, f.underlying().to_vec()), m);
                maps.push(f);
            }
        }
    }
    let maps_for_compose = maps.clone();
    let ordinal_index: BTreeMap<NOrdinal, usize> =
        ordinals.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
    let cat = b
        .build_with(|g, f| {
            let comp = maps_for_compose[f].then(&maps_for_compose[g]);
            let i = ordinal_index[comp.source()];
            let j = ordinal_index[comp.target()];
            locate[&(i, j, comp.underlying().to_vec())]
        })
        .map_err(|e| OrdinalError::SizeBudgetExceeded(e.to_string()))?;
    Ok(QuasibijCategory { cat: Arc::new(cat), ordinals, maps })
}

/// The symmetric group on k letters as a one-object groupoid; morphisms are
/// the permutations in lexicographic order.
#[derive(Debug, Clone)]
pub struct SymGroupoid {
    pub cat: Arc<FinCategory>,
    pub perms: Vec<Vec<usize>>,
    /// permutation index → morphism index
    pub mor_of_perm: Vec<usize>,
    /// morphism index → permutation index
    pub perm_of_mor: Vec<usize>,
}

impl SymGroupoid {
    pub fn perm_index(&self, p: &[usize]) -> usize {
        self.perms.binary_search_by(|q| q.as_slice().cmp(p)).expect("a permutation")
    }

    pub fn morphism_of(&self, p: &[usize]) -> usize {
        self.mor_of_perm[self.perm_index(p)]
    }

    pub fn perm_of(&self, m: usize) -> &[usize] {
        &self.perms[self.perm_of_mor[m]]
    }
}

pub fn symmetric_groupoid(k: usize) -> SymGroupoid {
    let mut perms = Vec::new();
    permutations(k, &mut (0..k).collect::<Vec<_>>(), 0, &mut perms);
    perms.sort();
    let mut b = CatBuilder::with_cap(usize::MAX);
    b.add_object(format!("{k}"));
    let mut mor_of_perm = vec![0usize; perms.len()];
    for (i, p) in perms.iter().enumerate() {
        if p.iter().enumerate().all(|(x, &y)| x == y) {
            mor_of_perm[i] = b.identity_index(0);
        } else {
            mor_of_perm[i] = b.add_morphism(0, 0, format!("{p:?}"));
        }
    }
    let mut perm_of_mor = vec![0usize; b.morphism_count()];
    for (pi, &m) in mor_of_perm.iter().enumerate() {
        perm_of_mor[m] = pi;
    }
    let perms2 = perms.clone();
    let pom = perm_of_mor.clone();
    let mop = mor_of_perm.clone();
    let cat = b
        .build_with(|g, f| {
            let pg = &perms2[pom[g]];
            let pf = &perms2[pom[f]];
            let comp: Vec<usize> = (0..pf.len()).map(|x| pg[pf[x]]).collect();
            mop[perms2.binary_search(&comp).expect("closed under composition")]
        })
        .expect("symmetric groupoid is a category");
    SymGroupoid { cat: Arc::new(cat), perms, mor_of_perm, perm_of_mor }
}

fn permutations(k: usize, cur: &mut Vec<usize>, at: usize, out: &mut Vec<Vec<usize>>) {
    if at == k {
        out.push(cur.clone());
        return;
    }
    for i in at..k {
        cur.swap(at, i);
        permutations(k, cur, at + 1, out);
        cur.swap(at, i);
    }
}

/// The total-order functor Q_n(k) → S(k): collapse every ordinal to its
/// underlying ordinal and every quasibijection to its underlying bijection.
pub fn total_order_functor(
    q: &QuasibijCategory,
    s: &SymGroupoid,
) -> Result<FinFunctor, FincatError> {
    let ob = vec![0usize; q.cat.object_count()];
    let mor = q.maps.iter().map(|f| s.morphism_of(f.underlying())).collect();
    FinFunctor::check(q.cat.clone(), s.cat.clone(), ob, mor)
}

/// A Milgram poset J_n(k) realized as the comma category of the total-order
/// functor over the unique object of S(k), certified to be a poset.
#[derive(Debug, Clone)]
pub struct MilgramPoset {
    pub comma: CommaCategory,
    /// (index into the ordinal list, permutation written as a vector)
    pub objects: Vec<(usize, Vec<usize>)>,
    pub q: QuasibijCategory,
    pub sym: SymGroupoid,
}

impl MilgramPoset {
    pub fn cat(&self) -> &Arc<FinCategory> {
        &self.comma.cat
    }
}

#[derive(Debug, thiserror::Error)]
pub enum MilgramError {
    #[error(transparent)]
    Ordinal(#[from] OrdinalError),
    #[error(transparent)]
    Fincat(#[from] FincatError),
    #[error("not a poset: parallel morphisms between objects {0} and {1}")]
    NotAPoset(usize, usize),
}

pub fn milgram_poset(depth: usize, size: usize, budget: &Budget) -> Result<MilgramPoset, MilgramError> {
    let q = quasibijection_category(depth, size, budget)?;
    let sym = symmetric_groupoid(size);
    let functor = total_order_functor(&q, &sym)?;
    let comma = comma_over(&functor, 0)?;
    let cat = &comma.cat;
    for i in 0..cat.object_count() {
        for j in 0..cat.object_count() {
            if cat.hom(i, j).len() > 1 {
                return Err(MilgramError::NotAPoset(i, j));
            }
        }
    }
    let objects = comma
        .objects
        .iter()
        .map(|&(a, f)| (a, sym.perm_of(f).to_vec()))
        .collect();
    Ok(MilgramPoset { comma, objects, q, sym })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_1_k_is_discrete_with_one_object() {
        let b = Budget::default();
        for k in 1..4 {
            let q = quasibijection_category(1, k, &b).unwrap();
            assert_eq!(q.cat.object_count(), 1);
            assert_eq!(q.cat.morphism_count(), 1);
        }
    }

    #[test]
    fn q_2_2_has_two_parallel_arrows() {
        let b = Budget::default();
        let q = quasibijection_category(2, 2, &b).unwrap();
        assert_eq!(q.cat.object_count(), 2);
        assert_eq!(q.cat.morphism_count(), 4);
        assert_eq!(q.cat.hom(0, 1).len(), 2);
        assert_eq!(q.cat.hom(1, 0).len(), 0);
    }

    #[test]
    fn q_3_2_hom_table() {
        let b = Budget::default();
        let q = quasibijection_category(3, 2, &b).unwrap();
        assert_eq!(q.cat.object_count(), 3);
        for i in 0..3 {
            for j in 0..3 {
                let expected = match i.cmp(&j) {
                    std::cmp::Ordering::Less => 2,
                    std::cmp::Ordering::Equal => 1,
                    std::cmp::Ordering::Greater => 0,
                };
                assert_eq!(q.cat.hom(i, j).len(), expected);
            }
        }
    }

    #[test]
    fn milgram_j_1_k_is_discrete_with_factorial_objects() {
        let b = Budget::default();
        let j = milgram_poset(1, 3, &b).unwrap();
        assert_eq!(j.cat().object_count(), 6);
        assert_eq!(j.cat().morphism_count(), 6);
    }

    #[test]
    fn milgram_j_2_2_is_a_4_cycle() {
        let b = Budget::default();
        let j = milgram_poset(2, 2, &b).unwrap();
        assert_eq!(j.cat().object_count(), 4);
        // 4 identities + 4 covering arrows
        assert_eq!(j.cat().morphism_count(), 8);
        // underlying graph is a single cycle: every object meets exactly two
        // non-identity arrows
        for o in 0..4 {
            let deg: usize = (0..j.cat().morphism_count())
                .filter(|&m| !j.cat().is_identity(m))
                .filter(|&m| j.cat().src(m) == o || j.cat().tgt(m) == o)
                .count();
            assert_eq!(deg, 2);
        }
    }

    #[test]
    fn milgram_object_counts_match_the_product_formula() {
        let b = Budget::default();
        for (n, k) in [(2usize, 2usize), (2, 3), (3, 2), (3, 3)] {
            let j = milgram_poset(n, k, &b).unwrap();
            let ords = enumerate_ordinals(n, k, 1_000_000).unwrap();
            let fact: usize = (1..=k).product();
            assert_eq!(j.cat().object_count(), fact * ords.len());
        }
    }

    #[test]
    fn total_order_functor_validates() {
        let b = Budget::default();
        let q = quasibijection_category(2, 3, &b).unwrap();
        let s = symmetric_groupoid(3);
        total_order_functor(&q, &s).unwrap();
    }
}
