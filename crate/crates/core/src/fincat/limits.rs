use super::category::FincatError;
use super::comma::comma_over;
use super::functor::FinFunctor;
use super::presheaf::SetPresheaf;

/// Plain union-find with deterministic least-index representatives.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> UnionFind {
        UnionFind { parent: (0..n).collect() }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut c = x;
        while self.parent[c] != r {
            let next = self.parent[c];
            self.parent[c] = r;
            c = next;
        }
        r
    }

    /// Union keeping the smaller index as representative.
    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    /// Groups listed by ascending representative; members ascending.
    pub fn groups(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut by_rep: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for x in 0..n {
            let r = self.find(x);
            by_rep.entry(r).or_default().push(x);
        }
        by_rep.into_values().collect()
    }
}

/// A colimit of a Set-presheaf: the quotient set with its cocone.
#[derive(Debug, Clone)]
pub struct Colimit {
    pub size: usize,
    /// cocone[o][x] = class of element x of X(o)
    pub cocone: Vec<Vec<usize>>,
    /// canonical representative (object, element) per class, least in
    /// (object index, element index) lexicographic order
    pub reps: Vec<(usize, usize)>,
}

/// Colimit of a covariant Set-presheaf: connected components of the category
/// of elements, computed by union-find with deterministic representatives.
pub fn colim(x: &SetPresheaf) -> Colimit {
    let base = &x.base;
    let mut offset = vec![0usize; base.object_count() + 1];
    for o in 0..base.object_count() {
        offset[o + 1] = offset[o] + x.size(o);
    }
    let total = offset[base.object_count()];
    let mut uf = UnionFind::new(total);
    for f in 0..base.morphism_count() {
        let (s, t) = (base.src(f), base.tgt(f));
        for e in 0..x.size(s) {
            uf.union(offset[s] + e, offset[t] + x.apply(f, e));
        }
    }
    let mut class_of = vec![usize::MAX; total];
    let mut reps = Vec::new();
    for g in uf.groups() {
        let r = g[0];
        let o = match offset.binary_search(&r) {
            Ok(i) => i,
            Err(i) => i - 1,
        };
        let idx = reps.len();
        reps.push((o, r - offset[o]));
        for m in g {
            class_of[m] = idx;
        }
    }
    let cocone = (0..base.object_count())
        .map(|o| (0..x.size(o)).map(|e| class_of[offset[o] + e]).collect())
        .collect();
    Colimit { size: reps.len(), cocone, reps }
}

/// Limit of a covariant Set-presheaf: families compatible with every action
/// map, as a subset of the product. Returns the families themselves.
pub fn lim(x: &SetPresheaf) -> Result<Vec<Vec<usize>>, FincatError> {
    let base = &x.base;
    let n = base.object_count();
    if n == 0 {
        return Ok(vec![Vec::new()]); // empty product
    }
    let mut product: u128 = 1;
    for o in 0..n {
        product = product.saturating_mul(x.size(o) as u128);
        if product > 10_000_000 {
            return Err(FincatError::SizeBudgetExceeded("limit product too large".into()));
        }
    }
    let mut families = Vec::new();
    let mut cur = vec![0usize; n];
    if (0..n).any(|o| x.size(o) == 0) {
        return Ok(Vec::new());
    }
    loop {
        let ok = (0..base.morphism_count())
            .all(|f| x.apply(f, cur[base.src(f)]) == cur[base.tgt(f)]);
        if ok {
            families.push(cur.clone());
        }
        // odometer
        let mut o = 0;
        loop {
            if o == n {
                return Ok(families);
            }
            cur[o] += 1;
            if cur[o] < x.size(o) {
                break;
            }
            cur[o] = 0;
            o += 1;
        }
    }
}

/// Pointwise left Kan extension of X along u: value at b is the colimit of
/// X over the comma category u/b, with the induced action maps.
pub fn left_kan(u: &FinFunctor, x: &SetPresheaf) -> Result<SetPresheaf, FincatError> {
    let tgt = u.target.clone();
    let mut commas = Vec::new();
    let mut colims = Vec::new();
    for b in 0..tgt.object_count() {
        let c = comma_over(u, b)?;
        let sizes = c.objects.iter().map(|&(a, _)| x.size(a)).collect::<Vec<_>>();
        let maps = (0..c.cat.morphism_count())
            .map(|m| x.map(c.underlying[m]).to_vec())
            .collect::<Vec<_>>();
        let pre = SetPresheaf::check(c.cat.clone(), sizes, maps)?;
        let col = colim(&pre);
        commas.push(c);
        colims.push(col);
    }
    let sizes: Vec<usize> = colims.iter().map(|c| c.size).collect();
    let mut maps = Vec::new();
    for g in 0..tgt.morphism_count() {
        let (b, b2) = (tgt.src(g), tgt.tgt(g));
        // the comma functor (a, f) ↦ (a, g ∘ f) induces the class map
        let mut map = vec![usize::MAX; sizes[b]];
        for (i, &(a, f)) in commas[b].objects.iter().enumerate() {
            let gf = tgt.compose(g, f).expect("composable");
            let j = commas[b2]
                .object_index(a, gf)
                .expect("comma object image exists");
            for e in 0..x.size(a) {
                let cls = colims[b].cocone[i][e];
                let img = colims[b2].cocone[j][e];
                if map[cls] == usize::MAX {
                    map[cls] = img;
                } else if map[cls] != img {
                    return Err(FincatError::BadPresheaf(
                        "left Kan action map is not well defined".into(),
                    ));
                }
            }
        }
        if map.iter().any(|&v| v == usize::MAX) {
            return Err(FincatError::BadPresheaf("left Kan action map is partial".into()));
        }
        maps.push(map);
    }
    SetPresheaf::check(tgt, sizes, maps)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::fincat::category::{CatBuilder, FinCategory};

    #[test]
    fn colim_of_constant_singleton_on_connected_base_is_singleton() {
        let arrow = Arc::new(FinCategory::arrow());
        let x = SetPresheaf::constant(arrow, 1);
        assert_eq!(colim(&x).size, 1);
    }

    #[test]
    fn colim_on_discrete_base_is_disjoint_union() {
        let base = Arc::new(FinCategory::discrete(2));
        let x = SetPresheaf::check(base, vec![1, 2], vec![vec![0], vec![0, 1]]).unwrap();
        assert_eq!(colim(&x).size, 3);
    }

    #[test]
    fn coequalizer_of_identity_and_swap() {
        // parallel pair with id and the swap on {1, 2}
        let mut b = CatBuilder::new();
        let s = b.add_object("s");
        let t = b.add_object("t");
        b.add_morphism(s, t, "u");
        b.add_morphism(s, t, "v");
        let base = Arc::new(b.build_with(|_, _| unreachable!()).unwrap());
        let x = SetPresheaf::check(base, vec![2, 2], vec![
            vec![0, 1],
            vec![0, 1],
            vec![0, 1], // id acts as identity
            vec![1, 0], // swap
        ])
        .unwrap();
        assert_eq!(colim(&x).size, 1);
    }

    #[test]
    fn limit_is_product_on_discrete_base_and_equalizer_on_parallel_pair() {
        let base = Arc::new(FinCategory::discrete(2));
        let x = SetPresheaf::check(base, vec![1, 2], vec![vec![0], vec![0, 1]]).unwrap();
        assert_eq!(lim(&x).unwrap().len(), 2);

        let mut b = CatBuilder::new();
        let s = b.add_object("s");
        let t = b.add_object("t");
        b.add_morphism(s, t, "u");
        b.add_morphism(s, t, "v");
        let base = Arc::new(b.build_with(|_, _| unreachable!()).unwrap());
        let x = SetPresheaf::check(base, vec![2, 2], vec![
            vec![0, 1],
            vec![0, 1],
            vec![0, 1],
            vec![1, 0],
        ])
        .unwrap();
        // families fixed by the swap: none
        assert_eq!(lim(&x).unwrap().len(), 0);
    }

    #[test]
    fn left_kan_along_identity_is_isomorphic() {
        let arrow = Arc::new(FinCategory::arrow());
        let x = SetPresheaf::check(arrow.clone(), vec![2, 1], vec![vec![0, 1], vec![0], vec![0, 0]])
            .unwrap();
        let id = FinFunctor::identity(arrow);
        let lk = left_kan(&id, &x).unwrap();
        assert_eq!(lk.sizes(), x.sizes());
    }

    #[test]
    fn left_kan_to_terminal_is_colimit() {
        let arrow = Arc::new(FinCategory::arrow());
        let x = SetPresheaf::check(arrow.clone(), vec![2, 1], vec![vec![0, 1], vec![0], vec![0, 0]])
            .unwrap();
        let one = Arc::new(FinCategory::terminal());
        let bang = FinFunctor::check(arrow, one.clone(), vec![0, 0], vec![0, 0, 0]).unwrap();
        let lk = left_kan(&bang, &x).unwrap();
        assert_eq!(lk.size(0), colim(&x).size);
    }
}
