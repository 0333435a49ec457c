use super::ordinal::{NOrdinal, OrdinalError};

/// A morphism of n-ordinals: an underlying map such that every source pair
/// lands in one of the three admissible clauses.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrdinalMap {
    source: NOrdinal,
    target: NOrdinal,
    map: Vec<usize>,
}

impl OrdinalMap {
    /// Validates the clause condition on every source pair: for i <_p j
    /// either σ(i) <_r σ(j) with r ≥ p, or σ(i) = σ(j), or σ(j) <_r σ(i)
    /// with r > p.
    pub fn check(
        source: NOrdinal,
        target: NOrdinal,
        map: Vec<usize>,
    ) -> Result<OrdinalMap, OrdinalError> {
        if source.depth() != target.depth() {
            return Err(OrdinalError::DepthMismatch(source.depth(), target.depth()));
        }
        assert_eq!(map.len(), source.size(), "underlying map length");
        for &v in &map {
            assert!(v < target.size(), "underlying map escapes the target");
        }
        for i in 0..source.size() {
            for j in i + 1..source.size() {
                let p = source.level(i, j);
                let (si, sj) = (map[i], map[j]);
                let ok = if si < sj {
                    target.level(si, sj) >= p
                } else if si == sj {
                    true
                } else {
                    target.level(sj, si) > p
                };
                if !ok {
                    return Err(OrdinalError::NotAMorphism { i, j, p: p as usize });
                }
            }
        }
        Ok(OrdinalMap { source, target, map })
    }

    pub fn identity(t: &NOrdinal) -> OrdinalMap {
        OrdinalMap { source: t.clone(), target: t.clone(), map: (0..t.size()).collect() }
    }

    /// The unique map to the terminal ordinal of the same depth.
    pub fn to_terminal(t: &NOrdinal) -> OrdinalMap {
        OrdinalMap {
            source: t.clone(),
            target: NOrdinal::terminal(t.depth()),
            map: vec![0; t.size()],
        }
    }

    pub fn source(&self) -> &NOrdinal {
        &self.source
    }

    pub fn target(&self) -> &NOrdinal {
        &self.target
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn underlying(&self) -> &[usize] {
        &self.map
    }

    pub fn is_quasibijection(&self) -> bool {
        self.source.size() == self.target.size() && {
            let mut seen = vec![false; self.target.size()];
            self.map.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
        }
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.target.size()];
        for &v in &self.map {
            seen[v] = true;
        }
        seen.into_iter().all(|s| s)
    }

    /// other ∘ self, defined when self's target equals other's source.
    pub fn then(&self, other: &OrdinalMap) -> OrdinalMap {
        assert_eq!(self.target, other.source, "maps are not composable");
        OrdinalMap {
            source: self.source.clone(),
            target: other.target.clone(),
            map: self.map.iter().map(|&v| other.map[v]).collect(),
        }
    }

    /// The fiber over a target element: the preimage with levels inherited
    /// from the source, elements renumbered in increasing order.
    pub fn fiber(&self, i: usize) -> NOrdinal {
        assert!(i < self.target.size(), "fiber index out of range");
        let elements: Vec<usize> =
            (0..self.source.size()).filter(|&x| self.map[x] == i).collect();
        self.source.restrict(&elements)
    }

    /// The fibers in target order.
    pub fn fibers(&self) -> Vec<NOrdinal> {
        (0..self.target.size()).map(|i| self.fiber(i)).collect()
    }

    /// Elements of the fiber over i, as source indices in increasing order.
    pub fn fiber_elements(&self, i: usize) -> Vec<usize> {
        (0..self.source.size()).filter(|&x| self.map[x] == i).collect()
    }

    /// The suspended map between suspended ordinals.
    pub fn suspend(&self, p: usize) -> OrdinalMap {
        OrdinalMap {
            source: self.source.suspend(p),
            target: self.target.suspend(p),
            map: self.map.clone(),
        }
    }

    /// The restriction of the map to the fiber of `other ∘ self` over l,
    /// landing in the fiber of `other` over l.
    pub fn restrict_to_fiber(&self, other: &OrdinalMap, l: usize) -> OrdinalMap {
        let composite_elements: Vec<usize> = (0..self.source.size())
            .filter(|&x| other.apply(self.map[x]) == l)
            .collect();
        let target_elements = other.fiber_elements(l);
        let source = self.source.restrict(&composite_elements);
        let target = other.fiber(l);
        let map = composite_elements
            .iter()
            .map(|&x| {
                target_elements
                    .iter()
                    .position(|&y| y == self.map[x])
                    .expect("image lies in the fiber")
            })
            .collect();
        OrdinalMap { source, target, map }
    }
}

/// All morphisms source → target (every underlying function, filtered).
pub fn all_maps(source: &NOrdinal, target: &NOrdinal) -> Vec<OrdinalMap> {
    let k = source.size();
    let m = target.size();
    if k > 0 && m == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = vec![0usize; k];
    loop {
        if let Ok(f) = OrdinalMap::check(source.clone(), target.clone(), cur.clone()) {
            out.push(f);
        }
        let mut pos = 0;
        loop {
            if k == 0 || pos == k {
                out.sort();
                return out;
            }
            cur[pos] += 1;
            if cur[pos] < m {
                break;
            }
            cur[pos] = 0;
            pos += 1;
        }
    }
}

/// All quasibijections source → target.
pub fn all_quasibijections(source: &NOrdinal, target: &NOrdinal) -> Vec<OrdinalMap> {
    if source.size() != target.size() {
        return Vec::new();
    }
    all_maps(source, target).into_iter().filter(|f| f.is_quasibijection()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordinals::ordinal::enumerate_ordinals;

    #[test]
    fn unique_map_to_terminal_has_the_source_as_fiber() {
        let t = NOrdinal::new(2, 3, vec![0, 0, 1]).unwrap();
        let f = OrdinalMap::to_terminal(&t);
        assert_eq!(f.fiber(0), t);
    }

    #[test]
    fn identity_fibers_are_terminal() {
        let t = NOrdinal::new(2, 3, vec![0, 0, 1]).unwrap();
        let id = OrdinalMap::identity(&t);
        for i in 0..3 {
            assert_eq!(id.fiber(i), NOrdinal::terminal(2));
        }
    }

    #[test]
    fn swap_map_between_the_two_2_ordinals_of_size_two() {
        let a = NOrdinal::new(2, 2, vec![0]).unwrap();
        let b = NOrdinal::new(2, 2, vec![1]).unwrap();
        // clause 3: swapped pair needs a strictly higher target level
        assert!(OrdinalMap::check(a.clone(), b.clone(), vec![1, 0]).is_ok());
        assert!(OrdinalMap::check(a.clone(), b.clone(), vec![0, 1]).is_ok());
        assert!(OrdinalMap::check(b.clone(), a.clone(), vec![1, 0]).is_err());
        assert!(OrdinalMap::check(b.clone(), a.clone(), vec![0, 1]).is_err());
        assert!(OrdinalMap::check(a.clone(), a.clone(), vec![1, 0]).is_err());
    }

    #[test]
    fn hom_counts_in_q3_of_size_two() {
        let ords = enumerate_ordinals(3, 2, 100).unwrap();
        assert_eq!(ords.len(), 3);
        for (i, s) in ords.iter().enumerate() {
            for (j, t) in ords.iter().enumerate() {
                let n = all_quasibijections(s, t).len();
                let expected = match i.cmp(&j) {
                    std::cmp::Ordering::Less => 2,
                    std::cmp::Ordering::Equal => 1,
                    std::cmp::Ordering::Greater => 0,
                };
                assert_eq!(n, expected, "hom({i}, {j})");
            }
        }
    }

    #[test]
    fn fibers_of_composites_match_iterated_fibers() {
        // all composable pairs of quasibijections within depth 2, size <= 3
        for k in 0..=3usize {
            let ords = enumerate_ordinals(2, k, 1000).unwrap();
            for s in &ords {
                for t in &ords {
                    for f in all_quasibijections(s, t) {
                        for u in &ords {
                            for g in all_quasibijections(t, u) {
                                let h = f.then(&g);
                                for l in 0..u.size() {
                                    // fiber of the composite vs fiber computed in stages
                                    let lhs = h.fiber(l);
                                    let rhs = f.restrict_to_fiber(&g, l).source().clone();
                                    assert_eq!(lhs, rhs);
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn suspension_commutes_with_fibers() {
        let s = NOrdinal::new(2, 3, vec![0, 0, 1]).unwrap();
        let t = NOrdinal::new(2, 2, vec![0]).unwrap();
        for f in all_maps(&s, &t) {
            for p in 0..=2 {
                let sf = f.suspend(p);
                // validity of the suspended map
                OrdinalMap::check(
                    sf.source().clone(),
                    sf.target().clone(),
                    sf.underlying().to_vec(),
                )
                .unwrap();
                for i in 0..t.size() {
                    assert_eq!(sf.fiber(i), f.fiber(i).suspend(p));
                }
            }
        }
    }
}
