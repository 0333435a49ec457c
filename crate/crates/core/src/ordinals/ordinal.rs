use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrdinalError {
    #[error("levels violate the min identity on the triple ({i}, {j}, {l})")]
    MinIdentity { i: usize, j: usize, l: usize },
    #[error("level {level} out of range for depth {depth}")]
    LevelRange { level: usize, depth: usize },
    #[error("the map is not a morphism: pair ({i}, {j}) at level {p} satisfies no clause")]
    NotAMorphism { i: usize, j: usize, p: usize },
    #[error("depths differ: {0} vs {1}")]
    DepthMismatch(usize, usize),
    #[error("size budget exceeded: {0}")]
    SizeBudgetExceeded(String),
    #[error("invalid literal: {0}")]
    BadLiteral(String),
}

/// Index of the pair (i, j), 0 ≤ i < j < k, in lexicographic order.
pub(crate) fn pair_index(k: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < k);
    i * (2 * k - i - 1) / 2 + (j - i - 1)
}

pub(crate) fn pair_count(k: usize) -> usize {
    if k < 2 {
        0
    } else {
        k * (k - 1) / 2
    }
}

/// A totally complementary n-order on {1..k} whose induced total order is
/// the standard one. Stored as the level of each pair (i, j), i < j, in
/// lexicographic order; the level vector satisfies
/// level(i, l) = min(level(i, j), level(j, l)) on every triple.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NOrdinal {
    depth: usize,
    size: usize,
    levels: Vec<u8>,
}

impl NOrdinal {
    pub fn new(depth: usize, size: usize, levels: Vec<u8>) -> Result<NOrdinal, OrdinalError> {
        assert!(depth >= 1, "depth must be positive");
        assert_eq!(levels.len(), pair_count(size), "level vector length");
        for &l in &levels {
            if l as usize >= depth {
                return Err(OrdinalError::LevelRange { level: l as usize, depth });
            }
        }
        let t = NOrdinal { depth, size, levels };
        for i in 0..size {
            for j in i + 1..size {
                for l in j + 1..size {
                    if t.level(i, l) != t.level(i, j).min(t.level(j, l)) {
                        return Err(OrdinalError::MinIdentity { i, j, l });
                    }
                }
            }
        }
        Ok(t)
    }

    /// The terminal ordinal of a given depth: one element.
    pub fn terminal(depth: usize) -> NOrdinal {
        NOrdinal { depth, size: 1, levels: Vec::new() }
    }

    /// The empty ordinal of a given depth.
    pub fn empty(depth: usize) -> NOrdinal {
        NOrdinal { depth, size: 0, levels: Vec::new() }
    }

    /// The ordinal with all pairs at level zero.
    pub fn all_zero(depth: usize, size: usize) -> NOrdinal {
        NOrdinal { depth, size, levels: vec![0; pair_count(size)] }
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Level of the pair i < j (0-based).
    pub fn level(&self, i: usize, j: usize) -> u8 {
        self.levels[pair_index(self.size, i, j)]
    }

    pub fn levels(&self) -> &[u8] {
        &self.levels
    }

    /// Sum of all pair levels; morphisms never decrease it.
    pub fn weight(&self) -> usize {
        self.levels.iter().map(|&l| l as usize).sum()
    }

    /// The complementary relation of the ordinal itself: every pair in
    /// standard direction at its level.
    pub fn as_relation(&self) -> ComplementaryRelation {
        ComplementaryRelation {
            depth: self.depth,
            size: self.size,
            entries: self.levels.iter().map(|&l| (true, l)).collect(),
        }
    }

    /// The p-suspension: depth rises by one; a pair level l becomes l when
    /// l < p and l + 1 otherwise.
    pub fn suspend(&self, p: usize) -> NOrdinal {
        assert!(p <= self.depth, "suspension index out of range");
        let levels = self
            .levels
            .iter()
            .map(|&l| if (l as usize) < p { l } else { l + 1 })
            .collect();
        NOrdinal { depth: self.depth + 1, size: self.size, levels }
    }

    /// Renumbered sub-ordinal on a strictly increasing list of elements.
    pub fn restrict(&self, elements: &[usize]) -> NOrdinal {
        let m = elements.len();
        let mut levels = vec![0u8; pair_count(m)];
        for a in 0..m {
            for b in a + 1..m {
                levels[pair_index(m, a, b)] = self.level(elements[a], elements[b]);
            }
        }
        NOrdinal { depth: self.depth, size: m, levels }
    }

    /// The ordered sum over `self` of the given blocks, one per element:
    /// all cross-block pairs inherit the base level. Fails with MinIdentity
    /// when a block carries an internal level below a neighbouring base
    /// level, in which case no such ordinal exists.
    pub fn ordered_sum(&self, blocks: &[NOrdinal]) -> Result<NOrdinal, OrdinalError> {
        assert_eq!(blocks.len(), self.size);
        let total: usize = blocks.iter().map(|b| b.size()).sum();
        let mut offsets = vec![0usize; self.size + 1];
        for (i, b) in blocks.iter().enumerate() {
            offsets[i + 1] = offsets[i] + b.size();
        }
        let mut levels = vec![0u8; pair_count(total)];
        for bi in 0..self.size {
            for bj in bi..self.size {
                if bi == bj {
                    let blk = &blocks[bi];
                    for a in 0..blk.size() {
                        for b in a + 1..blk.size() {
                            levels[pair_index(total, offsets[bi] + a, offsets[bi] + b)] =
                                blk.level(a, b);
                        }
                    }
                } else {
                    for a in 0..blocks[bi].size() {
                        for b in 0..blocks[bj].size() {
                            levels[pair_index(total, offsets[bi] + a, offsets[bj] + b)] =
                                self.level(bi, bj);
                        }
                    }
                }
            }
        }
        NOrdinal::new(self.depth, total, levels)
    }
}

/// An n-complementary relation: every pair related in exactly one direction
/// at exactly one level. Direction `true` means the smaller index precedes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ComplementaryRelation {
    pub depth: usize,
    pub size: usize,
    /// per pair (i, j) in lexicographic order: (standard direction, level)
    pub entries: Vec<(bool, u8)>,
}

impl ComplementaryRelation {
    pub fn entry(&self, i: usize, j: usize) -> (bool, u8) {
        self.entries[pair_index(self.size, i, j)]
    }
}

/// X dominates Y: every i <_p j in X maps to i <_r j in Y with r ≥ p, or to
/// j <_r i in Y with r > p.
pub fn dominates(x: &ComplementaryRelation, y: &ComplementaryRelation) -> bool {
    assert_eq!(x.size, y.size, "relations must share the underlying set");
    assert_eq!(x.depth, y.depth, "relations must share the depth");
    x.entries.iter().zip(&y.entries).all(|(&(dx, p), &(dy, r))| {
        if dx == dy {
            r >= p
        } else {
            r > p
        }
    })
}

/// All n-ordinals of a given size, in lexicographic order of the pair-level
/// vector. Levels of consecutive pairs determine the rest by the min
/// identity, so there are n^(k-1) of them for k ≥ 1.
pub fn enumerate_ordinals(
    depth: usize,
    size: usize,
    budget_cap: usize,
) -> Result<Vec<NOrdinal>, OrdinalError> {
    assert!(depth >= 1);
    if size == 0 {
        return Ok(vec![NOrdinal::empty(depth)]);
    }
    let count = (depth as u128).pow((size - 1) as u32);
    if count > budget_cap as u128 {
        return Err(OrdinalError::SizeBudgetExceeded(format!(
            "{count} ordinals of depth {depth} and size {size} exceed the cap {budget_cap}"
        )));
    }
    let mut result = Vec::with_capacity(count as usize);
    let mut consecutive = vec![0u8; size - 1];
    loop {
        let mut levels = vec![0u8; pair_count(size)];
        for i in 0..size {
            for j in i + 1..size {
                let l = (i..j).map(|t| consecutive[t]).min().expect("nonempty range");
                levels[pair_index(size, i, j)] = l;
            }
        }
        result.push(NOrdinal { depth, size, levels });
        // odometer over consecutive levels
        let mut pos = size - 1;
        loop {
            if pos == 0 {
                result.sort();
                return Ok(result);
            }
            pos -= 1;
            consecutive[pos] += 1;
            if (consecutive[pos] as usize) < depth {
                break;
            }
            consecutive[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_ordinal_for_size_one_and_depth_one() {
        for n in 1..5 {
            assert_eq!(enumerate_ordinals(n, 1, 1000).unwrap().len(), 1);
        }
        for k in 0..5 {
            assert_eq!(enumerate_ordinals(1, k, 1000).unwrap().len(), 1);
        }
    }

    #[test]
    fn four_two_ordinals_of_size_three() {
        let ords = enumerate_ordinals(2, 3, 1000).unwrap();
        assert_eq!(ords.len(), 4);
        for t in &ords {
            assert_eq!(t.level(0, 2), t.level(0, 1).min(t.level(1, 2)));
        }
    }

    #[test]
    fn min_identity_rejects_bad_levels() {
        // level(0,2) must be min(level(0,1), level(1,2)) = 0
        let err = NOrdinal::new(2, 3, vec![0, 1, 1]).unwrap_err();
        assert!(matches!(err, OrdinalError::MinIdentity { .. }));
    }

    #[test]
    fn domination_clauses() {
        let a = NOrdinal::new(2, 2, vec![0]).unwrap(); // level-0 pair
        let b = NOrdinal::new(2, 2, vec![1]).unwrap(); // level-1 pair
        assert!(dominates(&a.as_relation(), &a.as_relation()));
        assert!(dominates(&a.as_relation(), &b.as_relation()));
        assert!(!dominates(&b.as_relation(), &a.as_relation()));
    }

    #[test]
    fn suspension_shifts_levels_and_preserves_validity() {
        let ords = enumerate_ordinals(2, 4, 10_000).unwrap();
        for t in &ords {
            for p in 0..=2 {
                let s = t.suspend(p);
                assert_eq!(s.depth(), 3);
                // validity: rebuild through the checked constructor
                NOrdinal::new(s.depth(), s.size(), s.levels().to_vec()).unwrap();
            }
        }
        // s_1 of the 1-ordinal on three elements: all pairs stay at level 0
        let three = NOrdinal::all_zero(1, 3);
        let s = three.suspend(1);
        assert_eq!(s.levels(), &[0, 0, 0]);
        assert_eq!(s.depth(), 2);
        // s_0 raises every level by one
        let t = NOrdinal::new(2, 3, vec![0, 0, 1]).unwrap();
        assert_eq!(t.suspend(0).levels(), &[1, 1, 2]);
    }

    #[test]
    fn suspension_is_injective_on_level_vectors() {
        let ords = enumerate_ordinals(3, 3, 10_000).unwrap();
        for p in 0..=3 {
            let mut images: Vec<Vec<u8>> =
                ords.iter().map(|t| t.suspend(p).levels().to_vec()).collect();
            images.sort();
            images.dedup();
            assert_eq!(images.len(), ords.len());
        }
    }
}
