use thiserror::Error;

use crate::ordinals::{dominates, ComplementaryRelation, NOrdinal, OrdinalMap};

use super::shape::Node;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TreeError {
    #[error("profile mismatch: {0}")]
    ProfileMismatch(String),
    #[error("size budget exceeded: {0}")]
    SizeBudgetExceeded(String),
    #[error("invalid tree literal: {0}")]
    BadLiteral(String),
    #[error("tree data is inconsistent: {0}")]
    Inconsistent(String),
}

/// Reducedness class of trees, matching the three operad types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OperadClass {
    /// arbitrary arities, all ordinals as colours
    General,
    /// every vertex has at least one input; nonempty ordinals as colours
    ConstantFree,
    /// every vertex has at least two inputs; nonempty nonterminal colours
    Normal,
}

impl OperadClass {
    pub fn admits_arity(self, a: usize) -> bool {
        match self {
            OperadClass::General => true,
            OperadClass::ConstantFree => a >= 1,
            OperadClass::Normal => a >= 2,
        }
    }

    pub fn admits_colour(self, t: &NOrdinal) -> bool {
        match self {
            OperadClass::General => true,
            OperadClass::ConstantFree => t.size() >= 1,
            OperadClass::Normal => t.size() >= 2,
        }
    }
}

/// A planar tree with per-vertex ordinal decorations, a labeling of the
/// leaves by the elements of the target ordinal, and a linear order on the
/// vertices. Vertices are addressed in clockwise (depth-first) order from
/// the root.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NPlanarTree {
    pub depth: usize,
    pub shape: Node,
    /// decoration of each vertex in clockwise order; sizes match arities
    pub decorations: Vec<NOrdinal>,
    /// leaf_label[planar leaf position] = element of the target (0-based);
    /// a bijection onto 0..leaf_count
    pub leaf_label: Vec<usize>,
    /// order_of_vertex[clockwise index] = rank in the linear order
    pub order_of_vertex: Vec<usize>,
}

impl NPlanarTree {
    pub fn new(
        depth: usize,
        shape: Node,
        decorations: Vec<NOrdinal>,
        leaf_label: Vec<usize>,
        order_of_vertex: Vec<usize>,
    ) -> Result<NPlanarTree, TreeError> {
        let arities = shape.arities();
        if decorations.len() != arities.len() {
            return Err(TreeError::Inconsistent("one decoration per vertex".into()));
        }
        for (v, t) in decorations.iter().enumerate() {
            if t.size() != arities[v] {
                return Err(TreeError::Inconsistent(format!(
                    "decoration of vertex {v} has size {} but arity is {}",
                    t.size(),
                    arities[v]
                )));
            }
            if t.depth() != depth {
                return Err(TreeError::Inconsistent("decoration depth mismatch".into()));
            }
        }
        if leaf_label.len() != shape.leaf_count() {
            return Err(TreeError::Inconsistent("one label per leaf".into()));
        }
        let mut seen = vec![false; leaf_label.len()];
        for &l in &leaf_label {
            if l >= seen.len() || std::mem::replace(&mut seen[l], true) {
                return Err(TreeError::Inconsistent("leaf labeling must be a bijection".into()));
            }
        }
        if order_of_vertex.len() != arities.len() {
            return Err(TreeError::Inconsistent("one rank per vertex".into()));
        }
        let mut seen = vec![false; order_of_vertex.len()];
        for &r in &order_of_vertex {
            if r >= seen.len() || std::mem::replace(&mut seen[r], true) {
                return Err(TreeError::Inconsistent("vertex order must be a permutation".into()));
            }
        }
        Ok(NPlanarTree { depth, shape, decorations, leaf_label, order_of_vertex })
    }

    /// The bare tree: no vertices, one leaf.
    pub fn bare(depth: usize) -> NPlanarTree {
        NPlanarTree {
            depth,
            shape: Node::Leaf,
            decorations: Vec::new(),
            leaf_label: vec![0],
            order_of_vertex: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.decorations.len()
    }

    pub fn leaf_count(&self) -> usize {
        self.leaf_label.len()
    }

    /// Decorations in linear order: entry r is the decoration of the vertex
    /// of rank r.
    pub fn profile(&self) -> Vec<NOrdinal> {
        let mut out = vec![None; self.vertex_count()];
        for (v, &r) in self.order_of_vertex.iter().enumerate() {
            out[r] = Some(self.decorations[v].clone());
        }
        out.into_iter().map(|t| t.expect("permutation covers all ranks")).collect()
    }

    /// True when the linear order is the clockwise one.
    pub fn is_clockwise_ordered(&self) -> bool {
        self.order_of_vertex.iter().enumerate().all(|(v, &r)| v == r)
    }

    /// The leaf position carrying a given target element.
    pub fn position_of(&self, element: usize) -> usize {
        self.leaf_label.iter().position(|&l| l == element).expect("element is labeled")
    }

    /// The complementary relation the tree induces on the target elements:
    /// a pair is compared at the decoration level of the arrival slots in
    /// its meet vertex.
    pub fn complementary_relation(&self) -> ComplementaryRelation {
        let k = self.leaf_count();
        let paths = self.shape.leaf_paths();
        let mut entries = Vec::with_capacity(k * (k - 1) / 2);
        for i in 0..k {
            for j in i + 1..k {
                let (pi, pj) = (self.position_of(i), self.position_of(j));
                let (a, b) = (&paths[pi], &paths[pj]);
                // the chains share a prefix and diverge at the meet vertex
                let mut d = 0;
                while d < a.len() && d < b.len() && a[d] == b[d] {
                    d += 1;
                }
                debug_assert!(d < a.len() && d < b.len(), "distinct leaves diverge");
                debug_assert_eq!(a[d].0, b[d].0, "divergence happens at a common vertex");
                let v = a[d].0;
                let (sa, sb) = (a[d].1, b[d].1);
                let t = &self.decorations[v];
                if sa < sb {
                    entries.push((true, t.level(sa, sb)));
                } else {
                    entries.push((false, t.level(sb, sa)));
                }
            }
        }
        ComplementaryRelation { depth: self.depth, size: k, entries }
    }

    /// Admissibility against a target ordinal: the target dominates the
    /// induced complementary relation.
    pub fn satisfies_domination(&self, target: &NOrdinal) -> bool {
        assert_eq!(target.size(), self.leaf_count(), "target size matches leaf count");
        if self.shape == Node::Leaf {
            return true; // no pairs to compare beyond the single element
        }
        dominates(&target.as_relation(), &self.complementary_relation())
    }

    /// Checks the reducedness class on every vertex.
    pub fn in_class(&self, class: OperadClass) -> bool {
        self.shape.arities().iter().all(|&a| class.admits_arity(a))
    }

    /// Relabel the linear order by postcomposition with a permutation of
    /// ranks: rank r becomes g[r].
    pub fn relabel_order(&self, g: &[usize]) -> NPlanarTree {
        let order_of_vertex = self.order_of_vertex.iter().map(|&r| g[r]).collect();
        NPlanarTree { order_of_vertex, ..self.clone() }
    }

    /// Precompose the leaf labeling with a quasibijection of targets: the
    /// right action of unary operations. For q : S' → S the result is
    /// labeled by elements of S'.
    pub fn relabel_target(&self, q: &OrdinalMap) -> NPlanarTree {
        assert_eq!(q.target().size(), self.leaf_count());
        // ρ' = ρ ∘ |q| : element s' sits where q(s') sat
        let mut leaf_label = vec![0usize; self.leaf_count()];
        for s_new in 0..q.source().size() {
            leaf_label[self.position_of(q.apply(s_new))] = s_new;
        }
        NPlanarTree { leaf_label, ..self.clone() }
    }
}

/// The corolla with a given decoration and the identity labeling.
pub fn corolla(decoration: NOrdinal) -> NPlanarTree {
    let k = decoration.size();
    NPlanarTree {
        depth: decoration.depth(),
        shape: Node::Vertex(vec![Node::Leaf; k]),
        decorations: vec![decoration],
        leaf_label: (0..k).collect(),
        order_of_vertex: vec![0],
    }
}

/// The corolla encoding a quasibijection h : T → T': decorated by T', with
/// the element t of the target T sitting at slot h(t).
pub fn corolla_of_quasibijection(h: &OrdinalMap) -> NPlanarTree {
    assert!(h.is_quasibijection());
    let k = h.source().size();
    let mut leaf_label = vec![0usize; k];
    for t in 0..k {
        leaf_label[h.apply(t)] = t;
    }
    NPlanarTree {
        depth: h.source().depth(),
        shape: Node::Vertex(vec![Node::Leaf; k]),
        decorations: vec![h.target().clone()],
        leaf_label,
        order_of_vertex: vec![0],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordinals::all_quasibijections;

    fn ord2(levels: Vec<u8>, size: usize) -> NOrdinal {
        NOrdinal::new(2, size, levels).unwrap()
    }

    #[test]
    fn corolla_relation_is_the_decoration_transported() {
        let t = ord2(vec![1], 2);
        let c = corolla(t.clone());
        assert_eq!(c.complementary_relation(), t.as_relation());
        assert!(c.satisfies_domination(&t));
    }

    #[test]
    fn two_vertex_tree_relations() {
        // root binary vertex, second binary vertex on the left slot
        let shape = Node::Vertex(vec![Node::Vertex(vec![Node::Leaf, Node::Leaf]), Node::Leaf]);
        let level0 = ord2(vec![0], 2);
        let level1 = ord2(vec![1], 2);
        // both level 0, identity labeling: all pairs at level 0
        let tree = NPlanarTree::new(
            2,
            shape.clone(),
            vec![level0.clone(), level0.clone()],
            vec![0, 1, 2],
            vec![0, 1],
        )
        .unwrap();
        let rel = tree.complementary_relation();
        assert!(rel.entries.iter().all(|&(d, l)| d && l == 0));
        // upper vertex at level 1: the sibling pair rises to level 1
        let tree = NPlanarTree::new(
            2,
            shape,
            vec![level0.clone(), level1.clone()],
            vec![0, 1, 2],
            vec![0, 1],
        )
        .unwrap();
        let rel = tree.complementary_relation();
        assert_eq!(rel.entry(0, 1), (true, 1));
        assert_eq!(rel.entry(0, 2), (true, 0));
        assert_eq!(rel.entry(1, 2), (true, 0));
    }

    #[test]
    fn corolla_domination_matches_quasibijection_count() {
        // labelings of a level-1 corolla dominated by the level-0 ordinal
        // correspond to quasibijections: there are two of them
        let a = ord2(vec![0], 2);
        let b = ord2(vec![1], 2);
        let mut count = 0;
        for labeling in [vec![0, 1], vec![1, 0]] {
            let c = NPlanarTree::new(
                2,
                Node::Vertex(vec![Node::Leaf, Node::Leaf]),
                vec![b.clone()],
                labeling,
                vec![0],
            )
            .unwrap();
            if c.satisfies_domination(&a) {
                count += 1;
            }
        }
        assert_eq!(count, all_quasibijections(&a, &b).len());
        // and the reverse direction admits none
        let mut count = 0;
        for labeling in [vec![0, 1], vec![1, 0]] {
            let c = NPlanarTree::new(
                2,
                Node::Vertex(vec![Node::Leaf, Node::Leaf]),
                vec![a.clone()],
                labeling,
                vec![0],
            )
            .unwrap();
            if c.satisfies_domination(&b) {
                count += 1;
            }
        }
        assert_eq!(count, all_quasibijections(&b, &a).len());
    }
}
