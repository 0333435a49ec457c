/// A planar tree shape. `Leaf` is a bare edge; a vertex holds its ordered
/// list of child slots. The whole tree with no vertices is a single `Leaf`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Node {
    Leaf,
    Vertex(Vec<Node>),
}

impl Node {
    pub fn vertex_count(&self) -> usize {
        match self {
            Node::Leaf => 0,
            Node::Vertex(children) => 1 + children.iter().map(Node::vertex_count).sum::<usize>(),
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Node::Leaf => 1,
            Node::Vertex(children) => children.iter().map(Node::leaf_count).sum(),
        }
    }

    /// Arities of all vertices in clockwise (depth-first) order from the root.
    pub fn arities(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.walk_arities(&mut out);
        out
    }

    fn walk_arities(&self, out: &mut Vec<usize>) {
        if let Node::Vertex(children) = self {
            out.push(children.len());
            for c in children {
                c.walk_arities(out);
            }
        }
    }

    /// Edge count including the root edge and leaf edges.
    pub fn edge_count(&self) -> usize {
        // each vertex contributes its incoming edges; plus the root edge
        match self {
            Node::Leaf => 1,
            Node::Vertex(_) => 1 + self.arities().iter().sum::<usize>(),
        }
    }

    /// For every leaf in planar order, the chain of (vertex, slot) choices
    /// from the root down to it.
    pub fn leaf_paths(&self) -> Vec<Vec<(usize, usize)>> {
        let mut out = Vec::new();
        let mut counter = 0usize;
        self.walk_paths(&mut Vec::new(), &mut counter, &mut out);
        out
    }

    fn walk_paths(
        &self,
        prefix: &mut Vec<(usize, usize)>,
        next_vertex: &mut usize,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        match self {
            Node::Leaf => out.push(prefix.clone()),
            Node::Vertex(children) => {
                let v = *next_vertex;
                *next_vertex += 1;
                for (slot, c) in children.iter().enumerate() {
                    prefix.push((v, slot));
                    c.walk_paths(prefix, next_vertex, out);
                    prefix.pop();
                }
            }
        }
    }

    /// Internal edges as (parent vertex, child vertex) pairs in clockwise
    /// numbering, plus each vertex's parent slot.
    pub fn internal_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut counter = 0usize;
        self.walk_edges(None, &mut counter, &mut out);
        out
    }

    fn walk_edges(
        &self,
        parent: Option<usize>,
        next_vertex: &mut usize,
        out: &mut Vec<(usize, usize)>,
    ) {
        if let Node::Vertex(children) = self {
            let v = *next_vertex;
            *next_vertex += 1;
            if let Some(p) = parent {
                out.push((p, v));
            }
            for c in children {
                c.walk_edges(Some(v), next_vertex, out);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_on_a_small_shape() {
        // root with a leaf and a 2-ary vertex above
        let t = Node::Vertex(vec![Node::Leaf, Node::Vertex(vec![Node::Leaf, Node::Leaf])]);
        assert_eq!(t.vertex_count(), 2);
        assert_eq!(t.leaf_count(), 3);
        assert_eq!(t.arities(), vec![2, 2]);
        assert_eq!(t.internal_edges(), vec![(0, 1)]);
        let paths = t.leaf_paths();
        assert_eq!(paths.len(), 3);
        assert_eq!(paths[0], vec![(0, 0)]);
        assert_eq!(paths[1], vec![(0, 1), (1, 0)]);
    }
}
