use crate::ordinals::NOrdinal;

use super::nplanar::{NPlanarTree, TreeError};
use super::shape::Node;

/// A tree carried with its leaf labels, vertex decorations and an optional
/// provenance tag per vertex, for grafting.
#[derive(Debug, Clone)]
enum Carrier {
    Leaf(usize),
    Vertex(Option<(usize, usize)>, NOrdinal, Vec<Carrier>),
}

fn to_carrier(t: &NPlanarTree, tag: Option<usize>) -> Carrier {
    fn walk(
        node: &Node,
        t: &NPlanarTree,
        tag: Option<usize>,
        next_vertex: &mut usize,
        next_leaf: &mut usize,
    ) -> Carrier {
        match node {
            Node::Leaf => {
                let l = *next_leaf;
                *next_leaf += 1;
                Carrier::Leaf(t.leaf_label[l])
            }
            Node::Vertex(children) => {
                let v = *next_vertex;
                *next_vertex += 1;
                let dec = t.decorations[v].clone();
                let kids = children
                    .iter()
                    .map(|c| walk(c, t, tag, next_vertex, next_leaf))
                    .collect();
                Carrier::Vertex(tag.map(|r| (r, v)), dec, kids)
            }
        }
    }
    walk(&t.shape, t, tag, &mut 0, &mut 0)
}

fn from_carrier(depth: usize, c: &Carrier) -> (NPlanarTree, Vec<(Option<(usize, usize)>, usize)>) {
    fn walk(
        c: &Carrier,
        decorations: &mut Vec<NOrdinal>,
        labels: &mut Vec<usize>,
        tags: &mut Vec<Option<(usize, usize)>>,
    ) -> Node {
        match c {
            Carrier::Leaf(l) => {
                labels.push(*l);
                Node::Leaf
            }
            Carrier::Vertex(tag, dec, kids) => {
                decorations.push(dec.clone());
                tags.push(*tag);
                let children = kids.iter().map(|k| walk(k, decorations, labels, tags)).collect();
                Node::Vertex(children)
            }
        }
    }
    let mut decorations = Vec::new();
    let mut labels = Vec::new();
    let mut tags = Vec::new();
    let shape = walk(c, &mut decorations, &mut labels, &mut tags);
    let order = (0..decorations.len()).collect();
    let tree = NPlanarTree::new(depth, shape, decorations, labels, order)
        .expect("grafted tree data is consistent");
    let tagged = tags.into_iter().enumerate().map(|(cw, t)| (t, cw)).collect();
    (tree, tagged)
}

/// Simultaneous substitution: `inners[r]` replaces the vertex of linear rank
/// r; the child previously at slot j of that vertex is plugged into the
/// inner leaf labeled j. The result carries the clockwise linear order.
///
/// Also returns the provenance table: `provenance[r][u]` is the clockwise
/// index, in the result, of vertex u (clockwise in `inners[r]`).
pub fn substitute_all_traced(
    outer: &NPlanarTree,
    inners: &[NPlanarTree],
) -> Result<(NPlanarTree, Vec<Vec<usize>>), TreeError> {
    if inners.len() != outer.vertex_count() {
        return Err(TreeError::ProfileMismatch(format!(
            "{} inner trees for {} vertices",
            inners.len(),
            outer.vertex_count()
        )));
    }
    let profile = outer.profile();
    for (r, inner) in inners.iter().enumerate() {
        if inner.leaf_count() != profile[r].size() {
            return Err(TreeError::ProfileMismatch(format!(
                "inner tree at rank {r} has {} leaves but the slot has arity {}",
                inner.leaf_count(),
                profile[r].size()
            )));
        }
        if inner.depth != outer.depth {
            return Err(TreeError::ProfileMismatch("depth mismatch".into()));
        }
    }
    let carriers: Vec<Carrier> =
        inners.iter().enumerate().map(|(r, t)| to_carrier(t, Some(r))).collect();

    fn graft(c: &Carrier, ranks: &[usize], cursor: &mut usize, inners: &[Carrier]) -> Carrier {
        match c {
            Carrier::Leaf(l) => Carrier::Leaf(*l),
            Carrier::Vertex(_, _, kids) => {
                let r = ranks[*cursor];
                *cursor += 1;
                let grafted: Vec<Carrier> =
                    kids.iter().map(|k| graft(k, ranks, cursor, inners)).collect();
                plug(&inners[r], &grafted)
            }
        }
    }

    fn plug(inner: &Carrier, children: &[Carrier]) -> Carrier {
        match inner {
            Carrier::Leaf(j) => children[*j].clone(),
            Carrier::Vertex(tag, dec, kids) => Carrier::Vertex(
                *tag,
                dec.clone(),
                kids.iter().map(|k| plug(k, children)).collect(),
            ),
        }
    }

    let outer_carrier = to_carrier(outer, None);
    let grafted = graft(&outer_carrier, &outer.order_of_vertex, &mut 0, &carriers);
    let (tree, tags) = from_carrier(outer.depth, &grafted);
    let mut provenance: Vec<Vec<usize>> =
        inners.iter().map(|t| vec![usize::MAX; t.vertex_count()]).collect();
    for (tag, cw) in tags {
        let (r, u) = tag.expect("every result vertex comes from an inner tree");
        provenance[r][u] = cw;
    }
    Ok((tree, provenance))
}

/// Simultaneous substitution without the provenance table.
pub fn substitute_all(
    outer: &NPlanarTree,
    inners: &[NPlanarTree],
) -> Result<NPlanarTree, TreeError> {
    substitute_all_traced(outer, inners).map(|(t, _)| t)
}

/// Substitution at a single vertex (addressed by clockwise index); the other
/// vertices receive identity corollas.
pub fn substitute(
    outer: &NPlanarTree,
    vertex_cw: usize,
    inner: &NPlanarTree,
) -> Result<NPlanarTree, TreeError> {
    if vertex_cw >= outer.vertex_count() {
        return Err(TreeError::ProfileMismatch(format!("no vertex {vertex_cw}")));
    }
    let rank = outer.order_of_vertex[vertex_cw];
    let profile = outer.profile();
    let mut inners: Vec<NPlanarTree> =
        profile.iter().map(|t| super::nplanar::corolla(t.clone())).collect();
    inners[rank] = inner.clone();
    substitute_all(outer, &inners)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::optrees::enumerate::{enumerate_trees_cw, enumerate_trees};
    use crate::optrees::nplanar::{corolla, OperadClass};
    use crate::ordinals::{enumerate_ordinals, NOrdinal};

    fn ord2(levels: Vec<u8>, size: usize) -> NOrdinal {
        NOrdinal::new(2, size, levels).unwrap()
    }

    #[test]
    fn unit_corolla_substitution_is_neutral() {
        let b = Budget::default();
        let t = ord2(vec![0], 2);
        let s = NOrdinal::all_zero(2, 3);
        for tree in enumerate_trees_cw(2, &[t.clone(), t.clone()], &s, OperadClass::Normal, &b)
            .unwrap()
        {
            let units: Vec<NPlanarTree> =
                tree.profile().iter().map(|d| corolla(d.clone())).collect();
            assert_eq!(substitute_all(&tree, &units).unwrap(), tree);
            for v in 0..tree.vertex_count() {
                let unit = corolla(tree.decorations[v].clone());
                assert_eq!(substitute(&tree, v, &unit).unwrap(), tree);
            }
        }
    }

    #[test]
    fn substitution_into_a_corolla_root_gives_the_inner_tree() {
        let b = Budget::default();
        let t = ord2(vec![0], 2);
        let s = NOrdinal::all_zero(2, 3);
        let outer = corolla(s.clone());
        for inner in enumerate_trees_cw(2, &[t.clone(), t.clone()], &s, OperadClass::Normal, &b)
            .unwrap()
        {
            assert_eq!(substitute(&outer, 0, &inner).unwrap(), inner);
        }
    }

    #[test]
    fn substitution_is_associative_up_to_canonical_form() {
        // flatten(flatten(O; M); N) = flatten(O; (flatten(M_r; N_r))_r)
        // exhaustively over 2-vertex outers with corolla middles and inners
        // (quasibijection corollas change decorations and permute children)
        let budget = Budget::default();
        let s3 = NOrdinal::all_zero(2, 3);
        let t2 = ord2(vec![0], 2);
        let outers =
            enumerate_trees(2, &[t2.clone(), t2.clone()], &s3, OperadClass::Normal, &budget)
                .unwrap();
        // all unary cells hom(T'; d) with |d| = 2 as corollas
        let corollas_to = |d: &NOrdinal| -> Vec<NPlanarTree> {
            let mut out = Vec::new();
            for t in enumerate_ordinals(2, d.size(), 100).unwrap() {
                out.extend(
                    enumerate_trees_cw(2, &[t], d, OperadClass::General, &budget).unwrap(),
                );
            }
            out
        };
        let mut checked = 0usize;
        for outer in &outers {
            let profile = outer.profile();
            let m_cells: Vec<Vec<NPlanarTree>> = profile.iter().map(&corollas_to).collect();
            for m0 in &m_cells[0] {
                for m1 in &m_cells[1] {
                    let middles = vec![m0.clone(), m1.clone()];
                    let (once, prov) = substitute_all_traced(outer, &middles).unwrap();
                    // each middle is a corolla; pick every corolla inner for it
                    let n_cells: Vec<Vec<NPlanarTree>> =
                        middles.iter().map(|m| corollas_to(&m.decorations[0])).collect();
                    for n0 in n_cells[0].iter().take(2) {
                        for n1 in n_cells[1].iter().take(2) {
                            // result ranks equal clockwise indices after
                            // substitution, so provenance gives the slots
                            let mut inners_flat =
                                vec![None::<NPlanarTree>; once.vertex_count()];
                            inners_flat[prov[0][0]] = Some(n0.clone());
                            inners_flat[prov[1][0]] = Some(n1.clone());
                            let inners_flat: Vec<NPlanarTree> =
                                inners_flat.into_iter().map(Option::unwrap).collect();
                            let lhs = substitute_all(&once, &inners_flat).unwrap();
                            let collapsed = vec![
                                substitute_all(m0, &[n0.clone()]).unwrap(),
                                substitute_all(m1, &[n1.clone()]).unwrap(),
                            ];
                            let rhs = substitute_all(outer, &collapsed).unwrap();
                            assert_eq!(lhs, rhs);
                            checked += 1;
                        }
                    }
                }
            }
        }
        assert!(checked > 50);
    }
}
