use crate::budget::Budget;
use crate::ordinals::NOrdinal;

use super::nplanar::{NPlanarTree, OperadClass, TreeError};
use super::shape::Node;

/// All trees with the given decorations (in linear order), target ordinal
/// and reducedness class, over every admissible leaf labeling.
///
/// Returns the empty set when the target or a profile entry is not a colour
/// of the class, or when the arity bookkeeping cannot match.
pub fn enumerate_trees(
    depth: usize,
    profile: &[NOrdinal],
    target: &NOrdinal,
    class: OperadClass,
    budget: &Budget,
) -> Result<Vec<NPlanarTree>, TreeError> {
    if profile.len() > budget.max_tree_vertices {
        return Err(TreeError::SizeBudgetExceeded(format!(
            "{} vertices exceed the cap {}",
            profile.len(),
            budget.max_tree_vertices
        )));
    }
    if target.size() > budget.max_tree_leaves {
        return Err(TreeError::SizeBudgetExceeded(format!(
            "{} leaves exceed the cap {}",
            target.size(),
            budget.max_tree_leaves
        )));
    }
    if !class.admits_colour(target) || profile.iter().any(|t| !class.admits_colour(t)) {
        return Ok(Vec::new());
    }
    if profile.iter().any(|t| t.depth() != depth) || target.depth() != depth {
        return Err(TreeError::Inconsistent("depth mismatch in the profile".into()));
    }
    if profile.iter().any(|t| !class.admits_arity(t.size())) {
        return Ok(Vec::new());
    }
    // leaf bookkeeping: k vertices, total inputs Σ|T_i|, internal edges k−1
    let k = profile.len();
    if k == 0 {
        return Ok(if target.size() == 1 { vec![NPlanarTree::bare(depth)] } else { Vec::new() });
    }
    let inputs: usize = profile.iter().map(|t| t.size()).sum();
    if inputs + 1 < k || inputs + 1 - k != target.size() {
        return Ok(Vec::new());
    }
    // enumerate assigned shapes: every way to build a planar tree whose
    // vertex at linear rank r is decorated by profile[r]
    let all_ranks: u32 = (0..k).map(|r| 1u32 << r).sum();
    let assigned = build_assigned(profile, all_ranks);
    let mut out = Vec::new();
    let leaves = target.size();
    for (shape, ranks) in assigned {
        // order_of_vertex: ranks listed in clockwise order
        let cw_arities = shape.arities();
        debug_assert_eq!(cw_arities.len(), k);
        let decorations: Vec<NOrdinal> =
            ranks.iter().map(|&r| profile[r].clone()).collect();
        for labeling in permutations_of(leaves) {
            let tree = NPlanarTree::new(
                depth,
                shape.clone(),
                decorations.clone(),
                labeling,
                ranks.clone(),
            )
            .expect("generated tree data is consistent");
            if tree.satisfies_domination(target) {
                out.push(tree);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// The canonical operation set: trees whose linear order is the clockwise
/// one. The profile is then read off in clockwise order.
pub fn enumerate_trees_cw(
    depth: usize,
    profile: &[NOrdinal],
    target: &NOrdinal,
    class: OperadClass,
    budget: &Budget,
) -> Result<Vec<NPlanarTree>, TreeError> {
    Ok(enumerate_trees(depth, profile, target, class, budget)?
        .into_iter()
        .filter(|t| t.is_clockwise_ordered())
        .collect())
}

/// Builds every shape whose vertices consume exactly the rank set `mask`,
/// returning (shape, clockwise rank assignment).
fn build_assigned(profile: &[NOrdinal], mask: u32) -> Vec<(Node, Vec<usize>)> {
    let mut out = Vec::new();
    let k = profile.len();
    for r in 0..k {
        if mask & (1 << r) == 0 {
            continue;
        }
        let rest = mask & !(1 << r);
        let arity = profile[r].size();
        // distribute the remaining ranks over the arity slots; each slot is
        // a leaf (empty part) or a subtree consuming its part
        for distribution in distribute(rest, arity) {
            // cartesian product of per-slot alternatives
            let mut slot_options: Vec<Vec<(Node, Vec<usize>)>> = Vec::with_capacity(arity);
            for &part in &distribution {
                if part == 0 {
                    slot_options.push(vec![(Node::Leaf, Vec::new())]);
                } else {
                    slot_options.push(build_assigned(profile, part));
                }
            }
            let mut acc: Vec<(Vec<Node>, Vec<usize>)> = vec![(Vec::new(), vec![r])];
            for options in &slot_options {
                let mut next = Vec::new();
                for (children, ranks) in &acc {
                    for (node, sub_ranks) in options {
                        let mut c = children.clone();
                        c.push(node.clone());
                        let mut rk = ranks.clone();
                        rk.extend_from_slice(sub_ranks);
                        next.push((c, rk));
                    }
                }
                acc = next;
            }
            for (children, ranks) in acc {
                out.push((Node::Vertex(children), ranks));
            }
        }
    }
    out
}

/// All ordered partitions of the bit set `mask` into `slots` parts, parts
/// may be empty.
fn distribute(mask: u32, slots: usize) -> Vec<Vec<u32>> {
    if slots == 0 {
        return if mask == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    // iterate over all subsets of mask for the first slot
    let mut sub = mask;
    loop {
        for mut rest in distribute(mask & !sub, slots - 1) {
            let mut v = Vec::with_capacity(slots);
            v.push(sub);
            v.append(&mut rest);
            out.push(v);
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & mask;
    }
    out
}

fn permutations_of(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    permute(&mut cur, 0, &mut out);
    out.sort();
    out
}

fn permute(cur: &mut Vec<usize>, at: usize, out: &mut Vec<Vec<usize>>) {
    if at == cur.len() {
        out.push(cur.clone());
        return;
    }
    for i in at..cur.len() {
        cur.swap(at, i);
        permute(cur, at + 1, out);
        cur.swap(at, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordinals::{all_quasibijections, enumerate_ordinals};

    fn ord2(levels: Vec<u8>, size: usize) -> NOrdinal {
        NOrdinal::new(2, size, levels).unwrap()
    }

    #[test]
    fn unary_cells_match_quasibijections() {
        // hom(T; S) is in bijection with the quasibijections S → T
        let b = Budget::default();
        for s in enumerate_ordinals(2, 2, 100).unwrap() {
            for t in enumerate_ordinals(2, 2, 100).unwrap() {
                let trees =
                    enumerate_trees(2, &[t.clone()], &s, OperadClass::General, &b).unwrap();
                assert_eq!(trees.len(), all_quasibijections(&s, &t).len());
            }
        }
        // the concrete instance: T at level 1, S at level 0: two elements
        let t = ord2(vec![1], 2);
        let s = ord2(vec![0], 2);
        let trees = enumerate_trees(2, &[t], &s, OperadClass::General, &b).unwrap();
        assert_eq!(trees.len(), 2);
    }

    #[test]
    fn empty_profile_in_the_normal_class_is_empty() {
        let b = Budget::default();
        let u = NOrdinal::terminal(2);
        assert!(enumerate_trees(2, &[], &u, OperadClass::Normal, &b).unwrap().is_empty());
        assert_eq!(enumerate_trees(2, &[], &u, OperadClass::General, &b).unwrap().len(), 1);
    }

    #[test]
    fn binary_profile_counts_against_the_flat_target() {
        // profile (T, T) with T the level-0 pair: 4 leaves; target all level 0
        let b = Budget::default();
        let t = ord2(vec![0], 2);
        let s = NOrdinal::all_zero(2, 3);
        let trees = enumerate_trees(2, &[t.clone(), t.clone()], &s, OperadClass::Normal, &b)
            .unwrap();
        // two shapes (left and right comb), order-preserving labelings only
        assert_eq!(trees.len(), 4);
    }

    #[test]
    fn cw_subset_of_all_orders() {
        let b = Budget::default();
        let t = ord2(vec![0], 2);
        let s = NOrdinal::all_zero(2, 3);
        let all = enumerate_trees(2, &[t.clone(), t.clone()], &s, OperadClass::Normal, &b)
            .unwrap();
        let cw = enumerate_trees_cw(2, &[t.clone(), t], &s, OperadClass::Normal, &b).unwrap();
        assert_eq!(all.len(), 2 * cw.len());
        assert!(cw.iter().all(|t| t.is_clockwise_ordered()));
    }
}
