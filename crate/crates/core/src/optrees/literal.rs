use crate::ordinals::{parse_ordinal, print_ordinal, NOrdinal};

use super::nplanar::{NPlanarTree, TreeError};
use super::shape::Node;

/// Prints a tree as a nested term with per-vertex ordinal literals, the leaf
/// label list (1-based, planar order) and the vertex linear order (1-based,
/// clockwise order). Round-trips bit-exactly through [`parse_tree`].
pub fn print_tree(t: &NPlanarTree) -> String {
    fn walk(node: &Node, t: &NPlanarTree, next_vertex: &mut usize, out: &mut String) {
        match node {
            Node::Leaf => out.push('*'),
            Node::Vertex(children) => {
                let v = *next_vertex;
                *next_vertex += 1;
                out.push_str("V{");
                out.push_str(&print_ordinal(&t.decorations[v]));
                out.push_str("}(");
                for (i, c) in children.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    walk(c, t, next_vertex, out);
                }
                out.push(')');
            }
        }
    }
    let mut term = String::new();
    walk(&t.shape, t, &mut 0, &mut term);
    let labels: Vec<String> = t.leaf_label.iter().map(|&l| (l + 1).to_string()).collect();
    let order: Vec<String> = t.order_of_vertex.iter().map(|&r| (r + 1).to_string()).collect();
    format!(
        "depth={};tree={};labels=[{}];order=[{}]",
        t.depth,
        term,
        labels.join(","),
        order.join(",")
    )
}

pub fn parse_tree(text: &str) -> Result<NPlanarTree, TreeError> {
    let bad = |msg: &str| TreeError::BadLiteral(format!("{msg}: {text}"));
    let mut depth = None;
    let mut term = None;
    let mut labels = None;
    let mut order = None;
    for field in split_top(text, ';') {
        let (key, value) = field.split_once('=').ok_or_else(|| bad("expected key=value"))?;
        match key.trim() {
            "depth" => depth = Some(value.trim().parse::<usize>().map_err(|_| bad("bad depth"))?),
            "tree" => term = Some(value.trim().to_string()),
            "labels" => labels = Some(parse_list(value.trim()).ok_or_else(|| bad("bad labels"))?),
            "order" => order = Some(parse_list(value.trim()).ok_or_else(|| bad("bad order"))?),
            other => return Err(bad(&format!("unknown field `{other}`"))),
        }
    }
    let depth = depth.ok_or_else(|| bad("missing depth"))?;
    let term = term.ok_or_else(|| bad("missing tree"))?;
    let labels = labels.ok_or_else(|| bad("missing labels"))?;
    let order = order.ok_or_else(|| bad("missing order"))?;
    let mut decorations = Vec::new();
    let shape = parse_node(&term, &mut decorations, depth)?;
    let leaf_label = labels
        .iter()
        .map(|&l| l.checked_sub(1).ok_or_else(|| bad("labels are 1-based")))
        .collect::<Result<Vec<_>, _>>()?;
    let order_of_vertex = order
        .iter()
        .map(|&r| r.checked_sub(1).ok_or_else(|| bad("order is 1-based")))
        .collect::<Result<Vec<_>, _>>()?;
    NPlanarTree::new(depth, shape, decorations, leaf_label, order_of_vertex)
}

fn parse_node(text: &str, decorations: &mut Vec<NOrdinal>, depth: usize) -> Result<Node, TreeError> {
    let bad = |msg: &str| TreeError::BadLiteral(format!("{msg}: {text}"));
    let text = text.trim();
    if text == "*" {
        return Ok(Node::Leaf);
    }
    let rest = text.strip_prefix("V{").ok_or_else(|| bad("expected `*` or `V{`"))?;
    let close = rest.find('}').ok_or_else(|| bad("unclosed ordinal literal"))?;
    let ordinal = parse_ordinal(&rest[..close]).map_err(|e| bad(&e.to_string()))?;
    if ordinal.depth() != depth {
        return Err(bad("decoration depth disagrees with the tree depth"));
    }
    let args = rest[close + 1..]
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| bad("expected parenthesized children"))?;
    let slot = decorations.len();
    decorations.push(ordinal);
    let mut children = Vec::new();
    if !args.trim().is_empty() {
        for part in split_top(args, ',') {
            children.push(parse_node(part, decorations, depth)?);
        }
    }
    if decorations[slot].size() != children.len() {
        return Err(bad("decoration size disagrees with the child count"));
    }
    Ok(Node::Vertex(children))
}

fn parse_list(text: &str) -> Option<Vec<usize>> {
    let inner = text.strip_prefix('[')?.strip_suffix(']')?;
    if inner.trim().is_empty() {
        return Some(Vec::new());
    }
    inner.split(',').map(|s| s.trim().parse().ok()).collect()
}

fn split_top(text: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in text.char_indices() {
        match c {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth = depth.saturating_sub(1),
            c2 if c2 == sep && depth == 0 => {
                out.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if start < text.len() {
        out.push(&text[start..]);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::optrees::enumerate::enumerate_trees;
    use crate::optrees::nplanar::OperadClass;

    #[test]
    fn literal_round_trip_over_an_operation_cell() {
        let b = Budget::default();
        let t = NOrdinal::new(2, 2, vec![0]).unwrap();
        let s = NOrdinal::all_zero(2, 3);
        for tree in
            enumerate_trees(2, &[t.clone(), t.clone()], &s, OperadClass::Normal, &b).unwrap()
        {
            let text = print_tree(&tree);
            assert_eq!(parse_tree(&text).unwrap(), tree, "{text}");
        }
        // the bare tree
        let bare = NPlanarTree::bare(2);
        assert_eq!(parse_tree(&print_tree(&bare)).unwrap(), bare);
    }
}
