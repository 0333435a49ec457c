use super::ordinal::{pair_count, pair_index, NOrdinal, OrdinalError};

/// Prints an ordinal in the literal syntax
/// `n=2;k=3;levels=[(1,2):0,(1,3):0,(2,3):1]` (1-based pairs).
pub fn print_ordinal(t: &NOrdinal) -> String {
    let mut parts = Vec::new();
    for i in 0..t.size() {
        for j in i + 1..t.size() {
            parts.push(format!("({},{}):{}", i + 1, j + 1, t.level(i, j)));
        }
    }
    format!("n={};k={};levels=[{}]", t.depth(), t.size(), parts.join(","))
}

/// Parses the literal syntax produced by [`print_ordinal`].
pub fn parse_ordinal(text: &str) -> Result<NOrdinal, OrdinalError> {
    let bad = |msg: &str| OrdinalError::BadLiteral(format!("{msg}: {text}"));
    let mut depth = None;
    let mut size = None;
    let mut levels_text = None;
    for field in split_fields(text) {
        let (key, value) = field.split_once('=').ok_or_else(|| bad("expected key=value"))?;
        match key.trim() {
            "n" => depth = Some(value.trim().parse::<usize>().map_err(|_| bad("bad depth"))?),
            "k" => size = Some(value.trim().parse::<usize>().map_err(|_| bad("bad size"))?),
            "levels" => levels_text = Some(value.trim().to_string()),
            other => return Err(bad(&format!("unknown field `{other}`"))),
        }
    }
    let depth = depth.ok_or_else(|| bad("missing n"))?;
    let size = size.ok_or_else(|| bad("missing k"))?;
    let levels_text = levels_text.ok_or_else(|| bad("missing levels"))?;
    let inner = levels_text
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| bad("levels must be bracketed"))?;
    let mut levels = vec![None; pair_count(size)];
    if !inner.trim().is_empty() {
        for item in split_items(inner) {
            let (pair, level) = item.rsplit_once(':').ok_or_else(|| bad("expected (i,j):l"))?;
            let pair = pair
                .trim()
                .strip_prefix('(')
                .and_then(|s| s.strip_suffix(')'))
                .ok_or_else(|| bad("expected parenthesized pair"))?;
            let (i, j) = pair.split_once(',').ok_or_else(|| bad("expected i,j"))?;
            let i: usize = i.trim().parse().map_err(|_| bad("bad pair index"))?;
            let j: usize = j.trim().parse().map_err(|_| bad("bad pair index"))?;
            if i == 0 || j == 0 || i >= j || j > size {
                return Err(bad("pair out of range"));
            }
            let l: u8 = level.trim().parse().map_err(|_| bad("bad level"))?;
            levels[pair_index(size, i - 1, j - 1)] = Some(l);
        }
    }
    let levels = levels
        .into_iter()
        .collect::<Option<Vec<u8>>>()
        .ok_or_else(|| bad("missing pair level"))?;
    NOrdinal::new(depth, size, levels)
}

fn split_fields(text: &str) -> Vec<&str> {
    // split on `;` outside brackets
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in text.char_indices() {
        match c {
            '[' | '(' => depth += 1,
            ']' | ')' => depth = depth.saturating_sub(1),
            ';' if depth == 0 => {
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

fn split_items(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
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
    use crate::ordinals::ordinal::enumerate_ordinals;

    #[test]
    fn literal_round_trip() {
        for t in enumerate_ordinals(3, 4, 100_000).unwrap() {
            let text = print_ordinal(&t);
            assert_eq!(parse_ordinal(&text).unwrap(), t);
        }
        let t = parse_ordinal("n=2;k=3;levels=[(1,2):0,(1,3):0,(2,3):1]").unwrap();
        assert_eq!(t.level(0, 1), 0);
        assert_eq!(t.level(1, 2), 1);
    }

    #[test]
    fn empty_and_terminal_literals() {
        assert_eq!(parse_ordinal("n=2;k=0;levels=[]").unwrap().size(), 0);
        assert_eq!(parse_ordinal("n=4;k=1;levels=[]").unwrap().size(), 1);
    }
}
