use std::sync::Arc;

use thiserror::Error;

use crate::fincat::FinCategory;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomotopyError {
    #[error("simplex budget exceeded: {0} simplices")]
    SizeBudgetExceeded(usize),
    #[error("the category is not connected")]
    NotConnected,
    #[error("dimension cap {0} too small: {1}")]
    CapTooSmall(usize, &'static str),
}

/// The nerve of a finite category truncated at a dimension cap: all
/// nondegenerate simplices (chains of composable non-identity morphisms)
/// together with their face incidence. A face obtained by composing into an
/// identity collapses and is recorded as `None`.
#[derive(Debug, Clone)]
pub struct TruncatedNerve {
    pub base: Arc<FinCategory>,
    pub cap: usize,
    /// simplices[d] lists the degree-d chains; degree 0 holds the objects
    pub simplices: Vec<Vec<Vec<usize>>>,
    /// faces[d][s] lists the d+1 faces of simplex s of degree d (d ≥ 1)
    pub faces: Vec<Vec<Vec<Option<usize>>>>,
}

impl TruncatedNerve {
    pub fn counts(&self) -> Vec<usize> {
        self.simplices.iter().map(|s| s.len()).collect()
    }

    /// Euler characteristic: alternating sum of the simplex counts.
    pub fn euler(&self) -> i64 {
        self.counts()
            .iter()
            .enumerate()
            .map(|(d, &n)| if d % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }
}

/// Builds the truncated nerve up to the dimension cap.
pub fn nerve(
    base: Arc<FinCategory>,
    cap: usize,
    simplex_budget: usize,
) -> Result<TruncatedNerve, HomotopyError> {
    let mut simplices: Vec<Vec<Vec<usize>>> = Vec::new();
    simplices.push((0..base.object_count()).map(|o| vec![o]).collect());
    let nonid: Vec<usize> =
        (0..base.morphism_count()).filter(|&m| !base.is_identity(m)).collect();
    if cap >= 1 {
        simplices.push(nonid.iter().map(|&m| vec![m]).collect());
    }
    let mut total = simplices.iter().map(|s| s.len()).sum::<usize>();
    for d in 2..=cap {
        let mut next = Vec::new();
        for chain in &simplices[d - 1] {
            let last_tgt = base.tgt(*chain.last().expect("nonempty chain"));
            for &m in base.morphisms_from(last_tgt) {
                if base.is_identity(m) {
                    continue;
                }
                let mut c = chain.clone();
                c.push(m);
                next.push(c);
            }
        }
        next.sort();
        total += next.len();
        if total > simplex_budget {
            return Err(HomotopyError::SizeBudgetExceeded(total));
        }
        simplices.push(next);
        if simplices[d].is_empty() {
            break;
        }
    }
    while simplices.len() > 1 && simplices.last().map_or(false, |s| s.is_empty()) {
        simplices.pop();
    }
    // face tables
    let mut faces: Vec<Vec<Vec<Option<usize>>>> = vec![Vec::new()];
    for d in 1..simplices.len() {
        let lower = &simplices[d - 1];
        let index = |needle: &Vec<usize>| lower.binary_search(needle).ok();
        let mut table = Vec::with_capacity(simplices[d].len());
        for chain in &simplices[d] {
            let mut fs = Vec::with_capacity(d + 1);
            for i in 0..=d {
                let face: Option<Vec<usize>> = if d == 1 {
                    // faces of an arrow are its endpoint objects
                    let m = chain[0];
                    Some(vec![if i == 0 { base.tgt(m) } else { base.src(m) }])
                } else if i == 0 {
                    Some(chain[1..].to_vec())
                } else if i == d {
                    Some(chain[..d - 1].to_vec())
                } else {
                    let c = base.compose(chain[i], chain[i - 1]).expect("composable chain");
                    if base.is_identity(c) {
                        None // degenerate face
                    } else {
                        let mut v = chain[..i - 1].to_vec();
                        v.push(c);
                        v.extend_from_slice(&chain[i + 1..]);
                        Some(v)
                    }
                };
                fs.push(face.map(|f| index(&f).expect("face is listed")));
            }
            table.push(fs);
        }
        faces.push(table);
    }
    Ok(TruncatedNerve { base, cap, simplices, faces })
}

/// The boundary matrix ∂_d : C_d → C_{d-1} of the normalized chain complex.
pub fn boundary(nerve: &TruncatedNerve, d: usize) -> super::matrix::SparseInt {
    use super::matrix::SparseInt;
    if d == 0 || d >= nerve.simplices.len() {
        let rows = if d >= 1 { nerve.simplices.get(d - 1).map_or(0, |s| s.len()) } else { 0 };
        return SparseInt::new(rows, 0);
    }
    let rows = nerve.simplices[d - 1].len();
    let cols = nerve.simplices[d].len();
    let mut m = SparseInt::new(rows, cols);
    for (s, fs) in nerve.faces[d].iter().enumerate() {
        for (i, face) in fs.iter().enumerate() {
            if let Some(f) = face {
                m.add(*f, s, if i % 2 == 0 { 1 } else { -1 });
            }
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::ordinals::quasibijection_category;

    #[test]
    fn nerve_of_terminal_category() {
        let n = nerve(Arc::new(FinCategory::terminal()), 3, 1000).unwrap();
        assert_eq!(n.counts(), vec![1]);
        assert_eq!(n.euler(), 1);
    }

    #[test]
    fn nerve_of_arrow_category_is_an_interval() {
        let n = nerve(Arc::new(FinCategory::arrow()), 3, 1000).unwrap();
        assert_eq!(n.counts(), vec![2, 1]);
        assert_eq!(n.euler(), 1);
    }

    #[test]
    fn nerve_of_q_3_2_has_the_projective_plane_counts() {
        let q = quasibijection_category(3, 2, &Budget::default()).unwrap();
        let n = nerve(q.cat.clone(), 2, 10_000).unwrap();
        assert_eq!(n.counts(), vec![3, 6, 4]);
        assert_eq!(n.euler(), 1);
    }
}
