use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use super::matrix::{rank_f2, rank_mod_p, rank_q_exact, snf_invariant_factors, SparseInt};
use super::nerve::{boundary, HomotopyError, TruncatedNerve};

/// Coefficient field for Betti numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Field {
    Q,
    F2,
}

/// Betti numbers of a truncated nerve over a chosen field, with the Euler
/// characteristic from the simplex counts.
#[derive(Debug, Clone, Serialize)]
pub struct BettiReport {
    pub field: Field,
    pub betti: Vec<usize>,
    pub euler: i64,
    pub counts: Vec<usize>,
    /// the top degree is computed with the boundary beyond the cap taken to
    /// be zero; exact when the nerve has no simplices above the cap
    pub cap: usize,
}

fn rank_over(field: Field, m: &SparseInt, q_target: Option<usize>) -> usize {
    match field {
        Field::F2 => rank_f2(m),
        Field::Q => {
            // exact small path, certified early-exit large path
            if m.rows * m.cols <= 250_000 || m.nnz() <= 4_000 {
                rank_q_exact(m)
            } else if let Some(t) = q_target {
                let r = rank_mod_p(m, Some(t));
                if r == t {
                    // a mod-p rank can only undershoot the rational rank, and
                    // the image is structurally contained in a t-dimensional
                    // subspace, so hitting t certifies exactness
                    t
                } else {
                    rank_q_exact(m)
                }
            } else {
                rank_q_exact(m)
            }
        }
    }
}

/// Betti numbers b_0 .. b_cap by exact rank computation of the boundary
/// matrices of the normalized chain complex.
pub fn betti(nerve: &TruncatedNerve, field: Field) -> BettiReport {
    let counts = nerve.counts();
    let top = counts.len() - 1;
    let mut ranks = vec![0usize; top + 2]; // rank of ∂_d for d = 0..=top+1
    for d in 1..=top {
        let m = boundary(nerve, d);
        // im ∂_d ⊆ ker ∂_{d-1}, whose dimension is known once rank ∂_{d-1} is
        let target = if d >= 1 { Some(counts[d - 1] - ranks[d - 1]) } else { None };
        ranks[d] = rank_over(field, &m, target);
    }
    let mut betti = Vec::with_capacity(top + 1);
    for d in 0..=top {
        let kernel = counts[d] - ranks[d];
        betti.push(kernel - ranks[d + 1]);
    }
    BettiReport { field, betti, euler: nerve.euler(), counts, cap: nerve.cap }
}

/// Invariant factors of integral H_1: free rank and torsion, computed from
/// the Smith normal form of ∂_2 inside ker ∂_1.
#[derive(Debug, Clone, Serialize)]
pub struct H1Report {
    pub free_rank: usize,
    /// torsion invariant factors d_1 | d_2 | …, each > 1, as decimal strings
    pub torsion: Vec<String>,
}

pub fn h1_integral(nerve: &TruncatedNerve) -> Result<H1Report, HomotopyError> {
    if nerve.cap < 2 {
        return Err(HomotopyError::CapTooSmall(nerve.cap, "integral H_1 needs 2-chains"));
    }
    let d1 = boundary(nerve, 1);
    let d2 = boundary(nerve, 2);
    let rank_d1 = rank_q_exact(&d1);
    let factors = snf_invariant_factors(&d2);
    let rank_d2 = factors.len();
    let kernel = nerve.counts()[1] - rank_d1;
    let torsion: Vec<String> = factors
        .iter()
        .filter(|f| !(*f).is_one())
        .map(|f| f.to_string())
        .collect();
    Ok(H1Report { free_rank: kernel - rank_d2, torsion })
}

impl H1Report {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn factors_display(&self) -> String {
        if self.is_trivial() {
            return "0".into();
        }
        let mut parts = Vec::new();
        if self.free_rank == 1 {
            parts.push("Z".to_string());
        } else if self.free_rank > 1 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        parts.join(" + ")
    }
}

/// Torsion exponent-2 count: how many Z/2 factors H_1 carries.
pub fn z2_torsion_count(h1: &H1Report) -> usize {
    h1.torsion
        .iter()
        .filter(|t| {
            t.parse::<BigInt>()
                .map(|v| (&v % BigInt::from(2)) == BigInt::from(0))
                .unwrap_or(false)
        })
        .count()
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::budget::Budget;
    use crate::fincat::FinCategory;
    use crate::homotopy::nerve::nerve;
    use crate::ordinals::{milgram_poset, quasibijection_category};

    #[test]
    fn betti_of_the_terminal_category() {
        let n = nerve(Arc::new(FinCategory::terminal()), 2, 100).unwrap();
        assert_eq!(betti(&n, Field::Q).betti, vec![1]);
    }

    #[test]
    fn betti_of_j_2_2_is_a_circle() {
        let j = milgram_poset(2, 2, &Budget::default()).unwrap();
        let n = nerve(j.cat().clone(), 2, 1000).unwrap();
        let b = betti(&n, Field::Q);
        assert_eq!(b.betti, vec![1, 1]);
    }

    #[test]
    fn q_3_2_homology_is_projective_plane_like() {
        let q = quasibijection_category(3, 2, &Budget::default()).unwrap();
        let n = nerve(q.cat.clone(), 2, 10_000).unwrap();
        assert_eq!(betti(&n, Field::Q).betti, vec![1, 0, 0]);
        assert_eq!(betti(&n, Field::F2).betti, vec![1, 1, 1]);
        let h1 = h1_integral(&n).unwrap();
        assert_eq!(h1.free_rank, 0);
        assert_eq!(h1.torsion, vec!["2".to_string()]);
    }

    #[test]
    fn q_2_2_h1_is_free_of_rank_one() {
        let q = quasibijection_category(2, 2, &Budget::default()).unwrap();
        let n = nerve(q.cat.clone(), 2, 1000).unwrap();
        assert_eq!(betti(&n, Field::Q).betti, vec![1, 1]);
        let h1 = h1_integral(&n).unwrap();
        assert_eq!(h1.free_rank, 1);
        assert!(h1.torsion.is_empty());
    }
}
