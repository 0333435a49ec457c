use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// A sparse integer matrix stored by rows; entries are accumulated.
#[derive(Debug, Clone, Default)]
pub struct SparseInt {
    pub rows: usize,
    pub cols: usize,
    /// per row: sorted (column, value) with value ≠ 0
    pub data: Vec<Vec<(usize, i64)>>,
}

impl SparseInt {
    pub fn new(rows: usize, cols: usize) -> SparseInt {
        SparseInt { rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn add(&mut self, r: usize, c: usize, v: i64) {
        if v == 0 {
            return;
        }
        let row = &mut self.data[r];
        match row.binary_search_by_key(&c, |&(col, _)| col) {
            Ok(i) => {
                row[i].1 += v;
                if row[i].1 == 0 {
                    row.remove(i);
                }
            }
            Err(i) => row.insert(i, (c, v)),
        }
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(|r| r.len()).sum()
    }

    pub fn transpose(&self) -> SparseInt {
        let mut t = SparseInt::new(self.cols, self.rows);
        for (r, row) in self.data.iter().enumerate() {
            for &(c, v) in row {
                t.data[c].push((r, v));
            }
        }
        t
    }
}

/// Exact rank over the rationals by fraction-free sparse row elimination
/// with arbitrary-precision entries.
pub fn rank_q_exact(m: &SparseInt) -> usize {
    // pivot leading column -> gcd-normalized row over BigInt
    let mut pivots: Vec<(usize, Vec<(usize, BigInt)>)> = Vec::new();
    let mut rank = 0usize;
    let mut rows: Vec<Vec<(usize, BigInt)>> = m
        .data
        .iter()
        .map(|r| r.iter().map(|&(c, v)| (c, BigInt::from(v))).collect())
        .collect();
    // process shorter rows first to limit fill-in
    rows.sort_by_key(|r| r.len());
    for mut row in rows {
        loop {
            let Some(&(lead, _)) = row.first() else { break };
            match pivots.binary_search_by_key(&lead, |p| p.0) {
                Ok(pi) => {
                    // row := pv * row − rv * pivot, cancelling the lead
                    let pv = pivots[pi].1[0].1.clone();
                    let rv = row[0].1.clone();
                    row = add_scaled(&row, &pv, &pivots[pi].1, &-&rv);
                    normalize_row(&mut row);
                }
                Err(at) => {
                    normalize_row(&mut row);
                    pivots.insert(at, (lead, row));
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn add_scaled(
    a: &[(usize, BigInt)],
    ca: &BigInt,
    b: &[(usize, BigInt)],
    cb: &BigInt,
) -> Vec<(usize, BigInt)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            let v = ca * &a[i].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
        } else if take_b {
            let v = cb * &b[j].1;
            if !v.is_zero() {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = ca * &a[i].1 + cb * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn normalize_row(row: &mut Vec<(usize, BigInt)>) {
    if row.is_empty() {
        return;
    }
    let mut g = BigInt::zero();
    for (_, v) in row.iter() {
        g = num_integer_gcd(&g, v);
    }
    if !g.is_zero() && g != BigInt::from(1) {
        for (_, v) in row.iter_mut() {
            *v = &*v / &g;
        }
    }
    if row[0].1.is_negative() {
        for (_, v) in row.iter_mut() {
            *v = -&*v;
        }
    }
}

fn num_integer_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut a, mut b) = (a.abs(), b.abs());
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

/// Rank over F2 by bit-matrix elimination.
pub fn rank_f2(m: &SparseInt) -> usize {
    let words = m.cols.div_ceil(64);
    let mut pivots: Vec<(usize, Vec<u64>)> = Vec::new(); // (leading column, row bits)
    let mut rank = 0;
    for row in &m.data {
        let mut bits = vec![0u64; words];
        for &(c, v) in row {
            if v.rem_euclid(2) == 1 {
                bits[c / 64] ^= 1 << (c % 64);
            }
        }
        loop {
            let Some(lead) = leading_bit(&bits) else { break };
            match pivots.binary_search_by_key(&lead, |p| p.0) {
                Ok(pi) => {
                    let p = pivots[pi].1.clone();
                    for (w, pw) in bits.iter_mut().zip(&p) {
                        *w ^= pw;
                    }
                }
                Err(at) => {
                    pivots.insert(at, (lead, bits));
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn leading_bit(bits: &[u64]) -> Option<usize> {
    for (w, &word) in bits.iter().enumerate() {
        if word != 0 {
            return Some(w * 64 + word.trailing_zeros() as usize);
        }
    }
    None
}

const P: u64 = 2_147_483_647; // 2^31 - 1, prime

/// Rank over F_p (p = 2^31 − 1) with an optional early-exit target. Returns
/// the rank found; when a target is supplied and reached, elimination stops.
pub fn rank_mod_p(m: &SparseInt, target: Option<usize>) -> usize {
    let mut pivots: Vec<(usize, Vec<(usize, u64)>)> = Vec::new();
    let mut rank = 0usize;
    let mut order: Vec<usize> = (0..m.rows).collect();
    order.sort_by_key(|&r| m.data[r].len());
    for r in order {
        if Some(rank) == target {
            return rank;
        }
        let mut row: Vec<(usize, u64)> = m.data[r]
            .iter()
            .map(|&(c, v)| (c, v.rem_euclid(P as i64) as u64))
            .filter(|&(_, v)| v != 0)
            .collect();
        loop {
            let Some(&(lead, lv)) = row.first() else { break };
            match pivots.binary_search_by_key(&lead, |p| p.0) {
                Ok(pi) => {
                    // row -= (lv / pivot_lead) * pivot
                    let pivot = pivots[pi].1.clone();
                    let factor = mulmod(lv, invmod(pivot[0].1));
                    row = sub_scaled_mod(&row, &pivot, factor);
                }
                Err(at) => {
                    pivots.insert(at, (lead, row));
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn invmod(a: u64) -> u64 {
    // Fermat: a^(P-2) mod P
    let mut base = a % P;
    let mut exp = P - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base);
        }
        base = mulmod(base, base);
        exp >>= 1;
    }
    acc
}

fn sub_scaled_mod(a: &[(usize, u64)], b: &[(usize, u64)], factor: u64) -> Vec<(usize, u64)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i]);
            i += 1;
        } else if i >= a.len() || b[j].0 < a[i].0 {
            let v = (P - mulmod(factor, b[j].1)) % P;
            if v != 0 {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = (a[i].1 + P - mulmod(factor, b[j].1)) % P;
            if v != 0 {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Smith normal form over the integers: the nonzero invariant factors
/// d_1 | d_2 | …, each positive, of the given matrix.
pub fn snf_invariant_factors(m: &SparseInt) -> Vec<BigInt> {
    let mut dense: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); m.cols]; m.rows];
    for (r, row) in m.data.iter().enumerate() {
        for &(c, v) in row {
            dense[r][c] = BigInt::from(v);
        }
    }
    let mut factors = Vec::new();
    let (mut top, rows, cols) = (0usize, m.rows, m.cols);
    let mut left = 0usize;
    while top < rows && left < cols {
        // find the smallest nonzero entry in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for r in top..rows {
            for c in left..cols {
                if !dense[r][c].is_zero()
                    && best
                        .map(|(br, bc)| dense[r][c].abs() < dense[br][bc].abs())
                        .unwrap_or(true)
                {
                    best = Some((r, c));
                }
            }
        }
        let Some((pr, pc)) = best else { break };
        dense.swap(top, pr);
        for row in dense.iter_mut() {
            row.swap(left, pc);
        }
        if dense[top][left].is_negative() {
            for c in left..cols {
                dense[top][c] = -&dense[top][c];
            }
        }
        // clear the pivot row and column by division with remainder,
        // restarting whenever a smaller entry appears
        let mut clean = true;
        for r in top + 1..rows {
            if !dense[r][left].is_zero() {
                let q = &dense[r][left] / &dense[top][left];
                if !q.is_zero() {
                    for c in left..cols {
                        let sub = &q * &dense[top][c];
                        dense[r][c] = &dense[r][c] - sub;
                    }
                }
                if !dense[r][left].is_zero() {
                    clean = false;
                }
            }
        }
        for c in left + 1..cols {
            if !dense[top][c].is_zero() {
                let q = &dense[top][c] / &dense[top][left];
                if !q.is_zero() {
                    for r in top..rows {
                        let sub = &q * &dense[r][left];
                        dense[r][c] = &dense[r][c] - sub;
                    }
                }
                if !dense[top][c].is_zero() {
                    clean = false;
                }
            }
        }
        if !clean {
            continue; // a remainder survived; pick a smaller pivot
        }
        factors.push(dense[top][left].clone());
        top += 1;
        left += 1;
    }
    // enforce the divisibility chain
    let mut i = 0;
    while i + 1 < factors.len() {
        let (a, b) = (factors[i].clone(), factors[i + 1].clone());
        if (&b % &a).is_zero() {
            i += 1;
            continue;
        }
        let g = num_integer_gcd(&a, &b);
        let l = &a / &g * &b;
        factors[i] = g;
        factors[i + 1] = l;
        i = 0;
    }
    factors
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_dense(rows: &[&[i64]]) -> SparseInt {
        let mut m = SparseInt::new(rows.len(), rows.first().map_or(0, |r| r.len()));
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                m.add(r, c, v);
            }
        }
        m
    }

    #[test]
    fn rank_of_small_matrices() {
        let m = from_dense(&[&[1, 2], &[2, 4]]);
        assert_eq!(rank_q_exact(&m), 1);
        assert_eq!(rank_mod_p(&m, None), 1);
        let m = from_dense(&[&[1, 0, 1], &[0, 1, 1], &[1, 1, 0]]);
        assert_eq!(rank_q_exact(&m), 3);
        assert_eq!(rank_f2(&m), 2); // rows sum to zero mod 2
    }

    #[test]
    fn rank_discrepancy_mod_2() {
        let m = from_dense(&[&[2]]);
        assert_eq!(rank_q_exact(&m), 1);
        assert_eq!(rank_f2(&m), 0);
    }

    #[test]
    fn snf_detects_torsion() {
        // Z^2 --(2 0; 0 3)--> Z^2
        let m = from_dense(&[&[2, 0], &[0, 3]]);
        let f = snf_invariant_factors(&m);
        assert_eq!(f, vec![BigInt::from(1), BigInt::from(6)]);
        let m = from_dense(&[&[2, 4], &[4, 8]]);
        assert_eq!(snf_invariant_factors(&m), vec![BigInt::from(2)]);
    }

    #[test]
    fn early_exit_rank_reaches_target() {
        let m = from_dense(&[&[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(rank_mod_p(&m, Some(2)), 2);
    }
}
