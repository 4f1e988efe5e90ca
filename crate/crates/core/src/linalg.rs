//! Row reduction over F_{q^s} subfields and over F_p.

use crate::field::{Elem, FieldCtx};

/// Rank of a matrix whose entries lie in some subfield of the context field.
pub fn matrix_rank(ctx: &FieldCtx, mut rows: Vec<Vec<Elem>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = ctx.inv(rows[rank][col]).expect("nonzero pivot");
        let pivot_row: Vec<Elem> = rows[rank].iter().map(|&x| ctx.mul(x, inv)).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let f = row[col];
            for (x, &pv) in row.iter_mut().zip(&pivot_row) {
                *x = ctx.sub(*x, ctx.mul(f, pv));
            }
        }
        rows[rank] = pivot_row;
        rank += 1;
    }
    rank
}

/// Rank over GF(2) of a square matrix given as row bitmasks.
pub fn gf2_rank(rows: &mut [u64]) -> usize {
    let mut rank = 0;
    for i in 0..rows.len() {
        let pivot = rows[i];
        if pivot == 0 {
            continue;
        }
        rank += 1;
        let low = pivot & pivot.wrapping_neg();
        for row in rows[i + 1..].iter_mut() {
            if *row & low != 0 {
                *row ^= pivot;
            }
        }
    }
    rank
}

/// Rank over F_p of a dense `dim × dim` matrix stored row-major with entries in 0..p.
pub fn prime_rank(p: u32, dim: usize, mat: &mut [u32]) -> usize {
    let inv: Vec<u32> = (0..p)
        .map(|a| (1..p).find(|&b| a * b % p == 1).unwrap_or(0))
        .collect();
    let mut rank = 0;
    for col in 0..dim {
        let Some(pivot) = (rank..dim).find(|&r| mat[r * dim + col] != 0) else {
            continue;
        };
        if pivot != rank {
            for c in 0..dim {
                mat.swap(pivot * dim + c, rank * dim + c);
            }
        }
        let pinv = inv[mat[rank * dim + col] as usize];
        for c in 0..dim {
            mat[rank * dim + c] = mat[rank * dim + c] * pinv % p;
        }
        for r in rank + 1..dim {
            let f = mat[r * dim + col];
            if f == 0 {
                continue;
            }
            for c in 0..dim {
                let sub = f * mat[rank * dim + c] % p;
                mat[r * dim + c] = (mat[r * dim + c] + p - sub) % p;
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf2_ranks() {
        assert_eq!(gf2_rank(&mut [0b01, 0b10]), 2);
        assert_eq!(gf2_rank(&mut [0b11, 0b11]), 1);
        assert_eq!(gf2_rank(&mut [0, 0, 0]), 0);
        assert_eq!(gf2_rank(&mut [0b110, 0b011, 0b101]), 2);
    }

    #[test]
    fn prime_ranks() {
        // [[1,2],[2,1]] over F_3: det = 1 - 4 = -3 ≡ 0
        assert_eq!(prime_rank(3, 2, &mut [1, 2, 2, 1]), 1);
        assert_eq!(prime_rank(5, 2, &mut [1, 2, 2, 1]), 2);
        assert_eq!(prime_rank(2, 3, &mut [1, 1, 0, 0, 1, 1, 1, 0, 1]), 2);
    }

    #[test]
    fn field_rank_matches_prime_rank_over_f3() {
        let ctx = FieldCtx::new(3, 1, 2).unwrap();
        let raw = [[1u32, 2, 0], [2, 1, 0], [0, 0, 2]];
        let rows = raw
            .iter()
            .map(|r| r.iter().map(|&c| ctx.from_int(c as i64)).collect())
            .collect();
        let mut flat: Vec<u32> = raw.iter().flatten().copied().collect();
        assert_eq!(matrix_rank(&ctx, rows), prime_rank(3, 3, &mut flat));
    }
}
