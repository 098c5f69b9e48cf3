use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Rank of an integer matrix by fraction-free (Bareiss) elimination. Every
/// division is exact.
pub fn fraction_free_rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (top, bottom) = rows.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in bottom.iter_mut() {
            let factor = row[col].clone();
            for j in col + 1..ncols {
                row[j] = (&pivot_row[col] * &row[j] - &factor * &pivot_row[j]) / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = rows[rank][col].clone();
        rank += 1;
    }
    rank
}
