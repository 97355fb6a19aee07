use num_bigint::BigInt;
use num_traits::Zero;

/// Rank by fraction-free (Bareiss) elimination; every division is exact.
pub fn bareiss_rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    let n_rows = rows.len();
    if n_rows == 0 {
        return 0;
    }
    let n_cols = rows[0].len();
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..n_cols {
        let Some(pivot) = (rank..n_rows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let prow = &head[rank];
        for row in tail.iter_mut() {
            for j in col + 1..n_cols {
                row[j] = (&prow[col] * &row[j] - &row[col] * &prow[j]) / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = rows[rank][col].clone();
        rank += 1;
        if rank == n_rows {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn ranks() {
        assert_eq!(bareiss_rank(b(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]])), 2);
        assert_eq!(bareiss_rank(b(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(bareiss_rank(b(&[&[0, 1], &[1, 0]])), 2);
        assert_eq!(bareiss_rank(b(&[&[2, 4, 1], &[3, 6, 5], &[5, 10, 6]])), 2);
    }
}
