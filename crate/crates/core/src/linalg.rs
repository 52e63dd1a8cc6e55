//! Fraction-free Gaussian elimination over the integers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Rank of an integer matrix given as rows of equal length, by Bareiss
/// elimination. Every intermediate division is exact.
pub fn rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    let nrows = rows.len();
    let Some(ncols) = rows.first().map(Vec::len) else {
        return 0;
    };
    debug_assert!(rows.iter().all(|r| r.len() == ncols));
    let mut r = 0;
    let mut prev = BigInt::one();
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][col].clone();
        let (top, below) = rows.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in below {
            let factor = row[col].clone();
            for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x = (&pivot * &*x - &factor * p) / &prev;
            }
        }
        prev = pivot;
        r += 1;
    }
    r
}
