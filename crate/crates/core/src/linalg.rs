//! Dense row reduction over a prime field.

use crate::field::PrimeField;

/// Brings `rows` to reduced row echelon form in place, drops zero rows and
/// returns the pivot column of each remaining row.
pub fn row_reduce(k: PrimeField, rows: &mut Vec<Vec<u32>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        let inv = k.inv(rows[r][c]);
        for v in rows[r].iter_mut() {
            *v = k.mul(*v, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for (v, &pv) in row.iter_mut().zip(pivot_row.iter()).skip(c) {
                if pv != 0 {
                    *v = k.sub(*v, k.mul(f, pv));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank(k: PrimeField, rows: &[Vec<u32>]) -> usize {
    let mut m = rows.to_vec();
    row_reduce(k, &mut m).len()
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse(k: PrimeField, a: &[Vec<u32>]) -> Option<Vec<Vec<u32>>> {
    let n = a.len();
    let mut aug: Vec<Vec<u32>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| u32::from(i == j)));
            r
        })
        .collect();
    let pivots = row_reduce(k, &mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_mul(k: PrimeField, a: &[Vec<u32>], b: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let m = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..m)
                .map(|j| {
                    row.iter()
                        .zip(b.iter())
                        .fold(0, |acc, (&x, brow)| k.add(acc, k.mul(x, brow[j])))
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_round_trip() {
        let k = PrimeField::default();
        let a = vec![vec![1, 2, 0], vec![0, 1, 5], vec![3, 0, 1]];
        let b = inverse(k, &a).unwrap();
        let id = mat_mul(k, &a, &b);
        for (i, row) in id.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                assert_eq!(v, u32::from(i == j));
            }
        }
    }

    #[test]
    fn singular_has_no_inverse() {
        let k = PrimeField::default();
        assert!(inverse(k, &[vec![1, 2], vec![2, 4]]).is_none());
        assert_eq!(rank(k, &[vec![1, 2], vec![2, 4]]), 1);
    }
}
