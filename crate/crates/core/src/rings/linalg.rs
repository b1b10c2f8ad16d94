//! Exact Gaussian elimination over a coefficient field.

use super::field::Field;
use num_rational::BigRational;
use num_traits::Zero;

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(field: &Field, rows: &mut [Vec<BigRational>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = field.inv(&rows[r][col]);
        for x in rows[r].iter_mut() {
            *x = field.mul(x, &inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let factor = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x = field.sub(x, &field.mul(&factor, y));
                    }
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

/// A solution of `A·v = b` with every free unknown set to zero.
pub fn solve(field: &Field, a: &[Vec<BigRational>], b: &[BigRational], ncols: usize) -> Option<Vec<BigRational>> {
    let mut rows: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(field, &mut rows, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut v = vec![BigRational::zero(); ncols];
    for (i, &c) in pivots.iter().enumerate() {
        v[c] = rows[i][ncols].clone();
    }
    Some(v)
}

/// A nonzero vector of the kernel of `A`: the first free column set to 1.
pub fn kernel_vector(field: &Field, a: &[Vec<BigRational>], ncols: usize) -> Option<Vec<BigRational>> {
    let mut rows = a.to_vec();
    let pivots = rref(field, &mut rows, ncols);
    let free = (0..ncols).find(|c| !pivots.contains(c))?;
    let mut v = vec![BigRational::zero(); ncols];
    v[free] = field.from_int(1);
    for (i, &c) in pivots.iter().enumerate() {
        if c < free {
            v[c] = field.neg(&rows[i][free]);
        }
    }
    Some(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn solves_and_detects_inconsistency() {
        let f = Field::Rationals;
        let a = vec![vec![q(1), q(2)], vec![q(2), q(4)]];
        assert_eq!(solve(&f, &a, &[q(3), q(6)], 2), Some(vec![q(3), q(0)]));
        assert_eq!(solve(&f, &a, &[q(3), q(7)], 2), None);
    }

    #[test]
    fn kernel() {
        let f = Field::Rationals;
        let a = vec![vec![q(1), q(2), q(3)], vec![q(0), q(1), q(1)]];
        let v = kernel_vector(&f, &a, 3).unwrap();
        for row in &a {
            let dot = row.iter().zip(&v).fold(q(0), |s, (x, y)| s + x * y);
            assert!(dot.is_zero());
        }
        assert!(kernel_vector(&f, &[vec![q(1), q(0)], vec![q(0), q(1)]], 2).is_none());
    }
}
