//! Exact linear systems over the rationals.

use num_rational::BigRational;
use num_traits::Zero;

/// Solves `a * x = b` by Gaussian elimination over `Q`.
///
/// `a` is given row-major with `cols` columns. Returns one solution (free
/// variables set to zero) or `None` if the system is inconsistent.
pub fn solve(a: &[Vec<BigRational>], b: &[BigRational], cols: usize) -> Option<Vec<BigRational>> {
    assert_eq!(a.len(), b.len(), "one right-hand side entry per row");
    let rows = a.len();
    // augmented matrix
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            assert_eq!(row.len(), cols, "ragged coefficient matrix");
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();

    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for v in m[r].iter_mut() {
            *v *= &inv;
        }
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let factor = row[c].clone();
                for (x, p) in row[c..].iter_mut().zip(&pivot[c..]) {
                    *x -= &factor * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }

    if m[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); cols];
    for (row, &c) in pivots.iter().enumerate() {
        x[c] = m[row][cols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<BigRational>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| rational(v)).collect())
            .collect()
    }

    fn vecq(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| rational(x)).collect()
    }

    fn apply(a: &[Vec<BigRational>], x: &[BigRational]) -> Vec<BigRational> {
        a.iter()
            .map(|row| row.iter().zip(x).map(|(p, q)| p * q).sum())
            .collect()
    }

    #[test]
    fn unique_solution() {
        let a = mat(&[&[2, 1], &[1, 3]]);
        let b = vecq(&[3, 5]);
        let x = solve(&a, &b, 2).unwrap();
        assert_eq!(apply(&a, &x), b);
        assert_eq!(x[0], BigRational::new(4.into(), 5.into()));
    }

    #[test]
    fn inconsistent_system() {
        let a = mat(&[&[1, 1], &[2, 2]]);
        assert!(solve(&a, &vecq(&[1, 3]), 2).is_none());
    }

    #[test]
    fn underdetermined_and_empty() {
        let a = mat(&[&[1, -1, 0], &[0, 1, -1]]);
        let b = vecq(&[1, 1]);
        let x = solve(&a, &b, 3).unwrap();
        assert_eq!(apply(&a, &x), b);
        // no unknowns: solvable iff rhs is zero
        assert!(solve(&[vec![]], &vecq(&[0]), 0).is_some());
        assert!(solve(&[vec![]], &vecq(&[1]), 0).is_none());
    }
}
