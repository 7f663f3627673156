//! Fraction-free determinants over any exact ring.

use crate::ring::Ring;

/// Determinant by Bareiss elimination; all divisions are exact.
pub fn determinant<R: Ring>(mut m: Vec<Vec<R>>) -> R {
    let n = m.len();
    if n == 0 {
        return R::one();
    }
    assert!(m.iter().all(|r| r.len() == n), "determinant of a non-square matrix");
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return R::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = v.exact_div(&prev);
            }
            m[i][k] = R::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        d.neg()
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::RatPoly;
    use crate::ring::{int, Rat};

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
        rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect()
    }

    #[test]
    fn small_determinants() {
        assert_eq!(determinant(mat(&[&[2, 1], &[1, 3]])), int(5));
        assert_eq!(determinant(mat(&[&[0, 1], &[1, 0]])), int(-1));
        assert_eq!(determinant(mat(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]])), int(-3));
        assert_eq!(determinant(mat(&[&[1, 2], &[2, 4]])), int(0));
    }

    #[test]
    fn polynomial_entries() {
        // det [[T, 1], [1, T]] = T^2 - 1
        let t = RatPoly::var();
        let one = RatPoly::one();
        let d = determinant(vec![vec![t.clone(), one.clone()], vec![one, t]]);
        assert_eq!(d, RatPoly::from_ints(&[-1, 0, 1]));
    }
}
