use crate::scalars::{Field, Ring};

use super::PolyError;

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
pub fn det_fraction_free<R: Ring>(m: &[Vec<R>]) -> Result<R, PolyError> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(PolyError::NotSquare);
    }
    if n == 0 {
        return Ok(R::one());
    }
    let mut a: Vec<Vec<R>> = m.to_vec();
    let mut prev = R::one();
    let mut negate = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(R::zero());
            };
            a.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[i][j].clone() * &a[k][k] - a[i][k].clone() * &a[k][j];
                a[i][j] = t.try_div(&prev).ok_or(PolyError::NotDivisible)?;
            }
            a[i][k] = R::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}

/// Determinant by cofactor expansion along the first row.
pub fn det_cofactor<R: Ring>(m: &[Vec<R>]) -> R {
    let n = m.len();
    match n {
        0 => R::one(),
        1 => m[0][0].clone(),
        _ => {
            let mut acc = R::zero();
            for j in 0..n {
                let minor: Vec<Vec<R>> =
                    m[1..].iter().map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| v.clone()).collect()).collect();
                let t = m[0][j].clone() * &det_cofactor(&minor);
                acc = if j % 2 == 0 { acc + &t } else { acc - &t };
            }
            acc
        }
    }
}

/// Homogeneous linear system over a field with named unknowns.
#[derive(Clone, Debug)]
pub struct LinearSystem<K> {
    pub matrix: Vec<Vec<K>>,
    pub unknowns: Vec<String>,
}

impl<K: Field> LinearSystem<K> {
    pub fn new(matrix: Vec<Vec<K>>, unknowns: Vec<String>) -> Result<Self, PolyError> {
        if matrix.iter().any(|r| r.len() != unknowns.len()) {
            return Err(PolyError::NotRectangular);
        }
        Ok(LinearSystem { matrix, unknowns })
    }

    pub fn det(&self) -> Result<K, PolyError> {
        det_fraction_free(&self.matrix)
    }

    /// Basis of the kernel from the reduced row echelon form.
    #[allow(clippy::needless_range_loop)]
    pub fn solve_nullspace(&self) -> Vec<Vec<K>> {
        let ncols = self.unknowns.len();
        let mut a = self.matrix.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..ncols {
            let Some(p) = (row..a.len()).find(|&i| !a[i][col].is_zero()) else { continue };
            a.swap(row, p);
            let inv = a[row][col].inv();
            for j in 0..ncols {
                a[row][j] = a[row][j].clone() * &inv;
            }
            for i in 0..a.len() {
                if i != row && !a[i][col].is_zero() {
                    let f = a[i][col].clone();
                    for j in 0..ncols {
                        let t = a[row][j].clone() * &f;
                        a[i][j] = a[i][j].clone() - &t;
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == a.len() {
                break;
            }
        }
        let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![K::zero(); ncols];
                v[f] = K::one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = -a[r][f].clone();
                }
                v
            })
            .collect()
    }
}

/// Solves the square system `m x = rhs` by Cramer's rule with fraction-free determinants.
///
/// Returns the numerators and the common denominator `det m`.
pub fn cramer<R: Ring>(m: &[Vec<R>], rhs: &[R]) -> Result<(Vec<R>, R), PolyError> {
    let d = det_fraction_free(m)?;
    let n = m.len();
    let mut nums = Vec::with_capacity(n);
    for j in 0..n {
        let mj: Vec<Vec<R>> = m
            .iter()
            .zip(rhs)
            .map(|(row, b)| row.iter().enumerate().map(|(c, v)| if c == j { b.clone() } else { v.clone() }).collect())
            .collect();
        nums.push(det_fraction_free(&mj)?);
    }
    Ok((nums, d))
}
