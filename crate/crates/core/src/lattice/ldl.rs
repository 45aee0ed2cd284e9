//! Exact LDL^T decomposition over the rationals. The pivots are ratios of
//! consecutive leading principal minors, so they certify positive
//! definiteness exactly and their product is the determinant.

use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

#[derive(Debug, Clone)]
pub struct Ldl {
    /// Strictly lower triangle of the unit lower factor; `lower[i][j]` for j < i.
    pub lower: Vec<Vec<Rational>>,
    /// Diagonal pivots, all strictly positive for a valid decomposition.
    pub pivots: Vec<Rational>,
}

/// Decomposes a symmetric rational matrix as L·D·L^T. Returns the index of
/// the first non-positive pivot on failure.
pub fn decompose(matrix: &[Vec<Rational>]) -> Result<Ldl, (usize, Rational)> {
    let n = matrix.len();
    let mut lower: Vec<Vec<Rational>> = (0..n).map(|i| vec![Rational::zero(); i]).collect();
    let mut pivots: Vec<Rational> = Vec::with_capacity(n);
    for j in 0..n {
        let mut pivot = matrix[j][j].clone();
        for k in 0..j {
            pivot -= &lower[j][k] * &lower[j][k] * &pivots[k];
        }
        if !pivot.is_positive() {
            return Err((j, pivot));
        }
        for i in j + 1..n {
            let mut entry = matrix[i][j].clone();
            for k in 0..j {
                entry -= &lower[i][k] * &lower[j][k] * &pivots[k];
            }
            lower[i][j] = entry / &pivot;
        }
        pivots.push(pivot);
    }
    Ok(Ldl { lower, pivots })
}

impl Ldl {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn determinant(&self) -> Rational {
        self.pivots
            .iter()
            .fold(Rational::one(), |acc, p| acc * p)
    }

    /// Solves A x = b for the decomposed A.
    pub fn solve(&self, b: &[Rational]) -> Vec<Rational> {
        let n = self.rank();
        // forward: L z = b
        let mut z = b.to_vec();
        for i in 0..n {
            for k in 0..i {
                let t = &self.lower[i][k] * &z[k];
                z[i] -= t;
            }
        }
        // scale: D y = z
        for i in 0..n {
            z[i] /= &self.pivots[i];
        }
        // back: L^T x = y
        for i in (0..n).rev() {
            for k in i + 1..n {
                let t = &self.lower[k][i] * &z[k];
                z[i] -= t;
            }
        }
        z
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect()
    }

    #[test]
    fn pivots_of_two_by_two() {
        let ldl = decompose(&mat(&[&[3, -1], &[-1, 4]])).unwrap();
        assert_eq!(ldl.pivots, vec![int(3), ratio(11, 3)]);
        assert_eq!(ldl.determinant(), int(11));
    }

    #[test]
    fn rejects_indefinite() {
        let err = decompose(&mat(&[&[1, 2], &[2, 1]])).unwrap_err();
        assert_eq!(err, (1, int(-3)));
    }

    #[test]
    fn solves_exactly() {
        let a = mat(&[&[3, -1], &[-1, 4]]);
        let ldl = decompose(&a).unwrap();
        let x = ldl.solve(&[int(1), int(0)]);
        assert_eq!(x, vec![ratio(4, 11), ratio(1, 11)]);
    }
}
