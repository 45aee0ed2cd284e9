//! Smith normal form over the integers, tracking the row transform and its
//! inverse. For a nonsingular Gram matrix G this gives P G Q = S with P, Q
//! unimodular and S diagonal with the divisibility chain; multiplication by
//! P identifies Z^r / G·Z^r with Z^r / S·Z^r, which is how cosets get
//! canonical labels.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone)]
pub struct SmithForm {
    /// Diagonal of S: d_1 | d_2 | ... | d_r, all positive for nonsingular input.
    pub diag: Vec<BigInt>,
    /// Accumulated row transform P.
    pub p: Vec<Vec<BigInt>>,
    /// P^{-1}, maintained alongside P.
    pub p_inv: Vec<Vec<BigInt>>,
}

struct Work {
    b: Vec<Vec<BigInt>>,
    p: Vec<Vec<BigInt>>,
    p_inv: Vec<Vec<BigInt>>,
    n: usize,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.b.swap(i, j);
        self.p.swap(i, j);
        for row in &mut self.p_inv {
            row.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for row in &mut self.b {
            row.swap(i, j);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in &mut self.b[i] {
            *x = -std::mem::take(x);
        }
        for x in &mut self.p[i] {
            *x = -std::mem::take(x);
        }
        for row in &mut self.p_inv {
            row[i] = -std::mem::take(&mut row[i]);
        }
    }

    /// row_i += c * row_j
    fn add_row(&mut self, i: usize, j: usize, c: &BigInt) {
        for k in 0..self.n {
            let t = c * &self.b[j][k];
            self.b[i][k] += t;
            let t = c * &self.p[j][k];
            self.p[i][k] += t;
        }
        // P^{-1} picks up the inverse op as a column operation: col_j -= c * col_i
        for row in &mut self.p_inv {
            let t = c * &row[i];
            row[j] -= t;
        }
    }

    /// col_i += c * col_j (column ops never touch P)
    fn add_col(&mut self, i: usize, j: usize, c: &BigInt) {
        for row in &mut self.b {
            let t = c * &row[j];
            row[i] += t;
        }
    }

    fn min_abs_position(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<((usize, usize), BigInt)> = None;
        for i in t..self.n {
            for j in t..self.n {
                let v = self.b[i][j].abs();
                if v.is_zero() {
                    continue;
                }
                match &best {
                    Some((_, m)) if *m <= v => {}
                    _ => best = Some(((i, j), v)),
                }
            }
        }
        best.map(|(pos, _)| pos)
    }
}

pub fn smith_form(matrix: &[Vec<BigInt>]) -> SmithForm {
    let n = matrix.len();
    let identity: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();
    let mut w = Work {
        b: matrix.to_vec(),
        p: identity.clone(),
        p_inv: identity,
        n,
    };
    for t in 0..n {
        'pivot: loop {
            let Some((i, j)) = w.min_abs_position(t) else {
                break 'pivot;
            };
            w.swap_rows(t, i);
            w.swap_cols(t, j);
            if w.b[t][t].is_negative() {
                w.negate_row(t);
            }
            let mut dirty = false;
            for i in t + 1..n {
                if !w.b[i][t].is_zero() {
                    let q = -(&w.b[i][t] / &w.b[t][t]);
                    w.add_row(i, t, &q);
                    if !w.b[i][t].is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..n {
                if !w.b[t][j].is_zero() {
                    let q = -(&w.b[t][j] / &w.b[t][t]);
                    w.add_col(j, t, &q);
                    if !w.b[t][j].is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue 'pivot;
            }
            // cross is clear; pull in any entry the pivot does not divide yet
            let pivot = w.b[t][t].clone();
            let offender = (t + 1..n)
                .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !(&w.b[i][j] % &pivot).is_zero());
            match offender {
                Some((i, _)) => w.add_row(t, i, &BigInt::one()),
                None => break 'pivot,
            }
        }
    }
    let diag = (0..n).map(|i| w.b[i][i].clone()).collect();
    SmithForm {
        diag,
        p: w.p,
        p_inv: w.p_inv,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    fn matmul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
        let n = a.len();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| &a[i][k] * &b[k][j]).sum())
                    .collect()
            })
            .collect()
    }

    fn check(matrix: &[Vec<BigInt>], expected_diag: &[i64]) {
        let snf = smith_form(matrix);
        let diag: Vec<BigInt> = expected_diag.iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(snf.diag, diag);
        // chain
        for w in snf.diag.windows(2) {
            if !w[0].is_zero() {
                assert!((&w[1] % &w[0]).is_zero());
            }
        }
        // P * Pinv = I
        let prod = matmul(&snf.p, &snf.p_inv);
        for (i, row) in prod.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                assert_eq!(*x, BigInt::from((i == j) as i64));
            }
        }
        // image(P * M) sits inside image(S): s_i divides every entry of row i
        let pm = matmul(&snf.p, matrix);
        for (i, row) in pm.iter().enumerate() {
            for x in row {
                if snf.diag[i].is_zero() {
                    assert!(x.is_zero());
                } else {
                    assert!((x % &snf.diag[i]).is_zero());
                }
            }
        }
    }

    #[test]
    fn diagonalizes_small_grams() {
        check(&big(&[&[3, -1], &[-1, 4]]), &[1, 11]);
        check(&big(&[&[2, 0], &[0, 2]]), &[2, 2]);
        check(&big(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 9]]), &[1, 1, 9]);
        check(&big(&[&[5, -1], &[-1, 2]]), &[1, 9]);
    }

    #[test]
    fn known_rectangularish_case() {
        check(
            &big(&[
                &[-6, 111, -36, 6],
                &[5, -672, 210, 74],
                &[0, -255, 81, 24],
                &[-7, 255, -81, -10],
            ]),
            &[1, 3, 21, 0],
        );
    }
}
