//! Dense symmetric eigensolver and numerical rank.
//!
//! This is the brute-force oracle the exact spectral recursion is validated
//! against, so it favors verifiability over speed: a cyclic Jacobi rotation
//! scheme whose eigenvalue error is bounded by the final off-diagonal norm.
//! Each sweep costs O(N^3); fine for the orders (up to ~1000) the test
//! suites need, useless beyond that.

use crate::error::{Error, Result};

/// Relative off-diagonal termination threshold for the Jacobi sweep.
pub const DEFAULT_EIG_TOL: f64 = 1e-12;
pub const DEFAULT_MAX_SWEEPS: usize = 64;
/// Relative pivot threshold for `numerical_rank`.
pub const DEFAULT_RANK_TOL: f64 = 1e-8;

/// Dense real symmetric matrix, row-major.
///
/// Symmetry is maintained by construction (`set` writes both triangles);
/// the solver never symmetrizes after the fact.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    order: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn zeros(order: usize) -> Self {
        Self {
            order,
            data: vec![0.0; order * order],
        }
    }

    /// Build from an entry function evaluated on the upper triangle and
    /// mirrored, so `entries[i][j] == entries[j][i]` holds exactly.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            for j in i..order {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.order + j]
    }

    /// Set entry (i, j) and its mirror (j, i).
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.order + j] = value;
        self.data[j * self.order + i] = value;
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// `self + alpha * I`.
    pub fn shifted(&self, alpha: f64) -> Self {
        let mut out = self.clone();
        for i in 0..self.order {
            out.data[i * self.order + i] += alpha;
        }
        out
    }
}

/// All eigenvalues of a symmetric matrix, sorted descending.
///
/// Cyclic Jacobi: plane rotations annihilate off-diagonal entries pair by
/// pair until the off-diagonal Frobenius norm drops below
/// `tol * ||M||_F`; the absolute error of each returned eigenvalue is
/// bounded by that final off-diagonal norm. Rotations smaller than the
/// target divided by N are skipped; the skipped mass alone can never
/// push the off-diagonal norm back above the threshold.
pub fn sym_eigenvalues(m: &SymmetricMatrix, tol: f64, max_sweeps: usize) -> Result<Vec<f64>> {
    assert!(tol > 0.0, "tolerance must be positive");
    let n = m.order;
    if n == 0 {
        return Ok(Vec::new());
    }
    let fro = m.frobenius_norm();
    if !fro.is_finite() {
        return Err(Error::NonFiniteMatrix);
    }
    let mut a = m.data.clone();
    if n == 1 || fro == 0.0 {
        return Ok(sorted_descending(
            (0..n).map(|i| a[i * n + i]).collect::<Vec<_>>(),
        ));
    }
    let target = tol * fro;
    let skip_below = target / n as f64;

    for _sweep in 0..max_sweeps {
        if off_diagonal_norm(&a, n) <= target {
            return Ok(sorted_descending(
                (0..n).map(|i| a[i * n + i]).collect::<Vec<_>>(),
            ));
        }
        for p in 0..n - 1 {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq.abs() <= skip_below {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                // Smaller-root tangent keeps |theta| <= pi/4 (stability).
                let tau = (aqq - app) / (2.0 * apq);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    1.0 / (tau - (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                // Rotate rows p and q in place, then mirror into the
                // columns; contiguous row access keeps this vectorizable.
                let (lo, hi) = a.split_at_mut(q * n);
                let row_p = &mut lo[p * n..p * n + n];
                let row_q = &mut hi[..n];
                for (x, y) in row_p.iter_mut().zip(row_q.iter_mut()) {
                    let xv = *x;
                    let yv = *y;
                    *x = c * xv - s * yv;
                    *y = s * xv + c * yv;
                }
                row_p[p] = app - t * apq;
                row_q[q] = aqq + t * apq;
                row_p[q] = 0.0;
                row_q[p] = 0.0;
                for i in 0..n {
                    if i != p && i != q {
                        a[i * n + p] = a[p * n + i];
                        a[i * n + q] = a[q * n + i];
                    }
                }
            }
        }
    }
    Err(Error::NoConvergence {
        sweeps: max_sweeps,
        off_norm: off_diagonal_norm(&a, n),
    })
}

/// `sym_eigenvalues` with the default tolerance and sweep budget.
pub fn sym_eigenvalues_default(m: &SymmetricMatrix) -> Result<Vec<f64>> {
    sym_eigenvalues(m, DEFAULT_EIG_TOL, DEFAULT_MAX_SWEEPS)
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            let x = a[i * n + j];
            sum += x * x;
        }
    }
    (2.0 * sum).sqrt()
}

fn sorted_descending(mut values: Vec<f64>) -> Vec<f64> {
    values.sort_unstable_by(|a, b| b.partial_cmp(a).expect("finite eigenvalues"));
    values
}

/// Numerical rank by row echelon reduction with partial pivoting.
///
/// A pivot counts as zero when its magnitude is below `tol` times the
/// largest absolute entry of the input matrix.
pub fn numerical_rank(m: &SymmetricMatrix, tol: f64) -> usize {
    assert!(tol > 0.0, "tolerance must be positive");
    let n = m.order;
    let mut a = m.data.clone();
    let max_abs = a.iter().fold(0.0f64, |acc, x| acc.max(x.abs()));
    if max_abs == 0.0 {
        return 0;
    }
    let threshold = tol * max_abs;
    let mut rank = 0;
    let mut row = 0;
    for col in 0..n {
        if row == n {
            break;
        }
        let pivot_row = (row..n)
            .max_by(|&i, &j| {
                a[i * n + col]
                    .abs()
                    .partial_cmp(&a[j * n + col].abs())
                    .expect("finite entries")
            })
            .expect("non-empty range");
        if a[pivot_row * n + col].abs() < threshold {
            continue;
        }
        if pivot_row != row {
            for j in 0..n {
                a.swap(row * n + j, pivot_row * n + j);
            }
        }
        let pivot = a[row * n + col];
        for i in (row + 1)..n {
            let factor = a[i * n + col] / pivot;
            if factor != 0.0 {
                for j in col..n {
                    a[i * n + j] -= factor * a[row * n + j];
                }
            }
        }
        rank += 1;
        row += 1;
    }
    rank
}
