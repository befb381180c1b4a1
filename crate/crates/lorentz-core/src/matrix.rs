//! Tiny dense solvers: Gaussian elimination up to 4x4 and a Jacobi
//! eigensolver for symmetric matrices up to 3x3.

use crate::CoreError;

/// Solves `a x = b` for `n <= 4` by Gaussian elimination with partial
/// pivoting. `a` and `b` are clobbered.
pub fn solve_small(a: &mut [[f64; 4]; 4], b: &mut [f64; 4], n: usize) -> Result<[f64; 4], CoreError> {
    assert!(n <= 4 && n > 0);
    let mut scale = 0.0f64;
    for row in a.iter().take(n) {
        for v in row.iter().take(n) {
            scale = scale.max(v.abs());
        }
    }
    let threshold = 1.0e-14 * scale.max(1.0e-300);
    for col in 0..n {
        let mut piv = col;
        for r in col + 1..n {
            if a[r][col].abs() > a[piv][col].abs() {
                piv = r;
            }
        }
        if a[piv][col].abs() <= threshold {
            return Err(CoreError::SingularSystem(a[piv][col].abs()));
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for r in col + 1..n {
            let f = a[r][col] / a[col][col];
            for c in col..n {
                a[r][c] -= f * a[col][c];
            }
            b[r] -= f * b[col];
        }
    }
    let mut x = [0.0; 4];
    for row in (0..n).rev() {
        let mut s = b[row];
        for c in row + 1..n {
            s -= a[row][c] * x[c];
        }
        x[row] = s / a[row][row];
    }
    Ok(x)
}

/// Eigendecomposition of a symmetric matrix of size `n <= 3` by cyclic
/// Jacobi rotations. Returns eigenvalues in ascending order and, for each,
/// the matching unit eigenvector as a row of the second array.
pub fn sym_eigen(m: &[[f64; 3]; 3], n: usize) -> ([f64; 3], [[f64; 3]; 3]) {
    assert!(n >= 1 && n <= 3);
    let mut a = *m;
    let mut v = [[0.0; 3]; 3];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    if n > 1 {
        for _sweep in 0..60 {
            let mut off = 0.0;
            for p in 0..n {
                for q in p + 1..n {
                    off += a[p][q] * a[p][q];
                }
            }
            let diag: f64 = (0..n).map(|i| a[i][i] * a[i][i]).sum();
            if off <= 1.0e-32 * diag.max(1.0e-300) {
                break;
            }
            for p in 0..n {
                for q in p + 1..n {
                    if a[p][q].abs() <= 1.0e-300 {
                        continue;
                    }
                    let tau = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                    let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                    let c = 1.0 / (1.0 + t * t).sqrt();
                    let s = t * c;
                    for k in 0..n {
                        let akp = a[k][p];
                        let akq = a[k][q];
                        a[k][p] = c * akp - s * akq;
                        a[k][q] = s * akp + c * akq;
                    }
                    for k in 0..n {
                        let apk = a[p][k];
                        let aqk = a[q][k];
                        a[p][k] = c * apk - s * aqk;
                        a[q][k] = s * apk + c * aqk;
                    }
                    for vk in v.iter_mut().take(n) {
                        let vp = vk[p];
                        let vq = vk[q];
                        vk[p] = c * vp - s * vq;
                        vk[q] = s * vp + c * vq;
                    }
                }
            }
        }
    }
    let mut order = [0usize, 1, 2];
    order[..n].sort_by(|&i, &j| a[i][i].partial_cmp(&a[j][j]).unwrap());
    let mut vals = [0.0; 3];
    let mut vecs = [[0.0; 3]; 3];
    for k in 0..n {
        vals[k] = a[order[k]][order[k]];
        for r in 0..n {
            // v holds eigenvectors as columns; export them as rows.
            vecs[k][r] = v[r][order[k]];
        }
    }
    (vals, vecs)
}
