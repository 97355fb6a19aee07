//! Classical families realized by their defining matrices; brackets are
//! matrix commutators expanded back in the chosen basis.

use num_traits::Zero;

use super::{AlgebraId, StructureConstants};
use crate::error::{Error, Result};
use crate::linalg::RatMatrix;
use crate::rational::{int, Rational};

/// Row-major `n x n` integer matrix.
pub(crate) type IntMatrix = Vec<i64>;

fn unit(n: usize, i: usize, j: usize) -> IntMatrix {
    let mut m = vec![0; n * n];
    m[i * n + j] = 1;
    m
}

fn combine(a: &IntMatrix, sa: i64, b: &IntMatrix, sb: i64) -> IntMatrix {
    a.iter().zip(b).map(|(x, y)| sa * x + sb * y).collect()
}

fn commutator(n: usize, a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let mut out = vec![0; n * n];
    for i in 0..n {
        for k in 0..n {
            let (x, y) = (a[i * n + k], b[i * n + k]);
            if x == 0 && y == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] += x * b[k * n + j] - y * a[k * n + j];
            }
        }
    }
    out
}

/// `E_ij` (i < j), then `H_i = E_ii - E_{i+1,i+1}`, then `E_ij` (i > j).
/// For sl(2) this is the ordered basis (e, h, f).
pub(crate) fn sl_basis(n: usize) -> Vec<IntMatrix> {
    let mut basis = Vec::with_capacity(n * n - 1);
    for i in 0..n {
        for j in i + 1..n {
            basis.push(unit(n, i, j));
        }
    }
    for i in 0..n - 1 {
        basis.push(combine(&unit(n, i, i), 1, &unit(n, i + 1, i + 1), -1));
    }
    for i in 0..n {
        for j in 0..i {
            basis.push(unit(n, i, j));
        }
    }
    basis
}

/// Antisymmetric `E_ij - E_ji`, i < j.
pub(crate) fn so_basis(n: usize) -> Vec<IntMatrix> {
    let mut basis = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            basis.push(combine(&unit(n, i, j), 1, &unit(n, j, i), -1));
        }
    }
    basis
}

/// Matrices `[[A, B], [C, -A^T]]` with `B`, `C` symmetric, preserving
/// `J = [[0, I], [-I, 0]]`; `n = 2r`.
pub(crate) fn sp_basis(n: usize) -> Vec<IntMatrix> {
    let r = n / 2;
    let mut basis = Vec::with_capacity(r * (2 * r + 1));
    for i in 0..r {
        for j in 0..r {
            basis.push(combine(&unit(n, i, j), 1, &unit(n, r + j, r + i), -1));
        }
    }
    for i in 0..r {
        for j in i..r {
            if i == j {
                basis.push(unit(n, i, r + i));
            } else {
                basis.push(combine(&unit(n, i, r + j), 1, &unit(n, j, r + i), 1));
            }
        }
    }
    for i in 0..r {
        for j in i..r {
            if i == j {
                basis.push(unit(n, r + i, i));
            } else {
                basis.push(combine(&unit(n, r + i, j), 1, &unit(n, r + j, i), 1));
            }
        }
    }
    basis
}

pub(crate) fn from_matrix_basis(id: AlgebraId, n: usize, basis: &[IntMatrix]) -> Result<StructureConstants> {
    let dim = basis.len();
    // columns are flattened basis matrices
    let mut span = RatMatrix::zeros(n * n, dim);
    for (c, m) in basis.iter().enumerate() {
        for (r, v) in m.iter().enumerate() {
            span[(r, c)] = int(*v);
        }
    }
    let rows = span.independent_rows();
    if rows.len() != dim {
        return Err(Error::InternalConsistency(format!(
            "{id}: basis matrices are linearly dependent"
        )));
    }
    let square = RatMatrix::from_rows(rows.iter().map(|&r| span.row(r).to_vec()).collect());
    let inv = square
        .inverse()
        .ok_or_else(|| Error::InternalConsistency(format!("{id}: pivot block is singular")))?;

    let mut entries = Vec::new();
    for a in 0..dim {
        for b in 0..dim {
            let comm = commutator(n, &basis[a], &basis[b]);
            if comm.iter().all(|&x| x == 0) {
                continue;
            }
            let coords: Vec<Rational> = (0..dim)
                .map(|c| rows.iter().enumerate().map(|(k, &r)| &inv[(c, k)] * int(comm[r])).sum())
                .collect();
            // the commutator must lie in the span
            for (r, &target) in comm.iter().enumerate() {
                let v: Rational = coords
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(c, x)| x * &span[(r, c)])
                    .sum();
                if v != int(target) {
                    return Err(Error::InternalConsistency(format!(
                        "{id}: [X_{a}, X_{b}] leaves the span of the basis"
                    )));
                }
            }
            for (c, v) in coords.into_iter().enumerate() {
                if !v.is_zero() {
                    entries.push((a, b, c, v));
                }
            }
        }
    }
    StructureConstants::from_entries(Some(id), dim, entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn transpose(n: usize, m: &IntMatrix) -> IntMatrix {
        (0..n * n).map(|k| m[(k % n) * n + k / n]).collect()
    }

    fn matmul(n: usize, a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
        let mut out = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                for j in 0..n {
                    out[i * n + j] += a[i * n + k] * b[k * n + j];
                }
            }
        }
        out
    }

    #[test]
    fn sp_basis_preserves_symplectic_form() {
        for n in [2, 4, 6] {
            let r = n / 2;
            let mut j = vec![0; n * n];
            for i in 0..r {
                j[i * n + r + i] = 1;
                j[(r + i) * n + i] = -1;
            }
            let basis = sp_basis(n);
            assert_eq!(basis.len(), r * (2 * r + 1));
            for x in &basis {
                let lhs = matmul(n, &transpose(n, x), &j);
                let rhs = matmul(n, &j, x);
                assert!(lhs.iter().zip(&rhs).all(|(p, q)| p + q == 0));
            }
        }
    }

    #[test]
    fn sl_basis_is_traceless() {
        for n in 2..5 {
            for m in sl_basis(n) {
                assert_eq!((0..n).map(|i| m[i * n + i]).sum::<i64>(), 0);
            }
        }
    }

    #[test]
    fn so_basis_is_antisymmetric() {
        let n = 5;
        for m in so_basis(n) {
            let t = transpose(n, &m);
            assert!(m.iter().zip(&t).all(|(p, q)| p + q == 0));
        }
    }
}
