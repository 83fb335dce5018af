//! Dense complex-matrix helpers: Hermiticity checks, deterministic Hermitian
//! eigendecomposition, and the unitary step propagator.
//!
//! Eigendecomposition output is made reproducible by (a) sorting eigenvalues
//! ascending, (b) ordering degenerate columns by the index of their
//! largest-modulus component, and (c) fixing each column's global phase so
//! that component is real positive.

use crate::{C64, CMatrix};
use nalgebra::DVector;

/// Maximum absolute deviation from Hermiticity, `max_ij |m_ij - conj(m_ji)|`.
pub fn hermiticity_defect(m: &CMatrix) -> f64 {
    let n = m.nrows();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in i..n {
            let d = (m[(i, j)] - m[(j, i)].conj()).norm();
            if d > worst {
                worst = d;
            }
        }
    }
    worst
}

pub fn is_hermitian(m: &CMatrix, atol: f64) -> bool {
    m.is_square() && hermiticity_defect(m) <= atol
}

/// `max_ij |a_ij - b_ij|`.
pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    (a - b).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn dagger(m: &CMatrix) -> CMatrix {
    m.adjoint()
}

pub fn commutator(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a * b - b * a
}

pub fn trace(m: &CMatrix) -> C64 {
    m.diagonal().sum()
}

/// Index of the largest-modulus component; earliest index wins ties.
fn dominant_index(v: &DVector<C64>) -> usize {
    let mut best = 0;
    let mut best_norm = v[0].norm_sqr();
    for (i, z) in v.iter().enumerate().skip(1) {
        let n = z.norm_sqr();
        if n > best_norm {
            best_norm = n;
            best = i;
        }
    }
    best
}

/// Rotate the column's global phase so its dominant component is real positive.
fn fix_phase(v: &mut DVector<C64>) {
    let pivot = v[dominant_index(v)];
    let r = pivot.norm();
    if r > 0.0 {
        let phase = pivot / r;
        let correction = phase.conj();
        for z in v.iter_mut() {
            *z *= correction;
        }
    }
}

/// Hermitian eigendecomposition with deterministic ordering and phases.
///
/// Returns ascending eigenvalues and the unitary matrix whose column `j` is
/// the eigenvector of eigenvalue `j`. The caller is responsible for passing a
/// Hermitian matrix; the defect is not re-checked here.
pub fn hermitian_eigen(m: &CMatrix) -> (Vec<f64>, CMatrix) {
    let n = m.nrows();
    let eig = nalgebra::linalg::SymmetricEigen::new(m.clone());
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));

    let mut values = Vec::with_capacity(n);
    let mut columns: Vec<DVector<C64>> = Vec::with_capacity(n);
    for &idx in &order {
        values.push(eig.eigenvalues[idx]);
        let mut col = DVector::from_column_slice(eig.eigenvectors.column(idx).as_slice());
        fix_phase(&mut col);
        columns.push(col);
    }

    // Degenerate blocks: reorder columns by dominant-component index so the
    // output does not depend on the solver's internal ordering.
    let scale = values.iter().fold(1.0f64, |acc, v| acc.max(v.abs()));
    let tol = 1e-10 * scale;
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && (values[end] - values[start]).abs() <= tol {
            end += 1;
        }
        if end - start > 1 {
            let mut block: Vec<DVector<C64>> = columns[start..end].to_vec();
            block.sort_by_key(dominant_index);
            columns[start..end].clone_from_slice(&block);
        }
        start = end;
    }

    let mut vectors = CMatrix::zeros(n, n);
    for (j, col) in columns.iter().enumerate() {
        vectors.set_column(j, col);
    }
    (values, vectors)
}

/// Largest degeneracy gap violation: `true` if two eigenvalues sit closer
/// than `tol`.
pub fn has_degeneracy(values: &[f64], tol: f64) -> bool {
    values.windows(2).any(|w| (w[1] - w[0]).abs() <= tol)
}

/// Reassemble `V diag(values) V†`.
pub fn reconstruct(values: &[f64], vectors: &CMatrix) -> CMatrix {
    let n = values.len();
    let mut d = CMatrix::zeros(n, n);
    for (i, &v) in values.iter().enumerate() {
        d[(i, i)] = C64::new(v, 0.0);
    }
    vectors * d * vectors.adjoint()
}

/// Worst column-pair deviation from orthonormality, `max |V†V - I|`.
pub fn orthonormality_defect(vectors: &CMatrix) -> f64 {
    let n = vectors.ncols();
    let gram = vectors.adjoint() * vectors;
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            let expected = if i == j { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) };
            worst = worst.max((gram[(i, j)] - expected).norm());
        }
    }
    worst
}

/// Unitary `exp(-i H dt / hbar)` for Hermitian `h`, via eigendecomposition.
pub fn unitary_step(h: &CMatrix, dt: f64, hbar: f64) -> CMatrix {
    let n = h.nrows();
    let (values, vectors) = hermitian_eigen(h);
    let mut d = CMatrix::zeros(n, n);
    for (i, &v) in values.iter().enumerate() {
        d[(i, i)] = C64::from_polar(1.0, -v * dt / hbar);
    }
    &vectors * d * vectors.adjoint()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn diagonal_matrix_sorts_ascending() {
        let m = CMatrix::from_diagonal(&DVector::from_vec(vec![c(1.0, 0.0), c(0.0, 0.0)]));
        let (values, vectors) = hermitian_eigen(&m);
        assert_eq!(values, vec![0.0, 1.0]);
        // eigenvector of 0 is e2, of 1 is e1
        assert_abs_diff_eq!(vectors[(1, 0)].re, 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(vectors[(0, 1)].re, 1.0, epsilon = 1e-14);
    }

    #[test]
    fn sigma_x_eigenpairs() {
        let m = CMatrix::from_row_slice(2, 2, &[c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)]);
        let (values, vectors) = hermitian_eigen(&m);
        assert_abs_diff_eq!(values[0], -1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(values[1], 1.0, epsilon = 1e-12);
        let s = 1.0 / 2.0_f64.sqrt();
        // phase convention: first component real positive
        assert_abs_diff_eq!(vectors[(0, 0)].re, s, epsilon = 1e-12);
        assert_abs_diff_eq!(vectors[(1, 0)].re, -s, epsilon = 1e-12);
        assert_abs_diff_eq!(vectors[(0, 1)].re, s, epsilon = 1e-12);
        assert_abs_diff_eq!(vectors[(1, 1)].re, s, epsilon = 1e-12);
        assert!(vectors.iter().all(|z| z.im.abs() < 1e-12));
    }

    #[test]
    fn unitary_step_is_unitary() {
        let m = CMatrix::from_row_slice(
            2,
            2,
            &[c(0.3, 0.0), c(0.2, 0.5), c(0.2, -0.5), c(-1.1, 0.0)],
        );
        let u = unitary_step(&m, 0.01, 1.0);
        assert!(orthonormality_defect(&u) < 1e-13);
    }
}
