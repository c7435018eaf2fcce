//! Thin wrappers over nalgebra for the dense complex kernels used here:
//! operator norms, numerical kernels and ranks, and the trace-dual step of
//! the alternating norm ascent.

use nalgebra::DMatrix;
use num_complex::Complex64;

/// Relative singular-value cutoff for rank and kernel decisions.
pub const RANK_CUTOFF: f64 = 1e-10;

/// Largest singular value (operator norm on column space).
pub fn op_norm(m: &DMatrix<Complex64>) -> f64 {
    if m.is_empty() {
        return 0.0;
    }
    m.clone()
        .svd(false, false)
        .singular_values
        .iter()
        .fold(0.0, |a, &s| a.max(s))
}

/// Singular values in descending order.
pub fn singular_values(m: &DMatrix<Complex64>) -> Vec<f64> {
    let mut sv: Vec<f64> = m.clone().svd(false, false).singular_values.iter().copied().collect();
    sv.sort_by(|a, b| b.total_cmp(a));
    sv
}

/// Orthonormal basis of the right kernel `{v : Mv = 0}`, using the cutoff
/// `RANK_CUTOFF * sigma_max`.
///
/// Wide matrices are padded with zero rows first: the thin SVD only returns
/// `min(nrows, ncols)` right singular vectors, which would drop the part of
/// the kernel beyond the row count.
pub fn kernel_basis(m: &DMatrix<Complex64>) -> Vec<Vec<Complex64>> {
    let ncols = m.ncols();
    let padded;
    let work = if m.nrows() < ncols {
        padded = {
            let mut p = DMatrix::zeros(ncols, ncols);
            p.view_mut((0, 0), (m.nrows(), ncols)).copy_from(m);
            p
        };
        &padded
    } else {
        m
    };
    let svd = work.clone().svd(false, true);
    let v_t = svd.v_t.expect("kernel_basis: SVD V^T requested");
    debug_assert_eq!(v_t.nrows(), ncols);
    let smax = svd.singular_values.iter().fold(0.0f64, |a, &s| a.max(s));
    let tol = if smax > 0.0 { RANK_CUTOFF * smax } else { 0.0 };
    let mut basis = Vec::new();
    for i in 0..v_t.nrows() {
        let keep = i >= svd.singular_values.len() || svd.singular_values[i] <= tol;
        if keep {
            // rows of V^H conjugate back to columns of V
            let v: Vec<Complex64> = (0..ncols).map(|j| v_t[(i, j)].conj()).collect();
            basis.push(v);
        }
    }
    basis
}

/// Numerical rank with the shared cutoff.
pub fn rank(m: &DMatrix<Complex64>) -> usize {
    let sv = singular_values(m);
    let smax = sv.first().copied().unwrap_or(0.0);
    if smax == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > RANK_CUTOFF * smax).count()
}

/// Nuclear norm (sum of singular values) together with a maximizer of
/// `|tr(C M)|` over the operator-norm unit ball, returned as `M`.
///
/// If `C = U S V^H` then `M = V U^H` attains `tr(C M) = sum(S)`.
pub fn nuclear_norm_and_maximizer(c: &DMatrix<Complex64>) -> (f64, DMatrix<Complex64>) {
    let svd = c.clone().svd(true, true);
    let u = svd.u.expect("nuclear: U");
    let v_t = svd.v_t.expect("nuclear: V^T");
    let value: f64 = svd.singular_values.iter().sum();
    let m = v_t.adjoint() * u.adjoint();
    (value, m)
}

pub fn from_rows(rows: &[Vec<Complex64>]) -> DMatrix<Complex64> {
    let nr = rows.len();
    let nc = rows.first().map_or(0, |r| r.len());
    DMatrix::from_fn(nr, nc, |i, j| rows[i][j])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cplx::c;

    #[test]
    fn op_norm_of_upper_nilpotent() {
        let m = DMatrix::from_row_slice(2, 2, &[c(0.0, 0.0), c(2.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        assert!((op_norm(&m) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn op_norm_complex_rotation_is_one() {
        let m = DMatrix::from_row_slice(2, 2, &[c(0.0, 0.0), c(0.0, 1.0), c(0.0, -1.0), c(0.0, 0.0)]);
        assert!((op_norm(&m) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn kernel_of_rank_one() {
        // [[1,1],[1,1]] has kernel spanned by (1,-1)/sqrt(2)
        let m = DMatrix::from_row_slice(2, 2, &[c(1.0, 0.0); 4]);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 1);
        let v = &k[0];
        let image0 = v[0] + v[1];
        assert!(image0.norm() < 1e-12);
        assert_eq!(rank(&m), 1);
    }

    #[test]
    fn kernel_of_wide_matrix_is_complete() {
        // one row over four columns: kernel dimension 3
        let m = DMatrix::from_row_slice(1, 4, &[c(1.0, 0.0), c(0.0, 1.0), c(2.0, 0.0), c(0.0, 0.0)]);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 3);
        for v in &k {
            let img: Complex64 = (0..4).map(|j| m[(0, j)] * v[j]).sum();
            assert!(img.norm() < 1e-12);
        }
    }

    #[test]
    fn nuclear_maximizer_attains() {
        let cm = DMatrix::from_row_slice(
            2,
            2,
            &[c(1.0, 0.5), c(-0.25, 2.0), c(0.0, -1.0), c(0.75, 0.0)],
        );
        let (val, m) = nuclear_norm_and_maximizer(&cm);
        let attained = (&cm * &m).trace();
        assert!((attained.re - val).abs() < 1e-10 && attained.im.abs() < 1e-10);
        assert!(op_norm(&m) <= 1.0 + 1e-10);
    }
}
