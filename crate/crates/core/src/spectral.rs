//! Full non-Hermitian eigendecomposition with left-eigenvector recovery, and
//! nullspace extraction for singular Liouvillians.
//!
//! Left vectors follow the transpose (not conjugate-transpose) convention:
//! `l_iᵀ M = λ_i l_iᵀ` with biorthonormality `l_iᵀ r_j = δ_ij` and
//! completeness `Σ r_i l_iᵀ = 1`, so that `left = (rightᵀ)⁻¹`.

use ndarray::{Array1, Array2, s};
use ndarray_linalg::{Eig, SVD};
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::linalg::{bordered_null_solve, hermitian_eigenvalues, hermiticity_deviation, inv_refined, one_norm};
use crate::superop::{devectorize, fro_norm, vec_identity, vec_max_norm, CMatrix, CVector, Lindbladian};

/// Relative threshold below which an eigenvalue counts as a nullspace member.
pub const NULL_TOL: f64 = 1e-10;

/// Ratio the second-smallest |eigenvalue| must exceed over the smallest for
/// the nullspace to count as one-dimensional.
pub const GAP_RATIO: f64 = 1e3;

/// Condition estimate beyond which the left-eigenvector inverse falls back to
/// the pseudo-inverse.
pub const ILL_CONDITIONED: f64 = 1e12;

/// Eigenvalues with right and left eigenvector matrices (columns `r_i`, `l_i`).
#[derive(Clone, Debug)]
pub struct SpectralDecomposition {
    pub eigenvalues: CVector,
    pub right: CMatrix,
    pub left: CMatrix,
    /// 1-norm condition estimate of the right-eigenvector matrix.
    pub condition: f64,
    /// Whether the pseudo-inverse fallback produced `left`.
    pub used_pseudo_inverse: bool,
}

/// Moore–Penrose pseudo-inverse via SVD, truncating singular values below
/// `ε·σ_max·n`.
fn pinv(a: &CMatrix) -> Result<CMatrix> {
    let n = a.nrows();
    let (u, sv, vt) = a.svd(true, true)?;
    let u = u.expect("requested");
    let vt = vt.expect("requested");
    let smax = sv.iter().cloned().fold(0.0f64, f64::max);
    let cutoff = smax * (n as f64) * f64::EPSILON;
    // pinv = V Σ⁺ U†
    let mut vs: CMatrix = vt.t().mapv(|z| z.conj());
    for (j, &sigma) in sv.iter().enumerate() {
        let inv = if sigma > cutoff { 1.0 / sigma } else { 0.0 };
        vs.column_mut(j).mapv_inplace(|z| z * inv);
    }
    Ok(vs.dot(&u.t().mapv(|z| z.conj())))
}

/// Full eigendecomposition of a (presumed diagonalizable) complex matrix.
///
/// Left eigenvectors come from `(rightᵀ)⁻¹`, refined by a Newton step, with a
/// pseudo-inverse fallback when the right-eigenvector matrix is
/// ill-conditioned. A reconstruction residual above `1e-6·‖M‖_F` raises the
/// defective-matrix error: the spectral form is then meaningless.
pub fn eigendecompose(m: &CMatrix) -> Result<SpectralDecomposition> {
    let n = m.nrows();
    if m.ncols() != n {
        return Err(Error::DimensionMismatch(format!(
            "eigendecompose expects square input, got {}×{}",
            m.nrows(),
            m.ncols()
        )));
    }
    let (eigenvalues, right) = m.eig()?;
    let rt = right.t().to_owned();
    let (left, condition, used_pseudo_inverse) = match inv_refined(&rt) {
        Ok((inv, cond)) if cond <= ILL_CONDITIONED => (inv, cond, false),
        Ok((_, cond)) => (pinv(&rt)?, cond, true),
        Err(_) => {
            let p = pinv(&rt)?;
            let cond = one_norm(&rt) * one_norm(&p);
            (p, cond, true)
        }
    };
    let dec = SpectralDecomposition {
        eigenvalues,
        right,
        left,
        condition,
        used_pseudo_inverse,
    };
    let resid = dec.reconstruction_residual(m);
    let scale = fro_norm(m).max(1e-300);
    if resid > 1e-6 * scale {
        return Err(Error::Defective(format!(
            "reconstruction residual {:.3e} exceeds 1e-6·‖M‖ = {:.3e}",
            resid,
            1e-6 * scale
        )));
    }
    Ok(dec)
}

impl SpectralDecomposition {
    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// `‖M − R diag(Λ) Lᵀ‖_F`.
    pub fn reconstruction_residual(&self, m: &CMatrix) -> f64 {
        let scaled = scale_columns(&self.right, &self.eigenvalues);
        let rebuilt = scaled.dot(&self.left.t());
        fro_norm(&(m - &rebuilt))
    }

    /// Max entrywise deviation of `lᵀ r` from the identity.
    pub fn biorthonormality_deviation(&self) -> f64 {
        let mut g = self.left.t().dot(&self.right);
        for i in 0..g.nrows() {
            g[[i, i]] -= C64::new(1.0, 0.0);
        }
        g.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Index of the smallest-|λ| eigenvalue and the ratio of the second
    /// smallest to it.
    pub fn null_candidate(&self) -> (usize, f64) {
        let mut idx = 0;
        let mut best = f64::INFINITY;
        for (i, g) in self.eigenvalues.iter().enumerate() {
            if g.norm() < best {
                best = g.norm();
                idx = i;
            }
        }
        let mut second = f64::INFINITY;
        for (i, g) in self.eigenvalues.iter().enumerate() {
            if i != idx {
                second = second.min(g.norm());
            }
        }
        (idx, second / best.max(f64::MIN_POSITIVE))
    }
}

/// Scale column `i` of `m` by `w[i]`.
pub fn scale_columns(m: &CMatrix, w: &CVector) -> CMatrix {
    let mut out = m.clone();
    for (j, &wj) in w.iter().enumerate() {
        out.column_mut(j).mapv_inplace(|z| z * wj);
    }
    out
}

/// Trace-normalized steady state of a Lindbladian via the bordered direct
/// solve (the default backend: one LU, no spectrum needed).
///
/// Validates the defining residual, Hermiticity, and positive
/// semidefiniteness of the devectorized state.
pub fn steady_state(l: &Lindbladian) -> Result<CVector> {
    let l0 = vec_identity(l.dim);
    let rho = bordered_null_solve(&l.matrix, &l0)?;
    validate_steady_state(&l.matrix, &rho)?;
    Ok(rho)
}

/// Steady state extracted from a full decomposition of the generator:
/// the smallest-|λ| right eigenvector, trace-normalized.
///
/// Requires the smallest |λ| to sit below `NULL_TOL·‖L‖_F` and the second
/// smallest to exceed `GAP_RATIO` times it (a slow decay mode is not a second
/// steady state).
pub fn steady_state_from_decomposition(
    dec: &SpectralDecomposition,
    l_matrix: &CMatrix,
) -> Result<CVector> {
    let scale = fro_norm(l_matrix);
    let (idx, ratio) = dec.null_candidate();
    let smallest = dec.eigenvalues[idx].norm();
    if smallest > NULL_TOL * scale {
        return Err(Error::NoNullspace {
            smallest,
            threshold: NULL_TOL * scale,
        });
    }
    if ratio < GAP_RATIO {
        return Err(Error::NonUniqueSteadyState(format!(
            "spectral gap ratio {ratio:.2e} below {GAP_RATIO:.0e}; near-zero eigenvalues: {:?}",
            near_zero_eigenvalues(dec, scale)
        )));
    }
    let d = (dec.len() as f64).sqrt().round() as usize;
    let l0 = vec_identity(d);
    let r0 = dec.right.slice(s![.., idx]).to_owned();
    let trace: C64 = l0.iter().zip(r0.iter()).map(|(a, b)| a * b).sum();
    if trace.norm() < 1e-14 {
        return Err(Error::Singular("null vector has vanishing trace".into()));
    }
    Ok(r0.mapv(|z| z / trace))
}

fn near_zero_eigenvalues(dec: &SpectralDecomposition, scale: f64) -> Vec<C64> {
    let mut v: Vec<C64> = dec
        .eigenvalues
        .iter()
        .filter(|g| g.norm() <= 1e3 * NULL_TOL * scale)
        .cloned()
        .collect();
    v.sort_by(|a, b| a.norm().total_cmp(&b.norm()));
    v.truncate(8);
    v
}

/// Residual, Hermiticity, and positivity checks for a claimed steady state.
pub fn validate_steady_state(l_matrix: &CMatrix, rho: &CVector) -> Result<()> {
    let resid = vec_max_norm(&l_matrix.dot(rho));
    let scale = l_matrix.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if resid > 1e-10 * scale {
        return Err(Error::Singular(format!(
            "steady-state residual {resid:.3e} exceeds 1e-10·‖L‖ = {:.3e}",
            1e-10 * scale
        )));
    }
    let dm = devectorize(rho)?;
    let herm = hermiticity_deviation(&dm);
    if herm > 1e-10 {
        return Err(Error::Singular(format!(
            "steady state devectorizes to a non-Hermitian matrix (deviation {herm:.3e})"
        )));
    }
    let eigs = hermitian_eigenvalues(&dm)?;
    if let Some(min) = eigs.first() {
        if *min < -1e-10 {
            return Err(Error::Singular(format!(
                "steady state has negative eigenvalue {min:.3e}"
            )));
        }
    }
    Ok(())
}

/// Count of eigenvalues inside the null threshold `NULL_TOL·‖L‖_F`.
pub fn null_count(eigenvalues: &CVector, l_matrix: &CMatrix) -> usize {
    let thr = NULL_TOL * fro_norm(l_matrix);
    eigenvalues.iter().filter(|g| g.norm() <= thr).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn diagonal_matrix_decomposes_exactly() {
        let m = array![
            [c(1., 0.), c(0., 0.), c(0., 0.)],
            [c(0., 0.), c(2., 0.), c(0., 0.)],
            [c(0., 0.), c(0., 0.), c(3., 0.)]
        ];
        let dec = eigendecompose(&m).unwrap();
        let mut vals: Vec<f64> = dec.eigenvalues.iter().map(|g| g.re).collect();
        vals.sort_by(f64::total_cmp);
        assert!((vals[0] - 1.0).abs() < 1e-14);
        assert!((vals[1] - 2.0).abs() < 1e-14);
        assert!((vals[2] - 3.0).abs() < 1e-14);
        assert!(dec.biorthonormality_deviation() < 1e-12);
        assert!(dec.reconstruction_residual(&m) < 1e-12);
    }

    #[test]
    fn defective_matrix_is_rejected() {
        // A 2×2 Jordan block is not diagonalizable.
        let m = array![[c(1., 0.), c(1., 0.)], [c(0., 0.), c(1., 0.)]];
        assert!(matches!(eigendecompose(&m), Err(Error::Defective(_))));
    }
}
