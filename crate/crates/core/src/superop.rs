//! Vectorization algebra and assembly of the Liouville superoperator.
//!
//! Vectorization is row-major throughout the crate: `vec(A)[i·d + j] = A[i][j]`,
//! matching `ρ = Σ ρ_ij |i⟩⊗|j⟩`. Under this ordering `vec(ABC) = (A ⊗ Cᵀ) vec(B)`,
//! and the Lindblad generator acts on `vec(ρ)` as the dense `N×N` matrix built
//! by [`build_lindbladian`] with `N = d²`. Changing the ordering would silently
//! transpose the `H ⊗ 1` terms; this module is the single source of truth for it.

use ndarray::{Array1, Array2};
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

pub type CMatrix = Array2<C64>;
pub type CVector = Array1<C64>;

/// Relative Frobenius tolerance for Hermiticity validation of Hamiltonians.
pub const HERMITICITY_TOL: f64 = 1e-12;

/// Row-major flattening of a square matrix into a length-d² vector.
pub fn vectorize(a: &CMatrix) -> Result<CVector> {
    if a.nrows() != a.ncols() {
        return Err(Error::DimensionMismatch(format!(
            "vectorize expects a square matrix, got {}×{}",
            a.nrows(),
            a.ncols()
        )));
    }
    Ok(Array1::from_iter(a.iter().cloned()))
}

/// Exact inverse of [`vectorize`].
pub fn devectorize(v: &CVector) -> Result<CMatrix> {
    let n = v.len();
    let d = (n as f64).sqrt().round() as usize;
    if d * d != n {
        return Err(Error::DimensionMismatch(format!(
            "devectorize expects a perfect-square length, got {n}"
        )));
    }
    Ok(Array2::from_shape_vec((d, d), v.to_vec()).expect("shape checked"))
}

/// `vec(1_d)`, the universal left null vector of physical Liouvillians.
pub fn vec_identity(d: usize) -> CVector {
    let mut v = Array1::zeros(d * d);
    for i in 0..d {
        v[i * d + i] = C64::new(1.0, 0.0);
    }
    v
}

/// Kronecker product in the row-major convention:
/// `kron(A, B)[[i·p + k, j·q + l]] = A[[i, j]] B[[k, l]]`.
pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let (m, n) = a.dim();
    let (p, q) = b.dim();
    let mut out = Array2::zeros((m * p, n * q));
    for i in 0..m {
        for j in 0..n {
            let aij = a[[i, j]];
            if aij == C64::new(0.0, 0.0) {
                continue;
            }
            for k in 0..p {
                for l in 0..q {
                    out[[i * p + k, j * q + l]] = aij * b[[k, l]];
                }
            }
        }
    }
    out
}

/// Conjugate transpose.
pub fn dagger(a: &CMatrix) -> CMatrix {
    a.t().mapv(|z| z.conj())
}

/// Frobenius inner product `Tr(B†A) = vec(B)† · vec(A)`.
pub fn frobenius_inner(b: &CMatrix, a: &CMatrix) -> Result<C64> {
    if b.dim() != a.dim() {
        return Err(Error::DimensionMismatch(format!(
            "frobenius_inner: {:?} vs {:?}",
            b.dim(),
            a.dim()
        )));
    }
    Ok(b.iter().zip(a.iter()).map(|(x, y)| x.conj() * y).sum())
}

/// Expectation value `vec(A)† · ρ = Tr(A†ρ)` of an operator against a
/// vectorized state.
pub fn expectation(a: &CMatrix, rho: &CVector) -> Result<C64> {
    let d = a.nrows();
    if a.ncols() != d || rho.len() != d * d {
        return Err(Error::DimensionMismatch(format!(
            "expectation: operator {}×{} vs state of length {}",
            a.nrows(),
            a.ncols(),
            rho.len()
        )));
    }
    Ok(a.iter().zip(rho.iter()).map(|(x, y)| x.conj() * y).sum())
}

/// The coherent part `−i(H ⊗ 1 − 1 ⊗ Hᵀ)` of the generator.
pub fn hamiltonian_superop(h: &CMatrix) -> CMatrix {
    let d = h.nrows();
    let id = Array2::eye(d);
    let mut s = kron(h, &id) - kron(&id, &h.t().to_owned());
    s.mapv_inplace(|z| C64::new(0.0, -1.0) * z);
    s
}

/// The dissipator `L⊗L* − ½(L†L⊗1 + 1⊗LᵀL*)` of a single Lindblad operator.
pub fn dissipator_superop(l: &CMatrix) -> CMatrix {
    let d = l.nrows();
    let id = Array2::eye(d);
    let ldl = dagger(l).dot(l);
    let lconj = l.mapv(|z| z.conj());
    let mut s = kron(l, &lconj);
    s.scaled_add(
        C64::new(-0.5, 0.0),
        &(kron(&ldl, &id) + kron(&id, &ldl.t().to_owned())),
    );
    s
}

/// A Hamiltonian, its Lindblad operators, and the assembled `N×N` generator.
#[derive(Clone, Debug)]
pub struct Lindbladian {
    pub dim: usize,
    pub hamiltonian: CMatrix,
    pub lindblads: Vec<CMatrix>,
    pub matrix: CMatrix,
}

/// Assemble the Lindblad generator
/// `−i(H⊗1 − 1⊗Hᵀ) + Σ_k [L_k⊗L_k* − ½(L_k†L_k⊗1 + 1⊗L_kᵀL_k*)]`.
///
/// `H` must be Hermitian to `1e-12·‖H‖_F`; all operators must share the
/// Hilbert dimension. The assembled matrix satisfies the trace-preservation
/// identity `vec(1)ᵀ·L = 0` (up to rounding), which callers may re-verify
/// with [`Lindbladian::trace_preservation_residual`].
pub fn build_lindbladian(h: &CMatrix, lindblads: &[CMatrix]) -> Result<Lindbladian> {
    let d = h.nrows();
    if h.ncols() != d {
        return Err(Error::DimensionMismatch(format!(
            "Hamiltonian must be square, got {}×{}",
            h.nrows(),
            h.ncols()
        )));
    }
    let h_norm = fro_norm(h);
    let herm_dev = fro_norm(&(h - &dagger(h)));
    if herm_dev > HERMITICITY_TOL * h_norm.max(1e-300) && herm_dev > 0.0 {
        return Err(Error::NonHermitian {
            deviation: herm_dev,
            tolerance: HERMITICITY_TOL * h_norm,
        });
    }
    for (k, l) in lindblads.iter().enumerate() {
        if l.dim() != (d, d) {
            return Err(Error::DimensionMismatch(format!(
                "Lindblad operator {k} is {}×{}, expected {d}×{d}",
                l.nrows(),
                l.ncols()
            )));
        }
    }
    let mut m = hamiltonian_superop(h);
    for l in lindblads {
        m += &dissipator_superop(l);
    }
    if m.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::InvalidParam(
            "assembled superoperator contains non-finite entries".into(),
        ));
    }
    Ok(Lindbladian {
        dim: d,
        hamiltonian: h.clone(),
        lindblads: lindblads.to_vec(),
        matrix: m,
    })
}

impl Lindbladian {
    /// Superoperator dimension `N = d²`.
    pub fn size(&self) -> usize {
        self.dim * self.dim
    }

    /// `‖vec(1)ᵀ · L‖_∞ / ‖L‖_∞`, the trace-preservation residual.
    pub fn trace_preservation_residual(&self) -> f64 {
        let l0 = vec_identity(self.dim);
        let row = l0.dot(&self.matrix);
        let num = row.iter().map(|z| z.norm()).fold(0.0, f64::max);
        let den = self
            .matrix
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
            .max(1e-300);
        num / den
    }

    /// Apply the generator directly to a density matrix:
    /// `−i[H,ρ] + Σ_k (L_kρL_k† − ½{L_k†L_k, ρ})`.
    ///
    /// This is the independent, kron-free route used to cross-check the
    /// assembled superoperator's action.
    pub fn apply_to_density(&self, rho: &CMatrix) -> Result<CMatrix> {
        if rho.dim() != (self.dim, self.dim) {
            return Err(Error::DimensionMismatch(format!(
                "density matrix {}×{} vs Hilbert dimension {}",
                rho.nrows(),
                rho.ncols(),
                self.dim
            )));
        }
        let h = &self.hamiltonian;
        let mut out = (h.dot(rho) - rho.dot(h)).mapv(|z| C64::new(0.0, -1.0) * z);
        for l in &self.lindblads {
            let ld = dagger(l);
            let ldl = ld.dot(l);
            out += &l.dot(rho).dot(&ld);
            out.scaled_add(C64::new(-0.5, 0.0), &(ldl.dot(rho) + rho.dot(&ldl)));
        }
        Ok(out)
    }
}

/// Frobenius norm of a complex matrix.
pub fn fro_norm(a: &CMatrix) -> f64 {
    a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Max-abs (entrywise infinity) norm of a complex matrix.
pub fn max_norm(a: &CMatrix) -> f64 {
    a.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Max-abs norm of a complex vector.
pub fn vec_max_norm(v: &CVector) -> f64 {
    v.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Euclidean norm of a complex vector.
pub fn vec_norm(v: &CVector) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn vectorize_identity_and_general() {
        let id2: CMatrix = Array2::eye(2);
        let v = vectorize(&id2).unwrap();
        assert_eq!(v.to_vec(), vec![c(1., 0.), c(0., 0.), c(0., 0.), c(1., 0.)]);

        let a = array![[c(1., 2.), c(3., 4.)], [c(5., 6.), c(7., 8.)]];
        let v = vectorize(&a).unwrap();
        assert_eq!(v.to_vec(), vec![c(1., 2.), c(3., 4.), c(5., 6.), c(7., 8.)]);
        // bitwise round trip
        assert_eq!(devectorize(&v).unwrap(), a);
    }

    #[test]
    fn vectorize_rejects_non_square() {
        let a: CMatrix = Array2::zeros((2, 3));
        assert!(matches!(vectorize(&a), Err(Error::DimensionMismatch(_))));
        let v: CVector = Array1::zeros(5);
        assert!(matches!(devectorize(&v), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn frobenius_identities() {
        let id2: CMatrix = Array2::eye(2);
        assert_eq!(frobenius_inner(&id2, &id2).unwrap(), c(2., 0.));
        // Tr(1·ρ) = 1 for a unit-trace ρ
        let rho = array![[c(0.25, 0.), c(0.1, 0.2)], [c(0.1, -0.2), c(0.75, 0.)]];
        let t = frobenius_inner(&id2, &rho).unwrap();
        assert!((t - c(1., 0.)).norm() < 1e-15);
    }

    #[test]
    fn zero_hamiltonian_gives_zero_superop() {
        let h: CMatrix = Array2::zeros((3, 3));
        let lb = build_lindbladian(&h, &[]).unwrap();
        assert_eq!(max_norm(&lb.matrix), 0.0);
    }

    #[test]
    fn non_hermitian_hamiltonian_rejected() {
        let h = array![[c(0., 0.), c(1., 0.)], [c(0.5, 0.), c(0., 0.)]];
        assert!(matches!(
            build_lindbladian(&h, &[]),
            Err(Error::NonHermitian { .. })
        ));
    }

    #[test]
    fn two_level_superop_matches_tabulated_form() {
        // |e⟩ = (1,0), |g⟩ = (0,1); Γ = Ω = 1, Δ = 0.
        let h = array![[c(0., 0.), c(0.5, 0.)], [c(0.5, 0.), c(0., 0.)]];
        let l = array![[c(0., 0.), c(0., 0.)], [c(1., 0.), c(0., 0.)]];
        let lb = build_lindbladian(&h, &[l]).unwrap();
        let expected = array![
            [c(-1., 0.), c(0., 0.5), c(0., -0.5), c(0., 0.)],
            [c(0., 0.5), c(-0.5, 0.), c(0., 0.), c(0., -0.5)],
            [c(0., -0.5), c(0., 0.), c(-0.5, 0.), c(0., 0.5)],
            [c(1., 0.), c(0., -0.5), c(0., 0.5), c(0., 0.)],
        ];
        assert!(max_norm(&(&lb.matrix - &expected)) < 1e-15);
        assert!(lb.trace_preservation_residual() < 1e-15);
    }
}
