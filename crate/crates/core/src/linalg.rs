//! Dense linear-algebra helpers shared by the solver modules.
//!
//! LAPACK (through `ndarray-linalg`) does the factorizations; this module adds
//! the bordered nullspace solve, Newton-refined inversion, condition
//! estimates, and compensated (double-double accumulated) products used to
//! evaluate identity residuals on stiff models without drowning them in
//! matmul rounding.

use ndarray::{Array1, Array2};
use ndarray_linalg::{Eigh, Inverse, Solve, UPLO};
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::superop::{fro_norm, CMatrix, CVector};

/// Solve `L x = 0`, `l0ᵀ x = 1` through the square bordered system
/// `[[L, l0], [l0ᵀ, 0]] [x; μ] = [0; 1]`.
///
/// For a generator with one-dimensional nullspace and left null vector `l0`,
/// the border is nonsingular and the multiplier `μ` vanishes at the solution;
/// a materially nonzero `μ` or a singular factorization signals a non-unique
/// steady state.
pub fn bordered_null_solve(l: &CMatrix, l0: &CVector) -> Result<CVector> {
    let n = l.nrows();
    if l.ncols() != n || l0.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "bordered solve: matrix {}×{}, border length {}",
            l.nrows(),
            l.ncols(),
            l0.len()
        )));
    }
    let mut a: CMatrix = Array2::zeros((n + 1, n + 1));
    a.slice_mut(ndarray::s![..n, ..n]).assign(l);
    for i in 0..n {
        a[[i, n]] = l0[i];
        a[[n, i]] = l0[i];
    }
    let mut b: CVector = Array1::zeros(n + 1);
    b[n] = C64::new(1.0, 0.0);
    let x = a
        .solve(&b)
        .map_err(|e| Error::Singular(format!("bordered system: {e}")))?;
    let mu = x[n].norm();
    let xs = x.slice(ndarray::s![..n]).to_owned();
    let scale = fro_norm(l) * xs.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if mu > 1e-8 * scale.max(1.0) {
        return Err(Error::NonUniqueSteadyState(format!(
            "bordered multiplier |μ| = {mu:.3e} is not negligible"
        )));
    }
    if xs.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::Singular("bordered solve returned non-finite entries".into()));
    }
    Ok(xs)
}

/// Inverse with Newton refinement (`X ← X + X(1 − AX)`) and a 1-norm
/// condition estimate `‖A‖₁‖X‖₁`.
pub fn inv_refined(a: &CMatrix) -> Result<(CMatrix, f64)> {
    let mut x = a
        .inv()
        .map_err(|e| Error::Singular(format!("matrix inversion: {e}")))?;
    let n = a.nrows();
    let mut resid = residual_identity(a, &x);
    for _ in 0..2 {
        if resid < 1e-13 * (n as f64).sqrt() {
            break;
        }
        let mut r: CMatrix = -a.dot(&x);
        for i in 0..n {
            r[[i, i]] += C64::new(1.0, 0.0);
        }
        let x_new = &x + &x.dot(&r);
        let resid_new = residual_identity(a, &x_new);
        if resid_new >= resid {
            break;
        }
        x = x_new;
        resid = resid_new;
    }
    let cond = one_norm(a) * one_norm(&x);
    Ok((x, cond))
}

fn residual_identity(a: &CMatrix, x: &CMatrix) -> f64 {
    let n = a.nrows();
    let mut r = a.dot(x);
    for i in 0..n {
        r[[i, i]] -= C64::new(1.0, 0.0);
    }
    fro_norm(&r)
}

/// Matrix 1-norm (max column absolute sum).
pub fn one_norm(a: &CMatrix) -> f64 {
    let mut best = 0.0f64;
    for j in 0..a.ncols() {
        let s: f64 = a.column(j).iter().map(|z| z.norm()).sum();
        best = best.max(s);
    }
    best
}

/// Eigenvalues of a Hermitian matrix (ascending), for positivity checks.
pub fn hermitian_eigenvalues(a: &CMatrix) -> Result<Vec<f64>> {
    // Symmetrize first; inputs are Hermitian up to rounding.
    let sym = (a + &a.t().mapv(|z| z.conj())).mapv(|z| 0.5 * z);
    let (vals, _) = sym.eigh(UPLO::Lower)?;
    Ok(vals.to_vec())
}

/// Hermiticity deviation `‖M − M†‖_max` of a devectorized state.
pub fn hermiticity_deviation(a: &CMatrix) -> f64 {
    let mut dev = 0.0f64;
    for i in 0..a.nrows() {
        for j in 0..a.ncols() {
            dev = dev.max((a[[i, j]] - a[[j, i]].conj()).norm());
        }
    }
    dev / 2.0
}

// ---------------------------------------------------------------------------
// Compensated products. Double-double accumulation via Dekker/Knuth splits;
// used only for identity-residual evaluation at small N, where BLAS rounding
// at ~ε‖A‖‖B‖ would mask the quantity being measured.
// ---------------------------------------------------------------------------

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn split(a: f64) -> (f64, f64) {
    let c = 134_217_729.0 * a; // 2^27 + 1
    let hi = c - (c - a);
    (hi, a - hi)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let (ah, al) = split(a);
    let (bh, bl) = split(b);
    (p, ((ah * bh - p) + ah * bl + al * bh) + al * bl)
}

#[derive(Clone, Copy, Default)]
struct DdAcc {
    s: f64,
    e: f64,
}

impl DdAcc {
    #[inline]
    fn add_prod(&mut self, a: f64, b: f64) {
        let (p, perr) = two_prod(a, b);
        let (s, serr) = two_sum(self.s, p);
        self.s = s;
        self.e += serr + perr;
    }

    #[inline]
    fn value(self) -> f64 {
        self.s + self.e
    }
}

/// `A·B` with compensated accumulation. O(n³) scalar work; intended for
/// n ≤ a few hundred.
pub fn dd_matmul(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let (m, k) = a.dim();
    let n = b.ncols();
    assert_eq!(k, b.nrows(), "dd_matmul: inner dimensions differ");
    let mut out = Array2::zeros((m, n));
    for i in 0..m {
        for j in 0..n {
            let mut re = DdAcc::default();
            let mut im = DdAcc::default();
            for t in 0..k {
                let x = a[[i, t]];
                let y = b[[t, j]];
                re.add_prod(x.re, y.re);
                re.add_prod(-x.im, y.im);
                im.add_prod(x.re, y.im);
                im.add_prod(x.im, y.re);
            }
            out[[i, j]] = C64::new(re.value(), im.value());
        }
    }
    out
}
