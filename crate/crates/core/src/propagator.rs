//! The resolvent propagator `G_v = (1 + v L0⁻ L1)⁻¹` in the eigenbasis of
//! `K = L0⁻ L1`, and everything it buys: O(N·m) steady states per parameter
//! value, sweeps, closed-form derivatives, multi-parameter solves, and the
//! nested two-resolvent sensitivity formula.
//!
//! The basis is built once at O(N³); each evaluation afterwards updates `m`
//! scalar resolvent factors (`m` = number of nonzero eigenvalues of `K`,
//! typically far below `N`). Only the nonzero eigenvalues contribute:
//! `ρ_v = ρ0 − Σ_{λ≠0} [λv/(1+λv)] r_λ (l_λᵀ ρ0)`, which keeps `ρ_v`
//! trace-normalized with no renormalization step.
//!
//! `PropagatorBasis` is immutable and `Sync`; fanning `steady_state_at` /
//! `observable_sweep` across a parameter grid from multiple threads is the
//! intended scaling path. The basis is an explicit value precisely so no call
//! can hide a re-decomposition.
//!
//! Kernel handling: `K` routinely carries a large exact kernel and, for some
//! models, a nilpotent sector on top of it. Dense eigensolvers split such a
//! sector into noise eigenvalues of magnitude ~√ε·max|λ| with nearly parallel
//! eigenvectors; keeping them would corrupt sweeps at ~1e-7. Eigenvalues
//! below `KERNEL_CLUSTER_TOL·max|λ|` are therefore folded into the kernel.
//! That is exact for the states this crate propagates: steady states are
//! bounded uniformly in `v`, so polynomial (nilpotent) terms acting on `ρ0`
//! vanish identically. The construction is validated a posteriori against the
//! defining equation at probe values of `v` and fails loudly otherwise.

use ndarray::{s, Array1, Array2};
use ndarray_linalg::Eig;
use num_complex::Complex64 as C64;

use crate::drazin::DrazinInverse;
use crate::error::{Error, Result};
use crate::linalg::inv_refined;
use crate::superop::{expectation, vec_max_norm, CMatrix, CVector};

/// Resolvent factors with `|1 + λv|` at or below this are poles.
pub const POLE_TOL: f64 = 1e-12;

/// Spec default mask: eigenvalues below `1e-12·max|λ|` are exactly kernel.
pub const LAMBDA_TOL: f64 = 1e-12;

/// Eigenvalues below this (relative to `max|λ|`) belong to the kernel cluster
/// when the plain left-inverse construction fails biorthonormality. Sits ~30×
/// above the √ε noise magnitude that eigensolvers produce for nilpotent
/// sectors.
pub const KERNEL_CLUSTER_TOL: f64 = 3e-7;

/// Construction diagnostics recorded on every basis.
#[derive(Clone, Debug, Default)]
pub struct BasisDiagnostics {
    /// Max entrywise deviation of `lᵀr` from the identity on the nonzero set.
    pub biorthonormality: f64,
    /// Worst probe residual `‖(1 + vK)ρ_v − ρ0‖_∞` over the validation probes.
    pub probe_residual: f64,
    /// True when left eigenvectors came from the transposed eigenproblem
    /// (kernel-cluster repair) rather than from `(rᵀ)⁻¹`.
    pub robust_left: bool,
}

/// Eigenbasis of `K = L0⁻ L1` restricted to its nonzero eigenvalues, with
/// the projections the resolvent formulas consume.
#[derive(Clone, Debug)]
pub struct PropagatorBasis {
    rho0: CVector,
    lambda: CVector,
    right: CMatrix,
    left: CMatrix,
    /// `l_iᵀ ρ0`
    proj: CVector,
    /// column i = `r_i · proj_i`, the precomputed sweep columns
    scaled: CMatrix,
    lambda_max: f64,
    kernel_dim: usize,
    pub diagnostics: BasisDiagnostics,
}

/// Projection of an observable onto the basis: everything needed to evaluate
/// `⟨A⟩(v)` and its derivatives in O(m) per point.
#[derive(Clone, Debug)]
pub struct ObservableProjection {
    /// `vec(A)† ρ0`, the value at v = 0.
    pub at_zero: C64,
    /// entry i = `(vec(A)† r_i) · (l_iᵀ ρ0)` over the nonzero eigenvalues.
    pub weighted: CVector,
}

/// Build the propagator basis for the split `L = L0 + v L1`.
///
/// `rho0` must be the trace-normalized steady state of `L0`. Costs one dense
/// product and one (sometimes two) eigendecompositions; everything downstream
/// is O(N·m) per parameter value.
pub fn build_basis(l0m: &DrazinInverse, l1: &CMatrix, rho0: &CVector) -> Result<PropagatorBasis> {
    let n = rho0.len();
    if l0m.matrix.dim() != (n, n) || l1.dim() != (n, n) {
        return Err(Error::DimensionMismatch(format!(
            "build_basis: L0⁻ {:?}, L1 {:?}, ρ0 length {}",
            l0m.matrix.dim(),
            l1.dim(),
            n
        )));
    }
    let k = l0m.matrix.dot(l1);
    let (lambda_all, right_all) = k.eig()?;
    let lambda_max = lambda_all.iter().map(|z| z.norm()).fold(0.0, f64::max);

    if lambda_max == 0.0 {
        // L1 = 0 (or annihilated): the steady state is constant in v.
        return Ok(PropagatorBasis {
            rho0: rho0.clone(),
            lambda: Array1::zeros(0),
            right: Array2::zeros((n, 0)),
            left: Array2::zeros((n, 0)),
            proj: Array1::zeros(0),
            scaled: Array2::zeros((n, 0)),
            lambda_max: 0.0,
            kernel_dim: n,
            diagnostics: BasisDiagnostics::default(),
        });
    }

    // Tier 1: the plain construction, left = (rᵀ)⁻¹, spec mask 1e-12·max|λ|.
    let strict_mask: Vec<usize> = (0..n)
        .filter(|&i| lambda_all[i].norm() > LAMBDA_TOL * lambda_max)
        .collect();
    let mut chosen: Option<(Vec<usize>, CMatrix, f64, bool)> = None;
    if let Ok((inv_rt, _cond)) = inv_refined(&right_all.t().to_owned()) {
        let dev = biorth_deviation(&right_all, &inv_rt, &strict_mask);
        if dev <= 1e-10 {
            chosen = Some((strict_mask.clone(), inv_rt, dev, false));
        }
    }

    // Tier 2: kernel-cluster repair. Fold sub-cluster eigenvalues into the
    // kernel and take left eigenvectors from the transposed problem.
    if chosen.is_none() {
        let mask: Vec<usize> = (0..n)
            .filter(|&i| lambda_all[i].norm() > KERNEL_CLUSTER_TOL * lambda_max)
            .collect();
        let (left_full, dev) = left_from_transposed(&k, &lambda_all, &right_all, &mask, lambda_max)?;
        if dev > 1e-8 {
            return Err(Error::Defective(format!(
                "left/right eigenbases of L0⁻L1 fail biorthonormality (deviation {dev:.3e})"
            )));
        }
        chosen = Some((mask, left_full, dev, true));
    }
    let (mask, left_all, biorth, robust) = chosen.expect("set above");

    let m = mask.len();
    let mut lambda: CVector = Array1::zeros(m);
    let mut right: CMatrix = Array2::zeros((n, m));
    let mut left: CMatrix = Array2::zeros((n, m));
    for (col, &i) in mask.iter().enumerate() {
        lambda[col] = lambda_all[i];
        right.column_mut(col).assign(&right_all.column(i));
        left.column_mut(col).assign(&left_all.column(i));
    }
    let proj: CVector = left.t().dot(rho0);
    let mut scaled = right.clone();
    for (col, &p) in proj.iter().enumerate() {
        scaled.column_mut(col).mapv_inplace(|z| z * p);
    }

    let mut basis = PropagatorBasis {
        rho0: rho0.clone(),
        lambda,
        right,
        left,
        proj,
        scaled,
        lambda_max,
        kernel_dim: n - m,
        diagnostics: BasisDiagnostics {
            biorthonormality: biorth,
            probe_residual: 0.0,
            robust_left: robust,
        },
    };

    // A posteriori validation against the defining equation (1 + vK) ρ_v = ρ0.
    let mut worst = 0.0f64;
    for q in [0.37, 1.7] {
        let v = q / lambda_max;
        let rho_v = match basis.steady_state_at(v) {
            Ok(r) => r,
            Err(Error::Pole { .. }) => continue,
            Err(e) => return Err(e),
        };
        let lhs = &rho_v + &k.dot(&rho_v).mapv(|z| z * v);
        let resid = vec_max_norm(&(&lhs - rho0));
        let scale = vec_max_norm(rho0).max(vec_max_norm(&rho_v)) * (1.0 + q);
        worst = worst.max(resid / scale.max(1e-300));
    }
    if worst > 1e-8 {
        return Err(Error::Defective(format!(
            "propagator basis fails the defining equation at probe values (residual {worst:.3e})"
        )));
    }
    basis.diagnostics.probe_residual = worst;
    Ok(basis)
}

fn biorth_deviation(right: &CMatrix, left: &CMatrix, mask: &[usize]) -> f64 {
    let mut dev = 0.0f64;
    for &i in mask {
        let li = left.column(i);
        for &j in mask {
            let g: C64 = li
                .iter()
                .zip(right.column(j).iter())
                .map(|(a, b)| a * b)
                .sum();
            let target = if i == j { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) };
            dev = dev.max((g - target).norm());
        }
    }
    dev
}

/// Left eigenvectors of the nonzero spectrum via `Kᵀ u = λ u`, paired to the
/// right eigenvalues and re-biorthogonalized within degenerate clusters.
fn left_from_transposed(
    k: &CMatrix,
    lambda: &CVector,
    right: &CMatrix,
    mask: &[usize],
    lambda_max: f64,
) -> Result<(CMatrix, f64)> {
    let n = k.nrows();
    let (lam_t, u) = k.t().to_owned().eig()?;
    let mut left: CMatrix = Array2::zeros((n, n));
    let mut used = vec![false; n];
    // pair large eigenvalues first
    let mut order: Vec<usize> = mask.to_vec();
    order.sort_by(|&a, &b| lambda[b].norm().total_cmp(&lambda[a].norm()));
    let mut pairing: Vec<(usize, usize)> = Vec::with_capacity(order.len());
    for &i in &order {
        let mut best = usize::MAX;
        let mut best_d = f64::INFINITY;
        for j in 0..n {
            if used[j] {
                continue;
            }
            let d = (lam_t[j] - lambda[i]).norm();
            if d < best_d {
                best_d = d;
                best = j;
            }
        }
        if best == usize::MAX || best_d > 1e-6 * lambda_max {
            return Err(Error::Defective(format!(
                "cannot pair eigenvalue {} with the transposed spectrum (nearest gap {best_d:.3e})",
                lambda[i]
            )));
        }
        used[best] = true;
        pairing.push((i, best));
    }
    // group into clusters of (numerically) equal eigenvalues
    let ctol = 1e-8 * lambda_max;
    let mut assigned = vec![false; pairing.len()];
    for a in 0..pairing.len() {
        if assigned[a] {
            continue;
        }
        let mut cluster = vec![a];
        assigned[a] = true;
        for b in (a + 1)..pairing.len() {
            if !assigned[b] && (lambda[pairing[a].0] - lambda[pairing[b].0]).norm() <= ctol {
                assigned[b] = true;
                cluster.push(b);
            }
        }
        if cluster.len() == 1 {
            let (i, j) = pairing[cluster[0]];
            let scale: C64 = u
                .column(j)
                .iter()
                .zip(right.column(i).iter())
                .map(|(a, b)| a * b)
                .sum();
            if scale.norm() < 1e-300 {
                return Err(Error::Defective(format!(
                    "vanishing left/right pairing for eigenvalue {}",
                    lambda[i]
                )));
            }
            let col = u.column(j).mapv(|z| z / scale);
            left.column_mut(i).assign(&col);
        } else {
            // solve the small Gram system so that Lcᵀ Rc = 1 within the cluster
            let kdim = cluster.len();
            let mut gram: CMatrix = Array2::zeros((kdim, kdim));
            for (a_idx, &ca) in cluster.iter().enumerate() {
                for (b_idx, &cb) in cluster.iter().enumerate() {
                    let (ib, _) = pairing[cb];
                    let (_, ja) = pairing[ca];
                    gram[[a_idx, b_idx]] = u
                        .column(ja)
                        .iter()
                        .zip(right.column(ib).iter())
                        .map(|(x, y)| x * y)
                        .sum();
                }
            }
            let (ginv, _) = inv_refined(&gram).map_err(|_| {
                Error::Defective("degenerate eigenvalue cluster has incomplete eigenspace".into())
            })?;
            for (b_idx, &cb) in cluster.iter().enumerate() {
                let (ib, _) = pairing[cb];
                let mut col: CVector = Array1::zeros(n);
                for (a_idx, &ca) in cluster.iter().enumerate() {
                    let (_, ja) = pairing[ca];
                    let w = ginv[[a_idx, b_idx]];
                    col.zip_mut_with(&u.column(ja).to_owned(), |c, &uu| *c += w * uu);
                }
                left.column_mut(ib).assign(&col);
            }
        }
    }
    let dev = biorth_deviation(right, &left, mask);
    Ok((left, dev))
}

impl PropagatorBasis {
    /// Nonzero eigenvalues of `L0⁻ L1`.
    pub fn eigenvalues(&self) -> &CVector {
        &self.lambda
    }

    /// Largest |eigenvalue| over the full spectrum of `L0⁻ L1`.
    pub fn lambda_max(&self) -> f64 {
        self.lambda_max
    }

    /// Dimension of the kernel (zero-eigenvalue sector).
    pub fn kernel_dim(&self) -> usize {
        self.kernel_dim
    }

    /// Number of contributing (nonzero) eigenvalues `m`.
    pub fn nonzero_count(&self) -> usize {
        self.lambda.len()
    }

    /// The unperturbed steady state this basis propagates.
    pub fn rho0(&self) -> &CVector {
        &self.rho0
    }

    fn factors(&self, v: f64) -> Result<CVector> {
        let mut f: CVector = Array1::zeros(self.lambda.len());
        for (i, &lam) in self.lambda.iter().enumerate() {
            let denom = C64::new(1.0, 0.0) + lam * v;
            if denom.norm() <= POLE_TOL {
                return Err(Error::Pole {
                    v,
                    lambda: lam,
                    denom: denom.norm(),
                });
            }
            f[i] = lam * v / denom;
        }
        Ok(f)
    }

    /// Exact steady state of `L0 + v L1` in O(N·m).
    ///
    /// Trace-normalized with no renormalization: the kernel terms contribute
    /// `ρ0` itself and every correction column is traceless.
    pub fn steady_state_at(&self, v: f64) -> Result<CVector> {
        let f = self.factors(v)?;
        let mut out = self.rho0.clone();
        out.scaled_add(C64::new(-1.0, 0.0), &self.scaled.dot(&f));
        Ok(out)
    }

    /// Apply the resolvent `(1 + vK)⁻¹` to an arbitrary vector.
    pub fn apply_resolvent(&self, x: &CVector, v: f64) -> Result<CVector> {
        let f = self.factors(v)?;
        let coeffs: CVector = self.left.t().dot(x);
        let weighted: CVector = f
            .iter()
            .zip(coeffs.iter())
            .map(|(&fi, &ci)| fi * ci)
            .collect();
        let mut out = x.clone();
        out.scaled_add(C64::new(-1.0, 0.0), &self.right.dot(&weighted));
        Ok(out)
    }

    /// Project an observable once; sweeps and derivatives then cost O(m) per
    /// point.
    pub fn project_observable(&self, a: &CMatrix) -> Result<ObservableProjection> {
        let at_zero = expectation(a, &self.rho0)?;
        let va: CVector = a.iter().map(|z| z.conj()).collect();
        let row: CVector = va.dot(&self.right);
        let weighted: CVector = row
            .iter()
            .zip(self.proj.iter())
            .map(|(&r, &p)| r * p)
            .collect();
        Ok(ObservableProjection { at_zero, weighted })
    }

    /// `⟨A⟩(v)` from the projections alone.
    pub fn observable_at(&self, obs: &ObservableProjection, v: f64) -> Result<C64> {
        let f = self.factors(v)?;
        let corr: C64 = f
            .iter()
            .zip(obs.weighted.iter())
            .map(|(&fi, &wi)| fi * wi)
            .sum();
        Ok(obs.at_zero - corr)
    }

    /// Sweep `⟨A⟩` over a grid. Poles are reported per point; the sweep
    /// continues.
    pub fn observable_sweep(&self, obs: &ObservableProjection, grid: &[f64]) -> Vec<Result<C64>> {
        grid.iter().map(|&v| self.observable_at(obs, v)).collect()
    }

    /// Closed-form `dⁿ⟨A⟩/dvⁿ`:
    /// `Σ_i w_i · n!(−λ_i)ⁿ/(1+λ_i v)^{n+1}` — resolvent powers, no finite
    /// differences.
    pub fn derivative_at(&self, obs: &ObservableProjection, v: f64, order: u32) -> Result<C64> {
        if order == 0 {
            return Err(Error::InvalidParam("derivative order must be ≥ 1".into()));
        }
        let mut fact = 1.0f64;
        for k in 2..=order {
            fact *= k as f64;
        }
        let mut out = C64::new(0.0, 0.0);
        for (i, &lam) in self.lambda.iter().enumerate() {
            let denom = C64::new(1.0, 0.0) + lam * v;
            if denom.norm() <= POLE_TOL {
                return Err(Error::Pole {
                    v,
                    lambda: lam,
                    denom: denom.norm(),
                });
            }
            let mut term = C64::new(fact, 0.0) / denom;
            for _ in 0..order {
                term *= -lam / denom;
            }
            out += obs.weighted[i] * term;
        }
        Ok(out)
    }
}

/// Steady state of `L0 + Σ v_i L1_i` by a direct solve of
/// `(1 + L0⁻ Σ v_i L1_i) x = ρ0`. One O(N³) factorization per call.
pub fn multiparam_steady_state(
    l0m: &DrazinInverse,
    terms: &[(f64, &CMatrix)],
    rho0: &CVector,
) -> Result<CVector> {
    use ndarray_linalg::Solve;
    let n = rho0.len();
    if terms.is_empty() {
        return Ok(rho0.clone());
    }
    let mut combined: CMatrix = Array2::zeros((n, n));
    for (v, l1) in terms {
        if l1.dim() != (n, n) {
            return Err(Error::DimensionMismatch(format!(
                "multiparam term is {:?}, expected ({n}, {n})",
                l1.dim()
            )));
        }
        combined.scaled_add(C64::new(*v, 0.0), *l1);
    }
    let mut system = l0m.matrix.dot(&combined);
    for i in 0..n {
        system[[i, i]] += C64::new(1.0, 0.0);
    }
    system
        .solve(rho0)
        .map_err(|e| Error::Singular(format!("multiparameter resolvent: {e}")))
}

/// The nested sensitivity `vec(A)† ∂_Ω ρ(R, 0)` as a function of `R`, with
/// `∂_Ω ρ(R,0) = −(1 + R L0⁻L_R)⁻¹ L0⁻ L_Ω (1 + R L0⁻L_R)⁻¹ ρ(0,0)`.
///
/// `basis` must be built from `L0⁻ L_R` and the steady state at `R = Ω = 0`;
/// each grid point costs two resolvent applications and one matrix-vector
/// product.
pub fn sensitivity_vs_r(
    basis: &PropagatorBasis,
    l0m: &DrazinInverse,
    l_omega: &CMatrix,
    observable: &CMatrix,
    r_grid: &[f64],
) -> Vec<Result<C64>> {
    r_grid
        .iter()
        .map(|&r| {
            let y = basis.steady_state_at(r)?;
            let z = l0m.matrix.dot(&l_omega.dot(&y));
            let out = basis.apply_resolvent(&z, r)?.mapv(|w| -w);
            expectation(observable, &out)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drazin::drazin_via_solve;
    use crate::spectral::steady_state;
    use crate::superop::{build_lindbladian, vec_identity};
    use ndarray::array;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn two_level(gamma: f64, omega: f64, delta: f64) -> crate::superop::Lindbladian {
        let h = array![
            [c(-delta, 0.), c(omega / 2., 0.)],
            [c(omega / 2., 0.), c(0., 0.)]
        ];
        let l = array![[c(0., 0.), c(0., 0.)], [c(gamma.sqrt(), 0.), c(0., 0.)]];
        build_lindbladian(&h, &[l]).unwrap()
    }

    #[test]
    fn zero_perturbation_gives_constant_state() {
        let lb = two_level(1.0, 1.0, 0.0);
        let rho0 = steady_state(&lb).unwrap();
        let l0m = drazin_via_solve(&lb.matrix, &rho0, &vec_identity(2)).unwrap();
        let l1: CMatrix = Array2::zeros((4, 4));
        let basis = build_basis(&l0m, &l1, &rho0).unwrap();
        assert_eq!(basis.nonzero_count(), 0);
        let r = basis.steady_state_at(123.4).unwrap();
        assert!(vec_max_norm(&(&r - &rho0)) == 0.0);
        let obs = basis
            .project_observable(&Array2::eye(2))
            .unwrap();
        assert!((basis.derivative_at(&obs, 0.0, 1).unwrap()).norm() == 0.0);
    }

    #[test]
    fn l1_equal_l0_is_projector_identity() {
        // (1 + v L0⁻L0)⁻¹ ρ0 = ρ0 for all v since L0⁻L0 ρ0 = 0.
        let lb = two_level(1.0, 1.0, 0.3);
        let rho0 = steady_state(&lb).unwrap();
        let l0m = drazin_via_solve(&lb.matrix, &rho0, &vec_identity(2)).unwrap();
        let basis = build_basis(&l0m, &lb.matrix, &rho0).unwrap();
        for v in [0.0, 0.5, 10.0] {
            let r = basis.steady_state_at(v).unwrap();
            assert!(
                vec_max_norm(&(&r - &rho0)) < 1e-10,
                "state moved at v = {v}"
            );
        }
    }

    #[test]
    fn v_zero_returns_rho0_exactly() {
        let lb = two_level(1.0, 0.7, 0.2);
        let rho0 = steady_state(&lb).unwrap();
        let l0m = drazin_via_solve(&lb.matrix, &rho0, &vec_identity(2)).unwrap();
        let k = 2.0 * std::f64::consts::PI / 0.78;
        let l1 = Array2::from_diag(&array![
            c(0., 0.),
            c(0., -k),
            c(0., k),
            c(0., 0.)
        ]);
        let basis = build_basis(&l0m, &l1, &rho0).unwrap();
        let r = basis.steady_state_at(0.0).unwrap();
        assert!(vec_max_norm(&(&r - &rho0)) == 0.0);
    }

    #[test]
    fn multiparam_reduces_to_single_parameter() {
        let lb = two_level(1.0, 0.7, 0.2);
        let rho0 = steady_state(&lb).unwrap();
        let l0m = drazin_via_solve(&lb.matrix, &rho0, &vec_identity(2)).unwrap();
        let k = 2.0 * std::f64::consts::PI / 0.78;
        let l1 = Array2::from_diag(&array![
            c(0., 0.),
            c(0., -k),
            c(0., k),
            c(0., 0.)
        ]);
        let basis = build_basis(&l0m, &l1, &rho0).unwrap();
        let v = 0.37;
        let a = basis.steady_state_at(v).unwrap();
        let b = multiparam_steady_state(&l0m, &[(v, &l1)], &rho0).unwrap();
        assert!(vec_max_norm(&(&a - &b)) < 1e-10);
        // all v_i = 0
        let z = multiparam_steady_state(&l0m, &[(0.0, &l1)], &rho0).unwrap();
        assert!(vec_max_norm(&(&z - &rho0)) < 1e-14);
    }

    #[test]
    fn pole_is_reported_not_regularized() {
        let lb = two_level(1.0, 0.7, 0.2);
        let rho0 = steady_state(&lb).unwrap();
        let l0m = drazin_via_solve(&lb.matrix, &rho0, &vec_identity(2)).unwrap();
        // A Hermitian-free fake perturbation engineered to put a real
        // eigenvalue into K: use L1 = L0 so λ values are known… instead probe
        // the factor machinery directly through a real-eigenvalue basis.
        let basis = build_basis(&l0m, &lb.matrix, &rho0).unwrap();
        // L0⁻L0 has eigenvalues 0 and 1; v = −1 hits 1 + λv = 0.
        let r = basis.steady_state_at(-1.0);
        assert!(matches!(r, Err(Error::Pole { .. })));
        let sweep = basis.observable_sweep(
            &basis.project_observable(&Array2::eye(2)).unwrap(),
            &[0.0, -1.0, 0.5],
        );
        assert!(sweep[0].is_ok() && sweep[2].is_ok());
        assert!(matches!(sweep[1], Err(Error::Pole { .. })));
    }
}
