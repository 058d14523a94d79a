//! Adaptive Gauss–Kronrod quadrature for complex-valued integrands.
//!
//! A 7/15-point rule with bisection driven by the embedded error estimate.
//! Used as the independent oracle for the closed-form ensemble averages and
//! for general `Distribution::Custom` densities.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_17,
    0.207_784_955_007_898_47,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];

const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_94,
    0.417_959_183_673_469_4,
];

fn gk15<F: Fn(f64) -> C64>(f: &F, a: f64, b: f64) -> (C64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for (i, &x) in XGK.iter().enumerate().take(7) {
        let dx = h * x;
        let fsum = f(c - dx) + f(c + dx);
        kronrod += WGK[i] * fsum;
        if i % 2 == 1 {
            gauss += WG[i / 2] * fsum;
        }
    }
    let value = kronrod * h;
    let err = ((kronrod - gauss) * h).norm();
    (value, err)
}

/// Integrate `f` over `[a, b]` to absolute tolerance `abs_tol` or relative
/// tolerance `rel_tol`, whichever is weaker. Returns the value and the final
/// error estimate.
pub fn integrate<F: Fn(f64) -> C64>(
    f: F,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
) -> Result<(C64, f64)> {
    const MAX_INTERVALS: usize = 4000;
    let (v0, e0) = gk15(&f, a, b);
    let mut segments: Vec<(f64, f64, C64, f64)> = vec![(a, b, v0, e0)];
    loop {
        let total: C64 = segments.iter().map(|s| s.2).sum();
        let err: f64 = segments.iter().map(|s| s.3).sum();
        let tol = abs_tol.max(rel_tol * total.norm());
        if err <= tol {
            return Ok((total, err));
        }
        if segments.len() >= MAX_INTERVALS {
            return Err(Error::QuadratureNonConvergence {
                estimate: err,
                tolerance: tol,
            });
        }
        // bisect the worst segment
        let (idx, _) = segments
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .3.total_cmp(&y.1 .3))
            .expect("nonempty");
        let (sa, sb, _, _) = segments.swap_remove(idx);
        let mid = 0.5 * (sa + sb);
        segments.push({
            let (v, e) = gk15(&f, sa, mid);
            (sa, mid, v, e)
        });
        segments.push({
            let (v, e) = gk15(&f, mid, sb);
            (mid, sb, v, e)
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_is_exact() {
        let (v, _) = integrate(|x| C64::new(x * x * x - 2.0 * x + 1.0, 0.0), -1.0, 3.0, 1e-14, 0.0)
            .unwrap();
        // ∫ (x³ − 2x + 1) dx over [−1, 3] = [x⁴/4 − x² + x] = (81/4 − 9 + 3) − (1/4 − 1 − 1)
        let exact = (81.0 / 4.0 - 6.0) - (0.25 - 2.0);
        assert!((v.re - exact).abs() < 1e-12);
    }

    #[test]
    fn oscillatory_complex_integrand() {
        // ∫ e^{i k x} dx over [0, 1] = (e^{ik} − 1)/(ik)
        let k = 37.0;
        let (v, _) = integrate(|x| (C64::new(0.0, k * x)).exp(), 0.0, 1.0, 1e-12, 1e-12).unwrap();
        let exact = ((C64::new(0.0, k)).exp() - 1.0) / C64::new(0.0, k);
        assert!((v - exact).norm() < 1e-11);
    }

    #[test]
    fn near_pole_refines() {
        // 1/(x² + a²) with a small: sharply peaked but integrable
        let a = 1e-3;
        let (v, _) = integrate(
            |x| C64::new(1.0 / (x * x + a * a), 0.0),
            -1.0,
            1.0,
            0.0,
            1e-10,
        )
        .unwrap();
        let exact = 2.0 * (1.0 / a) * (1.0f64 / a).atan();
        assert!((v.re - exact).abs() < 1e-8 * exact);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        // A genuinely divergent endpoint singularity cannot converge.
        let r = integrate(|x| C64::new(1.0 / x.abs().max(1e-300), 0.0), -1.0, 1.0, 1e-10, 1e-10);
        assert!(matches!(r, Err(Error::QuadratureNonConvergence { .. })));
    }
}
