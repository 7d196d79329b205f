//! Scalar numerics shared by the radius engine and the membership checks:
//! adaptive Gauss-Kronrod quadrature, bisection, and golden-section search.

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];

// Gauss weights for XGK[1], XGK[3], XGK[5] and the center.
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// One 15-point Kronrod panel with its embedded 7-point Gauss estimate.
/// Returns `(kronrod, |kronrod - gauss|)`.
fn kronrod_panel(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kron = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for (i, &x) in XGK[..7].iter().enumerate() {
        let dx = half * x;
        let pair = f(center - dx) + f(center + dx);
        kron += WGK[i] * pair;
        if i % 2 == 1 {
            gauss += WG[i / 2] * pair;
        }
    }
    (kron * half, ((kron - gauss) * half).abs())
}

/// Globally adaptive G7-K15 quadrature on `[a, b]`.
///
/// Bisects the panel with the largest error estimate until the summed
/// estimate drops below `abs_tol` or `max_panels` is reached. Returns
/// `(integral, error_estimate)`.
pub fn integrate_adaptive(
    f: impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    abs_tol: f64,
    max_panels: usize,
) -> (f64, f64) {
    let (v, e) = kronrod_panel(&f, a, b);
    let mut panels = vec![(a, b, v, e)];
    loop {
        let total_err: f64 = panels.iter().map(|p| p.3).sum();
        if total_err <= abs_tol || panels.len() >= max_panels {
            let total: f64 = panels.iter().map(|p| p.2).sum();
            return (total, total_err);
        }
        let worst = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .3.total_cmp(&y.1 .3))
            .map(|(i, _)| i)
            .unwrap();
        let (lo, hi, _, _) = panels.swap_remove(worst);
        let mid = 0.5 * (lo + hi);
        let (v1, e1) = kronrod_panel(&f, lo, mid);
        let (v2, e2) = kronrod_panel(&f, mid, hi);
        panels.push((lo, mid, v1, e1));
        panels.push((mid, hi, v2, e2));
    }
}

/// Bisection for a sign change of `f` on `[a, b]`, stopping once the
/// bracket is narrower than `tol`.
pub fn bisect(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> Result<f64> {
    let mut fa = f(a);
    let fb = f(b);
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() || fa.is_nan() || fb.is_nan() {
        return Err(Error::NoBracket(format!("f({a}) = {fa}, f({b}) = {fb}")));
    }
    while (b - a).abs() > tol {
        let mid = 0.5 * (a + b);
        if mid == a || mid == b {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == fa.signum() {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    Ok(0.5 * (a + b))
}

/// Largest `x` in `[lo, hi]` for which `pred` holds, assuming `pred` is
/// true on an initial segment `[lo, x*]` and false after it.
pub fn bisect_predicate(pred: impl Fn(f64) -> bool, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if pred(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// All sign-change roots of `f` on `[a, b]`, located by scanning `cells`
/// uniform subintervals and refining each bracket by bisection.
pub fn scan_roots(f: impl Fn(f64) -> f64, a: f64, b: f64, cells: usize, tol: f64) -> Vec<f64> {
    let h = (b - a) / cells as f64;
    let mut roots = Vec::new();
    let mut x0 = a;
    let mut f0 = f(x0);
    for i in 1..=cells {
        let x1 = if i == cells { b } else { a + h * i as f64 };
        let f1 = f(x1);
        if f0 == 0.0 {
            roots.push(x0);
        } else if f0.signum() != f1.signum() && f1 != 0.0 {
            if let Ok(r) = bisect(&f, x0, x1, tol) {
                roots.push(r);
            }
        }
        x0 = x1;
        f0 = f1;
    }
    if f0 == 0.0 {
        roots.push(x0);
    }
    roots
}

/// Golden-section search for a minimum of a unimodal `f` on `[a, b]`.
/// Returns `(x_min, f_min)`.
pub fn golden_section_min(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while (b - a).abs() > tol {
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        }
    }
    if f1 <= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Minimum of `f` over `[a, b]` by dense sampling followed by a
/// golden-section polish on the two cells around the best sample.
pub fn sampled_min(f: impl Fn(f64) -> f64, a: f64, b: f64, samples: usize, tol: f64) -> (f64, f64) {
    let h = (b - a) / samples as f64;
    let (best_i, best_v) = (0..=samples)
        .map(|i| (i, f(a + h * i as f64)))
        .fold((0, f64::INFINITY), |acc, (i, v)| if v < acc.1 { (i, v) } else { acc });
    let lo = a + h * (best_i as f64 - 1.0);
    let hi = a + h * (best_i as f64 + 1.0);
    let (x, v) = golden_section_min(&f, lo, hi, tol);
    if v < best_v {
        (x, v)
    } else {
        (a + h * best_i as f64, best_v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn quadrature_polynomial_and_log() {
        let (v, _) = integrate_adaptive(|t| t * t, 0.0, 1.0, 1e-13, 100);
        assert_abs_diff_eq!(v, 1.0 / 3.0, epsilon = 1e-14);
        let (v, _) = integrate_adaptive(|t: f64| if t > 0.0 { t.ln() } else { 0.0 }, 0.0, 1.0, 1e-10, 500);
        assert_abs_diff_eq!(v, -1.0, epsilon = 1e-9);
    }

    #[test]
    fn bisection_finds_sqrt2() {
        let r = bisect(|x| x * x - 2.0, 0.0, 2.0, 1e-14).unwrap();
        assert_abs_diff_eq!(r, 2f64.sqrt(), epsilon = 1e-13);
        assert!(bisect(|x| x * x + 1.0, -1.0, 1.0, 1e-8).is_err());
    }

    #[test]
    fn predicate_bisection() {
        let x = bisect_predicate(|x| x < 0.3, 0.0, 1.0, 1e-12);
        assert_abs_diff_eq!(x, 0.3, epsilon = 1e-11);
    }

    #[test]
    fn scan_finds_all_roots() {
        let roots = scan_roots(|x| (x - 0.2) * (x + 0.5) * (x - 0.9), -1.0, 1.0, 64, 1e-12);
        assert_eq!(roots.len(), 3);
        assert_abs_diff_eq!(roots[0], -0.5, epsilon = 1e-10);
        assert_abs_diff_eq!(roots[1], 0.2, epsilon = 1e-10);
        assert_abs_diff_eq!(roots[2], 0.9, epsilon = 1e-10);
    }

    #[test]
    fn golden_and_sampled_min() {
        let (x, v) = golden_section_min(|x| (x - 0.3).powi(2) + 1.0, 0.0, 1.0, 1e-10);
        assert_abs_diff_eq!(x, 0.3, epsilon = 1e-7);
        assert_abs_diff_eq!(v, 1.0, epsilon = 1e-15);
        let (x, v) = sampled_min(|t: f64| t.cos(), 0.0, 2.0 * std::f64::consts::PI, 100, 1e-10);
        assert_abs_diff_eq!(x, std::f64::consts::PI, epsilon = 1e-7);
        assert_abs_diff_eq!(v, -1.0, epsilon = 1e-14);
    }
}
