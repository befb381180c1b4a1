//! Minimal adaptive Simpson quadrature for the explicit d = 1 formulas.

/// Integrates `f` over `[a, b]` (signed if `a > b`) to absolute tolerance
/// `tol` by adaptive Simpson with Richardson correction.
pub(crate) fn integrate(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    if a > b {
        return -integrate(f, b, a, tol);
    }
    let c = 0.5 * (a + b);
    let fa = f(a);
    let fb = f(b);
    let fc = f(c);
    let whole = simpson(a, b, fa, fc, fb);
    recurse(f, a, b, fa, fc, fb, whole, tol, 40)
}

fn simpson(a: f64, b: f64, fa: f64, fc: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fc + fb)
}

#[allow(clippy::too_many_arguments)]
fn recurse(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fc: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let c = 0.5 * (a + b);
    let l = 0.5 * (a + c);
    let r = 0.5 * (c + b);
    let fl = f(l);
    let fr = f(r);
    let left = simpson(a, c, fa, fl, fc);
    let right = simpson(c, b, fc, fr, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    recurse(f, a, c, fa, fl, fc, left, 0.5 * tol, depth - 1)
        + recurse(f, c, b, fc, fr, fb, right, 0.5 * tol, depth - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrates_smooth_functions() {
        let v = integrate(&|t: f64| t.cos(), 0.0, 1.0, 1.0e-12);
        assert!((v - 1.0f64.sin()).abs() < 1.0e-11);
        let v = integrate(&|t: f64| t.exp(), 2.0, -1.0, 1.0e-12);
        assert!((v - ((-1.0f64).exp() - 2.0f64.exp())).abs() < 1.0e-10);
    }

    #[test]
    fn handles_mild_endpoint_steepness() {
        let v = integrate(&|t: f64| (1.0 - t).sqrt(), 0.0, 1.0, 1.0e-10);
        assert!((v - 2.0 / 3.0).abs() < 1.0e-8, "got {v}");
    }
}
