//! Special functions needed by the GGP truncation check.

/// Gamma function.
pub fn gamma(x: f64) -> f64 {
    libm::tgamma(x)
}

/// Regularized lower incomplete gamma `P(s, x) = γ(s, x) / Γ(s)` for
/// `s > 0`, `x >= 0`.
pub fn regularized_lower_gamma(s: f64, x: f64) -> f64 {
    assert!(s > 0.0 && x >= 0.0, "P(s, x) needs s > 0, x >= 0");
    if x == 0.0 {
        return 0.0;
    }
    if x < s + 1.0 {
        lower_series(s, x)
    } else {
        1.0 - upper_continued_fraction(s, x)
    }
}

fn prefactor(s: f64, x: f64) -> f64 {
    libm::exp(s * libm::log(x) - x - libm::lgamma(s))
}

fn lower_series(s: f64, x: f64) -> f64 {
    let mut term = 1.0 / s;
    let mut sum = term;
    let mut a = s;
    for _ in 0..10_000 {
        a += 1.0;
        term *= x / a;
        sum += term;
        if term.abs() < sum.abs() * f64::EPSILON {
            break;
        }
    }
    sum * prefactor(s, x)
}

// Modified Lentz evaluation of the continued fraction for Q(s, x).
fn upper_continued_fraction(s: f64, x: f64) -> f64 {
    const TINY: f64 = 1e-300;
    let mut b = x + 1.0 - s;
    let mut c = 1.0 / TINY;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..10_000 {
        let an = -(i as f64) * (i as f64 - s);
        b += 2.0;
        d = an * d + b;
        if d.abs() < TINY {
            d = TINY;
        }
        c = b + an / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = d * c;
        h *= delta;
        if (delta - 1.0).abs() < f64::EPSILON {
            break;
        }
    }
    h * prefactor(s, x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponential_case() {
        // P(1, x) = 1 - e^-x
        for &x in &[1e-8, 0.3, 1.0, 2.5, 10.0] {
            let want = -libm::expm1(-x);
            let got = regularized_lower_gamma(1.0, x);
            assert!((got - want).abs() <= 1e-14 * want.max(1e-300) + 1e-15, "{x}");
        }
    }

    #[test]
    fn half_case_matches_erf() {
        // P(1/2, x) = erf(sqrt x)
        for &x in &[1e-6, 0.01, 0.7, 3.0, 20.0] {
            let want = libm::erf(libm::sqrt(x));
            let got = regularized_lower_gamma(0.5, x);
            assert!((got - want).abs() <= 1e-13 * want, "{x}: {got} vs {want}");
        }
    }

    #[test]
    fn gamma_values() {
        assert!((gamma(0.5) - libm::sqrt(core::f64::consts::PI)).abs() < 1e-14);
        assert!((gamma(5.0) - 24.0).abs() < 1e-12);
    }
}
