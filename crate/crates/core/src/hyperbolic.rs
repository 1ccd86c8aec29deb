//! Ratios of hyperbolic functions that stay finite for large arguments.
//!
//! Every closed form in this crate is a ratio whose denominator is evaluated at the
//! largest argument in play, so the ratio itself is bounded even when `cosh` or
//! `sinh` of either argument would overflow. Below `DIRECT_LIMIT` the standard
//! library functions are used as is; above it both terms are rescaled by `e^{-b}`.

const DIRECT_LIMIT: f64 = 350.0;

/// `sinh(a) / cosh(b)`, `b >= 0`.
pub(crate) fn sinh_over_cosh(a: f64, b: f64) -> f64 {
    if b <= DIRECT_LIMIT {
        a.sinh() / b.cosh()
    } else {
        ((a - b).exp() - (-a - b).exp()) / (1.0 + (-2.0 * b).exp())
    }
}

/// `cosh(a) / cosh(b)`, `b >= 0`.
pub(crate) fn cosh_over_cosh(a: f64, b: f64) -> f64 {
    if b <= DIRECT_LIMIT {
        a.cosh() / b.cosh()
    } else {
        ((a - b).exp() + (-a - b).exp()) / (1.0 + (-2.0 * b).exp())
    }
}

/// `sinh(a) / sinh(b)`, `b > 0`.
pub(crate) fn sinh_over_sinh(a: f64, b: f64) -> f64 {
    if b <= DIRECT_LIMIT {
        a.sinh() / b.sinh()
    } else {
        ((a - b).exp() - (-a - b).exp()) / -(-2.0 * b).exp_m1()
    }
}

/// `cosh(a) / sinh(b)`, `b > 0`.
pub(crate) fn cosh_over_sinh(a: f64, b: f64) -> f64 {
    if b <= DIRECT_LIMIT {
        a.cosh() / b.sinh()
    } else {
        ((a - b).exp() + (-a - b).exp()) / -(-2.0 * b).exp_m1()
    }
}

/// `[c1·cosh(a) + c2·sinh(a)] / [c3·sinh(b) + c4·cosh(b)]`, `b > 0`.
///
/// Used for the tip-spring weighted ratios of the semi-floating solution.
pub(crate) fn mixed_ratio(a: f64, b: f64, num: (f64, f64), den: (f64, f64)) -> f64 {
    if b <= DIRECT_LIMIT {
        (num.0 * a.cosh() + num.1 * a.sinh()) / (den.0 * b.sinh() + den.1 * b.cosh())
    } else {
        let plus = (a - b).exp();
        let minus = (-a - b).exp();
        let e2b = (-2.0 * b).exp();
        let n = num.0 * (plus + minus) + num.1 * (plus - minus);
        let d = den.0 * -(-2.0 * b).exp_m1() + den.1 * (1.0 + e2b);
        n / d
    }
}

/// `atanh(a)` evaluated as `0.5·ln((1 + a)/(1 − a))` from separately supplied
/// logarithms of `1 + a` and `1 − a` (up to a common positive factor).
///
/// Callers form the two logarithms without cancellation; this function only
/// combines them. Returns `None` when either factor is not strictly positive.
pub(crate) fn atanh_from_log_parts(ln_one_plus: Option<f64>, ln_one_minus: Option<f64>) -> Option<f64> {
    Some(0.5 * (ln_one_plus? - ln_one_minus?))
}

/// `ln(1 + z)` when `1 + z > 0`.
pub(crate) fn ln_1p_checked(z: f64) -> Option<f64> {
    (z > -1.0).then(|| z.ln_1p())
}
