//! Scalar numeric kernels: log-domain reductions, stable hyperbolic forms,
//! binomial coefficients and moment/cumulant conversions.

pub(crate) use statrs::function::beta::ln_beta;
pub(crate) use statrs::function::gamma::ln_gamma;

/// ln(sum of exp(x_i)) with max subtraction.
pub(crate) fn log_sum_exp(xs: &[f64]) -> f64 {
    let m = xs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if !m.is_finite() {
        return m;
    }
    let s: f64 = xs.iter().map(|&x| (x - m).exp()).sum();
    m + s.ln()
}

// Taylor coefficients of coth(z) - 1/z = sum c[k] z^{2k+1}.
const COTH_SERIES: [f64; 8] = [
    1.0 / 3.0,
    -1.0 / 45.0,
    2.0 / 945.0,
    -1.0 / 4725.0,
    2.0 / 93_555.0,
    -1382.0 / 638_512_875.0,
    4.0 / 18_243_225.0,
    -3617.0 / 162_820_783_125.0,
];

/// ln(sinh(z)/z), even in `z`, continuously extended by 0 at z = 0.
///
/// This is the centered CGF of a uniform law of length 2 at lambda = z.
/// A Taylor branch keeps full relative accuracy through z = 0, where the
/// direct expression loses all significant digits.
pub(crate) fn ln_sinhc(z: f64) -> f64 {
    let z = z.abs();
    if z < 0.35 {
        // ln(sinh z / z) = sum c[k]/(2k+2) z^{2k+2}
        let z2 = z * z;
        let mut acc = 0.0;
        let mut p = z2;
        for (k, c) in COTH_SERIES.iter().enumerate() {
            acc += c / (2.0 * k as f64 + 2.0) * p;
            p *= z2;
        }
        acc
    } else if z < 350.0 {
        ((-(-2.0 * z).exp_m1()) / (2.0 * z)).ln() + z
    } else {
        // exp(-2z) underflows; sinh(z) ~ exp(z)/2
        z - (2.0 * z).ln()
    }
}

/// coth(z) - 1/z, odd in `z`, continuously extended by 0 at z = 0.
///
/// Derivative of [`ln_sinhc`].
pub(crate) fn coth_minus_inv(z: f64) -> f64 {
    let az = z.abs();
    let v = if az < 0.35 {
        let z2 = az * az;
        let mut acc = 0.0;
        let mut p = az;
        for c in COTH_SERIES.iter() {
            acc += c * p;
            p *= z2;
        }
        acc
    } else if az < 350.0 {
        // coth z = (1 + e^{-2z}) / (1 - e^{-2z})
        let e = (-2.0 * az).exp();
        (1.0 + e) / (1.0 - e) - 1.0 / az
    } else {
        1.0 - 1.0 / az
    };
    if z < 0.0 {
        -v
    } else {
        v
    }
}

/// Binomial coefficient C(n, k) as f64, multiplicative form.
pub(crate) fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut acc = 1.0;
    for i in 0..k {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc
}

/// Cumulants kappa_2..kappa_n from centered moments m_0..m_n (m_1 = 0).
///
/// Returns a vector `kappa` with `kappa[j]` the j-th cumulant (entries 0 and 1
/// are zero). Uses the standard recursion
/// `kappa_n = m_n - sum_{j=2}^{n-2} C(n-1, j-1) kappa_j m_{n-j}`.
pub(crate) fn cumulants_from_central_moments(m: &[f64]) -> Vec<f64> {
    let n = m.len();
    let mut kappa = vec![0.0; n];
    for order in 2..n {
        let mut acc = m[order];
        for j in 2..=order.saturating_sub(2) {
            acc -= binomial(order - 1, j - 1) * kappa[j] * m[order - j];
        }
        kappa[order] = acc;
    }
    kappa
}

/// Centered moments of the sum of two independent centered variables from
/// their centered moments: `m_n(X+Y) = sum_j C(n,j) m_j(X) m_{n-j}(Y)`.
pub(crate) fn convolve_central_moments(a: &[f64], b: &[f64]) -> Vec<f64> {
    let n = a.len().min(b.len());
    let mut out = vec![0.0; n];
    for order in 0..n {
        let mut acc = 0.0;
        for j in 0..=order {
            acc += binomial(order, j) * a[j] * b[order - j];
        }
        out[order] = acc;
    }
    out
}
