use crate::scalar::Real;

/// Standard normal CDF.
pub fn phi_cdf<T: Real>(z: T) -> T {
    T::lit(0.5) * (-z / T::SQRT_2()).erfc()
}

/// Standard normal density.
pub fn phi_pdf<T: Real>(z: T) -> T {
    (-(z * z) * T::lit(0.5)).exp() / (T::TAU()).sqrt()
}

/// Below this `ln Phi` comes from the asymptotic series of the Mills ratio.
pub const MILLS_CUTOFF: f64 = -8.0;

/// `ln Phi(z)` without underflow for very negative `z`.
pub fn log_phi_cdf<T: Real>(z: T) -> T {
    if z < T::lit(MILLS_CUTOFF) {
        log_phi_mills(z)
    } else if z > T::zero() {
        (-phi_cdf(-z)).ln_1p()
    } else {
        phi_cdf(z).ln()
    }
}

/// `ln Phi(z) = -z^2/2 - ln(-z sqrt(2 pi)) + ln(1 - 1/z^2 + 3/z^4 - ...)`,
/// the series cut at its smallest term.
fn log_phi_mills<T: Real>(z: T) -> T {
    let inv = (z * z).recip();
    let mut term = T::one();
    let mut sum = T::one();
    let mut k = 1u32;
    loop {
        let next = -term * T::lit(f64::from(2 * k - 1)) * inv;
        if next.abs() >= term.abs() || next.abs() < T::epsilon() * sum.abs() {
            if next.abs() < term.abs() {
                sum = sum + next;
            }
            break;
        }
        sum = sum + next;
        term = next;
        k += 1;
    }
    -(z * z) * T::lit(0.5) - (-z * T::TAU().sqrt()).ln() + sum.ln()
}
