use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;

use super::clt::{clt_params, CltParams};
use super::normal::log_phi_cdf;
use crate::counting::Setting;
use crate::error::{Error, Result};
use crate::group::HeckeParams;
use crate::scalar::Real;

/// Where the boundary length `n = x / heaviest` goes when it divides evenly.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Boundary {
    /// Full sum only; the Phi-weighted sum starts one later.
    #[default]
    FullSumOnly,
    /// Also repeated as the first Phi-weighted term.
    BothSums,
}

impl Boundary {
    pub fn as_str(&self) -> &'static str {
        match self {
            Boundary::FullSumOnly => "full-sum-only",
            Boundary::BothSums => "both-sums",
        }
    }
}

impl fmt::Display for Boundary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One summand of the estimate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Term<T> {
    pub n: u32,
    /// `(x - n mu) / (sqrt(n) sigma)` for Phi-weighted terms.
    pub z: Option<T>,
    /// Natural log of the summand.
    pub ln_value: T,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EstimateValue<T> {
    pub setting: Setting,
    pub x: u32,
    pub log10_value: T,
    pub decimal_string: String,
    pub terms: Vec<Term<T>>,
    /// Exact value of the full-weight part.
    pub full_part: BigRational,
    pub boundary: Boundary,
}

impl<T: Real> EstimateValue<T> {
    pub fn ln_value(&self) -> T {
        self.log10_value * T::LN_10()
    }

    /// Whether there are no Phi-weighted terms, so `full_part` is the value.
    pub fn is_exact(&self) -> bool {
        self.terms.iter().all(|t| t.z.is_none())
    }
}

/// `ln` of `sum exp(v)`, summed in the given order.
pub fn log_sum_exp<T: Real>(values: impl IntoIterator<Item = T> + Clone) -> T {
    let max = values
        .clone()
        .into_iter()
        .fold(T::neg_infinity(), |a, b| a.max(b));
    if max == T::neg_infinity() {
        return max;
    }
    let sum = values
        .into_iter()
        .fold(T::zero(), |acc, v| acc + (v - max).exp());
    max + sum.ln()
}

/// Estimated count for a setting: all tuples of the lengths that always fit,
/// plus `base^n Phi(z_n)` for the lengths that fit only partly. Syllable
/// settings count classes, so their sums are halved.
pub fn estimate_count<T: Real>(
    params: &HeckeParams,
    setting: Setting,
    x: u32,
) -> Result<EstimateValue<T>> {
    estimate_count_with(params, setting, x, Boundary::default())
}

pub fn estimate_count_with<T: Real>(
    params: &HeckeParams,
    setting: Setting,
    x: u32,
    boundary: Boundary,
) -> Result<EstimateValue<T>> {
    let clt: CltParams<BigInt> = clt_params(params, setting)?;
    let half = setting.uses_syllable_weights();
    let ln_base = T::lit(clt.base as f64).ln();
    let ln_half = if half { T::lit(0.5).ln() } else { T::zero() };

    let full_max = clt.n_full_max(x).min(clt.n_tail_max(x));
    let mut terms: Vec<Term<T>> = (1..=full_max)
        .map(|n| Term {
            n,
            z: None,
            ln_value: T::lit(f64::from(n)) * ln_base + ln_half,
        })
        .collect();

    let on_boundary = full_max > 0 && x.is_multiple_of(clt.heaviest());
    let tail_start = match boundary {
        Boundary::BothSums if on_boundary => full_max,
        _ => full_max + 1,
    };
    let (mu, sigma) = (T::lit(clt.mu_f64()), T::lit(clt.sigma2_f64()).sqrt());
    if sigma > T::zero() {
        let mut last_z: Option<T> = None;
        for n in tail_start..=clt.n_tail_max(x) {
            let nn = T::lit(f64::from(n));
            let z = (T::lit(f64::from(x)) - nn * mu) / (nn.sqrt() * sigma);
            if let Some(prev) = last_z {
                if z >= prev {
                    return Err(Error::Invariant(format!(
                        "z not decreasing at n = {n}: {z} after {prev}"
                    )));
                }
            }
            last_z = Some(z);
            terms.push(Term {
                n,
                z: Some(z),
                ln_value: nn * ln_base + log_phi_cdf(z) + ln_half,
            });
        }
    }
    if terms.is_empty() {
        return Err(Error::EmptyCount(x));
    }
    let ln_total = log_sum_exp(terms.iter().map(|t| t.ln_value));
    let log10_value = ln_total / T::LN_10();
    Ok(EstimateValue {
        setting,
        x,
        log10_value,
        decimal_string: render_decimal(log10_value),
        full_part: full_part(clt.base, full_max, half),
        terms,
        boundary,
    })
}

/// `(1/2)^half * sum_{n=1}^{m} base^n`, exactly.
fn full_part(base: u64, m: u32, half: bool) -> BigRational {
    let b = BigInt::from(base);
    let sum = if base == 1 {
        BigInt::from(m)
    } else {
        (num_traits::pow(b.clone(), m as usize) - BigInt::one()) * &b / (b - BigInt::one())
    };
    let denom = if half { 2 } else { 1 };
    BigRational::new(sum, BigInt::from(denom))
}

/// Fixed six decimals below `10^15`, otherwise `d.dddddde+N`.
pub fn render_decimal<T: Real>(log10_value: T) -> String {
    let l = log10_value.to_f64().unwrap_or(f64::NAN);
    if !l.is_finite() {
        return "nan".into();
    }
    if l < 15.0 {
        format!("{:.6}", 10f64.powf(l))
    } else {
        let e = l.floor();
        let mut m = 10f64.powf(l - e);
        let mut e = e as i64;
        if format!("{m:.6}").starts_with("10") {
            m /= 10.0;
            e += 1;
        }
        format!("{m:.6}e+{e}")
    }
}

/// `2^(x/4) - 1`, the reciprocal class count of the modular group `p = 3`.
pub fn modular_closed_form(x: u32) -> BigUint {
    (BigUint::one() << (x / 4) as usize) - BigUint::one()
}

/// `log10` of [`modular_closed_form`] as a float.
pub fn modular_log10<T: Real>(x: u32) -> T {
    let k = f64::from(x / 4);
    if k == 0.0 {
        return T::neg_infinity();
    }
    // log10(2^k - 1) = k log10 2 + log10(1 - 2^-k)
    T::lit(k * std::f64::consts::LOG10_2 + (-(2f64.powf(-k))).ln_1p() / std::f64::consts::LN_10)
}
