use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, ToPrimitive};

use crate::counting::{syllable_alphabet, Setting, WeightAlphabet};
use crate::error::Result;
use crate::group::HeckeParams;

/// Mean and variance of one letter weight in a setting, plus the ranges of
/// tuple lengths in the estimator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CltParams<I: Clone + Integer> {
    pub setting: Setting,
    pub r: u32,
    pub mu: Ratio<I>,
    pub sigma2: Ratio<I>,
    /// Number of letters.
    pub base: u64,
}

impl<I: Clone + Integer + ToPrimitive> CltParams<I> {
    /// Weight of the heaviest letter.
    pub fn heaviest(&self) -> u32 {
        if self.setting.uses_syllable_weights() {
            2 * (self.r + 1)
        } else {
            self.r
        }
    }

    /// Largest `n` whose tuples all fit in `x`.
    pub fn n_full_max(&self, x: u32) -> u32 {
        x / self.heaviest()
    }

    /// Largest `n` for which some tuple fits in `x`.
    pub fn n_tail_max(&self, x: u32) -> u32 {
        if self.setting.uses_syllable_weights() {
            x / 4
        } else {
            x
        }
    }

    pub fn mu_f64(&self) -> f64 {
        ratio_f64(&self.mu)
    }

    pub fn sigma2_f64(&self) -> f64 {
        ratio_f64(&self.sigma2)
    }
}

fn ratio_f64<I: Clone + Integer + ToPrimitive>(q: &Ratio<I>) -> f64 {
    q.numer().to_f64().expect("finite") / q.denom().to_f64().expect("finite")
}

fn int<I: FromPrimitive>(v: i64) -> I {
    I::from_i64(v).expect("value fits the integer type")
}

/// Mean and variance used by each setting's growth formula.
///
/// These are the letter-weight moments of the setting's alphabet, except the
/// `thm2` variance, which is the closed form `(16r^3+36r^2+32r-12)/(6(2r-1))`
/// and does not equal the alphabet variance; see [`alphabet_moments`].
pub fn clt_params<I>(params: &HeckeParams, setting: Setting) -> Result<CltParams<I>>
where
    I: Clone + Integer + FromPrimitive,
{
    let alphabet = syllable_alphabet(params, setting)?;
    let r = i64::from(params.r());
    let q = |n: i64, d: i64| Ratio::new(int::<I>(n), int::<I>(d));
    let (mu, sigma2) = match setting {
        Setting::Thm1 => (q(r + 3, 1), q(r * r - 1, 3)),
        Setting::Thm2 => (
            q(2 * r * r + 4 * r - 2, 2 * r - 1),
            q(
                16 * r * r * r + 36 * r * r + 32 * r - 12,
                6 * (2 * r - 1),
            ),
        ),
        Setting::Lemma42 => (
            q(r * r, 2 * r - 1),
            q(
                r * r * r * r - 2 * r * r * r + 2 * r * r - r,
                3 * (2 * r - 1) * (2 * r - 1),
            ),
        ),
        Setting::Lemma43 => (q(r + 1, 2), q(r * r - 1, 12)),
    };
    Ok(CltParams {
        setting,
        r: params.r(),
        mu,
        sigma2,
        base: alphabet.size(),
    })
}

/// Mean and variance of a uniformly chosen letter weight.
pub fn alphabet_moments<I>(alphabet: &WeightAlphabet) -> (Ratio<I>, Ratio<I>)
where
    I: Clone + Integer + FromPrimitive,
{
    let n = int::<I>(alphabet.size() as i64);
    let (mut s1, mut s2) = (I::zero(), I::zero());
    for &(w, m) in alphabet.entries() {
        let (w, m) = (int::<I>(i64::from(w)), int::<I>(i64::from(m)));
        s1 = s1 + m.clone() * w.clone();
        s2 = s2 + m * w.clone() * w;
    }
    let mean = Ratio::new(s1, n.clone());
    let second = Ratio::new(s2, n);
    let var = second - mean.clone() * mean.clone();
    (mean, var)
}
