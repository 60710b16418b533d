use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Odd,
    Even,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Odd => "odd",
            Parity::Even => "even",
        })
    }
}

/// The group parameter `p` of `Z_2 * Z_p`, with `r = floor(p / 2)`.
///
/// Exponents of the order-`p` generator are stored in `(-p/2, p/2]`, so for
/// even `p` the involution `g^r` is always written with `+r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HeckeParams {
    p: u32,
}

impl HeckeParams {
    /// Largest supported `p`; keeps every exponent sum inside `i64`.
    pub const MAX_P: u32 = 1 << 30;

    pub fn new(p: u32) -> Result<Self> {
        if !(3..=Self::MAX_P).contains(&p) {
            return Err(Error::InvalidP {
                p: p as u64,
                max: Self::MAX_P,
            });
        }
        Ok(Self { p })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn r(&self) -> u32 {
        self.p / 2
    }

    pub fn parity(&self) -> Parity {
        if self.p.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_even(&self) -> bool {
        self.parity() == Parity::Even
    }

    /// Exponent of the involution `g^r`, present only for even `p`.
    pub fn tilde(&self) -> Option<i32> {
        self.is_even().then_some(self.r() as i32)
    }

    /// Reduces `k` modulo `p` into `(-p/2, p/2]`; `None` when `g^k` is trivial.
    pub fn normalize_exponent(&self, k: i64) -> Option<i32> {
        let p = self.p as i64;
        let m = k.rem_euclid(p);
        if m == 0 {
            None
        } else if 2 * m > p {
            Some((m - p) as i32)
        } else {
            Some(m as i32)
        }
    }

    /// Normalized exponent of the inverse power.
    pub fn negate(&self, k: i32) -> i32 {
        self.normalize_exponent(-(k as i64))
            .expect("negation of a nonzero exponent is nonzero")
    }

    pub fn in_alphabet(&self, k: i32) -> bool {
        k != 0 && self.normalize_exponent(k as i64) == Some(k)
    }

    /// The exponent alphabet in letter order: `1, -1, 2, -2, ...`.
    ///
    /// For even `p` the last entry is the single `+r`.
    pub fn alphabet(&self) -> Vec<i32> {
        let r = self.r() as i32;
        let mut out = Vec::with_capacity(self.p as usize - 1);
        for j in 1..=r {
            out.push(j);
            if self.in_alphabet(-j) {
                out.push(-j);
            }
        }
        out
    }
}

impl fmt::Display for HeckeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={}", self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_small_p() {
        assert!(HeckeParams::new(2).is_err());
        assert!(HeckeParams::new(0).is_err());
        assert!(HeckeParams::new(3).is_ok());
    }

    #[test]
    fn normalize_examples() {
        let p5 = HeckeParams::new(5).unwrap();
        let p4 = HeckeParams::new(4).unwrap();
        assert_eq!(p5.normalize_exponent(3), Some(-2));
        assert_eq!(p4.normalize_exponent(-2), Some(2));
        assert_eq!(p5.normalize_exponent(5), None);
        assert_eq!(p5.normalize_exponent(-10), None);
        assert_eq!(p5.normalize_exponent(-3), Some(2));
    }

    #[test]
    fn alphabets() {
        assert_eq!(HeckeParams::new(3).unwrap().alphabet(), vec![1, -1]);
        assert_eq!(HeckeParams::new(4).unwrap().alphabet(), vec![1, -1, 2]);
        assert_eq!(HeckeParams::new(5).unwrap().alphabet(), vec![1, -1, 2, -2]);
        assert_eq!(
            HeckeParams::new(6).unwrap().alphabet(),
            vec![1, -1, 2, -2, 3]
        );
    }

    #[test]
    fn parity_and_tilde() {
        let p6 = HeckeParams::new(6).unwrap();
        assert_eq!(p6.r(), 3);
        assert_eq!(p6.tilde(), Some(3));
        assert_eq!(p6.negate(3), 3);
        let p7 = HeckeParams::new(7).unwrap();
        assert_eq!(p7.parity(), Parity::Odd);
        assert_eq!(p7.tilde(), None);
    }
}
