use super::WeightAlphabet;
use crate::scalar::Count;

/// Number of tuples over a weight alphabet by total weight, overall and
/// split by tuple length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightCountTable<C> {
    x: u32,
    totals: Vec<C>,
    /// `layers[n][s]`: tuples of length `n` and weight exactly `s`.
    layers: Vec<Vec<C>>,
}

impl<C: Count> WeightCountTable<C> {
    pub fn bound(&self) -> u32 {
        self.x
    }

    /// Tuples of weight exactly `s` (the empty tuple at `s = 0`).
    pub fn at(&self, s: u32) -> &C {
        &self.totals[s as usize]
    }

    pub fn totals(&self) -> &[C] {
        &self.totals
    }

    /// Longest tuple length with a nonzero layer.
    pub fn max_len(&self) -> usize {
        self.layers.len() - 1
    }

    /// Tuples of length `n` by weight; all zero when `n > max_len`.
    pub fn layer(&self, n: usize) -> Option<&[C]> {
        self.layers.get(n).map(Vec::as_slice)
    }

    /// Tuples of length `n` and weight exactly `s`.
    pub fn at_len(&self, n: usize, s: u32) -> C {
        self.layers
            .get(n)
            .and_then(|l| l.get(s as usize))
            .cloned()
            .unwrap_or_else(C::zero)
    }

    /// Nonempty tuples of weight at most `s`.
    pub fn cumulative(&self, s: u32) -> C {
        self.totals[1..=s.min(self.x) as usize]
            .iter()
            .cloned()
            .fold(C::zero(), |a, b| a + b)
    }

    /// Tuples of length `n` and weight at most `s`.
    pub fn cumulative_len(&self, n: usize, s: u32) -> C {
        match self.layers.get(n) {
            Some(l) => l[..=s.min(self.x) as usize]
                .iter()
                .cloned()
                .fold(C::zero(), |a, b| a + b),
            None => C::zero(),
        }
    }
}

fn mult<C: Count>(m: u32) -> C {
    C::from_u32(m).expect("multiplicity fits the count type")
}

/// Fills `T(s) = sum m T(s - w)` for `0 <= s <= x` together with the
/// per-length layers.
pub fn dp_weight_counts<C: Count>(alphabet: &WeightAlphabet, x: u32) -> WeightCountTable<C> {
    let len = x as usize + 1;
    let mut totals = vec![C::zero(); len];
    totals[0] = C::one();
    for s in 1..len {
        let mut acc = C::zero();
        for &(w, m) in alphabet.entries() {
            let w = w as usize;
            if w <= s {
                acc = acc + mult::<C>(m) * totals[s - w].clone();
            }
        }
        totals[s] = acc;
    }

    let max_len = (x / alphabet.min_weight()) as usize;
    let mut layers = Vec::with_capacity(max_len + 1);
    let mut first = vec![C::zero(); len];
    first[0] = C::one();
    layers.push(first);
    for n in 1..=max_len {
        let prev = &layers[n - 1];
        let mut next = vec![C::zero(); len];
        for (s, slot) in next.iter_mut().enumerate() {
            let mut acc = C::zero();
            for &(w, m) in alphabet.entries() {
                let w = w as usize;
                if w <= s {
                    acc = acc + mult::<C>(m) * prev[s - w].clone();
                }
            }
            *slot = acc;
        }
        layers.push(next);
    }
    WeightCountTable { x, totals, layers }
}

/// Nonempty tuples of weight at most `x`.
pub fn count_solutions<C: Count>(alphabet: &WeightAlphabet, x: u32) -> C {
    let len = x as usize + 1;
    let mut totals = vec![C::zero(); len];
    totals[0] = C::one();
    let mut sum = C::zero();
    for s in 1..len {
        let mut acc = C::zero();
        for &(w, m) in alphabet.entries() {
            let w = w as usize;
            if w <= s {
                acc = acc + mult::<C>(m) * totals[s - w].clone();
            }
        }
        sum = sum + acc.clone();
        totals[s] = acc;
    }
    sum
}
