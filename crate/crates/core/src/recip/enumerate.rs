use std::collections::BTreeSet;
use std::thread;

use super::normal_form::tuple_weight;
use super::shape::{classify_shapes, ReciprocalType, Shapes};
use super::ExponentTuple;
use crate::error::Result;
use crate::group::{ClassKey, CyclicWord, HeckeParams};

/// One reciprocal conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReciprocalClassRecord {
    pub key: ClassKey,
    pub length: u32,
    pub rtype: ReciprocalType,
    pub primitive: bool,
    /// Tuple of the labelled normal form, absent for powers of `i g^r`.
    pub tuple: Option<ExponentTuple>,
    pub shapes: Shapes,
}

impl ReciprocalClassRecord {
    /// Classifies an already canonical reciprocal class.
    pub fn from_key(key: ClassKey, params: &HeckeParams) -> Result<Self> {
        let c = classify_shapes(&key, params)?;
        let (_, power) = key.cyclic_word().primitive_root()?;
        Ok(Self {
            length: key.word_length(),
            rtype: c.rtype,
            primitive: power == 1,
            tuple: c.tuple,
            shapes: c.shapes,
            key,
        })
    }
}

/// Builds records for a set of keys, sorted by `(length, key)`.
pub(crate) fn records_from_keys(
    keys: impl IntoIterator<Item = ClassKey>,
    params: &HeckeParams,
) -> Result<Vec<ReciprocalClassRecord>> {
    let mut out = keys
        .into_iter()
        .map(|k| ReciprocalClassRecord::from_key(k, params))
        .collect::<Result<Vec<_>>>()?;
    out.sort_by(|a, b| (a.length, &a.key).cmp(&(b.length, &b.key)));
    Ok(out)
}

/// All reciprocal classes of word length at most `x`, built from the
/// normal forms and deduplicated by class key.
pub fn enumerate_reciprocal_classes(
    params: &HeckeParams,
    x: u32,
) -> Result<Vec<ReciprocalClassRecord>> {
    enumerate_reciprocal_classes_sharded(params, x, 1)
}

/// Same as [`enumerate_reciprocal_classes`], splitting the tuple search by
/// first exponent over `shards` threads. The result does not depend on
/// `shards`.
pub fn enumerate_reciprocal_classes_sharded(
    params: &HeckeParams,
    x: u32,
    shards: usize,
) -> Result<Vec<ReciprocalClassRecord>> {
    let shards = shards.max(1);
    let keys: BTreeSet<ClassKey> = if shards == 1 {
        shard_keys(params, x, 0, 1)
    } else {
        thread::scope(|s| {
            let handles: Vec<_> = (0..shards)
                .map(|i| s.spawn(move || shard_keys(params, x, i, shards)))
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("enumeration shard panicked"))
                .collect()
        })
    };
    records_from_keys(keys, params)
}

fn shard_keys(params: &HeckeParams, x: u32, shard: usize, shards: usize) -> BTreeSet<ClassKey> {
    let alphabet = params.alphabet();
    let mut keys = BTreeSet::new();
    let mut insert = |syllables: &[i32]| {
        let key = CyclicWord::from_syllables(syllables).canonical_form();
        if key.word_length() <= x {
            keys.insert(key);
        }
    };
    let mirror = |ks: &[i32]| ks.iter().rev().map(|&k| params.negate(k)).collect::<Vec<_>>();

    for_each_tuple(&alphabet, x, shard, shards, |ks| {
        let mut c = ks.to_vec();
        c.extend(mirror(ks));
        insert(&c);
    });

    let Some(t) = params.tilde() else {
        return keys;
    };
    let pivot = params.r() + 1;
    if x >= 2 * pivot {
        for_each_tuple(&alphabet, x - 2 * pivot, shard, shards, |ks| {
            let mut c = vec![t];
            c.extend_from_slice(ks);
            c.push(t);
            c.extend(mirror(ks));
            insert(&c);
        });
    }
    if x >= pivot {
        for_each_tuple(&alphabet, x - pivot, shard, shards, |ks| {
            let mut c = vec![t];
            c.extend_from_slice(ks);
            c.extend(mirror(ks));
            insert(&c);
            // right-pivot form `(k, r, -rev k)`
            let mut c = ks.to_vec();
            c.push(t);
            c.extend(mirror(ks));
            insert(&c);
        });
    }
    if shard == 0 {
        for k in 1..=(x / pivot) {
            insert(&vec![t; k as usize]);
        }
    }
    keys
}

/// Calls `f` on every tuple with `tuple_weight <= budget` whose first
/// exponent index is `shard` modulo `shards`, graded by length and then
/// lexicographic in alphabet order.
fn for_each_tuple(
    alphabet: &[i32],
    budget: u32,
    shard: usize,
    shards: usize,
    mut f: impl FnMut(&[i32]),
) {
    let min_weight = 4;
    let max_len = (budget / min_weight) as usize;
    let mut tuple = Vec::with_capacity(max_len);
    for n in 1..=max_len {
        for (i, &k0) in alphabet.iter().enumerate() {
            if i % shards != shard {
                continue;
            }
            tuple.clear();
            tuple.push(k0);
            fill(alphabet, budget, n, &mut tuple, &mut f);
        }
    }
}

fn fill(alphabet: &[i32], budget: u32, n: usize, tuple: &mut Vec<i32>, f: &mut impl FnMut(&[i32])) {
    let used = tuple_weight(tuple);
    let remaining = (n - tuple.len()) as u32;
    if used + 4 * remaining > budget {
        return;
    }
    if tuple.len() == n {
        f(tuple);
        return;
    }
    for &k in alphabet {
        tuple.push(k);
        fill(alphabet, budget, n, tuple, f);
        tuple.pop();
    }
}

/// Number of tuples of `tuple_weight <= x` over the full alphabet.
pub fn symmetric_tuple_count(params: &HeckeParams, x: u32) -> u64 {
    let mut count = 0;
    for_each_tuple(&params.alphabet(), x, 0, 1, |_| count += 1);
    count
}
