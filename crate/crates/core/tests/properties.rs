use hecke::asymptotics::{estimate_count, modular_closed_form, phi_cdf};
use hecke::counting::{dp_weight_counts, syllable_alphabet, Setting, SymmetricClassCounter};
use hecke::group::{cyclic_reduce, is_reciprocal, ClassKey, HeckeParams};
use hecke::recip::{
    classify_shapes, enumerate_reciprocal_classes, enumerate_reciprocal_classes_sharded,
    gen_normal_form, structure_check, ExponentTuple, NormalFormSpec, ReciprocalType, Side,
};
use num_bigint::BigUint;
use num_rational::BigRational;
use proptest::prelude::*;

fn params() -> impl Strategy<Value = HeckeParams> {
    (3u32..=12).prop_map(|p| HeckeParams::new(p).unwrap())
}

fn tuple_for(params: &HeckeParams, picks: &[usize]) -> ExponentTuple {
    let alphabet = params.alphabet();
    let ks = picks.iter().map(|&i| alphabet[i % alphabet.len()]).collect();
    ExponentTuple::new(ks, params).unwrap()
}

fn key_of(spec: NormalFormSpec<'_>, params: &HeckeParams) -> ClassKey {
    let nf = gen_normal_form(spec, params).unwrap();
    cyclic_reduce(&nf.word, params)
        .unwrap()
        .0
        .canonical_form()
}

proptest! {
    #[test]
    fn normal_forms_are_reciprocal_and_have_their_shape(
        params in params(),
        picks in prop::collection::vec(0usize..64, 1..5),
        mixed_right in any::<bool>(),
    ) {
        let t = tuple_for(&params, &picks);
        let mut specs = vec![(NormalFormSpec::Symmetric(&t), ReciprocalType::Symmetric)];
        if params.is_even() {
            let side = if mixed_right { Side::Right } else { Side::Left };
            specs.push((NormalFormSpec::PReciprocal(&t), ReciprocalType::PReciprocal));
            specs.push((NormalFormSpec::Mixed(&t, side), ReciprocalType::MixedNoPower));
        }
        for (spec, rtype) in specs {
            let nf = gen_normal_form(spec, &params).unwrap();
            prop_assert!(is_reciprocal(&nf.word, &params).unwrap());
            let key = key_of(spec, &params);
            let c = classify_shapes(&key, &params).unwrap();
            prop_assert!(c.shapes.contains(rtype) || c.shapes.power);
        }
    }

    #[test]
    fn mirrored_tuple_gives_same_class(
        params in params(),
        picks in prop::collection::vec(0usize..64, 1..6),
    ) {
        let t = tuple_for(&params, &picks);
        let m = t.negated_reversed(&params);
        prop_assert_eq!(
            key_of(NormalFormSpec::Symmetric(&t), &params),
            key_of(NormalFormSpec::Symmetric(&m), &params)
        );
    }

    #[test]
    fn odd_structure_has_two_symmetric_rotations_each_way(
        p in (1u32..=5).prop_map(|r| 2 * r + 1),
        picks in prop::collection::vec(0usize..64, 1..6),
    ) {
        let params = HeckeParams::new(p).unwrap();
        let t = tuple_for(&params, &picks);
        let key = key_of(NormalFormSpec::Symmetric(&t), &params);
        let report = structure_check(&key, &params).unwrap();
        prop_assert_eq!(report.symmetric, [2, 2]);
    }

    #[test]
    fn weight_table_satisfies_recurrence(
        params in params(),
        setting in prop::sample::select(Setting::ALL.to_vec()),
        x in 0u32..60,
    ) {
        let Ok(alphabet) = syllable_alphabet(&params, setting) else {
            return Ok(());
        };
        let t = dp_weight_counts::<BigUint>(&alphabet, x);
        prop_assert_eq!(t.at(0), &BigUint::from(1u32));
        for s in 1..=x {
            let rhs: BigUint = alphabet
                .entries()
                .iter()
                .filter(|&&(w, _)| w <= s)
                .map(|&(w, m)| t.at(s - w) * m)
                .sum();
            prop_assert_eq!(t.at(s), &rhs);
        }
    }

    #[test]
    fn sharded_enumeration_is_identical(
        p in 3u32..=8,
        x in 4u32..=13,
        shards in 1usize..6,
    ) {
        let params = HeckeParams::new(p).unwrap();
        prop_assert_eq!(
            enumerate_reciprocal_classes_sharded(&params, x, shards).unwrap(),
            enumerate_reciprocal_classes(&params, x).unwrap()
        );
    }

    #[test]
    fn estimate_terms_sum_to_total(
        p in 3u32..=15,
        x in 4u32..400,
    ) {
        let params = HeckeParams::new(p).unwrap();
        let setting = Setting::symmetric_for(&params);
        let e = estimate_count::<f64>(&params, setting, x).unwrap();
        let linear: f64 = e.terms.iter().map(|t| t.ln_value.exp()).sum();
        if linear.is_finite() && linear > 0.0 {
            prop_assert!((linear.log10() / e.log10_value - 1.0).abs() < 1e-9
                || (linear.log10() - e.log10_value).abs() < 1e-12);
        }
        let zs: Vec<f64> = e.terms.iter().filter_map(|t| t.z).collect();
        for w in zs.windows(2) {
            prop_assert!(w[1] < w[0]);
        }
    }

    #[test]
    fn phi_is_a_cdf(a in -40.0f64..10.0, b in -40.0f64..10.0) {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        prop_assert!((0.0..=1.0).contains(&phi_cdf(lo)));
        prop_assert!(phi_cdf(lo) <= phi_cdf(hi));
    }
}

#[test]
fn modular_estimate_is_exact() {
    let params = HeckeParams::new(3).unwrap();
    let counter = SymmetricClassCounter::new(&params, 64).unwrap();
    for x in 4..=64 {
        let e = estimate_count::<f64>(&params, Setting::Thm1, x).unwrap();
        assert!(e.is_exact());
        let closed = modular_closed_form(x);
        assert_eq!(
            e.full_part,
            BigRational::from_integer(closed.clone().into())
        );
        assert_eq!(counter.count(x).unwrap(), closed);
    }
}

#[test]
fn shortest_power_classes() {
    for p in [4u32, 6, 8] {
        let params = HeckeParams::new(p).unwrap();
        let r = params.r();
        let recs = enumerate_reciprocal_classes(&params, 4 * (r + 1)).unwrap();
        let lengths: Vec<u32> = recs
            .iter()
            .filter(|c| c.rtype == ReciprocalType::PowerOfIotaGammaTilde)
            .map(|c| c.length)
            .collect();
        let expected: Vec<u32> = (1..=4).map(|k| k * (r + 1)).collect();
        assert_eq!(lengths, expected, "p={p}");
    }
}
