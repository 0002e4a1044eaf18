use kaluza::linops::{LinearStage, Permutation32};
use kaluza::{
    build_mul_matrix, build_pipeline, mul_dense, mul_fast, mul_naive, Direction, KaluzaNumber,
    OpCount, Uncounted, DIM,
};
use nalgebra::DVector;
use proptest::prelude::*;

const BOUND: i64 = 1 << 20;

fn integer_number() -> impl Strategy<Value = KaluzaNumber> {
    prop::array::uniform32(-BOUND..=BOUND).prop_map(|c| KaluzaNumber::new(c.map(|v| v as f64)))
}

fn real_number() -> impl Strategy<Value = KaluzaNumber> {
    prop::array::uniform32(-1.0f64..1.0).prop_map(KaluzaNumber::new)
}

fn small_integers(len: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec((-1000i32..=1000).prop_map(f64::from), len)
}

fn permutation() -> impl Strategy<Value = Permutation32> {
    Just((0..DIM as u8).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation32::new(v.try_into().unwrap()).unwrap())
}

fn stage() -> impl Strategy<Value = LinearStage> {
    prop_oneof![
        permutation().prop_map(LinearStage::Permute),
        (1usize..=16).prop_map(|pairs| LinearStage::HadamardPairs { pairs }),
        (1usize..=16, 1usize..=16)
            .prop_map(|(pairs, copies)| LinearStage::Replicate { pairs, copies }),
        small_integers(64).prop_map(LinearStage::Diagonal),
        (1usize..=16, 1usize..=32).prop_map(|(arity, width)| LinearStage::FanIn { arity, width }),
    ]
}

fn relative_error(x: &KaluzaNumber, reference: &KaluzaNumber) -> f64 {
    (*x - *reference).max_abs() / reference.max_abs().max(f64::MIN_POSITIVE)
}

proptest! {
    #[test]
    fn fast_equals_naive_on_integers(a in integer_number(), b in integer_number()) {
        let pipeline = build_pipeline(&b, &mut Uncounted).unwrap();
        prop_assert_eq!(mul_fast(&a, &pipeline, &mut Uncounted), mul_naive(&a, &b, &mut Uncounted));
    }

    #[test]
    fn fast_close_to_naive_on_reals(a in real_number(), b in real_number()) {
        let pipeline = build_pipeline(&b, &mut Uncounted).unwrap();
        let fast = mul_fast(&a, &pipeline, &mut Uncounted);
        prop_assert!(relative_error(&fast, &mul_naive(&a, &b, &mut Uncounted)) <= 1e-12);
    }

    #[test]
    fn dense_matrix_agrees_with_naive(a in integer_number(), b in integer_number()) {
        prop_assert_eq!(
            mul_dense(&a, &build_mul_matrix(&b), &mut Uncounted),
            mul_naive(&a, &b, &mut Uncounted)
        );
    }

    #[test]
    fn bilinear(a in integer_number(), a2 in integer_number(), b in integer_number(), b2 in integer_number()) {
        let m = |x: &KaluzaNumber, y: &KaluzaNumber| mul_naive(x, y, &mut Uncounted);
        prop_assert_eq!(m(&(a + a2), &b), m(&a, &b) + m(&a2, &b));
        prop_assert_eq!(m(&a, &(b + b2)), m(&a, &b) + m(&a, &b2));
        prop_assert_eq!(m(&a.scale(-4.0), &b), m(&a, &b).scale(-4.0));
        prop_assert_eq!(m(&a, &b.scale(0.5)), m(&a, &b).scale(0.5));
    }

    #[test]
    fn one_is_two_sided_identity(x in real_number(), n in integer_number()) {
        let one = KaluzaNumber::one();
        prop_assert_eq!(mul_naive(&one, &x, &mut Uncounted), x);
        prop_assert_eq!(mul_naive(&x, &one, &mut Uncounted), x);
        let pipeline = build_pipeline(&one, &mut Uncounted).unwrap();
        // the Hadamard stages round on reals; integers pass through exactly
        prop_assert!(relative_error(&mul_fast(&x, &pipeline, &mut Uncounted), &x) <= 1e-12);
        prop_assert_eq!(mul_fast(&n, &pipeline, &mut Uncounted), n);
    }

    #[test]
    fn zero_propagates(x in real_number()) {
        let zero = KaluzaNumber::zero();
        let pipeline = build_pipeline(&x, &mut Uncounted).unwrap();
        prop_assert_eq!(mul_fast(&zero, &pipeline, &mut Uncounted), zero);
        prop_assert_eq!(mul_naive(&x, &zero, &mut Uncounted), zero);
    }

    #[test]
    fn permutation_round_trip(p in permutation(), x in prop::array::uniform32(-1e6f64..1e6)) {
        let forward = p.apply(&x, Direction::Forward);
        prop_assert_eq!(p.apply(&forward, Direction::Inverse), x);
        prop_assert_eq!(p.inverse().apply(&forward, Direction::Forward), x);
    }

    #[test]
    fn stage_matches_dense(stage in stage(), seed in small_integers(512)) {
        let x = &seed[..stage.input_dim()];
        let applied = stage.apply(x, &mut Uncounted).unwrap();
        let dense = stage.materialize() * DVector::from_column_slice(x);
        prop_assert_eq!(applied.as_slice(), dense.as_slice());
    }

    #[test]
    fn pipeline_reuse_counts(b in integer_number(), k in 1u64..8) {
        let mut count = OpCount::default();
        let pipeline = build_pipeline(&b, &mut count).unwrap();
        for i in 0..k {
            mul_fast(&KaluzaNumber::basis(i as usize), &pipeline, &mut count);
        }
        prop_assert_eq!(count, OpCount::new(512 * k, 32 + 544 * k));
    }

    #[test]
    fn display_parse_round_trip(x in prop::array::uniform32(any::<f64>().prop_filter("finite", |v| v.is_finite()))) {
        let x = KaluzaNumber::new(x);
        let parsed: KaluzaNumber = x.to_string().parse().unwrap();
        prop_assert_eq!(parsed.coeffs().map(f64::to_bits), x.coeffs().map(|v| (v + 0.0).to_bits()));
    }
}
