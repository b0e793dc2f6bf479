use linshap_core::engine::{airport_row_closed_form, dp_forward_step, dp_revert_step};
use linshap_core::oracle::{materialize, shapley_subset_form};
use linshap_core::{BigInt, DpRow, Engine, GameFamily, IntPoly, LinearGame, Rational};
use proptest::prelude::*;

fn poly_strategy() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-50i64..=50, 0..8).prop_map(|c| IntPoly::from_i64s(&c))
}

fn unit_rational() -> impl Strategy<Value = Rational> {
    (1i64..=1000).prop_flat_map(|d| (0..=d).prop_map(move |n| Rational::new(n, d)))
}

fn any_rational() -> impl Strategy<Value = Rational> {
    (-1000i64..=1000, 1i64..=1000).prop_map(|(n, d)| Rational::new(n, d))
}

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, k| acc * k)
}

fn binomial(n: u64, k: u64) -> BigInt {
    factorial(n) / (factorial(k) * factorial(n - k))
}

fn is_reduced(r: &Rational) -> bool {
    use num_integer::Integer;
    r.denom() > &BigInt::from(0) && r.numer().gcd(r.denom()) == BigInt::from(1)
}

#[test]
fn beta_integrals() {
    for a in 0..=12u64 {
        for b in 0..=12u64 {
            // x^a (1-x)^b expanded by the binomial theorem.
            let mut coeffs = vec![BigInt::from(0); (a + b + 1) as usize];
            for s in 0..=b {
                let sign = if s % 2 == 0 { 1 } else { -1 };
                coeffs[(a + s) as usize] = binomial(b, s) * sign;
            }
            let poly = IntPoly::from_coeffs(coeffs);
            let expected = Rational::new(factorial(a) * factorial(b), factorial(a + b + 1));
            assert_eq!(poly.integrate_unit(), expected, "a={a} b={b}");
        }
    }
}

fn weights_strategy(max_len: usize) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(0u64..=12, 0..=max_len)
}

fn linear_game_strategy() -> impl Strategy<Value = LinearGame> {
    prop::collection::vec(0u64..=12, 1..=8).prop_flat_map(|weights| {
        let total: u64 = weights.iter().sum();
        prop::collection::vec(-20i64..=20, total as usize).prop_map(move |tail| {
            let mut values = vec![0];
            values.extend(tail);
            LinearGame::new(weights.clone(), values).unwrap()
        })
    })
}

fn check_row(row: &DpRow) {
    assert_eq!(row.total(), IntPoly::one(), "row must sum to one");
    let bound = num_traits::pow(BigInt::from(3), row.player_count());
    for (k, p) in row.iter() {
        assert!(!p.is_zero(), "stored zero at {k}");
        assert!(p.degree().unwrap() <= row.player_count());
        assert!(p.max_abs_coeff() <= bound, "coefficient bound violated at {k}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn mul_then_div_round_trip(p in poly_strategy()) {
        prop_assert_eq!(p.mul_one_minus_x().div_one_minus_x().unwrap(), p);
    }

    #[test]
    fn div_then_mul_round_trip(p in poly_strategy()) {
        let sum = p.coeff_sum();
        let zero_sum = &p - &IntPoly::from_coeffs(vec![sum]);
        prop_assert_eq!(zero_sum.div_one_minus_x().unwrap().mul_one_minus_x(), zero_sum);
    }

    #[test]
    fn divisibility_iff_zero_coefficient_sum(p in poly_strategy()) {
        let zero = p.coeff_sum() == BigInt::from(0);
        prop_assert_eq!(p.div_one_minus_x().is_ok(), zero);
    }

    #[test]
    fn eval_is_additive(p in poly_strategy(), q in poly_strategy(), xs in prop::collection::vec(any_rational(), 20)) {
        for x in &xs {
            prop_assert_eq!((&p + &q).eval(x), p.eval(x) + q.eval(x));
        }
    }

    #[test]
    fn rationals_stay_reduced(p in poly_strategy(), x in any_rational()) {
        prop_assert!(is_reduced(&p.integrate_unit()));
        prop_assert!(is_reduced(&p.eval(&x)));
    }

    #[test]
    fn forward_rows_are_probability_rows(weights in weights_strategy(8), xs in prop::collection::vec(unit_rational(), 20)) {
        let mut row = DpRow::empty();
        for &w in &weights {
            row = dp_forward_step(&row, w);
            check_row(&row);
        }
        for (_, p) in row.iter() {
            for x in &xs {
                let v = p.eval(x);
                prop_assert!(v >= Rational::zero() && v <= Rational::one());
            }
        }
    }

    #[test]
    fn order_independence(weights in weights_strategy(8), seed in any::<u64>()) {
        let engine = Engine::new();
        let mut shuffled = weights.clone();
        // Deterministic Fisher-Yates driven by the seed.
        let mut state = seed | 1;
        for i in (1..shuffled.len()).rev() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            shuffled.swap(i, (state % (i as u64 + 1)) as usize);
        }
        prop_assert_eq!(engine.dp_forward(&weights).unwrap(), engine.dp_forward(&shuffled).unwrap());
    }

    #[test]
    fn forward_revert_round_trips(weights in weights_strategy(7), extra in 0u64..=12) {
        let row = Engine::new().dp_forward(&weights).unwrap();
        let grown = dp_forward_step(&row, extra);
        prop_assert_eq!(&dp_revert_step(&grown, extra).unwrap(), &row);
        for &w in &weights {
            let reverted = dp_revert_step(&row, w).unwrap();
            check_row(&reverted);
            prop_assert_eq!(&dp_forward_step(&reverted, w), &row);
        }
    }

    #[test]
    fn engines_agree_exactly(game in linear_game_strategy()) {
        let engine = Engine::new();
        let all = engine.shapley_all(&game).unwrap();
        let single: Vec<Rational> = (0..game.players()).map(|i| engine.shapley_single(&game, i).unwrap()).collect();
        prop_assert_eq!(all.values(), single.as_slice());
        let generalized = engine.shapley_all_generalized(&game.clone().into()).unwrap();
        prop_assert_eq!(&generalized, &all);
        let grand = Rational::from_integer(*game.values().last().unwrap());
        prop_assert_eq!(all.total(), &grand);
    }

    #[test]
    fn linear_engine_matches_oracle(game in linear_game_strategy()) {
        let table = GameFamily::ExplicitTable {
            weights: game.weights().to_vec(),
            values: game.values().to_vec(),
        };
        let oracle = shapley_subset_form(&materialize(&table).unwrap()).unwrap();
        let engine = Engine::new().shapley_all(&game).unwrap();
        prop_assert_eq!(engine.values(), oracle.as_slice());
    }

    #[test]
    fn airport_closed_form_matches_dp(costs in prop::collection::vec(0u64..=12, 1..=8)) {
        let fam = GameFamily::Airport { costs: costs.clone() };
        let game = fam.to_generalized().unwrap();
        let engine = Engine::new();
        for i in 0..costs.len() {
            let dp = engine.generalized_exclusion_row(&game, i).unwrap();
            check_row(&dp);
            prop_assert_eq!(airport_row_closed_form(&costs, i).unwrap(), dp);
        }
        let values = engine.shapley_all_generalized(&game).unwrap();
        let oracle = shapley_subset_form(&materialize(&fam).unwrap()).unwrap();
        prop_assert_eq!(values.values(), oracle.as_slice());
        prop_assert_eq!(values.total(), &Rational::from_integer(fam.grand_coalition_value()));
    }
}

#[test]
fn oracle_agreement_up_to_ten_players() {
    // Deterministic larger instances (n = 9, 10) that proptest does not reach.
    let fam = GameFamily::Bankruptcy {
        liabilities: vec![4, 1, 9, 3, 7, 2, 8, 5, 6, 3],
        assets: 25,
    };
    let oracle = shapley_subset_form(&materialize(&fam).unwrap()).unwrap();
    let engine = Engine::new();
    assert_eq!(engine.shapley_all(&fam.to_linear().unwrap()).unwrap().values(), oracle.as_slice());
    let voting = GameFamily::WeightedVoting {
        weights: vec![9, 7, 5, 5, 3, 2, 2, 1, 1],
        quota: 18,
    };
    let oracle = shapley_subset_form(&materialize(&voting).unwrap()).unwrap();
    assert_eq!(engine.shapley_all(&voting.to_linear().unwrap()).unwrap().values(), oracle.as_slice());
}
