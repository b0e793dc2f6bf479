use linshap_core::oracle::{shapley_permutation_form, shapley_subset_form, ExplicitGame};
use linshap_core::Rational;
use proptest::prelude::*;

fn explicit_game(max_players: usize) -> impl Strategy<Value = ExplicitGame> {
    (1..=max_players).prop_flat_map(|n| {
        prop::collection::vec(-30i64..=30, (1 << n) - 1).prop_map(move |tail| {
            let mut values = vec![0];
            values.extend(tail);
            ExplicitGame::new(n, values).unwrap()
        })
    })
}

fn swap_bits(mask: u32, i: usize, j: usize) -> u32 {
    let bi = mask >> i & 1;
    let bj = mask >> j & 1;
    if bi == bj {
        mask
    } else {
        mask ^ (1 << i) ^ (1 << j)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn both_forms_agree_and_are_efficient(game in explicit_game(7)) {
        let subset = shapley_subset_form(&game).unwrap();
        let permutation = shapley_permutation_form(&game).unwrap();
        prop_assert_eq!(&subset, &permutation);
        let total: Rational = subset.iter().sum();
        prop_assert_eq!(total, Rational::from_integer(game.grand_coalition_value()));
    }

    #[test]
    fn symmetric_players_get_equal_shares(n in 2usize..=6, values in prop::collection::vec(-10i64..=10, 7)) {
        // Worth depends on size and on whether player 0 is present, so
        // players 1 and 2 are interchangeable.
        let game = ExplicitGame::from_fn(n, |mask| {
            if mask == 0 { 0 } else { values[mask.count_ones() as usize] + if mask & 1 == 1 { 3 } else { 0 } }
        }).unwrap();
        let sh = shapley_subset_form(&game).unwrap();
        for i in 0..n {
            for j in (i + 1)..n {
                let interchangeable = (0..1u32 << n).all(|m| game.value(m) == game.value(swap_bits(m, i, j)));
                if interchangeable {
                    prop_assert_eq!(&sh[i], &sh[j]);
                }
            }
        }
    }

    #[test]
    fn null_players_get_zero(game in explicit_game(6), dummy_bit in 0usize..6) {
        let n = game.players();
        let null = dummy_bit % n;
        // Collapse the null player's membership away.
        let padded = ExplicitGame::from_fn(n, |mask| game.value(mask & !(1 << null))).unwrap();
        let sh = shapley_subset_form(&padded).unwrap();
        prop_assert_eq!(&sh[null], &Rational::zero());
        prop_assert_eq!(shapley_permutation_form(&padded).unwrap(), sh);
    }
}
