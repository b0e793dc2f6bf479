//! The worked bankruptcy (liabilities 2, 3, 5, 7; assets 9) and airport
//! (costs 1, 5, 5, 7, 7, 10) examples, with every intermediate row checked
//! polynomial by polynomial.

use linshap_core::engine::{airport_row_closed_form, dp_forward_step, dp_revert_step, expected_marginal};
use linshap_core::{DpRow, Engine, GameFamily, IntPoly, LinearGame, Rational};

fn row(entries: &[(u64, &str)], players: usize) -> DpRow {
    DpRow::from_entries(
        entries.iter().map(|&(k, s)| (k, s.parse::<IntPoly>().unwrap())),
        players,
    )
}

fn bankruptcy() -> LinearGame {
    GameFamily::Bankruptcy {
        liabilities: vec![2, 3, 5, 7],
        assets: 9,
    }
    .to_linear()
    .unwrap()
}

fn row_l1() -> DpRow {
    row(&[(0, "-x+1"), (2, "x")], 1)
}

fn row_l2() -> DpRow {
    row(&[(0, "x^2-2x+1"), (2, "-x^2+x"), (3, "-x^2+x"), (5, "x^2")], 2)
}

fn row_l3() -> DpRow {
    row(
        &[
            (0, "-x^3+3x^2-3x+1"),
            (2, "x^3-2x^2+x"),
            (3, "x^3-2x^2+x"),
            (5, "-x^2+x"),
            (7, "-x^3+x^2"),
            (8, "-x^3+x^2"),
            (10, "x^3"),
        ],
        3,
    )
}

fn base_row() -> DpRow {
    row(
        &[
            (0, "x^4-4x^3+6x^2-4x+1"),
            (2, "-x^4+3x^3-3x^2+x"),
            (3, "-x^4+3x^3-3x^2+x"),
            (5, "x^3-2x^2+x"),
            (7, "x^3-2x^2+x"),
            (8, "x^4-2x^3+x^2"),
            (9, "x^4-2x^3+x^2"),
            (10, "-x^3+x^2"),
            (12, "-x^3+x^2"),
            (14, "-x^4+x^3"),
            (15, "-x^4+x^3"),
            (17, "x^4"),
        ],
        4,
    )
}

#[test]
fn forward_rows_of_the_three_player_matrix() {
    let r1 = dp_forward_step(&DpRow::empty(), 2);
    assert_eq!(r1, row_l1());
    let r2 = dp_forward_step(&r1, 3);
    assert_eq!(r2, row_l2());
    let r3 = dp_forward_step(&r2, 5);
    assert_eq!(r3, row_l3());
    assert_eq!(Engine::new().dp_forward(&[2, 3, 5]).unwrap(), row_l3());
}

#[test]
fn product_form_entries_agree_with_expansions() {
    // The unexpanded forms of the same matrix, e.g. x²(1−x) + x(1−x)² at k = 5.
    let x = IntPoly::x();
    let one_minus_x = IntPoly::one().mul_one_minus_x();
    let at_5 = &x.mul_x().mul_one_minus_x() + &x.mul_one_minus_x().mul_one_minus_x();
    assert_eq!(row_l3().get(5), Some(&at_5));
    assert_eq!(row_l3().get(0), Some(&one_minus_x.mul_one_minus_x().mul_one_minus_x()));
}

#[test]
fn marginal_row_and_polynomial_for_the_fourth_player() {
    let game = bankruptcy();
    let marginals: Vec<i64> = (0..=10)
        .map(|k| game.f(k + 7) - game.f(k))
        .collect();
    assert_eq!(marginals, vec![0, 0, 1, 2, 3, 4, 5, 6, 7, 7, 7]);
    let poly = expected_marginal(&row_l3(), &game, 7);
    assert_eq!(poly, "-3x^3+3x^2+7x".parse().unwrap());
    assert_eq!(poly.integrate_unit(), Rational::new(15, 4));
}

#[test]
fn base_polynomials_of_four_players() {
    let base = Engine::new().base_polynomials(&bankruptcy()).unwrap();
    assert_eq!(base, base_row());
    assert_eq!(base.len(), 12);
    assert_eq!(base.get(17), Some(&"x^4".parse().unwrap()));
    for empty in [1, 4, 6, 11, 13, 16] {
        assert!(base.get(empty).is_none(), "k={empty} should be zero");
    }
}

fn exclusion_rows() -> [(u64, DpRow, &'static str); 4] {
    [
        (
            2,
            row(
                &[
                    (0, "-x^3+3x^2-3x+1"),
                    (3, "x^3-2x^2+x"),
                    (5, "x^3-2x^2+x"),
                    (7, "x^3-2x^2+x"),
                    (8, "-x^3+x^2"),
                    (10, "-x^3+x^2"),
                    (12, "-x^3+x^2"),
                    (15, "x^3"),
                ],
                3,
            ),
            "-3x^3+4x^2+x",
        ),
        (
            3,
            row(
                &[
                    (0, "-x^3+3x^2-3x+1"),
                    (2, "x^3-2x^2+x"),
                    (5, "x^3-2x^2+x"),
                    (7, "-x^2+x"),
                    (9, "-x^3+x^2"),
                    (12, "-x^3+x^2"),
                    (14, "x^3"),
                ],
                3,
            ),
            "-3x^3+4x^2+2x",
        ),
        (
            5,
            row(
                &[
                    (0, "-x^3+3x^2-3x+1"),
                    (2, "x^3-2x^2+x"),
                    (3, "x^3-2x^2+x"),
                    (5, "-x^3+x^2"),
                    (7, "x^3-2x^2+x"),
                    (9, "-x^3+x^2"),
                    (10, "-x^3+x^2"),
                    (12, "x^3"),
                ],
                3,
            ),
            "-3x^3+4x^2+4x",
        ),
        (7, row_l3(), "-3x^3+3x^2+7x"),
    ]
}

#[test]
fn reverting_each_player_out_of_the_base_row() {
    let game = bankruptcy();
    for (weight, expected, marginal) in exclusion_rows() {
        let reverted = dp_revert_step(&base_row(), weight).unwrap();
        assert_eq!(reverted, expected, "excluding weight {weight}");
        assert_eq!(
            expected_marginal(&reverted, &game, weight),
            marginal.parse().unwrap(),
            "marginal polynomial for weight {weight}"
        );
    }
}

#[test]
fn marginal_rows_of_the_exclusion_table() {
    let game = bankruptcy();
    let expected: [(u64, [i64; 18]); 4] = [
        (2, [0, 0, 0, 0, 0, 0, 0, 1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2]),
        (3, [0, 0, 0, 0, 0, 0, 1, 2, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3]),
        (5, [0, 0, 0, 0, 1, 2, 3, 4, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5]),
        (7, [0, 0, 1, 2, 3, 4, 5, 6, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7]),
    ];
    for (a, row) in expected {
        for (k, &m) in row.iter().enumerate() {
            let k = k as u64;
            if k + a <= 17 {
                assert_eq!(game.f(k + a) - game.f(k), m, "a={a} k={k}");
            }
        }
    }
}

#[test]
fn bankruptcy_shapley_vector_on_all_paths() {
    let game = bankruptcy();
    let expected = vec![
        Rational::new(13, 12),
        Rational::new(19, 12),
        Rational::new(31, 12),
        Rational::new(15, 4),
    ];
    let engine = Engine::new();
    let single: Vec<Rational> = (0..4).map(|i| engine.shapley_single(&game, i).unwrap()).collect();
    assert_eq!(single, expected);
    assert_eq!(engine.shapley_all(&game).unwrap().values(), expected.as_slice());
    let generalized = GameFamily::Bankruptcy {
        liabilities: vec![2, 3, 5, 7],
        assets: 9,
    }
    .to_generalized()
    .unwrap();
    let result = engine.shapley_all_generalized(&generalized).unwrap();
    assert_eq!(result.values(), expected.as_slice());
    assert_eq!(*result.total(), Rational::from_integer(9));
}

fn airport() -> GameFamily {
    GameFamily::Airport {
        costs: vec![1, 5, 5, 7, 7, 10],
    }
}

fn airport_final_row() -> DpRow {
    row(
        &[
            (0, "1-5x+10x^2-10x^3+5x^4-x^5"),
            (1, "x-4x^2+6x^3-4x^4+x^5"),
            (5, "2x-5x^2+4x^3-x^4"),
            (7, "x-x^2"),
            (10, "x"),
        ],
        5,
    )
}

#[test]
fn airport_matrix_rows_excluding_the_fifth_player() {
    let game = airport().to_generalized().unwrap();
    let intermediate = [
        row(&[(0, "1-x"), (1, "x")], 1),
        row(&[(0, "1-2x+x^2"), (1, "x-x^2"), (5, "x")], 2),
        row(&[(0, "1-3x+3x^2-x^3"), (1, "x-2x^2+x^3"), (5, "2x-x^2")], 3),
        row(
            &[
                (0, "1-4x+6x^2-4x^3+x^4"),
                (1, "x-3x^2+3x^3-x^4"),
                (5, "2x-3x^2+x^3"),
                (7, "x"),
            ],
            4,
        ),
        airport_final_row(),
    ];
    let remaining = [1u64, 5, 5, 7, 10];
    let mut current = DpRow::empty();
    for (weight, expected) in remaining.iter().zip(intermediate) {
        current = linshap_core::engine::generalized_forward_step(&current, &game, *weight).unwrap();
        assert_eq!(current, expected);
    }
    let excluded = Engine::new().generalized_exclusion_row(&game, 4).unwrap();
    assert_eq!(excluded, airport_final_row());
}

#[test]
fn airport_closed_form_row() {
    let costs = [1, 5, 5, 7, 7, 10];
    let closed = airport_row_closed_form(&costs, 4).unwrap();
    assert_eq!(closed, airport_final_row());
    assert_eq!(closed.get(5), Some(&"2x-5x^2+4x^3-x^4".parse().unwrap()));
}
