//! Brute-force Shapley values straight from the definitions, used as ground
//! truth for the engines. Shares nothing with the engine code beyond
//! [`Rational`] and the families' characteristic functions.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::exactpoly::Rational;
use crate::game::GameFamily;

/// Largest player count for the subset form (`2^n` coalitions).
pub const SUBSET_FORM_MAX_PLAYERS: usize = 20;
/// Largest player count for the permutation form (`n!` orderings).
pub const PERMUTATION_FORM_MAX_PLAYERS: usize = 9;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleError {
    TooLarge { players: usize, max: usize },
    /// `values` has the wrong length or `v(∅) != 0`.
    Malformed,
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::TooLarge { players, max } => {
                write!(f, "oracle infeasible: {players} players (at most {max})")
            }
            OracleError::Malformed => f.write_str("expected 2^n coalition values with v(empty) = 0"),
        }
    }
}

impl core::error::Error for OracleError {}

/// A game given by its full characteristic function. Coalition `S` is the
/// bitmask with bit `j` set for each member `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplicitGame {
    players: usize,
    values: Vec<i64>,
}

impl ExplicitGame {
    pub fn new(players: usize, values: Vec<i64>) -> Result<Self, OracleError> {
        if players > SUBSET_FORM_MAX_PLAYERS {
            return Err(OracleError::TooLarge {
                players,
                max: SUBSET_FORM_MAX_PLAYERS,
            });
        }
        if values.len() != 1 << players || values[0] != 0 {
            return Err(OracleError::Malformed);
        }
        Ok(ExplicitGame { players, values })
    }

    pub fn from_fn(players: usize, v: impl Fn(u32) -> i64) -> Result<Self, OracleError> {
        if players > SUBSET_FORM_MAX_PLAYERS {
            return Err(OracleError::TooLarge {
                players,
                max: SUBSET_FORM_MAX_PLAYERS,
            });
        }
        Self::new(players, (0..1u32 << players).map(v).collect())
    }

    pub fn players(&self) -> usize {
        self.players
    }

    pub fn value(&self, coalition: u32) -> i64 {
        self.values[coalition as usize]
    }

    pub fn grand_coalition_value(&self) -> i64 {
        self.value((1u32 << self.players) - 1)
    }
}

/// Tabulates a family's characteristic function over every coalition.
pub fn materialize(family: &GameFamily) -> Result<ExplicitGame, OracleError> {
    let players = family.players();
    ExplicitGame::from_fn(players, |mask| family.coalition_value_mask(u64::from(mask)))
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `Sh(i) = Σ_{S ⊆ N∖i} |S|!(n-|S|-1)!/n! · (v(S∪i) - v(S))`.
pub fn shapley_subset_form(game: &ExplicitGame) -> Result<Vec<Rational>, OracleError> {
    let n = game.players;
    if n > SUBSET_FORM_MAX_PLAYERS {
        return Err(OracleError::TooLarge {
            players: n,
            max: SUBSET_FORM_MAX_PLAYERS,
        });
    }
    let n_factorial = factorial(n);
    // weight[s] = s!(n-s-1)!/n!
    let weights: Vec<Rational> = (0..n)
        .map(|s| Rational::new(factorial(s) * factorial(n - s - 1), n_factorial.clone()))
        .collect();

    let values = (0..n)
        .map(|i| {
            let bit = 1u32 << i;
            let mut value = Rational::zero();
            for coalition in 0..(1u32 << n) {
                if coalition & bit != 0 {
                    continue;
                }
                let marginal = game.value(coalition | bit) - game.value(coalition);
                if marginal != 0 {
                    let size = coalition.count_ones() as usize;
                    value += &(&weights[size] * &Rational::from_integer(marginal));
                }
            }
            value
        })
        .collect();
    Ok(values)
}

/// `Sh(i) = (1/n!) Σ_π (v(Pre_π(i) ∪ i) - v(Pre_π(i)))`, enumerating every
/// ordering with Heap's algorithm.
pub fn shapley_permutation_form(game: &ExplicitGame) -> Result<Vec<Rational>, OracleError> {
    let n = game.players;
    if n > PERMUTATION_FORM_MAX_PLAYERS {
        return Err(OracleError::TooLarge {
            players: n,
            max: PERMUTATION_FORM_MAX_PLAYERS,
        });
    }
    let mut sums = alloc::vec![0i128; n];
    let mut order: Vec<usize> = (0..n).collect();
    let mut accumulate = |order: &[usize]| {
        let mut coalition = 0u32;
        for &i in order {
            let joined = coalition | (1 << i);
            sums[i] += i128::from(game.value(joined) - game.value(coalition));
            coalition = joined;
        }
    };

    accumulate(&order);
    let mut counters = alloc::vec![0usize; n];
    let mut k = 1;
    while k < n {
        if counters[k] < k {
            if k % 2 == 0 {
                order.swap(0, k);
            } else {
                order.swap(counters[k], k);
            }
            accumulate(&order);
            counters[k] += 1;
            k = 1;
        } else {
            counters[k] = 0;
            k += 1;
        }
    }

    let n_factorial = factorial(n);
    Ok(sums
        .into_iter()
        .map(|s| Rational::new(BigInt::from(s), n_factorial.clone()))
        .collect())
}
