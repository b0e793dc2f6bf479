use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::exactpoly::{IntPoly, Rational};
use crate::game::GeneralizedGame;

use super::{check_player, DpRow, Engine, EngineError, ShapleyResult};

fn next_state(game: &GeneralizedGame, state: u64, weight: u64) -> Result<u64, EngineError> {
    game.next_state(state, weight)
        .ok_or(EngineError::StateOutOfBounds {
            state,
            weight,
            bound: game.state_bound(),
        })
}

/// Absorbs one player into a generalized DP row: the mass at `k` stays with
/// factor `1 - x` and moves to `h(k, weight)` with factor `x`.
pub fn generalized_forward_step(
    row: &DpRow,
    game: &GeneralizedGame,
    weight: u64,
) -> Result<DpRow, EngineError> {
    let mut next: BTreeMap<u64, IntPoly> = BTreeMap::new();
    for (k, p) in row.iter() {
        let target = next_state(game, k, weight)?;
        if target == k {
            next.entry(k).or_default().add_assign_poly(p);
        } else {
            next.entry(k).or_default().add_assign_poly(&p.mul_one_minus_x());
            next.entry(target).or_default().add_assign_poly(&p.mul_x());
        }
    }
    next.retain(|_, p| !p.is_zero());
    Ok(DpRow::from_parts(next, row.player_count() + 1))
}

/// `Σ_k (value(h(k, weight)) - value(k)) · row[k]`.
fn expected_marginal(row: &DpRow, game: &GeneralizedGame, weight: u64) -> Result<IntPoly, EngineError> {
    let mut sum = IntPoly::zero();
    for (k, p) in row.iter() {
        let joined = next_state(game, k, weight)?;
        let marginal = BigInt::from(game.state_value(joined)) - BigInt::from(game.state_value(k));
        sum.add_scaled(p, &marginal);
    }
    Ok(sum)
}

impl Engine {
    /// Generalized forward pass over all players except `excluded`.
    fn generalized_pass(
        &self,
        game: &GeneralizedGame,
        excluded: Option<usize>,
    ) -> Result<DpRow, EngineError> {
        self.check_capacity(game.players(), game.state_bound())?;
        let mut row = DpRow::starting_at(game.empty_state());
        for (j, &w) in game.weights().iter().enumerate() {
            if Some(j) != excluded {
                row = generalized_forward_step(&row, game, w)?;
            }
        }
        Ok(row)
    }

    /// Final generalized row over every player.
    pub fn generalized_forward(&self, game: &GeneralizedGame) -> Result<DpRow, EngineError> {
        self.generalized_pass(game, None)
    }

    /// Distribution of the state of a random coalition of everyone but
    /// `player`, by a fresh forward pass.
    pub fn generalized_exclusion_row(
        &self,
        game: &GeneralizedGame,
        player: usize,
    ) -> Result<DpRow, EngineError> {
        check_player(player, game.players())?;
        self.generalized_pass(game, Some(player))
    }

    pub fn shapley_generalized_single(
        &self,
        game: &GeneralizedGame,
        player: usize,
    ) -> Result<Rational, EngineError> {
        let row = self.generalized_exclusion_row(game, player)?;
        Ok(expected_marginal(&row, game, game.weights()[player])?.integrate_unit())
    }

    /// All Shapley values with one forward pass per player. No reversion is
    /// attempted because a general update has no inverse.
    pub fn shapley_all_generalized(&self, game: &GeneralizedGame) -> Result<ShapleyResult, EngineError> {
        let values = (0..game.players())
            .map(|i| self.shapley_generalized_single(game, i))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ShapleyResult::new(values))
    }
}
