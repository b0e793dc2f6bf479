use alloc::vec::Vec;

use crate::exactpoly::{IntPoly, Rational};
use crate::game::LinearGame;

use super::{check_player, dp_forward_step, dp_revert_step, DpRow, Engine, EngineError, ShapleyResult};

/// `Σ_k (f(k + weight) - f(k)) · row[k]`: the expected marginal contribution
/// of a player of weight `weight` to a random coalition distributed as `row`.
pub fn expected_marginal(row: &DpRow, game: &LinearGame, weight: u64) -> IntPoly {
    let mut sum = IntPoly::zero();
    for (k, p) in row.iter() {
        sum.add_scaled(p, &game.marginal(k, weight));
    }
    sum
}

impl Engine {
    /// Absorbs `weights` one by one, keeping only the current row. The result
    /// does not depend on the order of `weights`.
    pub fn dp_forward(&self, weights: &[u64]) -> Result<DpRow, EngineError> {
        self.check_weights(weights)?;
        Ok(weights
            .iter()
            .fold(DpRow::empty(), |row, &w| dp_forward_step(&row, w)))
    }

    /// The final row over all players. It depends only on the weights, so it
    /// can be reused for any `f` sharing them.
    pub fn base_polynomials(&self, game: &LinearGame) -> Result<DpRow, EngineError> {
        self.dp_forward(game.weights())
    }

    /// Shapley value of one player from a fresh forward pass over the others.
    pub fn shapley_single(&self, game: &LinearGame, player: usize) -> Result<Rational, EngineError> {
        check_player(player, game.players())?;
        self.check_weights(game.weights())?;
        let others: Vec<u64> = game
            .weights()
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != player)
            .map(|(_, &w)| w)
            .collect();
        let row = self.dp_forward(&others)?;
        Ok(expected_marginal(&row, game, game.weights()[player]).integrate_unit())
    }

    /// Shapley value of one player given the base row: revert the player out
    /// and integrate the expected marginal contribution.
    pub fn shapley_from_base(
        &self,
        base: &DpRow,
        game: &LinearGame,
        player: usize,
    ) -> Result<Rational, EngineError> {
        check_player(player, game.players())?;
        let weight = game.weights()[player];
        let row = dp_revert_step(base, weight)?;
        Ok(expected_marginal(&row, game, weight).integrate_unit())
    }

    /// All Shapley values from one base pass plus one reversion per player.
    /// Each player is reverted from the stored base row independently.
    pub fn shapley_all(&self, game: &LinearGame) -> Result<ShapleyResult, EngineError> {
        let base = self.base_polynomials(game)?;
        let values = (0..game.players())
            .map(|i| self.shapley_from_base(&base, game, i))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ShapleyResult::new(values))
    }
}
