//! Pseudo-polynomial Shapley engines.
//!
//! Every path computes, for a player `i`, the distribution of the state of a
//! random coalition of the other players when each joins independently with
//! probability `x`. Entries are integer polynomials in `x`. The expected
//! marginal contribution of `i` is the weighted sum of those entries and its
//! integral over `[0, 1]` is the Shapley value.

mod airport;
mod generalized;
mod linear;
mod row;

use alloc::vec::Vec;
use core::fmt;

use crate::exactpoly::Rational;

pub use airport::airport_row_closed_form;
pub use generalized::generalized_forward_step;
pub use linear::expected_marginal;
pub use row::{dp_forward_step, dp_revert_step, DpRow};

/// Default work limit: `2^31` polynomial-coefficient cells.
pub const DEFAULT_CELL_LIMIT: u64 = 1 << 31;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EngineError {
    /// The estimated row size `(players + 1)·(state_bound + 1)` exceeds the
    /// configured limit.
    CapacityExceeded {
        players: usize,
        state_bound: u64,
        cells: u128,
        limit: u64,
    },
    /// Row reversion hit an entry that `1 - x` does not divide.
    NotDivisible { state: u64 },
    /// Reversion was asked of a row with no players absorbed.
    NothingToRevert,
    PlayerOutOfRange { player: usize, players: usize },
    /// The state update left `0..=bound`.
    StateOutOfBounds { state: u64, weight: u64, bound: u64 },
}

impl fmt::Display for EngineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EngineError::CapacityExceeded {
                players,
                state_bound,
                cells,
                limit,
            } => write!(
                f,
                "capacity exceeded: n={players}, K={state_bound}, n*K={}, estimated {cells} cells > limit {limit}",
                (*players as u128) * (*state_bound as u128)
            ),
            EngineError::NotDivisible { state } => write!(
                f,
                "row reversion failed at state {state}: entry not divisible by 1-x"
            ),
            EngineError::NothingToRevert => f.write_str("cannot revert a row with no players"),
            EngineError::PlayerOutOfRange { player, players } => {
                write!(f, "player index {player} out of range for {players} players")
            }
            EngineError::StateOutOfBounds { state, weight, bound } => write!(
                f,
                "update of state {state} with weight {weight} leaves the state bound {bound}"
            ),
        }
    }
}

impl core::error::Error for EngineError {}

/// Shapley values of all players, with their sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapleyResult {
    values: Vec<Rational>,
    total: Rational,
}

impl ShapleyResult {
    pub fn new(values: Vec<Rational>) -> Self {
        let total = values.iter().sum();
        ShapleyResult { values, total }
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn total(&self) -> &Rational {
        &self.total
    }

    pub fn into_values(self) -> Vec<Rational> {
        self.values
    }
}

/// Engine configuration. All methods are pure; an `Engine` can be shared
/// freely between threads.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Engine {
    cell_limit: u64,
}

impl Default for Engine {
    fn default() -> Self {
        Engine {
            cell_limit: DEFAULT_CELL_LIMIT,
        }
    }
}

impl Engine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_cell_limit(cell_limit: u64) -> Self {
        Engine { cell_limit }
    }

    pub fn cell_limit(&self) -> u64 {
        self.cell_limit
    }

    /// Fails fast when a DP over `players` players and states `0..=state_bound`
    /// would exceed the cell limit.
    pub fn check_capacity(&self, players: usize, state_bound: u64) -> Result<(), EngineError> {
        let cells = (players as u128 + 1) * (state_bound as u128 + 1);
        if cells > self.cell_limit as u128 {
            return Err(EngineError::CapacityExceeded {
                players,
                state_bound,
                cells,
                limit: self.cell_limit,
            });
        }
        Ok(())
    }

    /// Capacity check for a weight list whose sum may overflow.
    pub(crate) fn check_weights(&self, weights: &[u64]) -> Result<u64, EngineError> {
        let total = crate::game::checked_total(weights).unwrap_or(u64::MAX);
        self.check_capacity(weights.len(), total)?;
        Ok(total)
    }
}

fn check_player(player: usize, players: usize) -> Result<(), EngineError> {
    if player >= players {
        return Err(EngineError::PlayerOutOfRange { player, players });
    }
    Ok(())
}
