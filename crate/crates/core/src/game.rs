//! Game representations: linear (`v(S) = f(sum of member weights)`),
//! generalized (a state folded over member weights), and the built-in
//! families.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GameError {
    /// A parameter violates a family or representation invariant.
    InvalidParameters { field: &'static str, reason: String },
    /// The family has no linear representation here (airport games).
    NotLinearlyRepresentable,
    /// Total weight does not fit in the index type.
    WeightOverflow,
}

impl fmt::Display for GameError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GameError::InvalidParameters { field, reason } => {
                write!(f, "invalid `{field}`: {reason}")
            }
            GameError::NotLinearlyRepresentable => {
                f.write_str("game has no linear representation; use the generalized engine")
            }
            GameError::WeightOverflow => f.write_str("total weight overflows"),
        }
    }
}

impl core::error::Error for GameError {}

fn invalid(field: &'static str, reason: impl Into<String>) -> GameError {
    GameError::InvalidParameters {
        field,
        reason: reason.into(),
    }
}

pub(crate) fn checked_total(weights: &[u64]) -> Option<u64> {
    weights.iter().try_fold(0u64, |acc, &w| acc.checked_add(w))
}

fn table_len(total: u64) -> Result<usize, GameError> {
    usize::try_from(total)
        .ok()
        .and_then(|t| t.checked_add(1))
        .ok_or(GameError::WeightOverflow)
}

fn to_value(field: &'static str, v: u64) -> Result<i64, GameError> {
    i64::try_from(v).map_err(|_| invalid(field, "value does not fit in a signed 64-bit integer"))
}

/// A linearly represented game: player weights plus the value function `f`
/// tabulated on every total weight `0..=sum(weights)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearGame {
    weights: Vec<u64>,
    values: Vec<i64>,
}

impl LinearGame {
    /// `values[k]` is `f(k)`; there must be exactly `sum(weights) + 1` of them
    /// and `f(0)` must be zero.
    pub fn new(weights: Vec<u64>, values: Vec<i64>) -> Result<Self, GameError> {
        let total = checked_total(&weights).ok_or(GameError::WeightOverflow)?;
        let expected = table_len(total)?;
        if values.len() != expected {
            return Err(invalid(
                "f",
                format!("expected {expected} values (one per total weight 0..={total}), got {}", values.len()),
            ));
        }
        if values[0] != 0 {
            return Err(invalid("f", "f(0) must be 0 so that the empty coalition is worth 0"));
        }
        Ok(LinearGame { weights, values })
    }

    /// Tabulates `f` over `0..=sum(weights)`.
    pub fn from_fn(weights: Vec<u64>, f: impl Fn(u64) -> i64) -> Result<Self, GameError> {
        let total = checked_total(&weights).ok_or(GameError::WeightOverflow)?;
        table_len(total)?;
        let values = (0..=total).map(f).collect();
        Self::new(weights, values)
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn players(&self) -> usize {
        self.weights.len()
    }

    pub fn total_weight(&self) -> u64 {
        (self.values.len() - 1) as u64
    }

    /// The tabulated `f`.
    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// `f(k)`. Panics if `k` exceeds the total weight.
    pub fn f(&self, k: u64) -> i64 {
        self.values[k as usize]
    }

    /// `f(k + weight) - f(k)`: what a player of this weight adds to a
    /// coalition of total weight `k`.
    pub fn marginal(&self, k: u64, weight: u64) -> BigInt {
        BigInt::from(self.f(k + weight)) - BigInt::from(self.f(k))
    }

    /// `v(S)` for a set of distinct 0-based player indices.
    pub fn coalition_value(&self, members: &[usize]) -> i64 {
        self.f(members.iter().map(|&j| self.weights[j]).sum())
    }
}

/// The state update `h(state, weight)` of a generalized representation.
#[derive(Clone)]
pub enum StateUpdate {
    /// Running total of weights; recovers the linear representation.
    Sum,
    /// Running maximum; airport games.
    Max,
    Custom(Arc<dyn Fn(u64, u64) -> u64 + Send + Sync>),
}

impl StateUpdate {
    /// `None` only when `Sum` overflows.
    pub fn apply(&self, state: u64, weight: u64) -> Option<u64> {
        match self {
            StateUpdate::Sum => state.checked_add(weight),
            StateUpdate::Max => Some(state.max(weight)),
            StateUpdate::Custom(h) => Some(h(state, weight)),
        }
    }
}

impl fmt::Debug for StateUpdate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StateUpdate::Sum => f.write_str("Sum"),
            StateUpdate::Max => f.write_str("Max"),
            StateUpdate::Custom(_) => f.write_str("Custom(..)"),
        }
    }
}

/// A game of the form `v(S) = value(state(S))`, where the state of a
/// coalition is obtained by folding `update` over its members' weights,
/// starting from `empty_state`.
///
/// States live in `0..=state_bound()`; `state_values[s]` is the worth of a
/// coalition in state `s`.
#[derive(Clone, Debug)]
pub struct GeneralizedGame {
    weights: Vec<u64>,
    update: StateUpdate,
    empty_state: u64,
    state_values: Vec<i64>,
}

impl GeneralizedGame {
    pub fn new(
        weights: Vec<u64>,
        update: StateUpdate,
        empty_state: u64,
        state_values: Vec<i64>,
    ) -> Result<Self, GameError> {
        if state_values.is_empty() {
            return Err(invalid("state_values", "at least one state is required"));
        }
        let slot = usize::try_from(empty_state)
            .ok()
            .filter(|&s| s < state_values.len())
            .ok_or_else(|| invalid("empty_state", "empty state lies outside the state bound"))?;
        if state_values[slot] != 0 {
            return Err(invalid("state_values", "the empty coalition's state must be worth 0"));
        }
        Ok(GeneralizedGame {
            weights,
            update,
            empty_state,
            state_values,
        })
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn players(&self) -> usize {
        self.weights.len()
    }

    pub fn update(&self) -> &StateUpdate {
        &self.update
    }

    pub fn empty_state(&self) -> u64 {
        self.empty_state
    }

    /// Largest admissible state `K`.
    pub fn state_bound(&self) -> u64 {
        (self.state_values.len() - 1) as u64
    }

    /// `h(state, weight)` if the result is within the state bound.
    pub fn next_state(&self, state: u64, weight: u64) -> Option<u64> {
        self.update
            .apply(state, weight)
            .filter(|&s| s <= self.state_bound())
    }

    /// Worth of a coalition in `state`. Panics if `state` is out of bounds.
    pub fn state_value(&self, state: u64) -> i64 {
        self.state_values[state as usize]
    }

    /// `v(S)` by folding the update over `members`; `None` if a state leaves
    /// the bound on the way.
    pub fn coalition_value(&self, members: &[usize]) -> Option<i64> {
        let state = members.iter().try_fold(self.empty_state, |s, &j| {
            self.next_state(s, self.weights[j])
        })?;
        Some(self.state_value(state))
    }
}

/// The built-in game families.
///
/// Players are 0-based in list order. For `Liability`, player 0 is the firm
/// and player `j >= 1` holds liability `liabilities[j - 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GameFamily {
    WeightedVoting { weights: Vec<u64>, quota: u64 },
    Bankruptcy { liabilities: Vec<u64>, assets: u64 },
    Liability { liabilities: Vec<u64>, assets: u64 },
    Airport { costs: Vec<u64> },
    ExplicitTable { weights: Vec<u64>, values: Vec<i64> },
}

impl GameFamily {
    pub fn players(&self) -> usize {
        match self {
            GameFamily::WeightedVoting { weights, .. } => weights.len(),
            GameFamily::Bankruptcy { liabilities, .. } => liabilities.len(),
            GameFamily::Liability { liabilities, .. } => liabilities.len() + 1,
            GameFamily::Airport { costs } => costs.len(),
            GameFamily::ExplicitTable { weights, .. } => weights.len(),
        }
    }

    /// Whether `to_linear` applies.
    pub fn is_linear(&self) -> bool {
        !matches!(self, GameFamily::Airport { .. })
    }

    /// Weights as seen by the engines (for `Liability` this includes the
    /// firm's weight `sum(liabilities) + 1` in front).
    pub fn engine_weights(&self) -> Result<Vec<u64>, GameError> {
        Ok(match self {
            GameFamily::WeightedVoting { weights, .. } => weights.clone(),
            GameFamily::Bankruptcy { liabilities, .. } => liabilities.clone(),
            GameFamily::Liability { liabilities, .. } => {
                let firm = checked_total(liabilities)
                    .and_then(|t| t.checked_add(1))
                    .ok_or(GameError::WeightOverflow)?;
                core::iter::once(firm).chain(liabilities.iter().copied()).collect()
            }
            GameFamily::Airport { costs } => costs.clone(),
            GameFamily::ExplicitTable { weights, .. } => weights.clone(),
        })
    }

    /// Checks the family invariants (including `v(∅) = 0`).
    pub fn validate(&self) -> Result<(), GameError> {
        match self {
            GameFamily::WeightedVoting { weights, quota } => {
                checked_total(weights).ok_or(GameError::WeightOverflow)?;
                if *quota == 0 {
                    return Err(invalid("quota", "quota must be at least 1 so that the empty coalition loses"));
                }
            }
            GameFamily::Bankruptcy { liabilities, assets } => {
                let total = checked_total(liabilities).ok_or(GameError::WeightOverflow)?;
                to_value("assets", *assets)?;
                to_value("liabilities", total)?;
                if *assets > total {
                    return Err(invalid(
                        "assets",
                        format!("assets {assets} exceed total liabilities {total}"),
                    ));
                }
            }
            GameFamily::Liability { liabilities, assets } => {
                let total = checked_total(liabilities).ok_or(GameError::WeightOverflow)?;
                to_value("assets", *assets)?;
                to_value("liabilities", total.saturating_add(1))?;
                if *assets >= total {
                    return Err(invalid(
                        "assets",
                        format!("assets {assets} must be strictly below total liabilities {total}"),
                    ));
                }
            }
            GameFamily::Airport { costs } => {
                for &c in costs {
                    to_value("costs", c)?;
                }
            }
            GameFamily::ExplicitTable { weights, values } => {
                LinearGame::new(weights.clone(), values.clone())?;
                if values.iter().any(|&v| v < 0) {
                    return Err(invalid("f", "table values must be nonnegative"));
                }
            }
        }
        Ok(())
    }

    fn value_where(&self, contains: impl Fn(usize) -> bool) -> i64 {
        let sum_where = |xs: &[u64], pick: &dyn Fn(usize) -> bool| -> i64 {
            xs.iter()
                .enumerate()
                .filter(|&(j, _)| pick(j))
                .map(|(_, &x)| x as i64)
                .sum()
        };
        match self {
            GameFamily::WeightedVoting { weights, quota } => {
                let total: u64 = weights
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| contains(j))
                    .map(|(_, &w)| w)
                    .sum();
                i64::from(total >= *quota)
            }
            GameFamily::Bankruptcy { liabilities, assets } => {
                let outside = sum_where(liabilities, &|j| !contains(j));
                (*assets as i64 - outside).max(0)
            }
            GameFamily::Liability { liabilities, assets } => {
                let assets = *assets as i64;
                if contains(0) {
                    let inside = sum_where(liabilities, &|j| contains(j + 1));
                    assets.min(inside)
                } else {
                    let outside = sum_where(liabilities, &|j| !contains(j + 1));
                    (assets - outside).max(0)
                }
            }
            GameFamily::Airport { costs } => costs
                .iter()
                .enumerate()
                .filter(|&(j, _)| contains(j))
                .map(|(_, &c)| c as i64)
                .max()
                .unwrap_or(0),
            GameFamily::ExplicitTable { weights, values } => {
                let total: u64 = weights
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| contains(j))
                    .map(|(_, &w)| w)
                    .sum();
                values[total as usize]
            }
        }
    }

    /// `v(S)` from the family's characteristic function, for distinct 0-based
    /// player indices. Assumes the family has been validated.
    pub fn coalition_value(&self, members: &[usize]) -> i64 {
        self.value_where(|j| members.contains(&j))
    }

    /// `v(S)` for the coalition whose members are the set bits of `mask`.
    /// Requires fewer than 64 players.
    pub fn coalition_value_mask(&self, mask: u64) -> i64 {
        self.value_where(|j| j < 64 && (mask >> j) & 1 == 1)
    }

    /// `v(N)`.
    pub fn grand_coalition_value(&self) -> i64 {
        self.value_where(|_| true)
    }

    pub fn to_linear(&self) -> Result<LinearGame, GameError> {
        self.validate()?;
        match self {
            GameFamily::WeightedVoting { weights, quota } => {
                let quota = *quota;
                LinearGame::from_fn(weights.clone(), |k| i64::from(k >= quota))
            }
            GameFamily::Bankruptcy { liabilities, assets } => {
                let total = checked_total(liabilities).ok_or(GameError::WeightOverflow)? as i64;
                let assets = *assets as i64;
                LinearGame::from_fn(liabilities.clone(), |k| (assets - (total - k as i64)).max(0))
            }
            GameFamily::Liability { assets, .. } => {
                let weights = self.engine_weights()?;
                let firm = weights[0] as i64;
                let assets = *assets as i64;
                LinearGame::from_fn(weights, |k| {
                    let k = k as i64;
                    if k >= firm {
                        assets.min(k - firm)
                    } else {
                        (assets - (firm - 1 - k)).max(0)
                    }
                })
            }
            GameFamily::Airport { .. } => Err(GameError::NotLinearlyRepresentable),
            GameFamily::ExplicitTable { weights, values } => {
                LinearGame::new(weights.clone(), values.clone())
            }
        }
    }

    /// Every family as a generalized game: running sum for the linear ones,
    /// running maximum for airport games.
    pub fn to_generalized(&self) -> Result<GeneralizedGame, GameError> {
        match self {
            GameFamily::Airport { costs } => {
                self.validate()?;
                let bound = costs.iter().copied().max().unwrap_or(0);
                let len = table_len(bound)?;
                let state_values = (0..len as i64).collect();
                GeneralizedGame::new(costs.clone(), StateUpdate::Max, 0, state_values)
            }
            _ => Ok(self.to_linear()?.into()),
        }
    }
}

impl From<LinearGame> for GeneralizedGame {
    fn from(game: LinearGame) -> Self {
        GeneralizedGame {
            weights: game.weights,
            update: StateUpdate::Sum,
            empty_state: 0,
            state_values: game.values,
        }
    }
}
