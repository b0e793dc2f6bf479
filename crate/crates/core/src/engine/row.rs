use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::iter::Peekable;

use crate::exactpoly::IntPoly;

use super::EngineError;

/// One row of the coalition-weight DP: for every reachable state `k`, the
/// probability (a polynomial in the join probability `x`) that a random
/// coalition of the absorbed players lands in state `k`.
///
/// Only nonzero entries are stored, ordered by state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DpRow {
    entries: BTreeMap<u64, IntPoly>,
    player_count: usize,
}

impl Default for DpRow {
    fn default() -> Self {
        Self::empty()
    }
}

impl DpRow {
    /// The row before any player is absorbed: `{0 ↦ 1}`.
    pub fn empty() -> Self {
        Self::starting_at(0)
    }

    /// `{state ↦ 1}` with no players absorbed.
    pub fn starting_at(state: u64) -> Self {
        let mut entries = BTreeMap::new();
        entries.insert(state, IntPoly::one());
        DpRow {
            entries,
            player_count: 0,
        }
    }

    /// Builds a row from explicit entries; zero polynomials are dropped.
    pub fn from_entries(entries: impl IntoIterator<Item = (u64, IntPoly)>, player_count: usize) -> Self {
        DpRow {
            entries: entries.into_iter().filter(|(_, p)| !p.is_zero()).collect(),
            player_count,
        }
    }

    pub fn player_count(&self) -> usize {
        self.player_count
    }

    pub fn get(&self, state: u64) -> Option<&IntPoly> {
        self.entries.get(&state)
    }

    /// Entries in increasing state order.
    pub fn iter(&self) -> impl Iterator<Item = (u64, &IntPoly)> + '_ {
        self.entries.iter().map(|(&k, p)| (k, p))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_state(&self) -> Option<u64> {
        self.entries.keys().next_back().copied()
    }

    /// Sum of all entries; identically `1` for a well-formed row.
    pub fn total(&self) -> IntPoly {
        let mut sum = IntPoly::zero();
        for p in self.entries.values() {
            sum.add_assign_poly(p);
        }
        sum
    }

    pub(crate) fn from_parts(entries: BTreeMap<u64, IntPoly>, player_count: usize) -> Self {
        DpRow {
            entries,
            player_count,
        }
    }
}

/// Yields the union of states `k` and `k + shift` over a sorted row, pairing
/// each with its "stay" entry (`row[k]`) and "join" entry (`row[k - shift]`).
struct ShiftedMerge<'a, I: Iterator<Item = (&'a u64, &'a IntPoly)>> {
    stay: Peekable<I>,
    join: Peekable<I>,
    shift: u64,
}

impl<'a, I: Iterator<Item = (&'a u64, &'a IntPoly)>> Iterator for ShiftedMerge<'a, I> {
    type Item = (u64, Option<&'a IntPoly>, Option<&'a IntPoly>);

    fn next(&mut self) -> Option<Self::Item> {
        let stay_key = self.stay.peek().map(|(&k, _)| k);
        let join_key = self.join.peek().map(|(&k, _)| {
            k.checked_add(self.shift)
                .expect("state overflow in forward step")
        });
        let key = match (stay_key, join_key) {
            (None, None) => return None,
            (Some(s), None) => s,
            (None, Some(j)) => j,
            (Some(s), Some(j)) => s.min(j),
        };
        let stay = if stay_key == Some(key) {
            self.stay.next().map(|(_, p)| p)
        } else {
            None
        };
        let join = if join_key == Some(key) {
            self.join.next().map(|(_, p)| p)
        } else {
            None
        };
        Some((key, stay, join))
    }
}

/// Absorbs one player of weight `weight` into the additive DP:
/// `new[k] = (1 - x)·row[k] + x·row[k - weight]`.
///
/// A zero-weight player leaves the entries unchanged.
pub fn dp_forward_step(row: &DpRow, weight: u64) -> DpRow {
    let player_count = row.player_count + 1;
    if weight == 0 {
        return DpRow {
            entries: row.entries.clone(),
            player_count,
        };
    }
    let merge = ShiftedMerge {
        stay: row.entries.iter().peekable(),
        join: row.entries.iter().peekable(),
        shift: weight,
    };
    let entries = merge
        .map(|(k, stay, join)| (k, IntPoly::blend(stay, join)))
        .filter(|(_, p)| !p.is_zero())
        .collect();
    DpRow {
        entries,
        player_count,
    }
}

/// Removes one player of weight `weight` from an additive DP row, reading the
/// forward recursion backwards from the lowest state up:
/// `prev[k] = (row[k] - x·prev[k - weight]) / (1 - x)`.
///
/// Fails with [`EngineError::NotDivisible`] when no player of that weight can
/// have been absorbed into `row`.
pub fn dp_revert_step(row: &DpRow, weight: u64) -> Result<DpRow, EngineError> {
    let player_count = row
        .player_count
        .checked_sub(1)
        .ok_or(EngineError::NothingToRevert)?;
    if weight == 0 {
        return Ok(DpRow {
            entries: row.entries.clone(),
            player_count,
        });
    }

    let mut prev: Vec<(u64, IntPoly)> = Vec::with_capacity(row.entries.len());
    // Index into `prev` of the next entry whose shifted state is still to be
    // visited; shifted states arrive in increasing order.
    let mut cursor = 0usize;
    let mut pending = row.entries.iter().peekable();
    loop {
        let row_key = pending.peek().map(|(&k, _)| k);
        let shifted_key = match prev.get(cursor) {
            Some((k, _)) => Some(
                k.checked_add(weight)
                    .ok_or(EngineError::NotDivisible { state: *k })?,
            ),
            None => None,
        };
        let key = match (row_key, shifted_key) {
            (None, None) => break,
            (Some(r), None) => r,
            (None, Some(s)) => s,
            (Some(r), Some(s)) => r.min(s),
        };
        let whole = if row_key == Some(key) {
            pending.next().map(|(_, p)| p)
        } else {
            None
        };
        let join = if shifted_key == Some(key) {
            cursor += 1;
            Some(&prev[cursor - 1].1)
        } else {
            None
        };
        let entry = IntPoly::unblend(whole, join).map_err(|_| EngineError::NotDivisible { state: key })?;
        if !entry.is_zero() {
            prev.push((key, entry));
        }
    }
    Ok(DpRow {
        entries: prev.into_iter().collect(),
        player_count,
    })
}
