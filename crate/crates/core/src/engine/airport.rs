use alloc::collections::BTreeMap;

use crate::exactpoly::IntPoly;

use super::{check_player, DpRow, EngineError};

/// Exclusion row of an airport game straight from the binomial closed form.
///
/// With `n_k` remaining players of cost exactly `k` and `n_k+` of cost above
/// `k`, the maximum cost of a random coalition is `k` with probability
/// `(1 - (1-x)^n_k)·(1-x)^n_k+ = (1-x)^n_k+ - (1-x)^(n_k + n_k+)`, and `0`
/// with probability `(1-x)^n_0+`.
pub fn airport_row_closed_form(costs: &[u64], excluded: usize) -> Result<DpRow, EngineError> {
    check_player(excluded, costs.len())?;
    let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
    for (j, &c) in costs.iter().enumerate() {
        if j != excluded {
            *counts.entry(c).or_default() += 1;
        }
    }
    let remaining = costs.len() - 1;
    let positive = remaining - counts.get(&0).copied().unwrap_or(0);

    let mut above = 0usize;
    let mut entries = alloc::vec::Vec::with_capacity(counts.len() + 1);
    for (&cost, &count) in counts.iter().rev() {
        if cost == 0 {
            break;
        }
        let entry = &IntPoly::one_minus_x_pow(above) - &IntPoly::one_minus_x_pow(above + count);
        entries.push((cost, entry));
        above += count;
    }
    entries.push((0, IntPoly::one_minus_x_pow(positive)));
    Ok(DpRow::from_entries(entries, remaining))
}
