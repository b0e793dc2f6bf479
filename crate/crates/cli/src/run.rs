//! The four CLI modes. Each returns both a plain-text and a JSON rendering;
//! the caller picks one.

use linshap_core::oracle::{
    materialize, shapley_permutation_form, shapley_subset_form, PERMUTATION_FORM_MAX_PLAYERS,
};
use linshap_core::{DpRow, Engine, GameFamily, GeneralizedGame, LinearGame, Rational, ShapleyResult};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::parallel;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub precision: usize,
    pub threads: usize,
    pub cell_limit: u64,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            precision: 6,
            threads: 1,
            cell_limit: linshap_core::engine::DEFAULT_CELL_LIMIT,
        }
    }
}

impl Options {
    fn engine(&self) -> Engine {
        Engine::with_cell_limit(self.cell_limit)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub exit_code: i32,
}

/// A family converted for the engine that serves it.
pub enum Prepared {
    Linear(LinearGame),
    Generalized(GeneralizedGame),
}

/// Runs the capacity guard and converts the family. Linear families go to
/// the reversion engine, airport games to the generalized one.
pub fn prepare(family: &GameFamily, engine: &Engine) -> Result<Prepared, CliError> {
    let weights = family.engine_weights()?;
    if family.is_linear() {
        let total = weights
            .iter()
            .try_fold(0u64, |acc, &w| acc.checked_add(w))
            .unwrap_or(u64::MAX);
        engine.check_capacity(weights.len(), total)?;
        Ok(Prepared::Linear(family.to_linear()?))
    } else {
        let bound = weights.iter().copied().max().unwrap_or(0);
        engine.check_capacity(weights.len(), bound)?;
        Ok(Prepared::Generalized(family.to_generalized()?))
    }
}

/// Report label of player index `i`: the liability firm is player 0, all
/// other families count from 1.
pub fn label(family: &GameFamily, index: usize) -> usize {
    match family {
        GameFamily::Liability { .. } => index,
        _ => index + 1,
    }
}

fn index_of(family: &GameFamily, player: usize) -> Result<usize, CliError> {
    let index = match family {
        GameFamily::Liability { .. } => Some(player),
        _ => player.checked_sub(1),
    };
    let first = label(family, 0);
    let last = label(family, family.players().saturating_sub(1));
    index
        .filter(|&i| i < family.players())
        .ok_or_else(|| CliError::invalid("player", format!("{player} is not a player (valid: {first}..={last})")))
}

fn exact_json(r: &Rational) -> Value {
    json!({ "num": r.numer().to_string(), "den": r.denom().to_string() })
}

fn player_line(label: usize, value: &Rational, precision: usize) -> String {
    format!("{label} {value} {}", value.to_decimal(precision))
}

fn player_json(label: usize, value: &Rational, precision: usize) -> Value {
    json!({
        "player": label,
        "exact": exact_json(value),
        "decimal": value.to_decimal(precision),
    })
}

pub fn run_shapley(family: &GameFamily, opts: &Options) -> Result<Outcome, CliError> {
    let engine = opts.engine();
    let prepared = prepare(family, &engine)?;
    let result = parallel::shapley_all(&engine, &prepared, opts.threads)?;
    Ok(shapley_report(family, &result, opts.precision))
}

fn shapley_report(family: &GameFamily, result: &ShapleyResult, precision: usize) -> Outcome {
    let grand = Rational::from_integer(family.grand_coalition_value());
    let mut text = String::new();
    let mut players = Vec::new();
    for (i, value) in result.values().iter().enumerate() {
        let l = label(family, i);
        text.push_str(&player_line(l, value, precision));
        text.push('\n');
        players.push(player_json(l, value, precision));
    }
    text.push_str(&format!("total {} v(N) {}\n", result.total(), grand));
    Outcome {
        text,
        json: json!({
            "players": players,
            "total": exact_json(result.total()),
            "grand_coalition_value": exact_json(&grand),
        }),
        exit_code: 0,
    }
}

/// One player (label as printed in reports), via a single forward pass.
pub fn run_single(family: &GameFamily, player: usize, opts: &Options) -> Result<Outcome, CliError> {
    let index = index_of(family, player)?;
    let engine = opts.engine();
    let value = match prepare(family, &engine)? {
        Prepared::Linear(game) => engine.shapley_single(&game, index)?,
        Prepared::Generalized(game) => engine.shapley_generalized_single(&game, index)?,
    };
    Ok(Outcome {
        text: format!("{}\n", player_line(player, &value, opts.precision)),
        json: player_json(player, &value, opts.precision),
        exit_code: 0,
    })
}

/// Engine against the brute-force oracle; exit code 1 on any difference.
pub fn run_verify(family: &GameFamily, opts: &Options) -> Result<Outcome, CliError> {
    let explicit = materialize(family)?;
    let engine = opts.engine();
    let prepared = prepare(family, &engine)?;
    let computed = parallel::shapley_all(&engine, &prepared, opts.threads)?.into_values();
    let subset = shapley_subset_form(&explicit)?;
    let permutation = if family.players() <= PERMUTATION_FORM_MAX_PLAYERS {
        Some(shapley_permutation_form(&explicit)?)
    } else {
        None
    };
    Ok(verify_report(family, &computed, &subset, permutation.as_deref()))
}

pub fn verify_report(
    family: &GameFamily,
    engine: &[Rational],
    subset: &[Rational],
    permutation: Option<&[Rational]>,
) -> Outcome {
    let ok = engine == subset && permutation.is_none_or(|p| p == engine);
    let vector = |values: &[Rational]| {
        values
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut text = String::new();
    if ok {
        text.push_str("OK\n");
        for (i, v) in engine.iter().enumerate() {
            text.push_str(&format!("{} {v}\n", label(family, i)));
        }
    } else {
        text.push_str("MISMATCH\n");
        text.push_str(&format!("engine: {}\n", vector(engine)));
        text.push_str(&format!("oracle (subsets): {}\n", vector(subset)));
        if let Some(p) = permutation {
            text.push_str(&format!("oracle (permutations): {}\n", vector(p)));
        }
    }
    let list = |values: &[Rational]| values.iter().map(exact_json).collect::<Vec<_>>();
    Outcome {
        text,
        json: json!({
            "ok": ok,
            "engine": list(engine),
            "oracle_subsets": list(subset),
            "oracle_permutations": permutation.map(list),
        }),
        exit_code: if ok { 0 } else { 1 },
    }
}

/// Dump of the base row: one line per nonzero state, coefficients lowest
/// degree first.
pub fn run_base_polys(family: &GameFamily, opts: &Options) -> Result<Outcome, CliError> {
    let engine = opts.engine();
    let Prepared::Linear(game) = prepare(family, &engine)? else {
        return Err(CliError::invalid(
            "family",
            "base polynomials need a linearly representable family",
        ));
    };
    let base = engine.base_polynomials(&game)?;
    Ok(base_report(&base))
}

fn base_report(base: &DpRow) -> Outcome {
    let mut text = String::new();
    let mut rows = Vec::new();
    for (k, p) in base.iter() {
        let coeffs: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
        text.push_str(&format!("k={k}: [{}]\n", coeffs.join(",")));
        rows.push(json!({ "k": k, "coeffs": coeffs }));
    }
    Outcome {
        text,
        json: json!({ "players": base.player_count(), "rows": rows }),
        exit_code: 0,
    }
}
