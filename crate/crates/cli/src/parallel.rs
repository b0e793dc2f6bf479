use std::thread;

use linshap_core::{Engine, EngineError, Rational, ShapleyResult};

use crate::run::Prepared;

/// All Shapley values, spreading the per-player phase over `threads` scoped
/// threads. Results are identical to the sequential engine.
pub fn shapley_all(engine: &Engine, game: &Prepared, threads: usize) -> Result<ShapleyResult, EngineError> {
    if threads <= 1 {
        return match game {
            Prepared::Linear(g) => engine.shapley_all(g),
            Prepared::Generalized(g) => engine.shapley_all_generalized(g),
        };
    }

    let base = match game {
        Prepared::Linear(g) => Some(engine.base_polynomials(g)?),
        Prepared::Generalized(_) => None,
    };
    let players = match game {
        Prepared::Linear(g) => g.players(),
        Prepared::Generalized(g) => g.players(),
    };
    let one = |i: usize| -> Result<Rational, EngineError> {
        match (game, &base) {
            (Prepared::Linear(g), Some(base)) => engine.shapley_from_base(base, g, i),
            (Prepared::Generalized(g), _) => engine.shapley_generalized_single(g, i),
            (Prepared::Linear(_), None) => unreachable!("linear games always have a base row"),
        }
    };

    let workers = threads.min(players.max(1));
    let mut slots: Vec<Option<Result<Rational, EngineError>>> = vec![None; players];
    thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|t| {
                let one = &one;
                scope.spawn(move || {
                    (t..players)
                        .step_by(workers)
                        .map(|i| (i, one(i)))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        for handle in handles {
            for (i, value) in handle.join().expect("worker panicked") {
                slots[i] = Some(value);
            }
        }
    });
    let values = slots
        .into_iter()
        .map(|slot| slot.expect("every player assigned"))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ShapleyResult::new(values))
}
