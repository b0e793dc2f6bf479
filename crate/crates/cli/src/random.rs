//! Seeded random game instances, reproducible from `family,n,maxweight,seed`.

use std::fmt;
use std::str::FromStr;

use linshap_core::GameFamily;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    WeightedVoting,
    Bankruptcy,
    Liability,
    Airport,
    Table,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 5] = [
        FamilyKind::WeightedVoting,
        FamilyKind::Bankruptcy,
        FamilyKind::Liability,
        FamilyKind::Airport,
        FamilyKind::Table,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::WeightedVoting => "weighted_voting",
            FamilyKind::Bankruptcy => "bankruptcy",
            FamilyKind::Liability => "liability",
            FamilyKind::Airport => "airport",
            FamilyKind::Table => "table",
        }
    }
}

impl FromStr for FamilyKind {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| CliError::invalid("random", format!("unknown family `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomSpec {
    pub family: FamilyKind,
    pub players: usize,
    pub max_weight: u64,
    pub seed: u64,
}

impl FromStr for RandomSpec {
    type Err = CliError;

    /// `family,n,maxweight,seed`, e.g. `bankruptcy,6,12,42`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let [family, players, max_weight, seed] = parts[..] else {
            return Err(CliError::invalid("random", "expected `family,n,maxweight,seed`"));
        };
        let number = |name: &str, text: &str| {
            text.parse::<u64>()
                .map_err(|_| CliError::invalid("random", format!("{name} must be a nonnegative integer, got `{text}`")))
        };
        let spec = RandomSpec {
            family: family.parse()?,
            players: number("n", players)? as usize,
            max_weight: number("maxweight", max_weight)?,
            seed: number("seed", seed)?,
        };
        if spec.players == 0 {
            return Err(CliError::invalid("random", "n must be at least 1"));
        }
        if spec.max_weight == 0 {
            return Err(CliError::invalid("random", "maxweight must be at least 1"));
        }
        if spec.family == FamilyKind::Liability && spec.players < 2 {
            return Err(CliError::invalid("random", "liability games need the firm plus at least one creditor"));
        }
        Ok(spec)
    }
}

impl fmt::Display for RandomSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{},{}",
            self.family.name(),
            self.players,
            self.max_weight,
            self.seed
        )
    }
}

/// Weights in `0..=max` with a positive total.
fn weights(rng: &mut ChaCha8Rng, count: usize, max: u64) -> Vec<u64> {
    let mut w: Vec<u64> = (0..count).map(|_| rng.gen_range(0..=max)).collect();
    if w.iter().all(|&x| x == 0) {
        w[0] = rng.gen_range(1..=max);
    }
    w
}

/// A valid instance of the requested family. Quotas and assets are drawn
/// from their feasible ranges.
pub fn generate(spec: &RandomSpec) -> GameFamily {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let (n, max) = (spec.players, spec.max_weight);
    match spec.family {
        FamilyKind::WeightedVoting => {
            let weights = weights(&mut rng, n, max);
            let total: u64 = weights.iter().sum();
            let quota = rng.gen_range(1..=total);
            GameFamily::WeightedVoting { weights, quota }
        }
        FamilyKind::Bankruptcy => {
            let liabilities = weights(&mut rng, n, max);
            let total: u64 = liabilities.iter().sum();
            let assets = rng.gen_range(0..=total);
            GameFamily::Bankruptcy { liabilities, assets }
        }
        FamilyKind::Liability => {
            let liabilities = weights(&mut rng, n - 1, max);
            let total: u64 = liabilities.iter().sum();
            let assets = rng.gen_range(0..total);
            GameFamily::Liability { liabilities, assets }
        }
        FamilyKind::Airport => GameFamily::Airport {
            costs: (0..n).map(|_| rng.gen_range(1..=max)).collect(),
        },
        FamilyKind::Table => {
            let weights = weights(&mut rng, n, max);
            let total: u64 = weights.iter().sum();
            let values = std::iter::once(0)
                .chain((0..total).map(|_| rng.gen_range(0..=10)))
                .collect();
            GameFamily::ExplicitTable { weights, values }
        }
    }
}
