//! Deterministic tie-breaking.
//!
//! Wherever an algorithm may pick any of several elements, a
//! [`TieBreakPolicy`] makes the pick. The seeded policy is part of the
//! output contract, so its generator is spelled out here rather than taken
//! from a crate whose stream could change between versions:
//!
//! * generator: SplitMix64 (`state += 0x9E3779B97F4A7C15`, then the
//!   `0xBF58476D1CE4E5B9` / `0x94D049BB133111EB` finalizer), state initialized
//!   to the seed;
//! * shuffle: Fisher-Yates from the back, `j = next_u64() % (i + 1)`;
//! * the candidates are listed in ground order before every shuffle.
//!
//! One generator is created per operation call and shared by all the picks
//! and shuffles that call makes, in the order the call makes them.

use std::fmt;
use std::str::FromStr;

use crate::order::ElementId;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum TieBreakPolicy {
    /// Earliest in the input ground sequence.
    #[default]
    InputOrder,
    /// Smallest token by byte-wise string comparison.
    Lexicographic,
    /// Pseudo-random but reproducible from the seed.
    Seeded(u64),
}

impl fmt::Display for TieBreakPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TieBreakPolicy::InputOrder => f.pad("input"),
            TieBreakPolicy::Lexicographic => f.pad("lex"),
            TieBreakPolicy::Seeded(s) => f.pad(&format!("seed:{s}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid tie-break policy {0:?}: expected `input`, `lex` or `seed:<u64>`")]
pub struct PolicyParseError(String);

impl FromStr for TieBreakPolicy {
    type Err = PolicyParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "input" => Ok(TieBreakPolicy::InputOrder),
            "lex" => Ok(TieBreakPolicy::Lexicographic),
            _ => s
                .strip_prefix("seed:")
                .and_then(|n| n.parse().ok())
                .map(TieBreakPolicy::Seeded)
                .ok_or_else(|| PolicyParseError(s.to_string())),
        }
    }
}

/// SplitMix64.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = (self.next_u64() % (i as u64 + 1)) as usize;
            items.swap(i, j);
        }
    }
}

/// A policy bound to the generator state of one operation call.
pub(crate) struct Chooser {
    policy: TieBreakPolicy,
    rng: Option<SplitMix64>,
}

impl Chooser {
    pub(crate) fn new(policy: TieBreakPolicy) -> Self {
        let rng = match policy {
            TieBreakPolicy::Seeded(seed) => Some(SplitMix64::new(seed)),
            _ => None,
        };
        Chooser { policy, rng }
    }

    /// Reorders `items`, given as `(ground index, id)` sorted by ground
    /// index, into the policy's preferred order.
    pub(crate) fn arrange(&mut self, items: &mut [(usize, &ElementId)]) {
        match self.policy {
            TieBreakPolicy::InputOrder => {}
            TieBreakPolicy::Lexicographic => items.sort_by(|a, b| a.1.cmp(b.1)),
            TieBreakPolicy::Seeded(_) => self.rng.as_mut().unwrap().shuffle(items),
        }
    }

    /// Position in `candidates` (sorted by ground index) of the pick.
    pub(crate) fn pick(&mut self, candidates: &[(usize, &ElementId)]) -> usize {
        debug_assert!(!candidates.is_empty());
        match self.policy {
            TieBreakPolicy::InputOrder => 0,
            TieBreakPolicy::Lexicographic => candidates
                .iter()
                .enumerate()
                .min_by(|a, b| a.1 .1.cmp(b.1 .1))
                .map(|(k, _)| k)
                .unwrap(),
            TieBreakPolicy::Seeded(_) => {
                let mut order: Vec<usize> = (0..candidates.len()).collect();
                self.rng.as_mut().unwrap().shuffle(&mut order);
                order[0]
            }
        }
    }
}
