//! Exact enumeration of self-avoiding walks and bridges.
//!
//! Counts are weighted by the product of edge multiplicities, so parallel
//! edges of a multigraph give distinct walks. All counts are exact; series
//! are returned as unbounded integers.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigUint;

use crate::graph::HeightRigor;
use crate::{Error, Result};

mod ball;
mod count;
pub(crate) mod engine;
pub(crate) mod searches;

pub use ball::Ball;
pub use count::{
    count_bridges, count_extendable, count_saws, count_saws_to, generating_function_eval,
    generating_function_from,
};

/// Tuning and resource limits for an enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumConfig {
    /// Worker threads; 0 means all available.
    pub workers: usize,
    /// Depth at which the walk tree is cut into independent subtrees.
    pub prefix_depth: usize,
    /// Maximum number of search nodes visited.
    pub budget: u64,
}

impl EnumConfig {
    pub const DEFAULT_BUDGET: u64 = 5_000_000_000;
    pub const DEFAULT_PREFIX_DEPTH: usize = 4;

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig {
            workers: 0,
            prefix_depth: Self::DEFAULT_PREFIX_DEPTH,
            budget: Self::DEFAULT_BUDGET,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SeriesKind {
    Saw,
    Bridge,
    Extendable,
    Endpoint,
}

impl SeriesKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SeriesKind::Saw => "saw",
            SeriesKind::Bridge => "bridge",
            SeriesKind::Extendable => "extendable",
            SeriesKind::Endpoint => "endpoint",
        }
    }
}

impl fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SeriesKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "saw" => Ok(SeriesKind::Saw),
            "bridge" => Ok(SeriesKind::Bridge),
            "extendable" => Ok(SeriesKind::Extendable),
            "endpoint" => Ok(SeriesKind::Endpoint),
            other => Err(Error::InvalidArgument(alloc::format!(
                "series kind `{other}`"
            ))),
        }
    }
}

/// Marks a series cut short by the node-visit budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Truncation {
    pub requested: usize,
    /// Largest n whose value is exact and present.
    pub completed: usize,
}

/// An exact integer sequence indexed by walk length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountSeries {
    pub kind: SeriesKind,
    pub values: Vec<BigUint>,
    pub graph_key: String,
    pub params: BTreeMap<String, u64>,
    /// Rigor of the height function a bridge series was counted with.
    pub rigor: Option<HeightRigor>,
    pub truncated: Option<Truncation>,
}

impl CountSeries {
    pub fn new(kind: SeriesKind, graph_key: String, values: Vec<BigUint>) -> Self {
        CountSeries {
            kind,
            values,
            graph_key,
            params: BTreeMap::new(),
            rigor: None,
            truncated: None,
        }
    }

    /// Largest index present.
    pub fn n_max(&self) -> usize {
        self.values.len().saturating_sub(1)
    }

    pub fn get(&self, n: usize) -> Option<&BigUint> {
        self.values.get(n)
    }

    pub fn require(&self, n: usize) -> Result<&BigUint> {
        self.values.get(n).ok_or(Error::SeriesTooShort {
            have: self.values.len(),
            need: n,
        })
    }

    /// Copy limited to indices `0..=n`.
    pub fn prefix(&self, n: usize) -> CountSeries {
        let mut s = self.clone();
        s.values.truncate(n + 1);
        if n <= self.n_max() {
            s.truncated = None;
        }
        s
    }
}
