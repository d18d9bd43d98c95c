//! Exhaustive and sampled checks of the multiplicity results, reported as
//! JSON-serialisable [`VerificationReport`]s.
//!
//! Suites:
//!
//! * `thm1`: `m = p - q + m(reduced graph)`, the lower bound `m >= p - q` and
//!   the internal-submatrix identity on all trees and unicyclic graphs up to
//!   `max_n` and on a seeded random sample of connected graphs;
//! * `thm2`: `4m <= n - 6` on reduced trees without pendant `P_3`, with the
//!   extremal trees counted and compared to the constructed ones;
//! * `thm3`: `4m <= n` on the unicyclic analogue for `n >= 10`, reported
//!   without being enforced below 10;
//! * `lemmas`: edge-deletion interlacing, the line-graph equivalence, every
//!   transformation of the reduction module, star-like zeros, cycles up to
//!   30, gadget peeling and the tree eigenvalue identities;
//! * `identities`: the tree eigenvalue identities alone;
//! * `all`: the first four combined.
//!
//! Every graph a suite touches is also cross-checked between the rank
//! engine and the characteristic polynomial, and enumerated inputs against
//! the reduction pipeline and its trace replay.

mod engine;
mod report;
mod suites;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::enumerate::EnumerateError;

pub use engine::Engine;
pub use report::{VerificationReport, Violation};
pub use suites::{random_sample, run_suite};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Thm1,
    Thm2,
    Thm3,
    Lemmas,
    Identities,
    All,
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Thm1 => "thm1",
            Suite::Thm2 => "thm2",
            Suite::Thm3 => "thm3",
            Suite::Lemmas => "lemmas",
            Suite::Identities => "identities",
            Suite::All => "all",
        })
    }
}

impl FromStr for Suite {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "thm1" => Ok(Suite::Thm1),
            "thm2" => Ok(Suite::Thm2),
            "thm3" => Ok(Suite::Thm3),
            "lemmas" => Ok(Suite::Lemmas),
            "identities" => Ok(Suite::Identities),
            "all" => Ok(Suite::All),
            _ => Err(VerifyError::UnknownSuite(s.to_owned())),
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub max_n: usize,
    pub seed: u64,
    /// Worker threads; `None` uses the global rayon pool.
    pub jobs: Option<usize>,
    pub random_samples: usize,
    /// Record wall-clock time in the report (makes it non-reproducible).
    pub timings: bool,
    pub engine: Engine,
}

impl VerifyOptions {
    pub fn new(max_n: usize) -> Self {
        VerifyOptions {
            max_n,
            seed: 0,
            jobs: None,
            random_samples: 1000,
            timings: false,
            engine: Engine::exact(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("suite {suite} supports max-n up to {limit}, got {max_n}")]
    MaxNTooLarge {
        suite: Suite,
        max_n: usize,
        limit: usize,
    },
    #[error("cannot start worker threads: {0}")]
    ThreadPool(String),
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
}
