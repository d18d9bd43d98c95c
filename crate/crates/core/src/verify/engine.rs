use std::fmt;
use std::sync::Arc;

use crate::graph::Graph;
use crate::linalg::{adjacency, laplacian, rank, IntMatrix, RationalScalar};

type RankFn = dyn Fn(&IntMatrix) -> usize + Send + Sync;

/// The rank-based multiplicity engine the suites check. Replacing the rank
/// function lets tests confirm that a broken engine is noticed.
#[derive(Clone)]
pub struct Engine {
    name: String,
    rank: Arc<RankFn>,
}

impl fmt::Debug for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Engine").field("name", &self.name).finish()
    }
}

impl Default for Engine {
    fn default() -> Self {
        Engine::exact()
    }
}

impl Engine {
    pub fn exact() -> Self {
        Engine::with_rank("exact", rank)
    }

    pub fn with_rank(
        name: impl Into<String>,
        rank: impl Fn(&IntMatrix) -> usize + Send + Sync + 'static,
    ) -> Self {
        Engine {
            name: name.into(),
            rank: Arc::new(rank),
        }
    }

    /// Overstates the rank by one on square matrices whose order is
    /// congruent to `seed` modulo 3.
    pub fn off_by_one(seed: u64) -> Self {
        Engine::with_rank(format!("off-by-one-{seed}"), move |m: &IntMatrix| {
            let r = rank(m);
            if m.rows() as u64 % 3 == seed % 3 {
                (r + 1).min(m.rows())
            } else {
                r
            }
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn multiplicity(&self, m: &IntMatrix, lambda: &RationalScalar) -> usize {
        let shifted = m
            .scaled_minus_identity(lambda.denominator(), lambda.numerator())
            .expect("square input");
        m.rows() - (self.rank)(&shifted)
    }

    pub fn m1(&self, g: &Graph) -> usize {
        self.multiplicity(&laplacian(g), &RationalScalar::integer(1))
    }

    pub fn adjacency_minus_one(&self, g: &Graph) -> usize {
        self.multiplicity(&adjacency(g), &RationalScalar::integer(-1))
    }
}
