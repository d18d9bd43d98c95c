use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

use super::EnumerateError;

/// A connected graph on `n` vertices: each pair is an edge with probability
/// `num / den`, then consecutive components (ordered by least vertex) are
/// joined through their least vertices. Deterministic in `seed`.
pub fn random_connected_graph(
    n: usize,
    num: u64,
    den: u64,
    seed: u64,
) -> Result<Graph, EnumerateError> {
    if n == 0 {
        return Err(EnumerateError::OutOfRange {
            n,
            min: 1,
            max: usize::MAX,
        });
    }
    if num == 0 || num >= den {
        return Err(EnumerateError::BadProbability { num, den });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if rng.gen_range(0..den) < num {
                pairs.push((u, v));
            }
        }
    }
    let g = Graph::from_edge_list(n, &pairs).expect("pairs are in range");
    let comps = g.components();
    let bridges: Vec<(usize, usize)> = comps.windows(2).map(|w| (w[0][0], w[1][0])).collect();
    Ok(g.extended(0, &bridges)
        .expect("bridges join distinct components"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_connected() {
        let a = random_connected_graph(8, 1, 4, 1).unwrap();
        assert_eq!(a, random_connected_graph(8, 1, 4, 1).unwrap());
        for seed in 0..200 {
            let g = random_connected_graph(1 + (seed as usize % 12), 1, 5, seed).unwrap();
            assert!(g.is_connected());
        }
        assert_ne!(
            random_connected_graph(12, 1, 2, 3).unwrap(),
            random_connected_graph(12, 1, 2, 4).unwrap()
        );
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(random_connected_graph(0, 1, 2, 0).is_err());
        assert!(random_connected_graph(5, 0, 2, 0).is_err());
        assert!(random_connected_graph(5, 2, 2, 0).is_err());
    }
}
