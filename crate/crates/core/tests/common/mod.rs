//! Shared helpers for the integration suites: seeded generators and
//! independent triple-enumeration oracles. The oracles deliberately avoid
//! the library's counting paths.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rainbow_bounds::{EdgeColoredGraph, Graph};

pub fn all_pairs(n: usize) -> Vec<(u32, u32)> {
    (0..n as u32)
        .flat_map(|u| (u + 1..n as u32).map(move |v| (u, v)))
        .collect()
}

/// Uniform random graph with exactly `m` edges.
pub fn random_graph(n: usize, m: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pool = all_pairs(n);
    assert!(m <= pool.len());
    pool.shuffle(&mut rng);
    pool.truncate(m);
    Graph::new(n, pool).unwrap()
}

/// Uniform random graph with `m` edges, each colored uniformly from
/// `0..colors`.
pub fn random_colored_graph(n: usize, m: usize, colors: u32, seed: u64) -> EdgeColoredGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pool = all_pairs(n);
    assert!(m <= pool.len());
    pool.shuffle(&mut rng);
    pool.truncate(m);
    let colored: Vec<(u32, u32, u32)> = pool
        .into_iter()
        .map(|(u, v)| (u, v, rng.random_range(0..colors)))
        .collect();
    EdgeColoredGraph::from_colored_edges(n, colored).unwrap()
}

/// Edge counts of every vertex triple: (triangles, one-edge triples,
/// happy triples, empty triples), by full enumeration.
pub fn enumerate_triples(g: &Graph) -> (u64, u64, u64, u64) {
    let n = g.n() as u32;
    let (mut tri, mut one, mut happy, mut empty) = (0, 0, 0, 0);
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let edges = [g.has_edge(a, b), g.has_edge(a, c), g.has_edge(b, c)]
                    .iter()
                    .filter(|&&e| e)
                    .count();
                match edges {
                    0 => empty += 1,
                    1 => one += 1,
                    2 => happy += 1,
                    _ => {
                        tri += 1;
                        happy += 1;
                    }
                }
            }
        }
    }
    (tri, one, happy, empty)
}

/// Whether any triangle carries three distinct edge colors, by full
/// enumeration.
pub fn has_rainbow_triangle(ecg: &EdgeColoredGraph) -> bool {
    let g = ecg.graph();
    let n = g.n() as u32;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c) {
                    let x = ecg.color_of(a, b).unwrap();
                    let y = ecg.color_of(a, c).unwrap();
                    let z = ecg.color_of(b, c).unwrap();
                    if x != y && x != z && y != z {
                        return true;
                    }
                }
            }
        }
    }
    false
}
