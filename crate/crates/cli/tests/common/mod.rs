//! Shared helpers for the acceptance suite: seeded random graphs, twin
//! injection, and brute-force oracles independent of the library paths they
//! check.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twinshift_core::{Graph, Polynomial, TwinPair};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Random graph with a forced twin pair (duplicate or co-duplicate by coin
/// flip): edges at `k` mirror edges at `ell`.
pub fn random_twin_graph(rng: &mut ChaCha8Rng, n: usize) -> (Graph, TwinPair) {
    assert!(n >= 2);
    let ell = rng.gen_range(1..=n - 1);
    let k = rng.gen_range(ell + 1..=n);
    let adjacent = rng.gen_bool(0.5);
    let base = random_graph(rng, n, 0.5);
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            let keep = if (u, v) == (ell, k) {
                adjacent
            } else if u == k {
                base.has_edge(ell, v)
            } else if v == k {
                base.has_edge(u, ell)
            } else {
                base.has_edge(u, v)
            };
            if keep {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::from_edges(n, &edges).unwrap();
    let pair = TwinPair::classify(&g, ell, k).expect("constructed pair must be twins");
    (g, pair)
}

/// Cofactor-expansion determinant of a polynomial matrix.
pub fn det_poly(m: &[Vec<Polynomial>]) -> Polynomial {
    let n = m.len();
    if n == 0 {
        return Polynomial::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Polynomial::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial>> = (1..n)
            .map(|i| {
                (0..n)
                    .filter(|&c| c != j)
                    .map(|c| m[i][c].clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * &det_poly(&minor);
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Brute-force charpoly oracle: cofactor expansion of `λI − A`.
pub fn brute_charpoly(g: &Graph) -> Polynomial {
    let n = g.n();
    let m: Vec<Vec<Polynomial>> = (1..=n)
        .map(|u| {
            (1..=n)
                .map(|v| {
                    if u == v {
                        Polynomial::from_ints(&[0, 1])
                    } else {
                        Polynomial::from_ints(&[-(g.has_edge(u, v) as i64)])
                    }
                })
                .collect()
        })
        .collect();
    det_poly(&m)
}

pub fn adjacency_f64(g: &Graph) -> Vec<Vec<f64>> {
    let n = g.n();
    (1..=n)
        .map(|u| (1..=n).map(|v| g.has_edge(u, v) as i64 as f64).collect())
        .collect()
}
