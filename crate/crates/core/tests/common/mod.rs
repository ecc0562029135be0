//! Shared helpers for the property suites: seeded random graphs, twin
//! injection, and brute-force polynomial-matrix oracles kept independent of
//! the library's computation paths.

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

/// Forces a random pair of vertices into twins by copying neighbourhoods,
/// with the pair edge set by a coin flip (duplicate or co-duplicate).
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
                // edges at k mirror edges at ell
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

/// `λI − A` as a polynomial matrix.
pub fn lambda_i_minus_a(g: &Graph) -> Vec<Vec<Polynomial>> {
    let n = g.n();
    (1..=n)
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
        .collect()
}

/// Brute-force charpoly oracle, independent of the Berkowitz path.
pub fn brute_charpoly(g: &Graph) -> Polynomial {
    det_poly(&lambda_i_minus_a(g))
}

/// Full adjugate of a polynomial matrix by brute-force minors.
pub fn adjugate_poly(m: &[Vec<Polynomial>]) -> Vec<Vec<Polynomial>> {
    let n = m.len();
    let mut adj = vec![vec![Polynomial::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Vec<Vec<Polynomial>> = (0..n)
                .filter(|&r| r != j)
                .map(|r| {
                    (0..n)
                        .filter(|&c| c != i)
                        .map(|c| m[r][c].clone())
                        .collect()
                })
                .collect();
            let d = det_poly(&minor);
            adj[i][j] = if (i + j) % 2 == 0 { d } else { -d };
        }
    }
    adj
}
