//! Cross-checks of the exact engine against brute-force oracles and the
//! twin-deletion identities.

mod common;

use common::{adjugate_poly, brute_charpoly, lambda_i_minus_a, random_graph, random_twin_graph, rng};
use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;
use twinshift_core::charpoly::{
    charpoly, cofactor, cofactor_seq, main_polynomial, twin_deleted_charpoly, verify_twin_identity,
};
use twinshift_core::squarefree::square_free_part;
use twinshift_core::{build_nsg, CreationSequence, Graph, Polynomial, TwinKind, TwinPair};

#[test]
fn berkowitz_matches_brute_force_up_to_six_vertices() {
    let mut r = rng(11);
    for _ in 0..150 {
        let n = r.gen_range(1..=6);
        let g = random_graph(&mut r, n, 0.5);
        assert_eq!(charpoly(&g), brute_charpoly(&g), "graph {g:?}");
    }
}

#[test]
fn twin_identities_hold_exactly() {
    let mut r = rng(23);
    for _ in 0..120 {
        let n = r.gen_range(3..=10);
        let (g, pair) = random_twin_graph(&mut r, n);
        let phi = charpoly(&g);
        let lin = Polynomial::lambda_plus(pair.a());
        // (λ+a) divides Φ exactly
        let quotient = phi.exact_div(&lin).expect("twin eigenvalue must divide");
        // full identity with both sides computed independently
        let report = verify_twin_identity(&g, &pair).unwrap();
        assert!(report.identity_holds, "identity failed for {g:?} {pair:?}");
        // deletion of either twin gives the same charpoly
        let left = charpoly(&g.delete_vertex(pair.ell).unwrap());
        let right = charpoly(&g.delete_vertex(pair.k).unwrap());
        assert_eq!(left, right);
        assert_eq!(twin_deleted_charpoly(&g, &pair).unwrap(), left);
        assert_eq!(&quotient + &report.h, left);
    }
}

#[test]
fn cofactor_agrees_with_brute_adjugate() {
    let mut r = rng(31);
    for _ in 0..40 {
        let n = r.gen_range(2..=5);
        let g = random_graph(&mut r, n, 0.5);
        let adj = adjugate_poly(&lambda_i_minus_a(&g));
        let ell = r.gen_range(1..=n - 1);
        let k = r.gen_range(ell + 1..=n);
        let h = cofactor(&g, ell, k).unwrap();
        assert_eq!(h, adj[ell - 1][k - 1], "entry ({ell},{k}) of {g:?}");
        assert_eq!(h, cofactor(&g, k, ell).unwrap());
        assert_eq!(h, cofactor_seq(&g, ell, k).unwrap());
    }
}

#[test]
fn block_forms_after_permuting_twins_to_front() {
    let mut r = rng(47);
    for _ in 0..60 {
        let n = r.gen_range(3..=8);
        let (g, pair) = random_twin_graph(&mut r, n);
        let front = g.permute_pair_to_front(&pair).unwrap();
        let front_pair = TwinPair::classify(&front, 1, 2).unwrap();
        assert_eq!(front_pair.kind, pair.kind);
        let phi = charpoly(&front);
        // spectrum invariant under the similarity permutation
        assert_eq!(phi, charpoly(&g));
        // Φ = (λ+a)²·Φ(C) − 2(λ+a)·h with C the graph minus both twins
        let c_graph = front.delete_vertex(1).unwrap().delete_vertex(1).unwrap();
        let phi_c = charpoly(&c_graph);
        let h = cofactor(&front, 1, 2).unwrap();
        let lin = Polynomial::lambda_plus(pair.a());
        let rhs = &(&lin.pow(2) * &phi_c) - &(&(&lin + &lin) * &h);
        assert_eq!(phi, rhs, "block identity failed for {front:?}");
    }
}

#[test]
fn h12_matches_schur_form_on_small_graphs() {
    let mut r = rng(53);
    for _ in 0..40 {
        let n = r.gen_range(3..=6);
        let (g, pair) = random_twin_graph(&mut r, n);
        let front = g.permute_pair_to_front(&pair).unwrap();
        let c_graph = front.delete_vertex(1).unwrap().delete_vertex(1).unwrap();
        let h = cofactor(&front, 1, 2).unwrap();
        let phi_c = charpoly(&c_graph);
        // b^T · adj(λI − C) · b by brute force
        let adj_c = adjugate_poly(&lambda_i_minus_a(&c_graph));
        let b: Vec<bool> = (3..=front.n()).map(|v| front.has_edge(1, v)).collect();
        let mut quad = Polynomial::zero();
        for (i, &bi) in b.iter().enumerate() {
            if !bi {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj {
                    quad = &quad + &adj_c[i][j];
                }
            }
        }
        let a_phi_c = if pair.a() == 1 { phi_c } else { Polynomial::zero() };
        assert_eq!(&h - &a_phi_c, quad, "h − aΦ(C) ≠ bᵀ·adj(λI−C)·b for {front:?}");
    }
}

#[test]
fn main_polynomial_divides_radical_and_annihilates_ones() {
    let mut r = rng(61);
    for _ in 0..50 {
        let n = r.gen_range(1..=9);
        let g = random_graph(&mut r, n, 0.5);
        let m = main_polynomial(&g);
        let radical = square_free_part(&charpoly(&g)).unwrap();
        assert!(
            radical.exact_div(&m).is_ok(),
            "main polynomial must divide the square-free part"
        );
        // m(A)·j = 0 exactly, by Horner on vectors
        let coeffs = m.coeffs();
        let ones = vec![BigInt::from(1); n];
        let mut v: Vec<BigInt> = ones.iter().map(|x| x * coeffs.last().unwrap()).collect();
        for c in coeffs.iter().rev().skip(1) {
            let av: Vec<BigInt> = (1..=n)
                .map(|u| {
                    let mut acc = BigInt::zero();
                    for w in 1..=n {
                        if g.has_edge(u, w) {
                            acc += &v[w - 1];
                        }
                    }
                    acc
                })
                .collect();
            v = av.into_iter().map(|x| x + c).collect();
        }
        assert!(v.iter().all(|x| x.is_zero()), "m(A)j ≠ 0 for {g:?}");
    }
}

#[test]
fn nsg_main_eigenvalue_counts() {
    for (seq, expect) in [
        ("2,2,2,2,2,2,2,2,1,1", 10),
        ("1,2,2,2,2,2,2,2,1,1", 9),
        ("2,1,2,2,2,2,2,2,1,1", 10),
        ("1,1", 1),
        ("3,2,1,4", 4),
        ("1,3,2,2", 3),
    ] {
        let g = build_nsg(&CreationSequence::parse(seq).unwrap());
        assert_eq!(
            main_polynomial(&g).degree(),
            Some(expect),
            "main count for {seq}"
        );
    }
}

#[test]
fn complement_swaps_twin_kinds() {
    let mut r = rng(71);
    for _ in 0..30 {
        let n = r.gen_range(2..=9);
        let (g, _) = random_twin_graph(&mut r, n);
        let mut twins_g = g.find_twins();
        let mut twins_c: Vec<TwinPair> = g
            .complement()
            .find_twins()
            .into_iter()
            .map(|t| TwinPair {
                kind: match t.kind {
                    TwinKind::Duplicate => TwinKind::CoDuplicate,
                    TwinKind::CoDuplicate => TwinKind::Duplicate,
                },
                ..t
            })
            .collect();
        twins_g.sort();
        twins_c.sort();
        assert_eq!(twins_g, twins_c);
    }
}

#[test]
fn delete_then_reinsert_is_isomorphic() {
    let mut r = rng(83);
    for _ in 0..30 {
        let n = r.gen_range(2..=8);
        let g = random_graph(&mut r, n, 0.5);
        let v = r.gen_range(1..=n);
        let neighbours: Vec<usize> = (1..=n).filter(|&u| g.has_edge(v, u)).collect();
        let deleted = g.delete_vertex(v).unwrap();
        // re-insert as the new last vertex with the same neighbourhood
        let mut edges = deleted.edges();
        for u in neighbours {
            let shifted = if u > v { u - 1 } else { u };
            edges.push((shifted, n));
        }
        let rebuilt = Graph::from_edges(n, &edges).unwrap();
        assert_eq!(charpoly(&rebuilt), charpoly(&g));
    }
}
