//! Constrained search for the 8-vertex example graph: vertices 1,2 are
//! co-duplicates (edge 1-2 present), vertices 7,8 are duplicates (edge 7-8
//! absent), and the exact characteristic polynomial must equal a given
//! target. Twin constraints leave 15 free edge bits, so the whole space is
//! 32768 candidates.

use num_traits::ToPrimitive;

use crate::charpoly::charpoly;
use crate::error::{Error, Result};
use crate::exec::map_range;
use crate::graph::Graph;
use crate::poly::Polynomial;

pub const CANDIDATE_COUNT: usize = 1 << 15;

#[derive(Debug, Clone)]
pub struct ReconstructionOutcome {
    /// All connected candidates whose charpoly equals the target, in mask
    /// order (deterministic across runs and thread counts).
    pub matches: Vec<Graph>,
    pub examined: usize,
}

/// Candidate graph for a 15-bit mask. Free bits: edges inside {3,4,5,6}
/// (6 bits), edges from the class {1,2} to each of 3..6 (4 bits), one bit for
/// the class-to-class edges {1,2}×{7,8}, and edges from each of 3..6 to the
/// class {7,8} (4 bits). Twins see the same neighbours by construction.
pub fn candidate_graph(mask: u32) -> Graph {
    let mut edges: Vec<(usize, usize)> = vec![(1, 2)];
    const INNER: [(usize, usize); 6] = [(3, 4), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6)];
    for (bit, &e) in INNER.iter().enumerate() {
        if mask >> bit & 1 == 1 {
            edges.push(e);
        }
    }
    for t in 0..4 {
        if mask >> (6 + t) & 1 == 1 {
            let v = 3 + t;
            edges.push((1, v));
            edges.push((2, v));
        }
    }
    if mask >> 10 & 1 == 1 {
        for u in [1, 2] {
            for w in [7, 8] {
                edges.push((u, w));
            }
        }
    }
    for t in 0..4 {
        if mask >> (11 + t) & 1 == 1 {
            let v = 3 + t;
            edges.push((v, 7));
            edges.push((v, 8));
        }
    }
    Graph::from_edges(8, &edges).expect("mask edges are valid by construction")
}

/// Exhaustive search over all candidates; parallel when the feature is on.
pub fn find_eight_vertex_graphs(target: &Polynomial) -> Result<ReconstructionOutcome> {
    search(target, true)
}

/// Single-threaded variant with identical output.
pub fn find_eight_vertex_graphs_seq(target: &Polynomial) -> Result<ReconstructionOutcome> {
    search(target, false)
}

fn search(target: &Polynomial, parallel: bool) -> Result<ReconstructionOutcome> {
    assert_eq!(target.degree(), Some(8), "target must be a degree-8 charpoly");
    // λ^(n−2) coefficient of a charpoly is −|E|: a cheap pre-filter
    let edge_target = (-target.coeff(6)).to_i64().unwrap_or(-1);
    let matches: Vec<Graph> = map_range(CANDIDATE_COUNT, parallel, |mask| {
        let g = candidate_graph(mask as u32);
        if edge_target >= 0 && g.edge_count() as i64 != edge_target {
            return None;
        }
        if !g.is_connected() {
            return None;
        }
        (charpoly(&g) == *target).then_some(g)
    })
    .into_iter()
    .flatten()
    .collect();
    if matches.is_empty() {
        return Err(Error::NoMatch);
    }
    Ok(ReconstructionOutcome {
        matches,
        examined: CANDIDATE_COUNT,
    })
}
