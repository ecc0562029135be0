//! Simple undirected labeled graphs with dense adjacency storage.
//!
//! Vertex labels are 1-based. Deleting vertex `v` relabels `v+1..n` down by
//! one, preserving relative order.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<bool>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TwinKind {
    /// Non-adjacent twins; contribute eigenvalue 0.
    Duplicate,
    /// Adjacent twins; contribute eigenvalue -1.
    CoDuplicate,
}

/// A validated pair of twin vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TwinPair {
    pub ell: usize,
    pub k: usize,
    pub kind: TwinKind,
}

impl TwinPair {
    /// Classifies the pair `(ell, k)` in `g`, or fails with `NotTwins`.
    pub fn classify(g: &Graph, ell: usize, k: usize) -> Result<TwinPair> {
        g.check_label(ell)?;
        g.check_label(k)?;
        if ell == k {
            return Err(Error::EqualLabels(ell));
        }
        if !g.same_open_neighbourhood(ell, k) {
            return Err(Error::NotTwins(ell, k));
        }
        let kind = if g.has_edge(ell, k) {
            TwinKind::CoDuplicate
        } else {
            TwinKind::Duplicate
        };
        let (ell, k) = (ell.min(k), ell.max(k));
        Ok(TwinPair { ell, k, kind })
    }

    /// Adjacency indicator of the pair: 0 for duplicates, 1 for co-duplicates.
    pub fn a(&self) -> i64 {
        match self.kind {
            TwinKind::Duplicate => 0,
            TwinKind::CoDuplicate => 1,
        }
    }

    /// The eigenvalue contributed by the pair and removed with a twin:
    /// 0 for duplicates, -1 for co-duplicates.
    pub fn removed_eigenvalue(&self) -> i64 {
        -self.a()
    }

    pub fn is_valid_for(&self, g: &Graph) -> bool {
        matches!(TwinPair::classify(g, self.ell, self.k), Ok(p) if p.kind == self.kind)
    }
}

/// Compact creation sequence of a nested split graph: cell sizes
/// `(a_1, ..., a_r)` with `r` even and every `a_i >= 1`. Odd cells are
/// co-cliques, even cells are cliques joined to everything before them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CreationSequence {
    cells: Vec<usize>,
}

impl CreationSequence {
    pub fn new(cells: Vec<usize>) -> Result<Self> {
        if cells.is_empty() || cells.len() % 2 != 0 {
            return Err(Error::InvalidSequence(format!(
                "cell count must be even and nonzero, got {}",
                cells.len()
            )));
        }
        if cells.contains(&0) {
            return Err(Error::InvalidSequence("zero cell size".into()));
        }
        Ok(CreationSequence { cells })
    }

    /// Parses a comma-separated list of cell sizes, e.g. `2,2,1,1`.
    pub fn parse(text: &str) -> Result<Self> {
        let cells = text
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidSequence(format!("bad cell size {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(cells)
    }

    pub fn cells(&self) -> &[usize] {
        &self.cells
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn n(&self) -> usize {
        self.cells.iter().sum()
    }

    /// Vertex labels of cell `i` (1-based), numbered cell by cell.
    pub fn cell_labels(&self, i: usize) -> std::ops::RangeInclusive<usize> {
        let before: usize = self.cells[..i - 1].iter().sum();
        before + 1..=before + self.cells[i - 1]
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            adj: vec![vec![false; n]; n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return Err(Error::InvalidEdge {
                u,
                v,
                msg: "loops are not allowed".into(),
            });
        }
        if u < 1 || u > self.n || v < 1 || v > self.n {
            return Err(Error::InvalidEdge {
                u,
                v,
                msg: format!("labels must lie in 1..={}", self.n),
            });
        }
        if self.adj[u - 1][v - 1] {
            return Err(Error::InvalidEdge {
                u,
                v,
                msg: "duplicate edge".into(),
            });
        }
        self.adj[u - 1][v - 1] = true;
        self.adj[v - 1][u - 1] = true;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn check_label(&self, v: usize) -> Result<()> {
        if v < 1 || v > self.n {
            return Err(Error::LabelOutOfRange { label: v, n: self.n });
        }
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u - 1][v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].iter().filter(|&&b| b).count()
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|row| row.iter().filter(|&&b| b).count())
            .sum::<usize>()
            / 2
    }

    /// Edges as sorted 1-based pairs `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 1..=self.n {
            for v in u + 1..=self.n {
                if self.adj[u - 1][v - 1] {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Edge iff non-edge in `self`; same labels.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in 0..self.n {
                g.adj[u][v] = u != v && !self.adj[u][v];
            }
        }
        g
    }

    /// Removes vertex `v` and its incident edges; labels above `v` shift down.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_label(v)?;
        let keep: Vec<usize> = (0..self.n).filter(|&i| i != v - 1).collect();
        let mut g = Graph::empty(self.n - 1);
        for (i, &oi) in keep.iter().enumerate() {
            for (j, &oj) in keep.iter().enumerate() {
                g.adj[i][j] = self.adj[oi][oj];
            }
        }
        Ok(g)
    }

    fn same_open_neighbourhood(&self, ell: usize, k: usize) -> bool {
        let (ei, ki) = (ell - 1, k - 1);
        (0..self.n)
            .filter(|&j| j != ei && j != ki)
            .all(|j| self.adj[ei][j] == self.adj[ki][j])
    }

    /// All twin pairs, classified and sorted lexicographically.
    pub fn find_twins(&self) -> Vec<TwinPair> {
        let mut out = Vec::new();
        for ell in 1..=self.n {
            for k in ell + 1..=self.n {
                if self.same_open_neighbourhood(ell, k) {
                    let kind = if self.has_edge(ell, k) {
                        TwinKind::CoDuplicate
                    } else {
                        TwinKind::Duplicate
                    };
                    out.push(TwinPair { ell, k, kind });
                }
            }
        }
        out
    }

    /// Isomorphic graph with the twin pair relabeled to 1 and 2; all other
    /// vertices keep their relative order. The spectrum is unchanged.
    pub fn permute_pair_to_front(&self, pair: &TwinPair) -> Result<Graph> {
        if !pair.is_valid_for(self) {
            return Err(Error::NotTwins(pair.ell, pair.k));
        }
        let mut order = vec![pair.ell - 1, pair.k - 1];
        order.extend((0..self.n).filter(|&i| i != pair.ell - 1 && i != pair.k - 1));
        let mut g = Graph::empty(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                g.adj[i][j] = self.adj[order[i]][order[j]];
            }
        }
        Ok(g)
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for v in 0..self.n {
                if self.adj[u][v] && !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphJson {
            n: self.n,
            edges: self.edges(),
        })
        .expect("graph serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Graph> {
        let parsed: GraphJson = serde_json::from_str(text).map_err(|e| Error::ParseError {
            line: e.line(),
            msg: e.to_string(),
        })?;
        Graph::from_edges(parsed.n, &parsed.edges)
    }

    /// Parses either the JSON object format or whitespace edge-list text
    /// (one `u v` pair per line, optional leading `n=<int>` line).
    pub fn parse(text: &str) -> Result<Graph> {
        if text.trim_start().starts_with('{') {
            return Graph::from_json(text);
        }
        let mut n: Option<usize> = None;
        let mut edges = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("n=") {
                n = Some(rest.trim().parse().map_err(|_| Error::ParseError {
                    line: lineno + 1,
                    msg: format!("bad vertex count {rest:?}"),
                })?);
                continue;
            }
            let mut it = line.split_whitespace();
            let (u, v) = match (it.next(), it.next(), it.next()) {
                (Some(u), Some(v), None) => (u, v),
                _ => {
                    return Err(Error::ParseError {
                        line: lineno + 1,
                        msg: format!("expected `u v`, got {line:?}"),
                    })
                }
            };
            let parse = |t: &str| {
                t.parse::<usize>().map_err(|_| Error::ParseError {
                    line: lineno + 1,
                    msg: format!("bad vertex label {t:?}"),
                })
            };
            edges.push((parse(u)?, parse(v)?));
        }
        let n = n.unwrap_or_else(|| {
            edges
                .iter()
                .map(|&(u, v)| u.max(v))
                .max()
                .unwrap_or(0)
        });
        Graph::from_edges(n, &edges)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Builds the nested split graph of a compact creation sequence. Vertices are
/// numbered cell by cell; vertices of an even-indexed (clique) cell are
/// adjacent to each other and to every vertex of earlier cells.
pub fn build_nsg(seq: &CreationSequence) -> Graph {
    let n = seq.n();
    let mut cell_of = vec![0usize; n];
    let mut next = 0;
    for (ci, &size) in seq.cells().iter().enumerate() {
        for _ in 0..size {
            cell_of[next] = ci + 1;
            next += 1;
        }
    }
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            let (cu, cv) = (cell_of[u], cell_of[v]);
            let later = cu.max(cv);
            if later % 2 == 0 {
                g.adj[u][v] = true;
                g.adj[v][u] = true;
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Graph {
        Graph::from_edges(3, &[(1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn parse_json_k2() {
        let g = Graph::parse(r#"{"n":2,"edges":[[1,2]]}"#).unwrap();
        assert_eq!(g.n(), 2);
        assert!(g.has_edge(1, 2));
    }

    #[test]
    fn parse_edge_list_infers_n() {
        let g = Graph::parse("1 2\n2 3").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), vec![(1, 2), (2, 3)]);
    }

    #[test]
    fn parse_rejects_loop_and_duplicate() {
        assert!(matches!(
            Graph::parse("1 1"),
            Err(Error::InvalidEdge { .. })
        ));
        assert!(matches!(
            Graph::parse("1 2\n2 1"),
            Err(Error::InvalidEdge { .. })
        ));
    }

    #[test]
    fn nsg_small_cases() {
        let k2 = build_nsg(&CreationSequence::parse("1,1").unwrap());
        assert_eq!(k2.edges(), vec![(1, 2)]);
        let star = build_nsg(&CreationSequence::parse("2,1").unwrap());
        assert_eq!(star.edges(), vec![(1, 3), (2, 3)]);
        assert!(star.is_connected());
    }

    #[test]
    fn nsg_eighteen_vertices() {
        let seq = CreationSequence::parse("2,2,2,2,2,2,2,2,1,1").unwrap();
        assert_eq!(seq.n(), 18);
        assert_eq!(seq.cell_count(), 10);
        let g = build_nsg(&seq);
        assert!(g.is_connected());
        assert_eq!(seq.cell_labels(3), 5..=6);
        // third cell is a co-clique: 5 and 6 are duplicates
        assert!(matches!(
            TwinPair::classify(&g, 5, 6),
            Ok(TwinPair { kind: TwinKind::Duplicate, .. })
        ));
        // second cell is a clique: 3 and 4 are co-duplicates
        assert!(matches!(
            TwinPair::classify(&g, 3, 4),
            Ok(TwinPair { kind: TwinKind::CoDuplicate, .. })
        ));
    }

    #[test]
    fn nsg_cell_structure() {
        let seq = CreationSequence::parse("3,2,2,1").unwrap();
        let g = build_nsg(&seq);
        // co-clique cells carry no internal edges
        for cell in [1, 3] {
            for u in seq.cell_labels(cell) {
                for v in seq.cell_labels(cell) {
                    assert!(u == v || !g.has_edge(u, v));
                }
            }
        }
        // clique cells are complete and joined to every earlier vertex
        for cell in [2, 4] {
            let first = *seq.cell_labels(cell).start();
            for u in seq.cell_labels(cell) {
                for v in 1..first {
                    assert!(g.has_edge(u, v));
                }
                for v in seq.cell_labels(cell) {
                    assert!(u == v || g.has_edge(u, v));
                }
            }
        }
    }

    #[test]
    fn invalid_sequences() {
        assert!(CreationSequence::parse("2,2,2").is_err());
        assert!(CreationSequence::parse("2,0").is_err());
        assert!(CreationSequence::parse("").is_err());
    }

    #[test]
    fn complement_is_involution() {
        let g = p3();
        let c = g.complement();
        assert_eq!(c.edges(), vec![(1, 3)]);
        assert_eq!(c.complement(), g);
    }

    #[test]
    fn delete_vertex_relabels() {
        let g = p3();
        let mid = g.delete_vertex(2).unwrap();
        assert_eq!(mid.edge_count(), 0);
        let end = g.delete_vertex(1).unwrap();
        assert_eq!(end.edges(), vec![(1, 2)]);
        assert!(matches!(
            g.delete_vertex(4),
            Err(Error::LabelOutOfRange { .. })
        ));
    }

    #[test]
    fn twins_in_small_graphs() {
        let twins = p3().find_twins();
        assert_eq!(twins.len(), 1);
        assert_eq!(twins[0], TwinPair { ell: 1, k: 3, kind: TwinKind::Duplicate });

        let k3 = Graph::from_edges(3, &[(1, 2), (1, 3), (2, 3)]).unwrap();
        let twins = k3.find_twins();
        assert_eq!(twins.len(), 3);
        assert!(twins.iter().all(|t| t.kind == TwinKind::CoDuplicate));
    }

    #[test]
    fn twin_classification_errors() {
        assert!(matches!(
            TwinPair::classify(&p3(), 1, 2),
            Err(Error::NotTwins(1, 2))
        ));
        assert!(matches!(
            TwinPair::classify(&p3(), 2, 2),
            Err(Error::EqualLabels(2))
        ));
    }

    #[test]
    fn permute_pair_to_front_moves_twins() {
        let g = p3();
        let pair = TwinPair::classify(&g, 1, 3).unwrap();
        let h = g.permute_pair_to_front(&pair).unwrap();
        assert_eq!(h.edges(), vec![(1, 3), (2, 3)]);
        // identity case
        let k2 = Graph::from_edges(2, &[(1, 2)]).unwrap();
        let pair = TwinPair::classify(&k2, 1, 2).unwrap();
        assert_eq!(k2.permute_pair_to_front(&pair).unwrap(), k2);
    }

    #[test]
    fn json_round_trip() {
        let g = p3();
        let back = Graph::from_json(&g.to_json()).unwrap();
        assert_eq!(back, g);
    }
}
