//! Simple undirected graphs on dense labels `0..n`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A simple undirected graph. Vertices are `0..order()`.
///
/// Construction validates every edge, so a `Graph` never holds self-loops,
/// duplicate edges or out-of-range endpoints. Edges are kept in canonical
/// form (`u < v`, sorted), which makes `==` an edge-set comparison.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

/// The families with a fixed labelling produced by [`Graph::standard`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardKind {
    Path,
    Cycle,
    Complete,
    /// `K_{1,r}` with center `0`; the size parameter is `r`.
    Star,
}

impl Graph {
    /// Builds a graph of order `n` from an edge list.
    ///
    /// Duplicate edges are rejected rather than merged, in either orientation.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut seen = BTreeSet::new();
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        order: n,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::DuplicateEdge(u, v));
            }
        }
        let edges: Vec<_> = seen.into_iter().collect();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj, edges })
    }

    /// Graph of order `n` with no edges.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, &[])
    }

    pub fn standard(kind: StandardKind, size: usize) -> Result<Self> {
        let (family, min) = match kind {
            StandardKind::Path => ("path", 1),
            StandardKind::Cycle => ("cycle", 3),
            StandardKind::Complete => ("complete", 1),
            StandardKind::Star => ("star", 1),
        };
        if size < min {
            return Err(Error::BelowFamilyMinimum { family, size, min });
        }
        match kind {
            StandardKind::Path => Self::path(size),
            StandardKind::Cycle => Self::cycle(size),
            StandardKind::Complete => Self::complete(size),
            StandardKind::Star => Self::star(size),
        }
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::new(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::BelowFamilyMinimum {
                family: "cycle",
                size: n,
                min: 3,
            });
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::new(n, &edges)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Self::new(n, &edges)
    }

    /// `K_{1,r}`: center `0`, leaves `1..=r`.
    pub fn star(r: usize) -> Result<Self> {
        let edges: Vec<_> = (1..=r).map(|i| (0, i)).collect();
        Self::new(r + 1, &edges)
    }

    /// `K_1 + h`: the new vertex gets label `h.order()` and is adjacent to
    /// every vertex of `h`.
    pub fn join_with_k1(h: &Graph) -> Graph {
        let apex = h.order();
        let mut edges = h.edges.clone();
        edges.extend((0..apex).map(|u| (u, apex)));
        Self::new(apex + 1, &edges).expect("join of a valid graph is valid")
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }

    pub(crate) fn check_vertices(&self, vs: &[usize]) -> Result<()> {
        vs.iter().try_for_each(|&v| self.check_vertex(v))
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.order()];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.order()
    }

    /// True iff the graph is a path `P_n` (including `P_1`).
    pub fn is_path(&self) -> bool {
        let n = self.order();
        self.size() == n - 1 && self.is_connected() && self.adj.iter().all(|a| a.len() <= 2)
    }

    pub fn is_tree(&self) -> bool {
        self.size() == self.order() - 1 && self.is_connected()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.size() == n * (n - 1) / 2
    }

    /// Subgraph induced by `keep`, relabelled `0..keep.len()` in the order
    /// given. Returns `None` when `keep` is empty.
    pub fn induced(&self, keep: &[usize]) -> Result<Option<Graph>> {
        self.check_vertices(keep)?;
        if keep.is_empty() {
            return Ok(None);
        }
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]))
            .collect();
        Graph::new(keep.len(), &edges).map(Some)
    }

    /// Bitmask of the closed neighbourhood of each vertex. Only valid for
    /// order <= 64.
    pub(crate) fn closed_neighborhood_masks(&self) -> Vec<u64> {
        debug_assert!(self.order() <= 64);
        self.adj
            .iter()
            .enumerate()
            .map(|(v, ns)| ns.iter().fold(1u64 << v, |m, &w| m | 1u64 << w))
            .collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges)
    }
}
