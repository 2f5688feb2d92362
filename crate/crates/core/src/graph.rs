//! Immutable undirected simple graphs.
//!
//! Vertices are the ids `0..n`. Deleting vertices never mutates a graph; it
//! produces an [`Induced`] subgraph that remembers where each vertex came from.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Sorted, duplicate-free set of vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    /// Fails if some member is not a vertex of a graph on `order` vertices.
    pub fn check_within(&self, order: usize) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= order => Err(Error::VertexOutOfRange { vertex: v, order }),
            _ => Ok(()),
        }
    }

    pub fn complement(&self, order: usize) -> VertexSet {
        VertexSet((0..order).filter(|&v| !self.contains(v)).collect())
    }

    pub fn with(&self, v: Vertex) -> VertexSet {
        let mut out = self.clone();
        if let Err(pos) = out.0.binary_search(&v) {
            out.0.insert(pos, v);
        }
        out
    }

    /// Membership bitmask; every member must be below 64.
    pub(crate) fn mask(&self) -> u64 {
        self.iter().fold(0, |m, v| m | (1u64 << v))
    }

    pub(crate) fn from_mask(mask: u64) -> VertexSet {
        VertexSet((0..64).filter(|&v| mask >> v & 1 == 1).collect())
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut v: Vec<Vertex> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(a: [Vertex; N]) -> Self {
        a.into_iter().collect()
    }
}

impl From<Vec<Vertex>> for VertexSet {
    fn from(v: Vec<Vertex>) -> Self {
        v.into_iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// Shortest-path length, or `Unreachable` across components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Unreachable,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Unreachable => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Unreachable => f.write_str("unreachable"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph on `order` vertices. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn new<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); order];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(Error::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut twice = 0;
        for nbrs in &mut adj {
            nbrs.sort_unstable();
            nbrs.dedup();
            twice += nbrs.len();
        }
        Ok(Graph { adj, edge_count: twice / 2 })
    }

    pub fn edgeless(order: usize) -> Self {
        Graph { adj: vec![Vec::new(); order], edge_count: 0 }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.order()
    }

    fn check(&self, v: Vertex) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, order: self.order() })
        }
    }

    /// Sorted neighbours of `v`. Panics if `v` is out of range.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> Result<usize> {
        self.check(v)?;
        Ok(self.adj[v].len())
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn distance(&self, u: Vertex, v: Vertex) -> Result<Distance> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.bfs(u)[v])
    }

    /// Distances from `source` to every vertex.
    pub fn bfs(&self, source: Vertex) -> Vec<Distance> {
        let mut dist = vec![Distance::Unreachable; self.order()];
        let mut queue = VecDeque::new();
        dist[source] = Distance::Finite(0);
        queue.push_back((source, 0));
        while let Some((u, d)) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == Distance::Unreachable {
                    dist[w] = Distance::Finite(d + 1);
                    queue.push_back((w, d + 1));
                }
            }
        }
        dist
    }

    /// Components in order of their smallest vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![s];
            let mut comp = Vec::new();
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            out.push(comp.into());
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// `G[X]`, with vertices renumbered in increasing order of their original id.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Result<Induced> {
        keep.check_within(self.order())?;
        let mut new_id = vec![usize::MAX; self.order()];
        for (i, v) in keep.iter().enumerate() {
            new_id[v] = i;
        }
        let adj = keep
            .iter()
            .map(|v| {
                self.adj[v]
                    .iter()
                    .filter(|&&w| new_id[w] != usize::MAX)
                    .map(|&w| new_id[w])
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>();
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Ok(Induced { graph: Graph { adj, edge_count }, original: keep.as_slice().to_vec() })
    }

    /// `G - X`.
    pub fn remove_vertices(&self, drop: &VertexSet) -> Result<Induced> {
        drop.check_within(self.order())?;
        self.induced_subgraph(&drop.complement(self.order()))
    }

    /// Graph in which vertex `v` is renamed `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Graph> {
        if perm.len() != self.order() || perm.iter().collect::<std::collections::HashSet<_>>().len() != perm.len() {
            return Err(Error::InvalidInput("relabelling is not a permutation".into()));
        }
        Graph::new(self.order(), self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Neighbourhood bitmasks, for graphs on at most 64 vertices.
    pub(crate) fn adjacency_masks(&self) -> Vec<u64> {
        debug_assert!(self.order() <= 64);
        self.adj.iter().map(|nbrs| nbrs.iter().fold(0u64, |m, &w| m | (1 << w))).collect()
    }
}

/// An induced subgraph together with the map from its ids to the host's ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Induced {
    pub graph: Graph,
    pub original: Vec<Vertex>,
}

impl Induced {
    pub fn to_original(&self, v: Vertex) -> Vertex {
        self.original[v]
    }

    pub fn set_to_original(&self, set: &VertexSet) -> VertexSet {
        set.iter().map(|v| self.original[v]).collect()
    }

    /// Translates host ids into ids of this subgraph; `None` if some vertex was dropped.
    pub fn set_from_original(&self, set: &VertexSet) -> Option<VertexSet> {
        set.iter().map(|v| self.original.binary_search(&v).ok()).collect::<Option<Vec<_>>>().map(VertexSet::from)
    }
}
