use std::sync::OnceLock;

use crate::error::{Error, NotATree, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// A graph certified to be a tree, with its leaves and support vertices.
///
/// The all-pairs distance table is built on first use.
#[derive(Debug, Clone)]
pub struct TreeCert {
    graph: Graph,
    leaves: VertexSet,
    supports: VertexSet,
    dist: OnceLock<Vec<u32>>,
}

impl TreeCert {
    pub fn new(graph: Graph) -> Result<Self> {
        let n = graph.order();
        if n == 0 {
            return Err(Error::NotATree(NotATree::Empty));
        }
        let components = graph.connected_components().len();
        if components != 1 {
            return Err(Error::NotATree(NotATree::Disconnected { components }));
        }
        if graph.size() != n - 1 {
            return Err(Error::NotATree(NotATree::EdgeCount { order: n, edges: graph.size() }));
        }
        Ok(Self::from_tree_unchecked(graph))
    }

    /// Caller guarantees `graph` is a tree.
    pub(crate) fn from_tree_unchecked(graph: Graph) -> Self {
        let leaves: VertexSet = graph.vertices().filter(|&v| graph.neighbors(v).len() == 1).collect();
        let supports: VertexSet = leaves.iter().map(|x| graph.neighbors(x)[0]).collect();
        TreeCert { graph, leaves, supports, dist: OnceLock::new() }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn leaves(&self) -> &VertexSet {
        &self.leaves
    }

    pub fn supports(&self) -> &VertexSet {
        &self.supports
    }

    pub fn is_leaf(&self, v: Vertex) -> bool {
        self.leaves.contains(v)
    }

    pub fn is_support(&self, v: Vertex) -> bool {
        self.supports.contains(v)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.graph.neighbors(v).len()
    }

    /// `x⁺`: the neighbour of a leaf.
    pub fn support_of(&self, leaf: Vertex) -> Option<Vertex> {
        self.is_leaf(leaf).then(|| self.graph.neighbors(leaf)[0])
    }

    /// Leaf neighbours of `v`.
    pub fn leaf_neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.graph.neighbors(v).iter().copied().filter(|&w| self.is_leaf(w))
    }

    /// `x⁻`: the leaf of a support vertex, when it is unique.
    pub fn unique_leaf_of(&self, support: Vertex) -> Option<Vertex> {
        let mut it = self.leaf_neighbors(support);
        match (it.next(), it.next()) {
            (Some(x), None) => Some(x),
            _ => None,
        }
    }

    fn table(&self) -> &[u32] {
        self.dist.get_or_init(|| {
            let n = self.order();
            let mut table = vec![0u32; n * n];
            for s in self.graph.vertices() {
                for (t, d) in self.graph.bfs(s).into_iter().enumerate() {
                    table[s * n + t] = d.finite().expect("tree is connected") as u32;
                }
            }
            table
        })
    }

    /// Path length between two vertices. Panics if either is out of range.
    pub fn dist(&self, u: Vertex, v: Vertex) -> usize {
        let n = self.order();
        assert!(u < n && v < n, "vertex out of range");
        self.table()[u * n + v] as usize
    }

    /// Vertices whose largest branch is smallest; one or two of them.
    pub fn centroids(&self) -> Vec<Vertex> {
        centroids(&self.graph)
    }
}

impl TryFrom<Graph> for TreeCert {
    type Error = Error;

    fn try_from(graph: Graph) -> Result<Self> {
        TreeCert::new(graph)
    }
}

pub fn certify_tree(graph: &Graph) -> Result<TreeCert> {
    TreeCert::new(graph.clone())
}

pub(crate) fn centroids(graph: &Graph) -> Vec<Vertex> {
    let n = graph.order();
    if n <= 1 {
        return (0..n).collect();
    }
    // iterative DFS from 0 for parent order and subtree sizes
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![0];
    parent[0] = 0;
    while let Some(u) = stack.pop() {
        order.push(u);
        for &w in graph.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                stack.push(w);
            }
        }
    }
    let mut size = vec![1usize; n];
    for &u in order.iter().rev().filter(|&&u| u != 0) {
        size[parent[u]] += size[u];
    }
    let heaviest: Vec<usize> = (0..n)
        .map(|u| {
            let up = n - size[u];
            graph
                .neighbors(u)
                .iter()
                .filter(|&&w| w != 0 && parent[w] == u)
                .map(|&w| size[w])
                .chain(std::iter::once(up))
                .max()
                .unwrap_or(0)
        })
        .collect();
    let best = *heaviest.iter().min().unwrap();
    (0..n).filter(|&u| heaviest[u] == best).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_leaves_and_supports() {
        let t = TreeCert::new(Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap()).unwrap();
        assert_eq!(t.leaves(), &VertexSet::from([0, 3]));
        assert_eq!(t.supports(), &VertexSet::from([1, 2]));
        assert_eq!(t.dist(0, 3), 3);
        assert_eq!(t.support_of(3), Some(2));
        assert_eq!(t.support_of(1), None);
        assert_eq!(t.centroids(), vec![1, 2]);
    }

    #[test]
    fn star() {
        let t = TreeCert::new(Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap()).unwrap();
        assert_eq!(t.leaves(), &VertexSet::from([1, 2, 3]));
        assert_eq!(t.supports(), &VertexSet::from([0]));
        assert_eq!(t.unique_leaf_of(0), None);
        assert_eq!(t.centroids(), vec![0]);
    }

    #[test]
    fn rejects_non_trees() {
        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(
            TreeCert::new(c4).unwrap_err(),
            Error::NotATree(NotATree::EdgeCount { order: 4, edges: 4 })
        );
        let split = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            TreeCert::new(split).unwrap_err(),
            Error::NotATree(NotATree::Disconnected { components: 2 })
        );
        assert!(TreeCert::new(Graph::edgeless(0)).is_err());
        assert!(TreeCert::new(Graph::edgeless(1)).is_ok());
    }
}
