//! Canonical codes for trees, unlabeled tree enumeration and the Prüfer oracle.

use std::collections::HashSet;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::tree::{centroids, TreeCert};

/// Largest `n` accepted by [`all_trees`].
pub const UNLABELED_GUARD: usize = 18;
/// Largest `n` accepted by [`all_labeled_trees`].
pub const LABELED_GUARD: usize = 9;

/// Parenthesis encoding of a tree rooted at its centroid, children sorted.
/// Two trees have equal codes exactly when they are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Number of vertices of the encoded tree.
    pub fn order(&self) -> usize {
        self.0.len() / 2
    }

    /// Packs `(` as 1 and `)` as 0, most significant bit first.
    pub fn to_hex(&self) -> String {
        self.0
            .chunks(8)
            .map(|chunk| {
                let byte = chunk.iter().enumerate().fold(0u8, |b, (i, &c)| b | (((c == b'(') as u8) << (7 - i)));
                format!("{byte:02x}")
            })
            .collect()
    }

    pub fn from_hex(hex: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("malformed canonical code {hex:?}"));
        if !hex.len().is_multiple_of(2) || !hex.is_ascii() {
            return Err(bad());
        }
        let mut bits = Vec::with_capacity(hex.len() * 4);
        for i in (0..hex.len()).step_by(2) {
            let byte = u8::from_str_radix(&hex[i..i + 2], 16).map_err(|_| bad())?;
            bits.extend((0..8).rev().map(|j| byte >> j & 1 == 1));
        }
        // the encoding ends where the depth first returns to zero
        let mut depth = 0usize;
        let mut code = Vec::new();
        for bit in bits {
            if bit {
                depth += 1;
                code.push(b'(');
            } else {
                depth = depth.checked_sub(1).ok_or_else(bad)?;
                code.push(b')');
            }
            if depth == 0 {
                break;
            }
        }
        if depth != 0 || code.is_empty() {
            return Err(bad());
        }
        Ok(CanonicalCode(code))
    }

    /// The tree whose vertices are numbered in preorder of the encoding.
    pub fn to_tree(&self) -> TreeCert {
        let n = self.order();
        let mut edges = Vec::with_capacity(n.saturating_sub(1));
        let mut stack: Vec<Vertex> = Vec::new();
        let mut next = 0;
        for &c in &self.0 {
            if c == b'(' {
                if let Some(&parent) = stack.last() {
                    edges.push((parent, next));
                }
                stack.push(next);
                next += 1;
            } else {
                stack.pop();
            }
        }
        TreeCert::from_tree_unchecked(Graph::new(n, edges).expect("code describes a tree"))
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(std::str::from_utf8(&self.0).expect("ascii"))
    }
}

/// AHU code of `graph` (a tree) rooted at `root`.
fn rooted_code(graph: &Graph, root: Vertex) -> Vec<u8> {
    let n = graph.order();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![root];
    parent[root] = root;
    while let Some(u) = stack.pop() {
        order.push(u);
        for &w in graph.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                stack.push(w);
            }
        }
    }
    let mut codes: Vec<Vec<u8>> = vec![Vec::new(); n];
    let mut children: Vec<Vec<Vec<u8>>> = vec![Vec::new(); n];
    for &u in order.iter().rev() {
        let mut kids = std::mem::take(&mut children[u]);
        kids.sort_unstable();
        let mut code = Vec::with_capacity(2 + kids.iter().map(Vec::len).sum::<usize>());
        code.push(b'(');
        for k in kids {
            code.extend_from_slice(&k);
        }
        code.push(b')');
        if u == root {
            codes[u] = code;
        } else {
            children[parent[u]].push(code);
        }
    }
    std::mem::take(&mut codes[root])
}

fn canonical_of_graph(graph: &Graph) -> CanonicalCode {
    let code = centroids(graph).into_iter().map(|c| rooted_code(graph, c)).min().expect("tree is nonempty");
    CanonicalCode(code)
}

pub fn canonical_form(t: &TreeCert) -> CanonicalCode {
    canonical_of_graph(t.graph())
}

pub fn are_isomorphic(a: &TreeCert, b: &TreeCert) -> bool {
    a.order() == b.order() && a.graph().size() == b.graph().size() && canonical_form(a) == canonical_form(b)
}

fn check(n: usize, guard: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidInput("trees have at least one vertex".into()));
    }
    if n > guard {
        return Err(Error::TooLarge { order: n, guard });
    }
    Ok(())
}

/// Codes of all trees on `n` vertices, one per isomorphism class, sorted.
///
/// Every tree on `n >= 2` vertices is a tree on `n - 1` vertices plus a leaf,
/// so the classes are grown one vertex at a time.
pub fn all_tree_codes(n: usize) -> Result<Vec<CanonicalCode>> {
    check(n, UNLABELED_GUARD)?;
    let mut level = vec![CanonicalCode(b"()".to_vec())];
    for m in 1..n {
        let next: HashSet<CanonicalCode> = level
            .par_iter()
            .fold(HashSet::new, |mut acc, code| {
                let t = code.to_tree();
                let edges: Vec<_> = t.graph().edges().collect();
                for v in 0..m {
                    let g = Graph::new(m + 1, edges.iter().copied().chain([(v, m)])).expect("valid extension");
                    acc.insert(canonical_of_graph(&g));
                }
                acc
            })
            .reduce(HashSet::new, |mut a, b| {
                a.extend(b);
                a
            });
        level = next.into_iter().collect();
        level.par_sort_unstable();
    }
    Ok(level)
}

/// One representative per isomorphism class of trees on `n` vertices, in
/// increasing order of canonical code.
pub fn all_trees(n: usize) -> Result<impl ExactSizeIterator<Item = TreeCert>> {
    Ok(all_tree_codes(n)?.into_iter().map(|c| c.to_tree()))
}

/// Tree of a Prüfer sequence over `0..seq.len() + 2`.
pub fn prufer_decode(seq: &[Vertex]) -> Graph {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf remains");
        edges.push((leaf, s));
        degree[leaf] = 0;
        degree[s] -= 1;
    }
    let rest: Vec<_> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, edges).expect("Prüfer sequences decode to trees")
}

fn prufer_sequence(mut index: usize, n: usize) -> Vec<Vertex> {
    let mut seq = vec![0; n - 2];
    for slot in seq.iter_mut().rev() {
        *slot = index % n;
        index /= n;
    }
    seq
}

fn labeled_count(n: usize) -> usize {
    if n <= 2 {
        1
    } else {
        n.pow(n as u32 - 2)
    }
}

fn labeled_tree(index: usize, n: usize) -> Graph {
    match n {
        1 => Graph::edgeless(1),
        2 => Graph::new(2, [(0, 1)]).expect("edge"),
        _ => prufer_decode(&prufer_sequence(index, n)),
    }
}

/// All `n^(n-2)` labeled trees on `0..n`, in lexicographic order of Prüfer sequence.
pub fn all_labeled_trees(n: usize) -> Result<impl ExactSizeIterator<Item = TreeCert>> {
    check(n, LABELED_GUARD)?;
    Ok((0..labeled_count(n)).map(move |i| TreeCert::from_tree_unchecked(labeled_tree(i, n))))
}

/// Number of isomorphism classes among all labeled trees on `n` vertices.
pub fn labeled_class_count(n: usize) -> Result<usize> {
    check(n, LABELED_GUARD)?;
    let classes = (0..labeled_count(n))
        .into_par_iter()
        .fold(HashSet::new, |mut acc, i| {
            acc.insert(canonical_of_graph(&labeled_tree(i, n)));
            acc
        })
        .reduce(HashSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    Ok(classes.len())
}

/// Number of isomorphism classes of trees on `n` vertices satisfying `pred`.
pub fn count_by_predicate<P>(n: usize, pred: P) -> Result<usize>
where
    P: Fn(&TreeCert) -> bool + Sync,
{
    Ok(all_tree_codes(n)?.par_iter().filter(|c| pred(&c.to_tree())).count())
}
