//! Modules and primality.
//!
//! Two independent routes: an exhaustive subset scan that works on any small
//! graph, and the leaf-distance criterion for trees (prime iff `n >= 4` and no
//! two leaves are within distance 2). Each serves as the other's oracle.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::tree::TreeCert;

/// Default vertex limit for exhaustive module search.
pub const DEFAULT_GUARD: usize = 20;

/// Bitmask-based search cannot go past this many vertices.
pub const MAX_GUARD: usize = 63;

/// A nontrivial module: at least two vertices, not the whole vertex set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ModuleWitness {
    members: VertexSet,
}

impl ModuleWitness {
    pub(crate) fn from_members(members: VertexSet) -> Self {
        debug_assert!(members.len() >= 2);
        ModuleWitness { members }
    }

    pub fn members(&self) -> &VertexSet {
        &self.members
    }

    pub fn into_members(self) -> VertexSet {
        self.members
    }
}

impl fmt::Display for ModuleWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.members.fmt(f)
    }
}

pub fn is_module(g: &Graph, m: &VertexSet) -> Result<bool> {
    m.check_within(g.order())?;
    Ok(g.vertices().filter(|&v| !m.contains(v)).all(|v| {
        let hit = g.neighbors(v).iter().filter(|&&w| m.contains(w)).count();
        hit == 0 || hit == m.len()
    }))
}

fn check_guard(g: &Graph, guard: usize) -> Result<()> {
    let guard = guard.min(MAX_GUARD);
    if g.order() > guard {
        Err(Error::TooLarge { order: g.order(), guard })
    } else {
        Ok(())
    }
}

/// Calls `visit` on every nontrivial module mask, by increasing size and
/// then lexicographically. Stops early when `visit` returns `false`.
fn scan_modules(g: &Graph, mut visit: impl FnMut(u64) -> bool) {
    let n = g.order();
    let adj = g.adjacency_masks();
    for size in 2..n {
        // lexicographic k-combinations of 0..n
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let mask = idx.iter().fold(0u64, |m, &i| m | (1 << i));
            let ok = (0..n).filter(|&v| mask >> v & 1 == 0).all(|v| {
                let hit = adj[v] & mask;
                hit == 0 || hit == mask
            });
            if ok && !visit(mask) {
                return;
            }
            let Some(i) = (0..size).rev().find(|&i| idx[i] != i + n - size) else {
                break;
            };
            idx[i] += 1;
            for j in i + 1..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
}

/// Smallest nontrivial module (ties broken lexicographically), by exhaustive search.
pub fn find_nontrivial_module(g: &Graph) -> Result<Option<ModuleWitness>> {
    find_nontrivial_module_with_guard(g, DEFAULT_GUARD)
}

pub fn find_nontrivial_module_with_guard(g: &Graph, guard: usize) -> Result<Option<ModuleWitness>> {
    check_guard(g, guard)?;
    let mut found = None;
    scan_modules(g, |mask| {
        found = Some(mask);
        false
    });
    Ok(found.map(|m| ModuleWitness { members: VertexSet::from_mask(m) }))
}

/// Every nontrivial module, in search order.
pub fn nontrivial_modules(g: &Graph) -> Result<Vec<ModuleWitness>> {
    check_guard(g, DEFAULT_GUARD)?;
    let mut all = Vec::new();
    scan_modules(g, |mask| {
        all.push(ModuleWitness { members: VertexSet::from_mask(mask) });
        true
    });
    Ok(all)
}

/// All modules trivial, with no lower bound on the vertex count.
pub fn is_indecomposable(g: &Graph) -> Result<bool> {
    Ok(find_nontrivial_module(g)?.is_none())
}

/// Prime by exhaustive module search: `n >= 4` and indecomposable.
pub fn is_prime_bruteforce(g: &Graph) -> Result<bool> {
    check_guard(g, DEFAULT_GUARD)?;
    Ok(g.order() >= 4 && is_indecomposable(g)?)
}

/// Trees go through the leaf-distance criterion, anything else through
/// exhaustive search.
pub fn is_prime(g: &Graph) -> Result<bool> {
    match TreeCert::new(g.clone()) {
        Ok(t) => Ok(tree_is_prime(&t)),
        Err(_) => is_prime_bruteforce(g),
    }
}

/// Lexicographically smallest pair of distinct leaves at distance below 3.
pub fn close_leaf_pair(t: &TreeCert) -> Option<(Vertex, Vertex)> {
    let g = t.graph();
    if t.order() == 2 {
        return Some((0, 1));
    }
    t.leaves().iter().find_map(|x| {
        let s = g.neighbors(x)[0];
        t.leaf_neighbors(s).find(|&y| y > x).map(|y| (x, y))
    })
}

pub fn tree_is_prime(t: &TreeCert) -> bool {
    t.order() >= 4 && close_leaf_pair(t).is_none()
}

/// A pair of leaves sharing a support, if any. Absent exactly when the tree is
/// prime or has at most two vertices.
pub fn tree_nontrivial_modules_witness(t: &TreeCert) -> Option<ModuleWitness> {
    if t.order() <= 2 {
        return None;
    }
    close_leaf_pair(t).map(|(x, y)| ModuleWitness { members: VertexSet::from([x, y]) })
}

/// Primality of an induced subgraph of a tree: it must be connected, hence a tree.
pub(crate) fn forest_is_prime(g: &Graph) -> bool {
    g.order() >= 4 && g.size() + 1 == g.order() && g.is_connected() && {
        let t = TreeCert::from_tree_unchecked(g.clone());
        close_leaf_pair(&t).is_none()
    }
}
