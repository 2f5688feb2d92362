//! Minimality: a prime tree is minimal for `X` when no proper induced
//! subgraph containing `X` is prime.

use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Vertex, VertexSet};
use crate::primality::{close_leaf_pair, forest_is_prime, tree_is_prime};
use crate::report::{ConditionReport, Witness};
use crate::tree::TreeCert;

/// Vertex limit for the definitional subset scan.
pub const MINIMAL_BRUTE_GUARD: usize = 16;

fn require_prime(t: &TreeCert) -> Result<()> {
    if tree_is_prime(t) {
        Ok(())
    } else {
        Err(Error::NotPrime)
    }
}

/// Whether the subgraph induced on `mask` is prime, for trees on at most 64 vertices.
fn induced_prime(adj: &[u64], mask: u64) -> bool {
    let size = mask.count_ones();
    if size < 4 {
        return false;
    }
    // connected?
    let start = mask.trailing_zeros() as usize;
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = adj[v] & mask & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    if seen != mask {
        return false;
    }
    // a connected induced subgraph of a tree is a tree; no support may carry two leaves
    let mut supports = 0u64;
    let mut rest = mask;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let nbrs = adj[v] & mask;
        if nbrs.count_ones() == 1 {
            if supports & nbrs != 0 {
                return false;
            }
            supports |= nbrs;
        }
    }
    true
}

/// Definitional test: every `W` with `x ⊆ W ⊊ V` induces a non-prime subgraph.
pub fn is_minimal_for_bruteforce(t: &TreeCert, x: &VertexSet) -> Result<bool> {
    require_prime(t)?;
    x.check_within(t.order())?;
    let n = t.order();
    if n > MINIMAL_BRUTE_GUARD {
        return Err(Error::TooLarge { order: n, guard: MINIMAL_BRUTE_GUARD });
    }
    let adj = t.graph().adjacency_masks();
    let full = (1u64 << n) - 1;
    let base = x.mask();
    let free = full & !base;
    // proper subsets of `free`, enumerated downward from `free`
    let mut sub = free;
    while sub != 0 {
        sub = (sub - 1) & free;
        if induced_prime(&adj, base | sub) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The three conditions that hold exactly when a tree on at least five
/// vertices is minimal for `x`:
///
/// 1. distinct leaves are at distance at least 3;
/// 2. every leaf or its support belongs to `x`;
/// 3. a support `s ∈ x` whose leaf is outside `x` has degree 2 and lies at
///    distance 2 from some leaf in `x`.
pub fn check_minimal_conditions(t: &TreeCert, x: &VertexSet) -> Result<ConditionReport> {
    if t.order() < 5 {
        return Err(Error::TooFewVertices { what: "the minimal-tree characterization", min: 5, order: t.order() });
    }
    x.check_within(t.order())?;
    if x.is_empty() {
        return Err(Error::InvalidInput("candidate vertex set is empty".into()));
    }
    let mut report = ConditionReport::new();

    report.push("distinct leaves at distance >= 3", close_leaf_pair(t).map(|(a, b)| Witness::Pair(a, b)));

    let cond2 = t.leaves().iter().find(|&l| !x.contains(l) && !x.contains(t.support_of(l).unwrap()));
    report.push("every leaf or its support is in the set", cond2.map(Witness::Vertex));

    let cond3 = x.iter().filter(|&s| t.is_support(s) && t.leaf_neighbors(s).all(|l| !x.contains(l))).find(|&s| {
        let partner = x.iter().any(|l| l != s && t.is_leaf(l) && t.dist(s, l) == 2);
        !(t.degree(s) == 2 && partner)
    });
    report.push(
        "a chosen support with its leaf unchosen has degree 2 and a chosen leaf at distance 2",
        cond3.map(Witness::Vertex),
    );

    Ok(report)
}

/// Minimality decided by the conditions for `n >= 5` and by the subset scan on
/// four vertices. Non-prime trees are never minimal.
pub fn is_minimal_for(t: &TreeCert, x: &VertexSet) -> Result<bool> {
    x.check_within(t.order())?;
    if !tree_is_prime(t) {
        return Ok(false);
    }
    if t.order() < 5 {
        return is_minimal_for_bruteforce(t, x);
    }
    if x.is_empty() {
        // every prime tree on five or more vertices contains an induced P4
        return Ok(false);
    }
    Ok(check_minimal_conditions(t, x)?.overall)
}

/// `t` is minimal for some `k`-element vertex set.
pub fn is_k_minimal(t: &TreeCert, k: usize) -> bool {
    let n = t.order();
    if k > n || !tree_is_prime(t) {
        return false;
    }
    (0..n).combinations(k).any(|c| is_minimal_for(t, &c.into()).expect("subset in range"))
}

/// Same predicate through the definitional subset scan.
pub fn is_k_minimal_bruteforce(t: &TreeCert, k: usize) -> Result<bool> {
    let n = t.order();
    if k > n || !tree_is_prime(t) {
        return Ok(false);
    }
    for c in (0..n).combinations(k) {
        if is_minimal_for_bruteforce(t, &c.into())? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// An induced subtree together with the ids it had in the host tree.
#[derive(Debug, Clone)]
pub struct MinimalSubtree {
    pub tree: TreeCert,
    pub original: Vec<Vertex>,
}

impl MinimalSubtree {
    /// The host-id set `x` in the subtree's own ids.
    pub fn local(&self, x: &VertexSet) -> VertexSet {
        x.iter().map(|v| self.original.binary_search(&v).expect("vertex kept")).collect()
    }
}

/// Shrinks a prime tree to an induced prime subtree that contains `x` and is
/// minimal for it.
///
/// Each round deletes the first vertex outside `x` (by id) whose removal keeps
/// the tree prime. When no single vertex qualifies, it tries a leaf outside
/// `x` together with its degree-2 support, again by increasing leaf id. The
/// scan restarts after every deletion and stops when neither move applies.
pub fn extract_minimal_subtree(h: &TreeCert, x: &VertexSet) -> Result<MinimalSubtree> {
    require_prime(h)?;
    x.check_within(h.order())?;
    let n = h.order();
    let mut keep = vec![true; n];
    let kept_set = |keep: &[bool]| -> VertexSet { (0..n).filter(|&v| keep[v]).collect() };
    let prime_without = |keep: &[bool], drop: &[Vertex]| -> bool {
        let set: VertexSet = (0..n).filter(|&v| keep[v] && !drop.contains(&v)).collect();
        forest_is_prime(&h.graph().induced_subgraph(&set).expect("in range").graph)
    };
    loop {
        let single = (0..n).find(|&v| keep[v] && !x.contains(v) && prime_without(&keep, &[v]));
        if let Some(v) = single {
            keep[v] = false;
            continue;
        }
        let current = h.graph().induced_subgraph(&kept_set(&keep))?;
        let local = TreeCert::from_tree_unchecked(current.graph.clone());
        let pair = local.leaves().iter().find_map(|l| {
            let s = local.support_of(l)?;
            let (gl, gs) = (current.to_original(l), current.to_original(s));
            let ok = !x.contains(gl) && !x.contains(gs) && local.degree(s) == 2 && prime_without(&keep, &[gl, gs]);
            ok.then_some((gl, gs))
        });
        match pair {
            Some((l, s)) => {
                keep[l] = false;
                keep[s] = false;
            }
            None => {
                return Ok(MinimalSubtree { tree: local, original: current.original });
            }
        }
    }
}

/// The shapes a tree minimal for three vertices can take.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "form")]
pub enum ThreeMinimalForm {
    /// `P4`, any three vertices.
    P4,
    /// `P_k` with `k >= 5`; the set contains both ends.
    Path { k: usize },
    /// `S_{k,m,n}` with `m >= 2`; the set is the three leaves.
    Spider { k: usize, m: usize, n: usize },
    /// `S_{1,2,n}`; the set is `{a1, b1, c_n}`.
    SpiderOneTwo { n: usize },
    /// `S_{1,2,2}`; the set is `{a1, b1, c1}`.
    SpiderOneTwoTwo,
    /// Minimal, yet none of the shapes above. Never expected.
    Unlisted,
    NotMinimal,
}

impl fmt::Display for ThreeMinimalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ThreeMinimalForm::P4 => f.write_str("P_4"),
            ThreeMinimalForm::Path { k } => write!(f, "P_{k} (set contains both leaves)"),
            ThreeMinimalForm::Spider { k, m, n } => write!(f, "S_{{{k},{m},{n}}} (set is the leaves)"),
            ThreeMinimalForm::SpiderOneTwo { n } => write!(f, "S_{{1,2,{n}}} (set is a1, b1, c{n})"),
            ThreeMinimalForm::SpiderOneTwoTwo => f.write_str("S_{1,2,2} (set is a1, b1, c1)"),
            ThreeMinimalForm::Unlisted => f.write_str("unlisted"),
            ThreeMinimalForm::NotMinimal => f.write_str("not minimal"),
        }
    }
}

/// Legs of a tree with exactly one branch vertex: the vertices of each leg
/// ordered by distance from the branch vertex, legs sorted by length.
fn spider_legs(t: &TreeCert) -> Option<Vec<Vec<Vertex>>> {
    let g = t.graph();
    let branches: Vec<_> = g.vertices().filter(|&v| t.degree(v) >= 3).collect();
    let &[r] = branches.as_slice() else {
        return None;
    };
    let mut legs: Vec<Vec<Vertex>> = g
        .neighbors(r)
        .iter()
        .map(|&first| {
            let mut leg = vec![first];
            let mut prev = r;
            while let Some(&next) = g.neighbors(*leg.last().unwrap()).iter().find(|&&w| w != prev) {
                prev = *leg.last().unwrap();
                leg.push(next);
            }
            leg
        })
        .collect();
    legs.sort_by_key(Vec::len);
    Some(legs)
}

/// Which of the listed shapes `(t, x)` takes, with `|x| = 3`.
pub fn classify_3_minimal(t: &TreeCert, x: &VertexSet) -> Result<ThreeMinimalForm> {
    x.check_within(t.order())?;
    if x.len() != 3 {
        return Err(Error::InvalidInput(format!("expected three vertices, got {}", x.len())));
    }
    if !is_minimal_for(t, x)? {
        return Ok(ThreeMinimalForm::NotMinimal);
    }
    let n = t.order();
    if t.leaves().len() == 2 {
        return Ok(if n == 4 { ThreeMinimalForm::P4 } else { ThreeMinimalForm::Path { k: n } });
    }
    let Some(legs) = spider_legs(t) else {
        return Ok(ThreeMinimalForm::Unlisted);
    };
    if legs.len() != 3 {
        return Ok(ThreeMinimalForm::Unlisted);
    }
    let lens: Vec<usize> = legs.iter().map(Vec::len).collect();
    if x == t.leaves() {
        return Ok(ThreeMinimalForm::Spider { k: lens[0], m: lens[1], n: lens[2] });
    }
    if lens[0] == 1 && lens[1] == 2 {
        // when the two longer legs tie, either may play `b`
        let orders: &[(usize, usize)] = if lens[2] == 2 { &[(1, 2), (2, 1)] } else { &[(1, 2)] };
        for &(b, c) in orders {
            let a1 = legs[0][0];
            let b1 = legs[b][0];
            let far: VertexSet = [a1, b1, *legs[c].last().unwrap()].into();
            if *x == far {
                return Ok(ThreeMinimalForm::SpiderOneTwo { n: lens[2] });
            }
            let near: VertexSet = [a1, b1, legs[c][0]].into();
            if lens[2] == 2 && *x == near {
                return Ok(ThreeMinimalForm::SpiderOneTwoTwo);
            }
        }
    }
    Ok(ThreeMinimalForm::Unlisted)
}
