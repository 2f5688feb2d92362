//! Non-critical vertices of prime graphs and the structure of (-k)-critical trees.

use std::fmt;

use serde::Serialize;

use crate::enumeration::are_isomorphic;
use crate::error::{Error, Result};
use crate::families::{self, Family};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::primality::{
    close_leaf_pair, forest_is_prime, is_prime_bruteforce, tree_is_prime, tree_nontrivial_modules_witness,
    ModuleWitness,
};
use crate::report::{ConditionReport, Witness};
use crate::tree::TreeCert;

/// `σ(G)`: the vertices whose deletion leaves `G` prime.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SigmaResult {
    pub sigma: VertexSet,
    pub k: usize,
}

impl SigmaResult {
    fn new(sigma: VertexSet) -> Self {
        let k = sigma.len();
        SigmaResult { sigma, k }
    }
}

/// `σ` of any prime graph. Trees use the leaf criterion per deletion; other
/// graphs fall back to exhaustive module search and are subject to its guard.
pub fn sigma(g: &Graph) -> Result<SigmaResult> {
    if let Ok(t) = TreeCert::new(g.clone()) {
        return tree_sigma(&t);
    }
    if !is_prime_bruteforce(g)? {
        return Err(Error::NotPrime);
    }
    let mut sigma = Vec::new();
    for x in g.vertices() {
        let rest = g.remove_vertices(&VertexSet::from([x]))?;
        if is_prime_bruteforce(&rest.graph)? {
            sigma.push(x);
        }
    }
    Ok(SigmaResult::new(sigma.into()))
}

pub fn tree_sigma(t: &TreeCert) -> Result<SigmaResult> {
    if !tree_is_prime(t) {
        return Err(Error::NotPrime);
    }
    // deleting an internal vertex disconnects the tree
    let sigma = t
        .leaves()
        .iter()
        .filter(|&x| {
            let rest = t.graph().remove_vertices(&VertexSet::from([x])).expect("vertex in range");
            forest_is_prime(&rest.graph)
        })
        .collect();
    Ok(SigmaResult::new(sigma))
}

pub fn is_k_critical(t: &TreeCert, k: usize) -> Result<bool> {
    Ok(tree_sigma(t)?.k == k)
}

fn check_candidate(t: &TreeCert, x: &VertexSet, what: &'static str) -> Result<()> {
    if t.order() < 5 {
        return Err(Error::TooFewVertices { what, min: 5, order: t.order() });
    }
    x.check_within(t.order())?;
    if x.is_empty() {
        return Err(Error::InvalidInput("candidate vertex set is empty".into()));
    }
    Ok(())
}

/// Evaluates the four conditions that hold exactly when `t` is prime with
/// `σ(t) = x`:
///
/// 1. distinct leaves are at distance at least 3;
/// 2. `x` consists of leaves and `1 <= |x| <= ⌊n/2⌋`;
/// 3. every leaf outside `x` has a degree-2 support and exactly one member of
///    `x` at distance 3;
/// 4. a member of `x` whose support has degree 2 is at distance at least 4
///    from every other leaf.
pub fn check_critical_conditions(t: &TreeCert, x: &VertexSet) -> Result<ConditionReport> {
    check_candidate(t, x, "the critical-tree characterization")?;
    let n = t.order();
    let mut report = ConditionReport::new();

    report.push("distinct leaves at distance >= 3", close_leaf_pair(t).map(|(a, b)| Witness::Pair(a, b)));

    let cond2 = if let Some(v) = x.iter().find(|&v| !t.is_leaf(v)) {
        Some(Witness::Vertex(v))
    } else if x.len() > n / 2 {
        // more candidate leaves than supports: two of them share one
        let mut seen = vec![None; n];
        x.iter()
            .find_map(|v| {
                let s = t.support_of(v).unwrap();
                seen[s].replace(v).map(|u| Witness::Pair(u, v))
            })
            .or(Some(Witness::Pair(x.as_slice()[0], x.as_slice()[1])))
    } else {
        None
    };
    report.push("candidates are leaves and 1 <= k <= floor(n/2)", cond2);

    let cond3 = t.leaves().iter().filter(|&l| !x.contains(l)).find(|&l| {
        let support_ok = t.degree(t.support_of(l).unwrap()) == 2;
        let at_three = x.iter().filter(|&xi| t.dist(l, xi) == 3).count();
        !(support_ok && at_three == 1)
    });
    report.push(
        "each other leaf has a degree-2 support and a unique candidate at distance 3",
        cond3.map(Witness::Vertex),
    );

    let cond4 = x.iter().filter(|&xi| t.is_leaf(xi)).find_map(|xi| {
        if t.degree(t.support_of(xi).unwrap()) != 2 {
            return None;
        }
        t.leaves().iter().find(|&l| l != xi && t.dist(xi, l) < 4).map(|l| Witness::Pair(xi, l))
    });
    report.push("a candidate with a degree-2 support is at distance >= 4 from other leaves", cond4);

    Ok(report)
}

/// For a leaf `x` of a prime tree with `T - x` decomposable, the single
/// nontrivial module `{y, x⁺}` of `T - x`, in ids of `t`. `None` when `T - x`
/// is prime.
pub fn unique_module_of_leaf_deletion(t: &TreeCert, x: Vertex) -> Result<Option<ModuleWitness>> {
    if !tree_is_prime(t) {
        return Err(Error::NotPrime);
    }
    let Some(support) = t.support_of(x) else {
        return Err(Error::NotALeaf(x));
    };
    let rest = t.graph().remove_vertices(&VertexSet::from([x]))?;
    let rest_tree = TreeCert::from_tree_unchecked(rest.graph.clone());
    if tree_is_prime(&rest_tree) {
        return Ok(None);
    }
    let w = tree_nontrivial_modules_witness(&rest_tree).expect("prime tree minus a leaf has at least 3 vertices");
    // every module of a tree consists of leaves sharing one support; uniqueness
    // means exactly one support carries two leaves and no support carries more
    let mut per_support = vec![0usize; rest_tree.order()];
    for l in rest_tree.leaves().iter() {
        per_support[rest_tree.support_of(l).unwrap()] += 1;
    }
    let crowded: Vec<usize> = per_support.into_iter().filter(|&c| c >= 2).collect();
    debug_assert_eq!(crowded, vec![2], "module of T - x is not unique");
    let members = rest.set_to_original(w.members());
    debug_assert!(members.contains(support));
    Ok(Some(ModuleWitness::from_members(members)))
}

/// Named family a (-1)-, (-2)- or (-⌊n/2⌋)-critical tree belongs to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "family")]
pub enum CriticalFamilyTag {
    Path { n: usize },
    Pkt { k: usize, t: usize },
    Pmn { m: usize, n1: usize, n2: usize },
    Spider { m: usize },
    Other,
}

impl fmt::Display for CriticalFamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CriticalFamilyTag::Path { n } => write!(f, "P_{n}"),
            CriticalFamilyTag::Pkt { k, t } => write!(f, "P_{{{k},{t}}}"),
            CriticalFamilyTag::Pmn { m, n1, n2 } => write!(f, "P_{{{m},{n1},{n2}}}"),
            CriticalFamilyTag::Spider { m } => write!(f, "A_{}", 2 * m + 1),
            CriticalFamilyTag::Other => f.write_str("other"),
        }
    }
}

impl CriticalFamilyTag {
    /// The family member this tag names.
    pub fn build(&self) -> Option<Family> {
        match *self {
            CriticalFamilyTag::Path { n } => families::path(n).ok(),
            CriticalFamilyTag::Pkt { k, t } => families::p_kt(k, t).ok(),
            CriticalFamilyTag::Pmn { m, n1, n2 } => families::p_mn1n2(m, n1, n2).ok(),
            CriticalFamilyTag::Spider { m } => families::spider_a(m).ok(),
            CriticalFamilyTag::Other => None,
        }
    }
}

/// Recovers the family parameters from the shape of the tree around `σ`, then
/// confirms by isomorphism with the constructed member.
pub fn classify_critical_family(t: &TreeCert) -> Result<CriticalFamilyTag> {
    let s = tree_sigma(t)?;
    let n = t.order();
    let guess = match s.k {
        1 if n.is_multiple_of(2) && n >= 6 => CriticalFamilyTag::Pkt { k: 4, t: (n - 4) / 2 },
        2 => {
            let (x1, x2) = (s.sigma.as_slice()[0], s.sigma.as_slice()[1]);
            if t.leaves().len() == 2 {
                CriticalFamilyTag::Path { n }
            } else {
                let k = t.dist(x1, x2) + 1;
                let others = t.leaves().iter().filter(|&l| !s.sigma.contains(l));
                let (mut near1, mut near2) = (0, 0);
                for l in others {
                    if t.dist(l, x1) == 3 {
                        near1 += 1;
                    } else if t.dist(l, x2) == 3 {
                        near2 += 1;
                    }
                }
                match (near1.min(near2), near1.max(near2)) {
                    (0, pend) => CriticalFamilyTag::Pkt { k, t: pend },
                    (n1, n2) => CriticalFamilyTag::Pmn { m: k, n1, n2 },
                }
            }
        }
        k if n % 2 == 1 && k == n / 2 => CriticalFamilyTag::Spider { m: k },
        _ => CriticalFamilyTag::Other,
    };
    Ok(match guess.build() {
        Some(member) if are_isomorphic(&member.tree, t) => guess,
        _ => CriticalFamilyTag::Other,
    })
}
