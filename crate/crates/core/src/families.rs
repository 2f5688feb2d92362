//! Named tree families, built from their defining edge sets.
//!
//! Each family is written down with its customary vertex labels (1-based for
//! the path-like families, `0..=2m` for `A_{2m+1}`, `r, a_i, b_i, c_i` for the
//! spiders `S_{k,m,n}`). Labels are sorted and renumbered `0..n`; the
//! [`FamilySpec`] keeps the label of every internal id.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::tree::TreeCert;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FamilyKind {
    /// `P_n`
    Path,
    /// `A_{2m+1}`: three or more legs of length 2 around a centre.
    SpiderA,
    /// `P_{k,t}`
    Pkt,
    /// `P_{m,n1,n2}`
    Pmn,
    /// `S_{k,m,n}`
    Skmn,
}

impl FamilyKind {
    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Path => "path",
            FamilyKind::SpiderA => "A",
            FamilyKind::Pkt => "Pkt",
            FamilyKind::Pmn => "Pmn",
            FamilyKind::Skmn => "Skmn",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [FamilyKind::Path, FamilyKind::SpiderA, FamilyKind::Pkt, FamilyKind::Pmn, FamilyKind::Skmn]
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
    }

    pub fn arity(self) -> usize {
        match self {
            FamilyKind::Path | FamilyKind::SpiderA => 1,
            FamilyKind::Pkt => 2,
            FamilyKind::Pmn | FamilyKind::Skmn => 3,
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub params: Vec<usize>,
    /// `labels[id]` is the customary label of internal vertex `id`.
    pub labels: Vec<String>,
}

impl FamilySpec {
    pub fn id_of(&self, label: impl fmt::Display) -> Option<Vertex> {
        let label = label.to_string();
        self.labels.iter().position(|l| *l == label)
    }

    pub fn set_of<L: fmt::Display>(&self, labels: impl IntoIterator<Item = L>) -> Option<VertexSet> {
        labels.into_iter().map(|l| self.id_of(l)).collect::<Option<Vec<_>>>().map(VertexSet::from)
    }

    pub fn label_of(&self, id: Vertex) -> &str {
        &self.labels[id]
    }

    pub fn labels_of(&self, set: &VertexSet) -> Vec<&str> {
        set.iter().map(|v| self.label_of(v)).collect()
    }
}

#[derive(Debug, Clone)]
pub struct Family {
    pub tree: TreeCert,
    pub spec: FamilySpec,
}

/// Builds from integer labels: ids are assigned in increasing label order.
fn from_numeric(kind: FamilyKind, params: Vec<usize>, labels: Vec<usize>, edges: Vec<(usize, usize)>) -> Family {
    let mut sorted = labels;
    sorted.sort_unstable();
    let id = |l: usize| sorted.binary_search(&l).expect("edge endpoint is a label");
    let graph = Graph::new(sorted.len(), edges.iter().map(|&(u, v)| (id(u), id(v)))).expect("family edges are valid");
    Family {
        tree: TreeCert::new(graph).expect("family member is a tree"),
        spec: FamilySpec { kind, params, labels: sorted.iter().map(usize::to_string).collect() },
    }
}

fn invalid(family: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidParameters { family, reason: reason.into() }
}

/// Path edges `{p, p+1}` on labels `first..first+len`.
fn shifted_path(first: usize, len: usize) -> impl Iterator<Item = (usize, usize)> {
    (first..first + len - 1).map(|p| (p, p + 1))
}

/// `P_n` on labels `1..=n`.
pub fn path(n: usize) -> Result<Family> {
    if n == 0 {
        return Err(invalid("path", "n must be at least 1"));
    }
    Ok(from_numeric(FamilyKind::Path, vec![n], (1..=n).collect(), shifted_path(1, n).collect()))
}

/// `A_{2m+1}` on labels `0..=2m` with edges `{0,i}` and `{i,i+m}`.
pub fn spider_a(m: usize) -> Result<Family> {
    if m < 2 {
        return Err(invalid("A", "m must be at least 2"));
    }
    let edges = (1..=m).flat_map(|i| [(0, i), (i, i + m)]).collect();
    Ok(from_numeric(FamilyKind::SpiderA, vec![m], (0..=2 * m).collect(), edges))
}

/// `P_{k,t}` on labels `1..=2t+k`: the path on `2t+1..=2t+k` plus `t`
/// pendant edges `{2i-1, 2i}` hung at `2t+2` through `2i`.
pub fn p_kt(k: usize, t: usize) -> Result<Family> {
    if k < 4 || t < 1 {
        return Err(invalid("Pkt", format!("need k >= 4 and t >= 1, got k={k}, t={t}")));
    }
    let mut edges: Vec<_> = shifted_path(2 * t + 1, k).collect();
    for i in 1..=t {
        edges.push((2 * i - 1, 2 * i));
        edges.push((2 * t + 2, 2 * i));
    }
    Ok(from_numeric(FamilyKind::Pkt, vec![k, t], (1..=2 * t + k).collect(), edges))
}

/// `P_{m,n1,n2}` on labels `1..=2s+m` with `s = n1 + n2`: the path on
/// `2s+1..=2s+m`, `n1` pendant edges hung at `2s+2` and `n2` at `2s+m-1`.
pub fn p_mn1n2(m: usize, n1: usize, n2: usize) -> Result<Family> {
    if m < 4 || n1 < 1 || n2 < 1 {
        return Err(invalid("Pmn", format!("need m >= 4, n1 >= 1, n2 >= 1, got {m}, {n1}, {n2}")));
    }
    let s = n1 + n2;
    let mut edges: Vec<_> = shifted_path(2 * s + 1, m).collect();
    for i in 1..=s {
        edges.push((2 * i - 1, 2 * i));
        let hub = if i <= n1 { 2 * s + 2 } else { 2 * s + m - 1 };
        edges.push((hub, 2 * i));
    }
    Ok(from_numeric(FamilyKind::Pmn, vec![m, n1, n2], (1..=2 * s + m).collect(), edges))
}

/// `S_{k,m,n}`: paths of lengths `k <= m <= n` from a common end `r`, other
/// vertices `a_i`, `b_i`, `c_i` indexed by distance from `r`. Ids are `r = 0`,
/// then the `a`, `b` and `c` legs in order.
pub fn s_kmn(k: usize, m: usize, n: usize) -> Result<Family> {
    if k < 1 || k > m || m > n {
        return Err(invalid("Skmn", format!("need 1 <= k <= m <= n, got {k}, {m}, {n}")));
    }
    let mut labels = vec!["r".to_string()];
    let mut edges = Vec::new();
    for (name, len) in [("a", k), ("b", m), ("c", n)] {
        let mut prev = 0;
        for i in 1..=len {
            let id = labels.len();
            labels.push(format!("{name}{i}"));
            edges.push((prev, id));
            prev = id;
        }
    }
    let graph = Graph::new(labels.len(), edges)?;
    Ok(Family {
        tree: TreeCert::new(graph)?,
        spec: FamilySpec { kind: FamilyKind::Skmn, params: vec![k, m, n], labels },
    })
}

/// Dispatches on a family kind with its parameters in declaration order.
pub fn build(kind: FamilyKind, params: &[usize]) -> Result<Family> {
    if params.len() != kind.arity() {
        return Err(invalid(kind.name(), format!("expected {} parameters, got {}", kind.arity(), params.len())));
    }
    match kind {
        FamilyKind::Path => path(params[0]),
        FamilyKind::SpiderA => spider_a(params[0]),
        FamilyKind::Pkt => p_kt(params[0], params[1]),
        FamilyKind::Pmn => p_mn1n2(params[0], params[1], params[2]),
        FamilyKind::Skmn => s_kmn(params[0], params[1], params[2]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::criticality::tree_sigma;
    use crate::enumeration::are_isomorphic;
    use crate::primality::tree_is_prime;

    #[test]
    fn paths() {
        assert!(tree_is_prime(&path(4).unwrap().tree));
        assert!(!tree_is_prime(&path(3).unwrap().tree));
        assert_eq!(path(1).unwrap().tree.order(), 1);
        assert!(path(0).is_err());
    }

    #[test]
    fn spider_a_members() {
        let a5 = spider_a(2).unwrap();
        assert!(are_isomorphic(&a5.tree, &path(5).unwrap().tree));
        let a7 = spider_a(3).unwrap();
        assert_eq!(tree_sigma(&a7.tree).unwrap().sigma, a7.spec.set_of([4, 5, 6]).unwrap());
        assert!(spider_a(1).is_err());
    }

    #[test]
    fn p_kt_members() {
        let f = p_kt(5, 1).unwrap();
        assert_eq!(f.tree.order(), 7);
        assert_eq!(tree_sigma(&f.tree).unwrap().sigma, f.spec.set_of([3, 7]).unwrap());
        let n = 10;
        let f = p_kt(4, (n - 4) / 2).unwrap();
        assert_eq!(tree_sigma(&f.tree).unwrap().sigma, f.spec.set_of([n - 3]).unwrap());
        assert!(p_kt(3, 1).is_err());
        assert!(p_kt(4, 0).is_err());
    }

    #[test]
    fn p_kt_matches_hand_built_edges() {
        // P_{4,1}: path 3-4-5-6, pendant 1-2, edge {4,2}; ids are labels - 1
        let hand = TreeCert::new(Graph::new(6, [(2, 3), (3, 4), (4, 5), (0, 1), (3, 1)]).unwrap()).unwrap();
        assert!(are_isomorphic(&p_kt(4, 1).unwrap().tree, &hand));
        assert_eq!(p_kt(4, 1).unwrap().tree.graph(), hand.graph());
    }

    #[test]
    fn p_mn_members() {
        let f = p_mn1n2(4, 1, 1).unwrap();
        assert_eq!(f.tree.order(), 8);
        assert_eq!(tree_sigma(&f.tree).unwrap().sigma, f.spec.set_of([5, 8]).unwrap());
        assert!(p_mn1n2(3, 1, 1).is_err());
    }

    #[test]
    fn s_kmn_members() {
        let f = s_kmn(1, 2, 2).unwrap();
        assert_eq!(f.tree.order(), 6);
        assert_eq!(f.spec.labels, ["r", "a1", "b1", "b2", "c1", "c2"]);
        assert_eq!(f.tree.dist(f.spec.id_of("r").unwrap(), f.spec.id_of("c2").unwrap()), 2);
        assert_eq!(s_kmn(2, 2, 2).unwrap().tree.order(), 7);
        assert!(s_kmn(2, 1, 3).is_err());
        assert!(s_kmn(0, 1, 1).is_err());
    }

    #[test]
    fn dispatch() {
        assert_eq!(build(FamilyKind::SpiderA, &[3]).unwrap().tree.order(), 7);
        assert!(build(FamilyKind::Pkt, &[5]).is_err());
        assert_eq!(FamilyKind::parse("pkt"), Some(FamilyKind::Pkt));
    }
}
