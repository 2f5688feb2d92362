//! Prime trees under modular decomposition: non-critical vertices, minimality
//! for vertex sets, the named families these produce, and exhaustive
//! cross-checks against enumeration of all unlabeled trees.

pub mod counting;
pub mod criticality;
pub mod edgelist;
pub mod enumeration;
pub mod error;
pub mod families;
pub mod graph;
pub mod minimality;
pub mod primality;
pub mod report;
pub mod tree;

pub use counting::{verify_formula, CountKind, CountRow, CountTable};
pub use criticality::{
    check_critical_conditions, classify_critical_family, is_k_critical, sigma, tree_sigma,
    unique_module_of_leaf_deletion, CriticalFamilyTag, SigmaResult,
};
pub use edgelist::{parse_edge_list, write_edge_list, EdgeList};
pub use enumeration::{all_labeled_trees, all_trees, are_isomorphic, canonical_form, CanonicalCode};
pub use error::{Error, Result};
pub use families::{Family, FamilyKind, FamilySpec};
pub use graph::{Distance, Graph, Induced, Vertex, VertexSet};
pub use minimality::{
    check_minimal_conditions, classify_3_minimal, extract_minimal_subtree, is_minimal_for, is_minimal_for_bruteforce,
    MinimalSubtree, ThreeMinimalForm,
};
pub use primality::{is_module, is_prime, tree_is_prime, ModuleWitness};
pub use report::{Condition, ConditionReport, Witness};
pub use tree::{certify_tree, TreeCert};
