use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use primetree::enumeration::{all_trees, canonical_form, prufer_decode, CanonicalCode};
use primetree::primality::is_module;
use primetree::{parse_edge_list, write_edge_list, Distance, Graph, TreeCert, VertexSet};

fn graph_strategy() -> impl Strategy<Value = Graph> {
    (1usize..10).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..20)
            .prop_map(move |es| Graph::new(n, es.into_iter().filter(|(u, v)| u != v)).unwrap())
    })
}

fn tree_strategy() -> impl Strategy<Value = TreeCert> {
    (3usize..14).prop_flat_map(|n| {
        proptest::collection::vec(0..n, n - 2).prop_map(|seq| TreeCert::new(prufer_decode(&seq)).unwrap())
    })
}

proptest! {
    #[test]
    fn degree_sum_is_twice_edges(g in graph_strategy()) {
        let total: usize = g.vertices().map(|v| g.degree(v).unwrap()).sum();
        prop_assert_eq!(total, 2 * g.size());
    }

    #[test]
    fn distance_is_a_metric_per_component(g in graph_strategy()) {
        let table: Vec<Vec<Distance>> = g.vertices().map(|v| g.bfs(v)).collect();
        for u in g.vertices() {
            for v in g.vertices() {
                prop_assert_eq!(table[u][v], table[v][u]);
                for w in g.vertices() {
                    if let (Some(a), Some(b), Some(c)) =
                        (table[u][v].finite(), table[v][w].finite(), table[u][w].finite())
                    {
                        prop_assert!(c <= a + b);
                    }
                }
            }
        }
    }

    #[test]
    fn full_induced_subgraph_is_identity(g in graph_strategy()) {
        let all: VertexSet = g.vertices().collect();
        let sub = g.induced_subgraph(&all).unwrap();
        prop_assert_eq!(&sub.graph, &g);
        prop_assert_eq!(sub.original, g.vertices().collect::<Vec<_>>());
    }

    #[test]
    fn certification_matches_definition(g in graph_strategy()) {
        let is_tree = g.connected_components().len() == 1 && g.size() + 1 == g.order();
        prop_assert_eq!(TreeCert::new(g.clone()).is_ok(), is_tree);
    }

    #[test]
    fn components_partition_vertices(g in graph_strategy()) {
        let comps = g.connected_components();
        let mut seen = vec![0; g.order()];
        for c in &comps {
            for v in c.iter() {
                seen[v] += 1;
            }
        }
        prop_assert!(seen.iter().all(|&c| c == 1));
        for (u, v) in g.edges() {
            prop_assert!(comps.iter().any(|c| c.contains(u) && c.contains(v)));
        }
    }

    #[test]
    fn trivial_modules_always_pass(g in graph_strategy()) {
        prop_assert!(is_module(&g, &VertexSet::new()).unwrap());
        prop_assert!(is_module(&g, &g.vertices().collect()).unwrap());
        for v in g.vertices() {
            prop_assert!(is_module(&g, &VertexSet::from([v])).unwrap());
        }
    }

    #[test]
    fn edge_list_round_trip(g in graph_strategy()) {
        let text = write_edge_list(&g, None, &[]);
        prop_assert_eq!(parse_edge_list(&text).unwrap().graph, g);
    }

    #[test]
    fn code_survives_relabelling(t in tree_strategy(), seed in any::<u64>()) {
        let mut perm: Vec<usize> = t.graph().vertices().collect();
        perm.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
        let relabelled = TreeCert::new(t.graph().relabel(&perm).unwrap()).unwrap();
        prop_assert_eq!(canonical_form(&t), canonical_form(&relabelled));
    }

    #[test]
    fn code_decodes_to_isomorphic_tree(t in tree_strategy()) {
        let code = canonical_form(&t);
        prop_assert_eq!(canonical_form(&code.to_tree()), code.clone());
        prop_assert_eq!(CanonicalCode::from_hex(&code.to_hex()).unwrap(), code);
    }
}

#[test]
fn codes_invariant_under_many_relabellings() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    for n in 1..=10 {
        for t in all_trees(n).unwrap() {
            let code = canonical_form(&t);
            let mut perm: Vec<usize> = (0..n).collect();
            for _ in 0..50 {
                perm.shuffle(&mut rng);
                let g = t.graph().relabel(&perm).unwrap();
                assert_eq!(canonical_form(&TreeCert::new(g).unwrap()), code);
            }
        }
    }
}
