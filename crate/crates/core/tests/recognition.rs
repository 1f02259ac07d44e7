use fitch_core::oracle::{all_graphs, set_partitions};
use fitch_core::recognition::default_names;
use fitch_core::{recognize, recognize_bruteforce, Partition, Recognition, SimpleGraph};
use proptest::prelude::*;

/// Checks a verdict against the graph directly.
fn assert_sound(g: &SimpleGraph, r: &Recognition) {
    match r {
        Recognition::Multipartite(p) => {
            assert_eq!(p.vertex_count(), g.vertex_count());
            let mut block_of = std::collections::HashMap::new();
            for (i, b) in p.blocks().iter().enumerate() {
                for v in b {
                    block_of.insert(v.as_str(), i);
                }
            }
            let names = g.names();
            for (i, a) in names.iter().enumerate() {
                for b in &names[i + 1..] {
                    let cross = block_of[a.as_str()] != block_of[b.as_str()];
                    assert_eq!(g.has_edge(a, b), cross, "{a} {b}");
                }
            }
            assert_eq!(g.edge_count() as u64, p.cross_pair_count());
        }
        Recognition::Forbidden(w) => {
            assert!(w.holds_in(g), "{w}");
            let (x, y) = (&w.pair.0, &w.pair.1);
            let induced = g.induced_subgraph(&[&w.isolated, x, y]).unwrap();
            assert_eq!(induced.edge_count(), 1);
        }
    }
}

#[test]
fn exhaustive_agreement_up_to_five_vertices() {
    for n in 1..=5 {
        for g in all_graphs(&default_names(n)) {
            let fast = recognize(&g).unwrap();
            let slow = recognize_bruteforce(&g).unwrap();
            assert_eq!(fast.is_multipartite(), slow.is_multipartite(), "{g:?}");
            assert_sound(&g, &fast);
            assert_sound(&g, &slow);
            if let (Some(p), Some(q)) = (fast.partition(), slow.partition()) {
                assert_eq!(p, q);
            }
        }
    }
}

/// The complement of a complete multipartite graph is a disjoint union of
/// cliques, one per block.
#[test]
fn complement_method_agrees() {
    for n in 1..=5 {
        for g in all_graphs(&default_names(n)) {
            let co = g.complement();
            let cliques = co.names().iter().enumerate().all(|(i, _)| {
                let nb = co.neighbors(i);
                nb.iter().all(|&j| {
                    let mut a: Vec<u32> = nb.iter().copied().filter(|&k| k != j).collect();
                    a.push(i as u32);
                    a.sort_unstable();
                    let mut b: Vec<u32> = co.neighbors(j as usize).to_vec();
                    b.sort_unstable();
                    a == b
                })
            });
            assert_eq!(cliques, recognize(&g).unwrap().is_multipartite(), "{g:?}");
        }
    }
}

#[test]
fn every_partition_is_recognized_back() {
    for n in 1..=6 {
        for p in set_partitions(&default_names(n)) {
            assert_eq!(
                recognize(&p.to_graph()).unwrap(),
                Recognition::Multipartite(p)
            );
        }
    }
}

#[test]
fn isolated_vertices_merge() {
    let g = SimpleGraph::from_edges(["a", "b", "c", "d"], [("a", "b")]).unwrap();
    // c and d are isolated; a-b is an edge; (c, {a, b}) is the smallest witness
    let w = recognize(&g).unwrap();
    assert_eq!(w.witness().unwrap().to_string(), "c | a--b");
}

fn arb_graph() -> impl Strategy<Value = SimpleGraph> {
    (1usize..40).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let names = default_names(n);
            let mut edges = Vec::new();
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if bits[k] {
                        edges.push((names[i].clone(), names[j].clone()));
                    }
                    k += 1;
                }
            }
            SimpleGraph::from_edges(names, edges).unwrap()
        })
    })
}

/// A complete multipartite graph with up to two pairs toggled.
fn arb_near_multipartite() -> impl Strategy<Value = SimpleGraph> {
    (
        prop::collection::vec(1usize..6, 1..8),
        prop::collection::vec(any::<(usize, usize)>(), 0..3),
    )
        .prop_map(|(sizes, flips)| {
            let g = Partition::from_sizes(&sizes).unwrap().to_graph();
            let n = g.vertex_count();
            let names = g.names().to_vec();
            let mut edges: std::collections::BTreeSet<(String, String)> = g
                .edges()
                .map(|(a, b)| (a.to_owned(), b.to_owned()))
                .collect();
            for (x, y) in flips {
                let (i, j) = (x % n, y % n);
                if i == j {
                    continue;
                }
                let key = if names[i] < names[j] {
                    (names[i].clone(), names[j].clone())
                } else {
                    (names[j].clone(), names[i].clone())
                };
                if !edges.remove(&key) {
                    edges.insert(key);
                }
            }
            SimpleGraph::from_edges(names, edges).unwrap()
        })
}

proptest! {
    #[test]
    fn random_graphs_agree(g in arb_graph()) {
        let fast = recognize(&g).unwrap();
        let slow = recognize_bruteforce(&g).unwrap();
        prop_assert_eq!(&fast, &slow);
        assert_sound(&g, &fast);
    }

    #[test]
    fn near_multipartite_graphs_agree(g in arb_near_multipartite()) {
        let fast = recognize(&g).unwrap();
        let slow = recognize_bruteforce(&g).unwrap();
        prop_assert_eq!(&fast, &slow);
        assert_sound(&g, &fast);
    }
}
