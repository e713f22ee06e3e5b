use proptest::prelude::*;

use super::*;

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn is_simple_symmetric(g: &Graph) -> bool {
    let n = g.vertex_count();
    (0..n).all(|u| !g.has_edge(u, u) && (0..n).all(|v| g.has_edge(u, v) == g.has_edge(v, u)))
}

#[test]
fn graph6_reference_strings() {
    assert_eq!(graph6_encode(&complete(4).unwrap()), "C~");
    assert_eq!(graph6_encode(&empty_graph(1).unwrap()), "@");
    // x(0,1)=1, x(0,2)=0, x(1,2)=1 -> 101000 -> 40 + 63
    assert_eq!(graph6_encode(&path(3).unwrap()), "Bg");
    let p = petersen();
    assert_eq!(graph6_decode(&graph6_encode(&p)).unwrap(), p);
}

#[test]
fn graph6_long_header() {
    let g = cycle(100).unwrap();
    let s = graph6_encode(&g);
    assert!(s.starts_with('~'));
    assert_eq!(graph6_decode(&s).unwrap(), g);
}

#[test]
fn graph6_rejects_malformed() {
    assert!(graph6_decode("").is_err());
    assert!(graph6_decode("C").is_err());
    assert!(graph6_decode("C~~").is_err());
    assert!(graph6_decode("C\u{7f}").is_err());
    assert!(graph6_decode("~?").is_err());
}

#[test]
fn constructors_reject_degenerate_parameters() {
    assert!(complete(0).is_err());
    assert!(empty_graph(0).is_err());
    assert!(cycle(2).is_err());
    assert!(complete_bipartite(0, 3).is_err());
    assert!(paley_incidence(5).is_err());
    assert!(paley_incidence(9).is_err());
    assert!(folded_hypercube(2).is_err());
    assert!(odd_graph(1).is_err());
}

#[test]
fn petersen_is_strongly_regular() {
    let p = petersen();
    assert_eq!(p.edge_count(), 15);
    let srg = srg_parameters(&p).unwrap();
    assert_eq!((srg.v, srg.k, srg.lambda, srg.mu, srg.complete), (10, 3, 0, 1, false));
    assert_eq!(diameter(&p), Some(2));
    assert_eq!(girth(&p), Some(5));
    for u in 0..10 {
        for v in 0..10 {
            assert!(distance(&p, u, v).unwrap().unwrap() <= 2);
        }
    }
}

#[test]
fn srg_edge_cases() {
    let k4 = srg_parameters(&complete(4).unwrap()).unwrap();
    assert_eq!((k4.v, k4.k, k4.lambda, k4.mu, k4.complete), (4, 3, 2, 0, true));
    assert!(srg_parameters(&path(4).unwrap()).is_none());
    let c5 = srg_parameters(&cycle(5).unwrap()).unwrap();
    assert_eq!((c5.lambda, c5.mu), (0, 1));
}

#[test]
fn odd_graph_shape() {
    for m in 2..=5 {
        let og = odd_graph(m).unwrap();
        let g = &og.graph;
        assert_eq!(g.vertex_count(), binom(2 * m - 1, m - 1));
        assert_eq!(g.regular_degree(), Some(m));
        assert!(is_simple_symmetric(g));
        for p in &og.generators {
            assert!(g.is_automorphism(p));
        }
        assert!(og.subsets.windows(2).all(|w| w[0] < w[1]));
    }
    let o3 = odd_graph(3).unwrap();
    assert_eq!(o3.vertex_of_set(&[1, 2]), Some(0));
    assert_eq!(o3.vertex_of_set(&[1, 3]), Some(1));
    assert_eq!(o3.vertex_of_set(&[2, 3]), Some(2));
    assert_eq!(o3.vertex_of_set(&[4, 5]), Some(9));
    assert_eq!(girth(&o3.graph), Some(5));
}

#[test]
fn odd_graph_matching_is_perfect_on_disjoint_subsets() {
    for m in 3..=5 {
        let og = odd_graph(m).unwrap();
        let mm = og.permutable_matching().unwrap();
        assert_eq!(mm.len(), m);
        assert!(mm.is_matching_in(&og.graph));
    }
    assert!(odd_graph(2).unwrap().permutable_matching().is_err());
}

#[test]
fn hypercubes() {
    let q3 = hypercube(3).unwrap();
    assert_eq!((q3.vertex_count(), q3.edge_count()), (8, 12));
    assert_eq!(girth(&q3), Some(4));
    assert!(q3.is_bipartite());
    let f3 = folded_hypercube(3).unwrap();
    assert_eq!(f3, complete(4).unwrap());
    let f4 = folded_hypercube(4).unwrap();
    assert_eq!(f4.regular_degree(), Some(4));
    assert_eq!(f4.vertex_count(), 8);
}

#[test]
fn paley_incidence_properties() {
    for q in [3, 7, 11] {
        let g = paley_incidence(q).unwrap();
        assert!(g.is_bipartite());
        assert_eq!(g.regular_degree(), Some((q + 1) / 2));
        for x in 0..q {
            assert!(g.has_edge(x, q + x));
        }
        let gc = paley_incidence_cliques(q).unwrap();
        assert_eq!(gc.regular_degree(), Some((q + 1) / 2 + q - 1));
    }
    let c6 = paley_incidence(3).unwrap();
    assert!(c6.is_cycle());
    // K_{2,2,2}: every vertex misses exactly one other vertex.
    let k222 = paley_incidence_cliques(3).unwrap();
    assert_eq!(complement(&k222).regular_degree(), Some(1));
}

#[test]
fn joins() {
    let k3 = complete(3).unwrap();
    let prism = matching_join(&k3, &k3, &[0, 1, 2]).unwrap();
    assert_eq!(prism.regular_degree(), Some(3));
    assert_eq!(prism.edge_count(), 9);
    assert!(prism.has_edge(0, 3) && !prism.has_edge(0, 4));
    let e3 = empty_graph(3).unwrap();
    assert_eq!(join(&e3, &e3), complete_bipartite(3, 3).unwrap());
    assert!(matching_join(&k3, &k3, &[0, 0, 1]).is_err());
    assert!(matching_join(&k3, &complete(4).unwrap(), &[0, 1, 2]).is_err());
    let c5 = cycle(5).unwrap();
    let p = matching_join(&c5, &c5, &[0, 3, 1, 4, 2]).unwrap();
    assert_eq!(srg_parameters(&p).map(|s| (s.v, s.k, s.lambda, s.mu)), Some((10, 3, 0, 1)));
}

#[test]
fn compositions() {
    let k2 = complete(2).unwrap();
    assert_eq!(composition(&k2, 3).unwrap(), {
        let mut g = Graph::new(6);
        for i in 0..3 {
            for j in 0..3 {
                g.add_edge(2 * i, 2 * j + 1);
            }
        }
        g
    });
    let c5 = cycle(5).unwrap();
    assert_eq!(composition(&c5, 1).unwrap(), c5);
    let c52 = composition(&c5, 2).unwrap();
    assert_eq!(c52.regular_degree(), Some(4));
    assert!(composition(&c5, 0).is_err());
}

#[test]
fn subdivisions() {
    let star = complete_bipartite(1, 3).unwrap();
    let (spider, origin) = subdivide_all(&star);
    assert_eq!(spider.vertex_count(), 7);
    assert_eq!(degree_sequence(&spider), vec![3, 2, 2, 2, 1, 1, 1]);
    assert_eq!(origin, vec![(0, 1), (0, 2), (0, 3)]);
    assert!(spider.has_edge(0, 4) && spider.has_edge(4, 1));

    let (c6, _) = subdivide_all(&complete(3).unwrap());
    assert!(c6.is_cycle() && c6.vertex_count() == 6);

    let hex = cycle(6).unwrap();
    let m: Matching = "0-1,2-3,4-5".parse().unwrap();
    let c12 = subdivide_matching_twice(&hex, &m).unwrap();
    assert!(c12.is_cycle() && c12.vertex_count() == 12);
    let c9 = subdivide_non_matching(&hex, &m).unwrap();
    assert!(c9.is_cycle() && c9.vertex_count() == 9);
    let bad: Matching = "0-2".parse().unwrap();
    assert!(subdivide_non_matching(&hex, &bad).is_err());
}

#[test]
fn metric_helpers() {
    let k4 = complete(4).unwrap();
    assert_eq!(complement(&k4).edge_count(), 0);
    let hex = cycle(6).unwrap();
    let p4 = induced_subgraph(&hex, &[0, 1, 2, 3]).unwrap();
    assert_eq!(degree_sequence(&p4), vec![2, 2, 1, 1]);
    let split = disjoint_union(&k4, &k4);
    assert!(!is_connected(&split));
    assert_eq!(distance(&split, 0, 5).unwrap(), None);
    assert!(distance(&split, 0, 8).is_err());
    assert_eq!(girth(&path(5).unwrap()), None);
    assert_eq!(girth(&hex), Some(6));
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] {
                        g.add_edge(i, j);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(20)) {
        prop_assert_eq!(graph6_decode(&graph6_encode(&g)).unwrap(), g);
    }

    #[test]
    fn complement_is_an_involution(g in arb_graph(12)) {
        let c = complement(&g);
        prop_assert!(is_simple_symmetric(&c));
        let n = g.vertex_count();
        prop_assert_eq!(c.edge_count() + g.edge_count(), n * (n - 1) / 2);
        prop_assert_eq!(complement(&c), g);
    }

    #[test]
    fn subdivision_doubles_edges(g in arb_graph(10)) {
        let (s, origin) = subdivide_all(&g);
        prop_assert_eq!(s.edge_count(), 2 * g.edge_count());
        prop_assert_eq!(s.vertex_count(), g.vertex_count() + g.edge_count());
        prop_assert_eq!(origin, g.edges());
        prop_assert!(s.is_bipartite());
    }

    #[test]
    fn composition_edge_count(g in arb_graph(8), m in 1usize..4) {
        let c = composition(&g, m).unwrap();
        prop_assert_eq!(c.edge_count(), m * m * g.edge_count());
        prop_assert!(is_simple_symmetric(&c));
    }

    #[test]
    fn cycle_subdivision_doubles_girth(n in 3usize..12) {
        let (s, _) = subdivide_all(&cycle(n).unwrap());
        prop_assert_eq!(girth(&s), Some(2 * n));
    }
}
