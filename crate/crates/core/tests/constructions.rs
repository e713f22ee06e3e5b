//! Graph constructions that carry permutable matchings.

use num_bigint::BigUint;

use permatch::autiso::automorphism_group;
use permatch::classify::perfect_matchings;
use permatch::graph::*;
use permatch::matchsym::analyze_matching;
use permatch::permgroup::factorial;
use permatch::PermGroup;

fn permutable(g: &Graph, m: &Matching) -> bool {
    analyze_matching(g, None, m).unwrap().permutable
}

#[test]
fn subdividing_every_edge_around_a_symmetric_vertex() {
    // In the subdivision, the edges joining vertex 0's subdivision vertices
    // to its neighbours form a permutable matching.
    for g in [complete(4).unwrap(), complete(5).unwrap(), petersen(), hypercube(3).unwrap()] {
        let n = g.vertex_count();
        let (sub, origin) = subdivide_all(&g);
        let edges: Vec<(usize, usize)> = origin
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| u == 0 || v == 0)
            .map(|(i, &(u, v))| (n + i, if u == 0 { v } else { u }))
            .collect();
        let m = Matching::new(edges);
        assert_eq!(m.len(), g.degree(0));
        assert!(permutable(&sub, &m), "{g:?}");
    }
}

#[test]
fn subdivided_star_automorphisms() {
    for m in 2..=6 {
        let (sub, _) = subdivide_all(&complete_bipartite(1, m).unwrap());
        assert_eq!(automorphism_group(&sub).order(), factorial(m));
    }
}

#[test]
fn partial_subdivisions_keep_the_matching_permutable() {
    let k33 = complete_bipartite(3, 3).unwrap();
    let m: Matching = "0-3,1-4,2-5".parse().unwrap();
    let q = subdivide_non_matching(&k33, &m).unwrap();
    assert_eq!(q.vertex_count(), 12);
    assert!(permutable(&q, &m));

    // Each matching edge u-v becomes u-a-b-v; the middle edges a-b are
    // the new matching.
    let twice = subdivide_matching_twice(&k33, &m).unwrap();
    assert_eq!(twice.vertex_count(), 12);
    let middles = Matching::new((0..3).map(|i| (6 + 2 * i, 7 + 2 * i)).collect());
    assert!(middles.is_matching_in(&twice));
    assert!(permutable(&twice, &middles));
}

#[test]
fn complete_bipartite_matchings_are_all_permutable() {
    for m in 2..=5 {
        let g = complete_bipartite(m, m).unwrap();
        let aut = automorphism_group(&g);
        assert_eq!(aut.order(), factorial(m) * factorial(m) * 2u32);
        for pm in perfect_matchings(&g).into_iter().take(10) {
            assert!(analyze_matching(&g, Some(&aut), &pm).unwrap().permutable);
        }
    }
}

#[test]
fn compositions_with_edgeless_graphs() {
    // (eta, i) is vertex i * n + eta; the matching {(a, i), (b, i)} over one edge.
    for (base, m) in [(cycle(5).unwrap(), 2), (cycle(4).unwrap(), 3), (petersen(), 2), (complete(3).unwrap(), 3)] {
        let n = base.vertex_count();
        let g = composition(&base, m).unwrap();
        let matching = Matching::new((0..m).map(|i| (i * n, i * n + 1)).collect());
        assert!(base.has_edge(0, 1));
        assert!(permutable(&g, &matching), "{base:?} m = {m}");
    }
    let c5_2 = composition(&cycle(5).unwrap(), 2).unwrap();
    assert_eq!(automorphism_group(&c5_2).order(), BigUint::from(320u32));
}

#[test]
fn odd_graph_matchings_under_the_symmetric_group() {
    for m in 3..=6 {
        let o = odd_graph(m).unwrap();
        let group = PermGroup::from_generators(o.generators.clone(), o.graph.vertex_count()).unwrap();
        assert_eq!(group.order(), factorial(2 * m - 1));
        let matching = o.permutable_matching().unwrap();
        let report = analyze_matching(&o.graph, Some(&group), &matching).unwrap();
        assert!(report.permutable, "O_{m}");
        assert!(group.is_primitive(&(0..o.graph.vertex_count()).collect::<Vec<_>>()).unwrap());
    }
}
