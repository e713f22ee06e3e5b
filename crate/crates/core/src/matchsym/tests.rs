use std::collections::BTreeSet;

use num_bigint::BigUint;
use proptest::prelude::*;

use super::*;
use crate::graph::*;

fn big(n: u32) -> BigUint {
    BigUint::from(n)
}

fn parse(s: &str) -> Matching {
    s.parse().unwrap()
}

fn preserves(p: &Permutation, m: &Matching) -> bool {
    m.edges()
        .iter()
        .all(|&(a, b)| m.contains_edge(p.image(a), p.image(b)))
}

/// Orbit of the edge set of `m` under `group`, by closure on sorted edge sets.
fn matching_orbit_size(group: &PermGroup, m: &Matching) -> usize {
    let key = |edges: &[(usize, usize)]| -> BTreeSet<(usize, usize)> {
        edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect()
    };
    let start = key(m.edges());
    let mut seen = BTreeSet::from([start.clone()]);
    let mut stack = vec![start];
    while let Some(set) = stack.pop() {
        for p in group.generators() {
            let img: Vec<(usize, usize)> = set.iter().map(|&(a, b)| (p.image(a), p.image(b))).collect();
            let k = key(&img);
            if seen.insert(k.clone()) {
                stack.push(k);
            }
        }
    }
    seen.len()
}

#[test]
fn stabilizer_examples() {
    let c6 = cycle(6).unwrap();
    let aut = automorphism_group(&c6);
    let m = parse("0-1,2-3,4-5");
    let stab = matching_stabilizer(&c6, &aut, &m).unwrap();
    let filtered = aut.elements().iter().filter(|p| preserves(p, &m)).count();
    assert_eq!(filtered, 6);
    assert_eq!(stab.order(), big(6));
    assert_eq!(induced_edge_action(&stab, &m).unwrap().order(), big(6));

    let k4 = complete(4).unwrap();
    let stab = matching_stabilizer(&k4, &automorphism_group(&k4), &parse("0-1,2-3")).unwrap();
    assert_eq!(stab.order(), big(8));

    let trivial = PermGroup::trivial(6);
    assert!(induced_edge_action(&trivial, &m).unwrap().is_trivial());
}

#[test]
fn petersen_matching_stabilizer_matches_filter() {
    let o3 = odd_graph(3).unwrap();
    let m = o3.two_transitive_matching().unwrap();
    assert!(m.is_perfect_in(&o3.graph));
    let aut = automorphism_group(&o3.graph);
    assert_eq!(aut.order(), big(120));
    let filtered = aut.elements().iter().filter(|p| preserves(p, &m)).count();
    assert_eq!(filtered, 20);
    let stab = matching_stabilizer(&o3.graph, &aut, &m).unwrap();
    assert_eq!(stab.order(), big(20));
    let image = induced_edge_action(&stab, &m).unwrap();
    assert_eq!(image.order(), big(20));
    assert!(image.is_2transitive(&[0, 1, 2, 3, 4]).unwrap());
    assert!(!stab.is_symmetric_action(&m.cells()).unwrap());

    let report = analyze_matching(&o3.graph, None, &m).unwrap();
    assert!(report.two_transitive && !report.permutable && report.is_perfect);
}

#[test]
fn permutability_examples() {
    let k33 = complete_bipartite(3, 3).unwrap();
    let r = is_permutable(&k33, None, &parse("0-3,1-4,2-5")).unwrap();
    assert!(r.permutable && r.two_transitive);
    assert_eq!(r.induced_order, big(6));
    assert_eq!(r.stabilizer_order, big(12));

    let k2 = complete(2).unwrap();
    let r = is_permutable(&k2, None, &parse("0-1")).unwrap();
    assert!(r.permutable && r.two_transitive && r.is_perfect);

    let c6 = cycle(6).unwrap();
    let r = is_2transitive_matching(&c6, None, &parse("0-1,2-3,4-5")).unwrap();
    assert!(r.permutable);

    let r = analyze_matching(&c6, None, &parse("0-1,1-2")).unwrap();
    assert!(!r.is_matching && !r.permutable);
}

#[test]
fn rejects_non_automorphism_groups() {
    let p4 = path(4).unwrap();
    let bad = PermGroup::from_generators(vec![Permutation::from_cycles(4, &[&[0, 1]]).unwrap()], 4).unwrap();
    assert_eq!(
        matching_stabilizer(&p4, &bad, &parse("0-1")).unwrap_err(),
        Error::NotAutomorphism
    );
}

#[test]
fn find_matching_examples() {
    let o4 = odd_graph(4).unwrap();
    let s7 = PermGroup::from_generators(o4.generators.clone(), o4.graph.vertex_count()).unwrap();
    let w = find_matching(&o4.graph, &s7, 4, Mode::Permutable).unwrap().unwrap();
    assert!(analyze_matching(&o4.graph, Some(&s7), &w).unwrap().permutable);

    let c8 = cycle(8).unwrap();
    let aut = automorphism_group(&c8);
    assert!(find_matching(&c8, &aut, 3, Mode::Permutable).unwrap().is_none());

    let k4 = complete(4).unwrap();
    assert!(find_matching(&k4, &automorphism_group(&k4), 3, Mode::TwoTransitive)
        .unwrap()
        .is_none());

    for k in 2..=5 {
        let c = cycle(3 * k).unwrap();
        let w = find_matching(&c, &automorphism_group(&c), 3, Mode::Permutable)
            .unwrap()
            .unwrap();
        assert!(degree_bound_check(&c, &automorphism_group(&c), &w).unwrap());
    }
}

#[test]
fn odd_graph_matchings_are_permutable() {
    for m in 3..=5 {
        let og = odd_graph(m).unwrap();
        let group = PermGroup::from_generators(og.generators.clone(), og.graph.vertex_count()).unwrap();
        let mm = og.permutable_matching().unwrap();
        let r = analyze_matching(&og.graph, Some(&group), &mm).unwrap();
        assert!(r.permutable, "O_{m}");
        assert!(degree_bound_check(&og.graph, &group, &mm).unwrap());
    }
}

#[test]
fn local_predicates() {
    let p = petersen();
    let aut = automorphism_group(&p);
    assert!(is_arc_transitive(&p, &aut).unwrap());
    assert!(is_2arc_transitive(&p, &aut).unwrap());
    assert!(is_locally_symmetric(&p, &aut).unwrap());
    assert!(is_locally_primitive(&p, &aut).unwrap());

    let p4 = path(4).unwrap();
    assert!(!is_arc_transitive(&p4, &automorphism_group(&p4)).unwrap());

    let k5 = complete(5).unwrap();
    assert!(is_locally_symmetric(&k5, &automorphism_group(&k5)).unwrap());

    let c6 = cycle(6).unwrap();
    let rotations = PermGroup::from_generators(
        vec![Permutation::from_cycles(6, &[&[0, 1, 2, 3, 4, 5]]).unwrap()],
        6,
    )
    .unwrap();
    assert!(!is_arc_transitive(&c6, &rotations).unwrap());
    assert!(is_arc_transitive(&c6, &automorphism_group(&c6)).unwrap());

    let q3 = hypercube(3).unwrap();
    let aut = automorphism_group(&q3);
    assert!(is_2arc_transitive(&q3, &aut).unwrap());
    let split = disjoint_union(&k5, &k5);
    assert!(is_arc_transitive(&split, &automorphism_group(&split)).is_err());
}

#[test]
fn degree_bound_examples() {
    let c6 = cycle(6).unwrap();
    assert!(degree_bound_check(&c6, &automorphism_group(&c6), &parse("0-1,2-3,4-5")).unwrap());
    let k33 = complete_bipartite(3, 3).unwrap();
    assert!(degree_bound_check(&k33, &automorphism_group(&k33), &parse("0-3,1-4,2-5")).unwrap());
    let o3 = odd_graph(3).unwrap();
    let m = o3.two_transitive_matching().unwrap();
    assert!(degree_bound_check(&o3.graph, &automorphism_group(&o3.graph), &m).is_err());
}

fn small_cases() -> Vec<(Graph, Matching)> {
    vec![
        (cycle(6).unwrap(), parse("0-1,2-3,4-5")),
        (cycle(6).unwrap(), parse("0-1,3-4")),
        (complete(4).unwrap(), parse("0-1,2-3")),
        (complete_bipartite(3, 3).unwrap(), parse("0-3,1-4")),
        (hypercube(3).unwrap(), parse("0-1,2-3,4-5")),
        (petersen(), parse("0-1,5-7")),
    ]
}

#[test]
fn orbit_stabilizer_on_matchings() {
    for (g, m) in small_cases() {
        let aut = automorphism_group(&g);
        let stab = matching_stabilizer(&g, &aut, &m).unwrap();
        assert_eq!(stab.order() * BigUint::from(matching_orbit_size(&aut, &m)), aut.order());
        let image = induced_edge_action(&stab, &m).unwrap();
        assert_eq!(factorial(m.len()) % image.order(), big(0));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn reports_are_relabeling_invariant(
        case in 0usize..6,
        sigma in Just((0..10).collect::<Vec<usize>>()).prop_shuffle(),
    ) {
        let (g, m) = small_cases().swap_remove(case);
        let n = g.vertex_count();
        let sigma: Vec<usize> = sigma.into_iter().filter(|&x| x < n).collect();
        let p = Permutation::from_images(sigma).unwrap();
        let aut = automorphism_group(&g);
        let conj = PermGroup::from_generators(
            aut.generators().iter().map(|s| s.conjugate_by(&p)).collect(),
            n,
        ).unwrap();
        let g2 = g.relabel(&p).unwrap();
        let m2 = m.relabel(&p);
        let r1 = analyze_matching(&g, Some(&aut), &m).unwrap();
        let r2 = analyze_matching(&g2, Some(&conj), &m2).unwrap();
        prop_assert_eq!(r1.permutable, r2.permutable);
        prop_assert_eq!(r1.two_transitive, r2.two_transitive);
        prop_assert_eq!(r1.stabilizer_order, r2.stabilizer_order);
        prop_assert_eq!(r1.induced_order, r2.induced_order);
    }
}
