use std::collections::HashSet;

use proptest::prelude::*;

use super::*;

fn perm(degree: usize, cycles: &str) -> Permutation {
    Permutation::parse_cycles(degree, cycles).unwrap()
}

fn group(degree: usize, gens: &[&str]) -> PermGroup {
    PermGroup::from_generators(gens.iter().map(|c| perm(degree, c)).collect(), degree).unwrap()
}

/// Exhaustive closure under right multiplication by generators.
fn closure(gens: &[Permutation], degree: usize) -> HashSet<Permutation> {
    let mut seen = HashSet::new();
    let id = Permutation::identity(degree);
    seen.insert(id.clone());
    let mut stack = vec![id];
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = &x * g;
            if seen.insert(y.clone()) {
                stack.push(y);
            }
        }
    }
    seen
}

fn dihedral(n: usize) -> PermGroup {
    let rot: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let refl: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    PermGroup::from_generators(
        vec![
            Permutation::from_images(rot).unwrap(),
            Permutation::from_images(refl).unwrap(),
        ],
        n,
    )
    .unwrap()
}

#[test]
fn small_group_orders() {
    assert_eq!(group(3, &["(0 1)", "(0 1 2)"]).order(), BigUint::from(6u32));
    assert_eq!(group(5, &["(0 1 2 3 4)"]).order(), BigUint::from(5u32));
    assert_eq!(PermGroup::symmetric(4).order(), BigUint::from(24u32));
    assert_eq!(dihedral(6).order(), BigUint::from(12u32));
    assert_eq!(PermGroup::trivial(4).order(), BigUint::from(1u32));
}

#[test]
fn wreath_product_order() {
    // S_3 wr S_2 on {0,1,2} | {3,4,5}
    let g = group(6, &["(0 1)", "(0 1 2)", "(0 3)(1 4)(2 5)"]);
    assert_eq!(g.order(), BigUint::from(72u32));
}

#[test]
fn membership() {
    let c5 = group(5, &["(0 1 2 3 4)"]);
    assert!(!c5.contains(&perm(5, "(0 1)")).unwrap());
    assert!(c5.contains(&perm(5, "(0 2 4 1 3)")).unwrap());
    let klein = group(4, &["(0 1)", "(2 3)"]);
    assert!(klein.contains(&perm(4, "(0 1)(2 3)")).unwrap());
    assert!(klein.contains(&perm(4, "(0 1)")).unwrap());
    assert!(matches!(
        klein.contains(&Permutation::identity(5)),
        Err(Error::DegreeMismatch { .. })
    ));
}

#[test]
fn orbits_and_stabilizers() {
    let c5 = group(5, &["(0 1 2 3 4)"]);
    assert_eq!(c5.orbit(0).unwrap(), vec![0, 1, 2, 3, 4]);
    assert!(c5.point_stabilizer(0).unwrap().is_trivial());
    assert_eq!(PermGroup::trivial(5).orbit(3).unwrap(), vec![3]);
    assert!(c5.orbit(7).is_err());

    let s4 = PermGroup::symmetric(4);
    assert_eq!(s4.point_stabilizer(0).unwrap().order(), BigUint::from(6u32));
    assert_eq!(s4.pointwise_stabilizer(&[0, 1]).unwrap().order(), BigUint::from(2u32));
    assert!(s4.pointwise_stabilizer(&[0, 1, 2]).unwrap().is_trivial());
}

#[test]
fn setwise_stabilizers() {
    let s4 = PermGroup::symmetric(4);
    assert_eq!(s4.setwise_stabilizer(&[0, 1]).unwrap().order(), BigUint::from(4u32));
    assert_eq!(s4.setwise_stabilizer(&[0, 1, 2, 3]).unwrap().order(), s4.order());

    let d6 = dihedral(6);
    let stab = d6.setwise_stabilizer(&[0, 2, 4]).unwrap();
    let oracle = d6
        .elements()
        .into_iter()
        .filter(|g| [0, 2, 4].iter().all(|&x| g.image(x) % 2 == 0))
        .count();
    assert_eq!(oracle, 6);
    assert_eq!(stab.order(), BigUint::from(6u32));
}

#[test]
fn transitivity() {
    let s3 = PermGroup::symmetric(3);
    assert!(s3.is_2transitive(&[0, 1, 2]).unwrap());
    let c4 = group(4, &["(0 1 2 3)"]);
    assert!(c4.is_transitive(&[0, 1, 2, 3]).unwrap());
    assert!(!c4.is_2transitive(&[0, 1, 2, 3]).unwrap());
    let klein = group(4, &["(0 1)", "(2 3)"]);
    assert!(matches!(klein.is_transitive(&[0, 2]), Err(Error::NotInvariant)));
    assert!(!klein.is_transitive(&[0, 1, 2, 3]).unwrap());
}

#[test]
fn primitivity_and_blocks() {
    let d4 = dihedral(4);
    assert!(!d4.is_primitive(&[0, 1, 2, 3]).unwrap());
    let blocks = d4.minimal_block((0, 2)).unwrap();
    assert_eq!(blocks.blocks, vec![vec![0, 2], vec![1, 3]]);

    let c5 = group(5, &["(0 1 2 3 4)"]);
    assert!(c5.is_primitive(&[0, 1, 2, 3, 4]).unwrap());

    let k33 = group(6, &["(0 1)", "(0 1 2)", "(0 3)(1 4)(2 5)"]);
    assert!(!k33.is_primitive(&[0, 1, 2, 3, 4, 5]).unwrap());
    let parts = k33.minimal_block((0, 1)).unwrap();
    assert_eq!(parts.blocks, vec![vec![0, 1, 2], vec![3, 4, 5]]);

    let klein = group(4, &["(0 1)", "(2 3)"]);
    assert!(matches!(klein.is_primitive(&[0, 1, 2, 3]), Err(Error::NotTransitive)));
}

#[test]
fn induced_actions() {
    // dihedral group of the hexagon on the three alternate edges
    let d6 = dihedral(6);
    let cells = vec![vec![0, 1], vec![2, 3], vec![4, 5]];
    let stab = d6
        .subgroup_search(
            &[0, 1, 2, 3, 4, 5],
            |_| true,
            |g| cells.iter().all(|c| {
                let (a, b) = (g.image(c[0]), g.image(c[1]));
                cells.iter().any(|d| (d[0] == a && d[1] == b) || (d[0] == b && d[1] == a))
            }),
        );
    let action = stab.induced_action(&cells).unwrap();
    assert_eq!(action.image.order(), BigUint::from(6u32));
    assert!(stab.is_symmetric_action(&cells).unwrap());

    let singletons: Vec<Vec<usize>> = (0..6).map(|i| vec![i]).collect();
    let act = d6.induced_action(&singletons).unwrap();
    assert_eq!(act.image.order(), d6.order());
    assert_eq!(act.kernel_order, BigUint::from(1u32));

    let k33 = group(6, &["(0 1)", "(0 1 2)", "(0 3)(1 4)(2 5)"]);
    let act = k33.induced_action(&[vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
    assert_eq!(act.image.order(), BigUint::from(2u32));
    assert_eq!(act.kernel_order, BigUint::from(36u32));

    assert!(!PermGroup::trivial(4)
        .is_symmetric_action(&[vec![0, 1], vec![2, 3]])
        .unwrap());
    assert!(matches!(
        d6.induced_action(&[vec![0, 1], vec![2, 3], vec![4, 5]]),
        Err(Error::CellsNotPermuted)
    ));
}

#[test]
fn chain_invariants_hold() {
    let g = group(7, &["(0 1 2 3 4 5 6)", "(1 2 4)(3 6 5)"]);
    assert_eq!(g.order(), BigUint::from(21u32));
    let base = g.base();
    for s in g.strong_generators() {
        assert!(g.contains(&s).unwrap());
    }
    for (i, lv) in g.chain.levels.iter().enumerate() {
        for s in &lv.gens {
            assert!(base[..i].iter().all(|&b| s.fixes(b)));
        }
    }
}

fn arb_perm(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn arb_group() -> impl Strategy<Value = (usize, Vec<Permutation>)> {
    (2usize..=8).prop_flat_map(|n| (Just(n), prop::collection::vec(arb_perm(n), 1..=3)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn order_matches_closure((n, gens) in arb_group()) {
        let g = PermGroup::from_generators(gens.clone(), n).unwrap();
        let elems = closure(&gens, n);
        prop_assert_eq!(g.order(), BigUint::from(elems.len()));
        let listed: HashSet<Permutation> = g.elements().into_iter().collect();
        prop_assert_eq!(&listed, &elems);
    }

    #[test]
    fn membership_matches_closure((n, gens) in arb_group(), probe in (2usize..=8).prop_flat_map(arb_perm)) {
        let g = PermGroup::from_generators(gens.clone(), n).unwrap();
        if probe.degree() == n {
            let elems = closure(&gens, n);
            prop_assert_eq!(g.contains(&probe).unwrap(), elems.contains(&probe));
        }
    }

    #[test]
    fn setwise_stabilizer_orbit_stabilizer((n, gens) in arb_group(), mask in 0u32..256) {
        let g = PermGroup::from_generators(gens.clone(), n).unwrap();
        let set: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let stab = g.setwise_stabilizer(&set).unwrap();
        for s in stab.generators() {
            let mut img: Vec<usize> = set.iter().map(|&x| s.image(x)).collect();
            img.sort_unstable();
            prop_assert_eq!(&img, &set);
        }
        // orbit of the set under the action on subsets
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        seen.insert(set.clone());
        let mut stack = vec![set.clone()];
        while let Some(s) = stack.pop() {
            for p in &gens {
                let mut img: Vec<usize> = s.iter().map(|&x| p.image(x)).collect();
                img.sort_unstable();
                if seen.insert(img.clone()) {
                    stack.push(img);
                }
            }
        }
        prop_assert_eq!(stab.order() * BigUint::from(seen.len()), g.order());
    }

    #[test]
    fn orbits_partition_domain((n, gens) in arb_group()) {
        let g = PermGroup::from_generators(gens, n).unwrap();
        let orbits = g.orbits();
        prop_assert_eq!(orbits.iter().map(Vec::len).sum::<usize>(), n);
        let mut all: Vec<usize> = orbits.concat();
        all.sort_unstable();
        prop_assert_eq!(all, (0..n).collect::<Vec<_>>());
    }

    #[test]
    fn two_transitivity_matches_pair_orbit((n, gens) in arb_group()) {
        let g = PermGroup::from_generators(gens.clone(), n).unwrap();
        let domain = g.orbit(0).unwrap();
        if domain.len() >= 2 {
            let mut seen: HashSet<(usize, usize)> = HashSet::new();
            let start = (domain[0], domain[1]);
            seen.insert(start);
            let mut stack = vec![start];
            while let Some((a, b)) = stack.pop() {
                for p in &gens {
                    let img = (p.image(a), p.image(b));
                    if seen.insert(img) {
                        stack.push(img);
                    }
                }
            }
            let k = domain.len();
            prop_assert_eq!(g.is_2transitive(&domain).unwrap(), seen.len() == k * (k - 1));
        }
    }

    #[test]
    fn induced_action_order_splits((n, gens) in arb_group()) {
        let g = PermGroup::from_generators(gens, n).unwrap();
        let cells = g.orbits();
        let act = g.induced_action(&cells).unwrap();
        prop_assert_eq!(act.image.order() * act.kernel_order, g.order());
    }

    #[test]
    fn inverse_law(p in (2usize..=10).prop_flat_map(arb_perm)) {
        prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
    }
}
