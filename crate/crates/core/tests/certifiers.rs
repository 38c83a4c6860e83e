use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use specert::certifiers::{
    check_hall_violator, check_k_tree, check_perfect_matching, check_win_violator, count_perfect_matchings_brute,
    find_k_tree, find_win_violator, perfect_matching, Certificate,
};
use specert::corpus::connected_graphs_range;
use specert::families::{ktree_extremal, matching_extremal, win_family, WinFamilyParams};
use specert::BipartiteGraph;

#[test]
fn every_certificate_validates() {
    for g in connected_graphs_range(2, 7).unwrap() {
        for k in 2..=4 {
            let tree = find_k_tree(&g, k).unwrap();
            if let Some(Certificate::KTree(edges)) = &tree {
                check_k_tree(&g, k, edges).unwrap();
            }
            match find_win_violator(&g, k).unwrap() {
                Some(Certificate::WinViolator(s)) => check_win_violator(&g, k, &s).unwrap(),
                Some(other) => panic!("unexpected {}", other.kind()),
                // the Win condition is sufficient for a k-tree
                None => assert!(tree.is_some(), "{} has no violator and no {k}-tree", specert::graph6::to_graph6(&g)),
            }
        }
    }
}

#[test]
fn extremal_ktree_graphs_have_none() {
    for k in 2..=5 {
        for n in k + 2..k + 12 {
            let g = ktree_extremal(n, k).unwrap();
            assert!(find_k_tree(&g, k).unwrap().is_none(), "n={n} k={k}");
            assert!(find_k_tree(&g, k + 1).unwrap().is_some());
        }
    }
}

#[test]
fn win_family_violates_when_parts_exceed_bound() {
    // K_s joined to t cliques: S = K_s leaves t components
    for (s, k) in [(1, 2), (2, 3), (3, 4)] {
        let t = (k - 2) * s + 3;
        let g = win_family(&WinFamilyParams::new(s, vec![1; t]).unwrap()).unwrap();
        let w = find_win_violator(&g, k).unwrap().expect("violator");
        let Certificate::WinViolator(set) = w else { unreachable!() };
        check_win_violator(&g, k, &set).unwrap();
    }
}

#[test]
fn matching_agrees_with_permanent() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..2000 {
        let n = rng.gen_range(1..=6);
        let mask: u64 = rng.gen::<u64>() & rng.gen::<u64>() | rng.gen::<u64>();
        let b = BipartiteGraph::from_mask(n, n, mask & ((1u64 << (n * n)) - 1));
        let perm = count_perfect_matchings_brute(&b).unwrap();
        match perfect_matching(&b).unwrap() {
            Certificate::PerfectMatching(pairs) => {
                assert!(perm > 0);
                check_perfect_matching(&b, &pairs).unwrap();
            }
            Certificate::HallViolator(s) => {
                assert_eq!(perm, 0);
                check_hall_violator(&b, &s).unwrap();
            }
            other => panic!("unexpected {}", other.kind()),
        }
    }
}

#[test]
fn extremal_bipartite_graphs_have_hall_violators() {
    for n in 2..=10 {
        for s in 0..n {
            let b = matching_extremal(n, s).unwrap();
            let Certificate::HallViolator(set) = perfect_matching(&b).unwrap() else {
                panic!("n={n} s={s} has a perfect matching");
            };
            check_hall_violator(&b, &set).unwrap();
        }
    }
}

#[test]
fn unbalanced_input_is_rejected() {
    assert!(perfect_matching(&BipartiteGraph::complete(2, 3)).is_err());
    assert!(find_k_tree(&specert::Graph::empty(3), 2).is_err());
}
