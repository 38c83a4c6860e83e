use proptest::prelude::*;
use specert::canon::{are_isomorphic, canonical_form};
use specert::graph::{disjoint_union, join};
use specert::graph6::{from_graph6, to_graph6};
use specert::{Graph, VertexSet};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for v in 1..n {
                for u in 0..v {
                    if it.next().unwrap() {
                        edges.push((u, v));
                    }
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in graph(70)) {
        let text = to_graph6(&g);
        prop_assert_eq!(from_graph6(text.as_bytes()).unwrap(), g);
    }

    #[test]
    fn join_and_union_edge_counts(g in graph(9), h in graph(9)) {
        let (n1, n2) = (g.order(), h.order());
        let j = join(&g, &h);
        prop_assert_eq!(j.order(), n1 + n2);
        prop_assert_eq!(j.edge_count(), g.edge_count() + h.edge_count() + n1 * n2);
        let u = disjoint_union(&[g.clone(), h.clone()]).unwrap();
        prop_assert_eq!(u.edge_count(), g.edge_count() + h.edge_count());
        prop_assert_eq!(u.components().len(), g.components().len() + h.components().len());
    }

    #[test]
    fn rotation_keeps_edge_count(g in graph(10), u in 0usize..10, v in 0usize..10) {
        let n = g.order();
        let (u, v) = (u % n, v % n);
        prop_assume!(u != v);
        let movable: Vec<usize> = g.neighbors(v).filter(|&t| t != u && !g.has_edge(u, t)).collect();
        let h = g.rotate_edges(u, v, &VertexSet::new(movable.iter().copied())).unwrap();
        prop_assert_eq!(h.edge_count(), g.edge_count());
        prop_assert_eq!(h.degree(u), g.degree(u) + movable.len());
        prop_assert_eq!(h.degree(v), g.degree(v) - movable.len());
    }

    #[test]
    fn canonical_form_is_label_invariant(g in graph(7), seed in any::<u64>()) {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        prop_assert!(are_isomorphic(&g, &h).unwrap());
    }

    #[test]
    fn complement_is_an_involution(g in graph(12)) {
        let c = g.complement();
        let n = g.order();
        prop_assert_eq!(c.edge_count() + g.edge_count(), n * (n - 1) / 2);
        prop_assert_eq!(c.complement(), g);
    }
}
