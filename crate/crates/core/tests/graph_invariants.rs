use std::collections::BTreeSet;

use lapcode::exactmat::determinant;
use lapcode::graphs::{canonical_form, enumerate_connected, enumerate_connected_labeled, is_isomorphic, whisker};
use lapcode::{Graph, IntMatrix};
use num_bigint::BigInt;
use proptest::prelude::*;

fn minor(m: &IntMatrix, r: usize, c: usize) -> IntMatrix {
    let rows: Vec<Vec<BigInt>> = (0..m.rows())
        .filter(|&i| i != r)
        .map(|i| (0..m.cols()).filter(|&j| j != c).map(|j| m.get(i, j).clone()).collect())
        .collect();
    IntMatrix::from_rows(&rows).unwrap()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n);
            out.push(q);
        }
    }
    out
}

/// Smallest sorted edge list over all relabelings.
fn brute_canon(g: &Graph) -> Vec<(usize, usize)> {
    permutations(g.n())
        .into_iter()
        .map(|sigma| {
            let mut e: Vec<_> = g
                .edges()
                .map(|(u, v)| {
                    let (a, b) = (sigma[u - 1], sigma[v - 1]);
                    (a.min(b), a.max(b))
                })
                .collect();
            e.sort();
            e
        })
        .min()
        .unwrap()
}

fn arb_connected() -> impl Strategy<Value = Graph> {
    (2usize..=6)
        .prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (
                Just(n),
                proptest::collection::vec(any::<bool>(), pairs),
                proptest::collection::vec(0usize..1000, n - 1),
            )
        })
        .prop_map(|(n, mask, tree)| {
            let mut edges = BTreeSet::new();
            for v in 2..=n {
                let u = 1 + tree[v - 2] % (v - 1);
                edges.insert((u, v));
            }
            let mut k = 0;
            for u in 1..=n {
                for v in u + 1..=n {
                    if mask[k] {
                        edges.insert((u, v));
                    }
                    k += 1;
                }
            }
            Graph::new(n, edges).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn laplacian_symmetric_with_zero_sums(g in arb_connected()) {
        let l = g.laplacian();
        prop_assert_eq!(l.transpose(), l.clone());
        for i in 0..g.n() {
            prop_assert_eq!(l.row(i).iter().sum::<BigInt>(), BigInt::from(0));
        }
    }

    #[test]
    fn every_cofactor_counts_spanning_trees(g in arb_connected()) {
        let l = g.laplacian();
        let tau = g.spanning_tree_count();
        for i in 0..g.n() {
            for j in 0..g.n() {
                let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                let c = determinant(&minor(&l, i, j)).unwrap() * sign;
                prop_assert_eq!(&c, &tau);
            }
        }
    }

    #[test]
    fn relabeling_conjugates_the_laplacian(g in arb_connected(), seed in 0usize..720) {
        let perms = permutations(g.n());
        let sigma = &perms[seed % perms.len()];
        let h = g.permuted(sigma).unwrap();
        let n = g.n();
        let mut p = IntMatrix::zeros(n, n).unwrap();
        for (i, &s) in sigma.iter().enumerate() {
            p.set(i, s - 1, BigInt::from(1));
        }
        let conj = p.transpose().mul(&g.laplacian()).unwrap().mul(&p).unwrap();
        prop_assert_eq!(conj, h.laplacian());
        prop_assert!(is_isomorphic(&g, &h).unwrap());
        prop_assert_eq!(canonical_form(&g).unwrap().key, canonical_form(&h).unwrap().key);
    }

    #[test]
    fn whiskering_keeps_tree_count(g in arb_connected(), k in 1usize..=3) {
        let w = whisker(&g, k).unwrap();
        prop_assert_eq!(w.n(), (k + 1) * g.n());
        prop_assert_eq!(w.spanning_tree_count(), g.spanning_tree_count());
    }
}

#[test]
fn class_counts_match_exhaustive_relabeling() {
    for n in 2..=5 {
        let classes: BTreeSet<_> = enumerate_connected_labeled(n)
            .unwrap()
            .map(|g| brute_canon(&g))
            .collect();
        let ours = enumerate_connected(n).unwrap();
        assert_eq!(ours.len(), classes.len(), "n = {n}");
        let reps: BTreeSet<_> = ours.iter().map(brute_canon).collect();
        assert_eq!(reps, classes);
    }
}

#[test]
fn non_isomorphic_pairs_are_separated() {
    let c6 = Graph::cycle(6).unwrap();
    let two_triangles = Graph::new(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (3, 4)]).unwrap();
    assert!(!is_isomorphic(&c6, &two_triangles).unwrap());
    assert!(!is_isomorphic(&Graph::path(5).unwrap(), &Graph::star(5).unwrap()).unwrap());
}
