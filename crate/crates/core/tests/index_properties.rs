use proptest::prelude::*;
use treeirr::{
    albertson_index, canonical_code, enumerate_realizations, index_report, is_adjacency_regular,
    sigma_index, InternalDegreeSequence, Tree,
};
use treeirr_oracle::{multisets, prufer_decode};

fn random_tree() -> impl Strategy<Value = Tree> {
    (2usize..60).prop_flat_map(|n| {
        prop::collection::vec(0..n, n - 2)
            .prop_map(move |seq| Tree::new(n, prufer_decode(&seq)).unwrap())
    })
}

proptest! {
    #[test]
    fn index_laws(t in random_tree()) {
        let irr = albertson_index(&t);
        let sigma = sigma_index(&t);
        prop_assert_eq!(irr % 2, 0);
        prop_assert!(sigma >= irr);
        let report = index_report(&t);
        prop_assert_eq!(report.albertson, irr);
        prop_assert_eq!(report.sigma, sigma);
        let small_steps = report.per_edge.iter().all(|e| e.abs_diff <= 1);
        prop_assert_eq!(sigma == irr, small_steps);
        prop_assert_eq!(irr == 0, is_adjacency_regular(&t));
        prop_assert_eq!(sigma == 0, is_adjacency_regular(&t));
    }

    #[test]
    fn indices_follow_the_code(t in random_tree(), rot in any::<usize>()) {
        let n = t.vertex_count();
        let perm: Vec<usize> = (0..n).map(|v| (v + rot) % n).rev().collect();
        let u = t.relabeled(&perm);
        prop_assert_eq!(canonical_code(&t), canonical_code(&u));
        prop_assert_eq!(albertson_index(&t), albertson_index(&u));
        prop_assert_eq!(sigma_index(&t), sigma_index(&u));
    }
}

#[test]
fn realizations_are_never_adjacency_regular() {
    for k in 1..=4 {
        for seq in multisets(k, 2, 6) {
            let s = InternalDegreeSequence::new(seq).unwrap();
            for r in enumerate_realizations(&s).unwrap() {
                assert!(!is_adjacency_regular(r.tree()));
                assert!(albertson_index(r.tree()) > 0);
            }
        }
    }
}
