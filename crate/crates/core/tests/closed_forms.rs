//! Closed forms against index values computed on the built trees.

use treeirr::extremal::{
    caterpillar_irr, caterpillar_sigma, k3_arrangement_irr, k3_arrangement_sigma, k3_irr_max,
    k3_irr_max_product_form, k3_irr_min, k4_star_irr, k4_star_sigma, Middle,
};
use treeirr::{
    albertson_index, enumerate_realizations, extremal_search, sigma_index, Arrangement, IndexKind,
    InternalDegreeSequence, Realization,
};
use treeirr_oracle::multisets;

#[test]
fn k3_forms_match_built_caterpillars() {
    for seq in multisets(3, 2, 9) {
        let (a, b, c) = (seq[0], seq[1], seq[2]);
        for m in Middle::ALL {
            let (mid, p, q) = m.split(a, b, c);
            let r = Realization::caterpillar(&[p, mid, q]).unwrap();
            assert_eq!(
                k3_arrangement_irr(a, b, c, m).unwrap(),
                albertson_index(r.tree()),
                "{seq:?} {m:?}"
            );
            assert_eq!(
                k3_arrangement_sigma(a, b, c, m).unwrap(),
                sigma_index(r.tree()),
                "{seq:?} {m:?}"
            );
        }
    }
}

#[test]
fn k3_forms_bracket_the_enumeration() {
    for seq in multisets(3, 2, 9) {
        let (a, b, c) = (seq[0], seq[1], seq[2]);
        let s = InternalDegreeSequence::new(seq.clone()).unwrap();
        let irr = extremal_search(&s, IndexKind::Albertson).unwrap();
        assert_eq!(k3_irr_min(a, b, c).unwrap(), irr.min_value, "{seq:?}");
        assert_eq!(k3_irr_max(a, b, c).unwrap(), irr.max_value, "{seq:?}");
        assert_eq!(k3_irr_min(a, b, c), k3_arrangement_irr(a, b, c, Middle::B));
        assert_eq!(k3_irr_max(a, b, c), k3_arrangement_irr(a, b, c, Middle::C));
    }
    assert_eq!(k3_irr_max_product_form(4, 3, 2).unwrap(), 13);
}

#[test]
fn case_identities() {
    for seq in multisets(3, 2, 20) {
        let (a, b, c) = (seq[0], seq[1], seq[2]);
        let ma = k3_arrangement_irr(a, b, c, Middle::A).unwrap();
        let mb = k3_arrangement_irr(a, b, c, Middle::B).unwrap();
        let mc = k3_arrangement_irr(a, b, c, Middle::C).unwrap();
        assert_eq!(ma, mb, "{seq:?}");
        assert!(mb <= mc, "{seq:?}");
        assert_eq!(mc - mb, 2 * (b - c) as u64, "{seq:?}");
    }
}

#[test]
fn k4_forms_match_every_realization() {
    for seq in multisets(4, 2, 9) {
        let s = InternalDegreeSequence::new(seq.clone()).unwrap();
        for r in enumerate_realizations(&s).unwrap() {
            let (irr, sigma) = (albertson_index(r.tree()), sigma_index(r.tree()));
            match r.arrangement() {
                Arrangement::Path(order) => {
                    assert_eq!(caterpillar_irr(&order).unwrap(), irr, "{order:?}");
                    assert_eq!(caterpillar_sigma(&order).unwrap(), sigma, "{order:?}");
                }
                Arrangement::Star { center, arms } => {
                    assert_eq!(k4_star_irr(center, arms[0], arms[1], arms[2]).unwrap(), irr);
                    assert_eq!(
                        k4_star_sigma(center, arms[0], arms[1], arms[2]).unwrap(),
                        sigma
                    );
                }
                Arrangement::Other(_) => panic!("four internal vertices form a path or a star"),
            }
        }
    }
}

#[test]
fn caterpillar_forms_on_longer_paths() {
    for seq in multisets(5, 2, 5) {
        let r = Realization::caterpillar(&seq).unwrap();
        assert_eq!(caterpillar_irr(&seq).unwrap(), albertson_index(r.tree()));
        assert_eq!(caterpillar_sigma(&seq).unwrap(), sigma_index(r.tree()));
    }
}

#[test]
fn extremal_witnesses_verify() {
    for k in 1..=5 {
        for seq in multisets(k, 2, 5) {
            let s = InternalDegreeSequence::new(seq.clone()).unwrap();
            let all = enumerate_realizations(&s).unwrap();
            for kind in IndexKind::ALL {
                let e = extremal_search(&s, kind).unwrap();
                let values: Vec<u64> = all.iter().map(|r| kind.evaluate(r.tree())).collect();
                assert!(e.min_value <= e.max_value);
                assert!(values.iter().all(|&v| e.min_value <= v && v <= e.max_value));
                assert_eq!(
                    e.min_witnesses.len(),
                    values.iter().filter(|&&v| v == e.min_value).count()
                );
                assert_eq!(
                    e.max_witnesses.len(),
                    values.iter().filter(|&&v| v == e.max_value).count()
                );
                assert!(e
                    .min_witnesses
                    .iter()
                    .all(|w| kind.evaluate(w.tree()) == e.min_value));
                assert!(e
                    .max_witnesses
                    .iter()
                    .all(|w| kind.evaluate(w.tree()) == e.max_value));
                assert!(e
                    .max_witnesses
                    .windows(2)
                    .all(|w| w[0].code() < w[1].code()));
            }
        }
    }
}
