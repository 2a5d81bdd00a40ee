use proptest::prelude::*;
use surfcover_core::generate;
use surfcover_core::io::{embedding_from_json, embedding_to_json, EmbeddingSpec};
use surfcover_core::{named, Embedding};

fn surface() -> impl Strategy<Value = Embedding> {
    (any::<u64>(), 0usize..=5, any::<bool>(), 8usize..30).prop_map(|(seed, eg, flip, n)| {
        let orientable = eg % 2 == 0 && (eg == 0 || flip);
        generate::random_surface_embedding(n, eg, orientable, &mut generate::rng(seed)).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn euler_characteristic_matches_faces(e in surface()) {
        let g = e.euler_genus().unwrap();
        let chi = e.vertex_count() as i64 - e.edge_count() as i64 + e.faces().len() as i64;
        prop_assert_eq!(2 - chi, g.euler_genus as i64);
        if g.orientable {
            prop_assert_eq!(g.euler_genus % 2, 0);
        }
    }

    #[test]
    fn dual_swaps_norms(e in surface()) {
        let d = e.dual();
        prop_assert_eq!(d.vertex_count(), e.faces().len());
        prop_assert_eq!(d.norms().face_norm_sq, e.norms().vertex_norm_sq);
        prop_assert_eq!(d.norms().vertex_norm_sq, e.norms().face_norm_sq);
        prop_assert_eq!(d.euler_genus().unwrap(), e.euler_genus().unwrap());
        prop_assert!(d.dual().equivalent_to(&e));
    }

    #[test]
    fn switching_preserves_everything(e in surface(), picks in proptest::collection::vec(any::<prop::sample::Index>(), 1..6)) {
        let mut s = e.clone();
        for p in &picks {
            s.switch_vertex(p.index(e.vertex_count()));
        }
        prop_assert_eq!(s.euler_genus().unwrap(), e.euler_genus().unwrap());
        prop_assert_eq!(s.faces().sizes().len(), e.faces().sizes().len());
        prop_assert!(s.equivalent_to(&e));
    }

    #[test]
    fn json_round_trip(e in surface()) {
        let back = embedding_from_json(&embedding_to_json(&e)).unwrap();
        prop_assert_eq!(back, e);
    }
}

#[test]
fn certificate_is_checked() {
    let k7 = named::k7_torus();
    let spec = EmbeddingSpec::from_embedding(&k7).certified(&k7).unwrap();
    assert_eq!(spec.build().unwrap(), k7);
    let mut bad = spec;
    bad.certified_euler_genus = Some(4);
    assert!(bad.build().is_err());
}
