use proptest::prelude::*;
use surfcover_core::{generate, homology, nonsep, surgery, Embedding};

fn surface() -> impl Strategy<Value = Embedding> {
    (any::<u64>(), 0usize..=4, any::<bool>(), 8usize..22).prop_map(|(seed, eg, flip, n)| {
        let orientable = eg % 2 == 0 && (eg == 0 || flip);
        generate::random_surface_embedding(n, eg, orientable, &mut generate::rng(seed)).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn separating_cycles_are_boundaries(e in surface(), pick in any::<prop::sample::Index>()) {
        let cycles = nonsep::fundamental_cycles(&e);
        let c = &cycles[pick.index(cycles.len())];
        let edges: Vec<usize> = c.iter().map(|d| d.edge()).collect();
        let sep = surgery::is_separating(&e, c).unwrap();
        let boundary = homology::is_boundary_subgraph(&e, &edges).unwrap();
        prop_assert_eq!(sep, boundary);
    }

    #[test]
    fn cutting_lowers_genus(e in surface(), pick in any::<prop::sample::Index>()) {
        let cycles = nonsep::fundamental_cycles(&e);
        let c = &cycles[pick.index(cycles.len())];
        let cut = surgery::cut_along(&e, c).unwrap();
        let before = e.euler_genus().unwrap().euler_genus;
        let after = cut.embedding.total_euler_genus();
        if cut.components > 1 {
            prop_assert_eq!(after, before);
        } else if cut.one_sided {
            prop_assert_eq!(after + 1, before);
        } else {
            prop_assert_eq!(after + 2, before);
        }
    }

    #[test]
    fn cut_and_contract_shrinks_face_norm(e in surface()) {
        prop_assume!(e.euler_genus().unwrap().euler_genus > 0);
        let c = nonsep::shortest_nonseparating_cycle(&e).unwrap();
        let out = surgery::cut_and_contract(&e, &c).unwrap();
        prop_assert!(out.embedding.norms().face_norm_sq < e.norms().face_norm_sq);
        prop_assert!(out.embedding.total_euler_genus() < e.euler_genus().unwrap().euler_genus);
    }

    #[test]
    fn level_cycles_verify(e in surface(), pick in any::<prop::sample::Index>()) {
        let f = pick.index(e.faces().len());
        match surgery::level_cycles(&e, &[f]) {
            Ok(r) => prop_assert_eq!(surgery::verify_level(&e, &[f], &r), Ok(())),
            Err(err) => prop_assert_eq!(err, surfcover_core::Error::EmptyLevel),
        }
    }
}

#[test]
fn double_torus_cut() {
    let e = generate::genus_g_triangulation(2, &mut generate::rng(11)).unwrap();
    let c = nonsep::shortest_nonseparating_cycle(&e).unwrap();
    let out = surgery::cut_and_contract(&e, &c).unwrap();
    assert_eq!(e.euler_genus().unwrap().euler_genus, 4);
    assert_eq!(out.embedding.euler_genus().unwrap().euler_genus, 2);
    assert!(out.embedding.norms().face_norm_sq < e.norms().face_norm_sq);
}
