//! Self-injective algebras with Loewy length well above the rank: Hom
//! spaces here have dimension up to 4, so these runs exercise the
//! window wrap-around arithmetic, local-ring inversion in the cone
//! reduction, and the signed disk model on its actual hypothesis.

use naka_tau::algebra::{hom_dim, validate_algebra, Algebra, Component, QuiverKind, SignedInd};
use naka_tau::{disk, mutation, oracle, reduction, sequences, tilting};
use itertools::Itertools;

fn tall_algebras() -> Vec<Algebra> {
    [
        (QuiverKind::Cyclic, vec![6, 6]),
        (QuiverKind::Cyclic, vec![7, 7]),
        (QuiverKind::Cyclic, vec![5, 5, 5]),
    ]
    .into_iter()
    .map(|(kind, kupisch)| {
        validate_algebra(vec![Component { kind, kupisch }]).expect("valid")
    })
    .collect()
}

#[test]
fn window_model_matches_matrices_in_high_length() {
    let mut max_dim = 0;
    for alg in tall_algebras() {
        let ind = alg.indecomposables();
        for x in &ind {
            for y in &ind {
                let w = hom_dim(&alg, x, y);
                assert_eq!(w, oracle::hom_dim_matrix(&alg, x, y, 2), "{x:?} {y:?}");
                assert_eq!(w, oracle::hom_dim_matrix(&alg, x, y, 3), "{x:?} {y:?}");
                max_dim = max_dim.max(w);
            }
        }
    }
    assert!(max_dim >= 4, "expected high-dimensional Hom spaces");
}

#[test]
fn completions_are_extremes_in_high_length() {
    for alg in tall_algebras() {
        let graph = tilting::enumerate_stautilt(&alg);
        for pair in tilting::enumerate_tau_rigid(&alg) {
            if pair.size() == alg.rank() {
                continue;
            }
            let b = tilting::bongartz(&alg, &pair).unwrap();
            let c = tilting::cobongartz(&alg, &pair).unwrap();
            let bi = graph.nodes.iter().position(|n| *n == b).unwrap();
            let ci = graph.nodes.iter().position(|n| *n == c).unwrap();
            for i in tilting::completions_of(&graph, &pair) {
                assert!(graph.gen_classes[i].is_subset(&graph.gen_classes[bi]));
                assert!(graph.gen_classes[ci].is_subset(&graph.gen_classes[i]));
            }
        }
    }
}

#[test]
fn v_map_routes_agree_in_high_length() {
    for alg in tall_algebras() {
        let mut candidates: Vec<SignedInd> = alg
            .indecomposables()
            .into_iter()
            .map(SignedInd::module)
            .collect();
        candidates.extend(alg.projectives().into_iter().map(SignedInd::shifted));
        for pair in tilting::enumerate_tau_rigid(&alg) {
            if pair.size() == 0 || pair.size() > 2 {
                continue;
            }
            for x in &candidates {
                let closed = reduction::v_map(&alg, &pair, x);
                let cone = oracle::v_map_oracle(&alg, &pair, x, 2);
                match (&closed, &cone) {
                    (Ok(a), Ok(b)) => assert_eq!(a, b, "T={pair:?} X={x:?} over {alg:?}"),
                    (Err(_), Err(_)) => {}
                    _ => panic!("T={pair:?} X={x:?}: {closed:?} vs {cone:?}"),
                }
            }
        }
    }
}

#[test]
fn sequence_bijection_in_high_length() {
    for alg in tall_algebras() {
        let mut images = std::collections::BTreeMap::new();
        for pair in tilting::enumerate_tau_rigid(&alg) {
            if pair.size() == 0 {
                continue;
            }
            let summands = pair.summands();
            let k = summands.len();
            for perm in summands.into_iter().permutations(k) {
                let t = sequences::OrderedRigid { entries: perm };
                let seq = sequences::psi(&alg, &t).unwrap();
                if let Some(prev) = images.insert(seq.entries.clone(), t.entries.clone()) {
                    assert_eq!(prev, t.entries, "not injective over {alg:?}");
                }
                assert_eq!(sequences::psi_inverse(&alg, &seq).unwrap(), t);
            }
        }
    }
}

#[test]
fn transitive_in_high_length() {
    for alg in tall_algebras() {
        assert!(mutation::is_transitive(&alg), "{alg:?}");
    }
}

#[test]
fn signed_disk_model_on_its_hypothesis() {
    for alg in tall_algebras() {
        assert!(disk::hypothesis_holds(&alg));
        let pairs = tilting::enumerate_tau_rigid(&alg);
        let complete = pairs.iter().filter(|p| p.size() == alg.rank()).count();
        assert_eq!(disk::signed_triangulation_count(&alg), complete, "{alg:?}");
        let modules = pairs
            .iter()
            .filter(|p| p.size() == alg.rank() && p.shifted.is_empty())
            .count();
        assert_eq!(disk::triangulations(&alg).len(), modules, "{alg:?}");
    }
}
