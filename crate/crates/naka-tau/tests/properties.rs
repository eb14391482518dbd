//! Property tests over randomly generated Nakayama algebras.

use naka_tau::algebra::{
    compose_windows, hom_dim, hom_windows, parse_signed, trace_torsion, validate_algebra, Algebra,
    Component, IndModule, QuiverKind, SignedInd,
};
use naka_tau::oracle;
use proptest::prelude::*;

fn arb_component() -> impl Strategy<Value = Component> {
    prop_oneof![
        // linear: kupisch built left to right within the constraints
        (1usize..=5, proptest::collection::vec(0usize..=10, 5)).prop_map(|(n, seeds)| {
            let mut kupisch = vec![1usize];
            for i in 1..n {
                let cap = (kupisch[i - 1] + 1).min(i + 1);
                kupisch.push(1 + seeds[i] % cap);
            }
            Component {
                kind: QuiverKind::Linear,
                kupisch,
            }
        }),
        // cyclic: entries in [2, n+2] obeying the cyclic condition
        (1usize..=5, proptest::collection::vec(0usize..=10, 6)).prop_map(|(n, seeds)| {
            if n == 1 {
                return Component {
                    kind: QuiverKind::Cyclic,
                    kupisch: vec![1 + seeds[0] % 4],
                };
            }
            let cap = n + 2;
            let mut kupisch = vec![2 + seeds[0] % (cap - 1)];
            for i in 1..n {
                let hi = (kupisch[i - 1] + 1).min(cap);
                kupisch.push(2 + seeds[i] % (hi - 1));
            }
            // repair the cyclic condition around the circle
            loop {
                let mut changed = false;
                for i in 0..n {
                    let prev = kupisch[(i + n - 1) % n];
                    if kupisch[i] > prev + 1 {
                        kupisch[i] = prev + 1;
                        changed = true;
                    }
                }
                if !changed {
                    break;
                }
            }
            Component {
                kind: QuiverKind::Cyclic,
                kupisch,
            }
        }),
    ]
}

fn arb_algebra() -> impl Strategy<Value = Algebra> {
    proptest::collection::vec(arb_component(), 1..=2)
        .prop_map(|components| validate_algebra(components).expect("generator emits valid data"))
}

fn arb_module(alg: &Algebra) -> impl Strategy<Value = IndModule> {
    let ind = alg.indecomposables();
    (0..ind.len()).prop_map(move |i| ind[i])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn radical_series_terminates((alg, seed) in arb_algebra().prop_flat_map(|a| {
        let s = arb_module(&a);
        (Just(a), s)
    })) {
        let m = seed;
        prop_assert!(m.radical_power(&alg, m.len).is_none());
        prop_assert!(m.radical_power(&alg, m.len - 1).is_some());
        // length bookkeeping of the radical series
        for k in 0..m.len {
            let r = m.radical_power(&alg, k).unwrap();
            prop_assert_eq!(r.len, m.len - k);
            prop_assert!(r.is_valid(&alg));
        }
    }

    #[test]
    fn trace_exactness((alg, a, b) in arb_algebra().prop_flat_map(|alg| {
        let x = arb_module(&alg);
        let y = arb_module(&alg);
        (Just(alg), x, y)
    })) {
        let (t, f) = trace_torsion(&alg, &[a], &b);
        let lt = t.map_or(0, |x| x.len);
        let lf = f.map_or(0, |x| x.len);
        prop_assert_eq!(lt + lf, b.len);
        if let Some(t) = t {
            prop_assert!(naka_tau::algebra::is_in_gen(&alg, &t, &[a]));
        }
        // Gen of the generator is a torsion class only when it is
        // tau-rigid; only then is the quotient Hom-orthogonal
        if naka_tau::algebra::is_tau_rigid_module(&alg, &a) {
            if let Some(f) = f {
                prop_assert_eq!(hom_dim(&alg, &a, &f), 0);
            }
        }
    }

    #[test]
    fn windows_match_matrix_oracle((alg, a, b) in arb_algebra().prop_flat_map(|alg| {
        let x = arb_module(&alg);
        let y = arb_module(&alg);
        (Just(alg), x, y)
    })) {
        prop_assert_eq!(hom_dim(&alg, &a, &b), oracle::hom_dim_matrix(&alg, &a, &b, 2));
    }

    #[test]
    fn composition_lands_in_the_hom_basis((alg, a, b, c) in arb_algebra().prop_flat_map(|alg| {
        let x = arb_module(&alg);
        let y = arb_module(&alg);
        let z = arb_module(&alg);
        (Just(alg), x, y, z)
    })) {
        for w1 in hom_windows(&alg, &a, &b) {
            for w2 in hom_windows(&alg, &b, &c) {
                if let Some(w) = compose_windows(&w1, &w2).unwrap() {
                    prop_assert!(hom_windows(&alg, &a, &c).contains(&w));
                }
            }
        }
    }

    #[test]
    fn text_forms_round_trip((alg, m) in arb_algebra().prop_flat_map(|a| {
        let s = arb_module(&a);
        (Just(a), s)
    })) {
        let signed = SignedInd::module(m);
        prop_assert_eq!(parse_signed(&alg, &signed.text(&alg)).unwrap(), signed);
        if m.is_projective(&alg) {
            let shifted = SignedInd::shifted(m);
            prop_assert_eq!(parse_signed(&alg, &shifted.text(&alg)).unwrap(), shifted);
        }
        prop_assert_eq!(Algebra::parse_components(&alg.to_spec_json()).unwrap(), alg.clone());
    }
}
