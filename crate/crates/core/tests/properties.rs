use num_bigint::BigInt;
use proptest::prelude::*;

use rorc::sample::{random_nilradical, trial_rng};
use rorc::{
    boxes_between, complete_diagram, diagram_class, dominance_leq, gamma_set, jordan_type, kappa, lambda_of,
    lambda_set, minimal_movement, r_rank, richardson_element, t_of_d, witness, DimensionVector, Matrix, MatrixDoc,
    Pair, Partition, Strata, WitnessConfig, YoungTableau,
};

type F = rorc::Fp<101>;

fn dims(max_t: usize, max_part: usize) -> impl Strategy<Value = DimensionVector> {
    prop::collection::vec(1..=max_part, 1..=max_t).prop_map(|v| DimensionVector::new(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn lambda_is_conjugate_of_sorted_d(d in dims(8, 6)) {
        let lam = lambda_of(&d);
        prop_assert_eq!(lam.weight(), d.n());
        prop_assert_eq!(lam.conjugate(), Partition::from_unsorted(d.parts().to_vec()));
        prop_assert_eq!(diagram_class(&complete_diagram(&d)), lam);
    }

    #[test]
    fn parameter_sets_are_nested(d in dims(8, 5)) {
        let gamma = gamma_set(&d);
        let lambda = lambda_set(&d);
        prop_assert!(lambda.is_subset(&gamma));
        prop_assert!(lambda.len() < d.t().max(1));
        for i in 1..d.t() {
            prop_assert!(gamma.contains(&Pair::new(i, i + 1)));
        }
    }

    #[test]
    fn kappa_counts_boxes_between(d in dims(8, 5)) {
        for p in d.all_pairs() {
            prop_assert_eq!(boxes_between(&d, p.i, p.j).unwrap() + 1, kappa(&d, p.i, p.j).unwrap());
        }
    }

    #[test]
    fn rank_thresholds_match_the_richardson_element(d in dims(5, 3)) {
        let x = richardson_element::<BigInt>(&d);
        prop_assert_eq!(jordan_type(&x).unwrap(), lambda_of(&d));
        let st = Strata::new(&d);
        for p in d.all_pairs() {
            for k in 1..=p.j - p.i + 1 {
                prop_assert_eq!(st.window_power_rank(&x, p.i, p.j, k), r_rank(&d, p.i, p.j, k).unwrap());
            }
        }
        prop_assert!(st.is_richardson(&x).unwrap());
        prop_assert!(st.lambda_membership(&x).is_empty());
    }

    #[test]
    fn decomposition_holds_pointwise(d in dims(5, 3), seed in any::<u64>()) {
        // small field so that defective matrices actually occur
        type G = rorc::Fp<2>;
        let st = Strata::new(&d);
        for k in 0..16 {
            let a: Matrix<G> = random_nilradical(&d, &mut trial_rng(seed, k));
            let rich = st.is_richardson(&a).unwrap();
            prop_assert_eq!(rich, st.defect_profile(&a).unwrap().is_empty());
            prop_assert_eq!(rich, st.lambda_membership(&a).is_empty());
        }
    }

    #[test]
    fn tableau_chain_round_trip(d in dims(7, 5)) {
        let t = t_of_d(&d);
        prop_assert_eq!(t.shape(), lambda_of(&d));
        prop_assert_eq!(t.to_chain(d.t()).to_tableau().unwrap(), t.clone());
        let json = serde_json::to_string(&t).unwrap();
        prop_assert_eq!(serde_json::from_str::<YoungTableau>(&json).unwrap(), t);
    }

    #[test]
    fn movements_go_strictly_down_in_dominance(d in dims(7, 5)) {
        let lam = lambda_of(&d);
        for p in gamma_set(&d) {
            let mv = minimal_movement(&d, p.i, p.j).unwrap();
            prop_assert!(mv.codim >= 1);
            prop_assert_eq!(mv.tableau.shape(), mv.mu.clone());
            prop_assert!(dominance_leq(&mv.mu, &lam).unwrap() && mv.mu != lam);
            let mut content = vec![0; d.t()];
            for &x in mv.tableau.rows().iter().flatten() {
                content[x - 1] += 1;
            }
            prop_assert_eq!(content.as_slice(), d.parts());
        }
    }

    #[test]
    fn matrix_documents_round_trip(d in dims(4, 3), seed in any::<u64>()) {
        let a: Matrix<F> = random_nilradical(&d, &mut trial_rng(seed, 0));
        let doc = MatrixDoc::from_matrix(&a, &d);
        let back: MatrixDoc = serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
        prop_assert_eq!(back.to_matrix::<F>().unwrap(), a);
        prop_assert_eq!(back.dims().unwrap(), d);
    }

    #[test]
    fn witnesses_separate(d in dims(5, 3), seed in 0u64..1000) {
        let cfg = WitnessConfig { seed, ..WitnessConfig::default() };
        let st = Strata::new(&d);
        for &p in st.lambda_pairs() {
            let w = witness::<F>(&d, p, &cfg).unwrap();
            prop_assert_eq!(st.lambda_membership(&w.matrix), vec![p]);
        }
    }
}
