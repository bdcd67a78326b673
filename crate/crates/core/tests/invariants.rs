//! Cross-module invariants: the full battery at its default scale, plus
//! property-based checks on randomized inputs.

use proptest::prelude::*;

use ferrers_rsk::coxeter::CoxeterElement;
use ferrers_rsk::gk::{
    antichain_width, gk_bruteforce, gk_invariant, max_weight_profile, WeightedDag,
};
use ferrers_rsk::io::{DagDoc, FillingDoc};
use ferrers_rsk::rng::SplitMix64;
use ferrers_rsk::rsk::{coxeter_rsk, gansner_rsk, LiftedFilling};
use ferrers_rsk::shapes::{Filling, Partition};
use ferrers_rsk::verify::{self, conservation_violation, VerifyOptions};

#[test]
fn full_battery_at_default_scale() {
    let report = verify::run(&VerifyOptions::default());
    print!("{}", report.render());
    assert!(report.passed(), "{}", report.render());
}

#[test]
fn battery_with_every_element_on_small_shapes() {
    // Shapes up to 6 boxes, every Coxeter element, every filling with
    // entries up to 2.
    let options = VerifyOptions {
        all_coxeter: true,
        samples: 50,
        conservation_samples: 100,
        ..VerifyOptions::default()
    };
    let report = verify::run(&options);
    assert!(report.passed(), "{}", report.render());
}

fn partition_strategy(max_first: usize, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_first, 1..=max_len).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).unwrap()
    })
}

fn filling_strategy(max_first: usize, max_len: usize, max_entry: u64) -> impl Strategy<Value = Filling> {
    partition_strategy(max_first, max_len).prop_flat_map(move |shape| {
        let size = shape.size();
        prop::collection::vec(0..=max_entry, size).prop_map(move |values| {
            let mut rows = Vec::new();
            let mut k = 0;
            for &len in shape.parts() {
                rows.push(values[k..k + len].to_vec());
                k += len;
            }
            Filling::new(shape.clone(), rows).unwrap()
        })
    })
}

fn dag_strategy(max_n: usize) -> impl Strategy<Value = WeightedDag> {
    (1..=max_n).prop_flat_map(|n| {
        let weights = prop::collection::vec(0..=9u64, n);
        let mask = prop::collection::vec(any::<bool>(), n * (n - 1) / 2);
        (weights, mask).prop_map(move |(weights, mask)| {
            let mut arcs = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if mask[k] {
                        arcs.push((u, v));
                    }
                    k += 1;
                }
            }
            WeightedDag::new(weights, arcs).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn diagonals_partition_and_apex_dominates(shape in partition_strategy(9, 9)) {
        let mut seen = std::collections::BTreeSet::new();
        for d in shape.diagonals() {
            let apex = d.apex();
            for &cell in d.boxes() {
                prop_assert!(seen.insert(cell));
                prop_assert!(cell.le(&apex));
            }
        }
        prop_assert_eq!(seen.len(), shape.size());
    }

    #[test]
    fn elementary_bipartition_roundtrips(shape in partition_strategy(9, 9)) {
        let be = shape.elementary_bipartition();
        prop_assert!(be.is_elementary());
        prop_assert_eq!(be.partition(), Some(shape));
    }

    #[test]
    fn gk_parts_form_a_partition(dag in dag_strategy(8)) {
        let gk = gk_invariant(&dag);
        prop_assert!(gk.parts().windows(2).all(|w| w[0] >= w[1]));
        prop_assert_eq!(gk.parts().len(), antichain_width(&dag));
        prop_assert_eq!(gk.prefix_maxima().last().copied().unwrap_or(0), dag.total_weight());
        // stabilized beyond the width
        let beyond = max_weight_profile(&dag, gk.parts().len() + 2);
        prop_assert_eq!(beyond.last().copied(), Some(dag.total_weight()));
    }

    #[test]
    fn flow_matches_bruteforce(dag in dag_strategy(7)) {
        let width = antichain_width(&dag);
        let profile = max_weight_profile(&dag, width + 1);
        let brute = gk_bruteforce(&dag, width + 1).unwrap();
        prop_assert_eq!(profile, brute);
    }

    #[test]
    fn forward_maps_produce_rpps(f in filling_strategy(4, 3, 4), pick in any::<u64>()) {
        let g = gansner_rsk(&f);
        prop_assert!(g.is_rpp());
        prop_assert_eq!(conservation_violation(&f, &g), None);

        let n = f.shape().hook_length() + 1;
        let elements = CoxeterElement::enumerate(n).unwrap();
        let c = &elements[(pick % elements.len() as u64) as usize];
        let g = coxeter_rsk(c, &f).unwrap();
        prop_assert!(g.is_rpp());
        prop_assert_eq!(conservation_violation(&f, &g), None);
    }

    #[test]
    fn lift_restricts_to_base(f in filling_strategy(5, 4, 9)) {
        let lift = LiftedFilling::new(&f);
        prop_assert_eq!(lift.restrict(), f.clone());
        prop_assert_eq!(lift.total(), f.total());
    }

    #[test]
    fn json_documents_roundtrip(f in filling_strategy(5, 4, 9), dag in dag_strategy(6)) {
        let doc = FillingDoc::from_filling(&f);
        let text = serde_json::to_string(&doc).unwrap();
        let back: FillingDoc = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back.into_filling().unwrap(), f);

        let doc = DagDoc::from_dag(&dag);
        let text = serde_json::to_string(&doc).unwrap();
        let back: DagDoc = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back.into_dag().unwrap(), dag);
    }
}

#[test]
fn witness_tuples_realize_each_level() {
    let mut rng = SplitMix64::new(99);
    for _ in 0..40 {
        let dag = verify::random_dag(8, 9, false, &mut rng.split());
        let gk = ferrers_rsk::gk::gk_invariant_with_witnesses(&dag);
        for (ell, tuple) in gk.witnesses().unwrap().iter().enumerate() {
            assert_eq!(tuple.len(), ell + 1);
            assert_eq!(
                ferrers_rsk::gk::weight_of(&dag, tuple).unwrap(),
                gk.prefix_maxima()[ell + 1]
            );
        }
    }
}

#[test]
fn degree_nine_quivers_match_initials_and_finals() {
    for c in CoxeterElement::enumerate(9).unwrap() {
        let q = c.ar_quiver();
        let expected_sources: Vec<_> = c.initials().iter().map(|&i| (i, i + 1)).collect();
        let expected_sinks: Vec<_> = c.finals().iter().map(|&i| (i, i + 1)).collect();
        assert_eq!(q.sources(), expected_sources, "c = {}", c);
        assert_eq!(q.sinks(), expected_sinks, "c = {}", c);
        for m in 1..9 {
            let slice = q.slice(m).unwrap();
            let _ = slice.source();
            let _ = slice.sink();
        }
    }
}
