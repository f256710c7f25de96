use bott_kit::bott::{bott_cohomology, line_bundle_table, weyl_dimension, CohomologyResult};
use bott_kit::catalog::semisimple_types;
use bott_kit::oracle::{index_bound_sweep, SweepSpec};
use bott_kit::vanishing::ell_ab;
use bott_kit::{ABConfig, DynkinDiagram, Execution, NodeSet, ParabolicData, RootSystem, Weight};
use num_bigint::BigUint;
use proptest::prelude::*;

fn rs(s: &str) -> RootSystem {
    RootSystem::new(s.parse::<DynkinDiagram>().unwrap())
}

fn box_weights(rank: usize, lo: i64, hi: i64) -> impl Iterator<Item = Vec<i64>> {
    let width = (hi - lo + 1) as u64;
    (0..width.pow(rank as u32)).map(move |mut k| {
        let mut c = vec![0; rank];
        for x in c.iter_mut().rev() {
            *x = lo + (k % width) as i64;
            k /= width;
        }
        c
    })
}

#[test]
fn index_zero_iff_dominant_in_box() {
    for types in semisimple_types(4, |_| true) {
        let sys = RootSystem::from_types(&types).unwrap();
        let gamma = sys.gamma();
        for c in box_weights(sys.rank(), -4, 4) {
            let w = Weight::from_ints(&c);
            let shifted = &w + &gamma;
            if sys.is_singular(&shifted).unwrap().is_some() {
                continue;
            }
            let dominant = w.is_dominant();
            assert_eq!(sys.index(&shifted).unwrap() == 0, dominant, "{} {w}", sys.diagram());
            if dominant {
                let r = bott_cohomology(&sys, NodeSet::EMPTY, &w).unwrap();
                let expected = CohomologyResult::Concentrated {
                    degree: 0,
                    highest_weight: w.clone(),
                    dimension: weyl_dimension(&sys, &w).unwrap(),
                };
                assert_eq!(r, expected);
            }
        }
    }
}

#[test]
fn trivial_weight_has_dimension_one() {
    for types in semisimple_types(8, |_| true).into_iter().step_by(17) {
        let sys = RootSystem::from_types(&types).unwrap();
        let zero = Weight::zero(sys.rank());
        assert_eq!(weyl_dimension(&sys, &zero).unwrap(), BigUint::from(1u32));
        let full = sys.diagram().all_nodes();
        for sigma in [NodeSet::EMPTY, full] {
            let r = bott_cohomology(&sys, sigma, &zero).unwrap();
            assert_eq!(r.degree(), Some(0));
        }
    }
}

#[test]
fn e8_dimensions_are_exact() {
    let e8 = rs("E8");
    let w = Weight::from_ints(&[3, 1, 4, 1, 5, 9, 2, 6]);
    let dim = weyl_dimension(&e8, &w).unwrap();
    assert!(dim > BigUint::from(u64::MAX));
    let adj = Weight::from_ints(&[0, 0, 0, 0, 0, 0, 0, 1]);
    assert_eq!(weyl_dimension(&e8, &adj).unwrap(), BigUint::from(248u32));
    let w1 = Weight::from_ints(&[1, 0, 0, 0, 0, 0, 0, 0]);
    assert_eq!(weyl_dimension(&e8, &w1).unwrap(), BigUint::from(3875u32));
}

#[test]
fn pruning_leaves_l_unchanged() {
    for types in semisimple_types(6, |_| true) {
        let sys = RootSystem::from_types(&types).unwrap();
        let full = sys.diagram().all_nodes();
        for a in full.subsets() {
            for b in full.difference(a).subsets() {
                let cfg = ABConfig::new(a, b).unwrap();
                let pruned = cfg.pruned(&sys);
                assert!(pruned.b().is_subset(b));
                assert_eq!(ell_ab(&sys, &cfg).count, ell_ab(&sys, &pruned).count, "{} {cfg:?}", sys.diagram());
            }
        }
    }
}

#[test]
fn parabolic_structure() {
    for types in semisimple_types(6, |_| true) {
        let sys = RootSystem::from_types(&types).unwrap();
        let d = sys.diagram();
        for sigma in d.all_nodes().subsets() {
            let pd = ParabolicData::analyze(&sys, sigma).unwrap();
            let union = pd.components().iter().fold(NodeSet::EMPTY, |acc, c| {
                assert!(acc.is_disjoint(c.nodes));
                assert!(d.is_connected(c.nodes));
                acc.union(c.nodes)
            });
            assert_eq!(union, sigma);
            let levi_pos = sys.roots_supported_in(sigma).count();
            assert_eq!(pd.levi_roots().len(), 2 * levi_pos);
            assert_eq!(
                pd.levi_roots().len() + pd.nilradical_roots().len(),
                sys.num_positive_roots() + levi_pos
            );
            for alpha in pd.outside().iter() {
                let adj = pd.adjacent_components(alpha).unwrap();
                for c in &adj {
                    assert!(!d.neighbors(alpha).is_disjoint(c.nodes));
                }
                let touching = pd
                    .components()
                    .iter()
                    .filter(|c| !d.neighbors(alpha).is_disjoint(c.nodes))
                    .count();
                assert_eq!(adj.len(), touching);
                if !adj.is_empty() {
                    assert!(pd.ell_alpha(alpha).unwrap() >= 2);
                    assert!(pd.d_alpha(alpha).unwrap() >= 2);
                }
            }
        }
    }
}

#[test]
fn sequential_and_parallel_agree() {
    let a3 = rs("A3");
    let sigma: NodeSet = [0, 2].into_iter().collect();
    let seq = line_bundle_table(&a3, sigma, -6..=6, Execution::Sequential).unwrap();
    let par = line_bundle_table(&a3, sigma, -6..=6, Execution::Parallel).unwrap();
    assert_eq!(seq, par);

    let b3 = rs("B3");
    let cfg = ABConfig::for_parabolic(sigma, NodeSet::singleton(1), sigma).unwrap();
    let spec = SweepSpec::uniform(3, sigma, cfg, -6, 6);
    let seq = index_bound_sweep(&b3, &spec, Execution::Sequential).unwrap();
    let par = index_bound_sweep(&b3, &spec, Execution::Parallel).unwrap();
    assert_eq!(seq, par);
    assert!(seq.passed());
}

fn diagram_and_weight() -> impl Strategy<Value = (&'static str, Vec<i64>)> {
    prop_oneof![Just("A4"), Just("B4"), Just("C3"), Just("D5"), Just("G2"), Just("F4"), Just("E6"), Just("B2xG2")]
        .prop_flat_map(|s| {
            let rank = s.parse::<DynkinDiagram>().unwrap().rank();
            (Just(s), proptest::collection::vec(-8i64..=8, rank))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn bott_output_is_consistent((s, c) in diagram_and_weight()) {
        let sys = rs(s);
        let w = Weight::from_ints(&c);
        let gamma = sys.gamma();
        match bott_cohomology(&sys, NodeSet::EMPTY, &w).unwrap() {
            CohomologyResult::AllZero => {
                prop_assert!(sys.is_singular(&(&w + &gamma)).unwrap().is_some());
            }
            CohomologyResult::Concentrated { degree, highest_weight, dimension } => {
                let shifted = &w + &gamma;
                let image = &highest_weight + &gamma;
                prop_assert!(highest_weight.is_dominant());
                prop_assert_eq!(degree, sys.index(&shifted).unwrap());
                prop_assert_eq!(sys.inner(&image, &image).unwrap(), sys.inner(&shifted, &shifted).unwrap());
                prop_assert!(dimension >= BigUint::from(1u32));
                prop_assert_eq!(dimension, weyl_dimension(&sys, &highest_weight).unwrap());
            }
        }
    }
}
