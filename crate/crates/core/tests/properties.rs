//! Randomised structural properties that need no table data.

use proptest::prelude::*;
use theta_core::bott::{bott, BottResult, FlagSpace};
use theta_core::bundles::{peel, reassemble, Multiset};
use theta_core::{build_root_system, DiagramType, WeylFrame};

fn dominant_labels(rank: usize, max: i64) -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(0..=max, rank)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    /// Freudenthal multiplicities add up to the Weyl dimension.
    #[test]
    fn character_has_weyl_dimension(labels in dominant_labels(4, 1)) {
        let rs = build_root_system(DiagramType::D(4)).unwrap();
        let frame = WeylFrame::dynkin(&rs.cartan, &[0, 1, 2, 3]);
        let total: i64 = frame.character(&labels).values().sum();
        prop_assert_eq!(num_bigint::BigInt::from(total), frame.weyl_dimension(&labels));
    }

    /// Bott leaves a dominant weight in degree 0.
    #[test]
    fn bott_fixes_dominant(labels in dominant_labels(7, 3), k in 0usize..7) {
        let rs = build_root_system(DiagramType::E7).unwrap();
        let frame = WeylFrame::dynkin(&rs.cartan, &[0, 1, 2, 3, 4, 5, 6]);
        let levi: Vec<usize> = (0..7).filter(|&i| i != k).collect();
        let fs = FlagSpace::new(frame, &levi, "E7/P").unwrap();
        prop_assert_eq!(
            bott(&fs, &labels).unwrap(),
            BottResult::Cohomology { degree: 0, highest: labels.clone() }
        );
    }

    /// Peeling a sum of characters recovers the summands.
    #[test]
    fn peel_then_reassemble(
        parts in proptest::collection::vec((dominant_labels(4, 1), 1i64..3), 1..4),
        diagram in prop_oneof![Just(DiagramType::A(4)), Just(DiagramType::D(4))],
    ) {
        let rs = build_root_system(diagram).unwrap();
        let levi = WeylFrame::dynkin(&rs.cartan, &[0, 1, 2, 3]);
        let m: Multiset = reassemble(&levi, &parts);
        let back = reassemble(&levi, &peel(&levi, &m).unwrap());
        prop_assert_eq!(back, m);
    }
}
