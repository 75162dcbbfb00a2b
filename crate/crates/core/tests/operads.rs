use std::collections::BTreeMap;

use brace_dend::dendriform::{psi_brace_defect, SignConvention};
use brace_dend::exactlin::LinComb;
use brace_dend::operads::*;
use brace_dend::trees::labeled_rooted_trees;

fn labels(range: std::ops::RangeInclusive<usize>) -> Vec<String> {
    range.map(|i| i.to_string()).collect()
}

#[test]
fn brace_relations_hold_in_ape() {
    for n in 1..=3 {
        for m in 1..=4 - n {
            let d = brace_relation_defect(n, m).unwrap();
            assert!(d.is_zero(), "defect at ({n},{m}): {d}");
        }
    }
}

#[test]
fn psi_kills_brace_relations_only_with_standard_sign() {
    let mut negated_survives = false;
    for n in 1..=3 {
        for m in 1..=4 - n {
            assert!(psi_brace_defect(n, m, SignConvention::Standard).unwrap().is_zero());
            negated_survives |= !psi_brace_defect(n, m, SignConvention::Negated).unwrap().is_zero();
        }
    }
    assert!(negated_survives);
}

#[test]
fn quotient_is_zinbiel_sized() {
    let brace = ideal_closure(&brace_generators(4).unwrap(), 4, ClosureMode::TwoSided).unwrap();
    let prelie = ideal_closure(&prelie_generators(4).unwrap(), 4, ClosureMode::TwoSided).unwrap();
    let left = ideal_closure(&brace_generators(4).unwrap(), 4, ClosureMode::LeftIdeal).unwrap();
    let expect = BTreeMap::from([(1, 1), (2, 2), (3, 6), (4, 24)]);
    assert_eq!(quotient_dims(&brace), expect);
    assert_eq!(quotient_dims(&prelie), expect);
    assert_eq!(quotient_dims(&left), expect);
    for n in 2..=4 {
        for b in prelie.span(n).basis() {
            assert!(brace.span(n).contains(&b).unwrap());
        }
    }
}

#[test]
fn phi_intertwines_small() {
    for t in labeled_rooted_trees(&labels(1..=2)) {
        for s in labeled_rooted_trees(&labels(3..=4)) {
            for at in ["1", "2"] {
                let (t, s) = (LinComb::basis(t.clone()), LinComb::basis(s.clone()));
                let lhs = phi(&compose_prelie(&t, at, &s).unwrap());
                let rhs = compose_ape(&phi(&t), at, &phi(&s)).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}
