mod support;

use std::collections::BTreeSet;
use std::sync::OnceLock;

use orthoimp::arrows::{arrow_table, ArrowKind};
use orthoimp::document::{parse, serialize};
use orthoimp::enumerate::enumerate_structures;
use orthoimp::ortho::{Class, OrthoPoset};
use orthoimp::verify::{
    adjoint_exists, adjoint_violation, check_backward_op, check_forward_op, check_mpo, check_op,
};
use proptest::prelude::*;
use support::{relabeled, Naive};

fn structures() -> &'static [OrthoPoset] {
    static ALL: OnceLock<Vec<OrthoPoset>> = OnceLock::new();
    ALL.get_or_init(|| enumerate_structures(8, |_| true).collect())
}

fn orthogonal() -> impl Iterator<Item = &'static OrthoPoset> {
    structures().iter().filter(|q| q.classify().holds(Class::Orthogonal))
}

#[test]
fn arrow_tables_match_oracle() {
    for q in orthogonal() {
        let n = Naive::of(q);
        for kind in ArrowKind::ALL {
            let t = arrow_table(q, kind).unwrap();
            for ((x, y), v) in t.iter() {
                let got: BTreeSet<usize> = v.iter().collect();
                assert_eq!(Some(got), n.imp(kind, x, y), "{kind} ({x}, {y})");
            }
        }
    }
}

#[test]
fn classical_arrow_needs_no_joins() {
    for q in structures() {
        let n = Naive::of(q);
        let t = arrow_table(q, ArrowKind::C).unwrap();
        for ((x, y), v) in t.iter() {
            assert_eq!(Some(v.iter().collect()), n.imp(ArrowKind::C, x, y));
        }
    }
}

#[test]
fn classes_match_oracle() {
    for q in structures() {
        let n = Naive::of(q);
        let c = q.classify();
        assert_eq!(c.holds(Class::Lattice), n.lattice());
        assert_eq!(c.holds(Class::Orthogonal), n.orthogonal_poset());
        assert_eq!(c.holds(Class::Orthocomplemented), n.orthocomplemented());
        assert_eq!(c.holds(Class::Paraorthomodular), n.paraorthomodular());
        assert_eq!(c.holds(Class::Orthomodular), n.orthomodular());
        assert_eq!(c.holds(Class::BooleanAlgebra), n.boolean_algebra());
    }
}

#[test]
fn failing_checks_replay() {
    for q in orthogonal() {
        for kind in ArrowKind::ALL {
            for r in [
                check_forward_op(q, kind).unwrap(),
                check_backward_op(q, kind).unwrap(),
                check_op(q, kind).unwrap(),
                check_mpo(q, kind).unwrap(),
            ] {
                assert_eq!(r.holds, r.witness.is_none());
                if !r.holds {
                    assert!(r.replay(q).unwrap(), "{r}");
                }
            }
        }
    }
}

#[test]
fn adjoint_decision_matches_brute_force() {
    for q in orthogonal().filter(|q| q.len() <= 6) {
        let n = Naive::of(q);
        for kind in ArrowKind::ALL {
            let a = adjoint_exists(q, kind).unwrap();
            assert_eq!(a.result.holds, n.adjoint_exists(kind), "{kind}");
        }
    }
}

#[test]
fn synthesized_adjoints_satisfy_the_adjunction() {
    for q in orthogonal() {
        for kind in ArrowKind::ALL {
            let a = adjoint_exists(q, kind).unwrap();
            if let Some(op) = &a.operator {
                assert_eq!(adjoint_violation(q, kind, op).unwrap(), None, "{kind}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn document_round_trip(
        i in 0usize..10_000,
        shuffled in Just((0..8).collect::<Vec<usize>>()).prop_shuffle(),
    ) {
        let all = structures();
        let base = &all[i % all.len()];
        let perm: Vec<usize> = shuffled.into_iter().filter(|&k| k < base.len()).collect();
        let q = relabeled(base, &perm);
        let text = serialize(&q, "p");
        let (name, back) = parse(&text).unwrap();
        prop_assert_eq!(name, "p");
        prop_assert_eq!(back.involution(), q.involution());
        prop_assert_eq!(&back, &q);
        prop_assert_eq!(serialize(&back, "p"), text);
    }

    #[test]
    fn involution_is_antitone_and_cones_flip(i in 0usize..10_000) {
        let all = structures();
        let q = &all[i % all.len()];
        for x in 0..q.len() {
            prop_assert_eq!(q.neg(q.neg(x)), x);
            for y in 0..q.len() {
                if q.leq(x, y) {
                    prop_assert!(q.leq(q.neg(y), q.neg(x)));
                }
                if let Some(j) = q.join(x, y) {
                    prop_assert_eq!(q.meet(q.neg(x), q.neg(y)), Some(q.neg(j)));
                }
            }
        }
    }
}
