mod support;

use std::collections::BTreeSet;

use orthoimp::arrows::{arrow_table, imp, lift, quantum_join, quantum_meet, ArrowKind};
use orthoimp::document::{parse, serialize};
use orthoimp::error::OrderError;
use orthoimp::fixtures::{registry, NAMES};
use orthoimp::ortho::{Class, OrthoPoset};
use orthoimp::suite::{theorem_suite, Verdict};
use orthoimp::verify::{adjoint_exists, adjoint_violation, check_backward_op, check_forward_op, check_mpo, check_op};
use orthoimp::ElementSet;
use support::{fix, idx, Naive};

fn values(q: &OrthoPoset, kind: ArrowKind, x: &str, y: &str) -> Vec<String> {
    let v = imp(q, kind, idx(q, x), idx(q, y)).unwrap().values;
    v.iter().map(|e| q.name(e).to_string()).collect()
}

fn holds(q: &OrthoPoset, c: Class) -> bool {
    q.classify().holds(c)
}

#[test]
fn classification_matrix() {
    let f1 = fix("fig1");
    assert!(holds(&f1, Class::Lattice));
    assert!(holds(&f1, Class::Orthogonal));
    assert!(!holds(&f1, Class::Orthocomplemented));
    assert!(holds(&f1, Class::Paraorthomodular));
    assert!(!holds(&f1, Class::Orthomodular));

    let f2 = fix("fig2");
    assert!(holds(&f2, Class::Lattice));
    assert!(holds(&f2, Class::Orthocomplemented));
    assert!(!holds(&f2, Class::Paraorthomodular));
    assert!(!holds(&f2, Class::Orthomodular));

    let f3 = fix("fig3");
    assert!(holds(&f3, Class::BooleanPoset));
    assert!(!holds(&f3, Class::Orthogonal));

    let f4 = fix("fig4");
    assert!(holds(&f4, Class::Orthomodular));
    assert!(!holds(&f4, Class::Lattice));
    assert_eq!(f4.len(), 18);
}

#[test]
fn classification_agrees_with_naive_predicates() {
    for f in registry().unwrap() {
        let q = &f.structure;
        let n = Naive::of(q);
        assert_eq!(holds(q, Class::Lattice), n.lattice(), "{}", f.name);
        assert_eq!(holds(q, Class::Orthogonal), n.orthogonal_poset(), "{}", f.name);
        assert_eq!(holds(q, Class::Orthocomplemented), n.orthocomplemented(), "{}", f.name);
        assert_eq!(holds(q, Class::Orthomodular), n.orthomodular(), "{}", f.name);
        assert_eq!(holds(q, Class::Paraorthomodular), n.paraorthomodular(), "{}", f.name);
        assert_eq!(holds(q, Class::BooleanAlgebra), n.boolean_algebra(), "{}", f.name);
    }
}

#[test]
fn fig3_orthogonal_pair_without_join() {
    let q = fix("fig3");
    let (a, c) = (idx(&q, "a"), idx(&q, "c"));
    assert!(q.orthogonal(a, c));
    assert_eq!(q.join(a, c), None);
    let ub = q.poset().minimal(q.poset().upper_cone2(a, c));
    assert_eq!(q.show(ub), "{b', d'}");
}

#[test]
fn fixture_files_match_registry() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures");
    for name in NAMES {
        let text = std::fs::read_to_string(format!("{dir}/{name}.json")).unwrap();
        let (doc_name, q) = parse(&text).unwrap();
        assert_eq!(doc_name, name);
        assert_eq!(q, fix(name), "{name}");
        assert_eq!(q.involution(), fix(name).involution());
        assert_eq!(serialize(&q, name), text, "{name}");
    }
}

#[test]
fn hexagon_backward_witnesses() {
    let q = fix("fig2");
    assert_eq!(values(&q, ArrowKind::C, "b'", "a"), ["1"]);
    assert_eq!(values(&q, ArrowKind::K, "b'", "a"), ["1"]);
    assert_eq!(values(&q, ArrowKind::N, "a'", "b"), ["1"]);
    assert_eq!(values(&q, ArrowKind::S, "b'", "a"), ["1"]);
    assert_eq!(values(&q, ArrowKind::D, "a'", "b"), ["1"]);
    assert!(!q.leq(idx(&q, "b'"), idx(&q, "a")));
    assert!(!q.leq(idx(&q, "a'"), idx(&q, "b")));
}

#[test]
fn lifting_and_connectives() {
    let q = fix("fig2");
    let ab: ElementSet = [idx(&q, "a"), idx(&q, "b")].into_iter().collect();
    let zero = ElementSet::singleton(q.bottom());
    assert_eq!(q.show(lift(&q, ArrowKind::S, ab, zero).unwrap()), "{b', a'}");
    assert!(lift(&q, ArrowKind::C, ElementSet::EMPTY, ab).unwrap().is_empty());
    for x in 0..q.len() {
        let m = quantum_meet(&q, ArrowKind::S, x, q.top()).unwrap();
        assert_eq!(m.values, ElementSet::singleton(x));
    }

    let b4 = fix("b4");
    let (a, na) = (idx(&b4, "a"), idx(&b4, "a'"));
    let j = quantum_join(&b4, ArrowKind::C, a, na).unwrap();
    assert_eq!(j.values, ElementSet::singleton(b4.top()));
    let m = quantum_meet(&b4, ArrowKind::C, a, a).unwrap();
    assert_eq!(m.values, ElementSet::singleton(a));
}

#[test]
fn chain_tables() {
    let q = fix("chain2");
    for kind in ArrowKind::ALL {
        let t = arrow_table(&q, kind).unwrap();
        let got: Vec<String> = t.iter().map(|(_, v)| q.show(v)).collect();
        assert_eq!(got, ["{1}", "{1}", "{0}", "{1}"], "{kind}");
    }
}

#[test]
fn non_orthogonal_input_is_loud() {
    let q = fix("fig3");
    for kind in ArrowKind::QUANTUM {
        assert!(matches!(arrow_table(&q, kind), Err(OrderError::MissingJoin { .. })));
    }
    assert!(arrow_table(&q, ArrowKind::C).is_ok());
}

#[test]
fn arrows_agree_with_naive_formulas() {
    for f in registry().unwrap() {
        let q = &f.structure;
        let n = Naive::of(q);
        for kind in ArrowKind::ALL {
            for x in 0..q.len() {
                for y in 0..q.len() {
                    let want = n.imp(kind, x, y);
                    let got = imp(q, kind, x, y).ok().map(|v| v.values.iter().collect::<BTreeSet<_>>());
                    assert_eq!(got, want, "{} {kind} ({x}, {y})", f.name);
                }
            }
        }
    }
}

#[test]
fn multi_valued_on_fig4() {
    let q = fix("fig4");
    assert_eq!(values(&q, ArrowKind::K, "a", "b"), ["d'", "f'"]);
    let t = arrow_table(&q, ArrowKind::S).unwrap();
    assert!(t.iter().any(|(_, v)| v.len() >= 2));
}

fn lattice_value(n: &Naive, kind: ArrowKind, x: usize, y: usize) -> usize {
    let (j, m) = (|a, b| n.join(a, b).unwrap(), |a, b| n.meet(a, b).unwrap());
    let (nx, ny) = (n.inv[x], n.inv[y]);
    match kind {
        ArrowKind::C => j(nx, y),
        ArrowKind::K => j(j(m(nx, y), m(nx, ny)), m(x, j(nx, y))),
        ArrowKind::N => j(j(m(y, nx), m(y, x)), m(ny, j(y, nx))),
        ArrowKind::S => j(nx, m(x, y)),
        ArrowKind::D => j(y, m(nx, ny)),
    }
}

#[test]
fn lattice_degeneration() {
    for name in ["chain2", "b4", "b8", "mo2", "fig1", "fig2"] {
        let q = fix(name);
        let n = Naive::of(&q);
        for kind in ArrowKind::ALL {
            for x in 0..q.len() {
                for y in 0..q.len() {
                    let v = imp(&q, kind, x, y).unwrap().values;
                    assert_eq!(v, ElementSet::singleton(lattice_value(&n, kind, x, y)), "{name} {kind}");
                }
            }
        }
    }
}

#[test]
fn boolean_coincidence() {
    for name in ["chain2", "b4", "b8"] {
        let q = fix(name);
        for x in 0..q.len() {
            for y in 0..q.len() {
                let expect = ElementSet::singleton(q.join(q.neg(x), y).unwrap());
                for kind in ArrowKind::ALL {
                    assert_eq!(imp(&q, kind, x, y).unwrap().values, expect, "{name} {kind}");
                }
            }
        }
    }
}

#[test]
fn compatible_pairs_coincide() {
    for name in ["chain2", "b4", "b8", "mo2"] {
        let q = fix(name);
        let mut compatible = 0;
        for a in 0..q.len() {
            for b in 0..q.len() {
                if !q.compatible(a, b).holds {
                    continue;
                }
                compatible += 1;
                let c = imp(&q, ArrowKind::C, a, b).unwrap().values;
                for kind in ArrowKind::QUANTUM {
                    assert_eq!(imp(&q, kind, a, b).unwrap().values, c, "{name} {kind}");
                }
            }
        }
        assert!(compatible > 0);
    }
    let mo2 = fix("mo2");
    assert!(!mo2.compatible(idx(&mo2, "a"), idx(&mo2, "b")).holds);
}

#[test]
fn order_criterion_on_orthomodular_lattices() {
    for name in ["chain2", "b4", "b8", "mo2"] {
        let q = fix(name);
        for kind in ArrowKind::QUANTUM {
            assert!(check_op(&q, kind).unwrap().holds, "{name} {kind}");
        }
    }
    for name in ["chain2", "b4", "b8"] {
        assert!(check_op(&fix(name), ArrowKind::C).unwrap().holds);
    }
}

#[test]
fn classical_order_criterion_fails_on_mo2() {
    let q = fix("mo2");
    let (a, b) = (idx(&q, "a"), idx(&q, "b"));
    assert_eq!(values(&q, ArrowKind::C, "a", "b"), ["1"]);
    assert!(!q.leq(a, b));
    let r = check_op(&q, ArrowKind::C).unwrap();
    assert!(!r.holds);
    assert!(r.replay(&q).unwrap());
}

#[test]
fn fig1_forward_failure() {
    let q = fix("fig1");
    let r = check_forward_op(&q, ArrowKind::K).unwrap();
    assert!(!r.holds);
    // first in index order is (0, a); (a, a) fails as well
    assert_eq!(r.witness, Some(vec![0, idx(&q, "a")]));
    assert_eq!(values(&q, ArrowKind::K, "a", "a"), ["a'"]);
    assert!(check_backward_op(&q, ArrowKind::K).unwrap().holds);
}

#[test]
fn checks_on_figures() {
    let f2 = fix("fig2");
    let r = check_backward_op(&f2, ArrowKind::K).unwrap();
    assert_eq!(r.witness, Some(vec![idx(&f2, "b'"), idx(&f2, "a")]));
    assert!(check_forward_op(&f2, ArrowKind::D).unwrap().holds);
    assert!(!check_op(&f2, ArrowKind::S).unwrap().holds);
    let m = check_mpo(&f2, ArrowKind::N).unwrap();
    assert!(!m.holds && m.replay(&f2).unwrap());

    let f4 = fix("fig4");
    assert!(check_op(&f4, ArrowKind::K).unwrap().holds);
    assert!(check_mpo(&f4, ArrowKind::D).unwrap().holds);
    assert!(check_op(&fix("b4"), ArrowKind::C).unwrap().holds);
    assert!(check_mpo(&fix("b4"), ArrowKind::C).unwrap().holds);
}

#[test]
fn adjoints_on_fixtures() {
    let b4 = fix("b4");
    let a = adjoint_exists(&b4, ArrowKind::C).unwrap();
    let op = a.operator.unwrap();
    for x in 0..4 {
        for y in 0..4 {
            assert_eq!(op.get(x, y), ElementSet::singleton(b4.meet(x, y).unwrap()));
        }
    }
    assert_eq!(adjoint_violation(&b4, ArrowKind::C, &op).unwrap(), None);

    let f2 = fix("fig2");
    assert!(!adjoint_exists(&f2, ArrowKind::C).unwrap().result.holds);
    assert!(!Naive::of(&f2).adjoint_exists(ArrowKind::C));

    let c2 = fix("chain2");
    for kind in ArrowKind::ALL {
        assert!(adjoint_exists(&c2, kind).unwrap().result.holds);
    }
}

fn both(q: &OrthoPoset, id: &str) -> (Option<bool>, Option<bool>) {
    let s = theorem_suite(q);
    let t = s.iter().find(|t| t.id == id).unwrap();
    (t.left, t.right)
}

#[test]
fn suites_on_figures() {
    for name in ["chain2", "b4", "b8", "mo2", "fig1", "fig2", "fig4"] {
        let s = theorem_suite(&fix(name));
        let bad: Vec<_> = s.iter().filter(|t| t.verdict == Verdict::Discrepant).collect();
        assert!(bad.is_empty(), "{name}: {bad:#?}");
    }
    let (f1, f2, f4) = (fix("fig1"), fix("fig2"), fix("fig4"));
    assert_eq!(both(&f4, "e:K"), (Some(true), Some(true)));
    assert_eq!(both(&f2, "e:S"), (Some(false), Some(false)));
    assert_eq!(both(&f2, "a:C"), (Some(true), Some(true)));
    assert_eq!(both(&f1, "a:N"), (Some(false), Some(false)));
    assert_eq!(both(&f1, "b:D"), (Some(true), Some(true)));
    let s3 = theorem_suite(&fix("fig3"));
    assert!(s3.iter().all(|t| matches!(t.verdict, Verdict::Skipped(_))));
}
