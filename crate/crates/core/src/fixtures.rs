//! Named reference structures with the classification each must satisfy.
//!
//! Loading a fixture runs its expectations; a mismatch is an error naming
//! the fixture and the class, so a mistranscribed diagram fails fast.

use thiserror::Error;

use crate::order::{Element, Poset};
use crate::ortho::{attach_involution, Class, OrthoPoset};

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error("unknown fixture `{0}`")]
    Unknown(String),
    #[error("fixture {fixture}: expected {class} to be {expected}")]
    Gate {
        fixture: &'static str,
        class: String,
        expected: bool,
    },
    #[error("fixture {fixture}: {source}")]
    Build {
        fixture: &'static str,
        source: crate::error::OrderError,
    },
}

pub const NAMES: [&str; 8] = ["chain2", "b4", "b8", "mo2", "fig1", "fig2", "fig3", "fig4"];

pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    pub structure: OrthoPoset,
    pub expectations: Vec<(Class, bool)>,
}

struct Blueprint {
    name: &'static str,
    description: &'static str,
    elements: &'static [&'static str],
    covers: &'static [(&'static str, &'static str)],
    pairs: &'static [(&'static str, &'static str)],
    expectations: &'static [(Class, bool)],
}

const CHAIN2: Blueprint = Blueprint {
    name: "chain2",
    description: "two-element Boolean algebra",
    elements: &["0", "1"],
    covers: &[("0", "1")],
    pairs: &[("0", "1")],
    expectations: &[(Class::BooleanAlgebra, true), (Class::Orthomodular, true)],
};

const B4: Blueprint = Blueprint {
    name: "b4",
    description: "four-element Boolean algebra",
    elements: &["0", "a", "a'", "1"],
    covers: &[("0", "a"), ("0", "a'"), ("a", "1"), ("a'", "1")],
    pairs: &[("0", "1"), ("a", "a'")],
    expectations: &[(Class::BooleanAlgebra, true), (Class::Orthomodular, true)],
};

const B8: Blueprint = Blueprint {
    name: "b8",
    description: "eight-element Boolean algebra",
    elements: &["0", "a", "b", "c", "a'", "b'", "c'", "1"],
    covers: &[
        ("0", "a"),
        ("0", "b"),
        ("0", "c"),
        ("a", "b'"),
        ("a", "c'"),
        ("b", "a'"),
        ("b", "c'"),
        ("c", "a'"),
        ("c", "b'"),
        ("a'", "1"),
        ("b'", "1"),
        ("c'", "1"),
    ],
    pairs: &[("0", "1"), ("a", "a'"), ("b", "b'"), ("c", "c'")],
    expectations: &[(Class::BooleanAlgebra, true)],
};

const MO2: Blueprint = Blueprint {
    name: "mo2",
    description: "orthomodular lattice with two blocks",
    elements: &["0", "a", "a'", "b", "b'", "1"],
    covers: &[
        ("0", "a"),
        ("0", "a'"),
        ("0", "b"),
        ("0", "b'"),
        ("a", "1"),
        ("a'", "1"),
        ("b", "1"),
        ("b'", "1"),
    ],
    pairs: &[("0", "1"), ("a", "a'"), ("b", "b'")],
    expectations: &[
        (Class::Lattice, true),
        (Class::Orthomodular, true),
        (Class::Distributive, false),
        (Class::BooleanAlgebra, false),
    ],
};

const FIG1: Blueprint = Blueprint {
    name: "fig1",
    description: "non-orthocomplemented paraorthomodular lattice",
    elements: &["0", "a", "b", "a'", "b'", "1"],
    covers: &[("0", "a"), ("0", "b"), ("a", "a'"), ("b", "b'"), ("a'", "1"), ("b'", "1")],
    pairs: &[("0", "1"), ("a", "a'"), ("b", "b'")],
    expectations: &[
        (Class::Lattice, true),
        (Class::Orthogonal, true),
        (Class::Orthocomplemented, false),
        (Class::Paraorthomodular, true),
        (Class::Orthomodular, false),
    ],
};

const FIG2: Blueprint = Blueprint {
    name: "fig2",
    description: "orthocomplemented non-orthomodular lattice (hexagon)",
    elements: &["0", "a", "b", "b'", "a'", "1"],
    covers: &[("0", "a"), ("0", "b"), ("a", "b'"), ("b", "a'"), ("b'", "1"), ("a'", "1")],
    pairs: &[("0", "1"), ("a", "a'"), ("b", "b'")],
    expectations: &[
        (Class::Lattice, true),
        (Class::Orthocomplemented, true),
        (Class::Paraorthomodular, false),
        (Class::Orthomodular, false),
    ],
};

const FIG3: Blueprint = Blueprint {
    name: "fig3",
    description: "non-orthogonal Boolean poset",
    elements: &["0", "a", "b", "c", "d", "e", "e'", "a'", "b'", "c'", "d'", "1"],
    covers: &[
        ("0", "a"),
        ("0", "b"),
        ("0", "c"),
        ("0", "d"),
        ("a", "e"),
        ("a", "b'"),
        ("b", "e"),
        ("b", "a'"),
        ("c", "d'"),
        ("c", "e'"),
        ("d", "e'"),
        ("d", "c'"),
        ("e", "d'"),
        ("e", "c'"),
        ("e'", "b'"),
        ("e'", "a'"),
        ("a'", "1"),
        ("b'", "1"),
        ("c'", "1"),
        ("d'", "1"),
    ],
    pairs: &[("0", "1"), ("a", "a'"), ("b", "b'"), ("c", "c'"), ("d", "d'"), ("e", "e'")],
    expectations: &[(Class::BooleanPoset, true), (Class::Orthogonal, false)],
};

const FIG4: Blueprint = Blueprint {
    name: "fig4",
    description: "18-element orthomodular poset that is not a lattice",
    elements: &[
        "0", "a", "b", "c", "d", "e", "f", "g", "h", "a'", "b'", "c'", "d'", "e'", "f'", "g'", "h'",
        "1",
    ],
    covers: &[
        ("0", "a"),
        ("0", "b"),
        ("0", "c"),
        ("0", "d"),
        ("0", "e"),
        ("0", "f"),
        ("0", "g"),
        ("0", "h"),
        ("a", "h'"),
        ("a", "g'"),
        ("a", "f'"),
        ("a", "d'"),
        ("b", "h'"),
        ("b", "g'"),
        ("b", "e'"),
        ("b", "c'"),
        ("c", "h'"),
        ("c", "b'"),
        ("d", "h'"),
        ("d", "a'"),
        ("e", "g'"),
        ("e", "b'"),
        ("f", "g'"),
        ("f", "a'"),
        ("g", "f'"),
        ("g", "e'"),
        ("g", "b'"),
        ("g", "a'"),
        ("h", "d'"),
        ("h", "c'"),
        ("h", "b'"),
        ("h", "a'"),
        ("a'", "1"),
        ("b'", "1"),
        ("c'", "1"),
        ("d'", "1"),
        ("e'", "1"),
        ("f'", "1"),
        ("g'", "1"),
        ("h'", "1"),
    ],
    pairs: &[
        ("0", "1"),
        ("a", "a'"),
        ("b", "b'"),
        ("c", "c'"),
        ("d", "d'"),
        ("e", "e'"),
        ("f", "f'"),
        ("g", "g'"),
        ("h", "h'"),
    ],
    expectations: &[(Class::Orthomodular, true), (Class::Lattice, false)],
};

const BLUEPRINTS: [&Blueprint; 8] = [&CHAIN2, &B4, &B8, &MO2, &FIG1, &FIG2, &FIG3, &FIG4];

fn build(blueprint: &Blueprint) -> Result<OrthoPoset, FixtureError> {
    let wrap = |source| FixtureError::Build {
        fixture: blueprint.name,
        source,
    };
    let idx = |s: &str| -> Element {
        blueprint.elements
            .iter()
            .position(|&e| e == s)
            .unwrap_or_else(|| panic!("fixture {} names unknown element {s}", blueprint.name))
    };
    let covers: Vec<(Element, Element)> = blueprint.covers.iter().map(|&(a, b)| (idx(a), idx(b))).collect();
    let names = blueprint.elements.iter().map(|s| s.to_string()).collect();
    let poset = Poset::from_covers(names, &covers).map_err(wrap)?;
    let mut perm = vec![usize::MAX; blueprint.elements.len()];
    for &(a, b) in blueprint.pairs {
        perm[idx(a)] = idx(b);
        perm[idx(b)] = idx(a);
    }
    attach_involution(poset, perm).map_err(wrap)
}

fn gate(blueprint: &Blueprint, q: &OrthoPoset) -> Result<(), FixtureError> {
    let fail = |class: String, expected: bool| FixtureError::Gate {
        fixture: blueprint.name,
        class,
        expected,
    };
    for &(class, expected) in blueprint.expectations {
        if q.classify().holds(class) != expected {
            return Err(fail(class.to_string(), expected));
        }
    }
    match blueprint.name {
        "fig3" => {
            let (a, c) = (q.poset().index_of("a"), q.poset().index_of("c"));
            let (a, c) = (a.expect("fig3 has a"), c.expect("fig3 has c"));
            if !q.orthogonal(a, c) {
                return Err(fail("a orthogonal to c".into(), true));
            }
            if q.join(a, c).is_some() {
                return Err(fail("join a v c exists".into(), false));
            }
        }
        "fig4" if q.len() != 18 => return Err(fail("18 elements".into(), true)),
        _ => {}
    }
    Ok(())
}

/// Load one fixture and check its expectations.
pub fn fixture(name: &str) -> Result<Fixture, FixtureError> {
    let blueprint = BLUEPRINTS
        .iter()
        .find(|s| s.name == name)
        .ok_or_else(|| FixtureError::Unknown(name.to_string()))?;
    let structure = build(blueprint)?;
    gate(blueprint, &structure)?;
    Ok(Fixture {
        name: blueprint.name,
        description: blueprint.description,
        structure,
        expectations: blueprint.expectations.to_vec(),
    })
}

/// Every fixture, in registry order.
pub fn registry() -> Result<Vec<Fixture>, FixtureError> {
    NAMES.iter().map(|n| fixture(n)).collect()
}
