//! Antitone involutions and the structure classes built on them.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{OrderError, Result};
use crate::order::{Element, Poset};
use crate::report::Report;
use crate::set::ElementSet;

/// A bounded poset with an antitone involution `'`.
///
/// The classification is computed lazily and at most once per value.
#[derive(Clone, Debug)]
pub struct OrthoPoset {
    poset: Poset,
    inv: Vec<Element>,
    class: OnceLock<Classification>,
}

impl PartialEq for OrthoPoset {
    fn eq(&self, other: &Self) -> bool {
        self.poset == other.poset && self.inv == other.inv
    }
}

impl Eq for OrthoPoset {}

/// Validate `perm` as an antitone involution of `poset`.
pub fn attach_involution(poset: Poset, perm: Vec<Element>) -> Result<OrthoPoset> {
    let n = poset.len();
    if perm.len() != n {
        return Err(OrderError::NotAPermutation(format!(
            "expected {n} images, got {}",
            perm.len()
        )));
    }
    let mut seen = ElementSet::EMPTY;
    for &y in &perm {
        if y >= n {
            return Err(OrderError::IndexOutOfRange { index: y, n });
        }
        if seen.contains(y) {
            return Err(OrderError::NotAPermutation(format!("{y} is hit twice")));
        }
        seen.insert(y);
    }
    for x in 0..n {
        if perm[perm[x]] != x {
            return Err(OrderError::NotInvolutive {
                x,
                image: perm[perm[x]],
            });
        }
    }
    for x in 0..n {
        for y in poset.up_set(x) {
            if !poset.leq(perm[y], perm[x]) {
                return Err(OrderError::NotAntitone { x, y });
            }
        }
    }
    debug_assert_eq!(perm[poset.bottom()], poset.top());
    Ok(OrthoPoset {
        poset,
        inv: perm,
        class: OnceLock::new(),
    })
}

impl OrthoPoset {
    pub fn new(poset: Poset, perm: Vec<Element>) -> Result<Self> {
        attach_involution(poset, perm)
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn bottom(&self) -> Element {
        self.poset.bottom()
    }

    pub fn top(&self) -> Element {
        self.poset.top()
    }

    pub fn name(&self, x: Element) -> &str {
        self.poset.name(x)
    }

    pub fn leq(&self, x: Element, y: Element) -> bool {
        self.poset.leq(x, y)
    }

    pub fn join(&self, x: Element, y: Element) -> Option<Element> {
        self.poset.join(x, y)
    }

    pub fn meet(&self, x: Element, y: Element) -> Option<Element> {
        self.poset.meet(x, y)
    }

    /// `x'`.
    pub fn neg(&self, x: Element) -> Element {
        self.inv[x]
    }

    pub fn involution(&self) -> &[Element] {
        &self.inv
    }

    /// Elementwise image of a set under `'`.
    pub fn neg_set(&self, a: ElementSet) -> ElementSet {
        a.iter().map(|x| self.inv[x]).collect()
    }

    /// Render a set with display names, e.g. `{a, b'}`.
    pub fn show(&self, a: ElementSet) -> String {
        let names: Vec<&str> = a.iter().map(|x| self.name(x)).collect();
        format!("{{{}}}", names.join(", "))
    }

    /// `x ⊥ y`, i.e. `x <= y'`.
    pub fn orthogonal(&self, x: Element, y: Element) -> bool {
        let forward = self.leq(x, self.neg(y));
        debug_assert_eq!(forward, self.leq(y, self.neg(x)));
        forward
    }

    /// Every orthogonal pair has a join.
    pub fn is_orthogonal_poset(&self) -> Report {
        let n = self.len();
        for x in 0..n {
            for y in 0..n {
                if self.orthogonal(x, y) && self.join(x, y).is_none() {
                    return Report::fail(vec![x, y]);
                }
            }
        }
        Report::pass()
    }

    /// `x ∨ x' = 1` for every `x`.
    pub fn is_orthocomplemented(&self) -> Report {
        let bad = (0..self.len()).find(|&x| self.join(x, self.neg(x)) != Some(self.top()));
        Report::from_witness(bad.map(|x| vec![x]))
    }

    /// Condition (P), with (P') evaluated alongside as facets `P` and `P'`.
    /// A hypothesis mentioning an absent meet or join never fires.
    pub fn is_paraorthomodular(&self) -> Report {
        let n = self.len();
        let mut p_witness = None;
        let mut p_prime_holds = true;
        for x in 0..n {
            for y in self.poset.up_set(x) {
                if x == y {
                    continue;
                }
                if p_witness.is_none() && self.meet(self.neg(x), y) == Some(self.bottom()) {
                    p_witness = Some(vec![x, y]);
                }
                if self.join(x, self.neg(y)) == Some(self.top()) {
                    p_prime_holds = false;
                }
            }
        }
        let p_holds = p_witness.is_none();
        Report::from_witness(p_witness)
            .with_facet("P", p_holds)
            .with_facet("P'", p_prime_holds)
    }

    /// Orthogonal, and `x <= y` implies `x ∨ (y ∧ x') = y`.
    pub fn is_orthomodular(&self) -> Report {
        let orth = self.is_orthogonal_poset();
        if !orth.holds {
            return orth.with_facet("orthogonal", false);
        }
        let n = self.len();
        for x in 0..n {
            for y in self.poset.up_set(x) {
                let ok = self
                    .meet(y, self.neg(x))
                    .and_then(|m| self.join(x, m))
                    .is_some_and(|j| j == y);
                if !ok {
                    return Report::fail(vec![x, y]).with_facet("orthogonal", true);
                }
            }
        }
        Report::pass().with_facet("orthogonal", true)
    }

    /// `a ∧ b = a ∧ b' = 0` forces `a = 0`.
    pub fn is_weakly_boolean(&self) -> Report {
        let n = self.len();
        let zero = Some(self.bottom());
        for a in 0..n {
            if a == self.bottom() {
                continue;
            }
            for b in 0..n {
                if self.meet(a, b) == zero && self.meet(a, self.neg(b)) == zero {
                    return Report::fail(vec![a, b]);
                }
            }
        }
        Report::pass()
    }

    /// Orthogonal and paraorthomodular.
    pub fn is_sharply_paraorthomodular(&self) -> Report {
        let o = self.is_orthogonal_poset();
        if !o.holds {
            return o;
        }
        self.is_paraorthomodular()
    }

    /// Search for mutually orthogonal `c, d, e` with `a = c ∨ d`, `b = d ∨ e`.
    ///
    /// On success the witness is the first such triple in index order.
    pub fn compatible(&self, a: Element, b: Element) -> Report {
        let n = self.len();
        for c in 0..n {
            for d in 0..n {
                if !self.orthogonal(c, d) || self.join(c, d) != Some(a) {
                    continue;
                }
                for e in 0..n {
                    if self.orthogonal(d, e)
                        && self.orthogonal(c, e)
                        && self.join(d, e) == Some(b)
                    {
                        return Report {
                            holds: true,
                            witness: Some(vec![c, d, e]),
                            facets: Vec::new(),
                        };
                    }
                }
            }
        }
        Report {
            holds: false,
            witness: None,
            facets: Vec::new(),
        }
    }

    /// `b − a = (b' ∨ a)'` for `a <= b`.
    ///
    /// Also confirms `b − a = b ∧ a'`, `a ⊥ (b − a)` and `a ∨ (b − a) = b`;
    /// these hold in orthomodular posets and a failure is reported as a
    /// violated precondition.
    pub fn difference(&self, a: Element, b: Element) -> Result<Element> {
        if !self.leq(a, b) {
            return Err(OrderError::PreconditionViolated(format!(
                "difference needs {} <= {}",
                self.name(a),
                self.name(b)
            )));
        }
        let j = self.join(self.neg(b), a).ok_or(OrderError::MissingJoin {
            a: self.neg(b),
            b: a,
            pair: None,
        })?;
        let d = self.neg(j);
        let consistent = self.meet(b, self.neg(a)) == Some(d)
            && self.orthogonal(a, d)
            && self.join(a, d) == Some(b);
        if !consistent {
            return Err(OrderError::PreconditionViolated(format!(
                "{} - {} does not decompose {}; the structure is not orthomodular here",
                self.name(b),
                self.name(a),
                self.name(b)
            )));
        }
        Ok(d)
    }

    /// All predicates, computed once and cached on this value.
    pub fn classify(&self) -> &Classification {
        self.class.get_or_init(|| Classification::compute(self))
    }
}

/// Named structure classes, used by the CLI and by fixture assertions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Class {
    Lattice,
    Distributive,
    Complemented,
    BooleanPoset,
    Orthogonal,
    Orthocomplemented,
    Paraorthomodular,
    SharplyParaorthomodular,
    Orthomodular,
    WeaklyBoolean,
    BooleanAlgebra,
}

impl Class {
    pub const ALL: [Class; 11] = [
        Class::Lattice,
        Class::Distributive,
        Class::Complemented,
        Class::BooleanPoset,
        Class::Orthogonal,
        Class::Orthocomplemented,
        Class::Paraorthomodular,
        Class::SharplyParaorthomodular,
        Class::Orthomodular,
        Class::WeaklyBoolean,
        Class::BooleanAlgebra,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Class::Lattice => "lattice",
            Class::Distributive => "distributive",
            Class::Complemented => "complemented",
            Class::BooleanPoset => "boolean-poset",
            Class::Orthogonal => "orthogonal",
            Class::Orthocomplemented => "orthocomplemented",
            Class::Paraorthomodular => "paraorthomodular",
            Class::SharplyParaorthomodular => "sharply-paraorthomodular",
            Class::Orthomodular => "orthomodular",
            Class::WeaklyBoolean => "weakly-boolean",
            Class::BooleanAlgebra => "boolean-algebra",
        }
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Class {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let key = s.to_ascii_lowercase().replace('_', "-");
        Class::ALL
            .into_iter()
            .find(|c| c.as_str() == key)
            .ok_or_else(|| {
                let names: Vec<&str> = Class::ALL.iter().map(|c| c.as_str()).collect();
                format!("unknown class '{s}' (expected one of: {})", names.join(", "))
            })
    }
}

/// Every predicate on one structure.
#[derive(Clone, Debug)]
pub struct Classification {
    pub lattice: Report,
    pub distributive: Report,
    pub complemented: Report,
    pub boolean_poset: Report,
    pub orthogonal: Report,
    pub orthocomplemented: Report,
    pub paraorthomodular: Report,
    pub sharply_paraorthomodular: Report,
    pub orthomodular: Report,
    pub weakly_boolean: Report,
    /// Boolean poset that is a lattice and whose involution is the
    /// complementation (`x ∨ x' = 1`, hence `x ∧ x' = 0`).
    pub boolean_algebra: Report,
}

impl Classification {
    fn compute(q: &OrthoPoset) -> Self {
        let p = q.poset();
        let lattice = p.is_lattice();
        let distributive = p.is_distributive();
        let complemented = p.is_complemented();
        let boolean_poset = Report {
            holds: distributive.holds && complemented.holds,
            witness: distributive.witness.clone().or_else(|| complemented.witness.clone()),
            facets: vec![
                ("distributive", distributive.holds),
                ("complemented", complemented.holds),
            ],
        };
        let orthogonal = q.is_orthogonal_poset();
        let orthocomplemented = q.is_orthocomplemented();
        let paraorthomodular = q.is_paraorthomodular();
        let sharply_paraorthomodular = if orthogonal.holds {
            paraorthomodular.clone()
        } else {
            orthogonal.clone()
        };
        let orthomodular = q.is_orthomodular();
        let weakly_boolean = q.is_weakly_boolean();
        let ba_holds = boolean_poset.holds && lattice.holds && orthocomplemented.holds;
        let boolean_algebra = Report {
            holds: ba_holds,
            witness: [&boolean_poset, &lattice, &orthocomplemented]
                .iter()
                .find(|r| !r.holds)
                .and_then(|r| r.witness.clone()),
            facets: vec![
                ("boolean-poset", boolean_poset.holds),
                ("lattice", lattice.holds),
                ("orthocomplemented", orthocomplemented.holds),
            ],
        };
        Classification {
            lattice,
            distributive,
            complemented,
            boolean_poset,
            orthogonal,
            orthocomplemented,
            paraorthomodular,
            sharply_paraorthomodular,
            orthomodular,
            weakly_boolean,
            boolean_algebra,
        }
    }

    pub fn get(&self, class: Class) -> &Report {
        match class {
            Class::Lattice => &self.lattice,
            Class::Distributive => &self.distributive,
            Class::Complemented => &self.complemented,
            Class::BooleanPoset => &self.boolean_poset,
            Class::Orthogonal => &self.orthogonal,
            Class::Orthocomplemented => &self.orthocomplemented,
            Class::Paraorthomodular => &self.paraorthomodular,
            Class::SharplyParaorthomodular => &self.sharply_paraorthomodular,
            Class::Orthomodular => &self.orthomodular,
            Class::WeaklyBoolean => &self.weakly_boolean,
            Class::BooleanAlgebra => &self.boolean_algebra,
        }
    }

    pub fn holds(&self, class: Class) -> bool {
        self.get(class).holds
    }
}
