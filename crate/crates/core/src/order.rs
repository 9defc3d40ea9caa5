//! Finite bounded posets: cones, extremal elements, set orders, partial
//! joins and meets, and the lattice-style predicates.

use std::collections::HashSet;

use crate::error::{OrderError, Result};
use crate::report::Report;
use crate::set::{ElementSet, MAX_ELEMENTS};

/// Carrier elements are identified by index; display names are cosmetic.
pub type Element = usize;

/// A finite bounded poset stored as its full order relation.
///
/// `up[x]` is the principal filter `{y : x <= y}` and `down[x]` the principal
/// ideal. Join and meet tables are filled at construction.
#[derive(Clone, Debug)]
pub struct Poset {
    names: Vec<String>,
    up: Vec<ElementSet>,
    down: Vec<ElementSet>,
    bottom: Element,
    top: Element,
    joins: Vec<Option<Element>>,
    meets: Vec<Option<Element>>,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.up == other.up && self.bottom == other.bottom && self.top == other.top
    }
}

impl Eq for Poset {}

/// Build a bounded poset from a cover list with declared bounds.
///
/// The relation is the reflexive-transitive closure of `covers`.
pub fn build_poset(
    n: usize,
    covers: &[(Element, Element)],
    bottom: Element,
    top: Element,
) -> Result<Poset> {
    let up = closure(n, covers)?;
    for b in [bottom, top] {
        if b >= n {
            return Err(OrderError::IndexOutOfRange { index: b, n });
        }
    }
    Poset::from_relation(default_names(n), up, Some((bottom, top)))
}

fn default_names(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

fn closure(n: usize, covers: &[(Element, Element)]) -> Result<Vec<ElementSet>> {
    if n == 0 {
        return Err(OrderError::EmptyCarrier);
    }
    if n > MAX_ELEMENTS {
        return Err(OrderError::TooLarge(n));
    }
    let mut up: Vec<ElementSet> = (0..n).map(ElementSet::singleton).collect();
    for &(a, b) in covers {
        for index in [a, b] {
            if index >= n {
                return Err(OrderError::IndexOutOfRange { index, n });
            }
        }
        up[a].insert(b);
    }
    // Warshall over bit rows.
    for k in 0..n {
        for i in 0..n {
            if up[i].contains(k) {
                let row = up[k];
                up[i] |= row;
            }
        }
    }
    Ok(up)
}

impl Poset {
    /// Build from display names and a cover list, inferring the bounds.
    pub fn from_covers(names: Vec<String>, covers: &[(Element, Element)]) -> Result<Poset> {
        let up = closure(names.len(), covers)?;
        Poset::from_relation(names, up, None)
    }

    /// Validate a full relation given as principal filters.
    pub(crate) fn from_relation(
        names: Vec<String>,
        up: Vec<ElementSet>,
        bounds: Option<(Element, Element)>,
    ) -> Result<Poset> {
        let n = up.len();
        if n == 0 {
            return Err(OrderError::EmptyCarrier);
        }
        if n > MAX_ELEMENTS {
            return Err(OrderError::TooLarge(n));
        }
        if names.len() != n {
            return Err(OrderError::NameCount {
                expected: n,
                got: names.len(),
            });
        }
        let full = ElementSet::full(n);
        for (x, row) in up.iter().enumerate() {
            if !row.contains(x) || !row.is_subset(full) {
                return Err(OrderError::PreconditionViolated(format!(
                    "relation row {x} is not reflexive or leaves the carrier"
                )));
            }
            for y in row.iter() {
                if !up[y].is_subset(*row) {
                    return Err(OrderError::PreconditionViolated(format!(
                        "relation is not transitive at {x} <= {y}"
                    )));
                }
                if y != x && up[y].contains(x) {
                    let (a, b) = (x.min(y), x.max(y));
                    return Err(OrderError::CycleDetected { a, b });
                }
            }
        }
        let mut down = vec![ElementSet::EMPTY; n];
        for (x, row) in up.iter().enumerate() {
            for y in row.iter() {
                down[y].insert(x);
            }
        }
        let (bottom, top) = match bounds {
            Some((b, t)) => {
                if up[b] != full {
                    return Err(OrderError::NotBounded(format!(
                        "declared bottom {b} is not below every element"
                    )));
                }
                if down[t] != full {
                    return Err(OrderError::NotBounded(format!(
                        "declared top {t} is not above every element"
                    )));
                }
                (b, t)
            }
            None => {
                let b = (0..n).find(|&x| up[x] == full).ok_or_else(|| {
                    OrderError::NotBounded("no element lies below every element".into())
                })?;
                let t = (0..n).find(|&x| down[x] == full).ok_or_else(|| {
                    OrderError::NotBounded("no element lies above every element".into())
                })?;
                (b, t)
            }
        };
        let mut poset = Poset {
            names,
            up,
            down,
            bottom,
            top,
            joins: Vec::new(),
            meets: Vec::new(),
        };
        poset.fill_tables();
        Ok(poset)
    }

    fn fill_tables(&mut self) {
        let n = self.len();
        let mut joins = vec![None; n * n];
        let mut meets = vec![None; n * n];
        for x in 0..n {
            for y in 0..n {
                joins[x * n + y] = self.least(self.up[x] & self.up[y]);
                meets[x * n + y] = self.greatest(self.down[x] & self.down[y]);
            }
        }
        self.joins = joins;
        self.meets = meets;
    }

    /// Replace the display names.
    pub fn with_names(mut self, names: Vec<String>) -> Result<Poset> {
        if names.len() != self.len() {
            return Err(OrderError::NameCount {
                expected: self.len(),
                got: names.len(),
            });
        }
        self.names = names;
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.up.len()
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    pub fn bottom(&self) -> Element {
        self.bottom
    }

    pub fn top(&self) -> Element {
        self.top
    }

    pub fn carrier(&self) -> ElementSet {
        ElementSet::full(self.len())
    }

    pub fn name(&self, x: Element) -> &str {
        &self.names[x]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Look up an element by display name.
    pub fn index_of(&self, name: &str) -> Option<Element> {
        self.names.iter().position(|n| n == name)
    }

    pub fn leq(&self, x: Element, y: Element) -> bool {
        self.up[x].contains(y)
    }

    pub fn lt(&self, x: Element, y: Element) -> bool {
        x != y && self.leq(x, y)
    }

    /// `{y : x <= y}`.
    pub fn up_set(&self, x: Element) -> ElementSet {
        self.up[x]
    }

    /// `{y : y <= x}`.
    pub fn down_set(&self, x: Element) -> ElementSet {
        self.down[x]
    }

    /// Hasse diagram edges `(lower, upper)` in lexicographic order.
    pub fn covers(&self) -> Vec<(Element, Element)> {
        let mut out = Vec::new();
        for x in 0..self.len() {
            let above = self.up[x] - ElementSet::singleton(x);
            for y in self.minimal(above) {
                out.push((x, y));
            }
        }
        out
    }

    /// Lower cone `L(A)`; `L(∅)` is the whole carrier.
    pub fn lower_cone(&self, a: ElementSet) -> ElementSet {
        a.iter().fold(self.carrier(), |acc, x| acc & self.down[x])
    }

    /// Upper cone `U(A)`; `U(∅)` is the whole carrier.
    pub fn upper_cone(&self, a: ElementSet) -> ElementSet {
        a.iter().fold(self.carrier(), |acc, x| acc & self.up[x])
    }

    pub fn lower_cone2(&self, x: Element, y: Element) -> ElementSet {
        self.down[x] & self.down[y]
    }

    pub fn upper_cone2(&self, x: Element, y: Element) -> ElementSet {
        self.up[x] & self.up[y]
    }

    /// Elements of `A` with nothing strictly above them inside `A`.
    pub fn maximal(&self, a: ElementSet) -> ElementSet {
        a.iter()
            .filter(|&x| (self.up[x] & a).as_singleton().is_some())
            .collect()
    }

    /// Elements of `A` with nothing strictly below them inside `A`.
    pub fn minimal(&self, a: ElementSet) -> ElementSet {
        a.iter()
            .filter(|&x| (self.down[x] & a).as_singleton().is_some())
            .collect()
    }

    /// The least element of `A`, if it has one.
    pub fn least(&self, a: ElementSet) -> Option<Element> {
        a.iter().find(|&x| a.is_subset(self.up[x]))
    }

    /// The greatest element of `A`, if it has one.
    pub fn greatest(&self, a: ElementSet) -> Option<Element> {
        a.iter().find(|&x| a.is_subset(self.down[x]))
    }

    /// `A <= B`: every element of `A` lies below every element of `B`.
    pub fn set_leq(&self, a: ElementSet, b: ElementSet) -> bool {
        b.is_subset(self.upper_cone(a))
    }

    /// `A <=1 B`: every element of `A` lies below some element of `B`.
    pub fn set_leq1(&self, a: ElementSet, b: ElementSet) -> bool {
        a.iter().all(|x| !(self.up[x] & b).is_empty())
    }

    /// `A <=2 B`: every element of `B` lies above some element of `A`.
    pub fn set_leq2(&self, a: ElementSet, b: ElementSet) -> bool {
        b.iter().all(|y| !(self.down[y] & a).is_empty())
    }

    pub fn join(&self, x: Element, y: Element) -> Option<Element> {
        self.joins[x * self.len() + y]
    }

    pub fn meet(&self, x: Element, y: Element) -> Option<Element> {
        self.meets[x * self.len() + y]
    }

    /// The order-dual poset (bounds swap, names kept).
    pub fn dual(&self) -> Poset {
        Poset::from_relation(self.names.clone(), self.down.clone(), Some((self.top, self.bottom)))
            .expect("dual of a valid poset is valid")
    }

    pub fn is_lattice(&self) -> Report {
        let n = self.len();
        for x in 0..n {
            for y in 0..n {
                if self.join(x, y).is_none() || self.meet(x, y).is_none() {
                    return Report::fail(vec![x, y]);
                }
            }
        }
        Report::pass()
    }

    /// Evaluates all four LU-distributivity identities over every triple.
    ///
    /// The verdict follows the first identity; the other three are recorded
    /// as facets `lu1`..`lu4`.
    pub fn is_distributive(&self) -> Report {
        let n = self.len();
        let mut first_witness = None;
        let mut holds = [true; 4];
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let sz = ElementSet::singleton(z);
                    let uxy = self.upper_cone2(x, y);
                    let lxy = self.lower_cone2(x, y);
                    let lxz = self.lower_cone2(x, z);
                    let lyz = self.lower_cone2(y, z);
                    let uxz = self.upper_cone2(x, z);
                    let uyz = self.upper_cone2(y, z);
                    let ids = [
                        self.lower_cone(uxy | sz) == self.lower_cone(self.upper_cone(lxz | lyz)),
                        self.upper_cone(lxz | lyz) == self.upper_cone(self.lower_cone(uxy | sz)),
                        self.upper_cone(lxy | sz) == self.upper_cone(self.lower_cone(uxz | uyz)),
                        self.lower_cone(uxz | uyz) == self.lower_cone(self.upper_cone(lxy | sz)),
                    ];
                    for (h, ok) in holds.iter_mut().zip(ids) {
                        *h &= ok;
                    }
                    if !ids[0] && first_witness.is_none() {
                        first_witness = Some(vec![x, y, z]);
                    }
                }
            }
        }
        Report::from_witness(first_witness)
            .with_facet("lu1", holds[0])
            .with_facet("lu2", holds[1])
            .with_facet("lu3", holds[2])
            .with_facet("lu4", holds[3])
    }

    /// All `y` with `L(x, y) = {0}` and `U(x, y) = {1}`.
    pub fn complements_of(&self, x: Element) -> ElementSet {
        let bottom = ElementSet::singleton(self.bottom);
        let top = ElementSet::singleton(self.top);
        (0..self.len())
            .filter(|&y| self.lower_cone2(x, y) == bottom && self.upper_cone2(x, y) == top)
            .collect()
    }

    pub fn is_complemented(&self) -> Report {
        let missing = (0..self.len()).find(|&x| self.complements_of(x).is_empty());
        Report::from_witness(missing.map(|x| vec![x]))
    }

    /// Distributive and complemented. Need not be a lattice.
    pub fn is_boolean_poset(&self) -> Report {
        let d = self.is_distributive();
        let c = self.is_complemented();
        let witness = if !d.holds { d.witness.clone() } else { c.witness.clone() };
        Report {
            holds: d.holds && c.holds,
            witness,
            facets: vec![("distributive", d.holds), ("complemented", c.holds)],
        }
    }

    /// Every upper cone of a finite subset has, below each of its members, a
    /// minimal member. Checked over every distinct cone `U(M)`.
    pub fn is_mub_complete(&self) -> bool {
        cones_of(&self.up, self.carrier())
            .into_iter()
            .all(|cone| {
                let mins = self.minimal(cone);
                cone.iter().all(|x| !(self.down[x] & mins).is_empty())
            })
    }

    /// Dual of [`Poset::is_mub_complete`] over lower cones.
    pub fn is_lub_complete(&self) -> bool {
        cones_of(&self.down, self.carrier())
            .into_iter()
            .all(|cone| {
                let maxs = self.maximal(cone);
                cone.iter().all(|x| !(self.up[x] & maxs).is_empty())
            })
    }

    /// `L(a, b)` has a maximal element for every pair.
    pub fn has_maximality_property(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| (0..n).all(|b| !self.maximal(self.lower_cone2(a, b)).is_empty()))
    }
}

/// Every intersection of principal rows, plus the full carrier.
fn cones_of(rows: &[ElementSet], full: ElementSet) -> HashSet<ElementSet> {
    let mut seen: HashSet<ElementSet> = HashSet::new();
    let mut frontier = vec![full];
    seen.insert(full);
    while let Some(c) = frontier.pop() {
        for &r in rows {
            let next = c & r;
            if seen.insert(next) {
                frontier.push(next);
            }
        }
    }
    seen
}
