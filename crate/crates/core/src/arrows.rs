//! The five multi-valued implications and the connectives derived from them.
//!
//! Every arrow maps a pair of elements to a set of elements. The classical
//! arrow is total on any bounded involutive poset; the other four combine
//! elements with joins that exist in orthogonal posets and report
//! [`OrderError::MissingJoin`] when one is absent.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{OrderError, Result};
use crate::order::Element;
use crate::ortho::OrthoPoset;
use crate::set::ElementSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ArrowKind {
    /// Classical: `Min U(x', y)`.
    C,
    /// Kalmbach.
    K,
    /// Non-tolens: `y' →K x'`.
    N,
    /// Sasaki: `x' ∨ Max L(x, y)`.
    S,
    /// Dishkant: `y ∨ Max L(x', y')`.
    D,
}

impl ArrowKind {
    pub const ALL: [ArrowKind; 5] = [
        ArrowKind::C,
        ArrowKind::K,
        ArrowKind::N,
        ArrowKind::S,
        ArrowKind::D,
    ];

    /// The four arrows characterising orthomodularity.
    pub const QUANTUM: [ArrowKind; 4] = [ArrowKind::K, ArrowKind::N, ArrowKind::S, ArrowKind::D];

    pub fn name(self) -> &'static str {
        match self {
            ArrowKind::C => "classical",
            ArrowKind::K => "Kalmbach",
            ArrowKind::N => "non-tolens",
            ArrowKind::S => "Sasaki",
            ArrowKind::D => "Dishkant",
        }
    }
}

impl fmt::Display for ArrowKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self {
            ArrowKind::C => "C",
            ArrowKind::K => "K",
            ArrowKind::N => "N",
            ArrowKind::S => "S",
            ArrowKind::D => "D",
        };
        f.write_str(tag)
    }
}

impl FromStr for ArrowKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_uppercase().as_str() {
            "C" => Ok(ArrowKind::C),
            "K" => Ok(ArrowKind::K),
            "N" => Ok(ArrowKind::N),
            "S" => Ok(ArrowKind::S),
            "D" => Ok(ArrowKind::D),
            _ => Err(format!("unknown arrow '{s}' (expected C, K, N, S or D)")),
        }
    }
}

/// The value of `x → y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ImpValue {
    pub kind: ArrowKind,
    pub pair: (Element, Element),
    pub values: ElementSet,
}

impl ImpValue {
    /// `x → y = 1` in the sense of the order property: the value set is `{1}`.
    pub fn is_top(&self, q: &OrthoPoset) -> bool {
        self.values == ElementSet::singleton(q.top())
    }
}

fn join_at(q: &OrthoPoset, a: Element, b: Element, pair: (Element, Element)) -> Result<Element> {
    q.join(a, b).ok_or(OrderError::MissingJoin {
        a,
        b,
        pair: Some(pair),
    })
}

/// `x →C y = Min U(x', y)`.
pub fn imp_c(q: &OrthoPoset, x: Element, y: Element) -> ImpValue {
    let p = q.poset();
    ImpValue {
        kind: ArrowKind::C,
        pair: (x, y),
        values: p.minimal(p.upper_cone2(q.neg(x), y)),
    }
}

/// `x →K y = Max L(x', y) ∨ Max L(x', y') ∨ (x ∧ Min U(x', y))`, combined
/// elementwise. The inner meet is read as `(x' ∨ w')'`.
pub fn imp_k(q: &OrthoPoset, x: Element, y: Element) -> Result<ImpValue> {
    let p = q.poset();
    let nx = q.neg(x);
    let ny = q.neg(y);
    let first = p.maximal(p.lower_cone2(nx, y));
    let second = p.maximal(p.lower_cone2(nx, ny));
    let third = p.minimal(p.upper_cone2(nx, y));
    let pair = (x, y);
    let mut values = ElementSet::EMPTY;
    for w in third {
        let x_meet_w = q.neg(join_at(q, nx, q.neg(w), pair)?);
        for u in first {
            for v in second {
                let uv = join_at(q, u, v, pair)?;
                values.insert(join_at(q, uv, x_meet_w, pair)?);
            }
        }
    }
    Ok(ImpValue {
        kind: ArrowKind::K,
        pair,
        values,
    })
}

/// `x →N y = y' →K x'`.
pub fn imp_n(q: &OrthoPoset, x: Element, y: Element) -> Result<ImpValue> {
    let k = imp_k(q, q.neg(y), q.neg(x)).map_err(|e| relabel(e, (x, y)))?;
    Ok(ImpValue {
        kind: ArrowKind::N,
        pair: (x, y),
        values: k.values,
    })
}

fn relabel(err: OrderError, pair: (Element, Element)) -> OrderError {
    match err {
        OrderError::MissingJoin { a, b, .. } => OrderError::MissingJoin {
            a,
            b,
            pair: Some(pair),
        },
        other => other,
    }
}

/// `x →S y = x' ∨ Max L(x, y)`.
pub fn imp_s(q: &OrthoPoset, x: Element, y: Element) -> Result<ImpValue> {
    let p = q.poset();
    let nx = q.neg(x);
    let mut values = ElementSet::EMPTY;
    for w in p.maximal(p.lower_cone2(x, y)) {
        values.insert(join_at(q, nx, w, (x, y))?);
    }
    Ok(ImpValue {
        kind: ArrowKind::S,
        pair: (x, y),
        values,
    })
}

/// `x →D y = y ∨ Max L(x', y')`.
pub fn imp_d(q: &OrthoPoset, x: Element, y: Element) -> Result<ImpValue> {
    let p = q.poset();
    let mut values = ElementSet::EMPTY;
    for v in p.maximal(p.lower_cone2(q.neg(x), q.neg(y))) {
        values.insert(join_at(q, y, v, (x, y))?);
    }
    Ok(ImpValue {
        kind: ArrowKind::D,
        pair: (x, y),
        values,
    })
}

pub fn imp(q: &OrthoPoset, kind: ArrowKind, x: Element, y: Element) -> Result<ImpValue> {
    match kind {
        ArrowKind::C => Ok(imp_c(q, x, y)),
        ArrowKind::K => imp_k(q, x, y),
        ArrowKind::N => imp_n(q, x, y),
        ArrowKind::S => imp_s(q, x, y),
        ArrowKind::D => imp_d(q, x, y),
    }
}

/// `A → B`: union of `x → y` over `A × B`.
pub fn lift(q: &OrthoPoset, kind: ArrowKind, a: ElementSet, b: ElementSet) -> Result<ElementSet> {
    let mut out = ElementSet::EMPTY;
    for x in a {
        for y in b {
            out |= imp(q, kind, x, y)?.values;
        }
    }
    Ok(out)
}

/// Quantum disjunction `a ∨ᵢ b = a' →ᵢ b`.
pub fn quantum_join(q: &OrthoPoset, kind: ArrowKind, a: Element, b: Element) -> Result<ImpValue> {
    imp(q, kind, q.neg(a), b)
}

/// Quantum conjunction `a ∧ᵢ b = (a →ᵢ b')'`, the involution applied
/// elementwise.
pub fn quantum_meet(q: &OrthoPoset, kind: ArrowKind, a: Element, b: Element) -> Result<ImpValue> {
    let v = imp(q, kind, a, q.neg(b))?;
    Ok(ImpValue {
        kind,
        pair: (a, b),
        values: q.neg_set(v.values),
    })
}

/// Complete `n × n` table of one arrow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowTable {
    kind: ArrowKind,
    n: usize,
    values: Vec<ElementSet>,
}

impl ArrowTable {
    pub fn kind(&self) -> ArrowKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn get(&self, x: Element, y: Element) -> ElementSet {
        self.values[x * self.n + y]
    }

    /// Pairs `(x, y)` in row-major order with their values.
    pub fn iter(&self) -> impl Iterator<Item = ((Element, Element), ElementSet)> + '_ {
        let n = self.n;
        self.values
            .iter()
            .enumerate()
            .map(move |(i, &v)| ((i / n, i % n), v))
    }
}

/// Evaluate `kind` on every pair. The first failing pair in row-major order
/// is reported.
pub fn arrow_table(q: &OrthoPoset, kind: ArrowKind) -> Result<ArrowTable> {
    let n = q.len();
    let mut values = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            values.push(imp(q, kind, x, y)?.values);
        }
    }
    Ok(ArrowTable { kind, n, values })
}

/// Whether every value of the table is an antichain.
pub fn antichain_violation(q: &OrthoPoset, table: &ArrowTable) -> Option<(Element, Element)> {
    let p = q.poset();
    table
        .iter()
        .find(|&(_, v)| p.maximal(v) != v)
        .map(|(pair, _)| pair)
}
