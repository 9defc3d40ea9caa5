//! Order property, modus ponens and adjoint-pair checks for one structure.

use std::fmt;

use crate::arrows::{arrow_table, imp, ArrowKind, ArrowTable};
use crate::error::Result;
use crate::order::Element;
use crate::ortho::OrthoPoset;
use crate::set::ElementSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Check {
    /// `x <= y` implies `x → y = 1`.
    ForwardOp(ArrowKind),
    /// `x → y = 1` implies `x <= y`.
    BackwardOp(ArrowKind),
    /// Both directions.
    Op(ArrowKind),
    /// `x <= y` and `x → y <= u → v` imply `u <= v`.
    Mpo(ArrowKind),
    /// Some operator forms an adjoint pair with the arrow.
    Adjoint(ArrowKind),
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Check::ForwardOp(k) => write!(f, "forward-OP({k})"),
            Check::BackwardOp(k) => write!(f, "backward-OP({k})"),
            Check::Op(k) => write!(f, "OP({k})"),
            Check::Mpo(k) => write!(f, "MPO({k})"),
            Check::Adjoint(k) => write!(f, "AP({k})"),
        }
    }
}

/// Outcome of one check. A failing result carries a witness that
/// [`CheckResult::replay`] reproduces through the public operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub check: Check,
    pub holds: bool,
    pub witness: Option<Vec<Element>>,
    pub detail: String,
}

impl CheckResult {
    fn pass(check: Check) -> Self {
        CheckResult {
            check,
            holds: true,
            witness: None,
            detail: String::new(),
        }
    }

    fn fail(check: Check, witness: Vec<Element>, detail: String) -> Self {
        CheckResult {
            check,
            holds: false,
            witness: Some(witness),
            detail,
        }
    }

    /// Re-evaluate the witness from scratch; `true` when it still exhibits
    /// the violation.
    pub fn replay(&self, q: &OrthoPoset) -> Result<bool> {
        let Some(w) = &self.witness else {
            return Ok(false);
        };
        let top = ElementSet::singleton(q.top());
        Ok(match (self.check, w.as_slice()) {
            (Check::ForwardOp(k), &[x, y]) => q.leq(x, y) && imp(q, k, x, y)?.values != top,
            (Check::BackwardOp(k), &[x, y]) => imp(q, k, x, y)?.values == top && !q.leq(x, y),
            (Check::Op(k), &[x, y]) => {
                let is_top = imp(q, k, x, y)?.values == top;
                q.leq(x, y) != is_top
            }
            (Check::Mpo(k), &[x, y, u, v]) => {
                q.leq(x, y)
                    && q.poset().set_leq(imp(q, k, x, y)?.values, imp(q, k, u, v)?.values)
                    && !q.leq(u, v)
            }
            (Check::Adjoint(k), &[x, y]) => {
                let s = residual_set(q, k, x, y)?;
                let p = q.poset();
                p.upper_cone(p.lower_cone(s)) != s
            }
            _ => false,
        })
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.check, if self.holds { "holds" } else { "fails" })?;
        if !self.detail.is_empty() {
            write!(f, " ({})", self.detail)?;
        }
        Ok(())
    }
}

pub(crate) fn forward_op_on(q: &OrthoPoset, t: &ArrowTable) -> CheckResult {
    let check = Check::ForwardOp(t.kind());
    let top = ElementSet::singleton(q.top());
    for x in 0..q.len() {
        for y in q.poset().up_set(x) {
            let v = t.get(x, y);
            if v != top {
                let detail = format!(
                    "{} <= {} but {} →{} {} = {}",
                    q.name(x),
                    q.name(y),
                    q.name(x),
                    t.kind(),
                    q.name(y),
                    q.show(v)
                );
                return CheckResult::fail(check, vec![x, y], detail);
            }
        }
    }
    CheckResult::pass(check)
}

pub(crate) fn backward_op_on(q: &OrthoPoset, t: &ArrowTable) -> CheckResult {
    let check = Check::BackwardOp(t.kind());
    let top = ElementSet::singleton(q.top());
    for ((x, y), v) in t.iter() {
        if v == top && !q.leq(x, y) {
            let detail = format!(
                "{} →{} {} = {{1}} but {} is not below {}",
                q.name(x),
                t.kind(),
                q.name(y),
                q.name(x),
                q.name(y)
            );
            return CheckResult::fail(check, vec![x, y], detail);
        }
    }
    CheckResult::pass(check)
}

pub(crate) fn op_from(forward: &CheckResult, backward: &CheckResult, kind: ArrowKind) -> CheckResult {
    let check = Check::Op(kind);
    for part in [forward, backward] {
        if !part.holds {
            return CheckResult {
                check,
                holds: false,
                witness: part.witness.clone(),
                detail: format!("{}: {}", part.check, part.detail),
            };
        }
    }
    CheckResult::pass(check)
}

/// Modus ponens with the set order `A <= B` between arrow values.
pub(crate) fn mpo_on(q: &OrthoPoset, t: &ArrowTable) -> CheckResult {
    let check = Check::Mpo(t.kind());
    let p = q.poset();
    let n = q.len();
    // Pairs (u, v) with u not below v, and their values.
    let bad_targets: Vec<(Element, Element, ElementSet)> = t
        .iter()
        .filter(|&((u, v), _)| !q.leq(u, v))
        .map(|((u, v), val)| (u, v, val))
        .collect();
    for x in 0..n {
        for y in p.up_set(x) {
            let above = p.upper_cone(t.get(x, y));
            if let Some(&(u, v, val)) = bad_targets.iter().find(|(_, _, val)| val.is_subset(above)) {
                let detail = format!(
                    "{} <= {} and {} <= {} = {} →{} {}, yet {} is not below {}",
                    q.name(x),
                    q.name(y),
                    q.show(t.get(x, y)),
                    q.show(val),
                    q.name(u),
                    t.kind(),
                    q.name(v),
                    q.name(u),
                    q.name(v)
                );
                return CheckResult::fail(check, vec![x, y, u, v], detail);
            }
        }
    }
    CheckResult::pass(check)
}

fn table(q: &OrthoPoset, kind: ArrowKind) -> Result<ArrowTable> {
    arrow_table(q, kind)
}

pub fn check_forward_op(q: &OrthoPoset, kind: ArrowKind) -> Result<CheckResult> {
    Ok(forward_op_on(q, &table(q, kind)?))
}

pub fn check_backward_op(q: &OrthoPoset, kind: ArrowKind) -> Result<CheckResult> {
    Ok(backward_op_on(q, &table(q, kind)?))
}

pub fn check_op(q: &OrthoPoset, kind: ArrowKind) -> Result<CheckResult> {
    let t = table(q, kind)?;
    Ok(op_from(&forward_op_on(q, &t), &backward_op_on(q, &t), kind))
}

pub fn check_mpo(q: &OrthoPoset, kind: ArrowKind) -> Result<CheckResult> {
    Ok(mpo_on(q, &table(q, kind)?))
}

/// A set-valued binary operation given by its full table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryOperator {
    n: usize,
    table: Vec<ElementSet>,
}

impl BinaryOperator {
    pub fn from_fn(n: usize, mut f: impl FnMut(Element, Element) -> ElementSet) -> Self {
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                table.push(f(x, y));
            }
        }
        BinaryOperator { n, table }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn get(&self, x: Element, y: Element) -> ElementSet {
        self.table[x * self.n + y]
    }
}

/// Result of the adjoint-pair decision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjointOutcome {
    pub result: CheckResult,
    /// `x ⊙ y = Max L(S(x, y))` when an adjoint exists.
    pub operator: Option<BinaryOperator>,
    /// `U(L(S)) \ S` at the first failing pair.
    pub gap: Option<ElementSet>,
}

/// `S(x, y) = { z : x <=2 (y → z) }`, the set every candidate `x ⊙ y` must
/// have as its upper cone.
pub fn residual_set(q: &OrthoPoset, kind: ArrowKind, x: Element, y: Element) -> Result<ElementSet> {
    let p = q.poset();
    let mut s = ElementSet::EMPTY;
    for z in 0..q.len() {
        if p.lower_cone(imp(q, kind, y, z)?.values).contains(x) {
            s.insert(z);
        }
    }
    Ok(s)
}

pub(crate) fn adjoint_on(q: &OrthoPoset, t: &ArrowTable) -> AdjointOutcome {
    let kind = t.kind();
    let check = Check::Adjoint(kind);
    let p = q.poset();
    let n = q.len();
    let mut ops = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let s: ElementSet = (0..n)
                .filter(|&z| p.lower_cone(t.get(y, z)).contains(x))
                .collect();
            let below = p.lower_cone(s);
            let closure = p.upper_cone(below);
            if closure != s {
                let gap = closure - s;
                let detail = format!(
                    "at ({}, {}) the candidates {} are not an upper cone; U(L(S)) adds {}",
                    q.name(x),
                    q.name(y),
                    q.show(s),
                    q.show(gap)
                );
                return AdjointOutcome {
                    result: CheckResult::fail(check, vec![x, y], detail),
                    operator: None,
                    gap: Some(gap),
                };
            }
            ops.push(p.maximal(below));
        }
    }
    AdjointOutcome {
        result: CheckResult::pass(check),
        operator: Some(BinaryOperator { n, table: ops }),
        gap: None,
    }
}

/// Decide whether some `⊙` satisfies `x ⊙ y <=1 z  iff  x <=2 y → z` and
/// synthesise one.
///
/// For a set `A`, `A <=1 {z}` says `z ∈ U(A)`, so `x ⊙ y` must satisfy
/// `U(x ⊙ y) = S(x, y)`. Such a set exists exactly when `S` is closed,
/// `U(L(S)) = S`, and `Max L(S)` is then a solution.
pub fn adjoint_exists(q: &OrthoPoset, kind: ArrowKind) -> Result<AdjointOutcome> {
    Ok(adjoint_on(q, &table(q, kind)?))
}

/// Check `(AP)` literally for a given operator over every triple; returns the
/// first violating `(x, y, z)`.
pub fn adjoint_violation(
    q: &OrthoPoset,
    kind: ArrowKind,
    op: &BinaryOperator,
) -> Result<Option<(Element, Element, Element)>> {
    let p = q.poset();
    let n = q.len();
    let t = table(q, kind)?;
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let left = p.set_leq1(op.get(x, y), ElementSet::singleton(z));
                let right = p.set_leq2(ElementSet::singleton(x), t.get(y, z));
                if left != right {
                    return Ok(Some((x, y, z)));
                }
            }
        }
    }
    Ok(None)
}
