//! Cross-validation of arrow behaviour against the structure predicates.
//!
//! [`theorem_suite`] evaluates every order-property, modus-ponens and
//! adjoint characterisation on one structure, together with the identity
//! laws each arrow obeys. A `Discrepant` verdict is a bug.

use std::fmt;

use crate::arrows::{arrow_table, ArrowKind, ArrowTable};
use crate::order::Element;
use crate::ortho::{Class, OrthoPoset};
use crate::set::ElementSet;
use crate::verify::{adjoint_on, backward_op_on, forward_op_on, mpo_on, op_from, AdjointOutcome, CheckResult};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Consistent,
    Discrepant,
    Skipped(String),
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Consistent => f.write_str("Consistent"),
            Verdict::Discrepant => f.write_str("Discrepant"),
            Verdict::Skipped(why) => write!(f, "Skipped ({why})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Iff,
    Implies,
    /// A single statement; `left` is its truth value.
    Law,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremCheck {
    /// Short stable identifier such as `e:K` or `law:basic:S`.
    pub id: String,
    pub statement: String,
    pub relation: Relation,
    pub left: Option<bool>,
    pub right: Option<bool>,
    pub witness: Option<Vec<Element>>,
    pub verdict: Verdict,
}

impl TheoremCheck {
    fn relate(id: String, statement: String, relation: Relation, left: bool, right: bool) -> Self {
        let ok = match relation {
            Relation::Iff => left == right,
            Relation::Implies => !left || right,
            Relation::Law => left,
        };
        TheoremCheck {
            id,
            statement,
            relation,
            left: Some(left),
            right: Some(right),
            witness: None,
            verdict: if ok { Verdict::Consistent } else { Verdict::Discrepant },
        }
    }

    fn law(id: String, statement: String, witness: Option<Vec<Element>>) -> Self {
        let mut t = Self::relate(id, statement, Relation::Law, witness.is_none(), true);
        t.right = None;
        t.witness = witness;
        t
    }

    fn skipped(id: String, statement: String, relation: Relation, why: &str) -> Self {
        TheoremCheck {
            id,
            statement,
            relation,
            left: None,
            right: None,
            witness: None,
            verdict: Verdict::Skipped(why.to_string()),
        }
    }

    pub fn is_discrepant(&self) -> bool {
        self.verdict == Verdict::Discrepant
    }
}

impl fmt::Display for TheoremCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<18} {:<58} {}", self.id, self.statement, self.verdict)?;
        let show = |b: Option<bool>| match b {
            Some(true) => "T",
            Some(false) => "F",
            None => "-",
        };
        if self.relation != Relation::Law && self.left.is_some() {
            write!(f, " [{} / {}]", show(self.left), show(self.right))?;
        }
        if let Some(w) = &self.witness {
            write!(f, " witness {w:?}")?;
        }
        Ok(())
    }
}

/// Everything the suite and the sweep need about one orthogonal structure,
/// indexed by `ArrowKind as usize`.
pub struct Evaluation {
    pub tables: Vec<ArrowTable>,
    pub forward: Vec<CheckResult>,
    pub backward: Vec<CheckResult>,
    pub op: Vec<CheckResult>,
    pub mpo: Vec<CheckResult>,
    pub adjoint: Vec<AdjointOutcome>,
}

impl Evaluation {
    /// Fails with a description when some arrow is undefined on the input.
    pub fn compute(q: &OrthoPoset) -> Result<Self, String> {
        let mut tables = Vec::with_capacity(5);
        for kind in ArrowKind::ALL {
            tables.push(arrow_table(q, kind).map_err(|e| format!("{kind}: {e}"))?);
        }
        let forward: Vec<_> = tables.iter().map(|t| forward_op_on(q, t)).collect();
        let backward: Vec<_> = tables.iter().map(|t| backward_op_on(q, t)).collect();
        let op = ArrowKind::ALL
            .iter()
            .map(|&k| op_from(&forward[k as usize], &backward[k as usize], k))
            .collect();
        let mpo = tables.iter().map(|t| mpo_on(q, t)).collect();
        let adjoint = tables.iter().map(|t| adjoint_on(q, t)).collect();
        Ok(Evaluation {
            tables,
            forward,
            backward,
            op,
            mpo,
            adjoint,
        })
    }

    pub fn table(&self, kind: ArrowKind) -> &ArrowTable {
        &self.tables[kind as usize]
    }
}

/// Run the full suite. Non-orthogonal inputs yield a single skipped entry.
pub fn theorem_suite(q: &OrthoPoset) -> Vec<TheoremCheck> {
    if !q.classify().holds(Class::Orthogonal) {
        return vec![TheoremCheck::skipped(
            "all".into(),
            "every theorem assumes an orthogonal poset".into(),
            Relation::Law,
            "not an orthogonal poset",
        )];
    }
    match Evaluation::compute(q) {
        Ok(ev) => suite_with(q, &ev),
        Err(e) => vec![TheoremCheck::skipped(
            "all".into(),
            "arrow tables".into(),
            Relation::Law,
            &e,
        )],
    }
}

pub(crate) fn suite_with(q: &OrthoPoset, ev: &Evaluation) -> Vec<TheoremCheck> {
    let c = q.classify();
    let oc = c.holds(Class::Orthocomplemented);
    let pom = c.holds(Class::Paraorthomodular);
    let om = c.holds(Class::Orthomodular);
    let ba = c.holds(Class::BooleanAlgebra);
    let wb = c.holds(Class::WeaklyBoolean);
    let boolean = c.holds(Class::BooleanPoset);
    let mut out = Vec::new();
    let iff = |id: String, s: String, l: bool, r: bool| TheoremCheck::relate(id, s, Relation::Iff, l, r);
    let implies = |id: String, s: String, l: bool, r: bool| TheoremCheck::relate(id, s, Relation::Implies, l, r);

    for k in ArrowKind::ALL {
        out.push(iff(
            format!("a:{k}"),
            format!("forward-OP({k}) <=> orthocomplemented"),
            ev.forward[k as usize].holds,
            oc,
        ));
    }
    for k in ArrowKind::QUANTUM {
        out.push(iff(
            format!("b:{k}"),
            format!("backward-OP({k}) <=> paraorthomodular"),
            ev.backward[k as usize].holds,
            pom,
        ));
    }
    let back_c = ev.backward[ArrowKind::C as usize].holds;
    out.push(implies(
        "c1".into(),
        "Boolean poset (orthocomplemented) => backward-OP(C)".into(),
        boolean && oc,
        back_c,
    ));
    out.push(implies(
        "c2".into(),
        "backward-OP(C) => weakly Boolean and paraorthomodular".into(),
        back_c,
        wb && pom,
    ));
    out.push(iff(
        "d".into(),
        "OP(C) <=> Boolean algebra".into(),
        ev.op[ArrowKind::C as usize].holds,
        ba,
    ));
    for k in ArrowKind::QUANTUM {
        out.push(iff(
            format!("e:{k}"),
            format!("OP({k}) <=> orthomodular"),
            ev.op[k as usize].holds,
            om,
        ));
    }
    for k in ArrowKind::ALL {
        out.push(iff(
            format!("f:{k}"),
            format!("MPO({k}) <=> OP({k})"),
            ev.mpo[k as usize].holds,
            ev.op[k as usize].holds,
        ));
    }

    let ap_c = ev.adjoint[ArrowKind::C as usize].result.holds;
    if oc {
        out.push(iff("g1".into(), "AP(C) <=> Boolean algebra".into(), ap_c, ba));
    } else {
        out.push(TheoremCheck::skipped(
            "g1".into(),
            "AP(C) <=> Boolean algebra".into(),
            Relation::Iff,
            "not orthocomplemented",
        ));
    }
    let ap_k = &ev.adjoint[ArrowKind::K as usize];
    out.push(implies("g2".into(), "AP(K) => orthomodular".into(), ap_k.result.holds, om));
    let annihilates = ap_k.operator.as_ref().is_none_or(|op| {
        let zero = ElementSet::singleton(q.bottom());
        (0..q.len()).all(|x| op.get(x, q.neg(x)) == zero)
    });
    out.push(implies(
        "g3".into(),
        "AP(K) => x (.) x' = {0}".into(),
        ap_k.result.holds,
        annihilates,
    ));

    let para = c.get(Class::Paraorthomodular);
    out.push(iff(
        "h:P".into(),
        "(P) <=> (P')".into(),
        para.facet("P").unwrap_or(false),
        para.facet("P'").unwrap_or(false),
    ));
    let dist = c.get(Class::Distributive);
    let lu: Vec<bool> = ["lu1", "lu2", "lu3", "lu4"]
        .iter()
        .map(|f| dist.facet(f).unwrap_or(false))
        .collect();
    out.push(TheoremCheck::law(
        "h:LU".into(),
        "the four LU-distributive identities agree".into(),
        (!lu.iter().all(|&b| b == lu[0])).then(Vec::new),
    ));
    out.push(implies(
        "h:boolean".into(),
        "Boolean poset (orthocomplemented) => orthomodular".into(),
        boolean && oc,
        om,
    ));
    out.push(implies("h:om".into(), "orthomodular => paraorthomodular".into(), om, pom));
    out.push(iff(
        "h:oc".into(),
        "orthomodular <=> orthocomplemented and paraorthomodular".into(),
        om,
        oc && pom,
    ));
    out.push(implies(
        "h:wb".into(),
        "weakly Boolean and orthomodular => Boolean algebra".into(),
        wb && om,
        ba,
    ));
    let ops: Vec<bool> = ArrowKind::QUANTUM.iter().map(|&k| ev.op[k as usize].holds).collect();
    out.push(TheoremCheck::law(
        "h:cross".into(),
        "OP(K), OP(N), OP(S), OP(D) agree".into(),
        (!ops.iter().all(|&b| b == ops[0])).then(Vec::new),
    ));

    out.extend(laws(q, ev));
    out
}

fn join_each(q: &OrthoPoset, a: Element, set: ElementSet) -> Option<ElementSet> {
    set.iter().map(|b| q.join(a, b)).collect::<Option<ElementSet>>()
}

fn meet_each(q: &OrthoPoset, a: Element, set: ElementSet) -> Option<ElementSet> {
    set.iter().map(|b| q.meet(a, b)).collect::<Option<ElementSet>>()
}

fn first_pair(n: usize, mut bad: impl FnMut(Element, Element) -> bool) -> Option<Vec<Element>> {
    (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find(|&(x, y)| bad(x, y))
        .map(|(x, y)| vec![x, y])
}

fn first_triple(
    n: usize,
    mut bad: impl FnMut(Element, Element, Element) -> bool,
) -> Option<Vec<Element>> {
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if bad(x, y, z) {
                    return Some(vec![x, y, z]);
                }
            }
        }
    }
    None
}

/// Closed-form value of `x → y` when the pair is comparable or orthogonal.
/// Returns every case that applies; `None` inside marks a formula whose
/// joins or meets are missing.
fn case_values(q: &OrthoPoset, kind: ArrowKind, x: Element, y: Element) -> Vec<Option<ElementSet>> {
    let p = q.poset();
    let (nx, ny) = (q.neg(x), q.neg(y));
    let one = |e: Option<Element>| e.map(ElementSet::singleton);
    let mut out = Vec::new();
    match kind {
        ArrowKind::K | ArrowKind::N => {
            // The non-tolens cases are those of K read through x → y = y' →K x'.
            let (a, b) = if kind == ArrowKind::K { (x, y) } else { (ny, nx) };
            let (na, nb) = (q.neg(a), q.neg(b));
            if p.leq(a, b) {
                out.push(
                    q.join(a, nb)
                        .and_then(|j| join_each(q, j, p.maximal(p.lower_cone2(na, b)))),
                );
            }
            if q.orthogonal(a, b) {
                out.push(join_each(q, b, p.maximal(p.lower_cone2(na, nb))));
            }
            if p.leq(b, a) {
                out.push(
                    meet_each(q, a, p.minimal(p.upper_cone2(na, b))).and_then(|m| join_each(q, na, m)),
                );
            }
        }
        ArrowKind::S => {
            if p.leq(x, y) {
                out.push(one(q.join(x, nx)));
            }
            if q.orthogonal(nx, ny) {
                out.push(q.meet(x, y).and_then(|m| one(q.join(nx, m))));
            }
            if p.leq(y, x) {
                out.push(one(q.join(nx, y)));
            }
        }
        ArrowKind::D => {
            if p.leq(x, y) {
                out.push(one(q.join(y, ny)));
            }
            if q.orthogonal(x, y) {
                out.push(q.meet(nx, ny).and_then(|m| one(q.join(y, m))));
            }
            if p.leq(y, x) {
                out.push(one(q.join(nx, y)));
            }
        }
        ArrowKind::C => {}
    }
    out
}

fn laws(q: &OrthoPoset, ev: &Evaluation) -> Vec<TheoremCheck> {
    let p = q.poset();
    let n = q.len();
    let (zero, top) = (q.bottom(), q.top());
    let single = ElementSet::singleton;
    let x_or_x = |x: Element| q.join(x, q.neg(x)).map(single);
    let mut out = Vec::new();

    for k in ArrowKind::ALL {
        let t = ev.table(k);
        out.push(TheoremCheck::law(
            format!("law:nonempty:{k}"),
            format!("every {k} value is nonempty"),
            first_pair(n, |x, y| t.get(x, y).is_empty()),
        ));

        // x → 1, 1 → x, x → 0, 0 → x
        let expect = |x: Element| -> [Option<ElementSet>; 4] {
            let nx = Some(single(q.neg(x)));
            let (to_one, from_zero) = match k {
                ArrowKind::C => (Some(single(top)), Some(single(top))),
                ArrowKind::K | ArrowKind::N => (x_or_x(x), x_or_x(x)),
                ArrowKind::S => (x_or_x(x), Some(single(top))),
                ArrowKind::D => (Some(single(top)), x_or_x(x)),
            };
            [to_one, Some(single(x)), nx, from_zero]
        };
        let bad = (0..n).find(|&x| {
            let e = expect(x);
            let got = [t.get(x, top), t.get(top, x), t.get(x, zero), t.get(zero, x)];
            got.iter().zip(e.iter()).any(|(g, e)| Some(*g) != *e)
        });
        out.push(TheoremCheck::law(
            format!("law:basic:{k}"),
            format!("x{k}1, 1{k}x, x{k}0, 0{k}x follow the identity table"),
            bad.map(|x| vec![x]),
        ));

        if k != ArrowKind::C {
            out.push(TheoremCheck::law(
                format!("law:cases:{k}"),
                format!("three-case formula for {k} matches the definition"),
                first_pair(n, |x, y| {
                    case_values(q, k, x, y).into_iter().any(|v| v != Some(t.get(x, y)))
                }),
            ));
        }
    }

    let (tc, ts, td) = (ev.table(ArrowKind::C), ev.table(ArrowKind::S), ev.table(ArrowKind::D));
    let (tk, tn) = (ev.table(ArrowKind::K), ev.table(ArrowKind::N));
    out.push(TheoremCheck::law(
        "law:bound:C".into(),
        "y <= every element of x C y".into(),
        first_pair(n, |x, y| !tc.get(x, y).is_subset(p.up_set(y))),
    ));
    out.push(TheoremCheck::law(
        "law:bound:D".into(),
        "y <= every element of x D y".into(),
        first_pair(n, |x, y| !td.get(x, y).is_subset(p.up_set(y))),
    ));
    out.push(TheoremCheck::law(
        "law:bound:S".into(),
        "x' <= every element of x S y".into(),
        first_pair(n, |x, y| !ts.get(x, y).is_subset(p.up_set(q.neg(x)))),
    ));
    out.push(TheoremCheck::law(
        "law:monotone:C".into(),
        "x <= y implies y C z <=2 x C z".into(),
        first_triple(n, |x, y, z| p.leq(x, y) && !p.set_leq2(tc.get(y, z), tc.get(x, z))),
    ));
    out.push(TheoremCheck::law(
        "law:monotone:S".into(),
        "x <= y implies z S x <=1 z S y".into(),
        first_triple(n, |x, y, z| p.leq(x, y) && !p.set_leq1(ts.get(z, x), ts.get(z, y))),
    ));
    out.push(TheoremCheck::law(
        "law:monotone:D".into(),
        "x <= y implies y D z <=1 x D z".into(),
        first_triple(n, |x, y, z| p.leq(x, y) && !p.set_leq1(td.get(y, z), td.get(x, z))),
    ));
    out.push(TheoremCheck::law(
        "law:dual:N".into(),
        "x N y = y' K x'".into(),
        first_pair(n, |x, y| tn.get(x, y) != tk.get(q.neg(y), q.neg(x))),
    ));
    out.push(TheoremCheck::law(
        "law:dual:D".into(),
        "x D y = y' S x'".into(),
        first_pair(n, |x, y| td.get(x, y) != ts.get(q.neg(y), q.neg(x))),
    ));
    out
}
