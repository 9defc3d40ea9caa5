//! Run the theorem suite over every enumerated structure and aggregate.

use std::fmt;

use rayon::prelude::*;

use crate::arrows::{antichain_violation, ArrowKind};
use crate::document::PosetDocument;
use crate::enumerate::Generator;
use crate::order::Element;
use crate::ortho::{Class, OrthoPoset};
use crate::suite::{suite_with, Evaluation, Verdict};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SizeCensus {
    pub size: usize,
    pub structures: usize,
    pub posets: usize,
    pub counts: Vec<(Class, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub structure: String,
    pub check: String,
    pub statement: String,
    pub witness: Option<Vec<Element>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiValued {
    pub structure: String,
    pub kind: ArrowKind,
    pub pair: (String, String),
    pub values: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KindCensus {
    /// Structures where some value has at least two elements.
    pub multi_valued: usize,
    /// Structures where some value is not an antichain.
    pub non_antichain: usize,
    /// Structures admitting an adjoint operator.
    pub adjoint: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepReport {
    pub n_max: usize,
    pub sizes: Vec<SizeCensus>,
    /// Orthogonal structures on which the suite ran.
    pub checked: usize,
    pub checks_run: usize,
    pub discrepancies: Vec<Discrepancy>,
    pub multi_valued: Option<MultiValued>,
    pub kinds: Vec<(ArrowKind, KindCensus)>,
    /// backward-OP(C) holds but the structure is not a Boolean algebra.
    pub backward_c_not_boolean: usize,
    pub paraorthomodular_not_orthomodular: usize,
    pub smallest_nonlattice_orthomodular: Option<String>,
}

impl SweepReport {
    pub fn is_clean(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

struct Outcome {
    classes: Vec<bool>,
    suite: Option<SuiteOutcome>,
}

struct SuiteOutcome {
    checks: usize,
    discrepancies: Vec<Discrepancy>,
    multi_valued: Option<MultiValued>,
    kinds: Vec<KindCensus>,
    backward_c_not_boolean: bool,
}

/// One-line document text for a generated structure.
pub fn describe(q: &OrthoPoset, name: &str) -> String {
    PosetDocument::of(q, name)
        .to_text()
        .replace("\n  ", " ")
        .replace('\n', "")
}

fn evaluate(q: &OrthoPoset, name: &str) -> Outcome {
    let c = q.classify();
    let classes = Class::ALL.iter().map(|&k| c.holds(k)).collect();
    if !c.holds(Class::Orthogonal) {
        return Outcome {
            classes,
            suite: None,
        };
    }
    let ev = match Evaluation::compute(q) {
        Ok(ev) => ev,
        Err(e) => {
            // Orthogonal structures always have every arrow defined.
            return Outcome {
                classes,
                suite: Some(SuiteOutcome {
                    checks: 1,
                    discrepancies: vec![Discrepancy {
                        structure: describe(q, name),
                        check: "arrows".into(),
                        statement: e,
                        witness: None,
                    }],
                    multi_valued: None,
                    kinds: vec![KindCensus::default(); 5],
                    backward_c_not_boolean: false,
                }),
            };
        }
    };
    let suite = suite_with(q, &ev);
    let discrepancies = suite
        .iter()
        .filter(|t| t.verdict == Verdict::Discrepant)
        .map(|t| Discrepancy {
            structure: describe(q, name),
            check: t.id.clone(),
            statement: t.statement.clone(),
            witness: t.witness.clone(),
        })
        .collect();
    let mut multi_valued = None;
    let kinds = ArrowKind::ALL
        .iter()
        .map(|&k| {
            let t = ev.table(k);
            let multi = t.iter().find(|(_, v)| v.len() >= 2);
            if let (None, Some(((x, y), v))) = (&multi_valued, multi) {
                multi_valued = Some(MultiValued {
                    structure: describe(q, name),
                    kind: k,
                    pair: (q.name(x).to_string(), q.name(y).to_string()),
                    values: q.show(v),
                });
            }
            KindCensus {
                multi_valued: multi.is_some() as usize,
                non_antichain: antichain_violation(q, t).is_some() as usize,
                adjoint: ev.adjoint[k as usize].result.holds as usize,
            }
        })
        .collect();
    Outcome {
        classes,
        suite: Some(SuiteOutcome {
            checks: suite.len(),
            discrepancies,
            multi_valued,
            kinds,
            backward_c_not_boolean: ev.backward[ArrowKind::C as usize].holds
                && !c.holds(Class::BooleanAlgebra),
        }),
    }
}

/// Sweep every structure of size `2..=n_max` using `jobs` worker threads
/// (`0` picks the default). The report does not depend on `jobs`.
pub fn sweep(n_max: usize, jobs: usize) -> SweepReport {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    pool.install(|| sweep_in_pool(n_max))
}

fn sweep_in_pool(n_max: usize) -> SweepReport {
    let generator = Generator::new(n_max.max(2));
    let mut report = SweepReport {
        n_max,
        sizes: Vec::new(),
        checked: 0,
        checks_run: 0,
        discrepancies: Vec::new(),
        multi_valued: None,
        kinds: ArrowKind::ALL.iter().map(|&k| (k, KindCensus::default())).collect(),
        backward_c_not_boolean: 0,
        paraorthomodular_not_orthomodular: 0,
        smallest_nonlattice_orthomodular: None,
    };
    for n in 2..=n_max {
        let structures = generator.of_size(n);
        let outcomes: Vec<Outcome> = structures
            .par_iter()
            .enumerate()
            .map(|(i, (_, q))| evaluate(q, &format!("n{n}-{}", i + 1)))
            .collect();
        let mut counts: Vec<(Class, usize)> = Class::ALL.iter().map(|&c| (c, 0)).collect();
        for (o, (_, q)) in outcomes.into_iter().zip(&structures) {
            for (slot, &b) in counts.iter_mut().zip(&o.classes) {
                slot.1 += b as usize;
            }
            let holds = |c: Class| o.classes[Class::ALL.iter().position(|&k| k == c).unwrap()];
            if holds(Class::Paraorthomodular) && !holds(Class::Orthomodular) {
                report.paraorthomodular_not_orthomodular += 1;
            }
            if report.smallest_nonlattice_orthomodular.is_none()
                && holds(Class::Orthomodular)
                && !holds(Class::Lattice)
            {
                report.smallest_nonlattice_orthomodular = Some(describe(q, "smallest"));
            }
            let Some(s) = o.suite else { continue };
            report.checked += 1;
            report.checks_run += s.checks;
            report.discrepancies.extend(s.discrepancies);
            if report.multi_valued.is_none() {
                report.multi_valued = s.multi_valued;
            }
            for ((_, total), k) in report.kinds.iter_mut().zip(&s.kinds) {
                total.multi_valued += k.multi_valued;
                total.non_antichain += k.non_antichain;
                total.adjoint += k.adjoint;
            }
            report.backward_c_not_boolean += s.backward_c_not_boolean as usize;
        }
        report.sizes.push(SizeCensus {
            size: n,
            structures: structures.len(),
            posets: generator.poset_count(n - 2),
            counts,
        });
    }
    report
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "sweep up to {} elements", self.n_max)?;
        writeln!(f)?;
        write!(f, "{:>4} {:>10} {:>8}", "size", "structures", "posets")?;
        for c in Class::ALL {
            write!(f, " {:>8}", short(c))?;
        }
        writeln!(f)?;
        for s in &self.sizes {
            write!(f, "{:>4} {:>10} {:>8}", s.size, s.structures, s.posets)?;
            for (_, k) in &s.counts {
                write!(f, " {k:>8}")?;
            }
            writeln!(f)?;
        }
        writeln!(f, "columns: {}", legend())?;
        writeln!(f)?;
        writeln!(
            f,
            "theorem suite: {} orthogonal structures, {} checks, {} discrepancies",
            self.checked,
            self.checks_run,
            self.discrepancies.len()
        )?;
        for d in &self.discrepancies {
            write!(f, "  DISCREPANT {} ({}) on {}", d.check, d.statement, d.structure)?;
            if let Some(w) = &d.witness {
                write!(f, " witness {w:?}")?;
            }
            writeln!(f)?;
        }
        writeln!(f)?;
        match &self.multi_valued {
            Some(m) => writeln!(
                f,
                "multi-valued: {} -> {} on ({}, {}) of {}",
                m.kind, m.values, m.pair.0, m.pair.1, m.structure
            )?,
            None => writeln!(f, "multi-valued: no orthogonal structure in range has a value with two or more elements")?,
        }
        writeln!(f)?;
        writeln!(f, "per-arrow census over orthogonal structures (antichain status is exploratory):")?;
        writeln!(f, "{:>6} {:>12} {:>14} {:>8}", "arrow", "multi-valued", "non-antichain", "adjoint")?;
        for (k, c) in &self.kinds {
            writeln!(f, "{:>6} {:>12} {:>14} {:>8}", k.to_string(), c.multi_valued, c.non_antichain, c.adjoint)?;
        }
        writeln!(f)?;
        writeln!(
            f,
            "backward-OP(C) without Boolean algebra: {}",
            self.backward_c_not_boolean
        )?;
        writeln!(
            f,
            "paraorthomodular but not orthomodular: {}",
            self.paraorthomodular_not_orthomodular
        )?;
        match &self.smallest_nonlattice_orthomodular {
            Some(s) => writeln!(f, "smallest non-lattice orthomodular: {s}")?,
            None => writeln!(f, "smallest non-lattice orthomodular: none within range")?,
        }
        Ok(())
    }
}

fn short(c: Class) -> &'static str {
    match c {
        Class::Lattice => "lat",
        Class::Distributive => "dist",
        Class::Complemented => "compl",
        Class::BooleanPoset => "boolp",
        Class::Orthogonal => "orth",
        Class::Orthocomplemented => "oc",
        Class::Paraorthomodular => "pom",
        Class::SharplyParaorthomodular => "spom",
        Class::Orthomodular => "om",
        Class::WeaklyBoolean => "wb",
        Class::BooleanAlgebra => "ba",
    }
}

fn legend() -> String {
    Class::ALL
        .iter()
        .map(|&c| format!("{}={}", short(c), c))
        .collect::<Vec<_>>()
        .join(" ")
}
