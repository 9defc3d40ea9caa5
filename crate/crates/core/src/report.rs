use std::fmt;

use crate::order::Element;

/// Outcome of a structural predicate.
///
/// A failing report always carries the lexicographically first witness in
/// index order. `facets` records sub-verdicts that the predicate computes
/// alongside the main one (for instance each distributivity identity).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub holds: bool,
    pub witness: Option<Vec<Element>>,
    pub facets: Vec<(&'static str, bool)>,
}

impl Report {
    pub fn pass() -> Self {
        Report {
            holds: true,
            witness: None,
            facets: Vec::new(),
        }
    }

    pub fn fail(witness: Vec<Element>) -> Self {
        Report {
            holds: false,
            witness: Some(witness),
            facets: Vec::new(),
        }
    }

    pub(crate) fn from_witness(witness: Option<Vec<Element>>) -> Self {
        match witness {
            None => Report::pass(),
            Some(w) => Report::fail(w),
        }
    }

    pub fn with_facet(mut self, name: &'static str, value: bool) -> Self {
        self.facets.push((name, value));
        self
    }

    pub fn facet(&self, name: &str) -> Option<bool> {
        self.facets.iter().find(|(n, _)| *n == name).map(|&(_, v)| v)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.holds { "yes" } else { "no" })?;
        if let Some(w) = &self.witness {
            write!(f, " (witness {w:?})")?;
        }
        Ok(())
    }
}
