//! Finite bounded posets with an antitone involution and the multi-valued
//! quantum implications defined on them.

pub mod arrows;
pub mod canon;
pub mod document;
pub mod dot;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod order;
pub mod ortho;
pub mod report;
pub mod set;
pub mod suite;
pub mod sweep;
pub mod verify;

pub use arrows::{arrow_table, imp, ArrowKind, ArrowTable, ImpValue};
pub use canon::{canonical_form, is_isomorphic, CanonicalCertificate};
pub use enumerate::enumerate_structures;
pub use error::{OrderError, Result};
pub use order::{build_poset, Element, Poset};
pub use ortho::{attach_involution, Class, Classification, OrthoPoset};
pub use report::Report;
pub use set::ElementSet;
pub use suite::{theorem_suite, TheoremCheck, Verdict};
pub use verify::{adjoint_exists, check_backward_op, check_forward_op, check_mpo, check_op, CheckResult};
