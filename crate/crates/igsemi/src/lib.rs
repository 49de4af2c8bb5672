//! Biordered sets of finite semigroups and the free idempotent generated
//! semigroup IG(E) they present.
//!
//! The pipeline runs in three layers:
//!
//! * [`semigroup`] builds and analyses concrete finite semigroups (Cayley
//!   tables, transformation closures, matrix monoids) and computes Green's
//!   relations, idempotents and index/period data on them.
//! * [`biorder`] restricts a semigroup to its idempotents with the partial
//!   product kept only on basic pairs, and emits the defining presentation
//!   of IG(E).
//! * [`rewrite`], [`witness`], [`decompose`] and [`certify`] work inside
//!   IG(E) itself: words over the idempotent alphabet, elementary
//!   rewriting steps, budgeted equivalence search, and replayable
//!   certificates that a word image lies in a subgroup.
//!
//! Every claim the search layer makes is backed by a certificate that can
//! be replayed step by step without re-running any search; `verify_*`
//! functions are pure replay.

#![forbid(unsafe_code)]

pub mod biorder;
pub mod certify;
pub mod corpus;
pub mod decompose;
pub mod json;
pub mod oracle;
pub mod rewrite;
pub mod semigroup;
pub mod specfile;
pub mod witness;
pub mod word;

pub use biorder::{BiorderedSet, CaseTags, Relation};
pub use certify::{
    find_periodicity, subgroup_certificate, verify_subgroup_certificate, PeriodicityCertificate,
    SubgroupCertificate,
};
pub use decompose::{decompose, verify_decomposition, Decomposition};
pub use rewrite::{
    apply_transition, eval_image, neighbors, prove_equiv, BudgetSpent, Refutation, RewriteError,
    SearchBudget, Transition, TransitionKind, TransitionPath, Verdict,
};
pub use semigroup::{build_semigroup, FiniteSemigroup, GreenStructure, IndexPeriod, SemigroupSpec};
pub use witness::{
    idempotent_root, verify_witness, GreenWitness, HWitness, LWitness, RWitness, Side,
};
pub use word::{Letter, Word};
