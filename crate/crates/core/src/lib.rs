//! Signature-based Groebner basis engine.
//!
//! The crate is organized around a single generic main loop (`engine`) that
//! computes Groebner bases by processing *pairs* `(u, v)` with `u . f = v`
//! in increasing signature order. Four strategy bundles are shipped
//! (`f5`, `ef5`, `gvw`, `mj`), differing only in their pair-rejection
//! criteria, their reduction routine and their store check. Independent
//! verification lives in `verify` (plain Buchberger, Groebner checks, and a
//! brute-force enumerator of the minimal signature/leading-monomial classes
//! used by the property tests).

pub mod criteria;
pub mod engine;
pub mod field;
pub mod ideal;
pub mod monomial;
pub mod order;
pub mod pair;
pub mod poly;
pub mod random;
pub mod sigorder;
pub mod verify;

pub use engine::{nontermination_demo, run, EngineError, EngineResult, RunOptions, StrategyBundle};
pub use field::{Coefficient, FieldSpec};
pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use poly::{Polynomial, Term};
pub use sigorder::{
    check_compatibility, predict_termination, CompatibilityStatus, CompatibilityVerdict,
    ModuleMonomial, SignatureOrder, TerminationPrediction,
};
