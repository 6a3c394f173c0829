//! Syllogistic deduction with intermediate quantifiers.
//!
//! * [`algebra`]: quantifier chains and the contrary, mirror and
//!   contradictory operators.
//! * [`syntax`]: parser, renderer, categorial-grammar check and
//!   knowledge-base loader.
//! * [`engine`]: forward-chaining saturation with proof traces.
//! * [`models`]: finite-model semantics used as an independent oracle.
//! * [`cli`]: the command implementations behind the `iqlogic` binary.

pub mod algebra;
pub mod cli;
pub mod engine;
pub mod models;
pub mod syntax;

pub use algebra::{AlgebraError, Polarity, Quantifier, QuantitySystem};
pub use engine::{
    infer_once, metaresult, prove, saturate, triggers_of, Closure, EngineError, ProofStep, ProofTree, Rule, Saturator,
    Trigger, TriggerKind,
};
pub use models::{
    entails, enumerate_valid_moods, eval, find_countermodel, Figure, FiniteModel, ModelError, ModelSearch, MoodRow,
    MoodTable, Semantics,
};
pub use syntax::{parse, parse_kb, typecheck, KnowledgeBase, ParseError, Statement, Term};
