//! Forward-chaining saturation over a knowledge base.
//!
//! Figure rules combine two non-negated statements sharing a middle term.
//! `all` and `no` statements double as triggers (`β ⊑ α`, `β ⊑ ¬α`). The
//! square-of-opposition rules move between a statement and the negation of
//! its contradictory, and the chain rules walk the implication order.
//!
//! Derived statements are appended in a deterministic order, and every
//! premise index of a proof step points at an earlier entry, so proofs are
//! always well founded.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraError, Quantifier, QuantitySystem};
use crate::syntax::{KnowledgeBase, Statement, Term};

/// Alternate justifications kept per statement, besides the first one.
pub const MAX_ALTERNATES: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("closure exceeded the step limit of {limit} statements")]
    StepLimitExceeded { limit: usize, partial: Box<Closure> },
    #[error("`{0}` is not in the closure")]
    NotInClosure(Statement),
    #[error("`{0}` is negated; only non-negated conclusions have a metaresult")]
    NegatedStatement(Statement),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Inference rule labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Rule {
    /// I.A: `q(γ)(β)`, `β ⊑ α` gives `q(γ)(α)` for affirmative `q`.
    FirstA,
    /// I.E: `q(γ)(β)`, `β ⊑ ¬α` gives `q̂(γ)(α)` for affirmative `q`.
    FirstE,
    /// II.A: `q(γ)(α)`, `β ⊑ α` gives `q(γ)(β)` for negative `q`.
    SecondA,
    /// II.E: `q(γ)(α)`, `β ⊑ ¬α` gives `q̂(γ)(β)` for affirmative `q`.
    SecondE,
    /// III.A: `q1(γ)(α)`, `q2(γ)(β)` with `q2 ⊑ q1*` gives `some(β)(α)`.
    ThirdA,
    /// III.E: negative `q1(γ)(α)`, `q2(γ)(β)` with `q2 ⊑ (q̂1)*` gives `some_not(β)(α)`.
    ThirdE,
    /// IV.A: `q(α)(β)`, `β ⊑ γ` gives `some(γ)(α)`.
    FourthA,
    /// IV.Æ: `α ⊑ β`, `β ⊑ ¬γ` gives `no(γ)(α)`.
    FourthAE,
    /// IV.E: `α ⊑ ¬β`, `q(β)(γ)` gives `some_not(γ)(α)`.
    FourthE,
    ContraPos,
    ContraNeg,
    ChainA,
    ChainE,
    Meta,
    Premise,
}

impl Rule {
    pub const ALL: [Rule; 15] = [
        Rule::FirstA,
        Rule::FirstE,
        Rule::SecondA,
        Rule::SecondE,
        Rule::ThirdA,
        Rule::ThirdE,
        Rule::FourthA,
        Rule::FourthAE,
        Rule::FourthE,
        Rule::ContraPos,
        Rule::ContraNeg,
        Rule::ChainA,
        Rule::ChainE,
        Rule::Meta,
        Rule::Premise,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Rule::FirstA => "I.A",
            Rule::FirstE => "I.E",
            Rule::SecondA => "II.A",
            Rule::SecondE => "II.E",
            Rule::ThirdA => "III.A",
            Rule::ThirdE => "III.E",
            Rule::FourthA => "IV.A",
            Rule::FourthAE => "IV.Æ",
            Rule::FourthE => "IV.E",
            Rule::ContraPos => "CONTRA_POS",
            Rule::ContraNeg => "CONTRA_NEG",
            Rule::ChainA => "ExI.A",
            Rule::ChainE => "ExI.E",
            Rule::Meta => "META",
            Rule::Premise => "PREMISE",
        }
    }

    pub fn from_label(label: &str) -> Option<Rule> {
        Rule::ALL.into_iter().find(|r| r.label() == label)
    }

    /// True for the syllogistic figure rules I.A through IV.E.
    pub fn is_figure_rule(self) -> bool {
        matches!(
            self,
            Rule::FirstA
                | Rule::FirstE
                | Rule::SecondA
                | Rule::SecondE
                | Rule::ThirdA
                | Rule::ThirdE
                | Rule::FourthA
                | Rule::FourthAE
                | Rule::FourthE
        )
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TriggerKind {
    /// `left ⊑ right`, from `all(left)(right)`.
    Subset,
    /// `left ⊑ ¬right`, from `no(left)(right)`.
    Disjoint,
}

/// Subsumption fact read off a non-negated `all` or `no` statement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trigger {
    pub kind: TriggerKind,
    pub left: Term,
    pub right: Term,
    /// Index of the originating statement.
    pub source: usize,
}

impl Trigger {
    pub fn of(s: &Statement, source: usize) -> Option<Trigger> {
        if s.negated {
            return None;
        }
        let kind = match s.quantifier {
            Quantifier::A => TriggerKind::Subset,
            Quantifier::E => TriggerKind::Disjoint,
            _ => return None,
        };
        Some(Trigger { kind, left: s.subject.clone(), right: s.predicate.clone(), source })
    }
}

impl fmt::Display for Trigger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            TriggerKind::Subset => write!(f, "{} ⊑ {}", self.left, self.right),
            TriggerKind::Disjoint => write!(f, "{} ⊑ ¬{}", self.left, self.right),
        }
    }
}

pub fn triggers_of(kb: &KnowledgeBase) -> Vec<Trigger> {
    kb.statements().iter().enumerate().filter_map(|(i, s)| Trigger::of(s, i)).collect()
}

/// Justification of one statement: the rule and the indices of its premises.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ProofStep {
    pub rule: Rule,
    pub premises: Vec<usize>,
}

impl ProofStep {
    pub fn premise() -> ProofStep {
        ProofStep { rule: Rule::Premise, premises: Vec::new() }
    }
}

type Derived = (Statement, ProofStep);

/// Positive facts indexed by their terms.
struct FactIndex<'a> {
    facts: &'a [Statement],
    by_subject: HashMap<&'a Term, Vec<usize>>,
    by_predicate: HashMap<&'a Term, Vec<usize>>,
}

impl<'a> FactIndex<'a> {
    fn new(facts: &'a [Statement]) -> Self {
        let mut by_subject: HashMap<&Term, Vec<usize>> = HashMap::new();
        let mut by_predicate: HashMap<&Term, Vec<usize>> = HashMap::new();
        for (i, s) in facts.iter().enumerate().filter(|(_, s)| !s.negated) {
            by_subject.entry(&s.subject).or_default().push(i);
            by_predicate.entry(&s.predicate).or_default().push(i);
        }
        FactIndex { facts, by_subject, by_predicate }
    }

    fn with_subject(&self, t: &Term) -> impl Iterator<Item = (usize, &'a Statement)> + '_ {
        let facts = self.facts;
        self.by_subject.get(t).into_iter().flatten().map(move |&i| (i, &facts[i]))
    }

    fn with_predicate(&self, t: &Term) -> impl Iterator<Item = (usize, &'a Statement)> + '_ {
        let facts = self.facts;
        self.by_predicate.get(t).into_iter().flatten().map(move |&i| (i, &facts[i]))
    }
}

fn stmt(q: Quantifier, subject: &Term, predicate: &Term) -> Statement {
    Statement::new(q, subject.clone(), predicate.clone())
}

/// Applies every rule once to `facts`, skipping instances whose premises all
/// have index below `fresh_from`. Results come out in a fixed order: by
/// first-premise index, then rule.
fn apply_rules(sys: &QuantitySystem, facts: &[Statement], fresh_from: usize) -> Result<Vec<Derived>, AlgebraError> {
    let index = FactIndex::new(facts);
    let mut out = Vec::new();
    let mut emit = |s: Statement, rule: Rule, premises: Vec<usize>| {
        if premises.iter().any(|&p| p >= fresh_from) {
            out.push((s, ProofStep { rule, premises }));
        }
    };

    for (i, s) in facts.iter().enumerate() {
        if s.negated {
            let q = s.quantifier;
            let contradictory = sys.contradictory(q)?;
            emit(stmt(contradictory, &s.subject, &s.predicate), Rule::ContraNeg, vec![i]);
            for &weaker in sys.strengthenings(q)?.iter().filter(|&&w| w != q) {
                emit(s.with_quantifier(weaker), Rule::ChainE, vec![i]);
            }
            continue;
        }

        let q = s.quantifier;
        let (x, y) = (&s.subject, &s.predicate);

        // Binary rules where `s` is the first premise of its figure layout.
        match Trigger::of(s, i).map(|t| t.kind) {
            Some(TriggerKind::Subset) => {
                // s = all(β)(α)
                for (j, b) in index.with_predicate(x) {
                    if b.quantifier.is_affirmative() {
                        emit(stmt(b.quantifier, &b.subject, y), Rule::FirstA, vec![i, j]);
                    }
                }
                for (j, b) in index.with_predicate(y) {
                    if b.quantifier.is_negative() {
                        emit(stmt(b.quantifier, &b.subject, x), Rule::SecondA, vec![i, j]);
                    }
                }
            }
            Some(TriggerKind::Disjoint) => {
                // s = no(β)(α)
                for (j, b) in index.with_predicate(x) {
                    if b.quantifier.is_affirmative() {
                        emit(stmt(sys.contrary(b.quantifier)?, &b.subject, y), Rule::FirstE, vec![i, j]);
                    }
                }
                for (j, b) in index.with_predicate(y) {
                    if b.quantifier.is_affirmative() {
                        emit(stmt(sys.contrary(b.quantifier)?, &b.subject, x), Rule::SecondE, vec![i, j]);
                    }
                }
            }
            None => {}
        }

        // Third figure: s = q1(γ)(α), b = q2(γ)(β).
        let third_bound = if q.is_affirmative() { sys.mirror(q)? } else { sys.mirror(sys.contrary(q)?)? };
        for (j, b) in index.with_subject(x) {
            if b.quantifier.is_affirmative() && sys.implies(b.quantifier, third_bound)? {
                if q.is_affirmative() {
                    emit(stmt(Quantifier::I, &b.predicate, y), Rule::ThirdA, vec![i, j]);
                } else {
                    emit(stmt(Quantifier::O, &b.predicate, y), Rule::ThirdE, vec![i, j]);
                }
            }
        }

        // Fourth figure: s = q1(α)(β), b = q2(β)(γ).
        for (j, b) in index.with_subject(y) {
            let b_kind = Trigger::of(b, j).map(|t| t.kind);
            if q.is_affirmative() && b_kind == Some(TriggerKind::Subset) {
                emit(stmt(Quantifier::I, &b.predicate, x), Rule::FourthA, vec![i, j]);
            }
            if q == Quantifier::A && b_kind == Some(TriggerKind::Disjoint) {
                emit(stmt(Quantifier::E, &b.predicate, x), Rule::FourthAE, vec![i, j]);
            }
            if q == Quantifier::E && b.quantifier.is_affirmative() {
                emit(stmt(Quantifier::O, &b.predicate, x), Rule::FourthE, vec![i, j]);
            }
        }

        emit(s.with_quantifier(sys.contradictory(q)?).negate(), Rule::ContraPos, vec![i]);
        for &weaker in sys.weakenings(q)?.iter().filter(|&&w| w != q) {
            emit(s.with_quantifier(weaker), Rule::ChainA, vec![i]);
        }
    }
    Ok(out)
}

/// Every statement obtainable from the knowledge base by a single rule
/// application that is not already in it, once per distinct justification.
/// Premise indices refer to `kb.statements()`.
pub fn infer_once(kb: &KnowledgeBase) -> Result<Vec<Derived>, AlgebraError> {
    let mut seen = std::collections::HashSet::new();
    Ok(apply_rules(kb.system(), kb.statements(), 0)?
        .into_iter()
        .filter(|d| !kb.contains(&d.0) && seen.insert(d.clone()))
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub statement: Statement,
    pub step: ProofStep,
    pub alternates: Vec<ProofStep>,
}

/// A saturated statement set with one or more justifications per statement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Closure {
    system: QuantitySystem,
    entries: Vec<Entry>,
    index: HashMap<Statement, usize>,
    premise_count: usize,
    fixpoint_reached: bool,
    contradiction: Option<(usize, usize)>,
}

impl Closure {
    fn new(system: QuantitySystem) -> Closure {
        Closure {
            system,
            entries: Vec::new(),
            index: HashMap::new(),
            premise_count: 0,
            fixpoint_reached: false,
            contradiction: None,
        }
    }

    fn add(&mut self, statement: Statement, step: ProofStep) {
        match self.index.get(&statement) {
            Some(&at) => {
                let entry = &mut self.entries[at];
                let well_founded = step.premises.iter().all(|&p| p < at);
                if well_founded
                    && entry.alternates.len() < MAX_ALTERNATES
                    && entry.step != step
                    && !entry.alternates.contains(&step)
                {
                    entry.alternates.push(step);
                }
            }
            None => {
                self.index.insert(statement.clone(), self.entries.len());
                self.entries.push(Entry { statement, step, alternates: Vec::new() });
            }
        }
    }

    fn statements_vec(&self) -> Vec<Statement> {
        self.entries.iter().map(|e| e.statement.clone()).collect()
    }

    fn find_contradiction(&mut self) {
        self.contradiction = self.entries.iter().enumerate().find_map(|(i, e)| {
            let j = *self.index.get(&e.statement.negate())?;
            (j < i).then_some(if e.statement.negated { (j, i) } else { (i, j) })
        });
    }

    pub fn system(&self) -> &QuantitySystem {
        &self.system
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn statements(&self) -> impl Iterator<Item = &Statement> {
        self.entries.iter().map(|e| &e.statement)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of leading entries that are input premises.
    pub fn premise_count(&self) -> usize {
        self.premise_count
    }

    pub fn fixpoint_reached(&self) -> bool {
        self.fixpoint_reached
    }

    pub fn contains(&self, s: &Statement) -> bool {
        self.index.contains_key(s)
    }

    pub fn position(&self, s: &Statement) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn inconsistent(&self) -> bool {
        self.contradiction.is_some()
    }

    /// The first pair `(s, ~s)` found in the closure, if any.
    pub fn contradiction(&self) -> Option<(&Statement, &Statement)> {
        self.contradiction.map(|(p, n)| (&self.entries[p].statement, &self.entries[n].statement))
    }

    /// Smallest proof tree built from the recorded justifications. Among
    /// trees of equal size, one ending in a chain weakening wins.
    pub fn proof(&self, goal: &Statement) -> Option<ProofTree> {
        let target = self.position(goal)?;
        let mut size = vec![0usize; target + 1];
        let mut choice: Vec<&ProofStep> = Vec::with_capacity(target + 1);
        for (i, entry) in self.entries[..=target].iter().enumerate() {
            let best = std::iter::once(&entry.step)
                .chain(&entry.alternates)
                .min_by_key(|step| {
                    let nodes = 1 + step.premises.iter().map(|&p| size[p]).sum::<usize>();
                    (nodes, !matches!(step.rule, Rule::ChainA | Rule::ChainE))
                })
                .expect("entry has a step");
            size[i] = 1 + best.premises.iter().map(|&p| size[p]).sum::<usize>();
            choice.push(best);
        }
        Some(self.proof_at(target, &choice))
    }

    fn proof_at(&self, i: usize, choice: &[&ProofStep]) -> ProofTree {
        ProofTree {
            statement: self.entries[i].statement.clone(),
            rule: choice[i].rule,
            children: choice[i].premises.iter().map(|&p| self.proof_at(p, choice)).collect(),
        }
    }

    /// Statements that must be false once `derived` holds: the negation of
    /// every quantifier at least as strong as the contradictory of its
    /// quantifier, over the same terms.
    pub fn metaresult(&self, derived: &Statement) -> Result<Vec<Statement>, EngineError> {
        if derived.negated {
            return Err(EngineError::NegatedStatement(derived.clone()));
        }
        if !self.contains(derived) {
            return Err(EngineError::NotInClosure(derived.clone()));
        }
        let contradictory = self.system.contradictory(derived.quantifier)?;
        Ok(self.system.strengthenings(contradictory)?.iter().map(|&q| derived.with_quantifier(q).negate()).collect())
    }

    /// The metaresult as justified statements, each citing `derived`.
    pub fn metaresult_steps(&self, derived: &Statement) -> Result<Vec<Derived>, EngineError> {
        let at = self.position(derived);
        let out = self.metaresult(derived)?;
        let premises = at.into_iter().collect::<Vec<_>>();
        Ok(out.into_iter().map(|s| (s, ProofStep { rule: Rule::Meta, premises: premises.clone() })).collect())
    }
}

/// Saturation driver with an optional cap on the closure size.
#[derive(Debug, Clone, Copy, Default)]
pub struct Saturator {
    max_steps: Option<usize>,
}

impl Saturator {
    pub fn new() -> Self {
        Saturator::default()
    }

    pub fn max_steps(mut self, limit: Option<usize>) -> Self {
        self.max_steps = limit;
        self
    }

    pub fn run(&self, kb: &KnowledgeBase) -> Result<Closure, EngineError> {
        let mut closure = Closure::new(*kb.system());
        for s in kb.statements() {
            closure.add(s.clone(), ProofStep::premise());
        }
        closure.premise_count = closure.len();
        let mut fresh_from = 0;
        loop {
            if let Some(limit) = self.max_steps {
                if closure.len() > limit {
                    closure.find_contradiction();
                    return Err(EngineError::StepLimitExceeded { limit, partial: Box::new(closure) });
                }
            }
            let before = closure.len();
            let facts = closure.statements_vec();
            for (s, step) in apply_rules(kb.system(), &facts, fresh_from)? {
                closure.add(s, step);
            }
            if closure.len() == before {
                break;
            }
            fresh_from = before;
        }
        closure.fixpoint_reached = true;
        closure.find_contradiction();
        Ok(closure)
    }
}

/// Least fixpoint of [`infer_once`] containing the knowledge base.
pub fn saturate(kb: &KnowledgeBase) -> Closure {
    Saturator::new().run(kb).expect("knowledge-base quantifiers are checked on insertion")
}

/// Proof tree for `goal`, or `None` if it is not in the closure.
pub fn prove(kb: &KnowledgeBase, goal: &Statement) -> Option<ProofTree> {
    saturate(kb).proof(goal)
}

pub fn metaresult(kb: &KnowledgeBase, derived: &Statement) -> Result<Vec<Statement>, EngineError> {
    saturate(kb).metaresult(derived)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofTree {
    pub statement: Statement,
    pub rule: Rule,
    pub children: Vec<ProofTree>,
}

impl ProofTree {
    pub fn depth(&self) -> usize {
        1 + self.children.iter().map(ProofTree::depth).max().unwrap_or(0)
    }

    /// Every rule used, root first, depth-first.
    pub fn rules(&self) -> Vec<Rule> {
        let mut out = vec![self.rule];
        for c in &self.children {
            out.extend(c.rules());
        }
        out
    }

    fn write_indented(&self, out: &mut String, depth: usize) {
        out.push_str(&"  ".repeat(depth));
        out.push_str(&format!("{}  [{}]\n", self.statement, self.rule));
        for c in &self.children {
            c.write_indented(out, depth + 1);
        }
    }

    pub fn pretty(&self) -> String {
        let mut out = String::new();
        self.write_indented(&mut out, 0);
        out
    }
}
