//! Finite-model semantics and exhaustive model search.
//!
//! A statement `q(X)(Y)` is judged on the ratio `r = |X ∩ Y| / |X|` against a
//! threshold `f` with `1/2 < f < 1`:
//!
//! | letter | holds when | letter | holds when |
//! |--------|------------|--------|------------|
//! | A      | r = 1      | E      | r = 0      |
//! | P      | r > f      | B      | r < 1 − f  |
//! | T      | r > 1/2    | D      | r ≤ 1/2    |
//! | K      | r ≥ 1 − f  | G      | r ≤ f      |
//! | I      | r > 0      | O      | r < 1      |
//!
//! Every named term gets a nonempty extension, so `r` is always defined and
//! each statement carries existential import for its subject and predicate.
//! Models are enumerated by increasing universe size, then by extension bit
//! patterns in increasing order, the first-mentioned term varying slowest.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{Quantifier, QuantitySystem};
use crate::engine::saturate;
use crate::syntax::{KnowledgeBase, Statement, Term};

/// Largest universe that fits the bitmask representation.
pub const MAX_UNIVERSE: usize = 16;
/// Default bound on distinct terms for exhaustive search.
pub const DEFAULT_MAX_TERMS: usize = 4;
pub const DEFAULT_MAX_UNIVERSE: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("threshold {0} must lie strictly between 1/2 and 1")]
    InvalidThreshold(String),
    #[error("universe size must be between 1 and {MAX_UNIVERSE}, got {0}")]
    InvalidUniverse(usize),
    #[error("term `{0}` has no extension in the model")]
    UnknownTerm(Term),
    #[error("term `{0}` needs a nonempty extension")]
    EmptyExtension(Term),
    #[error("element {element} is outside a universe of size {size}")]
    OutOfUniverse { element: usize, size: usize },
    #[error("{found} distinct terms exceed the enumeration bound of {limit}")]
    TooManyTerms { found: usize, limit: usize },
}

/// Fractional-threshold semantics for the ten quantifiers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Semantics {
    threshold: Ratio<u64>,
}

impl Default for Semantics {
    fn default() -> Self {
        Semantics { threshold: Ratio::new(3, 4) }
    }
}

impl Semantics {
    pub fn new(threshold: Ratio<u64>) -> Result<Semantics, ModelError> {
        if threshold > Ratio::new(1, 2) && threshold < Ratio::from_integer(1) {
            Ok(Semantics { threshold })
        } else {
            Err(ModelError::InvalidThreshold(threshold.to_string()))
        }
    }

    pub fn threshold(&self) -> Ratio<u64> {
        self.threshold
    }

    /// Truth of `q(X)(Y)` given `|X ∩ Y|` and a nonzero `|X|`.
    pub fn holds(&self, q: Quantifier, overlap: u64, size: u64) -> bool {
        let (num, den) = (*self.threshold.numer(), *self.threshold.denom());
        let scaled = overlap * den;
        match q {
            Quantifier::A => overlap == size,
            Quantifier::P => scaled > num * size,
            Quantifier::T => 2 * overlap > size,
            Quantifier::K => scaled >= (den - num) * size,
            Quantifier::I => overlap > 0,
            Quantifier::E => overlap == 0,
            Quantifier::B => scaled < (den - num) * size,
            Quantifier::D => 2 * overlap <= size,
            Quantifier::G => scaled <= num * size,
            Quantifier::O => overlap < size,
        }
    }
}

impl FromStr for Semantics {
    type Err = ModelError;

    /// Parses `P/Q`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let ratio = s.trim().parse::<Ratio<u64>>().map_err(|_| ModelError::InvalidThreshold(s.to_string()))?;
        Semantics::new(ratio)
    }
}

/// A universe `{0, …, m−1}` with a nonempty extension per term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteModel {
    universe_size: usize,
    extensions: Vec<(Term, u32)>,
}

impl FiniteModel {
    pub fn new(universe_size: usize) -> Result<FiniteModel, ModelError> {
        if universe_size == 0 || universe_size > MAX_UNIVERSE {
            return Err(ModelError::InvalidUniverse(universe_size));
        }
        Ok(FiniteModel { universe_size, extensions: Vec::new() })
    }

    /// Sets (or replaces) the extension of `term`.
    pub fn with(mut self, term: Term, members: &[usize]) -> Result<FiniteModel, ModelError> {
        let mut mask = 0u32;
        for &element in members {
            if element >= self.universe_size {
                return Err(ModelError::OutOfUniverse { element, size: self.universe_size });
            }
            mask |= 1 << element;
        }
        if mask == 0 {
            return Err(ModelError::EmptyExtension(term));
        }
        match self.extensions.iter_mut().find(|(t, _)| *t == term) {
            Some(slot) => slot.1 = mask,
            None => self.extensions.push((term, mask)),
        }
        Ok(self)
    }

    pub fn universe_size(&self) -> usize {
        self.universe_size
    }

    pub fn terms(&self) -> impl Iterator<Item = &Term> {
        self.extensions.iter().map(|(t, _)| t)
    }

    fn mask(&self, term: &Term) -> Result<u32, ModelError> {
        self.extensions
            .iter()
            .find(|(t, _)| t == term)
            .map(|&(_, m)| m)
            .ok_or_else(|| ModelError::UnknownTerm(term.clone()))
    }

    pub fn extension(&self, term: &Term) -> Option<Vec<usize>> {
        let mask = self.mask(term).ok()?;
        Some((0..self.universe_size).filter(|i| mask & (1 << i) != 0).collect())
    }
}

impl fmt::Display for FiniteModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m={}", self.universe_size)?;
        for (term, _) in &self.extensions {
            let members: Vec<String> = self.extension(term).unwrap_or_default().iter().map(usize::to_string).collect();
            write!(f, "; {} = {{{}}}", term, members.join(", "))?;
        }
        Ok(())
    }
}

pub fn eval(model: &FiniteModel, s: &Statement, sem: &Semantics) -> Result<bool, ModelError> {
    let x = model.mask(&s.subject)?;
    let y = model.mask(&s.predicate)?;
    Ok(truth(sem, s.negated, s.quantifier, x, y))
}

fn truth(sem: &Semantics, negated: bool, q: Quantifier, x: u32, y: u32) -> bool {
    let overlap = (x & y).count_ones() as u64;
    let size = x.count_ones() as u64;
    sem.holds(q, overlap, size) != negated
}

/// A statement with its terms replaced by positions in a term list.
#[derive(Debug, Clone, Copy)]
struct Compiled {
    negated: bool,
    quantifier: Quantifier,
    subject: usize,
    predicate: usize,
}

impl Compiled {
    fn truth(&self, sem: &Semantics, masks: &[u32]) -> bool {
        truth(sem, self.negated, self.quantifier, masks[self.subject], masks[self.predicate])
    }
}

/// Collects terms in first-mention order and compiles the statements.
fn compile<'a>(statements: impl IntoIterator<Item = &'a Statement>) -> (Vec<Term>, Vec<Compiled>) {
    let mut terms: Vec<Term> = Vec::new();
    let mut position = |t: &Term| match terms.iter().position(|u| u == t) {
        Some(i) => i,
        None => {
            terms.push(t.clone());
            terms.len() - 1
        }
    };
    let compiled = statements
        .into_iter()
        .map(|s| Compiled {
            negated: s.negated,
            quantifier: s.quantifier,
            subject: position(&s.subject),
            predicate: position(&s.predicate),
        })
        .collect();
    (terms, compiled)
}

/// Visits every assignment of nonempty extensions to `terms` terms, over
/// universes of size 1..=max_universe, in the documented order. Stops early
/// when `visit` returns true and reports the stopping point.
fn search_models(
    terms: usize,
    max_universe: usize,
    mut visit: impl FnMut(usize, &[u32]) -> bool,
) -> Option<(usize, Vec<u32>)> {
    for m in 1..=max_universe {
        let full = (1u32 << m) - 1;
        let mut masks = vec![1u32; terms];
        'models: loop {
            if visit(m, &masks) {
                return Some((m, masks));
            }
            // Odometer: the last term varies fastest.
            for k in (0..terms).rev() {
                if masks[k] < full {
                    masks[k] += 1;
                    continue 'models;
                }
                masks[k] = 1;
            }
            break;
        }
    }
    None
}

/// Bounded exhaustive model search.
#[derive(Debug, Clone, Copy)]
pub struct ModelSearch {
    pub semantics: Semantics,
    pub max_universe: usize,
    pub max_terms: usize,
}

impl Default for ModelSearch {
    fn default() -> Self {
        ModelSearch {
            semantics: Semantics::default(),
            max_universe: DEFAULT_MAX_UNIVERSE,
            max_terms: DEFAULT_MAX_TERMS,
        }
    }
}

impl ModelSearch {
    pub fn new(semantics: Semantics, max_universe: usize) -> ModelSearch {
        ModelSearch { semantics, max_universe, ..ModelSearch::default() }
    }

    fn check_bounds(&self, terms: usize) -> Result<(), ModelError> {
        if self.max_universe == 0 || self.max_universe > MAX_UNIVERSE {
            return Err(ModelError::InvalidUniverse(self.max_universe));
        }
        if terms > self.max_terms {
            return Err(ModelError::TooManyTerms { found: terms, limit: self.max_terms });
        }
        Ok(())
    }

    /// First model (in enumeration order) where every premise holds and the
    /// conclusion fails.
    pub fn countermodel(
        &self,
        premises: &[Statement],
        conclusion: &Statement,
    ) -> Result<Option<FiniteModel>, ModelError> {
        let (terms, compiled) = compile(premises.iter().chain(std::iter::once(conclusion)));
        self.check_bounds(terms.len())?;
        let (goal, assumptions) = compiled.split_last().expect("conclusion is always compiled");
        let sem = self.semantics;
        let found = search_models(terms.len(), self.max_universe, |_, masks| {
            assumptions.iter().all(|p| p.truth(&sem, masks)) && !goal.truth(&sem, masks)
        });
        Ok(found.map(|(m, masks)| FiniteModel { universe_size: m, extensions: terms.into_iter().zip(masks).collect() }))
    }

    pub fn entails(&self, premises: &[Statement], conclusion: &Statement) -> Result<bool, ModelError> {
        Ok(self.countermodel(premises, conclusion)?.is_none())
    }

    /// For each candidate, whether the premises entail it. One pass over the
    /// model space serves every candidate.
    pub fn entailed(&self, premises: &[Statement], candidates: &[Statement]) -> Result<Vec<bool>, ModelError> {
        let (terms, compiled) = compile(premises.iter().chain(candidates));
        self.check_bounds(terms.len())?;
        let (assumptions, goals) = compiled.split_at(premises.len());
        let sem = self.semantics;
        let mut valid = vec![true; goals.len()];
        search_models(terms.len(), self.max_universe, |_, masks| {
            if assumptions.iter().all(|p| p.truth(&sem, masks)) {
                for (ok, goal) in valid.iter_mut().zip(goals) {
                    if *ok && !goal.truth(&sem, masks) {
                        *ok = false;
                    }
                }
            }
            false
        });
        Ok(valid)
    }
}

/// True iff no model up to `max_universe` makes every premise true and the
/// conclusion false.
pub fn entails(
    premises: &[Statement],
    conclusion: &Statement,
    sem: &Semantics,
    max_universe: usize,
) -> Result<bool, ModelError> {
    ModelSearch::new(*sem, max_universe).entails(premises, conclusion)
}

pub fn find_countermodel(
    premises: &[Statement],
    conclusion: &Statement,
    sem: &Semantics,
    max_universe: usize,
) -> Result<Option<FiniteModel>, ModelError> {
    ModelSearch::new(*sem, max_universe).countermodel(premises, conclusion)
}

/// The four ways two premises can share their middle term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Figure {
    First,
    Second,
    Third,
    Fourth,
}

/// Term roles in the figure layouts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Role {
    Alpha,
    Beta,
    Gamma,
}

impl Role {
    fn term(self) -> Term {
        let name = match self {
            Role::Alpha => "Alpha",
            Role::Beta => "Beta",
            Role::Gamma => "Gamma",
        };
        Term::new(name).expect("role names are valid terms")
    }
}

impl Figure {
    pub const ALL: [Figure; 4] = [Figure::First, Figure::Second, Figure::Third, Figure::Fourth];

    pub fn from_number(n: u8) -> Option<Figure> {
        Figure::ALL.get((n as usize).checked_sub(1)?).copied()
    }

    pub fn number(self) -> u8 {
        self as u8 + 1
    }

    /// (subject, predicate) of the first premise, second premise and
    /// conclusion.
    fn layout(self) -> [(Role, Role); 3] {
        use Role::*;
        match self {
            Figure::First => [(Beta, Alpha), (Gamma, Beta), (Gamma, Alpha)],
            Figure::Second => [(Beta, Alpha), (Gamma, Alpha), (Gamma, Beta)],
            Figure::Third => [(Gamma, Alpha), (Gamma, Beta), (Beta, Alpha)],
            Figure::Fourth => [(Alpha, Beta), (Beta, Gamma), (Gamma, Alpha)],
        }
    }

    /// The concrete statements of a mood in this figure.
    pub fn instantiate(self, first: Quantifier, second: Quantifier, conclusion: Quantifier) -> [Statement; 3] {
        let [p1, p2, c] = self.layout();
        let make = |q, (s, p): (Role, Role)| Statement::new(q, s.term(), p.term());
        [make(first, p1), make(second, p2), make(conclusion, c)]
    }
}

impl fmt::Display for Figure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoodRow {
    pub figure: Figure,
    pub first: Quantifier,
    pub second: Quantifier,
    pub conclusion: Quantifier,
    pub valid: bool,
    pub derivable: bool,
}

impl MoodRow {
    pub fn mismatch(&self) -> bool {
        self.valid != self.derivable
    }

    pub fn to_csv(&self) -> String {
        format!("{},{},{},{},{},{}", self.figure, self.first, self.second, self.conclusion, self.valid, self.derivable)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoodTable {
    pub system: QuantitySystem,
    pub figure: Figure,
    pub rows: Vec<MoodRow>,
}

impl MoodTable {
    pub const CSV_HEADER: &'static str = "figure,q_p1,q_p2,q_c,valid,derivable";

    pub fn row(&self, first: Quantifier, second: Quantifier, conclusion: Quantifier) -> Option<&MoodRow> {
        self.rows.iter().find(|r| r.first == first && r.second == second && r.conclusion == conclusion)
    }

    /// Rows derivable by the engine but not semantically valid.
    pub fn unsound_rows(&self) -> impl Iterator<Item = &MoodRow> {
        self.rows.iter().filter(|r| r.derivable && !r.valid)
    }

    /// Rows semantically valid but not derivable.
    pub fn underivable_rows(&self) -> impl Iterator<Item = &MoodRow> {
        self.rows.iter().filter(|r| r.valid && !r.derivable)
    }

    pub fn sound(&self) -> bool {
        self.unsound_rows().next().is_none()
    }

    pub fn complete(&self) -> bool {
        self.underivable_rows().next().is_none()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(Self::CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            out.push_str(&r.to_csv());
            out.push('\n');
        }
        out
    }

    /// Aligned text table; rows where the two flags disagree are marked `*`.
    pub fn to_text(&self) -> String {
        let width = self.system.quantifiers().map(|q| q.surface_name().len()).max().unwrap_or(4).max(4);
        let mut out = format!(
            "{:<6}  {:<w$}  {:<w$}  {:<w$}  {:<5}  {:<9}  {}\n",
            "figure",
            "q_p1",
            "q_p2",
            "q_c",
            "valid",
            "derivable",
            "mismatch",
            w = width
        );
        for r in &self.rows {
            out.push_str(&format!(
                "{:<6}  {:<w$}  {:<w$}  {:<w$}  {:<5}  {:<9}  {}\n",
                r.figure.to_string(),
                r.first.surface_name(),
                r.second.surface_name(),
                r.conclusion.surface_name(),
                r.valid,
                r.derivable,
                if r.mismatch() { "*" } else { "" },
                w = width
            ));
        }
        out
    }
}

/// Compares semantic validity with engine derivability for every mood of a
/// figure: all premise pairs of the system times every conclusion
/// quantifier.
pub fn enumerate_valid_moods(
    sys: &QuantitySystem,
    figure: Figure,
    sem: &Semantics,
    max_universe: usize,
) -> Result<MoodTable, ModelError> {
    let search = ModelSearch::new(*sem, max_universe);
    search.check_bounds(3)?;
    let quantifiers: Vec<Quantifier> = sys.quantifiers().collect();
    let pairs: Vec<(Quantifier, Quantifier)> =
        quantifiers.iter().flat_map(|&a| quantifiers.iter().map(move |&b| (a, b))).collect();

    let blocks: Vec<Vec<MoodRow>> = pairs
        .par_iter()
        .map(|&(first, second)| {
            let moods: Vec<[Statement; 3]> =
                quantifiers.iter().map(|&c| figure.instantiate(first, second, c)).collect();
            let premises = [moods[0][0].clone(), moods[0][1].clone()];
            let candidates: Vec<Statement> = moods.iter().map(|m| m[2].clone()).collect();
            let valid = search.entailed(&premises, &candidates)?;
            let kb = KnowledgeBase::from_statements(*sys, premises.iter().cloned())
                .expect("mood quantifiers come from the system");
            let closure = saturate(&kb);
            Ok(quantifiers
                .iter()
                .zip(candidates.iter().zip(valid))
                .map(|(&conclusion, (goal, valid))| MoodRow {
                    figure,
                    first,
                    second,
                    conclusion,
                    valid,
                    derivable: closure.contains(goal),
                })
                .collect())
        })
        .collect::<Result<_, ModelError>>()?;

    Ok(MoodTable { system: *sys, figure, rows: blocks.into_iter().flatten().collect() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse;
    use Quantifier::*;

    fn st(text: &str) -> Statement {
        parse(text, &QuantitySystem::five()).unwrap()
    }

    fn t(s: &str) -> Term {
        Term::new(s).unwrap()
    }

    #[test]
    fn threshold_bounds() {
        assert!(Semantics::new(Ratio::new(1, 2)).is_err());
        assert!(Semantics::new(Ratio::new(1, 1)).is_err());
        assert!(Semantics::new(Ratio::new(2, 3)).is_ok());
        assert_eq!("3/4".parse::<Semantics>().unwrap(), Semantics::default());
        assert!("abc".parse::<Semantics>().is_err());
        assert!("1/3".parse::<Semantics>().is_err());
    }

    #[test]
    fn eval_examples() {
        let sem = Semantics::default();
        let m = FiniteModel::new(3).unwrap().with(t("X"), &[0, 1, 2]).unwrap().with(t("Y"), &[0, 1, 2]).unwrap();
        assert!(eval(&m, &st("all(X)(Y)"), &sem).unwrap());

        let m = FiniteModel::new(3).unwrap().with(t("X"), &[0, 1, 2]).unwrap().with(t("Y"), &[0, 1]).unwrap();
        assert!(eval(&m, &st("most(X)(Y)"), &sem).unwrap());
        assert!(!eval(&m, &st("almost_all(X)(Y)"), &sem).unwrap());

        let m = FiniteModel::new(4).unwrap().with(t("X"), &[0, 1]).unwrap().with(t("Y"), &[2, 3]).unwrap();
        assert!(!eval(&m, &st("some(X)(Y)"), &sem).unwrap());
        assert!(eval(&m, &st("~some(X)(Y)"), &sem).unwrap());
        assert_eq!(eval(&m, &st("all(X)(Z)"), &sem), Err(ModelError::UnknownTerm(t("Z"))));
    }

    #[test]
    fn ties_at_one_half() {
        // r = 1/2 exactly: not most, but most_not.
        let sem = Semantics::default();
        let m = FiniteModel::new(2).unwrap().with(t("X"), &[0, 1]).unwrap().with(t("Y"), &[0]).unwrap();
        assert!(!eval(&m, &st("most(X)(Y)"), &sem).unwrap());
        assert!(eval(&m, &st("most_not(X)(Y)"), &sem).unwrap());
        assert!(eval(&m, &st("many(X)(Y)"), &sem).unwrap());
        assert!(eval(&m, &st("many_not(X)(Y)"), &sem).unwrap());
    }

    #[test]
    fn model_construction_errors() {
        assert_eq!(FiniteModel::new(0), Err(ModelError::InvalidUniverse(0)));
        let m = FiniteModel::new(2).unwrap();
        assert_eq!(m.clone().with(t("X"), &[]), Err(ModelError::EmptyExtension(t("X"))));
        assert_eq!(m.with(t("X"), &[2]), Err(ModelError::OutOfUniverse { element: 2, size: 2 }));
    }

    #[test]
    fn entailment_examples() {
        let sem = Semantics::default();
        assert!(entails(&[st("all(M)(P)"), st("all(S)(M)")], &st("all(S)(P)"), &sem, 5).unwrap());
        assert!(!entails(&[st("all(X)(Y)")], &st("all(Y)(X)"), &sem, 5).unwrap());
        assert!(entails(&[st("most(G)(A)"), st("most(G)(B)")], &st("some(B)(A)"), &sem, 5).unwrap());
        assert!(!entails(&[st("most(G)(A)"), st("many(G)(B)")], &st("some(B)(A)"), &sem, 5).unwrap());
    }

    #[test]
    fn countermodel_examples() {
        let sem = Semantics::default();
        assert_eq!(find_countermodel(&[st("all(M)(P)"), st("all(S)(M)")], &st("all(S)(P)"), &sem, 5), Ok(None));

        let cm = find_countermodel(&[st("all(X)(Y)")], &st("all(Y)(X)"), &sem, 5).unwrap().unwrap();
        assert_eq!(cm.universe_size(), 2);
        assert_eq!(cm.extension(&t("X")), Some(vec![0]));
        assert_eq!(cm.extension(&t("Y")), Some(vec![0, 1]));

        let cm = find_countermodel(&[st("some(X)(Y)")], &st("all(X)(Y)"), &sem, 5).unwrap().unwrap();
        assert_eq!(cm.to_string(), "m=2; X = {0, 1}; Y = {0}");

        assert_eq!(find_countermodel(&[], &st("some(X)(X)"), &sem, 5), Ok(None));
    }

    #[test]
    fn search_bounds() {
        let sem = Semantics::default();
        let premises = [st("all(A)(B)"), st("all(C)(D)")];
        assert_eq!(entails(&premises, &st("all(A)(E)"), &sem, 3), Err(ModelError::TooManyTerms { found: 5, limit: 4 }));
        assert_eq!(entails(&premises, &st("all(A)(B)"), &sem, 0), Err(ModelError::InvalidUniverse(0)));
    }

    #[test]
    fn enumeration_visits_every_model_once() {
        for m in 1..=4usize {
            let mut seen = std::collections::HashSet::new();
            search_models(2, m, |size, masks| {
                assert!(masks.iter().all(|&x| x != 0 && x < (1 << size)));
                assert!(seen.insert((size, masks.to_vec())));
                false
            });
            let expected: usize = (1..=m).map(|k| ((1usize << k) - 1).pow(2)).sum();
            assert_eq!(seen.len(), expected);
        }
    }

    #[test]
    fn batched_entailment_agrees_with_single_queries() {
        let search = ModelSearch::default();
        let premises = [st("no(B)(A)"), st("almost_all(G)(B)")];
        let candidates: Vec<Statement> =
            QuantitySystem::five().quantifiers().map(|q| Statement::new(q, t("G"), t("A"))).collect();
        let batched = search.entailed(&premises, &candidates).unwrap();
        for (c, b) in candidates.iter().zip(batched) {
            assert_eq!(search.entails(&premises, c).unwrap(), b, "{c}");
        }
    }

    #[test]
    fn figure_layouts() {
        let [p1, p2, c] = Figure::Fourth.instantiate(A, E, E);
        assert_eq!(p1.to_string(), "all(Alpha)(Beta)");
        assert_eq!(p2.to_string(), "no(Beta)(Gamma)");
        assert_eq!(c.to_string(), "no(Gamma)(Alpha)");
        assert_eq!(Figure::from_number(3), Some(Figure::Third));
        assert_eq!(Figure::from_number(0), None);
        assert_eq!(Figure::from_number(5), None);
    }

    #[test]
    fn two_system_figure_one_table() {
        let two = QuantitySystem::two();
        let table = enumerate_valid_moods(&two, Figure::First, &Semantics::default(), 5).unwrap();
        assert_eq!(table.rows.len(), 4 * 4 * 4);
        let barbara = table.row(A, A, A).unwrap();
        assert!(barbara.valid && barbara.derivable);
        assert!(table.rows.iter().all(|r| r.first != T && r.second != T));
        assert!(table.to_csv().starts_with("figure,q_p1,q_p2,q_c,valid,derivable\n1,all,all,all,true,true\n"));
    }

    #[test]
    fn five_system_figure_one_negative_row() {
        let five = QuantitySystem::five();
        let table = enumerate_valid_moods(&five, Figure::First, &Semantics::default(), 5).unwrap();
        assert!(table.row(E, P, B).unwrap().derivable);
        assert!(!table.row(E, P, E).unwrap().derivable);
        assert!(!table.row(E, P, E).unwrap().valid);
        assert!(table.sound());
    }
}
