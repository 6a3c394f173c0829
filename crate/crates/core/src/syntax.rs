//! Concrete syntax for quantified propositions.
//!
//! A statement is written `['~'] quantifier '(' Term ')' '(' Term ')'`, for
//! example `~all(Men)(Astronauts)`. Terms start with an uppercase Roman letter
//! and continue with Roman letters, digits or underscores. Knowledge-base
//! files hold one statement per line; `#` starts a comment line.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraError, Quantifier, QuantitySystem};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("bad term `{0}`: terms start with an uppercase letter and contain only letters, digits or `_`")]
    BadTerm(String),
    #[error("expected a quantifier at column {0}")]
    ExpectedQuantifier(usize),
    #[error(transparent)]
    Quantifier(#[from] AlgebraError),
    #[error("malformed delimiters at column {column}: {detail}")]
    MalformedDelimiters { column: usize, detail: &'static str },
    #[error("negation may appear at most once")]
    RepeatedNegation,
    #[error("unexpected trailing input `{0}`")]
    TrailingGarbage(String),
}

/// A subject or predicate name.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Term(String);

impl Term {
    pub fn new(text: impl Into<String>) -> Result<Term, ParseError> {
        let text = text.into();
        if is_term(&text) {
            Ok(Term(text))
        } else {
            Err(ParseError::BadTerm(text))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

fn is_term(text: &str) -> bool {
    let mut chars = text.chars();
    match chars.next() {
        Some(c) if c.is_ascii_uppercase() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl TryFrom<String> for Term {
    type Error = ParseError;
    fn try_from(value: String) -> Result<Self, Self::Error> {
        Term::new(value)
    }
}

impl From<Term> for String {
    fn from(term: Term) -> String {
        term.0
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// An optionally negated proposition `q(subject)(predicate)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Statement {
    pub negated: bool,
    pub quantifier: Quantifier,
    pub subject: Term,
    pub predicate: Term,
}

impl Statement {
    pub fn new(quantifier: Quantifier, subject: Term, predicate: Term) -> Statement {
        Statement { negated: false, quantifier, subject, predicate }
    }

    pub fn negated(quantifier: Quantifier, subject: Term, predicate: Term) -> Statement {
        Statement { negated: true, quantifier, subject, predicate }
    }

    /// Same statement with the other sign.
    pub fn negate(&self) -> Statement {
        Statement { negated: !self.negated, ..self.clone() }
    }

    pub fn with_quantifier(&self, quantifier: Quantifier) -> Statement {
        Statement { quantifier, ..self.clone() }
    }

    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            f.write_str("~")?;
        }
        write!(f, "{}({})({})", self.quantifier.surface_name(), self.subject, self.predicate)
    }
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn column(&self) -> usize {
        self.text[..self.pos].chars().count() + 1
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &'a str {
        let rest = &self.text[self.pos..];
        let len = rest.find(|c: char| !pred(c)).unwrap_or(rest.len());
        self.pos += len;
        &rest[..len]
    }

    fn bracketed_term(&mut self) -> Result<Term, ParseError> {
        self.skip_ws();
        if !self.eat('(') {
            return Err(ParseError::MalformedDelimiters { column: self.column(), detail: "expected `(`" });
        }
        let column = self.column();
        let inner = self.take_while(|c| c != ')' && c != '(');
        if !self.eat(')') {
            return Err(ParseError::MalformedDelimiters {
                column: self.column(),
                detail: if self.peek() == Some('(') { "nested `(`" } else { "missing `)`" },
            });
        }
        let inner = inner.trim();
        if inner.is_empty() {
            return Err(ParseError::MalformedDelimiters { column, detail: "empty brackets" });
        }
        Term::new(inner)
    }
}

/// Parses a single statement, checking its quantifier against `sys`.
pub fn parse(text: &str, sys: &QuantitySystem) -> Result<Statement, ParseError> {
    let mut cur = Cursor { text, pos: 0 };
    cur.skip_ws();
    let negated = cur.eat('~');
    cur.skip_ws();
    if negated && cur.peek() == Some('~') {
        return Err(ParseError::RepeatedNegation);
    }
    let column = cur.column();
    let token = cur.take_while(|c| !c.is_whitespace() && c != '(' && c != ')' && c != '~');
    if token.is_empty() {
        return Err(ParseError::ExpectedQuantifier(column));
    }
    // Letters are accepted by `lookup` but not in the concrete syntax.
    if !token.starts_with(|c: char| c.is_ascii_lowercase()) {
        return Err(AlgebraError::UnknownQuantifier(token.to_string()).into());
    }
    let quantifier = sys.lookup(token)?;
    let subject = cur.bracketed_term()?;
    let predicate = cur.bracketed_term()?;
    cur.skip_ws();
    if cur.pos < text.len() {
        return Err(ParseError::TrailingGarbage(text[cur.pos..].trim_end().to_string()));
    }
    Ok(Statement { negated, quantifier, subject, predicate })
}

/// Categories of the categorial grammar: primitives `Pr`, `Pp` and
/// right-slash functors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Category {
    /// Term (noun or predicate).
    Pr,
    /// Proposition.
    Pp,
    /// `result / argument`, consuming an argument on its right.
    Over(Box<Category>, Box<Category>),
}

impl Category {
    pub fn over(result: Category, argument: Category) -> Category {
        Category::Over(Box::new(result), Box::new(argument))
    }

    /// `(Pp/Pr)/Pr`, assigned to every quantifier.
    pub fn quantifier() -> Category {
        Category::over(Category::over(Category::Pp, Category::Pr), Category::Pr)
    }

    /// `Pp/Pp`, assigned to the negation sign.
    pub fn negation() -> Category {
        Category::over(Category::Pp, Category::Pp)
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Category::Pr => f.write_str("Pr"),
            Category::Pp => f.write_str("Pp"),
            Category::Over(result, argument) => {
                match **result {
                    Category::Over(..) => write!(f, "({result})")?,
                    _ => write!(f, "{result}")?,
                }
                f.write_str("/")?;
                match **argument {
                    Category::Over(..) => write!(f, "({argument})"),
                    _ => write!(f, "{argument}"),
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TypeError {
    #[error("`{functor}` of category {category} is not a functor")]
    NotAFunctor { functor: String, category: Category },
    #[error("`{functor}` expects {expected} but `{argument}` has category {found}")]
    ArgumentMismatch { functor: String, argument: String, expected: Category, found: Category },
    #[error("derivation ends in {0}, not Pp")]
    NotAProposition(Category),
}

/// Binary derivation tree built by forward application only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Derivation {
    Leaf { token: String, category: Category },
    Apply { functor: Box<Derivation>, argument: Box<Derivation>, category: Category },
}

impl Derivation {
    pub fn leaf(token: impl Into<String>, category: Category) -> Derivation {
        Derivation::Leaf { token: token.into(), category }
    }

    pub fn category(&self) -> &Category {
        match self {
            Derivation::Leaf { category, .. } | Derivation::Apply { category, .. } => category,
        }
    }

    /// The surface string spanned by this node.
    pub fn span(&self) -> String {
        match self {
            Derivation::Leaf { token, .. } => token.clone(),
            Derivation::Apply { functor, argument, .. } => {
                let (f, a) = (functor.span(), argument.span());
                if f == "~" {
                    format!("~{a}")
                } else {
                    format!("{f}({a})")
                }
            }
        }
    }

    /// Forward application: `X/Y` applied to `Y` yields `X`.
    pub fn apply(functor: Derivation, argument: Derivation) -> Result<Derivation, TypeError> {
        let (result, expected) = match functor.category() {
            Category::Over(result, expected) => ((**result).clone(), (**expected).clone()),
            other => return Err(TypeError::NotAFunctor { functor: functor.span(), category: other.clone() }),
        };
        if *argument.category() != expected {
            return Err(TypeError::ArgumentMismatch {
                functor: functor.span(),
                argument: argument.span(),
                expected,
                found: argument.category().clone(),
            });
        }
        Ok(Derivation::Apply { functor: Box::new(functor), argument: Box::new(argument), category: result })
    }

    fn write_indented(&self, out: &mut String, depth: usize) {
        out.push_str(&"  ".repeat(depth));
        out.push_str(&format!("{} : {}\n", self.span(), self.category()));
        if let Derivation::Apply { functor, argument, .. } = self {
            functor.write_indented(out, depth + 1);
            argument.write_indented(out, depth + 1);
        }
    }

    /// Indented rendering, one node per line, children below their parent.
    pub fn pretty(&self) -> String {
        let mut out = String::new();
        self.write_indented(&mut out, 0);
        out
    }
}

/// Assigns category `Pp` to a statement by two forward applications of the
/// quantifier to its terms. A negated statement adds one application of
/// `~ : Pp/Pp` on top.
pub fn typecheck(s: &Statement) -> Result<Derivation, TypeError> {
    let quantifier = Derivation::leaf(s.quantifier.surface_name(), Category::quantifier());
    let subject = Derivation::leaf(s.subject.as_str(), Category::Pr);
    let predicate = Derivation::leaf(s.predicate.as_str(), Category::Pr);
    let mut tree = Derivation::apply(Derivation::apply(quantifier, subject)?, predicate)?;
    if s.negated {
        tree = Derivation::apply(Derivation::leaf("~", Category::negation()), tree)?;
    }
    match tree.category() {
        Category::Pp => Ok(tree),
        other => Err(TypeError::NotAProposition(other.clone())),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {error}")]
pub struct LineError {
    pub line: usize,
    pub error: ParseError,
}

/// A deduplicated set of statements over one quantity system, in insertion
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnowledgeBase {
    system: QuantitySystem,
    statements: Vec<Statement>,
    lines: Vec<Option<usize>>,
    seen: HashSet<Statement>,
}

impl KnowledgeBase {
    pub fn new(system: QuantitySystem) -> KnowledgeBase {
        KnowledgeBase { system, statements: Vec::new(), lines: Vec::new(), seen: HashSet::new() }
    }

    pub fn from_statements<I>(system: QuantitySystem, statements: I) -> Result<KnowledgeBase, AlgebraError>
    where
        I: IntoIterator<Item = Statement>,
    {
        let mut kb = KnowledgeBase::new(system);
        for s in statements {
            kb.insert(s)?;
        }
        Ok(kb)
    }

    /// Adds a statement; returns false if it was already present.
    pub fn insert(&mut self, s: Statement) -> Result<bool, AlgebraError> {
        self.insert_at(s, None)
    }

    fn insert_at(&mut self, s: Statement, line: Option<usize>) -> Result<bool, AlgebraError> {
        self.system.index_of(s.quantifier)?;
        if self.seen.contains(&s) {
            return Ok(false);
        }
        self.seen.insert(s.clone());
        self.statements.push(s);
        self.lines.push(line);
        Ok(true)
    }

    pub fn system(&self) -> &QuantitySystem {
        &self.system
    }

    pub fn statements(&self) -> &[Statement] {
        &self.statements
    }

    /// Source line of the i-th statement, when it came from a file.
    pub fn line_of(&self, i: usize) -> Option<usize> {
        self.lines.get(i).copied().flatten()
    }

    pub fn contains(&self, s: &Statement) -> bool {
        self.seen.contains(s)
    }

    pub fn len(&self) -> usize {
        self.statements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.statements.is_empty()
    }
}

/// Result of loading a knowledge-base file: every line that parsed, plus the
/// diagnostics for those that did not.
#[derive(Debug, Clone)]
pub struct KbParse {
    pub kb: KnowledgeBase,
    pub errors: Vec<LineError>,
}

impl KbParse {
    pub fn into_result(self) -> Result<KnowledgeBase, Vec<LineError>> {
        if self.errors.is_empty() {
            Ok(self.kb)
        } else {
            Err(self.errors)
        }
    }
}

pub fn parse_kb(text: &str, sys: &QuantitySystem) -> KbParse {
    let mut kb = KnowledgeBase::new(*sys);
    let mut errors = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parsed = parse(line, sys).and_then(|s| kb.insert_at(s, Some(i + 1)).map_err(ParseError::from));
        if let Err(error) = parsed {
            errors.push(LineError { line: i + 1, error });
        }
    }
    KbParse { kb, errors }
}
