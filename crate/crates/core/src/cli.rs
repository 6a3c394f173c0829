//! Command implementations for the `iqlogic` binary.
//!
//! Each command takes already-read input and returns an [`Outcome`] holding
//! its standard output, diagnostics and exit code, so the binary stays a thin
//! argument-parsing shell.

use serde_json::json;

use crate::algebra::{Quantifier, QuantitySystem};
use crate::engine::{Closure, EngineError, ProofTree, Saturator};
use crate::models::{enumerate_valid_moods, Figure, FiniteModel, ModelError, ModelSearch, MoodTable, Semantics};
use crate::syntax::{parse, parse_kb, typecheck, KnowledgeBase, LineError, Statement};

pub const EXIT_OK: i32 = 0;
/// Parse failures in `parse`, a countermodel in `prove`, a failed check in `moods`.
pub const EXIT_FAILURE: i32 = 1;
/// `prove`: neither a proof nor a countermodel within the search bounds.
pub const EXIT_UNDECIDED: i32 = 2;
/// Unusable input: unreadable file, bad goal, invalid flags, step limit.
pub const EXIT_INPUT: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputMode {
    #[default]
    Text,
    /// One JSON record per line.
    Structured,
}

#[derive(Debug, Clone, Copy)]
pub struct RunConfig {
    pub system: QuantitySystem,
    pub semantics: Semantics,
    pub max_universe: usize,
    pub max_steps: Option<usize>,
    pub output: OutputMode,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            system: QuantitySystem::five(),
            semantics: Semantics::default(),
            max_universe: crate::models::DEFAULT_MAX_UNIVERSE,
            max_steps: None,
            output: OutputMode::Text,
        }
    }
}

impl RunConfig {
    pub fn structured(&self) -> bool {
        self.output == OutputMode::Structured
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn line(&mut self, text: impl AsRef<str>) {
        self.stdout.push_str(text.as_ref());
        self.stdout.push('\n');
    }

    fn diag(&mut self, text: impl AsRef<str>) {
        self.stderr.push_str(text.as_ref());
        self.stderr.push('\n');
    }

    pub fn input_error(message: impl AsRef<str>) -> Outcome {
        let mut out = Outcome { code: EXIT_INPUT, ..Outcome::default() };
        out.diag(format!("error: {}", message.as_ref()));
        out
    }
}

fn report_line_errors(out: &mut Outcome, errors: &[LineError]) {
    for e in errors {
        out.diag(format!("error: {e}"));
    }
}

/// Loads a knowledge base, failing on any bad line.
fn load_kb(text: &str, config: &RunConfig) -> Result<KnowledgeBase, Outcome> {
    parse_kb(text, &config.system).into_result().map_err(|errors| {
        let mut out = Outcome { code: EXIT_INPUT, ..Outcome::default() };
        report_line_errors(&mut out, &errors);
        out
    })
}

fn run_saturation(kb: &KnowledgeBase, config: &RunConfig) -> Result<Closure, Outcome> {
    Saturator::new().max_steps(config.max_steps).run(kb).map_err(|e| match e {
        EngineError::StepLimitExceeded { limit, partial } => Outcome::input_error(format!(
            "step limit {limit} exceeded ({} statements derived before stopping)",
            partial.len()
        )),
        other => Outcome::input_error(other.to_string()),
    })
}

/// Echoes every statement in canonical form with its category derivation.
pub fn cmd_parse(text: &str, config: &RunConfig) -> Outcome {
    let loaded = parse_kb(text, &config.system);
    let mut out = Outcome::default();
    for (i, s) in loaded.kb.statements().iter().enumerate() {
        let derivation = match typecheck(s) {
            Ok(d) => d,
            Err(e) => {
                out.diag(format!("error: {s}: {e}"));
                out.code = EXIT_FAILURE;
                continue;
            }
        };
        let line = loaded.kb.line_of(i).unwrap_or(0);
        if config.structured() {
            out.line(
                json!({
                    "line": line,
                    "statement": s.render(),
                    "category": derivation.category().to_string(),
                    "derivation": derivation.pretty().lines().map(str::trim).collect::<Vec<_>>(),
                })
                .to_string(),
            );
        } else {
            out.line(format!("line {line}: {s}"));
            for l in derivation.pretty().lines() {
                out.line(format!("  {l}"));
            }
        }
    }
    if !config.structured() {
        out.line(format!("{} statements", loaded.kb.len()));
    }
    if !loaded.errors.is_empty() {
        report_line_errors(&mut out, &loaded.errors);
        out.code = EXIT_FAILURE;
    }
    out
}

fn premise_list(premises: &[usize]) -> String {
    premises.iter().map(|p| (p + 1).to_string()).collect::<Vec<_>>().join(",")
}

/// Lists the closure: index, statement, rule and premise indices (1-based).
pub fn cmd_saturate(text: &str, config: &RunConfig) -> Outcome {
    let kb = match load_kb(text, config) {
        Ok(kb) => kb,
        Err(out) => return out,
    };
    let closure = match run_saturation(&kb, config) {
        Ok(c) => c,
        Err(out) => return out,
    };
    let mut out = Outcome::default();
    if !config.structured() {
        out.line(format!("closure: {} statements ({} premises)", closure.len(), closure.premise_count()));
    }
    for (i, e) in closure.entries().iter().enumerate() {
        if config.structured() {
            out.line(
                json!({
                    "index": i + 1,
                    "statement": e.statement.render(),
                    "rule": e.step.rule.label(),
                    "premises": e.step.premises.iter().map(|p| p + 1).collect::<Vec<_>>(),
                })
                .to_string(),
            );
        } else if e.step.premises.is_empty() {
            out.line(format!("{:>4}  {}  [{}]", i + 1, e.statement, e.step.rule));
        } else {
            out.line(format!("{:>4}  {}  [{} {}]", i + 1, e.statement, e.step.rule, premise_list(&e.step.premises)));
        }
    }
    if let Some((pos, neg)) = closure.contradiction() {
        out.diag(format!("warning: inconsistent knowledge base: both {pos} and {neg} are derived"));
    }
    out
}

fn proof_records(tree: &ProofTree, next_id: &mut usize, out: &mut Outcome) -> usize {
    let children: Vec<usize> = tree.children.iter().map(|c| proof_records(c, next_id, out)).collect();
    *next_id += 1;
    out.line(
        json!({
            "id": *next_id,
            "statement": tree.statement.render(),
            "rule": tree.rule.label(),
            "premises": children,
        })
        .to_string(),
    );
    *next_id
}

fn model_record(model: &FiniteModel) -> serde_json::Value {
    let extensions: serde_json::Map<String, serde_json::Value> =
        model.terms().map(|t| (t.to_string(), json!(model.extension(t).unwrap_or_default()))).collect();
    json!({ "universe_size": model.universe_size(), "extensions": extensions })
}

/// Prints a proof if the goal is in the closure; otherwise looks for a
/// countermodel.
pub fn cmd_prove(text: &str, goal: &str, config: &RunConfig) -> Outcome {
    let kb = match load_kb(text, config) {
        Ok(kb) => kb,
        Err(out) => return out,
    };
    let goal: Statement = match parse(goal, &config.system) {
        Ok(g) => g,
        Err(e) => return Outcome::input_error(format!("goal: {e}")),
    };
    let closure = match run_saturation(&kb, config) {
        Ok(c) => c,
        Err(out) => return out,
    };
    let mut out = Outcome::default();
    if let Some(tree) = closure.proof(&goal) {
        if config.structured() {
            proof_records(&tree, &mut 0, &mut out);
        } else {
            out.line(format!("derivable: {goal}"));
            out.stdout.push_str(&tree.pretty());
        }
        return out;
    }

    let search = ModelSearch::new(config.semantics, config.max_universe);
    match search.countermodel(kb.statements(), &goal) {
        Ok(Some(model)) => {
            out.code = EXIT_FAILURE;
            if config.structured() {
                out.line(
                    json!({"statement": goal.render(), "result": "countermodel", "model": model_record(&model)})
                        .to_string(),
                );
            } else {
                out.line("not derivable, countermodel found");
                out.line(format!("  {model}"));
            }
        }
        Ok(None) => {
            out.code = EXIT_UNDECIDED;
            if config.structured() {
                out.line(
                    json!({"statement": goal.render(), "result": "no-countermodel", "max_universe": config.max_universe})
                        .to_string(),
                );
            } else {
                out.line(format!("not derivable, no countermodel up to m={}", config.max_universe));
            }
        }
        Err(e @ ModelError::TooManyTerms { .. }) => {
            out.code = EXIT_UNDECIDED;
            out.line("not derivable");
            out.diag(format!("warning: countermodel search skipped: {e}"));
        }
        Err(e) => return Outcome::input_error(e.to_string()),
    }
    out
}

/// Operators and chain position of one quantifier.
pub fn cmd_square(name: &str, config: &RunConfig) -> Outcome {
    let sys = &config.system;
    let q = match sys.lookup(name) {
        Ok(q) => q,
        Err(e) => return Outcome::input_error(e.to_string()),
    };
    // Lookup succeeded, so every operator below is defined.
    let contrary = sys.contrary(q).expect("q is in the system");
    let mirror = sys.mirror(q).expect("q is in the system");
    let contradictory = sys.contradictory(q).expect("q is in the system");
    let index = sys.index_of(q).expect("q is in the system");
    let chain = sys.chain(q.polarity());
    let named = |x: Quantifier| format!("{} ({})", x.surface_name(), x.letter());

    let mut out = Outcome::default();
    if config.structured() {
        out.line(
            json!({
                "quantifier": q.surface_name(),
                "letter": q.letter().to_string(),
                "polarity": q.polarity().to_string(),
                "contrary": contrary.surface_name(),
                "mirror": mirror.surface_name(),
                "contradictory": contradictory.surface_name(),
                "position": index + 1,
                "chain": chain.iter().map(|c| c.surface_name()).collect::<Vec<_>>(),
            })
            .to_string(),
        );
        return out;
    }
    let chain_text: Vec<String> = chain
        .iter()
        .map(|&c| if c == q { format!("[{}]", c.surface_name()) } else { c.surface_name().to_string() })
        .collect();
    out.line(format!("quantifier     {}", named(q)));
    out.line(format!("polarity       {}", q.polarity()));
    out.line(format!("contrary       {}", named(contrary)));
    out.line(format!("mirror         {}", named(mirror)));
    out.line(format!("contradictory  {}", named(contradictory)));
    out.line(format!("chain          {}", chain_text.join(" ⊏ ")));
    out.line(format!("position       {} of {}", index + 1, chain.len()));
    out
}

/// Mood table for one figure, or all four when `figure` is `None`.
///
/// Exits 0 iff no row is derivable without being valid; in the 2-quantity
/// system derivable and valid must also coincide.
pub fn cmd_moods(figure: Option<u8>, config: &RunConfig) -> Outcome {
    let figures: Vec<Figure> = match figure {
        None => Figure::ALL.to_vec(),
        Some(n) => match Figure::from_number(n) {
            Some(f) => vec![f],
            None => return Outcome::input_error(format!("figure must be 1..4, got {n}")),
        },
    };
    let mut tables: Vec<MoodTable> = Vec::new();
    for f in figures {
        match enumerate_valid_moods(&config.system, f, &config.semantics, config.max_universe) {
            Ok(t) => tables.push(t),
            Err(e) => return Outcome::input_error(e.to_string()),
        }
    }

    let mut out = Outcome::default();
    for (i, t) in tables.iter().enumerate() {
        if config.structured() {
            let csv = t.to_csv();
            let body = if i == 0 { csv.as_str() } else { csv.split_once('\n').map_or("", |(_, rest)| rest) };
            out.stdout.push_str(body);
        } else {
            out.stdout.push_str(&t.to_text());
        }
    }

    let unsound: usize = tables.iter().map(|t| t.unsound_rows().count()).sum();
    let underivable: usize = tables.iter().map(|t| t.underivable_rows().count()).sum();
    if !config.structured() {
        let rows: usize = tables.iter().map(|t| t.rows.len()).sum();
        let valid: usize = tables.iter().map(|t| t.rows.iter().filter(|r| r.valid).count()).sum();
        let derivable: usize = tables.iter().map(|t| t.rows.iter().filter(|r| r.derivable).count()).sum();
        out.line(format!(
            "{rows} moods: {valid} valid, {derivable} derivable, {unsound} derivable but not valid, {underivable} valid but not derivable"
        ));
    }
    if unsound > 0 {
        out.code = EXIT_FAILURE;
        out.diag(format!("error: {unsound} derivable moods are not valid"));
    } else if config.system.size() == 2 && underivable > 0 {
        out.code = EXIT_FAILURE;
        out.diag(format!("error: {underivable} valid moods are not derivable in the 2-quantity system"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_command() {
        let out = cmd_parse("~all(Men)(Astronauts)\n", &RunConfig::default());
        assert_eq!(out.code, EXIT_OK);
        assert!(out.stdout.contains("~all(Men)(Astronauts) : Pp"));
        assert!(out.stdout.contains("1 statements"));

        let out = cmd_parse("all(men)(X)\n", &RunConfig::default());
        assert_eq!(out.code, EXIT_FAILURE);
        assert!(out.stderr.contains("line 1"));

        let out = cmd_parse("", &RunConfig::default());
        assert_eq!(out.code, EXIT_OK);
        assert_eq!(out.stdout, "0 statements\n");
    }

    #[test]
    fn saturate_listing_format() {
        let out = cmd_saturate("some(Woman)(Mortal)\n", &RunConfig::default());
        assert_eq!(out.code, EXIT_OK);
        assert!(out.stdout.contains("   1  some(Woman)(Mortal)  [PREMISE]\n"));
        assert!(out.stdout.contains("~no(Woman)(Mortal)  [CONTRA_POS 1]"));
        assert!(out.stderr.is_empty());
    }

    #[test]
    fn saturate_warns_on_inconsistency() {
        let out = cmd_saturate("all(X)(Y)\n~some(X)(Y)\n", &RunConfig::default());
        assert_eq!(out.code, EXIT_OK);
        assert!(out.stderr.contains("inconsistent"));
    }

    #[test]
    fn step_limit_is_an_input_error() {
        let config = RunConfig { max_steps: Some(3), ..RunConfig::default() };
        let out = cmd_saturate("all(M)(P)\nall(S)(M)\n", &config);
        assert_eq!(out.code, EXIT_INPUT);
        assert!(out.stderr.contains("step limit 3"));
    }

    #[test]
    fn square_command() {
        let out = cmd_square("almost_all", &RunConfig::default());
        assert!(out.stdout.contains("contrary       few (B)"));
        assert!(out.stdout.contains("mirror         many (K)"));
        assert!(out.stdout.contains("contradictory  many_not (G)"));
        assert!(out.stdout.contains("all ⊏ [almost_all] ⊏ most ⊏ many ⊏ some"));

        let out = cmd_square("most", &RunConfig::default());
        assert!(out.stdout.contains("mirror         most (T)"));

        let two = RunConfig { system: QuantitySystem::two(), ..RunConfig::default() };
        let out = cmd_square("all", &two);
        assert!(out.stdout.contains("contradictory  some_not (O)"));
        assert_eq!(cmd_square("most", &two).code, EXIT_INPUT);
        assert_eq!(cmd_square("every", &RunConfig::default()).code, EXIT_INPUT);
    }

    #[test]
    fn structured_records_parse_back() {
        let config = RunConfig { output: OutputMode::Structured, ..RunConfig::default() };
        let out = cmd_saturate("all(M)(P)\nall(S)(M)\n", &config);
        for line in out.stdout.lines() {
            let v: serde_json::Value = serde_json::from_str(line).unwrap();
            let s = v["statement"].as_str().unwrap();
            assert_eq!(parse(s, &config.system).unwrap().render(), s);
            assert!(crate::engine::Rule::from_label(v["rule"].as_str().unwrap()).is_some());
        }
    }

    #[test]
    fn moods_rejects_bad_figure() {
        assert_eq!(cmd_moods(Some(5), &RunConfig::default()).code, EXIT_INPUT);
    }
}
