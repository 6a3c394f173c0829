//! Python bindings for `iqlogic`.
//!
//! Statements can be passed either as `Statement` objects or as strings in
//! the concrete syntax, e.g. `"most(Humans)(Mortal)"`. Every error surfaces
//! as `ValueError`.

use std::collections::hash_map::DefaultHasher;
use std::collections::BTreeMap;
use std::hash::{Hash, Hasher};

use iqlogic::{KnowledgeBase, ModelSearch, Quantifier, QuantitySystem, Semantics};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

type Countermodel = (usize, BTreeMap<String, Vec<usize>>);
type Mood = (&'static str, &'static str, &'static str, bool, bool);

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn system(size: usize) -> PyResult<QuantitySystem> {
    QuantitySystem::with_size(size).map_err(err)
}

fn semantics(threshold: &str) -> PyResult<Semantics> {
    threshold.parse().map_err(err)
}

fn quantifier(name: &str, sys: &QuantitySystem) -> PyResult<Quantifier> {
    sys.lookup(name).map_err(err)
}

/// A categorical statement such as `~most(X)(Y)`.
#[pyclass(name = "Statement", module = "iqlogic_py", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyStatement {
    inner: iqlogic::Statement,
}

#[pymethods]
impl PyStatement {
    #[new]
    #[pyo3(signature = (text, system = 5))]
    fn new(text: &str, system: usize) -> PyResult<Self> {
        parse(text, system)
    }

    #[getter]
    fn quantifier(&self) -> &'static str {
        self.inner.quantifier.surface_name()
    }

    #[getter]
    fn subject(&self) -> String {
        self.inner.subject.to_string()
    }

    #[getter]
    fn predicate(&self) -> String {
        self.inner.predicate.to_string()
    }

    #[getter]
    fn negated(&self) -> bool {
        self.inner.negated
    }

    fn negate(&self) -> Self {
        PyStatement { inner: self.inner.negate() }
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Statement('{}')", self.inner)
    }

    fn __hash__(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.inner.hash(&mut h);
        h.finish()
    }
}

fn statement(obj: &Bound<'_, PyAny>, sys: &QuantitySystem) -> PyResult<iqlogic::Statement> {
    if let Ok(s) = obj.cast::<PyStatement>() {
        let inner = s.get().inner.clone();
        if !sys.contains(inner.quantifier) {
            return Err(err(format!("{} is not in the {}-quantity system", inner.quantifier, sys.size())));
        }
        return Ok(inner);
    }
    let text: String = obj.extract()?;
    iqlogic::parse(&text, sys).map_err(err)
}

fn statements(objs: &[Bound<'_, PyAny>], sys: &QuantitySystem) -> PyResult<Vec<iqlogic::Statement>> {
    objs.iter().map(|o| statement(o, sys)).collect()
}

fn knowledge_base(objs: &[Bound<'_, PyAny>], sys: QuantitySystem) -> PyResult<KnowledgeBase> {
    KnowledgeBase::from_statements(sys, statements(objs, &sys)?).map_err(err)
}

/// Parse one statement.
#[pyfunction]
#[pyo3(signature = (text, system = 5))]
fn parse(text: &str, system: usize) -> PyResult<PyStatement> {
    let sys = self::system(system)?;
    Ok(PyStatement { inner: iqlogic::parse(text, &sys).map_err(err)? })
}

/// Same index in the chain of the opposite polarity.
#[pyfunction]
#[pyo3(signature = (q, system = 5))]
fn contrary(q: &str, system: usize) -> PyResult<&'static str> {
    let sys = self::system(system)?;
    Ok(sys.contrary(quantifier(q, &sys)?).map_err(err)?.surface_name())
}

/// Reflected index in the same chain.
#[pyfunction]
#[pyo3(signature = (q, system = 5))]
fn mirror(q: &str, system: usize) -> PyResult<&'static str> {
    let sys = self::system(system)?;
    Ok(sys.mirror(quantifier(q, &sys)?).map_err(err)?.surface_name())
}

#[pyfunction]
#[pyo3(signature = (q, system = 5))]
fn contradictory(q: &str, system: usize) -> PyResult<&'static str> {
    let sys = self::system(system)?;
    Ok(sys.contradictory(quantifier(q, &sys)?).map_err(err)?.surface_name())
}

/// Whether `q1` is at least as strong as `q2` in the same chain.
#[pyfunction]
#[pyo3(signature = (q1, q2, system = 5))]
fn implies(q1: &str, q2: &str, system: usize) -> PyResult<bool> {
    let sys = self::system(system)?;
    sys.implies(quantifier(q1, &sys)?, quantifier(q2, &sys)?).map_err(err)
}

/// The closure as `(statement, rule, premise_indices)` triples.
#[pyfunction]
#[pyo3(signature = (premises, system = 5, max_steps = None))]
fn saturate(
    premises: Vec<Bound<'_, PyAny>>,
    system: usize,
    max_steps: Option<usize>,
) -> PyResult<Vec<(PyStatement, &'static str, Vec<usize>)>> {
    let kb = knowledge_base(&premises, self::system(system)?)?;
    let closure = iqlogic::Saturator::new().max_steps(max_steps).run(&kb).map_err(err)?;
    Ok(closure
        .entries()
        .iter()
        .map(|e| (PyStatement { inner: e.statement.clone() }, e.step.rule.label(), e.step.premises.clone()))
        .collect())
}

/// Indented proof tree of `goal`, or `None` when it is not derivable.
#[pyfunction]
#[pyo3(signature = (premises, goal, system = 5))]
fn prove(premises: Vec<Bound<'_, PyAny>>, goal: Bound<'_, PyAny>, system: usize) -> PyResult<Option<String>> {
    let sys = self::system(system)?;
    let kb = knowledge_base(&premises, sys)?;
    let goal = statement(&goal, &sys)?;
    Ok(iqlogic::prove(&kb, &goal).map(|t| t.pretty()))
}

/// Whether every model up to `max_universe` elements satisfying the
/// premises also satisfies the conclusion.
#[pyfunction]
#[pyo3(signature = (premises, conclusion, system = 5, threshold = "3/4", max_universe = 5))]
fn entails(
    premises: Vec<Bound<'_, PyAny>>,
    conclusion: Bound<'_, PyAny>,
    system: usize,
    threshold: &str,
    max_universe: usize,
) -> PyResult<bool> {
    let sys = self::system(system)?;
    let search = ModelSearch::new(semantics(threshold)?, max_universe);
    search.entails(&statements(&premises, &sys)?, &statement(&conclusion, &sys)?).map_err(err)
}

/// First countermodel as `(universe_size, {term: members})`.
#[pyfunction]
#[pyo3(signature = (premises, conclusion, system = 5, threshold = "3/4", max_universe = 5))]
fn find_countermodel(
    premises: Vec<Bound<'_, PyAny>>,
    conclusion: Bound<'_, PyAny>,
    system: usize,
    threshold: &str,
    max_universe: usize,
) -> PyResult<Option<Countermodel>> {
    let sys = self::system(system)?;
    let search = ModelSearch::new(semantics(threshold)?, max_universe);
    let model = search.countermodel(&statements(&premises, &sys)?, &statement(&conclusion, &sys)?).map_err(err)?;
    Ok(model.map(|m| {
        let extensions = m.terms().map(|t| (t.to_string(), m.extension(t).unwrap_or_default())).collect();
        (m.universe_size(), extensions)
    }))
}

/// Rows `(q_p1, q_p2, q_c, valid, derivable)` for one figure.
#[pyfunction]
#[pyo3(signature = (figure, system = 5, threshold = "3/4", max_universe = 5))]
fn moods(figure: u8, system: usize, threshold: &str, max_universe: usize) -> PyResult<Vec<Mood>> {
    let sys = self::system(system)?;
    let figure = iqlogic::Figure::from_number(figure).ok_or_else(|| err(format!("no figure {figure}")))?;
    let table = iqlogic::enumerate_valid_moods(&sys, figure, &semantics(threshold)?, max_universe).map_err(err)?;
    Ok(table
        .rows
        .iter()
        .map(|r| (r.first.surface_name(), r.second.surface_name(), r.conclusion.surface_name(), r.valid, r.derivable))
        .collect())
}

#[pymodule]
fn iqlogic_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyStatement>()?;
    m.add_function(wrap_pyfunction!(parse, m)?)?;
    m.add_function(wrap_pyfunction!(contrary, m)?)?;
    m.add_function(wrap_pyfunction!(mirror, m)?)?;
    m.add_function(wrap_pyfunction!(contradictory, m)?)?;
    m.add_function(wrap_pyfunction!(implies, m)?)?;
    m.add_function(wrap_pyfunction!(saturate, m)?)?;
    m.add_function(wrap_pyfunction!(prove, m)?)?;
    m.add_function(wrap_pyfunction!(entails, m)?)?;
    m.add_function(wrap_pyfunction!(find_countermodel, m)?)?;
    m.add_function(wrap_pyfunction!(moods, m)?)?;
    Ok(())
}
