//! Python bindings: algebras, terms, reports and subgroups of `Q`.

use std::collections::BTreeMap;

use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;

use mvtrop_core::algebra::{check_mv_axioms, CheckMode, LGroup, MvAlgebra, MvValue};
use mvtrop_core::error::Error;
use mvtrop_core::export::{hasse_dot, tables_json};
use mvtrop_core::functors::{delta, gamma, glue_boolean_perfect, theta, theta_star, verify_cone_iso};
use mvtrop_core::logic::{
    axiom_suite, check_equation_chang, check_equation_finite, eval_with, parse, parse_equation, tautology_check,
    vc_membership, Term as CoreTerm,
};
use mvtrop_core::qpoints::{
    check_flatness, classify_regularity, find_divisible_between, frobenius_action, gp_invariant, hom_exists,
    theta_pt, Characteristic as CoreCharacteristic, HomExistence, Regularity,
};
use mvtrop_core::shorthand::{parse_algebra, parse_element, parse_group, parse_group_element};
use mvtrop_core::{CheckReport, Rational, Verdict};

create_exception!(mvtrop, MvtropError, PyException);
create_exception!(mvtrop, ParseError, MvtropError);

const DEFAULT_BOUND: u64 = 8;

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Parse { .. } => ParseError::new_err(e.to_string()),
        other => MvtropError::new_err(other.to_string()),
    }
}

fn strings(xs: &[MvValue]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn rational(text: &str) -> PyResult<Rational> {
    text.trim().parse::<Rational>().map_err(py_err)
}

/// Outcome of a check.
#[pyclass(module = "mvtrop", frozen)]
pub struct Report {
    inner: CheckReport,
}

#[pymethods]
impl Report {
    /// `"valid"`, `"valid_up_to_bound"` or `"counterexample"`.
    #[getter]
    fn verdict(&self) -> &'static str {
        match self.inner.verdict {
            Verdict::Valid => "valid",
            Verdict::ValidUpToBound => "valid_up_to_bound",
            Verdict::Counterexample => "counterexample",
        }
    }

    #[getter]
    fn witness(&self) -> Option<BTreeMap<String, String>> {
        self.inner.witness.clone()
    }

    #[getter]
    fn checked(&self) -> u64 {
        self.inner.checked
    }

    #[getter]
    fn law(&self) -> Option<String> {
        self.inner.law.clone()
    }

    #[getter]
    fn details(&self) -> BTreeMap<String, String> {
        self.inner.details.clone()
    }

    fn is_valid(&self) -> bool {
        self.inner.is_valid()
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    fn __bool__(&self) -> bool {
        self.inner.is_valid()
    }

    fn __repr__(&self) -> String {
        format!("Report({})", self.inner)
    }
}

fn report(inner: CheckReport) -> Report {
    Report { inner }
}

/// An MV-algebra given by its shorthand or JSON descriptor.
#[pyclass(module = "mvtrop", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Algebra {
    inner: MvAlgebra,
}

impl Algebra {
    fn elem(&self, text: &str) -> PyResult<MvValue> {
        parse_element(&self.inner, text).map_err(py_err)
    }

    fn binary(&self, x: &str, y: &str, op: fn(&MvAlgebra, &MvValue, &MvValue) -> MvValue) -> PyResult<String> {
        Ok(op(&self.inner, &self.elem(x)?, &self.elem(y)?).to_string())
    }
}

#[pymethods]
impl Algebra {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(Algebra {
            inner: parse_algebra(text).map_err(py_err)?,
        })
    }

    #[getter]
    fn shorthand(&self) -> String {
        self.inner.shorthand()
    }

    fn is_finite(&self) -> bool {
        self.inner.is_finite()
    }

    fn cardinality(&self) -> Option<u64> {
        self.inner.cardinality()
    }

    #[pyo3(signature = (bound = DEFAULT_BOUND))]
    fn elements(&self, bound: u64) -> Vec<String> {
        strings(&self.inner.enumerate(bound))
    }

    fn zero(&self) -> String {
        self.inner.zero().to_string()
    }

    fn one(&self) -> String {
        self.inner.one().to_string()
    }

    fn contains(&self, x: &str) -> bool {
        self.elem(x).is_ok()
    }

    fn neg(&self, x: &str) -> PyResult<String> {
        Ok(self.inner.neg(&self.elem(x)?).to_string())
    }

    fn oplus(&self, x: &str, y: &str) -> PyResult<String> {
        self.binary(x, y, MvAlgebra::oplus)
    }

    fn odot(&self, x: &str, y: &str) -> PyResult<String> {
        self.binary(x, y, MvAlgebra::odot)
    }

    fn meet(&self, x: &str, y: &str) -> PyResult<String> {
        self.binary(x, y, MvAlgebra::meet)
    }

    fn join(&self, x: &str, y: &str) -> PyResult<String> {
        self.binary(x, y, MvAlgebra::join)
    }

    fn leq(&self, x: &str, y: &str) -> PyResult<bool> {
        Ok(self.inner.leq(&self.elem(x)?, &self.elem(y)?))
    }

    /// Elements of `θ(A)`, bounded when `A` is infinite.
    #[pyo3(signature = (bound = DEFAULT_BOUND))]
    fn theta(&self, bound: u64) -> Vec<String> {
        strings(&theta(&self.inner).elements(bound))
    }

    #[pyo3(signature = (bound = DEFAULT_BOUND))]
    fn theta_star(&self, bound: u64) -> Vec<String> {
        strings(&theta_star(&self.inner).elements(bound))
    }

    /// Exhaustive on finite algebras unless `samples` is given.
    #[pyo3(signature = (samples = None, seed = 1))]
    fn check_axioms(&self, samples: Option<u64>, seed: u64) -> PyResult<Report> {
        check_mv_axioms(&self.inner, mode(&self.inner, samples, seed)).map(report).map_err(py_err)
    }

    #[pyo3(signature = (samples = None, seed = 1))]
    fn lukasiewicz_axioms(&self, samples: Option<u64>, seed: u64) -> PyResult<Report> {
        axiom_suite(&self.inner, mode(&self.inner, samples, seed)).map(report).map_err(py_err)
    }

    fn vc_member(&self) -> PyResult<Report> {
        vc_membership(&self.inner).map(report).map_err(py_err)
    }

    /// Operation tables as a JSON string.
    fn tables_json(&self) -> PyResult<String> {
        tables_json(&self.inner).map(|v| v.to_string()).map_err(py_err)
    }

    #[pyo3(signature = (bound = DEFAULT_BOUND))]
    fn hasse_dot(&self, bound: u64) -> PyResult<String> {
        hasse_dot(&self.inner, bound).map_err(py_err)
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner).expect("descriptor serializes")
    }

    fn __str__(&self) -> String {
        self.inner.shorthand()
    }

    fn __repr__(&self) -> String {
        format!("Algebra('{}')", self.inner.shorthand())
    }
}

fn mode(alg: &MvAlgebra, samples: Option<u64>, seed: u64) -> CheckMode {
    match samples {
        None if alg.is_finite() => CheckMode::Exhaustive,
        None => CheckMode::sampled(500, seed),
        Some(n) => CheckMode::sampled(n, seed),
    }
}

/// A Łukasiewicz term.
#[pyclass(module = "mvtrop", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Term {
    inner: CoreTerm,
}

#[pymethods]
impl Term {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(Term {
            inner: parse(text).map_err(py_err)?,
        })
    }

    fn variables(&self) -> Vec<String> {
        self.inner.variables().into_iter().collect()
    }

    fn op_count(&self) -> usize {
        self.inner.op_count()
    }

    fn depth(&self) -> usize {
        self.inner.depth()
    }

    fn substitute(&self, name: &str, by: &Term) -> Term {
        Term {
            inner: self.inner.substitute(name, &by.inner),
        }
    }

    /// Value under `assignment`, a mapping from names to element text.
    #[pyo3(signature = (algebra, assignment = None))]
    fn evaluate(&self, algebra: &Algebra, assignment: Option<BTreeMap<String, String>>) -> PyResult<String> {
        let mut bound = BTreeMap::new();
        for (k, v) in assignment.unwrap_or_default() {
            bound.insert(k, algebra.elem(&v)?);
        }
        let v = eval_with(&algebra.inner, &self.inner, &|name| bound.get(name)).map_err(py_err)?;
        Ok(v.to_string())
    }

    fn is_tautology(&self, algebra: &Algebra) -> PyResult<Report> {
        tautology_check(&self.inner, &algebra.inner).map(report).map_err(py_err)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Term('{}')", self.inner)
    }
}

/// Checks `lhs = rhs` exhaustively in a finite algebra, or on a bounded
/// fragment of Chang's algebra.
#[pyfunction]
#[pyo3(signature = (equation, algebra, bound = None))]
fn check_equation(equation: &str, algebra: &Algebra, bound: Option<u64>) -> PyResult<Report> {
    let eq = parse_equation(equation).map_err(py_err)?;
    match algebra.inner {
        MvAlgebra::Chang => check_equation_chang(&eq, bound),
        _ => check_equation_finite(&eq, &algebra.inner),
    }
    .map(report)
    .map_err(py_err)
}

#[pyfunction]
fn delta_of(group: &str) -> PyResult<Algebra> {
    Ok(Algebra {
        inner: delta(&parse_group(group).map_err(py_err)?),
    })
}

#[pyfunction]
fn gamma_of(group: &str, unit: &str) -> PyResult<Algebra> {
    let g = parse_group(group).map_err(py_err)?;
    let u = parse_group_element(&g, unit).map_err(py_err)?;
    Ok(Algebra {
        inner: gamma(&g, &u).map_err(py_err)?,
    })
}

#[pyfunction]
fn glue(boolean: &Algebra, perfect: &Algebra) -> PyResult<Algebra> {
    Ok(Algebra {
        inner: glue_boolean_perfect(&boolean.inner, &perfect.inner).map_err(py_err)?,
    })
}

/// A subgroup of `Q` containing `1`, given by group shorthand.
#[pyclass(module = "mvtrop", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Characteristic {
    inner: CoreCharacteristic,
}

#[pymethods]
impl Characteristic {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        let inner = match parse_group(text).map_err(py_err)? {
            LGroup::Integers => CoreCharacteristic::integers(),
            LGroup::QSubgroup { chi } => chi,
            other => return Err(MvtropError::new_err(format!("{other} is not a subgroup of Q containing 1"))),
        };
        Ok(Characteristic { inner })
    }

    fn contains(&self, q: &str) -> PyResult<bool> {
        Ok(self.inner.contains(&rational(q)?))
    }

    fn is_cyclic(&self) -> bool {
        self.inner.is_cyclic()
    }

    /// Size of `G/pG`.
    fn gp(&self, p: u64) -> PyResult<u64> {
        Ok(gp_invariant(&self.inner, p).map_err(py_err)?.value)
    }

    fn regularity(&self) -> &'static str {
        match classify_regularity(&self.inner) {
            Regularity::RegularlyDiscrete => "regularly_discrete",
            Regularity::RegularlyDense => "regularly_dense",
        }
    }

    /// `(True, scale)` when `x ↦ scale·x` maps into `other`, else
    /// `(False, prime)` with a prime certifying that no map exists.
    fn hom_to(&self, other: &Characteristic) -> (bool, String) {
        match hom_exists(&self.inner, &other.inner) {
            HomExistence::Exists { scale } => (true, scale.to_string()),
            HomExistence::Absent { certificate } => (false, certificate.to_string()),
        }
    }

    fn find_divisible_between(&self, p: u64, a: &str, b: &str) -> PyResult<String> {
        find_divisible_between(&self.inner, p, &rational(a)?, &rational(b)?)
            .map(|x| x.to_string())
            .map_err(py_err)
    }

    #[pyo3(signature = (samples = 1000, seed = 1))]
    fn flat_check(&self, samples: u64, seed: u64) -> PyResult<Report> {
        check_flatness(&frobenius_action(&self.inner), samples, seed).map(report).map_err(py_err)
    }

    /// Compares the point cone of this group with `θ(host)` on a bounded fragment.
    #[pyo3(signature = (host, bound = 20))]
    fn theta_pt_matches(&self, host: &Algebra, bound: u64) -> PyResult<Report> {
        verify_cone_iso(&theta_pt(&self.inner), &host.inner, bound).map(report).map_err(py_err)
    }

    fn __str__(&self) -> String {
        self.inner.shorthand()
    }

    fn __repr__(&self) -> String {
        format!("Characteristic('{}')", self.inner.shorthand())
    }
}

#[pymodule]
fn mvtrop(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("MvtropError", m.py().get_type::<MvtropError>())?;
    m.add("ParseError", m.py().get_type::<ParseError>())?;
    m.add_class::<Algebra>()?;
    m.add_class::<Term>()?;
    m.add_class::<Report>()?;
    m.add_class::<Characteristic>()?;
    m.add_function(wrap_pyfunction!(check_equation, m)?)?;
    m.add_function(wrap_pyfunction!(delta_of, m)?)?;
    m.add_function(wrap_pyfunction!(gamma_of, m)?)?;
    m.add_function(wrap_pyfunction!(glue, m)?)?;
    Ok(())
}
