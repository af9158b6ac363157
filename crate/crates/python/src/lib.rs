//! Python bindings for snowkit.

use std::collections::BTreeMap;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use ::snowkit as core;
use core::kkohnert::{enumerate_kkd, lascoux_via_kkd, witness_diagram, GhostDiagram};
use core::verify::{run_suite, Suite};
use core::{qbell, schubert, BigInt, Diagram, QPolynomial};

fn err(e: core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn series(h: &QPolynomial) -> Vec<BigInt> {
    h.coeffs().to_vec()
}

fn ghost_cells(d: &GhostDiagram) -> Vec<(u32, u32, bool)> {
    d.cells().collect()
}

/// A polynomial in `x1, x2, ...` and `b` with integer coefficients.
#[pyclass(name = "Polynomial", module = "snowkit", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyPolynomial {
    inner: core::Polynomial,
}

impl From<core::Polynomial> for PyPolynomial {
    fn from(inner: core::Polynomial) -> Self {
        Self { inner }
    }
}

#[pymethods]
impl PyPolynomial {
    #[new]
    #[pyo3(signature = (text = "0"))]
    fn new(text: &str) -> PyResult<Self> {
        text.parse::<core::Polynomial>()
            .map(Self::from)
            .map_err(err)
    }

    /// Terms as `(x exponents, b exponent, coefficient)`.
    fn terms(&self) -> Vec<(Vec<u32>, u32, BigInt)> {
        self.inner
            .terms()
            .map(|(m, c)| (m.xexp().to_vec(), m.bexp(), c.clone()))
            .collect()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn divided_difference(&self, i: usize) -> Self {
        self.inner.divided_difference(i).into()
    }

    fn demazure(&self, i: usize) -> Self {
        self.inner.demazure(i).into()
    }

    fn swap(&self, i: usize) -> Self {
        self.inner.swap(i).into()
    }

    fn beta_component(&self, d: u32) -> Self {
        self.inner.beta_component(d).into()
    }

    /// `(d, [b^d] f)` for the largest `d`.
    fn top_component(&self) -> PyResult<(u32, Self)> {
        let (d, p) = self.inner.top_component().map_err(err)?;
        Ok((d, p.into()))
    }

    fn leading_monomial(&self) -> PyResult<(Vec<u32>, BigInt)> {
        let (m, c) = self.inner.leading_monomial_taillex().map_err(err)?;
        Ok((m.xexp().to_vec(), c))
    }

    fn is_scalar_multiple_of(&self, other: PyRef<'_, Self>) -> bool {
        self.inner.is_scalar_multiple_of(&other.inner)
    }

    fn __add__(&self, other: PyRef<'_, Self>) -> Self {
        (&self.inner + &other.inner).into()
    }

    fn __sub__(&self, other: PyRef<'_, Self>) -> Self {
        (&self.inner - &other.inner).into()
    }

    fn __mul__(&self, other: PyRef<'_, Self>) -> Self {
        (&self.inner * &other.inner).into()
    }

    fn __neg__(&self) -> Self {
        (-&self.inner).into()
    }

    fn __eq__(&self, other: &Bound<'_, PyAny>) -> bool {
        other
            .extract::<PyRef<'_, Self>>()
            .is_ok_and(|o| o.inner == self.inner)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial('{}')", self.inner)
    }
}

#[derive(FromPyObject)]
enum Entries {
    Text(String),
    List(Vec<u32>),
}

/// A permutation in one-line notation; `n` is the ambient size.
#[pyclass(name = "Permutation", module = "snowkit", frozen)]
struct PyPermutation {
    inner: core::Permutation,
    n: usize,
}

#[pymethods]
impl PyPermutation {
    #[new]
    fn new(entries: Entries) -> PyResult<Self> {
        let (inner, n) = match entries {
            Entries::Text(s) => core::Permutation::parse_with_size(&s).map_err(err)?,
            Entries::List(v) => {
                let n = v.len();
                (core::Permutation::new(v).map_err(err)?, n)
            }
        };
        Ok(Self { inner, n })
    }

    #[getter]
    fn oneline(&self) -> Vec<u32> {
        self.inner.padded(self.n).expect("n covers the permutation")
    }

    #[getter]
    fn n(&self) -> usize {
        self.n
    }

    fn inv(&self) -> u32 {
        self.inner.inv()
    }

    fn rajcode(&self) -> Vec<u32> {
        self.inner
            .rajcode(self.n)
            .expect("n covers the permutation")
            .entries()
            .to_vec()
    }

    fn raj(&self) -> u32 {
        self.inner.raj(self.n).expect("n covers the permutation")
    }

    fn is_inverse_fireworks(&self) -> bool {
        self.inner.is_inverse_fireworks()
    }

    fn rothe_diagram(&self) -> Vec<(u32, u32)> {
        Diagram::rothe(&self.inner).cells().collect()
    }

    fn grothendieck(&self) -> PyPolynomial {
        core::grothendieck(&self.inner).into()
    }

    fn top_grothendieck(&self) -> PyPolynomial {
        core::top_grothendieck(&self.inner).into()
    }

    fn schubert(&self) -> PyPolynomial {
        core::schubert(&self.inner).into()
    }

    fn shadow_lines(&self) -> Vec<Vec<(u32, u32)>> {
        let lines = self
            .inner
            .shadow_lines(self.n)
            .expect("n covers the permutation");
        lines.iter().map(|l| l.points().to_vec()).collect()
    }

    fn turning_points(&self) -> Vec<(u32, u32)> {
        let points = self
            .inner
            .turning_points(self.n)
            .expect("n covers the permutation");
        points.into_iter().collect()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Permutation('{}')", self.inner)
    }
}

/// A weak composition, trailing zeros dropped.
#[pyclass(name = "WeakComposition", module = "snowkit", frozen)]
struct PyComposition {
    inner: core::WeakComposition,
}

#[pymethods]
impl PyComposition {
    #[new]
    fn new(entries: Entries) -> PyResult<Self> {
        let inner = match entries {
            Entries::Text(s) => s.parse().map_err(err)?,
            Entries::List(v) => core::WeakComposition::new(v),
        };
        Ok(Self { inner })
    }

    #[getter]
    fn entries(&self) -> Vec<u32> {
        self.inner.entries().to_vec()
    }

    fn is_snowy(&self) -> bool {
        self.inner.is_snowy()
    }

    fn rajcode(&self) -> Vec<u32> {
        self.inner.rajcode().entries().to_vec()
    }

    fn raj(&self) -> u32 {
        self.inner.raj()
    }

    fn dark(&self) -> Vec<(u32, u32)> {
        self.inner.dark().cells().collect()
    }

    fn snowy_representative(&self) -> Vec<u32> {
        self.inner.snowy_representative().entries().to_vec()
    }

    fn lascoux(&self) -> PyPolynomial {
        core::lascoux(&self.inner).into()
    }

    fn top_lascoux(&self) -> PyPolynomial {
        core::top_lascoux(&self.inner).into()
    }

    fn key_polynomial(&self) -> PyPolynomial {
        core::key_polynomial(&self.inner).into()
    }

    fn lascoux_via_kkd(&self) -> PyPolynomial {
        lascoux_via_kkd(&self.inner).into()
    }

    /// K-Kohnert diagrams as lists of `(row, col, ghost)`.
    fn kkd(&self) -> Vec<Vec<(u32, u32, bool)>> {
        enumerate_kkd(&self.inner).iter().map(ghost_cells).collect()
    }

    fn witness(&self) -> Vec<(u32, u32, bool)> {
        ghost_cells(&witness_diagram(&self.inner))
    }

    fn snow_ascii(&self) -> String {
        self.inner.key_diagram().snow().render_ascii()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("WeakComposition('{}')", self.inner)
    }
}

type SnowParts = (Vec<(u32, u32)>, Vec<(u32, u32)>, Vec<u32>);

/// Snow diagram of a cell list: `(dark clouds, snowflakes, rajcode)`.
#[pyfunction]
fn snow(cells: Vec<(u32, u32)>) -> PyResult<SnowParts> {
    let d = Diagram::from_cells(cells).map_err(err)?;
    let s = d.snow();
    Ok((
        s.dark_clouds().iter().copied().collect(),
        s.snowflakes().iter().copied().collect(),
        s.weight().entries().to_vec(),
    ))
}

/// Keys are compositions in text form, e.g. `(0,0,1)`.
#[pyfunction]
fn expand_top_into_snowy_basis(
    f: PyRef<'_, PyPolynomial>,
    n: usize,
) -> PyResult<BTreeMap<String, BigInt>> {
    let exp = schubert::expand_top_into_snowy_basis(&f.inner, n).map_err(err)?;
    Ok(exp.into_iter().map(|(a, c)| (a.to_string(), c)).collect())
}

#[pyfunction]
#[pyo3(signature = (w, n = None))]
fn expand_grothendieck_into_lascoux(
    w: PyRef<'_, PyPermutation>,
    n: Option<usize>,
) -> PyResult<BTreeMap<String, PyPolynomial>> {
    let exp =
        schubert::expand_grothendieck_into_lascoux(&w.inner, n.unwrap_or(w.n)).map_err(err)?;
    Ok(exp
        .into_iter()
        .map(|(a, c)| (a.to_string(), c.into()))
        .collect())
}

#[pyfunction]
fn q_bell(n: usize) -> Vec<BigInt> {
    series(&qbell::q_bell(n))
}

#[pyfunction]
fn bell(n: usize) -> BigInt {
    qbell::bell(n).into()
}

#[pyfunction]
fn hilb_vn(n: usize) -> PyResult<Vec<BigInt>> {
    if n == 0 {
        return Err(PyValueError::new_err("n must be at least 1"));
    }
    Ok(series(&qbell::hilb_vn(n)))
}

#[pyfunction]
fn hilb_v_truncated(limit: usize) -> Vec<BigInt> {
    series(&qbell::hilb_v_truncated(limit))
}

/// Runs one verification suite; returns `(passed, report)`.
#[pyfunction]
#[pyo3(signature = (suite, scale = None))]
fn verify(suite: &str, scale: Option<usize>) -> PyResult<(bool, String)> {
    let suite: Suite = suite.parse().map_err(err)?;
    let report = run_suite(suite, scale);
    Ok((report.passed(), report.to_string()))
}

#[pymodule]
fn snowkit(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPolynomial>()?;
    m.add_class::<PyPermutation>()?;
    m.add_class::<PyComposition>()?;
    m.add_function(wrap_pyfunction!(snow, m)?)?;
    m.add_function(wrap_pyfunction!(expand_top_into_snowy_basis, m)?)?;
    m.add_function(wrap_pyfunction!(expand_grothendieck_into_lascoux, m)?)?;
    m.add_function(wrap_pyfunction!(q_bell, m)?)?;
    m.add_function(wrap_pyfunction!(bell, m)?)?;
    m.add_function(wrap_pyfunction!(hilb_vn, m)?)?;
    m.add_function(wrap_pyfunction!(hilb_v_truncated, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
