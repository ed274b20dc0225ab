//! Python bindings: `triassoc.Algebra` and `triassoc.bound_table`.
//!
//! Scalars cross the boundary as strings (`"3/2"`, or a residue for prime
//! fields); vectors may be given as lists of strings or integers.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use triassoc_core::catalog;
use triassoc_core::cohomology::h2;
use triassoc_core::extensions::{cover, is_unicentral, z_star};
use triassoc_core::io::{emit, parse};
use triassoc_core::sequences::{
    sample_central_ideals, stallings_check, theorem_equivalence, tra_image_theorem, verify_five_term, verify_inf_delta,
};
use triassoc_core::trialgebra::{bound_table as bounds, Op};
use triassoc_core::{Field, Scalar, Subspace, TriAlgebra};

fn err(e: triassoc_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn field_of(s: &str) -> PyResult<Field> {
    Field::from_descriptor(s).map_err(err)
}

#[derive(FromPyObject)]
enum Coord {
    Int(i64),
    Text(String),
}

fn to_vector(field: Field, n: usize, v: &[Coord]) -> PyResult<Vec<Scalar>> {
    if v.len() != n {
        return Err(PyValueError::new_err(format!("expected {n} coordinates, got {}", v.len())));
    }
    v.iter()
        .map(|c| match c {
            Coord::Int(i) => Ok(field.from_i64(*i)),
            Coord::Text(s) => field.parse_scalar(s).map_err(err),
        })
        .collect()
}

fn strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(Scalar::to_string).collect()
}

fn basis(s: &Subspace) -> Vec<Vec<String>> {
    s.basis_vectors().map(strings).collect()
}

/// A triassociative algebra given by structure constants.
#[pyclass(module = "triassoc", frozen)]
struct Algebra {
    inner: TriAlgebra,
}

#[pymethods]
impl Algebra {
    /// The `n`-dimensional algebra with all products zero.
    #[staticmethod]
    #[pyo3(signature = (n, field = "Q"))]
    fn abelian(n: usize, field: &str) -> PyResult<Algebra> {
        Ok(Algebra { inner: catalog::abelian(field_of(field)?, n) })
    }

    /// The cover of the `n`-dimensional abelian algebra, of dimension `n + 3n²`.
    #[staticmethod]
    #[pyo3(signature = (n, field = "Q"))]
    fn cover_abelian(n: usize, field: &str) -> PyResult<Algebra> {
        Ok(Algebra { inner: catalog::cover_abelian(field_of(field)?, n) })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Algebra> {
        Ok(Algebra { inner: parse(text).map_err(err)?.algebra })
    }

    fn to_json(&self) -> String {
        emit(&self.inner, None)
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn field(&self) -> String {
        self.inner.field().descriptor()
    }

    /// `x ∘ y` for `op` in `vdash`, `dashv`, `perp`.
    fn multiply(&self, x: Vec<Coord>, y: Vec<Coord>, op: &str) -> PyResult<Vec<String>> {
        let op = Op::from_name(op).ok_or_else(|| PyValueError::new_err(format!("unknown op {op:?}")))?;
        let (f, n) = (self.inner.field(), self.inner.dim());
        let p = self.inner.multiply(&to_vector(f, n, &x)?, &to_vector(f, n, &y)?, op).map_err(err)?;
        Ok(strings(&p))
    }

    /// Indices of the violated defining identities; empty when valid.
    fn validate(&self) -> Vec<usize> {
        self.inner.validate_axioms().violated_axioms()
    }

    fn is_valid(&self) -> bool {
        self.inner.is_valid()
    }

    fn center(&self) -> Vec<Vec<String>> {
        basis(self.inner.center().space())
    }

    fn derived(&self) -> Vec<Vec<String>> {
        basis(self.inner.derived().space())
    }

    /// `dim`, `derived_dim`, `center_dim`, `derived_center_dim`, `hom_dim`.
    fn invariants<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let a = &self.inner;
        let derived = a.derived().into_space();
        let center = a.center().into_space();
        let d = PyDict::new(py);
        d.set_item("dim", a.dim())?;
        d.set_item("derived_dim", derived.dim())?;
        d.set_item("center_dim", center.dim())?;
        d.set_item("derived_center_dim", derived.intersection(&center).map_err(err)?.dim())?;
        d.set_item("hom_dim", a.hom_to_field(1).dim())?;
        Ok(d)
    }

    #[pyo3(signature = (k = 1))]
    fn h2_dim(&self, py: Python<'_>, k: usize) -> PyResult<usize> {
        let a = &self.inner;
        py.detach(|| h2(a, k).map(|h| h.h2_dim)).map_err(err)
    }

    fn multiplier_dim(&self, py: Python<'_>) -> PyResult<usize> {
        self.h2_dim(py, 1)
    }

    /// A cover and a basis of its kernel.
    fn cover(&self, py: Python<'_>) -> PyResult<(Algebra, Vec<Vec<String>>)> {
        let a = &self.inner;
        let c = py.detach(|| cover(a)).map_err(err)?;
        let kernel = basis(c.extension.kernel_space());
        Ok((Algebra { inner: c.extension.total().clone() }, kernel))
    }

    fn z_star(&self, py: Python<'_>) -> PyResult<Vec<Vec<String>>> {
        let a = &self.inner;
        py.detach(|| z_star(a).map(|s| basis(s.space()))).map_err(err)
    }

    fn is_unicentral(&self, py: Python<'_>) -> PyResult<bool> {
        let a = &self.inner;
        py.detach(|| is_unicentral(a)).map_err(err)
    }

    /// Runs every sequence check for the central ideal spanned by `z`, or,
    /// when `z` is omitted, for a sample of central ideals. Returns one dict
    /// per ideal.
    #[pyo3(signature = (z = None, seed = 0))]
    fn verify<'py>(
        &self,
        py: Python<'py>,
        z: Option<Vec<Vec<Coord>>>,
        seed: u64,
    ) -> PyResult<Vec<Bound<'py, PyDict>>> {
        use rand::SeedableRng;

        let a = &self.inner;
        let (f, n) = (a.field(), a.dim());
        let ideals = match z {
            Some(gens) => {
                let vecs = gens.iter().map(|g| to_vector(f, n, g)).collect::<PyResult<Vec<_>>>()?;
                let s = Subspace::span(f, n, vecs).map_err(err)?;
                if !a.is_central(&s).map_err(err)? {
                    return Err(PyValueError::new_err("z does not span a central subspace"));
                }
                vec![s]
            }
            None => {
                let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
                sample_central_ideals(a, 2, &mut rng).map_err(err)?
            }
        };
        let mut out = Vec::with_capacity(ideals.len());
        for z in &ideals {
            let (five, inf, tra, eq, st) = py
                .detach(|| -> triassoc_core::Result<_> {
                    Ok((
                        verify_five_term(a, z, 1)?,
                        verify_inf_delta(a, z)?,
                        tra_image_theorem(a, z)?,
                        theorem_equivalence(a, z)?,
                        stallings_check(a, z)?,
                    ))
                })
                .map_err(err)?;
            let d = PyDict::new(py);
            d.set_item("basis", basis(z))?;
            d.set_item("dims", five.dims.to_vec())?;
            d.set_item("ranks", five.ranks.to_vec())?;
            d.set_item("five_term", five.passed())?;
            d.set_item("inf_delta", inf.passed())?;
            d.set_item("tra_image", tra.holds())?;
            d.set_item("equivalence", eq.conditions().to_vec())?;
            d.set_item("stallings", st.passed())?;
            d.set_item("passed", five.passed() && inf.passed() && tra.holds() && eq.agree() && st.passed())?;
            out.push(d);
        }
        Ok(out)
    }

    fn __repr__(&self) -> String {
        format!(
            "Algebra(dim={}, field={}{})",
            self.inner.dim(),
            self.inner.field().descriptor(),
            self.inner.name().map(|n| format!(", name={n:?}")).unwrap_or_default()
        )
    }

    fn __eq__(&self, other: &Algebra) -> bool {
        self.inner == other.inner
    }
}

/// Rows `(class, n, derived_bound, cover_bound)` for `n = 1..=n_max`.
#[pyfunction]
fn bound_table(n_max: u64) -> Vec<(String, u64, u64, u64)> {
    bounds(n_max)
        .into_iter()
        .map(|r| (r.class.to_string(), r.n, r.derived_bound, r.cover_bound))
        .collect()
}

#[pymodule]
fn triassoc(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Algebra>()?;
    m.add_function(wrap_pyfunction!(bound_table, m)?)?;
    Ok(())
}
