//! Second cohomology with trivial coefficients `A = 𝔽ᵏ`.
//!
//! A 2-cochain is a triple `(f⊢, f⊣, f⊥)` of bilinear maps `B×B → 𝔽ᵏ`,
//! flattened in the order component, then `(i, j)` row-major, then
//! coefficient coordinate. The cocycle conditions come from the same table
//! as the algebra identities: identity `(x∘₁y)∘₂z = x∘₃(y∘₄z)` gives
//! `f∘₂(x∘₁y, z) = f∘₃(x, y∘₄z)`.

use crate::error::{Error, Result};
use crate::exactlin::{check_field, Echelon, Field, Matrix, QuotientMap, Scalar, Subspace};
use crate::extensions::CentralExtension;
use crate::trialgebra::{Axiom, Op, SparseTable, TriAlgebra, AXIOMS};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CochainTriple {
    field: Field,
    base_dim: usize,
    coeff_dim: usize,
    data: Vec<Scalar>,
}

impl CochainTriple {
    pub fn zero(field: Field, base_dim: usize, coeff_dim: usize) -> CochainTriple {
        CochainTriple { field, base_dim, coeff_dim, data: vec![field.zero(); 3 * base_dim * base_dim * coeff_dim] }
    }

    pub fn from_vector(field: Field, base_dim: usize, coeff_dim: usize, data: Vec<Scalar>) -> Result<CochainTriple> {
        let len = 3 * base_dim * base_dim * coeff_dim;
        if data.len() != len {
            return Err(Error::DimensionMismatch(format!("cochain vector of length {}, expected {len}", data.len())));
        }
        for s in &data {
            check_field(field, s)?;
        }
        Ok(CochainTriple { field, base_dim, coeff_dim, data })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn base_dim(&self) -> usize {
        self.base_dim
    }

    pub fn coeff_dim(&self) -> usize {
        self.coeff_dim
    }

    pub fn as_vector(&self) -> &[Scalar] {
        &self.data
    }

    pub fn into_vector(self) -> Vec<Scalar> {
        self.data
    }

    fn offset(&self, op: Op, i: usize, j: usize) -> usize {
        ((op.index() * self.base_dim + i) * self.base_dim + j) * self.coeff_dim
    }

    /// `f∗(eᵢ, eⱼ)`.
    pub fn value(&self, op: Op, i: usize, j: usize) -> &[Scalar] {
        let s = self.offset(op, i, j);
        &self.data[s..s + self.coeff_dim]
    }

    pub fn set_value(&mut self, op: Op, i: usize, j: usize, value: Vec<Scalar>) -> Result<()> {
        if i >= self.base_dim || j >= self.base_dim || value.len() != self.coeff_dim {
            return Err(Error::DimensionMismatch(format!("cochain entry ({}, {i}, {j})", op.name())));
        }
        for s in &value {
            check_field(self.field, s)?;
        }
        let s = self.offset(op, i, j);
        self.data.splice(s..s + self.coeff_dim, value);
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// `f∗(x, y)` for arbitrary vectors.
    pub fn eval(&self, op: Op, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.coeff_dim];
        for (i, xi) in x.iter().enumerate().filter(|(_, s)| !s.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, s)| !s.is_zero()) {
                let c = xi * yj;
                for (o, v) in out.iter_mut().zip(self.value(op, i, j)) {
                    if !v.is_zero() {
                        *o = &*o + &(&c * v);
                    }
                }
            }
        }
        out
    }

    fn same_shape(&self, other: &CochainTriple) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch { expected: self.field, found: other.field });
        }
        if self.base_dim != other.base_dim || self.coeff_dim != other.coeff_dim {
            return Err(Error::DimensionMismatch(format!(
                "cochains on ({}, {}) and ({}, {})",
                self.base_dim, self.coeff_dim, other.base_dim, other.coeff_dim
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &CochainTriple) -> Result<CochainTriple> {
        self.same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(CochainTriple { data, ..self.clone() })
    }

    pub fn sub(&self, other: &CochainTriple) -> Result<CochainTriple> {
        self.same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(CochainTriple { data, ..self.clone() })
    }

    pub fn scale(&self, c: &Scalar) -> CochainTriple {
        CochainTriple { data: self.data.iter().map(|a| c * a).collect(), ..self.clone() }
    }

    /// `χ∘f` for a linear map `χ: 𝔽ᵏ → 𝔽ᵐ` given as an `m×k` matrix.
    pub fn compose(&self, chi: &Matrix) -> Result<CochainTriple> {
        if chi.ncols() != self.coeff_dim {
            return Err(Error::DimensionMismatch(format!(
                "map with {} columns composed with {}-valued cochain",
                chi.ncols(),
                self.coeff_dim
            )));
        }
        let n = self.base_dim;
        let mut out = CochainTriple::zero(self.field, n, chi.nrows());
        for op in Op::ALL {
            for i in 0..n {
                for j in 0..n {
                    out.set_value(op, i, j, chi.apply(self.value(op, i, j))?)?;
                }
            }
        }
        Ok(out)
    }

    /// `(x, y) ↦ f(βx, βy)` for a linear map `β` into the base, given as a
    /// `base_dim × n` matrix.
    pub fn pullback(&self, beta: &Matrix) -> Result<CochainTriple> {
        if beta.nrows() != self.base_dim {
            return Err(Error::DimensionMismatch(format!(
                "map into dimension {} pulled back along cochain on dimension {}",
                beta.nrows(),
                self.base_dim
            )));
        }
        let n = beta.ncols();
        let cols: Vec<Vec<Scalar>> = (0..n).map(|i| beta.column(i)).collect();
        let mut out = CochainTriple::zero(self.field, n, self.coeff_dim);
        for op in Op::ALL {
            for i in 0..n {
                for j in 0..n {
                    out.set_value(op, i, j, self.eval(op, &cols[i], &cols[j]))?;
                }
            }
        }
        Ok(out)
    }

    /// Concatenates coefficients: `(f₁, …, fᵣ)` valued in `𝔽^{k₁+…+kᵣ}`.
    pub fn stack(field: Field, base_dim: usize, parts: &[CochainTriple]) -> Result<CochainTriple> {
        let k: usize = parts.iter().map(|p| p.coeff_dim).sum();
        let mut out = CochainTriple::zero(field, base_dim, k);
        for p in parts {
            if p.field != field {
                return Err(Error::FieldMismatch { expected: field, found: p.field });
            }
            if p.base_dim != base_dim {
                return Err(Error::DimensionMismatch("stacked cochains on different bases".into()));
            }
        }
        for op in Op::ALL {
            for i in 0..base_dim {
                for j in 0..base_dim {
                    let v = parts.iter().flat_map(|p| p.value(op, i, j).iter().cloned()).collect();
                    out.set_value(op, i, j, v)?;
                }
            }
        }
        Ok(out)
    }

    /// The `c`-th coordinate as a scalar cochain.
    pub fn component(&self, c: usize) -> CochainTriple {
        let data = self.data.iter().skip(c).step_by(self.coeff_dim.max(1)).cloned().collect();
        CochainTriple { field: self.field, base_dim: self.base_dim, coeff_dim: 1, data }
    }
}

/// A failed cocycle condition on one basis triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleDefect {
    pub axiom: usize,
    pub triple: (usize, usize, usize),
    pub defect: Vec<Scalar>,
}

/// Sparse coefficient row of the condition `(axiom, i, j, l)` in the scalar
/// (`k = 1`) unknowns, with duplicate columns merged.
fn condition_row(n: usize, axiom: &Axiom, tables: &[SparseTable; 3], i: usize, j: usize, l: usize) -> Vec<(usize, Scalar)> {
    let var = |op: Op, p: usize, q: usize| (op.index() * n + p) * n + q;
    let mut terms: Vec<(usize, Scalar)> = Vec::new();
    for (m, c) in &tables[axiom.left_inner.index()][i * n + j] {
        terms.push((var(axiom.left_outer, *m, l), c.clone()));
    }
    for (m, c) in &tables[axiom.right_inner.index()][j * n + l] {
        terms.push((var(axiom.right_outer, i, *m), -c));
    }
    terms.sort_by_key(|t| t.0);
    let mut merged: Vec<(usize, Scalar)> = Vec::with_capacity(terms.len());
    for (col, c) in terms {
        match merged.last_mut() {
            Some((last, acc)) if *last == col => *acc = &*acc + &c,
            _ => merged.push((col, c)),
        }
    }
    merged.retain(|(_, c)| !c.is_zero());
    merged
}

/// The full `11n³k × 3n²k` constraint matrix, rows ordered by axiom index,
/// then `(i, j, l)`, then coefficient coordinate.
pub fn constraint_matrix(b: &TriAlgebra, k: usize) -> Matrix {
    let n = b.dim();
    let tables = b.sparse_tables();
    let rows_total = 11 * n * n * n * k;
    let mut m = Matrix::zeros(b.field(), rows_total, 3 * n * n * k);
    let mut r = 0;
    for axiom in &AXIOMS {
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    let row = condition_row(n, axiom, &tables, i, j, l);
                    for c in 0..k {
                        for (col, v) in &row {
                            m.set_unchecked(r, col * k + c, v.clone());
                        }
                        r += 1;
                    }
                }
            }
        }
    }
    m
}

/// Echelon form of the scalar constraint system, built from nonzero rows.
fn scalar_constraints(b: &TriAlgebra) -> Echelon {
    let n = b.dim();
    let tables = b.sparse_tables();
    let mut ech = Echelon::new(b.field(), 3 * n * n);
    for axiom in &AXIOMS {
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    let row = condition_row(n, axiom, &tables, i, j, l);
                    if row.is_empty() {
                        continue;
                    }
                    let mut dense = vec![b.field().zero(); 3 * n * n];
                    for (col, v) in row {
                        dense[col] = v;
                    }
                    ech.insert(dense);
                }
            }
        }
    }
    ech
}

/// Spreads scalar cochain vectors over `k` coefficient coordinates.
fn spread(field: Field, scalar: &Subspace, k: usize) -> Subspace {
    if k == 1 {
        return scalar.clone();
    }
    let len = scalar.ambient_dim();
    let mut vecs = Vec::with_capacity(scalar.dim() * k);
    for w in scalar.basis_vectors() {
        for c in 0..k {
            let mut v = vec![field.zero(); len * k];
            for (idx, s) in w.iter().enumerate() {
                v[idx * k + c] = s.clone();
            }
            vecs.push(v);
        }
    }
    Subspace::from_trusted_rows(field, len * k, vecs)
}

/// `Z²(B, 𝔽ᵏ)`. The conditions decouple across coefficient coordinates, so
/// the scalar system is solved once and spread.
pub fn z2_space(b: &TriAlgebra, k: usize) -> Result<Subspace> {
    b.require_valid()?;
    let scalar = scalar_constraints(b).kernel();
    Ok(spread(b.field(), &scalar, k))
}

/// `B²(B, 𝔽ᵏ)`: all triples `(−ε(x⊢y), −ε(x⊣y), −ε(x⊥y))`.
pub fn b2_space(b: &TriAlgebra, k: usize) -> Subspace {
    let n = b.dim();
    let field = b.field();
    let mut vecs = Vec::with_capacity(n);
    for m in 0..n {
        let mut v = vec![field.zero(); 3 * n * n];
        for op in Op::ALL {
            for i in 0..n {
                for j in 0..n {
                    let c = &b.product(op, i, j)[m];
                    if !c.is_zero() {
                        v[(op.index() * n + i) * n + j] = -c;
                    }
                }
            }
        }
        vecs.push(v);
    }
    spread(field, &Subspace::from_trusted_rows(field, 3 * n * n, vecs), k)
}

/// The coboundary of `ε: B → 𝔽ᵏ`, given as a `k×n` matrix.
pub fn coboundary(b: &TriAlgebra, eps: &Matrix) -> Result<CochainTriple> {
    let n = b.dim();
    if eps.ncols() != n {
        return Err(Error::DimensionMismatch(format!("linear map with {} columns on dimension {n}", eps.ncols())));
    }
    let minus = -&b.field().one();
    let mut out = CochainTriple::zero(b.field(), n, eps.nrows());
    for op in Op::ALL {
        for i in 0..n {
            for j in 0..n {
                let v = eps.apply(b.product(op, i, j))?;
                out.set_value(op, i, j, v.iter().map(|s| &minus * s).collect())?;
            }
        }
    }
    Ok(out)
}

/// Direct evaluation of the cocycle conditions on all basis triples.
pub fn cocycle_defects(b: &TriAlgebra, f: &CochainTriple) -> Result<Vec<CocycleDefect>> {
    let n = b.dim();
    if f.base_dim != n || f.field != b.field() {
        return Err(Error::DimensionMismatch("cochain does not live on this algebra".into()));
    }
    let tables = b.sparse_tables();
    let k = f.coeff_dim;
    let mut out = Vec::new();
    for axiom in &AXIOMS {
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    let row = condition_row(n, axiom, &tables, i, j, l);
                    if row.is_empty() {
                        continue;
                    }
                    let mut defect = vec![b.field().zero(); k];
                    for (col, c) in &row {
                        for (d, v) in defect.iter_mut().zip(&f.data[col * k..(col + 1) * k]) {
                            if !v.is_zero() {
                                *d = &*d + &(c * v);
                            }
                        }
                    }
                    if defect.iter().any(|s| !s.is_zero()) {
                        out.push(CocycleDefect { axiom: axiom.index, triple: (i, j, l), defect });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `Z²`, `B²` and a basis of `H² = Z²/B²` given by pivot-completion
/// representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyResult {
    pub base_dim: usize,
    pub coeff_dim: usize,
    pub z2: Subspace,
    pub b2: Subspace,
    pub h2_dim: usize,
    pub h2_reps: Vec<CochainTriple>,
    quotient: QuotientMap,
}

impl CohomologyResult {
    pub fn quotient(&self) -> &QuotientMap {
        &self.quotient
    }

    fn check(&self, f: &CochainTriple) -> Result<()> {
        if f.base_dim != self.base_dim || f.coeff_dim != self.coeff_dim {
            return Err(Error::DimensionMismatch("cochain of the wrong shape".into()));
        }
        Ok(())
    }

    /// Coordinates of the class of `f` in the representative basis; `f` must
    /// be a cocycle.
    pub fn class_coordinates(&self, f: &CochainTriple) -> Result<Vec<Scalar>> {
        self.check(f)?;
        self.quotient.coordinates(&f.data)
    }

    pub fn lift(&self, coords: &[Scalar]) -> CochainTriple {
        let data = self.quotient.lift(coords);
        CochainTriple { field: self.z2.field(), base_dim: self.base_dim, coeff_dim: self.coeff_dim, data }
    }

    pub fn is_cocycle(&self, f: &CochainTriple) -> bool {
        self.check(f).is_ok() && self.z2.contains_vector(&f.data)
    }

    pub fn is_coboundary(&self, f: &CochainTriple) -> bool {
        self.check(f).is_ok() && self.b2.contains_vector(&f.data)
    }
}

pub fn h2(b: &TriAlgebra, k: usize) -> Result<CohomologyResult> {
    let z2 = z2_space(b, k)?;
    let b2 = b2_space(b, k);
    let quotient = b2.quotient_map(&z2)?;
    let n = b.dim();
    let h2_reps = quotient
        .representatives()
        .row_vecs()
        .map(|r| CochainTriple { field: b.field(), base_dim: n, coeff_dim: k, data: r.to_vec() })
        .collect();
    Ok(CohomologyResult { base_dim: n, coeff_dim: k, h2_dim: quotient.dim(), z2, b2, h2_reps, quotient })
}

/// Whether `f − g` is a coboundary on `b`.
pub fn is_cohomologous(b: &TriAlgebra, f: &CochainTriple, g: &CochainTriple) -> Result<bool> {
    if f.base_dim != b.dim() {
        return Err(Error::DimensionMismatch("cochain does not live on this algebra".into()));
    }
    let d = f.sub(g)?;
    Ok(b2_space(b, f.coeff_dim).contains_vector(&d.data))
}

/// `f∗(x, y) = μ(x)∗μ(y) − μ(x∗y)` in the kernel's canonical coordinates.
pub fn section_cocycle(ext: &CentralExtension, section: &Matrix) -> Result<CochainTriple> {
    let total = ext.total();
    let base = ext.base();
    let (n, big) = (base.dim(), total.dim());
    if section.nrows() != big || section.ncols() != n {
        return Err(Error::NotASection);
    }
    if ext.projection().mul(section)? != Matrix::identity(base.field(), n) {
        return Err(Error::NotASection);
    }
    let kernel = ext.kernel_space();
    let images: Vec<Vec<Scalar>> = (0..n).map(|i| section.column(i)).collect();
    let mut out = CochainTriple::zero(base.field(), n, kernel.dim());
    for op in Op::ALL {
        for i in 0..n {
            for j in 0..n {
                let mut v = total.multiply_unchecked(&images[i], &images[j], op);
                let lifted = section.apply(base.product(op, i, j))?;
                for (a, b) in v.iter_mut().zip(&lifted) {
                    *a = &*a - b;
                }
                out.set_value(op, i, j, kernel.coordinates(&v)?)?;
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, abelian, cover_abelian, nilpotent_square};
    use crate::extensions::force_build;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const Q: Field = Field::Rational;

    fn s(x: i64) -> Scalar {
        Q.from_i64(x)
    }

    #[test]
    fn abelian_cocycles_are_everything() {
        for n in 1..=3 {
            let a = abelian(Q, n);
            assert_eq!(z2_space(&a, 1).unwrap().dim(), 3 * n * n);
            assert_eq!(b2_space(&a, 1).dim(), 0);
            assert_eq!(h2(&a, 1).unwrap().h2_dim, 3 * n * n);
        }
        assert_eq!(h2(&abelian(Q, 2), 2).unwrap().h2_dim, 24);
    }

    #[test]
    fn nilpotent_square_cohomology() {
        let l = nilpotent_square(Q);
        let z2 = z2_space(&l, 1).unwrap();
        assert_eq!(z2.dim(), 3);
        // Free parameters: the three components at (e1, e1).
        let idx: Vec<usize> = z2.pivots().to_vec();
        assert_eq!(idx, vec![0, 4, 8]);
        let b2 = b2_space(&l, 1);
        assert_eq!(b2.dim(), 1);
        assert_eq!(b2.pivots(), &[0]);
        let h = h2(&l, 1).unwrap();
        assert_eq!(h.h2_dim, 2);
        assert!(!is_cohomologous(&l, &h.h2_reps[0], &h.h2_reps[1]).unwrap());
        assert_eq!(h.h2_reps[0].value(Op::Dashv, 0, 0), &[s(1)]);
        assert_eq!(h.h2_reps[1].value(Op::Perp, 0, 0), &[s(1)]);
    }

    #[test]
    fn constraint_matrix_kernel_matches_sparse_solver() {
        for a in [nilpotent_square(Q), cover_abelian(Q, 1), catalog::upper_triangular(Q)] {
            let m = constraint_matrix(&a, 1);
            let n = a.dim();
            assert_eq!((m.nrows(), m.ncols()), (11 * n * n * n, 3 * n * n));
            assert_eq!(m.kernel(), z2_space(&a, 1).unwrap());
            let m2 = constraint_matrix(&a, 2);
            assert_eq!(m2.kernel(), z2_space(&a, 2).unwrap());
        }
    }

    #[test]
    fn coboundaries_are_cocycles() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for a in [nilpotent_square(Q), cover_abelian(Q, 1), catalog::upper_triangular(Q), catalog::idempotent(Q)] {
            for k in 1..=2 {
                let b2 = b2_space(&a, k);
                let z2 = z2_space(&a, k).unwrap();
                assert!(b2.is_subspace_of(&z2));
                let eps = Matrix::from_rows(
                    Q,
                    a.dim(),
                    (0..k).map(|_| catalog::random_vector(Q, a.dim(), &mut rng)).collect(),
                )
                .unwrap();
                let f = coboundary(&a, &eps).unwrap();
                assert!(b2.contains_vector(f.as_vector()));
                assert!(cocycle_defects(&a, &f).unwrap().is_empty());
            }
        }
    }

    #[test]
    fn unvalidated_base_is_refused() {
        let mut a = TriAlgebra::abelian(Q, 2);
        a.set_product(Op::Vdash, 0, 1, vec![s(1), s(0)]).unwrap();
        assert!(matches!(z2_space(&a, 1), Err(Error::Unvalidated { .. })));
    }

    #[test]
    fn membership_matches_extension_validity() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for base in [abelian(Q, 2), nilpotent_square(Q), cover_abelian(Q, 1)] {
            let z2 = z2_space(&base, 1).unwrap();
            for t in 0..40 {
                let f = if t % 2 == 0 {
                    catalog::random_cochain(&base, 1, &mut rng)
                } else {
                    catalog::random_cocycle(&base, 1, &mut rng).unwrap()
                };
                let ext = force_build(&base, 1, &f).unwrap();
                let report = ext.total().validate_axioms();
                assert_eq!(z2.contains_vector(f.as_vector()), report.passed());
                let mut axioms: Vec<usize> =
                    cocycle_defects(&base, &f).unwrap().iter().map(|d| d.axiom).collect();
                axioms.dedup();
                assert_eq!(axioms, report.violated_axioms());
            }
        }
    }

    #[test]
    fn cochain_algebra() {
        let l = nilpotent_square(Q);
        let h = h2(&l, 1).unwrap();
        let stacked = CochainTriple::stack(Q, 2, &h.h2_reps).unwrap();
        assert_eq!(stacked.coeff_dim(), 2);
        assert_eq!(stacked.component(1), h.h2_reps[1]);
        let swap = Matrix::from_i64(Q, &[vec![0, 1], vec![1, 0]]);
        assert_eq!(stacked.compose(&swap).unwrap().component(0), h.h2_reps[1]);
        let sum = h.h2_reps[0].add(&h.h2_reps[1]).unwrap();
        assert_eq!(h.class_coordinates(&sum).unwrap(), vec![s(1), s(1)]);
        assert_eq!(h.lift(&[s(1), s(1)]), sum);
        assert_eq!(sum.sub(&h.h2_reps[1]).unwrap(), h.h2_reps[0]);
        assert_eq!(h.h2_reps[0].scale(&s(0)), CochainTriple::zero(Q, 2, 1));
        // Pulling back along the identity does nothing.
        assert_eq!(sum.pullback(&Matrix::identity(Q, 2)).unwrap(), sum);
    }
}
