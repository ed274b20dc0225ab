//! Triassociative algebras given by structure constants.
//!
//! An algebra of dimension `n` stores three `n×n×n` tensors, one per
//! product, with `eᵢ ∗ eⱼ = Σₖ c∗[i][j][k] eₖ`. Subalgebras, ideals, the
//! center and the derived ideal are all linear subspaces, represented by
//! [`AlgSubspace`] over the canonical [`Subspace`] type.

mod axioms;
mod bounds;

use std::ptr;

pub use axioms::{Axiom, Op, ASSOCIATIVITY, AXIOMS, DIASSOCIATIVE};
pub use bounds::{bound_table, AlgebraClass, BoundRow, DefiningPairBound, DimBoundReport};

use crate::error::{Error, Result};
use crate::exactlin::{check_field, Echelon, Field, Matrix, Scalar, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriAlgebra {
    field: Field,
    dim: usize,
    tensors: [Vec<Scalar>; 3],
    name: Option<String>,
}

/// A failed identity on one basis triple. Triples are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomViolation {
    pub axiom: usize,
    pub triple: (usize, usize, usize),
    /// `lhs - rhs` in basis coordinates.
    pub defect: Vec<Scalar>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Distinct violated axiom indices, ascending.
    pub fn violated_axioms(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.violations.iter().map(|x| x.axiom).collect();
        v.dedup();
        v
    }
}

/// Nonzero structure constants of one product, indexed by `i * n + j`.
pub(crate) type SparseTable = Vec<Vec<(usize, Scalar)>>;

fn accumulate(out: &mut [Scalar], coeff: &Scalar, terms: &[(usize, Scalar)]) {
    for (k, v) in terms {
        out[*k] = &out[*k] + &(coeff * v);
    }
}

impl TriAlgebra {
    /// Builds an algebra from its three flattened tensors, indexed
    /// `(i * n + j) * n + k`, in the order ⊢, ⊣, ⊥.
    pub fn new(field: Field, dim: usize, tensors: [Vec<Scalar>; 3]) -> Result<TriAlgebra> {
        for (t, op) in tensors.iter().zip(Op::ALL) {
            if t.len() != dim * dim * dim {
                return Err(Error::MalformedAlgebra(format!(
                    "{} tensor has {} entries, expected {}",
                    op.name(),
                    t.len(),
                    dim * dim * dim
                )));
            }
            for s in t {
                check_field(field, s)?;
            }
        }
        Ok(TriAlgebra { field, dim, tensors, name: None })
    }

    /// The algebra with all products zero.
    pub fn abelian(field: Field, dim: usize) -> TriAlgebra {
        let z = vec![field.zero(); dim * dim * dim];
        TriAlgebra { field, dim, tensors: [z.clone(), z.clone(), z], name: None }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> TriAlgebra {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn idx(&self, i: usize, j: usize) -> usize {
        (i * self.dim + j) * self.dim
    }

    /// Coordinates of `eᵢ ∗ eⱼ`.
    pub fn product(&self, op: Op, i: usize, j: usize) -> &[Scalar] {
        let s = self.idx(i, j);
        &self.tensors[op.index()][s..s + self.dim]
    }

    pub fn tensor(&self, op: Op) -> &[Scalar] {
        &self.tensors[op.index()]
    }

    pub fn set_product(&mut self, op: Op, i: usize, j: usize, value: Vec<Scalar>) -> Result<()> {
        let n = self.dim;
        if i >= n || j >= n || value.len() != n {
            return Err(Error::MalformedAlgebra(format!(
                "product ({}, {i}, {j}) with {} coordinates in dimension {n}",
                op.name(),
                value.len()
            )));
        }
        for s in &value {
            check_field(self.field, s)?;
        }
        let s = self.idx(i, j);
        self.tensors[op.index()].splice(s..s + n, value);
        Ok(())
    }

    pub fn is_abelian(&self) -> bool {
        self.tensors.iter().all(|t| t.iter().all(Scalar::is_zero))
    }

    pub(crate) fn sparse_table(&self, op: Op) -> SparseTable {
        let n = self.dim;
        (0..n * n)
            .map(|ij| {
                let s = ij * n;
                self.tensors[op.index()][s..s + n]
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(k, v)| (k, v.clone()))
                    .collect()
            })
            .collect()
    }

    pub(crate) fn sparse_tables(&self) -> [SparseTable; 3] {
        [self.sparse_table(Op::Vdash), self.sparse_table(Op::Dashv), self.sparse_table(Op::Perp)]
    }

    fn check_vector(&self, x: &[Scalar]) -> Result<()> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in algebra of dimension {}",
                x.len(),
                self.dim
            )));
        }
        for s in x {
            check_field(self.field, s)?;
        }
        Ok(())
    }

    /// Bilinear extension `x ∗ y = Σᵢⱼ xᵢ yⱼ c∗[i][j][·]`.
    pub fn multiply(&self, x: &[Scalar], y: &[Scalar], op: Op) -> Result<Vec<Scalar>> {
        self.check_vector(x)?;
        self.check_vector(y)?;
        Ok(self.multiply_unchecked(x, y, op))
    }

    pub(crate) fn multiply_unchecked(&self, x: &[Scalar], y: &[Scalar], op: Op) -> Vec<Scalar> {
        let n = self.dim;
        let mut out = vec![self.field.zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (o, v) in out.iter_mut().zip(self.product(op, i, j)) {
                    if !v.is_zero() {
                        *o = &*o + &(&c * v);
                    }
                }
            }
        }
        out
    }

    /// Checks the eleven identities on every basis triple, which suffices by
    /// trilinearity. Violations are listed by axiom index, then triple.
    pub fn validate_axioms(&self) -> AxiomReport {
        let tables = self.sparse_tables();
        let mut violations = Vec::new();
        for axiom in &AXIOMS {
            violations.extend(self.identity_defects(axiom, &tables));
        }
        AxiomReport { violations }
    }

    pub fn is_valid(&self) -> bool {
        let tables = self.sparse_tables();
        AXIOMS.iter().all(|a| self.identity_defects(a, &tables).is_empty())
    }

    /// Checks a chosen subset of identities, e.g. [`DIASSOCIATIVE`].
    pub fn check_identities(&self, indices: &[usize]) -> AxiomReport {
        let tables = self.sparse_tables();
        let violations =
            indices.iter().flat_map(|&i| self.identity_defects(Axiom::get(i), &tables)).collect();
        AxiomReport { violations }
    }

    pub(crate) fn require_valid(&self) -> Result<()> {
        let report = self.validate_axioms();
        match report.violations.first() {
            None => Ok(()),
            Some(v) => Err(Error::Unvalidated { violations: report.violations.len(), first_axiom: v.axiom }),
        }
    }

    fn identity_defects(&self, axiom: &Axiom, tables: &[SparseTable; 3]) -> Vec<AxiomViolation> {
        let n = self.dim;
        let li = &tables[axiom.left_inner.index()];
        let lo = &tables[axiom.left_outer.index()];
        let ro = &tables[axiom.right_outer.index()];
        let ri = &tables[axiom.right_inner.index()];
        // Only triples where one side can be nonzero need evaluating.
        let mut candidate = vec![false; n * n * n];
        for i in 0..n {
            for j in 0..n {
                if !li[i * n + j].is_empty() {
                    for l in 0..n {
                        candidate[(i * n + j) * n + l] = true;
                    }
                }
                if !ri[i * n + j].is_empty() {
                    for x in 0..n {
                        candidate[(x * n + i) * n + j] = true;
                    }
                }
            }
        }
        let mut out = Vec::new();
        for (t, _) in candidate.iter().enumerate().filter(|(_, c)| **c) {
            let (i, j, l) = (t / (n * n), (t / n) % n, t % n);
            let mut defect = vec![self.field.zero(); n];
            for (m, c) in &li[i * n + j] {
                accumulate(&mut defect, c, &lo[m * n + l]);
            }
            let mut rhs = vec![self.field.zero(); n];
            for (m, c) in &ri[j * n + l] {
                accumulate(&mut rhs, c, &ro[i * n + m]);
            }
            if defect != rhs {
                for (d, r) in defect.iter_mut().zip(&rhs) {
                    *d = &*d - r;
                }
                out.push(AxiomViolation { axiom: axiom.index, triple: (i, j, l), defect });
            }
        }
        out
    }

    pub fn full_space(&self) -> AlgSubspace<'_> {
        AlgSubspace { parent: self, space: Subspace::full(self.field, self.dim) }
    }

    pub fn zero_space(&self) -> AlgSubspace<'_> {
        AlgSubspace { parent: self, space: Subspace::zero(self.field, self.dim) }
    }

    pub fn subspace(&self, space: Subspace) -> Result<AlgSubspace<'_>> {
        AlgSubspace::new(self, space)
    }

    pub fn span(&self, vectors: Vec<Vec<Scalar>>) -> Result<AlgSubspace<'_>> {
        AlgSubspace::new(self, Subspace::span(self.field, self.dim, vectors)?)
    }

    /// `S◊T = S⊢T + S⊣T + S⊥T`, the span of all products of basis vectors.
    pub fn product_subspace<'a>(&'a self, s: &AlgSubspace<'_>, t: &AlgSubspace<'_>) -> Result<AlgSubspace<'a>> {
        if !ptr::eq(s.parent, self) || !ptr::eq(t.parent, self) {
            return Err(Error::ParentMismatch);
        }
        let mut ech = Echelon::new(self.field, self.dim);
        for x in s.space.basis_vectors() {
            for y in t.space.basis_vectors() {
                for op in Op::ALL {
                    ech.insert(self.multiply_unchecked(x, y, op));
                }
            }
        }
        Ok(AlgSubspace { parent: self, space: Subspace::from_echelon(self.field, ech) })
    }

    /// The derived ideal `L′ = L◊L`.
    pub fn derived(&self) -> AlgSubspace<'_> {
        let mut ech = Echelon::new(self.field, self.dim);
        for t in &self.tensors {
            for chunk in t.chunks(self.dim.max(1)) {
                ech.insert(chunk.to_vec());
            }
        }
        AlgSubspace { parent: self, space: Subspace::from_echelon(self.field, ech) }
    }

    /// `Z(L)`: the common kernel of all left and right multiplication
    /// operators of the three products.
    pub fn center(&self) -> AlgSubspace<'_> {
        let n = self.dim;
        let mut ech = Echelon::new(self.field, n);
        for t in &self.tensors {
            for j in 0..n {
                for o in 0..n {
                    // z ↦ (z ∗ eⱼ)ₒ and z ↦ (eⱼ ∗ z)ₒ
                    let left: Vec<Scalar> = (0..n).map(|i| t[(i * n + j) * n + o].clone()).collect();
                    let right: Vec<Scalar> = (0..n).map(|i| t[(j * n + i) * n + o].clone()).collect();
                    ech.insert(left);
                    ech.insert(right);
                }
            }
        }
        AlgSubspace { parent: self, space: ech.kernel() }
    }

    /// Whether `s` annihilates everything under all three products.
    pub fn is_central(&self, s: &Subspace) -> Result<bool> {
        let sub = self.subspace(s.clone())?;
        Ok(sub.space.is_subspace_of(&self.center().space))
    }

    /// Fails with the first basis vector of `s` outside the center.
    pub(crate) fn require_central(&self, s: &Subspace) -> Result<()> {
        self.subspace(s.clone())?;
        let z = self.center().space;
        match s.basis_vectors().find(|v| !z.contains_vector(v)) {
            None => Ok(()),
            Some(v) => Err(Error::NotCentral {
                vector: v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "),
            }),
        }
    }

    /// `L◊S ⊆ S` and `S◊L ⊆ S`.
    pub fn is_ideal(&self, s: &AlgSubspace<'_>) -> Result<bool> {
        let full = self.full_space();
        let left = self.product_subspace(&full, s)?;
        let right = self.product_subspace(s, &full)?;
        Ok(left.space.is_subspace_of(&s.space) && right.space.is_subspace_of(&s.space))
    }

    /// `L/I` on the pivot-completion basis. The section sends the `t`-th
    /// quotient basis vector to the `t`-th completion row.
    pub fn quotient(&self, ideal: &AlgSubspace<'_>) -> Result<Quotient> {
        if !ptr::eq(ideal.parent, self) {
            return Err(Error::ParentMismatch);
        }
        if !self.is_ideal(ideal)? {
            return Err(Error::NotIdeal);
        }
        let full = Subspace::full(self.field, self.dim);
        let qm = ideal.space.quotient_map(&full)?;
        let q = qm.dim();
        let reps = qm.representatives().clone();
        let mut projection = Matrix::zeros(self.field, q, self.dim);
        for i in 0..self.dim {
            let mut e = vec![self.field.zero(); self.dim];
            e[i] = self.field.one();
            for (t, c) in qm.coordinates(&e)?.into_iter().enumerate() {
                projection.set(t, i, c)?;
            }
        }
        let mut algebra = TriAlgebra::abelian(self.field, q);
        for op in Op::ALL {
            for s in 0..q {
                for t in 0..q {
                    let prod = self.multiply_unchecked(reps.row(s), reps.row(t), op);
                    algebra.set_product(op, s, t, projection.apply(&prod)?)?;
                }
            }
        }
        Ok(Quotient { algebra, projection, section: reps.transpose() })
    }

    /// Homomorphisms `L → 𝔽ᵏ` for the trivial module: `k×n` matrices (row
    /// major, entry `c*n + i` is the `c`-th coordinate of the image of
    /// `eᵢ`) whose rows annihilate `L′`.
    pub fn hom_to_field(&self, k: usize) -> Subspace {
        let ann = self.derived().space.annihilator();
        let n = self.dim;
        let mut vecs = Vec::with_capacity(k * ann.dim());
        for c in 0..k {
            for row in ann.basis_vectors() {
                let mut v = vec![self.field.zero(); k * n];
                v[c * n..(c + 1) * n].clone_from_slice(row);
                vecs.push(v);
            }
        }
        Subspace::from_trusted_rows(self.field, k * n, vecs)
    }

    /// The algebra expressed in the basis given by the rows of `p`:
    /// `fₐ = Σᵢ p[a][i] eᵢ`.
    pub fn change_basis(&self, p: &Matrix) -> Result<TriAlgebra> {
        if p.nrows() != self.dim || p.ncols() != self.dim {
            return Err(Error::DimensionMismatch("basis change must be square".into()));
        }
        let inv = p.inverse().ok_or_else(|| Error::DimensionMismatch("basis change is singular".into()))?;
        let inv_t = inv.transpose();
        let mut out = TriAlgebra::abelian(self.field, self.dim);
        out.name = self.name.clone();
        for op in Op::ALL {
            for a in 0..self.dim {
                for b in 0..self.dim {
                    let prod = self.multiply(p.row(a), p.row(b), op)?;
                    // new coordinates c satisfy c·P = prod
                    out.set_product(op, a, b, inv_t.apply(&prod)?)?;
                }
            }
        }
        Ok(out)
    }

    /// `L ⊕ M` with `L` on the first coordinates.
    pub fn direct_sum(&self, other: &TriAlgebra) -> Result<TriAlgebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch { expected: self.field, found: other.field });
        }
        let (n, m) = (self.dim, other.dim);
        let mut out = TriAlgebra::abelian(self.field, n + m);
        for op in Op::ALL {
            for i in 0..n {
                for j in 0..n {
                    let mut v = self.product(op, i, j).to_vec();
                    v.extend(std::iter::repeat(self.field.zero()).take(m));
                    out.set_product(op, i, j, v)?;
                }
            }
            for i in 0..m {
                for j in 0..m {
                    let mut v = vec![self.field.zero(); n];
                    v.extend_from_slice(other.product(op, i, j));
                    out.set_product(op, n + i, n + j, v)?;
                }
            }
        }
        Ok(out)
    }

    /// Dimension bounds for `K′` and, when `kernel` is given, for `K` as
    /// the first member of the defining pair `(K, kernel)`.
    pub fn check_dim_bounds(&self, kernel: Option<&Subspace>) -> Result<DimBoundReport> {
        bounds::check_dim_bounds(self, kernel)
    }
}

/// A subspace of a specific algebra.
#[derive(Clone, Debug)]
pub struct AlgSubspace<'a> {
    parent: &'a TriAlgebra,
    space: Subspace,
}

impl<'a> AlgSubspace<'a> {
    pub fn new(parent: &'a TriAlgebra, space: Subspace) -> Result<AlgSubspace<'a>> {
        if space.field() != parent.field {
            return Err(Error::FieldMismatch { expected: parent.field, found: space.field() });
        }
        if space.ambient_dim() != parent.dim {
            return Err(Error::DimensionMismatch(format!(
                "subspace of ambient dimension {} in algebra of dimension {}",
                space.ambient_dim(),
                parent.dim
            )));
        }
        Ok(AlgSubspace { parent, space })
    }

    pub fn parent(&self) -> &'a TriAlgebra {
        self.parent
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn into_space(self) -> Subspace {
        self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

impl PartialEq for AlgSubspace<'_> {
    fn eq(&self, other: &Self) -> bool {
        ptr::eq(self.parent, other.parent) && self.space == other.space
    }
}

/// `L/I` with its projection `L → L/I` (`q×n`) and linear section
/// `L/I → L` (`n×q`), both acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub algebra: TriAlgebra,
    pub projection: Matrix,
    pub section: Matrix,
}

#[cfg(test)]
mod tests;
