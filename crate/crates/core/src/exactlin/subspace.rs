//! Linear subspaces of 𝔽ⁿ stored by their canonical RREF basis.
//!
//! Because the basis is the unique reduced row-echelon form of the span, two
//! `Subspace` values compare equal exactly when they are the same set.

use crate::error::{Error, Result};
use crate::exactlin::matrix::{check_field, Echelon};
use crate::exactlin::{Field, Matrix, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace { ambient, basis: Matrix::zeros(field, 0, ambient), pivots: Vec::new() }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        Subspace { ambient, basis: Matrix::identity(field, ambient), pivots: (0..ambient).collect() }
    }

    /// Span of the given vectors.
    pub fn span<I>(field: Field, ambient: usize, vectors: I) -> Result<Subspace>
    where
        I: IntoIterator<Item = Vec<Scalar>>,
    {
        let mut ech = Echelon::new(field, ambient);
        for v in vectors {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch(format!(
                    "vector of length {} in ambient dimension {ambient}",
                    v.len()
                )));
            }
            for s in &v {
                check_field(field, s)?;
            }
            ech.insert(v);
        }
        Ok(Self::from_echelon(field, ech))
    }

    pub(crate) fn from_trusted_rows(field: Field, ambient: usize, vectors: Vec<Vec<Scalar>>) -> Subspace {
        let mut ech = Echelon::new(field, ambient);
        for v in vectors {
            ech.insert(v);
        }
        Self::from_echelon(field, ech)
    }

    pub(crate) fn from_echelon(field: Field, ech: Echelon) -> Subspace {
        let ambient = ech.cols();
        let pivots = ech.pivots().to_vec();
        let rows = ech.into_rows();
        let basis = Matrix::from_rows(field, ambient, rows).expect("echelon rows are well formed");
        Subspace { ambient, basis, pivots }
    }

    pub fn from_matrix_rows(m: &Matrix) -> Subspace {
        let mut ech = Echelon::new(m.field(), m.ncols());
        for r in m.row_vecs() {
            ech.insert(r.to_vec());
        }
        Self::from_echelon(m.field(), ech)
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    /// Canonical basis, one vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[Scalar]> + '_ {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn echelon(&self) -> Echelon {
        let mut ech = Echelon::new(self.field(), self.ambient);
        for r in self.basis_vectors() {
            ech.insert(r.to_vec());
        }
        ech
    }

    fn compatible(&self, other: &Subspace) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch { expected: self.field(), found: other.field() });
        }
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "ambient dimensions {} and {}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    /// Remainder of `v` after reduction by the basis; zero iff `v` lies in
    /// the subspace.
    fn residual(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut r = v.to_vec();
        for (row, &p) in self.basis.row_vecs().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let c = r[p].clone();
            for j in p..self.ambient {
                if !row[j].is_zero() {
                    r[j] = r[j].sub_mul(&c, &row[j]);
                }
            }
        }
        r
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        v.len() == self.ambient && self.residual(v).iter().all(Scalar::is_zero)
    }

    /// Coordinates of `v` in the canonical basis. Since the basis is in
    /// RREF these are just the entries of `v` at the pivot columns.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if !self.contains_vector(v) {
            return Err(Error::NotContained);
        }
        Ok(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Linear combination of the canonical basis.
    pub fn from_coordinates(&self, coords: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field().zero(); self.ambient];
        for (c, row) in coords.iter().zip(self.basis_vectors()) {
            if c.is_zero() {
                continue;
            }
            for (o, r) in out.iter_mut().zip(row) {
                if !r.is_zero() {
                    *o = &*o + &(c * r);
                }
            }
        }
        out
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.field() == other.field()
            && self.ambient == other.ambient
            && self.basis_vectors().all(|v| other.contains_vector(v))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.compatible(other)?;
        let mut ech = self.echelon();
        for r in other.basis_vectors() {
            ech.insert(r.to_vec());
        }
        Ok(Self::from_echelon(self.field(), ech))
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.compatible(other)?;
        let (da, db) = (self.dim(), other.dim());
        if da == 0 || db == 0 {
            return Ok(Subspace::zero(self.field(), self.ambient));
        }
        // (x, y) with x·A = y·B, i.e. the kernel of [Aᵀ | -Bᵀ].
        let field = self.field();
        let mut m = Matrix::zeros(field, self.ambient, da + db);
        for j in 0..self.ambient {
            for i in 0..da {
                m.set_unchecked(j, i, self.basis.get(i, j).clone());
            }
            for i in 0..db {
                m.set_unchecked(j, da + i, -other.basis.get(i, j));
            }
        }
        let ker = m.kernel();
        let vecs = ker.basis_vectors().map(|v| self.from_coordinates(&v[..da])).collect();
        Ok(Subspace::from_trusted_rows(field, self.ambient, vecs))
    }

    /// Rows of `outer`'s canonical basis, taken in pivot order, that extend
    /// the basis of `self` to a basis of `outer`.
    fn completion_rows(&self, outer: &Subspace) -> Result<Vec<Vec<Scalar>>> {
        self.compatible(outer)?;
        if !self.is_subspace_of(outer) {
            return Err(Error::NotContained);
        }
        let mut ech = self.echelon();
        let mut kept = Vec::new();
        for r in outer.basis_vectors() {
            if ech.insert(r.to_vec()) {
                kept.push(r.to_vec());
            }
        }
        Ok(kept)
    }

    /// Deterministic complement of `self` inside `outer`: the span of the
    /// pivot-completion rows.
    pub fn complement_in(&self, outer: &Subspace) -> Result<Subspace> {
        let rows = self.completion_rows(outer)?;
        Ok(Subspace::from_trusted_rows(self.field(), self.ambient, rows))
    }

    /// Coordinates on `outer / self`.
    pub fn quotient_map(&self, outer: &Subspace) -> Result<QuotientMap> {
        let rows = self.completion_rows(outer)?;
        let field = self.field();
        let reps = Matrix::from_rows(field, self.ambient, rows)?;
        let stacked = self.basis.vstack(&reps)?;
        let square = stacked.select_columns(outer.pivots());
        let inv = square.inverse().expect("stacked basis is a basis of the outer space");
        let da = self.dim();
        let cols: Vec<usize> = (da..outer.dim()).collect();
        Ok(QuotientMap {
            sub: self.clone(),
            outer: outer.clone(),
            representatives: reps,
            extract: inv.select_columns(&cols),
        })
    }

    /// `{v : ⟨v, s⟩ = 0 for all s in self}`.
    pub fn annihilator(&self) -> Subspace {
        self.basis.kernel()
    }

    /// Image of the subspace under `m` (acting on column vectors).
    pub fn image_under(&self, m: &Matrix) -> Result<Subspace> {
        if m.field() != self.field() {
            return Err(Error::FieldMismatch { expected: self.field(), found: m.field() });
        }
        if m.ncols() != self.ambient {
            return Err(Error::DimensionMismatch(format!(
                "map with {} columns applied to ambient dimension {}",
                m.ncols(),
                self.ambient
            )));
        }
        let vecs = self.basis_vectors().map(|v| m.apply(v)).collect::<Result<Vec<_>>>()?;
        Ok(Subspace::from_trusted_rows(self.field(), m.nrows(), vecs))
    }
}

/// Coordinates of `outer / sub` relative to the pivot-completion
/// representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientMap {
    sub: Subspace,
    outer: Subspace,
    representatives: Matrix,
    extract: Matrix,
}

impl QuotientMap {
    pub fn dim(&self) -> usize {
        self.representatives.nrows()
    }

    pub fn sub(&self) -> &Subspace {
        &self.sub
    }

    pub fn outer(&self) -> &Subspace {
        &self.outer
    }

    /// Rows whose classes form the chosen basis of the quotient.
    pub fn representatives(&self) -> &Matrix {
        &self.representatives
    }

    /// Coordinates of the class `x + sub`; `x` must lie in `outer`.
    pub fn coordinates(&self, x: &[Scalar]) -> Result<Vec<Scalar>> {
        if !self.outer.contains_vector(x) {
            return Err(Error::NotContained);
        }
        let field = self.outer.field();
        let restricted: Vec<Scalar> = self.outer.pivots().iter().map(|&p| x[p].clone()).collect();
        Ok((0..self.dim())
            .map(|j| {
                let mut acc = field.zero();
                for (i, r) in restricted.iter().enumerate() {
                    let w = self.extract.get(i, j);
                    if !r.is_zero() && !w.is_zero() {
                        acc = &acc + &(r * w);
                    }
                }
                acc
            })
            .collect())
    }

    /// Representative `Σ cⱼ·repⱼ` of the class with the given coordinates.
    pub fn lift(&self, coords: &[Scalar]) -> Vec<Scalar> {
        let field = self.outer.field();
        let mut out = vec![field.zero(); self.outer.ambient_dim()];
        for (c, row) in coords.iter().zip(self.representatives.row_vecs()) {
            if c.is_zero() {
                continue;
            }
            for (o, r) in out.iter_mut().zip(row) {
                if !r.is_zero() {
                    *o = &*o + &(c * r);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| Q.from_i64(x)).collect()
    }

    fn span(n: usize, vs: &[&[i64]]) -> Subspace {
        Subspace::span(Q, n, vs.iter().map(|x| v(x))).unwrap()
    }

    #[test]
    fn complement_of_second_axis() {
        let a = span(2, &[&[0, 1]]);
        let c = a.complement_in(&Subspace::full(Q, 2)).unwrap();
        assert_eq!(c, span(2, &[&[1, 0]]));
    }

    #[test]
    fn diagonal_meets_axis_trivially() {
        let a = span(2, &[&[1, 1]]);
        let b = span(2, &[&[1, 0]]);
        assert!(a.intersection(&b).unwrap().is_zero());
        assert_eq!(a.sum(&b).unwrap(), Subspace::full(Q, 2));
    }

    #[test]
    fn canonical_regardless_of_generators() {
        let a = span(3, &[&[1, 2, 3], &[0, 1, 1]]);
        let b = span(3, &[&[1, 3, 4], &[2, 5, 7], &[1, 1, 2]]);
        assert_eq!(a, b);
    }

    #[test]
    fn complement_requires_containment() {
        let a = span(2, &[&[1, 1]]);
        let b = span(2, &[&[1, 0]]);
        assert_eq!(a.complement_in(&b), Err(Error::NotContained));
    }

    #[test]
    fn quotient_coordinates_kill_the_subspace() {
        let outer = span(3, &[&[1, 0, 0], &[0, 1, 1]]);
        let sub = span(3, &[&[1, 1, 1]]);
        let q = sub.quotient_map(&outer).unwrap();
        assert_eq!(q.dim(), 1);
        let on_sub = q.coordinates(&v(&[2, 2, 2])).unwrap();
        assert!(on_sub.iter().all(Scalar::is_zero));
        let x = v(&[3, -1, -1]);
        let c = q.coordinates(&x).unwrap();
        let back = q.lift(&c);
        let diff: Vec<Scalar> = x.iter().zip(&back).map(|(a, b)| a - b).collect();
        assert!(sub.contains_vector(&diff));
        assert!(q.coordinates(&v(&[0, 0, 1])).is_err());
    }

    #[test]
    fn annihilator_dimension() {
        let a = span(4, &[&[1, 0, 1, 0], &[0, 1, 0, 0]]);
        let ann = a.annihilator();
        assert_eq!(ann.dim(), 2);
        for x in a.basis_vectors() {
            for y in ann.basis_vectors() {
                let dot = x.iter().zip(y).fold(Q.zero(), |acc, (p, q)| &acc + &(p * q));
                assert!(dot.is_zero());
            }
        }
    }
}
