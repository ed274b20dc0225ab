//! Dense exact matrices and reduced row-echelon form.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactlin::{Field, Scalar, Subspace};

/// Dense row-major matrix over a single field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

pub(crate) fn check_field(expected: Field, s: &Scalar) -> Result<()> {
    if s.field() != expected {
        return Err(Error::FieldMismatch { expected, found: s.field() });
    }
    Ok(())
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    /// Builds a matrix from explicit rows. Every row must have `cols` entries
    /// and every entry must belong to `field`.
    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            for s in &row {
                check_field(field, s)?;
            }
            data.extend(row);
        }
        Ok(Matrix { field, rows: nrows, cols, data })
    }

    pub fn from_i64(field: Field, rows: &[Vec<i64>]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged integer matrix");
                r.iter().map(|&v| field.from_i64(v))
            })
            .collect();
        Matrix { field, rows: rows.len(), cols, data }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) -> Result<()> {
        check_field(self.field, &v)?;
        self.data[i * self.cols + j] = v;
        Ok(())
    }

    pub(crate) fn set_unchecked(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> impl Iterator<Item = &[Scalar]> + '_ {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    fn same_field(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch { expected: self.field, found: other.field });
        }
        Ok(())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(l, j);
                    if !b.is_zero() {
                        let idx = i * other.cols + j;
                        out.data[idx] = &out.data[idx] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `M·x` for a column vector `x`.
    pub fn apply(&self, x: &[Scalar]) -> Result<Vec<Scalar>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} applied to {}x{} matrix",
                x.len(),
                self.rows,
                self.cols
            )));
        }
        for s in x {
            check_field(self.field, s)?;
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(i).iter().zip(x) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                acc
            })
            .collect())
    }

    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch("vstack with unequal column counts".into()));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix { field: self.field, rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// Columns `cols` in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows, cols.len());
        for i in 0..self.rows {
            for (t, &j) in cols.iter().enumerate() {
                out.data[i * cols.len() + t] = self.get(i, j).clone();
            }
        }
        out
    }

    /// Reduced row-echelon form, same shape as `self` (zero rows at the
    /// bottom), together with the pivot columns in ascending order.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut ech = Echelon::new(self.field, self.cols);
        for r in self.row_vecs() {
            ech.insert(r.to_vec());
        }
        let pivots = ech.pivots().to_vec();
        let mut out = Matrix::zeros(self.field, self.rows, self.cols);
        for (i, r) in ech.into_rows().into_iter().enumerate() {
            for (j, v) in r.into_iter().enumerate() {
                out.data[i * self.cols + j] = v;
            }
        }
        (out, pivots)
    }

    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new(self.field, self.cols);
        for r in self.row_vecs() {
            ech.insert(r.to_vec());
        }
        ech.rank()
    }

    /// Right null space `{v : M·v = 0}`.
    pub fn kernel(&self) -> Subspace {
        let mut ech = Echelon::new(self.field, self.cols);
        for r in self.row_vecs() {
            ech.insert(r.to_vec());
        }
        ech.kernel()
    }

    pub fn row_space(&self) -> Subspace {
        Subspace::from_matrix_rows(self)
    }

    pub fn column_space(&self) -> Subspace {
        Subspace::from_matrix_rows(&self.transpose())
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut ech = Echelon::new(self.field, 2 * n);
        for i in 0..n {
            let mut r = self.row(i).to_vec();
            r.extend((0..n).map(|j| if i == j { self.field.one() } else { self.field.zero() }));
            ech.insert(r);
        }
        if ech.pivots().iter().take_while(|&&p| p < n).count() != n {
            return None;
        }
        let rows = ech.into_rows();
        let mut inv = Matrix::zeros(self.field, n, n);
        for (i, r) in rows.into_iter().enumerate() {
            for (j, v) in r.into_iter().skip(n).enumerate() {
                inv.data[i * n + j] = v;
            }
        }
        Some(inv)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|s| s.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Incrementally maintained reduced row-echelon basis.
///
/// Rows are kept fully reduced and sorted by pivot column, so the stored
/// rows are the unique RREF of everything inserted so far regardless of
/// insertion order.
#[derive(Clone, Debug)]
pub(crate) struct Echelon {
    field: Field,
    cols: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub(crate) fn new(field: Field, cols: usize) -> Echelon {
        Echelon { field, cols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub(crate) fn cols(&self) -> usize {
        self.cols
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    pub(crate) fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub(crate) fn into_rows(self) -> Vec<Vec<Scalar>> {
        self.rows
    }

    /// Reduces `row` against the current basis in place. Afterwards `row`
    /// is zero in every pivot column.
    pub(crate) fn reduce(&self, row: &mut [Scalar]) {
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            if row[p].is_zero() {
                continue;
            }
            let c = row[p].clone();
            for j in p..self.cols {
                if !r[j].is_zero() {
                    row[j] = row[j].sub_mul(&c, &r[j]);
                }
            }
        }
    }

    /// Inserts a row; returns whether the rank grew.
    pub(crate) fn insert(&mut self, mut row: Vec<Scalar>) -> bool {
        debug_assert_eq!(row.len(), self.cols);
        if row.iter().all(Scalar::is_zero) {
            return false;
        }
        self.reduce(&mut row);
        let Some(lead) = row.iter().position(|s| !s.is_zero()) else {
            return false;
        };
        let inv = row[lead].inv().expect("nonzero pivot");
        for v in row.iter_mut().skip(lead) {
            if !v.is_zero() {
                *v = &*v * &inv;
            }
        }
        for r in self.rows.iter_mut() {
            if r[lead].is_zero() {
                continue;
            }
            let c = r[lead].clone();
            for j in lead..self.cols {
                if !row[j].is_zero() {
                    r[j] = r[j].sub_mul(&c, &row[j]);
                }
            }
        }
        let pos = self.pivots.partition_point(|&p| p < lead);
        self.pivots.insert(pos, lead);
        self.rows.insert(pos, row);
        true
    }

    pub(crate) fn kernel(&self) -> Subspace {
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut vecs = Vec::new();
        for free in (0..self.cols).filter(|&j| !is_pivot[j]) {
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (r, &p) in self.rows.iter().zip(&self.pivots) {
                if !r[free].is_zero() {
                    v[p] = -&r[free];
                }
            }
            vecs.push(v);
        }
        Subspace::from_trusted_rows(self.field, self.cols, vecs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    #[test]
    fn identity_is_reduced() {
        let (r, p) = Matrix::identity(Q, 3).rref();
        assert_eq!(r, Matrix::identity(Q, 3));
        assert_eq!(p, vec![0, 1, 2]);
    }

    #[test]
    fn dependent_rows_collapse() {
        let m = Matrix::from_i64(Q, &[vec![2, 4], vec![1, 2]]);
        let (r, p) = m.rref();
        assert_eq!(r, Matrix::from_i64(Q, &[vec![1, 2], vec![0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn rref_is_idempotent() {
        let m = Matrix::from_i64(Q, &[vec![0, 3, 1, 2], vec![1, 1, 0, 0], vec![2, 5, 1, 2]]);
        let (r, p) = m.rref();
        let (r2, p2) = r.rref();
        assert_eq!(r, r2);
        assert_eq!(p, p2);
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn kernel_of_zero_is_everything() {
        let k = Matrix::zeros(Q, 2, 3).kernel();
        assert_eq!(k, Subspace::full(Q, 3));
        assert_eq!(Matrix::identity(Q, 4).kernel().dim(), 0);
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_i64(Q, &[vec![2, 1], vec![7, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(Q, 2));
        assert!(Matrix::from_i64(Q, &[vec![1, 2], vec![2, 4]]).inverse().is_none());
    }

    #[test]
    fn mixed_fields_rejected() {
        let f5 = Field::Prime(5);
        let err = Matrix::from_rows(Q, 2, vec![vec![Q.one(), f5.one()]]).unwrap_err();
        assert!(matches!(err, Error::FieldMismatch { .. }));
        let a = Matrix::identity(Q, 2);
        let b = Matrix::identity(f5, 2);
        assert!(matches!(a.mul(&b), Err(Error::FieldMismatch { .. })));
        assert!(matches!(a.vstack(&b), Err(Error::FieldMismatch { .. })));
    }

    #[test]
    fn empty_shapes() {
        let m = Matrix::zeros(Q, 0, 3);
        assert_eq!(m.rank(), 0);
        assert_eq!(m.kernel().dim(), 3);
        let n = Matrix::zeros(Q, 2, 0);
        assert_eq!(n.kernel().dim(), 0);
        assert_eq!(Matrix::identity(Q, 0).inverse().unwrap().nrows(), 0);
    }
}
