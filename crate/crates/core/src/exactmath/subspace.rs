use super::matrix::Matrix;
use super::scalar::{FieldSpec, Scalar};
use super::vector;
use crate::error::{Error, Result};

/// A subspace of `F^n`, stored as its canonical RREF basis.
///
/// Two subspaces are equal exactly when their bases are identical, so the
/// derived `PartialEq` is subspace equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Matrix::zeros(field, 0, ambient_dim) }
    }

    pub fn full(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Matrix::identity(field, ambient_dim) }
    }

    /// Row space of `m`.
    pub fn from_matrix(m: &Matrix) -> Self {
        Subspace { ambient_dim: m.cols(), basis: m.rref() }
    }

    pub fn span(field: FieldSpec, ambient_dim: usize, vectors: Vec<Vec<Scalar>>) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient_dim) {
            return Err(Error::Dimension(format!("vector of length {} in ambient dimension {ambient_dim}", v.len())));
        }
        if vectors.is_empty() {
            return Ok(Self::zero(field, ambient_dim));
        }
        Ok(Self::from_matrix(&Matrix::from_rows(field, vectors)?))
    }

    /// Span of the given standard basis vectors.
    pub fn coordinate(field: FieldSpec, ambient_dim: usize, indices: &[usize]) -> Self {
        let vs = indices.iter().map(|&i| vector::unit(field, ambient_dim, i)).collect();
        Self::span(field, ambient_dim, vs).expect("unit vectors have the ambient length")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vectors()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    pub fn pivots(&self) -> Vec<usize> {
        (0..self.dim())
            .map(|i| self.basis.row(i).iter().position(|s| !s.is_zero()).expect("RREF rows are nonzero"))
            .collect()
    }

    /// Reduces `v` modulo the subspace; the result is zero iff `v` lies in it.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut v = v.to_vec();
        for (row, pc) in self.pivots().into_iter().enumerate() {
            if !v[pc].is_zero() {
                let c = v[pc].clone();
                vector::sub_scaled(&mut v, &c, self.basis.row(row));
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        if v.len() != self.ambient_dim {
            return Err(Error::Dimension(format!(
                "vector of length {} in ambient dimension {}",
                v.len(),
                self.ambient_dim
            )));
        }
        Ok(vector::is_zero(&self.reduce(v)))
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::Dimension(format!(
                "ambient dimensions {} and {} differ",
                self.ambient_dim, other.ambient_dim
            )));
        }
        if self.field() != other.field() {
            return Err(Error::FieldMismatch { expected: self.field(), found: other.field() });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let stacked = Matrix::vstack(self.field(), self.ambient_dim, &[self.basis.clone(), other.basis.clone()]);
        Ok(Subspace::from_matrix(&stacked))
    }

    /// Intersection via the kernel of `[A^T | B^T]`: a kernel vector `(a, b)`
    /// gives the common vector `A^T a = -B^T b`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let (da, db) = (self.dim(), other.dim());
        if da == 0 || db == 0 {
            return Ok(Subspace::zero(self.field(), self.ambient_dim));
        }
        let field = self.field();
        let mut block = Matrix::zeros(field, self.ambient_dim, da + db);
        for i in 0..self.ambient_dim {
            for r in 0..da {
                block[(i, r)] = self.basis[(r, i)].clone();
            }
            for r in 0..db {
                block[(i, da + r)] = other.basis[(r, i)].clone();
            }
        }
        let vectors = block
            .kernel()
            .basis_vectors()
            .into_iter()
            .map(|kv| {
                let mut w = vector::zeros(field, self.ambient_dim);
                for (r, c) in kv[..da].iter().enumerate() {
                    vector::add_scaled(&mut w, c, self.basis.row(r));
                }
                w
            })
            .collect();
        Subspace::span(field, self.ambient_dim, vectors)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_compatible(other)?;
        Ok((0..self.dim()).all(|r| vector::is_zero(&other.reduce(self.basis.row(r)))))
    }
}

/// Incrementally grown span kept in reduced echelon form, for closure loops.
#[derive(Clone, Debug)]
pub struct SpanBuilder {
    field: FieldSpec,
    ambient_dim: usize,
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl SpanBuilder {
    pub fn new(field: FieldSpec, ambient_dim: usize) -> Self {
        SpanBuilder { field, ambient_dim, rows: Vec::new() }
    }

    pub fn from_subspace(s: &Subspace) -> Self {
        let mut b = SpanBuilder::new(s.field(), s.ambient_dim());
        for v in s.basis_vectors() {
            b.insert(&v);
        }
        b
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut v = v.to_vec();
        for (pc, row) in &self.rows {
            if !v[*pc].is_zero() {
                let c = v[*pc].clone();
                vector::sub_scaled(&mut v, &c, row);
            }
        }
        v
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let mut r = self.reduce(v);
        let Some(pc) = r.iter().position(|s| !s.is_zero()) else {
            return false;
        };
        let inv = r[pc].inv().expect("nonzero pivot");
        vector::scale_in_place(&mut r, &inv);
        for (_, row) in &mut self.rows {
            if !row[pc].is_zero() {
                let c = row[pc].clone();
                vector::sub_scaled(row, &c, &r);
            }
        }
        self.rows.push((pc, r));
        true
    }

    pub fn into_subspace(mut self) -> Subspace {
        self.rows.sort_by_key(|(pc, _)| *pc);
        let vectors: Vec<_> = self.rows.into_iter().map(|(_, r)| r).collect();
        if vectors.is_empty() {
            return Subspace::zero(self.field, self.ambient_dim);
        }
        let basis = Matrix::from_rows(self.field, vectors).expect("rows share the ambient length");
        Subspace { ambient_dim: self.ambient_dim, basis }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn lattice_examples() {
        let e1 = Subspace::coordinate(q(), 3, &[0]);
        let e2 = Subspace::coordinate(q(), 3, &[1]);
        assert_eq!(e1.sum(&e2).unwrap(), Subspace::coordinate(q(), 3, &[0, 1]));
        let a = Subspace::coordinate(q(), 3, &[0, 1]);
        let b = Subspace::coordinate(q(), 3, &[1, 2]);
        assert_eq!(a.intersect(&b).unwrap(), e2);
        let diag = Subspace::span(q(), 2, vec![vec![q().one(), q().one()]]).unwrap();
        assert!(diag.contains(&[q().from_i64(2), q().from_i64(2)]).unwrap());
        assert!(!diag.contains(&[q().from_i64(2), q().from_i64(1)]).unwrap());
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = Subspace::full(q(), 2);
        let b = Subspace::full(q(), 3);
        assert!(a.sum(&b).is_err());
        assert!(a.intersect(&b).is_err());
        assert!(a.contains(&[q().one()]).is_err());
    }

    #[test]
    fn builder_matches_rref() {
        let f = FieldSpec::prime(3).unwrap();
        let vs = vec![
            vec![f.from_i64(0), f.from_i64(2), f.from_i64(1)],
            vec![f.from_i64(1), f.from_i64(1), f.from_i64(0)],
            vec![f.from_i64(1), f.from_i64(0), f.from_i64(1)],
        ];
        let mut b = SpanBuilder::new(f, 3);
        for v in &vs {
            b.insert(v);
        }
        assert_eq!(b.into_subspace(), Subspace::span(f, 3, vs).unwrap());
    }
}
