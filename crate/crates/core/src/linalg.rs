//! Dense matrices and canonical subspaces over an exact [`Field`].
//!
//! Vectors are rows. A matrix `A` with `r` rows and `c` columns is the linear
//! map `k^r -> k^c`, `x |-> x A`; kernels of maps are therefore left kernels.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::field::Field;

/// `y += a * x`.
pub fn axpy<K: Field>(k: &K, y: &mut [K::Elem], a: &K::Elem, x: &[K::Elem]) {
    debug_assert_eq!(y.len(), x.len());
    if k.is_zero(a) {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !k.is_zero(xi) {
            *yi = k.add(yi, &k.mul(a, xi));
        }
    }
}

pub fn is_zero_vec<K: Field>(k: &K, v: &[K::Elem]) -> bool {
    v.iter().all(|x| k.is_zero(x))
}

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<K: Field> {
    field: K,
    rows: usize,
    cols: usize,
    data: Vec<K::Elem>,
}

impl<K: Field> Matrix<K> {
    pub fn zeros(field: &K, rows: usize, cols: usize) -> Self {
        Matrix {
            data: vec![field.zero(); rows * cols],
            field: field.clone(),
            rows,
            cols,
        }
    }

    pub fn identity(field: &K, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    /// Builds a matrix from explicit rows; every row must have length `cols`.
    pub fn from_rows(field: &K, cols: usize, rows: Vec<Vec<K::Elem>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r);
        }
        Matrix {
            field: field.clone(),
            rows: n,
            cols,
            data,
        }
    }

    pub fn from_i64(field: &K, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Self::from_rows(field, cols, rows)
    }

    pub fn field(&self) -> &K {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &K::Elem {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: K::Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[K::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [K::Elem] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<K::Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.field, &self.data)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let k = &self.field;
        let mut out = Self::zeros(k, self.rows, other.cols);
        for r in 0..self.rows {
            let (lhs, dst) = (self.row(r), r * other.cols);
            for (i, a) in lhs.iter().enumerate() {
                if k.is_zero(a) {
                    continue;
                }
                axpy(k, &mut out.data[dst..dst + other.cols], a, other.row(i));
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn apply(&self, v: &[K::Elem]) -> Vec<K::Elem> {
        assert_eq!(v.len(), self.rows);
        let k = &self.field;
        let mut out = vec![k.zero(); self.cols];
        for (i, a) in v.iter().enumerate() {
            axpy(k, &mut out, a, self.row(i));
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let k = &self.field;
        Matrix {
            data: self.data.iter().zip(&other.data).map(|(a, b)| k.add(a, b)).collect(),
            field: k.clone(),
            rows: self.rows,
            cols: self.cols,
        }
    }

    pub fn scale(&self, s: &K::Elem) -> Self {
        let k = &self.field;
        Matrix {
            data: self.data.iter().map(|a| k.mul(a, s)).collect(),
            field: k.clone(),
            rows: self.rows,
            cols: self.cols,
        }
    }

    /// Restriction to a block of rows and columns.
    pub fn submatrix(&self, rows: core::ops::Range<usize>, cols: core::ops::Range<usize>) -> Self {
        let ncols = cols.len();
        let mut data = Vec::with_capacity(rows.len() * ncols);
        for r in rows.clone() {
            data.extend_from_slice(&self.row(r)[cols.clone()]);
        }
        Matrix {
            field: self.field.clone(),
            rows: rows.len(),
            cols: ncols,
            data,
        }
    }

    /// Reduced row-echelon form together with its pivot columns. Zero rows are kept
    /// at the bottom so the shape is unchanged.
    pub fn rref_with_pivots(&self) -> (Self, Vec<usize>) {
        let k = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..m.cols {
            if lead == m.rows {
                break;
            }
            let Some(p) = (lead..m.rows).find(|&r| !k.is_zero(m.get(r, c))) else {
                continue;
            };
            m.swap_rows(lead, p);
            let inv = k.inv(m.get(lead, c)).expect("pivot is nonzero");
            for x in m.row_mut(lead) {
                *x = k.mul(x, &inv);
            }
            let pivot_row = m.row(lead).to_vec();
            for r in 0..m.rows {
                if r == lead {
                    continue;
                }
                let f = m.get(r, c).clone();
                if !k.is_zero(&f) {
                    axpy(k, m.row_mut(r), &k.neg(&f), &pivot_row);
                }
            }
            pivots.push(c);
            lead += 1;
        }
        (m, pivots)
    }

    pub fn rref(&self) -> Self {
        self.rref_with_pivots().0
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Right kernel `{ v : M v^T = 0 }`, a subspace of `k^cols`.
    pub fn nullspace(&self) -> Subspace<K> {
        let k = &self.field;
        let (r, pivots) = self.rref_with_pivots();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![k.zero(); self.cols];
            v[free] = k.one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = k.neg(r.get(i, free));
            }
            basis.push(v);
        }
        Subspace::from_vectors(k, self.cols, basis)
    }

    /// Left kernel `{ x : x M = 0 }`, a subspace of `k^rows`.
    pub fn left_kernel(&self) -> Subspace<K> {
        self.transpose().nullspace()
    }

    pub fn row_space(&self) -> Subspace<K> {
        Subspace::from_vectors(&self.field, self.cols, self.row_vecs())
    }

    /// Vertical concatenation.
    pub fn stack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }
}

/// A subspace of `k^ambient` in canonical form: the RREF basis without zero rows.
/// Two subspaces are equal iff their data are equal.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<K: Field> {
    field: K,
    ambient: usize,
    /// Pivot-sorted RREF rows.
    basis: Vec<Vec<K::Elem>>,
    pivots: Vec<usize>,
}

impl<K: Field> Subspace<K> {
    pub fn zero(field: &K, ambient: usize) -> Self {
        Subspace {
            field: field.clone(),
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &K, ambient: usize) -> Self {
        Matrix::identity(field, ambient).row_space()
    }

    pub fn from_vectors(field: &K, ambient: usize, vectors: Vec<Vec<K::Elem>>) -> Self {
        let mut s = Self::zero(field, ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn field(&self) -> &K {
        &self.field
    }
    pub fn ambient(&self) -> usize {
        self.ambient
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn basis(&self) -> &[Vec<K::Elem>] {
        &self.basis
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_matrix(&self) -> Matrix<K> {
        Matrix::from_rows(&self.field, self.ambient, self.basis.clone())
    }

    /// Coordinates outside the pivot set; their standard vectors span a complement.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    /// Remainder of `v` after eliminating all pivot coordinates.
    pub fn reduce(&self, v: &[K::Elem]) -> Vec<K::Elem> {
        assert_eq!(v.len(), self.ambient, "vector length differs from ambient dimension");
        let k = &self.field;
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let f = out[p].clone();
            if !k.is_zero(&f) {
                axpy(k, &mut out, &k.neg(&f), row);
            }
        }
        out
    }

    pub fn contains_vec(&self, v: &[K::Elem]) -> bool {
        is_zero_vec(&self.field, &self.reduce(v))
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[K::Elem]) -> Option<Vec<K::Elem>> {
        if !self.contains_vec(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vec<K::Elem>) -> bool {
        let k = self.field.clone();
        let mut r = self.reduce(&v);
        let Some(p) = r.iter().position(|x| !k.is_zero(x)) else {
            return false;
        };
        let inv = k.inv(&r[p]).expect("nonzero");
        for x in r.iter_mut() {
            *x = k.mul(x, &inv);
        }
        for row in self.basis.iter_mut() {
            let f = row[p].clone();
            if !k.is_zero(&f) {
                axpy(&k, row, &k.neg(&f), &r);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.basis.insert(at, r);
        true
    }

    pub fn sum(&self, other: &Self) -> Result<Self, Error> {
        self.check_ambient(other)?;
        let mut s = self.clone();
        for v in &other.basis {
            s.insert(v.clone());
        }
        Ok(s)
    }

    /// Intersection via the left kernel of the stacked bases.
    pub fn intersection(&self, other: &Self) -> Result<Self, Error> {
        self.check_ambient(other)?;
        let k = &self.field;
        if self.dim() == 0 || other.dim() == 0 {
            return Ok(Self::zero(k, self.ambient));
        }
        let stacked = self.basis_matrix().stack(&other.basis_matrix());
        let kernel = stacked.left_kernel();
        let a = self.basis_matrix();
        let vectors = kernel
            .basis
            .iter()
            .map(|c| a.apply(&c[..self.dim()]))
            .collect();
        Ok(Self::from_vectors(k, self.ambient, vectors))
    }

    /// Whether `other` is a subspace of `self`.
    pub fn contains(&self, other: &Self) -> Result<bool, Error> {
        self.check_ambient(other)?;
        Ok(other.basis.iter().all(|v| self.contains_vec(v)))
    }

    fn check_ambient(&self, other: &Self) -> Result<(), Error> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(())
    }
}

/// Result bundle of [`subspace_ops`].
#[derive(Clone, Debug, PartialEq)]
pub struct SubspaceOps<K: Field> {
    pub sum: Subspace<K>,
    pub intersection: Subspace<K>,
    /// `b` is contained in `a`, i.e. `a + b = a`.
    pub contains: bool,
}

pub fn subspace_ops<K: Field>(a: &Subspace<K>, b: &Subspace<K>) -> Result<SubspaceOps<K>, Error> {
    let sum = a.sum(b)?;
    let intersection = a.intersection(b)?;
    let contains = sum == *a;
    Ok(SubspaceOps {
        sum,
        intersection,
        contains,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn gf(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn rref_unit_scaling() {
        let k = gf(7);
        assert_eq!(Matrix::from_i64(&k, &[&[2]]).rref(), Matrix::from_i64(&k, &[&[1]]));
    }

    #[test]
    fn rref_dependent_rows_over_q() {
        let q = Rationals;
        let m = Matrix::from_i64(&q, &[&[1, 2], &[2, 4]]);
        assert_eq!(m.rref(), Matrix::from_i64(&q, &[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn rref_empty() {
        let k = gf(7);
        let m = Matrix::zeros(&k, 0, 0);
        assert_eq!(m.rref(), m);
        assert_eq!(m.nullspace().dim(), 0);
    }

    #[test]
    fn nullspace_identity_and_pivot_convention() {
        let k = gf(7);
        assert_eq!(Matrix::identity(&k, 3).nullspace().dim(), 0);
        let n = Matrix::from_i64(&k, &[&[1, 1]]).nullspace();
        assert_eq!(n.dim(), 1);
        assert_eq!(n.basis(), &[vec![1u32, 6]]);
    }

    #[test]
    fn subspace_self_ops() {
        let k = gf(5);
        let a = Matrix::from_i64(&k, &[&[1, 2, 0], &[0, 1, 1]]).row_space();
        let ops = subspace_ops(&a, &a).unwrap();
        assert_eq!(ops.sum, a);
        assert_eq!(ops.intersection, a);
        assert!(ops.contains);
    }

    #[test]
    fn complementary_coordinate_subspaces() {
        let q = Rationals;
        let a = Matrix::from_i64(&q, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]).row_space();
        let b = Matrix::from_i64(&q, &[&[0, 0, 1, 0], &[0, 0, 0, 1]]).row_space();
        let ops = subspace_ops(&a, &b).unwrap();
        assert_eq!(ops.sum.dim(), 4);
        assert_eq!(ops.intersection.dim(), 0);
        assert!(!ops.contains);
    }

    #[test]
    fn ambient_mismatch() {
        let k = gf(3);
        let a = Subspace::full(&k, 2);
        let b = Subspace::full(&k, 3);
        assert!(matches!(
            subspace_ops(&a, &b),
            Err(Error::AmbientMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn coordinates_in_canonical_basis() {
        let q = Rationals;
        let s = Matrix::from_i64(&q, &[&[1, 1, 0], &[0, 1, 1]]).row_space();
        let v: Vec<_> = [2, 5, 3].iter().map(|&x| q.from_i64(x)).collect();
        let c = s.coordinates(&v).unwrap();
        let back = s.basis_matrix().apply(&c);
        assert_eq!(back, v);
        assert!(s.coordinates(&[q.one(), q.zero(), q.zero()]).is_none());
    }
}
