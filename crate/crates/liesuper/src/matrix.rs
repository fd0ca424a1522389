//! Dense exact matrices and canonical subspaces.
//!
//! All linear algebra in the crate reduces to Gaussian elimination over the
//! ground field. Subspaces are stored in reduced row-echelon form, which
//! makes equality, membership and intersection decidable and deterministic.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::Parity;
use crate::scalar::{Field, Scalar};

/// A dense matrix over a fixed field.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    field: Field,
    data: Vec<Scalar>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl core::ops::Index<(usize, usize)> for Mat {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl Mat {
    pub fn zero(rows: usize, cols: usize, field: Field) -> Mat {
        Mat {
            rows,
            cols,
            field,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(n: usize, field: Field) -> Mat {
        let mut m = Mat::zero(n, n, field);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>, field: Field) -> Mat {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Mat {
            rows: r,
            cols: c,
            field,
            data,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn row(&self, i: usize) -> Vec<Scalar> {
        (0..self.cols).map(|j| self[(i, j)].clone()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zero(self.cols, self.rows, self.field);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn scale(&self, s: &Scalar) -> Mat {
        let mut m = self.clone();
        for x in &mut m.data {
            *x = x.clone() * s.clone();
        }
        m
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut m = self.clone();
        for (x, y) in m.data.iter_mut().zip(&other.data) {
            *x = x.clone() + y.clone();
        }
        m
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut m = self.clone();
        for (x, y) in m.data.iter_mut().zip(&other.data) {
            *x = x.clone() - y.clone();
        }
        m
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut m = Mat::zero(self.rows, other.cols, self.field);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    if other[(k, j)].is_zero() {
                        continue;
                    }
                    let add = self[(i, k)].clone() * other[(k, j)].clone();
                    m[(i, j)] = m[(i, j)].clone() + add;
                }
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for j in 0..self.cols {
                    if !self[(i, j)].is_zero() && !v[j].is_zero() {
                        acc = acc + self[(i, j)].clone() * v[j].clone();
                    }
                }
                acc
            })
            .collect()
    }

    /// In-place reduced row echelon form; returns pivot column indices.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            // find pivot
            let mut piv = None;
            for i in r..self.rows {
                if !self[(i, c)].is_zero() {
                    piv = Some(i);
                    break;
                }
            }
            let Some(p) = piv else { continue };
            self.swap_rows(r, p);
            let inv = self[(r, c)].inv();
            for j in c..self.cols {
                self[(r, j)] = self[(r, j)].clone() * inv.clone();
            }
            for i in 0..self.rows {
                if i != r && !self[(i, c)].is_zero() {
                    let f = self[(i, c)].clone();
                    for j in c..self.cols {
                        let sub = f.clone() * self[(r, j)].clone();
                        self[(i, j)] = self[(i, j)].clone() - sub;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref_in_place().len()
    }

    /// Basis of the right kernel, one vector per non-pivot column, in
    /// deterministic order.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let mut is_pivot = vec![None; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            is_pivot[c] = Some(r);
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free].is_some() {
                continue;
            }
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (c, slot) in is_pivot.iter().enumerate() {
                if let Some(r) = slot {
                    v[c] = -m[(*r, free)].clone();
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Solves `self * x = b`. Returns the canonical particular solution
    /// (free variables zero) or `None` when inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(self.rows, b.len(), "dimension mismatch");
        let mut aug = Mat::zero(self.rows, self.cols + 1, self.field);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let pivots = aug.rref_in_place();
        if pivots.contains(&self.cols) {
            return None; // pivot in augmented column: inconsistent
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug[(r, self.cols)].clone();
        }
        Some(x)
    }

    /// Determinant by fraction-full Gaussian elimination.
    pub fn det(&self) -> Scalar {
        assert_eq!(self.rows, self.cols, "det of non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = self.field.one();
        for c in 0..n {
            let mut piv = None;
            for i in c..n {
                if !m[(i, c)].is_zero() {
                    piv = Some(i);
                    break;
                }
            }
            let Some(p) = piv else {
                return self.field.zero();
            };
            if p != c {
                m.swap_rows(c, p);
                det = -det;
            }
            det = det * m[(c, c)].clone();
            let inv = m[(c, c)].inv();
            for i in (c + 1)..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone() * inv.clone();
                for j in c..n {
                    let sub = f.clone() * m[(c, j)].clone();
                    m[(i, j)] = m[(i, j)].clone() - sub;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Mat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let mut aug = Mat::zero(n, 2 * n, self.field);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = self.field.one();
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut inv = Mat::zero(n, n, self.field);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = aug[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    /// Vertical stack.
    pub fn stack(tops: &[&Mat]) -> Mat {
        assert!(!tops.is_empty());
        let cols = tops[0].cols;
        let field = tops[0].field;
        let mut rows = Vec::new();
        for m in tops {
            assert_eq!(m.cols, cols);
            for i in 0..m.rows {
                rows.push(m.row(i));
            }
        }
        Mat::from_rows(rows, field)
    }
}

/// A linear subspace of K^n stored by its reduced row-echelon basis.
///
/// Two `Subspace` values are equal as Rust values iff they are equal as
/// subspaces.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    field: Field,
    /// rref basis, one row per basis vector; no zero rows.
    basis: Mat,
}

impl Subspace {
    /// Span of the given vectors.
    pub fn span(vectors: &[Vec<Scalar>], ambient: usize, field: Field) -> Subspace {
        let mut m = if vectors.is_empty() {
            Mat::zero(0, ambient, field)
        } else {
            Mat::from_rows(vectors.to_vec(), field)
        };
        assert_eq!(m.cols, ambient, "ambient dimension mismatch");
        let pivots = m.rref_in_place();
        let rank = pivots.len();
        let mut rows = Vec::with_capacity(rank);
        for i in 0..rank {
            rows.push(m.row(i));
        }
        Subspace {
            ambient,
            field,
            basis: if rows.is_empty() {
                Mat::zero(0, ambient, field)
            } else {
                Mat::from_rows(rows, field)
            },
        }
    }

    pub fn zero(ambient: usize, field: Field) -> Subspace {
        Subspace::span(&[], ambient, field)
    }

    pub fn full(ambient: usize, field: Field) -> Subspace {
        let id = Mat::identity(ambient, field);
        let rows: Vec<_> = (0..ambient).map(|i| id.row(i)).collect();
        Subspace::span(&rows, ambient, field)
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.basis.rows).map(|i| self.basis.row(i)).collect()
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient);
        // reduce v against the rref basis
        let mut v = v.to_vec();
        for i in 0..self.basis.rows {
            let pivot_col = (0..self.ambient)
                .find(|&j| !self.basis[(i, j)].is_zero())
                .expect("no zero rows in basis");
            if !v[pivot_col].is_zero() {
                let f = v[pivot_col].clone();
                for j in 0..self.ambient {
                    let sub = f.clone() * self.basis[(i, j)].clone();
                    v[j] = v[j].clone() - sub;
                }
            }
        }
        v.iter().all(|x| x.is_zero())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis_vectors().iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut vs = self.basis_vectors();
        vs.extend(other.basis_vectors());
        Subspace::span(&vs, self.ambient, self.field)
    }

    /// Intersection via kernel of the stacked coefficient system.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        // vectors x = A^T u = B^T w ; solve [A^T | -B^T] (u,w)^T = 0
        let a = self.basis.transpose();
        let b = other.basis.transpose();
        let mut m = Mat::zero(self.ambient, a.cols + b.cols, self.field);
        for i in 0..self.ambient {
            for j in 0..a.cols {
                m[(i, j)] = a[(i, j)].clone();
            }
            for j in 0..b.cols {
                m[(i, a.cols + j)] = -b[(i, j)].clone();
            }
        }
        let mut vecs = Vec::new();
        for k in m.kernel() {
            let u = &k[..a.cols];
            vecs.push(self.combine(u));
        }
        Subspace::span(&vecs, self.ambient, self.field)
    }

    fn combine(&self, coeffs: &[Scalar]) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.ambient];
        for (i, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for j in 0..self.ambient {
                let add = c.clone() * self.basis[(i, j)].clone();
                v[j] = v[j].clone() + add;
            }
        }
        v
    }

    /// Splits into homogeneous components for a parity assignment of the
    /// ambient basis: returns (even part, odd part).
    pub fn parity_split(&self, parities: &[Parity]) -> (Subspace, Subspace) {
        assert_eq!(parities.len(), self.ambient);
        let even_coords = coordinate_subspace(parities, Parity::Even, self.field);
        let odd_coords = coordinate_subspace(parities, Parity::Odd, self.field);
        (self.intersect(&even_coords), self.intersect(&odd_coords))
    }
}

fn coordinate_subspace(parities: &[Parity], p: Parity, field: Field) -> Subspace {
    let n = parities.len();
    let mut vs = Vec::new();
    for (i, &pi) in parities.iter().enumerate() {
        if pi == p {
            let mut v = vec![field.zero(); n];
            v[i] = field.one();
            vs.push(v);
        }
    }
    Subspace::span(&vs, n, field)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn q() -> Field {
        Field::Rationals
    }

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| q().from_i64(x)).collect()
    }

    #[test]
    fn rref_and_rank() {
        let m = Mat::from_rows(vec![v(&[1, 2, 3]), v(&[2, 4, 6]), v(&[1, 0, 1])], q());
        assert_eq!(m.rank(), 2);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        for kv in &k {
            assert!(m.mul_vec(kv).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = Mat::from_rows(vec![v(&[1, 1]), v(&[0, 1])], q());
        let x = m.solve(&v(&[3, 1])).unwrap();
        assert_eq!(x, v(&[2, 1]));
        let m2 = Mat::from_rows(vec![v(&[1, 1]), v(&[2, 2])], q());
        assert!(m2.solve(&v(&[1, 3])).is_none());
    }

    #[test]
    fn det_and_inverse() {
        let m = Mat::from_rows(vec![v(&[2, 1]), v(&[1, 1])], q());
        assert_eq!(m.det(), q().from_i64(1));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Mat::identity(2, q()));
        let s = Mat::from_rows(vec![v(&[1, 2]), v(&[2, 4])], q());
        assert!(s.det().is_zero());
        assert!(s.inverse().is_none());
    }

    #[test]
    fn subspace_canonical_equality() {
        let s1 = Subspace::span(&[v(&[1, 1, 0]), v(&[0, 0, 1])], 3, q());
        let s2 = Subspace::span(&[v(&[2, 2, 2]), v(&[0, 0, 5]), v(&[1, 1, 3])], 3, q());
        assert_eq!(s1, s2);
        assert!(s1.contains(&v(&[3, 3, 7])));
        assert!(!s1.contains(&v(&[1, 0, 0])));
    }

    #[test]
    fn subspace_intersection_and_sum() {
        let s1 = Subspace::span(&[v(&[1, 0, 0]), v(&[0, 1, 0])], 3, q());
        let s2 = Subspace::span(&[v(&[0, 1, 0]), v(&[0, 0, 1])], 3, q());
        let i = s1.intersect(&s2);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&v(&[0, 1, 0])));
        assert_eq!(s1.sum(&s2).dim(), 3);
    }

    #[test]
    fn parity_split() {
        use crate::algebra::Parity::*;
        let parities = [Even, Odd, Odd];
        let s = Subspace::span(&[v(&[1, 0, 0]), v(&[0, 1, 1])], 3, q());
        let (e, o) = s.parity_split(&parities);
        assert_eq!(e.dim(), 1);
        assert_eq!(o.dim(), 1);
        assert!(o.contains(&v(&[0, 1, 1])));
    }
}
