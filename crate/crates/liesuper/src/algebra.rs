//! Lie superalgebra presentations by structure constants, with validation
//! and the basic structural queries (center, centralizers, ideals, derived
//! series, solvability).

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::matrix::{Mat, Subspace};
use crate::scalar::{Field, Scalar};

/// ℤ/2 grading of a basis vector.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn bit(&self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn flip(&self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn from_bit(b: u8) -> Parity {
        if b % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Sign (−1)^{p(a)p(b)}.
pub fn koszul_sign(a: Parity, b: Parity) -> i64 {
    if a == Parity::Odd && b == Parity::Odd {
        -1
    } else {
        1
    }
}

/// Super dimension (n_even | n_odd).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SuperDim {
    pub n_even: usize,
    pub n_odd: usize,
}

impl SuperDim {
    pub fn total(&self) -> usize {
        self.n_even + self.n_odd
    }
}

impl fmt::Display for SuperDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.n_even, self.n_odd)
    }
}

/// A violated identity found by [`LieSuperalgebra::validate`].
#[derive(Clone, Debug)]
pub enum Violation {
    /// c[i][j][k] ≠ 0 although p(k) ≠ p(i)+p(j).
    Grading { i: usize, j: usize, k: usize },
    /// [e_j,e_i] ≠ −(−1)^{p(i)p(j)}[e_i,e_j]; carries the residual vector.
    AntiCommutativity { i: usize, j: usize, residual: Vec<Scalar> },
    /// Jacobi residual on the basis triple (i,j,k).
    Jacobi { i: usize, j: usize, k: usize, residual: Vec<Scalar> },
    /// Characteristic-3 cubic condition on the odd multiset {i,j,k}.
    CubicChar3 { i: usize, j: usize, k: usize, residual: Vec<Scalar> },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Grading { i, j, k } => {
                write!(f, "grading violated: c[{i}][{j}][{k}] nonzero across parities")
            }
            Violation::AntiCommutativity { i, j, .. } => {
                write!(f, "super anti-commutativity violated on pair ({i},{j})")
            }
            Violation::Jacobi { i, j, k, .. } => {
                write!(f, "Jacobi identity violated on triple ({i},{j},{k})")
            }
            Violation::CubicChar3 { i, j, k, .. } => {
                write!(f, "char-3 cubic condition violated on odd triple ({i},{j},{k})")
            }
        }
    }
}

/// A finite-dimensional Lie superalgebra given by structure constants
/// `c[i][j][k]`, meaning [e_i, e_j] = Σ_k c[i][j][k] e_k.
///
/// The basis may carry an arbitrary parity pattern; constructors that load
/// documents put even vectors first, while extension constructors keep their
/// natural adapted order.
#[derive(Clone, PartialEq)]
pub struct LieSuperalgebra {
    field: Field,
    parities: Vec<Parity>,
    names: Vec<String>,
    /// c[i][j][k] over the flattened index (i*n + j)*n + k.
    c: Vec<Scalar>,
}

impl fmt::Debug for LieSuperalgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieSuperalgebra(dim {}", self.dim())?;
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let v = self.bracket_basis(i, j);
                if v.iter().any(|x| !x.is_zero()) {
                    write!(f, ", [{},{}]={:?}", self.names[i], self.names[j], v)?;
                }
            }
        }
        write!(f, ")")
    }
}

impl LieSuperalgebra {
    /// Builds an algebra with all brackets zero.
    pub fn abelian(parities: Vec<Parity>, field: Field) -> LieSuperalgebra {
        let n = parities.len();
        let names = default_names(&parities);
        LieSuperalgebra {
            field,
            parities,
            names,
            c: vec![field.zero(); n * n * n],
        }
    }

    /// Builds an abelian algebra of super dimension (n_even | n_odd).
    pub fn abelian_dim(n_even: usize, n_odd: usize, field: Field) -> LieSuperalgebra {
        let mut parities = vec![Parity::Even; n_even];
        parities.extend(vec![Parity::Odd; n_odd]);
        LieSuperalgebra::abelian(parities, field)
    }

    /// Sets [e_i, e_j] = value and [e_j, e_i] = −(−1)^{p_i p_j} value.
    pub fn set_bracket(&mut self, i: usize, j: usize, value: &[Scalar]) {
        let n = self.dim();
        assert_eq!(value.len(), n);
        let sign = koszul_sign(self.parities[i], self.parities[j]);
        for k in 0..n {
            self.c[(i * n + j) * n + k] = value[k].clone();
            if i != j {
                let mut v = -value[k].clone();
                if sign < 0 {
                    v = -v;
                }
                self.c[(j * n + i) * n + k] = v;
            }
        }
    }

    pub fn with_names(mut self, names: Vec<String>) -> LieSuperalgebra {
        assert_eq!(names.len(), self.dim());
        self.names = names;
        self
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.parities.len()
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parities[i]
    }

    pub fn sdim(&self) -> SuperDim {
        let n_even = self.parities.iter().filter(|p| **p == Parity::Even).count();
        SuperDim {
            n_even,
            n_odd: self.dim() - n_even,
        }
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        let n = self.dim();
        &self.c[(i * n + j) * n + k]
    }

    /// [e_i, e_j] as a coordinate vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        let n = self.dim();
        (0..n).map(|k| self.c[(i * n + j) * n + k].clone()).collect()
    }

    /// Bracket of arbitrary coordinate vectors (bilinear extension).
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        assert_eq!(x.len(), n, "dimension mismatch");
        assert_eq!(y.len(), n, "dimension mismatch");
        let mut out = vec![self.field.zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let f = x[i].clone() * y[j].clone();
                for k in 0..n {
                    let c = self.structure_constant(i, j, k);
                    if !c.is_zero() {
                        out[k] = out[k].clone() + f.clone() * c.clone();
                    }
                }
            }
        }
        out
    }

    /// Full validation; an empty report means the presentation is a Lie
    /// superalgebra (including Eq.-style cubic condition in characteristic 3).
    pub fn validate(&self) -> Vec<Violation> {
        let n = self.dim();
        let mut report = Vec::new();
        // grading
        for i in 0..n {
            for j in 0..n {
                let want = Parity::from_bit(self.parities[i].bit() + self.parities[j].bit());
                for k in 0..n {
                    if !self.structure_constant(i, j, k).is_zero() && self.parities[k] != want {
                        report.push(Violation::Grading { i, j, k });
                    }
                }
            }
        }
        // super anti-commutativity
        for i in 0..n {
            for j in i..n {
                let sign = koszul_sign(self.parities[i], self.parities[j]);
                let ij = self.bracket_basis(i, j);
                let ji = self.bracket_basis(j, i);
                let mut residual = Vec::with_capacity(n);
                let mut bad = false;
                for k in 0..n {
                    let mut t = ji[k].clone();
                    if sign < 0 {
                        t = -t;
                    }
                    let r = ij[k].clone() + t;
                    if !r.is_zero() {
                        bad = true;
                    }
                    residual.push(r);
                }
                if bad {
                    report.push(Violation::AntiCommutativity { i, j, residual });
                }
            }
        }
        // Jacobi on basis triples (sufficient by multilinearity)
        for i in 0..n {
            for j in i..n {
                for k in j..n {
                    let r = self.jacobi_residual_basis(i, j, k);
                    if r.iter().any(|x| !x.is_zero()) {
                        report.push(Violation::Jacobi { i, j, k, residual: r });
                    }
                }
            }
        }
        // char-3 cubic condition by polarization over odd basis triples
        if self.field.characteristic() == 3 {
            for i in 0..n {
                if self.parities[i] != Parity::Odd {
                    continue;
                }
                for j in i..n {
                    if self.parities[j] != Parity::Odd {
                        continue;
                    }
                    for k in j..n {
                        if self.parities[k] != Parity::Odd {
                            continue;
                        }
                        let r = self.cubic_residual(i, j, k);
                        if r.iter().any(|x| !x.is_zero()) {
                            report.push(Violation::CubicChar3 { i, j, k, residual: r });
                        }
                    }
                }
            }
        }
        report
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// (−1)^{p(i)p(k)}[e_i,[e_j,e_k]] + (−1)^{p(k)p(j)}[e_k,[e_i,e_j]]
    /// + (−1)^{p(j)p(i)}[e_j,[e_k,e_i]].
    pub fn jacobi_residual_basis(&self, i: usize, j: usize, k: usize) -> Vec<Scalar> {
        let n = self.dim();
        let unit = |idx: usize| -> Vec<Scalar> {
            let mut v = vec![self.field.zero(); n];
            v[idx] = self.field.one();
            v
        };
        let (ei, ej, ek) = (unit(i), unit(j), unit(k));
        self.jacobi_residual(&ei, self.parities[i], &ej, self.parities[j], &ek, self.parities[k])
    }

    /// Jacobi residual for homogeneous vectors with the given parities.
    pub fn jacobi_residual(
        &self,
        x: &[Scalar],
        px: Parity,
        y: &[Scalar],
        py: Parity,
        z: &[Scalar],
        pz: Parity,
    ) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![self.field.zero(); n];
        let acc = |sign: i64, v: Vec<Scalar>, out: &mut Vec<Scalar>| {
            for t in 0..n {
                let mut a = v[t].clone();
                if sign < 0 {
                    a = -a;
                }
                out[t] = out[t].clone() + a;
            }
        };
        acc(koszul_sign(px, pz), self.bracket(x, &self.bracket(y, z)), &mut out);
        acc(koszul_sign(pz, py), self.bracket(z, &self.bracket(x, y)), &mut out);
        acc(koszul_sign(py, px), self.bracket(y, &self.bracket(z, x)), &mut out);
        out
    }

    /// Polarized coefficient of the cubic map f ↦ [f,[f,f]] on the odd
    /// multiset {i,j,k}: the sum of [e_a,[e_b,e_c]] over all distinct
    /// arrangements (a,b,c) of the multiset.
    fn cubic_residual(&self, i: usize, j: usize, k: usize) -> Vec<Scalar> {
        let n = self.dim();
        let mut arrangements: Vec<[usize; 3]> = Vec::new();
        for perm in [
            [i, j, k],
            [i, k, j],
            [j, i, k],
            [j, k, i],
            [k, i, j],
            [k, j, i],
        ] {
            if !arrangements.contains(&perm) {
                arrangements.push(perm);
            }
        }
        let mut out = vec![self.field.zero(); n];
        let unit = |idx: usize| -> Vec<Scalar> {
            let mut v = vec![self.field.zero(); n];
            v[idx] = self.field.one();
            v
        };
        for [a, b, c] in arrangements {
            let v = self.bracket(&unit(a), &self.bracket(&unit(b), &unit(c)));
            for t in 0..n {
                out[t] = out[t].clone() + v[t].clone();
            }
        }
        out
    }

    /// The center {x : [x, e_i] = 0 for all i}, as the kernel of the stacked
    /// adjoint system.
    pub fn center(&self) -> Subspace {
        self.centralizer(&Subspace::full(self.dim(), self.field))
    }

    /// {x : [x, s] = 0 for every basis vector s of S}.
    pub fn centralizer(&self, s: &Subspace) -> Subspace {
        let n = self.dim();
        let basis = s.basis_vectors();
        if basis.is_empty() {
            return Subspace::full(n, self.field);
        }
        // rows: for each s-basis vector and output coordinate k, the linear
        // functional x ↦ [x, s]_k
        let mut rows = Vec::new();
        for sv in &basis {
            for k in 0..n {
                let mut row = Vec::with_capacity(n);
                for i in 0..n {
                    let mut acc = self.field.zero();
                    for j in 0..n {
                        if sv[j].is_zero() {
                            continue;
                        }
                        let c = self.structure_constant(i, j, k);
                        if !c.is_zero() {
                            acc = acc + sv[j].clone() * c.clone();
                        }
                    }
                    row.push(acc);
                }
                rows.push(row);
            }
        }
        let m = Mat::from_rows(rows, self.field);
        Subspace::span(&m.kernel(), n, self.field)
    }

    /// Span of all brackets [S, T].
    pub fn bracket_span(&self, s: &Subspace, t: &Subspace) -> Subspace {
        let mut vecs = Vec::new();
        for x in s.basis_vectors() {
            for y in t.basis_vectors() {
                vecs.push(self.bracket(&x, &y));
            }
        }
        Subspace::span(&vecs, self.dim(), self.field)
    }

    /// The derived subalgebra [g, g].
    pub fn derived_subalgebra(&self) -> Subspace {
        let full = Subspace::full(self.dim(), self.field);
        self.bracket_span(&full, &full)
    }

    /// Derived series [g,g] ⊇ [[g,g],[g,g]] ⊇ … until stabilization. The
    /// list starts at the first derived subalgebra, so an abelian algebra
    /// yields the single entry {0}.
    pub fn derived_series(&self) -> Vec<Subspace> {
        let mut series = vec![self.derived_subalgebra()];
        loop {
            let last = series.last().unwrap();
            if last.dim() == 0 {
                break;
            }
            let next = self.bracket_span(last, last);
            if &next == last {
                break;
            }
            series.push(next);
        }
        series
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().dim() == 0
    }

    /// True iff [g, S] ⊆ S.
    pub fn is_ideal(&self, s: &Subspace) -> bool {
        let full = Subspace::full(self.dim(), self.field);
        self.bracket_span(&full, s).is_subspace_of(s)
    }

    /// True iff [g_odd, g_odd] = 0 (the tables call such algebras trivial).
    pub fn odd_bracket_trivial(&self) -> bool {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                if self.parities[i] == Parity::Odd && self.parities[j] == Parity::Odd {
                    if self.bracket_basis(i, j).iter().any(|x| !x.is_zero()) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Restriction of the bracket to an ideal-like subspace given by basis
    /// vectors `rows` (in g-coordinates), producing structure constants in
    /// the coordinates of that basis. Errors if some bracket leaves the span.
    pub fn restrict_to(&self, basis: &[Vec<Scalar>], parities: Vec<Parity>) -> Result<LieSuperalgebra, String> {
        let m = basis.len();
        assert_eq!(parities.len(), m);
        let coord = Mat::from_rows(basis.to_vec(), self.field).transpose();
        let mut sub = LieSuperalgebra::abelian(parities, self.field);
        for i in 0..m {
            for j in 0..m {
                let v = self.bracket(&basis[i], &basis[j]);
                let coords = coord
                    .solve(&v)
                    .ok_or_else(|| format!("bracket of basis vectors {i},{j} leaves the subspace"))?;
                sub.set_bracket_raw(i, j, &coords);
            }
        }
        Ok(sub)
    }

    /// Sets c[i][j][*] without touching (j,i); used when filling both
    /// triangles explicitly.
    pub fn set_bracket_raw(&mut self, i: usize, j: usize, value: &[Scalar]) {
        let n = self.dim();
        assert_eq!(value.len(), n);
        for k in 0..n {
            self.c[(i * n + j) * n + k] = value[k].clone();
        }
    }

    /// Conjugates the structure constants by a basis change: the columns of
    /// `basis` are the new basis vectors in old coordinates. Returns the
    /// algebra expressed in the new basis.
    pub fn change_basis(&self, basis: &Mat, parities: Vec<Parity>) -> LieSuperalgebra {
        let n = self.dim();
        assert_eq!(basis.rows, n);
        assert_eq!(basis.cols, n);
        let inv = basis.inverse().expect("basis change must be invertible");
        let mut out = LieSuperalgebra::abelian(parities, self.field);
        for i in 0..n {
            for j in 0..n {
                let bi = basis.col(i);
                let bj = basis.col(j);
                let v = self.bracket(&bi, &bj);
                let coords = inv.mul_vec(&v);
                out.set_bracket_raw(i, j, &coords);
            }
        }
        out
    }
}

fn default_names(parities: &[Parity]) -> Vec<String> {
    (1..=parities.len()).map(|i| format!("e{i}")).collect()
}

/// A quotient g/I by a graded ideal, with the canonical coordinate
/// complement as the section. Lifts preserve parity because the complement
/// consists of coordinate vectors.
#[derive(Clone, Debug)]
pub struct Quotient {
    /// coordinate indices of g spanning the complement (the h-basis lifts)
    pub complement: Vec<usize>,
    /// the ideal that was quotiented out
    pub ideal: Subspace,
    /// the quotient algebra on the complement basis
    pub algebra: LieSuperalgebra,
    /// dim(h) × dim(g) projection onto h-coordinates
    proj: Mat,
}

impl Quotient {
    /// Coordinates of the class of a g-vector.
    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.proj.mul_vec(v)
    }

    /// The parity-preserving lift of the a-th h-basis vector.
    pub fn lift_basis(&self, a: usize) -> Vec<Scalar> {
        let n = self.proj.cols;
        let mut v = vec![self.algebra.field().zero(); n];
        v[self.complement[a]] = self.algebra.field().one();
        v
    }

    /// Lift of an arbitrary h-vector.
    pub fn lift(&self, u: &[Scalar]) -> Vec<Scalar> {
        let n = self.proj.cols;
        let mut v = vec![self.algebra.field().zero(); n];
        for (a, c) in u.iter().enumerate() {
            v[self.complement[a]] = c.clone();
        }
        v
    }
}

impl LieSuperalgebra {
    /// Quotient by a graded ideal. Fails if the subspace is not an ideal or
    /// not graded (spanned by its parity components).
    pub fn quotient_by_ideal(&self, ideal: &Subspace) -> Result<Quotient, String> {
        let n = self.dim();
        if !self.is_ideal(ideal) {
            return Err(String::from("subspace is not an ideal"));
        }
        let (ev, od) = ideal.parity_split(self.parities());
        if ev.dim() + od.dim() != ideal.dim() {
            return Err(String::from("ideal is not graded"));
        }
        // pivot columns of the rref basis are eliminated; the rest lift h
        let basis = ideal.basis_vectors();
        let mut pivot_cols = Vec::new();
        for row in &basis {
            let c = (0..n).find(|&j| !row[j].is_zero()).expect("zero basis row");
            pivot_cols.push(c);
        }
        let complement: Vec<usize> = (0..n).filter(|j| !pivot_cols.contains(j)).collect();
        // projection: reduce v by the rref rows, then read off complement coords
        let mut proj = Mat::zero(complement.len(), n, self.field);
        for (a, &cidx) in complement.iter().enumerate() {
            proj[(a, cidx)] = self.field.one();
            for (row, &pc) in basis.iter().zip(&pivot_cols) {
                // subtracting row * v[pc] moves weight from pivot coords
                if !row[cidx].is_zero() {
                    proj[(a, pc)] = proj[(a, pc)].clone() - row[cidx].clone();
                }
            }
        }
        let h_parities: Vec<Parity> = complement.iter().map(|&j| self.parities[j]).collect();
        let mut h = LieSuperalgebra::abelian(h_parities, self.field);
        let names: Vec<String> = complement
            .iter()
            .map(|&j| self.names[j].clone())
            .collect();
        for a in 0..complement.len() {
            for b in 0..complement.len() {
                let v = self.bracket_basis(complement[a], complement[b]);
                let coords = proj.mul_vec(&v);
                h.set_bracket_raw(a, b, &coords);
            }
        }
        let q = Quotient {
            complement,
            ideal: ideal.clone(),
            algebra: h.with_names(names),
            proj,
        };
        // the quotient of a valid algebra by an ideal is valid
        debug_assert!(q.algebra.is_valid() || !self.is_valid());
        Ok(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rationals
    }

    /// Table-1 algebra D^5: basis e1,e2 | e3,e4 with
    /// [e1,e3]=e3, [e1,e4]=e4, [e2,e4]=e3.
    pub(crate) fn d5() -> LieSuperalgebra {
        let mut g = LieSuperalgebra::abelian_dim(2, 2, q());
        let e = |k: usize| {
            let mut v = vec![q().zero(); 4];
            v[k] = q().one();
            v
        };
        g.set_bracket(0, 2, &e(2));
        g.set_bracket(0, 3, &e(3));
        g.set_bracket(1, 3, &e(2));
        g
    }

    /// Table-2 algebra (2A_{1,1}+2A)^3_{1/2}: [e3,e3]=e1, [e4,e4]=e2,
    /// [e3,e4]=1/2(e1+e2).
    pub(crate) fn two_a_three_half() -> LieSuperalgebra {
        let mut g = LieSuperalgebra::abelian_dim(2, 2, q());
        let mut v1 = vec![q().zero(); 4];
        v1[0] = q().one();
        let mut v2 = vec![q().zero(); 4];
        v2[1] = q().one();
        let mut v12 = vec![q().zero(); 4];
        v12[0] = q().fraction(1, 2);
        v12[1] = q().fraction(1, 2);
        g.set_bracket(2, 2, &v1);
        g.set_bracket(3, 3, &v2);
        g.set_bracket(2, 3, &v12);
        g
    }

    #[test]
    fn d5_bracket_examples() {
        let g = d5();
        assert!(g.is_valid());
        let e1 = {
            let mut v = vec![q().zero(); 4];
            v[0] = q().one();
            v
        };
        let e3 = {
            let mut v = vec![q().zero(); 4];
            v[2] = q().one();
            v
        };
        // [e1, e3] = e3
        assert_eq!(g.bracket(&e1, &e3), e3);
    }

    #[test]
    fn abelian_bracket_vanishes() {
        let g = LieSuperalgebra::abelian_dim(2, 2, q());
        let x = vec![q().one(), q().zero(), q().zero(), q().zero()];
        assert!(g.bracket(&x, &x).iter().all(|v| v.is_zero()));
        assert!(g.is_valid());
        assert_eq!(g.center().dim(), 4);
        assert_eq!(g.derived_series().len(), 1); // abelian: series is [{0}]
        assert!(g.is_solvable());
    }

    #[test]
    fn two_a_bracket_value() {
        let g = two_a_three_half();
        assert!(g.is_valid());
        let e3 = {
            let mut v = vec![q().zero(); 4];
            v[2] = q().one();
            v
        };
        let e4 = {
            let mut v = vec![q().zero(); 4];
            v[3] = q().one();
            v
        };
        let half = q().fraction(1, 2);
        let expected = vec![half.clone(), half, q().zero(), q().zero()];
        assert_eq!(g.bracket(&e3, &e4), expected);
        // center is span{e1, e2}: row reduction of the stacked system
        let c = g.center();
        assert_eq!(c.dim(), 2);
        assert!(c.contains(&[q().one(), q().zero(), q().zero(), q().zero()]));
        assert!(c.contains(&[q().zero(), q().one(), q().zero(), q().zero()]));
    }

    #[test]
    fn corrupted_d5_fails_validation() {
        // rescale [e1,e3] to 2e3 so ad_{e1} and ad_{e2} stop commuting;
        // Jacobi breaks on the triple (e1,e2,e4)
        let mut g = d5();
        let mut v = vec![q().zero(); 4];
        v[2] = q().from_i64(2);
        g.set_bracket(0, 2, &v);
        let report = g.validate();
        assert!(!report.is_empty());
        assert!(report
            .iter()
            .any(|v| matches!(v, Violation::Jacobi { i: 0, j: 1, k: 3, .. })));
    }

    #[test]
    fn d5_ideals() {
        let g = d5();
        let e = |k: usize| {
            let mut v = vec![q().zero(); 4];
            v[k] = q().one();
            v
        };
        let s34 = Subspace::span(&[e(2), e(3)], 4, q());
        assert!(g.is_ideal(&s34));
        let s2 = Subspace::span(&[e(1)], 4, q());
        // [e2, e4] = e3 ∉ span{e2}
        assert!(!g.is_ideal(&s2));
        // the center is always an ideal
        assert!(g.is_ideal(&g.center()));
    }

    #[test]
    fn derived_series_monotone() {
        let g = d5();
        let series = g.derived_series();
        for w in series.windows(2) {
            assert!(w[1].is_subspace_of(&w[0]));
            assert!(w[1].dim() < w[0].dim());
        }
        assert!(g.is_solvable());
        assert!(series.len() <= g.dim() + 1);
    }

    #[test]
    fn char3_cubic_condition() {
        // X even; Y, Z odd; [Y,Y] = X, [X,Y] = Z. Jacobi holds over F_3 but
        // the cubic condition fails on (Y,Y,Y).
        let f3 = Field::Prime(3);
        let mut g = LieSuperalgebra::abelian_dim(1, 2, f3);
        let x = vec![f3.one(), f3.zero(), f3.zero()];
        let z = vec![f3.zero(), f3.zero(), f3.one()];
        g.set_bracket(1, 1, &x);
        g.set_bracket(0, 1, &z);
        let report = g.validate();
        assert!(report
            .iter()
            .any(|v| matches!(v, Violation::CubicChar3 { .. })));
        assert!(!report.iter().any(|v| matches!(v, Violation::Jacobi { .. })));
        // same structure over Q violates Jacobi instead
        let mut gq = LieSuperalgebra::abelian_dim(1, 2, q());
        let xq = vec![q().one(), q().zero(), q().zero()];
        let zq = vec![q().zero(), q().zero(), q().one()];
        gq.set_bracket(1, 1, &xq);
        gq.set_bracket(0, 1, &zq);
        assert!(gq
            .validate()
            .iter()
            .any(|v| matches!(v, Violation::Jacobi { .. })));
    }

    #[test]
    fn super_anticommutativity_property() {
        // property: bracket(x,y) + (−1)^{p(x)p(y)} bracket(y,x) = 0 for
        // homogeneous x, y (random small integer vectors)
        let g = two_a_three_half();
        let mut rng = crate::rng::SplitMix64::new(7);
        for _ in 0..50 {
            let mut x = vec![q().zero(); 4];
            let mut y = vec![q().zero(); 4];
            // homogeneous: x odd, y odd
            for k in 2..4 {
                x[k] = q().from_i64((rng.next_u64() % 7) as i64 - 3);
                y[k] = q().from_i64((rng.next_u64() % 7) as i64 - 3);
            }
            let xy = g.bracket(&x, &y);
            let yx = g.bracket(&y, &x);
            for k in 0..4 {
                // odd-odd: [x,y] + (−1)^{1·1}[y,x] = [x,y] − [y,x]
                let r = xy[k].clone() - yx[k].clone();
                assert!(r.is_zero());
            }
        }
    }
}
