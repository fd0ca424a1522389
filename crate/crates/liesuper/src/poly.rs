//! Sparse multivariate polynomials over an exact field, plus exact
//! determinants of polynomial matrices.
//!
//! Used for symbolic non-degeneracy certificates: the determinant of
//! Σ tᵢ Vᵢ is expanded exactly in the parameters tᵢ.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::scalar::{Field, Scalar};

/// Exponent vector, one entry per variable.
pub type Monomial = Vec<u32>;

/// A sparse polynomial in a fixed number of variables.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    field: Field,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Poly {
    pub fn zero(nvars: usize, field: Field) -> Poly {
        Poly {
            nvars,
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Poly {
        let field = c.field();
        let mut p = Poly::zero(nvars, field);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn var(nvars: usize, idx: usize, field: Field) -> Poly {
        assert!(idx < nvars);
        let mut mono = vec![0; nvars];
        mono[idx] = 1;
        let mut p = Poly::zero(nvars, field);
        p.terms.insert(mono, field.one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.iter().all(|&e| e == 0))
    }

    pub fn constant_term(&self) -> Scalar {
        self.terms
            .get(&vec![0; self.nvars])
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    /// Total degree; 0 for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m[var]).max().unwrap_or(0)
    }

    /// Degree ≤ 1 in every variable jointly (affine-linear)?
    pub fn is_affine_linear(&self) -> bool {
        self.total_degree() <= 1
    }

    fn insert(&mut self, mono: Monomial, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&mono) {
            Some(c) => {
                let nc = c.clone() + coeff;
                if nc.is_zero() {
                    self.terms.remove(&mono);
                } else {
                    *c = nc;
                }
            }
            None => {
                self.terms.insert(mono, coeff);
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        let mut out = Poly::zero(self.nvars, self.field);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Poly::zero(self.nvars, self.field);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let mono: Monomial = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                out.insert(mono, c1.clone() * c2.clone());
            }
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Poly {
        let mut out = Poly::zero(self.nvars, self.field);
        if s.is_zero() {
            return out;
        }
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), c.clone() * s.clone());
        }
        out
    }

    /// Evaluates at a full point.
    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.nvars);
        let mut acc = self.field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    t = t * point[i].clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Substitutes one variable by a scalar, keeping the variable slot
    /// (exponent becomes 0).
    pub fn substitute(&self, var: usize, value: &Scalar) -> Poly {
        let mut out = Poly::zero(self.nvars, self.field);
        for (m, c) in &self.terms {
            let e = m[var];
            let mut t = c.clone();
            for _ in 0..e {
                t = t.clone() * value.clone();
            }
            let mut mono = m.clone();
            mono[var] = 0;
            out.insert(mono, t);
        }
        out
    }

    /// Pretty form using the given variable names.
    pub fn display(&self, vars: &[String]) -> String {
        use core::fmt::Write;
        if self.is_zero() {
            return String::from("0");
        }
        let mut s = String::new();
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                s.push_str(" + ");
            }
            first = false;
            let mut w = String::new();
            let _ = write!(w, "{c}");
            s.push_str(&w);
            for (i, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    s.push('*');
                    s.push_str(&vars[i]);
                }
            }
        }
        s
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    write!(f, "*t{i}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// Determinant of a square polynomial matrix by cofactor expansion along
/// rows, memoized on the set of free columns. Exact; suitable for the
/// dimensions used here (n ≤ 12).
pub fn poly_det(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    if n == 0 {
        panic!("empty matrix");
    }
    for row in m {
        assert_eq!(row.len(), n);
    }
    let nvars = m[0][0].nvars();
    let field = m[0][0].field();
    let mut memo: BTreeMap<u32, Poly> = BTreeMap::new();
    let full_mask: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    det_rec(m, 0, full_mask, nvars, field, &mut memo)
}

fn det_rec(
    m: &[Vec<Poly>],
    row: usize,
    cols: u32,
    nvars: usize,
    field: Field,
    memo: &mut BTreeMap<u32, Poly>,
) -> Poly {
    if cols == 0 {
        return Poly::constant(nvars, field.one());
    }
    if let Some(p) = memo.get(&cols) {
        return p.clone();
    }
    let mut acc = Poly::zero(nvars, field);
    // the sign toggles over remaining columns only: (−1)^{position in submatrix}
    let mut sign_pos = true;
    let n = m.len();
    for j in 0..n {
        if cols & (1 << j) == 0 {
            continue;
        }
        let entry = &m[row][j];
        if !entry.is_zero() {
            let sub = det_rec(m, row + 1, cols & !(1 << j), nvars, field, memo);
            let term = entry.mul(&sub);
            acc = if sign_pos { acc.add(&term) } else { acc.sub(&term) };
        }
        sign_pos = !sign_pos;
    }
    memo.insert(cols, acc.clone());
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn arithmetic_and_eval() {
        // (x + 2)(x − 2) = x² − 4
        let x = Poly::var(1, 0, q());
        let two = Poly::constant(1, q().from_i64(2));
        let p = x.add(&two).mul(&x.sub(&two));
        assert_eq!(p.eval(&[q().from_i64(3)]), q().from_i64(5));
        assert_eq!(p.total_degree(), 2);
        assert!(p.substitute(0, &q().from_i64(2)).is_zero());
    }

    #[test]
    fn det_matches_direct_expansion() {
        // det [[x, 1], [y, x]] = x² − y
        let x = Poly::var(2, 0, q());
        let y = Poly::var(2, 1, q());
        let one = Poly::constant(2, q().one());
        let d = poly_det(&[vec![x.clone(), one], vec![y.clone(), x.clone()]]);
        let expect = x.mul(&x).sub(&y);
        assert_eq!(d, expect);
    }

    #[test]
    fn det_of_scalar_matrix_matches_matrix_det() {
        use crate::matrix::Mat;
        use crate::rng::SplitMix64;
        let mut rng = SplitMix64::new(5);
        for _ in 0..10 {
            let n = 4;
            let rows: alloc::vec::Vec<alloc::vec::Vec<Scalar>> = (0..n)
                .map(|_| (0..n).map(|_| q().from_i64(rng.small_int(4))).collect())
                .collect();
            let pm: alloc::vec::Vec<alloc::vec::Vec<Poly>> = rows
                .iter()
                .map(|r| r.iter().map(|s| Poly::constant(0, s.clone())).collect())
                .collect();
            let m = Mat::from_rows(rows, q());
            assert_eq!(poly_det(&pm).constant_term(), m.det());
        }
    }

    #[test]
    fn display_names() {
        let x = Poly::var(2, 0, q());
        let names = ["lambda".to_string(), "mu".to_string()];
        assert_eq!(x.display(&names), "1*lambda");
    }
}
