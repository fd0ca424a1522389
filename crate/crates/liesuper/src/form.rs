//! Anti-symmetric bilinear forms on superspaces.
//!
//! A form is stored by its raw value matrix V[i][j] = ω(e_i, e_j), split
//! into its even and odd parity components. Gram matrices and the upsetting
//! involution are derived views. The module also solves for the space of
//! all closed anti-symmetric forms on an algebra and decides, exactly,
//! whether that space contains a non-degenerate element.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{koszul_sign, LieSuperalgebra, Parity};
use crate::matrix::{Mat, Subspace};
use crate::poly::{poly_det, Poly};
use crate::scalar::{Field, Scalar};

/// Parity of a bilinear form.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FormParity {
    Even,
    Odd,
    NonHomogeneous,
}

impl fmt::Display for FormParity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormParity::Even => write!(f, "even"),
            FormParity::Odd => write!(f, "odd"),
            FormParity::NonHomogeneous => write!(f, "NH"),
        }
    }
}

/// A bilinear form on a superspace with a fixed basis parity pattern.
#[derive(Clone, PartialEq)]
pub struct BilinearForm {
    parities: Vec<Parity>,
    field: Field,
    /// component pairing equal parities
    even: Mat,
    /// component pairing opposite parities
    odd: Mat,
}

impl fmt::Debug for BilinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BilinearForm({:?})", self.total_matrix())
    }
}

impl BilinearForm {
    pub fn zero(parities: Vec<Parity>, field: Field) -> BilinearForm {
        let n = parities.len();
        BilinearForm {
            parities,
            field,
            even: Mat::zero(n, n, field),
            odd: Mat::zero(n, n, field),
        }
    }

    /// Builds a form from its full raw value matrix, splitting it into
    /// parity components (the split is lossless).
    pub fn from_total(total: &Mat, parities: Vec<Parity>) -> BilinearForm {
        let n = parities.len();
        assert_eq!(total.rows, n);
        assert_eq!(total.cols, n);
        let field = total.field();
        let mut even = Mat::zero(n, n, field);
        let mut odd = Mat::zero(n, n, field);
        for i in 0..n {
            for j in 0..n {
                if parities[i] == parities[j] {
                    even[(i, j)] = total[(i, j)].clone();
                } else {
                    odd[(i, j)] = total[(i, j)].clone();
                }
            }
        }
        BilinearForm {
            parities,
            field,
            even,
            odd,
        }
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

    pub fn even_component(&self) -> &Mat {
        &self.even
    }

    pub fn odd_component(&self) -> &Mat {
        &self.odd
    }

    pub fn total_matrix(&self) -> Mat {
        self.even.add(&self.odd)
    }

    /// ω(e_i, e_j), both components summed.
    pub fn value(&self, i: usize, j: usize) -> Scalar {
        self.even[(i, j)].clone() + self.odd[(i, j)].clone()
    }

    /// ω(x, y) for arbitrary coordinate vectors.
    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let n = self.dim();
        assert_eq!(x.len(), n, "dimension mismatch");
        assert_eq!(y.len(), n, "dimension mismatch");
        let mut acc = self.field.zero();
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let v = self.value(i, j);
                if !v.is_zero() {
                    acc = acc + x[i].clone() * v * y[j].clone();
                }
            }
        }
        acc
    }

    /// Parity classification by the nonzero components.
    pub fn parity(&self) -> FormParity {
        match (self.even.is_zero(), self.odd.is_zero()) {
            (true, true) => FormParity::Even, // zero form counts as even
            (false, true) => FormParity::Even,
            (true, false) => FormParity::Odd,
            (false, false) => FormParity::NonHomogeneous,
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.even.is_zero() || self.odd.is_zero()
    }

    /// Gram matrix B_ij = (−1)^{p(ω)p(e_i)} ω(e_i, e_j) of the chosen
    /// homogeneous component.
    pub fn gram_matrix(&self, component: Parity) -> Mat {
        let n = self.dim();
        let raw = match component {
            Parity::Even => &self.even,
            Parity::Odd => &self.odd,
        };
        let mut b = Mat::zero(n, n, self.field);
        for i in 0..n {
            for j in 0..n {
                let mut v = raw[(i, j)].clone();
                if component == Parity::Odd && self.parities[i] == Parity::Odd {
                    v = -v;
                }
                b[(i, j)] = v;
            }
        }
        b
    }

    /// The upsetting involution on a Gram matrix: blockwise
    /// u(B) = [[Rᵀ, (−1)^{p(B)}Tᵀ], [(−1)^{p(B)}Sᵀ, −Uᵀ]].
    pub fn upsetting(b: &Mat, form_parity: Parity, parities: &[Parity]) -> Mat {
        let n = parities.len();
        assert_eq!(b.rows, n);
        let mut u = Mat::zero(n, n, b.field());
        for i in 0..n {
            for j in 0..n {
                let sign = match (parities[i], parities[j]) {
                    (Parity::Even, Parity::Even) => 1,
                    (Parity::Odd, Parity::Odd) => -1,
                    _ => {
                        if form_parity == Parity::Odd {
                            -1
                        } else {
                            1
                        }
                    }
                };
                let mut v = b[(j, i)].clone();
                if sign < 0 {
                    v = -v;
                }
                u[(i, j)] = v;
            }
        }
        u
    }

    /// Raw-matrix anti-symmetry: V[j][i] = −(−1)^{p(i)p(j)} V[i][j] on each
    /// homogeneous component.
    pub fn is_antisymmetric(&self) -> bool {
        let n = self.dim();
        for raw in [&self.even, &self.odd] {
            for i in 0..n {
                for j in 0..n {
                    let mut rhs = raw[(i, j)].clone();
                    if koszul_sign(self.parities[i], self.parities[j]) > 0 {
                        rhs = -rhs;
                    }
                    if raw[(j, i)] != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Anti-symmetry through the Gram/upsetting route: u(B) = −B per
    /// component. Equivalent to [`BilinearForm::is_antisymmetric`]; kept as
    /// a second route for cross-checking the conventions.
    pub fn is_antisymmetric_via_upsetting(&self) -> bool {
        for (component, raw) in [(Parity::Even, &self.even), (Parity::Odd, &self.odd)] {
            if raw.is_zero() {
                continue;
            }
            let b = self.gram_matrix(component);
            let u = BilinearForm::upsetting(&b, component, &self.parities);
            if u != b.scale(&-self.field.one()) {
                return false;
            }
        }
        true
    }

    /// Symmetry: u(B) = B, i.e. raw V[j][i] = (−1)^{p(i)p(j)} V[i][j].
    pub fn is_symmetric(&self) -> bool {
        let n = self.dim();
        for raw in [&self.even, &self.odd] {
            for i in 0..n {
                for j in 0..n {
                    let mut rhs = raw[(i, j)].clone();
                    if koszul_sign(self.parities[i], self.parities[j]) < 0 {
                        rhs = -rhs;
                    }
                    if raw[(j, i)] != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// First violated cocycle identity, if any. The check runs on each
    /// parity component independently; a violation reports the component,
    /// the basis triple, and the scalar residual.
    pub fn closedness_violation(&self, g: &LieSuperalgebra) -> Option<ClosednessViolation> {
        assert_eq!(g.dim(), self.dim(), "dimension mismatch");
        let n = self.dim();
        for (component, raw) in [(Parity::Even, &self.even), (Parity::Odd, &self.odd)] {
            if raw.is_zero() {
                continue;
            }
            for i in 0..n {
                for j in i..n {
                    for k in j..n {
                        let r = cocycle_residual(g, raw, i, j, k);
                        if !r.is_zero() {
                            return Some(ClosednessViolation {
                                component,
                                triple: (i, j, k),
                                residual: r,
                            });
                        }
                    }
                }
            }
        }
        None
    }

    pub fn is_closed(&self, g: &LieSuperalgebra) -> bool {
        self.closedness_violation(g).is_none()
    }

    /// det of the full raw value matrix ≠ 0.
    pub fn is_nondegenerate(&self) -> bool {
        !self.total_matrix().det().is_zero()
    }

    /// S^⊥ = {v : ω(v, w) = 0 for every basis vector w of S}.
    pub fn orthogonal_complement(&self, s: &Subspace) -> Subspace {
        let n = self.dim();
        assert_eq!(s.ambient_dim(), n, "dimension mismatch");
        let total = self.total_matrix();
        let mut rows = Vec::new();
        for w in s.basis_vectors() {
            // functional v ↦ Σ_i v_i (V w)_i
            rows.push(total.mul_vec(&w));
        }
        if rows.is_empty() {
            return Subspace::full(n, self.field);
        }
        let m = Mat::from_rows(rows, self.field);
        Subspace::span(&m.kernel(), n, self.field)
    }

    pub fn is_isotropic(&self, s: &Subspace) -> bool {
        s.is_subspace_of(&self.orthogonal_complement(s))
    }

    /// S = S^⊥ together with the non-degeneracy status of the ambient form.
    /// The Lagrangian terminology presumes a non-degenerate form; when the
    /// form is degenerate both facts are still reported.
    pub fn lagrangian_check(&self, s: &Subspace) -> LagrangianCheck {
        LagrangianCheck {
            self_orthogonal: *s == self.orthogonal_complement(s),
            form_nondegenerate: self.is_nondegenerate(),
        }
    }

    pub fn is_lagrangian(&self, s: &Subspace) -> bool {
        let c = self.lagrangian_check(s);
        c.self_orthogonal && c.form_nondegenerate
    }

    /// The parity-shifted form on Π(V):
    /// ω^Π(Πx, Πy) = (−1)^{p(ω)+p(x)+p(x)p(y)} ω(x,y) for homogeneous ω.
    /// Symmetric forms become anti-symmetric and conversely; shifting twice
    /// returns (−1)^{p(ω)} times the original.
    pub fn parity_shift(&self) -> BilinearForm {
        assert!(
            self.is_homogeneous(),
            "parity shift needs a homogeneous form"
        );
        let n = self.dim();
        let p_omega: u8 = if self.even.is_zero() && !self.odd.is_zero() {
            1
        } else {
            0
        };
        let total = self.total_matrix();
        let mut shifted = Mat::zero(n, n, self.field);
        for i in 0..n {
            for j in 0..n {
                if total[(i, j)].is_zero() {
                    continue;
                }
                let e = p_omega
                    + self.parities[i].bit()
                    + self.parities[i].bit() * self.parities[j].bit();
                let mut v = total[(i, j)].clone();
                if e % 2 == 1 {
                    v = -v;
                }
                shifted[(i, j)] = v;
            }
        }
        let flipped: Vec<Parity> = self.parities.iter().map(|p| p.flip()).collect();
        BilinearForm::from_total(&shifted, flipped)
    }

    /// Restriction to the span of `basis`; the caller supplies the parities
    /// of those vectors.
    pub fn restrict(&self, basis: &[Vec<Scalar>], parities: Vec<Parity>) -> BilinearForm {
        let m = basis.len();
        assert_eq!(parities.len(), m);
        let mut w = Mat::zero(m, m, self.field);
        for a in 0..m {
            for b in 0..m {
                w[(a, b)] = self.eval(&basis[a], &basis[b]);
            }
        }
        BilinearForm::from_total(&w, parities)
    }

    pub fn scale(&self, s: &Scalar) -> BilinearForm {
        BilinearForm {
            parities: self.parities.clone(),
            field: self.field,
            even: self.even.scale(s),
            odd: self.odd.scale(s),
        }
    }

    pub fn add(&self, other: &BilinearForm) -> BilinearForm {
        assert_eq!(self.parities, other.parities);
        BilinearForm {
            parities: self.parities.clone(),
            field: self.field,
            even: self.even.add(&other.even),
            odd: self.odd.add(&other.odd),
        }
    }
}

/// Result of [`BilinearForm::lagrangian_check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LagrangianCheck {
    pub self_orthogonal: bool,
    pub form_nondegenerate: bool,
}

#[derive(Clone, Debug)]
pub struct ClosednessViolation {
    pub component: Parity,
    pub triple: (usize, usize, usize),
    pub residual: Scalar,
}

/// (−1)^{p(i)p(k)}ω(e_i,[e_j,e_k]) + (−1)^{p(k)p(j)}ω(e_k,[e_i,e_j]) +
/// (−1)^{p(j)p(i)}ω(e_j,[e_k,e_i]), with ω given by one raw component.
fn cocycle_residual(g: &LieSuperalgebra, raw: &Mat, i: usize, j: usize, k: usize) -> Scalar {
    let field = g.field();
    let pair = |a: usize, v: &[Scalar]| -> Scalar {
        let mut acc = field.zero();
        for (m, c) in v.iter().enumerate() {
            if !c.is_zero() && !raw[(a, m)].is_zero() {
                acc = acc + raw[(a, m)].clone() * c.clone();
            }
        }
        acc
    };
    let p = g.parities();
    let mut acc = field.zero();
    let terms = [
        (koszul_sign(p[i], p[k]), pair(i, &g.bracket_basis(j, k))),
        (koszul_sign(p[k], p[j]), pair(k, &g.bracket_basis(i, j))),
        (koszul_sign(p[j], p[i]), pair(j, &g.bracket_basis(k, i))),
    ];
    for (sign, term) in terms {
        if sign < 0 {
            acc = acc - term;
        } else {
            acc = acc + term;
        }
    }
    acc
}

/// Basis of the linear space of closed anti-symmetric forms on `g`, split
/// by parity. Every returned form passes both `is_closed` and
/// `is_antisymmetric`; the span is exactly the solution set of the cocycle
/// system.
pub struct ClosedFormSpace {
    pub even: Vec<BilinearForm>,
    pub odd: Vec<BilinearForm>,
}

impl ClosedFormSpace {
    pub fn all(&self) -> Vec<BilinearForm> {
        let mut v = self.even.clone();
        v.extend(self.odd.clone());
        v
    }

    pub fn dim(&self) -> usize {
        self.even.len() + self.odd.len()
    }
}

/// Independent coordinates of an anti-symmetric form of the given component
/// parity: entries (i, j) with i < j in the component's support, plus the
/// odd-odd diagonal for the even component.
fn antisym_unknowns(parities: &[Parity], component: Parity) -> Vec<(usize, usize)> {
    let n = parities.len();
    let mut unknowns = Vec::new();
    for i in 0..n {
        for j in i..n {
            let same = parities[i] == parities[j];
            let in_component = match component {
                Parity::Even => same,
                Parity::Odd => !same,
            };
            if !in_component {
                continue;
            }
            if i == j {
                if parities[i] == Parity::Odd {
                    unknowns.push((i, i));
                }
            } else {
                unknowns.push((i, j));
            }
        }
    }
    unknowns
}

/// Materializes an anti-symmetric component matrix from unknown values.
fn antisym_matrix(
    parities: &[Parity],
    unknowns: &[(usize, usize)],
    values: &[Scalar],
    field: Field,
) -> Mat {
    let n = parities.len();
    let mut m = Mat::zero(n, n, field);
    for ((i, j), v) in unknowns.iter().zip(values) {
        m[(*i, *j)] = v.clone();
        if i != j {
            let mut w = -v.clone();
            if koszul_sign(parities[*i], parities[*j]) < 0 {
                w = -w;
            }
            m[(*j, *i)] = w;
        }
    }
    m
}

fn solve_component(g: &LieSuperalgebra, component: Parity) -> Vec<BilinearForm> {
    let n = g.dim();
    let field = g.field();
    let parities = g.parities().to_vec();
    let unknowns = antisym_unknowns(&parities, component);
    if unknowns.is_empty() {
        return Vec::new();
    }
    // precompute the elementary matrices once
    let elementary: Vec<Mat> = (0..unknowns.len())
        .map(|u| {
            let mut values = vec![field.zero(); unknowns.len()];
            values[u] = field.one();
            antisym_matrix(&parities, &unknowns, &values, field)
        })
        .collect();
    // each basis triple yields one linear equation in the unknowns
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i..n {
            for k in j..n {
                let row: Vec<Scalar> = elementary
                    .iter()
                    .map(|e| cocycle_residual(g, e, i, j, k))
                    .collect();
                if row.iter().any(|r| !r.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let solutions: Vec<Vec<Scalar>> = if rows.is_empty() {
        (0..unknowns.len())
            .map(|u| {
                let mut v = vec![field.zero(); unknowns.len()];
                v[u] = field.one();
                v
            })
            .collect()
    } else {
        Mat::from_rows(rows, field).kernel()
    };
    let mut basis = Vec::new();
    for values in solutions {
        let raw = antisym_matrix(&parities, &unknowns, &values, field);
        let mut form = BilinearForm::zero(parities.clone(), field);
        match component {
            Parity::Even => form.even = raw,
            Parity::Odd => form.odd = raw,
        }
        debug_assert!(form.is_antisymmetric());
        debug_assert!(form.is_closed(g));
        basis.push(form);
    }
    basis
}

/// All closed anti-symmetric forms on `g`, parity-split. The parity
/// components decouple: every cocycle equation on a basis triple touches
/// only one component.
pub fn solve_closed_antisymmetric_forms(g: &LieSuperalgebra) -> ClosedFormSpace {
    ClosedFormSpace {
        even: solve_component(g, Parity::Even),
        odd: solve_component(g, Parity::Odd),
    }
}

/// Outcome of the exact non-degeneracy search over a space of forms.
#[derive(Clone, Debug)]
pub enum NondegSearch {
    /// Coefficients of a non-degenerate combination in the given basis,
    /// together with the witness form.
    Witness(Vec<Scalar>, BilinearForm),
    /// No combination is non-degenerate.
    CertifiedNo {
        /// Set when a single vector kills every basis form (the cheap
        /// certificate); `None` when the full determinant expansion ran and
        /// came out identically zero.
        common_kernel: Option<Vec<Scalar>>,
    },
}

impl NondegSearch {
    pub fn is_witness(&self) -> bool {
        matches!(self, NondegSearch::Witness(..))
    }
}

/// Decides whether the span of `forms` contains a non-degenerate form.
///
/// Forms the symbolic matrix Σ tᵢ Vᵢ, expands its determinant exactly, and
/// either certifies that it is identically zero or produces a rational
/// witness point by deterministic variable-by-variable substitution from a
/// fixed candidate ladder. The ladder is longer than the degree in each
/// variable, so the substitution always succeeds once the determinant is
/// known to be nonzero.
pub fn exists_nondegenerate_in_space(forms: &[BilinearForm]) -> NondegSearch {
    let (res, _) = exists_nondegenerate_with_det(forms);
    res
}

/// Same as [`exists_nondegenerate_in_space`] but also returns the symbolic
/// determinant (when it was expanded) for reporting.
pub fn exists_nondegenerate_with_det(forms: &[BilinearForm]) -> (NondegSearch, Option<Poly>) {
    assert!(!forms.is_empty(), "empty form space");
    let field = forms[0].field();
    let n = forms[0].dim();
    let parities = forms[0].parities().to_vec();
    // cheap certificate: common kernel vector
    let mats: Vec<Mat> = forms.iter().map(|f| f.total_matrix()).collect();
    let stacked = Mat::stack(&mats.iter().collect::<Vec<_>>());
    let common = stacked.kernel();
    if let Some(v) = common.first() {
        return (
            NondegSearch::CertifiedNo {
                common_kernel: Some(v.clone()),
            },
            None,
        );
    }
    // symbolic determinant
    let k = forms.len();
    let mut sym = vec![vec![Poly::zero(k, field); n]; n];
    for (idx, m) in mats.iter().enumerate() {
        let t = Poly::var(k, idx, field);
        for i in 0..n {
            for j in 0..n {
                if !m[(i, j)].is_zero() {
                    let add = t.scale(&m[(i, j)]);
                    sym[i][j] = sym[i][j].add(&add);
                }
            }
        }
    }
    let det = poly_det(&sym);
    if det.is_zero() {
        return (
            NondegSearch::CertifiedNo { common_kernel: None },
            Some(det),
        );
    }
    let mut current = det.clone();
    let mut point = vec![field.zero(); k];
    for var in 0..k {
        if current.degree_in(var) == 0 {
            point[var] = field.zero();
            continue;
        }
        let mut found = false;
        for cand in candidate_scalars(field, current.degree_in(var) as usize + 2) {
            let next = current.substitute(var, &cand);
            if !next.is_zero() {
                point[var] = cand;
                current = next;
                found = true;
                break;
            }
        }
        assert!(found, "candidate ladder shorter than the degree bound");
    }
    debug_assert!(!current.constant_term().is_zero());
    let mut total = Mat::zero(n, n, field);
    for (c, m) in point.iter().zip(&mats) {
        if !c.is_zero() {
            total = total.add(&m.scale(c));
        }
    }
    let w = BilinearForm::from_total(&total, parities);
    debug_assert!(w.is_nondegenerate());
    (NondegSearch::Witness(point, w), Some(det))
}

/// Deterministic candidate ladder 1, −1, 2, −2, 1/2, −1/2, 3, −3, 1/3, …
/// (for 𝔽_p: 1, 2, 3, …, p−1).
pub fn candidate_scalars(field: Field, count: usize) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(count);
    match field {
        Field::Rationals => {
            let mut k = 1i64;
            while out.len() < count {
                for s in [
                    field.from_i64(k),
                    field.from_i64(-k),
                    field.fraction(1, k),
                    field.fraction(-1, k),
                ] {
                    if !out.contains(&s) {
                        out.push(s);
                        if out.len() == count {
                            break;
                        }
                    }
                }
                k += 1;
            }
        }
        Field::Prime(p) => {
            let mut v = 1u64;
            while out.len() < count && v < p {
                out.push(field.from_i64(v as i64));
                v += 1;
            }
            assert!(out.len() == count, "field too small for candidate ladder");
        }
    }
    out
}

/// A family of forms whose raw entries are affine-linear polynomials in
/// named parameters, constrained by polynomial inequations (≠ 0).
#[derive(Clone, Debug)]
pub struct FormFamily {
    pub parities: Vec<Parity>,
    pub field: Field,
    pub params: Vec<String>,
    /// entries[i][j] is a polynomial in the parameters
    pub entries: Vec<Vec<Poly>>,
    /// each constraint polynomial must evaluate ≠ 0
    pub constraints: Vec<Poly>,
}

impl FormFamily {
    pub fn nparams(&self) -> usize {
        self.params.len()
    }

    pub fn is_affine_linear(&self) -> bool {
        self.entries.iter().flatten().all(|p| p.is_affine_linear())
    }

    pub fn is_admissible(&self, point: &[Scalar]) -> bool {
        self.constraints.iter().all(|c| !c.eval(point).is_zero())
    }

    pub fn instantiate(&self, point: &[Scalar]) -> BilinearForm {
        let n = self.parities.len();
        let mut total = Mat::zero(n, n, self.field);
        for i in 0..n {
            for j in 0..n {
                total[(i, j)] = self.entries[i][j].eval(point);
            }
        }
        BilinearForm::from_total(&total, self.parities.clone())
    }

    /// The constant part and one form per parameter direction; because the
    /// entries are affine-linear, a linear property (closedness,
    /// anti-symmetry) holds for every instantiation iff it holds for each
    /// of these.
    pub fn direction_forms(&self) -> Vec<BilinearForm> {
        let k = self.nparams();
        let zero_pt = vec![self.field.zero(); k];
        let base = self.instantiate(&zero_pt);
        let mut out = Vec::new();
        if !base.total_matrix().is_zero() {
            out.push(base.clone());
        }
        for a in 0..k {
            let mut pt = vec![self.field.zero(); k];
            pt[a] = self.field.one();
            let dir = self.instantiate(&pt);
            let delta_total = dir.total_matrix().sub(&base.total_matrix());
            if !delta_total.is_zero() {
                out.push(BilinearForm::from_total(&delta_total, self.parities.clone()));
            }
        }
        out
    }

    /// Parity classification of the generic member.
    pub fn parity(&self) -> FormParity {
        let mut has_even = false;
        let mut has_odd = false;
        let n = self.parities.len();
        for i in 0..n {
            for j in 0..n {
                if self.entries[i][j].is_zero() {
                    continue;
                }
                if self.parities[i] == self.parities[j] {
                    has_even = true;
                } else {
                    has_odd = true;
                }
            }
        }
        match (has_even, has_odd) {
            (true, false) | (false, false) => FormParity::Even,
            (false, true) => FormParity::Odd,
            (true, true) => FormParity::NonHomogeneous,
        }
    }

    /// Deterministic admissible sample points (small candidate scalars
    /// first), in a reproducible order.
    pub fn admissible_points(&self, count: usize) -> Vec<Vec<Scalar>> {
        let k = self.nparams();
        let mut out = Vec::new();
        if k == 0 {
            if count > 0 {
                out.push(Vec::new());
            }
            return out;
        }
        let ladder_len = match self.field {
            Field::Rationals => 8,
            Field::Prime(p) => 8.min((p - 1) as usize),
        };
        let ladder = candidate_scalars(self.field, ladder_len);
        let limit = ladder.len().pow(k.min(6) as u32);
        let mut stack = vec![0usize; k];
        for idx in 0..limit {
            let mut rem = idx;
            for slot in stack.iter_mut() {
                *slot = rem % ladder.len();
                rem /= ladder.len();
            }
            let pt: Vec<Scalar> = stack.iter().map(|&s| ladder[s].clone()).collect();
            if self.is_admissible(&pt) {
                out.push(pt);
                if out.len() == count {
                    break;
                }
            }
        }
        out
    }

    /// A deterministic point violating some constraint (other parameters 1),
    /// when the family is constrained at all.
    pub fn violating_point(&self) -> Option<Vec<Scalar>> {
        let k = self.nparams();
        if self.constraints.is_empty() || k == 0 {
            return None;
        }
        let one = self.field.one();
        for mask in 1u32..(1 << k.min(16)) {
            let pt: Vec<Scalar> = (0..k)
                .map(|a| {
                    if mask & (1 << a) != 0 {
                        self.field.zero()
                    } else {
                        one.clone()
                    }
                })
                .collect();
            if !self.is_admissible(&pt) {
                return Some(pt);
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wedge;
    use alloc::string::ToString;

    fn q() -> Field {
        Field::Rationals
    }

    fn d5() -> LieSuperalgebra {
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

    fn wedge_form(expr: &str, parities: &[Parity]) -> BilinearForm {
        let names: Vec<String> = (1..=parities.len())
            .map(|i| alloc::format!("e{i}"))
            .collect();
        wedge::parse_form(expr, &names, parities.to_vec(), &[], q())
            .unwrap()
            .instantiate(&[])
    }

    #[test]
    fn gram_matrix_and_upsetting_example() {
        // odd ω on K^{1|1} with ω(e1,e2)=1, ω(e2,e1)=−1
        let parities = vec![Parity::Even, Parity::Odd];
        let mut total = Mat::zero(2, 2, q());
        total[(0, 1)] = q().one();
        total[(1, 0)] = -q().one();
        let f = BilinearForm::from_total(&total, parities.clone());
        assert_eq!(f.parity(), FormParity::Odd);
        let b = f.gram_matrix(Parity::Odd);
        // B = [[0,1],[1,0]]: the sign (−1)^{p(ω)p(e_i)} flips the e2 row
        assert_eq!(b[(0, 1)], q().one());
        assert_eq!(b[(1, 0)], q().one());
        // u(B) = −B under the odd-parity block rule
        let u = BilinearForm::upsetting(&b, Parity::Odd, &parities);
        assert_eq!(u, b.scale(&-q().one()));
        assert!(f.is_antisymmetric());
        assert!(f.is_antisymmetric_via_upsetting());
    }

    #[test]
    fn even_gram_equals_raw() {
        let parities = vec![Parity::Even, Parity::Even];
        let mut total = Mat::zero(2, 2, q());
        total[(0, 1)] = q().from_i64(3);
        total[(1, 0)] = q().from_i64(-3);
        let f = BilinearForm::from_total(&total, parities);
        assert_eq!(f.gram_matrix(Parity::Even), f.total_matrix());
    }

    #[test]
    fn antisymmetry_detects_even_diagonal() {
        let parities = vec![Parity::Even, Parity::Even];
        let mut total = Mat::zero(2, 2, q());
        total[(0, 0)] = q().one();
        let f = BilinearForm::from_total(&total, parities);
        assert!(!f.is_antisymmetric());
    }

    #[test]
    fn equivalence_of_antisymmetry_routes() {
        // property: raw rule ⟺ u(Gram) = −Gram over random matrices
        let mut rng = crate::rng::SplitMix64::new(11);
        for _ in 0..80 {
            let parities = vec![Parity::Even, Parity::Odd, Parity::Odd, Parity::Even];
            let mut total = Mat::zero(4, 4, q());
            for i in 0..4 {
                for j in 0..4 {
                    total[(i, j)] = q().from_i64(rng.small_int(2));
                }
            }
            let f = BilinearForm::from_total(&total, parities);
            assert_eq!(f.is_antisymmetric(), f.is_antisymmetric_via_upsetting());
        }
    }

    #[test]
    fn d5_family_closed_and_nondegenerate() {
        let g = d5();
        let names: Vec<String> = (1..=4).map(|i| alloc::format!("e{i}")).collect();
        let fam = wedge::parse_form(
            "lambda*e1^∧e4^ + mu*(e1^∧e3^ + e2^∧e4^)",
            &names,
            g.parities().to_vec(),
            &["lambda".to_string(), "mu".to_string()],
            q(),
        )
        .unwrap();
        for dir in fam.direction_forms() {
            assert!(dir.is_antisymmetric());
            assert!(dir.is_closed(&g));
        }
        let inst = fam.instantiate(&[q().one(), q().one()]);
        assert!(inst.is_nondegenerate());
        assert_eq!(inst.parity(), FormParity::Odd);
        let degenerate = fam.instantiate(&[q().one(), q().zero()]);
        assert!(!degenerate.is_nondegenerate());
    }

    #[test]
    fn d5_nonclosed_witness_triple() {
        // e1*∧e3* alone fails the cocycle identity on (e1,e2,e4)
        let g = d5();
        let f = wedge_form("e1^∧e3^", g.parities());
        let viol = f.closedness_violation(&g).expect("must fail");
        assert_eq!(viol.triple, (0, 1, 3));
    }

    #[test]
    fn abelian_forms_all_closed() {
        let g = LieSuperalgebra::abelian_dim(1, 1, q());
        let f = wedge_form("e1^∧e2^", g.parities());
        assert!(f.is_closed(&g));
    }

    #[test]
    fn closed_space_abelian_2_0() {
        let g = LieSuperalgebra::abelian_dim(2, 0, q());
        let space = solve_closed_antisymmetric_forms(&g);
        assert_eq!(space.even.len(), 1);
        assert_eq!(space.odd.len(), 0);
    }

    #[test]
    fn closed_space_linearity() {
        let g = d5();
        let space = solve_closed_antisymmetric_forms(&g);
        assert!(space.dim() >= 2);
        let all = space.all();
        let s = all[0]
            .scale(&q().from_i64(3))
            .add(&all[1].scale(&q().from_i64(-2)));
        assert!(s.is_closed(&g));
        assert!(s.is_antisymmetric());
    }

    #[test]
    fn orthogonal_complement_dims() {
        let g = d5();
        let f = wedge_form("e1^∧e3^ + e2^∧e4^", g.parities());
        assert!(f.is_nondegenerate());
        let e = |k: usize| {
            let mut v = vec![q().zero(); 4];
            v[k] = q().one();
            v
        };
        let s = Subspace::span(&[e(0), e(3)], 4, q());
        let perp = f.orthogonal_complement(&s);
        assert_eq!(s.dim() + perp.dim(), 4);
        assert_eq!(f.orthogonal_complement(&perp), s);
        let zero = Subspace::zero(4, q());
        assert_eq!(f.orthogonal_complement(&zero).dim(), 4);
    }

    #[test]
    fn center_orthogonal_to_derived() {
        // z(g) ⊆ [g,g]⊥ for quasi-Frobenius (g, ω)
        let g = d5();
        let f = wedge_form("e1^∧e4^ + e1^∧e3^ + e2^∧e4^", g.parities());
        assert!(f.is_closed(&g));
        assert!(f.is_nondegenerate());
        let z = g.center();
        let perp = f.orthogonal_complement(&g.derived_subalgebra());
        assert!(z.is_subspace_of(&perp));
    }

    #[test]
    fn parity_shift_swaps_symmetry() {
        // symmetric even pairing on K^{1|0}
        let mut total = Mat::zero(1, 1, q());
        total[(0, 0)] = q().one();
        let f = BilinearForm::from_total(&total, vec![Parity::Even]);
        assert!(f.is_symmetric());
        let shifted = f.parity_shift();
        assert!(shifted.is_antisymmetric());
        assert_eq!(shifted.parities()[0], Parity::Odd);
        // double shift returns the original for an even form
        let back = shifted.parity_shift();
        assert_eq!(back.total_matrix(), f.total_matrix());
        // anti-symmetric odd becomes symmetric even
        let parities = vec![Parity::Even, Parity::Odd];
        let mut t2 = Mat::zero(2, 2, q());
        t2[(0, 1)] = q().one();
        t2[(1, 0)] = -q().one();
        let odd = BilinearForm::from_total(&t2, parities);
        assert!(odd.is_antisymmetric());
        let sh = odd.parity_shift();
        assert!(sh.is_symmetric());
    }

    #[test]
    fn nondegenerate_search_certified_no_rank() {
        // span{e1*∧e2*} on K^{4|0}: rank ≤ 2 < 4
        let parities = vec![Parity::Even; 4];
        let f = wedge_form("e1^∧e2^", &parities);
        match exists_nondegenerate_in_space(&[f]) {
            NondegSearch::CertifiedNo { common_kernel } => {
                assert!(common_kernel.is_some());
            }
            _ => panic!("expected certified-no"),
        }
    }

    #[test]
    fn nondegenerate_search_witness() {
        let g = d5();
        let space = solve_closed_antisymmetric_forms(&g);
        match exists_nondegenerate_in_space(&space.all()) {
            NondegSearch::Witness(_, w) => {
                assert!(w.is_nondegenerate());
                assert!(w.is_closed(&g));
            }
            _ => panic!("expected witness"),
        }
    }

    #[test]
    fn candidate_ladder_deterministic() {
        let l1 = candidate_scalars(q(), 6);
        let l2 = candidate_scalars(q(), 6);
        assert_eq!(l1, l2);
        assert_eq!(l1[0], q().one());
        assert_eq!(l1[1], q().from_i64(-1));
    }
}
