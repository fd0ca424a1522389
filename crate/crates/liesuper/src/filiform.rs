//! The model filiform Lie superalgebras L^n and L^{n,m} and their standard
//! closed anti-symmetric form families.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{LieSuperalgebra, Parity};
use crate::form::FormFamily;
use crate::poly::Poly;
use crate::scalar::Field;

/// L^{n,m}: basis X_1, …, X_n | Y_1, …, Y_m with the only nonzero brackets
/// [X_1, X_i] = X_{i+1} (2 ≤ i ≤ n−1) and [X_1, Y_j] = Y_{j+1}
/// (1 ≤ j ≤ m−1). `m = 0` gives the filiform Lie algebra L^n.
pub fn make_filiform(n: usize, m: usize, field: Field) -> LieSuperalgebra {
    assert!(n >= 2, "filiform needs n >= 2");
    let mut g = LieSuperalgebra::abelian_dim(n, m, field);
    let dim = n + m;
    let unit = |k: usize| {
        let mut v = vec![field.zero(); dim];
        v[k] = field.one();
        v
    };
    for i in 2..n {
        // [X_1, X_i] = X_{i+1}; X_i has index i−1
        g.set_bracket(0, i - 1, &unit(i));
    }
    for j in 1..m {
        // [X_1, Y_j] = Y_{j+1}; Y_j has index n+j−1
        g.set_bracket(0, n + j - 1, &unit(n + j));
    }
    let mut names: Vec<String> = (1..=n).map(|i| format!("X{i}")).collect();
    names.extend((1..=m).map(|j| format!("Y{j}")));
    g.with_names(names)
}

/// Which of the three standard filiform form families to generate.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FiliformFormVariant {
    /// n = m: periplectic family λ X_1*∧Y_n* + μ Σ_{i=2}^n (−1)^{n−i} X_i*∧Y_{n+1−i}*.
    PeriplecticNN,
    /// n even, m odd: orthosymplectic family in λ, μ, ν.
    OrthoEvenOdd,
    /// n even, m = n−2: non-homogeneous family in λ, μ.
    NhNMinus2,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiliformFormError(pub String);

impl core::fmt::Display for FiliformFormError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[cfg(feature = "std")]
impl std::error::Error for FiliformFormError {}

/// The standard closed anti-symmetric family on L^{n,m} for the variant.
/// Shape constraints are checked; the returned family carries the product
/// of its used parameters as the non-degeneracy constraint.
pub fn filiform_form(
    n: usize,
    m: usize,
    variant: FiliformFormVariant,
    field: Field,
) -> Result<FormFamily, FiliformFormError> {
    let g = make_filiform(n, m, field);
    let parities = g.parities().to_vec();
    let x = |i: usize| i - 1; // index of X_i
    let y = |j: usize| n + j - 1; // index of Y_j
    match variant {
        FiliformFormVariant::PeriplecticNN => {
            if n != m {
                return Err(FiliformFormError(format!(
                    "periplectic family needs n = m, got ({n},{m})"
                )));
            }
            let params = vec![String::from("lambda"), String::from("mu")];
            let mut b = WedgeBuilder::new(&parities, &params, field);
            let lam = b.param(0);
            b.add(x(1), y(n), lam);
            for i in 2..=n {
                let sign = if (n - i) % 2 == 0 { 1 } else { -1 };
                let c = b.param(1).scale(&field.from_i64(sign));
                b.add(x(i), y(n + 1 - i), c);
            }
            let cons = mono_product(&params, &[0, 1], field);
            Ok(b.family(vec![cons]))
        }
        FiliformFormVariant::OrthoEvenOdd => {
            if n % 2 != 0 || m % 2 != 1 {
                return Err(FiliformFormError(format!(
                    "orthosymplectic family needs n even and m odd, got ({n},{m})"
                )));
            }
            let params = vec![
                String::from("lambda"),
                String::from("mu"),
                String::from("nu"),
            ];
            let mut b = WedgeBuilder::new(&parities, &params, field);
            let lam = b.param(0);
            b.add(x(1), x(n), lam);
            let mut mu_used = false;
            for i in 2..=(n / 2) {
                let sign = if (n / 2 - i) % 2 == 0 { 1 } else { -1 };
                let c = b.param(1).scale(&field.from_i64(sign));
                b.add(x(i), x(n + 1 - i), c);
                mu_used = true;
            }
            // (−1)^{(m+1)/2} ν Σ_{i=1}^{(m−1)/2} (−1)^i Y_i*∧Y_{m+1−i}*
            let lead = if ((m + 1) / 2) % 2 == 0 { 1 } else { -1 };
            for i in 1..=((m - 1) / 2) {
                let sign = lead * if i % 2 == 0 { 1 } else { -1 };
                let c = b.param(2).scale(&field.from_i64(sign));
                b.add(y(i), y(m + 1 - i), c);
            }
            // + (ν/2) Y_{(m+1)/2}*∧Y_{(m+1)/2}*
            let mid = (m + 1) / 2;
            let c = b.param(2).scale(&field.fraction(1, 2));
            b.add(y(mid), y(mid), c);
            let cons = if mu_used {
                vec![mono_product(&params, &[0, 1, 2], field)]
            } else {
                vec![mono_product(&params, &[0, 2], field)]
            };
            Ok(b.family(cons))
        }
        FiliformFormVariant::NhNMinus2 => {
            if n % 2 != 0 || m != n - 2 {
                return Err(FiliformFormError(format!(
                    "NH family needs n even and m = n−2, got ({n},{m})"
                )));
            }
            let params = vec![String::from("lambda"), String::from("mu")];
            let mut b = WedgeBuilder::new(&parities, &params, field);
            let lam = b.param(0);
            b.add(x(1), x(n), lam);
            for i in 2..=(n - 1) {
                let sign = if i % 2 == 0 { -1 } else { 1 }; // −(−1)^i
                let c = b.param(1).scale(&field.from_i64(sign));
                b.add(x(i), y(n - i), c);
            }
            let cons = mono_product(&params, &[0, 1], field);
            Ok(b.family(vec![cons]))
        }
    }
}

fn mono_product(params: &[String], idxs: &[usize], field: Field) -> Poly {
    let k = params.len();
    let mut p = Poly::constant(k, field.one());
    for &i in idxs {
        p = p.mul(&Poly::var(k, i, field));
    }
    p
}

/// Accumulates wedge terms c·e_i*∧e_j* with polynomial coefficients, using
/// the same Koszul evaluation signs as the wedge parser.
pub struct WedgeBuilder<'a> {
    parities: &'a [Parity],
    params: &'a [String],
    field: Field,
    entries: Vec<Vec<Poly>>,
}

impl<'a> WedgeBuilder<'a> {
    pub fn new(parities: &'a [Parity], params: &'a [String], field: Field) -> WedgeBuilder<'a> {
        let n = parities.len();
        WedgeBuilder {
            parities,
            params,
            field,
            entries: vec![vec![Poly::zero(params.len(), field); n]; n],
        }
    }

    pub fn param(&self, i: usize) -> Poly {
        Poly::var(self.params.len(), i, self.field)
    }

    /// Adds coeff · e_i*∧e_j* (i ≤ j).
    pub fn add(&mut self, i: usize, j: usize, coeff: Poly) {
        if i == j {
            if self.parities[i] == Parity::Odd {
                let v = coeff.scale(&self.field.from_i64(-2));
                self.entries[i][i] = self.entries[i][i].add(&v);
            }
            return;
        }
        assert!(i < j, "wedge indices must be ordered");
        let sij = crate::algebra::koszul_sign(self.parities[i], self.parities[j]);
        let vij = if sij < 0 { coeff.neg() } else { coeff.clone() };
        self.entries[i][j] = self.entries[i][j].add(&vij);
        self.entries[j][i] = self.entries[j][i].sub(&coeff);
    }

    pub fn family(self, constraints: Vec<Poly>) -> FormFamily {
        FormFamily {
            parities: self.parities.to_vec(),
            field: self.field,
            params: self.params.to_vec(),
            entries: self.entries,
            constraints,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::form::FormParity;
    use crate::matrix::Subspace;
    use crate::scalar::Field;

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn l20_is_abelian() {
        let g = make_filiform(2, 0, q());
        assert!(g.is_valid());
        assert_eq!(g.derived_subalgebra().dim(), 0);
    }

    #[test]
    fn l44_derived_subalgebra() {
        let g = make_filiform(4, 4, q());
        assert!(g.is_valid());
        let d = g.derived_subalgebra();
        // span{X3, X4, Y2, Y3, Y4}
        assert_eq!(d.dim(), 5);
        let unit = |k: usize| {
            let mut v = vec![q().zero(); 8];
            v[k] = q().one();
            v
        };
        let expect = Subspace::span(&[unit(2), unit(3), unit(5), unit(6), unit(7)], 8, q());
        assert_eq!(d, expect);
        assert!(g.is_solvable());
    }

    #[test]
    fn filiform_solvable_range() {
        for n in 2..=6 {
            for m in 0..=4 {
                let g = make_filiform(n, m, q());
                assert!(g.is_valid(), "L^{{{n},{m}}} invalid");
                assert!(g.is_solvable());
            }
        }
    }

    #[test]
    fn periplectic_family_small() {
        // n = m = 2: ω = λ X1*∧Y2* + μ X2*∧Y1*
        let fam = filiform_form(2, 2, FiliformFormVariant::PeriplecticNN, q()).unwrap();
        let g = make_filiform(2, 2, q());
        assert_eq!(fam.parity(), FormParity::Odd);
        for dir in fam.direction_forms() {
            assert!(dir.is_antisymmetric());
            assert!(dir.is_closed(&g));
        }
        let f = fam.instantiate(&[q().one(), q().one()]);
        assert!(f.is_nondegenerate());
    }

    #[test]
    fn ortho_family_small() {
        let fam = filiform_form(4, 3, FiliformFormVariant::OrthoEvenOdd, q()).unwrap();
        let g = make_filiform(4, 3, q());
        assert_eq!(fam.parity(), FormParity::Even);
        for dir in fam.direction_forms() {
            assert!(dir.is_antisymmetric());
            assert!(dir.is_closed(&g));
        }
        let f = fam.instantiate(&[q().one(), q().one(), q().one()]);
        assert!(f.is_nondegenerate());
    }

    #[test]
    fn nh_family_small() {
        let fam = filiform_form(4, 2, FiliformFormVariant::NhNMinus2, q()).unwrap();
        let g = make_filiform(4, 2, q());
        assert_eq!(fam.parity(), FormParity::NonHomogeneous);
        for dir in fam.direction_forms() {
            assert!(dir.is_antisymmetric());
            assert!(dir.is_closed(&g));
        }
        let f = fam.instantiate(&[q().one(), q().one()]);
        assert!(f.is_nondegenerate());
    }

    #[test]
    fn variant_shape_constraints() {
        assert!(filiform_form(3, 2, FiliformFormVariant::PeriplecticNN, q()).is_err());
        assert!(filiform_form(3, 3, FiliformFormVariant::OrthoEvenOdd, q()).is_err());
        assert!(filiform_form(4, 3, FiliformFormVariant::NhNMinus2, q()).is_err());
    }
}
