//! The wedge-expression mini-language for bilinear forms.
//!
//! Grammar (see README for the full description):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := INT | IDENT | wedge | '(' expr ')' | '-' factor
//! wedge  := IDENT '^' '*'? '∧' IDENT '^' '*'?
//! ```
//!
//! `IDENT '^'` refers to the dual of a declared basis vector (a trailing
//! `*` after `^` is accepted and ignored, so both `e1^∧e2^` and
//! `e1^*∧e2^*` parse). A bare `IDENT` must be a declared parameter.
//! Division is only by scalar constants.
//!
//! A wedge atom `ei^∧ej^` denotes the super anti-symmetric pairing
//! ξ∧η := ξ⊗η − (−1)^{p(ξ)p(η)} η⊗ξ evaluated with the Koszul sign rule
//! (ξ⊗η)(x,y) = (−1)^{p(η)p(x)} ξ(x)η(y). On raw values this gives
//! ω(e_i,e_j) = (−1)^{p(i)p(j)}, ω(e_j,e_i) = −1 for i ≠ j, and
//! ω(e_i,e_i) = −2 for the odd diagonal.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::Parity;
use crate::form::FormFamily;
use crate::poly::Poly;
use crate::scalar::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedgeError(pub String);

impl fmt::Display for WedgeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "wedge expression error: {}", self.0)
    }
}

#[cfg(feature = "std")]
impl std::error::Error for WedgeError {}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    LParen,
    RParen,
    Caret,
    Wedge,
}

fn tokenize(s: &str) -> Result<Vec<Tok>, WedgeError> {
    let mut toks = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                toks.push(Tok::Plus);
                i += 1;
            }
            '-' | '−' => {
                toks.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                // a '*' directly after '^' is the dual-star, swallowed there
                toks.push(Tok::Star);
                i += 1;
            }
            '/' => {
                toks.push(Tok::Slash);
                i += 1;
            }
            '(' => {
                toks.push(Tok::LParen);
                i += 1;
            }
            ')' => {
                toks.push(Tok::RParen);
                i += 1;
            }
            '^' => {
                toks.push(Tok::Caret);
                i += 1;
                // swallow an optional dual star
                if i < chars.len() && chars[i] == '*' {
                    i += 1;
                }
            }
            '∧' => {
                toks.push(Tok::Wedge);
                i += 1;
            }
            '0'..='9' => {
                let mut n: i64 = 0;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    n = n
                        .checked_mul(10)
                        .and_then(|m| m.checked_add((chars[i] as u8 - b'0') as i64))
                        .ok_or_else(|| WedgeError("integer literal overflow".into()))?;
                    i += 1;
                }
                toks.push(Tok::Int(n));
            }
            c if c.is_alphabetic() || c == '_' => {
                let mut name = String::new();
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    name.push(chars[i]);
                    i += 1;
                }
                toks.push(Tok::Ident(name));
            }
            other => return Err(WedgeError(format!("unexpected character `{other}`"))),
        }
    }
    Ok(toks)
}

/// Either a scalar polynomial or a form (matrix of polynomials).
#[derive(Clone, Debug)]
enum Value {
    Scalar(Poly),
    Form(Vec<Vec<Poly>>),
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    basis: &'a [String],
    parities: &'a [Parity],
    params: &'a [String],
    field: Field,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: Tok) -> Result<(), WedgeError> {
        match self.next() {
            Some(x) if x == t => Ok(()),
            other => Err(WedgeError(format!("expected {t:?}, found {other:?}"))),
        }
    }

    fn nvars(&self) -> usize {
        self.params.len()
    }

    fn expr(&mut self) -> Result<Value, WedgeError> {
        let mut acc = self.term()?;
        while let Some(t) = self.peek() {
            match t {
                Tok::Plus => {
                    self.next();
                    let rhs = self.term()?;
                    acc = self.combine(acc, rhs, false)?;
                }
                Tok::Minus => {
                    self.next();
                    let rhs = self.term()?;
                    acc = self.combine(acc, rhs, true)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn combine(&self, a: Value, b: Value, subtract: bool) -> Result<Value, WedgeError> {
        let b = if subtract { self.negate(b) } else { b };
        match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(x.add(&y))),
            (Value::Form(x), Value::Form(y)) => {
                let n = x.len();
                let mut out = x;
                for i in 0..n {
                    for j in 0..n {
                        out[i][j] = out[i][j].add(&y[i][j]);
                    }
                }
                Ok(Value::Form(out))
            }
            _ => Err(WedgeError("cannot add a scalar and a form".into())),
        }
    }

    fn negate(&self, v: Value) -> Value {
        match v {
            Value::Scalar(p) => Value::Scalar(p.neg()),
            Value::Form(m) => {
                Value::Form(m.into_iter().map(|r| r.into_iter().map(|p| p.neg()).collect()).collect())
            }
        }
    }

    fn term(&mut self) -> Result<Value, WedgeError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.next();
                    let rhs = self.factor()?;
                    acc = self.multiply(acc, rhs)?;
                }
                Some(Tok::Slash) => {
                    self.next();
                    let rhs = self.factor()?;
                    let divisor = match rhs {
                        Value::Scalar(p) if p.is_constant() && !p.is_zero() => p.constant_term(),
                        Value::Scalar(_) => {
                            return Err(WedgeError(
                                "division is only by nonzero constants".into(),
                            ))
                        }
                        Value::Form(_) => return Err(WedgeError("cannot divide by a form".into())),
                    };
                    let inv = divisor.inv();
                    acc = self.multiply(acc, Value::Scalar(Poly::constant(self.nvars(), inv)))?;
                }
                // juxtaposition of a coefficient and a wedge (e.g. `2 e1^∧e2^`)
                Some(Tok::Ident(_)) | Some(Tok::Int(_)) | Some(Tok::LParen) => {
                    let rhs = self.factor()?;
                    acc = self.multiply(acc, rhs)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn multiply(&self, a: Value, b: Value) -> Result<Value, WedgeError> {
        match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(x.mul(&y))),
            (Value::Scalar(x), Value::Form(m)) | (Value::Form(m), Value::Scalar(x)) => Ok(
                Value::Form(
                    m.into_iter()
                        .map(|r| r.into_iter().map(|p| p.mul(&x)).collect())
                        .collect(),
                ),
            ),
            (Value::Form(_), Value::Form(_)) => {
                Err(WedgeError("cannot multiply two forms".into()))
            }
        }
    }

    fn factor(&mut self) -> Result<Value, WedgeError> {
        match self.next() {
            Some(Tok::Int(n)) => Ok(Value::Scalar(Poly::constant(
                self.nvars(),
                self.field.from_i64(n),
            ))),
            Some(Tok::Minus) => {
                let v = self.factor()?;
                Ok(self.negate(v))
            }
            Some(Tok::LParen) => {
                let v = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(v)
            }
            Some(Tok::Ident(name)) => {
                if matches!(self.peek(), Some(Tok::Caret)) {
                    self.next(); // caret (dual star swallowed by the lexer)
                    self.expect(Tok::Wedge)?;
                    let second = match self.next() {
                        Some(Tok::Ident(n2)) => n2,
                        other => {
                            return Err(WedgeError(format!(
                                "expected basis name after ∧, found {other:?}"
                            )))
                        }
                    };
                    self.expect(Tok::Caret)?;
                    self.wedge_atom(&name, &second)
                } else if let Some(idx) = self.params.iter().position(|p| p == &name) {
                    Ok(Value::Scalar(Poly::var(self.nvars(), idx, self.field)))
                } else if self.basis.contains(&name) {
                    Err(WedgeError(format!(
                        "basis vector `{name}` used without dual marker ^"
                    )))
                } else {
                    Err(WedgeError(format!("unknown parameter `{name}`")))
                }
            }
            other => Err(WedgeError(format!("unexpected token {other:?}"))),
        }
    }

    fn wedge_atom(&self, a: &str, b: &str) -> Result<Value, WedgeError> {
        let i = self
            .basis
            .iter()
            .position(|n| n == a)
            .ok_or_else(|| WedgeError(format!("unknown basis vector `{a}`")))?;
        let j = self
            .basis
            .iter()
            .position(|n| n == b)
            .ok_or_else(|| WedgeError(format!("unknown basis vector `{b}`")))?;
        let n = self.basis.len();
        let mut m = vec![vec![Poly::zero(self.nvars(), self.field); n]; n];
        let one = Poly::constant(self.nvars(), self.field.one());
        let pi = self.parities[i];
        let pj = self.parities[j];
        if i == j {
            if pi == Parity::Even {
                // identically zero by anti-symmetry
                return Ok(Value::Form(m));
            }
            // odd diagonal: ξ∧ξ(e_i,e_i) = −2
            m[i][i] = Poly::constant(self.nvars(), self.field.from_i64(-2));
            return Ok(Value::Form(m));
        }
        // (ξ∧η)(e_i,e_j) = (−1)^{p_i p_j}, (ξ∧η)(e_j,e_i) = −1
        let sij = crate::algebra::koszul_sign(pi, pj);
        m[i][j] = if sij < 0 { one.neg() } else { one.clone() };
        m[j][i] = one.neg();
        Ok(Value::Form(m))
    }
}

/// Parses a wedge expression into a [`FormFamily`] over the given basis,
/// parity pattern, and parameter names. `constraints` are attached by the
/// caller afterwards (see [`parse_scalar_poly`]).
pub fn parse_form(
    text: &str,
    basis: &[String],
    parities: Vec<Parity>,
    params: &[String],
    field: Field,
) -> Result<FormFamily, WedgeError> {
    assert_eq!(basis.len(), parities.len());
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        basis,
        parities: &parities,
        params,
        field,
    };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(WedgeError(format!(
            "trailing tokens starting at {:?}",
            p.toks[p.pos]
        )));
    }
    match v {
        Value::Form(entries) => Ok(FormFamily {
            parities,
            field,
            params: params.to_vec(),
            entries,
            constraints: Vec::new(),
        }),
        Value::Scalar(s) if s.is_zero() => {
            let n = basis.len();
            Ok(FormFamily {
                parities,
                field,
                params: params.to_vec(),
                entries: vec![vec![Poly::zero(params.len(), field); n]; n],
                constraints: Vec::new(),
            })
        }
        Value::Scalar(_) => Err(WedgeError("expression is a scalar, not a form".into())),
    }
}

/// Parses a scalar polynomial expression in the given parameters (used for
/// bracket coefficients and constraint polynomials).
pub fn parse_scalar_poly(
    text: &str,
    params: &[String],
    field: Field,
) -> Result<Poly, WedgeError> {
    let toks = tokenize(text)?;
    let basis: [String; 0] = [];
    let parities: [Parity; 0] = [];
    let mut p = Parser {
        toks,
        pos: 0,
        basis: &basis,
        parities: &parities,
        params,
        field,
    };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(WedgeError(format!(
            "trailing tokens starting at {:?}",
            p.toks[p.pos]
        )));
    }
    match v {
        Value::Scalar(s) => Ok(s),
        Value::Form(_) => Err(WedgeError("expected a scalar, found a form".into())),
    }
}

/// Parses a plain scalar (no parameters allowed).
pub fn parse_scalar(text: &str, field: Field) -> Result<Scalar, WedgeError> {
    let p = parse_scalar_poly(text, &[], field)?;
    Ok(p.constant_term())
}

/// Renders a family back into wedge notation (inverse of [`parse_form`] up
/// to normalization). Returns `0` for the zero family.
pub fn format_form(family: &FormFamily, basis: &[String]) -> String {
    let n = basis.len();
    let mut terms: Vec<String> = Vec::new();
    for i in 0..n {
        for j in i..n {
            let entry = &family.entries[i][j];
            if entry.is_zero() {
                continue;
            }
            // invert the Koszul evaluation signs to recover the coefficient
            let coeff = if i == j {
                // diagonal: V[i][i] = −2c
                entry.scale(&family.field.fraction(-1, 2))
            } else if crate::algebra::koszul_sign(family.parities[i], family.parities[j]) < 0 {
                entry.neg()
            } else {
                entry.clone()
            };
            let coeff_str = coeff.display(&family.params);
            terms.push(format!("({coeff_str})*{}^∧{}^", basis[i], basis[j]));
        }
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::form::FormParity;

    fn q() -> Field {
        Field::Rationals
    }

    fn basis4() -> Vec<String> {
        (1..=4).map(|i| format!("e{i}")).collect()
    }

    fn parities22() -> Vec<Parity> {
        vec![Parity::Even, Parity::Even, Parity::Odd, Parity::Odd]
    }

    #[test]
    fn parse_simple_wedge() {
        let fam = parse_form("e1^∧e2^", &basis4(), parities22(), &[], q()).unwrap();
        let f = fam.instantiate(&[]);
        assert_eq!(f.value(0, 1), q().one());
        assert_eq!(f.value(1, 0), q().from_i64(-1));
        assert!(f.is_antisymmetric());
    }

    #[test]
    fn parse_with_parameters_and_groups() {
        let params = vec!["lambda".to_string(), "mu".to_string()];
        let fam = parse_form(
            "lambda*e1^∧e4^ + mu*(e1^∧e3^ + e2^∧e4^)",
            &basis4(),
            parities22(),
            &params,
            q(),
        )
        .unwrap();
        assert!(fam.is_affine_linear());
        let f = fam.instantiate(&[q().from_i64(2), q().from_i64(3)]);
        assert_eq!(f.value(0, 3), q().from_i64(2));
        assert_eq!(f.value(0, 2), q().from_i64(3));
        assert_eq!(f.value(1, 3), q().from_i64(3));
        assert_eq!(f.parity(), FormParity::Odd);
    }

    #[test]
    fn odd_diagonal_and_oddodd_signs() {
        // e3, e4 odd: diagonal gives −2, off-diagonal odd-odd gives ∓1
        let fam = parse_form("e3^∧e3^ + e3^∧e4^", &basis4(), parities22(), &[], q()).unwrap();
        let f = fam.instantiate(&[]);
        assert_eq!(f.value(2, 2), q().from_i64(-2));
        assert_eq!(f.value(2, 3), q().from_i64(-1));
        assert_eq!(f.value(3, 2), q().from_i64(-1));
        assert!(f.is_antisymmetric());
        // even diagonal is identically zero
        let z = parse_form("e1^∧e1^", &basis4(), parities22(), &[], q()).unwrap();
        assert!(z.instantiate(&[]).total_matrix().is_zero());
    }

    #[test]
    fn dual_star_accepted() {
        let a = parse_form("e1^*∧e2^*", &basis4(), parities22(), &[], q()).unwrap();
        let b = parse_form("e1^∧e2^", &basis4(), parities22(), &[], q()).unwrap();
        assert_eq!(a.instantiate(&[]).total_matrix(), b.instantiate(&[]).total_matrix());
    }

    #[test]
    fn fractions_and_products() {
        let params = vec!["q".to_string(), "lambda".to_string()];
        let fam = parse_form(
            "(1+q)*lambda*e1^∧e3^ - 1/2*e3^∧e4^",
            &basis4(),
            parities22(),
            &params,
            q(),
        )
        .unwrap();
        let f = fam.instantiate(&[q().from_i64(1), q().from_i64(3)]);
        assert_eq!(f.value(0, 2), q().from_i64(6));
        assert_eq!(f.value(2, 3), q().fraction(1, 2)); // odd-odd flips the sign
    }

    #[test]
    fn scalar_poly_parse() {
        let params = vec!["p".to_string(), "q".to_string()];
        let p = parse_scalar_poly("p*q - 1/2", &params, q()).unwrap();
        assert_eq!(
            p.eval(&[q().from_i64(3), q().from_i64(2)]),
            q().fraction(11, 2)
        );
        assert!(parse_scalar_poly("p*e1^", &params, q()).is_err());
        assert_eq!(parse_scalar("-5/4", q()).unwrap(), q().fraction(-5, 4));
    }

    #[test]
    fn errors_reported() {
        assert!(parse_form("e9^∧e2^", &basis4(), parities22(), &[], q()).is_err());
        assert!(parse_form("e1^∧e2^ * e3^∧e4^", &basis4(), parities22(), &[], q()).is_err());
        assert!(parse_form("zeta*e1^∧e2^", &basis4(), parities22(), &[], q()).is_err());
    }

    #[test]
    fn roundtrip_format_parse() {
        let params = vec!["lambda".to_string(), "mu".to_string()];
        let fam = parse_form(
            "lambda*e1^∧e4^ + mu*(e1^∧e3^ + e2^∧e4^) - 1/2*e3^∧e3^",
            &basis4(),
            parities22(),
            &params,
            q(),
        )
        .unwrap();
        let text = format_form(&fam, &basis4());
        let fam2 = parse_form(&text, &basis4(), parities22(), &params, q()).unwrap();
        assert_eq!(fam.entries, fam2.entries);
    }
}
