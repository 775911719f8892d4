use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::QuarticError;

/// Exponent triple `(i, j, k)` of `x^i y^j z^k`.
pub type Monomial = [u32; 3];

pub(crate) type Terms = BTreeMap<Monomial, BigRational>;

/// A nonzero homogeneous polynomial in `x, y, z` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TernaryForm {
    degree: u32,
    terms: Terms,
}

impl TernaryForm {
    /// Checks that the form is nonzero and every monomial has the same
    /// total degree. Zero coefficients are dropped.
    pub fn new(terms: impl IntoIterator<Item = (Monomial, BigRational)>) -> Result<Self, QuarticError> {
        let terms = collect(terms);
        let mut degrees = terms.keys().map(|m| m.iter().sum::<u32>());
        let Some(degree) = degrees.next() else {
            return Err(QuarticError::ZeroForm);
        };
        if degrees.any(|d| d != degree) {
            return Err(QuarticError::NotHomogeneous);
        }
        Ok(Self { degree, terms })
    }

    pub fn from_i64(terms: &[(Monomial, i64)]) -> Result<Self, QuarticError> {
        Self::new(terms.iter().map(|&(m, c)| (m, BigRational::from_integer(BigInt::from(c)))))
    }

    /// `x⁴ + y⁴ + z⁴`.
    pub fn fermat_quartic() -> Self {
        Self::from_i64(&[([4, 0, 0], 1), ([0, 4, 0], 1), ([0, 0, 4], 1)]).expect("valid form")
    }

    /// `x³y + y³z + z³x`.
    pub fn klein_quartic() -> Self {
        Self::from_i64(&[([3, 1, 0], 1), ([0, 3, 1], 1), ([1, 0, 3], 1)]).expect("valid form")
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, BigRational> {
        &self.terms
    }

    pub fn coefficient(&self, m: Monomial) -> BigRational {
        self.terms.get(&m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, point: &[BigRational; 3]) -> BigRational {
        eval_terms(&self.terms, point)
    }

    /// `F(M · (x, y, z)ᵀ)`: each variable is replaced by the matching row of
    /// `M` read as a linear form.
    pub fn substitute(&self, m: &[[i64; 3]; 3]) -> TernaryForm {
        let linear: Vec<Terms> = m
            .iter()
            .map(|row| {
                collect((0..3).map(|v| {
                    let mut e = [0; 3];
                    e[v] = 1;
                    (e, BigRational::from_integer(BigInt::from(row[v])))
                }))
            })
            .collect();
        let mut out = Terms::new();
        for (mono, c) in &self.terms {
            let mut prod = constant(c.clone());
            for v in 0..3 {
                for _ in 0..mono[v] {
                    prod = mul(&prod, &linear[v]);
                }
            }
            add_into(&mut out, &prod);
        }
        // An invertible substitution never kills a nonzero form.
        TernaryForm { degree: self.degree, terms: out }
    }

    /// Raw partial derivative `∂F/∂v` (may be zero).
    pub(crate) fn partial(&self, v: usize) -> Terms {
        partial(&self.terms, v)
    }

    pub(crate) fn from_terms_unchecked(degree: u32, terms: Terms) -> Self {
        Self { degree, terms }
    }

    pub fn scale(&self, k: &BigRational) -> Result<TernaryForm, QuarticError> {
        TernaryForm::new(self.terms.iter().map(|(m, c)| (*m, c * k)))
    }
}

impl fmt::Display for TernaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, (mono, c)) in self.terms.iter().rev().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if n == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let abs = c.abs();
            let mut factors = Vec::new();
            if !abs.is_one() || mono.iter().all(|&e| e == 0) {
                factors.push(crate::render_rational(&abs));
            }
            for (v, &e) in ["x", "y", "z"].iter().zip(mono) {
                match e {
                    0 => {}
                    1 => factors.push(v.to_string()),
                    _ => factors.push(format!("{v}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

pub(crate) fn collect(terms: impl IntoIterator<Item = (Monomial, BigRational)>) -> Terms {
    let mut out = Terms::new();
    for (m, c) in terms {
        *out.entry(m).or_insert_with(BigRational::zero) += c;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

pub(crate) fn constant(c: BigRational) -> Terms {
    collect([([0, 0, 0], c)])
}

pub(crate) fn add_into(acc: &mut Terms, other: &Terms) {
    for (m, c) in other {
        *acc.entry(*m).or_insert_with(BigRational::zero) += c;
    }
    acc.retain(|_, c| !c.is_zero());
}

pub(crate) fn sub(a: &Terms, b: &Terms) -> Terms {
    let mut out = a.clone();
    let neg: Terms = b.iter().map(|(m, c)| (*m, -c)).collect();
    add_into(&mut out, &neg);
    out
}

pub(crate) fn mul(a: &Terms, b: &Terms) -> Terms {
    let mut out = Terms::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let m = [ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]];
            *out.entry(m).or_insert_with(BigRational::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

pub(crate) fn partial(terms: &Terms, v: usize) -> Terms {
    collect(terms.iter().filter(|(m, _)| m[v] > 0).map(|(m, c)| {
        let mut e = *m;
        e[v] -= 1;
        (e, c * BigRational::from_integer(BigInt::from(m[v])))
    }))
}

pub(crate) fn eval_terms(terms: &Terms, point: &[BigRational; 3]) -> BigRational {
    terms
        .iter()
        .map(|(m, c)| {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(m) {
                for _ in 0..e {
                    v *= x;
                }
            }
            v
        })
        .sum()
}

/// Coefficients of `F(x₀, 1, z)` as a polynomial in `z`, constant term
/// first, padded to the formal degree.
pub(crate) fn z_coefficients(terms: &Terms, degree: u32, x0: &BigRational) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); degree as usize + 1];
    for (m, c) in terms {
        let mut v = c.clone();
        for _ in 0..m[0] {
            v *= x0;
        }
        out[m[2] as usize] += v;
    }
    out
}

/// `det` of a 3×3 matrix of polynomials, expanded along the first row.
pub(crate) fn det3(m: &[[Terms; 3]; 3]) -> Terms {
    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| {
        sub(&mul(&m[r1][c1], &m[r2][c2]), &mul(&m[r1][c2], &m[r2][c1]))
    };
    let mut out = mul(&m[0][0], &minor(1, 2, 1, 2));
    out = sub(&out, &mul(&m[0][1], &minor(1, 2, 0, 2)));
    add_into(&mut out, &mul(&m[0][2], &minor(1, 2, 0, 1)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    #[test]
    fn validation() {
        assert_eq!(TernaryForm::from_i64(&[]), Err(QuarticError::ZeroForm));
        assert_eq!(TernaryForm::from_i64(&[([1, 0, 0], 1), ([2, 0, 0], 1)]), Err(QuarticError::NotHomogeneous));
        assert_eq!(TernaryForm::from_i64(&[([1, 0, 0], 1), ([1, 0, 0], -1)]), Err(QuarticError::ZeroForm));
    }

    #[test]
    fn substitution_matches_evaluation() {
        let f = TernaryForm::klein_quartic();
        let m = [[1, 2, 0], [0, 1, -1], [3, 0, 1]];
        let g = f.substitute(&m);
        let pt = [q(2), q(-1), q(5)];
        let image = [
            q(m[0][0] * 2 + m[0][1] * -1 + m[0][2] * 5),
            q(m[1][0] * 2 + m[1][1] * -1 + m[1][2] * 5),
            q(m[2][0] * 2 + m[2][1] * -1 + m[2][2] * 5),
        ];
        assert_eq!(g.eval(&pt), f.eval(&image));
    }

    #[test]
    fn display_format() {
        assert_eq!(TernaryForm::klein_quartic().to_string(), "x^3*y + x*z^3 + y^3*z");
        let f = TernaryForm::new([([2, 2, 0], BigRational::new(BigInt::from(-3), BigInt::from(4)))]).unwrap();
        assert_eq!(f.to_string(), "-3/4*x^2*y^2");
    }
}
