use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::linalg;

/// Dense polynomial in one variable over ℚ, coefficients from the constant
/// term upward. Always normalised: the last stored coefficient is nonzero,
/// and the zero polynomial stores nothing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnivariatePoly {
    coeffs: Vec<BigRational>,
}

impl UnivariatePoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| linalg::q(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// `Π (x − rᵢ)`.
    pub fn from_roots(roots: &[BigRational]) -> Self {
        roots.iter().fold(Self::constant(BigRational::one()), |acc, r| {
            acc.mul(&Self::new(vec![-r.clone(), BigRational::one()]))
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |v: &[BigRational], i: usize| v.get(i).cloned().unwrap_or_else(BigRational::zero);
        Self::new((0..n).map(|i| get(&self.coeffs, i) + get(&other.coeffs, i)).collect())
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => self.scale(&lc.recip()),
            None => Self::zero(),
        }
    }

    /// Monic gcd, computed by a primitive polynomial remainder sequence
    /// over ℤ so that intermediate coefficients stay content-free.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let g = primitive_prs_gcd(primitive_part(self), primitive_part(other));
        Self::new(g.into_iter().map(BigRational::from_integer).collect()).monic()
    }

    /// No repeated factor over ℚ̄: `gcd(f, f')` is constant.
    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Number of distinct complex roots, `deg f − deg gcd(f, f')`.
    pub fn distinct_root_count(&self) -> usize {
        match self.degree() {
            None | Some(0) => 0,
            Some(d) => d - self.gcd(&self.derivative()).degree().unwrap_or(0),
        }
    }

    /// Newton interpolation through `(xᵢ, yᵢ)` with distinct `xᵢ`.
    pub fn interpolate(points: &[(BigRational, BigRational)]) -> Self {
        let n = points.len();
        let xs: Vec<&BigRational> = points.iter().map(|(x, _)| x).collect();
        let mut dd: Vec<BigRational> = points.iter().map(|(_, y)| y.clone()).collect();
        for level in 1..n {
            for i in (level..n).rev() {
                let num = &dd[i] - &dd[i - 1];
                dd[i] = num / (xs[i] - xs[i - level]);
            }
        }
        // Horner on the Newton form.
        let mut acc = Self::zero();
        for i in (0..n).rev() {
            let shift = Self::new(vec![-xs[i].clone(), BigRational::one()]);
            acc = acc.mul(&shift).add(&Self::constant(dd[i].clone()));
        }
        acc
    }
}

impl fmt::Display for UnivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let c = crate::render_rational(c);
                match i {
                    0 => c,
                    1 => format!("{c}*x"),
                    _ => format!("{c}*x^{i}"),
                }
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Integer coefficient vector with unit content and positive leading term.
fn primitive_part(p: &UnivariatePoly) -> Vec<BigInt> {
    let lcm = p.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.coeffs.iter().map(|c| (c * &lcm).to_integer()).collect();
    normalize_int(ints)
}

fn normalize_int(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    let content = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() {
        return v;
    }
    let sign = if v.last().is_some_and(Signed::is_negative) { -BigInt::one() } else { BigInt::one() };
    let unit = content * sign;
    v.into_iter().map(|c| c / &unit).collect()
}

/// Pseudo-remainder of `a` by `b` (`b` nonzero), made primitive.
fn primitive_prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db && !r.is_empty() {
        let shift = r.len() - 1 - db;
        let lr = r.last().cloned().expect("nonempty");
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &lr * bc;
        }
        r.pop();
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    normalize_int(r)
}

fn primitive_prs_gcd(mut a: Vec<BigInt>, mut b: Vec<BigInt>) -> Vec<BigInt> {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        let r = primitive_prem(&a, &b);
        if r.is_empty() {
            return b;
        }
        a = b;
        b = r;
    }
}

/// Sylvester resultant with the `f` rows first, using the actual degrees.
pub fn resultant(f: &UnivariatePoly, g: &UnivariatePoly) -> BigRational {
    let m = f.degree().expect("nonzero f");
    let n = g.degree().expect("nonzero g");
    sylvester_determinant(f.coeffs(), m, g.coeffs(), n)
}

/// Determinant of the `(m + n)`-square Sylvester matrix of coefficient
/// lists read with formal degrees `m` and `n`; leading entries may vanish.
/// Coefficients run from the constant term upward.
pub fn sylvester_determinant(f: &[BigRational], m: usize, g: &[BigRational], n: usize) -> BigRational {
    let size = m + n;
    if size == 0 {
        return BigRational::one();
    }
    let coeff = |v: &[BigRational], i: usize| v.get(i).cloned().unwrap_or_else(BigRational::zero);
    let mut rows = Vec::with_capacity(size);
    for shift in 0..n {
        let mut row = vec![BigRational::zero(); size];
        for k in 0..=m {
            row[shift + k] = coeff(f, m - k);
        }
        rows.push(row);
    }
    for shift in 0..m {
        let mut row = vec![BigRational::zero(); size];
        for k in 0..=n {
            row[shift + k] = coeff(g, n - k);
        }
        rows.push(row);
    }
    linalg::determinant(&rows)
}
