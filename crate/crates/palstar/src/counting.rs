//! Exact counting sequences for unbordered words and palstars, both at fixed
//! integer alphabet size and with the alphabet size as an indeterminate.
//!
//! - `u_sequence` / `p_sequence`: big-integer terms of U_k and P_k
//! - `u_poly` / `p_poly`: the same recurrences over polynomials in k
//! - `verify_gf_identity`: coefficient-wise check of U*P = 2P - 1
//!
//! Everything here is exact; no floating point.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Which counting sequence a [`CountSequence`] holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequenceKind {
    /// u_k(n): unbordered words of length n (constant term 1 by convention).
    Unbordered,
    /// p_k(n): palstars of length 2n.
    Palstar,
}

impl std::fmt::Display for SequenceKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SequenceKind::Unbordered => write!(f, "unbordered"),
            SequenceKind::Palstar => write!(f, "palstar"),
        }
    }
}

/// Terms 0..=N of one counting sequence at a fixed alphabet size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountSequence {
    k: u32,
    kind: SequenceKind,
    terms: Vec<BigInt>,
}

impl CountSequence {
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn kind(&self) -> SequenceKind {
        self.kind
    }

    pub fn terms(&self) -> &[BigInt] {
        &self.terms
    }

    pub fn term(&self, n: usize) -> &BigInt {
        &self.terms[n]
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn into_terms(self) -> Vec<BigInt> {
        self.terms
    }
}

fn require_k(k: u32) -> Result<()> {
    if k < 2 {
        return Err(Error::AlphabetTooSmall(k));
    }
    Ok(())
}

/// Unbordered-word counts u_k(0..=n_max).
///
/// Border recurrence: u(1) = k, u(2m) = k u(2m-1) - u(m), u(2m+1) = k u(2m);
/// the constant term is the generating-function convention u_k(0) = 1. The
/// recurrence is validated against exhaustive enumeration in the test suite
/// before anything downstream trusts it.
pub fn u_sequence(k: u32, n_max: usize) -> Result<CountSequence> {
    require_k(k)?;
    let kb = BigInt::from(k);
    let mut terms = Vec::with_capacity(n_max + 1);
    terms.push(BigInt::one());
    if n_max >= 1 {
        terms.push(kb.clone());
    }
    for i in 2..=n_max {
        let prev = &terms[i - 1] * &kb;
        let value = if i % 2 == 0 { prev - &terms[i / 2] } else { prev };
        terms.push(value);
    }
    Ok(CountSequence { k, kind: SequenceKind::Unbordered, terms })
}

/// Palstar counts p_k(0..=n_max) via the convolution recurrence
/// p(n) = sum_{1<=i<=n} u(i) p(n-i), p(0) = 1.
pub fn p_sequence(k: u32, n_max: usize) -> Result<CountSequence> {
    require_k(k)?;
    let u = u_sequence(k, n_max)?;
    let mut terms: Vec<BigInt> = Vec::with_capacity(n_max + 1);
    terms.push(BigInt::one());
    for n in 1..=n_max {
        let value = (1..=n).map(|i| u.term(i) * &terms[n - i]).sum();
        terms.push(value);
    }
    Ok(CountSequence { k, kind: SequenceKind::Palstar, terms })
}

/// Polynomial in the alphabet size k with exact integer coefficients;
/// `coefficients()[d]` is the coefficient of k^d. No trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KPolynomial {
    coefficients: Vec<BigInt>,
}

impl KPolynomial {
    pub fn zero() -> Self {
        KPolynomial { coefficients: Vec::new() }
    }

    pub fn one() -> Self {
        KPolynomial { coefficients: vec![BigInt::one()] }
    }

    pub fn from_coefficients(coefficients: Vec<BigInt>) -> Self {
        let mut p = KPolynomial { coefficients };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coefficients.last().is_some_and(Zero::is_zero) {
            self.coefficients.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    /// Coefficient of k^d (zero beyond the degree).
    pub fn coefficient(&self, d: usize) -> BigInt {
        self.coefficients.get(d).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.coefficients.last()
    }

    /// Multiplication by k: shift every power up by one.
    pub fn times_k(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coefficients = Vec::with_capacity(self.coefficients.len() + 1);
        coefficients.push(BigInt::zero());
        coefficients.extend(self.coefficients.iter().cloned());
        KPolynomial { coefficients }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coefficients.len().max(other.coefficients.len());
        let coefficients = (0..len)
            .map(|d| self.coefficient(d) - other.coefficient(d))
            .collect();
        Self::from_coefficients(coefficients)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coefficients.len().max(other.coefficients.len());
        let coefficients = (0..len)
            .map(|d| self.coefficient(d) + other.coefficient(d))
            .collect();
        Self::from_coefficients(coefficients)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coefficients =
            vec![BigInt::zero(); self.coefficients.len() + other.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in other.coefficients.iter().enumerate() {
                coefficients[i + j] += a * b;
            }
        }
        Self::from_coefficients(coefficients)
    }

    /// Exact evaluation at an integer alphabet size, by Horner's rule.
    pub fn eval(&self, k: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coefficients.iter().rev() {
            acc = acc * k + c;
        }
        acc
    }
}

impl std::fmt::Display for KPolynomial {
    /// Descending powers, e.g. `8k^4 - 8k^3 + k`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for d in (0..self.coefficients.len()).rev() {
            let c = &self.coefficients[d];
            if c.is_zero() {
                continue;
            }
            let magnitude = c.magnitude();
            let negative = c.sign() == num_bigint::Sign::Minus;
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = d == 0 || !magnitude.is_one();
            if show_coeff {
                write!(f, "{magnitude}")?;
            }
            match d {
                0 => {}
                1 => write!(f, "k")?,
                _ => write!(f, "k^{d}")?,
            }
        }
        Ok(())
    }
}

/// Unbordered counts with k as an indeterminate: the same border recurrence
/// over exact polynomial arithmetic.
pub fn u_poly(n_max: usize) -> Vec<KPolynomial> {
    let mut terms = Vec::with_capacity(n_max + 1);
    terms.push(KPolynomial::one());
    if n_max >= 1 {
        terms.push(KPolynomial::one().times_k());
    }
    for i in 2..=n_max {
        let prev = terms[i - 1].times_k();
        let value = if i % 2 == 0 { prev.sub(&terms[i / 2]) } else { prev };
        terms.push(value);
    }
    terms
}

/// Palstar counts with k as an indeterminate.
pub fn p_poly(n_max: usize) -> Vec<KPolynomial> {
    let u = u_poly(n_max);
    let mut terms: Vec<KPolynomial> = Vec::with_capacity(n_max + 1);
    terms.push(KPolynomial::one());
    for n in 1..=n_max {
        let mut value = KPolynomial::zero();
        for i in 1..=n {
            value = value.add(&u[i].mul(&terms[n - i]));
        }
        terms.push(value);
    }
    terms
}

/// Coefficient-wise check of the generating-function identity
/// U_k * P_k = 2 P_k - 1 through degree `n_max`, in exact arithmetic.
pub fn verify_gf_identity(k: u32, n_max: usize) -> Result<bool> {
    let u = u_sequence(k, n_max)?;
    let p = p_sequence(k, n_max)?;
    // degree 0: u(0) p(0) = 1 = 2 p(0) - 1
    for n in 0..=n_max {
        let convolution: BigInt = (0..=n).map(|i| u.term(i) * p.term(n - i)).sum();
        let rhs = if n == 0 {
            BigInt::one()
        } else {
            p.term(n) * 2
        };
        if convolution != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}
