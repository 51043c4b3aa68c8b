//! Integer partitions, the power-sum basis of symmetric functions over the
//! integers, univariate integer polynomials, and a truncated
//! monomial-expansion oracle.
//!
//! Coefficients are arbitrary-precision ([`BigInt`]) throughout, so every
//! identity in this crate is checked bit-exactly.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Upper bound on the number of variables in a truncated expansion.
pub const EXPAND_MAX_VARS: usize = 6;
/// Upper bound on the partition lengths fed to a truncated expansion.
pub const EXPAND_MAX_PARTS: usize = 8;

/// An integer partition: a weakly decreasing list of positive integers.
/// The empty partition is allowed (and denotes the constant `p = 1`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Canonicalizes: sorts weakly decreasing and strips zero parts.
    pub fn new(mut parts: Vec<usize>) -> Partition {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of (positive) parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}]",
            self.0
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// A finitely supported integer combination of power-sum basis elements
/// `p_lambda`, stored as a partition-to-coefficient map with no zero
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PowerSumVector {
    terms: BTreeMap<Partition, BigInt>,
}

impl PowerSumVector {
    pub fn zero() -> PowerSumVector {
        PowerSumVector::default()
    }

    /// The single basis element `p_lambda` with coefficient 1.
    pub fn from_partition(lambda: Partition) -> PowerSumVector {
        let mut v = PowerSumVector::zero();
        v.add_term(lambda, BigInt::one());
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> PowerSumVector {
        if c.is_zero() {
            return PowerSumVector::zero();
        }
        PowerSumVector {
            terms: self.terms.iter().map(|(l, v)| (l.clone(), v * c)).collect(),
        }
    }

    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in ascending lexicographic partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Sets `x_1 = ... = x_q = 1` and all later variables to 0, under which
    /// `p_n` becomes `q` and hence `p_lambda` becomes `q^(len lambda)`.
    /// The empty partition always contributes its plain coefficient.
    pub fn specialize(&self, q: u64) -> BigInt {
        let q = BigInt::from(q);
        let mut total = BigInt::zero();
        for (lambda, c) in &self.terms {
            total += c * q.pow(lambda.len() as u32);
        }
        total
    }

    /// Expands every `p_lambda` as a polynomial in `x_1..x_n` and sums with
    /// coefficients. Guarded because the intermediate size is `n^(len lambda)`.
    pub fn expand_truncated(&self, num_vars: usize) -> Result<TruncatedPoly> {
        if num_vars == 0 || num_vars > EXPAND_MAX_VARS {
            return Err(Error::Capacity(format!(
                "truncated expansion supports 1..={EXPAND_MAX_VARS} variables, got {num_vars}"
            )));
        }
        for lambda in self.terms.keys() {
            if lambda.len() > EXPAND_MAX_PARTS {
                return Err(Error::Capacity(format!(
                    "partition {lambda} has more than {EXPAND_MAX_PARTS} parts"
                )));
            }
        }
        let mut acc = TruncatedPoly::zero(num_vars);
        for (lambda, c) in &self.terms {
            let mut prod = TruncatedPoly::one(num_vars);
            for &part in lambda.parts() {
                prod = prod.mul(&TruncatedPoly::power_sum(num_vars, part));
            }
            acc.add_scaled(&prod, c);
        }
        Ok(acc)
    }
}

impl AddAssign<&PowerSumVector> for PowerSumVector {
    fn add_assign(&mut self, rhs: &PowerSumVector) {
        for (l, c) in &rhs.terms {
            self.add_term(l.clone(), c.clone());
        }
    }
}

impl Add for PowerSumVector {
    type Output = PowerSumVector;
    fn add(mut self, rhs: PowerSumVector) -> PowerSumVector {
        self += &rhs;
        self
    }
}

impl fmt::Display for PowerSumVector {
    /// One line per term, `[l1,l2,...]: c`, partitions in ascending
    /// lexicographic order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let lines: Vec<String> = self
            .terms
            .iter()
            .map(|(l, c)| format!("{l}: {c}"))
            .collect();
        write!(f, "{}", lines.join("\n"))
    }
}

/// A dense univariate integer polynomial; index `i` holds the coefficient
/// of `x^i`, and the leading coefficient is nonzero unless the polynomial
/// is zero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> IntPolynomial {
        IntPolynomial::default()
    }

    pub fn monomial(exp: usize, coeff: BigInt) -> IntPolynomial {
        let mut p = IntPolynomial::zero();
        p.add_term(exp, coeff);
        p
    }

    pub fn from_coeffs(coeffs: Vec<i64>) -> IntPolynomial {
        let mut p = IntPolynomial {
            coeffs: coeffs.into_iter().map(BigInt::from).collect(),
        };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn add_term(&mut self, exp: usize, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        if self.coeffs.len() <= exp {
            self.coeffs.resize_with(exp + 1, BigInt::zero);
        }
        self.coeffs[exp] += coeff;
        self.trim();
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: usize) -> BigInt {
        self.coeffs.get(exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Evaluation by Horner's rule.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_u64(&self, x: u64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    pub fn scale(&self, c: &BigInt) -> IntPolynomial {
        if c.is_zero() {
            return IntPolynomial::zero();
        }
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|v| v * c).collect(),
        }
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> IntPolynomial {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    /// Ascending coefficient list `c0 c1 c2 ...`; the zero polynomial
    /// prints as `0`.
    pub fn coeff_line(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl AddAssign<&IntPolynomial> for IntPolynomial {
    fn add_assign(&mut self, rhs: &IntPolynomial) {
        for (i, c) in rhs.coeffs.iter().enumerate() {
            if self.coeffs.len() <= i {
                self.coeffs.resize_with(i + 1, BigInt::zero);
            }
            self.coeffs[i] += c;
        }
        self.trim();
    }
}

impl fmt::Display for IntPolynomial {
    /// Human form in ascending powers, e.g. `2*x - 3*x^2 + x^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (exp, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let var = match exp {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{exp}"),
            };
            let body = if exp == 0 {
                mag.to_string()
            } else if mag.is_one() {
                var
            } else {
                format!("{mag}*{var}")
            };
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
                out.push_str(&body);
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
                out.push_str(&body);
            }
        }
        write!(f, "{out}")
    }
}

/// A polynomial in finitely many variables `x_1..x_n`, stored as a map from
/// exponent vectors (length exactly `n`) to nonzero integer coefficients.
/// Serves as the definitional oracle for symmetric-function identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedPoly {
    num_vars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl TruncatedPoly {
    pub fn zero(num_vars: usize) -> TruncatedPoly {
        TruncatedPoly {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(num_vars: usize) -> TruncatedPoly {
        let mut p = TruncatedPoly::zero(num_vars);
        p.add_term(vec![0; num_vars], BigInt::one());
        p
    }

    /// `x_1^k + ... + x_n^k`.
    pub fn power_sum(num_vars: usize, k: usize) -> TruncatedPoly {
        let mut p = TruncatedPoly::zero(num_vars);
        for j in 0..num_vars {
            let mut exps = vec![0u32; num_vars];
            exps[j] = k as u32;
            p.add_term(exps, BigInt::one());
        }
        p
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, coeff: BigInt) {
        assert_eq!(exps.len(), self.num_vars);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &TruncatedPoly, c: &BigInt) {
        assert_eq!(self.num_vars, other.num_vars);
        for (e, v) in &other.terms {
            self.add_term(e.clone(), v * c);
        }
    }

    pub fn mul(&self, other: &TruncatedPoly) -> TruncatedPoly {
        assert_eq!(self.num_vars, other.num_vars);
        let mut out = TruncatedPoly::zero(self.num_vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exps, ca * cb);
            }
        }
        out
    }

    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    /// Evaluates at `x_1 = ... = x_q = 1`, `x_{q+1} = ... = 0`.
    pub fn eval_first_ones(&self, q: usize) -> BigInt {
        let mut total = BigInt::zero();
        for (exps, c) in &self.terms {
            if exps.iter().skip(q).all(|&e| e == 0) {
                total += c;
            }
        }
        total
    }
}
