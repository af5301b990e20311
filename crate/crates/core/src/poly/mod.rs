//! Dense univariate polynomials over GF(q).

mod factor;
mod order;
mod text;

pub use factor::{factorize, factorize_with_seed, Factorization};
pub use order::{
    cyclotomic_cosets, factor_xn_minus_1, factor_xn_minus_1_with_seed, is_primitive, mult_order,
    poly_order,
};

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};

/// A polynomial with coefficients in ascending power order.
///
/// The highest stored coefficient is never zero; the zero polynomial has no
/// coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: FieldSpec,
    coeffs: Vec<FieldElement>,
}

impl Poly {
    pub fn new(field: &FieldSpec, mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    /// Polynomial from prime-subfield integers (reduced mod p).
    pub fn from_ints(field: &FieldSpec, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.from_int(c)).collect())
    }

    pub fn zero(field: &FieldSpec) -> Self {
        Poly {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &FieldSpec) -> Self {
        Self::constant(field, FieldElement::ONE)
    }

    pub fn constant(field: &FieldSpec, c: FieldElement) -> Self {
        Self::new(field, vec![c])
    }

    pub fn x(field: &FieldSpec) -> Self {
        Self::monomial(field, FieldElement::ONE, 1)
    }

    /// `c * x^k`.
    pub fn monomial(field: &FieldSpec, c: FieldElement, k: usize) -> Self {
        let mut coeffs = vec![FieldElement::ZERO; k + 1];
        coeffs[k] = c;
        Self::new(field, coeffs)
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(field: &FieldSpec, n: usize) -> Self {
        let mut coeffs = vec![FieldElement::ZERO; n + 1];
        coeffs[0] = field.neg(FieldElement::ONE);
        coeffs[n] = field.add(coeffs[n], FieldElement::ONE);
        Self::new(field, coeffs)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> FieldElement {
        self.coeffs.get(k).copied().unwrap_or(FieldElement::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [FieldElement::ONE]
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> FieldElement {
        self.coeffs.last().copied().unwrap_or(FieldElement::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == FieldElement::ONE
    }

    /// Divides through by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Poly {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        let inv = self
            .field
            .inv(self.leading())
            .expect("leading coefficient is nonzero");
        self.scale(inv)
    }

    pub fn scale(&self, c: FieldElement) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn eval(&self, x: FieldElement) -> FieldElement {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(FieldElement::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn derivative(&self) -> Poly {
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| f.mul(c, f.from_int((k % f.characteristic() as usize) as i64)))
            .collect();
        Poly::new(f, coeffs)
    }

    fn check_field(&self, other: &Poly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch(
                self.field.to_string(),
                other.field.to_string(),
            ))
        }
    }

    fn assert_field(&self, other: &Poly) {
        if let Err(e) = self.check_field(other) {
            panic!("{e}");
        }
    }

    /// Euclidean division: `self = quotient * divisor + remainder`.
    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.check_field(divisor)?;
        let Some(dd) = divisor.degree() else {
            return Err(Error::DivisionByZero);
        };
        let f = &self.field;
        let Some(nd) = self.degree().filter(|&nd| nd >= dd) else {
            return Ok((Poly::zero(f), self.clone()));
        };
        let lead_inv = f.inv(divisor.leading())?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![FieldElement::ZERO; nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = f.mul(rem[k + dd], lead_inv);
            if c.is_zero() {
                continue;
            }
            quot[k] = c;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = f.sub(rem[k + j], f.mul(c, d));
            }
        }
        rem.truncate(dd);
        Ok((Poly::new(f, quot), Poly::new(f, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.divmod(divisor)?.1)
    }

    /// Exact quotient; fails when the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Poly) -> Result<Poly> {
        let (q, r) = self.divmod(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Degenerate(format!(
                "{divisor} does not divide {self}"
            )))
        }
    }

    pub fn divides(&self, other: &Poly) -> Result<bool> {
        Ok(other.rem(self)?.is_zero())
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.check_field(other)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// `self^exp mod modulus` by square-and-multiply.
    pub fn pow_mod(&self, mut exp: u128, modulus: &Poly) -> Result<Poly> {
        let mut base = self.rem(modulus)?;
        let mut acc = Poly::one(&self.field).rem(modulus)?;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = (&acc * &base).rem(modulus)?;
            }
            exp >>= 1;
            if exp > 0 {
                base = (&base * &base).rem(modulus)?;
            }
        }
        Ok(acc)
    }

    /// Canonical order: degree first, then ascending coefficient tuple.
    pub fn canonical_cmp(&self, other: &Poly) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.assert_field(rhs);
        let f = &self.field;
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(
            f,
            (0..len)
                .map(|k| f.add(self.coeff(k), rhs.coeff(k)))
                .collect(),
        )
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.assert_field(rhs);
        let f = &self.field;
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(
            f,
            (0..len)
                .map(|k| f.sub(self.coeff(k), rhs.coeff(k)))
                .collect(),
        )
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.assert_field(rhs);
        let f = &self.field;
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(f);
        }
        let mut out = vec![FieldElement::ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(f, out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::format_poly(self))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({} over {})", self, self.field)
    }
}

pub use text::{format_coeff_list, format_element, parse_element, parse_poly};
