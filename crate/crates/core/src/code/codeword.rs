use std::fmt;

use super::CodeSpec;
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::poly::Poly;

/// A length-`n` vector read as a polynomial modulo `x^n - 1`.
///
/// Ordering is lexicographic on the packed coefficient values, starting at
/// `c_0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Codeword(Vec<FieldElement>);

impl Codeword {
    pub fn new(coeffs: Vec<FieldElement>) -> Self {
        Codeword(coeffs)
    }

    /// Reduces `p` modulo `x^n - 1`.
    pub fn from_poly(p: &Poly, n: usize) -> Self {
        let f = p.field();
        let mut out = vec![FieldElement::ZERO; n];
        for (k, &c) in p.coeffs().iter().enumerate() {
            out[k % n] = f.add(out[k % n], c);
        }
        Codeword(out)
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn weight(&self) -> usize {
        self.0.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter_map(|(i, c)| (!c.is_zero()).then_some(i))
            .collect()
    }

    /// `x^k z mod x^n - 1`: coefficient `i` moves to `i + k mod n`.
    pub fn rotate(&self, k: usize) -> Codeword {
        let n = self.0.len();
        if n == 0 {
            return self.clone();
        }
        let mut v = self.0.clone();
        v.rotate_right(k % n);
        Codeword(v)
    }

    pub fn scale(&self, field: &FieldSpec, c: FieldElement) -> Codeword {
        Codeword(self.0.iter().map(|&a| field.mul(a, c)).collect())
    }

    /// Highest-index nonzero coefficient (zero for the zero word).
    pub fn leading(&self) -> FieldElement {
        self.0
            .iter()
            .rev()
            .copied()
            .find(|c| !c.is_zero())
            .unwrap_or(FieldElement::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == FieldElement::ONE
    }

    /// The unique member of `{a z : a != 0}` with leading coefficient 1.
    pub fn monic(&self, field: &FieldSpec) -> Codeword {
        match field.inv(self.leading()) {
            Ok(inv) => self.scale(field, inv),
            Err(_) => self.clone(),
        }
    }

    pub fn to_poly(&self, field: &FieldSpec) -> Poly {
        Poly::new(field, self.0.clone())
    }

    /// `Some(a)` when `other = a * self` with `a != 0`.
    pub fn proportionality(&self, field: &FieldSpec, other: &Codeword) -> Option<FieldElement> {
        let i = self.0.iter().position(|c| !c.is_zero())?;
        let a = field.div(other.0[i], self.0[i]).ok()?;
        if a.is_zero() {
            return None;
        }
        self.0
            .iter()
            .zip(&other.0)
            .all(|(&x, &y)| field.mul(a, x) == y)
            .then_some(a)
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.0.iter().map(|c| c.index().to_string()).collect();
        write!(f, "[{}]", items.join(","))
    }
}

pub fn weight(z: &Codeword) -> usize {
    z.weight()
}

pub fn support(z: &Codeword) -> Vec<usize> {
    z.support()
}

/// Least `s >= 1` with `x^s z = z`.
pub fn codeword_period(z: &Codeword) -> Result<usize> {
    if z.is_zero() {
        return Err(Error::Degenerate("the zero codeword has no period".into()));
    }
    let n = z.len();
    let c = z.coeffs();
    Ok((1..=n)
        .find(|&s| n.is_multiple_of(s) && (0..n).all(|i| c[i] == c[(i + s) % n]))
        .expect("s = n always works"))
}

/// `(r_z, d_z, alpha)` of a nonzero word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrbitConstants {
    /// Least `r >= 1` with `x^r z = alpha z`.
    pub r: usize,
    /// Multiplicative order of `alpha`.
    pub d: u64,
    pub alpha: FieldElement,
}

impl OrbitConstants {
    /// `n_z = r_z d_z`.
    pub fn period(&self) -> usize {
        self.r * self.d as usize
    }
}

pub fn orbit_rd(field: &FieldSpec, z: &Codeword) -> Result<OrbitConstants> {
    if z.is_zero() {
        return Err(Error::Degenerate("the zero codeword has no orbit".into()));
    }
    let mut shifted = z.clone();
    for r in 1..=z.len() {
        shifted = shifted.rotate(1);
        if let Some(alpha) = z.proportionality(field, &shifted) {
            return Ok(OrbitConstants {
                r,
                d: field.element_order(alpha)?,
                alpha,
            });
        }
    }
    unreachable!("x^n z = z for every word of length n")
}

/// `c(x) = (x^n - 1) / gcd(z(x), x^n - 1)`, the minimal polynomial of `z`.
pub fn minimal_polynomial(z: &Codeword, code: &CodeSpec) -> Result<Poly> {
    if z.is_zero() {
        return Err(Error::Degenerate(
            "the zero codeword has no minimal polynomial".into(),
        ));
    }
    let field = code.field();
    let xn = Poly::x_pow_minus_one(field, code.n());
    let g = z.to_poly(field).gcd(&xn)?;
    xn.exact_div(&g)
}
